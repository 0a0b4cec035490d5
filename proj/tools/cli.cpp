#include "cli.hpp"

#include <polyflow/csv.hpp>
#include <polyflow/error.hpp>
#include <polyflow/flow.hpp>
#include <polyflow/mesh.hpp>
#include <polyflow/mesh_io.hpp>
#include <polyflow/quotient.hpp>
#include <polyflow/random.hpp>
#include <polyflow/spectral.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

namespace polyflow::cli {

namespace {

using nlohmann::ordered_json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct OutputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

ElementKind kind_from(const std::string& s) {
    const auto k = parse_element_kind(s);
    if (!k) throw UsageError("unknown element type '" + s + "'");
    return *k;
}

FieldVariant variant_from(const std::string& s, ElementKind kind) {
    const auto v = parse_field_variant(s);
    if (!v) throw UsageError("unknown field '" + s + "' (expected gradient or y-variant)");
    if (!supports_variant(kind, *v)) {
        throw UsageError("field " + s + " is only defined for prism and hexahedron, not " + std::string(to_string(kind)));
    }
    return *v;
}

Normalization normalization_from(const std::string& s) {
    if (s == "psi") return Normalization::psi;
    if (s == "none") return Normalization::none;
    throw UsageError("unknown normalization '" + s + "' (expected psi or none)");
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f || !(f << text)) throw OutputError("cannot write " + path);
}

ordered_json vertices_json(const Configuration& p) {
    ordered_json a = ordered_json::array();
    for (const auto& v : p) a.push_back({v.x(), v.y(), v.z()});
    return a;
}

ordered_json class_json(const SingularityClass& c) {
    return {{"tag", std::string(to_string(c.tag))}, {"lambda", c.lambda}, {"residual", c.residual}};
}

ordered_json metrics_json(const ShapeMetrics& m) {
    return {{"edge_length_min", m.edge_length_min},
            {"edge_length_max", m.edge_length_max},
            {"edge_spread", m.edge_spread},
            {"face_planarity_max_deviation", m.face_planarity_max_deviation},
            {"corner_angle_max_deviation", m.corner_angle_max_deviation},
            {"orientation_sign", m.orientation_sign}};
}

struct RegularizeArgs {
    std::string type;
    std::string field = "gradient";
    std::string input;
    std::optional<std::uint64_t> seed;
    bool any_orientation = false;
    double step = 0.05;
    std::size_t max_iters = 100000;
    double tol = 1e-10;
    std::string normalization = "psi";
    std::string trajectory;
    std::string output;
};

int regularize(const RegularizeArgs& a, std::ostream& out, std::ostream& err) {
    const ElementKind kind = kind_from(a.type);
    const FieldVariant variant = variant_from(a.field, kind);
    FlowSettings settings;
    settings.step = a.step;
    settings.max_iters = a.max_iters;
    settings.tol = a.tol;
    settings.normalization = normalization_from(a.normalization);
    settings.record_points = false;
    if (!(a.step > 0.0) || !(a.tol > 0.0)) throw UsageError("--step and --tol must be positive");
    if (a.input.empty() == !a.seed.has_value()) throw UsageError("exactly one of --input or --random is required");

    const Configuration p0 =
        a.seed ? random_configuration(kind, variant, *a.seed, a.any_orientation ? Orientation::any : Orientation::positive)
               : read_configuration(a.input, kind);

    FlowResult r;
    try {
        r = integrate(kind, variant, p0, settings);
    } catch (const DivergenceError& e) {
        err << "error: divergence: " << e.what() << "; try a smaller --step\n";
        return kDivergence;
    }
    for (const auto& w : r.warnings) err << "warning: " << w << '\n';

    if (!a.trajectory.empty()) {
        std::ostringstream csv;
        write_trajectory_csv(csv, r.trajectory);
        write_file(a.trajectory, csv.str());
    }

    ordered_json doc;
    doc["type"] = std::string(to_string(kind));
    doc["field"] = std::string(to_string(variant));
    doc["status"] = r.status == FlowStatus::converged ? "converged" : "max_iterations";
    doc["iterations"] = r.iterations;
    doc["step_halvings"] = r.step_halvings;
    doc["classification"] = class_json(r.classification);
    doc["shape_metrics"] = metrics_json(shape_metrics(kind, r.final_point));
    doc["vertices"] = vertices_json(r.final_point);
    const std::string text = doc.dump(2) + "\n";
    if (a.output.empty()) {
        out << text;
    } else {
        write_file(a.output, text);
        out << "status " << doc["status"].get<std::string>() << ", " << r.iterations << " iterations, "
            << to_string(r.classification.tag) << '\n';
    }
    return r.status == FlowStatus::converged ? kOk : kMaxIterations;
}

struct SmoothArgs {
    std::string input;
    std::string output;
    double step = 0.05;
    std::size_t max_iters = 10000;
    double quality_tol = 1e-6;
    std::string normalization = "psi";
    std::string report;
};

int smooth_cmd(const SmoothArgs& a, std::ostream& out, std::ostream& err) {
    FlowSettings settings;
    settings.step = a.step;
    settings.normalization = normalization_from(a.normalization);
    if (!(a.step > 0.0)) throw UsageError("--step must be positive");
    const Mesh mesh = read_mesh(a.input);

    SmoothResult r;
    try {
        r = smooth(mesh, settings, a.max_iters, a.quality_tol);
    } catch (const DivergenceError& e) {
        err << "error: divergence: " << e.what() << "; try a smaller --step\n";
        return kDivergence;
    }
    for (const auto& w : r.warnings) err << "warning: " << w << '\n';

    if (!a.report.empty()) {
        std::ostringstream csv;
        csv << "iter,mesh_mean_volume,min_q,mean_q,inverted_count\n";
        for (std::size_t i = 0; i < r.history.size(); ++i) {
            const auto& q = r.history[i];
            csv << i << ',' << format_double(q.mesh_mean_volume) << ',' << format_double(q.min_q) << ','
                << format_double(q.mean_q) << ',' << q.inverted_count << '\n';
        }
        write_file(a.report, csv.str());
    }
    const std::string text = mesh_to_json(r.mesh);
    if (a.output.empty()) {
        out << text;
    } else {
        write_file(a.output, text);
        const auto& last = r.history.back();
        out << (r.converged ? "converged" : "max_iterations") << " after " << r.iterations << " iterations, min_q "
            << format_double(last.min_q) << ", mean_q " << format_double(last.mean_q) << '\n';
    }
    return r.converged ? kOk : kMaxIterations;
}

struct SpectrumArgs {
    std::string type;
    std::string field = "gradient";
    std::string at = "optimal";
    std::uint64_t seed = 1;
    std::string mode = "tangential";
    std::string output;
};

Configuration collinear_tetrahedron(std::uint64_t seed) {
    Rng rng(seed);
    Vec3 dir = Vec3::Zero();
    while (dir.norm() < 1e-3) dir = rng.uniform_vec3(-1.0, 1.0);
    dir.normalize();
    const Vec3 base = rng.uniform_vec3(-1.0, 1.0);
    Configuration p(4);
    for (std::size_t i = 0; i < 4; ++i) p[i] = base + (static_cast<double>(i) + rng.uniform(0.1, 0.9)) * dir;
    // Shuffle the labels so the ordering along the line is not the label order.
    for (std::size_t i = 3; i > 0; --i) std::swap(p[i], p[rng.next_u64() % (i + 1)]);
    return p;
}

int spectrum_cmd(const SpectrumArgs& a, std::ostream& out) {
    const ElementKind kind = kind_from(a.type);
    const FieldVariant variant = variant_from(a.field, kind);
    SpectrumOptions options;
    if (a.mode == "tangential") {
        options.mode = JacobianMode::tangential;
    } else if (a.mode == "pushed-symmetrized") {
        options.mode = JacobianMode::pushed_symmetrized;
    } else {
        throw UsageError("unknown --mode '" + a.mode + "'");
    }

    Configuration p;
    if (a.at == "optimal") {
        p = reference_shape(kind, variant);
    } else if (a.at == "mirrored") {
        p = mirrored_reference_shape(kind, variant);
    } else if (a.at == "collinear") {
        if (kind != ElementKind::tetrahedron) throw UsageError("--at collinear is defined for tetrahedra only");
        p = collinear_tetrahedron(a.seed);
    } else {
        p = read_configuration(a.at, kind);
    }

    const Spectrum s = hessian_spectrum(kind, variant, p, options);
    ordered_json doc = ordered_json::parse(spectrum_to_json(s));
    doc["type"] = std::string(to_string(kind));
    doc["field"] = std::string(to_string(variant));
    doc["at"] = a.at;
    const std::string text = doc.dump(2) + "\n";
    if (a.output.empty()) {
        out << text;
    } else {
        write_file(a.output, text);
    }
    return kOk;
}

struct ClassifyArgs {
    std::string type;
    std::string field = "gradient";
    std::string input;
    double tol = 1e-10;
};

int classify_cmd(const ClassifyArgs& a, std::ostream& out) {
    const ElementKind kind = kind_from(a.type);
    const FieldVariant variant = variant_from(a.field, kind);
    const Configuration p = read_configuration(a.input, kind);
    ordered_json doc = class_json(classify(kind, variant, p, a.tol));
    doc["type"] = std::string(to_string(kind));
    doc["field"] = std::string(to_string(variant));
    out << doc.dump(2) << '\n';
    return kOk;
}

struct QualityArgs {
    std::string input;
    std::string format = "json";
    std::string output;
};

int quality_cmd(const QualityArgs& a, std::ostream& out) {
    const Mesh m = read_mesh(a.input);
    const QualityReport r = quality_report(m);
    std::string text;
    if (a.format == "json") {
        text = quality_report_to_json(m, r) + "\n";
    } else if (a.format == "csv") {
        std::ostringstream csv;
        write_quality_report_csv(csv, m, r);
        text = csv.str();
    } else {
        throw UsageError("unknown --format '" + a.format + "' (expected json or csv)");
    }
    if (a.output.empty()) {
        out << text;
    } else {
        write_file(a.output, text);
    }
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Volume-gradient-flow regularization of polyhedral elements and meshes", "polyflow"};
    app.require_subcommand(1);

    RegularizeArgs reg;
    auto* reg_cmd = app.add_subcommand("regularize", "Flow a single element to a singularity");
    reg_cmd->add_option("--type", reg.type, "tetrahedron|pyramid|prism|hexahedron|octahedron")->required();
    reg_cmd->add_option("--field", reg.field, "gradient|y-variant")->capture_default_str();
    auto* in_opt = reg_cmd->add_option("--input", reg.input, "configuration JSON file");
    auto* rnd_opt = reg_cmd->add_option("--random", reg.seed, "seed for a random start");
    in_opt->excludes(rnd_opt);
    reg_cmd->add_flag("--any-orientation", reg.any_orientation, "accept negatively oriented random starts");
    reg_cmd->add_option("--step", reg.step)->capture_default_str();
    reg_cmd->add_option("--max-iters", reg.max_iters)->capture_default_str();
    reg_cmd->add_option("--tol", reg.tol, "singularity residual threshold")->capture_default_str();
    reg_cmd->add_option("--normalization", reg.normalization, "psi|none")->capture_default_str();
    reg_cmd->add_option("--trajectory", reg.trajectory, "write trajectory CSV");
    reg_cmd->add_option("--output", reg.output, "write the result JSON here instead of stdout");

    SmoothArgs sm;
    auto* sm_cmd = app.add_subcommand("smooth", "Smooth a mesh");
    sm_cmd->add_option("--input", sm.input, "mesh JSON file")->required();
    sm_cmd->add_option("--output", sm.output, "write the smoothed mesh here instead of stdout");
    sm_cmd->add_option("--step", sm.step)->capture_default_str();
    sm_cmd->add_option("--max-iters", sm.max_iters)->capture_default_str();
    sm_cmd->add_option("--quality-tol", sm.quality_tol)->capture_default_str();
    sm_cmd->add_option("--normalization", sm.normalization, "psi|none")->capture_default_str();
    sm_cmd->add_option("--report", sm.report, "per-iteration quality CSV");

    SpectrumArgs sp;
    auto* sp_cmd = app.add_subcommand("spectrum", "Hessian spectrum at a configuration");
    sp_cmd->add_option("--type", sp.type)->required();
    sp_cmd->add_option("--field", sp.field, "gradient|y-variant")->capture_default_str();
    sp_cmd->add_option("--at", sp.at, "optimal|mirrored|collinear|FILE")->capture_default_str();
    sp_cmd->add_option("--seed", sp.seed, "seed for --at collinear")->capture_default_str();
    sp_cmd->add_option("--mode", sp.mode, "tangential|pushed-symmetrized")->capture_default_str();
    sp_cmd->add_option("--output", sp.output);

    ClassifyArgs cl;
    auto* cl_cmd = app.add_subcommand("classify", "Classify a configuration");
    cl_cmd->add_option("--type", cl.type)->required();
    cl_cmd->add_option("--field", cl.field, "gradient|y-variant")->capture_default_str();
    cl_cmd->add_option("--input", cl.input)->required();
    cl_cmd->add_option("--tol", cl.tol)->capture_default_str();

    QualityArgs qa;
    auto* q_cmd = app.add_subcommand("quality", "Per-element quality report of a mesh");
    q_cmd->add_option("--input", qa.input)->required();
    q_cmd->add_option("--format", qa.format, "json|csv")->capture_default_str();
    q_cmd->add_option("--output", qa.output);

    std::vector<std::string> rest(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
    std::reverse(rest.begin(), rest.end());
    try {
        app.parse(rest);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kUsage;
    }

    try {
        if (reg_cmd->parsed()) return regularize(reg, out, err);
        if (sm_cmd->parsed()) return smooth_cmd(sm, out, err);
        if (sp_cmd->parsed()) return spectrum_cmd(sp, out);
        if (cl_cmd->parsed()) return classify_cmd(cl, out);
        if (q_cmd->parsed()) return quality_cmd(qa, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const InvalidVariantError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const FileNotFoundError& e) {
        err << "error: " << e.what() << '\n';
        return kNoInput;
    } catch (const MeshFormatError& e) {
        err << "error: " << e.what() << '\n';
        return kDataError;
    } catch (const OutputError& e) {
        err << "error: " << e.what() << '\n';
        return kCannotCreate;
    } catch (const DegenerateConfigurationError& e) {
        err << "error: " << e.what() << '\n';
        return kDataError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kSoftware;
    }
    return kUsage;
}

}  // namespace polyflow::cli
