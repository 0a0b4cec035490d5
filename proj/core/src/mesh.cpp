#include "polyflow/mesh.hpp"

#include "polyflow/error.hpp"
#include "polyflow/parallel.hpp"
#include "polyflow/quotient.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace polyflow {

void validate(const Mesh& m) {
    for (std::size_t e = 0; e < m.elements.size(); ++e) {
        const auto& el = m.elements[e];
        if (el.nodes.size() != vertex_count(el.kind)) {
            throw SizeMismatchError("element " + std::to_string(e) + " (" + std::string(to_string(el.kind)) + ") has " +
                                    std::to_string(el.nodes.size()) + " nodes, expected " +
                                    std::to_string(vertex_count(el.kind)));
        }
        for (std::size_t v : el.nodes) {
            if (v >= m.vertices.size()) {
                throw InvalidIndexError("element " + std::to_string(e) + " references vertex " + std::to_string(v) +
                                        " of " + std::to_string(m.vertices.size()));
            }
        }
    }
    for (std::size_t v : m.fixed) {
        if (v >= m.vertices.size()) throw InvalidIndexError("fixed vertex " + std::to_string(v) + " out of range");
    }
}

Configuration element_configuration(const Mesh& m, std::size_t element) {
    const auto& el = m.elements.at(element);
    Configuration p(el.nodes.size());
    for (std::size_t i = 0; i < el.nodes.size(); ++i) p[i] = m.vertices.at(el.nodes[i]);
    return p;
}

double mesh_mean_volume(const Mesh& m) {
    validate(m);
    double total = 0.0;
    for (std::size_t e = 0; e < m.elements.size(); ++e) {
        total += mean_volume(m.elements[e].kind, element_configuration(m, e));
    }
    return total;
}

namespace {

double mean_volume_with(const Mesh& m, const Configuration& nodes) {
    Mesh copy = m;
    copy.vertices = nodes.vector();
    return mesh_mean_volume(copy);
}

}  // namespace

double mesh_mean_volume_on_sphere(const Mesh& m) {
    return mean_volume_with(m, pi(Configuration(m.vertices)));
}

double mesh_mean_volume_centered(const Mesh& m) {
    return mean_volume_with(m, centered_unit(Configuration(m.vertices)));
}

double q_max(ElementKind kind) {
    static const std::array<double, 5> values = [] {
        std::array<double, 5> v{};
        for (ElementKind k : kAllElementKinds) v[static_cast<std::size_t>(k)] = mean_volume(k, centered_unit(reference_shape(k)));
        return v;
    }();
    return values[static_cast<std::size_t>(kind)];
}

QualityReport quality_report(const Mesh& m) {
    validate(m);
    QualityReport r;
    r.q.reserve(m.elements.size());
    for (std::size_t e = 0; e < m.elements.size(); ++e) {
        const ElementKind kind = m.elements[e].kind;
        const Configuration p = element_configuration(m, e);
        r.mesh_mean_volume += mean_volume(kind, p);
        double q = 0.0;
        try {
            q = mean_volume(kind, centered_unit(p)) / q_max(kind);
        } catch (const DegenerateConfigurationError&) {
            q = 0.0;
        }
        r.q.push_back(q);
    }
    if (!r.q.empty()) {
        r.min_q = *std::min_element(r.q.begin(), r.q.end());
        r.max_q = *std::max_element(r.q.begin(), r.q.end());
        double sum = 0.0;
        for (double q : r.q) sum += q;
        r.mean_q = sum / static_cast<double>(r.q.size());
        r.inverted_count = static_cast<std::size_t>(std::count_if(r.q.begin(), r.q.end(), [](double q) { return q <= 0.0; }));
    }
    return r;
}

Mesh smooth_step(const Mesh& m, const FlowSettings& settings) {
    validate(m);
    std::vector<TangentVectors> shifts(m.elements.size());
    parallel_for(m.elements.size(), [&](std::size_t e) {
        const TangentVectors x =
            field(m.elements[e].kind, FieldVariant::mean_volume_gradient, element_configuration(m, e));
        shifts[e] = settings.normalization == Normalization::psi ? psi(x) : x;
    });

    std::vector<Vec3> accumulated(m.vertices.size(), Vec3::Zero());
    std::vector<std::size_t> count(m.vertices.size(), 0);
    for (std::size_t e = 0; e < m.elements.size(); ++e) {
        const auto& nodes = m.elements[e].nodes;
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            accumulated[nodes[i]] += shifts[e][i];
            ++count[nodes[i]];
        }
    }

    std::vector<bool> is_fixed(m.vertices.size(), false);
    for (std::size_t v : m.fixed) is_fixed[v] = true;

    Mesh out = m;
    for (std::size_t v = 0; v < m.vertices.size(); ++v) {
        if (is_fixed[v] || count[v] == 0) continue;
        out.vertices[v] = m.vertices[v] + settings.step * (accumulated[v] / static_cast<double>(count[v]));
    }
    return out;
}

SmoothResult smooth(const Mesh& m, const FlowSettings& settings, std::size_t max_iters, double quality_tol) {
    validate(m);
    SmoothResult result;
    result.mesh = m;
    result.history.push_back(quality_report(m));

    std::vector<bool> is_fixed(m.vertices.size(), false);
    for (std::size_t v : m.fixed) is_fixed[v] = true;
    if (std::all_of(is_fixed.begin(), is_fixed.end(), [](bool b) { return b; })) {
        result.warnings.push_back("all vertices are fixed; the mesh is returned unchanged");
        result.converged = true;
        return result;
    }

    for (std::size_t it = 1; it <= max_iters; ++it) {
        Mesh next = smooth_step(result.mesh, settings);
        for (const auto& v : next.vertices) {
            if (!v.allFinite()) throw DivergenceError("non-finite vertex position", it);
        }
        result.mesh = std::move(next);
        result.history.push_back(quality_report(result.mesh));
        result.iterations = it;
        if (it >= kQualityWindow) {
            const double gain = result.history[it].min_q - result.history[it - kQualityWindow].min_q;
            if (gain < quality_tol) {
                result.converged = true;
                break;
            }
        }
    }
    return result;
}

}  // namespace polyflow
