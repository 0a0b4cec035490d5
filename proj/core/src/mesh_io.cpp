#include "polyflow/mesh_io.hpp"

#include "polyflow/csv.hpp"
#include "polyflow/error.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace polyflow {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

void position_of(std::string_view text, std::size_t byte, std::size_t& line, std::size_t& column) {
    line = 1;
    column = 1;
    const std::size_t end = std::min(byte, text.size());
    for (std::size_t i = 0; i < end; ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
}

json parse_document(std::string_view text) {
    try {
        return json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        std::size_t line = 0;
        std::size_t column = 0;
        // nlohmann reports the 1-based byte count read when the error was detected.
        position_of(text, e.byte > 0 ? e.byte - 1 : 0, line, column);
        throw MeshFormatError("malformed JSON: " + std::string(e.what()), line, column);
    }
}

Vec3 parse_point(const json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 3) throw MeshFormatError(where + " must be an array of 3 numbers");
    Vec3 v;
    for (std::size_t k = 0; k < 3; ++k) {
        if (!j[k].is_number()) throw MeshFormatError(where + " must be an array of 3 numbers");
        v[static_cast<Eigen::Index>(k)] = j[k].get<double>();
    }
    if (!v.allFinite()) throw MeshFormatError(where + " is not finite");
    return v;
}

std::vector<Vec3> parse_vertices(const json& j) {
    if (!j.is_array()) throw MeshFormatError("\"vertices\" must be an array");
    std::vector<Vec3> out;
    out.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(parse_point(j[i], "vertex " + std::to_string(i)));
    return out;
}

std::vector<std::size_t> parse_indices(const json& j, const std::string& where) {
    if (!j.is_array()) throw MeshFormatError(where + " must be an array of indices");
    std::vector<std::size_t> out;
    out.reserve(j.size());
    for (const auto& v : j) {
        if (!v.is_number_unsigned()) throw MeshFormatError(where + " must contain non-negative integers");
        out.push_back(v.get<std::size_t>());
    }
    return out;
}

Mesh mesh_from_json(const json& doc) {
    if (!doc.is_object()) throw MeshFormatError("mesh document must be a JSON object");
    if (!doc.contains("vertices")) throw MeshFormatError("missing \"vertices\"");
    if (!doc.contains("elements")) throw MeshFormatError("missing \"elements\"");
    Mesh m;
    m.vertices = parse_vertices(doc.at("vertices"));
    const json& els = doc.at("elements");
    if (!els.is_array()) throw MeshFormatError("\"elements\" must be an array");
    for (std::size_t e = 0; e < els.size(); ++e) {
        const json& el = els[e];
        const std::string where = "element " + std::to_string(e);
        if (!el.is_object() || !el.contains("type") || !el.contains("nodes")) {
            throw MeshFormatError(where + " needs \"type\" and \"nodes\"");
        }
        if (!el.at("type").is_string()) throw MeshFormatError(where + " type must be a string");
        const auto kind = parse_element_kind(el.at("type").get<std::string>());
        if (!kind) throw MeshFormatError(where + " has unknown type \"" + el.at("type").get<std::string>() + "\"");
        m.elements.push_back({*kind, parse_indices(el.at("nodes"), where + " nodes")});
    }
    if (doc.contains("fixed")) m.fixed = parse_indices(doc.at("fixed"), "\"fixed\"");
    try {
        validate(m);
    } catch (const Error& e) {
        throw MeshFormatError(e.what());
    }
    return m;
}

ordered_json point_json(const Vec3& v) { return ordered_json::array({v.x(), v.y(), v.z()}); }

}  // namespace

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FileNotFoundError("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Mesh parse_mesh(std::string_view text) { return mesh_from_json(parse_document(text)); }

Mesh read_mesh(const std::filesystem::path& path) { return parse_mesh(read_text_file(path)); }

std::string mesh_to_json(const Mesh& m, int indent) {
    ordered_json doc;
    doc["vertices"] = ordered_json::array();
    for (const auto& v : m.vertices) doc["vertices"].push_back(point_json(v));
    doc["elements"] = ordered_json::array();
    for (const auto& el : m.elements) {
        doc["elements"].push_back({{"type", std::string(to_string(el.kind))}, {"nodes", el.nodes}});
    }
    doc["fixed"] = m.fixed;
    return doc.dump(indent) + "\n";
}

void write_mesh(const std::filesystem::path& path, const Mesh& m) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw FileNotFoundError("cannot write " + path.string());
    out << mesh_to_json(m);
}

Configuration parse_configuration(std::string_view text, ElementKind kind) {
    const json doc = parse_document(text);
    std::vector<Vec3> points;
    if (doc.is_array()) {
        points = parse_vertices(doc);
    } else if (doc.is_object() && doc.contains("elements")) {
        const Mesh m = mesh_from_json(doc);
        if (m.elements.size() != 1) throw MeshFormatError("configuration file must contain exactly one element");
        if (m.elements[0].kind != kind) {
            throw MeshFormatError("element type is " + std::string(to_string(m.elements[0].kind)) + ", expected " +
                                  std::string(to_string(kind)));
        }
        for (std::size_t v : m.elements[0].nodes) points.push_back(m.vertices[v]);
    } else if (doc.is_object() && doc.contains("vertices")) {
        points = parse_vertices(doc.at("vertices"));
    } else {
        throw MeshFormatError("expected a vertex array or an object with \"vertices\"");
    }
    if (points.size() != vertex_count(kind)) {
        throw MeshFormatError(std::string(to_string(kind)) + " needs " + std::to_string(vertex_count(kind)) +
                              " vertices, got " + std::to_string(points.size()));
    }
    return Configuration(std::move(points));
}

Configuration read_configuration(const std::filesystem::path& path, ElementKind kind) {
    return parse_configuration(read_text_file(path), kind);
}

std::string configuration_to_json(const Configuration& p, int indent) {
    ordered_json doc;
    doc["vertices"] = ordered_json::array();
    for (const auto& v : p) doc["vertices"].push_back(point_json(v));
    return doc.dump(indent);
}

std::string quality_report_to_json(const Mesh& m, const QualityReport& r, int indent) {
    ordered_json doc;
    doc["elements"] = ordered_json::array();
    for (std::size_t e = 0; e < r.q.size(); ++e) {
        doc["elements"].push_back({{"index", e}, {"type", std::string(to_string(m.elements[e].kind))}, {"q", r.q[e]}});
    }
    doc["mesh_mean_volume"] = r.mesh_mean_volume;
    doc["min_q"] = r.min_q;
    doc["mean_q"] = r.mean_q;
    doc["max_q"] = r.max_q;
    doc["inverted_count"] = r.inverted_count;
    return doc.dump(indent);
}

void write_quality_report_csv(std::ostream& os, const Mesh& m, const QualityReport& r) {
    os << "index,type,q\n";
    for (std::size_t e = 0; e < r.q.size(); ++e) {
        os << e << ',' << to_string(m.elements[e].kind) << ',' << format_double(r.q[e]) << '\n';
    }
}

}  // namespace polyflow
