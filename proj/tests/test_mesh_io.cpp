#include "mesh_fixtures.hpp"

#include <polyflow/error.hpp>
#include <polyflow/mesh_io.hpp>

#include <gtest/gtest.h>

#include <json.hpp>

#include <sstream>

using namespace polyflow;
using namespace polyflow::testing;

TEST(MeshJson, ParsesSchema) {
    const Mesh m = parse_mesh(R"({"vertices": [[0,0,0],[1,0,0],[0,1,0],[0,0,1]],
                                 "elements": [{"type": "tetrahedron", "nodes": [0,1,2,3]}],
                                 "fixed": [2]})");
    ASSERT_EQ(m.vertices.size(), 4u);
    EXPECT_EQ(m.vertices[3], Vec3(0, 0, 1));
    ASSERT_EQ(m.elements.size(), 1u);
    EXPECT_EQ(m.elements[0].kind, ElementKind::tetrahedron);
    EXPECT_EQ(m.elements[0].nodes, (std::vector<std::size_t>{0, 1, 2, 3}));
    EXPECT_EQ(m.fixed, (std::vector<std::size_t>{2}));
}

TEST(MeshJson, FixedIsOptional) {
    const Mesh m = parse_mesh(R"({"vertices": [], "elements": []})");
    EXPECT_TRUE(m.fixed.empty());
}

TEST(MeshJson, RoundTripIsExact) {
    Sampler s(81);
    Mesh m = perturbed(unit_cube_mesh(), s, 0.1);
    m.vertices[2] = Vec3(0.1, 1.0 / 3.0, 2e-300);
    m.fixed = {1, 4};
    const Mesh back = parse_mesh(mesh_to_json(m));
    EXPECT_EQ(back, m);
    EXPECT_EQ(mesh_to_json(back), mesh_to_json(m));
}

TEST(MeshJson, SyntaxErrorHasPosition) {
    try {
        parse_mesh("{\"vertices\": [[0,0,0],\n  oops]}");
        FAIL() << "expected MeshFormatError";
    } catch (const MeshFormatError& e) {
        EXPECT_EQ(e.line(), 2u);
        EXPECT_GE(e.column(), 2u);
        EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
    }
}

TEST(MeshJson, SchemaErrors) {
    EXPECT_THROW(parse_mesh("[]"), MeshFormatError);
    EXPECT_THROW(parse_mesh(R"({"vertices": [[0,0]], "elements": []})"), MeshFormatError);
    EXPECT_THROW(parse_mesh(R"({"vertices": [[0,0,0]], "elements": [{"type": "cube", "nodes": [0]}]})"), MeshFormatError);
    EXPECT_THROW(parse_mesh(R"({"vertices": [[0,0,0]], "elements": [{"type": "tetrahedron", "nodes": [0,0,0]}]})"),
                 MeshFormatError);
    EXPECT_THROW(parse_mesh(R"({"vertices": [[0,0,0]], "elements": [{"type": "tetrahedron", "nodes": [0,0,0,9]}]})"),
                 MeshFormatError);
    EXPECT_THROW(parse_mesh(R"({"vertices": [[0,0,0]], "elements": [{"type": "tetrahedron", "nodes": [0,0,0,-1]}]})"),
                 MeshFormatError);
    EXPECT_THROW(parse_mesh(R"({"vertices": [[0,0,0]], "elements": [], "fixed": [3]})"), MeshFormatError);
}

TEST(MeshJson, MissingFile) { EXPECT_THROW(read_mesh("/nonexistent/dir/mesh.json"), FileNotFoundError); }

TEST(ConfigurationJson, AcceptedForms) {
    const auto kind = ElementKind::tetrahedron;
    const Configuration expected{Vec3(0, 0, 0), Vec3(1, 0, 0), Vec3(0, 1, 0), Vec3(0, 0, 1)};
    EXPECT_EQ(parse_configuration("[[0,0,0],[1,0,0],[0,1,0],[0,0,1]]", kind), expected);
    EXPECT_EQ(parse_configuration(R"({"vertices": [[0,0,0],[1,0,0],[0,1,0],[0,0,1]]})", kind), expected);
    // Node order of the single element decides the configuration order.
    EXPECT_EQ(parse_configuration(R"({"vertices": [[0,0,1],[0,0,0],[1,0,0],[0,1,0]],
                                      "elements": [{"type": "tetrahedron", "nodes": [1,2,3,0]}]})",
                                  kind),
              expected);
    EXPECT_EQ(parse_configuration(configuration_to_json(expected), kind), expected);
}

TEST(ConfigurationJson, Errors) {
    EXPECT_THROW(parse_configuration("[[0,0,0],[1,0,0]]", ElementKind::tetrahedron), MeshFormatError);
    EXPECT_THROW(parse_configuration(R"({"vertices": [[0,0,0],[1,0,0],[0,1,0],[0,0,1],[1,1,1]],
                                         "elements": [{"type": "pyramid", "nodes": [0,1,2,3,4]}]})",
                                     ElementKind::tetrahedron),
                 MeshFormatError);
    EXPECT_THROW(parse_configuration("{\"x\": 1}", ElementKind::tetrahedron), MeshFormatError);
}

TEST(QualityOutput, JsonAndCsv) {
    const Mesh m = two_tet_mesh();
    const QualityReport r = quality_report(m);
    const auto j = nlohmann::json::parse(quality_report_to_json(m, r));
    ASSERT_EQ(j.at("elements").size(), 2u);
    EXPECT_EQ(j["elements"][1]["index"].get<int>(), 1);
    EXPECT_EQ(j["elements"][1]["type"].get<std::string>(), "tetrahedron");
    EXPECT_DOUBLE_EQ(j["elements"][1]["q"].get<double>(), r.q[1]);
    EXPECT_EQ(j["inverted_count"].get<int>(), 0);

    std::ostringstream os;
    write_quality_report_csv(os, m, r);
    std::istringstream is(os.str());
    std::string line;
    std::getline(is, line);
    EXPECT_EQ(line, "index,type,q");
    std::getline(is, line);
    EXPECT_EQ(line.rfind("0,tetrahedron,", 0), 0u);
    EXPECT_DOUBLE_EQ(std::stod(line.substr(14)), r.q[0]);
}
