#include "support.hpp"

#include <polyflow/error.hpp>
#include <polyflow/geometry.hpp>
#include <polyflow/quotient.hpp>

#include <gtest/gtest.h>

using namespace polyflow;
using polyflow::testing::fd_gradient;
using polyflow::testing::relative_error;
using polyflow::testing::Sampler;

namespace {

struct KindVariant {
    ElementKind kind;
    FieldVariant variant;
};

std::vector<KindVariant> all_fields() {
    std::vector<KindVariant> out;
    for (ElementKind k : kAllElementKinds) {
        out.push_back({k, FieldVariant::mean_volume_gradient});
        if (supports_variant(k, FieldVariant::y_variant)) out.push_back({k, FieldVariant::y_variant});
    }
    return out;
}

Configuration random_for(ElementKind k, Sampler& s) { return s.configuration(vertex_count(k)); }

}  // namespace

TEST(ElementKinds, VertexCountsAndNames) {
    EXPECT_EQ(vertex_count(ElementKind::tetrahedron), 4u);
    EXPECT_EQ(vertex_count(ElementKind::pyramid), 5u);
    EXPECT_EQ(vertex_count(ElementKind::prism), 6u);
    EXPECT_EQ(vertex_count(ElementKind::hexahedron), 8u);
    EXPECT_EQ(vertex_count(ElementKind::octahedron), 6u);
    for (ElementKind k : kAllElementKinds) EXPECT_EQ(parse_element_kind(to_string(k)), k);
    EXPECT_FALSE(parse_element_kind("cube").has_value());
    EXPECT_EQ(parse_field_variant("y-variant"), FieldVariant::y_variant);
    EXPECT_EQ(parse_field_variant("gradient"), FieldVariant::mean_volume_gradient);
}

TEST(ElementKinds, VariantSupport) {
    EXPECT_TRUE(supports_variant(ElementKind::prism, FieldVariant::y_variant));
    EXPECT_TRUE(supports_variant(ElementKind::hexahedron, FieldVariant::y_variant));
    EXPECT_FALSE(supports_variant(ElementKind::tetrahedron, FieldVariant::y_variant));
    EXPECT_FALSE(supports_variant(ElementKind::octahedron, FieldVariant::y_variant));
    EXPECT_THROW(field(ElementKind::pyramid, FieldVariant::y_variant, Configuration(5)), InvalidVariantError);
    EXPECT_THROW(field(ElementKind::pyramid, FieldVariant::mean_volume_gradient, Configuration(4)), SizeMismatchError);
    EXPECT_THROW(mean_volume(ElementKind::hexahedron, Configuration(6)), SizeMismatchError);
}

TEST(ElementKinds, EdgeCounts) {
    EXPECT_EQ(edges(ElementKind::tetrahedron).size(), 6u);
    EXPECT_EQ(edges(ElementKind::pyramid).size(), 8u);
    EXPECT_EQ(edges(ElementKind::prism).size(), 9u);
    EXPECT_EQ(edges(ElementKind::hexahedron).size(), 12u);
    EXPECT_EQ(edges(ElementKind::octahedron).size(), 12u);
}

TEST(TetField, UnitCornerSimplex) {
    const Configuration p{Vec3(0, 0, 0), Vec3(1, 0, 0), Vec3(0, 1, 0), Vec3(0, 0, 1)};
    const TangentVectors x = field(ElementKind::tetrahedron, FieldVariant::mean_volume_gradient, p);
    // Oracle: 6 x gradient of the determinant volume, by hand:
    // d/dp4 of det(p2-p1, p3-p1, p4-p1) = (p2-p1) x (p3-p1) = (0,0,1).
    EXPECT_EQ(x[3], Vec3(0, 0, 1));
    EXPECT_EQ(x[0], Vec3(-1, -1, -1));
    EXPECT_EQ(x[1], Vec3(1, 0, 0));
    EXPECT_EQ(x[2], Vec3(0, 1, 0));
}

TEST(TetField, MatchesDeterminantGradient) {
    Sampler s(31);
    for (int t = 0; t < 200; ++t) {
        const Configuration p = s.configuration(4);
        const auto vol6 = [](const Configuration& q) { return 6.0 * polyflow::testing::det_volume(q[0], q[1], q[2], q[3]); };
        EXPECT_LT(relative_error(field(ElementKind::tetrahedron, FieldVariant::mean_volume_gradient, p), fd_gradient(vol6, p)),
                  1e-8);
    }
}

TEST(MeanVolume, UnitCube) {
    EXPECT_NEAR(mean_volume(ElementKind::hexahedron, reference_shape(ElementKind::hexahedron)), 1.0, 1e-15);
}

TEST(MeanVolume, UnitSquarePyramid) {
    const Configuration p{Vec3(0, 0, 0), Vec3(1, 0, 0), Vec3(1, 1, 0), Vec3(0, 1, 0), Vec3(0.5, 0.5, 1)};
    EXPECT_NEAR(mean_volume(ElementKind::pyramid, p), 1.0 / 3.0, 1e-15);
    for (const auto& t : triangulations(ElementKind::pyramid)) {
        double v = 0.0;
        for (const auto& tet : t) v += tet_signed_volume(p[tet[0] - 1], p[tet[1] - 1], p[tet[2] - 1], p[tet[3] - 1]);
        EXPECT_NEAR(v, 1.0 / 3.0, 1e-15);
    }
}

TEST(MeanVolume, PyramidTriangulationsCanDisagreeInSign) {
    // Skew base: diagonal 1-3 at z = 0, diagonal 2-4 at z = 1, apex in between.
    const Configuration p{Vec3(-1, -1, 0), Vec3(1, -1, 1), Vec3(1, 1, 0), Vec3(-1, 1, 1), Vec3(0, 0, 0.5)};
    std::vector<double> v;
    for (const auto& t : triangulations(ElementKind::pyramid)) {
        double sum = 0.0;
        for (const auto& tet : t) sum += polyflow::testing::det_volume(p[tet[0] - 1], p[tet[1] - 1], p[tet[2] - 1], p[tet[3] - 1]);
        v.push_back(sum);
    }
    ASSERT_EQ(v.size(), 2u);
    EXPECT_LT(v[0] * v[1], 0.0);
    EXPECT_NEAR(std::abs(v[0]), 2.0 / 3.0, 1e-15);
    EXPECT_NEAR(mean_volume(ElementKind::pyramid, p), 0.5 * (v[0] + v[1]), 1e-15);
}

TEST(MeanVolume, EqualsSurfaceVolumeOnAffineImagesOfReferenceShapes) {
    Sampler s(32);
    for (ElementKind k : kAllElementKinds) {
        const std::vector<std::vector<int>> loops(faces(k).begin(), faces(k).end());
        for (int t = 0; t < 50; ++t) {
            Eigen::Matrix3d a = Eigen::Matrix3d::Identity() + 0.4 * Eigen::Matrix3d::Random();
            const Configuration p = polyflow::testing::affine(reference_shape(k), a, s.vec3(-2, 2));
            const double oracle = polyflow::testing::surface_volume(p, loops);
            EXPECT_NEAR(mean_volume(k, p), oracle, 1e-12 * std::max(1.0, std::abs(oracle))) << to_string(k);
            EXPECT_NEAR(oracle, a.determinant() * polyflow::testing::surface_volume(reference_shape(k), loops), 1e-12);
        }
    }
}

TEST(MeanVolume, ReferenceShapesArePositivelyOrientedAndMirrorsNegative) {
    for (const auto& [k, v] : all_fields()) {
        EXPECT_GT(mean_volume(k, reference_shape(k, v)), 0.0);
        EXPECT_NEAR(mean_volume(k, mirrored_reference_shape(k, v)), -mean_volume(k, reference_shape(k, v)), 1e-14);
    }
}

TEST(FieldProperty, GradientOfSixTimesMeanVolume) {
    Sampler s(33);
    for (ElementKind k : kAllElementKinds) {
        for (int t = 0; t < 100; ++t) {
            const Configuration p = random_for(k, s);
            const auto vol6 = [k](const Configuration& q) { return 6.0 * mean_volume(k, q); };
            EXPECT_LT(relative_error(field(k, FieldVariant::mean_volume_gradient, p), fd_gradient(vol6, p)), 1e-6)
                << to_string(k);
        }
    }
}

TEST(FieldProperty, ClosedFormsEqualTriangulationAverage) {
    Sampler s(34);
    for (ElementKind k : kAllElementKinds) {
        for (int t = 0; t < 200; ++t) {
            const Configuration p = random_for(k, s);
            EXPECT_LE(max_abs_difference(field(k, FieldVariant::mean_volume_gradient, p), field_from_triangulations(k, p)),
                      1e-12)
                << to_string(k);
        }
    }
}

TEST(FieldProperty, CentroidPreservingZeroSum) {
    Sampler s(35);
    for (const auto& [k, v] : all_fields()) {
        if (k == ElementKind::prism && v == FieldVariant::y_variant) continue;
        for (int t = 0; t < 200; ++t) {
            EXPECT_LE(field(k, v, random_for(k, s)).sum().norm(), 1e-12) << to_string(k) << ' ' << to_string(v);
        }
    }
}

TEST(FieldProperty, PrismYFieldDoesNotSumToZero) {
    // The prism Y-field is not a gradient of a translation-invariant function,
    // so nothing forces its components to cancel.
    Sampler s(44);
    EXPECT_GT(field(ElementKind::prism, FieldVariant::y_variant, s.configuration(6)).sum().norm(), 1e-3);
}

TEST(FieldProperty, TranslationInvarianceAndQuadraticHomogeneity) {
    Sampler s(36);
    for (const auto& [k, v] : all_fields()) {
        for (int t = 0; t < 200; ++t) {
            const Configuration p = random_for(k, s);
            const TangentVectors x = field(k, v, p);
            EXPECT_LE(max_abs_difference(field(k, v, p.translated(s.vec3(-3, 3))), x), 1e-12 * std::max(1.0, x.norm()) * 20);
            const double l = s.uniform(0.2, 4.0);
            EXPECT_LE(max_abs_difference(field(k, v, l * p), (l * l) * x), 1e-12 * std::max(1.0, x.norm()) * 20);
        }
    }
}

TEST(FieldProperty, EulerIdentity) {
    Sampler s(37);
    for (ElementKind k : kAllElementKinds) {
        for (int t = 0; t < 200; ++t) {
            const Configuration p = random_for(k, s);
            EXPECT_NEAR(f_value(k, FieldVariant::mean_volume_gradient, p), 18.0 * mean_volume(k, p), 1e-12);
        }
    }
}

TEST(FieldProperty, LiftedFunctionGradientIsThreeTimesField) {
    Sampler s(38);
    for (const auto& [k, v] : all_fields()) {
        if (!is_gradient_field(k, v)) continue;
        for (int t = 0; t < 100; ++t) {
            const Configuration p = random_for(k, s);
            const auto f = [k = k, v = v](const Configuration& q) { return f_value(k, v, q); };
            EXPECT_LT(relative_error(fd_gradient(f, p), 3.0 * field(k, v, p)), 1e-5) << to_string(k) << ' ' << to_string(v);
        }
    }
}

TEST(FieldProperty, PrismYFieldIsNotAGradient) {
    Sampler s(39);
    const auto f = [](const Configuration& q) { return f_value(ElementKind::prism, FieldVariant::y_variant, q); };
    double worst = 0.0;
    for (int t = 0; t < 20; ++t) {
        const Configuration p = s.configuration(6);
        worst = std::max(worst, relative_error(fd_gradient(f, p), 3.0 * field(ElementKind::prism, FieldVariant::y_variant, p)));
    }
    EXPECT_GT(worst, 1e-2);
}

TEST(FieldProperty, HexahedronYFieldDiffersByOppositeTriangles) {
    Sampler s(40);
    const Configuration p = s.configuration(8);
    const TangentVectors d = field(ElementKind::hexahedron, FieldVariant::y_variant, p) -
                             field(ElementKind::hexahedron, FieldVariant::mean_volume_gradient, p);
    // Oracle: for each corner, the opposite corner's three face-diagonal
    // neighbours, oriented so that the triangle normal points away from it.
    const std::array<std::array<int, 3>, 8> tri = {{{3, 6, 8}, {4, 7, 5}, {1, 8, 6}, {2, 5, 7},
                                                    {2, 7, 4}, {3, 8, 1}, {4, 5, 2}, {1, 6, 3}}};
    for (std::size_t i = 0; i < 8; ++i) {
        const Vec3& a = p[static_cast<std::size_t>(tri[i][0] - 1)];
        const Vec3& b = p[static_cast<std::size_t>(tri[i][1] - 1)];
        const Vec3& c = p[static_cast<std::size_t>(tri[i][2] - 1)];
        EXPECT_LE((d[i] - 0.5 * (b - a).cross(c - a)).norm(), 1e-13);
    }
}

TEST(Field, HexahedronYPositiveAtUnitCube) {
    EXPECT_GT(f_value(ElementKind::hexahedron, FieldVariant::y_variant, reference_shape(ElementKind::hexahedron)), 0.0);
}

TEST(Field, CollinearConfigurationsHaveZeroF) {
    Sampler s(41);
    const Vec3 d = s.vec3().normalized();
    for (ElementKind k : kAllElementKinds) {
        Configuration p(vertex_count(k));
        for (auto& v : p) v = Vec3(0.2, 0.1, -0.3) + s.uniform() * d;
        EXPECT_NEAR(f_value(k, FieldVariant::mean_volume_gradient, p), 0.0, 1e-15);
    }
}

TEST(QuotientField, PsiPushForwardIsClassFunction) {
    Sampler s(42);
    for (const auto& [k, v] : all_fields()) {
        for (int t = 0; t < 50; ++t) {
            const Configuration p = random_for(k, s);
            const Configuration q = (s.uniform(0.1, 10.0) * p).translated(s.vec3(-4, 4));
            const TangentVectors a = push_tangent(p, psi(field(k, v, p)));
            const TangentVectors b = push_tangent(q, psi(field(k, v, q)));
            EXPECT_LE(max_abs_difference(a, b), 1e-11) << to_string(k);
        }
    }
}

TEST(NormalizedF, ClassInvariant) {
    Sampler s(43);
    for (const auto& [k, v] : all_fields()) {
        const Configuration p = random_for(k, s);
        const Configuration q = (3.7 * p).translated(s.vec3(-4, 4));
        EXPECT_NEAR(normalized_f_value(k, v, p), normalized_f_value(k, v, q), 1e-13);
    }
}
