#include "polyflow/elements.hpp"
#include "polyflow/flow.hpp"
#include "polyflow/mesh.hpp"
#include "polyflow/random.hpp"
#include "polyflow/spectral.hpp"

#include <benchmark/benchmark.h>

#include <cmath>

using namespace polyflow;

namespace {

constexpr ElementKind kKinds[] = {ElementKind::tetrahedron, ElementKind::pyramid, ElementKind::prism,
                                  ElementKind::hexahedron, ElementKind::octahedron};

// n x n x n block of hexahedra, interior nodes jittered, boundary fixed.
Mesh hex_block(int n) {
    const Configuration ref = reference_shape(ElementKind::hexahedron);
    const Vec3 lo = [&] {
        Vec3 m = ref[0];
        for (std::size_t i = 0; i < ref.size(); ++i) m = m.cwiseMin(ref[i]);
        return m;
    }();
    const double edge = (ref[1] - ref[0]).norm();
    const int side = n + 1;
    auto id = [side](int i, int j, int k) { return static_cast<std::size_t>((k * side + j) * side + i); };

    Mesh m;
    Rng rng(7);
    for (int k = 0; k < side; ++k)
        for (int j = 0; j < side; ++j)
            for (int i = 0; i < side; ++i) {
                Vec3 v(i, j, k);
                const bool boundary = i == 0 || j == 0 || k == 0 || i == n || j == n || k == n;
                if (boundary)
                    m.fixed.push_back(id(i, j, k));
                else
                    v += rng.uniform_vec3(-0.2, 0.2);
                m.vertices.push_back(v);
            }
    for (int k = 0; k < n; ++k)
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < n; ++i) {
                MeshElement e{ElementKind::hexahedron, {}};
                for (std::size_t c = 0; c < ref.size(); ++c) {
                    const Vec3 o = (ref[c] - lo) / edge;
                    e.nodes.push_back(id(i + static_cast<int>(std::lround(o.x())), j + static_cast<int>(std::lround(o.y())),
                                         k + static_cast<int>(std::lround(o.z()))));
                }
                m.elements.push_back(std::move(e));
            }
    return m;
}

void BM_Field(benchmark::State& state) {
    const ElementKind kind = kKinds[state.range(0)];
    const Configuration p = random_configuration(kind, FieldVariant::mean_volume_gradient, 1);
    for (auto _ : state) benchmark::DoNotOptimize(field(kind, FieldVariant::mean_volume_gradient, p));
    state.SetLabel(std::string(to_string(kind)));
}
BENCHMARK(BM_Field)->DenseRange(0, 4);

void BM_Integrate(benchmark::State& state) {
    const ElementKind kind = kKinds[state.range(0)];
    const Configuration p = random_configuration(kind, FieldVariant::mean_volume_gradient, 3);
    FlowSettings s;
    s.record_points = false;
    for (auto _ : state) benchmark::DoNotOptimize(integrate(kind, FieldVariant::mean_volume_gradient, p, s));
    state.SetLabel(std::string(to_string(kind)));
}
BENCHMARK(BM_Integrate)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

void BM_HessianSpectrum(benchmark::State& state) {
    const ElementKind kind = kKinds[state.range(0)];
    const Configuration p = reference_shape(kind);
    for (auto _ : state) benchmark::DoNotOptimize(hessian_spectrum(kind, FieldVariant::mean_volume_gradient, p));
    state.SetLabel(std::string(to_string(kind)));
}
BENCHMARK(BM_HessianSpectrum)->DenseRange(0, 4)->Unit(benchmark::kMicrosecond);

void BM_SmoothStep(benchmark::State& state) {
    const Mesh m = hex_block(static_cast<int>(state.range(0)));
    FlowSettings s;
    for (auto _ : state) benchmark::DoNotOptimize(smooth_step(m, s));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(m.elements.size()));
}
BENCHMARK(BM_SmoothStep)->Arg(4)->Arg(8)->Arg(16)->Unit(benchmark::kMicrosecond);

void BM_QualityReport(benchmark::State& state) {
    const Mesh m = hex_block(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(quality_report(m));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(m.elements.size()));
}
BENCHMARK(BM_QualityReport)->Arg(8)->Arg(16)->Unit(benchmark::kMicrosecond);

}  // namespace
BENCHMARK_MAIN();
