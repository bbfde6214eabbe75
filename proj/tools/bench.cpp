// Compares the OpenMP kernels against their serial references: triangle
// counting on dense random graphs and the classification batch over a
// sampler corpus.

#include <chrono>
#include <cstdio>
#include <vector>

#include "chibound/gen.hpp"
#include "chibound/graph.hpp"
#include "chibound/parallel.hpp"
#include "chibound/recognition.hpp"

using namespace chibound;

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

Graph er(int n, double p, uint64_t seed) {
    SplitMix64 rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.next_unit() < p) edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

void bench_triangles() {
    std::printf("triangle counting (serial vs OpenMP, %d threads)\n", parallel_threads());
    std::printf("%8s %8s %12s %12s %12s %8s\n", "n", "p", "triangles", "serial ms", "parallel ms", "speedup");
    for (auto [n, p] : std::vector<std::pair<int, double>>{{1000, 0.05}, {2000, 0.05}, {3000, 0.02}, {4000, 0.01}}) {
        Graph g = er(n, p, 42 + n);
        auto t0 = Clock::now();
        long long serial = count_triangles_serial(g);
        double serial_ms = ms_since(t0);
        auto t1 = Clock::now();
        long long parallel = count_triangles(g);
        double parallel_ms = ms_since(t1);
        if (serial != parallel) {
            std::printf("MISMATCH: serial %lld vs parallel %lld\n", serial, parallel);
            std::exit(1);
        }
        std::printf("%8d %8.2f %12lld %12.2f %12.2f %8.2f\n", n, p, serial, serial_ms, parallel_ms,
                    serial_ms / parallel_ms);
    }
}

void bench_classify_batch() {
    const int count = 120;
    std::vector<Graph> batch;
    for (int i = 0; i < count; ++i) {
        SamplerSpec spec;
        spec.n = 18 + (i % 8);
        spec.p = 0.35;
        spec.family = {Pattern::bull, Pattern::diamond};
        spec.seed = mix_seed(9000, i);
        batch.push_back(sample(spec));
    }
    std::vector<long long> out(count);
    auto t0 = Clock::now();
    for (int i = 0; i < count; ++i) out[i] = classify(batch[i], 7).triangle_count;
    double serial_ms = ms_since(t0);
    std::vector<long long> out2(count);
    auto t1 = Clock::now();
    parallel_for_index(count, [&](size_t i) { out2[i] = classify(batch[i], 7).triangle_count; });
    double parallel_ms = ms_since(t1);
    if (out != out2) {
        std::printf("MISMATCH in classification batch\n");
        std::exit(1);
    }
    std::printf("\nclassify batch of %d graphs: serial %.2f ms, parallel %.2f ms, speedup %.2f\n",
                count, serial_ms, parallel_ms, serial_ms / parallel_ms);
}

} // namespace

int main() {
    bench_triangles();
    bench_classify_batch();
    return 0;
}
