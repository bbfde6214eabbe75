#include "chibound/bounds.hpp"

#include <cmath>

#include "chibound/errors.hpp"

namespace chibound {

namespace {

// min over defined terms; empty when every term was undefined.
std::optional<double> defined_min(const std::vector<std::optional<double>>& terms) {
    std::optional<double> best;
    for (const auto& t : terms)
        if (t && (!best || *t < *best)) best = t;
    return best;
}

std::optional<double> sqrt_over_log(double scale, double n) {
    if (n <= 1.0) return std::nullopt; // log argument out of range
    return scale * std::sqrt(n / std::log(n));
}

std::optional<double> cbrt_over_log23(double scale, double m) {
    if (m <= 1.0) return std::nullopt;
    return scale * std::cbrt(m) / std::pow(std::log(m), 2.0 / 3.0);
}

} // namespace

BoundReport eval_bounds(const Graph& g, const ClassReport& report) {
    BoundReport out;
    out.n = g.vertex_count();
    out.m = g.edge_count();
    out.triangles = report.triangle_count;
    out.max_degree = g.max_degree();
    out.omega = report.omega;
    out.triangle_free = report.triangle_free();
    out.bull_diamond_free = report.bull_free() && report.diamond_free();

    double n = (double)out.n, m = (double)out.m, t = (double)out.triangles;

    BoundEntry poljak;
    poljak.applicable = out.triangle_free;
    poljak.value = defined_min({sqrt_over_log(4.0, n), cbrt_over_log23(14.0, m)});
    out.values["poljak_tuza"] = poljak;

    BoundEntry harris;
    harris.applicable = true;
    harris.value = 2.0 * std::sqrt(n) + std::cbrt(6.0 * t);
    out.values["harris"] = harris;

    BoundEntry cor;
    cor.applicable = out.bull_diamond_free;
    cor.value = defined_min({n >= 0 ? std::optional<double>(4.0 * std::sqrt(n)) : std::nullopt,
                             sqrt_over_log(8.0, n), cbrt_over_log23(28.0, m)});
    out.values["cor_nm"] = cor;

    BoundEntry molloy;
    molloy.applicable = out.bull_diamond_free;
    molloy.assertable = false; // the o(1) term is unquantified at finite n
    double delta = (double)out.max_degree;
    molloy.value = delta > 1.0 ? std::optional<double>(2.0 * delta / std::log(delta)) : std::nullopt;
    out.values["molloy_delta"] = molloy;

    return out;
}

int table_bound(TableFamily family, int param, int omega) {
    switch (family) {
        case TableFamily::pt:
            if (param < 5) throw Error("table_bound(pt): t >= 5 required");
            if (param == 5) return std::max(3, omega);
            if (param == 6) return omega == 2 ? 4 : omega;
            if (param == 7) return std::max(7, omega);
            return std::max(2 * param - 4, omega);
        case TableFamily::k1r:
            if (param < 1) throw Error("table_bound(k1r): r >= 1 required");
            return std::max({6, 2 * param, omega});
        case TableFamily::pk2:
            if (param < 1) throw Error("table_bound(pk2): p >= 1 required");
            return std::max(4 * param - 4, omega);
        case TableFamily::chair:
            return std::max(6, omega);
    }
    throw Error("table_bound: unknown family");
}

} // namespace chibound
