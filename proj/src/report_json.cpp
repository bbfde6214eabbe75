#include "chibound/report_json.hpp"

#include <cstdio>

namespace chibound {

namespace {

std::string fixed6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

} // namespace

ojson to_json(const ClassReport& r) {
    ojson j;
    j["n"] = r.n;
    j["m"] = r.m;
    j["bull_free"] = r.bull_free();
    j["diamond_free"] = r.diamond_free();
    j["paw_free"] = r.paw_free();
    j["triangle_count"] = r.triangle_count;
    j["omega"] = r.omega;
    j["path_probe"] = r.path_probe;
    j["longest_induced_path"] = r.longest_induced_path;
    if (r.p_free_from)
        j["p_free_from"] = *r.p_free_from;
    else
        j["p_free_from"] = nullptr;
    ojson witnesses = ojson::object();
    if (r.bull.found) witnesses["bull"] = r.bull.witness;
    if (r.diamond.found) witnesses["diamond"] = r.diamond.witness;
    if (r.paw.found) witnesses["paw"] = r.paw.witness;
    j["witnesses"] = witnesses;
    return j;
}

ojson to_json(const CliqueLayering& l) {
    ojson j;
    j["clique"] = l.clique;
    ojson parts = ojson::array();
    for (const auto& w : l.wpart) parts.push_back(w.to_vector());
    j["w_parts"] = parts;
    ojson sizes = ojson::array();
    for (const auto& layer : l.layers) sizes.push_back(layer.count());
    j["layer_sizes"] = sizes;
    j["case"] = layer_case_name(l.kind);
    if (l.kind == LayerCase::two_part) {
        j["i"] = l.part_i;
        j["j"] = l.part_j;
    } else if (l.kind == LayerCase::single_part) {
        j["i"] = l.part_i;
    }
    return j;
}

ojson to_json(const Coloring& c) {
    ojson j;
    j["palette"] = c.palette;
    j["certificate"] = c.certificate;
    ojson assign = ojson::object();
    for (size_t v = 0; v < c.assignment.size(); ++v) assign[std::to_string(v)] = c.assignment[v];
    j["assignment"] = assign;
    return j;
}

ojson to_json(const Coloring& c, const BoundCertificate& cert) {
    ojson j;
    j["palette"] = c.palette;
    ojson cj;
    cj["theorem"] = cert.theorem;
    cj["claimed_bound"] = cert.claimed_bound;
    cj["omega"] = cert.omega;
    if (cert.k_used)
        cj["k_used"] = *cert.k_used;
    else
        cj["k_used"] = nullptr;
    j["certificate"] = cj;
    ojson assign = ojson::object();
    for (size_t v = 0; v < c.assignment.size(); ++v) assign[std::to_string(v)] = c.assignment[v];
    j["assignment"] = assign;
    return j;
}

ojson to_json(const ColoringViolations& v) {
    ojson j;
    j["proper"] = v.ok();
    ojson mono = ojson::array();
    for (auto [a, b] : v.monochromatic_edges) mono.push_back(ojson::array({a, b}));
    j["monochromatic_edges"] = mono;
    j["uncolored"] = v.uncolored;
    return j;
}

ojson to_json(const BoundReport& r) {
    ojson j;
    ojson inputs;
    inputs["n"] = r.n;
    inputs["m"] = r.m;
    inputs["triangles"] = r.triangles;
    inputs["max_degree"] = r.max_degree;
    inputs["omega"] = r.omega;
    inputs["triangle_free"] = r.triangle_free;
    inputs["bull_diamond_free"] = r.bull_diamond_free;
    j["inputs"] = inputs;
    ojson values = ojson::object();
    ojson applicable = ojson::object();
    for (const auto& [name, entry] : r.values) {
        values[name] = entry.value ? ojson(fixed6(*entry.value)) : ojson("undefined");
        applicable[name] = entry.applicable;
        if (!entry.assertable) applicable[name] = ojson("asymptotic_only");
    }
    j["values"] = values;
    j["applicable"] = applicable;
    return j;
}

std::string content_digest(const std::string& bytes) {
    uint64_t h = 0xCBF29CE484222325ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001B3ull;
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%016llx", (unsigned long long)h);
    return buf;
}

} // namespace chibound
