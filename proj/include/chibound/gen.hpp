#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "chibound/graph.hpp"
#include "chibound/recognition.hpp"

namespace chibound {

// splitmix64: the pinned generator behind every sampler, so independent
// implementations agree bit for bit. Update rule:
//   state += 0x9E3779B97F4A7C15
//   z = state; z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//   z = (z ^ (z >> 27)) * 0x94D049BB133111EB;  return z ^ (z >> 31)
struct SplitMix64 {
    uint64_t state;
    explicit SplitMix64(uint64_t seed) : state(seed) {}
    uint64_t next();
    /// Uniform in [0, 1): top 53 bits scaled by 2^-53.
    double next_unit();
    /// Uniform in [0, bound) by rejection-free modulo of next(); bound > 0.
    uint64_t next_below(uint64_t bound);
};

/// Mixes a seed with stream/index tags; used to derive independent substreams.
uint64_t mix_seed(uint64_t seed, uint64_t tag);

struct SamplerSpec {
    int n = 0;
    double p = 0.0;
    std::vector<Pattern> family; // forbidden patterns
    uint64_t seed = 0;
    int max_attempts = 64;
    bool connect = false;
};

/// Erdos-Renyi draw, then repair to the hereditary class: while some family
/// pattern occurs, delete the lexicographically smallest edge of the
/// earliest-found witness (patterns scanned in declaration order). The
/// accepted graph is re-verified against the whole family. Deterministic
/// for a fixed SamplerSpec. Throws when max_attempts draws fail the connectivity
/// requirement.
Graph sample(const SamplerSpec& spec);

// Hand-built fixtures exercising specific pipeline branches, each shipped with
// a known layering case / palette in the tests.
enum class PlantKind {
    lemma31_two_part,    // K_3 plus adjacent pendants at v_1 and v_2
    lemma31_single_part, // K_4 plus one pendant at v_1
    lemma31_prism,       // prism(4) rooted at one side
    extension_branch,    // clique component whose attachment has a private neighbor
    p6_case1,            // omega = 3, W_2 empty, reaches N_3 with a K_2 component
    p6_case2,            // omega = 3, both W parts nonempty, an N_2 vertex of degree 2
    p7_layers,           // reaches N_4, P_7-free but not P_6-free
};

Graph planted_instance(PlantKind kind);
std::string plant_name(PlantKind kind);

} // namespace chibound
