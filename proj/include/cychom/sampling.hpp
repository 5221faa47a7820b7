#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cychom/concrete_rings.hpp"

namespace cychom {

inline constexpr std::uint64_t default_seed = 20050301;

// Exhaustive up to exhaustive_limit elements (pairs: up to pair_cap
// evaluations), otherwise random_count draws from a fixed-seed mt19937_64.
struct sample_policy {
    std::uint64_t exhaustive_limit = 4096;
    std::uint64_t pair_cap = 1'000'000;
    std::size_t random_count = 1000;
    std::uint64_t seed = default_seed;
};

struct sample_set {
    std::vector<ring_element> elements;
    bool exhaustive = false;
    std::string description; // "exhaustive(25)" or "random(1000, seed=...)"
};

struct pair_sample_set {
    std::vector<std::pair<ring_element, ring_element>> pairs;
    bool exhaustive = false;
    std::string description;
};

sample_set draw_samples(const ring_instance& ring, const sample_policy& policy);
pair_sample_set draw_pairs(const ring_instance& ring, const sample_policy& policy);

} // namespace cychom
