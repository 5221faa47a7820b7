#include "cychom/sampling.hpp"

#include <random>

namespace cychom {

namespace {

std::string random_description(std::size_t count, std::uint64_t seed) {
    return "random(" + std::to_string(count) + ", seed=" + std::to_string(seed) + ")";
}

} // namespace

sample_set draw_samples(const ring_instance& ring, const sample_policy& policy) {
    sample_set out;
    if (ring.size() <= policy.exhaustive_limit) {
        out.elements = enumerate(ring, policy.exhaustive_limit);
        out.exhaustive = true;
        out.description = "exhaustive(" + std::to_string(ring.size()) + ")";
        return out;
    }
    std::mt19937_64 rng(policy.seed);
    out.elements.reserve(policy.random_count);
    for (std::size_t i = 0; i < policy.random_count; ++i) out.elements.push_back(ring.random_element(rng));
    out.description = random_description(policy.random_count, policy.seed);
    return out;
}

pair_sample_set draw_pairs(const ring_instance& ring, const sample_policy& policy) {
    pair_sample_set out;
    const std::uint64_t size = ring.size();
    if (size <= policy.exhaustive_limit && size * size <= policy.pair_cap) {
        const auto all = enumerate(ring, policy.exhaustive_limit);
        out.pairs.reserve(all.size() * all.size());
        for (const auto& x : all)
            for (const auto& a : all) out.pairs.emplace_back(x, a);
        out.exhaustive = true;
        out.description = "exhaustive-pairs(" + std::to_string(out.pairs.size()) + ")";
        return out;
    }
    std::mt19937_64 rng(policy.seed);
    out.pairs.reserve(policy.random_count);
    for (std::size_t i = 0; i < policy.random_count; ++i) {
        auto x = ring.random_element(rng);
        auto a = ring.random_element(rng);
        out.pairs.emplace_back(std::move(x), std::move(a));
    }
    out.description = random_description(policy.random_count, policy.seed) + " pairs";
    return out;
}

} // namespace cychom
