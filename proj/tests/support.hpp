#pragma once

// Shared generators for the test suites.

#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "cychom/concrete_rings.hpp"
#include "cychom/free_ring.hpp"

namespace cychom::testing {

// Random polynomial with up to max_terms words of length <= max_len and
// coefficients in [-3, 3].
inline free_poly random_poly(std::mt19937_64& rng, int n, int max_terms = 4, int max_len = 3) {
    free_poly p(n);
    const int terms = static_cast<int>(rng() % static_cast<unsigned>(max_terms + 1));
    for (int t = 0; t < terms; ++t) {
        const int len = static_cast<int>(rng() % static_cast<unsigned>(max_len + 1));
        free_poly m = free_poly::one(n);
        for (int i = 0; i < len; ++i) {
            const family fam = rng() % 2 ? family::X : family::A;
            m = m * free_poly::generator(fam, static_cast<long long>(rng() % static_cast<unsigned>(n)), n);
        }
        const long long c = static_cast<long long>(rng() % 7) - 3;
        p += m * integer(c);
    }
    return p;
}

struct zoo_entry {
    std::string name;
    ring_spec spec;
};

// Rings with a norm-one element that the acceptance criteria sweep, plus a
// few matrix rings.
inline std::vector<zoo_entry> norm_one_zoo() {
    std::vector<zoo_entry> zoo;
    for (std::int64_t m : {2, 3, 4, 5})
        for (int k : {2, 3, 4})
            zoo.push_back({"(Z/" + std::to_string(m) + ")^" + std::to_string(k) + " shift",
                           ring_spec::cyclic_product(m, k, k)});
    for (std::int64_t m : {3, 5, 7})
        zoo.push_back({"Z[i]/" + std::to_string(m) + " conj", ring_spec::gaussian_conj(m, 2)});
    for (std::int64_t m : {2, 3, 5, 7, 11})
        for (int n : {2, 3, 4})
            if (std::gcd(m, static_cast<std::int64_t>(n)) == 1)
                zoo.push_back({"Z/" + std::to_string(m) + " trivial n=" + std::to_string(n),
                               ring_spec::modular_trivial(m, n)});
    return zoo;
}

inline std::vector<zoo_entry> matrix_zoo() {
    return {
        {"M_2(Z/2) swap", ring_spec::matrix_perm_conj(2, {1, 0}, 2)},
        {"M_2(Z/3) swap", ring_spec::matrix_perm_conj(3, {1, 0}, 2)},
        {"M_3(Z/2) 3-cycle", ring_spec::matrix_perm_conj(2, {1, 2, 0}, 3)},
        {"M_2(Z/4) swap, n=4", ring_spec::matrix_perm_conj(4, {1, 0}, 4)},
    };
}

} // namespace cychom::testing

namespace cychom::testing {

// The same ring presented as a table ring, optionally with a replacement
// automorphism (as a permutation of element indices) and declared order.
inline ring_spec as_table(const ring_instance& r, std::optional<std::vector<int>> t = std::nullopt,
                          std::optional<int> n = std::nullopt) {
    ring_table tb;
    const auto all = enumerate(r);
    for (const auto& a : all) tb.elements.push_back(r.format(a));
    for (const auto& a : all) {
        std::vector<int> add_row, mul_row;
        for (const auto& b : all) {
            add_row.push_back(static_cast<int>(r.index_of(r.add(a, b))));
            mul_row.push_back(static_cast<int>(r.index_of(r.mul(a, b))));
        }
        tb.add.push_back(std::move(add_row));
        tb.mul.push_back(std::move(mul_row));
        tb.t.push_back(static_cast<int>(r.index_of(r.act(a))));
    }
    if (t) tb.t = *t;
    return ring_spec::from_table(std::move(tb), n.value_or(r.order()));
}

} // namespace cychom::testing
