#pragma once

// The two-periodic complex  ... -> R -T-> R -N-> R -T-> R -> ...  over a
// finite ring: kernels and images of T and N as subgroups of (R, +), the
// quotients ker T / im N and ker N / im T, and the explicit preimages that a
// norm-one element provides.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cychom/concrete_rings.hpp"
#include "cychom/operators.hpp"

namespace cychom {

enum class additive_op { T, N };

std::string_view to_string(additive_op op);
ring_element apply_op(const ring_instance& ring, additive_op op, const ring_element& a);

enum class strategy { automatic, linear, enumeration };

struct subgroup {
    std::vector<ring_element> generators;
    std::optional<std::vector<ring_element>> members; // sorted by ring index, when small enough
    std::uint64_t order = 0;
    std::string method; // "linear" or "enumeration"

    bool contains(const ring_instance& ring, const ring_element& e) const;
};

subgroup kernel(const ring_instance& ring, additive_op op, std::uint64_t cap = default_enumerate_cap,
                strategy how = strategy::automatic);
subgroup image(const ring_instance& ring, additive_op op, std::uint64_t cap = default_enumerate_cap,
               strategy how = strategy::automatic);

// All elements of the subgroup generated by gens; too_large past cap.
std::vector<ring_element> span(const ring_instance& ring, const std::vector<ring_element>& gens, std::uint64_t cap);

struct quotient_summary {
    std::uint64_t order = 0;
    // element order in the quotient -> number of cosets of that order
    std::map<std::uint64_t, std::uint64_t> census;
};

struct tate_report {
    quotient_summary even; // ker T / im N
    quotient_summary odd;  // ker N / im T
    std::optional<ring_element> norm_one;
    // Degree-0 data, informational only.
    std::uint64_t invariants_order = 0;   // |ker T| = |R^t|
    std::uint64_t coinvariants_order = 0; // |R| / |im T|

    bool vanishing() const { return even.order == 1 && odd.order == 1; }
};

// Throws consistency_error when im N is not inside ker T or im T is not
// inside ker N.
tate_report tate_quotients(const ring_instance& ring, std::uint64_t cap = default_enumerate_cap);

// x a, with N(x a) = a, for N(x) = 1 and T(a) = 0.
template <cyclic_ring R>
element_t<R> norm_preimage(const R& r, const element_t<R>& x, const element_t<R>& a) {
    const auto Nx = op_N(r, x);
    if (!r.eq(Nx, r.one())) throw precondition_violation("N(x) = 1", "N(x)=" + r.format(Nx));
    const auto Ta = op_T(r, a);
    if (!r.eq(Ta, r.zero())) throw precondition_violation("T(a) = 0 (a invariant)", "T(a)=" + r.format(Ta));
    auto pre = r.mul(x, a);
    if (!r.eq(op_N(r, pre), a)) throw consistency_error("N(xa) != a for " + r.format(a));
    return pre;
}

// (h_x(a), h'_x(a)), each mapped to a by T, for N(x) = 1 and N(a) = 0.
template <cyclic_ring R>
std::pair<element_t<R>, element_t<R>> t_preimage(const R& r, const element_t<R>& x, const element_t<R>& a) {
    const auto Nx = op_N(r, x);
    if (!r.eq(Nx, r.one())) throw precondition_violation("N(x) = 1", "N(x)=" + r.format(Nx));
    const auto Na = op_N(r, a);
    if (!r.eq(Na, r.zero())) throw precondition_violation("N(a) = 0", "N(a)=" + r.format(Na));
    auto h = op_hx(r, x, a);
    auto hp = op_hpx(r, x, a);
    if (!r.eq(op_T(r, h), a) || !r.eq(op_T(r, hp), a))
        throw consistency_error("T(h_x(a)) or T(h'_x(a)) differs from " + r.format(a));
    return {std::move(h), std::move(hp)};
}

} // namespace cychom
