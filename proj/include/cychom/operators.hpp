#pragma once

// The operators T, N, j_x, j'_x, h_x, h'_x on a cyclic ring, the closed
// forms for x = 1/n, and checkers for every identity relating them.
//
// Conventions: t^{-i} is evaluated as t^{n-i}. All operators are additive;
// j_x, j'_x, h_x, h'_x depend on the chosen x.

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cychom/cyclic_ring.hpp"
#include "cychom/errors.hpp"

namespace cychom {

template <cyclic_ring R>
using element_t = typename R::element;

template <cyclic_ring R>
element_t<R> op_T(const R& r, const element_t<R>& a) {
    return sub(r, r.act(a), a);
}

template <cyclic_ring R>
element_t<R> op_N(const R& r, const element_t<R>& a) {
    element_t<R> sum = a;
    element_t<R> cur = a;
    for (int i = 1; i < r.order(); ++i) {
        cur = r.act(cur);
        sum = r.add(sum, cur);
    }
    return sum;
}

// (id + t + ... + t^{i-1})(a), 0 <= i <= n.
template <cyclic_ring R>
element_t<R> partial_sum(const R& r, int i, const element_t<R>& a) {
    if (i < 0 || i > r.order())
        throw std::out_of_range("partial_sum index " + std::to_string(i) + " outside [0, " +
                                std::to_string(r.order()) + "]");
    element_t<R> sum = r.zero();
    element_t<R> cur = a;
    for (int j = 0; j < i; ++j) {
        sum = r.add(sum, cur);
        if (j + 1 < i) cur = r.act(cur);
    }
    return sum;
}

template <cyclic_ring R>
element_t<R> op_jx(const R& r, const element_t<R>& x, const element_t<R>& a) {
    return r.mul(x, a);
}

template <cyclic_ring R>
element_t<R> op_jpx(const R& r, const element_t<R>& x, const element_t<R>& a) {
    return r.mul(x, r.act(a));
}

// h_x(a) = -sum_{i=1}^{n-1} t^i(x) (id + ... + t^{i-1})(a)
template <cyclic_ring R>
element_t<R> op_hx(const R& r, const element_t<R>& x, const element_t<R>& a) {
    element_t<R> sum = r.zero();
    element_t<R> tx = x;
    element_t<R> partial = r.zero();
    element_t<R> ta = a;
    for (int i = 1; i < r.order(); ++i) {
        tx = r.act(tx);
        partial = r.add(partial, ta); // partial = sum_{j<i} t^j(a)
        ta = r.act(ta);
        sum = r.add(sum, r.mul(tx, partial));
    }
    return r.neg(sum);
}

// h'_x(a) = sum_{i=1}^{n-1} (id + ... + t^{i-1})(x t^{n-i}(a))
template <cyclic_ring R>
element_t<R> op_hpx(const R& r, const element_t<R>& x, const element_t<R>& a) {
    const int n = r.order();
    element_t<R> sum = r.zero();
    for (int i = 1; i < n; ++i)
        sum = r.add(sum, partial_sum(r, i, r.mul(x, act_power(r, a, n - i))));
    return sum;
}

// The closed forms take u with n*u = 1 in place of 1/n.
template <cyclic_ring R>
void require_inverse_of_order(const R& r, const element_t<R>& u) {
    const auto nu = times(r, integer(r.order()), u);
    if (!r.eq(nu, r.one()))
        throw no_inverse("supplied u does not satisfy n*u = 1 (n*u = " + r.format(nu) + ")");
}

// -(1/n) sum_{j=0}^{n-1} (n-1-j) t^j(a), with u standing for 1/n.
template <cyclic_ring R>
element_t<R> h_special(const R& r, const element_t<R>& u, const element_t<R>& a) {
    require_inverse_of_order(r, u);
    const int n = r.order();
    element_t<R> sum = r.zero();
    element_t<R> ta = a;
    for (int j = 0; j < n; ++j) {
        sum = r.add(sum, times(r, integer(n - 1 - j), ta));
        ta = r.act(ta);
    }
    return r.neg(r.mul(u, sum));
}

// (1/n) sum_{j=0}^{n-1} j t^j(a), with u standing for 1/n.
template <cyclic_ring R>
element_t<R> hp_special(const R& r, const element_t<R>& u, const element_t<R>& a) {
    require_inverse_of_order(r, u);
    const int n = r.order();
    element_t<R> sum = r.zero();
    element_t<R> ta = a;
    for (int j = 0; j < n; ++j) {
        sum = r.add(sum, times(r, integer(j), ta));
        ta = r.act(ta);
    }
    return r.mul(u, sum);
}

// ---------------------------------------------------------------------------
// Identity families. Each instance is one equation lhs == rhs evaluated at a
// fixed (x, a); the checkers below and the coherence tests consume these.

template <class E>
struct identity_instance {
    std::string name;
    E lhs;
    E rhs;
};

template <cyclic_ring R>
std::vector<identity_instance<element_t<R>>> eq1_identities(const R& r, const element_t<R>& a) {
    const auto Na = op_N(r, a);
    return {
        {"eq1.tN", r.act(Na), Na},
        {"eq1.Nt", op_N(r, r.act(a)), Na},
        {"eq1.TN", op_T(r, Na), r.zero()},
        {"eq1.NT", op_N(r, op_T(r, a)), r.zero()},
    };
}

template <cyclic_ring R>
std::vector<identity_instance<element_t<R>>> lemma1_identities(const R& r, const element_t<R>& x,
                                                               const element_t<R>& a) {
    return {
        {"lemma1.j", sub(r, op_jpx(r, x, a), op_jx(r, x, a)), r.mul(x, op_T(r, a))},
        {"lemma1.h", sub(r, op_hpx(r, x, a), op_hx(r, x, a)),
         sub(r, r.mul(op_N(r, x), op_N(r, a)), op_N(r, r.mul(x, a)))},
    };
}

template <cyclic_ring R>
std::vector<identity_instance<element_t<R>>> corollary1_identities(const R& r, const element_t<R>& x,
                                                                   const element_t<R>& a) {
    const auto Na = op_N(r, a);
    const auto Ta = op_T(r, a);
    return {
        {"corollary1.jN", op_jx(r, x, Na), op_jpx(r, x, Na)},
        {"corollary1.Th", op_T(r, op_hx(r, x, a)), op_T(r, op_hpx(r, x, a))},
        {"corollary1.mixed", r.add(op_N(r, op_jx(r, x, a)), op_hx(r, x, Ta)),
         r.add(op_N(r, op_jpx(r, x, a)), op_hpx(r, x, Ta))},
    };
}

namespace detail {

// The four right-hand sides N∘j_x + h_x∘T, j_x∘N + T∘h_x and their primed
// versions, in the order of the identities (2), (3), (4), (5).
template <cyclic_ring R>
std::vector<std::pair<std::string, element_t<R>>> homotopy_sums(const R& r, const element_t<R>& x,
                                                                const element_t<R>& a) {
    const auto Na = op_N(r, a);
    const auto Ta = op_T(r, a);
    return {
        {"eq2", r.add(op_N(r, op_jx(r, x, a)), op_hx(r, x, Ta))},
        {"eq3", r.add(op_jx(r, x, Na), op_T(r, op_hx(r, x, a)))},
        {"eq4", r.add(op_N(r, op_jpx(r, x, a)), op_hpx(r, x, Ta))},
        {"eq5", r.add(op_jpx(r, x, Na), op_T(r, op_hpx(r, x, a)))},
    };
}

} // namespace detail

// N(x) a equals each of the four composite sums.
template <cyclic_ring R>
std::vector<identity_instance<element_t<R>>> proposition_identities(const R& r, const element_t<R>& x,
                                                                    const element_t<R>& a) {
    const auto lhs = r.mul(op_N(r, x), a);
    std::vector<identity_instance<element_t<R>>> out;
    for (auto& [name, rhs] : detail::homotopy_sums(r, x, a))
        out.push_back({"proposition." + name, lhs, std::move(rhs)});
    return out;
}

// With N(x) = 1 each composite sum is the identity map.
template <cyclic_ring R>
std::vector<identity_instance<element_t<R>>> homotopy_identities(const R& r, const element_t<R>& x,
                                                                 const element_t<R>& a) {
    std::vector<identity_instance<element_t<R>>> out;
    for (auto& [name, rhs] : detail::homotopy_sums(r, x, a))
        out.push_back({"homotopy." + name, a, std::move(rhs)});
    return out;
}

// ---------------------------------------------------------------------------
// Checkers.

struct witness {
    std::string identity;
    std::vector<std::pair<std::string, std::string>> inputs;
    std::string lhs;
    std::string rhs;
};

struct check_result {
    std::string name;
    bool pass = true;
    std::size_t evaluations = 0;
    std::optional<witness> failure; // present iff !pass
};

// Evaluates family(r, x, a) for every x in xs and a in as, in that order.
// The first failing instance becomes the witness.
template <cyclic_ring R, class Family>
check_result check_family(std::string name, const R& r, std::span<const element_t<R>> xs,
                          std::span<const element_t<R>> as, Family&& family) {
    check_result res{std::move(name), true, 0, std::nullopt};
    for (const auto& x : xs) {
        for (const auto& a : as) {
            for (auto& inst : family(r, x, a)) {
                ++res.evaluations;
                if (r.eq(inst.lhs, inst.rhs)) continue;
                res.pass = false;
                res.failure = witness{inst.name,
                                      {{"x", r.format(x)}, {"a", r.format(a)}},
                                      r.format(inst.lhs),
                                      r.format(inst.rhs)};
                return res;
            }
        }
    }
    return res;
}

// Same, over an explicit list of (x, a) pairs.
template <cyclic_ring R, class Family>
check_result check_family_pairs(std::string name, const R& r,
                                std::span<const std::pair<element_t<R>, element_t<R>>> pairs, Family&& family) {
    check_result res{std::move(name), true, 0, std::nullopt};
    for (const auto& [x, a] : pairs) {
        for (auto& inst : family(r, x, a)) {
            ++res.evaluations;
            if (r.eq(inst.lhs, inst.rhs)) continue;
            res.pass = false;
            res.failure = witness{inst.name, {{"x", r.format(x)}, {"a", r.format(a)}}, r.format(inst.lhs),
                                  r.format(inst.rhs)};
            return res;
        }
    }
    return res;
}

template <cyclic_ring R>
check_result check_eq1(const R& r, std::span<const element_t<R>> samples) {
    const std::vector<element_t<R>> no_x{r.zero()};
    auto res = check_family("eq1", r, std::span<const element_t<R>>(no_x), samples,
                            [](const R& rr, const element_t<R>&, const element_t<R>& a) {
                                return eq1_identities(rr, a);
                            });
    if (res.failure) res.failure->inputs.erase(res.failure->inputs.begin());
    return res;
}

template <cyclic_ring R>
check_result check_lemma1(const R& r, const element_t<R>& x, const element_t<R>& a) {
    const std::vector<element_t<R>> xs{x}, as{a};
    return check_family("lemma1", r, std::span<const element_t<R>>(xs), std::span<const element_t<R>>(as),
                        [](const R& rr, const auto& xx, const auto& aa) { return lemma1_identities(rr, xx, aa); });
}

template <cyclic_ring R>
check_result check_corollary1(const R& r, const element_t<R>& x, std::span<const element_t<R>> samples) {
    const std::vector<element_t<R>> xs{x};
    return check_family("corollary1", r, std::span<const element_t<R>>(xs), samples,
                        [](const R& rr, const auto& xx, const auto& aa) { return corollary1_identities(rr, xx, aa); });
}

template <cyclic_ring R>
check_result check_proposition(const R& r, const element_t<R>& x, std::span<const element_t<R>> samples) {
    const std::vector<element_t<R>> xs{x};
    return check_family("proposition", r, std::span<const element_t<R>>(xs), samples,
                        [](const R& rr, const auto& xx, const auto& aa) { return proposition_identities(rr, xx, aa); });
}

// Throws precondition_violation (carrying N(x)) unless N(x) = 1.
template <cyclic_ring R>
check_result check_homotopy(const R& r, const element_t<R>& x, std::span<const element_t<R>> samples) {
    const auto Nx = op_N(r, x);
    if (!r.eq(Nx, r.one())) throw precondition_violation("N(x) = 1", r.format(Nx));
    const std::vector<element_t<R>> xs{x};
    return check_family("homotopy", r, std::span<const element_t<R>>(xs), samples,
                        [](const R& rr, const auto& xx, const auto& aa) { return homotopy_identities(rr, xx, aa); });
}

} // namespace cychom
