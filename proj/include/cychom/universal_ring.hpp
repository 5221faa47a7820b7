#pragma once

#include "cychom/cyclic_ring.hpp"
#include "cychom/errors.hpp"
#include "cychom/free_ring.hpp"

namespace cychom {

// U_n: the free ring on X_i, A_i (i in Z/n) with the shift automorphism,
// packaged as a cyclic_ring. generic_x()/generic_a() are X_0 and A_0.
class universal_ring {
public:
    using element = free_poly;

    explicit universal_ring(int n) : n_(n) {
        if (n < 2) throw invalid_modulus(n);
    }

    int order() const noexcept { return n_; }
    element zero() const { return free_poly(n_); }
    element one() const { return free_poly::one(n_); }
    element add(const element& a, const element& b) const { return a + b; }
    element neg(const element& a) const { return -a; }
    element mul(const element& a, const element& b) const { return a * b; }
    bool eq(const element& a, const element& b) const { return a == b; }
    element act(const element& a) const { return a.shifted(1); }
    element act_power(const element& a, long long k) const { return a.shifted(k); }
    std::string format(const element& a) const { return a.to_string(); }

    element generic_x() const { return free_poly::generator(family::X, 0, n_); }
    element generic_a() const { return free_poly::generator(family::A, 0, n_); }

private:
    int n_;
};

static_assert(cyclic_ring<universal_ring>);

// The unique t-equivariant ring map R_n -> r with X_0 -> x_val, A_0 -> a_val.
// Requires t^{p.n()} = id on r; rings exposing action_order() are checked
// against their true action order, others against their declared order.
template <cyclic_ring R>
typename R::element specialize(const free_poly& p, const R& r, const typename R::element& x_val,
                               const typename R::element& a_val) {
    int true_order = r.order();
    if constexpr (requires { r.action_order(); }) true_order = r.action_order();
    if (p.n() % true_order != 0)
        throw incompatible_action("t^" + std::to_string(p.n()) + " != id in target (action order " +
                                  std::to_string(true_order) + ")");

    std::vector<typename R::element> xs, as;
    xs.reserve(p.n());
    as.reserve(p.n());
    typename R::element cx = x_val, ca = a_val;
    for (int i = 0; i < p.n(); ++i) {
        xs.push_back(cx);
        as.push_back(ca);
        cx = r.act(cx);
        ca = r.act(ca);
    }

    typename R::element out = r.zero();
    for (const auto& [w, c] : p.terms()) {
        typename R::element m = r.one();
        for (const auto& l : w.letters) m = r.mul(m, l.fam == family::X ? xs[l.index] : as[l.index]);
        out = r.add(out, times(r, c, m));
    }
    return out;
}

} // namespace cychom
