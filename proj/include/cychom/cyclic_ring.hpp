#pragma once

// A ring R together with an automorphism t satisfying t^n = id. Everything
// in operators.hpp is written against this concept, so the same code runs on
// the universal symbolic ring and on concrete finite rings.

#include <concepts>
#include <string>

#include "cychom/free_ring.hpp"

namespace cychom {

template <class R>
concept cyclic_ring = requires(const R& r, const typename R::element& a, const typename R::element& b) {
    typename R::element;
    { r.order() } -> std::convertible_to<int>;
    { r.zero() } -> std::convertible_to<typename R::element>;
    { r.one() } -> std::convertible_to<typename R::element>;
    { r.add(a, b) } -> std::convertible_to<typename R::element>;
    { r.neg(a) } -> std::convertible_to<typename R::element>;
    { r.mul(a, b) } -> std::convertible_to<typename R::element>;
    { r.eq(a, b) } -> std::convertible_to<bool>;
    { r.act(a) } -> std::convertible_to<typename R::element>;
    { r.format(a) } -> std::convertible_to<std::string>;
};

template <cyclic_ring R>
typename R::element sub(const R& r, const typename R::element& a, const typename R::element& b) {
    return r.add(a, r.neg(b));
}

// t^k for k reduced into [0, n). Rings may provide act_power as a shortcut.
template <cyclic_ring R>
typename R::element act_power(const R& r, const typename R::element& a, long long k) {
    const int n = r.order();
    long long s = k % n;
    if (s < 0) s += n;
    if constexpr (requires { r.act_power(a, s); }) {
        return r.act_power(a, s);
    } else {
        typename R::element out = a;
        for (long long i = 0; i < s; ++i) out = r.act(out);
        return out;
    }
}

// c * a for an integer c, by double-and-add.
template <cyclic_ring R>
typename R::element times(const R& r, const integer& c, const typename R::element& a) {
    integer k = c < 0 ? integer(-c) : c;
    typename R::element acc = r.zero();
    typename R::element base = a;
    while (k != 0) {
        if ((k & 1) != 0) acc = r.add(acc, base);
        k >>= 1;
        if (k != 0) base = r.add(base, base);
    }
    return c < 0 ? r.neg(acc) : acc;
}

// The image of the integer c under Z -> R.
template <cyclic_ring R>
typename R::element from_integer(const R& r, const integer& c) {
    return times(r, c, r.one());
}

} // namespace cychom
