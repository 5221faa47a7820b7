#include "doctest.h"

#include "cychom/cohomology.hpp"
#include "cychom/errors.hpp"
#include "support.hpp"

#include <set>

using namespace cychom;

namespace {

ring_element el(std::initializer_list<std::int64_t> c) { return ring_element{std::vector<std::int64_t>(c)}; }

std::set<ring_element> as_set(const subgroup& g) {
    REQUIRE(g.members.has_value());
    return {g.members->begin(), g.members->end()};
}

// Brute-force oracle, independent of the library's enumeration path.
struct brute {
    std::set<ring_element> ker_T, ker_N, im_T, im_N;
};

brute brute_force(const ring_instance& r) {
    brute b;
    const auto zero = r.zero();
    for (std::uint64_t i = 0; i < r.size(); ++i) {
        const auto a = r.element_at(i);
        const auto ta = r.add(r.act(a), r.neg(a));
        ring_element na = a, cur = a;
        for (int k = 1; k < r.order(); ++k) {
            cur = r.act(cur);
            na = r.add(na, cur);
        }
        if (ta == zero) b.ker_T.insert(a);
        if (na == zero) b.ker_N.insert(a);
        b.im_T.insert(ta);
        b.im_N.insert(na);
    }
    return b;
}

std::vector<ring_spec> cohomology_specs() {
    std::vector<ring_spec> specs;
    for (const auto& e : testing::norm_one_zoo()) specs.push_back(e.spec);
    for (const auto& e : testing::matrix_zoo()) specs.push_back(e.spec);
    for (std::int64_t m : {2, 4, 6, 8, 9})
        for (int n : {2, 3, 4}) specs.push_back(ring_spec::modular_trivial(m, n));
    specs.push_back(ring_spec::gaussian_conj(2, 2));
    specs.push_back(ring_spec::gaussian_conj(4, 2));
    specs.push_back(ring_spec::gaussian_conj(6, 4));
    specs.push_back(ring_spec::cyclic_product(4, 2, 4));
    specs.push_back(ring_spec::cyclic_product(3, 3, 6));
    specs.push_back(ring_spec::matrix_perm_conj(2, {0, 1}, 2));
    return specs;
}

} // namespace

TEST_CASE("kernels and images on Z/4 with trivial Z/2-action") {
    const auto z4 = build_ring(ring_spec::modular_trivial(4, 2));
    CHECK(kernel(z4, additive_op::T).order == 4);
    CHECK(as_set(kernel(z4, additive_op::N)) == std::set<ring_element>{el({0}), el({2})});
    CHECK(as_set(image(z4, additive_op::N)) == std::set<ring_element>{el({0}), el({2})});
    CHECK(as_set(image(z4, additive_op::T)) == std::set<ring_element>{el({0})});
}

TEST_CASE("kernels and images on (Z/2)^2 with swap") {
    const auto swap = build_ring(ring_spec::cyclic_product(2, 2, 2));
    CHECK(as_set(kernel(swap, additive_op::T)) == std::set<ring_element>{el({0, 0}), el({1, 1})});
    CHECK(as_set(image(swap, additive_op::N)) == std::set<ring_element>{el({0, 0}), el({1, 1})});
}

TEST_CASE("property: linear and enumeration strategies agree with brute force") {
    for (const auto& spec : cohomology_specs()) {
        const auto r = build_ring(spec);
        CAPTURE(r.describe());
        const auto b = brute_force(r);
        for (auto how : {strategy::linear, strategy::enumeration}) {
            CHECK(as_set(kernel(r, additive_op::T, default_enumerate_cap, how)) == b.ker_T);
            CHECK(as_set(kernel(r, additive_op::N, default_enumerate_cap, how)) == b.ker_N);
            CHECK(as_set(image(r, additive_op::T, default_enumerate_cap, how)) == b.im_T);
            CHECK(as_set(image(r, additive_op::N, default_enumerate_cap, how)) == b.im_N);
            CHECK(kernel(r, additive_op::N, default_enumerate_cap, how).order == b.ker_N.size());
            CHECK(image(r, additive_op::T, default_enumerate_cap, how).order == b.im_T.size());
        }
        // Subgroup sanity: closure, negation, Lagrange.
        const auto k = kernel(r, additive_op::N);
        const auto members = as_set(k);
        CHECK(r.size() % k.order == 0);
        for (const auto& a : members) {
            CHECK(members.contains(r.neg(a)));
            CHECK(k.contains(r, a));
        }
        if (members.size() <= 64)
            for (const auto& a : members)
                for (const auto& c : members) CHECK(members.contains(r.add(a, c)));
    }
}

TEST_CASE("table rings use enumeration and match the linear presentation") {
    const auto lin = build_ring(ring_spec::gaussian_conj(3, 2));
    const auto tab = build_ring(testing::as_table(lin));
    CHECK(kernel(tab, additive_op::T).method == "enumeration");
    CHECK(kernel(lin, additive_op::T).method == "linear");
    CHECK_THROWS_AS(kernel(tab, additive_op::T, default_enumerate_cap, strategy::linear), input_error);
    const auto a = tate_quotients(lin), b = tate_quotients(tab);
    CHECK(a.even.order == b.even.order);
    CHECK(a.odd.order == b.odd.order);
    CHECK(a.even.census == b.even.census);
}

TEST_CASE("tate_quotients: the three reference rings") {
    const auto z4 = tate_quotients(build_ring(ring_spec::modular_trivial(4, 2)));
    CHECK(z4.even.order == 2);
    CHECK(z4.odd.order == 2);
    CHECK(z4.even.census == std::map<std::uint64_t, std::uint64_t>{{1, 1}, {2, 1}});
    CHECK_FALSE(z4.norm_one.has_value());
    CHECK_FALSE(z4.vanishing());
    CHECK(z4.invariants_order == 4);
    CHECK(z4.coinvariants_order == 4);

    const auto swap = tate_quotients(build_ring(ring_spec::cyclic_product(2, 2, 2)));
    CHECK(swap.even.order == 1);
    CHECK(swap.odd.order == 1);
    CHECK(swap.norm_one == el({1, 0}));

    const auto z5 = tate_quotients(build_ring(ring_spec::modular_trivial(5, 2)));
    CHECK(z5.vanishing());
    CHECK(z5.norm_one == el({3}));
}

TEST_CASE("property: quotient orders match brute force; vanishing with a norm-one element") {
    for (const auto& spec : cohomology_specs()) {
        const auto r = build_ring(spec);
        CAPTURE(r.describe());
        const auto b = brute_force(r);
        const auto rep = tate_quotients(r);
        CHECK(rep.even.order == b.ker_T.size() / b.im_N.size());
        CHECK(rep.odd.order == b.ker_N.size() / b.im_T.size());
        for (const auto* q : {&rep.even, &rep.odd}) {
            std::uint64_t total = 0;
            for (const auto& [ord, count] : q->census) {
                CHECK(q->order % ord == 0);
                total += count;
            }
            CHECK(total == q->order);
        }
        if (rep.norm_one) {
            CHECK(rep.vanishing());
        }
        // Trivial actions: both quotients are Z/m[n] ~ Z/gcd(m, n).
        if (spec.kind == ring_kind::modular_trivial) {
            const auto g = static_cast<std::uint64_t>(std::gcd(spec.m, static_cast<std::int64_t>(spec.n)));
            CHECK(rep.even.order == g);
            CHECK(rep.odd.order == g);
        }
    }
}

TEST_CASE("tate_quotients flags a broken action") {
    const auto c3 = build_ring(ring_spec::cyclic_product(2, 3, 3));
    const auto broken = build_ring_unchecked(testing::as_table(c3, std::nullopt, 2));
    CHECK_THROWS_AS(tate_quotients(broken), consistency_error);
}

TEST_CASE("tate_quotients on rings beyond the enumeration cap") {
    // (Z/5)^8 shift: 390625 elements, above the default cap; the quotients
    // vanish, so no enumeration is needed.
    const auto big = build_ring(ring_spec::cyclic_product(5, 8, 8));
    const auto rep = tate_quotients(big);
    CHECK(rep.vanishing());
    CHECK(rep.norm_one.has_value());

    // M_5(Z/2) with the identity permutation: the quotients have order 2^25,
    // so the census would need enumeration past the cap.
    const auto z2big = build_ring(ring_spec::matrix_perm_conj(2, {0, 1, 2, 3, 4}, 2));
    CHECK_THROWS_AS(tate_quotients(z2big), too_large);
}

TEST_CASE("norm_preimage") {
    const auto swap = build_ring(ring_spec::cyclic_product(2, 2, 2));
    CHECK(norm_preimage(swap, el({1, 0}), el({1, 1})) == el({1, 0}));

    const auto z5 = build_ring(ring_spec::modular_trivial(5, 2));
    CHECK(norm_preimage(z5, el({3}), el({2})) == el({1}));
    CHECK(op_N(z5, el({1})) == el({2}));

    try {
        (void)norm_preimage(swap, el({1, 0}), el({1, 0}));
        FAIL("expected precondition_violation");
    } catch (const precondition_violation& e) {
        CHECK(e.hypothesis() == "T(a) = 0 (a invariant)");
    }
    CHECK_THROWS_AS(norm_preimage(swap, el({1, 1}), el({1, 1})), precondition_violation);
}

TEST_CASE("t_preimage") {
    const auto swap = build_ring(ring_spec::cyclic_product(2, 2, 2));
    const auto [h, hp] = t_preimage(swap, el({1, 0}), el({1, 1}));
    CHECK(h == el({0, 1}));
    CHECK(hp == el({1, 0}));
    CHECK_THROWS_AS(t_preimage(swap, el({1, 0}), el({1, 0})), precondition_violation);

    // Both components are preimages, and they can differ.
    const auto r = build_ring(ring_spec::cyclic_product(3, 3, 3));
    const auto x = *find_norm_one(r);
    int differing = 0;
    for (const auto& a : enumerate(r)) {
        if (op_N(r, a) != r.zero()) continue;
        const auto [ha, hpa] = t_preimage(r, x, a);
        CHECK(op_T(r, ha) == a);
        CHECK(op_T(r, hpa) == a);
        if (ha != hpa) ++differing;
    }
    CHECK(differing > 0);
}
