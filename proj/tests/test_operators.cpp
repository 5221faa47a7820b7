#include "doctest.h"

#include "cychom/concrete_rings.hpp"
#include "cychom/errors.hpp"
#include "cychom/operators.hpp"
#include "cychom/universal_ring.hpp"
#include "support.hpp"

using namespace cychom;

namespace {

free_poly X(int i, int n) { return generator(family::X, i, n); }
free_poly A(int i, int n) { return generator(family::A, i, n); }

ring_element el(std::initializer_list<std::int64_t> c) { return ring_element{std::vector<std::int64_t>(c)}; }

// Z/3 with t(a) = -a declared of order 3: t is additive but neither
// multiplicative nor of order dividing 3.
ring_instance broken_negation_ring() {
    const auto z3 = build_ring(ring_spec::modular_trivial(3, 3));
    return build_ring_unchecked(testing::as_table(z3, std::vector<int>{0, 2, 1}));
}

// Oracle: sum over i != j of X_i A_j, written down from generators.
free_poly off_diagonal_sum(int n) {
    free_poly s(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) s += X(i, n) * A(j, n);
    return s;
}

} // namespace

TEST_CASE("T and N on small rings") {
    const auto z5 = build_ring(ring_spec::modular_trivial(5, 2));
    CHECK(op_T(z5, el({3})) == el({0}));
    CHECK(op_N(z5, el({3})) == el({1}));

    const auto swap = build_ring(ring_spec::cyclic_product(2, 2, 2));
    CHECK(op_T(swap, el({1, 0})) == el({1, 1}));
    CHECK(op_N(swap, el({1, 0})) == el({1, 1}));

    const universal_ring u2(2);
    CHECK(op_T(u2, A(0, 2)) == A(1, 2) - A(0, 2));
    CHECK(op_N(u2, X(0, 2)) == X(0, 2) + X(1, 2));
}

TEST_CASE("partial_sum") {
    const universal_ring u3(3);
    const auto a = u3.generic_a();
    CHECK(partial_sum(u3, 0, a).is_zero());
    CHECK(partial_sum(u3, 3, a) == op_N(u3, a));
    CHECK(partial_sum(u3, 2, a) == A(0, 3) + A(1, 3));
    CHECK_THROWS_AS(partial_sum(u3, -1, a), std::out_of_range);
    CHECK_THROWS_AS(partial_sum(u3, 4, a), std::out_of_range);
}

TEST_CASE("j_x and j'_x") {
    const auto z5 = build_ring(ring_spec::modular_trivial(5, 2));
    CHECK(op_jx(z5, el({3}), el({2})) == el({1}));

    const universal_ring u2(2);
    CHECK(op_jpx(u2, u2.generic_x(), u2.generic_a()) == X(0, 2) * A(1, 2));

    // j'_x(a) - j_x(a) = x T(a) on random concrete inputs.
    const auto r = build_ring(ring_spec::matrix_perm_conj(3, {1, 0}, 2));
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        const auto x = r.random_element(rng), a = r.random_element(rng);
        CHECK(sub(r, op_jpx(r, x, a), op_jx(r, x, a)) == r.mul(x, op_T(r, a)));
    }
}

TEST_CASE("h_x and h'_x for n = 2") {
    const universal_ring u2(2);
    const auto x = u2.generic_x(), a = u2.generic_a();
    CHECK(op_hx(u2, x, a).to_string() == "-1*X1.A0");
    CHECK(op_hpx(u2, x, a).to_string() == "1*X0.A1");

    const auto z5 = build_ring(ring_spec::modular_trivial(5, 2));
    for (std::int64_t v = 0; v < 5; ++v) {
        CHECK(op_hx(z5, el({3}), el({v})) == el({(2 * v) % 5}));
        CHECK(op_hpx(z5, el({3}), el({v})) == el({(3 * v) % 5}));
    }
}

TEST_CASE("h'_x - h_x = N(x)N(a) - N(xa) on random concrete inputs") {
    std::mt19937_64 rng(8);
    for (const auto& entry : testing::norm_one_zoo()) {
        const auto r = build_ring(entry.spec);
        for (int i = 0; i < 30; ++i) {
            const auto x = r.random_element(rng), a = r.random_element(rng);
            CHECK(sub(r, op_hpx(r, x, a), op_hx(r, x, a)) ==
                  sub(r, r.mul(op_N(r, x), op_N(r, a)), op_N(r, r.mul(x, a))));
        }
    }
}

TEST_CASE("closed forms at x = 1/n") {
    const auto z5 = build_ring(ring_spec::modular_trivial(5, 2));
    const auto u5 = *z5.inverse_of_integer(2);
    CHECK(u5 == el({3}));
    for (std::int64_t v = 0; v < 5; ++v) {
        CHECK(h_special(z5, u5, el({v})) == el({(2 * v) % 5}));
        CHECK(h_special(z5, u5, el({v})) == op_hx(z5, u5, el({v})));
    }

    const auto z7 = build_ring(ring_spec::modular_trivial(7, 3));
    const auto u7 = *z7.inverse_of_integer(3);
    CHECK(u7 == el({5}));
    for (std::int64_t v = 0; v < 7; ++v) {
        CHECK(hp_special(z7, u7, el({v})) == el({v}));
        CHECK(hp_special(z7, u7, el({v})) == op_hpx(z7, u7, el({v})));
    }

    // Nontrivial action: u = 1/2 = (2,2) is invariant in (Z/3)^2.
    const auto c = build_ring(ring_spec::cyclic_product(3, 2, 2));
    const auto uc = *c.inverse_of_integer(2);
    for (const auto& a : enumerate(c)) {
        CHECK(h_special(c, uc, a) == op_hx(c, uc, a));
        CHECK(hp_special(c, uc, a) == op_hpx(c, uc, a));
    }

    const auto z4 = build_ring(ring_spec::modular_trivial(4, 2));
    CHECK_FALSE(z4.inverse_of_integer(2).has_value());
    CHECK_THROWS_AS(h_special(z4, el({1}), el({1})), no_inverse);
    CHECK_THROWS_AS(hp_special(z4, el({3}), el({1})), no_inverse);
}

TEST_CASE("symbolic: N(x)N(a) - N(xa) is the off-diagonal double sum") {
    for (int n = 2; n <= 8; ++n) {
        CAPTURE(n);
        const universal_ring u(n);
        const auto x = u.generic_x(), a = u.generic_a();
        const auto oracle = off_diagonal_sum(n);
        CHECK(op_hpx(u, x, a) - op_hx(u, x, a) == oracle);
        CHECK(op_N(u, x) * op_N(u, a) - op_N(u, x * a) == oracle);
        CHECK(check_lemma1(u, x, a).pass);
    }
    CHECK(off_diagonal_sum(2).to_string() == "1*X0.A1 + 1*X1.A0");
}

TEST_CASE("symbolic: the two telescoping expansions") {
    for (int n = 2; n <= 8; ++n) {
        CAPTURE(n);
        const universal_ring u(n);
        const auto x = u.generic_x(), a = u.generic_a();
        free_poly nx_a(n), n_xa(n), x_na(n);
        for (int i = 0; i < n; ++i) {
            nx_a += X(i, n) * A(0, n);
            n_xa += X(i, n) * A(i, n);
            x_na += X(0, n) * A(i, n);
        }
        // h_x(T(a)) = N(x)a - N(xa) and T(h'_x(a)) = N(x)a - x N(a).
        CHECK(op_hx(u, x, op_T(u, a)) == nx_a - n_xa);
        CHECK(op_T(u, op_hpx(u, x, a)) == nx_a - x_na);
    }
}

TEST_CASE("symbolic: every identity family is the zero polynomial for n = 2..8") {
    for (int n = 2; n <= 8; ++n) {
        CAPTURE(n);
        const universal_ring u(n);
        const std::vector<free_poly> as{u.generic_a()};
        const std::span<const free_poly> s(as);
        CHECK(check_eq1(u, s).pass);
        CHECK(check_lemma1(u, u.generic_x(), u.generic_a()).pass);
        CHECK(check_corollary1(u, u.generic_x(), s).pass);
        CHECK(check_proposition(u, u.generic_x(), s).pass);
    }
}

TEST_CASE("check_eq1") {
    const universal_ring u4(4);
    const std::vector<free_poly> as{u4.generic_a()};
    CHECK(check_eq1(u4, std::span<const free_poly>(as)).pass);

    const auto z4 = build_ring(ring_spec::modular_trivial(4, 2));
    const auto all = enumerate(z4);
    const auto ok = check_eq1(z4, std::span<const ring_element>(all));
    CHECK(ok.pass);
    CHECK(ok.evaluations == 16);

    const auto broken = broken_negation_ring();
    const auto bad_elems = enumerate(broken);
    const auto res = check_eq1(broken, std::span<const ring_element>(bad_elems));
    CHECK_FALSE(res.pass);
    REQUIRE(res.failure.has_value());
    CHECK(res.failure->identity == "eq1.tN");
    CHECK(res.failure->inputs.size() == 1);
    CHECK(res.failure->lhs != res.failure->rhs);
}

TEST_CASE("check_corollary1") {
    const auto r = build_ring(ring_spec::cyclic_product(3, 3, 3));
    const auto all = enumerate(r);
    CHECK(all.size() == 27);
    for (const auto& x : all) CHECK(check_corollary1(r, x, std::span<const ring_element>(all)).pass);

    const auto broken = broken_negation_ring();
    const auto bad = enumerate(broken);
    const auto res = check_corollary1(broken, broken.one(), std::span<const ring_element>(bad));
    CHECK_FALSE(res.pass);
    CHECK(res.failure.has_value());
}

TEST_CASE("check_proposition on concrete rings") {
    const auto z5 = build_ring(ring_spec::modular_trivial(5, 2));
    const auto all5 = enumerate(z5);
    CHECK(check_proposition(z5, el({3}), std::span<const ring_element>(all5)).pass);

    const auto g5 = build_ring(ring_spec::gaussian_conj(5, 2));
    const auto all = enumerate(g5);
    CHECK(all.size() == 25);
    CHECK(op_N(g5, el({3, 0})) == g5.one());
    CHECK(check_proposition(g5, el({3, 0}), std::span<const ring_element>(all)).pass);
    // The proposition holds for every x, not only norm-one ones.
    for (const auto& x : all) CHECK(check_proposition(g5, x, std::span<const ring_element>(all)).pass);
}

TEST_CASE("the mixed equalities make the homotopy sums agree in pairs") {
    auto pair_agreement = [](const ring_instance& r) {
        const auto all = enumerate(r);
        bool together = true;
        for (const auto& x : all) {
            bool holds[4] = {true, true, true, true};
            for (const auto& a : all) {
                const auto ids = proposition_identities(r, x, a);
                for (int i = 0; i < 4; ++i)
                    if (ids[static_cast<std::size_t>(i)].lhs != ids[static_cast<std::size_t>(i)].rhs) holds[i] = false;
            }
            together = together && holds[0] == holds[2] && holds[1] == holds[3];
        }
        return together;
    };
    // On the negative control the proposition fails, but in pairs.
    const auto broken = broken_negation_ring();
    const auto all = enumerate(broken);
    CHECK_FALSE(check_proposition(broken, broken.one(), std::span<const ring_element>(all)).pass);
    CHECK(pair_agreement(broken));

    // With t^n != id the pairing itself breaks: (2) survives while (4) fails.
    const auto wrong_order =
        build_ring_unchecked(testing::as_table(build_ring(ring_spec::cyclic_product(2, 3, 3)), std::nullopt, 2));
    CHECK_FALSE(pair_agreement(wrong_order));
}

TEST_CASE("check_homotopy") {
    const auto swap = build_ring(ring_spec::cyclic_product(2, 2, 2));
    const auto all = enumerate(swap);
    CHECK(check_homotopy(swap, el({1, 0}), std::span<const ring_element>(all)).pass);

    const auto z4 = build_ring(ring_spec::modular_trivial(4, 2));
    const auto all4 = enumerate(z4);
    try {
        (void)check_homotopy(z4, el({1}), std::span<const ring_element>(all4));
        FAIL("expected precondition_violation");
    } catch (const precondition_violation& e) {
        CHECK(e.value() == "2");
    }

    for (std::int64_t m : {2, 3, 4, 5}) {
        for (int k : {2, 3, 4}) {
            const auto r = build_ring(ring_spec::cyclic_product(m, k, k));
            ring_element e0{std::vector<std::int64_t>(static_cast<std::size_t>(k), 0)};
            e0.c[0] = 1;
            CHECK(op_N(r, e0) == r.one());
            const auto elems = enumerate(r);
            CHECK(check_homotopy(r, e0, std::span<const ring_element>(elems)).pass);
        }
    }
}

TEST_CASE("specialize") {
    const auto z5 = build_ring(ring_spec::modular_trivial(5, 2));
    CHECK(specialize(X(0, 2) * A(1, 2), z5, el({3}), el({2})) == el({1}));
    CHECK(specialize(free_poly::one(2), z5, el({4}), el({4})) == z5.one());

    // The true action order must divide the polynomial's n.
    const auto c3 = build_ring(ring_spec::cyclic_product(2, 3, 3));
    CHECK_THROWS_AS(specialize(X(0, 2), c3, c3.one(), c3.one()), incompatible_action);
    CHECK_NOTHROW(specialize(X(0, 6), c3, c3.one(), c3.one()));

    std::mt19937_64 rng(9);
    for (const auto& entry : testing::norm_one_zoo()) {
        const auto r = build_ring(entry.spec);
        const int n = r.order();
        const universal_ring u(n);
        for (int i = 0; i < 5; ++i) {
            const auto x = r.random_element(rng), a = r.random_element(rng);
            CHECK(specialize(op_N(u, u.generic_x()), r, x, a) == op_N(r, x));
            const auto p = testing::random_poly(rng, n), q = testing::random_poly(rng, n);
            CHECK(specialize(p * q, r, x, a) == r.mul(specialize(p, r, x, a), specialize(q, r, x, a)));
            CHECK(specialize(p + q, r, x, a) == r.add(specialize(p, r, x, a), specialize(q, r, x, a)));
            CHECK(specialize(shift_apply(p, 1), r, x, a) == r.act(specialize(p, r, x, a)));
        }
    }
}
