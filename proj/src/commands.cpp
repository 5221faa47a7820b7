#include "cychom/commands.hpp"

#include "cychom/cohomology.hpp"
#include "cychom/errors.hpp"
#include "cychom/operators.hpp"
#include "cychom/universal_ring.hpp"

#include <algorithm>
#include <span>

namespace cychom {

namespace {

void validate_checks(std::vector<std::string>& checks, const std::vector<std::string>& allowed) {
    if (checks.empty()) {
        checks = allowed;
        return;
    }
    for (const auto& c : checks)
        if (std::find(allowed.begin(), allowed.end(), c) == allowed.end())
            throw input_error("unknown check '" + c + "'");
}

std::string census_text(const quotient_summary& q) {
    std::string s;
    for (const auto& [ord, count] : q.census) {
        if (!s.empty()) s += ", ";
        s += std::to_string(ord) + ":" + std::to_string(count);
    }
    return "{" + s + "}";
}

check_result failed(std::string name, std::string identity, std::string lhs, std::string rhs) {
    return check_result{std::move(name), false, 0, witness{std::move(identity), {}, std::move(lhs), std::move(rhs)}};
}

check_result passed(std::string name) {
    return check_result{std::move(name), true, 0, std::nullopt};
}

verification_report ring_report(std::string campaign, const ring_instance& ring, const run_options& opts) {
    verification_report rep;
    rep.campaign = std::move(campaign);
    rep.context = {{"ring", ring.describe()}, {"spec", ring.spec().to_json().dump()},
                   {"seed", std::to_string(opts.seed)}};
    return rep;
}

command_outcome finish(verification_report rep) {
    const int code = rep.all_passed() ? 0 : 1;
    return {std::move(rep), code};
}

using elem_span = std::span<const ring_element>;
using pair_span = std::span<const std::pair<ring_element, ring_element>>;

// Runs one identity family either at a fixed x over the sample, or over
// sampled (x, a) pairs.
template <class Family>
void run_family(verification_report& rep, const std::string& name, const ring_instance& ring,
                const std::optional<ring_element>& x, const sample_set& samples, const pair_sample_set& pairs,
                const run_options& opts, Family family) {
    if (x) {
        std::vector<ring_element> xs{*x};
        auto res = check_family(name, ring, elem_span(xs), elem_span(samples.elements), family);
        rep.add(res, ring.describe(), samples.description,
                samples.exhaustive ? std::nullopt : std::optional<std::uint64_t>(opts.seed), {{"x", ring.format(*x)}});
    } else {
        auto res = check_family_pairs(name, ring, pair_span(pairs.pairs), family);
        rep.add(res, ring.describe(), pairs.description,
                pairs.exhaustive ? std::nullopt : std::optional<std::uint64_t>(opts.seed));
    }
}

} // namespace

sample_policy policy_from(const run_options& opts) {
    sample_policy p;
    p.seed = opts.seed;
    p.exhaustive_limit = std::min<std::uint64_t>(p.exhaustive_limit, opts.max_enumerate);
    return p;
}

command_outcome cmd_verify_universal(int n_min, int n_max, std::vector<std::string> checks, const run_options& opts) {
    if (n_min < 2 || n_min > n_max || n_max > opts.max_n)
        throw input_error("need 2 <= n-min <= n-max <= " + std::to_string(opts.max_n) + ", got " +
                          std::to_string(n_min) + ".." + std::to_string(n_max));
    validate_checks(checks, universal_checks);

    verification_report rep;
    rep.campaign = "verify-universal";
    rep.context = {{"ring", "U_n = Z<X_i, A_i | i in Z/n>, x = X0, a = A0"},
                   {"range", std::to_string(n_min) + ".." + std::to_string(n_max)}};
    for (int n = n_min; n <= n_max; ++n) {
        const universal_ring u(n);
        const auto X = u.generic_x();
        const auto A = u.generic_a();
        const std::string ring_name = "U_" + std::to_string(n);
        for (const auto& check : checks) {
            std::vector<identity_instance<free_poly>> instances;
            check_result res;
            const std::vector<free_poly> as{A};
            if (check == "eq1") {
                instances = eq1_identities(u, A);
                res = check_eq1(u, std::span<const free_poly>(as));
            } else if (check == "lemma1") {
                instances = lemma1_identities(u, X, A);
                res = check_lemma1(u, X, A);
            } else if (check == "corollary1") {
                instances = corollary1_identities(u, X, A);
                res = check_corollary1(u, X, std::span<const free_poly>(as));
            } else {
                instances = proposition_identities(u, X, A);
                res = check_proposition(u, X, std::span<const free_poly>(as));
            }
            kv_list details;
            for (const auto& inst : instances) {
                details.emplace_back(inst.name + " difference", (inst.lhs - inst.rhs).to_string());
                if (n == n_min && check == "lemma1" && inst.name == "lemma1.h") {
                    details.emplace_back("lemma1.h lhs", inst.lhs.to_string());
                    details.emplace_back("lemma1.h rhs", inst.rhs.to_string());
                }
            }
            rep.add(res, ring_name, "generic", std::nullopt, std::move(details));
        }
    }
    return finish(std::move(rep));
}

command_outcome cmd_ring_verify(const ring_spec& spec, std::vector<std::string> checks,
                                const std::optional<std::string>& x_literal, const run_options& opts) {
    validate_checks(checks, ring_checks);
    const auto ring = build_ring(spec);
    std::optional<ring_element> x;
    if (x_literal) x = ring.parse_element(*x_literal);

    auto rep = ring_report("ring-verify", ring, opts);
    const auto policy = policy_from(opts);
    const auto samples = draw_samples(ring, policy);
    const bool need_pairs = !x && std::any_of(checks.begin(), checks.end(), [](const std::string& c) {
        return c == "lemma1" || c == "corollary1" || c == "proposition";
    });
    const auto pairs = need_pairs ? draw_pairs(ring, policy) : pair_sample_set{};
    const auto seed_if_sampled = [&](bool exhaustive) {
        return exhaustive ? std::nullopt : std::optional<std::uint64_t>(opts.seed);
    };

    for (const auto& check : checks) {
        if (check == "eq1") {
            rep.add(check_eq1(ring, elem_span(samples.elements)), ring.describe(), samples.description,
                    seed_if_sampled(samples.exhaustive));
        } else if (check == "lemma1") {
            run_family(rep, "lemma1", ring, x, samples, pairs, opts,
                       [](const ring_instance& r, const auto& xx, const auto& aa) { return lemma1_identities(r, xx, aa); });
        } else if (check == "corollary1") {
            run_family(rep, "corollary1", ring, x, samples, pairs, opts, [](const ring_instance& r, const auto& xx,
                                                                            const auto& aa) {
                return corollary1_identities(r, xx, aa);
            });
        } else if (check == "proposition") {
            run_family(rep, "proposition", ring, x, samples, pairs, opts, [](const ring_instance& r, const auto& xx,
                                                                              const auto& aa) {
                return proposition_identities(r, xx, aa);
            });
        } else {
            std::optional<ring_element> hx = x ? x : find_norm_one(ring, opts.max_enumerate);
            if (!hx) {
                rep.add(failed("homotopy", "precondition", "no norm-one element in this ring", "N(x) = 1"),
                        ring.describe(), samples.description, seed_if_sampled(samples.exhaustive));
                continue;
            }
            try {
                auto res = check_homotopy(ring, *hx, elem_span(samples.elements));
                rep.add(res, ring.describe(), samples.description, seed_if_sampled(samples.exhaustive),
                        {{"x", ring.format(*hx)}, {"x source", x ? "supplied" : "find_norm_one"}});
            } catch (const precondition_violation& e) {
                rep.add(failed("homotopy", "precondition", "N(x) = " + e.value(), "1"), ring.describe(),
                        samples.description, seed_if_sampled(samples.exhaustive), {{"x", ring.format(*hx)}});
            }
        }
    }
    return finish(std::move(rep));
}

command_outcome cmd_cohomology(const ring_spec& spec, const run_options& opts) {
    const auto ring = build_ring(spec);
    auto rep = ring_report("cohomology", ring, opts);
    const auto tate = tate_quotients(ring, opts.max_enumerate);

    rep.add(passed("complex"), ring.describe(), "", std::nullopt,
            {{"im N in ker T", "yes"}, {"im T in ker N", "yes"}});
    rep.add(passed("quotient.even"), ring.describe(), "", std::nullopt,
            {{"group", "ker T / im N"}, {"order", std::to_string(tate.even.order)}, {"census", census_text(tate.even)}});
    rep.add(passed("quotient.odd"), ring.describe(), "", std::nullopt,
            {{"group", "ker N / im T"}, {"order", std::to_string(tate.odd.order)}, {"census", census_text(tate.odd)}});
    rep.add(passed("degree0"), ring.describe(), "", std::nullopt,
            {{"|ker T|", std::to_string(tate.invariants_order)},
             {"|R| / |im T|", std::to_string(tate.coinvariants_order)}});

    kv_list verdict;
    bool ok = true;
    if (tate.norm_one) {
        // Re-verify the witness before it is reported.
        const bool witness_ok = op_N(ring, *tate.norm_one) == ring.one();
        ok = witness_ok && tate.vanishing();
        verdict = {{"norm-one x", ring.format(*tate.norm_one)},
                   {"N(x)", ring.format(op_N(ring, *tate.norm_one))},
                   {"verdict", tate.vanishing() ? "both quotients vanish" : "NONVANISHING despite norm-one element"}};
    } else {
        verdict = {{"norm-one x", "none"},
                   {"verdict", tate.vanishing() ? "both quotients vanish (no norm-one element)"
                                                : "nonvanishing; no norm-one element exists"}};
    }
    rep.add(ok ? passed("vanishing") : failed("vanishing", "vanishing", "quotient orders " +
                                                                            std::to_string(tate.even.order) + "," +
                                                                            std::to_string(tate.odd.order),
                                              "1,1"),
            ring.describe(), "", std::nullopt, std::move(verdict));
    return finish(std::move(rep));
}

command_outcome cmd_preimage(const ring_spec& spec, preimage_mode mode, const std::string& a_literal,
                             const std::optional<std::string>& x_literal, const run_options& opts) {
    const auto ring = build_ring(spec);
    const auto a = ring.parse_element(a_literal);
    auto rep = ring_report("preimage", ring, opts);
    const std::string name = mode == preimage_mode::norm ? "preimage.norm" : "preimage.t";

    std::optional<ring_element> x = x_literal ? std::optional(ring.parse_element(*x_literal))
                                              : find_norm_one(ring, opts.max_enumerate);
    if (!x) {
        rep.add(failed(name, "precondition", "no norm-one element in this ring", "N(x) = 1"), ring.describe(), "",
                std::nullopt, {{"a", ring.format(a)}});
        return finish(std::move(rep));
    }

    kv_list details{{"x", ring.format(*x)}, {"a", ring.format(a)}};
    try {
        if (mode == preimage_mode::norm) {
            const auto pre = norm_preimage(ring, *x, a);
            details.emplace_back("preimage x*a", ring.format(pre));
            details.emplace_back("N(preimage)", ring.format(op_N(ring, pre)));
            rep.add(passed(name), ring.describe(), "", std::nullopt, std::move(details));
        } else {
            const auto [h, hp] = t_preimage(ring, *x, a);
            details.emplace_back("h_x(a)", ring.format(h));
            details.emplace_back("T(h_x(a))", ring.format(op_T(ring, h)));
            details.emplace_back("h'_x(a)", ring.format(hp));
            details.emplace_back("T(h'_x(a))", ring.format(op_T(ring, hp)));
            rep.add(passed(name), ring.describe(), "", std::nullopt, std::move(details));
        }
    } catch (const precondition_violation& e) {
        rep.add(failed(name, "precondition", e.value(), e.hypothesis()), ring.describe(), "", std::nullopt,
                std::move(details));
    }
    return finish(std::move(rep));
}

command_outcome cmd_special_case(const ring_spec& spec, const run_options& opts) {
    const auto ring = build_ring(spec);
    auto rep = ring_report("special-case", ring, opts);
    const auto samples = draw_samples(ring, policy_from(opts));
    const auto u = ring.inverse_of_integer(ring.order());
    if (!u) {
        rep.add(failed("special", "precondition", std::to_string(ring.order()) + " is not invertible",
                       "n*u = 1"),
                ring.describe(), samples.description, std::nullopt);
        return finish(std::move(rep));
    }
    const std::vector<ring_element> us{*u};
    auto res = check_family("special", ring, elem_span(us), elem_span(samples.elements),
                            [](const ring_instance& r, const ring_element& uu, const ring_element& a) {
                                return std::vector<identity_instance<ring_element>>{
                                    {"special.h", op_hx(r, uu, a), h_special(r, uu, a)},
                                    {"special.hp", op_hpx(r, uu, a), hp_special(r, uu, a)},
                                };
                            });
    rep.add(res, ring.describe(), samples.description,
            samples.exhaustive ? std::nullopt : std::optional<std::uint64_t>(opts.seed),
            {{"u = 1/n", ring.format(*u)}, {"N(u)", ring.format(op_N(ring, *u))}});
    return finish(std::move(rep));
}

} // namespace cychom
