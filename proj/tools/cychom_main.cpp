#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "cychom/commands.hpp"
#include "cychom/errors.hpp"

namespace {

constexpr int exit_usage = 2;

} // namespace

int main(int argc, char** argv) {
    using namespace cychom;

    CLI::App app{"Homotopy operators for cyclic group actions on rings: symbolic proofs and finite-ring checks"};
    app.require_subcommand(1);
    app.fallthrough();

    run_options opts;
    std::string format = "text";
    app.add_option("--seed", opts.seed, "Seed for the sampling generator")->capture_default_str();
    app.add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
    app.add_option("--max-enumerate", opts.max_enumerate, "Largest ring/subgroup enumerated explicitly")
        ->capture_default_str();

    auto* universal = app.add_subcommand("verify-universal", "Prove the operator identities in the free ring U_n");
    int n_min = 2, n_max = 8;
    std::vector<std::string> checks;
    universal->add_option("--n-min", n_min)->capture_default_str();
    universal->add_option("--n-max", n_max)->capture_default_str();
    universal->add_option("--max-n", opts.max_n, "Upper bound accepted for --n-max")->capture_default_str();
    universal->add_option("--checks", checks, "Subset of eq1,lemma1,corollary1,proposition")->delimiter(',');

    std::string spec_path;
    std::optional<std::string> x_literal;

    auto* ring_verify = app.add_subcommand("ring-verify", "Check the identities on a concrete finite ring");
    ring_verify->add_option("spec", spec_path, "Ring spec file (JSON)")->required();
    ring_verify->add_option("--checks", checks, "Subset of eq1,lemma1,corollary1,proposition,homotopy")
        ->delimiter(',');
    ring_verify->add_option("--x", x_literal, "Element x in the ring's literal grammar");

    auto* cohomology = app.add_subcommand("cohomology", "Quotients ker T/im N and ker N/im T of a finite ring");
    cohomology->add_option("spec", spec_path, "Ring spec file (JSON)")->required();

    auto* preimage = app.add_subcommand("preimage", "Explicit preimages under N or T");
    std::string mode = "norm";
    std::string a_literal;
    preimage->add_option("spec", spec_path, "Ring spec file (JSON)")->required();
    preimage->add_option("--mode", mode)->check(CLI::IsMember({"norm", "t"}))->capture_default_str();
    preimage->add_option("--a", a_literal, "Element a in the ring's literal grammar")->required();
    preimage->add_option("--x", x_literal, "Norm-one element x (found automatically when omitted)");

    auto* special = app.add_subcommand("special-case", "Closed forms of h_x, h'_x at x = 1/n");
    special->add_option("spec", spec_path, "Ring spec file (JSON)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : exit_usage;
    }

    try {
        command_outcome out;
        if (universal->parsed()) {
            out = cmd_verify_universal(n_min, n_max, checks, opts);
        } else {
            const auto spec = ring_spec::load(spec_path);
            if (ring_verify->parsed())
                out = cmd_ring_verify(spec, checks, x_literal, opts);
            else if (cohomology->parsed())
                out = cmd_cohomology(spec, opts);
            else if (preimage->parsed())
                out = cmd_preimage(spec, mode == "norm" ? preimage_mode::norm : preimage_mode::t, a_literal,
                                   x_literal, opts);
            else
                out = cmd_special_case(spec, opts);
        }
        std::cout << out.report.render(format);
        return out.exit_code;
    } catch (const input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const math_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
