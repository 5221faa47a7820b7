#pragma once

// The CLI subcommands as library functions. Input problems (bad ranges,
// unparsable specs or literals) throw input_error; mathematical failures
// are recorded in the returned report and reflected in exit_code.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "cychom/concrete_rings.hpp"
#include "cychom/report.hpp"
#include "cychom/sampling.hpp"

namespace cychom {

struct run_options {
    std::uint64_t seed = default_seed;
    std::uint64_t max_enumerate = default_enumerate_cap;
    int max_n = 8; // bound for verify-universal
};

struct command_outcome {
    verification_report report;
    int exit_code = 0; // 0 all checks pass, 1 a check failed or a hypothesis is unmet
};

inline const std::vector<std::string> universal_checks{"eq1", "lemma1", "corollary1", "proposition"};
inline const std::vector<std::string> ring_checks{"eq1", "lemma1", "corollary1", "proposition", "homotopy"};

enum class preimage_mode { norm, t };

command_outcome cmd_verify_universal(int n_min, int n_max, std::vector<std::string> checks, const run_options& opts);
command_outcome cmd_ring_verify(const ring_spec& spec, std::vector<std::string> checks,
                                const std::optional<std::string>& x_literal, const run_options& opts);
command_outcome cmd_cohomology(const ring_spec& spec, const run_options& opts);
command_outcome cmd_preimage(const ring_spec& spec, preimage_mode mode, const std::string& a_literal,
                             const std::optional<std::string>& x_literal, const run_options& opts);
command_outcome cmd_special_case(const ring_spec& spec, const run_options& opts);

sample_policy policy_from(const run_options& opts);

} // namespace cychom
