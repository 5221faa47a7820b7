#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "cychom/operators.hpp"

namespace cychom {

inline constexpr const char* tool_version = "0.1.0";

using kv_list = std::vector<std::pair<std::string, std::string>>;

struct report_record {
    std::string identity;
    std::string ring;
    std::string sample_policy;
    std::optional<std::uint64_t> seed;
    bool pass = false;
    std::optional<witness> failure;
    kv_list details;
};

// Text and JSON renderings are both produced from the records, and neither
// contains timestamps, so output is a pure function of the inputs.
struct verification_report {
    std::string campaign;
    kv_list context;
    std::vector<report_record> records;

    std::size_t passed() const;
    std::size_t failed() const;
    bool all_passed() const { return failed() == 0; }

    void add(const check_result& res, std::string ring, std::string sample_policy, std::optional<std::uint64_t> seed,
             kv_list details = {});

    std::string to_text() const;
    nlohmann::ordered_json to_json() const;
    std::string render(std::string_view format) const;
};

} // namespace cychom
