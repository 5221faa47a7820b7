#pragma once

#include <stdexcept>
#include <string>

namespace cychom {

// Base of every error raised by the library. The CLI maps subclasses onto
// exit codes: input_error -> 2, math_error -> 1.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed or inconsistent user input (spec files, literals, arguments).
class input_error : public error {
public:
    using error::error;
};

// A mathematical hypothesis does not hold (no norm-one element, N(x) != 1, ...).
class math_error : public error {
public:
    using error::error;
};

class modulus_mismatch : public input_error {
public:
    modulus_mismatch(int lhs, int rhs)
        : input_error("modulus mismatch: " + std::to_string(lhs) + " vs " + std::to_string(rhs)) {}
};

class invalid_modulus : public input_error {
public:
    explicit invalid_modulus(long long n)
        : input_error("invalid modulus " + std::to_string(n) + " (need n >= 2)") {}
};

class parse_error : public input_error {
public:
    using input_error::input_error;
};

class spec_validation_error : public input_error {
public:
    spec_validation_error(std::string law, std::string witness)
        : input_error("ring spec violates " + law + (witness.empty() ? "" : " at " + witness)),
          law_(std::move(law)), witness_(std::move(witness)) {}

    const std::string& law() const noexcept { return law_; }
    const std::string& witness() const noexcept { return witness_; }

private:
    std::string law_;
    std::string witness_;
};

class incompatible_action : public math_error {
public:
    using math_error::math_error;
};

class no_inverse : public math_error {
public:
    using math_error::math_error;
};

// Carries the offending value rendered in the ring's element grammar.
class precondition_violation : public math_error {
public:
    precondition_violation(std::string hypothesis, std::string value)
        : math_error("hypothesis " + hypothesis + " fails: got " + value),
          hypothesis_(std::move(hypothesis)), value_(std::move(value)) {}

    const std::string& hypothesis() const noexcept { return hypothesis_; }
    const std::string& value() const noexcept { return value_; }

private:
    std::string hypothesis_;
    std::string value_;
};

class too_large : public math_error {
public:
    using math_error::math_error;
};

// im N not inside ker T (or im T not inside ker N): the action is broken.
class consistency_error : public math_error {
public:
    using math_error::math_error;
};

} // namespace cychom
