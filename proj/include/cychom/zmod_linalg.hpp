#pragma once

// Linear algebra over Z/m for arbitrary (composite) m >= 2: a diagonal
// normal form D = U A V with U, V invertible over Z/m, and the solve /
// kernel / image-order computations that follow from it.

#include <cstdint>
#include <optional>
#include <vector>

namespace cychom::zmod {

using vec = std::vector<std::int64_t>;
using matrix = std::vector<vec>; // row-major

std::int64_t reduce(std::int64_t v, std::int64_t m);
std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t m);
// Inverse of a modulo m, or nullopt when gcd(a, m) != 1.
std::optional<std::int64_t> inverse(std::int64_t a, std::int64_t m);

vec apply(const matrix& a, const vec& v, std::int64_t m);

struct diagonal_form {
    std::int64_t modulus = 0;
    std::size_t rows = 0;
    std::size_t cols = 0;
    matrix left;  // U, rows x rows
    vec diag;     // min(rows, cols) entries of D
    matrix right; // V, cols x cols

    // gcd(d_i, m) for i < cols; columns past the diagonal count as d_i = 0.
    std::int64_t kernel_factor(std::size_t i) const;
};

// Row/column reduction with extended-gcd steps. The diagonal is not put
// into divisibility order; nothing here needs it.
diagonal_form diagonalize(const matrix& a, std::int64_t m);

// Some x with A x = b, or nullopt when b is outside the image.
std::optional<vec> solve(const diagonal_form& f, const vec& b);

struct kernel_generator {
    vec v;
    std::int64_t order;
};

// Independent generators: ker A is the internal direct sum of the cyclic
// groups they generate.
std::vector<kernel_generator> kernel_generators(const diagonal_form& f);

// Orders as products over the diagonal; nullopt on 64-bit overflow.
std::optional<std::uint64_t> kernel_order(const diagonal_form& f);
std::optional<std::uint64_t> image_order(const diagonal_form& f);

} // namespace cychom::zmod
