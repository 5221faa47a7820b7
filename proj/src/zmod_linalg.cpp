#include "cychom/zmod_linalg.hpp"

#include <numeric>
#include <stdexcept>
#include <utility>

namespace cychom::zmod {

std::int64_t reduce(std::int64_t v, std::int64_t m) {
    v %= m;
    return v < 0 ? v + m : v;
}

std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t m) {
    return static_cast<std::int64_t>(reduce(static_cast<std::int64_t>((static_cast<__int128>(a) * b) % m), m));
}

namespace {

struct ext_gcd_result {
    std::int64_t g, s, t; // g = s*a + t*b
};

ext_gcd_result ext_gcd(std::int64_t a, std::int64_t b) {
    std::int64_t old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
    while (r != 0) {
        std::int64_t q = old_r / r;
        old_r = std::exchange(r, old_r - q * r);
        old_s = std::exchange(s, old_s - q * s);
        old_t = std::exchange(t, old_t - q * t);
    }
    if (old_r < 0) return {-old_r, -old_s, -old_t};
    return {old_r, old_s, old_t};
}

matrix identity(std::size_t k) {
    matrix id(k, vec(k, 0));
    for (std::size_t i = 0; i < k; ++i) id[i][i] = 1;
    return id;
}

// rows (i, j) <- [[s, t], [-b/g, a/g]] * rows (i, j); determinant 1 over Z.
void mix_rows(matrix& a, std::size_t i, std::size_t j, std::int64_t s, std::int64_t t, std::int64_t u,
              std::int64_t v, std::int64_t m) {
    for (std::size_t c = 0; c < a[i].size(); ++c) {
        std::int64_t ai = a[i][c], aj = a[j][c];
        a[i][c] = reduce(mul_mod(s, ai, m) + mul_mod(t, aj, m), m);
        a[j][c] = reduce(mul_mod(u, ai, m) + mul_mod(v, aj, m), m);
    }
}

void mix_cols(matrix& a, std::size_t i, std::size_t j, std::int64_t s, std::int64_t t, std::int64_t u,
              std::int64_t v, std::int64_t m) {
    for (auto& row : a) {
        std::int64_t ai = row[i], aj = row[j];
        row[i] = reduce(mul_mod(s, ai, m) + mul_mod(t, aj, m), m);
        row[j] = reduce(mul_mod(u, ai, m) + mul_mod(v, aj, m), m);
    }
}

} // namespace

std::optional<std::int64_t> inverse(std::int64_t a, std::int64_t m) {
    auto r = ext_gcd(reduce(a, m), m);
    if (r.g != 1) return std::nullopt;
    return reduce(r.s, m);
}

vec apply(const matrix& a, const vec& v, std::int64_t m) {
    vec out(a.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::int64_t acc = 0;
        for (std::size_t j = 0; j < v.size(); ++j) acc = reduce(acc + mul_mod(a[i][j], v[j], m), m);
        out[i] = acc;
    }
    return out;
}

std::int64_t diagonal_form::kernel_factor(std::size_t i) const {
    std::int64_t d = i < diag.size() ? diag[i] : 0;
    return std::gcd(d, modulus);
}

diagonal_form diagonalize(const matrix& input, std::int64_t m) {
    if (m < 2) throw std::invalid_argument("zmod::diagonalize: modulus must be >= 2");
    diagonal_form f;
    f.modulus = m;
    f.rows = input.size();
    f.cols = input.empty() ? 0 : input.front().size();
    matrix a = input;
    for (auto& row : a)
        for (auto& e : row) e = reduce(e, m);
    f.left = identity(f.rows);
    f.right = identity(f.cols);
    const std::size_t steps = std::min(f.rows, f.cols);

    for (std::size_t p = 0; p < steps; ++p) {
        // Bring some nonzero entry of the trailing block to (p, p).
        bool found = false;
        for (std::size_t i = p; i < f.rows && !found; ++i) {
            for (std::size_t j = p; j < f.cols && !found; ++j) {
                if (a[i][j] == 0) continue;
                std::swap(a[p], a[i]);
                std::swap(f.left[p], f.left[i]);
                for (auto& row : a) std::swap(row[p], row[j]);
                for (auto& row : f.right) std::swap(row[p], row[j]);
                found = true;
            }
        }
        if (!found) break;

        // The representative of a[p][p] in [1, m) strictly decreases whenever
        // a gcd step is needed, so this loop terminates.
        for (bool dirty = true; dirty;) {
            dirty = false;
            for (std::size_t i = p + 1; i < f.rows; ++i) {
                std::int64_t piv = a[p][p], b = a[i][p];
                if (b == 0) continue;
                if (piv != 0 && b % piv == 0) {
                    std::int64_t q = reduce(-(b / piv), m);
                    mix_rows(a, p, i, 1, 0, q, 1, m);
                    mix_rows(f.left, p, i, 1, 0, q, 1, m);
                } else {
                    auto [g, s, t] = ext_gcd(piv, b);
                    std::int64_t u = reduce(-(b / g), m), v = reduce(piv / g, m);
                    s = reduce(s, m);
                    t = reduce(t, m);
                    mix_rows(a, p, i, s, t, u, v, m);
                    mix_rows(f.left, p, i, s, t, u, v, m);
                }
            }
            for (std::size_t j = p + 1; j < f.cols; ++j) {
                std::int64_t piv = a[p][p], b = a[p][j];
                if (b == 0) continue;
                if (piv != 0 && b % piv == 0) {
                    std::int64_t q = reduce(-(b / piv), m);
                    mix_cols(a, p, j, 1, 0, q, 1, m);
                    mix_cols(f.right, p, j, 1, 0, q, 1, m);
                } else {
                    auto [g, s, t] = ext_gcd(piv, b);
                    std::int64_t u = reduce(-(b / g), m), v = reduce(piv / g, m);
                    s = reduce(s, m);
                    t = reduce(t, m);
                    mix_cols(a, p, j, s, t, u, v, m);
                    mix_cols(f.right, p, j, s, t, u, v, m);
                    dirty = true;
                }
            }
        }
    }

    f.diag.resize(steps);
    for (std::size_t i = 0; i < steps; ++i) f.diag[i] = a[i][i];
    return f;
}

std::optional<vec> solve(const diagonal_form& f, const vec& b) {
    const std::int64_t m = f.modulus;
    vec c = apply(f.left, b, m);
    vec y(f.cols, 0);
    for (std::size_t i = 0; i < f.rows; ++i) {
        std::int64_t d = i < f.diag.size() ? f.diag[i] : 0;
        std::int64_t g = std::gcd(d, m);
        if (c[i] % g != 0) return std::nullopt;
        if (d == 0) continue; // c[i] == 0 here
        std::int64_t mg = m / g;
        std::int64_t inv = mg == 1 ? 0 : *inverse((d / g) % mg, mg);
        y[i] = mul_mod(c[i] / g, inv, mg);
    }
    return apply(f.right, y, m);
}

std::vector<kernel_generator> kernel_generators(const diagonal_form& f) {
    std::vector<kernel_generator> out;
    const std::int64_t m = f.modulus;
    for (std::size_t i = 0; i < f.cols; ++i) {
        std::int64_t g = f.kernel_factor(i);
        if (g == 1) continue;
        vec y(f.cols, 0);
        y[i] = m / g;
        out.push_back({apply(f.right, y, m), g});
    }
    return out;
}

namespace {

std::optional<std::uint64_t> checked_product(std::uint64_t acc, std::uint64_t factor) {
    if (factor != 0 && acc > UINT64_MAX / factor) return std::nullopt;
    return acc * factor;
}

} // namespace

std::optional<std::uint64_t> kernel_order(const diagonal_form& f) {
    std::optional<std::uint64_t> acc = 1;
    for (std::size_t i = 0; i < f.cols && acc; ++i)
        acc = checked_product(*acc, static_cast<std::uint64_t>(f.kernel_factor(i)));
    return acc;
}

std::optional<std::uint64_t> image_order(const diagonal_form& f) {
    std::optional<std::uint64_t> acc = 1;
    for (std::size_t i = 0; i < f.diag.size() && acc; ++i)
        acc = checked_product(*acc, static_cast<std::uint64_t>(f.modulus / f.kernel_factor(i)));
    return acc;
}

} // namespace cychom::zmod
