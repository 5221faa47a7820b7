#pragma once

// Finite rings with an automorphism of order dividing n.
//
// Kinds:
//   modular_trivial   Z/m, t = id
//   cyclic_product    (Z/m)^k, t shifts coordinates i -> i+1 (k | n)
//   gaussian_conj     Z/m[i]/(i^2+1), t = complex conjugation (n even)
//   matrix_perm_conj  M_s(Z/m), t(X) = P X P^-1 for the permutation matrix of sigma
//   table             arbitrary finite ring given by addition/multiplication tables
//
// All kinds except `table` are free Z/m-modules with a Z/m-bilinear product
// and a Z/m-linear automorphism; those are called linear kinds below and get
// exact linear-algebra paths for norm-one search and kernels/images.

#include <compare>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "cychom/cyclic_ring.hpp"
#include "cychom/zmod_linalg.hpp"

namespace cychom {

enum class ring_kind { modular_trivial, cyclic_product, gaussian_conj, matrix_perm_conj, table };

std::string_view to_string(ring_kind k);
ring_kind ring_kind_from_string(std::string_view s);

struct ring_table {
    std::vector<std::string> elements;
    std::vector<std::vector<int>> add;
    std::vector<std::vector<int>> mul;
    std::vector<int> t;
};

struct ring_spec {
    ring_kind kind = ring_kind::modular_trivial;
    int n = 2;
    std::int64_t m = 0;     // linear kinds
    int k = 0;              // cyclic_product arity
    std::vector<int> sigma; // matrix_perm_conj; matrix size is sigma.size()
    ring_table table;       // table

    static ring_spec modular_trivial(std::int64_t m, int n);
    static ring_spec cyclic_product(std::int64_t m, int k, int n);
    static ring_spec gaussian_conj(std::int64_t m, int n);
    static ring_spec matrix_perm_conj(std::int64_t m, std::vector<int> sigma, int n);
    static ring_spec from_table(ring_table table, int n);

    // Strict: unknown keys and wrong types are input errors.
    static ring_spec from_json(const nlohmann::json& j);
    static ring_spec parse(std::string_view text);
    static ring_spec load(const std::filesystem::path& path);

    // Canonical form; key order is fixed, so dump() is deterministic.
    nlohmann::ordered_json to_json() const;
};

struct ring_element {
    std::vector<std::int64_t> c; // residues in [0, m), or a single table index

    friend bool operator==(const ring_element&, const ring_element&) = default;
    friend auto operator<=>(const ring_element&, const ring_element&) = default;
};

class ring_instance {
public:
    using element = ring_element;

    const ring_spec& spec() const noexcept { return spec_; }
    ring_kind kind() const noexcept { return spec_.kind; }
    bool is_linear() const noexcept { return spec_.kind != ring_kind::table; }

    // Declared n, the order used by N, h_x, ...
    int order() const noexcept { return spec_.n; }
    // Least k >= 1 with t^k = id.
    int action_order() const noexcept { return action_order_; }

    // m for linear kinds, the table size for table rings.
    std::int64_t modulus() const noexcept { return modulus_; }
    std::size_t dimension() const noexcept { return dimension_; }
    std::uint64_t size() const noexcept { return size_; }
    // Additive order of 1.
    std::int64_t characteristic() const noexcept { return characteristic_; }

    element zero() const;
    element one() const;
    element add(const element& a, const element& b) const;
    element neg(const element& a) const;
    element mul(const element& a, const element& b) const;
    bool eq(const element& a, const element& b) const { return a == b; }
    element act(const element& a) const;

    // Element grammar per kind:
    //   modular_trivial   3
    //   cyclic_product    (1,0,2)
    //   gaussian_conj     3+2i, 4-i, 2i, 3
    //   matrix_perm_conj  [[1,0],[0,1]]
    //   table             the element's name
    std::string format(const element& a) const;
    element parse_element(std::string_view text) const;

    // Mixed-radix bijection [0, size) <-> elements; the enumeration order.
    element element_at(std::uint64_t index) const;
    std::uint64_t index_of(const element& a) const;
    element random_element(std::mt19937_64& rng) const;

    // Standard Z/m basis; linear kinds only.
    std::vector<element> basis() const;
    // Matrix (columns = images of basis vectors) of an additive map; linear kinds only.
    template <class F>
    zmod::matrix linear_matrix(F&& f) const;
    element from_coordinates(const zmod::vec& v) const;

    // u with n*u = 1 when gcd(n, characteristic) = 1.
    std::optional<element> inverse_of_integer(std::int64_t n) const;

    std::string describe() const;

private:
    friend ring_instance build_ring(const ring_spec& spec);
    friend ring_instance build_ring_unchecked(const ring_spec& spec);

    explicit ring_instance(ring_spec spec);
    void compute_action_order();

    ring_spec spec_;
    std::int64_t modulus_ = 0;
    std::size_t dimension_ = 0;
    std::uint64_t size_ = 0;
    std::int64_t characteristic_ = 0;
    int action_order_ = 1;
    int matrix_size_ = 0;
    int table_zero_ = 0;
    int table_one_ = 0;
    std::vector<int> table_neg_;
};

static_assert(cyclic_ring<ring_instance>);

template <class F>
zmod::matrix ring_instance::linear_matrix(F&& f) const {
    const auto b = basis();
    zmod::matrix mat(dimension_, zmod::vec(dimension_, 0));
    for (std::size_t j = 0; j < b.size(); ++j) {
        const element img = f(b[j]);
        for (std::size_t i = 0; i < dimension_; ++i) mat[i][j] = img.c[i];
    }
    return mat;
}

inline constexpr std::uint64_t default_enumerate_cap = 65536;
inline constexpr std::uint64_t exhaustive_validation_limit = 4096;
inline constexpr std::uint64_t table_total_validation_limit = 64;
inline constexpr std::size_t validation_samples = 1000;
inline constexpr std::uint64_t validation_seed = 0x5eed;

// Validates the spec invariants, the ring axioms and the automorphism laws;
// throws spec_validation_error naming the failed law and a witness.
ring_instance build_ring(const ring_spec& spec);
// Structural checks only (shapes, index ranges, identities present). For
// negative controls that need a deliberately broken action.
ring_instance build_ring_unchecked(const ring_spec& spec);

// All elements in index order; too_large when size() > cap.
std::vector<ring_element> enumerate(const ring_instance& ring, std::uint64_t cap = default_enumerate_cap);

// Some x with N(x) = 1, or nullopt when none exists. Linear kinds solve the
// linear system N v = 1 over Z/m; table rings are searched exhaustively.
std::optional<ring_element> find_norm_one(const ring_instance& ring, std::uint64_t cap = default_enumerate_cap);
std::optional<ring_element> find_norm_one_linear(const ring_instance& ring);
std::optional<ring_element> find_norm_one_exhaustive(const ring_instance& ring,
                                                     std::uint64_t cap = default_enumerate_cap);

} // namespace cychom
