#pragma once

// Free noncommutative ring over Z on the letters X_0..X_{n-1}, A_0..A_{n-1}
// with the index-shift automorphism X_i -> X_{i+1}, A_i -> A_{i+1}.
//
// The X family is the universal ring on one element with a Z/n-action; the
// A family adds a second generic element so that an operator identity
// "for all a" becomes a single polynomial identity.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace cychom {

using integer = boost::multiprecision::cpp_int;

enum class family : std::uint8_t { X = 0, A = 1 };

struct gen_letter {
    family fam = family::X;
    int index = 0;

    friend auto operator<=>(const gen_letter&, const gen_letter&) = default;
};

// Length-lexicographic order; letters compare family first, so
// X_0 < ... < X_{n-1} < A_0 < ... < A_{n-1}.
struct word {
    std::vector<gen_letter> letters;

    bool empty() const noexcept { return letters.empty(); }
    std::size_t size() const noexcept { return letters.size(); }

    friend bool operator==(const word&, const word&) = default;
    friend std::strong_ordering operator<=>(const word& a, const word& b) {
        if (auto c = a.letters.size() <=> b.letters.size(); c != 0) return c;
        return a.letters <=> b.letters;
    }
};

word concat(const word& a, const word& b);

class free_poly {
public:
    using term_map = std::map<word, integer>;

    // The zero polynomial of R_n.
    explicit free_poly(int n);

    static free_poly constant(int n, const integer& c);
    static free_poly one(int n) { return constant(n, 1); }
    static free_poly generator(family fam, long long i, int n);

    int n() const noexcept { return n_; }
    const term_map& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t term_count() const noexcept { return terms_.size(); }

    // Coefficient of w, zero when absent.
    integer coeff(const word& w) const;

    free_poly shifted(long long k) const;

    free_poly& operator+=(const free_poly& q);
    free_poly& operator-=(const free_poly& q);
    free_poly& operator*=(const integer& c);

    friend free_poly operator+(free_poly p, const free_poly& q) { return p += q; }
    friend free_poly operator-(free_poly p, const free_poly& q) { return p -= q; }
    friend free_poly operator-(free_poly p) { return p *= -1; }
    friend free_poly operator*(const free_poly& p, const free_poly& q);
    friend free_poly operator*(free_poly p, const integer& c) { return p *= c; }
    friend free_poly operator*(const integer& c, free_poly p) { return p *= c; }

    friend bool operator==(const free_poly&, const free_poly&) = default;

    // Canonical text form, e.g. "1*X0.A1 + -1*X1.A0"; "0" for the zero
    // polynomial, "c*1" for a constant term.
    std::string to_string() const;
    static free_poly parse(std::string_view text, int n);

private:
    void add_term(const word& w, const integer& c);

    int n_;
    term_map terms_;
};

free_poly poly_add(const free_poly& p, const free_poly& q);
free_poly poly_mul(const free_poly& p, const free_poly& q);
// t^k; k may be negative and is reduced mod n.
free_poly shift_apply(const free_poly& p, long long k);
free_poly generator(family fam, long long i, int n);

} // namespace cychom
