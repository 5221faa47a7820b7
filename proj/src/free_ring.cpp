#include "cychom/free_ring.hpp"

#include "cychom/errors.hpp"

#include <cctype>

namespace cychom {

namespace {

int reduce_index(long long i, int n) {
    long long r = i % n;
    return static_cast<int>(r < 0 ? r + n : r);
}

void require_same_modulus(const free_poly& p, const free_poly& q) {
    if (p.n() != q.n()) throw modulus_mismatch(p.n(), q.n());
}

} // namespace

word concat(const word& a, const word& b) {
    word w;
    w.letters.reserve(a.size() + b.size());
    w.letters.insert(w.letters.end(), a.letters.begin(), a.letters.end());
    w.letters.insert(w.letters.end(), b.letters.begin(), b.letters.end());
    return w;
}

free_poly::free_poly(int n) : n_(n) {
    if (n < 2) throw invalid_modulus(n);
}

free_poly free_poly::constant(int n, const integer& c) {
    free_poly p(n);
    p.add_term(word{}, c);
    return p;
}

free_poly free_poly::generator(family fam, long long i, int n) {
    free_poly p(n);
    p.add_term(word{{gen_letter{fam, reduce_index(i, n)}}}, 1);
    return p;
}

integer free_poly::coeff(const word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? integer(0) : it->second;
}

void free_poly::add_term(const word& w, const integer& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

free_poly free_poly::shifted(long long k) const {
    const int s = reduce_index(k, n_);
    if (s == 0) return *this;
    free_poly out(n_);
    for (const auto& [w, c] : terms_) {
        word moved = w;
        for (auto& l : moved.letters) l.index = (l.index + s) % n_;
        // The shift is not monotone for the word order, so re-insert.
        out.terms_.emplace(std::move(moved), c);
    }
    return out;
}

free_poly& free_poly::operator+=(const free_poly& q) {
    require_same_modulus(*this, q);
    for (const auto& [w, c] : q.terms_) add_term(w, c);
    return *this;
}

free_poly& free_poly::operator-=(const free_poly& q) {
    require_same_modulus(*this, q);
    for (const auto& [w, c] : q.terms_) add_term(w, -c);
    return *this;
}

free_poly& free_poly::operator*=(const integer& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, v] : terms_) v *= c;
    return *this;
}

free_poly operator*(const free_poly& p, const free_poly& q) {
    require_same_modulus(p, q);
    free_poly out(p.n());
    for (const auto& [wp, cp] : p.terms_)
        for (const auto& [wq, cq] : q.terms_) out.add_term(concat(wp, wq), cp * cq);
    return out;
}

std::string free_poly::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        if (!first) s += " + ";
        first = false;
        s += c.str();
        s += '*';
        if (w.empty()) {
            s += '1';
            continue;
        }
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (i) s += '.';
            s += w.letters[i].fam == family::X ? 'X' : 'A';
            s += std::to_string(w.letters[i].index);
        }
    }
    return s;
}

namespace {

class poly_parser {
public:
    poly_parser(std::string_view text, int n) : text_(text), n_(n) {}

    free_poly run() {
        free_poly out(n_);
        if (text_ == "0") return out;
        for (;;) {
            integer c = parse_integer();
            expect('*');
            word w = parse_word();
            out += free_poly::constant(n_, c) * monomial(w);
            if (pos_ == text_.size()) break;
            expect(' ');
            expect('+');
            expect(' ');
        }
        return out;
    }

private:
    free_poly monomial(const word& w) const {
        free_poly m = free_poly::one(n_);
        for (const auto& l : w.letters) m = m * free_poly::generator(l.fam, l.index, n_);
        return m;
    }

    [[noreturn]] void fail(const std::string& what) const {
        throw parse_error("free_poly parse error at offset " + std::to_string(pos_) + ": " + what);
    }

    void expect(char ch) {
        if (pos_ >= text_.size() || text_[pos_] != ch) fail(std::string("expected '") + ch + "'");
        ++pos_;
    }

    bool at_digit() const {
        return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
    }

    std::string digits() {
        if (!at_digit()) fail("expected digit");
        std::size_t start = pos_;
        while (at_digit()) ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    integer parse_integer() {
        bool neg = false;
        if (pos_ < text_.size() && text_[pos_] == '-') {
            neg = true;
            ++pos_;
        }
        integer v(digits());
        return neg ? integer(-v) : v;
    }

    gen_letter parse_letter() {
        if (pos_ >= text_.size()) fail("expected letter");
        family fam;
        switch (text_[pos_]) {
        case 'X': fam = family::X; break;
        case 'A': fam = family::A; break;
        default: fail("expected 'X' or 'A'");
        }
        ++pos_;
        std::string d = digits();
        if (d.size() > 9) fail("index too large");
        int idx = std::stoi(d);
        if (idx >= n_) fail("index " + d + " out of range for n=" + std::to_string(n_));
        return {fam, idx};
    }

    word parse_word() {
        word w;
        if (pos_ < text_.size() && text_[pos_] == '1') {
            ++pos_;
            return w;
        }
        w.letters.push_back(parse_letter());
        while (pos_ < text_.size() && text_[pos_] == '.') {
            ++pos_;
            w.letters.push_back(parse_letter());
        }
        return w;
    }

    std::string_view text_;
    int n_;
    std::size_t pos_ = 0;
};

} // namespace

free_poly free_poly::parse(std::string_view text, int n) {
    if (n < 2) throw invalid_modulus(n);
    return poly_parser(text, n).run();
}

free_poly poly_add(const free_poly& p, const free_poly& q) { return p + q; }
free_poly poly_mul(const free_poly& p, const free_poly& q) { return p * q; }
free_poly shift_apply(const free_poly& p, long long k) { return p.shifted(k); }
free_poly generator(family fam, long long i, int n) { return free_poly::generator(fam, i, n); }

} // namespace cychom
