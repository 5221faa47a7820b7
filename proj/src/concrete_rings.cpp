#include "cychom/concrete_rings.hpp"

#include "cychom/errors.hpp"
#include "cychom/operators.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

namespace cychom {

namespace {

using json = nlohmann::json;

constexpr std::pair<ring_kind, std::string_view> kind_names[] = {
    {ring_kind::modular_trivial, "modular_trivial"},
    {ring_kind::cyclic_product, "cyclic_product"},
    {ring_kind::gaussian_conj, "gaussian_conj"},
    {ring_kind::matrix_perm_conj, "matrix_perm_conj"},
    {ring_kind::table, "table"},
};

std::int64_t reduce(std::int64_t v, std::int64_t m) { return zmod::reduce(v, m); }

// --- strict JSON field access -------------------------------------------

void require_keys(const json& j, std::initializer_list<std::string_view> allowed) {
    for (const auto& [key, _] : j.items())
        if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
            throw parse_error("ring spec: unknown field '" + key + "'");
}

const json& field(const json& j, const char* name) {
    auto it = j.find(name);
    if (it == j.end()) throw parse_error(std::string("ring spec: missing field '") + name + "'");
    return *it;
}

std::int64_t int_field(const json& j, const char* name) {
    const json& v = field(j, name);
    if (!v.is_number_integer()) throw parse_error(std::string("ring spec: field '") + name + "' must be an integer");
    return v.get<std::int64_t>();
}

std::vector<int> int_array(const json& v, const std::string& what) {
    if (!v.is_array()) throw parse_error("ring spec: " + what + " must be an array of integers");
    std::vector<int> out;
    for (const auto& e : v) {
        if (!e.is_number_integer()) throw parse_error("ring spec: " + what + " must be an array of integers");
        out.push_back(e.get<int>());
    }
    return out;
}

std::vector<std::vector<int>> int_table(const json& v, const std::string& what) {
    if (!v.is_array()) throw parse_error("ring spec: " + what + " must be an array of arrays");
    std::vector<std::vector<int>> out;
    for (const auto& row : v) out.push_back(int_array(row, what + " row"));
    return out;
}

int narrow_n(std::int64_t n) {
    if (n < 2 || n > 1'000'000) throw invalid_modulus(n);
    return static_cast<int>(n);
}

int permutation_order(const std::vector<int>& p) {
    std::int64_t ord = 1;
    std::vector<bool> seen(p.size(), false);
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (seen[i]) continue;
        std::int64_t len = 0;
        for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(p[j])) {
            seen[j] = true;
            ++len;
        }
        ord = std::lcm(ord, len);
    }
    return static_cast<int>(ord);
}

bool is_permutation_of_range(const std::vector<int>& p) {
    std::vector<bool> seen(p.size(), false);
    for (int v : p) {
        if (v < 0 || static_cast<std::size_t>(v) >= p.size() || seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

// --- element grammar helpers ------------------------------------------

std::string strip_spaces(std::string_view s) {
    std::string out;
    for (char ch : s)
        if (!std::isspace(static_cast<unsigned char>(ch))) out += ch;
    return out;
}

std::int64_t parse_int(const std::string& s, std::string_view whole) {
    if (s.empty()) throw parse_error("bad element literal '" + std::string(whole) + "'");
    std::size_t pos = 0;
    if (s[0] == '-' || s[0] == '+') pos = 1;
    if (pos == s.size()) throw parse_error("bad element literal '" + std::string(whole) + "'");
    for (std::size_t i = pos; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            throw parse_error("bad element literal '" + std::string(whole) + "'");
    try {
        return std::stoll(s);
    } catch (const std::out_of_range&) {
        throw parse_error("element literal out of range '" + std::string(whole) + "'");
    }
}

std::vector<std::string> split_top(const std::string& s, char sep) {
    std::vector<std::string> parts;
    int depth = 0;
    std::string cur;
    for (char ch : s) {
        if (ch == '[' || ch == '(') ++depth;
        if (ch == ']' || ch == ')') --depth;
        if (ch == sep && depth == 0) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    parts.push_back(cur);
    return parts;
}

std::string unwrap(const std::string& s, char open, char close, std::string_view whole) {
    if (s.size() < 2 || s.front() != open || s.back() != close)
        throw parse_error("bad element literal '" + std::string(whole) + "'");
    return s.substr(1, s.size() - 2);
}

std::string witness_of(const ring_instance& r, std::initializer_list<std::pair<const char*, const ring_element*>> xs) {
    std::string out;
    for (const auto& [name, e] : xs) {
        if (!out.empty()) out += ", ";
        out += std::string(name) + "=" + r.format(*e);
    }
    return out;
}

} // namespace

std::string_view to_string(ring_kind k) {
    for (const auto& [kind, name] : kind_names)
        if (kind == k) return name;
    return "?";
}

ring_kind ring_kind_from_string(std::string_view s) {
    for (const auto& [kind, name] : kind_names)
        if (name == s) return kind;
    throw parse_error("ring spec: unknown kind '" + std::string(s) + "'");
}

// --- ring_spec -----------------------------------------------------------

ring_spec ring_spec::modular_trivial(std::int64_t m, int n) {
    ring_spec s;
    s.kind = ring_kind::modular_trivial;
    s.m = m;
    s.n = n;
    return s;
}

ring_spec ring_spec::cyclic_product(std::int64_t m, int k, int n) {
    ring_spec s;
    s.kind = ring_kind::cyclic_product;
    s.m = m;
    s.k = k;
    s.n = n;
    return s;
}

ring_spec ring_spec::gaussian_conj(std::int64_t m, int n) {
    ring_spec s;
    s.kind = ring_kind::gaussian_conj;
    s.m = m;
    s.n = n;
    return s;
}

ring_spec ring_spec::matrix_perm_conj(std::int64_t m, std::vector<int> sigma, int n) {
    ring_spec s;
    s.kind = ring_kind::matrix_perm_conj;
    s.m = m;
    s.sigma = std::move(sigma);
    s.n = n;
    return s;
}

ring_spec ring_spec::from_table(ring_table table, int n) {
    ring_spec s;
    s.kind = ring_kind::table;
    s.table = std::move(table);
    s.n = n;
    return s;
}

ring_spec ring_spec::from_json(const json& j) {
    if (!j.is_object()) throw parse_error("ring spec: expected a JSON object");
    const json& kind_field = field(j, "kind");
    if (!kind_field.is_string()) throw parse_error("ring spec: field 'kind' must be a string");
    ring_spec s;
    s.kind = ring_kind_from_string(kind_field.get<std::string>());
    s.n = narrow_n(int_field(j, "n"));
    switch (s.kind) {
    case ring_kind::modular_trivial:
    case ring_kind::gaussian_conj:
        require_keys(j, {"kind", "n", "m"});
        s.m = int_field(j, "m");
        break;
    case ring_kind::cyclic_product:
        require_keys(j, {"kind", "n", "m", "k"});
        s.m = int_field(j, "m");
        s.k = static_cast<int>(int_field(j, "k"));
        break;
    case ring_kind::matrix_perm_conj:
        require_keys(j, {"kind", "n", "m", "sigma"});
        s.m = int_field(j, "m");
        s.sigma = int_array(field(j, "sigma"), "sigma");
        break;
    case ring_kind::table: {
        require_keys(j, {"kind", "n", "elements", "add", "mul", "t"});
        const json& names = field(j, "elements");
        if (!names.is_array()) throw parse_error("ring spec: 'elements' must be an array of strings");
        for (const auto& e : names) {
            if (!e.is_string()) throw parse_error("ring spec: 'elements' must be an array of strings");
            s.table.elements.push_back(e.get<std::string>());
        }
        s.table.add = int_table(field(j, "add"), "add");
        s.table.mul = int_table(field(j, "mul"), "mul");
        s.table.t = int_array(field(j, "t"), "t");
        break;
    }
    }
    return s;
}

ring_spec ring_spec::parse(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw parse_error(std::string("ring spec: invalid JSON: ") + e.what());
    }
    return from_json(j);
}

ring_spec ring_spec::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open ring spec file '" + path.string() + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse(buf.str());
}

nlohmann::ordered_json ring_spec::to_json() const {
    nlohmann::ordered_json j;
    j["kind"] = std::string(cychom::to_string(kind));
    j["n"] = n;
    switch (kind) {
    case ring_kind::modular_trivial:
    case ring_kind::gaussian_conj: j["m"] = m; break;
    case ring_kind::cyclic_product:
        j["m"] = m;
        j["k"] = k;
        break;
    case ring_kind::matrix_perm_conj:
        j["m"] = m;
        j["sigma"] = sigma;
        break;
    case ring_kind::table:
        j["elements"] = table.elements;
        j["add"] = table.add;
        j["mul"] = table.mul;
        j["t"] = table.t;
        break;
    }
    return j;
}

// --- ring_instance: construction ------------------------------------------

ring_instance::ring_instance(ring_spec spec) : spec_(std::move(spec)) {
    if (spec_.n < 2) throw invalid_modulus(spec_.n);
    if (is_linear()) {
        if (spec_.m < 2) throw spec_validation_error("modulus m >= 2", "m=" + std::to_string(spec_.m));
        if (spec_.m > (std::int64_t{1} << 40))
            throw spec_validation_error("modulus m <= 2^40", "m=" + std::to_string(spec_.m));
        modulus_ = spec_.m;
        characteristic_ = spec_.m;
    }
    switch (spec_.kind) {
    case ring_kind::modular_trivial: dimension_ = 1; break;
    case ring_kind::cyclic_product:
        if (spec_.k < 1) throw spec_validation_error("arity k >= 1", "k=" + std::to_string(spec_.k));
        dimension_ = static_cast<std::size_t>(spec_.k);
        break;
    case ring_kind::gaussian_conj: dimension_ = 2; break;
    case ring_kind::matrix_perm_conj:
        if (spec_.sigma.empty() || !is_permutation_of_range(spec_.sigma))
            throw spec_validation_error("sigma is a permutation of 0..s-1", "");
        matrix_size_ = static_cast<int>(spec_.sigma.size());
        dimension_ = spec_.sigma.size() * spec_.sigma.size();
        break;
    case ring_kind::table: {
        const auto& tb = spec_.table;
        const std::size_t k = tb.elements.size();
        if (k == 0) throw spec_validation_error("nonempty element list", "");
        auto square = [k](const std::vector<std::vector<int>>& t) {
            if (t.size() != k) return false;
            for (const auto& row : t) {
                if (row.size() != k) return false;
                for (int v : row)
                    if (v < 0 || static_cast<std::size_t>(v) >= k) return false;
            }
            return true;
        };
        if (!square(tb.add)) throw spec_validation_error("add is a k x k table of element indices", "");
        if (!square(tb.mul)) throw spec_validation_error("mul is a k x k table of element indices", "");
        if (tb.t.size() != k || !is_permutation_of_range(tb.t))
            throw spec_validation_error("t is a permutation of the element indices", "");
        {
            auto sorted = tb.elements;
            std::sort(sorted.begin(), sorted.end());
            if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
                throw spec_validation_error("element names are distinct", "");
        }
        const int ik = static_cast<int>(k);
        auto is_add_identity = [&](int z) {
            for (int a = 0; a < ik; ++a)
                if (tb.add[z][a] != a || tb.add[a][z] != a) return false;
            return true;
        };
        auto is_mul_identity = [&](int o) {
            for (int a = 0; a < ik; ++a)
                if (tb.mul[o][a] != a || tb.mul[a][o] != a) return false;
            return true;
        };
        table_zero_ = -1;
        table_one_ = -1;
        for (int e = 0; e < ik; ++e) {
            if (table_zero_ < 0 && is_add_identity(e)) table_zero_ = e;
            if (table_one_ < 0 && is_mul_identity(e)) table_one_ = e;
        }
        if (table_zero_ < 0) throw spec_validation_error("additive identity exists", "");
        if (table_one_ < 0) throw spec_validation_error("multiplicative identity exists", "");
        table_neg_.assign(k, -1);
        for (int a = 0; a < ik; ++a) {
            for (int b = 0; b < ik; ++b)
                if (tb.add[a][b] == table_zero_) {
                    table_neg_[a] = b;
                    break;
                }
            if (table_neg_[a] < 0) throw spec_validation_error("additive inverses exist", "a=" + tb.elements[a]);
        }
        modulus_ = ik;
        dimension_ = 1;
        size_ = k;
        characteristic_ = 1;
        for (int acc = table_one_; acc != table_zero_; acc = tb.add[acc][table_one_]) {
            ++characteristic_;
            if (characteristic_ > ik) throw spec_validation_error("1 has finite additive order", "");
        }
        break;
    }
    }
    if (is_linear()) {
        // |R| = m^d must stay below 2^62.
        long double bits = static_cast<long double>(dimension_) * std::log2(static_cast<long double>(modulus_));
        if (bits > 62) throw spec_validation_error("ring size below 2^62", "m^d with d=" + std::to_string(dimension_));
        size_ = 1;
        for (std::size_t i = 0; i < dimension_; ++i) size_ *= static_cast<std::uint64_t>(modulus_);
    }
    compute_action_order();
}

void ring_instance::compute_action_order() {
    std::vector<element> probe = is_linear() ? basis() : enumerate(*this, size_);
    std::vector<element> cur = probe;
    for (int k = 1; k <= 1'000'000; ++k) {
        for (auto& e : cur) e = act(e);
        if (cur == probe) {
            action_order_ = k;
            return;
        }
    }
    throw spec_validation_error("t has finite order", "");
}

// --- ring_instance: arithmetic --------------------------------------------

ring_element ring_instance::zero() const {
    if (!is_linear()) return {{table_zero_}};
    return {std::vector<std::int64_t>(dimension_, 0)};
}

ring_element ring_instance::one() const {
    if (!is_linear()) return {{table_one_}};
    ring_element e{std::vector<std::int64_t>(dimension_, 0)};
    switch (spec_.kind) {
    case ring_kind::modular_trivial:
    case ring_kind::gaussian_conj: e.c[0] = 1; break;
    case ring_kind::cyclic_product: std::fill(e.c.begin(), e.c.end(), 1); break;
    case ring_kind::matrix_perm_conj:
        for (int i = 0; i < matrix_size_; ++i) e.c[static_cast<std::size_t>(i * matrix_size_ + i)] = 1;
        break;
    case ring_kind::table: break;
    }
    return e;
}

ring_element ring_instance::add(const element& a, const element& b) const {
    if (!is_linear()) return {{spec_.table.add[a.c[0]][b.c[0]]}};
    element out{std::vector<std::int64_t>(dimension_)};
    for (std::size_t i = 0; i < dimension_; ++i) {
        std::int64_t s = a.c[i] + b.c[i];
        out.c[i] = s >= modulus_ ? s - modulus_ : s;
    }
    return out;
}

ring_element ring_instance::neg(const element& a) const {
    if (!is_linear()) return {{table_neg_[a.c[0]]}};
    element out{std::vector<std::int64_t>(dimension_)};
    for (std::size_t i = 0; i < dimension_; ++i) out.c[i] = a.c[i] == 0 ? 0 : modulus_ - a.c[i];
    return out;
}

ring_element ring_instance::mul(const element& a, const element& b) const {
    const std::int64_t m = modulus_;
    switch (spec_.kind) {
    case ring_kind::modular_trivial: return {{zmod::mul_mod(a.c[0], b.c[0], m)}};
    case ring_kind::cyclic_product: {
        element out{std::vector<std::int64_t>(dimension_)};
        for (std::size_t i = 0; i < dimension_; ++i) out.c[i] = zmod::mul_mod(a.c[i], b.c[i], m);
        return out;
    }
    case ring_kind::gaussian_conj: {
        std::int64_t re = reduce(zmod::mul_mod(a.c[0], b.c[0], m) - zmod::mul_mod(a.c[1], b.c[1], m), m);
        std::int64_t im = reduce(zmod::mul_mod(a.c[0], b.c[1], m) + zmod::mul_mod(a.c[1], b.c[0], m), m);
        return {{re, im}};
    }
    case ring_kind::matrix_perm_conj: {
        const std::size_t s = static_cast<std::size_t>(matrix_size_);
        element out{std::vector<std::int64_t>(dimension_, 0)};
        for (std::size_t i = 0; i < s; ++i)
            for (std::size_t k = 0; k < s; ++k) {
                std::int64_t aik = a.c[i * s + k];
                if (aik == 0) continue;
                for (std::size_t j = 0; j < s; ++j)
                    out.c[i * s + j] = reduce(out.c[i * s + j] + zmod::mul_mod(aik, b.c[k * s + j], m), m);
            }
        return out;
    }
    case ring_kind::table: return {{spec_.table.mul[a.c[0]][b.c[0]]}};
    }
    return a;
}

ring_element ring_instance::act(const element& a) const {
    switch (spec_.kind) {
    case ring_kind::modular_trivial: return a;
    case ring_kind::cyclic_product: {
        element out{std::vector<std::int64_t>(dimension_)};
        for (std::size_t i = 0; i < dimension_; ++i) out.c[(i + 1) % dimension_] = a.c[i];
        return out;
    }
    case ring_kind::gaussian_conj: return {{a.c[0], a.c[1] == 0 ? 0 : modulus_ - a.c[1]}};
    case ring_kind::matrix_perm_conj: {
        // (P X P^-1)[sigma(i)][sigma(j)] = X[i][j]
        const std::size_t s = static_cast<std::size_t>(matrix_size_);
        element out{std::vector<std::int64_t>(dimension_)};
        for (std::size_t i = 0; i < s; ++i)
            for (std::size_t j = 0; j < s; ++j)
                out.c[static_cast<std::size_t>(spec_.sigma[i]) * s + static_cast<std::size_t>(spec_.sigma[j])] =
                    a.c[i * s + j];
        return out;
    }
    case ring_kind::table: return {{spec_.table.t[a.c[0]]}};
    }
    return a;
}

// --- ring_instance: element grammar -----------------------------------------

std::string ring_instance::format(const element& a) const {
    switch (spec_.kind) {
    case ring_kind::modular_trivial: return std::to_string(a.c[0]);
    case ring_kind::cyclic_product: {
        std::string s = "(";
        for (std::size_t i = 0; i < a.c.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(a.c[i]);
        }
        return s + ")";
    }
    case ring_kind::gaussian_conj:
        if (a.c[1] == 0) return std::to_string(a.c[0]);
        return std::to_string(a.c[0]) + "+" + std::to_string(a.c[1]) + "i";
    case ring_kind::matrix_perm_conj: {
        const std::size_t s = static_cast<std::size_t>(matrix_size_);
        std::string out = "[";
        for (std::size_t i = 0; i < s; ++i) {
            if (i) out += ',';
            out += '[';
            for (std::size_t j = 0; j < s; ++j) {
                if (j) out += ',';
                out += std::to_string(a.c[i * s + j]);
            }
            out += ']';
        }
        return out + "]";
    }
    case ring_kind::table: return spec_.table.elements[static_cast<std::size_t>(a.c[0])];
    }
    return "?";
}

ring_element ring_instance::parse_element(std::string_view text) const {
    const std::int64_t m = modulus_;
    if (spec_.kind == ring_kind::table) {
        const auto& names = spec_.table.elements;
        auto it = std::find(names.begin(), names.end(), std::string(text));
        if (it == names.end()) throw parse_error("unknown table element '" + std::string(text) + "'");
        return {{static_cast<std::int64_t>(it - names.begin())}};
    }
    const std::string s = strip_spaces(text);
    switch (spec_.kind) {
    case ring_kind::modular_trivial: return {{reduce(parse_int(s, text), m)}};
    case ring_kind::cyclic_product: {
        auto parts = split_top(unwrap(s, '(', ')', text), ',');
        if (parts.size() != dimension_)
            throw parse_error("expected " + std::to_string(dimension_) + " coordinates in '" + std::string(text) + "'");
        element e;
        for (const auto& p : parts) e.c.push_back(reduce(parse_int(p, text), m));
        return e;
    }
    case ring_kind::gaussian_conj: {
        if (s.empty()) throw parse_error("empty element literal");
        if (s.back() != 'i') return {{reduce(parse_int(s, text), m), 0}};
        const std::string body = s.substr(0, s.size() - 1);
        std::size_t split = std::string::npos;
        for (std::size_t i = body.size(); i-- > 1;)
            if (body[i] == '+' || body[i] == '-') {
                split = i;
                break;
            }
        std::string re = split == std::string::npos ? "0" : body.substr(0, split);
        std::string im = split == std::string::npos ? body : body.substr(split);
        if (im.empty() || im == "+") im = "1";
        if (im == "-") im = "-1";
        return {{reduce(parse_int(re, text), m), reduce(parse_int(im, text), m)}};
    }
    case ring_kind::matrix_perm_conj: {
        auto rows = split_top(unwrap(s, '[', ']', text), ',');
        if (rows.size() != static_cast<std::size_t>(matrix_size_))
            throw parse_error("expected " + std::to_string(matrix_size_) + " rows in '" + std::string(text) + "'");
        element e;
        for (const auto& row : rows) {
            auto cells = split_top(unwrap(row, '[', ']', text), ',');
            if (cells.size() != static_cast<std::size_t>(matrix_size_))
                throw parse_error("expected " + std::to_string(matrix_size_) + " columns in '" + std::string(text) + "'");
            for (const auto& c : cells) e.c.push_back(reduce(parse_int(c, text), m));
        }
        return e;
    }
    case ring_kind::table: break;
    }
    throw parse_error("unsupported ring kind");
}

// --- ring_instance: indexing --------------------------------------------

ring_element ring_instance::element_at(std::uint64_t index) const {
    if (!is_linear()) return {{static_cast<std::int64_t>(index)}};
    element e{std::vector<std::int64_t>(dimension_)};
    const auto m = static_cast<std::uint64_t>(modulus_);
    // Last coordinate varies fastest.
    for (std::size_t i = dimension_; i-- > 0;) {
        e.c[i] = static_cast<std::int64_t>(index % m);
        index /= m;
    }
    return e;
}

std::uint64_t ring_instance::index_of(const element& a) const {
    if (!is_linear()) return static_cast<std::uint64_t>(a.c[0]);
    std::uint64_t idx = 0;
    for (std::size_t i = 0; i < dimension_; ++i) idx = idx * static_cast<std::uint64_t>(modulus_) + static_cast<std::uint64_t>(a.c[i]);
    return idx;
}

ring_element ring_instance::random_element(std::mt19937_64& rng) const {
    // Plain modular reduction of the raw engine output keeps sample streams
    // identical across standard-library implementations.
    if (!is_linear()) return {{static_cast<std::int64_t>(rng() % size_)}};
    element e{std::vector<std::int64_t>(dimension_)};
    for (auto& v : e.c) v = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(modulus_));
    return e;
}

std::vector<ring_element> ring_instance::basis() const {
    if (!is_linear()) throw input_error("basis() requires a linear ring kind");
    std::vector<element> out;
    for (std::size_t i = 0; i < dimension_; ++i) {
        element e{std::vector<std::int64_t>(dimension_, 0)};
        e.c[i] = 1;
        out.push_back(std::move(e));
    }
    return out;
}

ring_element ring_instance::from_coordinates(const zmod::vec& v) const {
    element e;
    e.c.reserve(v.size());
    for (auto x : v) e.c.push_back(reduce(x, modulus_));
    return e;
}

std::optional<ring_element> ring_instance::inverse_of_integer(std::int64_t n) const {
    if (characteristic_ == 1) return zero(); // zero ring: 0 = 1
    auto inv = zmod::inverse(n, characteristic_);
    if (!inv) return std::nullopt;
    return from_integer(*this, integer(*inv));
}

std::string ring_instance::describe() const {
    const std::string m = std::to_string(spec_.m);
    const std::string n = std::to_string(spec_.n);
    switch (spec_.kind) {
    case ring_kind::modular_trivial: return "Z/" + m + " trivial action, n=" + n;
    case ring_kind::cyclic_product:
        return "(Z/" + m + ")^" + std::to_string(spec_.k) + " cyclic shift, n=" + n;
    case ring_kind::gaussian_conj: return "Z[i]/" + m + " conjugation, n=" + n;
    case ring_kind::matrix_perm_conj: {
        std::string sig;
        for (std::size_t i = 0; i < spec_.sigma.size(); ++i) sig += (i ? "," : "") + std::to_string(spec_.sigma[i]);
        return "M_" + std::to_string(matrix_size_) + "(Z/" + m + ") conjugation by sigma=[" + sig + "], n=" + n;
    }
    case ring_kind::table: return "table ring, " + std::to_string(size_) + " elements, n=" + n;
    }
    return "?";
}

// --- validation -----------------------------------------------------------

namespace {

void check_kind_parameters(const ring_spec& s) {
    switch (s.kind) {
    case ring_kind::cyclic_product:
        if (s.n % s.k != 0)
            throw spec_validation_error("k divides n", "k=" + std::to_string(s.k) + ", n=" + std::to_string(s.n));
        break;
    case ring_kind::gaussian_conj:
        if (s.n % 2 != 0) throw spec_validation_error("n even", "n=" + std::to_string(s.n));
        break;
    case ring_kind::matrix_perm_conj: {
        const int ord = permutation_order(s.sigma);
        if (s.n % ord != 0)
            throw spec_validation_error("order of sigma divides n",
                                        "order=" + std::to_string(ord) + ", n=" + std::to_string(s.n));
        break;
    }
    default: break;
    }
}

// Laws quantified over triples supplied by for_each_triple.
template <class Triples>
void check_ring_laws(const ring_instance& r, Triples&& for_each_triple) {
    const auto one = r.one();
    for_each_triple([&](const ring_element& a, const ring_element& b, const ring_element& c) {
        if (r.add(r.add(a, b), c) != r.add(a, r.add(b, c)))
            throw spec_validation_error("additive associativity", witness_of(r, {{"a", &a}, {"b", &b}, {"c", &c}}));
        if (r.add(a, b) != r.add(b, a))
            throw spec_validation_error("additive commutativity", witness_of(r, {{"a", &a}, {"b", &b}}));
        if (r.mul(r.mul(a, b), c) != r.mul(a, r.mul(b, c)))
            throw spec_validation_error("multiplicative associativity",
                                        witness_of(r, {{"a", &a}, {"b", &b}, {"c", &c}}));
        if (r.mul(a, r.add(b, c)) != r.add(r.mul(a, b), r.mul(a, c)))
            throw spec_validation_error("left distributivity", witness_of(r, {{"a", &a}, {"b", &b}, {"c", &c}}));
        if (r.mul(r.add(a, b), c) != r.add(r.mul(a, c), r.mul(b, c)))
            throw spec_validation_error("right distributivity", witness_of(r, {{"a", &a}, {"b", &b}, {"c", &c}}));
        if (r.act(r.add(a, b)) != r.add(r.act(a), r.act(b)))
            throw spec_validation_error("t additive", witness_of(r, {{"a", &a}, {"b", &b}}));
        if (r.act(r.mul(a, b)) != r.mul(r.act(a), r.act(b)))
            throw spec_validation_error("t multiplicative", witness_of(r, {{"a", &a}, {"b", &b}}));
    });
    if (r.act(one) != one) throw spec_validation_error("t(1) = 1", "t(1)=" + r.format(r.act(one)));
}

void check_unary_laws(const ring_instance& r, const std::vector<ring_element>& elems) {
    const auto one = r.one();
    const auto zero = r.zero();
    for (const auto& a : elems) {
        if (r.mul(one, a) != a || r.mul(a, one) != a)
            throw spec_validation_error("multiplicative identity", witness_of(r, {{"a", &a}}));
        if (r.add(a, r.neg(a)) != zero) throw spec_validation_error("additive inverse", witness_of(r, {{"a", &a}}));
        auto tn = a;
        for (int i = 0; i < r.order(); ++i) tn = r.act(tn);
        if (tn != a) throw spec_validation_error("t^n = id", witness_of(r, {{"a", &a}}));
    }
}

template <class Visit>
void random_triples(const ring_instance& r, Visit&& visit) {
    std::mt19937_64 rng(validation_seed);
    for (std::size_t i = 0; i < validation_samples; ++i) {
        auto a = r.random_element(rng);
        auto b = r.random_element(rng);
        auto c = r.random_element(rng);
        visit(a, b, c);
    }
}

} // namespace

ring_instance build_ring_unchecked(const ring_spec& spec) { return ring_instance(spec); }

ring_instance build_ring(const ring_spec& spec) {
    ring_instance r(spec);
    check_kind_parameters(spec);

    if (r.is_linear()) {
        // Product and t are Z/m-(bi)linear by construction, so checking the
        // laws on basis triples covers every element; random triples
        // cross-check the element-level formulas.
        const auto b = r.basis();
        check_ring_laws(r, [&](auto&& visit) {
            for (const auto& x : b)
                for (const auto& y : b)
                    for (const auto& z : b) visit(x, y, z);
        });
        check_ring_laws(r, [&](auto&& visit) { random_triples(r, visit); });
        if (r.size() <= exhaustive_validation_limit) {
            check_unary_laws(r, enumerate(r, exhaustive_validation_limit));
        } else {
            std::vector<ring_element> sample;
            std::mt19937_64 rng(validation_seed);
            for (std::size_t i = 0; i < validation_samples; ++i) sample.push_back(r.random_element(rng));
            check_unary_laws(r, b);
            check_unary_laws(r, sample);
        }
    } else {
        const auto all = enumerate(r, r.size());
        if (r.size() <= table_total_validation_limit) {
            check_ring_laws(r, [&](auto&& visit) {
                for (const auto& x : all)
                    for (const auto& y : all)
                        for (const auto& z : all) visit(x, y, z);
            });
        } else {
            check_ring_laws(r, [&](auto&& visit) { random_triples(r, visit); });
        }
        check_unary_laws(r, all);
    }
    return r;
}

std::vector<ring_element> enumerate(const ring_instance& ring, std::uint64_t cap) {
    if (ring.size() > cap)
        throw too_large("ring has " + std::to_string(ring.size()) + " elements, enumeration cap is " +
                        std::to_string(cap) + " (raise --max-enumerate)");
    std::vector<ring_element> out;
    out.reserve(ring.size());
    for (std::uint64_t i = 0; i < ring.size(); ++i) out.push_back(ring.element_at(i));
    return out;
}

std::optional<ring_element> find_norm_one_linear(const ring_instance& ring) {
    if (!ring.is_linear()) throw input_error("find_norm_one_linear requires a linear ring kind");
    const auto norm = ring.linear_matrix([&](const ring_element& e) { return op_N(ring, e); });
    const auto form = zmod::diagonalize(norm, ring.modulus());
    auto sol = zmod::solve(form, ring.one().c);
    if (!sol) return std::nullopt;
    auto x = ring.from_coordinates(*sol);
    if (op_N(ring, x) != ring.one()) throw consistency_error("linear solve returned x with N(x) != 1");
    return x;
}

std::optional<ring_element> find_norm_one_exhaustive(const ring_instance& ring, std::uint64_t cap) {
    const auto one = ring.one();
    for (std::uint64_t i = 0; i < ring.size(); ++i) {
        if (i == cap) throw too_large("norm-one search exceeded the enumeration cap " + std::to_string(cap));
        auto x = ring.element_at(i);
        if (op_N(ring, x) == one) return x;
    }
    return std::nullopt;
}

std::optional<ring_element> find_norm_one(const ring_instance& ring, std::uint64_t cap) {
    return ring.is_linear() ? find_norm_one_linear(ring) : find_norm_one_exhaustive(ring, cap);
}

} // namespace cychom
