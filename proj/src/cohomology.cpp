#include "cychom/cohomology.hpp"

#include "cychom/errors.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace cychom {

std::string_view to_string(additive_op op) { return op == additive_op::T ? "T" : "N"; }

ring_element apply_op(const ring_instance& ring, additive_op op, const ring_element& a) {
    return op == additive_op::T ? op_T(ring, a) : op_N(ring, a);
}

bool subgroup::contains(const ring_instance& ring, const ring_element& e) const {
    if (!members) throw too_large("subgroup membership needs an explicit member list");
    return std::binary_search(members->begin(), members->end(), e,
                              [&](const ring_element& a, const ring_element& b) {
                                  return ring.index_of(a) < ring.index_of(b);
                              });
}

namespace {

void sort_by_index(const ring_instance& ring, std::vector<ring_element>& v) {
    std::sort(v.begin(), v.end(),
              [&](const ring_element& a, const ring_element& b) { return ring.index_of(a) < ring.index_of(b); });
}

zmod::matrix op_matrix(const ring_instance& ring, additive_op op) {
    return ring.linear_matrix([&](const ring_element& e) { return apply_op(ring, op, e); });
}

bool use_linear(const ring_instance& ring, strategy how) {
    if (how == strategy::linear && !ring.is_linear())
        throw input_error("linear strategy requested for a table ring");
    return how == strategy::linear || (how == strategy::automatic && ring.is_linear());
}

} // namespace

std::vector<ring_element> span(const ring_instance& ring, const std::vector<ring_element>& gens, std::uint64_t cap) {
    std::unordered_set<std::uint64_t> seen;
    std::vector<ring_element> out;
    std::deque<ring_element> frontier;
    const auto zero = ring.zero();
    seen.insert(ring.index_of(zero));
    out.push_back(zero);
    frontier.push_back(zero);
    while (!frontier.empty()) {
        auto cur = std::move(frontier.front());
        frontier.pop_front();
        for (const auto& g : gens) {
            auto next = ring.add(cur, g);
            if (!seen.insert(ring.index_of(next)).second) continue;
            if (out.size() >= cap)
                throw too_large("subgroup exceeds the enumeration cap " + std::to_string(cap));
            out.push_back(next);
            frontier.push_back(std::move(next));
        }
    }
    sort_by_index(ring, out);
    return out;
}

subgroup kernel(const ring_instance& ring, additive_op op, std::uint64_t cap, strategy how) {
    subgroup g;
    if (use_linear(ring, how)) {
        const auto form = zmod::diagonalize(op_matrix(ring, op), ring.modulus());
        for (const auto& kg : zmod::kernel_generators(form)) g.generators.push_back(ring.from_coordinates(kg.v));
        auto order = zmod::kernel_order(form);
        if (!order) throw too_large("kernel order overflows 64 bits");
        g.order = *order;
        g.method = "linear";
        if (g.order <= cap) g.members = span(ring, g.generators, cap);
        return g;
    }
    const auto all = enumerate(ring, cap);
    const auto zero = ring.zero();
    std::vector<ring_element> members;
    for (const auto& a : all)
        if (apply_op(ring, op, a) == zero) members.push_back(a);
    g.generators = members;
    g.order = members.size();
    g.members = std::move(members);
    g.method = "enumeration";
    return g;
}

subgroup image(const ring_instance& ring, additive_op op, std::uint64_t cap, strategy how) {
    subgroup g;
    if (use_linear(ring, how)) {
        const auto form = zmod::diagonalize(op_matrix(ring, op), ring.modulus());
        for (const auto& b : ring.basis()) {
            auto img = apply_op(ring, op, b);
            if (img != ring.zero()) g.generators.push_back(std::move(img));
        }
        auto order = zmod::image_order(form);
        if (!order) throw too_large("image order overflows 64 bits");
        g.order = *order;
        g.method = "linear";
        if (g.order <= cap) g.members = span(ring, g.generators, cap);
        return g;
    }
    const auto all = enumerate(ring, cap);
    std::unordered_set<std::uint64_t> seen;
    std::vector<ring_element> members;
    for (const auto& a : all) {
        auto img = apply_op(ring, op, a);
        if (seen.insert(ring.index_of(img)).second) members.push_back(std::move(img));
    }
    sort_by_index(ring, members);
    g.generators = members;
    g.order = members.size();
    g.members = std::move(members);
    g.method = "enumeration";
    return g;
}

namespace {

// ker(outer) / im(inner), after checking im(inner) inside ker(outer).
quotient_summary quotient(const ring_instance& ring, additive_op outer, additive_op inner, std::uint64_t cap) {
    const auto ker = kernel(ring, outer, cap);
    const auto img = image(ring, inner, cap);
    const auto zero = ring.zero();
    for (const auto& g : img.generators)
        if (apply_op(ring, outer, g) != zero)
            throw consistency_error("im " + std::string(to_string(inner)) + " not contained in ker " +
                                    std::string(to_string(outer)) + ": " + ring.format(g));
    if (img.order == 0 || ker.order % img.order != 0)
        throw consistency_error("|im| does not divide |ker|");

    quotient_summary q;
    q.order = ker.order / img.order;
    if (q.order == 1) {
        q.census = {{1, 1}};
        return q;
    }
    if (!ker.members || !img.members)
        throw too_large("quotient of order " + std::to_string(q.order) +
                        " needs kernel enumeration beyond the cap " + std::to_string(cap));

    std::unordered_set<std::uint64_t> in_image;
    for (const auto& e : *img.members) in_image.insert(ring.index_of(e));
    std::map<std::uint64_t, std::uint64_t> element_counts;
    for (const auto& v : *ker.members) {
        std::uint64_t k = 1;
        auto acc = v;
        while (!in_image.contains(ring.index_of(acc))) {
            acc = ring.add(acc, v);
            ++k;
        }
        ++element_counts[k];
    }
    // Each coset contributes |im| kernel elements of the same order.
    for (const auto& [ord, count] : element_counts) q.census[ord] = count / img.order;
    return q;
}

} // namespace

tate_report tate_quotients(const ring_instance& ring, std::uint64_t cap) {
    tate_report rep;
    rep.even = quotient(ring, additive_op::T, additive_op::N, cap);
    rep.odd = quotient(ring, additive_op::N, additive_op::T, cap);
    rep.norm_one = find_norm_one(ring, cap);
    rep.invariants_order = kernel(ring, additive_op::T, cap).order;
    rep.coinvariants_order = ring.size() / image(ring, additive_op::T, cap).order;
    return rep;
}

} // namespace cychom
