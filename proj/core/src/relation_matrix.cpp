#include "narop/relation_matrix.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "narop/errors.hpp"

namespace narop {

namespace {

constexpr std::uint8_t kLeaf = 0;
constexpr std::uint8_t kGen = 1;  // generator vertex, arity n
constexpr std::uint8_t kHole = 2; // placeholder vertex, arity 2n-1

// Emits every two-letter skeleton code (preorder over {0,1,2}) with
// exactly `gens` generator vertices and one placeholder, in lexicographic
// order.  `open` counts unfilled child slots.
template <class Sink>
void gen_skeletons(long n, long gens, long holes, long open, std::vector<std::uint8_t>& cur,
                   Sink&& sink) {
    if (open == 0) {
        sink(cur);
        return;
    }
    if (gens + holes == 0 || open >= 2) {
        cur.push_back(kLeaf);
        gen_skeletons(n, gens, holes, open - 1, cur, sink);
        cur.pop_back();
    }
    if (gens > 0) {
        cur.push_back(kGen);
        gen_skeletons(n, gens - 1, holes, open + n - 1, cur, sink);
        cur.pop_back();
    }
    if (holes > 0) {
        cur.push_back(kHole);
        gen_skeletons(n, gens, holes - 1, open + 2 * n - 2, cur, sink);
        cur.pop_back();
    }
}

struct Node {
    std::uint8_t label;
    long id = -1; // natural-order index of an internal vertex
    std::vector<Node> children;
};

Node parse_tree(const std::vector<std::uint8_t>& code, long n, std::size_t& pos) {
    Node nd;
    nd.label = code[pos++];
    const long k = nd.label == kGen ? n : nd.label == kHole ? 2 * n - 1 : 0;
    nd.children.reserve(static_cast<std::size_t>(k));
    for (long i = 0; i < k; ++i) nd.children.push_back(parse_tree(code, n, pos));
    return nd;
}

// Natural order: skeleton preorder, with the placeholder reserving two
// consecutive indices for the (root, inner vertex) of the substituted
// relation term.
void assign_natural_ids(Node& nd, long& counter) {
    if (nd.label == kGen) {
        nd.id = counter++;
    } else if (nd.label == kHole) {
        nd.id = counter;
        counter += 2;
    }
    for (auto& c : nd.children) assign_natural_ids(c, counter);
}

// Substitutes `term` (an n-ary tree with exactly two internal vertices
// and arity 2n-1) for the placeholder: the term's leaves receive the
// placeholder's child subtrees left to right.
Node substitute(const Node& nd, const Node& term) {
    if (nd.label == kLeaf) return Node{kLeaf, -1, {}};
    if (nd.label == kGen) {
        Node out{kGen, nd.id, {}};
        out.children.reserve(nd.children.size());
        for (const auto& c : nd.children) out.children.push_back(substitute(c, term));
        return out;
    }
    // Placeholder: clone the term shape, handing out ids nd.id (root) and
    // nd.id + 1 (inner vertex) and splicing in the substituted children.
    std::size_t next_child = 0;
    long next_id = nd.id;
    auto clone = [&](const Node& t, auto&& self) -> Node {
        if (t.label == kLeaf) return substitute(nd.children[next_child++], term);
        Node out{kGen, next_id++, {}};
        out.children.reserve(t.children.size());
        for (const auto& c : t.children) out.children.push_back(self(c, self));
        return out;
    };
    return clone(term, clone);
}

void collect(const Node& nd, std::vector<std::uint8_t>& code, std::vector<long>& ids) {
    if (nd.label == kLeaf) {
        code.push_back(0);
        return;
    }
    code.push_back(1);
    ids.push_back(nd.id);
    for (const auto& c : nd.children) collect(c, code, ids);
}

int inversion_sign(const std::vector<long>& ids) {
    long inv = 0;
    for (std::size_t i = 0; i < ids.size(); ++i)
        for (std::size_t j = i + 1; j < ids.size(); ++j)
            if (ids[i] > ids[j]) ++inv;
    return (inv % 2 == 0) ? 1 : -1;
}

} // namespace

SparseIntMatrix relation_span(const OperadPresentation& pres, long p,
                              const ResourceLimits& limits) {
    if (p < 2) throw std::invalid_argument("relation span needs p >= 2");
    const long n = pres.n;
    const DegreeParity parity = pres.parity();

    const std::vector<PlanarTree> basis = enumerate_trees(n, p, limits);
    std::unordered_map<std::string, long> column;
    column.reserve(basis.size() * 2);
    for (std::size_t i = 0; i < basis.size(); ++i)
        column.emplace(basis[i].code_string(), static_cast<long>(i));

    // Relation generators as (term node tree, coefficient) lists.
    const std::vector<TreeVector> gens = relation_elements(pres);
    struct Term {
        Node shape;
        Integer coefficient;
    };
    std::vector<std::vector<Term>> gen_terms;
    for (const auto& g : gens) {
        std::vector<Term> terms;
        Integer denom_lcm(1);
        for (const auto& [tree, c] : g.terms()) denom_lcm = lcm(denom_lcm, Integer(c.get_den()));
        for (const auto& [tree, c] : g.terms()) {
            std::size_t pos = 0;
            const Rational scaled = c * denom_lcm;
            terms.push_back(Term{parse_tree(tree.code(), n, pos), Integer(scaled.get_num())});
        }
        gen_terms.push_back(std::move(terms));
    }

    SparseIntMatrix m;
    m.columns = static_cast<long>(basis.size());
    long entries = 0;
    std::vector<std::uint8_t> cur;
    gen_skeletons(n, p - 2, 1, 1, cur, [&](const std::vector<std::uint8_t>& skel) {
        std::size_t pos = 0;
        Node root = parse_tree(skel, n, pos);
        long counter = 0;
        assign_natural_ids(root, counter);
        for (const auto& terms : gen_terms) {
            std::map<long, Integer> row;
            for (const auto& term : terms) {
                Node composed = substitute(root, term.shape);
                std::vector<std::uint8_t> code;
                std::vector<long> ids;
                code.reserve(skel.size() + 2 * static_cast<std::size_t>(n) - 2);
                ids.reserve(static_cast<std::size_t>(p));
                collect(composed, code, ids);
                const int sign = parity == DegreeParity::Odd ? inversion_sign(ids) : 1;
                std::string key;
                key.reserve(code.size());
                for (auto b : code) key.push_back(b ? '1' : '0');
                const long col = column.at(key);
                row[col] += sign * term.coefficient;
            }
            std::vector<std::pair<long, Integer>> r;
            r.reserve(row.size());
            for (auto& [col, v] : row)
                if (sgn(v) != 0) r.emplace_back(col, std::move(v));
            entries += static_cast<long>(r.size());
            if (entries > limits.max_matrix_entries)
                throw resource_limit_error(
                    "relation matrix exceeds the cap of " +
                    std::to_string(limits.max_matrix_entries) + " entries");
            m.rows.push_back(std::move(r));
        }
    });
    return m;
}

} // namespace narop
