#ifndef NAROP_TREES_HPP
#define NAROP_TREES_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "narop/limits.hpp"
#include "narop/series.hpp"

namespace narop {

/// Planar rooted tree whose internal vertices all have arity n, stored as
/// its preorder code: 1 = internal vertex, 0 = leaf, root first, children
/// left to right.  A tree with p internal vertices has p(n-1) + 1 leaves.
/// These are the basis monomials of the free operad on one n-ary
/// generator.  Ordering compares (n, code) lexicographically; codes are
/// prefix-free, so this is a total order on each (n, p) component.
class PlanarTree {
public:
    PlanarTree(long n, std::vector<std::uint8_t> code); // validates the code
    static PlanarTree leaf(long n);
    static PlanarTree corolla(long n);

    long n() const { return n_; }
    long internal_count() const; // p
    long arity() const;          // leaf count, p(n-1) + 1
    const std::vector<std::uint8_t>& code() const { return code_; }

    std::string code_string() const; // e.g. "11000"
    static PlanarTree from_code_string(long n, const std::string& s);
    std::string bracket() const;     // nested form, e.g. "((··)·)"

    auto operator<=>(const PlanarTree&) const = default;

private:
    long n_;
    std::vector<std::uint8_t> code_;
};

/// Number of planar n-ary trees with p internal vertices:
/// C(np, p) / (p(n-1) + 1).
Integer fuss_catalan(long n, long p);

/// All planar n-ary trees with p internal vertices, in ascending code
/// order.  Throws resource_limit_error when the count would exceed
/// limits.max_trees.
std::vector<PlanarTree> enumerate_trees(long n, long p,
                                        const ResourceLimits& limits = {});

struct SignedTree {
    PlanarTree tree;
    int sign; // +1 or -1
};

/// Partial composition: replaces leaf `leaf_index` (0-based, left to
/// right) of `host` by `guest`.  The attached sign implements the Koszul
/// sign rule for generators of odd degree: order the internal vertices of
/// the result naturally (host vertices in host preorder, then guest
/// vertices in guest preorder) and take the parity of the permutation
/// sorting that list into the composed tree's preorder.  Since both
/// blocks are internally sorted, this is (-1) to the (number of host
/// internal vertices after the grafted leaf in preorder) * (guest
/// internal vertex count).  Even degree always gives +1.
SignedTree graft(const PlanarTree& host, long leaf_index,
                 const PlanarTree& guest, DegreeParity parity);

/// Sparse exact-rational linear combination of planar trees, all sharing
/// one (n, p) component.  Zero coefficients are never stored.
class TreeVector {
public:
    TreeVector() = default;

    /// Accumulates c * t; drops the term if the total cancels to zero.
    void add(const PlanarTree& t, const Rational& c);

    const std::map<PlanarTree, Rational>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    bool operator==(const TreeVector&) const = default;

private:
    std::map<PlanarTree, Rational> terms_;
};

} // namespace narop

#endif
