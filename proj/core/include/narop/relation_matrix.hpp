#ifndef NAROP_RELATION_MATRIX_HPP
#define NAROP_RELATION_MATRIX_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "narop/limits.hpp"
#include "narop/presentation.hpp"

namespace narop {

/// Sparse integer matrix: one sorted (column, value) list per row.
/// Relation rows have rational entries in principle, but every row is
/// scaled integral on construction (harmless for rank).
struct SparseIntMatrix {
    long columns = 0;
    std::vector<std::vector<std::pair<long, Integer>>> rows;

    long entry_count() const {
        long c = 0;
        for (const auto& r : rows) c += static_cast<long>(r.size());
        return c;
    }
};

/// Rows spanning the arity-<p> component of the relation ideal, in the
/// basis enumerate_trees(n, p) (column i = i-th tree in canonical order).
///
/// Construction: enumerate every planar tree over the two-letter alphabet
/// { generator of arity n, placeholder of arity 2n-1 } containing exactly
/// one placeholder and p-2 generator vertices; substitute each relation
/// generator for the placeholder, expanding each term with its Koszul
/// sign (parity of the inversion count between the natural vertex order
/// — skeleton preorder with the placeholder expanded in place — and the
/// composed tree's preorder; +1 throughout for even degree).
///
/// Requires p >= 2.  Throws resource_limit_error when the tree basis or
/// the entry count would exceed the configured caps.
SparseIntMatrix relation_span(const OperadPresentation& pres, long p,
                              const ResourceLimits& limits = {});

} // namespace narop

#endif
