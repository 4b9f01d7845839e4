#ifndef NAROP_PRESENTATION_HPP
#define NAROP_PRESENTATION_HPP

#include <string>
#include <vector>

#include "narop/trees.hpp"

namespace narop {

/// The two quadratic relation shapes on one n-ary generator:
/// Total   — all placements of the iterated product agree,
/// Partial — the signed sum of all placements vanishes.
enum class Family { Total, Partial };

std::string family_to_string(Family f);
Family family_from_string(const std::string& s);

/// Identifies the operad of degree-d totally or partially associative
/// n-ary algebras.  Dimensions depend only on the parity of d, but d is
/// kept exact so that duality arithmetic stays precise.
struct OperadPresentation {
    Family family = Family::Total;
    long n = 2;  // generator arity, >= 2
    long d = 0;  // generator degree

    DegreeParity parity() const {
        return (d % 2 == 0) ? DegreeParity::Even : DegreeParity::Odd;
    }

    /// e.g. "partial(n=3, d=0)"
    std::string to_string() const;

    bool operator==(const OperadPresentation&) const = default;
};

/// Quadratic (Koszul) dual at presentation level: swaps the family and
/// maps d to -d + n - 2.  An involution.
OperadPresentation dual_presentation(const OperadPresentation& p);

/// The quadratic relation generators as tree vectors at p = 2 (arity
/// 2n-1).  Total: the n-1 differences (mu o_1 mu) - (mu o_{i+1} mu),
/// i = 1..n-1.  Partial: the single sum over i = 1..n of
/// (-1)^((i+1)(n-1)) (mu o_i mu).
std::vector<TreeVector> relation_elements(const OperadPresentation& p);

} // namespace narop

#endif
