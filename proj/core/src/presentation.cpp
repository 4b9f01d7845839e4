#include "narop/presentation.hpp"

#include <stdexcept>

#include "narop/errors.hpp"

namespace narop {

std::string family_to_string(Family f) {
    return f == Family::Total ? "total" : "partial";
}

Family family_from_string(const std::string& s) {
    if (s == "total" || s == "Total") return Family::Total;
    if (s == "partial" || s == "Partial") return Family::Partial;
    throw parse_error("unknown family '" + s + "' (expected total or partial)");
}

std::string OperadPresentation::to_string() const {
    return family_to_string(family) + "(n=" + std::to_string(n) + ", d=" + std::to_string(d) + ")";
}

OperadPresentation dual_presentation(const OperadPresentation& p) {
    return OperadPresentation{p.family == Family::Total ? Family::Partial : Family::Total, p.n,
                              -p.d + p.n - 2};
}

std::vector<TreeVector> relation_elements(const OperadPresentation& p) {
    if (p.n < 2) throw std::invalid_argument("presentation arity must be >= 2");
    const PlanarTree mu = PlanarTree::corolla(p.n);
    const DegreeParity parity = p.parity();
    // mu o_i mu for i = 1..n, with the graft sign folded in (it is +1 for
    // every i under the preorder convention: the host root precedes all
    // leaves).
    std::vector<SignedTree> comp;
    comp.reserve(static_cast<std::size_t>(p.n));
    for (long i = 1; i <= p.n; ++i) comp.push_back(graft(mu, i - 1, mu, parity));

    std::vector<TreeVector> gens;
    if (p.family == Family::Total) {
        for (long i = 1; i <= p.n - 1; ++i) {
            TreeVector r;
            r.add(comp[0].tree, Rational(comp[0].sign));
            r.add(comp[static_cast<std::size_t>(i)].tree,
                  Rational(-comp[static_cast<std::size_t>(i)].sign));
            gens.push_back(std::move(r));
        }
    } else {
        TreeVector r;
        for (long i = 1; i <= p.n; ++i) {
            const long exponent = (i + 1) * (p.n - 1);
            const int c = (exponent % 2 == 0) ? 1 : -1;
            r.add(comp[static_cast<std::size_t>(i - 1)].tree,
                  Rational(c * comp[static_cast<std::size_t>(i - 1)].sign));
        }
        gens.push_back(std::move(r));
    }
    return gens;
}

} // namespace narop
