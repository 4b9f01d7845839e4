#ifndef NAROP_CRITICAL_POINTS_HPP
#define NAROP_CRITICAL_POINTS_HPP

#include <string>
#include <vector>

#include "narop/series.hpp"

namespace narop {

/// One root of (2n-1) w^2 - n w + 1 = 0, kept exact: the value is
/// rational_part + surd_coefficient * sqrt(radicand).  Rational roots have
/// surd_coefficient = 0 and radicand = 0.
struct QuadraticRoot {
    Rational rational_part;
    Rational surd_coefficient;
    Integer radicand;

    bool is_rational() const { return sgn(surd_coefficient) == 0; }
    std::string to_string() const;
};

/// Outcome of the real-critical-point analysis of g(z) = z - z^n + z^(2n-1):
/// under w = z^(n-1), critical points correspond to real roots of
/// 1 - n w + (2n-1) w^2, whose discriminant is n^2 - 8n + 4.
struct CriticalPointReport {
    long n = 0;
    Integer discriminant;               // n^2 - 8n + 4
    std::vector<QuadraticRoot> real_w_roots; // empty iff discriminant < 0
    bool has_real_critical_point = false;
    bool theorem_applies = false;       // criterion proves a negative inverse coefficient

    std::string to_json_string() const;
};

/// Exact discriminant and real w-roots for arity n >= 2.  When roots exist
/// they are both positive, so real critical points z = w^(1/(n-1)) exist
/// exactly when the discriminant is >= 0.
CriticalPointReport derivative_roots(long n);

/// For odd generator degree only: "NotKoszul (real-critical-point
/// criterion)" when the analysis applies (n <= 7), otherwise
/// "Inconclusive - fall back to coefficient search".
std::string koszulity_verdict_analytic(long n, DegreeParity parity);

} // namespace narop

#endif
