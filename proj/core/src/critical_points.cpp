#include "narop/critical_points.hpp"

#include <json.hpp>

#include <stdexcept>

namespace narop {

std::string QuadraticRoot::to_string() const {
    if (is_rational()) return rational_to_string(rational_part);
    // Both parts share the denominator 2(2n-1); print the textbook form
    // (n +- sqrt(D)) / (2(2n-1)) by clearing it.
    const Integer den = rational_part.get_den();
    const Rational num_part = rational_part * den;
    const Rational surd_part = surd_coefficient * den;
    std::string s = "(" + num_part.get_str();
    s += sgn(surd_part) < 0 ? " - " : " + ";
    const Rational a = abs(surd_part);
    if (a != 1) s += a.get_str() + "*";
    s += "sqrt(" + radicand.get_str() + "))/" + den.get_str();
    return s;
}

CriticalPointReport derivative_roots(long n) {
    if (n < 2) throw std::invalid_argument("arity must be >= 2");
    CriticalPointReport report;
    report.n = n;
    report.discriminant = Integer(n) * n - 8 * n + 4;
    if (sgn(report.discriminant) >= 0) {
        report.has_real_critical_point = true;
        const Integer two_a = 2 * (2 * Integer(n) - 1);
        Integer root;
        mpz_sqrt(root.get_mpz_t(), report.discriminant.get_mpz_t());
        const bool perfect_square = root * root == report.discriminant;
        for (int s : {+1, -1}) { // larger root first
            QuadraticRoot w;
            if (perfect_square) {
                w.rational_part = Rational(Integer(n) + s * root, two_a);
                w.rational_part.canonicalize();
            } else {
                w.rational_part = Rational(Integer(n), two_a);
                w.rational_part.canonicalize();
                w.surd_coefficient = Rational(Integer(s), two_a);
                w.surd_coefficient.canonicalize();
                w.radicand = report.discriminant;
            }
            report.real_w_roots.push_back(std::move(w));
            if (sgn(report.discriminant) == 0) break; // double root
        }
    }
    report.theorem_applies = !report.has_real_critical_point;
    return report;
}

std::string CriticalPointReport::to_json_string() const {
    nlohmann::json j;
    j["n"] = n;
    j["discriminant"] = discriminant.get_str();
    auto& roots = j["real_w_roots"] = nlohmann::json::array();
    for (const auto& w : real_w_roots) roots.push_back(w.to_string());
    j["theorem_applies"] = theorem_applies;
    return j.dump();
}

std::string koszulity_verdict_analytic(long n, DegreeParity parity) {
    if (parity != DegreeParity::Odd)
        throw std::invalid_argument("analytic verdict is defined for odd generator degree only");
    const CriticalPointReport report = derivative_roots(n);
    if (report.theorem_applies) return "NotKoszul (real-critical-point criterion)";
    return "Inconclusive - fall back to coefficient search";
}

} // namespace narop
