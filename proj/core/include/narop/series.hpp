#ifndef NAROP_SERIES_HPP
#define NAROP_SERIES_HPP

#include <gmpxx.h>

#include <functional>
#include <string>
#include <vector>

namespace narop {

using Integer = mpz_class;
using Rational = mpq_class;

/// Truncated formal power series with exact rational coefficients.
///
/// A series of order N stores the coefficients of t^0 .. t^N; everything
/// beyond t^N is unknown (not zero).  Binary operations truncate to the
/// smaller operand order.  Values are immutable after construction and
/// safe to share across threads.
class ExactSeries {
public:
    /// Zero series of the given truncation order.
    explicit ExactSeries(long order = 0);

    /// Takes ownership of a full coefficient vector; order = size - 1.
    explicit ExactSeries(std::vector<Rational> coefficients);

    /// The series t, truncated at `order`.
    static ExactSeries identity(long order);

    /// c * t^exponent, truncated at `order` (exponent <= order).
    static ExactSeries monomial(const Rational& c, long exponent, long order);

    long order() const { return static_cast<long>(coeffs_.size()) - 1; }
    const Rational& coefficient(long exponent) const;
    const std::vector<Rational>& coefficients() const { return coeffs_; }

    bool is_zero() const;
    /// True when every coefficient has denominator 1.
    bool is_integral() const;
    /// Compositionally invertible: zero constant term, nonzero linear term.
    bool is_invertible() const;
    /// Copy truncated (or zero-padded, treating the input as an exact
    /// polynomial) to the given order.
    ExactSeries with_order(long order) const;

    friend bool operator==(const ExactSeries&, const ExactSeries&) = default;

private:
    std::vector<Rational> coeffs_;
};

/// t - t^n + t^(2n-1); the compositional inverses of these series drive
/// the whole coefficient-sign analysis.
struct SparseTrinomial {
    long n; // arity, >= 2

    ExactSeries expand(long order) const;
};

ExactSeries add(const ExactSeries& a, const ExactSeries& b);
ExactSeries sub(const ExactSeries& a, const ExactSeries& b);
ExactSeries negate(const ExactSeries& a);

/// Cauchy product truncated at min(orders).
ExactSeries mul(const ExactSeries& a, const ExactSeries& b);

/// f(g(t)) truncated at min(orders), by Horner evaluation; rejects g(0) != 0.
ExactSeries compose(const ExactSeries& f, const ExactSeries& g);

/// Compositional inverse of g, i.e. the f with compose(g, f) = t up to the
/// order.  Requires g(0) = 0 and linear coefficient exactly 1.  Integer
/// input takes an all-integer path; the result is then integral as well.
ExactSeries invert(const ExactSeries& g);
ExactSeries invert(const SparseTrinomial& g, long order);

/// Single coefficient m of the compositional inverse via the residue
/// formula (1/m) [w^(m-1)] (w/g(w))^m, computed without running the
/// term-by-term reversion.
Rational lagrange_coefficient(const ExactSeries& g, long m);
Rational lagrange_coefficient(const SparseTrinomial& g, long m);

/// Streams the inverse coefficients f_1, f_2, ... of invert(g) in degree
/// order up to `bound`, without materializing the whole series up front.
/// `visit(degree, value)` returning false stops the stream.  This is the
/// engine behind the long coefficient-sign searches.
void stream_inverse_coefficients(const SparseTrinomial& g, long bound,
                                 const std::function<bool(long, const Integer&)>& visit);

/// -g(-t): the series transform of the operadic (de)suspension.
ExactSeries desuspend(const ExactSeries& g);

enum class DegreeParity { Even, Odd };

/// Generating series of the totally associative family in closed form:
/// t + t^n + t^(2n-1) + t^(3n-2) + ...   for even generator degree,
/// t - t^n + t^(2n-1)                    for odd generator degree,
/// truncated at `order`.
ExactSeries tass_closed_form(long n, DegreeParity parity, long order);

/// Multiplicative helpers behind the residue formula; exposed for reuse
/// and direct testing.
ExactSeries reciprocal(const ExactSeries& u, long order); // requires u(0) != 0
ExactSeries pow_trunc(const ExactSeries& u, long e, long order);

/// Human-readable polynomial form, e.g. "t - t^4 + 3 t^7 + O(t^8)".
std::string to_string(const ExactSeries& s);

/// Parses the polynomial form (integer or rational coefficients, "^"
/// exponents, optional "+ O(t^k)" tail fixing the order).
ExactSeries parse_series(const std::string& text);

/// {"order": N, "coeffs": ["num/den", ...]} with exact decimal strings.
std::string to_json_string(const ExactSeries& s);
ExactSeries series_from_json(const std::string& json_text);

std::string rational_to_string(const Rational& q);
Rational rational_from_string(const std::string& text);

} // namespace narop

#endif
