#include "narop/series.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "narop/errors.hpp"

namespace narop {

namespace {

const Rational kZero(0);

long min_order(const ExactSeries& a, const ExactSeries& b) {
    return std::min(a.order(), b.order());
}

} // namespace

ExactSeries::ExactSeries(long order) {
    if (order < 0) throw std::invalid_argument("series order must be >= 0");
    coeffs_.resize(static_cast<std::size_t>(order) + 1, kZero);
}

ExactSeries::ExactSeries(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
    if (coeffs_.empty()) throw std::invalid_argument("series needs at least the t^0 coefficient");
}

ExactSeries ExactSeries::identity(long order) {
    if (order < 1) throw std::invalid_argument("identity series needs order >= 1");
    ExactSeries s(order);
    s.coeffs_[1] = 1;
    return s;
}

ExactSeries ExactSeries::monomial(const Rational& c, long exponent, long order) {
    if (exponent < 0 || exponent > order)
        throw std::invalid_argument("monomial exponent outside 0..order");
    ExactSeries s(order);
    s.coeffs_[static_cast<std::size_t>(exponent)] = c;
    return s;
}

const Rational& ExactSeries::coefficient(long exponent) const {
    if (exponent < 0 || exponent > order())
        throw std::out_of_range("coefficient index beyond truncation order");
    return coeffs_[static_cast<std::size_t>(exponent)];
}

bool ExactSeries::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const Rational& c) { return sgn(c) == 0; });
}

bool ExactSeries::is_integral() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const Rational& c) { return c.get_den() == 1; });
}

bool ExactSeries::is_invertible() const {
    return order() >= 1 && sgn(coeffs_[0]) == 0 && sgn(coeffs_[1]) != 0;
}

ExactSeries ExactSeries::with_order(long order) const {
    if (order < 0) throw std::invalid_argument("series order must be >= 0");
    std::vector<Rational> c(static_cast<std::size_t>(order) + 1, kZero);
    const std::size_t keep = std::min(c.size(), coeffs_.size());
    std::copy(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(keep), c.begin());
    return ExactSeries(std::move(c));
}

ExactSeries SparseTrinomial::expand(long order) const {
    if (n < 2) throw std::invalid_argument("trinomial arity must be >= 2");
    ExactSeries s(order);
    std::vector<Rational> c(static_cast<std::size_t>(order) + 1, kZero);
    if (order >= 1) c[1] = 1;
    if (order >= n) c[static_cast<std::size_t>(n)] = -1;
    if (order >= 2 * n - 1) c[static_cast<std::size_t>(2 * n - 1)] = 1;
    return ExactSeries(std::move(c));
}

ExactSeries add(const ExactSeries& a, const ExactSeries& b) {
    const long n = min_order(a, b);
    std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
    for (long i = 0; i <= n; ++i) c[static_cast<std::size_t>(i)] = a.coefficient(i) + b.coefficient(i);
    return ExactSeries(std::move(c));
}

ExactSeries sub(const ExactSeries& a, const ExactSeries& b) {
    const long n = min_order(a, b);
    std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
    for (long i = 0; i <= n; ++i) c[static_cast<std::size_t>(i)] = a.coefficient(i) - b.coefficient(i);
    return ExactSeries(std::move(c));
}

ExactSeries negate(const ExactSeries& a) {
    std::vector<Rational> c(a.coefficients());
    for (auto& x : c) x = -x;
    return ExactSeries(std::move(c));
}

ExactSeries mul(const ExactSeries& a, const ExactSeries& b) {
    const long n = min_order(a, b);
    std::vector<Rational> c(static_cast<std::size_t>(n) + 1, kZero);
    for (long i = 0; i <= n; ++i) {
        const Rational& ai = a.coefficient(i);
        if (sgn(ai) == 0) continue;
        for (long j = 0; i + j <= n; ++j) {
            const Rational& bj = b.coefficient(j);
            if (sgn(bj) == 0) continue;
            c[static_cast<std::size_t>(i + j)] += ai * bj;
        }
    }
    return ExactSeries(std::move(c));
}

ExactSeries compose(const ExactSeries& f, const ExactSeries& g) {
    if (sgn(g.coefficient(0)) != 0)
        throw std::domain_error("compose: inner series must have zero constant term");
    const long n = min_order(f, g);
    const ExactSeries gn = g.with_order(n);
    ExactSeries r(n);
    for (long k = std::min(f.order(), n); k >= 0; --k) {
        r = mul(r, gn);
        std::vector<Rational> c(r.coefficients());
        c[0] += f.coefficient(k);
        r = ExactSeries(std::move(c));
    }
    return r;
}

namespace {

void require_invertible_unit(const ExactSeries& g) {
    if (g.order() < 1 || sgn(g.coefficient(0)) != 0)
        throw std::domain_error("inverse requires zero constant term");
    if (g.coefficient(1) != 1)
        throw std::domain_error("inverse requires linear coefficient exactly 1");
}

// Reversion by the triangular recurrence on f(g(t)) = t:
//   f_m = [m == 1] - sum_{k < m} f_k [t^m] g^k,
// maintained incrementally through S = sum f_k g^k and P = g^k.
// Integer instantiation is the fast path; zero coefficients of g are
// skipped, so series supported on a stride cost only the live entries.
template <class Coeff>
std::vector<Coeff> revert_coefficients(const std::vector<Coeff>& g, long N) {
    std::vector<std::pair<long, Coeff>> gterms;
    for (long e = 2; e <= N && e < static_cast<long>(g.size()); ++e)
        if (sgn(g[static_cast<std::size_t>(e)]) != 0)
            gterms.emplace_back(e, g[static_cast<std::size_t>(e)]);

    std::vector<Coeff> f(static_cast<std::size_t>(N) + 1, Coeff(0));
    std::vector<Coeff> S(static_cast<std::size_t>(N) + 1, Coeff(0));
    std::vector<Coeff> P = g; // g^1
    P.resize(static_cast<std::size_t>(N) + 1, Coeff(0));

    for (long k = 1; k <= N; ++k) {
        Coeff fk = (k == 1) ? Coeff(1) : Coeff(0);
        fk -= S[static_cast<std::size_t>(k)];
        f[static_cast<std::size_t>(k)] = fk;
        if (sgn(fk) != 0 && k < N) {
            for (long j = k; j <= N; ++j)
                if (sgn(P[static_cast<std::size_t>(j)]) != 0)
                    S[static_cast<std::size_t>(j)] += fk * P[static_cast<std::size_t>(j)];
        }
        if (k == N) break;
        // P <- P * g, in place, truncated at N; P had support [k..N].
        for (long j = N; j >= k + 1; --j) {
            Coeff acc = P[static_cast<std::size_t>(j - 1)]; // the g_1 = 1 term
            for (const auto& [e, ge] : gterms) {
                if (j - e < k) break;
                if (sgn(P[static_cast<std::size_t>(j - e)]) != 0)
                    acc += ge * P[static_cast<std::size_t>(j - e)];
            }
            P[static_cast<std::size_t>(j)] = std::move(acc);
        }
        P[static_cast<std::size_t>(k)] = 0;
    }
    return f;
}

} // namespace

ExactSeries invert(const ExactSeries& g) {
    require_invertible_unit(g);
    const long N = g.order();
    if (g.is_integral()) {
        std::vector<Integer> gi(static_cast<std::size_t>(N) + 1);
        for (long e = 0; e <= N; ++e) gi[static_cast<std::size_t>(e)] = g.coefficient(e).get_num();
        std::vector<Integer> fi = revert_coefficients(gi, N);
        std::vector<Rational> c(static_cast<std::size_t>(N) + 1);
        for (long e = 0; e <= N; ++e) c[static_cast<std::size_t>(e)] = Rational(fi[static_cast<std::size_t>(e)]);
        return ExactSeries(std::move(c));
    }
    return ExactSeries(revert_coefficients(g.coefficients(), N));
}

ExactSeries invert(const SparseTrinomial& g, long order) {
    return invert(g.expand(order));
}

void stream_inverse_coefficients(const SparseTrinomial& g, long bound,
                                 const std::function<bool(long, const Integer&)>& visit) {
    if (g.n < 2) throw std::invalid_argument("trinomial arity must be >= 2");
    if (bound < 1) throw std::invalid_argument("stream bound must be >= 1");
    // Bookkeeping alone costs ~32 bytes per degree, and the coefficient data
    // grows linearly in bit size per degree (quadratically in total), so
    // bounds beyond this are out of reach for the algorithm no matter the
    // time budget.  Fail up front instead of exhausting memory.
    constexpr long kStreamBoundCap = 10'000'000;
    if (bound > kStreamBoundCap)
        throw resource_limit_error("search bound " + std::to_string(bound) +
                                   " exceeds the supported maximum of " +
                                   std::to_string(kStreamBoundCap));
    const long N = bound;
    std::vector<std::pair<long, long>> gterms; // exponent, small coefficient
    if (g.n <= N) gterms.emplace_back(g.n, -1);
    if (2 * g.n - 1 <= N) gterms.emplace_back(2 * g.n - 1, 1);

    std::vector<Integer> S(static_cast<std::size_t>(N) + 1, Integer(0));
    std::vector<Integer> P(static_cast<std::size_t>(N) + 1, Integer(0));
    if (N >= 1) P[1] = 1;
    for (const auto& [e, ge] : gterms) P[static_cast<std::size_t>(e)] = ge;

    Integer fk;
    for (long k = 1; k <= N; ++k) {
        fk = (k == 1) ? 1 : 0;
        fk -= S[static_cast<std::size_t>(k)];
        if (!visit(k, fk)) return;
        if (sgn(fk) != 0 && k < N) {
            for (long j = k; j <= N; ++j)
                if (sgn(P[static_cast<std::size_t>(j)]) != 0)
                    mpz_addmul(S[static_cast<std::size_t>(j)].get_mpz_t(), fk.get_mpz_t(),
                               P[static_cast<std::size_t>(j)].get_mpz_t());
        }
        if (k == N) break;
        for (long j = N; j >= k + 1; --j) {
            Integer& target = P[static_cast<std::size_t>(j)];
            target = P[static_cast<std::size_t>(j - 1)];
            for (const auto& [e, ge] : gterms) {
                if (j - e < k) break;
                const Integer& src = P[static_cast<std::size_t>(j - e)];
                if (sgn(src) == 0) continue;
                if (ge > 0)
                    mpz_addmul_ui(target.get_mpz_t(), src.get_mpz_t(), static_cast<unsigned long>(ge));
                else
                    mpz_submul_ui(target.get_mpz_t(), src.get_mpz_t(), static_cast<unsigned long>(-ge));
            }
        }
        P[static_cast<std::size_t>(k)] = 0;
    }
}

ExactSeries reciprocal(const ExactSeries& u, long order) {
    if (sgn(u.coefficient(0)) == 0)
        throw std::domain_error("reciprocal requires nonzero constant term");
    std::vector<Rational> v(static_cast<std::size_t>(order) + 1, kZero);
    const Rational inv0 = 1 / u.coefficient(0);
    v[0] = inv0;
    for (long m = 1; m <= order; ++m) {
        Rational acc(0);
        for (long j = 1; j <= std::min(m, u.order()); ++j) {
            if (sgn(u.coefficient(j)) == 0) continue;
            acc += u.coefficient(j) * v[static_cast<std::size_t>(m - j)];
        }
        v[static_cast<std::size_t>(m)] = -acc * inv0;
    }
    return ExactSeries(std::move(v));
}

ExactSeries pow_trunc(const ExactSeries& u, long e, long order) {
    if (e < 0) throw std::invalid_argument("pow_trunc exponent must be >= 0");
    ExactSeries base = u.with_order(order);
    ExactSeries r = ExactSeries::monomial(1, 0, order);
    while (e > 0) {
        if (e & 1) r = mul(r, base);
        base = (e >>= 1) ? mul(base, base) : base;
    }
    return r;
}

namespace {

Rational lagrange_from(const ExactSeries& g, long m) {
    require_invertible_unit(g);
    if (m < 1) throw std::invalid_argument("lagrange coefficient index must be >= 1");
    if (g.order() < m)
        throw std::domain_error("lagrange coefficient needs the series to order m");
    // u = g/t, unit constant term; answer = (1/m) [t^(m-1)] u^(-m).
    std::vector<Rational> u(static_cast<std::size_t>(m), kZero);
    for (long e = 0; e < m; ++e) u[static_cast<std::size_t>(e)] = g.coefficient(e + 1);
    const ExactSeries r = reciprocal(ExactSeries(std::move(u)), m - 1);
    const ExactSeries rm = pow_trunc(r, m, m - 1);
    return rm.coefficient(m - 1) / m;
}

} // namespace

Rational lagrange_coefficient(const ExactSeries& g, long m) { return lagrange_from(g, m); }

Rational lagrange_coefficient(const SparseTrinomial& g, long m) {
    return lagrange_from(g.expand(m), m);
}

ExactSeries desuspend(const ExactSeries& g) {
    std::vector<Rational> c(g.coefficients());
    for (std::size_t e = 0; e < c.size(); ++e)
        if (e % 2 == 0) c[e] = -c[e];
    return ExactSeries(std::move(c));
}

ExactSeries tass_closed_form(long n, DegreeParity parity, long order) {
    if (n < 2) throw std::invalid_argument("arity must be >= 2");
    if (parity == DegreeParity::Odd) return SparseTrinomial{n}.expand(order);
    std::vector<Rational> c(static_cast<std::size_t>(order) + 1, kZero);
    for (long p = 0; p * (n - 1) + 1 <= order; ++p) c[static_cast<std::size_t>(p * (n - 1) + 1)] = 1;
    return ExactSeries(std::move(c));
}

std::string rational_to_string(const Rational& q) { return q.get_str(); }

Rational rational_from_string(const std::string& text) {
    std::string t = text;
    if (!t.empty() && t.front() == '+') t.erase(t.begin());
    if (t.empty()) throw parse_error("empty rational literal");
    Rational q;
    if (mpq_set_str(q.get_mpq_t(), t.c_str(), 10) != 0)
        throw parse_error("invalid rational literal: '" + text + "'");
    if (sgn(Rational(q.get_den())) == 0) throw parse_error("zero denominator in '" + text + "'");
    q.canonicalize();
    return q;
}

std::string to_string(const ExactSeries& s) {
    std::ostringstream out;
    bool first = true;
    for (long e = 0; e <= s.order(); ++e) {
        const Rational& c = s.coefficient(e);
        if (sgn(c) == 0) continue;
        const bool neg = sgn(c) < 0;
        if (first) {
            if (neg) out << "-";
            first = false;
        } else {
            out << (neg ? " - " : " + ");
        }
        const Rational a = abs(c);
        if (e == 0) {
            out << a.get_str();
        } else {
            if (a != 1) out << a.get_str() << " ";
            out << (e == 1 ? "t" : "t^" + std::to_string(e));
        }
    }
    if (first) out << "0";
    out << " + O(t^" << (s.order() + 1) << ")";
    return out.str();
}

namespace {

struct SeriesParser {
    const std::string& text;
    std::size_t pos = 0;

    explicit SeriesParser(const std::string& t) : text(t) {}

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool accept(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& why) {
        throw parse_error("series parse error at position " + std::to_string(pos) + ": " + why);
    }

    Integer integer() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) fail("expected digits");
        return Integer(text.substr(start, pos - start));
    }

    long exponent() {
        const Integer e = integer();
        if (!e.fits_slong_p()) fail("exponent out of range");
        return e.get_si();
    }

    // coefficient (optionally rational), optional "*", optional t[^k]
    void term(int sign, std::vector<std::pair<long, Rational>>& out) {
        Rational coeff(1);
        bool have_coeff = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            Integer num = integer();
            if (accept('/')) {
                Integer den = integer();
                if (sgn(den) == 0) fail("zero denominator");
                coeff = Rational(num, den);
                coeff.canonicalize();
            } else {
                coeff = Rational(num);
            }
            have_coeff = true;
            accept('*');
        }
        long expo = 0;
        if (accept('t')) {
            expo = accept('^') ? exponent() : 1;
            if (expo < 0) fail("negative exponent");
        } else if (!have_coeff) {
            fail("expected coefficient or 't'");
        }
        out.emplace_back(expo, sign < 0 ? Rational(-coeff) : coeff);
    }
};

} // namespace

ExactSeries parse_series(const std::string& text) {
    SeriesParser p(text);
    std::vector<std::pair<long, Rational>> terms;
    long explicit_order = -1;
    int sign = 1;
    if (p.accept('-'))
        sign = -1;
    else
        p.accept('+');
    while (true) {
        // "O(t^k)" tail pins the truncation order to k-1.
        if (p.peek() == 'O') {
            ++p.pos;
            if (!p.accept('(')) p.fail("expected '(' after O");
            if (!p.accept('t')) p.fail("expected t inside O(...)");
            if (!p.accept('^')) p.fail("expected '^' inside O(...)");
            const long k = p.exponent();
            if (k < 1) p.fail("O(t^k) needs k >= 1");
            if (!p.accept(')')) p.fail("expected ')'");
            explicit_order = k - 1;
            if (!p.eof()) p.fail("trailing input after O(...)");
            break;
        }
        p.term(sign, terms);
        if (p.eof()) break;
        if (p.accept('+'))
            sign = 1;
        else if (p.accept('-'))
            sign = -1;
        else
            p.fail("expected '+' or '-'");
    }
    long order = explicit_order;
    if (order < 0) {
        order = 0;
        for (const auto& [e, c] : terms) order = std::max(order, e);
    }
    std::vector<Rational> coeffs(static_cast<std::size_t>(order) + 1, kZero);
    for (const auto& [e, c] : terms) {
        if (e > order)
            throw parse_error("term t^" + std::to_string(e) + " beyond stated order " +
                              std::to_string(order));
        coeffs[static_cast<std::size_t>(e)] += c;
    }
    return ExactSeries(std::move(coeffs));
}

std::string to_json_string(const ExactSeries& s) {
    nlohmann::json j;
    j["order"] = s.order();
    auto& arr = j["coeffs"] = nlohmann::json::array();
    for (long e = 0; e <= s.order(); ++e) arr.push_back(rational_to_string(s.coefficient(e)));
    return j.dump();
}

ExactSeries series_from_json(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("invalid series JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("order") || !j.contains("coeffs"))
        throw parse_error("series JSON needs {\"order\", \"coeffs\"}");
    const long order = j.at("order").get<long>();
    const auto& arr = j.at("coeffs");
    if (!arr.is_array() || static_cast<long>(arr.size()) != order + 1)
        throw parse_error("series JSON: coeffs length must equal order + 1");
    std::vector<Rational> coeffs;
    coeffs.reserve(arr.size());
    for (const auto& v : arr) coeffs.push_back(rational_from_string(v.get<std::string>()));
    return ExactSeries(std::move(coeffs));
}

} // namespace narop
