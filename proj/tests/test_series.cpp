#include <doctest.h>

#include <json.hpp>

#include <random>
#include <vector>

#include <narop/errors.hpp>
#include <narop/golden.hpp>
#include <narop/series.hpp>

using namespace narop;

namespace narop {
doctest::String toString(const ExactSeries& s) { return to_string(s).c_str(); }
} // namespace narop

namespace {

ExactSeries random_integer_series(std::mt19937& rng, long order) {
    std::uniform_int_distribution<int> coeff(-5, 5);
    std::vector<Rational> c(static_cast<std::size_t>(order) + 1, Rational(0));
    c[1] = 1; // compositionally invertible
    for (long e = 2; e <= order; ++e) c[static_cast<std::size_t>(e)] = coeff(rng);
    return ExactSeries(std::move(c));
}

ExactSeries random_rational_series(std::mt19937& rng, long order) {
    std::uniform_int_distribution<int> num(-4, 4);
    std::uniform_int_distribution<int> den(1, 4);
    std::vector<Rational> c(static_cast<std::size_t>(order) + 1, Rational(0));
    c[1] = 1;
    for (long e = 2; e <= order; ++e) {
        Rational q(num(rng), den(rng));
        q.canonicalize();
        c[static_cast<std::size_t>(e)] = q;
    }
    return ExactSeries(std::move(c));
}

} // namespace

TEST_CASE("constructors, accessors and truncation") {
    const ExactSeries zero(4);
    CHECK(zero.order() == 4);
    CHECK(zero.is_zero());
    CHECK_FALSE(zero.is_invertible());

    const ExactSeries id = ExactSeries::identity(6);
    CHECK(id.order() == 6);
    CHECK(id.coefficient(1) == 1);
    CHECK(id.coefficient(0) == 0);
    CHECK(id.is_invertible());
    CHECK(id.is_integral());

    const ExactSeries mono = ExactSeries::monomial(Rational(3, 2), 4, 7);
    CHECK(mono.coefficient(4) == Rational(3, 2));
    CHECK_FALSE(mono.is_integral());

    CHECK_THROWS_AS(ExactSeries(-1), std::invalid_argument);
    CHECK_THROWS_AS(ExactSeries(std::vector<Rational>{}), std::invalid_argument);
    CHECK_THROWS_AS(ExactSeries::identity(0), std::invalid_argument);
    CHECK_THROWS_AS(ExactSeries::monomial(Rational(1), 5, 4), std::invalid_argument);
    CHECK_THROWS_AS(id.coefficient(7), std::out_of_range);

    SUBCASE("with_order truncates or zero-pads") {
        const ExactSeries g = parse_series("t - t^3 + t^5");
        CHECK(g.order() == 5);
        const ExactSeries shorter = g.with_order(3);
        CHECK(shorter.order() == 3);
        CHECK(shorter.coefficient(3) == -1);
        const ExactSeries longer = g.with_order(8);
        CHECK(longer.order() == 8);
        CHECK(longer.coefficient(5) == 1);
        CHECK(longer.coefficient(7) == 0);
    }
}

TEST_CASE("trinomial expansion") {
    const ExactSeries g2 = SparseTrinomial{2}.expand(5);
    CHECK(g2 == parse_series("t - t^2 + t^3 + O(t^6)"));
    const ExactSeries g4 = SparseTrinomial{4}.expand(7);
    CHECK(g4 == parse_series("t - t^4 + t^7"));
    // below the exponents the tail terms vanish
    CHECK(SparseTrinomial{4}.expand(3) == ExactSeries::identity(3));
    CHECK_THROWS_AS(SparseTrinomial{1}.expand(5), std::invalid_argument);
}

TEST_CASE("arithmetic identities") {
    std::mt19937 rng(7);
    const ExactSeries a = random_rational_series(rng, 12);
    const ExactSeries b = random_rational_series(rng, 12);
    const ExactSeries c = random_rational_series(rng, 12);

    CHECK(add(a, b) == add(b, a));
    CHECK(sub(a, a).is_zero());
    CHECK(add(a, negate(a)).is_zero());
    CHECK(mul(a, b) == mul(b, a));
    CHECK(mul(a, add(b, c)) == add(mul(a, b), mul(a, c)));

    // truncation to the smaller order
    CHECK(add(a, ExactSeries(3)).order() == 3);
    CHECK(mul(a, ExactSeries::identity(5)).order() == 5);

    const ExactSeries p = parse_series("1 + t");
    CHECK(mul(p, p) == parse_series("1 + 2 t + O(t^2)"));
    CHECK(mul(p.with_order(4), p.with_order(4)) == parse_series("1 + 2 t + t^2 + O(t^5)"));
}

TEST_CASE("composition") {
    const ExactSeries f = parse_series("t + t^2 + O(t^6)");
    const ExactSeries g = parse_series("t + t^3 + O(t^6)");
    // f(g) = g + g^2 = t + t^2 + t^3 + 2 t^4 + (t^6 beyond the order)
    CHECK(compose(f, g) == parse_series("t + t^2 + t^3 + 2 t^4 + O(t^6)"));
    CHECK(compose(ExactSeries::identity(6), g) == g);
    CHECK(compose(g, ExactSeries::identity(6)) == g);
    CHECK_THROWS_AS(compose(f, parse_series("1 + t + O(t^6)")), std::domain_error);
}

TEST_CASE("inverse matches the published initial parts") {
    for (const GoldenInverse& entry : golden().inverse_series) {
        CAPTURE(entry.id);
        const ExactSeries got = invert(SparseTrinomial{entry.n}, entry.series.order());
        CHECK(got == entry.series);
        CHECK(got.is_integral());
    }
    // spot-check the famous large value: arity 4 at t^25
    const GoldenInverse* n4 = golden().find_inverse("inverse-n4");
    REQUIRE(n4 != nullptr);
    CHECK(n4->series.coefficient(25) == -5967);
    CHECK(n4->series.coefficient(19) == 469);
}

TEST_CASE("inverse of t - t^2 has the Catalan coefficients") {
    const ExactSeries inv = invert(parse_series("t - t^2 + O(t^9)"));
    const long catalan[] = {1, 1, 2, 5, 14, 42, 132, 429};
    for (long p = 0; p < 8; ++p) CHECK(inv.coefficient(p + 1) == catalan[p]);
}

TEST_CASE("inverse preconditions") {
    CHECK(invert(ExactSeries::identity(5)) == ExactSeries::identity(5));
    CHECK_THROWS_AS(invert(parse_series("1 + t")), std::domain_error);
    CHECK_THROWS_AS(invert(parse_series("2 t + t^2")), std::domain_error);
    CHECK_THROWS_AS(invert(ExactSeries(0)), std::domain_error);
}

TEST_CASE("inversion round-trip: compose(g, invert(g)) = t = compose(invert(g), g)") {
    std::mt19937 rng(20240817);
    std::vector<ExactSeries> cases;
    for (long n = 2; n <= 5; ++n) cases.push_back(SparseTrinomial{n}.expand(40));
    for (int i = 0; i < 10; ++i) cases.push_back(random_integer_series(rng, 25));
    for (int i = 0; i < 5; ++i) cases.push_back(random_rational_series(rng, 18));

    for (const ExactSeries& g : cases) {
        const ExactSeries f = invert(g);
        CHECK(f.order() == g.order());
        CHECK(compose(g, f) == ExactSeries::identity(g.order()));
        CHECK(compose(f, g) == ExactSeries::identity(g.order()));
    }
}

TEST_CASE("single-coefficient residue formula agrees with full reversion") {
    for (long n = 2; n <= 8; ++n) {
        const ExactSeries inv = invert(SparseTrinomial{n}, 60);
        for (long m = 1; m <= 60; ++m) {
            CAPTURE(n);
            CAPTURE(m);
            CHECK(lagrange_coefficient(SparseTrinomial{n}, m) == inv.coefficient(m));
        }
    }
    // a rational-coefficient series through the generic path
    std::mt19937 rng(5);
    const ExactSeries g = random_rational_series(rng, 20);
    const ExactSeries inv = invert(g);
    for (long m = 1; m <= 20; ++m) CHECK(lagrange_coefficient(g, m) == inv.coefficient(m));
    CHECK_THROWS_AS(lagrange_coefficient(g, 0), std::invalid_argument);
    CHECK_THROWS_AS(lagrange_coefficient(g, 21), std::domain_error);
}

TEST_CASE("streaming inverse coefficients") {
    const ExactSeries inv = invert(SparseTrinomial{3}, 120);
    long last_seen = 0;
    stream_inverse_coefficients(SparseTrinomial{3}, 120, [&](long k, const Integer& v) {
        CHECK(k == last_seen + 1);
        CHECK(Rational(v) == inv.coefficient(k));
        last_seen = k;
        return true;
    });
    CHECK(last_seen == 120);

    SUBCASE("visitor can stop the stream early") {
        long visits = 0;
        stream_inverse_coefficients(SparseTrinomial{2}, 1000, [&](long, const Integer&) {
            return ++visits < 5;
        });
        CHECK(visits == 5);
    }
    SUBCASE("argument validation") {
        CHECK_THROWS_AS(
            stream_inverse_coefficients(SparseTrinomial{1}, 10, [](long, const Integer&) { return true; }),
            std::invalid_argument);
        CHECK_THROWS_AS(
            stream_inverse_coefficients(SparseTrinomial{2}, 0, [](long, const Integer&) { return true; }),
            std::invalid_argument);
        CHECK_THROWS_AS(stream_inverse_coefficients(SparseTrinomial{2}, 20'000'000,
                                                    [](long, const Integer&) { return true; }),
                        resource_limit_error);
    }
}

TEST_CASE("desuspension flips coefficients by (-1)^(e+1)") {
    std::mt19937 rng(11);
    const ExactSeries g = random_rational_series(rng, 15);
    const ExactSeries d = desuspend(g);
    for (long e = 0; e <= 15; ++e) {
        const Rational expected = (e % 2 == 0) ? Rational(-g.coefficient(e)) : g.coefficient(e);
        CHECK(d.coefficient(e) == expected);
    }
    CHECK(desuspend(d) == g); // involution
    CHECK(desuspend(ExactSeries::identity(9)) == ExactSeries::identity(9));
}

TEST_CASE("closed forms of the totally associative series") {
    // even degree: one basis element in every reachable arity
    const ExactSeries even3 = tass_closed_form(3, DegreeParity::Even, 9);
    CHECK(even3 == parse_series("t + t^3 + t^5 + t^7 + t^9"));
    // odd degree: everything beyond the relation arity dies
    const ExactSeries odd3 = tass_closed_form(3, DegreeParity::Odd, 9);
    CHECK(odd3 == parse_series("t - t^3 + t^5 + O(t^10)"));
    CHECK(tass_closed_form(2, DegreeParity::Odd, 6) == parse_series("t - t^2 + t^3 + O(t^7)"));
    CHECK_THROWS_AS(tass_closed_form(1, DegreeParity::Even, 5), std::invalid_argument);
}

TEST_CASE("reciprocal and truncated powers") {
    std::mt19937 rng(3);
    ExactSeries u = random_rational_series(rng, 12);
    // make the constant term a unit
    std::vector<Rational> c = u.coefficients();
    c[0] = Rational(2, 3);
    u = ExactSeries(std::move(c));

    const ExactSeries r = reciprocal(u, 12);
    ExactSeries one(12);
    std::vector<Rational> oc = one.coefficients();
    oc[0] = 1;
    one = ExactSeries(std::move(oc));
    CHECK(mul(u, r) == one);
    CHECK_THROWS_AS(reciprocal(ExactSeries::identity(5), 5), std::domain_error);

    ExactSeries acc = one;
    for (long e = 1; e <= 4; ++e) {
        acc = mul(acc, u);
        CHECK(pow_trunc(u, e, 12) == acc);
    }
    CHECK(pow_trunc(u, 0, 12) == one);
    CHECK_THROWS_AS(pow_trunc(u, -1, 12), std::invalid_argument);
}

TEST_CASE("printing and parsing round-trip") {
    const char* canonical[] = {
        "t - t^4 + 3 t^7 + O(t^8)",
        "t + t^2 + t^3 - 4 t^5 - 14 t^6 - 30 t^7 - 33 t^8 + 55 t^9 + O(t^10)",
        "1/2 + t - 3/7 t^3 + O(t^4)",
        "0 + O(t^6)",
        "2 t + O(t^2)",
    };
    for (const char* text : canonical) {
        CAPTURE(text);
        CHECK(to_string(parse_series(text)) == text);
    }

    std::mt19937 rng(23);
    for (int i = 0; i < 20; ++i) {
        const ExactSeries s = random_rational_series(rng, 14);
        CHECK(parse_series(to_string(s)) == s);
    }

    SUBCASE("input flexibility") {
        CHECK(parse_series("t+t^2") == parse_series("t + t^2"));
        CHECK(parse_series("3*t^2") == parse_series("3 t^2"));
        CHECK(parse_series("-t + 2") == parse_series("2 - t"));
        CHECK(parse_series("t + t") == parse_series("2 t")); // repeated exponents accumulate
        // the O(t^k) tail sets the truncation order to k-1
        CHECK(parse_series("t + O(t^9)").order() == 8);
        CHECK(parse_series("t - t^3 + t^5").order() == 5);
    }
    SUBCASE("rejects malformed input") {
        CHECK_THROWS_AS(parse_series(""), parse_error);
        CHECK_THROWS_AS(parse_series("x + 1"), parse_error);
        CHECK_THROWS_AS(parse_series("t +"), parse_error);
        CHECK(parse_series("t ^ 2") == parse_series("t^2")); // whitespace around ^ tolerated
        CHECK_THROWS_AS(parse_series("1/0 t"), parse_error);
        CHECK_THROWS_AS(parse_series("t^8 + O(t^4)"), parse_error); // term beyond stated order
        CHECK_THROWS_AS(parse_series("t + garbage"), parse_error);
    }
}

TEST_CASE("JSON round-trip") {
    std::mt19937 rng(29);
    for (int i = 0; i < 10; ++i) {
        const ExactSeries s = random_rational_series(rng, 10);
        const std::string j = to_json_string(s);
        CHECK(series_from_json(j) == s);
        // shape: {"order": N, "coeffs": [...]} with exact strings
        const auto parsed = nlohmann::json::parse(j);
        CHECK(parsed.at("order").get<long>() == 10);
        CHECK(parsed.at("coeffs").size() == 11);
    }
    CHECK_THROWS_AS(series_from_json("{"), parse_error);
    CHECK_THROWS_AS(series_from_json("{\"order\": 2}"), parse_error);
    CHECK_THROWS_AS(series_from_json("{\"order\": 2, \"coeffs\": [\"1\"]}"), parse_error);
}

TEST_CASE("rational literals") {
    CHECK(rational_to_string(Rational(-3, 7)) == "-3/7");
    CHECK(rational_to_string(Rational(5)) == "5");
    CHECK(rational_from_string("-3/7") == Rational(-3, 7));
    CHECK(rational_from_string("12") == Rational(12));
    CHECK_THROWS_AS(rational_from_string("1/0"), parse_error);
    CHECK_THROWS_AS(rational_from_string("a/b"), parse_error);
    std::mt19937 rng(31);
    std::uniform_int_distribution<int> num(-50, 50);
    std::uniform_int_distribution<int> den(1, 50);
    for (int i = 0; i < 50; ++i) {
        Rational q(num(rng), den(rng));
        q.canonicalize();
        CHECK(rational_from_string(rational_to_string(q)) == q);
    }
}
