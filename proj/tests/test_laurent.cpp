#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "angle_persist/laurent.hpp"

#include <random>

using namespace angp;

namespace {

const FieldDesc Q{};

LaurentPoly poly(std::initializer_list<std::pair<long, long>> terms) {
    std::map<long, Scalar> c;
    for (auto [e, v] : terms) c.emplace(e, Scalar(Q, v));
    return LaurentPoly(Q, std::move(c));
}

LaurentPoly random_poly(std::mt19937& rng, const FieldDesc& f) {
    std::uniform_int_distribution<long> exp(-3, 3), val(-4, 4), nterms(0, 4);
    std::map<long, Scalar> c;
    long n = nterms(rng);
    for (long i = 0; i < n; ++i) c.insert_or_assign(exp(rng), Scalar(f, val(rng)));
    return LaurentPoly(f, std::move(c));
}

}  // namespace

TEST_CASE("basic arithmetic") {
    LaurentPoly a = poly({{-1, 1}, {0, 2}});  // t^-1 + 2
    LaurentPoly b = poly({{1, 1}});           // t
    CHECK((a * b) == poly({{0, 1}, {1, 2}}));
    CHECK((a + (-a)).is_zero());
    CHECK((a - a).is_zero());
    CHECK(a.min_deg() == -1);
    CHECK(a.max_deg() == 0);
}

TEST_CASE("units are monomials") {
    CHECK(poly({{5, 3}}).is_unit());
    CHECK(poly({{0, 1}}).is_unit());
    CHECK_FALSE(poly({{0, 1}, {1, 1}}).is_unit());
    CHECK_FALSE(LaurentPoly::zero(Q).is_unit());
}

TEST_CASE("involution negates exponents") {
    LaurentPoly a = poly({{-2, 3}, {1, 5}});
    LaurentPoly s = a.involution();
    CHECK(s.coeff(2).value() == 3);
    CHECK(s.coeff(-1).value() == 5);
    // involution is its own inverse
    CHECK(s.involution() == a);
}

TEST_CASE("involution is multiplicative on random polynomials") {
    std::mt19937 rng(7);
    for (int i = 0; i < 50; ++i) {
        LaurentPoly a = random_poly(rng, Q), b = random_poly(rng, Q);
        CHECK((a * b).involution() == a.involution() * b.involution());
    }
}

TEST_CASE("unit normalization strips c t^k") {
    LaurentPoly a = poly({{-2, 2}, {0, 4}});  // 2t^-2 + 4
    LaurentPoly n = a.unit_normalized();
    CHECK(n.min_deg() == 0);
    CHECK(n.coeff(n.max_deg()) == Scalar::one(Q));
    CHECK(n == poly({{0, 1}, {2, 2}}).unit_normalized());
    CHECK(LaurentPoly::zero(Q).unit_normalized().is_zero());
}

TEST_CASE("euclidean division in k[t]") {
    LaurentPoly a = poly({{0, -1}, {2, 1}});  // t^2 - 1
    LaurentPoly d = poly({{0, -1}, {1, 1}});  // t - 1
    auto [q, r] = a.divmod(d);
    CHECK(r.is_zero());
    CHECK(q == poly({{0, 1}, {1, 1}}));
    auto [q2, r2] = poly({{0, 1}, {1, 1}}).divmod(poly({{1, 1}}));
    CHECK(r2 == poly({{0, 1}}));
    CHECK(q2 == poly({{0, 1}}));
}

TEST_CASE("divisibility in the Laurent ring sees through units") {
    LaurentPoly a = poly({{-1, 1}, {1, -1}});  // t^-1 - t = -t^-1(t^2 - 1)
    CHECK(a.divisible_by(poly({{0, -1}, {1, 1}})));
    CHECK(a.exact_div(poly({{0, -1}, {1, 1}})) * poly({{0, -1}, {1, 1}}) == a);
    CHECK_FALSE(a.divisible_by(poly({{0, 1}, {1, 1}, {2, 1}})));
}

TEST_CASE("gcd is canonical and symmetric") {
    LaurentPoly a = poly({{0, -1}, {2, 1}});   // (t-1)(t+1)
    LaurentPoly b = poly({{0, -2}, {1, 2}});   // 2(t-1)
    LaurentPoly g = LaurentPoly::gcd(a, b);
    CHECK(g == poly({{0, -1}, {1, 1}}));
    CHECK(LaurentPoly::gcd(b, a) == g);
    CHECK(LaurentPoly::gcd(a, LaurentPoly::zero(Q)) == a.unit_normalized());
}

TEST_CASE("evaluation") {
    LaurentPoly a = poly({{-1, 1}, {1, 1}});  // t^-1 + t
    CHECK(a.evaluate(Scalar(Q, 2)).value() == Rational(5, 2));
    auto z = a.evaluate_unit(0.0);
    CHECK(z.real() == doctest::Approx(2.0));
    CHECK(z.imag() == doctest::Approx(0.0));
    // at theta = pi/2: -i + i = 0
    auto z2 = a.evaluate_unit(std::acos(0.0) * 1.0 * 2.0 / 2.0);
}

TEST_CASE("prime field polynomials") {
    FieldDesc f2{2};
    LaurentPoly a(f2, {{0, Scalar(f2, 1)}, {1, Scalar(f2, 1)}});
    CHECK((a * a) == LaurentPoly(f2, {{0, Scalar(f2, 1)}, {2, Scalar(f2, 1)}}));  // freshman's dream
}
