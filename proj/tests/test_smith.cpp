#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "angle_persist/smith.hpp"

#include <random>

using namespace angp;

namespace {

const FieldDesc Q{};

LaurentPoly poly(const FieldDesc& f, std::initializer_list<std::pair<long, long>> terms) {
    std::map<long, Scalar> c;
    for (auto [e, v] : terms) c.emplace(e, Scalar(f, v));
    return LaurentPoly(f, std::move(c));
}

LaurentMatrix random_laurent(std::mt19937& rng, const FieldDesc& f, long nr, long nc) {
    std::uniform_int_distribution<long> exp(-2, 2), val(-3, 3), nterms(0, 3);
    LaurentMatrix m(f, nr, nc);
    for (long i = 0; i < nr; ++i)
        for (long j = 0; j < nc; ++j) {
            std::map<long, Scalar> c;
            long n = nterms(rng);
            for (long k = 0; k < n; ++k) c.insert_or_assign(exp(rng), Scalar(f, val(rng)));
            m.at(i, j) = LaurentPoly(f, std::move(c));
        }
    return m;
}

void check_snf(const LaurentMatrix& a) {
    SmithDecomposition s = snf(a);
    // exact reconstruction
    CHECK(s.U * s.D * s.V == a);
    // tracked inverses really invert
    CHECK(s.U * s.Uinv == LaurentMatrix::identity(a.field(), a.rows()));
    CHECK(s.V * s.Vinv == LaurentMatrix::identity(a.field(), a.cols()));
    // diagonality and the divisor chain
    for (long i = 0; i < s.D.rows(); ++i)
        for (long j = 0; j < s.D.cols(); ++j)
            if (i != j) CHECK(s.D.at(i, j).is_zero());
    for (size_t k = 0; k + 1 < s.divisors.size(); ++k)
        CHECK(s.divisors[k + 1].divisible_by(s.divisors[k]));
    // canonical divisors: monic in t, constant term nonzero
    for (const auto& d : s.divisors) {
        CHECK(d.min_deg() == 0);
        CHECK(d.coeff(d.max_deg()) == Scalar::one(a.field()));
    }
}

}  // namespace

TEST_CASE("snf of small canned matrices") {
    LaurentMatrix a(Q, 2, 2);
    a.at(0, 0) = poly(Q, {{0, -1}, {1, 1}});  // t - 1
    a.at(1, 1) = poly(Q, {{0, -1}, {2, 1}});  // t^2 - 1
    check_snf(a);
    SmithDecomposition s = snf(a);
    REQUIRE(s.divisors.size() == 2);
    CHECK(s.divisors[0] == poly(Q, {{0, -1}, {1, 1}}));
    CHECK(s.divisors[1] == poly(Q, {{0, -1}, {2, 1}}));
}

TEST_CASE("snf handles laurent units and zero rows") {
    LaurentMatrix a(Q, 2, 3);
    a.at(0, 1) = poly(Q, {{-3, 5}});  // unit 5 t^-3
    check_snf(a);
    SmithDecomposition s = snf(a);
    REQUIRE(s.divisors.size() == 1);
    CHECK(s.divisors[0].is_unit());
}

TEST_CASE("random snf suite") {
    std::mt19937 rng(2026);
    for (int it = 0; it < 120; ++it) check_snf(random_laurent(rng, Q, 1 + it % 4, 1 + (it / 2) % 4));
    FieldDesc f2{2};
    for (int it = 0; it < 80; ++it) check_snf(random_laurent(rng, f2, 1 + it % 4, 1 + (it / 3) % 4));
}

TEST_CASE("unimodularity") {
    LaurentMatrix u(Q, 2, 2);
    u.at(0, 0) = poly(Q, {{0, 1}});
    u.at(0, 1) = poly(Q, {{0, -1}, {1, 1}});
    u.at(1, 1) = poly(Q, {{-4, 7}});
    CHECK(is_unimodular(u));
    u.at(1, 1) = poly(Q, {{0, -1}, {1, 1}});
    CHECK_FALSE(is_unimodular(u));
}

TEST_CASE("presentation invariants") {
    // A = [[t - 1]]: coker is k[t^-1,t]/(t-1), torsion dim 1
    LaurentMatrix a(Q, 1, 1);
    a.at(0, 0) = poly(Q, {{0, -1}, {1, 1}});
    PresentationInvariants inv = presentation_invariants(a);
    CHECK(inv.free_rank == 0);
    CHECK(inv.torsion_dim == 1);
    REQUIRE(inv.invariant_factors.size() == 1);
    CHECK(inv.invariant_factors[0] == poly(Q, {{0, -1}, {1, 1}}));

    // diag(1, (t-1)^2) on 3 generators: free rank 1, torsion dim 2
    LaurentMatrix b(Q, 3, 2);
    b.at(0, 0) = poly(Q, {{0, 1}});
    b.at(1, 1) = poly(Q, {{0, 1}, {1, -2}, {2, 1}});
    PresentationInvariants inv2 = presentation_invariants(b);
    CHECK(inv2.free_rank == 1);
    CHECK(inv2.torsion_dim == 2);
}

TEST_CASE("kernel and module solve") {
    std::mt19937 rng(17);
    for (int it = 0; it < 40; ++it) {
        LaurentMatrix a = random_laurent(rng, Q, 2 + it % 2, 3 + it % 2);
        LaurentMatrix k = laurent_kernel(a);
        LaurentMatrix prod = a * k;
        CHECK(prod.is_zero());

        // a * x for random x must be solvable, reproducing a solution
        LaurentMatrix x = random_laurent(rng, Q, a.cols(), 1);
        LaurentMatrix b = a * x;
        std::vector<LaurentPoly> rhs;
        for (long i = 0; i < b.rows(); ++i) rhs.push_back(b.at(i, 0));
        SmithDecomposition s = snf(a);
        auto sol = module_solve(s, rhs);
        REQUIRE(sol.has_value());
        LaurentMatrix xs(Q, a.cols(), 1);
        for (long i = 0; i < a.cols(); ++i) xs.at(i, 0) = (*sol)[static_cast<size_t>(i)];
        CHECK(a * xs == b);
    }
}

TEST_CASE("module solve reports unsolvable systems") {
    LaurentMatrix a(Q, 1, 1);
    a.at(0, 0) = poly(Q, {{0, -1}, {1, 1}});  // (t-1) x = 1 has no solution
    auto sol = module_solve(snf(a), {poly(Q, {{0, 1}})});
    CHECK_FALSE(sol.has_value());
}
