#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "angle_persist/matrix.hpp"

#include <random>

using namespace angp;

namespace {

const FieldDesc Q{};

ScalarMatrix from_rows(const FieldDesc& f, std::vector<std::vector<long>> rows) {
    long nr = static_cast<long>(rows.size());
    long nc = rows.empty() ? 0 : static_cast<long>(rows[0].size());
    ScalarMatrix m(f, nr, nc);
    for (long i = 0; i < nr; ++i)
        for (long j = 0; j < nc; ++j)
            m.at(i, j) = Scalar(f, rows[static_cast<size_t>(i)][static_cast<size_t>(j)]);
    return m;
}

ScalarMatrix random_matrix(std::mt19937& rng, const FieldDesc& f, long nr, long nc) {
    std::uniform_int_distribution<long> val(-3, 3);
    ScalarMatrix m(f, nr, nc);
    for (long i = 0; i < nr; ++i)
        for (long j = 0; j < nc; ++j) m.at(i, j) = Scalar(f, val(rng));
    return m;
}

}  // namespace

TEST_CASE("rref and rank") {
    ScalarMatrix m = from_rows(Q, {{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
    auto pivots = m.rref();
    CHECK(pivots.size() == 2);
    ReduceResult r = field_reduce(from_rows(Q, {{1, 2, 3}, {2, 4, 6}, {1, 0, 1}}));
    CHECK(r.rank == 2);
    CHECK(r.kernel.dim() == 1);
    CHECK(r.image.dim() == 2);
}

TEST_CASE("kernel columns satisfy M x = 0") {
    std::mt19937 rng(11);
    for (int it = 0; it < 30; ++it) {
        ScalarMatrix m = random_matrix(rng, Q, 4, 6);
        ReduceResult r = field_reduce(m);
        CHECK(r.rank + r.kernel.dim() == 6);
        for (long j = 0; j < r.kernel.dim(); ++j) {
            auto x = r.kernel.basis().col(j);
            for (long i = 0; i < m.rows(); ++i) {
                Scalar s = Scalar::zero(Q);
                for (long k = 0; k < m.cols(); ++k) s = s + m.at(i, k) * x[static_cast<size_t>(k)];
                CHECK(s.is_zero());
            }
        }
    }
}

TEST_CASE("subspace canonical form makes equality semantic") {
    ScalarMatrix a = from_rows(Q, {{1, 2}, {0, 0}, {1, 2}});
    ScalarMatrix b = from_rows(Q, {{2, 3}, {0, 0}, {2, 3}});
    CHECK(Subspace::span(a) == Subspace::span(b));
    CHECK(Subspace::span(a).dim() == 1);
}

TEST_CASE("sum and intersection dimensions") {
    // span{e1, e2} and span{e2, e3} in Q^4
    ScalarMatrix a = from_rows(Q, {{1, 0}, {0, 1}, {0, 0}, {0, 0}});
    ScalarMatrix b = from_rows(Q, {{0, 0}, {1, 0}, {0, 1}, {0, 0}});
    Subspace sa = Subspace::span(a), sb = Subspace::span(b);
    CHECK(Subspace::sum(sa, sb).dim() == 3);
    Subspace inter = Subspace::intersection(sa, sb);
    CHECK(inter.dim() == 1);
    std::vector<Scalar> e2{Scalar::zero(Q), Scalar::one(Q), Scalar::zero(Q), Scalar::zero(Q)};
    CHECK(inter.contains(e2));
}

TEST_CASE("modular law dim check on random subspaces") {
    std::mt19937 rng(5);
    FieldDesc f3{3};
    for (int it = 0; it < 30; ++it) {
        Subspace a = Subspace::span(random_matrix(rng, f3, 5, 2));
        Subspace b = Subspace::span(random_matrix(rng, f3, 5, 3));
        long lhs = Subspace::sum(a, b).dim() + Subspace::intersection(a, b).dim();
        CHECK(lhs == a.dim() + b.dim());
        CHECK(Subspace::sum(a, b).contains(a));
        CHECK(a.contains(Subspace::intersection(a, b)));
    }
}

TEST_CASE("solve") {
    ScalarMatrix m = from_rows(Q, {{1, 1}, {0, 1}});
    std::vector<Scalar> b{Scalar(Q, 3), Scalar(Q, 1)}, x;
    REQUIRE(solve(m, b, x));
    CHECK(x[0].value() == 2);
    CHECK(x[1].value() == 1);
    ScalarMatrix sing = from_rows(Q, {{1, 1}, {1, 1}});
    std::vector<Scalar> b2{Scalar(Q, 0), Scalar(Q, 1)};
    CHECK_FALSE(solve(sing, b2, x));
}
