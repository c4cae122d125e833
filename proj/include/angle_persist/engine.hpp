#pragma once

#include "angle_persist/cover.hpp"

#include <complex>
#include <map>
#include <optional>

namespace angp {

struct InsufficientMarginError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct InstabilityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct TerminationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct CertificateError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// box (a_lo, a_hi] x [b_lo, b_hi); missing bounds mean -inf / +inf
struct BoxQuery {
    std::optional<Rational> a_lo;
    Rational a_hi;
    Rational b_lo;
    std::optional<Rational> b_hi;
};

// point <a,b> of the quotient torus, a in [0,1); z = e^{2pi((b-a)+ia)}
struct SupportPoint {
    Rational a;
    Rational b;
    long multiplicity;

    std::complex<double> z() const;
    bool same_position(const SupportPoint& o) const { return a == o.a && b == o.b; }
};

struct Configuration {
    long r;
    FieldDesc field;
    std::vector<SupportPoint> points;  // sorted by (a, b)
    long window_radius;                // periods on each side used for the certificate
    long betti;                        // b^N_r
    long total_multiplicity() const;
};

// Caches sublevel/superlevel image subspaces and box ranks on one window.
class WindowCtx {
public:
    WindowCtx(const ComplexWithMap& c, const FieldDesc& f, long radius);

    const WindowComplex& window() const { return w_; }
    long radius() const { return radius_; }
    Rational level_lo() const { return Rational(w_.m_lo() + 1); }  // margin of one period
    Rational level_hi() const { return Rational(w_.m_hi()); }

    const HomologyQuotient& homology(long r);
    const Subspace& image(long r, const Rational& level, Side side);
    Subspace f_space(long r, const Rational& a, const Rational& b);
    long f_dim(long r, const Rational& a, const Rational& b);
    long box_rank(long r, const BoxQuery& box);
    // stabilized box rank at (a,b); eps should be below the critical gap
    long delta_point(long r, const Rational& a, const Rational& b, const Rational& eps);

private:
    void check_margin(const Rational& level) const;

    WindowComplex w_;
    long radius_;
    std::map<long, HomologyQuotient> hq_;
    std::map<std::tuple<long, Rational, int>, Subspace> images_;
    std::map<std::tuple<long, Rational, Rational>, long> fdims_;
};

struct ConfigOptions {
    long start_radius = 3;
    long max_periods = 0;  // 0: use ANGLE_PERSIST_MAX_PERIODS or the default 64
};

long resolve_max_periods(const ConfigOptions& opts);

// Scans critical pairs over adaptively grown windows until the total
// multiplicity matches the Novikov-Betti number.
Configuration configuration(const ComplexWithMap& c, const FieldDesc& f, long r,
                            const ConfigOptions& opts = {});

// Multiplicity at one critical pair (0 when (a,b) is not a critical pair);
// verified stable under halving eps.
long delta_point(WindowCtx& ctx, const ComplexWithMap& c, long r, const Rational& a,
                 const Rational& b);

// monic polynomial with the configuration's points as roots; ascending
// coefficients, constant term first
std::vector<std::complex<double>> char_poly(const Configuration& cfg);

struct RefinementEntry {
    SupportPoint point;
    LaurentMatrix L;       // generators of F_r<a,b> in the free-part basis, beta x k
    LaurentMatrix Lprime;  // generators of F'_r<a,b>, beta x k'
    long quotient_rank;
};

struct ModuleRefinement {
    long r;
    long beta;
    FieldDesc field;
    std::vector<RefinementEntry> entries;
    bool split_certified;      // every L, L' has unit elementary divisors
    bool direct_sum_certified; // assembled quotient lifts form a unimodular map
};

ModuleRefinement module_refinement(const ComplexWithMap& c, const FieldDesc& f, long r,
                                   const ConfigOptions& opts = {});

struct CollisionDistance {
    bool infinite;
    Rational value;  // valid when !infinite
};

// Bottleneck matching distance in (a mod 1, b-a) coordinates.
CollisionDistance collision_distance(const Configuration& c1, const Configuration& c2);

struct DualityMismatch {
    long r;
    SupportPoint point;
    long expected;  // multiplicity that delta_{n-r} should carry at i*conj(z)
    long found;
};

struct DualityReport {
    bool applicable;  // caller declared X a closed n-manifold
    long n;
    std::vector<DualityMismatch> mismatches;
    bool passed() const { return applicable && mismatches.empty(); }
};

DualityReport duality_check(const std::vector<Configuration>& cfgs, long n, bool is_manifold);

}  // namespace angp
