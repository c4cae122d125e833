#include "angle_persist/engine.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <numbers>
#include <optional>
#include <sstream>

namespace angp {

std::complex<double> SupportPoint::z() const {
    double rho = std::exp(2.0 * std::numbers::pi * Rational(b - a).get_d());
    double ang = 2.0 * std::numbers::pi * a.get_d();
    return std::polar(rho, ang);
}

long Configuration::total_multiplicity() const {
    long s = 0;
    for (auto& p : points) s += p.multiplicity;
    return s;
}

WindowCtx::WindowCtx(const ComplexWithMap& c, const FieldDesc& f, long radius)
    : w_(c, f, -radius, radius), radius_(radius) {}

const HomologyQuotient& WindowCtx::homology(long r) {
    auto it = hq_.find(r);
    if (it == hq_.end()) it = hq_.emplace(r, window_homology(w_, r)).first;
    return it->second;
}

void WindowCtx::check_margin(const Rational& level) const {
    if (level < level_lo() || level > level_hi()) {
        std::ostringstream os;
        os << "level " << level.get_str() << " outside margin [" << level_lo().get_str() << ", "
           << level_hi().get_str() << "] of window [" << w_.m_lo() << ", " << w_.m_hi() << "]";
        throw InsufficientMarginError(os.str());
    }
}

const Subspace& WindowCtx::image(long r, const Rational& level, Side side) {
    check_margin(level);
    auto key = std::make_tuple(r, level, side == Side::sub ? 0 : 1);
    auto it = images_.find(key);
    if (it != images_.end()) return it->second;

    const HomologyQuotient& hq = homology(r);
    CellSubset sub = w_.star_subcomplex(level, side);
    std::vector<long> member;
    for (long p = 0; p < w_.count(r); ++p)
        if (sub.member[static_cast<size_t>(r)][static_cast<size_t>(p)]) member.push_back(p);

    const FieldDesc& f = w_.field();
    Subspace img(f, hq.dim());
    if (!member.empty()) {
        // cycles of the full subcomplex; its faces are member cells as well,
        // so the kernel of the column-restricted boundary is what we need
        ScalarMatrix m = (r >= 1 && r <= w_.dim()) ? w_.boundary(r).cols_slice(member)
                                                   : ScalarMatrix(f, 0, static_cast<long>(member.size()));
        ReduceResult rr = field_reduce(m);
        const ScalarMatrix& kb = rr.kernel.basis();
        ScalarMatrix cols(f, hq.dim(), kb.cols());
        for (long j = 0; j < kb.cols(); ++j) {
            std::vector<Scalar> chain(static_cast<size_t>(w_.count(r)), Scalar::zero(f));
            for (size_t mi = 0; mi < member.size(); ++mi)
                chain[static_cast<size_t>(member[mi])] = kb.at(static_cast<long>(mi), j);
            auto co = hq.coords(chain);
            cols.set_col(j, co);
        }
        img = Subspace::span(cols);
    }
    return images_.emplace(key, std::move(img)).first->second;
}

Subspace WindowCtx::f_space(long r, const Rational& a, const Rational& b) {
    return Subspace::intersection(image(r, a, Side::sub), image(r, b, Side::super));
}

long WindowCtx::f_dim(long r, const Rational& a, const Rational& b) {
    auto key = std::make_tuple(r, a, b);
    auto it = fdims_.find(key);
    if (it == fdims_.end()) it = fdims_.emplace(key, f_space(r, a, b).dim()).first;
    return it->second;
}

long WindowCtx::box_rank(long r, const BoxQuery& box) {
    Rational a = box.a_hi, b = box.b_lo;
    Rational a_lo = box.a_lo ? *box.a_lo : level_lo();
    Rational b_hi = box.b_hi ? *box.b_hi : level_hi();
    if (a_lo > a || b > b_hi) throw std::runtime_error("degenerate box");
    Subspace fab = f_space(r, a, b);
    Subspace fprime = Subspace::sum(f_space(r, a_lo, b), f_space(r, a, b_hi));
    return fab.dim() - fprime.dim();
}

long WindowCtx::delta_point(long r, const Rational& a, const Rational& b, const Rational& eps) {
    BoxQuery box{a - eps, a, b, b + eps};
    return box_rank(r, box);
}

long resolve_max_periods(const ConfigOptions& opts) {
    if (opts.max_periods > 0) return opts.max_periods;
    if (const char* env = std::getenv("ANGLE_PERSIST_MAX_PERIODS")) {
        long v = std::atol(env);
        if (v >= 4) return v;
    }
    return 64;
}

long delta_point(WindowCtx& ctx, const ComplexWithMap& c, long r, const Rational& a,
                 const Rational& b) {
    CriticalTurns ct = critical_turns(c);
    auto is_critical = [&](const Rational& lv) {
        Rational fp = frac_part(lv);
        return std::binary_search(ct.values.begin(), ct.values.end(), fp);
    };
    if (!is_critical(a) || !is_critical(b)) return 0;
    Rational eps = ct.min_gap / 2;
    long m1 = ctx.delta_point(r, a, b, eps);
    long m2 = ctx.delta_point(r, a, b, eps / 2);
    if (m1 != m2) {
        std::ostringstream os;
        os << "unstable box rank at (" << a.get_str() << ", " << b.get_str() << "): " << m1
           << " vs " << m2 << " (window too small)";
        throw InstabilityError(os.str());
    }
    return m1;
}

namespace {

// One full scan of the fundamental domain on a fixed window; nullopt when a
// box rank failed to stabilize.
std::optional<std::vector<SupportPoint>> scan_window(WindowCtx& ctx, const ComplexWithMap& c,
                                                     long r, const CriticalTurns& ct) {
    std::vector<SupportPoint> pts;
    Rational eps = ct.min_gap / 2;
    long radius = ctx.radius();
    for (const Rational& a : ct.values) {
        for (long k = -radius + 1; k <= radius - 1; ++k) {
            for (const Rational& v : ct.values) {
                Rational b = v + Rational(k);
                if (b - eps < ctx.level_lo() || b + eps > ctx.level_hi()) continue;
                if (a - eps < ctx.level_lo() || a + eps > ctx.level_hi()) continue;
                long m1, m2;
                try {
                    m1 = ctx.delta_point(r, a, b, eps);
                    m2 = ctx.delta_point(r, a, b, eps / 2);
                } catch (const InsufficientMarginError&) {
                    continue;
                }
                if (m1 != m2) return std::nullopt;
                if (m1 > 0) pts.push_back(SupportPoint{a, b, m1});
            }
        }
    }
    std::sort(pts.begin(), pts.end(), [](const SupportPoint& x, const SupportPoint& y) {
        return std::tie(x.a, x.b) < std::tie(y.a, y.b);
    });
    return pts;
}

}  // namespace

Configuration configuration(const ComplexWithMap& c, const FieldDesc& f, long r,
                            const ConfigOptions& opts) {
    long target = novikov_invariants(c, r, f).free_rank;
    CriticalTurns ct = critical_turns(c);
    long cap = resolve_max_periods(opts);
    long last_total = -1;
    for (long radius = opts.start_radius; radius <= cap; ++radius) {
        WindowCtx ctx(c, f, radius);
        auto pts = scan_window(ctx, c, r, ct);
        if (!pts) continue;  // instability: grow
        long total = 0;
        for (auto& p : *pts) total += p.multiplicity;
        last_total = total;
        if (total == target)
            return Configuration{r, f, std::move(*pts), radius, target};
    }
    std::ostringstream os;
    os << "configuration did not stabilize within " << cap << " periods: total multiplicity "
       << last_total << " vs b^N_" << r << " = " << target;
    throw TerminationError(os.str());
}

std::vector<std::complex<double>> char_poly(const Configuration& cfg) {
    std::vector<std::complex<double>> coeffs{1.0};  // ascending; empty product = 1
    for (auto& p : cfg.points) {
        std::complex<double> root = p.z();
        for (long m = 0; m < p.multiplicity; ++m) {
            std::vector<std::complex<double>> next(coeffs.size() + 1, 0.0);
            for (size_t i = 0; i < coeffs.size(); ++i) {
                next[i + 1] += coeffs[i];
                next[i] -= root * coeffs[i];
            }
            coeffs = std::move(next);
        }
    }
    return coeffs;
}

namespace {

// columns of a Laurent matrix from projecting window cycles to the free part
LaurentMatrix project_basis(WindowCtx& ctx, const NovikovStructure& ns, long r,
                            const Subspace& fsp) {
    const FieldDesc& f = ns.field();
    const HomologyQuotient& hq = ctx.homology(r);
    LaurentMatrix out(f, ns.beta(), fsp.dim());
    for (long j = 0; j < fsp.dim(); ++j) {
        auto cycle = hq.lift(fsp.basis().col(j));
        auto twisted = ctx.window().to_twisted(r, cycle);
        auto cls = ns.project_to_free(twisted);
        for (long i = 0; i < ns.beta(); ++i) out.at(i, j) = cls[static_cast<size_t>(i)];
    }
    return out;
}

bool has_unit_divisors(const SmithDecomposition& s) {
    for (auto& d : s.divisors)
        if (!d.is_unit()) return false;
    return true;
}

// lifts of a basis of the free quotient span(L)/span(Lp), as columns
LaurentMatrix quotient_lifts(const LaurentMatrix& L, const LaurentMatrix& Lp) {
    const FieldDesc& f = L.field();
    long k = L.cols();
    // relation module {y | L y in span(Lp)}: kernel of [L | Lp], y-part
    LaurentMatrix cat = LaurentMatrix::hcat(L, Lp);
    LaurentMatrix ker = laurent_kernel(cat);
    LaurentMatrix rel(f, k, ker.cols());
    for (long i = 0; i < k; ++i)
        for (long j = 0; j < ker.cols(); ++j) rel.at(i, j) = ker.at(i, j);
    SmithDecomposition s = snf(rel);
    std::vector<long> free_idx;
    for (long i = s.rank(); i < k; ++i) free_idx.push_back(i);
    // generator change g' = g U: free-part generators are L * (columns of U)
    return L * s.U.cols_slice(free_idx);
}

}  // namespace

ModuleRefinement module_refinement(const ComplexWithMap& c, const FieldDesc& f, long r,
                                   const ConfigOptions& opts) {
    Configuration cfg = configuration(c, f, r, opts);
    NovikovStructure ns(c, r, f);
    ModuleRefinement out{r, ns.beta(), f, {}, true, true};
    WindowCtx ctx(c, f, cfg.window_radius);
    CriticalTurns ct = critical_turns(c);
    Rational eps = ct.min_gap / 2;

    LaurentMatrix assembled(f, ns.beta(), 0);
    for (auto& p : cfg.points) {
        Subspace fab = ctx.f_space(r, p.a, p.b);
        Subspace fprime = Subspace::sum(ctx.f_space(r, p.a - eps, p.b),
                                        ctx.f_space(r, p.a, p.b + eps));
        LaurentMatrix L = project_basis(ctx, ns, r, fab);
        LaurentMatrix Lp = project_basis(ctx, ns, r, fprime);

        SmithDecomposition sl = snf(L), slp = snf(Lp);
        bool split = has_unit_divisors(sl) && has_unit_divisors(slp);
        // L' must lie in the module span of L
        for (long j = 0; j < Lp.cols() && split; ++j) {
            std::vector<LaurentPoly> col;
            for (long i = 0; i < Lp.rows(); ++i) col.push_back(Lp.at(i, j));
            if (!module_solve(sl, col)) split = false;
        }
        long qrank = sl.rank() - slp.rank();
        if (qrank != p.multiplicity) {
            std::ostringstream os;
            os << "refinement certificate failed at (" << p.a.get_str() << ", " << p.b.get_str()
               << "): quotient rank " << qrank << " vs multiplicity " << p.multiplicity;
            throw CertificateError(os.str());
        }
        if (!split) out.split_certified = false;
        LaurentMatrix lifts = quotient_lifts(L, Lp);
        assembled = LaurentMatrix::hcat(assembled, lifts);
        out.entries.push_back(RefinementEntry{p, L, Lp, qrank});
    }
    out.direct_sum_certified =
        assembled.cols() == ns.beta() && (ns.beta() == 0 || is_unimodular(assembled));
    return out;
}

namespace {

Rational cyclic_dist(const Rational& x, const Rational& y) {
    Rational d = frac_part(x - y);
    return std::min(d, Rational(1 - d));
}

// perfect matching feasibility for a boolean cost threshold
bool feasible(const std::vector<std::vector<Rational>>& dist, const Rational& thr) {
    size_t n = dist.size();
    std::vector<long> match(n, -1);
    std::function<bool(size_t, std::vector<char>&)> try_kuhn = [&](size_t u,
                                                                   std::vector<char>& seen) {
        for (size_t v = 0; v < n; ++v) {
            if (dist[u][v] > thr || seen[v]) continue;
            seen[v] = 1;
            if (match[v] < 0 || try_kuhn(static_cast<size_t>(match[v]), seen)) {
                match[v] = static_cast<long>(u);
                return true;
            }
        }
        return false;
    };
    for (size_t u = 0; u < n; ++u) {
        std::vector<char> seen(n, 0);
        if (!try_kuhn(u, seen)) return false;
    }
    return true;
}

}  // namespace

CollisionDistance collision_distance(const Configuration& c1, const Configuration& c2) {
    if (c1.total_multiplicity() != c2.total_multiplicity())
        return CollisionDistance{true, Rational(0)};
    std::vector<SupportPoint> p1, p2;
    for (auto& p : c1.points)
        for (long m = 0; m < p.multiplicity; ++m) p1.push_back(p);
    for (auto& p : c2.points)
        for (long m = 0; m < p.multiplicity; ++m) p2.push_back(p);
    size_t n = p1.size();
    if (n == 0) return CollisionDistance{false, Rational(0)};
    std::vector<std::vector<Rational>> dist(n, std::vector<Rational>(n, Rational(0)));
    std::vector<Rational> candidates;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            Rational da = cyclic_dist(p1[i].a, p2[j].a);
            Rational db = (p1[i].b - p1[i].a) - (p2[j].b - p2[j].a);
            if (db < 0) db = -db;
            dist[i][j] = std::max(da, db);
            candidates.push_back(dist[i][j]);
        }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    size_t lo = 0, hi = candidates.size() - 1;
    while (lo < hi) {
        size_t mid = (lo + hi) / 2;
        if (feasible(dist, candidates[mid]))
            hi = mid;
        else
            lo = mid + 1;
    }
    return CollisionDistance{false, candidates[lo]};
}

DualityReport duality_check(const std::vector<Configuration>& cfgs, long n, bool is_manifold) {
    DualityReport out{is_manifold, n, {}};
    if (!is_manifold) return out;
    auto find_mult = [&](long r, const Rational& a, const Rational& b) -> long {
        for (auto& cfg : cfgs) {
            if (cfg.r != r) continue;
            for (auto& p : cfg.points)
                if (p.a == a && p.b == b) return p.multiplicity;
            return 0;
        }
        return 0;
    };
    for (auto& cfg : cfgs) {
        long rdual = n - cfg.r;
        for (auto& p : cfg.points) {
            // i * conj(z): angle 1/4 - a, same log-modulus b - a
            Rational a2 = frac_part(Rational(1, 4) - p.a);
            Rational b2 = a2 + (p.b - p.a);
            long found = find_mult(rdual, a2, b2);
            if (found != p.multiplicity)
                out.mismatches.push_back(DualityMismatch{cfg.r, p, p.multiplicity, found});
        }
    }
    return out;
}

}  // namespace angp
