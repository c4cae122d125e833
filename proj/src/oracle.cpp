#include "angle_persist/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace angp {

namespace {

// Plain dense matrices as row vectors; everything below is deliberately
// the simplest possible elimination code, independent of the main engine.
using Mat = std::vector<std::vector<Scalar>>;

long mat_cols(const Mat& m) { return m.empty() ? 0 : static_cast<long>(m[0].size()); }

long rank_of(Mat m) {
    long rows = static_cast<long>(m.size());
    long cols = mat_cols(m);
    long r = 0;
    for (long c = 0; c < cols && r < rows; ++c) {
        long piv = -1;
        for (long i = r; i < rows; ++i)
            if (!m[static_cast<size_t>(i)][static_cast<size_t>(c)].is_zero()) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(m[static_cast<size_t>(r)], m[static_cast<size_t>(piv)]);
        Scalar inv = m[static_cast<size_t>(r)][static_cast<size_t>(c)].inverse();
        for (long j = c; j < cols; ++j)
            m[static_cast<size_t>(r)][static_cast<size_t>(j)] = m[static_cast<size_t>(r)][static_cast<size_t>(j)] * inv;
        for (long i = 0; i < rows; ++i) {
            if (i == r) continue;
            Scalar f = m[static_cast<size_t>(i)][static_cast<size_t>(c)];
            if (f.is_zero()) continue;
            for (long j = c; j < cols; ++j)
                m[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                    m[static_cast<size_t>(i)][static_cast<size_t>(j)] - f * m[static_cast<size_t>(r)][static_cast<size_t>(j)];
        }
        ++r;
    }
    return r;
}

// columns spanning {x | m x = 0}
std::vector<std::vector<Scalar>> kernel_of(Mat m, const FieldDesc& f) {
    long rows = static_cast<long>(m.size());
    long cols = mat_cols(m);
    std::vector<long> pivot_col;
    long r = 0;
    for (long c = 0; c < cols && r < rows; ++c) {
        long piv = -1;
        for (long i = r; i < rows; ++i)
            if (!m[static_cast<size_t>(i)][static_cast<size_t>(c)].is_zero()) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(m[static_cast<size_t>(r)], m[static_cast<size_t>(piv)]);
        Scalar inv = m[static_cast<size_t>(r)][static_cast<size_t>(c)].inverse();
        for (long j = c; j < cols; ++j)
            m[static_cast<size_t>(r)][static_cast<size_t>(j)] = m[static_cast<size_t>(r)][static_cast<size_t>(j)] * inv;
        for (long i = 0; i < rows; ++i) {
            if (i == r) continue;
            Scalar fac = m[static_cast<size_t>(i)][static_cast<size_t>(c)];
            if (fac.is_zero()) continue;
            for (long j = c; j < cols; ++j)
                m[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                    m[static_cast<size_t>(i)][static_cast<size_t>(j)] - fac * m[static_cast<size_t>(r)][static_cast<size_t>(j)];
        }
        pivot_col.push_back(c);
        ++r;
    }
    std::vector<std::vector<Scalar>> out;
    std::vector<char> is_pivot(static_cast<size_t>(cols), 0);
    for (long c : pivot_col) is_pivot[static_cast<size_t>(c)] = 1;
    for (long c = 0; c < cols; ++c) {
        if (is_pivot[static_cast<size_t>(c)]) continue;
        std::vector<Scalar> v(static_cast<size_t>(cols), Scalar::zero(f));
        v[static_cast<size_t>(c)] = Scalar::one(f);
        for (size_t pr = 0; pr < pivot_col.size(); ++pr)
            v[static_cast<size_t>(pivot_col[pr])] = -m[pr][static_cast<size_t>(c)];
        out.push_back(std::move(v));
    }
    return out;
}

struct OracleWindow {
    const ComplexWithMap* base;
    FieldDesc f;
    long lo, hi;  // levels live in [lo, hi + 1)
    // per dimension: (simplex index, period)
    std::vector<std::vector<std::pair<long, long>>> cells;
    std::vector<std::map<std::pair<long, long>, long>> pos;
    std::vector<Mat> bnd;  // bnd[q]: rows (q-1)-cells, cols q-cells

    std::vector<Rational> cell_levels(long d, long i) const {
        auto [si, k] = cells[static_cast<size_t>(d)][static_cast<size_t>(i)];
        auto lv = base->lifted_levels(base->simplices(d)[static_cast<size_t>(si)]);
        for (auto& x : lv) x += k;
        return lv;
    }
};

OracleWindow build_window(const ComplexWithMap& c, const FieldDesc& f, long n) {
    OracleWindow w;
    w.base = &c;
    w.f = f;
    w.lo = -n;
    w.hi = n;
    long dim = c.dim();
    w.cells.resize(static_cast<size_t>(dim + 1));
    w.pos.resize(static_cast<size_t>(dim + 1));
    for (long d = 0; d <= dim; ++d) {
        for (long si = 0; si < c.count(d); ++si) {
            auto lv = c.lifted_levels(c.simplices(d)[static_cast<size_t>(si)]);
            Rational mn = *std::min_element(lv.begin(), lv.end());
            Rational mx = *std::max_element(lv.begin(), lv.end());
            for (long k = -3 * n - 4; k <= 3 * n + 4; ++k) {
                if (mn + k < w.lo || !(mx + k < w.hi + 1)) continue;
                w.pos[static_cast<size_t>(d)][{si, k}] =
                    static_cast<long>(w.cells[static_cast<size_t>(d)].size());
                w.cells[static_cast<size_t>(d)].push_back({si, k});
            }
        }
    }
    w.bnd.resize(static_cast<size_t>(dim + 1));
    for (long q = 1; q <= dim; ++q) {
        long nr = static_cast<long>(w.cells[static_cast<size_t>(q - 1)].size());
        long nc = static_cast<long>(w.cells[static_cast<size_t>(q)].size());
        Mat m(static_cast<size_t>(nr), std::vector<Scalar>(static_cast<size_t>(nc), Scalar::zero(f)));
        for (long j = 0; j < nc; ++j) {
            auto [si, k] = w.cells[static_cast<size_t>(q)][static_cast<size_t>(j)];
            const auto& verts = c.simplices(q)[static_cast<size_t>(si)];
            auto lv = c.lifted_levels(c.simplices(q)[static_cast<size_t>(si)]);
            for (size_t drop = 0; drop < verts.size(); ++drop) {
                std::vector<long> face;
                for (size_t t = 0; t < verts.size(); ++t)
                    if (t != drop) face.push_back(verts[t]);
                long fi = c.simplex_index(q - 1, face);
                auto flv = c.lifted_levels(c.simplices(q - 1)[static_cast<size_t>(fi)]);
                // period shift aligning the face's anchored lift with the
                // face of this lifted cell (first remaining vertex)
                size_t keep = drop == 0 ? 1 : 0;
                Rational want = lv[keep] + k;
                Rational diff = want - flv[0];
                long off = floor_long(diff);
                auto it = w.pos[static_cast<size_t>(q - 1)].find({fi, off});
                if (it == w.pos[static_cast<size_t>(q - 1)].end())
                    throw std::logic_error("oracle window not face-closed");
                Scalar sgn = (drop % 2 == 0) ? Scalar::one(f) : -Scalar::one(f);
                m[static_cast<size_t>(it->second)][static_cast<size_t>(j)] =
                    m[static_cast<size_t>(it->second)][static_cast<size_t>(j)] + sgn;
            }
        }
        w.bnd[static_cast<size_t>(q)] = std::move(m);
    }
    return w;
}

// cycles of the full subcomplex of cells with max level <= a (sub) or
// min level >= b (super), embedded as window chains (columns)
std::vector<std::vector<Scalar>> level_cycles(const OracleWindow& w, long r, const Rational& lv,
                                              bool sub) {
    long nr = static_cast<long>(w.cells[static_cast<size_t>(r)].size());
    std::vector<long> member;
    for (long i = 0; i < nr; ++i) {
        auto levels = w.cell_levels(r, i);
        bool in = true;
        for (auto& x : levels)
            if (sub ? (x > lv) : (x < lv)) in = false;
        if (in) member.push_back(i);
    }
    std::vector<std::vector<Scalar>> out;
    if (member.empty()) return out;
    std::vector<std::vector<Scalar>> ker;
    if (r == 0) {
        // every vertex chain is a cycle
        for (long mi = 0; mi < static_cast<long>(member.size()); ++mi) {
            std::vector<Scalar> v(member.size(), Scalar::zero(w.f));
            v[static_cast<size_t>(mi)] = Scalar::one(w.f);
            ker.push_back(std::move(v));
        }
    } else {
        const Mat& full = w.bnd[static_cast<size_t>(r)];
        Mat m(full.size(), std::vector<Scalar>(member.size(), Scalar::zero(w.f)));
        for (size_t i = 0; i < full.size(); ++i)
            for (size_t j = 0; j < member.size(); ++j)
                m[i][j] = full[i][static_cast<size_t>(member[j])];
        ker = kernel_of(std::move(m), w.f);
    }
    for (const auto& kv : ker) {
        std::vector<Scalar> chain(static_cast<size_t>(nr), Scalar::zero(w.f));
        for (size_t j = 0; j < member.size(); ++j) chain[static_cast<size_t>(member[j])] = kv[j];
        out.push_back(std::move(chain));
    }
    return out;
}

std::vector<std::vector<Scalar>> boundary_cols(const OracleWindow& w, long r) {
    std::vector<std::vector<Scalar>> out;
    if (r + 1 > w.base->dim()) return out;
    const Mat& m = w.bnd[static_cast<size_t>(r + 1)];
    long nc = mat_cols(m);
    for (long j = 0; j < nc; ++j) {
        std::vector<Scalar> col(m.size(), Scalar::zero(w.f));
        for (size_t i = 0; i < m.size(); ++i) col[i] = m[i][static_cast<size_t>(j)];
        out.push_back(std::move(col));
    }
    return out;
}

Mat as_rows(const std::vector<std::vector<std::vector<Scalar>>>& groups, const FieldDesc& f) {
    size_t n = 0;
    for (const auto& g : groups)
        if (!g.empty()) n = g.front().size();
    size_t total = 0;
    for (const auto& g : groups) total += g.size();
    Mat m(n, std::vector<Scalar>(total, Scalar::zero(f)));
    size_t col = 0;
    for (const auto& g : groups)
        for (const auto& v : g) {
            for (size_t i = 0; i < n; ++i) m[i][col] = v[i];
            ++col;
        }
    return m;
}

// basis (as window chains) of span(A) ∩ (span(B) + span(Bnd))
std::vector<std::vector<Scalar>> intersect_mod(const std::vector<std::vector<Scalar>>& a,
                                               const std::vector<std::vector<Scalar>>& b,
                                               const std::vector<std::vector<Scalar>>& bnd,
                                               const FieldDesc& f) {
    if (a.empty()) return {};
    Mat cat = as_rows({a, b, bnd}, f);
    auto ker = kernel_of(std::move(cat), f);
    size_t n = a.front().size();
    std::vector<std::vector<Scalar>> out;
    for (const auto& kv : ker) {
        std::vector<Scalar> v(n, Scalar::zero(f));
        bool nz = false;
        for (size_t j = 0; j < a.size(); ++j)
            if (!kv[j].is_zero()) {
                nz = true;
                for (size_t i = 0; i < n; ++i) v[i] = v[i] + kv[j] * a[j][i];
            }
        if (nz) out.push_back(std::move(v));
    }
    return out;
}

// dim of (span of all groups) modulo span(bnd)
long dim_mod(const std::vector<std::vector<std::vector<Scalar>>>& groups,
             const std::vector<std::vector<Scalar>>& bnd, const FieldDesc& f) {
    auto with = groups;
    with.push_back(bnd);
    return rank_of(as_rows(with, f)) - rank_of(as_rows({bnd}, f));
}

struct WindowScan {
    OracleWindow w;
    std::vector<std::vector<Scalar>> bnd;
    std::map<std::tuple<Rational, Rational>, std::vector<std::vector<Scalar>>> fcache;

    const std::vector<std::vector<Scalar>>& fspace(long r, const Rational& a, const Rational& b) {
        auto key = std::make_tuple(a, b);
        auto it = fcache.find(key);
        if (it != fcache.end()) return it->second;
        auto za = level_cycles(w, r, a, true);
        auto zb = level_cycles(w, r, b, false);
        auto fs = intersect_mod(za, zb, bnd, w.f);
        return fcache.emplace(key, std::move(fs)).first->second;
    }
};

long oracle_delta_point(WindowScan& s, long r, const Rational& a, const Rational& b,
                        const Rational& eps) {
    const auto& fab = s.fspace(r, a, b);
    const auto& f1 = s.fspace(r, a - eps, b);
    const auto& f2 = s.fspace(r, a, b + eps);
    const FieldDesc& f = s.w.f;
    return dim_mod({fab}, s.bnd, f) - dim_mod({f1, f2}, s.bnd, f);
}

}  // namespace

OracleReport oracle_delta(const ComplexWithMap& c, long r, const std::vector<long>& windows,
                          const FieldDesc& f) {
    OracleReport rep;
    rep.quantity = "delta_r=" + std::to_string(r);
    rep.window_sizes = windows;
    CriticalTurns ct = critical_turns(c);
    Rational eps = ct.min_gap / 2;
    for (long n : windows) {
        WindowScan s{build_window(c, f, n), {}, {}};
        s.bnd = boundary_cols(s.w, r);
        std::map<std::pair<Rational, Rational>, long> support;
        Rational level_lo = Rational(s.w.lo + 1), level_hi = Rational(s.w.hi);
        for (const Rational& a : ct.values) {
            for (long k = -n + 1; k <= n - 1; ++k) {
                for (const Rational& v : ct.values) {
                    Rational b = v + k;
                    if (a - eps < level_lo || a + eps > level_hi) continue;
                    if (b - eps < level_lo || b + eps > level_hi) continue;
                    long m = oracle_delta_point(s, r, a, b, eps);
                    if (m > 0) support[{a, b}] = m;
                }
            }
        }
        rep.supports.push_back(std::move(support));
    }
    rep.stabilized = false;
    size_t k = rep.supports.size();
    if (k >= 3 && rep.supports[k - 1] == rep.supports[k - 2] &&
        rep.supports[k - 2] == rep.supports[k - 3]) {
        rep.stabilized = true;
        rep.stable_support = rep.supports.back();
    }
    return rep;
}

OracleReport oracle_betti_slope(const ComplexWithMap& c, long r, long n, const FieldDesc& f) {
    if (n < 4) throw std::invalid_argument("oracle_betti_slope: window too small");
    OracleReport rep;
    rep.quantity = "betti_slope_r=" + std::to_string(r);
    for (long size = n - 2; size <= n; ++size) {
        rep.window_sizes.push_back(size);
        OracleWindow w = build_window(c, f, size);
        long nr = static_cast<long>(w.cells[static_cast<size_t>(r)].size());
        long cycles;
        if (r == 0) {
            cycles = nr;
        } else {
            long rk = rank_of(w.bnd[static_cast<size_t>(r)]);
            cycles = nr - rk;
        }
        long brank = (r + 1 <= c.dim()) ? rank_of(w.bnd[static_cast<size_t>(r + 1)]) : 0;
        rep.dims.push_back(cycles - brank);
    }
    long d1 = rep.dims[1] - rep.dims[0];
    long d2 = rep.dims[2] - rep.dims[1];
    rep.stabilized = (d1 == d2);
    rep.slope = d2;
    return rep;
}

}  // namespace angp
