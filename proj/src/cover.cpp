#include "angle_persist/cover.hpp"

#include <algorithm>

namespace angp {

namespace {

// period offset of the anchored lift of the face within its carrier's lift
long face_period_offset(const ComplexWithMap& c, const Simplex& s, const Simplex& face) {
    long as = ComplexWithMap::anchor(s), af = ComplexWithMap::anchor(face);
    if (as == af) return 0;
    return c.winding(as, af);
}

Simplex face_of(const Simplex& s, size_t drop) {
    Simplex f;
    for (size_t i = 0; i < s.size(); ++i)
        if (i != drop) f.push_back(s[i]);
    return f;
}

}  // namespace

LaurentMatrix twisted_boundary(const ComplexWithMap& c, long q, const FieldDesc& f) {
    long rows = c.count(q - 1), cols = c.count(q);
    LaurentMatrix m(f, rows, cols);
    if (q < 1 || q > c.dim()) return LaurentMatrix(f, rows, 0);
    const auto& simps = c.simplices(q);
    for (long j = 0; j < cols; ++j) {
        const Simplex& s = simps[static_cast<size_t>(j)];
        for (size_t drop = 0; drop < s.size(); ++drop) {
            Simplex face = face_of(s, drop);
            long i = c.simplex_index(q - 1, face);
            long k = face_period_offset(c, s, face);
            Scalar sign(f, drop % 2 == 0 ? 1 : -1);
            m.at(i, j) = m.at(i, j) + LaurentPoly::monomial(sign, k);
        }
    }
    return m;
}

NovikovStructure::NovikovStructure(const ComplexWithMap& c, long r, const FieldDesc& f)
    : f_(f),
      r_(r),
      n_r_(c.count(r)),
      snf_dr_(snf(LaurentMatrix(f, 0, 0))),
      snf_rel_(snf(LaurentMatrix(f, 0, 0))) {
    if (r < 0 || r > c.dim()) {
        inv_ = NovikovInvariants{r, 0, {}, 0};
        trivial_kernel_ = true;
        cycle_rank_ = n_r_;
        return;
    }
    LaurentMatrix d_r1 = twisted_boundary(c, r + 1, f);
    LaurentMatrix rel(f, 0, 0);
    if (r == 0) {
        trivial_kernel_ = true;
        cycle_rank_ = n_r_;
        rel = d_r1;
    } else {
        LaurentMatrix d_r = twisted_boundary(c, r, f);
        snf_dr_ = snf(d_r);
        cycle_rank_ = n_r_ - snf_dr_.rank();
        // relations of H_r in kernel coordinates: rows [rank..n_r) of V * d_{r+1}
        LaurentMatrix vd = snf_dr_.V * d_r1;
        rel = LaurentMatrix(f, cycle_rank_, d_r1.cols());
        for (long i = 0; i < cycle_rank_; ++i)
            for (long j = 0; j < d_r1.cols(); ++j) rel.at(i, j) = vd.at(snf_dr_.rank() + i, j);
    }
    snf_rel_ = snf(rel);
    torsion_count_ = snf_rel_.rank();
    PresentationInvariants pi;
    pi.free_rank = cycle_rank_ - snf_rel_.rank();
    pi.torsion_dim = 0;
    for (auto& d : snf_rel_.divisors)
        if (!d.is_unit()) {
            pi.invariant_factors.push_back(d);
            pi.torsion_dim += d.max_deg();
        }
    inv_ = NovikovInvariants{r, pi.free_rank, pi.invariant_factors, pi.torsion_dim};
}

std::vector<LaurentPoly> NovikovStructure::kernel_coords(
    const std::vector<LaurentPoly>& chain) const {
    if (static_cast<long>(chain.size()) != n_r_) throw std::runtime_error("chain length mismatch");
    if (trivial_kernel_) return chain;
    long rank = snf_dr_.rank();
    std::vector<LaurentPoly> out(static_cast<size_t>(cycle_rank_), LaurentPoly::zero(f_));
    for (long i = 0; i < n_r_; ++i) {
        LaurentPoly acc = LaurentPoly::zero(f_);
        for (long k = 0; k < n_r_; ++k) acc = acc + snf_dr_.V.at(i, k) * chain[static_cast<size_t>(k)];
        if (i < rank) {
            if (!acc.is_zero()) throw std::runtime_error("chain is not a cycle");
        } else {
            out[static_cast<size_t>(i - rank)] = acc;
        }
    }
    return out;
}

std::vector<LaurentPoly> NovikovStructure::project_to_free(
    const std::vector<LaurentPoly>& chain) const {
    auto y = kernel_coords(chain);
    long beta = inv_.free_rank;
    std::vector<LaurentPoly> u(static_cast<size_t>(cycle_rank_), LaurentPoly::zero(f_));
    for (long i = 0; i < cycle_rank_; ++i)
        for (long k = 0; k < cycle_rank_; ++k)
            u[static_cast<size_t>(i)] =
                u[static_cast<size_t>(i)] + snf_rel_.Uinv.at(i, k) * y[static_cast<size_t>(k)];
    std::vector<LaurentPoly> out(static_cast<size_t>(beta), LaurentPoly::zero(f_));
    for (long i = 0; i < beta; ++i) out[static_cast<size_t>(i)] = u[static_cast<size_t>(torsion_count_ + i)];
    return out;
}

NovikovInvariants novikov_invariants(const ComplexWithMap& c, long r, const FieldDesc& f) {
    return NovikovStructure(c, r, f).invariants();
}

WindowComplex::WindowComplex(const ComplexWithMap& c, const FieldDesc& f, long m_lo, long m_hi)
    : base_(&c), f_(f), m_lo_(m_lo), m_hi_(m_hi) {
    if (m_lo > m_hi) throw std::runtime_error("window: m_lo > m_hi");
    cells_.resize(static_cast<size_t>(c.dim()) + 1);
    pos_.resize(cells_.size());
    Rational lo(m_lo), hi(m_hi + 1);
    for (long d = 0; d <= c.dim(); ++d) {
        const auto& simps = c.simplices(d);
        for (long i = 0; i < c.count(d); ++i) {
            auto lv = c.lifted_levels(simps[static_cast<size_t>(i)]);
            auto [mn, mx] = std::minmax_element(lv.begin(), lv.end());
            // all levels of (sigma, k) must land in [m_lo, m_hi+1)
            long k_lo = -floor_long(*mn - lo);  // ceil(lo - mn)
            for (long k = k_lo; *mx + k < hi; ++k) {
                pos_[static_cast<size_t>(d)][{i, k}] =
                    static_cast<long>(cells_[static_cast<size_t>(d)].size());
                cells_[static_cast<size_t>(d)].push_back(LiftedCell{i, k});
            }
        }
    }
    // boundary matrices
    bnd_.reserve(cells_.size());
    bnd_.emplace_back(f, 0, count(0));  // placeholder for q = 0
    for (long q = 1; q <= dim(); ++q) {
        ScalarMatrix m(f, count(q - 1), count(q));
        const auto& simps = c.simplices(q);
        for (long j = 0; j < count(q); ++j) {
            const LiftedCell& cell = cells_[static_cast<size_t>(q)][static_cast<size_t>(j)];
            const Simplex& s = simps[static_cast<size_t>(cell.idx)];
            for (size_t drop = 0; drop < s.size(); ++drop) {
                Simplex face = face_of(s, drop);
                long fi = c.simplex_index(q - 1, face);
                long fk = cell.period + face_period_offset(c, s, face);
                auto it = pos_[static_cast<size_t>(q - 1)].find({fi, fk});
                if (it == pos_[static_cast<size_t>(q - 1)].end())
                    throw std::logic_error("window not face-closed");
                Scalar sign(f, drop % 2 == 0 ? 1 : -1);
                m.at(it->second, j) = m.at(it->second, j) + sign;
            }
        }
        bnd_.push_back(m);
    }
}

long WindowComplex::count(long d) const {
    if (d < 0 || d > dim()) return 0;
    return static_cast<long>(cells_[static_cast<size_t>(d)].size());
}

Rational WindowComplex::cell_min_level(long d, long p) const {
    const LiftedCell& cell = cells_[static_cast<size_t>(d)][static_cast<size_t>(p)];
    auto lv = base_->lifted_levels(base_->simplices(d)[static_cast<size_t>(cell.idx)]);
    return *std::min_element(lv.begin(), lv.end()) + Rational(cell.period);
}

Rational WindowComplex::cell_max_level(long d, long p) const {
    const LiftedCell& cell = cells_[static_cast<size_t>(d)][static_cast<size_t>(p)];
    auto lv = base_->lifted_levels(base_->simplices(d)[static_cast<size_t>(cell.idx)]);
    return *std::max_element(lv.begin(), lv.end()) + Rational(cell.period);
}

long WindowComplex::shift_pos(long d, long p) const {
    const LiftedCell& cell = cells_[static_cast<size_t>(d)][static_cast<size_t>(p)];
    auto it = pos_[static_cast<size_t>(d)].find({cell.idx, cell.period + 1});
    return it == pos_[static_cast<size_t>(d)].end() ? -1 : it->second;
}

CellSubset WindowComplex::star_subcomplex(const Rational& level, Side side) const {
    CellSubset out;
    out.member.resize(cells_.size());
    for (long d = 0; d <= dim(); ++d) {
        out.member[static_cast<size_t>(d)].resize(static_cast<size_t>(count(d)));
        for (long p = 0; p < count(d); ++p) {
            bool in = side == Side::sub ? cell_max_level(d, p) <= level
                                        : cell_min_level(d, p) >= level;
            out.member[static_cast<size_t>(d)][static_cast<size_t>(p)] = in ? 1 : 0;
        }
    }
    return out;
}

std::vector<LaurentPoly> WindowComplex::to_twisted(long d, const std::vector<Scalar>& chain) const {
    std::vector<LaurentPoly> out(static_cast<size_t>(base_->count(d)), LaurentPoly::zero(f_));
    for (long p = 0; p < count(d); ++p) {
        const Scalar& c = chain[static_cast<size_t>(p)];
        if (c.is_zero()) continue;
        const LiftedCell& cell = cells_[static_cast<size_t>(d)][static_cast<size_t>(p)];
        out[static_cast<size_t>(cell.idx)] =
            out[static_cast<size_t>(cell.idx)] + LaurentPoly::monomial(c, cell.period);
    }
    return out;
}

HomologyQuotient::HomologyQuotient(const ScalarMatrix& bnd_r, const ScalarMatrix& bnd_r1)
    : f_(bnd_r.field()), n_(bnd_r.cols()), bc_(bnd_r.field(), bnd_r.cols(), 0) {
    ReduceResult zr = field_reduce(bnd_r);
    ReduceResult br = field_reduce(bnd_r1);
    const ScalarMatrix& bbasis = br.image.basis();
    b_ = bbasis.cols();
    // extend the boundary basis to a basis of the cycle space
    ScalarMatrix cand = ScalarMatrix::hcat(bbasis, zr.kernel.basis());
    ScalarMatrix red = cand;
    auto pivots = red.rref();
    std::vector<long> chosen;
    for (long p : pivots)
        if (p >= b_) chosen.push_back(p);
    h_ = static_cast<long>(chosen.size());
    bc_ = ScalarMatrix::hcat(bbasis, cand.cols_slice(chosen));
}

std::vector<Scalar> HomologyQuotient::coords(const std::vector<Scalar>& cycle) const {
    std::vector<Scalar> g;
    if (!solve(bc_, cycle, g)) throw std::logic_error("vector is not a cycle of this complex");
    return std::vector<Scalar>(g.begin() + b_, g.end());
}

std::vector<Scalar> HomologyQuotient::lift(const std::vector<Scalar>& coords) const {
    std::vector<Scalar> out(static_cast<size_t>(n_), Scalar::zero(f_));
    for (long j = 0; j < h_; ++j)
        for (long i = 0; i < n_; ++i)
            out[static_cast<size_t>(i)] = out[static_cast<size_t>(i)] + bc_.at(i, b_ + j) * coords[static_cast<size_t>(j)];
    return out;
}

HomologyQuotient window_homology(const WindowComplex& w, long r) {
    const FieldDesc& f = w.field();
    ScalarMatrix br = r >= 1 && r <= w.dim() ? w.boundary(r) : ScalarMatrix(f, 0, w.count(r));
    ScalarMatrix br1 = r + 1 <= w.dim() ? w.boundary(r + 1) : ScalarMatrix(f, w.count(r), 0);
    return HomologyQuotient(br, br1);
}

}  // namespace angp
