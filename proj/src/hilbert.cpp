#include "angle_persist/hilbert.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace angp {

namespace {
constexpr double kSingularTol = 1e-12;
}

CMatrix CMatrix::identity(long n) {
    CMatrix m(n, n);
    for (long i = 0; i < n; ++i) m.at(i, i) = 1.0;
    return m;
}

CMatrix CMatrix::operator*(const CMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("CMatrix: shape mismatch");
    CMatrix r(rows_, o.cols_);
    for (long i = 0; i < rows_; ++i)
        for (long k = 0; k < cols_; ++k) {
            std::complex<double> a = at(i, k);
            if (a == 0.0) continue;
            for (long j = 0; j < o.cols_; ++j) r.at(i, j) += a * o.at(k, j);
        }
    return r;
}

CMatrix CMatrix::operator+(const CMatrix& o) const {
    CMatrix r(rows_, cols_);
    for (size_t i = 0; i < d_.size(); ++i) r.d_[i] = d_[i] + o.d_[i];
    return r;
}

CMatrix CMatrix::operator-(const CMatrix& o) const {
    CMatrix r(rows_, cols_);
    for (size_t i = 0; i < d_.size(); ++i) r.d_[i] = d_[i] - o.d_[i];
    return r;
}

CMatrix CMatrix::adjoint() const {
    CMatrix r(cols_, rows_);
    for (long i = 0; i < rows_; ++i)
        for (long j = 0; j < cols_; ++j) r.at(j, i) = std::conj(at(i, j));
    return r;
}

std::complex<double> CMatrix::trace() const {
    std::complex<double> t = 0.0;
    for (long i = 0; i < std::min(rows_, cols_); ++i) t += at(i, i);
    return t;
}

double CMatrix::max_abs() const {
    double m = 0.0;
    for (const auto& v : d_) m = std::max(m, std::abs(v));
    return m;
}

CMatrix evaluate_at_angle(const LaurentMatrix& g, double theta) {
    CMatrix r(g.rows(), g.cols());
    for (long i = 0; i < g.rows(); ++i)
        for (long j = 0; j < g.cols(); ++j) r.at(i, j) = g.at(i, j).evaluate_unit(theta);
    return r;
}

namespace {

// Solve the Hermitian positive system H X = B in place by Gaussian
// elimination with partial pivoting; false when H is numerically singular.
bool solve_gram(CMatrix h, CMatrix& b) {
    long n = h.rows();
    for (long c = 0; c < n; ++c) {
        long piv = c;
        for (long i = c + 1; i < n; ++i)
            if (std::abs(h.at(i, c)) > std::abs(h.at(piv, c))) piv = i;
        if (std::abs(h.at(piv, c)) < kSingularTol) return false;
        if (piv != c) {
            for (long j = 0; j < n; ++j) std::swap(h.at(piv, j), h.at(c, j));
            for (long j = 0; j < b.cols(); ++j) std::swap(b.at(piv, j), b.at(c, j));
        }
        std::complex<double> inv = 1.0 / h.at(c, c);
        for (long j = 0; j < n; ++j) h.at(c, j) *= inv;
        for (long j = 0; j < b.cols(); ++j) b.at(c, j) *= inv;
        for (long i = 0; i < n; ++i) {
            if (i == c) continue;
            std::complex<double> f = h.at(i, c);
            if (f == 0.0) continue;
            for (long j = 0; j < n; ++j) h.at(i, j) -= f * h.at(c, j);
            for (long j = 0; j < b.cols(); ++j) b.at(i, j) -= f * b.at(c, j);
        }
    }
    return true;
}

}  // namespace

std::optional<CMatrix> projector_at(const LaurentMatrix& g, double theta) {
    long beta = g.rows();
    if (g.cols() == 0) return CMatrix(beta, beta);  // span of nothing: zero projector
    CMatrix gc = evaluate_at_angle(g, theta);
    CMatrix gstar = gc.adjoint();
    CMatrix gram = gstar * gc;
    CMatrix x = gstar;  // becomes (G*G)^{-1} G*
    if (!solve_gram(gram, x)) return std::nullopt;
    return gc * x;
}

std::optional<CMatrix> hat_hat_projector(const LaurentMatrix& l, const LaurentMatrix& lp,
                                         double theta) {
    auto pl = projector_at(l, theta);
    auto plp = projector_at(lp, theta);
    if (!pl || !plp) return std::nullopt;
    return *pl - *plp;
}

VnDimension vn_dimension(const PointwiseProjector& q, long ngrid) {
    if (ngrid < 16) throw std::invalid_argument("vn_dimension: grid too small");
    double sum = 0.0;
    long used = 0, singular = 0;
    for (long j = 0; j < ngrid; ++j) {
        double theta = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(ngrid);
        auto m = q(theta);
        if (!m) {
            ++singular;
            continue;
        }
        sum += m->trace().real();
        ++used;
    }
    VnDimension out{};
    out.singular_nodes = singular;
    out.unreliable = singular * 100 > ngrid;
    out.value = used > 0 ? sum / static_cast<double>(used) : 0.0;
    return out;
}

OrthogonalityReport orthogonality_report(const std::vector<PointwiseProjector>& entries,
                                         long ngrid) {
    OrthogonalityReport rep{0.0, 0.0, 0.0, 0.0, 0};
    if (entries.empty()) return rep;
    long beta = entries.front().beta();
    for (long j = 0; j < ngrid; ++j) {
        double theta = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(ngrid);
        std::vector<CMatrix> qs;
        bool ok = true;
        for (const auto& e : entries) {
            auto m = e(theta);
            if (!m) {
                ok = false;
                break;
            }
            qs.push_back(*m);
        }
        if (!ok) {
            ++rep.singular_nodes;
            continue;
        }
        CMatrix total(beta, beta);
        for (size_t i = 0; i < qs.size(); ++i) {
            rep.max_idempotent_dev =
                std::max(rep.max_idempotent_dev, (qs[i] * qs[i] - qs[i]).max_abs());
            rep.max_self_adjoint_dev =
                std::max(rep.max_self_adjoint_dev, (qs[i].adjoint() - qs[i]).max_abs());
            total = total + qs[i];
            for (size_t k = 0; k < qs.size(); ++k)
                if (k != i)
                    rep.max_cross_product = std::max(rep.max_cross_product, (qs[i] * qs[k]).max_abs());
        }
        rep.max_sum_identity_dev =
            std::max(rep.max_sum_identity_dev, (total - CMatrix::identity(beta)).max_abs());
    }
    return rep;
}

}  // namespace angp
