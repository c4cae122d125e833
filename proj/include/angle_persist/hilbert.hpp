#pragma once

#include "angle_persist/smith.hpp"

#include <complex>
#include <optional>

namespace angp {

// Small dense complex matrix; enough for beta x beta projector work.
class CMatrix {
public:
    CMatrix(long rows, long cols)
        : rows_(rows), cols_(cols), d_(static_cast<size_t>(rows * cols), 0.0) {}

    static CMatrix identity(long n);

    long rows() const { return rows_; }
    long cols() const { return cols_; }
    std::complex<double>& at(long i, long j) { return d_[static_cast<size_t>(i * cols_ + j)]; }
    const std::complex<double>& at(long i, long j) const {
        return d_[static_cast<size_t>(i * cols_ + j)];
    }

    CMatrix operator*(const CMatrix& o) const;
    CMatrix operator+(const CMatrix& o) const;
    CMatrix operator-(const CMatrix& o) const;
    CMatrix adjoint() const;

    std::complex<double> trace() const;
    double max_abs() const;  // entrywise sup norm

private:
    long rows_, cols_;
    std::vector<std::complex<double>> d_;
};

// G evaluated at t = e^{i theta}; requires rational coefficients
CMatrix evaluate_at_angle(const LaurentMatrix& g, double theta);

// Orthogonal projection onto the column span of G(e^{i theta});
// nullopt when the Gram matrix is numerically singular at theta.
std::optional<CMatrix> projector_at(const LaurentMatrix& g, double theta);

// P_L(theta) - P_L'(theta): projector onto the orthogonal complement of
// span L' inside span L.
std::optional<CMatrix> hat_hat_projector(const LaurentMatrix& l, const LaurentMatrix& lp,
                                         double theta);

// theta |-> hat_hat_projector(L, L', theta) sampled on a uniform grid
struct PointwiseProjector {
    LaurentMatrix l;
    LaurentMatrix lp;

    long beta() const { return l.rows(); }
    std::optional<CMatrix> operator()(double theta) const { return hat_hat_projector(l, lp, theta); }
};

struct VnDimension {
    double value;
    long singular_nodes;
    bool unreliable;  // more than 1% of the grid was singular
};

VnDimension vn_dimension(const PointwiseProjector& q, long ngrid);

struct OrthogonalityReport {
    double max_idempotent_dev;   // max ||Q^2 - Q||
    double max_self_adjoint_dev; // max ||Q* - Q||
    double max_cross_product;    // max over pairs i != j of ||Q_i Q_j||
    double max_sum_identity_dev; // max ||sum Q_i - I||
    long singular_nodes;
};

OrthogonalityReport orthogonality_report(const std::vector<PointwiseProjector>& entries,
                                         long ngrid);

}  // namespace angp
