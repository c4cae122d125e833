#include "angle_persist/matrix.hpp"

namespace angp {

ScalarMatrix ScalarMatrix::identity(const FieldDesc& f, long n) {
    ScalarMatrix m(f, n, n);
    for (long i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
    return m;
}

ScalarMatrix ScalarMatrix::operator*(const ScalarMatrix& o) const {
    if (cols_ != o.rows_) throw std::runtime_error("matrix product shape mismatch");
    ScalarMatrix r(f_, rows_, o.cols_);
    for (long i = 0; i < rows_; ++i)
        for (long k = 0; k < cols_; ++k) {
            if (at(i, k).is_zero()) continue;
            for (long j = 0; j < o.cols_; ++j)
                r.at(i, j) = r.at(i, j) + at(i, k) * o.at(k, j);
        }
    return r;
}

ScalarMatrix ScalarMatrix::transpose() const {
    ScalarMatrix r(f_, cols_, rows_);
    for (long i = 0; i < rows_; ++i)
        for (long j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

bool ScalarMatrix::operator==(const ScalarMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (size_t i = 0; i < d_.size(); ++i)
        if (d_[i] != o.d_[i]) return false;
    return true;
}

std::vector<long> ScalarMatrix::rref() {
    std::vector<long> pivots;
    long r = 0;
    for (long j = 0; j < cols_ && r < rows_; ++j) {
        long p = -1;
        for (long i = r; i < rows_; ++i)
            if (!at(i, j).is_zero()) { p = i; break; }
        if (p < 0) continue;
        if (p != r)
            for (long k = 0; k < cols_; ++k) std::swap(at(p, k), at(r, k));
        Scalar inv = at(r, j).inverse();
        for (long k = 0; k < cols_; ++k) at(r, k) = at(r, k) * inv;
        for (long i = 0; i < rows_; ++i) {
            if (i == r || at(i, j).is_zero()) continue;
            Scalar c = at(i, j);
            for (long k = 0; k < cols_; ++k) at(i, k) = at(i, k) - c * at(r, k);
        }
        pivots.push_back(j);
        ++r;
    }
    return pivots;
}

std::vector<Scalar> ScalarMatrix::col(long j) const {
    std::vector<Scalar> v;
    v.reserve(static_cast<size_t>(rows_));
    for (long i = 0; i < rows_; ++i) v.push_back(at(i, j));
    return v;
}

void ScalarMatrix::set_col(long j, const std::vector<Scalar>& v) {
    for (long i = 0; i < rows_; ++i) at(i, j) = v[static_cast<size_t>(i)];
}

ScalarMatrix ScalarMatrix::cols_slice(const std::vector<long>& idx) const {
    ScalarMatrix r(f_, rows_, static_cast<long>(idx.size()));
    for (size_t j = 0; j < idx.size(); ++j)
        for (long i = 0; i < rows_; ++i) r.at(i, static_cast<long>(j)) = at(i, idx[j]);
    return r;
}

ScalarMatrix ScalarMatrix::hcat(const ScalarMatrix& a, const ScalarMatrix& b) {
    if (a.rows() != b.rows()) throw std::runtime_error("hcat shape mismatch");
    ScalarMatrix r(a.field(), a.rows(), a.cols() + b.cols());
    for (long i = 0; i < a.rows(); ++i) {
        for (long j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
        for (long j = 0; j < b.cols(); ++j) r.at(i, a.cols() + j) = b.at(i, j);
    }
    return r;
}

Subspace Subspace::span(const ScalarMatrix& columns) {
    // reduced column echelon = transpose of the rref of the transpose
    ScalarMatrix t = columns.transpose();
    auto pivots = t.rref();
    Subspace s(columns.field(), columns.rows());
    ScalarMatrix basis(columns.field(), columns.rows(), static_cast<long>(pivots.size()));
    for (long j = 0; j < static_cast<long>(pivots.size()); ++j)
        for (long i = 0; i < columns.rows(); ++i) basis.at(i, j) = t.at(j, i);
    s.basis_ = basis;
    return s;
}

Subspace Subspace::full(const FieldDesc& f, long n) {
    return span(ScalarMatrix::identity(f, n));
}

bool Subspace::contains(const std::vector<Scalar>& v) const {
    std::vector<Scalar> x;
    return solve(basis_, v, x);
}

bool Subspace::contains(const Subspace& other) const {
    for (long j = 0; j < other.dim(); ++j)
        if (!contains(other.basis_.col(j))) return false;
    return true;
}

bool Subspace::operator==(const Subspace& o) const {
    return ambient_ == o.ambient_ && basis_ == o.basis_;
}

Subspace Subspace::sum(const Subspace& a, const Subspace& b) {
    if (a.ambient_ != b.ambient_) throw std::runtime_error("subspace sum: ambient mismatch");
    return span(ScalarMatrix::hcat(a.basis_, b.basis_));
}

Subspace Subspace::intersection(const Subspace& a, const Subspace& b) {
    if (a.ambient_ != b.ambient_) throw std::runtime_error("subspace intersection: ambient mismatch");
    const FieldDesc& f = a.basis_.field();
    if (a.dim() == 0 || b.dim() == 0) return Subspace(f, a.ambient_);
    // null space of [A | -B]; the A-part of each kernel vector spans the intersection
    ScalarMatrix nb = b.basis_;
    for (long i = 0; i < nb.rows(); ++i)
        for (long j = 0; j < nb.cols(); ++j) nb.at(i, j) = -nb.at(i, j);
    ScalarMatrix cat = ScalarMatrix::hcat(a.basis_, nb);
    ReduceResult rr = field_reduce(cat);
    ScalarMatrix gens(f, a.ambient_, rr.kernel.dim());
    for (long j = 0; j < rr.kernel.dim(); ++j) {
        auto k = rr.kernel.basis().col(j);
        for (long i = 0; i < a.ambient_; ++i) {
            Scalar acc = Scalar::zero(f);
            for (long c = 0; c < a.dim(); ++c)
                acc = acc + a.basis_.at(i, c) * k[static_cast<size_t>(c)];
            gens.at(i, j) = acc;
        }
    }
    return span(gens);
}

ReduceResult field_reduce(const ScalarMatrix& m) {
    const FieldDesc& f = m.field();
    ScalarMatrix r = m;
    auto pivots = r.rref();
    long rank = static_cast<long>(pivots.size());

    Subspace image = Subspace::span(m.cols_slice(pivots));

    // kernel basis from the rref: one generator per free column
    std::vector<bool> is_pivot(static_cast<size_t>(m.cols()), false);
    for (long p : pivots) is_pivot[static_cast<size_t>(p)] = true;
    std::vector<long> free_cols;
    for (long j = 0; j < m.cols(); ++j)
        if (!is_pivot[static_cast<size_t>(j)]) free_cols.push_back(j);
    ScalarMatrix kgen(f, m.cols(), static_cast<long>(free_cols.size()));
    for (size_t fj = 0; fj < free_cols.size(); ++fj) {
        long j = free_cols[fj];
        kgen.at(j, static_cast<long>(fj)) = Scalar::one(f);
        for (long pi = 0; pi < rank; ++pi)
            kgen.at(pivots[static_cast<size_t>(pi)], static_cast<long>(fj)) = -r.at(pi, j);
    }
    Subspace kernel = Subspace::span(kgen);
    return ReduceResult{rank, image, kernel};
}

bool solve(const ScalarMatrix& m, const std::vector<Scalar>& b, std::vector<Scalar>& x) {
    const FieldDesc& f = m.field();
    ScalarMatrix aug(f, m.rows(), m.cols() + 1);
    for (long i = 0; i < m.rows(); ++i) {
        for (long j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols()) = b[static_cast<size_t>(i)];
    }
    auto pivots = aug.rref();
    if (!pivots.empty() && pivots.back() == m.cols()) return false;  // inconsistent
    x.assign(static_cast<size_t>(m.cols()), Scalar::zero(f));
    for (size_t pi = 0; pi < pivots.size(); ++pi)
        x[static_cast<size_t>(pivots[pi])] = aug.at(static_cast<long>(pi), m.cols());
    return true;
}

}  // namespace angp
