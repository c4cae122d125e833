#pragma once

#include "angle_persist/field.hpp"

#include <vector>

namespace angp {

// Dense matrix over the coefficient field.
class ScalarMatrix {
public:
    ScalarMatrix(const FieldDesc& f, long rows, long cols)
        : f_(f), rows_(rows), cols_(cols), d_(static_cast<size_t>(rows * cols), Scalar::zero(f)) {}

    static ScalarMatrix identity(const FieldDesc& f, long n);

    const FieldDesc& field() const { return f_; }
    long rows() const { return rows_; }
    long cols() const { return cols_; }

    Scalar& at(long i, long j) { return d_[static_cast<size_t>(i * cols_ + j)]; }
    const Scalar& at(long i, long j) const { return d_[static_cast<size_t>(i * cols_ + j)]; }

    ScalarMatrix operator*(const ScalarMatrix& o) const;
    ScalarMatrix transpose() const;
    bool operator==(const ScalarMatrix& o) const;

    // In-place reduced row echelon form; pivot rule: first nonzero entry
    // scanning columns left to right. Returns pivot columns.
    std::vector<long> rref();

    std::vector<Scalar> col(long j) const;
    void set_col(long j, const std::vector<Scalar>& v);
    ScalarMatrix cols_slice(const std::vector<long>& idx) const;
    static ScalarMatrix hcat(const ScalarMatrix& a, const ScalarMatrix& b);

private:
    FieldDesc f_;
    long rows_, cols_;
    std::vector<Scalar> d_;
};

// A subspace of k^n held by its canonical reduced column-echelon basis.
class Subspace {
public:
    Subspace(const FieldDesc& f, long ambient_dim)
        : ambient_(ambient_dim), basis_(f, ambient_dim, 0) {}

    // Canonicalizes the spanning columns.
    static Subspace span(const ScalarMatrix& columns);
    static Subspace full(const FieldDesc& f, long n);

    long ambient_dim() const { return ambient_; }
    long dim() const { return basis_.cols(); }
    const ScalarMatrix& basis() const { return basis_; }

    bool contains(const std::vector<Scalar>& v) const;
    bool contains(const Subspace& other) const;
    bool operator==(const Subspace& o) const;

    static Subspace sum(const Subspace& a, const Subspace& b);
    static Subspace intersection(const Subspace& a, const Subspace& b);

private:
    long ambient_;
    ScalarMatrix basis_;  // ambient_ x dim, reduced column echelon
};

struct ReduceResult {
    long rank;
    Subspace image;   // canonical basis of the column space
    Subspace kernel;  // canonical basis of the null space
};

// Rank, image and kernel of a scalar matrix; deterministic for a given input.
ReduceResult field_reduce(const ScalarMatrix& m);

// Solve M x = b; returns false when inconsistent.
bool solve(const ScalarMatrix& m, const std::vector<Scalar>& b, std::vector<Scalar>& x);

}  // namespace angp
