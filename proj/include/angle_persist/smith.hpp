#pragma once

#include "angle_persist/laurent.hpp"
#include "angle_persist/matrix.hpp"

#include <optional>

namespace angp {

// Dense matrix over k[t^-1, t].
class LaurentMatrix {
public:
    LaurentMatrix(const FieldDesc& f, long rows, long cols)
        : f_(f), rows_(rows), cols_(cols),
          d_(static_cast<size_t>(rows * cols), LaurentPoly::zero(f)) {}

    static LaurentMatrix identity(const FieldDesc& f, long n);
    static LaurentMatrix from_scalar(const ScalarMatrix& m);

    const FieldDesc& field() const { return f_; }
    long rows() const { return rows_; }
    long cols() const { return cols_; }

    LaurentPoly& at(long i, long j) { return d_[static_cast<size_t>(i * cols_ + j)]; }
    const LaurentPoly& at(long i, long j) const { return d_[static_cast<size_t>(i * cols_ + j)]; }

    LaurentMatrix operator*(const LaurentMatrix& o) const;
    LaurentMatrix operator+(const LaurentMatrix& o) const;
    bool operator==(const LaurentMatrix& o) const;
    bool is_zero() const;

    ScalarMatrix evaluate(const Scalar& c) const;  // t = c

    static LaurentMatrix hcat(const LaurentMatrix& a, const LaurentMatrix& b);
    LaurentMatrix cols_slice(const std::vector<long>& idx) const;

    void swap_rows(long i, long j);
    void swap_cols(long i, long j);
    void addmul_row(long i, long j, const LaurentPoly& q);  // row_i += q * row_j
    void addmul_col(long i, long j, const LaurentPoly& q);  // col_i += q * col_j
    void scale_row(long i, const LaurentPoly& u);
    void scale_col(long j, const LaurentPoly& u);

private:
    FieldDesc f_;
    long rows_, cols_;
    std::vector<LaurentPoly> d_;
};

// A = U * D * V with D diagonal, divisor chain d_i | d_{i+1}, U and V
// invertible over k[t^-1, t]. Divisors are canonicalized monic in t with
// nonzero constant term.
struct SmithDecomposition {
    LaurentMatrix U, D, V;
    LaurentMatrix Uinv, Vinv;
    std::vector<LaurentPoly> divisors;  // nonzero diagonal entries, canonical

    long rank() const { return static_cast<long>(divisors.size()); }
};

SmithDecomposition snf(const LaurentMatrix& a);

// True when m is square and invertible over k[t^-1, t].
bool is_unimodular(const LaurentMatrix& m);

struct PresentationInvariants {
    long free_rank;
    std::vector<LaurentPoly> invariant_factors;  // nonunit divisors
    long torsion_dim;                            // sum of their degrees
};

// Invariants of coker(a): a's rows index generators, columns relations.
PresentationInvariants presentation_invariants(const LaurentMatrix& a);

// Basis of the solution module {x | a x = 0}; columns of the result.
LaurentMatrix laurent_kernel(const LaurentMatrix& a);
LaurentMatrix laurent_kernel(const LaurentMatrix& a, const SmithDecomposition& s);

// Solve a x = b over k[t^-1, t].
std::optional<std::vector<LaurentPoly>> module_solve(const SmithDecomposition& s,
                                                     const std::vector<LaurentPoly>& b);

}  // namespace angp
