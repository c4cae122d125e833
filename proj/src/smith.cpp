#include "angle_persist/smith.hpp"

namespace angp {

LaurentMatrix LaurentMatrix::identity(const FieldDesc& f, long n) {
    LaurentMatrix m(f, n, n);
    for (long i = 0; i < n; ++i) m.at(i, i) = LaurentPoly::constant(Scalar::one(f));
    return m;
}

LaurentMatrix LaurentMatrix::from_scalar(const ScalarMatrix& m) {
    LaurentMatrix r(m.field(), m.rows(), m.cols());
    for (long i = 0; i < m.rows(); ++i)
        for (long j = 0; j < m.cols(); ++j) r.at(i, j) = LaurentPoly::constant(m.at(i, j));
    return r;
}

LaurentMatrix LaurentMatrix::operator*(const LaurentMatrix& o) const {
    if (cols_ != o.rows_) throw std::runtime_error("Laurent matrix product shape mismatch");
    LaurentMatrix r(f_, rows_, o.cols_);
    for (long i = 0; i < rows_; ++i)
        for (long k = 0; k < cols_; ++k) {
            if (at(i, k).is_zero()) continue;
            for (long j = 0; j < o.cols_; ++j)
                r.at(i, j) = r.at(i, j) + at(i, k) * o.at(k, j);
        }
    return r;
}

LaurentMatrix LaurentMatrix::operator+(const LaurentMatrix& o) const {
    LaurentMatrix r(f_, rows_, cols_);
    for (long i = 0; i < rows_; ++i)
        for (long j = 0; j < cols_; ++j) r.at(i, j) = at(i, j) + o.at(i, j);
    return r;
}

bool LaurentMatrix::operator==(const LaurentMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (long i = 0; i < rows_; ++i)
        for (long j = 0; j < cols_; ++j)
            if (!(at(i, j) == o.at(i, j))) return false;
    return true;
}

bool LaurentMatrix::is_zero() const {
    for (auto& p : d_)
        if (!p.is_zero()) return false;
    return true;
}

ScalarMatrix LaurentMatrix::evaluate(const Scalar& c) const {
    ScalarMatrix r(f_, rows_, cols_);
    for (long i = 0; i < rows_; ++i)
        for (long j = 0; j < cols_; ++j) r.at(i, j) = at(i, j).evaluate(c);
    return r;
}

LaurentMatrix LaurentMatrix::hcat(const LaurentMatrix& a, const LaurentMatrix& b) {
    if (a.rows() != b.rows()) throw std::runtime_error("hcat shape mismatch");
    LaurentMatrix r(a.field(), a.rows(), a.cols() + b.cols());
    for (long i = 0; i < a.rows(); ++i) {
        for (long j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
        for (long j = 0; j < b.cols(); ++j) r.at(i, a.cols() + j) = b.at(i, j);
    }
    return r;
}

LaurentMatrix LaurentMatrix::cols_slice(const std::vector<long>& idx) const {
    LaurentMatrix r(f_, rows_, static_cast<long>(idx.size()));
    for (size_t j = 0; j < idx.size(); ++j)
        for (long i = 0; i < rows_; ++i) r.at(i, static_cast<long>(j)) = at(i, idx[j]);
    return r;
}

void LaurentMatrix::swap_rows(long i, long j) {
    for (long k = 0; k < cols_; ++k) std::swap(at(i, k), at(j, k));
}

void LaurentMatrix::swap_cols(long i, long j) {
    for (long k = 0; k < rows_; ++k) std::swap(at(k, i), at(k, j));
}

void LaurentMatrix::addmul_row(long i, long j, const LaurentPoly& q) {
    for (long k = 0; k < cols_; ++k) at(i, k) = at(i, k) + q * at(j, k);
}

void LaurentMatrix::addmul_col(long i, long j, const LaurentPoly& q) {
    for (long k = 0; k < rows_; ++k) at(k, i) = at(k, i) + q * at(k, j);
}

void LaurentMatrix::scale_row(long i, const LaurentPoly& u) {
    for (long k = 0; k < cols_; ++k) at(i, k) = at(i, k) * u;
}

void LaurentMatrix::scale_col(long j, const LaurentPoly& u) {
    for (long k = 0; k < rows_; ++k) at(k, j) = at(k, j) * u;
}

namespace {

// Bookkeeping for A = U * D * V while applying elementary operations to D.
struct SnfState {
    LaurentMatrix D, U, Uinv, V, Vinv;

    explicit SnfState(const LaurentMatrix& a)
        : D(a),
          U(LaurentMatrix::identity(a.field(), a.rows())),
          Uinv(LaurentMatrix::identity(a.field(), a.rows())),
          V(LaurentMatrix::identity(a.field(), a.cols())),
          Vinv(LaurentMatrix::identity(a.field(), a.cols())) {}

    void row_add(long i, long j, const LaurentPoly& q) {  // D row_i += q row_j
        D.addmul_row(i, j, q);
        U.addmul_col(j, i, -q);
        Uinv.addmul_row(i, j, q);
    }
    void col_add(long i, long j, const LaurentPoly& q) {  // D col_i += q col_j
        D.addmul_col(i, j, q);
        V.addmul_row(j, i, -q);
        Vinv.addmul_col(i, j, q);
    }
    void row_swap(long i, long j) {
        D.swap_rows(i, j);
        U.swap_cols(i, j);
        Uinv.swap_rows(i, j);
    }
    void col_swap(long i, long j) {
        D.swap_cols(i, j);
        V.swap_rows(i, j);
        Vinv.swap_cols(i, j);
    }
    void row_scale(long i, const LaurentPoly& u, const LaurentPoly& uinv) {
        D.scale_row(i, u);
        U.scale_col(i, uinv);
        Uinv.scale_row(i, u);
    }
    void col_scale(long j, const LaurentPoly& u, const LaurentPoly& uinv) {
        D.scale_col(j, u);
        V.scale_row(j, uinv);
        Vinv.scale_col(j, u);
    }
};

// degree measure during elimination; entries stay in k[t] there
long poly_degree(const LaurentPoly& p) { return p.max_deg(); }

// Unit c*t^k and its inverse turning p into its canonical associate.
std::pair<LaurentPoly, LaurentPoly> normalizing_unit(const LaurentPoly& p) {
    const FieldDesc& f = p.field();
    Scalar lead = p.coeffs().rbegin()->second;
    long m = p.min_deg();
    LaurentPoly u = LaurentPoly::monomial(lead.inverse(), -m);
    LaurentPoly uinv = LaurentPoly::monomial(lead, m);
    return {u, uinv};
}

}  // namespace

SmithDecomposition snf(const LaurentMatrix& a) {
    const FieldDesc& f = a.field();
    SnfState s(a);
    long n = std::min(a.rows(), a.cols());

    // shift every row into k[t] so Euclidean division applies
    for (long i = 0; i < a.rows(); ++i) {
        long m = 0;
        bool any = false;
        for (long j = 0; j < a.cols(); ++j)
            if (!s.D.at(i, j).is_zero()) {
                long md = s.D.at(i, j).min_deg();
                m = any ? std::min(m, md) : md;
                any = true;
            }
        if (any && m != 0)
            s.row_scale(i, LaurentPoly::t_power(f, -m), LaurentPoly::t_power(f, m));
    }

    long pos = 0;
    for (; pos < n; ++pos) {
        // pick the nonzero entry of smallest degree in the trailing block
        auto find_pivot = [&]() -> std::pair<long, long> {
            long bi = -1, bj = -1, bd = 0;
            for (long i = pos; i < a.rows(); ++i)
                for (long j = pos; j < a.cols(); ++j)
                    if (!s.D.at(i, j).is_zero()) {
                        long d = poly_degree(s.D.at(i, j));
                        if (bi < 0 || d < bd) { bi = i; bj = j; bd = d; }
                    }
            return {bi, bj};
        };

        auto [pi, pj] = find_pivot();
        if (pi < 0) break;
        if (pi != pos) s.row_swap(pos, pi);
        if (pj != pos) s.col_swap(pos, pj);

        for (;;) {
            bool clean = true;
            // clear the pivot column
            for (long i = pos + 1; i < a.rows(); ++i) {
                if (s.D.at(i, pos).is_zero()) continue;
                LaurentPoly q = s.D.at(i, pos).divmod(s.D.at(pos, pos)).first;
                s.row_add(i, pos, -q);
                if (!s.D.at(i, pos).is_zero()) {
                    s.row_swap(pos, i);  // remainder has strictly smaller degree
                    clean = false;
                }
            }
            // clear the pivot row
            for (long j = pos + 1; j < a.cols(); ++j) {
                if (s.D.at(pos, j).is_zero()) continue;
                LaurentPoly q = s.D.at(pos, j).divmod(s.D.at(pos, pos)).first;
                s.col_add(j, pos, -q);
                if (!s.D.at(pos, j).is_zero()) {
                    s.col_swap(pos, j);
                    clean = false;
                }
            }
            if (!clean) continue;

            // pivot must divide the rest of the block
            bool fixed = false;
            for (long i = pos + 1; i < a.rows() && !fixed; ++i)
                for (long j = pos + 1; j < a.cols() && !fixed; ++j)
                    if (!s.D.at(i, j).is_zero() &&
                        !s.D.at(i, j).divisible_by(s.D.at(pos, pos))) {
                        s.row_add(pos, i, LaurentPoly::constant(Scalar::one(f)));
                        fixed = true;
                    }
            if (!fixed) break;
        }
    }

    // canonicalize diagonal entries by unit scaling
    SmithDecomposition out{s.U, s.D, s.V, s.Uinv, s.Vinv, {}};
    for (long i = 0; i < pos; ++i) {
        const LaurentPoly& d = out.D.at(i, i);
        if (d.is_zero()) continue;
        auto [u, uinv] = normalizing_unit(d);
        out.D.scale_row(i, u);
        out.U.scale_col(i, uinv);
        out.Uinv.scale_row(i, u);
        out.divisors.push_back(out.D.at(i, i));
    }
    return out;
}

bool is_unimodular(const LaurentMatrix& m) {
    if (m.rows() != m.cols()) return false;
    SmithDecomposition s = snf(m);
    if (s.rank() != m.rows()) return false;
    for (auto& d : s.divisors)
        if (!d.is_unit()) return false;
    return true;
}

PresentationInvariants presentation_invariants(const LaurentMatrix& a) {
    SmithDecomposition s = snf(a);
    PresentationInvariants out;
    out.free_rank = a.rows() - s.rank();
    out.torsion_dim = 0;
    for (auto& d : s.divisors) {
        if (d.is_unit()) continue;
        out.invariant_factors.push_back(d);
        out.torsion_dim += d.max_deg();  // canonical form has min_deg 0
    }
    return out;
}

LaurentMatrix laurent_kernel(const LaurentMatrix& a) { return laurent_kernel(a, snf(a)); }

LaurentMatrix laurent_kernel(const LaurentMatrix& a, const SmithDecomposition& s) {
    long r = s.rank();
    std::vector<long> idx;
    for (long j = r; j < a.cols(); ++j) idx.push_back(j);
    return s.Vinv.cols_slice(idx);
}

std::optional<std::vector<LaurentPoly>> module_solve(const SmithDecomposition& s,
                                                     const std::vector<LaurentPoly>& b) {
    const FieldDesc& f = s.D.field();
    long m = s.D.rows(), n = s.D.cols(), r = s.rank();
    std::vector<LaurentPoly> c(static_cast<size_t>(m), LaurentPoly::zero(f));
    for (long i = 0; i < m; ++i)
        for (long k = 0; k < m; ++k) c[static_cast<size_t>(i)] =
            c[static_cast<size_t>(i)] + s.Uinv.at(i, k) * b[static_cast<size_t>(k)];
    std::vector<LaurentPoly> y(static_cast<size_t>(n), LaurentPoly::zero(f));
    for (long i = 0; i < m; ++i) {
        auto& ci = c[static_cast<size_t>(i)];
        if (i >= r) {
            if (!ci.is_zero()) return std::nullopt;
            continue;
        }
        if (!ci.divisible_by(s.D.at(i, i))) return std::nullopt;
        y[static_cast<size_t>(i)] = ci.exact_div(s.D.at(i, i));
    }
    std::vector<LaurentPoly> x(static_cast<size_t>(n), LaurentPoly::zero(f));
    for (long i = 0; i < n; ++i)
        for (long k = 0; k < n; ++k) x[static_cast<size_t>(i)] =
            x[static_cast<size_t>(i)] + s.Vinv.at(i, k) * y[static_cast<size_t>(k)];
    return x;
}

}  // namespace angp
