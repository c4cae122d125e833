#pragma once

#include "angle_persist/complex_io.hpp"
#include "angle_persist/smith.hpp"

namespace angp {

// Z-equivariant boundary of the infinite cyclic cover, presented over
// k[t^-1,t] on one lift per simplex. Entry (face, simplex) is
// sign * t^k with k the period offset of the face's anchored lift.
LaurentMatrix twisted_boundary(const ComplexWithMap& c, long q, const FieldDesc& f);

struct NovikovInvariants {
    long r;
    long free_rank;  // Novikov-Betti number
    std::vector<LaurentPoly> invariant_factors;
    long torsion_dim;
};

NovikovInvariants novikov_invariants(const ComplexWithMap& c, long r, const FieldDesc& f);

// Homology of the cover in degree r as a presented module, with the maps
// needed to express cycle classes in a fixed basis of the free part.
class NovikovStructure {
public:
    NovikovStructure(const ComplexWithMap& c, long r, const FieldDesc& f);

    const NovikovInvariants& invariants() const { return inv_; }
    long beta() const { return inv_.free_rank; }
    const FieldDesc& field() const { return f_; }

    // chain: coefficient per r-simplex (one lift each); must be a cycle
    std::vector<LaurentPoly> kernel_coords(const std::vector<LaurentPoly>& chain) const;
    // class of a cycle in the chosen basis of the free quotient, length beta
    std::vector<LaurentPoly> project_to_free(const std::vector<LaurentPoly>& chain) const;

private:
    FieldDesc f_;
    long r_;
    long n_r_;
    bool trivial_kernel_ = false;   // r = 0: kernel is the whole chain module
    SmithDecomposition snf_dr_;     // of the degree-r boundary (when r >= 1)
    long cycle_rank_ = 0;           // rank of the cycle module
    SmithDecomposition snf_rel_;    // of the induced presentation of H_r
    long torsion_count_ = 0;        // nonzero divisors in the presentation
    NovikovInvariants inv_;
};

struct LiftedCell {
    long idx;     // simplex index within its dimension
    long period;  // deck shift applied to the anchored lift
};

enum class Side { sub, super };

// Per-dimension membership flags for a face-closed subset of a window.
struct CellSubset {
    std::vector<std::vector<char>> member;
};

// Finite truncation of the infinite cyclic cover: all lifted cells whose
// vertex levels lie in [m_lo, m_hi + 1), with field boundary matrices.
class WindowComplex {
public:
    WindowComplex(const ComplexWithMap& c, const FieldDesc& f, long m_lo, long m_hi);

    const ComplexWithMap& base() const { return *base_; }
    const FieldDesc& field() const { return f_; }
    long m_lo() const { return m_lo_; }
    long m_hi() const { return m_hi_; }
    long dim() const { return static_cast<long>(cells_.size()) - 1; }

    long count(long d) const;
    const std::vector<LiftedCell>& cells(long d) const { return cells_[static_cast<size_t>(d)]; }
    // rows index (q-1)-cells, columns q-cells
    const ScalarMatrix& boundary(long q) const { return bnd_[static_cast<size_t>(q)]; }

    Rational cell_min_level(long d, long pos) const;
    Rational cell_max_level(long d, long pos) const;

    // position of the deck-shifted cell (idx, period+1), or -1 if outside
    long shift_pos(long d, long pos) const;

    // full subcomplex on vertices with level <= a (sub) or >= b (super)
    CellSubset star_subcomplex(const Rational& level, Side side) const;

    // coefficients of a window chain on the one-lift-per-simplex generators
    std::vector<LaurentPoly> to_twisted(long d, const std::vector<Scalar>& chain) const;

private:
    const ComplexWithMap* base_;
    FieldDesc f_;
    long m_lo_, m_hi_;
    std::vector<std::vector<LiftedCell>> cells_;
    std::vector<std::map<std::pair<long, long>, long>> pos_;
    std::vector<ScalarMatrix> bnd_;
};

// H_r of a chain complex fragment with a canonical coordinate system and
// cycle lifts for its classes.
class HomologyQuotient {
public:
    // bnd_r: C_r -> C_{r-1} (pass a 0 x n matrix for r = 0),
    // bnd_r1: C_{r+1} -> C_r
    HomologyQuotient(const ScalarMatrix& bnd_r, const ScalarMatrix& bnd_r1);

    long dim() const { return h_; }
    long chain_dim() const { return n_; }
    std::vector<Scalar> coords(const std::vector<Scalar>& cycle) const;
    std::vector<Scalar> lift(const std::vector<Scalar>& coords) const;

private:
    FieldDesc f_;
    long n_, h_;
    ScalarMatrix bc_;  // [boundary basis | complement cycles], n x (b + h)
    long b_;
};

HomologyQuotient window_homology(const WindowComplex& w, long r);

}  // namespace angp
