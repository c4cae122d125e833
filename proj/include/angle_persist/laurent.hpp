#pragma once

#include "angle_persist/field.hpp"

#include <complex>
#include <map>
#include <vector>

namespace angp {

// Laurent polynomial over the coefficient field. Only nonzero coefficients
// are stored; the zero polynomial has empty support.
class LaurentPoly {
public:
    explicit LaurentPoly(const FieldDesc& f) : f_(f) {}
    LaurentPoly(const FieldDesc& f, std::map<long, Scalar> coeffs);

    static LaurentPoly zero(const FieldDesc& f) { return LaurentPoly(f); }
    static LaurentPoly constant(const Scalar& c);
    static LaurentPoly monomial(const Scalar& c, long exp);
    // t^exp with coefficient 1
    static LaurentPoly t_power(const FieldDesc& f, long exp) {
        return monomial(Scalar::one(f), exp);
    }

    const FieldDesc& field() const { return f_; }
    const std::map<long, Scalar>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    bool is_unit() const { return c_.size() == 1; }  // units of k[t^-1,t] are c*t^k
    long min_deg() const;  // requires nonzero
    long max_deg() const;
    Scalar coeff(long exp) const;

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly operator-() const;
    bool operator==(const LaurentPoly& o) const;

    // a* = sum conj(a_n) t^{-n}; coefficient conjugation is the identity
    // for Q and F_p.
    LaurentPoly involution() const;

    // Unique associate that is monic in t with minimal degree zero
    // (strip the unit factor c*t^k). Zero maps to zero.
    LaurentPoly unit_normalized() const;

    // Euclidean division within k[t]: requires min_deg >= 0 on both and
    // a nonzero divisor. Returns (quotient, remainder) with
    // deg(remainder) < deg(divisor).
    std::pair<LaurentPoly, LaurentPoly> divmod(const LaurentPoly& divisor) const;

    // True when o divides this in k[t^-1, t].
    bool divisible_by(const LaurentPoly& o) const;
    LaurentPoly exact_div(const LaurentPoly& o) const;

    // Monic gcd in k[t^-1,t] (canonical form as in unit_normalized).
    static LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b);

    Scalar evaluate(const Scalar& c) const;              // t = c, c != 0
    std::complex<double> evaluate_unit(double theta) const;  // t = e^{i theta}, rational field only

    std::string str() const;

private:
    void set(long exp, const Scalar& v);

    FieldDesc f_;
    std::map<long, Scalar> c_;
};

}  // namespace angp
