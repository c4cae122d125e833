#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace angp {

// Coefficient field: the rationals (p == 0) or the prime field F_p.
struct FieldDesc {
    unsigned long p = 0;

    bool is_rational() const { return p == 0; }
    bool operator==(const FieldDesc&) const = default;
    std::string name() const { return p == 0 ? "Q" : "F" + std::to_string(p); }
};

struct FieldMismatchError : std::runtime_error {
    FieldMismatchError(const FieldDesc& a, const FieldDesc& b)
        : std::runtime_error("field mismatch: " + a.name() + " vs " + b.name()) {}
};

FieldDesc parse_field(const std::string& spec);  // "q" | "fp:PRIME"
bool is_prime(unsigned long n);

// Exact field element. Rationals are kept in lowest terms by mpq_class;
// F_p residues are stored as integers in [0, p).
class Scalar {
public:
    Scalar() = default;
    Scalar(const FieldDesc& f, const mpq_class& v) : f_(f), v_(v) { reduce(); }
    Scalar(const FieldDesc& f, long v) : f_(f), v_(v) { reduce(); }

    static Scalar zero(const FieldDesc& f) { return Scalar(f, 0); }
    static Scalar one(const FieldDesc& f) { return Scalar(f, 1); }

    const FieldDesc& field() const { return f_; }
    const mpq_class& value() const { return v_; }
    bool is_zero() const { return v_ == 0; }

    Scalar operator+(const Scalar& o) const { check(o); return Scalar(f_, v_ + o.v_); }
    Scalar operator-(const Scalar& o) const { check(o); return Scalar(f_, v_ - o.v_); }
    Scalar operator*(const Scalar& o) const { check(o); return Scalar(f_, v_ * o.v_); }
    Scalar operator-() const { return Scalar(f_, -v_); }
    Scalar operator/(const Scalar& o) const { return *this * o.inverse(); }
    Scalar inverse() const;

    bool operator==(const Scalar& o) const { check(o); return v_ == o.v_; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    double to_double() const { return v_.get_d(); }
    std::string str() const { return v_.get_str(); }

private:
    void check(const Scalar& o) const {
        if (!(f_ == o.f_)) throw FieldMismatchError(f_, o.f_);
    }
    void reduce();

    FieldDesc f_;
    mpq_class v_ = 0;
};

using Rational = mpq_class;

// Canonical rational in [0, 1): x - floor(x).
Rational frac_part(const Rational& x);
// floor of a rational as mpz, returned as long.
long floor_long(const Rational& x);

}  // namespace angp
