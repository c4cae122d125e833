#include "angle_persist/laurent.hpp"

#include <cmath>
#include <sstream>

namespace angp {

LaurentPoly::LaurentPoly(const FieldDesc& f, std::map<long, Scalar> coeffs) : f_(f) {
    for (auto& [e, v] : coeffs) {
        if (!(v.field() == f)) throw FieldMismatchError(f, v.field());
        if (!v.is_zero()) c_.emplace(e, v);
    }
}

LaurentPoly LaurentPoly::constant(const Scalar& c) { return monomial(c, 0); }

LaurentPoly LaurentPoly::monomial(const Scalar& c, long exp) {
    LaurentPoly p(c.field());
    if (!c.is_zero()) p.c_.emplace(exp, c);
    return p;
}

long LaurentPoly::min_deg() const {
    if (is_zero()) throw std::runtime_error("min_deg of zero polynomial");
    return c_.begin()->first;
}

long LaurentPoly::max_deg() const {
    if (is_zero()) throw std::runtime_error("max_deg of zero polynomial");
    return c_.rbegin()->first;
}

Scalar LaurentPoly::coeff(long exp) const {
    auto it = c_.find(exp);
    return it == c_.end() ? Scalar::zero(f_) : it->second;
}

void LaurentPoly::set(long exp, const Scalar& v) {
    if (v.is_zero())
        c_.erase(exp);
    else
        c_.insert_or_assign(exp, v);
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    if (!(f_ == o.f_)) throw FieldMismatchError(f_, o.f_);
    LaurentPoly r = *this;
    for (auto& [e, v] : o.c_) r.set(e, r.coeff(e) + v);
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r(f_);
    for (auto& [e, v] : c_) r.c_.emplace(e, -v);
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    if (!(f_ == o.f_)) throw FieldMismatchError(f_, o.f_);
    LaurentPoly r(f_);
    for (auto& [e1, v1] : c_)
        for (auto& [e2, v2] : o.c_) r.set(e1 + e2, r.coeff(e1 + e2) + v1 * v2);
    return r;
}

bool LaurentPoly::operator==(const LaurentPoly& o) const {
    if (!(f_ == o.f_)) throw FieldMismatchError(f_, o.f_);
    return c_ == o.c_;
}

LaurentPoly LaurentPoly::involution() const {
    LaurentPoly r(f_);
    for (auto& [e, v] : c_) r.c_.emplace(-e, v);
    return r;
}

LaurentPoly LaurentPoly::unit_normalized() const {
    if (is_zero()) return *this;
    long m = min_deg();
    Scalar lead = c_.rbegin()->second;
    LaurentPoly r(f_);
    for (auto& [e, v] : c_) r.c_.emplace(e - m, v / lead);
    return r;
}

std::pair<LaurentPoly, LaurentPoly> LaurentPoly::divmod(const LaurentPoly& divisor) const {
    if (divisor.is_zero()) throw std::runtime_error("division by zero polynomial");
    if (!is_zero() && min_deg() < 0) throw std::runtime_error("divmod requires min_deg >= 0");
    if (divisor.min_deg() < 0) throw std::runtime_error("divmod requires min_deg >= 0");
    LaurentPoly q(f_), rem = *this;
    long d = divisor.max_deg();
    Scalar lead = divisor.coeff(d);
    while (!rem.is_zero() && rem.max_deg() >= d) {
        long e = rem.max_deg() - d;
        Scalar c = rem.coeff(rem.max_deg()) / lead;
        LaurentPoly m = monomial(c, e);
        q = q + m;
        rem = rem - m * divisor;
    }
    return {q, rem};
}

bool LaurentPoly::divisible_by(const LaurentPoly& o) const {
    if (o.is_zero()) return is_zero();
    if (is_zero()) return true;
    auto a = unit_normalized();
    auto b = o.unit_normalized();
    return a.divmod(b).second.is_zero();
}

LaurentPoly LaurentPoly::exact_div(const LaurentPoly& o) const {
    if (is_zero()) return *this;
    // shift both into k[t], divide, undo the shift
    long ma = min_deg(), mb = o.min_deg();
    LaurentPoly a(f_), b(f_);
    for (auto& [e, v] : c_) a.c_.emplace(e - ma, v);
    for (auto& [e, v] : o.c_) b.c_.emplace(e - mb, v);
    auto [q, r] = a.divmod(b);
    if (!r.is_zero()) throw std::runtime_error("exact_div: not divisible");
    LaurentPoly out(f_);
    for (auto& [e, v] : q.coeffs()) out.c_.emplace(e + ma - mb, v);
    return out;
}

LaurentPoly LaurentPoly::gcd(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly x = a.unit_normalized(), y = b.unit_normalized();
    while (!y.is_zero()) {
        LaurentPoly r = x.divmod(y).second;
        x = y;
        y = r.unit_normalized();
    }
    return x.unit_normalized();
}

Scalar LaurentPoly::evaluate(const Scalar& c) const {
    if (c.is_zero()) throw std::runtime_error("Laurent evaluation at t = 0");
    Scalar acc = Scalar::zero(f_);
    for (auto& [e, v] : c_) {
        Scalar p = Scalar::one(f_);
        Scalar base = e >= 0 ? c : c.inverse();
        for (long i = 0; i < std::labs(e); ++i) p = p * base;
        acc = acc + v * p;
    }
    return acc;
}

std::complex<double> LaurentPoly::evaluate_unit(double theta) const {
    if (f_.p != 0) throw std::runtime_error("evaluate_unit requires rational coefficients");
    std::complex<double> acc = 0;
    for (auto& [e, v] : c_)
        acc += v.to_double() * std::polar(1.0, theta * static_cast<double>(e));
    return acc;
}

std::string LaurentPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [e, v] : c_) {
        if (!first) os << " + ";
        first = false;
        os << v.str();
        if (e != 0) os << "*t^" << e;
    }
    return os.str();
}

}  // namespace angp
