#include "angle_persist/field.hpp"

namespace angp {

bool is_prime(unsigned long n) {
    if (n < 2) return false;
    for (unsigned long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

FieldDesc parse_field(const std::string& spec) {
    if (spec == "q" || spec == "Q") return FieldDesc{0};
    if (spec.rfind("fp:", 0) == 0) {
        unsigned long p = std::stoul(spec.substr(3));
        if (!is_prime(p)) throw std::runtime_error("not a prime: " + spec.substr(3));
        return FieldDesc{p};
    }
    throw std::runtime_error("bad field spec '" + spec + "' (expected q or fp:PRIME)");
}

void Scalar::reduce() {
    v_.canonicalize();
    if (f_.p != 0) {
        // residue of num/den mod p
        mpz_class num = v_.get_num(), den = v_.get_den();
        mpz_class p(static_cast<unsigned long>(f_.p));
        mpz_class dinv;
        if (mpz_invert(dinv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0)
            throw std::runtime_error("denominator not invertible mod " + std::to_string(f_.p));
        mpz_class r = (num * dinv) % p;
        if (r < 0) r += p;
        v_ = mpq_class(r);
    }
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::runtime_error("division by zero in " + f_.name());
    if (f_.p == 0) return Scalar(f_, 1 / v_);
    mpz_class p(static_cast<unsigned long>(f_.p));
    mpz_class a = v_.get_num(), inv;
    mpz_invert(inv.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t());
    return Scalar(f_, mpq_class(inv));
}

Rational frac_part(const Rational& x) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
    return x - Rational(q);
}

long floor_long(const Rational& x) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
    return q.get_si();
}

}  // namespace angp
