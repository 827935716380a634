// Arbitrary-precision real numbers on top of MPFR.
//
// Every value carries its own precision; binary operations compute at the
// larger of the two operand precisions, round-to-nearest. Conversion from
// exact rationals is explicit and one-way.

#ifndef EISZERO_BIGFLOAT_HPP
#define EISZERO_BIGFLOAT_HPP

#include <gmpxx.h>
#include <mpfr.h>

#include <cstdint>
#include <string>
#include <utility>

namespace eiszero {

class BigFloat {
public:
    BigFloat() { mpfr_init2(v_, 64); mpfr_set_zero(v_, 1); }
    explicit BigFloat(int prec) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
    BigFloat(double x, int prec) { mpfr_init2(v_, prec); mpfr_set_d(v_, x, MPFR_RNDN); }
    BigFloat(long x, int prec) { mpfr_init2(v_, prec); mpfr_set_si(v_, x, MPFR_RNDN); }
    BigFloat(const mpq_class& q, int prec) {
        mpfr_init2(v_, prec);
        mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN);
    }
    BigFloat(const mpz_class& z, int prec) {
        mpfr_init2(v_, prec);
        mpfr_set_z(v_, z.get_mpz_t(), MPFR_RNDN);
    }

    BigFloat(const BigFloat& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    BigFloat(BigFloat&& o) noexcept {
        mpfr_init2(v_, 2);
        mpfr_swap(v_, o.v_);
    }
    BigFloat& operator=(const BigFloat& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    BigFloat& operator=(BigFloat&& o) noexcept {
        if (this != &o) mpfr_swap(v_, o.v_);
        return *this;
    }
    ~BigFloat() { mpfr_clear(v_); }

    int prec() const { return static_cast<int>(mpfr_get_prec(v_)); }
    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }

    std::string str(size_t digits = 0) const {
        if (digits == 0) digits = static_cast<size_t>(prec() * 0.30103) + 2;
        char* s = nullptr;
        mpfr_asprintf(&s, "%.*Rg", static_cast<int>(digits), v_);
        std::string out(s);
        mpfr_free_str(s);
        return out;
    }

    friend BigFloat operator+(const BigFloat& a, const BigFloat& b) {
        BigFloat r(opprec(a, b));
        mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b) {
        BigFloat r(opprec(a, b));
        mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b) {
        BigFloat r(opprec(a, b));
        mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b) {
        BigFloat r(opprec(a, b));
        mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    BigFloat operator-() const {
        BigFloat r(prec());
        mpfr_neg(r.v_, v_, MPFR_RNDN);
        return r;
    }
    BigFloat& operator+=(const BigFloat& o) { mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
    BigFloat& operator-=(const BigFloat& o) { mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
    BigFloat& operator*=(const BigFloat& o) { mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }
    BigFloat& operator/=(const BigFloat& o) { mpfr_div(v_, v_, o.v_, MPFR_RNDN); return *this; }

    friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
    friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
    friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
    friend bool operator>=(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }
    friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
    friend bool operator!=(const BigFloat& a, const BigFloat& b) { return !(a == b); }

    static int opprec(const BigFloat& a, const BigFloat& b) {
        return a.prec() > b.prec() ? a.prec() : b.prec();
    }

private:
    mpfr_t v_;
};

inline BigFloat abs(const BigFloat& a) {
    BigFloat r(a.prec());
    mpfr_abs(r.raw(), a.raw(), MPFR_RNDN);
    return r;
}
inline BigFloat sqrt(const BigFloat& a) {
    BigFloat r(a.prec());
    mpfr_sqrt(r.raw(), a.raw(), MPFR_RNDN);
    return r;
}
inline BigFloat exp(const BigFloat& a) {
    BigFloat r(a.prec());
    mpfr_exp(r.raw(), a.raw(), MPFR_RNDN);
    return r;
}
inline BigFloat log(const BigFloat& a) {
    BigFloat r(a.prec());
    mpfr_log(r.raw(), a.raw(), MPFR_RNDN);
    return r;
}
inline BigFloat sin(const BigFloat& a) {
    BigFloat r(a.prec());
    mpfr_sin(r.raw(), a.raw(), MPFR_RNDN);
    return r;
}
inline BigFloat cos(const BigFloat& a) {
    BigFloat r(a.prec());
    mpfr_cos(r.raw(), a.raw(), MPFR_RNDN);
    return r;
}
inline BigFloat atan2(const BigFloat& y, const BigFloat& x) {
    BigFloat r(BigFloat::opprec(y, x));
    mpfr_atan2(r.raw(), y.raw(), x.raw(), MPFR_RNDN);
    return r;
}
inline BigFloat hypot(const BigFloat& x, const BigFloat& y) {
    BigFloat r(BigFloat::opprec(y, x));
    mpfr_hypot(r.raw(), x.raw(), y.raw(), MPFR_RNDN);
    return r;
}
inline BigFloat pow_si(const BigFloat& a, long e) {
    BigFloat r(a.prec());
    mpfr_pow_si(r.raw(), a.raw(), e, MPFR_RNDN);
    return r;
}
inline BigFloat const_pi(int prec) {
    BigFloat r(prec);
    mpfr_const_pi(r.raw(), MPFR_RNDN);
    return r;
}
// nearest integer, as BigFloat
inline BigFloat round(const BigFloat& a) {
    BigFloat r(a.prec());
    mpfr_rint(r.raw(), a.raw(), MPFR_RNDN);
    return r;
}
inline long lround(const BigFloat& a) {
    return mpfr_get_si(a.raw(), MPFR_RNDN);
}

} // namespace eiszero

#endif
