// Complex numbers over BigFloat, plus a tiny trait layer so the same
// evaluation templates run on std::complex<double> for fast scouting passes
// and on BigComplex for the final high-precision work.

#ifndef EISZERO_BIGCOMPLEX_HPP
#define EISZERO_BIGCOMPLEX_HPP

#include <complex>

#include "eiszero/bigfloat.hpp"

namespace eiszero {

struct BigComplex {
    BigFloat re, im;

    BigComplex() = default;
    explicit BigComplex(int prec) : re(prec), im(prec) {}
    BigComplex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}
    BigComplex(double r, double i, int prec) : re(r, prec), im(i, prec) {}

    int prec() const { return re.prec() > im.prec() ? re.prec() : im.prec(); }
    std::complex<double> to_std() const { return {re.to_double(), im.to_double()}; }
    bool is_zero() const { return re.is_zero() && im.is_zero(); }

    friend BigComplex operator+(const BigComplex& a, const BigComplex& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend BigComplex operator-(const BigComplex& a, const BigComplex& b) {
        return {a.re - b.re, a.im - b.im};
    }
    BigComplex operator-() const { return {-re, -im}; }
    friend BigComplex operator*(const BigComplex& a, const BigComplex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend BigComplex operator*(const BigFloat& s, const BigComplex& a) {
        return {s * a.re, s * a.im};
    }
    friend BigComplex operator/(const BigComplex& a, const BigComplex& b) {
        BigFloat n = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
    }
    friend BigComplex operator/(const BigComplex& a, const BigFloat& s) {
        return {a.re / s, a.im / s};
    }
    BigComplex& operator+=(const BigComplex& o) { re += o.re; im += o.im; return *this; }
    BigComplex& operator-=(const BigComplex& o) { re -= o.re; im -= o.im; return *this; }
    BigComplex& operator*=(const BigComplex& o) { *this = *this * o; return *this; }
};

inline BigFloat abs(const BigComplex& a) { return hypot(a.re, a.im); }
inline BigFloat norm(const BigComplex& a) { return a.re * a.re + a.im * a.im; }
inline BigComplex conj(const BigComplex& a) { return {a.re, -a.im}; }
inline BigComplex exp(const BigComplex& a) {
    BigFloat m = exp(a.re);
    return {m * cos(a.im), m * sin(a.im)};
}
inline BigComplex pow_si(BigComplex a, long e) {
    int p = a.prec();
    if (e < 0) return BigComplex(BigFloat(1.0, p), BigFloat(0.0, p)) / pow_si(a, -e);
    BigComplex r(BigFloat(1.0, p), BigFloat(0.0, p));
    while (e) {
        if (e & 1) r = r * a;
        a = a * a;
        e >>= 1;
    }
    return r;
}

// ---- scalar traits shared by double-complex and BigComplex code paths ----

template <class CX>
struct cx_traits;

template <>
struct cx_traits<std::complex<double>> {
    using real = double;
    struct ctx {
        int prec = 53;
    };
    static std::complex<double> make(double re, double im, const ctx&) { return {re, im}; }
    static std::complex<double> from_mpq(const mpq_class& q, const ctx&) { return {q.get_d(), 0.0}; }
    static std::complex<double> expi(double theta, const ctx&) {
        return {std::cos(theta), std::sin(theta)};
    }
    static double re(const std::complex<double>& z) { return z.real(); }
    static double im(const std::complex<double>& z) { return z.imag(); }
    static double dabs(const std::complex<double>& z) { return std::abs(z); }
    static std::complex<double> exp(const std::complex<double>& z) { return std::exp(z); }
    static std::complex<double> pow_int(std::complex<double> z, long e) {
        if (e < 0) return 1.0 / pow_int(z, -e);
        std::complex<double> r = 1.0;
        while (e) {
            if (e & 1) r *= z;
            z *= z;
            e >>= 1;
        }
        return r;
    }
    static double pi(const ctx&) { return 3.14159265358979323846; }
};

template <>
struct cx_traits<BigComplex> {
    using real = BigFloat;
    struct ctx {
        int prec = 128;
    };
    static BigComplex make(double re, double im, const ctx& c) { return BigComplex(re, im, c.prec); }
    static BigComplex from_mpq(const mpq_class& q, const ctx& c) {
        return BigComplex(BigFloat(q, c.prec), BigFloat(0.0, c.prec));
    }
    static BigComplex expi(const BigFloat& theta, const ctx&) {
        return {cos(theta), sin(theta)};
    }
    static BigFloat re(const BigComplex& z) { return z.re; }
    static BigFloat im(const BigComplex& z) { return z.im; }
    static double dabs(const BigComplex& z) { return abs(z).to_double(); }
    static BigComplex exp(const BigComplex& z) { return eiszero::exp(z); }
    static BigComplex pow_int(const BigComplex& z, long e) { return pow_si(z, e); }
    static BigFloat pi(const ctx& c) { return const_pi(c.prec); }
};

} // namespace eiszero

#endif
