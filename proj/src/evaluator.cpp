#include "eiszero/evaluator.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace eiszero {

mpq_class dedekind_sum(long h, long k) {
    if (k <= 0) throw std::domain_error("dedekind_sum: k must be positive");
    h %= k;
    if (h < 0) h += k;
    // s(h,k) with reciprocity; recursion depth is the Euclid chain length
    if (h == 0) return 0;
    if (k == 1) return 0;
    // s(h,k) + s(k,h) = -1/4 + (h^2 + k^2 + 1) / (12 h k)
    mpq_class hh(h), kk(k);
    mpq_class rec = mpq_class(-1, 4) + (hh * hh + kk * kk + 1) / (12 * hh * kk);
    mpq_class r = rec - dedekind_sum(k % h, h);
    r.canonicalize();
    return r;
}

const RatSeries& level1_series(long two_k, long order) {
    static std::map<long, RatSeries> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(two_k);
    if (it == cache.end() || it->second.trunc_order() < order) {
        RatSeries s = eisenstein_level1(two_k, std::max(order, 96L));
        auto [pos, _] = cache.insert_or_assign(two_k, std::move(s));
        return pos->second;
    }
    return it->second;
}

long level1_terms_needed(long two_k, int prec) {
    // |q| <= exp(-pi sqrt(3)) after reduction; coefficients grow ~ n^{2k-1}
    double lam = 3.14159265358979323846 * std::sqrt(3.0);
    double target = (prec + 16) * std::log(2.0) + 8.0;
    long n = 8;
    while (n < 4096) {
        double margin = n * lam - (two_k - 1) * std::log(static_cast<double>(n) + 1.0) -
                        std::log(250.0 * two_k);
        if (margin > target) break;
        ++n;
    }
    return n;
}

namespace {

template <class CX>
CX horner_level1(const RatSeries& s, long terms, const CX& q,
                 const typename cx_traits<CX>::ctx& ctx) {
    using T = cx_traits<CX>;
    long top = std::min(terms, s.trunc_order());
    CX acc = T::from_mpq(s.coeffs[static_cast<size_t>(top)], ctx);
    for (long i = top - 1; i >= 0; --i)
        acc = acc * q + T::from_mpq(s.coeffs[static_cast<size_t>(i)], ctx);
    return acc;
}

// q-scaled derivative sum_{n} n a_n q^n evaluated by Horner on n a_n
template <class CX>
CX horner_level1_deriv(const RatSeries& s, long terms, const CX& q,
                       const typename cx_traits<CX>::ctx& ctx) {
    using T = cx_traits<CX>;
    long top = std::min(terms, s.trunc_order());
    CX acc = T::from_mpq(s.coeffs[static_cast<size_t>(top)] * top, ctx);
    for (long i = top - 1; i >= 1; --i)
        acc = acc * q + T::from_mpq(s.coeffs[static_cast<size_t>(i)] * i, ctx);
    return acc * q;
}

template <class CX>
CX q_at(const CX& w, const typename cx_traits<CX>::ctx& ctx) {
    using T = cx_traits<CX>;
    auto two_pi = T::pi(ctx) + T::pi(ctx);
    // q = exp(2 pi i w)
    if constexpr (std::is_same_v<CX, std::complex<double>>) {
        return std::exp(std::complex<double>(0.0, two_pi) * w);
    } else {
        return exp(BigComplex(BigFloat(0.0, ctx.prec), two_pi) * w);
    }
}

}  // namespace

template <class CX>
CX eval_e2k(long two_k, const CX& z, const typename cx_traits<CX>::ctx& ctx) {
    using T = cx_traits<CX>;
    auto red = detail::sl2z_reduce(z, ctx);
    long terms = level1_terms_needed(two_k, ctx.prec);
    const RatSeries& s = level1_series(two_k, terms);
    CX q = q_at(red.w, ctx);
    CX val = horner_level1(s, terms, q, ctx);
    // E(w) = (c z + d)^{2k} E(z)
    CX czd = T::make(static_cast<double>(red.g.c), 0.0, ctx) * z +
             T::make(static_cast<double>(red.g.d), 0.0, ctx);
    return val * T::pow_int(czd, -two_k);
}

template <class CX>
std::pair<CX, CX> eval_e2k_deriv(long two_k, const CX& z,
                                 const typename cx_traits<CX>::ctx& ctx) {
    using T = cx_traits<CX>;
    auto red = detail::sl2z_reduce(z, ctx);
    long terms = level1_terms_needed(two_k, ctx.prec);
    const RatSeries& s = level1_series(two_k, terms);
    CX q = q_at(red.w, ctx);
    CX ew = horner_level1(s, terms, q, ctx);
    auto two_pi = T::pi(ctx) + T::pi(ctx);
    CX dew = horner_level1_deriv(s, terms, q, ctx);
    if constexpr (std::is_same_v<CX, std::complex<double>>) {
        dew *= std::complex<double>(0.0, two_pi);
    } else {
        dew = BigComplex(BigFloat(0.0, ctx.prec), two_pi) * dew;
    }
    CX czd = T::make(static_cast<double>(red.g.c), 0.0, ctx) * z +
             T::make(static_cast<double>(red.g.d), 0.0, ctx);
    CX inv = T::pow_int(czd, -two_k);
    CX val = ew * inv;
    // E'(z) = (cz+d)^{-2k-2} E'(w) - 2k c (cz+d)^{-2k-1} E(w)
    CX dval = dew * T::pow_int(czd, -two_k - 2) -
              T::make(static_cast<double>(two_k * red.g.c), 0.0, ctx) * ew *
                  T::pow_int(czd, -two_k - 1);
    return {val, dval};
}

template std::complex<double> eval_e2k<std::complex<double>>(
    long, const std::complex<double>&, const cx_traits<std::complex<double>>::ctx&);
template BigComplex eval_e2k<BigComplex>(long, const BigComplex&,
                                         const cx_traits<BigComplex>::ctx&);
template std::pair<std::complex<double>, std::complex<double>>
eval_e2k_deriv<std::complex<double>>(long, const std::complex<double>&,
                                     const cx_traits<std::complex<double>>::ctx&);
template std::pair<BigComplex, BigComplex> eval_e2k_deriv<BigComplex>(
    long, const BigComplex&, const cx_traits<BigComplex>::ctx&);

namespace {

BigComplex complex_sqrt(const BigComplex& z) {
    int p = z.prec();
    BigFloat r = abs(z);
    BigFloat phi = atan2(z.im, z.re);
    BigFloat half(mpq_class(1, 2), p);
    BigFloat rr = sqrt(r);
    BigFloat ha = phi * half;
    return {rr * cos(ha), rr * sin(ha)};
}

BigComplex eta_at_reduced(const BigComplex& w, int prec) {
    // q^{1/24} * prod(1 - q^n), pentagonal series for the product
    BigFloat two_pi = BigFloat(2.0, prec) * const_pi(prec);
    BigComplex q = exp(BigComplex(BigFloat(0.0, prec), two_pi) * w);
    BigComplex one(BigFloat(1.0, prec), BigFloat(0.0, prec));
    // |q| <= e^{-pi sqrt 3}: a handful of pentagonal terms suffice
    long jmax = 4 + static_cast<long>(std::sqrt(prec / 2.0));
    BigComplex acc = one;
    // 1 + sum_j (-1)^j (q^{j(3j-1)/2} + q^{j(3j+1)/2})
    for (long j = 1; j <= jmax; ++j) {
        long e1 = j * (3 * j - 1) / 2;
        long e2 = j * (3 * j + 1) / 2;
        BigComplex t = pow_si(q, e1) + pow_si(q, e2);
        if (j & 1) acc -= t;
        else acc += t;
    }
    BigFloat pi_over_12 = const_pi(prec) / BigFloat(12.0, prec);
    BigComplex q24 = exp(BigComplex(BigFloat(0.0, prec), pi_over_12) * w);
    return q24 * acc;
}

}  // namespace

BigComplex eval_eta(const BigComplex& z, int prec) {
    cx_traits<BigComplex>::ctx ctx{prec};
    auto red = detail::sl2z_reduce(z, ctx);
    long a = red.g.a, b = red.g.b, c = red.g.c, d = red.g.d;
    BigComplex etaw = eta_at_reduced(red.w, prec);
    if (c == 0) {
        // w = z + b (possibly with a = d = -1; projectively the same shift)
        long shift = (a == 1) ? b : -b;
        BigFloat ang = const_pi(prec) * BigFloat(mpq_class(shift, 12), prec);
        // eta(z + n) = e^{pi i n / 12} eta(z)  ->  invert the shift
        BigComplex mult(cos(ang), sin(ang));
        return etaw / mult;
    }
    if (c < 0) {
        a = -a; b = -b; c = -c; d = -d;
    }
    // eta(g z) = eps(g) (c z + d)^{1/2} eta(z), c > 0,
    // eps(g) = exp(pi i ((a+d)/(12c) - s(d,c) - 1/4))
    mpq_class ang_q = mpq_class(a + d, 12 * c) - dedekind_sum(d, c) - mpq_class(1, 4);
    ang_q.canonicalize();
    BigFloat ang = const_pi(prec) * BigFloat(ang_q, prec);
    BigComplex eps(cos(ang), sin(ang));
    BigComplex czd = BigComplex(BigFloat(static_cast<long>(c), prec), BigFloat(0.0, prec)) * z;
    czd.re += BigFloat(static_cast<long>(d), prec);
    BigComplex root = complex_sqrt(czd);
    return etaw / (eps * root);
}

BigComplex eval_e2(const BigComplex& z, int prec) {
    cx_traits<BigComplex>::ctx ctx{prec};
    auto red = detail::sl2z_reduce(z, ctx);
    // series at the reduced point
    static std::map<int, RatSeries> cache;
    static std::mutex mu;
    const RatSeries* sp;
    long terms = level1_terms_needed(2, prec) + 8;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(0);
        if (it == cache.end() || it->second.trunc_order() < terms)
            it = cache.insert_or_assign(0, e2_series(std::max(terms, 96L))).first;
        sp = &it->second;
    }
    BigComplex q = exp(BigComplex(BigFloat(0.0, prec), BigFloat(2.0, prec) * const_pi(prec)) * red.w);
    BigComplex e2w(BigFloat(0.0, prec), BigFloat(0.0, prec));
    {
        long top = std::min(terms, sp->trunc_order());
        BigComplex acc(BigFloat(sp->coeffs[static_cast<size_t>(top)], prec), BigFloat(0.0, prec));
        for (long i = top - 1; i >= 0; --i) {
            acc = acc * q;
            acc.re += BigFloat(sp->coeffs[static_cast<size_t>(i)], prec);
        }
        e2w = acc;
    }
    long c = red.g.c, d = red.g.d;
    if (c == 0) return e2w;  // pure translation
    // E2(w) = (cz+d)^2 E2(z) - (6 i c / pi)(cz+d)
    BigComplex czd = BigComplex(BigFloat(c, prec), BigFloat(0.0, prec)) * z;
    czd.re += BigFloat(d, prec);
    BigFloat six_c_over_pi = BigFloat(6.0 * static_cast<double>(c), prec) / const_pi(prec);
    BigComplex corr = BigComplex(BigFloat(0.0, prec), six_c_over_pi) * czd;
    return (e2w + corr) / (czd * czd);
}

}  // namespace eiszero
