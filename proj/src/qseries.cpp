#include "eiszero/qseries.hpp"

#include <cmath>

namespace eiszero {

CxSeries to_complex(const RatSeries& f, int prec) {
    CxSeries r;
    r.width = f.width;
    r.lead = f.lead;
    r.coeffs.clear();
    r.coeffs.reserve(f.coeffs.size());
    for (const mpq_class& c : f.coeffs)
        r.coeffs.emplace_back(BigFloat(c, prec), BigFloat(0.0, prec));
    return r;
}

namespace {

// Fit |a_n| <= C * n^s over the retained range, safety factor 4. The
// exponent is read off the largest log-ratio in the upper half of the range
// so both polynomially and subexponentially growing coefficient streams are
// covered by the bound that evaluate() reports.
struct GrowthModel {
    double s = 0.0;
    double log_c = 0.0;  // natural log of C (with the safety factor)
};

GrowthModel fit_growth(const CxSeries& f) {
    GrowthModel g;
    double best_s = 0.0;
    double max_log_ratio = -1e300;
    bool any = false;
    long m = f.trunc_order();
    for (long i = 0; i <= m; ++i) {
        long n = f.lead + i;
        if (n < 1) continue;
        double a = cx_traits<BigComplex>::dabs(f.coeffs[static_cast<size_t>(i)]);
        if (a <= 0.0) continue;
        any = true;
        double r = std::log(a) / std::log(static_cast<double>(n) + 1.0);
        if (r > best_s) best_s = r;
    }
    best_s = std::max(0.0, best_s);
    for (long i = 0; i <= m; ++i) {
        long n = f.lead + i;
        double a = cx_traits<BigComplex>::dabs(f.coeffs[static_cast<size_t>(i)]);
        if (a <= 0.0) continue;
        double lr = std::log(a) - best_s * std::log(std::max(1.0, static_cast<double>(n)));
        if (lr > max_log_ratio) max_log_ratio = lr;
    }
    if (!any) {
        // every retained positive-exponent coefficient vanishes: treat the
        // series as exactly its retained polynomial
        g.s = -1.0;
        g.log_c = 0.0;
        return g;
    }
    if (max_log_ratio < -1e299) max_log_ratio = 0.0;
    g.s = best_s;
    g.log_c = max_log_ratio + std::log(4.0);
    return g;
}

}  // namespace

EvalResult evaluate(const CxSeries& f, const BigComplex& z, int prec) {
    if (z.im.sign() <= 0) throw std::domain_error("evaluate: point not in the upper half plane");
    using T = cx_traits<BigComplex>;
    T::ctx ctx{prec};

    BigFloat h(f.width, prec);
    // reduce the real part mod h so that z and z + h produce identical bits
    BigFloat x = z.re - h * round(z.re / h);
    BigFloat two_pi = BigFloat(2.0, prec) * const_pi(prec);
    BigFloat theta = two_pi * x / h;
    BigFloat decay = exp(-(two_pi * z.im / h));
    BigComplex q = decay * T::expi(theta, ctx);

    // Horner from the top retained exponent down to `lead`, then q^lead.
    long m = f.trunc_order();
    BigComplex acc(BigFloat(0.0, prec), BigFloat(0.0, prec));
    for (long i = m; i >= 0; --i) {
        acc = acc * q + f.coeffs[static_cast<size_t>(i)];
    }
    acc = acc * pow_si(q, f.lead);

    GrowthModel g = fit_growth(f);
    if (g.s < 0.0) return {acc, BigFloat(0.0, 64)};
    double absq = decay.to_double();
    double t = absq * std::exp(g.s / static_cast<double>(m + 1));
    if (!(t < 1.0))
        throw std::domain_error("evaluate: Im z below the controllable-tail floor");
    long top = f.lead + m;
    double log_tail = g.log_c + g.s * std::log(static_cast<double>(std::max(2L, top + 1))) +
                      static_cast<double>(top + 1) * std::log(absq) - std::log1p(-t);
    BigFloat tail = exp(BigFloat(log_tail, 64));
    return {acc, tail};
}

EvalResult evaluate(const RatSeries& f, const BigComplex& z, int prec) {
    return evaluate(to_complex(f, prec), z, prec);
}

long choose_truncation(int prec_bits, double y_min, double h, double growth_c) {
    double rate = 2.0 * 3.14159265358979323846 * y_min / h;
    double need = (prec_bits * std::log(2.0) + std::log(std::max(1.0, growth_c))) / rate;
    long m = static_cast<long>(std::ceil(need));
    return std::max(64L, m);
}

}  // namespace eiszero
