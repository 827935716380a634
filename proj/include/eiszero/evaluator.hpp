// Pointwise evaluation of the classical blocks anywhere in the upper half
// plane: reduce the argument into the level-one fundamental domain, run the
// rapidly convergent q-series there, and unwind the automorphy factor (for
// eta, the multiplier system via Dedekind sums). Templated on the scalar so
// the zero scan can run in double before the high-precision passes.

#ifndef EISZERO_EVALUATOR_HPP
#define EISZERO_EVALUATOR_HPP

#include <complex>
#include <utility>
#include <vector>

#include "eiszero/qseries.hpp"
#include "eiszero/series_builders.hpp"

namespace eiszero {

struct ReductionMatrix {
    long a = 1, b = 0, c = 0, d = 1;  // w = (a z + b) / (c z + d)
};

// Dedekind sum s(h, k), k > 0, gcd(h, k) = 1, via reciprocity.
mpq_class dedekind_sum(long h, long k);

// Level-one Eisenstein coefficients with a cache shared across calls.
const RatSeries& level1_series(long two_k, long order);
long level1_terms_needed(long two_k, int prec);

namespace detail {

template <class CX>
struct Reduced {
    CX w;
    ReductionMatrix g;
};

// bring z into |Re| <= 1/2, |z| >= 1 (up to rounding slop)
template <class CX>
Reduced<CX> sl2z_reduce(const CX& z, const typename cx_traits<CX>::ctx& ctx) {
    using T = cx_traits<CX>;
    Reduced<CX> r{z, {}};
    for (int iter = 0; iter < 4096; ++iter) {
        double x = static_cast<double>([&] {
            if constexpr (std::is_same_v<CX, std::complex<double>>) return r.w.real();
            else return r.w.re.to_double();
        }());
        long n = std::lround(x);
        if (n != 0) {
            r.w = r.w - T::make(static_cast<double>(n), 0.0, ctx);
            r.g.a -= n * r.g.c;
            r.g.b -= n * r.g.d;
        }
        double n2 = [&] {
            if constexpr (std::is_same_v<CX, std::complex<double>>) return std::norm(r.w);
            else return norm(r.w).to_double();
        }();
        if (n2 >= 1.0 - 1e-14) break;
        // w -> -1/w
        CX minus_one = T::make(-1.0, 0.0, ctx);
        r.w = minus_one / r.w;
        ReductionMatrix s{-r.g.c, -r.g.d, r.g.a, r.g.b};
        r.g = s;
    }
    return r;
}

}  // namespace detail

// E_{2k}(z) and its z-derivative, via reduction + Horner.
template <class CX>
CX eval_e2k(long two_k, const CX& z, const typename cx_traits<CX>::ctx& ctx);
template <class CX>
std::pair<CX, CX> eval_e2k_deriv(long two_k, const CX& z,
                                 const typename cx_traits<CX>::ctx& ctx);

// Dedekind eta with the full multiplier system.
BigComplex eval_eta(const BigComplex& z, int prec);

// quasi-modular E_2
BigComplex eval_e2(const BigComplex& z, int prec);

extern template std::complex<double> eval_e2k<std::complex<double>>(
    long, const std::complex<double>&, const cx_traits<std::complex<double>>::ctx&);
extern template BigComplex eval_e2k<BigComplex>(long, const BigComplex&,
                                                const cx_traits<BigComplex>::ctx&);
extern template std::pair<std::complex<double>, std::complex<double>>
eval_e2k_deriv<std::complex<double>>(long, const std::complex<double>&,
                                     const cx_traits<std::complex<double>>::ctx&);
extern template std::pair<BigComplex, BigComplex> eval_e2k_deriv<BigComplex>(
    long, const BigComplex&, const cx_traits<BigComplex>::ctx&);

}  // namespace eiszero

#endif
