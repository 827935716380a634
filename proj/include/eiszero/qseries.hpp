// Truncated Laurent series in q_h = e^{2*pi*i*z/h}.
//
// Two coefficient domains are used: exact rationals (mpq_class) for
// construction and identity checks, and BigComplex for evaluation and root
// finding. The domains are distinct C++ types, so mixing them is a compile
// error; conversion is explicit and one-way (exact -> float).
//
// Representation: coeffs[i] is the coefficient of exponent lead+i. With
// trunc order M there are exactly M+1 retained coefficients; exponents
// >= lead+M+1 are unknown. Arithmetic tracks the guaranteed order of the
// result (the min rule) and records it.

#ifndef EISZERO_QSERIES_HPP
#define EISZERO_QSERIES_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <utility>
#include <vector>

#include "eiszero/bigcomplex.hpp"
#include "eiszero/bigfloat.hpp"

namespace eiszero {

inline bool coeff_is_zero(const mpq_class& c) { return c == 0; }
inline bool coeff_is_zero(const BigComplex& c) { return c.is_zero(); }

template <class C>
struct QSeries {
    mpq_class width{1};
    long lead = 0;
    std::vector<C> coeffs;  // size = trunc_order + 1

    QSeries() : coeffs{C{}} {}
    QSeries(mpq_class w, long l, std::vector<C> cs)
        : width(std::move(w)), lead(l), coeffs(std::move(cs)) {
        if (coeffs.empty()) throw std::domain_error("QSeries: empty coefficient vector");
    }

    long trunc_order() const { return static_cast<long>(coeffs.size()) - 1; }
    // first exponent whose coefficient is not retained
    long unknown_from() const { return lead + static_cast<long>(coeffs.size()); }

    const C& at(long n) const {
        static const C zero{};
        if (n < lead || n >= unknown_from()) return zero;
        return coeffs[static_cast<size_t>(n - lead)];
    }
    bool known(long n) const { return n < unknown_from(); }

    bool is_zero() const {
        for (const C& c : coeffs)
            if (!coeff_is_zero(c)) return false;
        return true;
    }

    void normalize() {
        size_t drop = 0;
        while (drop + 1 < coeffs.size() && coeff_is_zero(coeffs[drop])) ++drop;
        if (drop) {
            coeffs.erase(coeffs.begin(), coeffs.begin() + static_cast<long>(drop));
            lead += static_cast<long>(drop);
        }
    }
};

using RatSeries = QSeries<mpq_class>;
using CxSeries = QSeries<BigComplex>;

namespace detail {
inline void require_same_width(const mpq_class& a, const mpq_class& b) {
    if (a != b) throw std::domain_error("QSeries: width mismatch");
}
}  // namespace detail

template <class C>
QSeries<C> add(const QSeries<C>& f, const QSeries<C>& g) {
    detail::require_same_width(f.width, g.width);
    long lead = std::min(f.lead, g.lead);
    long unknown = std::min(f.unknown_from(), g.unknown_from());
    if (unknown <= lead) throw std::domain_error("QSeries add: no overlapping known range");
    QSeries<C> r;
    r.width = f.width;
    r.lead = lead;
    r.coeffs.assign(static_cast<size_t>(unknown - lead), C{});
    for (long n = lead; n < unknown; ++n) {
        C v = f.at(n);
        v += g.at(n);
        r.coeffs[static_cast<size_t>(n - lead)] = v;
    }
    r.normalize();
    return r;
}

template <class C>
QSeries<C> neg(const QSeries<C>& f) {
    QSeries<C> r = f;
    for (C& c : r.coeffs) c = -c;
    return r;
}

template <class C>
QSeries<C> sub(const QSeries<C>& f, const QSeries<C>& g) {
    return add(f, neg(g));
}

template <class C>
QSeries<C> mul(const QSeries<C>& f, const QSeries<C>& g) {
    detail::require_same_width(f.width, g.width);
    long lead = f.lead + g.lead;
    long m = std::min(f.trunc_order(), g.trunc_order());
    QSeries<C> r;
    r.width = f.width;
    r.lead = lead;
    r.coeffs.assign(static_cast<size_t>(m) + 1, C{});
    long nf = f.trunc_order(), ng = g.trunc_order();
    for (long i = 0; i <= nf; ++i) {
        if (coeff_is_zero(f.coeffs[static_cast<size_t>(i)])) continue;
        long jmax = std::min(ng, m - i);
        for (long j = 0; j <= jmax; ++j) {
            r.coeffs[static_cast<size_t>(i + j)] +=
                f.coeffs[static_cast<size_t>(i)] * g.coeffs[static_cast<size_t>(j)];
        }
    }
    r.normalize();
    return r;
}

inline mpq_class unit_over(const mpq_class& a) { return mpq_class(1) / a; }
inline BigComplex unit_over(const BigComplex& a) {
    BigComplex one(BigFloat(1.0, a.prec()), BigFloat(0.0, a.prec()));
    return one / a;
}
inline mpq_class unit_like(const mpq_class&) { return mpq_class(1); }
inline BigComplex unit_like(const BigComplex& a) {
    return BigComplex(BigFloat(1.0, a.prec()), BigFloat(0.0, a.prec()));
}

// 1/f to the same guaranteed order; leading retained coefficient must be nonzero.
template <class C>
QSeries<C> reciprocal(const QSeries<C>& f_in) {
    QSeries<C> f = f_in;
    f.normalize();
    if (coeff_is_zero(f.coeffs[0]))
        throw std::domain_error("QSeries reciprocal: zero leading coefficient");
    long m = f.trunc_order();
    QSeries<C> r;
    r.width = f.width;
    r.lead = -f.lead;
    r.coeffs.assign(static_cast<size_t>(m) + 1, C{});
    C inv_a0 = unit_over(f.coeffs[0]);
    r.coeffs[0] = inv_a0;
    for (long n = 1; n <= m; ++n) {
        C acc{};
        for (long k = 1; k <= n; ++k)
            acc += f.coeffs[static_cast<size_t>(k)] * r.coeffs[static_cast<size_t>(n - k)];
        r.coeffs[static_cast<size_t>(n)] = -(acc * inv_a0);
    }
    return r;
}

template <class C>
QSeries<C> pow_int(const QSeries<C>& f, long e) {
    if (e < 0) return pow_int(reciprocal(f), -e);
    QSeries<C> r;
    r.width = f.width;
    r.lead = 0;
    r.coeffs.assign(static_cast<size_t>(f.trunc_order()) + 1, C{});
    r.coeffs[0] = unit_like(f.coeffs[0]);
    QSeries<C> base = f;
    while (e) {
        if (e & 1) r = mul(r, base);
        if (e >>= 1) base = mul(base, base);
    }
    return r;
}

// f(z) -> f(z + h/2): the coefficient of exponent n picks up (-1)^n.
template <class C>
QSeries<C> half_period_shift(const QSeries<C>& f) {
    QSeries<C> r = f;
    for (long n = r.lead; n < r.unknown_from(); ++n)
        if (n & 1L) r.coeffs[static_cast<size_t>(n - r.lead)] = -r.coeffs[static_cast<size_t>(n - r.lead)];
    return r;
}

// f(z) -> f(m z) on the same q_h grid: exponent n maps to m*n, gaps are known
// zeros. The caller states the width the result is expected to live on.
template <class C>
QSeries<C> rescale(const QSeries<C>& f, long m, const mpq_class& target_width) {
    if (m <= 0) throw std::domain_error("QSeries rescale: factor must be positive");
    if (target_width != f.width)
        throw std::domain_error("QSeries rescale: inconsistent target width");
    if (m == 1) return f;
    QSeries<C> r;
    r.width = f.width;
    r.lead = m * f.lead;
    long unknown = m * f.unknown_from();
    r.coeffs.assign(static_cast<size_t>(unknown - r.lead - (m - 1)), C{});
    for (long i = 0; i <= f.trunc_order(); ++i)
        r.coeffs[static_cast<size_t>(m * i)] = f.coeffs[static_cast<size_t>(i)];
    return r;
}

template <class C>
QSeries<C> rescale(const QSeries<C>& f, long m) {
    return rescale(f, m, f.width);
}

// coefficient n -> n * coefficient; the analytic derivative is (2*pi*i/h)
// times this, applied by the evaluator.
template <class C>
QSeries<C> derivative_qscaled(const QSeries<C>& f);

template <>
inline RatSeries derivative_qscaled(const RatSeries& f) {
    RatSeries r = f;
    for (long n = r.lead; n < r.unknown_from(); ++n)
        r.coeffs[static_cast<size_t>(n - r.lead)] *= n;
    r.normalize();
    return r;
}

template <class C>
QSeries<C> truncate_to(const QSeries<C>& f, long new_order) {
    if (new_order >= f.trunc_order()) return f;
    if (new_order < 0) throw std::domain_error("QSeries truncate: negative order");
    QSeries<C> r = f;
    r.coeffs.resize(static_cast<size_t>(new_order) + 1);
    return r;
}

CxSeries to_complex(const RatSeries& f, int prec);

struct EvalResult {
    BigComplex value;
    BigFloat tail_bound;
};

// Horner evaluation at z in the upper half plane with a tail estimate from a
// fitted polynomial growth model (safety factor 4). Throws when Im z is too
// small for the tail to be controlled at this truncation order.
EvalResult evaluate(const CxSeries& f, const BigComplex& z, int prec);
EvalResult evaluate(const RatSeries& f, const BigComplex& z, int prec);

// Truncation order needed for tail below 2^-prec at height y_min, given the
// growth constant C: M = max(64, ceil((p ln2 + ln C) / (2 pi y_min / h))).
long choose_truncation(int prec_bits, double y_min, double h, double growth_c);

}  // namespace eiszero

#endif
