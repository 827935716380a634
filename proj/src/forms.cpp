#include "eiszero/forms.hpp"

#include <algorithm>
#include <numeric>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>

namespace eiszero {

namespace {

std::vector<long> divisors_of(long n) {
    std::vector<long> ds;
    for (long d = 1; d <= n; ++d)
        if (n % d == 0) ds.push_back(d);
    return ds;
}

mpq_class pow_q(const mpq_class& base, long e) {
    mpq_class b = base;
    b.canonicalize();
    mpq_class r(1);
    for (long i = 0; i < e; ++i) r *= b;
    return r;
}

// constant term of E_{2k}(d z) at the cusp a/c, up to a per-cusp scalar that
// is shared by all d and so cancels out of the homogeneous equations:
// (gcd(c,d)/d)^{2k}
mpq_class cusp_constant(long d, const CuspData& cusp, long two_k) {
    if (cusp.at_infinity) return 1;
    mpz_class c = cusp.representative.get_den();
    mpz_class g = gcd(mpz_class(d), c);
    mpq_class base(g, mpz_class(d));
    base.canonicalize();
    return pow_q(base, two_k);
}

// exact rational Gaussian elimination; A is n x n, rhs length n
std::vector<mpq_class> solve_linear(std::vector<std::vector<mpq_class>> A,
                                    std::vector<mpq_class> rhs) {
    size_t n = A.size();
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && A[piv][col] == 0) ++piv;
        if (piv == n) throw std::domain_error("eisenstein system is singular");
        std::swap(A[piv], A[col]);
        std::swap(rhs[piv], rhs[col]);
        mpq_class inv = mpq_class(1) / A[col][col];
        for (size_t j = col; j < n; ++j) A[col][j] *= inv;
        rhs[col] *= inv;
        for (size_t r = 0; r < n; ++r) {
            if (r == col || A[r][col] == 0) continue;
            mpq_class f = A[r][col];
            for (size_t j = col; j < n; ++j) A[r][j] -= f * A[col][j];
            rhs[r] -= f * rhs[col];
        }
    }
    return rhs;
}

// representative cusp indices, one per class id
std::vector<size_t> class_reps(const GroupDescriptor& g) {
    std::vector<size_t> reps;
    std::set<int> seen;
    for (size_t i = 0; i < g.cusps.size(); ++i) {
        if (seen.insert(g.cusps[i].class_id).second) reps.push_back(i);
    }
    return reps;
}

}  // namespace

std::vector<std::pair<long, mpq_class>> eisenstein_combo(const Registry& reg,
                                                         const GroupDescriptor& g, long two_k) {
    if (!g.good_for(two_k))
        throw std::domain_error("weight must be even, >= 4 and flagged good for " + g.name);
    long k = two_k / 2;

    if (g.eis.kind == EisRecipe::Kind::RescaleOf) {
        const GroupDescriptor& base = reg.get(g.eis.base);
        auto inner = eisenstein_combo(reg, base, two_k);
        std::vector<std::pair<long, mpq_class>> out;
        for (auto& [d, r] : inner) out.emplace_back(d * g.eis.rescale_m, r);
        return out;
    }

    std::vector<size_t> reps = class_reps(g);

    if (g.eis.kind == EisRecipe::Kind::DivisorSolve) {
        std::vector<long> ds = divisors_of(g.level);
        if (ds.size() != reps.size())
            throw std::domain_error("old-form span does not match the cusp count for " + g.name);
        std::vector<std::vector<mpq_class>> A(reps.size(), std::vector<mpq_class>(ds.size()));
        std::vector<mpq_class> rhs(reps.size(), 0);
        for (size_t r = 0; r < reps.size(); ++r) {
            const CuspData& cu = g.cusps[reps[r]];
            for (size_t j = 0; j < ds.size(); ++j) A[r][j] = cusp_constant(ds[j], cu, two_k);
            rhs[r] = cu.at_infinity ? 1 : 0;
        }
        std::vector<mpq_class> x = solve_linear(std::move(A), std::move(rhs));
        std::vector<std::pair<long, mpq_class>> out;
        for (size_t j = 0; j < ds.size(); ++j)
            if (x[j] != 0) out.emplace_back(ds[j], x[j]);
        return out;
    }

    // SymmetrizedSolve: basis of Atkin-Lehner eigenvalue-(+1) combinations
    long e = g.eis.al_e;
    std::vector<long> ds = divisors_of(g.level);
    struct Orbit {
        long d1, d2;
        mpq_class beta;  // basis vector E(d1 z) + beta E(d2 z)
    };
    std::vector<Orbit> orbits;
    std::set<long> used;
    for (long d : ds) {
        if (used.count(d)) continue;
        long gg = std::gcd(d, e);
        long d2 = e * d / (gg * gg);
        used.insert(d);
        used.insert(d2);
        if (d2 == d) {
            orbits.push_back({d, d, 0});
        } else {
            long dl = std::min(d, d2);
            long gl = std::gcd(dl, e);
            orbits.push_back({dl, std::max(d, d2), pow_q(mpq_class(e, gl * gl), k)});
        }
    }
    if (orbits.size() != reps.size())
        throw std::domain_error("symmetrized span does not match the cusp classes for " + g.name);
    std::vector<std::vector<mpq_class>> A(reps.size(), std::vector<mpq_class>(orbits.size()));
    std::vector<mpq_class> rhs(reps.size(), 0);
    for (size_t r = 0; r < reps.size(); ++r) {
        const CuspData& cu = g.cusps[reps[r]];
        for (size_t j = 0; j < orbits.size(); ++j) {
            mpq_class v = cusp_constant(orbits[j].d1, cu, two_k);
            if (orbits[j].d2 != orbits[j].d1)
                v += orbits[j].beta * cusp_constant(orbits[j].d2, cu, two_k);
            A[r][j] = v;
        }
        rhs[r] = cu.at_infinity ? 1 : 0;
    }
    std::vector<mpq_class> x = solve_linear(std::move(A), std::move(rhs));
    std::map<long, mpq_class> acc;
    for (size_t j = 0; j < orbits.size(); ++j) {
        acc[orbits[j].d1] += x[j];
        if (orbits[j].d2 != orbits[j].d1) acc[orbits[j].d2] += x[j] * orbits[j].beta;
    }
    std::vector<std::pair<long, mpq_class>> out;
    for (auto& [d, r] : acc)
        if (r != 0) out.emplace_back(d, r);
    return out;
}

RatSeries combo_qexp(const std::vector<std::pair<long, mpq_class>>& combo, long two_k,
                     long order) {
    RatSeries acc;
    acc.width = 1;
    acc.lead = 0;
    acc.coeffs.assign(static_cast<size_t>(order) + 1, mpq_class(0));
    for (auto& [d, r] : combo) {
        RatSeries part = rescale(level1_series(two_k, order / d + 1), d);
        part = truncate_to(part, order);
        for (long n = 0; n <= std::min(order, part.trunc_order()); ++n)
            acc.coeffs[static_cast<size_t>(n)] += r * part.at(n);
    }
    return acc;
}

namespace {

// (f | sigma_s)(i tau h_s) for the slope fit, via the divisor combo
BigComplex slash_at(const GroupDescriptor& g, const EisensteinForm& f, const CuspData& cusp,
                    double tau, int prec) {
    BigFloat hs(cusp.width, prec);
    BigComplex w(BigFloat(0.0, prec), BigFloat(tau, prec) * hs);
    BigComplex z = cusp.scaling.apply(w, prec);
    BigComplex val = eis_value(f, z, prec);
    BigComplex czd = BigComplex(cusp.scaling.m[1][0].value(prec), BigFloat(0.0, prec)) * w;
    czd.re += cusp.scaling.m[1][1].value(prec);
    return val * pow_si(czd, -f.two_k);
}

}  // namespace

long cusp_vanishing_order(const GroupDescriptor& g, const EisensteinForm& f, size_t cusp_index) {
    const CuspData& cusp = g.cusps[cusp_index];
    if (cusp.at_infinity) return 0;
    // |F(i tau h_s)| ~ |b_m| e^{-2 pi m tau}: fit the slope at three heights.
    // The heights scale with the weight so the subleading coefficients
    // (which grow like 2^{2k}) stay negligible, and the precision budget
    // covers the cancellation inside the divisor combo.
    const double two_pi = 2.0 * 3.14159265358979323846;
    long m_guess = 2 * f.two_k * g.index_mu / 12 + 2;  // at most the full valence
    for (int attempt = 0; attempt < 6; ++attempt) {
        double tau0 = std::max(1.5, (f.two_k * std::log(2.0) + 9.0) / two_pi) + 0.75 * attempt;
        double taus[3] = {tau0, tau0 + 0.5, tau0 + 1.0};
        int prec = 256 + static_cast<int>(two_pi * static_cast<double>(m_guess) *
                                          (tau0 + 1.2) / std::log(2.0));
        prec = std::min(prec, 16384);
        double lv[3];
        bool usable = true;
        for (int i = 0; i < 3 && usable; ++i) {
            BigComplex v = slash_at(g, f, cusp, taus[i], prec);
            if (abs(v).is_zero()) usable = false;
            else lv[i] = log(abs(v)).to_double();
        }
        if (!usable) continue;
        double m12 = (lv[0] - lv[1]) / (two_pi * (taus[1] - taus[0]));
        double m13 = (lv[0] - lv[2]) / (two_pi * (taus[2] - taus[0]));
        long m = std::lround(m12);
        if (std::abs(m12 - m) > 0.02 || std::abs(m13 - m) > 0.02 || m > m_guess) {
            m_guess = std::max<long>(m_guess, std::lround(std::max(m12, m13)) + 1);
            continue;
        }
        if (m < 1)
            throw std::domain_error("constructed form fails to vanish at a cusp of " + g.name);
        return m;
    }
    throw std::domain_error("cusp order slope fit did not stabilize for " + g.name);
}

CuspExpansion cusp_expansion(const GroupDescriptor& g, const EisensteinForm& f,
                             size_t cusp_index, long order, int prec) {
    const CuspData& cusp = g.cusps[cusp_index];
    CuspExpansion out;
    if (cusp.at_infinity) {
        out.series = to_complex(truncate_to(f.qexp, order), prec);
        out.numeric = false;
        out.leading_order = 0;
        return out;
    }
    // numeric coefficient recovery: discrete Fourier inversion on a horocycle
    long P = 2 * (order + 8);
    double tau = 0.8;
    BigFloat hs(cusp.width, prec);
    BigFloat two_pi = BigFloat(2.0, prec) * const_pi(prec);
    std::vector<BigComplex> samples;
    samples.reserve(static_cast<size_t>(P));
    for (long j = 0; j < P; ++j) {
        BigFloat x = BigFloat(static_cast<double>(j) / static_cast<double>(P), prec) * hs;
        BigComplex w(x, BigFloat(tau, prec) * hs);
        BigComplex z = cusp.scaling.apply(w, prec);
        BigComplex val = eis_value(f, z, prec);
        BigComplex czd = BigComplex(cusp.scaling.m[1][0].value(prec), BigFloat(0.0, prec)) * w;
        czd.re += cusp.scaling.m[1][1].value(prec);
        samples.push_back(val * pow_si(czd, -f.two_k));
    }
    CxSeries s;
    s.width = cusp.width;
    s.lead = 0;
    s.coeffs.clear();
    BigFloat decay = exp(-(two_pi * BigFloat(tau, prec)));
    for (long n = 0; n <= order; ++n) {
        BigComplex acc(BigFloat(0.0, prec), BigFloat(0.0, prec));
        for (long j = 0; j < P; ++j) {
            BigFloat ang = -(two_pi * BigFloat(static_cast<double>(j * n % P) /
                                               static_cast<double>(P), prec));
            acc += samples[static_cast<size_t>(j)] * BigComplex(cos(ang), sin(ang));
        }
        acc = acc / BigFloat(static_cast<double>(P), prec);
        // undo |q_s|^n from the horocycle height
        acc = acc * pow_si(BigComplex(decay, BigFloat(0.0, prec)), -n);
        s.coeffs.push_back(acc);
    }
    out.series = std::move(s);
    out.numeric = true;
    out.leading_order = cusp_vanishing_order(g, f, cusp_index);
    return out;
}

EisensteinForm build_eisenstein(const Registry& reg, const GroupDescriptor& g, long two_k,
                                long order) {
    EisensteinForm f;
    f.group = g.name;
    f.two_k = two_k;
    f.combo = eisenstein_combo(reg, g, two_k);
    f.qexp = combo_qexp(f.combo, two_k, order);
    if (f.qexp.lead != 0 || f.qexp.coeffs[0] != 1)
        throw std::domain_error("eisenstein normalization failed for " + g.name);
    f.cusp_orders.assign(g.cusps.size(), 0);
    std::map<int, long> class_order;
    for (size_t i = 0; i < g.cusps.size(); ++i) {
        if (g.cusps[i].at_infinity) continue;
        auto it = class_order.find(g.cusps[i].class_id);
        if (it != class_order.end()) {
            f.cusp_orders[i] = it->second;
            continue;
        }
        long m = cusp_vanishing_order(g, f, i);
        class_order[g.cusps[i].class_id] = m;
        f.cusp_orders[i] = m;
    }
    return f;
}

long compute_s1(const GroupDescriptor& g, const EisensteinForm& f) {
    long s1 = 0;
    std::set<int> seen;
    for (size_t i = 0; i < g.cusps.size(); ++i) {
        if (!seen.insert(g.cusps[i].class_id).second) continue;
        if (g.cusps[i].excluded) continue;
        if (f.cusp_orders[i] % 2 == 1) ++s1;
    }
    return s1;
}

Hauptmodul build_hauptmodul(const Registry& reg, const GroupDescriptor& g, long order) {
    (void)reg;
    Hauptmodul h;
    h.group = g.name;
    h.recipe = g.haupt;
    RatSeries raw;
    switch (g.haupt.kind) {
        case HauptRecipe::Kind::EtaQuotient:
            raw = eta_quotient(g.haupt.eta, order + 2);
            break;
        case HauptRecipe::Kind::Sl2zJ: {
            RatSeries e4 = eisenstein_level1(4, order + 2);
            RatSeries num = mul(mul(e4, e4), e4);
            raw = mul(num, reciprocal(delta_series(order + 2)));
            break;
        }
        case HauptRecipe::Kind::Weight2Quotient11: {
            RatSeries e2 = e2_series(order + 2);
            RatSeries phi = rescale(e2, 11);
            phi = truncate_to(phi, order + 2);
            for (auto& c : phi.coeffs) c *= mpq_class(11, 10);
            RatSeries e2s = e2;
            for (auto& c : e2s.coeffs) c *= mpq_class(-1, 10);
            phi = add(phi, e2s);
            RatSeries fcusp = eta_quotient({{1, 2}, {11, 2}}, order + 2);
            raw = mul(phi, reciprocal(fcusp));
            break;
        }
    }
    raw = truncate_to(raw, order + 1);
    if (raw.lead != -1 || raw.coeffs[0] != 1)
        throw std::domain_error("hauptmodul recipe does not have a simple unit pole for " +
                                g.name);
    h.const_shift = raw.at(0);
    RatSeries canon = raw;
    canon.coeffs[1] -= h.const_shift;
    canon.normalize();
    if (canon.at(0) != 0) throw std::domain_error("hauptmodul canonicalization failed");
    h.qexp = canon;
    return h;
}

RatSeries conjugate_form(const RatSeries& f) { return half_period_shift(f); }

Hauptmodul conjugate_hauptmodul(const Hauptmodul& j) {
    Hauptmodul out = j;
    out.group = j.group + "'";
    out.qexp = neg(half_period_shift(j.qexp));
    out.const_shift = 0;  // evaluation goes through the conjugated series
    return out;
}

// ---- pointwise evaluation ----

BigComplex eis_value(const EisensteinForm& f, const BigComplex& z, int prec) {
    cx_traits<BigComplex>::ctx ctx{prec};
    BigComplex acc(BigFloat(0.0, prec), BigFloat(0.0, prec));
    for (auto& [d, r] : f.combo) {
        BigComplex dz = BigComplex(BigFloat(static_cast<long>(d), prec), BigFloat(0.0, prec)) * z;
        acc += BigFloat(r, prec) * eval_e2k<BigComplex>(f.two_k, dz, ctx);
    }
    return acc;
}

std::pair<BigComplex, BigComplex> eis_value_deriv(const EisensteinForm& f, const BigComplex& z,
                                                  int prec) {
    cx_traits<BigComplex>::ctx ctx{prec};
    BigComplex acc(BigFloat(0.0, prec), BigFloat(0.0, prec));
    BigComplex dacc = acc;
    for (auto& [d, r] : f.combo) {
        BigComplex dz = BigComplex(BigFloat(static_cast<long>(d), prec), BigFloat(0.0, prec)) * z;
        auto [v, dv] = eval_e2k_deriv<BigComplex>(f.two_k, dz, ctx);
        BigFloat rr(r, prec);
        acc += rr * v;
        dacc += (rr * BigFloat(static_cast<long>(d), prec)) * dv;
    }
    return {acc, dacc};
}

std::complex<double> eis_value_d(const EisensteinForm& f, const std::complex<double>& z) {
    cx_traits<std::complex<double>>::ctx ctx{};
    std::complex<double> acc = 0.0;
    for (auto& [d, r] : f.combo)
        acc += r.get_d() * eval_e2k<std::complex<double>>(f.two_k, static_cast<double>(d) * z, ctx);
    return acc;
}

std::pair<std::complex<double>, double> eis_value_cond_d(const EisensteinForm& f,
                                                         const std::complex<double>& z) {
    cx_traits<std::complex<double>>::ctx ctx{};
    std::complex<double> acc = 0.0;
    double magsum = 0.0;
    for (auto& [d, r] : f.combo) {
        std::complex<double> t =
            r.get_d() * eval_e2k<std::complex<double>>(f.two_k, static_cast<double>(d) * z, ctx);
        acc += t;
        magsum += std::abs(t);
    }
    return {acc, magsum};
}

std::pair<std::complex<double>, std::complex<double>> eis_value_deriv_d(
    const EisensteinForm& f, const std::complex<double>& z) {
    cx_traits<std::complex<double>>::ctx ctx{};
    std::complex<double> acc = 0.0, dacc = 0.0;
    for (auto& [d, r] : f.combo) {
        auto [v, dv] =
            eval_e2k_deriv<std::complex<double>>(f.two_k, static_cast<double>(d) * z, ctx);
        acc += r.get_d() * v;
        dacc += r.get_d() * static_cast<double>(d) * dv;
    }
    return {acc, dacc};
}

BigComplex haupt_value(const Hauptmodul& h, const BigComplex& z, int prec) {
    BigComplex val(BigFloat(0.0, prec), BigFloat(0.0, prec));
    switch (h.recipe.kind) {
        case HauptRecipe::Kind::EtaQuotient: {
            BigComplex prod(BigFloat(1.0, prec), BigFloat(0.0, prec));
            for (const EtaFactor& f : h.recipe.eta) {
                BigComplex dz =
                    BigComplex(BigFloat(f.divisor, prec), BigFloat(0.0, prec)) * z;
                prod = prod * pow_si(eval_eta(dz, prec), f.exponent);
            }
            val = prod;
            break;
        }
        case HauptRecipe::Kind::Sl2zJ: {
            cx_traits<BigComplex>::ctx ctx{prec};
            BigComplex e4 = eval_e2k<BigComplex>(4, z, ctx);
            BigComplex eta = eval_eta(z, prec);
            val = (e4 * e4 * e4) / pow_si(eta, 24);
            break;
        }
        case HauptRecipe::Kind::Weight2Quotient11: {
            BigComplex z11 = BigComplex(BigFloat(11L, prec), BigFloat(0.0, prec)) * z;
            BigComplex phi = (BigFloat(11L, prec) * eval_e2(z11, prec) - eval_e2(z, prec)) /
                             BigFloat(10L, prec);
            BigComplex fc = eval_eta(z, prec) * eval_eta(z11, prec);
            val = phi / (fc * fc);
            break;
        }
    }
    val.re -= BigFloat(h.const_shift, prec);
    return val;
}

BigComplex haupt_value_at_cusp(const GroupDescriptor& g, const Hauptmodul& h, size_t cusp_index,
                               int prec) {
    const CuspData& cusp = g.cusps[cusp_index];
    BigFloat big_y(40.0, prec);
    if (cusp.at_infinity)
        throw std::domain_error("hauptmodul has its pole at the infinity cusp");
    BigComplex w(BigFloat(0.0, prec), big_y * BigFloat(cusp.width, prec));
    BigComplex z = cusp.scaling.apply(w, prec);
    return haupt_value(h, z, prec);
}

A0A1 compute_a0_a1(const GroupDescriptor& g, const Hauptmodul& h, int prec) {
    A0A1 out{BigFloat(0.0, prec), BigFloat(0.0, prec), !g.acceptable};
    auto value_at = [&](const mpq_class& x_q, const mpq_class& y_sq) -> BigComplex {
        if (y_sq == 0) {
            // boundary touches the real axis there: a cusp value
            for (size_t i = 0; i < g.cusps.size(); ++i) {
                if (!g.cusps[i].at_infinity && g.cusps[i].representative == x_q)
                    return haupt_value_at_cusp(g, h, i, prec);
            }
            throw std::domain_error("boundary point at height zero is not a registered cusp");
        }
        BigComplex z(BigFloat(x_q, prec), sqrt(BigFloat(y_sq, prec)));
        return haupt_value(h, z, prec);
    };
    BigComplex a0 = value_at(mpq_class(-g.width_h / 2), g.y0_sq);
    BigComplex a1 = value_at(mpq_class(0), g.y1_sq);
    double tol = std::max(1e-20, std::ldexp(1.0, -(prec - 24)));
    if (g.acceptable) {
        if (abs(a0.im).to_double() > tol || abs(a1.im).to_double() > tol)
            throw std::domain_error("boundary hauptmodul value is not real for " + g.name);
    }
    out.a0 = a0.re;
    out.a1 = a1.re;
    return out;
}

long compute_c(const GroupDescriptor& g, const Hauptmodul& h, long samples_per_arc, int prec) {
    // Ratio sign on each sample interval: sign(y') is analytic on a circular
    // arc traversed with decreasing angle (-sign(cos theta)); the j-side uses
    // first differences of Re j along the arc. Detected flips are refined by
    // bisection so that group-equivalent critical points (equal hauptmodul
    // value) can be folded reliably.
    std::vector<double> critical;

    struct ArcFrame {
        double tb, te, r, cx;
        BigFloat rb{0.0, 64}, cb{0.0, 64};
    };
    std::vector<ArcFrame> frames;
    for (const ArcSegment& a : g.arcs) {
        ArcFrame fr;
        auto [tb, te] = a.angle_range_d();
        fr.tb = tb;
        fr.te = te;
        fr.r = a.radius_d();
        fr.cx = mpq_class(a.center).get_d();
        fr.rb = sqrt(BigFloat(a.radius_sq, prec));
        fr.cb = BigFloat(a.center, prec);
        frames.push_back(fr);
    }

    auto point_on = [&](size_t ai, double t) {
        const ArcFrame& fr = frames[ai];
        double th = fr.tb + (fr.te - fr.tb) * t;
        BigFloat thb(th, prec);
        return BigComplex(fr.cb + fr.rb * cos(thb), fr.rb * sin(thb));
    };
    auto rej_at = [&](size_t ai, double t) {
        return haupt_value(h, point_on(ai, t), prec).re.to_double();
    };
    double dj_floor = 0.0;  // set once the arcs have been sampled
    auto ratio_sign_at = [&](size_t ai, double t) -> int {
        const ArcFrame& fr = frames[ai];
        double th = fr.tb + (fr.te - fr.tb) * t;
        int sy = -(std::cos(th) > 0 ? 1 : (std::cos(th) < 0 ? -1 : 0));
        double dt = 2e-7;
        double dj = rej_at(ai, t + dt) - rej_at(ai, t - dt);
        int sj = std::abs(dj) <= dj_floor * dt ? 0 : (dj > 0 ? 1 : -1);
        return sy * sj;
    };

    struct ArcSigns {
        std::vector<int> interval_sign;
    };
    double eps_t = 1e-6;
    std::vector<ArcSigns> per_arc(g.arcs.size());
    std::vector<std::vector<double>> rj(g.arcs.size());
    double jscale = 1.0;
    for (size_t ai = 0; ai < g.arcs.size(); ++ai) {
        long n = samples_per_arc;
        rj[ai].resize(static_cast<size_t>(n) + 1);
        for (long i = 0; i <= n; ++i) {
            double t = eps_t + (1.0 - 2 * eps_t) * static_cast<double>(i) / n;
            rj[ai][static_cast<size_t>(i)] = rej_at(ai, t);
            jscale = std::max(jscale, std::abs(rj[ai][static_cast<size_t>(i)]));
        }
    }
    // differences below this are evaluation noise, not j moving: near the
    // cusps the hauptmodul flattens exponentially and the sampled signs
    // would otherwise flip at random
    dj_floor = 1e-11 * jscale;
    for (size_t ai = 0; ai < g.arcs.size(); ++ai) {
        long n = samples_per_arc;
        per_arc[ai].interval_sign.resize(static_cast<size_t>(n));
        for (long i = 0; i < n; ++i) {
            double t_mid = eps_t + (1.0 - 2 * eps_t) * (static_cast<double>(i) + 0.5) / n;
            double th = frames[ai].tb + (frames[ai].te - frames[ai].tb) * t_mid;
            int sy = -(std::cos(th) > 0 ? 1 : (std::cos(th) < 0 ? -1 : 0));
            double dj = rj[ai][static_cast<size_t>(i + 1)] - rj[ai][static_cast<size_t>(i)];
            int sj = std::abs(dj) <= dj_floor / n ? 0 : (dj > 0 ? 1 : -1);
            per_arc[ai].interval_sign[static_cast<size_t>(i)] = sy * sj;
        }
    }

    // interior flips, refined by bisection on the ratio sign
    for (size_t ai = 0; ai < g.arcs.size(); ++ai) {
        const auto& signs = per_arc[ai].interval_sign;
        long n = static_cast<long>(signs.size());
        int prev = 0;
        long prev_i = -1;
        for (long i = 0; i < n; ++i) {
            int cur = signs[static_cast<size_t>(i)];
            if (cur == 0) continue;
            if (prev != 0 && cur != prev) {
                double lo = eps_t + (1.0 - 2 * eps_t) * (static_cast<double>(prev_i) + 0.5) / n;
                double hi = eps_t + (1.0 - 2 * eps_t) * (static_cast<double>(i) + 0.5) / n;
                int slo = prev;
                for (int step = 0; step < 44; ++step) {
                    double mid = 0.5 * (lo + hi);
                    int sm = ratio_sign_at(ai, mid);
                    if (sm == slo || sm == 0) lo = mid;
                    else hi = mid;
                }
                critical.push_back(rej_at(ai, 0.5 * (lo + hi)));
            }
            prev = cur;
            prev_i = i;
        }
    }

    // junction passages, cyclically; evaluated at their exact points
    size_t n_arcs = g.arcs.size();
    auto last_sign = [&](size_t ai) {
        for (auto it = per_arc[ai].interval_sign.rbegin();
             it != per_arc[ai].interval_sign.rend(); ++it)
            if (*it != 0) return *it;
        return 0;
    };
    auto first_sign = [&](size_t ai) {
        for (int v : per_arc[ai].interval_sign)
            if (v != 0) return v;
        return 0;
    };
    for (size_t ai = 0; ai < n_arcs; ++ai) {
        size_t bi = (ai + 1) % n_arcs;
        int before = last_sign(ai);
        int after = first_sign(bi);
        if (before == 0 || after == 0 || before == after) continue;
        const ArcSegment& a = g.arcs[ai];
        mpq_class ysq = a.y_sq_at(a.x_end);
        if (ysq > 0) {
            BigComplex zj(BigFloat(a.x_end, prec), sqrt(BigFloat(ysq, prec)));
            critical.push_back(haupt_value(h, zj, prec).re.to_double());
        } else {
            // the junction is a cusp; take its hauptmodul value
            bool found = false;
            for (size_t ci = 0; ci < g.cusps.size(); ++ci) {
                if (g.cusps[ci].at_infinity) continue;
                if (g.cusps[ci].representative == a.x_end) {
                    critical.push_back(haupt_value_at_cusp(g, h, ci, prec).re.to_double());
                    found = true;
                    break;
                }
            }
            if (!found)
                throw std::domain_error("critical junction at an unregistered cusp of " + g.name);
        }
    }

    // count equivalence classes: equal hauptmodul value means equivalent
    double scale = 1.0;
    for (const double v : critical) scale = std::max(scale, std::abs(v));
    double tol = 1e-8 * scale;
    std::sort(critical.begin(), critical.end());
    long classes = 0;
    double last = 0;
    bool havelast = false;
    for (double v : critical) {
        if (!havelast || std::abs(v - last) > tol) {
            ++classes;
            last = v;
            havelast = true;
        }
    }
    return classes;
}

}  // namespace eiszero
