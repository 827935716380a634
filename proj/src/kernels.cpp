#include "eiszero/kernels.hpp"

#include <omp.h>

namespace eiszero {

std::vector<double> scan_abs_grid(const EisensteinForm& f,
                                  const std::vector<std::complex<double>>& pts) {
    std::vector<double> out(pts.size());
    long n = static_cast<long>(pts.size());
#pragma omp parallel for schedule(static)
    for (long i = 0; i < n; ++i)
        out[static_cast<size_t>(i)] = std::abs(eis_value_d(f, pts[static_cast<size_t>(i)]));
    return out;
}

std::vector<double> scan_abs_grid_serial(const EisensteinForm& f,
                                         const std::vector<std::complex<double>>& pts) {
    std::vector<double> out(pts.size());
    for (size_t i = 0; i < pts.size(); ++i) out[i] = std::abs(eis_value_d(f, pts[i]));
    return out;
}

std::vector<BigComplex> eval_many(const EisensteinForm& f, const std::vector<BigComplex>& pts,
                                  int prec) {
    std::vector<BigComplex> out(pts.size());
    long n = static_cast<long>(pts.size());
#pragma omp parallel for schedule(dynamic, 8)
    for (long i = 0; i < n; ++i)
        out[static_cast<size_t>(i)] = eis_value(f, pts[static_cast<size_t>(i)], prec);
    return out;
}

std::vector<BigComplex> eval_many_serial(const EisensteinForm& f,
                                         const std::vector<BigComplex>& pts, int prec) {
    std::vector<BigComplex> out(pts.size());
    for (size_t i = 0; i < pts.size(); ++i) out[i] = eis_value(f, pts[i], prec);
    return out;
}

std::vector<FieldSample> scan_field_grid(const EisensteinForm& f,
                                         const std::vector<std::complex<double>>& pts) {
    std::vector<FieldSample> out(pts.size());
    long n = static_cast<long>(pts.size());
#pragma omp parallel for schedule(static)
    for (long i = 0; i < n; ++i) {
        auto [v, magsum] = eis_value_cond_d(f, pts[static_cast<size_t>(i)]);
        double m = std::abs(v);
        out[static_cast<size_t>(i)] = {m, magsum / std::max(m, 1e-300)};
    }
    return out;
}

std::vector<FieldSample> rescan_field_hp(const EisensteinForm& f,
                                         const std::vector<BigComplex>& pts, int base_prec) {
    std::vector<FieldSample> out(pts.size());
    long n = static_cast<long>(pts.size());
#pragma omp parallel for schedule(dynamic, 4)
    for (long i = 0; i < n; ++i) {
        const BigComplex& z = pts[static_cast<size_t>(i)];
        double logmag = 0.0, cond = 1.0;
        for (int prec = base_prec; prec <= 8192; prec *= 2) {
            BigComplex acc(BigFloat(0.0, prec), BigFloat(0.0, prec));
            BigFloat magsum(0.0, prec);
            cx_traits<BigComplex>::ctx ctx{prec};
            for (auto& [d, r] : f.combo) {
                BigComplex dz =
                    BigComplex(BigFloat(static_cast<long>(d), prec), BigFloat(0.0, prec)) * z;
                BigComplex t = BigFloat(r, prec) * eval_e2k<BigComplex>(f.two_k, dz, ctx);
                acc += t;
                magsum += abs(t);
            }
            BigFloat a = abs(acc);
            // resolved once the sum clears the cancellation noise floor
            if (!a.is_zero() &&
                a > magsum * pow_si(BigFloat(2.0, prec), -(prec - 24))) {
                logmag = log(a).to_double();
                cond = (magsum / a).to_double();
                break;
            }
            logmag = -1e290;
            cond = 1e290;
        }
        out[static_cast<size_t>(i)] = {logmag, cond};
    }
    return out;
}

CxSeries mul_parallel(const CxSeries& a, const CxSeries& b) {
    detail::require_same_width(a.width, b.width);
    CxSeries r;
    r.width = a.width;
    r.lead = a.lead + b.lead;
    long m = std::min(a.trunc_order(), b.trunc_order());
    r.coeffs.assign(static_cast<size_t>(m) + 1, BigComplex{});
    long na = a.trunc_order();
#pragma omp parallel for schedule(dynamic, 16)
    for (long n = 0; n <= m; ++n) {
        BigComplex acc{};
        long imax = std::min(n, na);
        for (long i = 0; i <= imax; ++i)
            acc += a.coeffs[static_cast<size_t>(i)] * b.coeffs[static_cast<size_t>(n - i)];
        r.coeffs[static_cast<size_t>(n)] = acc;
    }
    r.normalize();
    return r;
}

CxSeries mul_serial(const CxSeries& a, const CxSeries& b) { return mul(a, b); }

}  // namespace eiszero
