// Compares the OpenMP kernels against their serial reference twins.

#include <chrono>
#include <cstdio>

#include "eiszero/kernels.hpp"

using namespace eiszero;
using clock_t_ = std::chrono::steady_clock;

namespace {

double seconds_since(clock_t_::time_point t0) {
    return std::chrono::duration<double>(clock_t_::now() - t0).count();
}

}  // namespace

int main() {
    const Registry& reg = Registry::builtin();
    EisensteinForm f = build_eisenstein(reg, reg.get("Gamma0_6+3"), 16, 128);

    std::vector<std::complex<double>> dpts;
    for (int i = 0; i < 20000; ++i)
        dpts.emplace_back(-0.5 + 1e-3 * (i % 1000), 0.15 + 1e-3 * (i / 1000));

    std::printf("%-28s %10s %10s %8s\n", "kernel", "parallel", "serial", "speedup");

    auto t0 = clock_t_::now();
    auto par = scan_abs_grid(f, dpts);
    double tp = seconds_since(t0);
    t0 = clock_t_::now();
    auto ser = scan_abs_grid_serial(f, dpts);
    double ts = seconds_since(t0);
    std::printf("%-28s %9.3fs %9.3fs %7.2fx\n", "scan_abs_grid (20k pts)", tp, ts, ts / tp);
    if (par != ser) {
        std::printf("MISMATCH between parallel and serial scan\n");
        return 1;
    }

    std::vector<BigComplex> bpts;
    for (int i = 0; i < 1200; ++i) bpts.emplace_back(-0.45 + 7e-4 * i, 0.3 + 1e-4 * (i % 50), 192);
    t0 = clock_t_::now();
    auto bp = eval_many(f, bpts, 192);
    tp = seconds_since(t0);
    t0 = clock_t_::now();
    auto bs = eval_many_serial(f, bpts, 192);
    ts = seconds_since(t0);
    std::printf("%-28s %9.3fs %9.3fs %7.2fx\n", "eval_many (1.2k pts, 192b)", tp, ts, ts / tp);
    for (size_t i = 0; i < bp.size(); ++i)
        if (!(bp[i].re == bs[i].re && bp[i].im == bs[i].im)) {
            std::printf("MISMATCH between parallel and serial eval\n");
            return 1;
        }

    CxSeries a = to_complex(eisenstein_level1(4, 1200), 128);
    CxSeries b = to_complex(eisenstein_level1(6, 1200), 128);
    t0 = clock_t_::now();
    CxSeries mp = mul_parallel(a, b);
    tp = seconds_since(t0);
    t0 = clock_t_::now();
    CxSeries ms = mul_serial(a, b);
    ts = seconds_since(t0);
    std::printf("%-28s %9.3fs %9.3fs %7.2fx\n", "series product (order 1200)", tp, ts, ts / tp);
    for (size_t i = 0; i < mp.coeffs.size(); ++i)
        if (!(mp.coeffs[i].re == ms.coeffs[i].re && mp.coeffs[i].im == ms.coeffs[i].im)) {
            std::printf("MISMATCH between parallel and serial product\n");
            return 1;
        }
    std::printf("all kernels agree with their serial references\n");
    return 0;
}
