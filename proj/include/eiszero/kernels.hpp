// Data-parallel kernels with serial reference implementations. The OpenMP
// versions are the defaults; the serial twins exist so tests can assert the
// results match and the benchmark can compare them.

#ifndef EISZERO_KERNELS_HPP
#define EISZERO_KERNELS_HPP

#include <complex>
#include <vector>

#include "eiszero/forms.hpp"

namespace eiszero {

// |f| over a rectangular grid of points, row-major, double precision.
std::vector<double> scan_abs_grid(const EisensteinForm& f,
                                  const std::vector<std::complex<double>>& pts);
std::vector<double> scan_abs_grid_serial(const EisensteinForm& f,
                                         const std::vector<std::complex<double>>& pts);

// |f| plus the cancellation condition of the combo at each point
struct FieldSample {
    double mag;
    double cond;
};
std::vector<FieldSample> scan_field_grid(const EisensteinForm& f,
                                         const std::vector<std::complex<double>>& pts);
// log|f| and the condition recomputed at adaptive high precision for badly
// conditioned points (mag holds log|f| here)
std::vector<FieldSample> rescan_field_hp(const EisensteinForm& f,
                                         const std::vector<BigComplex>& pts, int base_prec);

// batch high-precision evaluation
std::vector<BigComplex> eval_many(const EisensteinForm& f, const std::vector<BigComplex>& pts,
                                  int prec);
std::vector<BigComplex> eval_many_serial(const EisensteinForm& f,
                                         const std::vector<BigComplex>& pts, int prec);

// complex-coefficient Cauchy product (the exact-rational one stays serial:
// GMP allocation dominates there)
CxSeries mul_parallel(const CxSeries& a, const CxSeries& b);
CxSeries mul_serial(const CxSeries& a, const CxSeries& b);

}  // namespace eiszero

#endif
