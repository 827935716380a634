// Classical building blocks: Bernoulli numbers, divisor sums, the level-one
// Eisenstein series, the Dedekind eta product and eta quotients.

#ifndef EISZERO_SERIES_BUILDERS_HPP
#define EISZERO_SERIES_BUILDERS_HPP

#include <utility>
#include <vector>

#include "eiszero/qseries.hpp"

namespace eiszero {

mpq_class bernoulli(unsigned n);
mpz_class sigma_power(unsigned long n, unsigned long k);  // sum of d^k over d|n

// E_{2k} = 1 - (4k/B_{2k}) sum sigma_{2k-1}(n) q^n, exact rationals, to order M.
RatSeries eisenstein_level1(long two_k, long order);

// E_2 = 1 - 24 sum sigma_1(n) q^n (quasi-modular weight 2 block).
RatSeries e2_series(long order);

// eta(z) / q^{1/24} = prod (1 - q^n), via the pentagonal number theorem.
RatSeries eta_expansion(long order);

struct EtaFactor {
    long divisor;
    long exponent;
};

// prod_d eta(d z)^{r_d}, with the fractional exponent sum d*r_d/24 tracked
// separately; it must come out integral or the quotient is rejected.
RatSeries eta_quotient(const std::vector<EtaFactor>& recipe, long order);

// Ramanujan Delta = q prod (1-q^n)^24.
RatSeries delta_series(long order);

}  // namespace eiszero

#endif
