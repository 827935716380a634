#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <complex>
#include <numeric>

#include "eiszero/series_builders.hpp"

using namespace eiszero;

namespace {

// independent oracle: coefficient of q^n in the weight-2k series is
// -(4k / B_{2k}) sigma_{2k-1}(n), with the divisor sum done bluntly
mpq_class eis_coeff_oracle(long two_k, long n, const mpq_class& bern) {
    mpz_class sig = 0;
    for (long d = 1; d <= n; ++d) {
        if (n % d) continue;
        mpz_class p;
        mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(d),
                      static_cast<unsigned long>(two_k - 1));
        sig += p;
    }
    return mpq_class(-2 * two_k) * mpq_class(sig) / bern;
}

// brute-force truncated lattice sum for E_{2k}(z), normalized by 2*zeta(2k)
std::complex<double> lattice_sum_e2k(long two_k, std::complex<double> z, long cut) {
    std::complex<double> acc = 0.0;
    for (long m = -cut; m <= cut; ++m)
        for (long n = -cut; n <= cut; ++n) {
            if (m == 0 && n == 0) continue;
            if (std::gcd(std::abs(m), std::abs(n)) != 1) continue;  // primitive pairs
            std::complex<double> w = static_cast<double>(m) * z + static_cast<double>(n);
            acc += std::pow(w, -static_cast<double>(two_k));
        }
    return acc / 2.0;  //(m,n) and (-m,-n) coincide
}

}  // namespace

TEST_CASE("Bernoulli numbers") {
    CHECK(bernoulli(0) == 1);
    CHECK(bernoulli(1) == mpq_class(-1, 2));
    CHECK(bernoulli(2) == mpq_class(1, 6));
    CHECK(bernoulli(4) == mpq_class(-1, 30));
    CHECK(bernoulli(6) == mpq_class(1, 42));
    CHECK(bernoulli(12) == mpq_class(-691, 2730));
    CHECK(bernoulli(3) == 0);
}

TEST_CASE("weight 4 and 6 expansions against the divisor-sum oracle") {
    RatSeries e4 = eisenstein_level1(4, 16);
    CHECK(e4.at(0) == 1);
    CHECK(e4.at(1) == 240);
    CHECK(e4.at(2) == 2160);
    CHECK(e4.at(3) == 6720);
    RatSeries e6 = eisenstein_level1(6, 16);
    CHECK(e6.at(1) == -504);
    CHECK(e6.at(2) == -16632);
    for (long two_k : {4L, 6L, 8L, 10L, 14L}) {
        RatSeries e = eisenstein_level1(two_k, 12);
        mpq_class bern = bernoulli(static_cast<unsigned>(two_k));
        CHECK(e.at(0) == 1);
        for (long n = 1; n <= 12; ++n) CHECK(e.at(n) == eis_coeff_oracle(two_k, n, bern));
    }
    CHECK_THROWS_AS(eisenstein_level1(5, 4), std::domain_error);
    CHECK_THROWS_AS(eisenstein_level1(2, 4), std::domain_error);
}

TEST_CASE("integral coefficients for the one-dimensional weights") {
    for (long two_k : {4L, 6L, 8L, 10L, 14L}) {
        RatSeries e = eisenstein_level1(two_k, 40);
        for (long n = 0; n <= 40; ++n) CHECK(e.at(n).get_den() == 1);
    }
}

TEST_CASE("series value agrees with a brute-force lattice sum at a sample point") {
    // E_4 at z = 2i: the truncated primitive-pair sum converges slowly, so
    // compare loosely; this is a sanity anchor, not a precision test
    RatSeries e4 = eisenstein_level1(4, 64);
    std::complex<double> z(0.0, 2.0);
    std::complex<double> qv = std::exp(std::complex<double>(0, 2 * 3.14159265358979323846) * z);
    std::complex<double> series = 0.0;
    for (long n = 64; n >= 0; --n) series = series * qv + e4.at(n).get_d();
    std::complex<double> lattice = lattice_sum_e2k(4, z, 220);
    CHECK(std::abs(series - lattice) < 2e-3 * std::abs(series));
}

TEST_CASE("eta product via the pentagonal theorem matches the naive product") {
    RatSeries eta = eta_expansion(36);
    // naive prod_{n<=36}(1-q^n)
    RatSeries naive(mpq_class(1), 0, {mpq_class(1)});
    naive.coeffs.assign(37, mpq_class(0));
    naive.coeffs[0] = 1;
    for (long n = 1; n <= 36; ++n) {
        std::vector<mpq_class> f(37, mpq_class(0));
        f[0] = 1;
        f[static_cast<size_t>(n)] = -1;
        naive = truncate_to(mul(naive, RatSeries(mpq_class(1), 0, std::move(f))), 36);
    }
    for (long n = 0; n <= 36; ++n) CHECK(eta.at(n) == naive.at(n));
    CHECK(eta.at(0) == 1);
    CHECK(eta.at(1) == -1);
    CHECK(eta.at(2) == -1);
    CHECK(eta.at(5) == 1);
    CHECK(eta.at(7) == 1);
    CHECK(eta.at(12) == -1);
}

TEST_CASE("eta quotients: the level-two hauptmodul block and error paths") {
    RatSeries t2 = eta_quotient({{1, 24}, {2, -24}}, 8);
    CHECK(t2.lead == -1);
    CHECK(t2.at(-1) == 1);
    CHECK(t2.at(0) == -24);
    CHECK(t2.at(1) == 276);
    CHECK(t2.at(2) == -2048);
    CHECK(t2.at(3) == 11202);

    RatSeries empty = eta_quotient({}, 4);
    CHECK(empty.lead == 0);
    CHECK(empty.at(0) == 1);

    CHECK_THROWS_AS(eta_quotient({{1, 1}}, 4), std::domain_error);   // 1/24 fractional
    CHECK_THROWS_AS(eta_quotient({{0, 24}}, 4), std::domain_error);  // bad divisor
}

TEST_CASE("Ramanujan tau values from the eta power") {
    RatSeries d = delta_series(8);
    CHECK(d.lead == 1);
    CHECK(d.at(1) == 1);
    CHECK(d.at(2) == -24);
    CHECK(d.at(3) == 252);
    CHECK(d.at(4) == -1472);
    CHECK(d.at(5) == 4830);
}

TEST_CASE("E2 block") {
    RatSeries e2 = e2_series(5);
    CHECK(e2.at(0) == 1);
    CHECK(e2.at(1) == -24);
    CHECK(e2.at(2) == -72);
    CHECK(e2.at(3) == -96);
}
