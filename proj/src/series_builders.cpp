#include "eiszero/series_builders.hpp"

#include <map>
#include <stdexcept>

namespace eiszero {

namespace {

// binomial-sum recurrence: sum_{j=0}^{n} C(n+1, j) B_j = 0 for n >= 1
const mpq_class& bernoulli_cached(unsigned n) {
    static std::vector<mpq_class> cache{mpq_class(1)};
    while (cache.size() <= n) {
        unsigned m = static_cast<unsigned>(cache.size());
        mpz_class binom = 1;
        mpq_class acc = 0;
        for (unsigned j = 0; j < m; ++j) {
            // binom = C(m+1, j)
            if (j > 0) {
                binom *= (m + 2 - j);
                binom /= j;
            }
            acc += mpq_class(binom) * cache[j];
        }
        mpq_class b = -acc / mpq_class(m + 1);
        b.canonicalize();
        cache.push_back(b);
    }
    return cache[n];
}

}  // namespace

mpq_class bernoulli(unsigned n) { return bernoulli_cached(n); }

mpz_class sigma_power(unsigned long n, unsigned long k) {
    if (n == 0) throw std::domain_error("sigma_power: n must be positive");
    mpz_class total = 0;
    for (unsigned long d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        mpz_class dk, ek;
        mpz_ui_pow_ui(dk.get_mpz_t(), d, k);
        total += dk;
        unsigned long e = n / d;
        if (e != d) {
            mpz_ui_pow_ui(ek.get_mpz_t(), e, k);
            total += ek;
        }
    }
    return total;
}

RatSeries eisenstein_level1(long two_k, long order) {
    if (two_k < 4 || two_k % 2 != 0)
        throw std::domain_error("eisenstein_level1: weight must be even and >= 4");
    if (order < 0) throw std::domain_error("eisenstein_level1: negative order");
    mpq_class factor = mpq_class(-2 * two_k) / bernoulli(static_cast<unsigned>(two_k));
    factor.canonicalize();
    std::vector<mpq_class> cs(static_cast<size_t>(order) + 1);
    cs[0] = 1;
    for (long n = 1; n <= order; ++n)
        cs[static_cast<size_t>(n)] =
            factor * mpq_class(sigma_power(static_cast<unsigned long>(n),
                                           static_cast<unsigned long>(two_k - 1)));
    return RatSeries(mpq_class(1), 0, std::move(cs));
}

RatSeries e2_series(long order) {
    std::vector<mpq_class> cs(static_cast<size_t>(order) + 1);
    cs[0] = 1;
    for (long n = 1; n <= order; ++n)
        cs[static_cast<size_t>(n)] = mpq_class(-24) * mpq_class(sigma_power(n, 1));
    return RatSeries(mpq_class(1), 0, std::move(cs));
}

RatSeries eta_expansion(long order) {
    std::vector<mpq_class> cs(static_cast<size_t>(order) + 1);
    cs[0] = 1;
    for (long j = 1;; ++j) {
        long p1 = j * (3 * j - 1) / 2;
        long p2 = j * (3 * j + 1) / 2;
        if (p1 > order && p2 > order) break;
        mpq_class s = (j % 2 == 0) ? 1 : -1;
        if (p1 <= order) cs[static_cast<size_t>(p1)] += s;
        if (p2 <= order) cs[static_cast<size_t>(p2)] += s;
    }
    return RatSeries(mpq_class(1), 0, std::move(cs));
}

RatSeries eta_quotient(const std::vector<EtaFactor>& recipe, long order) {
    mpq_class frac(0);
    for (const EtaFactor& f : recipe) {
        if (f.divisor <= 0) throw std::domain_error("eta_quotient: divisor must be positive");
        frac += mpq_class(f.divisor) * mpq_class(f.exponent);
    }
    frac /= 24;
    frac.canonicalize();
    if (frac.get_den() != 1)
        throw std::domain_error("eta_quotient: total exponent sum d*r/24 is not an integer");
    long q_shift = static_cast<long>(mpz_get_si(frac.get_num().get_mpz_t()));

    RatSeries acc(mpq_class(1), 0, {mpq_class(1)});
    acc.coeffs.assign(static_cast<size_t>(order) + 1, mpq_class(0));
    acc.coeffs[0] = 1;
    for (const EtaFactor& f : recipe) {
        if (f.exponent == 0) continue;
        RatSeries base = rescale(eta_expansion(order), f.divisor);
        base = truncate_to(base, order);
        acc = mul(acc, pow_int(base, f.exponent));
        acc = truncate_to(acc, order);
    }
    acc.lead += q_shift;
    return acc;
}

RatSeries delta_series(long order) {
    RatSeries p = pow_int(eta_expansion(order), 24);
    p.lead += 1;
    return p;
}

}  // namespace eiszero
