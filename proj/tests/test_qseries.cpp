#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eiszero/qseries.hpp"

using namespace eiszero;

namespace {

RatSeries from_coeffs(long lead, std::vector<long> cs) {
    std::vector<mpq_class> qs;
    for (long c : cs) qs.emplace_back(c);
    return RatSeries(mpq_class(1), lead, std::move(qs));
}

bool same_coeffs(const RatSeries& a, const RatSeries& b) {
    long lo = std::min(a.lead, b.lead);
    long hi = std::min(a.unknown_from(), b.unknown_from());
    for (long n = lo; n < hi; ++n)
        if (a.at(n) != b.at(n)) return false;
    return true;
}

// deterministic LCG for the property runs
struct Rng {
    unsigned long long s = 0x9e3779b97f4a7c15ULL;
    long next(long lo, long hi) {
        s = s * 6364136223846793005ULL + 1442695040888963407ULL;
        return lo + static_cast<long>((s >> 33) % static_cast<unsigned long long>(hi - lo + 1));
    }
};

RatSeries random_series(Rng& rng, long max_terms = 9) {
    long lead = rng.next(-4, 3);
    long n = rng.next(1, max_terms);
    std::vector<mpq_class> cs;
    for (long i = 0; i < n; ++i) {
        cs.emplace_back(mpq_class(rng.next(-40, 40), rng.next(1, 12)));
        cs.back().canonicalize();
    }
    if (cs[0] == 0) cs[0] = 1;
    return RatSeries(mpq_class(1), lead, std::move(cs));
}

}  // namespace

TEST_CASE("addition handles cancellation, identity, and coefficientwise sums") {
    RatSeries f = from_coeffs(-1, {1, -24});
    RatSeries g = from_coeffs(0, {24, 0});
    RatSeries sum = add(f, g);
    CHECK(sum.lead == -1);
    CHECK(sum.at(-1) == 1);
    CHECK(sum.at(0) == 0);

    RatSeries zero = from_coeffs(0, {0, 0});
    CHECK(same_coeffs(add(f, zero), f));

    RatSeries p = from_coeffs(0, {1, 240});
    RatSeries q = from_coeffs(0, {1, -24});
    RatSeries s = add(p, q);
    CHECK(s.at(0) == 2);
    CHECK(s.at(1) == 216);
}

TEST_CASE("addition rejects width mismatches") {
    RatSeries f = from_coeffs(0, {1});
    RatSeries g = from_coeffs(0, {1});
    g.width = 2;
    CHECK_THROWS_AS(add(f, g), std::domain_error);
    CHECK_THROWS_AS(mul(f, g), std::domain_error);
}

TEST_CASE("multiplication, reciprocal and powers") {
    RatSeries qinv = from_coeffs(-1, {1, 0, 0});
    RatSeries q = from_coeffs(1, {1, 0, 0});
    RatSeries one = mul(qinv, q);
    CHECK(one.lead == 0);
    CHECK(one.at(0) == 1);

    // geometric series
    RatSeries f = from_coeffs(0, {1, -1, 0, 0, 0, 0});
    RatSeries r = reciprocal(f);
    for (long n = 0; n <= r.trunc_order(); ++n) CHECK(r.at(n) == 1);
    RatSeries check = mul(f, r);
    CHECK(check.at(0) == 1);
    for (long n = 1; n <= check.trunc_order(); ++n) CHECK(check.at(n) == 0);

    RatSeries b = from_coeffs(0, {1, 1, 0});
    RatSeries sq = pow_int(b, 2);
    CHECK(sq.at(0) == 1);
    CHECK(sq.at(1) == 2);
    CHECK(sq.at(2) == 1);

    // negative powers go through the reciprocal
    RatSeries neg2 = pow_int(b, -2);
    RatSeries id = mul(neg2, sq);
    CHECK(id.at(0) == 1);
    CHECK(id.at(1) == 0);

    CHECK_THROWS_AS(reciprocal(from_coeffs(0, {0, 0, 0})), std::domain_error);
}

TEST_CASE("multiplication is commutative and associative on retained coefficients") {
    Rng rng;
    rng.s = 0xfeedfacecafebeefULL;
    for (int trial = 0; trial < 400; ++trial) {
        RatSeries a = random_series(rng);
        RatSeries b = random_series(rng);
        RatSeries c = random_series(rng);
        CHECK(same_coeffs(mul(a, b), mul(b, a)));
        CHECK(same_coeffs(mul(mul(a, b), c), mul(a, mul(b, c))));
    }
}

TEST_CASE("truncation bookkeeping follows the min rule") {
    RatSeries f = from_coeffs(0, {1, 2, 3, 4, 5});   // known through exponent 4
    RatSeries g = from_coeffs(-1, {1, 1, 1});        // known through exponent 1
    RatSeries s = add(f, g);
    CHECK(s.unknown_from() == 2);
    RatSeries p = mul(f, g);
    CHECK(p.trunc_order() == 2);
    CHECK(p.lead == -1);
}

TEST_CASE("half-period shift: parity rule, involution, homomorphism") {
    RatSeries f = from_coeffs(-1, {1, -24, 276});
    RatSeries sh = half_period_shift(f);
    CHECK(sh.at(-1) == -1);
    CHECK(sh.at(0) == -24);
    CHECK(sh.at(1) == -276);

    RatSeries c = from_coeffs(0, {7});
    CHECK(same_coeffs(half_period_shift(c), c));

    Rng rng;
    for (int trial = 0; trial < 10000; ++trial) {
        RatSeries a = random_series(rng);
        RatSeries b = random_series(rng);
        CHECK(same_coeffs(half_period_shift(half_period_shift(a)), a));
        RatSeries lhs = half_period_shift(mul(a, b));
        RatSeries rhs = mul(half_period_shift(a), half_period_shift(b));
        CHECK(same_coeffs(lhs, rhs));
        RatSeries lin = half_period_shift(add(a, b));
        RatSeries rin = add(half_period_shift(a), half_period_shift(b));
        CHECK(same_coeffs(lin, rin));
    }
}

TEST_CASE("rescale maps exponents, respects identity and composition") {
    RatSeries f = from_coeffs(0, {1, 1});
    RatSeries r3 = rescale(f, 3);
    CHECK(r3.at(0) == 1);
    CHECK(r3.at(3) == 1);
    CHECK(r3.at(1) == 0);
    CHECK(r3.at(2) == 0);

    CHECK(same_coeffs(rescale(f, 1), f));

    RatSeries qi = from_coeffs(-1, {1});
    RatSeries qi2 = rescale(qi, 2);
    CHECK(qi2.lead == -2);
    CHECK(qi2.at(-2) == 1);

    Rng rng;
    for (int trial = 0; trial < 200; ++trial) {
        RatSeries a = random_series(rng);
        CHECK(same_coeffs(rescale(rescale(a, 2), 3), rescale(a, 6)));
    }

    CHECK_THROWS_AS(rescale(f, 2, mpq_class(3)), std::domain_error);
}

TEST_CASE("explicit one-way conversion to the complex domain") {
    RatSeries f = from_coeffs(-1, {1, 0, 196884});
    CxSeries c = to_complex(f, 128);
    CHECK(c.lead == -1);
    CHECK(c.coeffs[2].re.to_double() == doctest::Approx(196884.0));
}
