#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "eiszero/evaluator.hpp"

using namespace eiszero;

namespace {

// eta via its q-product directly, valid for decent heights
BigComplex eta_direct(const BigComplex& z, int prec, long terms) {
    BigFloat two_pi = BigFloat(2.0, prec) * const_pi(prec);
    BigComplex q = exp(BigComplex(BigFloat(0.0, prec), two_pi) * z);
    BigComplex acc(BigFloat(1.0, prec), BigFloat(0.0, prec));
    BigComplex qn(BigFloat(1.0, prec), BigFloat(0.0, prec));
    for (long n = 1; n <= terms; ++n) {
        qn = qn * q;
        acc = acc * (BigComplex(BigFloat(1.0, prec), BigFloat(0.0, prec)) - qn);
    }
    BigComplex q24 = exp(BigComplex(BigFloat(0.0, prec), const_pi(prec) / BigFloat(12.0, prec)) * z);
    return q24 * acc;
}

double cx_dist(const BigComplex& a, const BigComplex& b) { return abs(a - b).to_double(); }

}  // namespace

TEST_CASE("Dedekind sums: base cases and reciprocity") {
    CHECK(dedekind_sum(1, 1) == 0);
    CHECK(dedekind_sum(1, 2) == 0);
    CHECK(dedekind_sum(1, 3) == mpq_class(1, 18));
    CHECK(dedekind_sum(1, 5) == mpq_class(1, 5));
    for (long k = 2; k < 40; ++k)
        for (long h = 1; h < k; ++h) {
            if (std::gcd(h, k) != 1) continue;
            mpq_class lhs = dedekind_sum(h, k) + dedekind_sum(k, h);
            mpq_class rhs = mpq_class(-1, 4) +
                            (mpq_class(h, k) + mpq_class(k, h) + mpq_class(1, h * k)) / 12;
            CHECK(lhs == rhs);
        }
}

TEST_CASE("eta with multiplier matches the direct product at moderate heights") {
    int prec = 192;
    // points low enough that a reduction actually happens
    std::vector<std::pair<double, double>> pts = {
        {0.13, 0.42}, {-0.37, 0.61}, {0.49, 0.35}, {0.02, 0.18}, {-0.26, 0.77}};
    for (auto& [x, y] : pts) {
        BigComplex z(x, y, prec);
        BigComplex via_reduction = eval_eta(z, prec);
        BigComplex direct = eta_direct(z, prec, 700);
        CHECK(cx_dist(via_reduction, direct) < 1e-40);
    }
}

TEST_CASE("E4 at i is real and positive; E6 vanishes at i; E4 vanishes at the corner") {
    int prec = 128;
    cx_traits<BigComplex>::ctx ctx{prec};
    BigComplex i(0.0, 1.0, prec);
    BigComplex e4 = eval_e2k<BigComplex>(4, i, ctx);
    CHECK(e4.im.to_double() == doctest::Approx(0.0).epsilon(1e-30));
    CHECK(e4.re.to_double() > 1.0);
    BigComplex e6 = eval_e2k<BigComplex>(6, i, ctx);
    CHECK(abs(e6).to_double() < 1e-30);
    BigComplex rho(BigFloat(-0.5, prec), sqrt(BigFloat(0.75, prec)));
    CHECK(abs(eval_e2k<BigComplex>(4, rho, ctx)).to_double() < 1e-30);
}

TEST_CASE("reduction-based values agree with plain q-series Horner at mid heights") {
    int prec = 128;
    cx_traits<BigComplex>::ctx ctx{prec};
    const RatSeries& e4 = level1_series(4, 400);
    BigComplex z(0.21, 0.6, prec);
    auto [val, tail] = evaluate(e4, z, prec);
    BigComplex red = eval_e2k<BigComplex>(4, z, ctx);
    CHECK(cx_dist(val, red) < std::max(tail.to_double(), 1e-30));
}

TEST_CASE("double and high-precision evaluators agree") {
    cx_traits<std::complex<double>>::ctx dctx{};
    cx_traits<BigComplex>::ctx bctx{128};
    for (auto [x, y] : {std::pair{0.1, 0.2}, {-0.43, 0.08}, {0.31, 1.4}}) {
        std::complex<double> zd(x, y);
        BigComplex zb(x, y, 128);
        auto vd = eval_e2k<std::complex<double>>(10, zd, dctx);
        auto vb = eval_e2k<BigComplex>(10, zb, bctx);
        CHECK(std::abs(vd - vb.to_std()) < 1e-9 * std::abs(vd));
        auto [fd, dfd] = eval_e2k_deriv<std::complex<double>>(6, zd, dctx);
        auto [fb, dfb] = eval_e2k_deriv<BigComplex>(6, zb, bctx);
        CHECK(std::abs(fd - fb.to_std()) < 1e-9 * std::abs(fd));
        CHECK(std::abs(dfd - dfb.to_std()) < 1e-8 * std::abs(dfd));
    }
}

TEST_CASE("derivative matches a central difference") {
    cx_traits<BigComplex>::ctx ctx{192};
    BigComplex z(0.17, 0.9, 192);
    auto [v, dv] = eval_e2k_deriv<BigComplex>(12, z, ctx);
    double hstep = 1e-20;
    BigComplex zp(BigFloat(0.17, 192) + BigFloat(hstep, 192), BigFloat(0.9, 192));
    BigComplex zm(BigFloat(0.17, 192) - BigFloat(hstep, 192), BigFloat(0.9, 192));
    BigComplex num = (eval_e2k<BigComplex>(12, zp, ctx) - eval_e2k<BigComplex>(12, zm, ctx)) /
                     BigFloat(2 * hstep, 192);
    CHECK(cx_dist(num, dv) < 1e-12 * abs(dv).to_double());
    (void)v;
}

TEST_CASE("E2 quasi-modularity is unwound correctly") {
    int prec = 160;
    BigComplex z(0.37, 0.22, prec);
    BigComplex direct = eval_e2(z, prec);
    // compare against the plain series at a point high enough to need none
    BigComplex zs(0.37, 1.22, prec);
    BigComplex high = eval_e2(zs, prec);
    // E2(z+1) = E2(z)
    BigComplex z1(BigFloat(0.37, prec) + BigFloat(1.0, prec), BigFloat(0.22, prec));
    CHECK(cx_dist(direct, eval_e2(z1, prec)) < 1e-40);
    // E2(-1/z) = z^2 E2(z) - 6 i z / pi
    BigComplex minus_inv = BigComplex(BigFloat(-1.0, prec), BigFloat(0.0, prec)) / z;
    BigComplex lhs = eval_e2(minus_inv, prec);
    BigComplex rhs = z * z * direct -
                     BigComplex(BigFloat(0.0, prec), BigFloat(6.0, prec) / const_pi(prec)) * z;
    CHECK(cx_dist(lhs, rhs) < 1e-40 * std::max(1.0, abs(rhs).to_double()));
    (void)high;
}

TEST_CASE("series evaluate: constants, periodicity bit-for-bit, tail floor") {
    int prec = 128;
    RatSeries one(mpq_class(1), 0, {mpq_class(1)});
    auto r = evaluate(one, BigComplex(0.3, 0.9, prec), prec);
    CHECK(r.value.re.to_double() == doctest::Approx(1.0));
    CHECK(r.tail_bound.to_double() < 1e-20);

    const RatSeries& e4 = level1_series(4, 200);
    BigComplex z(0.375, 0.8, prec);
    BigComplex z_shift(BigFloat(0.375, prec) + BigFloat(1.0, prec), BigFloat(0.8, prec));
    auto a = evaluate(e4, z, prec);
    auto b = evaluate(e4, z_shift, prec);
    CHECK(a.value.re == b.value.re);
    CHECK(a.value.im == b.value.im);

    // doubling the truncation keeps the value within the larger tail bound
    RatSeries e4_short = truncate_to(e4, 60);
    auto s = evaluate(e4_short, z, prec);
    CHECK(abs(s.value - a.value).to_double() <= s.tail_bound.to_double() + 1e-40);

    CHECK_THROWS_AS(evaluate(truncate_to(e4, 8), BigComplex(0.0, 0.01, prec), prec),
                    std::domain_error);
    CHECK_THROWS_AS(evaluate(e4, BigComplex(0.0, -1.0, prec), prec), std::domain_error);
}
