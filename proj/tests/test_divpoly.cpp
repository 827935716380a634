#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "eiszero/divisor_poly.hpp"

using namespace eiszero;

namespace {

ZeroReport run(const char* name, long two_k) {
    const Registry& reg = Registry::builtin();
    return locate_zeros(reg, reg.get(name), two_k);
}

}  // namespace

TEST_CASE("weight four: the polynomial is X + 744") {
    ZeroReport r = run("SL2Z", 4);
    DivisorPolynomial p = from_zeros(r);
    REQUIRE(p.coeffs.size() == 2);
    CHECK(abs(p.coeffs[1] - BigComplex(1.0, 0.0, 128)).to_double() < 1e-30);
    CHECK(std::abs(p.coeffs[0].re.to_double() - 744.0) < 1e-20);
    CHECK(std::abs(p.coeffs[0].im.to_double()) < 1e-20);
    CHECK(p.convention.find("winding") != std::string::npos);
}

TEST_CASE("an empty zero list gives the constant polynomial one") {
    ZeroReport r;
    r.group = "SL2Z";
    r.two_k = 4;
    DivisorPolynomial p = from_zeros(r);
    REQUIRE(p.coeffs.size() == 1);
    CHECK(abs(p.coeffs[0] - BigComplex(1.0, 0.0, 128)).to_double() < 1e-30);
}

TEST_CASE("weight twelve coefficients are real to twenty digits") {
    DivisorPolynomial p = from_zeros(run("SL2Z", 12));
    for (const BigComplex& c : p.coeffs) CHECK(std::abs(c.im.to_double()) < 1e-20);
}

TEST_CASE("conjugation identity between the level-two pair") {
    for (long two_k : {4L, 6L, 8L}) {
        CAPTURE(two_k);
        DivisorPolynomial p = from_zeros(run("Gamma0_2", two_k));
        DivisorPolynomial pc = from_zeros(run("Gamma0*_4", two_k));
        CHECK(conjugation_identity_check(p, pc, 1e-8));
        CHECK(conjugation_identity_check(pc, p, 1e-8));  // symmetric
    }
}

TEST_CASE("a perturbed root breaks the identity; degree mismatch is hard") {
    DivisorPolynomial p = from_zeros(run("Gamma0_2", 8));
    DivisorPolynomial pc = from_zeros(run("Gamma0*_4", 8));
    REQUIRE(!pc.roots.empty());
    DivisorPolynomial bad = pc;
    // rebuild with one root nudged by ten tolerances
    bad.roots.front().first.re += BigFloat(1e-7, 128);
    bad.coeffs = {BigComplex(1.0, 0.0, 256)};
    for (auto& [root, mult] : bad.roots)
        for (long i = 0; i < mult; ++i) {
            std::vector<BigComplex> next(bad.coeffs.size() + 1, BigComplex(0.0, 0.0, 256));
            for (size_t k = 0; k < bad.coeffs.size(); ++k) {
                next[k + 1] += bad.coeffs[k];
                next[k] -= root * bad.coeffs[k];
            }
            bad.coeffs = std::move(next);
        }
    CHECK_FALSE(conjugation_identity_check(p, bad, 1e-8));

    DivisorPolynomial small = from_zeros(run("Gamma0_2", 4));
    CHECK_THROWS_AS(conjugation_identity_check(small, pc, 1e-8), std::domain_error);
}

TEST_CASE("rescaling: level nine from level three, trivial case, plus-three pair") {
    const Registry& reg = Registry::builtin();
    ZeroReport small3 = run("Gamma0_3", 6);
    ZeroReport big9 = run("Gamma0_9", 6);
    CHECK(rescale_identity_check(reg, big9, small3, 3, 1e-7));
    // all classes of the level-nine report land on its lower arcs
    for (const Zero& z : big9.zeros) CHECK(z.on_arc);

    CHECK(rescale_identity_check(reg, big9, big9, 1, 1e-7));

    ZeroReport small63 = run("Gamma0_6+3", 6);
    ZeroReport big123 = run("Gamma0_12+3", 6);
    CHECK(rescale_identity_check(reg, big123, small63, 2, 1e-7));
    long off = 0;
    for (const Zero& z : big123.zeros)
        if (!z.on_arc) off += z.multiplicity;
    CHECK(off <= 4);

    // mismatched pair: the zero sets cannot correspond
    CHECK_FALSE(rescale_identity_check(reg, big9, run("Gamma0_2", 6), 3, 1e-7));
}

TEST_CASE("root extraction round-trips the multiset") {
    ZeroReport r = run("Gamma0_3", 16);
    DivisorPolynomial p = from_zeros(r);
    std::vector<BigComplex> roots = extract_roots(p, 128);
    REQUIRE(static_cast<long>(roots.size()) == static_cast<long>(p.coeffs.size()) - 1);
    // every extracted root matches a recorded one
    for (const BigComplex& x : roots) {
        double best = 1e300;
        for (auto& [root, mult] : p.roots)
            best = std::min(best, abs(x - root).to_double());
        CHECK(best < 1e-8);
    }
}
