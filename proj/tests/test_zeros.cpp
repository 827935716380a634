#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eiszero/zeros.hpp"

using namespace eiszero;

namespace {

const ZeroReport& report_for(const char* name, long two_k, int prec = 128) {
    static std::map<std::pair<std::string, std::pair<long, int>>, ZeroReport> cache;
    auto key = std::make_pair(std::string(name), std::make_pair(two_k, prec));
    auto it = cache.find(key);
    if (it == cache.end()) {
        LocateOptions opt;
        opt.prec = prec;
        const Registry& reg = Registry::builtin();
        it = cache.emplace(key, locate_zeros(reg, reg.get(name), two_k, opt)).first;
    }
    return it->second;
}

}  // namespace

TEST_CASE("winding count: a box below the evaluation floor is rejected") {
    const Registry& reg = Registry::builtin();
    EisensteinForm f = build_eisenstein(reg, reg.get("SL2Z"), 4, 64);
    CHECK_THROWS_AS(count_zeros_in_box(f, Box{-0.1, 0.1, 1e-6, 0.2}, 96, 1e-4),
                    std::domain_error);
}

TEST_CASE("the discriminant form has no zeros in any box") {
    // independent anchor: the weight-twelve cusp form is nonvanishing on the
    // upper half plane (its whole divisor sits at the cusp), so every box
    // must come back empty; its log-derivative is the weight-two block
    ValueDeriv delta = [](const BigComplex& z, int p) {
        BigComplex d = pow_si(eval_eta(z, p), 24);
        BigFloat two_pi = BigFloat(2.0, p) * const_pi(p);
        BigComplex dlog = BigComplex(BigFloat(0.0, p), two_pi) * eval_e2(z, p);
        return std::make_pair(d, d * dlog);
    };
    CHECK(count_zeros_in_box(delta, Box{-0.62, -0.38, 0.75, 0.97}, 96) == 0);
    CHECK(count_zeros_in_box(delta, Box{-0.45, 0.45, 0.3, 1.6}, 96) == 0);
}

TEST_CASE("winding count around the order-three corner point") {
    const Registry& reg = Registry::builtin();
    EisensteinForm f = build_eisenstein(reg, reg.get("SL2Z"), 4, 64);
    // the weight-four series vanishes simply at the corner of the domain
    Box b{-0.62, -0.38, 0.75, 0.97};
    CHECK(count_zeros_in_box(f, b, 96) == 1);
    // an off-zero box counts zero
    CHECK(count_zeros_in_box(f, Box{0.05, 0.25, 1.2, 1.4}, 96) == 0);
}

TEST_CASE("the weight-four series for the full modular group: one corner class") {
    const ZeroReport& r = report_for("SL2Z", 4);
    REQUIRE(r.zeros.size() == 1);
    const Zero& z = r.zeros.front();
    CHECK(z.kind == ZeroKind::Elliptic);
    CHECK(z.elliptic_order == 3);
    CHECK(z.multiplicity == 1);
    CHECK(z.on_arc);
    CHECK(std::abs(z.j.re.to_double() + 744.0) < 1e-25);
    CHECK(z.j_real);
    CHECK(z.interval == IntervalClass::Inside);
    CHECK(r.valence_found == mpq_class(1, 3));
    CHECK(r.c_value == 0);
    CHECK(r.s1_value == 0);
    CHECK(r.verdict_halfline);
    CHECK(r.verdict_interval);
    CHECK(r.verdict_lower);
}

TEST_CASE("weight twelve: a single interior class on the arc") {
    const ZeroReport& r = report_for("SL2Z", 12);
    REQUIRE(r.zeros.size() == 1);
    const Zero& z = r.zeros.front();
    CHECK(z.on_arc);
    CHECK(z.j_real);
    CHECK(z.j.re.to_double() > -744.0);
    CHECK(z.j.re.to_double() < 984.0);
    CHECK(r.valence_found == 1);
}

TEST_CASE("valence conservation across a small matrix") {
    for (const char* name : {"SL2Z", "Gamma0_2", "Gamma0_3", "Gamma0_6+3"}) {
        for (long w : {4L, 10L, 18L}) {
            CAPTURE(name);
            CAPTURE(w);
            const ZeroReport& r = report_for(name, w);
            CHECK(r.valence_found == r.valence_expected);
        }
    }
}

TEST_CASE("on the asserted groups, arc membership implies a real image") {
    for (const char* name : {"SL2Z", "Gamma0_3"}) {
        const ZeroReport& r = report_for(name, 16);
        for (const Zero& z : r.zeros)
            if (z.on_arc) CHECK(z.j_real);
    }
}

TEST_CASE("no two classes share a hauptmodul value") {
    for (const char* name : {"SL2Z", "Gamma0_3", "Gamma0_6+3"}) {
        const ZeroReport& r = report_for(name, 18);
        for (size_t i = 0; i < r.zeros.size(); ++i)
            for (size_t j = i + 1; j < r.zeros.size(); ++j)
                CHECK(abs(r.zeros[i].j - r.zeros[j].j).to_double() > 1e-8);
    }
}

TEST_CASE("doubling the precision moves nothing and flips nothing") {
    for (const char* name : {"SL2Z", "Gamma0_3"}) {
        const ZeroReport& lo = report_for(name, 16, 128);
        const ZeroReport& hi = report_for(name, 16, 256);
        REQUIRE(lo.zeros.size() == hi.zeros.size());
        for (size_t i = 0; i < lo.zeros.size(); ++i) {
            CHECK(abs(lo.zeros[i].z - hi.zeros[i].z).to_double() < 1e-10);
            CHECK(lo.zeros[i].on_arc == hi.zeros[i].on_arc);
            CHECK(lo.zeros[i].j_real == hi.zeros[i].j_real);
            CHECK(lo.zeros[i].interval == hi.zeros[i].interval);
            CHECK(lo.zeros[i].multiplicity == hi.zeros[i].multiplicity);
        }
    }
}

TEST_CASE("classification corner cases") {
    const Registry& reg = Registry::builtin();
    const GroupDescriptor& g = reg.get("SL2Z");
    Zero far;
    far.z = BigComplex(0.0, 10.0, 128);
    far.j = BigComplex(5e8, 0.0, 128);
    classify_zero(far, g, -744, 984, 1e-6, 1e-8 * 1728);
    CHECK_FALSE(far.on_arc);
    CHECK(far.kind == ZeroKind::Interior);
    CHECK(far.interval == IntervalClass::HalflineOnly);
    CHECK(far.j_real);

    Zero below;
    below.z = BigComplex(0.2, 0.9797958971, 128);  // on the unit circle
    below.j = BigComplex(-1000.0, 0.0, 128);
    classify_zero(below, g, -744, 984, 1e-6, 1e-8 * 1728);
    CHECK(below.on_arc);
    CHECK(below.interval == IntervalClass::LowerOnly);

    Zero off;
    off.z = BigComplex(0.1, 2.0, 128);
    off.j = BigComplex(3.0, 50.0, 128);
    classify_zero(off, g, -744, 984, 1e-6, 1e-8 * 1728);
    CHECK_FALSE(off.j_real);
    CHECK(off.interval == IntervalClass::Inside);  // the enum tracks Re j only
}

TEST_CASE("verdicts are pure functions of the counts") {
    ZeroReport r;
    r.c_value = 1;
    r.s1_value = 0;
    r.deg_p = 5;
    r.deg_p_orbifold = 5;
    r.off_halfline = 1;
    r.off_lower = 0;
    r.off_interval = 2;
    r.m_halfline = 4;
    r.m_lower = 5;
    verify_theorems(r);
    CHECK(r.verdict_halfline);  // 1 <= 1 and 4 + 1 >= 5
    CHECK(r.verdict_lower);       // 0 <= 1 and 5 + 1 >= 5
    CHECK(r.verdict_interval);       // 2 <= 2
    r.off_interval = 3;
    verify_theorems(r);
    CHECK_FALSE(r.verdict_interval);
}

TEST_CASE("sweep rows collect off-arc statistics") {
    const Registry& reg = Registry::builtin();
    std::vector<SweepRow> rows = sweep(reg, reg.get("SL2Z"), {4, 16});
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].two_k == 4);
    CHECK(rows[0].off_arc == 0);
    CHECK(rows[1].off_arc == 0);
    CHECK(rows[1].total_multiplicity >= rows[0].total_multiplicity);
    CHECK_THROWS_AS(sweep(reg, reg.get("SL2Z"), {5}), std::domain_error);
}
