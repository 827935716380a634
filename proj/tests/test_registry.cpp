#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "eiszero/forms.hpp"
#include "eiszero/group.hpp"

using namespace eiszero;

TEST_CASE("lookup, listing, and unknown names") {
    const Registry& reg = Registry::builtin();
    CHECK(reg.names().size() == 14);
    CHECK(reg.has("SL2Z"));
    CHECK(reg.has("Gamma0_6+2"));
    CHECK(reg.has("Gamma0*_11"));
    CHECK_THROWS_AS(reg.get("Gamma0_13"), std::domain_error);

    const GroupDescriptor& sl2z = reg.get("SL2Z");
    CHECK(sl2z.width_h == 1);
    CHECK(sl2z.index_mu == 1);
    CHECK(sl2z.acceptable);
    CHECK(sl2z.arcs.size() == 1);
    CHECK(sl2z.y0_sq == mpq_class(3, 4));
    CHECK(sl2z.y1_sq == 1);

    CHECK_FALSE(reg.get("Gamma0_6+2").acceptable);
    CHECK(reg.get("Gamma0_6+2").atkin_lehner == std::vector<long>{2});
    for (const char* name : {"Gamma0_5", "Gamma0_6+2", "Gamma0_7", "Gamma0_9", "Gamma0_10+2",
                             "Gamma0_10", "Gamma0*_11", "Gamma0_12+3"})
        CHECK_FALSE(reg.get(name).acceptable);
    for (const char* name : {"SL2Z", "Gamma0_2", "Gamma0_3", "Gamma0_4", "Gamma0_6+3", "Gamma0*_4"})
        CHECK(reg.get(name).acceptable);
}

TEST_CASE("arc chains are continuous, span the strip, and mirror cleanly") {
    for (const GroupDescriptor& g : Registry::builtin().groups) {
        CAPTURE(g.name);
        REQUIRE(!g.arcs.empty());
        mpq_class half = g.width_h / 2;
        CHECK(g.arcs.front().x_begin == -half);
        CHECK(g.arcs.back().x_end == half);
        for (size_t i = 0; i + 1 < g.arcs.size(); ++i) {
            CHECK(g.arcs[i].x_end == g.arcs[i + 1].x_begin);
            // heights agree exactly at the junction
            CHECK(g.arcs[i].y_sq_at(g.arcs[i].x_end) ==
                  g.arcs[i + 1].y_sq_at(g.arcs[i + 1].x_begin));
            CHECK(g.arcs[i].y_sq_at(g.arcs[i].x_end) >= 0);
        }
        // wall heights at the two strip edges coincide (boundary gluing)
        CHECK(g.arcs.front().y_sq_at(-half) == g.arcs.back().y_sq_at(half));
        CHECK(g.arcs.front().y_sq_at(-half) == g.y0_sq);
        // y1 equals the boundary height at Re z = 0
        mpq_class y1_from_arcs(-1);
        for (const ArcSegment& a : g.arcs)
            if (a.x_begin <= 0 && a.x_end >= 0) y1_from_arcs = std::max(y1_from_arcs, a.y_sq_at(0));
        CHECK(y1_from_arcs == g.y1_sq);
        // mirror symmetry of the arc multiset
        for (const ArcSegment& a : g.arcs) {
            bool found = false;
            for (const ArcSegment& b : g.arcs)
                if (b.center == -a.center && b.radius_sq == a.radius_sq &&
                    b.x_begin == -a.x_end && b.x_end == -a.x_begin)
                    found = true;
            CHECK(found);
        }
    }
}

TEST_CASE("cusp data: infinity first, positive widths, unimodular scalings") {
    for (const GroupDescriptor& g : Registry::builtin().groups) {
        CAPTURE(g.name);
        REQUIRE(!g.cusps.empty());
        CHECK(g.cusps.front().at_infinity);
        for (const CuspData& c : g.cusps) {
            CHECK(c.width > 0);
            Surd det = c.scaling.det();
            CHECK(det.a == 1);
            CHECK(det.b == 0);
            if (!c.at_infinity) {
                mpq_class a = c.scaling.m[0][0].a, cc = c.scaling.m[1][0].a;
                CHECK(a / cc == c.representative);
            }
        }
        if (!g.atkin_lehner.empty()) {
            Surd det = g.al_matrix.det();
            CHECK(det.a == 1);
            CHECK(det.b == 0);
        }
        for (const SurdMatrix& m : g.check_generators) {
            Surd det = m.det();
            CHECK(det.a == 1);
            CHECK(det.b == 0);
        }
    }
}

TEST_CASE("elliptic points sit on or above the lower boundary") {
    for (const GroupDescriptor& g : Registry::builtin().groups) {
        CAPTURE(g.name);
        for (const EllipticPoint& e : g.elliptic) {
            CHECK(e.order >= 2);
            CHECK(e.y_sq > 0);
        }
    }
}

TEST_CASE("hauptmodul values at the two distinguished boundary points") {
    const Registry& reg = Registry::builtin();
    int prec = 128;
    for (const GroupDescriptor& g : reg.groups) {
        if (!g.a0_expected && !g.a1_expected) continue;
        CAPTURE(g.name);
        Hauptmodul h = build_hauptmodul(reg, g, 48);
        A0A1 v = compute_a0_a1(g, h, prec);
        if (g.a0_expected)
            CHECK(std::abs(v.a0.to_double() - mpq_class(*g.a0_expected).get_d()) < 1e-20);
        if (g.a1_expected)
            CHECK(std::abs(v.a1.to_double() - mpq_class(*g.a1_expected).get_d()) < 1e-20);
        CHECK(v.advisory == !g.acceptable);
    }
    const GroupDescriptor& sl2z = reg.get("SL2Z");
    Hauptmodul j = build_hauptmodul(reg, sl2z, 48);
    A0A1 v = compute_a0_a1(sl2z, j, prec);
    CHECK(v.a0.to_double() < v.a1.to_double());
}

TEST_CASE("critical-point counts and their sampling stability") {
    const Registry& reg = Registry::builtin();
    auto c_of = [&](const char* name, long samples) {
        const GroupDescriptor& g = reg.get(name);
        Hauptmodul h = build_hauptmodul(reg, g, 48);
        return compute_c(g, h, samples, 128);
    };
    CHECK(c_of("SL2Z", 2048) == 0);
    CHECK(c_of("Gamma0_3", 2048) == 1);
    CHECK(c_of("Gamma0_6+3", 2048) == 2);
    CHECK(c_of("Gamma0_2", 2048) == 0);
    CHECK(c_of("Gamma0_4", 2048) == 1);
    // doubling the sampling density leaves the counts unchanged
    CHECK(c_of("SL2Z", 4096) == 0);
    CHECK(c_of("Gamma0_3", 4096) == 1);
    CHECK(c_of("Gamma0_6+3", 4096) == 2);
}

TEST_CASE("the hauptmodul is real on the arcs of every acceptable group") {
    const Registry& reg = Registry::builtin();
    int prec = 128;
    for (const GroupDescriptor& g : reg.groups) {
        if (!g.acceptable) continue;
        CAPTURE(g.name);
        Hauptmodul h = build_hauptmodul(reg, g, 48);
        for (const ArcSegment& a : g.arcs) {
            auto [tb, te] = a.angle_range_d();
            BigFloat r = sqrt(BigFloat(a.radius_sq, prec));
            BigFloat c(a.center, prec);
            for (int i = 1; i < 40; ++i) {
                BigFloat th(tb + (te - tb) * i / 40.0, prec);
                BigComplex z(c + r * cos(th), r * sin(th));
                if (z.im.to_double() < 5e-3) continue;
                BigComplex jv = haupt_value(h, z, prec);
                CHECK(std::abs(jv.im.to_double()) < 1e-15);
            }
        }
    }
}

TEST_CASE("recipes are invariant under the stored generators") {
    const Registry& reg = Registry::builtin();
    int prec = 128;
    std::vector<std::pair<double, double>> samples = {{0.137, 0.83}, {-0.29, 1.07}, {0.41, 0.67}};
    for (const GroupDescriptor& g : reg.groups) {
        CAPTURE(g.name);
        Hauptmodul h = build_hauptmodul(reg, g, 48);
        for (const SurdMatrix& gen : g.check_generators) {
            for (auto& [x, y] : samples) {
                BigComplex z(x, y, prec);
                BigComplex jz = haupt_value(h, z, prec);
                BigComplex jgz = haupt_value(h, gen.apply(z, prec), prec);
                double scale = std::max(1.0, abs(jz).to_double());
                CHECK(abs(jz - jgz).to_double() < 1e-20 * scale);
            }
        }
    }
}

TEST_CASE("conjugation: the level-two group maps onto the starred level-four one") {
    const Registry& reg = Registry::builtin();
    GroupDescriptor conj = conjugate_group(reg.get("Gamma0_2"));
    CHECK(conj.name == "Gamma0*_4");
    const GroupDescriptor& target = reg.get("Gamma0*_4");
    REQUIRE(conj.arcs.size() == target.arcs.size());
    for (size_t i = 0; i < conj.arcs.size(); ++i) {
        CHECK(conj.arcs[i].center == target.arcs[i].center);
        CHECK(conj.arcs[i].radius_sq == target.arcs[i].radius_sq);
        CHECK(conj.arcs[i].x_begin == target.arcs[i].x_begin);
        CHECK(conj.arcs[i].x_end == target.arcs[i].x_end);
    }
    CHECK(conj.y0_sq == target.y0_sq);
    CHECK(conj.y1_sq == target.y1_sq);
    CHECK(conj.index_mu == target.index_mu);
    CHECK(conj.cusps.size() == target.cusps.size());
    for (size_t i = 0; i < conj.cusps.size(); ++i)
        CHECK(conj.cusps[i].width == target.cusps[i].width);
}

TEST_CASE("conjugation swaps the two boundary heights and preserves the rest") {
    const Registry& reg = Registry::builtin();
    for (const GroupDescriptor& g : reg.groups) {
        CAPTURE(g.name);
        GroupDescriptor conj = conjugate_group(g);
        CHECK(conj.y0_sq == g.y1_sq);
        CHECK(conj.y1_sq == g.y0_sq);
        CHECK(conj.index_mu == g.index_mu);
        std::multiset<int> before, after;
        for (const EllipticPoint& e : g.elliptic) before.insert(e.order);
        for (const EllipticPoint& e : conj.elliptic) after.insert(e.order);
        CHECK(before == after);
        // geometric involution: conjugating twice restores the arc multiset
        GroupDescriptor twice = conjugate_group(conj);
        for (const ArcSegment& a : g.arcs) {
            bool found = false;
            for (const ArcSegment& b : twice.arcs)
                if (b.center == a.center && b.radius_sq == a.radius_sq &&
                    b.x_begin == a.x_begin && b.x_end == a.x_end)
                    found = true;
            CHECK(found);
        }
    }
}

TEST_CASE("serialized registry round-trips and checksums are enforced") {
    const Registry& reg = Registry::builtin();
    std::string text = reg.to_json_text();
    Registry loaded = Registry::from_json_text(text);
    CHECK(loaded.to_json_text() == text);
    CHECK(loaded.names() == reg.names());

    size_t pos = text.find("\"index_mu\": 3");
    REQUIRE(pos != std::string::npos);
    std::string bad = text;
    bad.replace(pos, 13, "\"index_mu\": 4");
    CHECK_THROWS_AS(Registry::from_json_text(bad), std::domain_error);
}
