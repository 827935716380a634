// Hand-audited geometry for the supported genus-zero groups.
//
// Fundamental domains are Ford domains inside the strip |Re z| <= h/2: the
// lower boundary is the upper envelope of the isometric circles of the group
// (and, for extended groups, of the Atkin-Lehner coset). Arc junctions,
// elliptic points, cusp widths and the check values below were derived by
// hand and are re-verified by the test suite (arc continuity, j real on arcs
// for acceptable groups, recipe invariance under the stored generators,
// valence conservation for every located zero set).

#include "eiszero/group.hpp"

namespace eiszero {

namespace {

mpq_class Q(long n, long d = 1) { return mpq_class(n, d); }

ArcSegment arc(mpq_class center, mpq_class radius_sq, mpq_class xb, mpq_class xe) {
    ArcSegment a;
    a.center = std::move(center);
    a.radius_sq = std::move(radius_sq);
    a.x_begin = std::move(xb);
    a.x_end = std::move(xe);
    return a;
}

CuspData cusp_inf() {
    CuspData c;
    c.at_infinity = true;
    c.width = 1;
    c.scaling = SurdMatrix::from_integers(1, 0, 0, 1);
    c.class_id = 0;
    c.excluded = true;
    return c;
}

CuspData cusp_fin(long num, long den, mpq_class width, long a, long b, long c2, long d,
                  int class_id, bool excluded) {
    CuspData c;
    c.at_infinity = false;
    c.representative = Q(num, den);
    c.width = std::move(width);
    c.scaling = SurdMatrix::from_integers(a, b, c2, d);
    c.class_id = class_id;
    c.excluded = excluded;
    return c;
}

EllipticPoint ell(mpq_class x, mpq_class y_sq, int order) {
    EllipticPoint e;
    e.x = std::move(x);
    e.y_sq = std::move(y_sq);
    e.order = order;
    return e;
}

SurdMatrix surd_matrix(Surd a, Surd b, Surd c, Surd d) {
    SurdMatrix m;
    m.m[0][0] = std::move(a);
    m.m[0][1] = std::move(b);
    m.m[1][0] = std::move(c);
    m.m[1][1] = std::move(d);
    return m;
}

SurdMatrix translate_T() { return SurdMatrix::from_integers(1, 1, 0, 1); }
SurdMatrix lower_parabolic(long n) { return SurdMatrix::from_integers(1, 0, n, 1); }

GroupDescriptor make_sl2z() {
    GroupDescriptor g;
    g.name = "SL2Z";
    g.level = 1;
    g.index_mu = 1;
    g.cusps = {cusp_inf()};
    g.arcs = {arc(0, 1, Q(-1, 2), Q(1, 2))};
    g.elliptic = {ell(0, 1, 2), ell(Q(-1, 2), Q(3, 4), 3)};
    g.y0_sq = Q(3, 4);
    g.y1_sq = 1;
    g.acceptable = true;
    g.haupt.kind = HauptRecipe::Kind::Sl2zJ;
    g.eis.kind = EisRecipe::Kind::DivisorSolve;
    g.check_generators = {translate_T(), SurdMatrix::from_integers(0, -1, 1, 0)};
    g.c_minus_s1_expected = 0;
    g.a0_expected = Q(-744);
    g.a1_expected = Q(984);
    return g;
}

GroupDescriptor make_gamma0_2() {
    GroupDescriptor g;
    g.name = "Gamma0_2";
    g.level = 2;
    g.index_mu = 3;
    g.cusps = {cusp_inf(), cusp_fin(0, 1, 2, 0, -1, 1, 0, 1, true)};
    g.arcs = {arc(Q(-1, 2), Q(1, 4), Q(-1, 2), 0), arc(Q(1, 2), Q(1, 4), 0, Q(1, 2))};
    g.elliptic = {ell(Q(-1, 2), Q(1, 4), 2)};
    g.y0_sq = Q(1, 4);
    g.y1_sq = 0;
    g.acceptable = true;
    g.haupt.eta = {{1, 24}, {2, -24}};
    g.check_generators = {translate_T(), lower_parabolic(2)};
    g.c_minus_s1_expected = 0;
    g.a0_expected = Q(-40);
    g.a1_expected = Q(24);
    return g;
}

GroupDescriptor make_gamma0_3() {
    GroupDescriptor g;
    g.name = "Gamma0_3";
    g.level = 3;
    g.index_mu = 4;
    g.cusps = {cusp_inf(), cusp_fin(0, 1, 3, 0, -1, 1, 0, 1, true)};
    g.arcs = {arc(Q(-1, 3), Q(1, 9), Q(-1, 2), 0), arc(Q(1, 3), Q(1, 9), 0, Q(1, 2))};
    g.elliptic = {ell(Q(-1, 2), Q(1, 12), 3)};
    g.y0_sq = Q(1, 12);
    g.y1_sq = 0;
    g.acceptable = true;
    g.haupt.eta = {{1, 12}, {3, -12}};
    g.check_generators = {translate_T(), lower_parabolic(3)};
    g.c_minus_s1_expected = 1;
    g.a0_expected = Q(-15);
    g.a1_expected = Q(12);
    return g;
}

GroupDescriptor make_gamma0_4() {
    GroupDescriptor g;
    g.name = "Gamma0_4";
    g.level = 4;
    g.index_mu = 6;
    g.cusps = {cusp_inf(), cusp_fin(0, 1, 4, 0, -1, 1, 0, 1, true),
               cusp_fin(-1, 2, 1, -1, 0, 2, -1, 2, true),
               cusp_fin(1, 2, 1, 1, 0, 2, 1, 2, true)};
    g.arcs = {arc(Q(-1, 4), Q(1, 16), Q(-1, 2), 0), arc(Q(1, 4), Q(1, 16), 0, Q(1, 2))};
    g.y0_sq = 0;
    g.y1_sq = 0;
    g.acceptable = true;
    g.haupt.eta = {{1, 8}, {4, -8}};
    g.check_generators = {translate_T(), lower_parabolic(4)};
    g.a1_expected = Q(8);
    return g;
}

GroupDescriptor make_gamma0_5() {
    GroupDescriptor g;
    g.name = "Gamma0_5";
    g.level = 5;
    g.index_mu = 6;
    g.cusps = {cusp_inf(), cusp_fin(0, 1, 5, 0, -1, 1, 0, 1, true)};
    g.arcs = {arc(Q(-2, 5), Q(1, 25), Q(-1, 2), Q(-3, 10)),
              arc(Q(-1, 5), Q(1, 25), Q(-3, 10), 0),
              arc(Q(1, 5), Q(1, 25), 0, Q(3, 10)),
              arc(Q(2, 5), Q(1, 25), Q(3, 10), Q(1, 2))};
    g.elliptic = {ell(Q(2, 5), Q(1, 25), 2), ell(Q(-2, 5), Q(1, 25), 2)};
    g.y0_sq = Q(3, 100);
    g.y1_sq = 0;
    g.acceptable = false;
    g.haupt.eta = {{1, 6}, {5, -6}};
    g.check_generators = {translate_T(), lower_parabolic(5)};
    g.a1_expected = Q(6);
    return g;
}

GroupDescriptor make_gamma0_6_plus_2() {
    GroupDescriptor g;
    g.name = "Gamma0_6+2";
    g.level = 6;
    g.atkin_lehner = {2};
    g.index_mu = 6;
    g.cusps = {cusp_inf(), cusp_fin(0, 1, 6, 0, -1, 1, 0, 1, true)};
    g.arcs = {arc(Q(-1, 3), Q(1, 18), Q(-1, 2), Q(-1, 6)),
              arc(Q(-1, 6), Q(1, 36), Q(-1, 6), 0),
              arc(Q(1, 6), Q(1, 36), 0, Q(1, 6)),
              arc(Q(1, 3), Q(1, 18), Q(1, 6), Q(1, 2))};
    g.elliptic = {ell(Q(-1, 3), Q(1, 18), 2), ell(Q(1, 3), Q(1, 18), 2)};
    g.y0_sq = Q(1, 36);
    g.y1_sq = 0;
    g.acceptable = false;
    g.haupt.eta = {{1, 4}, {2, 4}, {3, -4}, {6, -4}};
    g.eis.kind = EisRecipe::Kind::SymmetrizedSolve;
    g.eis.al_e = 2;
    // the W_{6,2} with sqrt(2) entries
    g.al_matrix = surd_matrix(Surd(0, -1, 2), Surd(0, Q(-1, 2), 2), Surd(0, 3, 2), Surd(0, 1, 2));
    g.check_generators = {translate_T(), g.al_matrix};
    return g;
}

GroupDescriptor make_gamma0_6_plus_3() {
    GroupDescriptor g;
    g.name = "Gamma0_6+3";
    g.level = 6;
    g.atkin_lehner = {3};
    g.index_mu = 6;
    g.cusps = {cusp_inf(), cusp_fin(0, 1, 6, 0, -1, 1, 0, 1, true)};
    g.arcs = {arc(Q(-1, 2), Q(1, 12), Q(-1, 2), Q(-1, 4)),
              arc(Q(-1, 6), Q(1, 36), Q(-1, 4), 0),
              arc(Q(1, 6), Q(1, 36), 0, Q(1, 4)),
              arc(Q(1, 2), Q(1, 12), Q(1, 4), Q(1, 2))};
    g.elliptic = {ell(Q(-1, 2), Q(1, 12), 2), ell(Q(-1, 4), Q(1, 48), 2), ell(Q(1, 4), Q(1, 48), 2)};
    g.y0_sq = Q(1, 12);
    g.y1_sq = 0;
    g.acceptable = true;
    g.haupt.eta = {{1, 6}, {3, 6}, {2, -6}, {6, -6}};
    g.eis.kind = EisRecipe::Kind::SymmetrizedSolve;
    g.eis.al_e = 3;
    g.al_matrix = surd_matrix(Surd(0, 1, 3), Surd(0, Q(1, 3), 3), Surd(0, 2, 3), Surd(0, 1, 3));
    g.check_generators = {translate_T(), g.al_matrix};
    g.c_minus_s1_expected = 2;
    return g;
}

GroupDescriptor make_gamma0_7() {
    GroupDescriptor g;
    g.name = "Gamma0_7";
    g.level = 7;
    g.index_mu = 8;
    g.cusps = {cusp_inf(), cusp_fin(0, 1, 7, 0, -1, 1, 0, 1, true)};
    g.arcs = {arc(Q(-3, 7), Q(1, 49), Q(-1, 2), Q(-5, 14)),
              arc(Q(-2, 7), Q(1, 49), Q(-5, 14), Q(-3, 14)),
              arc(Q(-1, 7), Q(1, 49), Q(-3, 14), 0),
              arc(Q(1, 7), Q(1, 49), 0, Q(3, 14)),
              arc(Q(2, 7), Q(1, 49), Q(3, 14), Q(5, 14)),
              arc(Q(3, 7), Q(1, 49), Q(5, 14), Q(1, 2))};
    g.elliptic = {ell(Q(5, 14), Q(3, 196), 3), ell(Q(-5, 14), Q(3, 196), 3)};
    g.y0_sq = Q(3, 196);
    g.y1_sq = 0;
    g.acceptable = false;
    g.haupt.eta = {{1, 4}, {7, -4}};
    g.check_generators = {translate_T(), lower_parabolic(7)};
    g.a1_expected = Q(4);
    return g;
}

GroupDescriptor make_gamma0_9() {
    GroupDescriptor g;
    g.name = "Gamma0_9";
    g.level = 9;
    g.index_mu = 12;
    g.cusps = {cusp_inf(), cusp_fin(0, 1, 9, 0, -1, 1, 0, 1, true),
               cusp_fin(1, 3, 1, 1, 0, 3, 1, 2, false),
               cusp_fin(-1, 3, 1, -1, 0, 3, -1, 3, false)};
    g.arcs = {arc(Q(-4, 9), Q(1, 81), Q(-1, 2), Q(-1, 3)),
              arc(Q(-2, 9), Q(1, 81), Q(-1, 3), Q(-1, 6)),
              arc(Q(-1, 9), Q(1, 81), Q(-1, 6), 0),
              arc(Q(1, 9), Q(1, 81), 0, Q(1, 6)),
              arc(Q(2, 9), Q(1, 81), Q(1, 6), Q(1, 3)),
              arc(Q(4, 9), Q(1, 81), Q(1, 3), Q(1, 2))};
    g.y0_sq = Q(1, 108);
    g.y1_sq = 0;
    g.acceptable = false;
    g.haupt.eta = {{1, 3}, {9, -3}};
    g.eis.kind = EisRecipe::Kind::RescaleOf;
    g.eis.base = "Gamma0_3";
    g.eis.rescale_m = 3;
    g.check_generators = {translate_T(), lower_parabolic(9)};
    g.a1_expected = Q(3);
    return g;
}

GroupDescriptor make_gamma0_10() {
    GroupDescriptor g;
    g.name = "Gamma0_10";
    g.level = 10;
    g.index_mu = 18;
    g.cusps = {cusp_inf(),
               cusp_fin(0, 1, 10, 0, -1, 1, 0, 1, true),
               cusp_fin(1, 5, 2, 1, 0, 5, 1, 2, false),
               cusp_fin(2, 5, 2, 2, 1, 5, 3, 2, false),
               cusp_fin(-1, 5, 2, -1, 0, 5, -1, 2, false),
               cusp_fin(-2, 5, 2, -2, 1, 5, -3, 2, false),
               cusp_fin(-1, 2, 5, -1, 0, 2, -1, 3, true),
               cusp_fin(1, 2, 5, 1, 0, 2, 1, 3, true)};
    g.arcs = {arc(Q(-9, 20), Q(1, 400), Q(-1, 2), Q(-2, 5)),
              arc(Q(-3, 10), Q(1, 100), Q(-2, 5), Q(-1, 5)),
              arc(Q(-1, 10), Q(1, 100), Q(-1, 5), 0),
              arc(Q(1, 10), Q(1, 100), 0, Q(1, 5)),
              arc(Q(3, 10), Q(1, 100), Q(1, 5), Q(2, 5)),
              arc(Q(9, 20), Q(1, 400), Q(2, 5), Q(1, 2))};
    g.elliptic = {ell(Q(3, 10), Q(1, 100), 2), ell(Q(-3, 10), Q(1, 100), 2)};
    g.y0_sq = 0;
    g.y1_sq = 0;
    g.acceptable = false;
    g.haupt.eta = {{2, 1}, {5, 5}, {1, -1}, {10, -5}};
    g.check_generators = {translate_T(), lower_parabolic(10)};
    return g;
}

GroupDescriptor make_gamma0_10_plus_2() {
    GroupDescriptor g;
    g.name = "Gamma0_10+2";
    g.level = 10;
    g.atkin_lehner = {2};
    g.index_mu = 9;
    g.cusps = {cusp_inf(), cusp_fin(0, 1, 10, 0, -1, 1, 0, 1, true)};
    g.arcs = {arc(Q(-2, 5), Q(1, 50), Q(-1, 2), Q(-3, 10)),
              arc(Q(-1, 5), Q(1, 50), Q(-3, 10), Q(-1, 10)),
              arc(Q(-1, 10), Q(1, 100), Q(-1, 10), 0),
              arc(Q(1, 10), Q(1, 100), 0, Q(1, 10)),
              arc(Q(1, 5), Q(1, 50), Q(1, 10), Q(3, 10)),
              arc(Q(2, 5), Q(1, 50), Q(3, 10), Q(1, 2))};
    // the coset of the involution contains order-four rotations about the
    // disc -4 points, so the stabilizers double relative to the plain group
    g.elliptic = {ell(Q(3, 10), Q(1, 100), 4), ell(Q(-3, 10), Q(1, 100), 4)};
    g.y0_sq = Q(1, 100);
    g.y1_sq = 0;
    g.acceptable = false;
    g.haupt.eta = {{1, 2}, {2, 2}, {5, -2}, {10, -2}};
    g.eis.kind = EisRecipe::Kind::SymmetrizedSolve;
    g.eis.al_e = 2;
    g.al_matrix = surd_matrix(Surd(0, 1, 2), Surd(0, Q(1, 2), 2), Surd(0, 5, 2), Surd(0, 3, 2));
    g.check_generators = {translate_T(), g.al_matrix};
    return g;
}

GroupDescriptor make_gamma0_star_11() {
    GroupDescriptor g;
    g.name = "Gamma0*_11";
    g.level = 11;
    g.atkin_lehner = {11};
    g.index_mu = 6;
    g.cusps = {cusp_inf()};
    g.arcs = {arc(Q(-5, 11), Q(1, 121), Q(-1, 2), Q(-9, 22)),
              arc(Q(-4, 11), Q(1, 121), Q(-9, 22), Q(-7, 22)),
              arc(Q(-3, 11), Q(1, 121), Q(-7, 22), Q(-19, 66)),
              arc(0, Q(1, 11), Q(-19, 66), Q(19, 66)),
              arc(Q(3, 11), Q(1, 121), Q(19, 66), Q(7, 22)),
              arc(Q(4, 11), Q(1, 121), Q(7, 22), Q(9, 22)),
              arc(Q(5, 11), Q(1, 121), Q(9, 22), Q(1, 2))};
    g.elliptic = {ell(0, Q(1, 11), 2), ell(Q(1, 2), Q(1, 44), 2), ell(Q(-1, 2), Q(1, 44), 2),
                  ell(Q(1, 3), Q(1, 99), 2), ell(Q(1, 4), Q(1, 176), 2)};
    g.y0_sq = Q(3, 484);
    g.y1_sq = Q(1, 11);
    g.acceptable = false;
    g.haupt.kind = HauptRecipe::Kind::Weight2Quotient11;
    g.eis.kind = EisRecipe::Kind::SymmetrizedSolve;
    g.eis.al_e = 11;
    g.al_matrix = surd_matrix(Surd(0, 0, 11), Surd(0, Q(-1, 11), 11), Surd(0, 1, 11), Surd(0, 0, 11));
    g.check_generators = {translate_T(), g.al_matrix};
    return g;
}

GroupDescriptor make_gamma0_12_plus_3() {
    GroupDescriptor g;
    g.name = "Gamma0_12+3";
    g.level = 12;
    g.atkin_lehner = {3};
    g.index_mu = 12;
    g.cusps = {cusp_inf(), cusp_fin(0, 1, 12, 0, -1, 1, 0, 1, true),
               cusp_fin(-1, 2, 3, -1, 0, 2, -1, 2, true),
               cusp_fin(1, 2, 3, 1, 0, 2, 1, 2, true)};
    g.arcs = {arc(Q(-5, 12), Q(1, 144), Q(-1, 2), Q(-3, 8)),
              arc(Q(-1, 4), Q(1, 48), Q(-3, 8), Q(-1, 8)),
              arc(Q(-1, 12), Q(1, 144), Q(-1, 8), 0),
              arc(Q(1, 12), Q(1, 144), 0, Q(1, 8)),
              arc(Q(1, 4), Q(1, 48), Q(1, 8), Q(3, 8)),
              arc(Q(5, 12), Q(1, 144), Q(3, 8), Q(1, 2))};
    g.elliptic = {ell(Q(1, 4), Q(1, 48), 2), ell(Q(-1, 4), Q(1, 48), 2)};
    g.y0_sq = 0;
    g.y1_sq = 0;
    g.acceptable = false;
    g.haupt.eta = {{1, 2}, {3, 2}, {4, -2}, {12, -2}};
    g.eis.kind = EisRecipe::Kind::RescaleOf;
    g.eis.base = "Gamma0_6+3";
    g.eis.rescale_m = 2;
    g.al_matrix = surd_matrix(Surd(0, 1, 3), Surd(0, Q(1, 3), 3), Surd(0, 8, 3), Surd(0, 3, 3));
    g.check_generators = {translate_T(), g.al_matrix};
    return g;
}

GroupDescriptor make_gamma0_star_4() {
    GroupDescriptor g;
    g.name = "Gamma0*_4";
    g.level = 4;
    g.atkin_lehner = {4};
    g.index_mu = 3;
    g.cusps = {cusp_inf(), cusp_fin(-1, 2, Q(1, 2), -1, 0, 2, -1, 1, true),
               cusp_fin(1, 2, Q(1, 2), 1, 0, 2, 1, 1, true)};
    g.arcs = {arc(0, Q(1, 4), Q(-1, 2), Q(1, 2))};
    g.elliptic = {ell(0, Q(1, 4), 2)};
    g.y0_sq = 0;
    g.y1_sq = Q(1, 4);
    g.acceptable = true;
    g.haupt.eta = {{1, -24}, {2, 48}, {4, -24}};
    g.eis.kind = EisRecipe::Kind::SymmetrizedSolve;
    g.eis.al_e = 4;
    g.al_matrix = surd_matrix(Surd(0, 0, 1), Surd(Q(-1, 2), 0, 1), Surd(2, 0, 1), Surd(0, 0, 1));
    g.check_generators = {translate_T(), g.al_matrix};
    return g;
}

}  // namespace

const Registry& Registry::builtin() {
    static const Registry reg = [] {
        Registry r;
        r.groups = {make_sl2z(),          make_gamma0_2(),        make_gamma0_3(),
                    make_gamma0_4(),      make_gamma0_5(),        make_gamma0_6_plus_2(),
                    make_gamma0_6_plus_3(), make_gamma0_7(),      make_gamma0_9(),
                    make_gamma0_10(),     make_gamma0_10_plus_2(), make_gamma0_star_11(),
                    make_gamma0_12_plus_3(), make_gamma0_star_4()};
        return r;
    }();
    return reg;
}

}  // namespace eiszero
