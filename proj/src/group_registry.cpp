#include "eiszero/group.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace eiszero {

using nlohmann::json;

std::uint64_t fnv1a64(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

double GroupDescriptor::boundary_y(double x) const {
    double best = 0.0;
    for (const ArcSegment& a : arcs) {
        double xb = mpq_class(a.x_begin).get_d(), xe = mpq_class(a.x_end).get_d();
        if (x < xb - 1e-15 || x > xe + 1e-15) continue;
        double dx = x - mpq_class(a.center).get_d();
        double y2 = mpq_class(a.radius_sq).get_d() - dx * dx;
        if (y2 > 0) best = std::max(best, std::sqrt(y2));
    }
    return best;
}

bool GroupDescriptor::contains(double x, double y, double slack) const {
    double half = mpq_class(width_h).get_d() / 2;
    if (x < -half - slack || x > half + slack) return false;
    return y >= boundary_y(x) - slack;
}

double arc_min_distance(const GroupDescriptor& g, double x, double y) {
    double best = 1e300;
    for (const ArcSegment& a : g.arcs) {
        double cx = mpq_class(a.center).get_d();
        double r = a.radius_d();
        double xb = mpq_class(a.x_begin).get_d(), xe = mpq_class(a.x_end).get_d();
        double d;
        if (x >= xb && x <= xe) {
            d = std::abs(std::hypot(x - cx, y) - r);
        } else {
            double yb = std::sqrt(std::max(0.0, r * r - (xb - cx) * (xb - cx)));
            double ye = std::sqrt(std::max(0.0, r * r - (xe - cx) * (xe - cx)));
            d = std::min(std::hypot(x - xb, y - yb), std::hypot(x - xe, y - ye));
        }
        best = std::min(best, d);
    }
    return best;
}

const GroupDescriptor& Registry::get(const std::string& name) const {
    for (const GroupDescriptor& g : groups)
        if (g.name == name) return g;
    throw std::domain_error("unknown group: " + name);
}

bool Registry::has(const std::string& name) const {
    for (const GroupDescriptor& g : groups)
        if (g.name == name) return true;
    return false;
}

std::vector<std::string> Registry::names() const {
    std::vector<std::string> out;
    for (const GroupDescriptor& g : groups) out.push_back(g.name);
    return out;
}

// ---------------- serialization ----------------

namespace {

std::string q_str(const mpq_class& q) {
    std::ostringstream os;
    os << q;
    return os.str();
}

mpq_class q_parse(const std::string& s) {
    mpq_class q(s);
    q.canonicalize();
    return q;
}

json surd_to_json(const Surd& s) {
    return json{{"a", q_str(s.a)}, {"b", q_str(s.b)}, {"e", s.e}};
}

Surd surd_from_json(const json& j) {
    return Surd(q_parse(j.at("a").get<std::string>()), q_parse(j.at("b").get<std::string>()),
                j.at("e").get<long>());
}

json matrix_to_json(const SurdMatrix& m) {
    return json{surd_to_json(m.m[0][0]), surd_to_json(m.m[0][1]), surd_to_json(m.m[1][0]),
                surd_to_json(m.m[1][1])};
}

SurdMatrix matrix_from_json(const json& j) {
    SurdMatrix m;
    m.m[0][0] = surd_from_json(j.at(0));
    m.m[0][1] = surd_from_json(j.at(1));
    m.m[1][0] = surd_from_json(j.at(2));
    m.m[1][1] = surd_from_json(j.at(3));
    return m;
}

json group_to_json(const GroupDescriptor& g) {
    json j;
    j["name"] = g.name;
    j["level"] = g.level;
    j["atkin_lehner"] = g.atkin_lehner;
    j["index_mu"] = g.index_mu;
    j["width_h"] = q_str(g.width_h);
    j["acceptable"] = g.acceptable;
    j["good_all_even_weights"] = g.good_all_even_weights;
    j["y0_sq"] = q_str(g.y0_sq);
    j["y1_sq"] = q_str(g.y1_sq);
    json cusps = json::array();
    for (const CuspData& c : g.cusps) {
        cusps.push_back(json{{"at_infinity", c.at_infinity},
                             {"representative", q_str(c.representative)},
                             {"width", q_str(c.width)},
                             {"scaling", matrix_to_json(c.scaling)},
                             {"class_id", c.class_id},
                             {"excluded", c.excluded}});
    }
    j["cusps"] = cusps;
    json ells = json::array();
    for (const EllipticPoint& e : g.elliptic)
        ells.push_back(json{{"x", q_str(e.x)}, {"y_sq", q_str(e.y_sq)}, {"order", e.order}});
    j["elliptic"] = ells;
    json arcs = json::array();
    for (const ArcSegment& a : g.arcs)
        arcs.push_back(json{{"center", q_str(a.center)},
                            {"radius_sq", q_str(a.radius_sq)},
                            {"x_begin", q_str(a.x_begin)},
                            {"x_end", q_str(a.x_end)},
                            {"anticlockwise", a.anticlockwise}});
    j["arcs"] = arcs;
    json haupt;
    switch (g.haupt.kind) {
        case HauptRecipe::Kind::EtaQuotient: haupt["kind"] = "eta_quotient"; break;
        case HauptRecipe::Kind::Sl2zJ: haupt["kind"] = "sl2z_j"; break;
        case HauptRecipe::Kind::Weight2Quotient11: haupt["kind"] = "weight2_quotient_11"; break;
    }
    json eta = json::array();
    for (const EtaFactor& f : g.haupt.eta) eta.push_back(json{{"d", f.divisor}, {"r", f.exponent}});
    haupt["eta"] = eta;
    j["hauptmodul_recipe"] = haupt;
    json eis;
    switch (g.eis.kind) {
        case EisRecipe::Kind::DivisorSolve: eis["kind"] = "divisor_solve"; break;
        case EisRecipe::Kind::SymmetrizedSolve: eis["kind"] = "symmetrized_solve"; break;
        case EisRecipe::Kind::RescaleOf: eis["kind"] = "rescale_of"; break;
    }
    eis["al_e"] = g.eis.al_e;
    eis["base"] = g.eis.base;
    eis["rescale_m"] = g.eis.rescale_m;
    j["eisenstein_recipe"] = eis;
    j["al_matrix"] = matrix_to_json(g.al_matrix);
    j["check_generators"] = json{matrix_to_json(g.check_generators[0]),
                                 matrix_to_json(g.check_generators[1])};
    if (g.c_minus_s1_expected) j["c_minus_s1_expected"] = *g.c_minus_s1_expected;
    if (g.a0_expected) j["a0_expected"] = q_str(*g.a0_expected);
    if (g.a1_expected) j["a1_expected"] = q_str(*g.a1_expected);
    return j;
}

GroupDescriptor group_from_json(const json& j) {
    GroupDescriptor g;
    g.name = j.at("name").get<std::string>();
    g.level = j.at("level").get<long>();
    g.atkin_lehner = j.at("atkin_lehner").get<std::vector<long>>();
    g.index_mu = j.at("index_mu").get<long>();
    g.width_h = q_parse(j.at("width_h").get<std::string>());
    g.acceptable = j.at("acceptable").get<bool>();
    g.good_all_even_weights = j.at("good_all_even_weights").get<bool>();
    g.y0_sq = q_parse(j.at("y0_sq").get<std::string>());
    g.y1_sq = q_parse(j.at("y1_sq").get<std::string>());
    for (const json& c : j.at("cusps")) {
        CuspData cd;
        cd.at_infinity = c.at("at_infinity").get<bool>();
        cd.representative = q_parse(c.at("representative").get<std::string>());
        cd.width = q_parse(c.at("width").get<std::string>());
        cd.scaling = matrix_from_json(c.at("scaling"));
        cd.class_id = c.at("class_id").get<int>();
        cd.excluded = c.at("excluded").get<bool>();
        g.cusps.push_back(cd);
    }
    for (const json& e : j.at("elliptic")) {
        EllipticPoint ep;
        ep.x = q_parse(e.at("x").get<std::string>());
        ep.y_sq = q_parse(e.at("y_sq").get<std::string>());
        ep.order = e.at("order").get<int>();
        g.elliptic.push_back(ep);
    }
    for (const json& a : j.at("arcs")) {
        ArcSegment as;
        as.center = q_parse(a.at("center").get<std::string>());
        as.radius_sq = q_parse(a.at("radius_sq").get<std::string>());
        as.x_begin = q_parse(a.at("x_begin").get<std::string>());
        as.x_end = q_parse(a.at("x_end").get<std::string>());
        as.anticlockwise = a.at("anticlockwise").get<bool>();
        g.arcs.push_back(as);
    }
    const json& h = j.at("hauptmodul_recipe");
    std::string hk = h.at("kind").get<std::string>();
    if (hk == "eta_quotient") g.haupt.kind = HauptRecipe::Kind::EtaQuotient;
    else if (hk == "sl2z_j") g.haupt.kind = HauptRecipe::Kind::Sl2zJ;
    else if (hk == "weight2_quotient_11") g.haupt.kind = HauptRecipe::Kind::Weight2Quotient11;
    else throw std::domain_error("registry: unknown hauptmodul recipe kind " + hk);
    for (const json& f : h.at("eta"))
        g.haupt.eta.push_back({f.at("d").get<long>(), f.at("r").get<long>()});
    const json& e = j.at("eisenstein_recipe");
    std::string ek = e.at("kind").get<std::string>();
    if (ek == "divisor_solve") g.eis.kind = EisRecipe::Kind::DivisorSolve;
    else if (ek == "symmetrized_solve") g.eis.kind = EisRecipe::Kind::SymmetrizedSolve;
    else if (ek == "rescale_of") g.eis.kind = EisRecipe::Kind::RescaleOf;
    else throw std::domain_error("registry: unknown eisenstein recipe kind " + ek);
    g.eis.al_e = e.at("al_e").get<long>();
    g.eis.base = e.at("base").get<std::string>();
    g.eis.rescale_m = e.at("rescale_m").get<long>();
    g.al_matrix = matrix_from_json(j.at("al_matrix"));
    g.check_generators[0] = matrix_from_json(j.at("check_generators").at(0));
    g.check_generators[1] = matrix_from_json(j.at("check_generators").at(1));
    if (j.contains("c_minus_s1_expected"))
        g.c_minus_s1_expected = j.at("c_minus_s1_expected").get<long>();
    if (j.contains("a0_expected")) g.a0_expected = q_parse(j.at("a0_expected").get<std::string>());
    if (j.contains("a1_expected")) g.a1_expected = q_parse(j.at("a1_expected").get<std::string>());
    return g;
}

std::string hex64(std::uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return std::string(buf);
}

}  // namespace

std::string Registry::to_json_text() const {
    json root;
    root["schema_version"] = 1;
    json gs = json::array();
    std::string all;
    for (const GroupDescriptor& g : groups) {
        json jg = group_to_json(g);
        std::string canon = jg.dump();
        std::string sum = hex64(fnv1a64(canon));
        all += sum;
        jg["checksum_fnv64"] = sum;
        gs.push_back(jg);
    }
    root["groups"] = gs;
    root["file_checksum_fnv64"] = hex64(fnv1a64(all));
    return root.dump(2) + "\n";
}

Registry Registry::from_json_text(const std::string& text) {
    json root = json::parse(text);
    if (root.at("schema_version").get<int>() != 1)
        throw std::domain_error("registry: unsupported schema version");
    Registry r;
    std::string all;
    for (const json& jg_in : root.at("groups")) {
        json jg = jg_in;
        std::string expect = jg.at("checksum_fnv64").get<std::string>();
        jg.erase("checksum_fnv64");
        std::string sum = hex64(fnv1a64(jg.dump()));
        if (sum != expect)
            throw std::domain_error("registry: checksum mismatch for group " +
                                    jg.at("name").get<std::string>());
        all += sum;
        r.groups.push_back(group_from_json(jg));
    }
    if (hex64(fnv1a64(all)) != root.at("file_checksum_fnv64").get<std::string>())
        throw std::domain_error("registry: file checksum mismatch");
    return r;
}

// ---------------- conjugation ----------------

namespace {

// integral scaling matrix for a rational cusp a/c, gcd(a,c)=1, c>0
SurdMatrix integral_scaling(const mpq_class& rep) {
    mpz_class a = rep.get_num(), c = rep.get_den();
    mpz_class gg, x, y;
    mpz_gcdext(gg.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a.get_mpz_t(), c.get_mpz_t());
    // a*x + c*y = 1  ->  matrix (a, -y; c, x) has det a*x + c*y = 1
    SurdMatrix m;
    m.m[0][0] = Surd::rational(mpq_class(a));
    m.m[0][1] = Surd::rational(mpq_class(-y));
    m.m[1][0] = Surd::rational(mpq_class(c));
    m.m[1][1] = Surd::rational(mpq_class(x));
    return m;
}

mpq_class translated_width(const mpq_class& width, const mpq_class& rep, const mpq_class& rep2) {
    mpq_class c1(rep.get_den()), c2(rep2.get_den());
    return width * (c1 * c1) / (c2 * c2);
}

}  // namespace

GroupDescriptor conjugate_group(const GroupDescriptor& g) {
    static const std::map<std::string, std::string> known = {
        {"Gamma0_2", "Gamma0*_4"}, {"Gamma0*_4", "Gamma0_2"}};
    mpq_class half = g.width_h / 2;

    GroupDescriptor r;
    auto it = known.find(g.name);
    r.name = it != known.end() ? it->second : g.name + "_conj";
    r.level = g.level;
    r.atkin_lehner = g.atkin_lehner;
    r.index_mu = g.index_mu;
    r.width_h = g.width_h;
    r.acceptable = g.acceptable;
    r.good_all_even_weights = g.good_all_even_weights;
    r.y0_sq = g.y1_sq;
    r.y1_sq = g.y0_sq;
    r.c_minus_s1_expected = g.c_minus_s1_expected;
    if (g.a1_expected) r.a0_expected = -*g.a1_expected;
    if (g.a0_expected) r.a1_expected = -*g.a0_expected;

    // arcs: F- + h/2 and F+ - h/2, splitting any arc that straddles 0
    std::vector<ArcSegment> left, right;
    for (const ArcSegment& a : g.arcs) {
        auto push = [&](mpq_class xb, mpq_class xe, bool to_left) {
            if (xb >= xe) return;
            ArcSegment s = a;
            mpq_class shift = to_left ? -half : half;
            s.center += shift;
            s.x_begin = xb + shift;
            s.x_end = xe + shift;
            (to_left ? left : right).push_back(s);
        };
        if (a.x_end <= 0) {
            push(a.x_begin, a.x_end, false);
        } else if (a.x_begin >= 0) {
            push(a.x_begin, a.x_end, true);
        } else {
            push(a.x_begin, mpq_class(0), false);
            push(mpq_class(0), a.x_end, true);
        }
    }
    r.arcs = left;
    r.arcs.insert(r.arcs.end(), right.begin(), right.end());
    std::sort(r.arcs.begin(), r.arcs.end(),
              [](const ArcSegment& p, const ArcSegment& q) { return p.x_begin < q.x_begin; });
    // coalesce neighbouring pieces of one circle (an arc split at Re z = 0
    // comes back together after the translation)
    std::vector<ArcSegment> merged;
    for (const ArcSegment& a : r.arcs) {
        if (!merged.empty() && merged.back().center == a.center &&
            merged.back().radius_sq == a.radius_sq && merged.back().x_end == a.x_begin) {
            merged.back().x_end = a.x_end;
        } else {
            merged.push_back(a);
        }
    }
    r.arcs = std::move(merged);

    for (const CuspData& c : g.cusps) {
        if (c.at_infinity) {
            r.cusps.push_back(c);
            continue;
        }
        auto add_at = [&](mpq_class rep2) {
            CuspData nc = c;
            nc.representative = rep2;
            nc.width = translated_width(c.width, c.representative, rep2);
            nc.scaling = integral_scaling(rep2);
            nc.excluded = (rep2 == 0 || rep2 == half || rep2 == -half);
            r.cusps.push_back(nc);
        };
        if (c.representative == 0) {
            add_at(-half);
            add_at(half);
        } else if (c.representative > 0) {
            add_at(c.representative - half);
        } else {
            add_at(c.representative + half);
        }
    }

    for (const EllipticPoint& e : g.elliptic) {
        EllipticPoint ne = e;
        ne.x = e.x > 0 ? mpq_class(e.x - half) : mpq_class(e.x + half);
        if (e.x == 0) ne.x = -half;
        r.elliptic.push_back(ne);
    }

    if (it != known.end()) {
        const GroupDescriptor& known_g = Registry::builtin().get(it->second);
        r.haupt = known_g.haupt;
        r.eis = known_g.eis;
        r.al_matrix = known_g.al_matrix;
        r.check_generators = known_g.check_generators;
        r.level = known_g.level;
        r.atkin_lehner = known_g.atkin_lehner;
    } else {
        r.haupt = g.haupt;
        r.eis = g.eis;
        r.al_matrix = g.al_matrix;
        r.check_generators = g.check_generators;
    }
    return r;
}

}  // namespace eiszero
