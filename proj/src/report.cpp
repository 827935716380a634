#include "eiszero/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "eiszero/forms.hpp"

namespace eiszero {

namespace {

int sig_digits(int prec) { return static_cast<int>(prec * 0.30103) + 1; }

std::string fmt(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    return buf;
}

std::string fmt_big(const BigFloat& v, int prec) {
    return v.str(static_cast<size_t>(sig_digits(prec)));
}

const char* interval_name(IntervalClass c) {
    switch (c) {
        case IntervalClass::Inside: return "interval";
        case IntervalClass::HalflineOnly: return "halfline_only";
        case IntervalClass::LowerOnly: return "lower_only";
        default: return "outside";
    }
}

const char* kind_name(const Zero& z) {
    switch (z.kind) {
        case ZeroKind::Elliptic: return "elliptic";
        case ZeroKind::Boundary: return "boundary";
        default: return "interior";
    }
}

}  // namespace

std::string csv_header() {
    return "group,weight,re_z,im_z,multiplicity,re_j,im_j,on_arc,in_interval,kind\n";
}

std::string zeros_to_csv(const std::vector<ZeroReport>& reports, int prec) {
    struct Row {
        const ZeroReport* rep;
        const Zero* z;
    };
    std::vector<Row> rows;
    for (const ZeroReport& r : reports)
        for (const Zero& z : r.zeros) rows.push_back({&r, &z});
    std::stable_sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
        if (a.rep->two_k != b.rep->two_k) return a.rep->two_k < b.rep->two_k;
        double ax = a.z->z.re.to_double(), bx = b.z->z.re.to_double();
        if (ax != bx) return ax < bx;
        return a.z->z.im.to_double() < b.z->z.im.to_double();
    });
    std::string out = csv_header();
    for (const Row& r : rows) {
        out += r.rep->group;
        out += ',';
        out += std::to_string(r.rep->two_k);
        out += ',';
        out += fmt_big(r.z->z.re, prec);
        out += ',';
        out += fmt_big(r.z->z.im, prec);
        out += ',';
        out += std::to_string(r.z->multiplicity);
        out += ',';
        out += fmt_big(r.z->j.re, prec);
        out += ',';
        out += fmt_big(r.z->j.im, prec);
        out += ',';
        out += r.z->on_arc ? "true" : "false";
        out += ',';
        out += interval_name(r.z->interval);
        out += ',';
        out += kind_name(*r.z);
        out += '\n';
    }
    return out;
}

namespace {

struct Mapper {
    double xmin, xmax, ymin, ymax;
    double px, py, w, h;
    double X(double x) const { return px + (x - xmin) / (xmax - xmin) * w; }
    double Y(double y) const { return py + h - (y - ymin) / (ymax - ymin) * h; }
};

void svg_polyline(std::string& svg, const Mapper& m, const std::vector<std::pair<double, double>>& pts,
                  const char* color) {
    if (pts.size() < 2) return;
    svg += "<polyline fill=\"none\" stroke=\"";
    svg += color;
    svg += "\" stroke-width=\"1\" points=\"";
    for (auto& [x, y] : pts) {
        svg += fmt(m.X(x), 7);
        svg += ',';
        svg += fmt(m.Y(y), 7);
        svg += ' ';
    }
    svg += "\"/>\n";
}

void svg_dot(std::string& svg, const Mapper& m, double x, double y, const char* color, double r) {
    svg += "<circle cx=\"" + fmt(m.X(x), 7) + "\" cy=\"" + fmt(m.Y(y), 7) + "\" r=\"" +
           fmt(r, 3) + "\" fill=\"" + color + "\"/>\n";
}

}  // namespace

std::string zeros_to_svg(const Registry& reg, const GroupDescriptor& g,
                         const std::vector<ZeroReport>& reports) {
    const int prec = 128;
    Hauptmodul haupt = build_hauptmodul(reg, g, 64);
    double h = mpq_class(g.width_h).get_d();

    double ytop = 1.2;
    for (const ZeroReport& r : reports)
        for (const Zero& z : r.zeros) ytop = std::max(ytop, z.z.im.to_double() + 0.15);

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"900\" height=\"460\" "
           "viewBox=\"0 0 900 460\">\n<rect width=\"900\" height=\"460\" fill=\"white\"/>\n";

    // left panel: the fundamental domain
    Mapper dm{-h / 2 - 0.05 * h, h / 2 + 0.05 * h, 0.0, ytop, 30, 30, 380, 400};
    svg_polyline(svg, dm, {{-h / 2, g.y0_d()}, {-h / 2, ytop}}, "#444444");
    svg_polyline(svg, dm, {{h / 2, g.y0_d()}, {h / 2, ytop}}, "#444444");
    std::vector<std::pair<double, double>> jcurve;
    for (const ArcSegment& a : g.arcs) {
        std::vector<std::pair<double, double>> pts;
        auto [tb, te] = a.angle_range_d();
        double c = mpq_class(a.center).get_d(), r = a.radius_d();
        int n = 96;
        for (int i = 0; i <= n; ++i) {
            double th = tb + (te - tb) * i / n;
            pts.emplace_back(c + r * std::cos(th), r * std::sin(th));
        }
        svg_polyline(svg, dm, pts, "#1f6fb2");
        // sampled hauptmodul image of the arc for the right panel
        for (int i = 1; i < n; i += 2) {
            double th = tb + (te - tb) * i / n;
            double x = c + r * std::cos(th), y = r * std::sin(th);
            if (y < 2e-3) continue;
            BigComplex j = haupt_value(haupt, BigComplex(x, y, prec), prec);
            jcurve.emplace_back(j.re.to_double(), j.im.to_double());
        }
    }
    for (const ZeroReport& r : reports)
        for (const Zero& z : r.zeros)
            svg_dot(svg, dm, z.z.re.to_double(), z.z.im.to_double(),
                    z.on_arc ? "#c23b21" : "#7a21c2", 2.4);

    // right panel: hauptmodul plane with [a0, a1] and the zero images
    double a0 = reports.empty() ? -1 : reports.front().a0;
    double a1 = reports.empty() ? 1 : reports.front().a1;
    double xmin = a0, xmax = a1, ymin = -1, ymax = 1;
    for (const ZeroReport& r : reports)
        for (const Zero& z : r.zeros) {
            xmin = std::min(xmin, z.j.re.to_double());
            xmax = std::max(xmax, z.j.re.to_double());
            ymin = std::min(ymin, z.j.im.to_double());
            ymax = std::max(ymax, z.j.im.to_double());
        }
    double marx = 0.1 * std::max(1.0, xmax - xmin), mary = 0.1 * std::max(1.0, ymax - ymin);
    Mapper jm{xmin - marx, xmax + marx, ymin - mary, ymax + mary, 470, 30, 400, 400};
    svg_polyline(svg, jm, {{xmin - marx, 0}, {xmax + marx, 0}}, "#bbbbbb");
    svg_polyline(svg, jm, {{a0, 0}, {a1, 0}}, "#2c9a3f");
    std::sort(jcurve.begin(), jcurve.end());
    for (auto& [jx, jy] : jcurve) svg_dot(svg, jm, jx, jy, "#1f6fb2", 1.2);
    for (const ZeroReport& r : reports)
        for (const Zero& z : r.zeros)
            svg_dot(svg, jm, z.j.re.to_double(), z.j.im.to_double(),
                    z.j_real ? "#c23b21" : "#7a21c2", 2.4);
    svg += "<text x=\"30\" y=\"18\" font-size=\"13\">fundamental domain: " + g.name +
           "</text>\n<text x=\"470\" y=\"18\" font-size=\"13\">hauptmodul image (interval "
           "marked)</text>\n";
    svg += "</svg>\n";
    return svg;
}

std::string verdicts_to_json(const std::vector<ZeroReport>& reports) {
    nlohmann::json root;
    root["schema_version"] = 1;
    nlohmann::json arr = nlohmann::json::array();
    for (const ZeroReport& r : reports) {
        nlohmann::json j;
        j["group"] = r.group;
        j["weight"] = r.two_k;
        j["advisory"] = r.advisory;
        j["c"] = r.c_value;
        j["s1"] = r.s1_value;
        j["deg_p"] = r.deg_p;
        j["deg_p_orbifold"] = r.deg_p_orbifold;
        j["a0"] = r.a0;
        j["a1"] = r.a1;
        j["valence_expected"] = r.valence_expected.get_str();
        j["valence_found"] = r.valence_found.get_str();
        j["off_halfline"] = r.off_halfline;
        j["off_interval"] = r.off_interval;
        j["off_lower"] = r.off_lower;
        j["m_halfline"] = r.m_halfline;
        j["m_lower"] = r.m_lower;
        j["m_halfline_with_cusps"] = r.m_halfline_with_cusps;
        j["m_lower_with_cusps"] = r.m_lower_with_cusps;
        j["verdict_halfline"] = r.verdict_halfline;
        j["verdict_interval"] = r.verdict_interval;
        j["verdict_lower"] = r.verdict_lower;
        j["zero_classes"] = r.zeros.size();
        arr.push_back(j);
    }
    root["reports"] = arr;
    return root.dump(2) + "\n";
}

std::string qexp_text(const RatSeries& s) {
    std::string out;
    for (long n = s.lead; n < s.unknown_from(); ++n) {
        std::ostringstream os;
        const mpq_class& c = s.at(n);
        os << n << '\t' << c.get_num() << '/' << c.get_den() << '\n';
        out += os.str();
    }
    return out;
}

std::string divpoly_text(const DivisorPolynomial& p, int prec) {
    std::string out = "# divisor polynomial for " + p.group + ", weight " +
                      std::to_string(p.two_k) + "\n# convention: " + p.convention + "\n";
    for (auto it = p.coeffs.rbegin(); it != p.coeffs.rend(); ++it)
        out += fmt_big(it->re, prec) + "\t" + fmt_big(it->im, prec) + "\n";
    return out;
}

std::string sweep_table_text(const std::string& group, const std::vector<SweepRow>& rows) {
    std::string out = "# sweep for " + group + "\nweight\tzero_classes\ttotal_mult\toff_arc\tmax_off_arc_dist\n";
    for (const SweepRow& r : rows) {
        out += std::to_string(r.two_k) + "\t" + std::to_string(r.total_classes) + "\t" +
               std::to_string(r.total_multiplicity) + "\t" + std::to_string(r.off_arc) + "\t" +
               fmt(r.max_off_arc_distance, 6) + "\n";
    }
    return out;
}

}  // namespace eiszero
