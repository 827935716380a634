// Genus-zero group descriptors: cusps, fundamental-domain lower arcs,
// elliptic points, Atkin-Lehner data, hauptmodul and Eisenstein recipes.
//
// Geometry is stored exactly: arc centers and endpoint abscissas are
// rational, radii and heights are stored as rational squares, and matrices
// that need sqrt(e) entries use quadratic surd pairs. The registry ships as
// a JSON document (see data/SCHEMA.md) whose per-group checksums are
// verified at load; the built-in table is the generator for that document.

#ifndef EISZERO_GROUP_HPP
#define EISZERO_GROUP_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "eiszero/bigcomplex.hpp"
#include "eiszero/series_builders.hpp"

namespace eiszero {

// a + b*sqrt(e) with rational a, b
struct Surd {
    mpq_class a{0}, b{0};
    long e = 1;

    Surd() = default;
    Surd(mpq_class ra, mpq_class rb, long re) : a(std::move(ra)), b(std::move(rb)), e(re) {}
    static Surd rational(mpq_class r) { return Surd(std::move(r), 0, 1); }

    bool is_rational() const { return b == 0; }
    BigFloat value(int prec) const {
        BigFloat v(a, prec);
        if (b != 0) v += BigFloat(b, prec) * sqrt(BigFloat(mpq_class(e), prec));
        return v;
    }
    friend Surd operator*(const Surd& x, const Surd& y) {
        long e = x.b != 0 ? x.e : y.e;
        if (x.b != 0 && y.b != 0 && x.e != y.e)
            throw std::domain_error("Surd: incompatible radicands");
        return Surd(x.a * y.a + x.b * y.b * e, x.a * y.b + x.b * y.a, e);
    }
    friend Surd operator+(const Surd& x, const Surd& y) {
        long e = x.b != 0 ? x.e : y.e;
        if (x.b != 0 && y.b != 0 && x.e != y.e)
            throw std::domain_error("Surd: incompatible radicands");
        return Surd(x.a + y.a, x.b + y.b, e);
    }
    friend Surd operator-(const Surd& x, const Surd& y) {
        return x + Surd(-y.a, -y.b, y.e);
    }
    friend bool operator==(const Surd& x, const Surd& y) {
        return x.a == y.a && x.b == y.b && (x.b == 0 || x.e == y.e);
    }
};

struct SurdMatrix {
    std::array<std::array<Surd, 2>, 2> m;

    static SurdMatrix from_integers(long a, long b, long c, long d) {
        SurdMatrix r;
        r.m[0][0] = Surd::rational(a);
        r.m[0][1] = Surd::rational(b);
        r.m[1][0] = Surd::rational(c);
        r.m[1][1] = Surd::rational(d);
        return r;
    }
    Surd det() const { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }
    BigComplex apply(const BigComplex& z, int prec) const {
        BigComplex num = BigComplex(m[0][0].value(prec), BigFloat(0.0, prec)) * z;
        num.re += m[0][1].value(prec);
        BigComplex den = BigComplex(m[1][0].value(prec), BigFloat(0.0, prec)) * z;
        den.re += m[1][1].value(prec);
        return num / den;
    }
};

struct CuspData {
    bool at_infinity = false;
    mpq_class representative{0};  // meaningful when !at_infinity
    mpq_class width{1};
    SurdMatrix scaling;  // sends infinity to the representative; integral here
    int class_id = 0;    // group-equivalent cusps share a class id
    bool excluded = false;  // member of the {infinity, 0, +-h/2} exclusion set
};

struct ArcSegment {
    mpq_class center{0};  // on the real axis
    mpq_class radius_sq{1};
    mpq_class x_begin{0}, x_end{0};  // abscissas, traversed left to right
    bool anticlockwise = true;       // boundary orientation around F

    double radius_d() const { return std::sqrt(mpq_class(radius_sq).get_d()); }
    // heights of the endpooints and of a general abscissa on the circle
    mpq_class y_sq_at(const mpq_class& x) const {
        mpq_class dx = x - center;
        return radius_sq - dx * dx;
    }
    std::pair<double, double> angle_range_d() const {
        double r = radius_d();
        double c = mpq_class(center).get_d();
        double tb = std::acos(std::clamp((mpq_class(x_begin).get_d() - c) / r, -1.0, 1.0));
        double te = std::acos(std::clamp((mpq_class(x_end).get_d() - c) / r, -1.0, 1.0));
        return {tb, te};  // decreasing along the traversal
    }
};

struct EllipticPoint {
    mpq_class x{0};
    mpq_class y_sq{1};
    int order = 2;
};

struct HauptRecipe {
    enum class Kind { EtaQuotient, Sl2zJ, Weight2Quotient11 } kind = Kind::EtaQuotient;
    std::vector<EtaFactor> eta;
};

struct EisRecipe {
    enum class Kind { DivisorSolve, SymmetrizedSolve, RescaleOf } kind = Kind::DivisorSolve;
    long al_e = 0;        // SymmetrizedSolve
    std::string base;     // RescaleOf
    long rescale_m = 1;   // RescaleOf
};

struct GroupDescriptor {
    std::string name;
    long level = 1;
    std::vector<long> atkin_lehner;  // adjoined Hall divisors
    long index_mu = 1;               // total zero count of a weight-2k form is 2k*mu/12
    mpq_class width_h{1};
    std::vector<CuspData> cusps;  // representatives on the closure of F; [0] is infinity
    std::vector<EllipticPoint> elliptic;
    std::vector<ArcSegment> arcs;  // lower arcs, left to right
    mpq_class y0_sq{0};
    mpq_class y1_sq{0};
    bool acceptable = false;
    bool good_all_even_weights = true;
    HauptRecipe haupt;
    EisRecipe eis;
    SurdMatrix al_matrix;  // valid when atkin_lehner is nonempty
    std::array<SurdMatrix, 2> check_generators{};
    std::optional<long> c_minus_s1_expected;
    std::optional<mpq_class> a0_expected, a1_expected;

    double y0_d() const { return std::sqrt(mpq_class(y0_sq).get_d()); }
    double y1_d() const { return std::sqrt(mpq_class(y1_sq).get_d()); }
    bool good_for(long two_k) const {
        return two_k >= 4 && two_k % 2 == 0 && good_all_even_weights;
    }
    // height of the lower boundary at abscissa x (0 when in a cusp gap)
    double boundary_y(double x) const;
    bool contains(double x, double y, double slack = 1e-12) const;
};

class Registry {
public:
    // built-in table, the generator for data/groups.json
    static const Registry& builtin();
    // parse a serialized registry, verifying per-group and file checksums
    static Registry from_json_text(const std::string& text);

    const GroupDescriptor& get(const std::string& name) const;
    bool has(const std::string& name) const;
    std::vector<std::string> names() const;
    std::string to_json_text() const;

    std::vector<GroupDescriptor> groups;
};

// The conjugated group T_{h/2}^{-1} Gamma T_{h/2}: arcs translated by the
// F+/F- split, cusps translated, y0 and y1 exchanged, acceptability kept.
GroupDescriptor conjugate_group(const GroupDescriptor& g);

// euclidean distance from a point to the lower-arc system
double arc_min_distance(const GroupDescriptor& g, double x, double y);

// FNV-1a 64-bit, used for the registry checksums.
std::uint64_t fnv1a64(const std::string& bytes);

}  // namespace eiszero

#endif
