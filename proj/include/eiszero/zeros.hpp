// Locating the zeros of an Eisenstein series in the fundamental domain:
// double-precision grid scouting + Newton polish at working precision,
// winding-number multiplicities, equivalence-class folding by hauptmodul
// value, exact valence-conservation accounting, and the three localization
// verdicts per weight.

#ifndef EISZERO_ZEROS_HPP
#define EISZERO_ZEROS_HPP

#include <functional>
#include <string>
#include <vector>

#include "eiszero/forms.hpp"

namespace eiszero {

enum class IntervalClass { Inside, HalflineOnly, LowerOnly, Outside };
enum class ZeroKind { Interior, Elliptic, Boundary };

struct Zero {
    BigComplex z;
    long multiplicity = 1;
    BigComplex j;
    bool on_arc = false;
    bool j_real = false;
    IntervalClass interval = IntervalClass::Outside;
    ZeroKind kind = ZeroKind::Interior;
    int elliptic_order = 1;
    double arc_distance = 0.0;
    double eval_condition = 1.0;  // cancellation severity of the combo there
};

struct ZeroReport {
    std::string group;
    long two_k = 4;
    std::vector<Zero> zeros;  // one entry per equivalence class
    mpq_class valence_expected{0};
    mpq_class valence_found{0};
    std::vector<long> cusp_orders;
    long c_value = 0;
    long s1_value = 0;
    double a0 = 0.0, a1 = 0.0;
    double delta_geom = 0.0, delta_imag = 0.0;
    // deg_p counts winding multiplicities (the default divisor-polynomial
    // convention); deg_p_orbifold floors elliptic multiplicities by the
    // stabilizer order, which is the polynomial the localization statements
    // are about. The m and off counts follow the orbifold convention.
    long deg_p = 0;
    long deg_p_orbifold = 0;
    long off_halfline = 0, off_interval = 0, off_lower = 0;
    long m_halfline = 0, m_lower = 0;
    long m_halfline_with_cusps = 0, m_lower_with_cusps = 0;
    bool verdict_halfline = false, verdict_interval = false, verdict_lower = false;
    bool advisory = false;  // verdicts reported but not asserted
};

struct Box {
    double x0, x1, y0, y1;
};

// value and derivative of any holomorphic function on the upper half plane
using ValueDeriv =
    std::function<std::pair<BigComplex, BigComplex>(const BigComplex&, int)>;

// winding number of f around the box boundary, adaptive trapezoid of f'/f;
// boxes whose boundary comes too close to a zero are jittered a few times
long count_zeros_in_box(const ValueDeriv& f, Box box, int prec, double y_floor = 1e-4);
long count_zeros_in_box(const EisensteinForm& f, Box box, int prec, double y_floor = 1e-4);

struct LocateOptions {
    int prec = 128;
    bool verbose = false;
    long trunc_override = 0;  // expansion order used for the ceiling bound
    long grid_per_unit = 0;      // 0: choose from the weight and index
    double dedup_j_tol = 1e-8;
    double geom_tol_factor = 1e-6;
    double imag_tol_factor = 1e-8;
};

ZeroReport locate_zeros(const Registry& reg, const GroupDescriptor& g, long two_k,
                        LocateOptions opt = {});

// classification of one zero against the group geometry and [a0, a1]
void classify_zero(Zero& z, const GroupDescriptor& g, double a0, double a1, double delta_geom,
                   double delta_imag);

// fills verdicts from the counts already in the report
void verify_theorems(ZeroReport& r);

struct SweepRow {
    long two_k = 0;
    long total_classes = 0;
    long total_multiplicity = 0;
    long off_arc = 0;
    double max_off_arc_distance = 0.0;
};

std::vector<SweepRow> sweep(const Registry& reg, const GroupDescriptor& g,
                            const std::vector<long>& weights, LocateOptions opt = {});

}  // namespace eiszero

#endif
