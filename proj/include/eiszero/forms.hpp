// Eisenstein series attached to a group at the infinity cusp (constant term
// one there, vanishing at every other cusp) and canonical hauptmoduls
// (1/q_h + 0 + O(q_h)), plus cusp vanishing orders, the odd-order cusp count
// s1, the half-period conjugation maps, and the computed group quantities
// a0, a1 and c that depend on evaluation.

#ifndef EISZERO_FORMS_HPP
#define EISZERO_FORMS_HPP

#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "eiszero/evaluator.hpp"
#include "eiszero/group.hpp"

namespace eiszero {

struct EisensteinForm {
    std::string group;
    long two_k = 4;
    // E = sum over (d, r): r * E_{2k}(d z); always rational coefficients here
    std::vector<std::pair<long, mpq_class>> combo;
    RatSeries qexp;
    std::vector<long> cusp_orders;  // parallel to the descriptor's cusp list
};

struct Hauptmodul {
    std::string group;
    HauptRecipe recipe;
    mpq_class const_shift{0};  // canonical = raw recipe value - const_shift
    RatSeries qexp;            // lead -1, unit leading coefficient, constant 0
};

// Solve the cusp-constant system (with Atkin-Lehner symmetrization or the
// rescale recipe where the registry says so) and compute cusp orders.
EisensteinForm build_eisenstein(const Registry& reg, const GroupDescriptor& g, long two_k,
                                long order);

// combo only, no q-expansion (cheap; used by evaluators and recursion)
std::vector<std::pair<long, mpq_class>> eisenstein_combo(const Registry& reg,
                                                         const GroupDescriptor& g, long two_k);

RatSeries combo_qexp(const std::vector<std::pair<long, mpq_class>>& combo, long two_k,
                     long order);

struct CuspExpansion {
    CxSeries series;
    bool numeric = true;  // exact only at the infinity cusp
    long leading_order = 0;
};

// Expansion of the form at a cusp in the local width-normalized parameter.
CuspExpansion cusp_expansion(const GroupDescriptor& g, const EisensteinForm& f,
                             size_t cusp_index, long order, int prec);

// vanishing order at a cusp, slope-fit at three heights and cross-checked
long cusp_vanishing_order(const GroupDescriptor& g, const EisensteinForm& f, size_t cusp_index);

// number of cusp classes outside the exclusion set with odd vanishing order
long compute_s1(const GroupDescriptor& g, const EisensteinForm& f);

Hauptmodul build_hauptmodul(const Registry& reg, const GroupDescriptor& g, long order);

// f(z) -> f(z + h/2) on expansions
RatSeries conjugate_form(const RatSeries& f);
// canonical hauptmodul of the conjugated group: a_n -> (-1)^{n-1} a_n
Hauptmodul conjugate_hauptmodul(const Hauptmodul& j);

// ---- pointwise evaluation ----

BigComplex eis_value(const EisensteinForm& f, const BigComplex& z, int prec);
std::pair<BigComplex, BigComplex> eis_value_deriv(const EisensteinForm& f, const BigComplex& z,
                                                  int prec);
std::complex<double> eis_value_d(const EisensteinForm& f, const std::complex<double>& z);
// value plus the sum of term magnitudes: their ratio measures how much
// cancellation the divisor combo suffered (the condition of the sum)
std::pair<std::complex<double>, double> eis_value_cond_d(const EisensteinForm& f,
                                                         const std::complex<double>& z);
std::pair<std::complex<double>, std::complex<double>> eis_value_deriv_d(
    const EisensteinForm& f, const std::complex<double>& z);

BigComplex haupt_value(const Hauptmodul& h, const BigComplex& z, int prec);

// hauptmodul value at a cusp of the group (pullback along the scaling matrix)
BigComplex haupt_value_at_cusp(const GroupDescriptor& g, const Hauptmodul& h, size_t cusp_index,
                               int prec);

struct A0A1 {
    BigFloat a0, a1;
    bool advisory = false;  // set for groups without an acceptable domain
};

A0A1 compute_a0_a1(const GroupDescriptor& g, const Hauptmodul& h, int prec);

// equivalence classes of critical points on the lower arcs where
// y'(t) / (Re j(z_A(t)))' changes sign; cusp and corner classes counted once
long compute_c(const GroupDescriptor& g, const Hauptmodul& h, long samples_per_arc = 2048,
               int prec = 128);

}  // namespace eiszero

#endif
