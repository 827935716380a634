// Monic polynomial with roots at the hauptmodul images of the located
// zeros, and the conjugation / rescaling identity checks carried out at the
// polynomial and zero-set level.

#ifndef EISZERO_DIVISOR_POLY_HPP
#define EISZERO_DIVISOR_POLY_HPP

#include <string>
#include <vector>

#include "eiszero/zeros.hpp"

namespace eiszero {

struct DivisorPolynomial {
    std::string group;
    long two_k = 4;
    // ascending powers, monic: coeffs.back() == 1, degree = coeffs.size()-1
    std::vector<BigComplex> coeffs;
    std::vector<std::pair<BigComplex, long>> roots;
    std::string convention;
};

struct PolyConvention {
    bool include_elliptic = true;
    bool include_boundary = true;
    bool include_cusps = false;  // cusp classes are bookkept separately
    std::string tag() const;
};

// expand prod (X - j_i)^{m_i} over the selected classes at doubled precision
DivisorPolynomial from_zeros(const ZeroReport& rep, const PolyConvention& conv = {},
                             int prec = 128);

// true iff P_conj(X) agrees with (-1)^d P(-X) coefficientwise within tol;
// degree mismatch is a hard error
bool conjugation_identity_check(const DivisorPolynomial& p, const DivisorPolynomial& p_conj,
                                double tol);

// true iff the zero sets of the two reports correspond under z -> z/m up to
// the coarser group's identifications (matched through its hauptmodul)
bool rescale_identity_check(const Registry& reg, const ZeroReport& report_big,
                            const ZeroReport& report_small, long m, double tol);

// Durand-Kerner root extraction, used by the round-trip property test
std::vector<BigComplex> extract_roots(const DivisorPolynomial& p, int prec);

}  // namespace eiszero

#endif
