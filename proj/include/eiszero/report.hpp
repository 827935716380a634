// Output surfaces: the fixed-layout CSV for zero tables, self-contained SVG
// figures (domain panel and hauptmodul-image panel), JSON verdict dumps for
// CI, and the plain-text expansions.

#ifndef EISZERO_REPORT_HPP
#define EISZERO_REPORT_HPP

#include <string>
#include <vector>

#include "eiszero/divisor_poly.hpp"
#include "eiszero/zeros.hpp"

namespace eiszero {

std::string csv_header();
// deterministic: rows ordered by weight, then Re z, then Im z
std::string zeros_to_csv(const std::vector<ZeroReport>& reports, int prec);

// two-panel figure: fundamental domain with zeros, and the j-plane image
std::string zeros_to_svg(const Registry& reg, const GroupDescriptor& g,
                         const std::vector<ZeroReport>& reports);

std::string verdicts_to_json(const std::vector<ZeroReport>& reports);

// one "exponent<TAB>numerator/denominator" pair per line
std::string qexp_text(const RatSeries& s);

// coefficients highest-degree-first, one per line, convention in a comment
std::string divpoly_text(const DivisorPolynomial& p, int prec);

std::string sweep_table_text(const std::string& group, const std::vector<SweepRow>& rows);

}  // namespace eiszero

#endif
