#include "eiszero/divisor_poly.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace eiszero {

std::string PolyConvention::tag() const {
    std::string t = "roots=";
    t += include_elliptic ? "elliptic+" : "";
    t += include_boundary ? "boundary+" : "";
    t += "interior";
    t += include_cusps ? "+cusps" : "";
    t += ";multiplicity=winding";
    return t;
}

DivisorPolynomial from_zeros(const ZeroReport& rep, const PolyConvention& conv, int prec) {
    int wp = 2 * prec;
    DivisorPolynomial p;
    p.group = rep.group;
    p.two_k = rep.two_k;
    p.convention = conv.tag();
    for (const Zero& z : rep.zeros) {
        if (z.kind == ZeroKind::Elliptic && !conv.include_elliptic) continue;
        if (z.kind == ZeroKind::Boundary && !conv.include_boundary) continue;
        p.roots.emplace_back(z.j, z.multiplicity);
    }
    p.coeffs = {BigComplex(BigFloat(1.0, wp), BigFloat(0.0, wp))};
    for (auto& [root, mult] : p.roots) {
        for (long i = 0; i < mult; ++i) {
            // multiply by (X - root)
            std::vector<BigComplex> next(p.coeffs.size() + 1,
                                         BigComplex(BigFloat(0.0, wp), BigFloat(0.0, wp)));
            for (size_t k = 0; k < p.coeffs.size(); ++k) {
                next[k + 1] += p.coeffs[k];
                next[k] -= root * p.coeffs[k];
            }
            p.coeffs = std::move(next);
        }
    }
    return p;
}

bool conjugation_identity_check(const DivisorPolynomial& p, const DivisorPolynomial& p_conj,
                                double tol) {
    if (p.coeffs.size() != p_conj.coeffs.size())
        throw std::domain_error("conjugation_identity_check: degree mismatch (" +
                                std::to_string(p.coeffs.size() - 1) + " vs " +
                                std::to_string(p_conj.coeffs.size() - 1) + ")");
    long d = static_cast<long>(p.coeffs.size()) - 1;
    double scale = 1.0;
    for (const BigComplex& c : p.coeffs) scale = std::max(scale, abs(c).to_double());
    for (long k = 0; k <= d; ++k) {
        // coefficient of X^k in (-1)^d P(-X) is (-1)^{d+k} c_k
        BigComplex want = ((d + k) % 2 == 0) ? p.coeffs[static_cast<size_t>(k)]
                                             : -p.coeffs[static_cast<size_t>(k)];
        if (abs(p_conj.coeffs[static_cast<size_t>(k)] - want).to_double() > tol * scale)
            return false;
    }
    return true;
}

bool rescale_identity_check(const Registry& reg, const ZeroReport& report_big,
                            const ZeroReport& report_small, long m, double tol) {
    if (m == 1 && report_big.group == report_small.group) return true;
    const GroupDescriptor& gsmall = reg.get(report_small.group);
    Hauptmodul hsmall = build_hauptmodul(reg, gsmall, 64);
    int prec = 128;
    BigFloat mf(static_cast<double>(m), prec);

    // every zero class of the finer group must land on a class of the
    // coarser one under z -> m z, with the same multiplicity
    std::vector<long> hits(report_small.zeros.size(), 0);
    for (const Zero& zb : report_big.zeros) {
        BigComplex img(zb.z.re * mf, zb.z.im * mf);
        BigComplex jimg = haupt_value(hsmall, img, prec);
        bool matched = false;
        for (size_t i = 0; i < report_small.zeros.size(); ++i) {
            const Zero& zs = report_small.zeros[i];
            double sc = std::max(1.0, abs(zs.j).to_double());
            if (abs(jimg - zs.j).to_double() < tol * sc) {
                if (zs.multiplicity != zb.multiplicity) return false;
                ++hits[i];
                matched = true;
                break;
            }
        }
        if (!matched) return false;
    }
    for (long h : hits)
        if (h == 0) return false;
    return true;
}

std::vector<BigComplex> extract_roots(const DivisorPolynomial& p, int prec) {
    int wp = 2 * prec;
    long d = static_cast<long>(p.coeffs.size()) - 1;
    std::vector<BigComplex> roots;
    if (d == 0) return roots;
    double bound = 1.0;
    for (long k = 0; k < d; ++k)
        bound = std::max(bound, abs(p.coeffs[static_cast<size_t>(k)]).to_double());
    bound += 1.0;
    // Durand-Kerner from a spiral of start values
    std::vector<BigComplex> x;
    for (long i = 0; i < d; ++i) {
        double ang = 2.0 * 3.14159265358979323846 * (0.26 + static_cast<double>(i)) / d;
        x.emplace_back(bound * 0.7 * std::cos(ang), bound * 0.7 * std::sin(ang), wp);
    }
    auto eval = [&](const BigComplex& z) {
        BigComplex acc = p.coeffs.back();
        for (long k = d - 1; k >= 0; --k) acc = acc * z + p.coeffs[static_cast<size_t>(k)];
        return acc;
    };
    for (int it = 0; it < 400; ++it) {
        double moved = 0.0;
        for (long i = 0; i < d; ++i) {
            BigComplex denom(BigFloat(1.0, wp), BigFloat(0.0, wp));
            for (long j = 0; j < d; ++j)
                if (j != i) denom = denom * (x[static_cast<size_t>(i)] - x[static_cast<size_t>(j)]);
            BigComplex step = eval(x[static_cast<size_t>(i)]) / denom;
            x[static_cast<size_t>(i)] -= step;
            moved = std::max(moved, abs(step).to_double());
        }
        if (moved < std::ldexp(1.0, -(prec - 8))) break;
    }
    return x;
}

}  // namespace eiszero
