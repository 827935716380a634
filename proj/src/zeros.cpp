#include "eiszero/zeros.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <cstdio>
#include <set>
#include <stdexcept>

#include <chrono>

#include "eiszero/kernels.hpp"

namespace eiszero {

namespace {

constexpr double kPi = 3.14159265358979323846;

// smallest height above which |E - 1| < 0.9 by the coefficient bound
double zero_free_ceiling(const RatSeries& qexp, double h) {
    long m = qexp.trunc_order();
    std::vector<double> mags(static_cast<size_t>(m) + 1, 0.0);
    for (long n = 1; n <= m; ++n)
        mags[static_cast<size_t>(n)] = std::abs(qexp.at(n).get_d());
    double ratio = 1.0;
    for (long n = m / 2; n < m; ++n) {
        if (mags[static_cast<size_t>(n)] > 0 && mags[static_cast<size_t>(n + 1)] > 0)
            ratio = std::max(ratio, mags[static_cast<size_t>(n + 1)] / mags[static_cast<size_t>(n)]);
    }
    for (double y = 0.25;; y += 0.05) {
        double x = std::exp(-2.0 * kPi * y / h);
        double sum = 0.0, xn = 1.0;
        for (long n = 1; n <= m; ++n) {
            xn *= x;
            sum += mags[static_cast<size_t>(n)] * xn;
        }
        if (ratio * x < 0.5) sum += mags[static_cast<size_t>(m)] * xn * ratio * x / (1 - ratio * x);
        else sum += 1.0;  // force another step up
        if (sum < 0.9) return y;
        if (y > 12.0) throw std::domain_error("no zero-free ceiling found");
    }
}

struct Horoball {
    double p;       // tangency point on the real axis
    double radius;  // euclidean radius (center at p + i radius)
};

std::vector<Horoball> horoballs(const GroupDescriptor& g, double ymult) {
    std::vector<Horoball> out;
    for (const CuspData& c : g.cusps) {
        if (c.at_infinity) continue;
        double p = mpq_class(c.representative).get_d();
        double cc = mpz_class(c.representative.get_den()).get_d();
        double hs = mpq_class(c.width).get_d();
        double Y = ymult * hs;
        out.push_back({p, 1.0 / (2.0 * cc * cc * Y)});
    }
    return out;
}

bool in_horoball(const std::vector<Horoball>& hb, double x, double y) {
    for (const Horoball& b : hb) {
        double dx = x - b.p, dy = y - b.radius;
        if (dx * dx + dy * dy < b.radius * b.radius) return true;
    }
    return false;
}

std::complex<double> winding_point(const Box& b, double t) {
    // t in [0,4), one unit per edge, anticlockwise from the lower-left corner
    double u = t - std::floor(t);
    switch (static_cast<int>(std::floor(t)) & 3) {
        case 0: return {b.x0 + u * (b.x1 - b.x0), b.y0};
        case 1: return {b.x1, b.y0 + u * (b.y1 - b.y0)};
        case 2: return {b.x1 - u * (b.x1 - b.x0), b.y1};
        default: return {b.x0, b.y1 - u * (b.y1 - b.y0)};
    }
}

}  // namespace

long count_zeros_in_box(const EisensteinForm& f, Box box, int prec, double y_floor) {
    ValueDeriv vd = [&f](const BigComplex& z, int p) { return eis_value_deriv(f, z, p); };
    return count_zeros_in_box(vd, box, prec, y_floor);
}

long count_zeros_in_box(const ValueDeriv& f, Box box, int prec, double y_floor) {
    if (box.y0 < y_floor)
        throw std::domain_error("count_zeros_in_box: box dips below the evaluation floor");
    double diam = std::hypot(box.x1 - box.x0, box.y1 - box.y0);
    for (int attempt = 0; attempt < 8; ++attempt) {
        // boundary-zero guard: the Newton distance |f/f'| approximates the
        // distance to the nearest zero independently of the weight's scale
        long probe = 64;
        double min_dist = 1e300;
        for (long i = 0; i < probe; ++i) {
            std::complex<double> zd = winding_point(box, 4.0 * i / probe);
            BigComplex z(zd.real(), zd.imag(), prec);
            auto [v, dv] = f(z, prec);
            if (!abs(dv).is_zero())
                min_dist = std::min(min_dist, (abs(v) / abs(dv)).to_double());
        }
        double step = 2.0 * (box.x1 - box.x0 + box.y1 - box.y0) / probe;
        if (min_dist < 0.7 * step) {
            double d = 1e-3 * diam * (attempt + 1);
            box.x0 += d;
            box.x1 += d;
            box.y0 += 1.3 * d;
            box.y1 += 1.3 * d;
            continue;
        }
        // adaptive trapezoid of f'/f
        double prev = 1e9;
        for (long n = 64; n <= 4096; n *= 2) {
            BigComplex sum(BigFloat(0.0, prec), BigFloat(0.0, prec));
            BigComplex zprev(BigFloat(0.0, prec), BigFloat(0.0, prec));
            BigComplex gprev = zprev;
            BigComplex zfirst = zprev, gfirst = zprev;
            for (long i = 0; i < n; ++i) {
                std::complex<double> zd = winding_point(box, 4.0 * i / n);
                BigComplex z(zd.real(), zd.imag(), prec);
                auto [v, dv] = f(z, prec);
                BigComplex lg = dv / v;
                if (i == 0) {
                    zfirst = z;
                    gfirst = lg;
                } else {
                    sum += (BigFloat(0.5, prec) * (lg + gprev)) * (z - zprev);
                }
                zprev = z;
                gprev = lg;
            }
            sum += (BigFloat(0.5, prec) * (gfirst + gprev)) * (zfirst - zprev);
            // winding = sum / (2 pi i)
            BigFloat two_pi = BigFloat(2.0, prec) * const_pi(prec);
            double w = (sum.im / two_pi).to_double();
            double r = std::abs(w - std::round(w));
            if (r < 0.25 && std::abs(w - prev) < 0.1)
                return std::lround(w);
            prev = w;
        }
        throw std::domain_error("count_zeros_in_box: quadrature did not converge");
    }
    throw std::domain_error("count_zeros_in_box: could not move the boundary off a zero");
}

namespace {

struct Candidate {
    std::complex<double> z;
    double cond = 1.0;     // cancellation condition of the combo nearby
    bool prepolished = false;
};

struct ScoutResult {
    std::vector<Candidate> cands;
    // converged Newton results on neighbouring tiles: not zeros of the
    // fundamental-domain count, but the isolation boxes must know them
    std::vector<std::complex<double>> shadows;
};

// Grid scan with a cancellation-aware field: points where the divisor combo
// cancels past double precision are re-evaluated at adaptive high precision,
// and seeds from that region skip the double Newton stage entirely.
ScoutResult scout_zeros(const GroupDescriptor& g, const EisensteinForm& f, double ceiling,
                        double ymult, long grid_per_unit, bool verbose) {
    double h = mpq_class(g.width_h).get_d();
    double dx = 1.0 / grid_per_unit;
    double dy = dx;
    std::vector<Horoball> hb = horoballs(g, ymult);
    double xlo = -h / 2 - 2.5 * dx, xhi = h / 2 + 2.5 * dx;
    long nx = static_cast<long>(std::ceil((xhi - xlo) / dx)) + 1;
    double ytop = ceiling + 2 * dy;
    long ny = static_cast<long>(std::ceil(ytop / dy)) + 1;

    auto fold = [&](double x) { return x - h * std::round(x / h); };
    auto masked = [&](double x, double y) {
        double xf = fold(x);
        if (y <= 1e-4) return true;
        if (y < g.boundary_y(xf) - 2.5 * dy) return true;
        if (in_horoball(hb, xf, y)) return true;
        return false;
    };

    std::vector<std::complex<double>> pts;
    std::vector<long> idx(static_cast<size_t>(nx * ny), -1);
    for (long iy = 0; iy < ny; ++iy) {
        double y = ytop - iy * dy;
        if (y <= 0) continue;
        for (long ix = 0; ix < nx; ++ix) {
            double x = xlo + ix * dx;
            if (masked(x, y)) continue;
            idx[static_cast<size_t>(iy * nx + ix)] = static_cast<long>(pts.size());
            pts.emplace_back(x, y);
        }
    }
    std::vector<FieldSample> field = scan_field_grid(f, pts);
    // uniform log-magnitude field; rescue badly cancelled points at high
    // precision so the deep cusp neighbourhoods stay visible
    const double kCondGate = 1e10;
    std::vector<double> logmag(pts.size());
    std::vector<double> cond(pts.size());
    std::vector<size_t> bad;
    for (size_t i = 0; i < pts.size(); ++i) {
        cond[i] = field[i].cond;
        if (!(field[i].mag > 0.0) || !std::isfinite(field[i].mag) ||
            !std::isfinite(field[i].cond) || field[i].cond > kCondGate) {
            bad.push_back(i);
            logmag[i] = 1e300;
        } else {
            logmag[i] = std::log(field[i].mag);
        }
    }
    if (!bad.empty()) {
        std::vector<BigComplex> bpts;
        bpts.reserve(bad.size());
        for (size_t i : bad) bpts.emplace_back(pts[i].real(), pts[i].imag(), 160);
        std::vector<FieldSample> hp = rescan_field_hp(f, bpts, 192);
        for (size_t k = 0; k < bad.size(); ++k) {
            logmag[bad[k]] = hp[k].mag;
            cond[bad[k]] = hp[k].cond;
        }
    }

    auto mag_at = [&](long iy, long ix) -> double {
        if (iy < 0 || iy >= ny || ix < 0 || ix >= nx) return 1e300;
        long k = idx[static_cast<size_t>(iy * nx + ix)];
        return k < 0 ? 1e300 : logmag[static_cast<size_t>(k)];
    };

    struct Seed {
        std::complex<double> z;
        double cond;
        bool reliable;
    };
    std::vector<Seed> seeds;
    for (long iy = 0; iy < ny; ++iy) {
        for (long ix = 0; ix < nx; ++ix) {
            long k = idx[static_cast<size_t>(iy * nx + ix)];
            if (k < 0) continue;
            double v = logmag[static_cast<size_t>(k)];
            if (v > 1e250) continue;
            bool is_min = true;
            for (long ddy = -1; ddy <= 1 && is_min; ++ddy)
                for (long ddx = -1; ddx <= 1; ++ddx) {
                    if (ddx == 0 && ddy == 0) continue;
                    if (mag_at(iy + ddy, ix + ddx) < v) {
                        is_min = false;
                        break;
                    }
                }
            if (is_min)
                seeds.push_back({pts[static_cast<size_t>(k)], cond[static_cast<size_t>(k)],
                                 cond[static_cast<size_t>(k)] <= kCondGate});
        }
    }

    if (verbose)
        std::fprintf(stderr, "[scout] grid=%ld pts=%zu hp=%zu seeds=%zu ymult=%.2f ceil=%.2f\n",
                     grid_per_unit, pts.size(), bad.size(), seeds.size(), ymult, ceiling);

    ScoutResult result;
    std::vector<Candidate>& found = result.cands;
    auto push_found = [&](std::complex<double> zc, double cd, bool pre) {
        for (const Candidate& w : found)
            if (std::abs(w.z - zc) < 1e-7) return;
        found.push_back({zc, cd, pre});
    };
    auto push_shadow = [&](std::complex<double> zc) {
        for (const auto& w : result.shadows)
            if (std::abs(w - zc) < 1e-7) return;
        result.shadows.push_back(zc);
    };
    for (const Seed& sd : seeds) {
        if (!sd.reliable) {
            // high-precision Newton will start straight from the grid point
            double xf = fold(sd.z.real());
            push_found({xf, sd.z.imag()}, sd.cond, true);
            continue;
        }
        std::complex<double> z = sd.z;
        bool ok = false;
        double prev_step = 1e300;
        for (int it = 0; it < 60; ++it) {
            auto [v, dv] = eis_value_deriv_d(f, z);
            if (std::abs(dv) == 0.0) break;
            std::complex<double> step = v / dv;
            z -= step;
            if (z.imag() < 5e-4 || z.imag() > ytop + 1.0 || std::abs(z.real()) > h) break;
            double ss = std::abs(step);
            if (ss < 1e-12 * std::max(1.0, std::abs(z))) {
                ok = true;
                break;
            }
            // stagnation at the double-precision cancellation floor
            if (ss < 1e-7 && ss >= 0.5 * prev_step) {
                ok = true;
                break;
            }
            prev_step = ss;
        }
        if (!ok) continue;
        double xf = fold(z.real());
        std::complex<double> zc(xf, z.imag());
        if (!g.contains(xf, z.imag(), 1e-7)) {
            push_shadow(zc);
            continue;
        }
        push_found(zc, sd.cond, false);
    }
    if (verbose) {
        std::fprintf(stderr, "[scout] candidates: %zu shadows: %zu\n", found.size(),
                     result.shadows.size());
        for (auto& w : found)
            std::fprintf(stderr, "    cand (%.6f, %.6f) cond=%.2e pre=%d\n", w.z.real(),
                         w.z.imag(), w.cond, static_cast<int>(w.prepolished));
    }
    return result;
}

BigComplex polish_zero(const EisensteinForm& f, std::complex<double> seed, int prec,
                       double cond, bool& converged) {
    int extra = 0;
    if (cond > 1.0 && std::isfinite(cond)) extra = static_cast<int>(std::log2(cond)) + 16;
    extra = std::min(extra, 4096);
    int wp = prec + 96 + extra;  // headroom for the cancellation inside the combo
    BigComplex z(seed.real(), seed.imag(), wp);
    BigFloat target = pow_si(BigFloat(2.0, wp), -(prec - 4));
    BigFloat loose = pow_si(BigFloat(2.0, wp), -(prec / 2));
    BigFloat prev_step(1e300, wp);
    converged = false;
    for (int it = 0; it < 260; ++it) {
        auto [v, dv] = eis_value_deriv(f, z, wp);
        if (abs(dv).is_zero()) break;
        BigComplex step = v / dv;
        z -= step;
        if (z.im.to_double() < 2e-4) break;
        BigFloat s = abs(step);
        if (s < target) {
            converged = true;
            break;
        }
        // stagnation below the residual target counts as converged: the
        // remaining wobble is the cancellation noise floor of the combo
        if (s < loose && s >= BigFloat(0.5, wp) * prev_step) {
            converged = true;
            break;
        }
        prev_step = s;
    }
    if (converged) {
        // a genuine zero has vanishing Newton distance; on the exponentially
        // flat cusp side |f/f'| plateaus at the drift scale instead
        auto [v, dv] = eis_value_deriv(f, z, wp);
        if (abs(dv).is_zero() || abs(v) / abs(dv) > loose) converged = false;
    }
    return z;
}

struct PolishedZero {
    BigComplex z;
    BigComplex j;
    double cond = 1.0;
};

long static_compute_c(const GroupDescriptor& g, const Hauptmodul& h) {
    static std::map<std::string, long> cache;
    static std::mutex mu;
    {
        std::lock_guard<std::mutex> lk(mu);
        auto it = cache.find(g.name);
        if (it != cache.end()) return it->second;
    }
    long c = compute_c(g, h);
    std::lock_guard<std::mutex> lk(mu);
    cache[g.name] = c;
    return c;
}

}  // namespace

void classify_zero(Zero& z, const GroupDescriptor& g, double a0, double a1, double delta_geom,
                   double delta_imag) {
    double x = z.z.re.to_double(), y = z.z.im.to_double();
    double best = arc_min_distance(g, x, y);
    z.arc_distance = best;
    z.on_arc = best < delta_geom;
    double imj = std::abs(z.j.im.to_double());
    z.j_real = imj < delta_imag;
    double rej = z.j.re.to_double();
    bool ge_a0 = rej >= a0 - delta_imag;
    bool le_a1 = rej <= a1 + delta_imag;
    if (ge_a0 && le_a1) z.interval = IntervalClass::Inside;
    else if (ge_a0) z.interval = IntervalClass::HalflineOnly;
    else if (le_a1) z.interval = IntervalClass::LowerOnly;
    else z.interval = IntervalClass::Outside;
    if (z.kind != ZeroKind::Elliptic) {
        double h = mpq_class(g.width_h).get_d();
        bool on_wall = std::abs(std::abs(x) - h / 2) < delta_geom;
        z.kind = (z.on_arc || on_wall) ? ZeroKind::Boundary : ZeroKind::Interior;
    }
}

ZeroReport locate_zeros(const Registry& reg, const GroupDescriptor& g, long two_k,
                        LocateOptions opt) {
    if (opt.prec < 64) throw std::domain_error("locate_zeros: precision must be at least 64 bits");
    ZeroReport rep;
    rep.group = g.name;
    rep.two_k = two_k;
    rep.advisory = !g.acceptable;
    rep.valence_expected = mpq_class(2 * two_k * g.index_mu, 24);
    rep.valence_expected.canonicalize();

    auto tick = std::chrono::steady_clock::now();
    auto lap = [&](const char* what) {
        if (!opt.verbose) return;
        auto now = std::chrono::steady_clock::now();
        std::fprintf(stderr, "[time] %-12s %.2fs\n", what,
                     std::chrono::duration<double>(now - tick).count());
        tick = now;
    };
    long order = opt.trunc_override > 0 ? opt.trunc_override
                                        : std::max<long>(128, 24 + 2 * two_k);
    EisensteinForm form = build_eisenstein(reg, g, two_k, order);
    lap("build+orders");
    rep.cusp_orders = form.cusp_orders;
    Hauptmodul haupt = build_hauptmodul(reg, g, 64);
    A0A1 aa = compute_a0_a1(g, haupt, opt.prec);
    lap("haupt+a0a1");
    rep.a0 = aa.a0.to_double();
    rep.a1 = aa.a1.to_double();
    rep.c_value = static_compute_c(g, haupt);
    lap("compute_c");
    rep.s1_value = compute_s1(g, form);

    double h = mpq_class(g.width_h).get_d();
    rep.delta_geom = opt.geom_tol_factor * h;
    rep.delta_imag = opt.imag_tol_factor * std::max(1.0, std::abs(rep.a1 - rep.a0));

    double ceiling = zero_free_ceiling(form.qexp, h);

    mpq_class cusp_total(0);
    {
        std::set<int> seen;
        for (size_t i = 0; i < g.cusps.size(); ++i) {
            if (!seen.insert(g.cusps[i].class_id).second) continue;
            cusp_total += form.cusp_orders[i];
        }
    }

    long base_grid = opt.grid_per_unit > 0
                         ? opt.grid_per_unit
                         : 110 + 6 * (2 * two_k * g.index_mu) / 12;
    // the deepest zeros sit where the subleading cusp coefficients (growing
    // like 2^{2k}) catch up with the leading one, so the horoball cut must
    // scale with the weight
    double ym_final = std::max(3.0, 1.15 * (two_k * std::log(2.0) + 9.0) / (2.0 * kPi));
    const double ymults[3] = {std::max(1.6, 0.55 * ym_final), std::max(2.2, 0.8 * ym_final),
                              ym_final};
    const long gridmul[3] = {1, 2, 3};

    std::string failure;
    for (int attempt = 0; attempt < 3; ++attempt) {
        lap("pre-scout");
        ScoutResult scout = scout_zeros(g, form, ceiling + 0.2 * attempt, ymults[attempt],
                                        base_grid * gridmul[attempt], opt.verbose);
        const std::vector<Candidate>& cands = scout.cands;
        lap("scout");
        // high-precision polish; zeros polished onto a neighbouring tile are
        // kept as shadows so the isolation boxes know about every nearby copy
        std::vector<PolishedZero> pz;
        std::vector<std::complex<double>> shadows = scout.shadows;
        // deeper than this in any cusp's local coordinate the leading term
        // dominates, so Newton iterates that drift there are mush
        double ym_reject = 1.3 * ym_final;
        auto in_dominated_zone = [&](double x, double y) {
            for (const CuspData& cu : g.cusps) {
                if (cu.at_infinity) continue;
                double p = mpq_class(cu.representative).get_d();
                double cc = mpz_class(cu.representative.get_den()).get_d();
                double hs = mpq_class(cu.width).get_d();
                double d2 = (x - p) * (x - p) + y * y;
                if (y / (cc * cc * d2 * hs) > ym_reject) return true;
            }
            return false;
        };
        for (const Candidate& c : cands) {
            bool ok = false;
            BigComplex z = polish_zero(form, c.z, opt.prec, c.cond, ok);
            if (!ok) continue;
            double xf = z.re.to_double();
            double yf = z.im.to_double();
            double hd = mpq_class(g.width_h).get_d();
            xf -= hd * std::round(xf / hd);
            if (in_dominated_zone(xf, yf)) continue;
            if (!g.contains(xf, yf, 1e-6)) {
                shadows.emplace_back(xf, yf);
                continue;
            }
            if (std::abs(xf - z.re.to_double()) > 1e-15) {
                // fold the polished point back into the strip
                BigFloat shift(std::round(z.re.to_double() / hd) * hd, z.prec());
                z.re -= shift;
            }
            pz.push_back({z, haupt_value(haupt, z, opt.prec), c.cond});
            if (opt.verbose)
                std::fprintf(stderr, "[polish] kept (%.6f, %.6f) from cand (%.6f, %.6f)\n",
                             z.re.to_double(), z.im.to_double(), c.z.real(), c.z.imag());
        }
        lap("polish");
        // fold equivalence classes by hauptmodul value
        std::vector<std::vector<size_t>> classes;
        for (size_t i = 0; i < pz.size(); ++i) {
            bool placed = false;
            for (auto& cl : classes) {
                const BigComplex& j0 = pz[cl.front()].j;
                double tol = opt.dedup_j_tol * std::max(1.0, abs(j0).to_double());
                if (abs(pz[i].j - j0).to_double() < tol) {
                    cl.push_back(i);
                    placed = true;
                    break;
                }
            }
            if (!placed) classes.push_back({i});
        }
        // representative: prefer x in [-h/2, h/2), then smaller |x|
        std::vector<Zero> zeros;
        for (auto& cl : classes) {
            size_t best = cl.front();
            auto score = [&](size_t i) {
                double x = pz[i].z.re.to_double();
                double y = pz[i].z.im.to_double();
                double in_half_open = (x >= -h / 2 - 1e-12 && x < h / 2 - 1e-12) ? 0.0 : 1.0;
                double depth = y - g.boundary_y(x);
                double hugging = (depth < 5e-3 || std::abs(std::abs(x) - h / 2) < 5e-3) ? 1.0 : 0.0;
                return in_half_open * 10.0 + hugging * 5.0 + std::abs(x);
            };
            for (size_t i : cl)
                if (score(i) < score(best)) best = i;
            Zero z;
            z.z = pz[best].z;
            z.j = pz[best].j;
            z.eval_condition = pz[best].cond;
            zeros.push_back(std::move(z));
        }
        // multiplicities by winding around the isolated representative
        bool mult_ok = true;
        for (size_t i = 0; i < zeros.size() && mult_ok; ++i) {
            double sep = 0.25;
            std::complex<double> zi = zeros[i].z.to_std();
            auto see = [&](std::complex<double> w) {
                double d = std::abs(w - zi);
                if (d > 1e-9) sep = std::min(sep, d);
                double dT = std::abs(w + std::complex<double>(h, 0.0) - zi);
                if (dT > 1e-9) sep = std::min(sep, dT);
                dT = std::abs(w - std::complex<double>(h, 0.0) - zi);
                if (dT > 1e-9) sep = std::min(sep, dT);
            };
            for (size_t k = 0; k < pz.size(); ++k) see(pz[k].z.to_std());
            for (const auto& w : shadows) see(w);
            // stay inside the tile around the zero: its group-equivalent
            // copies sit roughly twice the arc distance away across a glued
            // arc (for a zero exactly on the arc the copies coincide)
            double darc = arc_min_distance(g, zi.real(), zi.imag());
            double copy_limit = darc > 1e-8 ? 0.8 * darc : 1.0;
            double side = std::clamp(std::min(0.3 * sep, copy_limit), 1e-6, 0.02);

            int box_prec = 96;
            if (zeros[i].eval_condition > 1.0 && std::isfinite(zeros[i].eval_condition))
                box_prec += std::min(4096, static_cast<int>(std::log2(zeros[i].eval_condition)) + 16);
            // the candidate list cannot know about every group-equivalent
            // copy on the neighbouring tiles, so the winding count is read
            // at a stable isolation scale: shrink until it stops changing
            // (copies sit at a fixed positive distance; the centered zero
            // stays inside every box)
            std::string box_err;
            auto count_at = [&](double s) {
                Box bb{zi.real() - s, zi.real() + s, std::max(1e-5, zi.imag() - s),
                       zi.imag() + s};
                for (int shrink = 0;; ++shrink) {
                    try {
                        long got = count_zeros_in_box(form, bb, box_prec, 1e-5);
                        box_err.clear();
                        return got;
                    } catch (const std::exception& e) {
                        box_err = e.what();
                        if (shrink >= 4 || s < 4e-7) return -1L;
                        s *= 0.5;
                        bb = Box{zi.real() - s, zi.real() + s, std::max(1e-5, zi.imag() - s),
                                 zi.imag() + s};
                    }
                }
            };
            long m = count_at(side);
            for (int stage = 0; m > 0 && stage < 6; ++stage) {
                if (side / 3.0 < 1e-6) break;
                long m_small = count_at(side / 3.0);
                if (m_small == m || m_small < 0) break;
                side /= 3.0;
                m = m_small;
            }
            if (m < 0 || !box_err.empty()) {
                failure = "multiplicity box: " + box_err + " at z=(" +
                          std::to_string(zi.real()) + "," + std::to_string(zi.imag()) +
                          ") side=" + std::to_string(side);
                mult_ok = false;
                break;
            }
            if (m <= 0) {
                failure = "multiplicity box returned " + std::to_string(m) + " at z=(" +
                          std::to_string(zi.real()) + "," + std::to_string(zi.imag()) + ")";
                mult_ok = false;
                break;
            }
            zeros[i].multiplicity = m;
        }
        lap("mult");
        if (!mult_ok) continue;
        // elliptic identification by hauptmodul value
        for (Zero& z : zeros) {
            for (const EllipticPoint& e : g.elliptic) {
                BigComplex ez(BigFloat(e.x, opt.prec), sqrt(BigFloat(e.y_sq, opt.prec)));
                BigComplex je = haupt_value(haupt, ez, opt.prec);
                double tol = 1e-7 * std::max(1.0, abs(je).to_double());
                if (abs(z.j - je).to_double() < tol) {
                    z.kind = ZeroKind::Elliptic;
                    z.elliptic_order = e.order;
                    break;
                }
            }
        }
        // valence accounting, exact
        mpq_class found = cusp_total;
        for (const Zero& z : zeros) {
            if (z.kind == ZeroKind::Elliptic)
                found += mpq_class(z.multiplicity, z.elliptic_order);
            else
                found += z.multiplicity;
        }
        found.canonicalize();
        if (found == rep.valence_expected) {
            rep.zeros = std::move(zeros);
            rep.valence_found = found;
            break;
        }
        failure = "valence mismatch: found " + found.get_str() + ", expected " +
                  rep.valence_expected.get_str() + "; classes:";
        for (const Zero& z : zeros)
            failure += " (" + std::to_string(z.z.re.to_double()) + "," +
                       std::to_string(z.z.im.to_double()) + ")m" + std::to_string(z.multiplicity) +
                       (z.kind == ZeroKind::Elliptic ? "e" + std::to_string(z.elliptic_order) : "");
    }
    if (rep.valence_found != rep.valence_expected)
        throw std::domain_error("locate_zeros(" + g.name + ", " + std::to_string(two_k) +
                                "): " + failure);

    for (Zero& z : rep.zeros)
        classify_zero(z, g, rep.a0, rep.a1, rep.delta_geom, rep.delta_imag);

    std::sort(rep.zeros.begin(), rep.zeros.end(), [](const Zero& a, const Zero& b) {
        double ax = a.z.re.to_double(), bx = b.z.re.to_double();
        if (ax != bx) return ax < bx;
        return a.z.im.to_double() < b.z.im.to_double();
    });

    // counts over the divisor-polynomial roots (non-cusp classes); elliptic
    // classes enter the theorem polynomial with multiplicity ord/e rounded
    // down, so an elliptic zero of order below the stabilizer is no root
    rep.deg_p = 0;
    rep.deg_p_orbifold = 0;
    rep.off_halfline = rep.off_interval = rep.off_lower = 0;
    rep.m_halfline = rep.m_lower = 0;
    for (const Zero& z : rep.zeros) {
        rep.deg_p += z.multiplicity;
        long thm_mult = z.kind == ZeroKind::Elliptic ? z.multiplicity / z.elliptic_order
                                                     : z.multiplicity;
        rep.deg_p_orbifold += thm_mult;
        if (thm_mult == 0) continue;
        double rej = z.j.re.to_double();
        bool on_half = z.j_real && rej >= rep.a0 - rep.delta_imag;
        bool on_low = z.j_real && rej <= rep.a1 + rep.delta_imag;
        bool inside = on_half && on_low;
        if (!on_half) rep.off_halfline += thm_mult;
        if (!on_low) rep.off_lower += thm_mult;
        if (!inside) rep.off_interval += thm_mult;
        if (thm_mult % 2 == 1) {
            if (on_half) ++rep.m_halfline;
            if (on_low) ++rep.m_lower;
        }
    }
    rep.m_halfline_with_cusps = rep.m_halfline;
    rep.m_lower_with_cusps = rep.m_lower;
    {
        std::set<int> seen;
        for (size_t i = 0; i < g.cusps.size(); ++i) {
            if (g.cusps[i].at_infinity) continue;
            if (!seen.insert(g.cusps[i].class_id).second) continue;
            if (form.cusp_orders[i] % 2 == 0) continue;
            BigComplex jc = haupt_value_at_cusp(g, haupt, i, opt.prec);
            if (std::abs(jc.im.to_double()) > rep.delta_imag) continue;
            double rej = jc.re.to_double();
            if (rej >= rep.a0 - rep.delta_imag) ++rep.m_halfline_with_cusps;
            if (rej <= rep.a1 + rep.delta_imag) ++rep.m_lower_with_cusps;
        }
    }
    verify_theorems(rep);
    return rep;
}

void verify_theorems(ZeroReport& r) {
    long bound = r.c_value - r.s1_value;
    r.verdict_halfline = (r.off_halfline <= bound) && (r.m_halfline + bound >= r.deg_p_orbifold);
    r.verdict_lower = (r.off_lower <= bound) && (r.m_lower + bound >= r.deg_p_orbifold);
    r.verdict_interval = r.off_interval <= 2 * bound;
}

std::vector<SweepRow> sweep(const Registry& reg, const GroupDescriptor& g,
                            const std::vector<long>& weights, LocateOptions opt) {
    std::vector<SweepRow> rows;
    for (long w : weights) {
        if (w % 2 != 0 || !g.good_for(w))
            throw std::domain_error("sweep: weight " + std::to_string(w) + " is not usable");
        ZeroReport rep = locate_zeros(reg, g, w, opt);
        SweepRow row;
        row.two_k = w;
        row.total_classes = static_cast<long>(rep.zeros.size());
        for (const Zero& z : rep.zeros) {
            row.total_multiplicity += z.multiplicity;
            if (!z.on_arc) {
                ++row.off_arc;
                row.max_off_arc_distance = std::max(row.max_off_arc_distance, z.arc_distance);
            }
        }
        rows.push_back(row);
    }
    return rows;
}

}  // namespace eiszero
