// Command-line driver: expansions, zero tables and figures, theorem
// verification, conjugation and rescaling identity checks, divisor
// polynomials, and the registry document.
//
// Exit codes: 0 success or advisory, 1 verification failure,
// 2 configuration error, 3 numerical failure.

#include <CLI11.hpp>
#include <omp.h>

#include <filesystem>
#include <fstream>
#include <iostream>

#include "eiszero/cli_util.hpp"
#include "eiszero/divisor_poly.hpp"
#include "eiszero/report.hpp"

using namespace eiszero;
namespace fs = std::filesystem;

namespace {

struct GlobalOpts {
    std::string registry_path;
    std::string config_path;
    int precision = 128;
    long trunc_override = 0;
    double tol_geom = 1e-6;
    double tol_imag = 1e-8;
    std::string out_dir = ".";
    std::string formats = "csv";
    int jobs = 0;
    bool verbose = false;
};

const Registry* load_registry(const GlobalOpts& g) {
    if (g.registry_path.empty()) return &Registry::builtin();
    static Registry loaded;
    std::ifstream in(g.registry_path);
    if (!in) throw std::domain_error("cannot open registry file " + g.registry_path);
    std::stringstream ss;
    ss << in.rdbuf();
    loaded = Registry::from_json_text(ss.str());
    return &loaded;
}

bool has_format(const GlobalOpts& g, const std::string& f) {
    return ("," + g.formats + ",").find("," + f + ",") != std::string::npos;
}

void write_file(const fs::path& p, const std::string& content) {
    fs::create_directories(p.parent_path().empty() ? "." : p.parent_path());
    std::ofstream out(p, std::ios::binary);
    if (!out) throw std::domain_error("cannot write " + p.string());
    out << content;
}

LocateOptions locate_opts(const GlobalOpts& g) {
    LocateOptions o;
    o.prec = g.precision;
    o.geom_tol_factor = g.tol_geom;
    o.imag_tol_factor = g.tol_imag;
    o.verbose = g.verbose;
    o.trunc_override = g.trunc_override;
    return o;
}

std::string sanitize(const std::string& name) {
    std::string s = name;
    for (char& c : s)
        if (c == '*' || c == '+') c = (c == '*') ? 's' : 'p';
    return s;
}

int cmd_qexp(const GlobalOpts& g, const std::string& group, long weight, bool hauptmodul,
             long order) {
    const Registry& reg = *load_registry(g);
    const GroupDescriptor& gd = reg.get(group);
    long m = g.trunc_override > 0 ? g.trunc_override : order;
    RatSeries s = hauptmodul ? build_hauptmodul(reg, gd, m).qexp
                             : build_eisenstein(reg, gd, weight, m).qexp;
    std::cout << qexp_text(s);
    return 0;
}

int cmd_zeros(const GlobalOpts& g, const std::string& group, const std::string& weights_spec) {
    const Registry& reg = *load_registry(g);
    const GroupDescriptor& gd = reg.get(group);
    std::vector<long> weights = parse_weights_spec(weights_spec);
    std::vector<ZeroReport> reports;
    for (long w : weights) {
        reports.push_back(locate_zeros(reg, gd, w, locate_opts(g)));
        if (has_format(g, "csv"))
            write_file(fs::path(g.out_dir) /
                           ("zeros_" + sanitize(group) + "_w" + std::to_string(w) + ".csv"),
                       zeros_to_csv({reports.back()}, g.precision));
    }
    if (has_format(g, "csv"))
        write_file(fs::path(g.out_dir) / ("zeros_" + sanitize(group) + ".csv"),
                   zeros_to_csv(reports, g.precision));
    if (has_format(g, "svg"))
        write_file(fs::path(g.out_dir) / ("zeros_" + sanitize(group) + ".svg"),
                   zeros_to_svg(reg, gd, reports));
    if (has_format(g, "json"))
        write_file(fs::path(g.out_dir) / ("verdicts_" + sanitize(group) + ".json"),
                   verdicts_to_json(reports));
    std::cout << "wrote zero tables for " << group << " (" << reports.size() << " weights) to "
              << g.out_dir << "\n";
    return 0;
}

int cmd_verify(const GlobalOpts& g, const std::string& group, const std::string& weights_spec) {
    const Registry& reg = *load_registry(g);
    const GroupDescriptor& gd = reg.get(group);
    std::vector<long> weights = parse_weights_spec(weights_spec);
    bool advisory = !gd.acceptable;
    if (advisory)
        std::cout << "note: " << group
                  << " has no acceptable fundamental domain; verdicts are advisory\n";
    std::cout << "group weight degP  m   c-s1 off_half off_intv half intv low\n";
    bool all_ok = true;
    std::vector<ZeroReport> reports;
    for (long w : weights) {
        ZeroReport r = locate_zeros(reg, gd, w, locate_opts(g));
        std::printf("%-8s %4ld %4ld %3ld %4ld %8ld %8ld   %c   %c   %c\n", group.c_str(), w,
                    r.deg_p_orbifold, r.m_halfline, r.c_value - r.s1_value, r.off_halfline,
                    r.off_interval, r.verdict_halfline ? 'y' : 'n', r.verdict_interval ? 'y' : 'n',
                    r.verdict_lower ? 'y' : 'n');
        if (!(r.verdict_halfline && r.verdict_interval && r.verdict_lower)) all_ok = false;
        reports.push_back(std::move(r));
    }
    if (has_format(g, "json"))
        write_file(fs::path(g.out_dir) / ("verdicts_" + sanitize(group) + ".json"),
                   verdicts_to_json(reports));
    if (advisory) return 0;
    return all_ok ? 0 : 1;
}

int cmd_sweep(const GlobalOpts& g, const std::string& group, const std::string& weights_spec) {
    const Registry& reg = *load_registry(g);
    const GroupDescriptor& gd = reg.get(group);
    std::vector<SweepRow> rows = sweep(reg, gd, parse_weights_spec(weights_spec), locate_opts(g));
    std::string table = sweep_table_text(group, rows);
    std::cout << table;
    if (g.out_dir != ".")
        write_file(fs::path(g.out_dir) / ("sweep_" + sanitize(group) + ".txt"), table);
    return 0;
}

int cmd_conjugate_check(const GlobalOpts& g, const std::string& group,
                        const std::string& weights_spec, long order) {
    const Registry& reg = *load_registry(g);
    const GroupDescriptor& gd = reg.get(group);
    GroupDescriptor conj = conjugate_group(gd);
    if (!reg.has(conj.name))
        throw std::domain_error("the conjugate of " + group + " is not a registry group");
    const GroupDescriptor& gc = reg.get(conj.name);
    long m = g.trunc_override > 0 ? g.trunc_override : order;
    bool ok = true;
    for (long w : parse_weights_spec(weights_spec)) {
        RatSeries lhs = conjugate_form(build_eisenstein(reg, gd, w, m).qexp);
        RatSeries rhs = build_eisenstein(reg, gc, w, m).qexp;
        bool series_ok = true;
        for (long n = 0; n <= m; ++n)
            if (lhs.at(n) != rhs.at(n)) series_ok = false;
        DivisorPolynomial p = from_zeros(locate_zeros(reg, gd, w, locate_opts(g)), {}, g.precision);
        DivisorPolynomial pc =
            from_zeros(locate_zeros(reg, gc, w, locate_opts(g)), {}, g.precision);
        bool poly_ok = conjugation_identity_check(p, pc, 1e-8);
        std::printf("weight %3ld: series %s (order %ld), divisor polynomial %s\n", w,
                    series_ok ? "exact" : "MISMATCH", m, poly_ok ? "ok" : "MISMATCH");
        ok = ok && series_ok && poly_ok;
    }
    // hauptmodul flip
    Hauptmodul hj = build_hauptmodul(reg, gd, m);
    Hauptmodul hc = build_hauptmodul(reg, gc, m);
    Hauptmodul flip = conjugate_hauptmodul(hj);
    bool haupt_ok = true;
    for (long n = -1; n <= m - 2; ++n)
        if (flip.qexp.at(n) != hc.qexp.at(n)) haupt_ok = false;
    std::printf("hauptmodul flip: %s\n", haupt_ok ? "exact" : "MISMATCH");
    return (ok && haupt_ok) ? 0 : 1;
}

int cmd_identity_check(const GlobalOpts& g, const std::string& group,
                       const std::string& weights_spec, long order) {
    const Registry& reg = *load_registry(g);
    const GroupDescriptor& gd = reg.get(group);
    if (gd.eis.kind != EisRecipe::Kind::RescaleOf)
        throw std::domain_error(group + " has no rescaling identity in the registry");
    const GroupDescriptor& base = reg.get(gd.eis.base);
    long mfac = gd.eis.rescale_m;
    long m = g.trunc_override > 0 ? g.trunc_override : order;
    bool ok = true;
    for (long w : parse_weights_spec(weights_spec)) {
        RatSeries small = build_eisenstein(reg, base, w, m / mfac + 1).qexp;
        RatSeries big = build_eisenstein(reg, gd, w, m).qexp;
        bool series_ok = true;
        RatSeries lifted = rescale(small, mfac);
        for (long n = 0; n <= m; ++n)
            if (big.at(n) != lifted.at(n)) series_ok = false;
        ZeroReport rb = locate_zeros(reg, gd, w, locate_opts(g));
        ZeroReport rs = locate_zeros(reg, base, w, locate_opts(g));
        bool zeros_ok = rescale_identity_check(reg, rb, rs, mfac, 1e-7);
        std::printf("weight %3ld: series %s (order %ld), zero correspondence %s\n", w,
                    series_ok ? "exact" : "MISMATCH", m, zeros_ok ? "ok" : "MISMATCH");
        ok = ok && series_ok && zeros_ok;
    }
    return ok ? 0 : 1;
}

int cmd_divpoly(const GlobalOpts& g, const std::string& group, long weight) {
    const Registry& reg = *load_registry(g);
    ZeroReport r = locate_zeros(reg, reg.get(group), weight, locate_opts(g));
    DivisorPolynomial p = from_zeros(r, {}, g.precision);
    std::cout << divpoly_text(p, g.precision);
    return 0;
}

int cmd_gen_registry(const std::string& out) {
    write_file(out, Registry::builtin().to_json_text());
    std::cout << "wrote " << out << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Eisenstein series zero locator for genus-zero groups"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOpts g;
    app.add_option("--registry", g.registry_path, "registry JSON file (default: built-in)");
    app.add_option("--precision", g.precision, "working precision in bits (>= 64)");
    app.add_option("--trunc", g.trunc_override, "truncation order override");
    app.add_option("--tol-geom", g.tol_geom, "on-arc tolerance factor");
    app.add_option("--tol-imag", g.tol_imag, "real-part tolerance factor");
    app.add_option("--out", g.out_dir, "output directory");
    app.add_option("--format", g.formats, "comma list of csv,svg,json");
    app.add_option("--jobs", g.jobs, "worker thread bound (0 = library default)");
    app.add_flag("--verbose", g.verbose, "progress traces to stderr");
    app.set_config("--config")->configurable(false);

    std::string group, weights = "4", out_reg = "data/groups.json";
    long weight = 4, order = 64;
    bool want_haupt = false;

    CLI::App* qexp = app.add_subcommand("qexp", "print an exact expansion");
    qexp->add_option("--group", group)->required();
    qexp->add_option("--weight", weight);
    qexp->add_flag("--hauptmodul", want_haupt, "print the hauptmodul instead");
    qexp->add_option("--order", order, "number of retained coefficients");

    CLI::App* zeros = app.add_subcommand("zeros", "locate zeros, write tables and figures");
    zeros->add_option("--group", group)->required();
    zeros->add_option("--weights", weights)->required();

    CLI::App* verify = app.add_subcommand("verify", "run the localization verdicts");
    verify->add_option("--group", group)->required();
    verify->add_option("--weights", weights)->required();

    CLI::App* sw = app.add_subcommand("sweep", "off-arc trend table over weights");
    sw->add_option("--group", group)->required();
    sw->add_option("--weights", weights)->required();

    CLI::App* cc = app.add_subcommand("conjugate-check", "half-period conjugation identities");
    cc->add_option("--group", group)->required();
    cc->add_option("--weights", weights);
    cc->add_option("--order", order, "series comparison order");

    CLI::App* ic = app.add_subcommand("identity-check", "rescaling identities");
    ic->add_option("--group", group)->required();
    ic->add_option("--weights", weights);
    ic->add_option("--order", order, "series comparison order");

    CLI::App* dp = app.add_subcommand("divpoly", "print the divisor polynomial");
    dp->add_option("--group", group)->required();
    dp->add_option("--weight", weight)->required();

    CLI::App* gr = app.add_subcommand("gen-registry", "write the registry document");
    gr->add_option("--out", out_reg);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (g.precision < 64) {
        std::cerr << "precision must be at least 64 bits\n";
        return 2;
    }
    if (g.jobs > 0) omp_set_num_threads(g.jobs);

    try {
        if (qexp->parsed()) return cmd_qexp(g, group, weight, want_haupt, order);
        if (zeros->parsed()) return cmd_zeros(g, group, weights);
        if (verify->parsed()) return cmd_verify(g, group, weights);
        if (sw->parsed()) return cmd_sweep(g, group, weights);
        if (cc->parsed()) return cmd_conjugate_check(g, group, weights, std::max(order, 200L));
        if (ic->parsed()) return cmd_identity_check(g, group, weights, std::max(order, 200L));
        if (dp->parsed()) return cmd_divpoly(g, group, weight);
        if (gr->parsed()) return cmd_gen_registry(out_reg);
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        std::string msg = e.what();
        if (msg.find("unknown group") != std::string::npos ||
            msg.find("cannot parse") != std::string::npos ||
            msg.find("must be even") != std::string::npos ||
            msg.find("not usable") != std::string::npos ||
            msg.find("registry") != std::string::npos)
            return 2;
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
