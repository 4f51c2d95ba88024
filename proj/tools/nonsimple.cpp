// Command-line front end: family scans, single-parameter classification,
// report tables, bound evaluation, symplectic verification and invariants.
#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <iostream>

#include "nonsimple/harness.hpp"
#include "nonsimple/igusa.hpp"
#include "nonsimple/symplectic.hpp"

using namespace nonsimple;

namespace {

struct BoundFlags {
    unsigned g = 2, d = 1, dK = 1;
    double kappa = 4.0, c = 1.0, Ciota = 1.0, Cprime = 1.0;
    unsigned long ell0 = 5;

    void attach(CLI::App* app) {
        app->add_option("--g", g, "fiber dimension");
        app->add_option("--d", d, "degree of the family curve");
        app->add_option("--dK", dK, "degree of the base field");
        app->add_option("--kappa", kappa, "log exponent (placeholder, not effective)");
        app->add_option("--c", c, "point-count constant (placeholder)");
        app->add_option("--Ciota", Ciota, "embedding height constant (placeholder)");
        app->add_option("--Cprime", Cprime, "free exponent constant (reported only)");
        app->add_option("--ell0", ell0, "big-monodromy threshold for the level");
    }

    BoundParams params() const {
        BoundParams p;
        p.g = g;
        p.d = d;
        p.d_K = dK;
        p.kappa = kappa;
        p.c = c;
        p.C_iota = Ciota;
        p.C_prime = Cprime;
        p.ell0 = ell0;
        return p;
    }
};

void print_case_row(const std::string& name, const CaseEvaluation& ev) {
    std::printf("  %-14s ell=%-6lu cover_deg_log=%-12.6f lift_log=%-14.6f bound_log=%.6f\n",
                name.c_str(), ev.ell, ev.cover_deg_log, ev.lift_log, ev.bound_log);
}

int run_bounds(const BoundFlags& flags, const std::string& B_text, const std::string& case_name,
               unsigned gB) {
    BoundParams params = flags.params();
    double log_B = parse_log_height_bound(B_text);
    std::printf("B = e^%.6g, g = %u, d = %u, d_K = %u, kappa = %.3g (placeholder constants)\n",
                log_B, params.g, params.d, params.d_K, params.kappa);
    std::vector<CoverCase> cases;
    if (case_name.empty()) {
        cases = cover_cases(params.g);
    } else if (case_name == "diagonal") {
        cases.push_back(CoverCase::diagonal(gB ? gB : 1));
    } else if (case_name == "parabolic") {
        cases.push_back(CoverCase::parabolic());
    } else if (case_name == "fourth") {
        cases.push_back(CoverCase::fourth_power());
    } else {
        throw invalid_input_error("unknown case \"" + case_name + "\"");
    }
    for (const CoverCase& c : cases) {
        try {
            print_case_row(c.name(), evaluate_case(log_B, c, params));
        } catch (const below_threshold_error& e) {
            std::printf("  %-14s below threshold (B0 = e^%.6g)\n", c.name().c_str(), e.log_B0);
        }
    }
    try {
        std::printf("  %-14s %.6f\n", "total(log)", total_bound_log(log_B, params));
    } catch (const below_threshold_error& e) {
        std::printf("  %-14s below threshold (B0 = e^%.6g)\n", "total(log)", e.log_B0);
    }
    std::printf("  %-14s %.6f\n", "comparison(log)",
                comparison_bound_log(log_B, params.g, 1.0, 1.0));
    return 0;
}

int run_verify_symplectic(unsigned g, unsigned long ell, unsigned m) {
    auto t0 = std::chrono::steady_clock::now();
    SympModule M(g, ell, m);
    bool scaling_ok = true;
    for (unsigned j = 0; j <= m; ++j) {
        unsigned long s = 1, t = 1;
        for (unsigned i = 0; i < j; ++i)
            s *= ell;
        for (unsigned i = 0; i < m - j; ++i)
            t *= ell;
        scaling_ok = scaling_ok && verify_scaling_identity(M, s, t);
    }
    auto rep = verify_kernel_dichotomy(M);
    auto t1 = std::chrono::steady_clock::now();
    double secs = std::chrono::duration<double>(t1 - t0).count();
    std::printf("symplectic module (Z/%lu^%u)^%u\n", ell, m, 2 * g);
    std::printf("  maximal isotropic subgroups: %lu\n", rep.lagrangians);
    std::printf("  full-torsion branch:         %lu\n", rep.full_torsion_branch);
    std::printf("  isotropic-image branch:      %lu\n", rep.isotropic_branch);
    std::printf("  violations:                  %lu\n", rep.violations);
    std::printf("  scaling identity:            %s\n", scaling_ok ? "pass" : "FAIL");
    std::printf("  wall time:                   %.3f s\n", secs);
    std::printf("note: Galois stability is not modeled; the verifier checks the "
                "isotropy and nontriviality claims only.\n");
    return (rep.violations == 0 && scaling_ok) ? 0 : 1;
}

int run_invariants(const std::string& coeffs) {
    GenusTwoCurve curve(parse_coeff_list(coeffs));
    auto inv = igusa_invariants(curve);
    std::printf("I2  = %s\n", inv.I2.get_str().c_str());
    std::printf("I4  = %s\n", inv.I4.get_str().c_str());
    std::printf("I6  = %s\n", inv.I6.get_str().c_str());
    std::printf("I10 = %s\n", inv.I10.get_str().c_str());
    std::printf("I6' = %s\n", inv.I6prime.str().c_str());
    std::printf("I12 = %s\n", inv.I12.get_str().c_str());
    std::printf("j1  = %s\n", inv.j1.str().c_str());
    std::printf("j2  = %s\n", inv.j2.str().c_str());
    std::printf("j3  = %s\n", inv.j3.str().c_str());
    std::printf("H_j = %s\n", j_height(curve).get_str().c_str());
    return 0;
}

int run_classify(const std::string& coeffs, const std::string& t_text, unsigned long P_max) {
    FamilySpec fam(parse_coeff_list(coeffs));
    Rat t = Rat::parse(t_text);
    auto cls = classify_parameter(fam, t, P_max, default_k_test());
    std::printf("t = %s  H(t) = %s\n", t.str().c_str(), mult_height(t).get_str().c_str());
    std::printf("status = %s\n", status_name(cls.status).c_str());
    if (cls.certificate) {
        std::printf("certifying prime = %lu  (c1, c2) = (%lld, %lld)  k checked = %zu\n",
                    cls.certificate->p, cls.certificate->c1, cls.certificate->c2,
                    cls.certificate->k_checked.size());
    }
    std::printf("primes tested = %lu\n", cls.primes_tested);
    for (const auto& rec : cls.records)
        std::printf("  p=%-5lu N1=%-6lu N2=%-8lu c1=%-5lld c2=%lld\n", rec.p, rec.N1, rec.N2,
                    rec.c1, rec.c2);
    return 0;
}

std::vector<unsigned long> parse_grid(const std::string& text) {
    std::vector<unsigned long> grid;
    std::string cur;
    auto flush = [&]() {
        if (cur.empty())
            return;
        grid.push_back(std::stoul(cur));
        cur.clear();
    };
    for (char c : text) {
        if (c == ',')
            flush();
        else if (!isspace(static_cast<unsigned char>(c)))
            cur += c;
    }
    flush();
    if (grid.empty())
        throw invalid_input_error("empty grid");
    return grid;
}

int run_report(const std::string& in_path, const std::string& grid_text,
               const BoundFlags& flags) {
    auto records = read_csv(in_path);
    auto grid = parse_grid(grid_text);
    auto rep = report(records, grid, flags.params());
    std::printf("%-12s %-12s %-12s %-12s %-16s %-12s\n", "B", "candidates", "simple", "total",
                "total_bound_log", "comparison_log");
    for (const auto& row : rep.rows) {
        char bound[32];
        if (row.total_bound_log)
            std::snprintf(bound, sizeof bound, "%.4f", *row.total_bound_log);
        else
            std::snprintf(bound, sizeof bound, "n/a");
        std::printf("%-12lu %-12lu %-12lu %-12lu %-16s %-12.4f\n", row.B, row.candidates,
                    row.certified, row.total, bound, row.comparison_log);
    }
    if (rep.kappa_emp)
        std::printf("kappa_emp = %.4f (log(1+candidates) against log log B, grid points with "
                    "a candidate)\n",
                    *rep.kappa_emp);
    else
        std::printf("kappa_emp = n/a (no grid point with a candidate)\n");
    return 0;
}

// scan config file: "key = value" lines with '#' comments; flags win.
void apply_scan_config_file(const std::string& path, std::string& family_path,
                            unsigned long& B, unsigned long& P, std::string& mode,
                            unsigned& workers, std::string& cache, std::string& out) {
    std::ifstream in(path);
    if (!in)
        throw io_error("cannot open config file: " + path);
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos)
            line = line.substr(0, hash);
        auto eq = line.find('=');
        if (eq == std::string::npos)
            continue;
        auto strip = [](std::string s) {
            auto b = s.find_first_not_of(" \t\r");
            auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        std::string key = strip(line.substr(0, eq));
        std::string value = strip(line.substr(eq + 1));
        if (key == "family")
            family_path = value;
        else if (key == "height-bound")
            B = std::stoul(value);
        else if (key == "primes")
            P = std::stoul(value);
        else if (key == "height-mode")
            mode = value;
        else if (key == "workers")
            workers = static_cast<unsigned>(std::stoul(value));
        else if (key == "cache")
            cache = value;
        else if (key == "out")
            out = value;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"non-simple fiber census and bound toolkit for genus-2 families"};
    app.require_subcommand(1);

    // scan
    auto* scan = app.add_subcommand("scan", "classify every parameter of bounded height");
    std::string scan_family, scan_mode = "parameter", scan_cache, scan_out, scan_config;
    unsigned long scan_B = 0, scan_P = 0;
    unsigned scan_workers = 1;
    scan->add_option("--config", scan_config, "config file with key = value lines");
    scan->add_option("--family", scan_family, "family file (f = c4,...,c0)");
    scan->add_option("--height-bound", scan_B, "height bound B");
    scan->add_option("--primes", scan_P, "prime bound P_max");
    scan->add_option("--height-mode", scan_mode, "parameter | j-proxy");
    scan->add_option("--workers", scan_workers, "worker threads");
    scan->add_option("--cache", scan_cache, "append-only cache path");
    scan->add_option("--out", scan_out, "output CSV path");

    // classify
    auto* classify = app.add_subcommand("classify", "classify a single parameter");
    std::string cls_f, cls_t;
    unsigned long cls_P = 100;
    classify->add_option("--f", cls_f, "family coefficients c4,...,c0")->required();
    classify->add_option("--t", cls_t, "parameter, as a/b")->required();
    classify->add_option("--primes", cls_P, "prime bound P_max");

    // report
    auto* rep = app.add_subcommand("report", "census counts and bound curves from a scan CSV");
    std::string rep_in, rep_grid;
    BoundFlags rep_flags;
    rep->add_option("--in", rep_in, "scan CSV")->required();
    rep->add_option("--grid", rep_grid, "comma-separated height grid")->required();
    rep_flags.attach(rep);

    // bounds
    auto* bnd = app.add_subcommand("bounds", "evaluate the bound pipeline in log space");
    std::string bnd_B, bnd_case;
    unsigned bnd_gB = 0;
    BoundFlags bnd_flags;
    bnd->add_option("--B", bnd_B, "height bound, eN for e^N or a plain number")->required();
    bnd->add_option("--case", bnd_case, "diagonal | parabolic | fourth (default: all)");
    bnd->add_option("--gB", bnd_gB, "gB for the diagonal case");
    bnd_flags.attach(bnd);

    // verify symplectic
    auto* verify = app.add_subcommand("verify", "brute-force verification reports");
    auto* vsymp = verify->add_subcommand("symplectic", "kernel dichotomy + scaling identity");
    unsigned vs_g = 1, vs_m = 2;
    unsigned long vs_ell = 2;
    vsymp->add_option("--g", vs_g, "g")->required();
    vsymp->add_option("--ell", vs_ell, "prime ell")->required();
    vsymp->add_option("--m", vs_m, "exponent m")->required();
    verify->require_subcommand(1);

    // invariants
    auto* invs = app.add_subcommand("invariants", "Igusa-Clebsch invariants and j-height");
    std::string inv_f;
    invs->add_option("--f", inv_f, "model coefficients c6,...,c0 or c5,...,c0")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (scan->parsed()) {
            if (!scan_config.empty()) {
                std::string cfg_family, cfg_mode, cfg_cache, cfg_out;
                unsigned long cfg_B = 0, cfg_P = 0;
                unsigned cfg_workers = 0;
                apply_scan_config_file(scan_config, cfg_family, cfg_B, cfg_P, cfg_mode,
                                       cfg_workers, cfg_cache, cfg_out);
                if (scan_family.empty())
                    scan_family = cfg_family;
                if (scan_B == 0)
                    scan_B = cfg_B;
                if (scan_P == 0)
                    scan_P = cfg_P;
                if (scan_mode == "parameter" && !cfg_mode.empty())
                    scan_mode = cfg_mode;
                if (scan_workers == 1 && cfg_workers)
                    scan_workers = cfg_workers;
                if (scan_cache.empty())
                    scan_cache = cfg_cache;
                if (scan_out.empty())
                    scan_out = cfg_out;
            }
            if (scan_family.empty() || scan_B == 0 || scan_P == 0 || scan_out.empty())
                throw invalid_input_error(
                    "scan needs --family, --height-bound, --primes and --out");
            ScanConfig cfg{load_family_file(scan_family)};
            cfg.B_max = scan_B;
            cfg.P_max = scan_P;
            cfg.workers = scan_workers;
            cfg.cache_path = scan_cache;
            cfg.out_path = scan_out;
            if (scan_mode == "parameter")
                cfg.height_mode = HeightMode::parameter;
            else if (scan_mode == "j-proxy")
                cfg.height_mode = HeightMode::j_proxy;
            else
                throw invalid_input_error("height-mode must be parameter or j-proxy");
            ScanStats stats;
            auto records = run_scan(cfg, &stats);
            unsigned long cand = 0, simple = 0, degen = 0;
            for (const auto& r : records) {
                if (r.status == Classification::Status::candidate_non_simple)
                    ++cand;
                else if (r.status == Classification::Status::certified_simple)
                    ++simple;
                else
                    ++degen;
            }
            std::printf("scanned %zu parameters: %lu simple, %lu candidate, %lu degenerate\n",
                        records.size(), simple, cand, degen);
            std::printf("computed %lu, cache hits %lu; wrote %s\n", stats.computed,
                        stats.cache_hits, cfg.out_path.c_str());
            return 0;
        }
        if (classify->parsed())
            return run_classify(cls_f, cls_t, cls_P);
        if (rep->parsed())
            return run_report(rep_in, rep_grid, rep_flags);
        if (bnd->parsed())
            return run_bounds(bnd_flags, bnd_B, bnd_case, bnd_gB);
        if (verify->parsed())
            return run_verify_symplectic(vs_g, vs_ell, vs_m);
        if (invs->parsed())
            return run_invariants(inv_f);
    } catch (const degenerate_parameter_error& e) {
        std::fprintf(stderr, "degenerate: %s\n", e.what());
        return 2;
    } catch (const invalid_input_error& e) {
        std::fprintf(stderr, "invalid input: %s\n", e.what());
        return 2;
    } catch (const resource_limit_error& e) {
        std::fprintf(stderr, "resource limit: %s\n", e.what());
        return 3;
    } catch (const io_error& e) {
        std::fprintf(stderr, "i/o error: %s\n", e.what());
        return 4;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
