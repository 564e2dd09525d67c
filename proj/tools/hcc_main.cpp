// hcc — build, validate and evaluate hierarchical coded-caching arrays.
#include <CLI11.hpp>

#include "hcc/baselines.hpp"
#include "hcc/combinatorics.hpp"
#include "hcc/design.hpp"
#include "hcc/envelope.hpp"
#include "hcc/hpda.hpp"
#include "hcc/pda.hpp"
#include "hcc/sim.hpp"
#include "hcc/tables.hpp"

#include <fstream>
#include <iostream>

namespace {

using namespace hcc;

void write_out(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open " + path);
    os << text;
    std::cout << "wrote " << path << "\n";
}

int report_result(const Report& rep, const std::string& what) {
    if (rep.ok()) {
        std::cout << what << ": OK\n";
        return 0;
    }
    std::cout << what << ": " << rep.violations.size() << " violation(s)\n"
              << rep.summary();
    return 1;
}

void print_pda_point(const Pda& p) {
    auto sp = pda_scheme_point(p);
    std::cout << "K=" << p.K << " F=" << p.F << " Z=" << p.Z << " S=" << p.S << "\n"
              << "M/N = " << rat_to_string(sp.m) << " (" << to_decimal(sp.m, 4) << ")\n"
              << "R   = " << rat_to_string(sp.R) << " (" << to_decimal(sp.R, 4) << ")\n";
    if (auto g = pda_regularity(p))
        std::cout << "regular: g=" << *g << "\n";
    else
        std::cout << "regular: no\n";
}

void print_hpda_point(const Hpda& h) {
    auto sp = hpda_scheme_point(h);
    std::cout << "K1=" << h.K1 << " K2=" << h.K2 << " F=" << h.F << " Z1=" << h.Z1
              << " Z2=" << h.Z2 << " S=" << h.S << " |S_m|=" << h.S_m.size() << "\n"
              << "M1/N = " << rat_to_string(sp.m1) << " (" << to_decimal(sp.m1, 4) << ")\n"
              << "M2/N = " << rat_to_string(sp.m2) << " (" << to_decimal(sp.m2, 4) << ")\n"
              << "R1   = " << rat_to_string(sp.R1) << " (" << to_decimal(sp.R1, 4) << ")\n"
              << "R2   = " << rat_to_string(sp.R2) << " (" << to_decimal(sp.R2, 4) << ")\n";
}

struct HpdaSource {
    std::string hpda;    // name or path
    std::string design;  // alternative: build from a design
    int i = 0, j = 0;
    std::string inner;

    Hpda load() const {
        if (!hpda.empty()) return load_hpda(hpda);
        Design d = load_design(design);
        if (!inner.empty()) return build_design_hpda_with_inner(d, i, j, load_pda(inner));
        return build_design_hpda(d, i, j);
    }
    void attach(CLI::App* cmd) {
        auto* a = cmd->add_option("--hpda", hpda, "two-layer array: name or JSON path");
        auto* b = cmd->add_option("--design", design, "design to lift: name or JSON path");
        cmd->add_option("--i", i, "row subset size i");
        cmd->add_option("--j", j, "column subset size j");
        cmd->add_option("--inner", inner, "inner array replacing mirror integers");
        a->excludes(b);
    }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hierarchical coded-caching toolkit"};
    app.require_subcommand(1);

    // ---- design ----------------------------------------------------------
    auto* design_cmd = app.add_subcommand("design", "block-design catalog and checks");
    design_cmd->require_subcommand(1);
    design_cmd->add_subcommand("list", "list catalog designs");
    std::string design_name;
    auto* dval = design_cmd->add_subcommand("validate", "check the defining conditions");
    dval->add_option("name", design_name, "catalog name or JSON path")->required();
    auto* dshow = design_cmd->add_subcommand("show", "print a design as JSON");
    dshow->add_option("name", design_name, "catalog name or JSON path")->required();
    std::string out_path;
    dshow->add_option("--out", out_path, "output path (default stdout)");

    // ---- pda -------------------------------------------------------------
    auto* pda_cmd = app.add_subcommand("pda", "single-layer arrays");
    pda_cmd->require_subcommand(1);
    std::string pb_design, pb_out, pb_format = "csv";
    int pb_i = 0, pb_j = 0;
    bool pb_validate = false;
    auto* pbuild = pda_cmd->add_subcommand("build", "build the design-based array");
    pbuild->add_option("--design", pb_design, "design: catalog name or JSON path")->required();
    pbuild->add_option("--i", pb_i, "row subset size")->required();
    pbuild->add_option("--j", pb_j, "column subset size")->required();
    pbuild->add_option("--out", pb_out, "write the array (default: print a summary)");
    pbuild->add_option("--format", pb_format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    pbuild->add_flag("--validate", pb_validate, "run the validator on the result");

    std::string p_name;
    bool p_serial = false;
    auto* pval = pda_cmd->add_subcommand("validate", "check conditions C1-C3");
    pval->add_option("name", p_name, "builtin name, .csv or .json path")->required();
    pval->add_flag("--serial", p_serial, "use the serial reference validator");
    auto* ppoint = pda_cmd->add_subcommand("point", "memory/load operating point");
    ppoint->add_option("name", p_name, "builtin name, .csv or .json path")->required();
    std::string pt_out;
    auto* ptrans = pda_cmd->add_subcommand("transpose", "transpose an array");
    ptrans->add_option("name", p_name, "builtin name, .csv or .json path")->required();
    ptrans->add_option("--out", pt_out, "output path (default stdout, csv)");
    long long man_users = 0, man_t = 0;
    auto* pman = pda_cmd->add_subcommand("man", "classic single-layer array");
    pman->add_option("--users", man_users, "number of users")->required();
    pman->add_option("--t", man_t, "cache parameter t")->required();
    pman->add_option("--out", pt_out, "output path (default stdout, csv)");

    // ---- hpda ------------------------------------------------------------
    auto* hpda_cmd = app.add_subcommand("hpda", "two-layer arrays");
    hpda_cmd->require_subcommand(1);
    HpdaSource hb_src;
    std::string hb_out;
    bool hb_validate = false;
    auto* hbuild = hpda_cmd->add_subcommand("build", "lift a design to two layers");
    hb_src.attach(hbuild);
    hbuild->add_option("--out", hb_out, "write the array as JSON");
    hbuild->add_flag("--validate", hb_validate, "run the validator on the result");
    HpdaSource hv_src;
    bool hv_serial = false;
    auto* hval = hpda_cmd->add_subcommand("validate", "check conditions B1-B4");
    hv_src.attach(hval);
    hval->add_flag("--serial", hv_serial, "use the serial reference validator");
    HpdaSource hp_src;
    auto* hpoint = hpda_cmd->add_subcommand("point", "memory/load operating point");
    hp_src.attach(hpoint);

    // ---- simulate --------------------------------------------------------
    HpdaSource sim_src;
    std::string demands = "auto";
    long long samples = 200;
    int files = 0, packet_bytes = 16;
    uint64_t seed = 1;
    bool sim_serial = false;
    auto* sim_cmd =
        app.add_subcommand("simulate", "run delivery and verify every user decodes");
    sim_src.attach(sim_cmd);
    sim_cmd->add_option("--demands", demands, "auto, exhaustive or sampled")
        ->check(CLI::IsMember({"auto", "exhaustive", "sampled"}));
    sim_cmd->add_option("--samples", samples, "demand vectors in sampled mode");
    sim_cmd->add_option("--files", files, "library size N (default K1*K2)");
    sim_cmd->add_option("--packet-bytes", packet_bytes, "bytes per packet");
    sim_cmd->add_option("--seed", seed, "RNG seed");
    sim_cmd->add_flag("--serial", sim_serial, "disable the parallel sweep");

    // ---- compare ---------------------------------------------------------
    std::string which;
    long long q = 4;
    bool as_csv = false;
    int grid = 10;
    auto* cmp = app.add_subcommand("compare", "reproduce the comparison tables");
    cmp->add_option("table", which, "table1..table5")
        ->required()
        ->check(CLI::IsMember({"table1", "table2", "table3", "table4", "table5"}));
    cmp->add_option("--q", q, "parameter q for table5");
    cmp->add_flag("--csv", as_csv, "emit CSV instead of aligned text");

    auto* fig = app.add_subcommand("figure-data", "data behind the figures");
    std::string fig_which;
    fig->add_option("figure", fig_which, "fig6, fig7 or fig8")
        ->required()
        ->check(CLI::IsMember({"fig6", "fig7", "fig8"}));
    fig->add_option("--grid", grid, "grid resolution for fig6");
    fig->add_flag("--csv", as_csv, "emit CSV instead of aligned text");

    // ---- envelope --------------------------------------------------------
    auto* env = app.add_subcommand("envelope", "memory-sharing lower envelope");
    std::string env_m1, env_m2;
    env->add_option("--m1", env_m1, "mirror memory ratio (rational, e.g. 3/10)");
    env->add_option("--m2", env_m2, "user memory ratio (rational)");

    CLI11_PARSE(app, argc, argv);

    auto parse_rat = [](const std::string& s) {
        auto slash = s.find('/');
        if (slash == std::string::npos) return Rat(Int(s));
        return Rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
    };

    try {
        if (design_cmd->parsed()) {
            if (design_cmd->get_subcommand("list")->parsed()) {
                for (const auto& n : builtin_design_names()) std::cout << n << "\n";
                std::cout << "trivial-<n>-<k>\n";
            } else if (dval->parsed()) {
                Design d = load_design(design_name);
                return report_result(validate_design(d), design_name);
            } else if (dshow->parsed()) {
                write_out(out_path, design_to_json(load_design(design_name)) + "\n");
            }
        } else if (pda_cmd->parsed()) {
            if (pbuild->parsed()) {
                Pda p = build_design_pda(load_design(pb_design), pb_i, pb_j);
                if (!pb_out.empty())
                    write_out(pb_out, pb_format == "csv" ? pda_to_csv(p) : pda_to_json(p));
                print_pda_point(p);
                if (pb_validate) return report_result(validate_pda(p), "array");
            } else if (pval->parsed()) {
                Pda p = load_pda(p_name);
                Report rep = p_serial ? validate_pda_serial(p) : validate_pda(p);
                return report_result(rep, p_name);
            } else if (ppoint->parsed()) {
                print_pda_point(load_pda(p_name));
            } else if (ptrans->parsed()) {
                write_out(pt_out, pda_to_csv(transpose_pda(load_pda(p_name))));
            } else if (pman->parsed()) {
                Pda p = man_pda(static_cast<int>(man_users), static_cast<int>(man_t));
                if (!pt_out.empty()) write_out(pt_out, pda_to_csv(p));
                print_pda_point(p);
            }
        } else if (hpda_cmd->parsed()) {
            if (hbuild->parsed()) {
                Hpda h = hb_src.load();
                if (!hb_out.empty()) write_out(hb_out, hpda_to_json(h));
                print_hpda_point(h);
                if (hb_validate) return report_result(validate_hpda(h), "array");
            } else if (hval->parsed()) {
                Hpda h = hv_src.load();
                Report rep = hv_serial ? validate_hpda_serial(h) : validate_hpda(h);
                return report_result(rep, "array");
            } else if (hpoint->parsed()) {
                print_hpda_point(hp_src.load());
            }
        } else if (sim_cmd->parsed()) {
            Hpda h = sim_src.load();
            SweepOptions opt;
            opt.policy = demands == "exhaustive" ? SweepOptions::Policy::Exhaustive
                         : demands == "sampled"  ? SweepOptions::Policy::Sampled
                                                 : SweepOptions::Policy::Auto;
            opt.samples = samples;
            opt.N = files;
            opt.packet_bytes = packet_bytes;
            opt.seed = seed;
            opt.parallel = !sim_serial;
            SweepResult res = run_demand_sweep(h, opt);
            std::cout << (res.exhaustive ? "exhaustive" : "sampled") << " sweep: "
                      << res.demands_run << " demand vector(s), " << res.failures
                      << " failure(s)\n"
                      << "measured R1 = " << rat_to_string(res.R1) << " ("
                      << to_decimal(res.R1, 4) << "), R2 = " << rat_to_string(res.R2)
                      << " (" << to_decimal(res.R2, 4) << ")\n";
            for (const auto& f : res.sample_failures)
                std::cout << "  user " << f.user << " packet row " << (f.packet_row + 1)
                          << ": " << f.reason << "\n";
            return res.failures == 0 ? 0 : 1;
        } else if (cmp->parsed()) {
            TableDoc doc = which == "table1"   ? render_table1()
                           : which == "table2" ? render_table2()
                           : which == "table3" ? render_table3()
                           : which == "table4" ? render_table4()
                                               : render_table5(q);
            std::cout << (as_csv ? doc.to_csv() : doc.to_text());
        } else if (fig->parsed()) {
            TableDoc doc = fig_which == "fig6"   ? render_fig6(grid)
                           : fig_which == "fig7" ? render_fig7()
                                                 : render_fig8();
            std::cout << (as_csv ? doc.to_csv() : doc.to_text());
        } else if (env->parsed()) {
            auto pts = table2_achievable_points();
            for (const auto& p : trivial_points(Rat(360), 36)) pts.push_back(p);
            if (!env_m1.empty() && !env_m2.empty()) {
                Rat m1 = parse_rat(env_m1), m2 = parse_rat(env_m2);
                auto v = lower_envelope(pts, m1, m2);
                if (!v) {
                    std::cout << "(" << rat_to_string(m1) << ", " << rat_to_string(m2)
                              << ") is outside the achievable memory region\n";
                    return 1;
                }
                std::cout << "T = " << rat_to_string(v->T) << " (" << to_decimal(v->T, 4)
                          << ")\n";
                for (const auto& [src, w] : v->support)
                    std::cout << "  " << src << " * " << rat_to_string(w) << "\n";
            } else {
                for (const auto& e : convexity_report(pts)) {
                    std::cout << e.source << ": "
                              << (e.on_envelope ? "on the envelope"
                                                : "dominated by " + e.dominating)
                              << " (T_env = " << to_decimal(e.envelope_T, 4) << ")\n";
                }
            }
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
