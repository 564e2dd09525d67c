// Acceptance harness: one line per criterion, plus notes for the documented
// bound-vs-realized and erratum cases recorded in the project decision log.
#include "hcc/baselines.hpp"
#include "hcc/combinatorics.hpp"
#include "hcc/design.hpp"
#include "hcc/envelope.hpp"
#include "hcc/hpda.hpp"
#include "hcc/pda.hpp"
#include "hcc/sim.hpp"
#include "hcc/tables.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <vector>

using namespace hcc;
using clk = std::chrono::steady_clock;

namespace {

std::vector<std::string> errs;
std::vector<std::string> notes;

void check(bool ok, const std::string& msg) {
    if (!ok) errs.push_back(msg);
}

// ---- printed-value matching -------------------------------------------------
// Published decimals mix round-half-up and truncation, and some totals are the
// sum of the two printed (already rounded) components.  A value "matches" when
// the exact rational rounds or truncates to the printed string.

Rat parse_decimal(const std::string& s) {
    auto dot = s.find('.');
    if (dot == std::string::npos) return Rat(Int(s));
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    while (digits.size() > 1 && digits.front() == '0') digits.erase(digits.begin());
    Int den = 1;
    for (size_t i = dot + 1; i < s.size(); ++i) den *= 10;
    return Rat(Int(digits), den);
}

std::string trunc_decimal(const Rat& r, int n) {
    Int scale = 1;
    for (int i = 0; i < n; ++i) scale *= 10;
    Int v = boost::multiprecision::numerator(r) * scale /
            boost::multiprecision::denominator(r);  // toward zero for positives
    std::string s = v.str();
    while (s.size() <= static_cast<size_t>(n)) s = "0" + s;
    return n == 0 ? s : s.substr(0, s.size() - n) + "." + s.substr(s.size() - n);
}

bool matches_printed(const Rat& exact, const std::string& printed) {
    auto dot = printed.find('.');
    if (dot == std::string::npos) return exact == Rat(Int(printed));
    int n = static_cast<int>(printed.size() - dot - 1);
    return to_decimal(exact, n) == printed || trunc_decimal(exact, n) == printed;
}

bool matches_total(const Rat& exact, const std::string& printed_t,
                   const std::string& printed_r1, const std::string& printed_r2) {
    if (matches_printed(exact, printed_t)) return true;
    return parse_decimal(printed_r1) + parse_decimal(printed_r2) ==
           parse_decimal(printed_t);
}

std::string trunc_sci(const Int& v, int sig) {
    std::string s = v.str();
    int exp = static_cast<int>(s.size()) - 1;
    std::string mant = s.substr(0, sig);
    std::string out = mant.substr(0, 1);
    if (sig > 1) out += "." + mant.substr(1);
    return out + "e" + std::to_string(exp);
}

bool matches_f(const Int& exact, const std::string& printed) {
    auto e = printed.find('e');
    if (e == std::string::npos) return exact == Int(printed);
    auto dot = printed.find('.');
    int sig = dot == std::string::npos ? 1 : static_cast<int>(e - dot);
    return to_sci(exact, sig) == printed || trunc_sci(exact, sig) == printed;
}

// Second-hop loads: published rows quote sometimes the realized value and
// sometimes the closed-form bound; accept either, and require realized<=bound.
bool matches_r2(const Rat& realized, const Rat& bound, const std::string& printed) {
    if (!(realized <= bound)) return false;
    return matches_printed(realized, printed) || matches_printed(bound, printed);
}

double run(const std::string& label, const std::function<void()>& body) {
    auto t0 = clk::now();
    try {
        body();
    } catch (const std::exception& e) {
        errs.push_back(std::string("exception: ") + e.what());
    }
    return std::chrono::duration<double>(clk::now() - t0).count();
}

// ---- criteria ---------------------------------------------------------------

void criterion1() {
    Hpda h = example_hpda_6x3x2();
    check(validate_hpda(h).ok(), "fixture fails validation");
    SweepOptions opt;
    opt.policy = SweepOptions::Policy::Exhaustive;
    SweepResult res = run_demand_sweep(h, opt);
    check(res.demands_run == 46656, "expected 6^6 demand vectors");
    check(res.failures == 0, "decode failures in the exhaustive sweep");
    check(res.R1 == make_rat(1, 2), "R1 != 1/2");
    check(res.R2 == make_rat(1, 2), "R2 != 1/2");
}

void criterion2() {
    {
        Pda p = build_design_pda(builtin_design("fano-7-3-1"), 1, 2);
        check(p.K == 21 && p.F == 7 && p.Z == 5 && p.S == 7,
              "point-line build parameters wrong");
        auto g = pda_regularity(p);
        check(g && *g == 6, "point-line build not 6-regular");
        check(validate_pda(p).ok(), "point-line build invalid");
        // Star pattern against the defining rule.
        Design d = builtin_design("fano-7-3-1");
        long long c = 0;
        bool stars_ok = true;
        for (const auto& blk : d.blocks)
            for (const auto& y : subsets_lex_of(blk, 2)) {
                for (int x = 1; x <= 7; ++x)
                    if (p.is_star(x - 1, c) != !(x == y[0] || x == y[1])) stars_ok = false;
                ++c;
            }
        check(stars_ok, "point-line star pattern wrong");
    }
    {
        Pda p = build_design_pda(trivial_design(6, 5), 2, 4);
        check(p.K == 30 && p.F == 15 && p.Z == 9 && p.S == 30,
              "15-row build parameters wrong");
        auto g = pda_regularity(p);
        check(g && *g == 6, "15-row build not 6-regular");
        check(validate_pda(p).ok(), "15-row build invalid");
        // Value-partition equality against the raw (alpha, value-set) labels.
        Design d = trivial_design(6, 5);
        Pda raw = p;
        std::map<std::pair<long long, std::vector<int>>, long long> alpha;
        std::map<std::pair<long long, std::vector<int>>, long long> label;
        auto rows = subsets_lex(6, 2);
        std::vector<std::vector<int>> cols;
        for (const auto& blk : d.blocks)
            for (const auto& y : subsets_lex_of(blk, 4)) cols.push_back(y);
        for (long long c = 0; c < raw.K; ++c)
            for (long long r = 0; r < raw.F; ++r) {
                if (!is_subset(rows[r], cols[c])) {
                    raw.at(r, c) = 0;
                    continue;
                }
                auto dset = set_diff(cols[c], rows[r]);
                auto key = std::make_pair(++alpha[{r, dset}], dset);
                auto [it, fresh] = label.try_emplace({key.first, key.second},
                                                     static_cast<long long>(label.size()) + 1);
                raw.at(r, c) = it->second;
            }
        check(value_partition_equal(p, raw),
              "integer encoding does not match the raw pair labels");
    }
}

void criterion3() {
    struct Expect {
        const char* inner;
        Rat m2, r2;
    };
    const Expect want[] = {{"inner-5-5-1-10", make_rat(5, 15), Rat(2)},
                           {"inner-5-5-3-4", make_rat(7, 15), make_rat(8, 5)},
                           {"inner-5-5-4-1", make_rat(8, 15), make_rat(7, 5)}};
    Design d = trivial_design(6, 5);
    for (const auto& w : want) {
        Pda inner = builtin_pda(w.inner);
        Hpda h = build_design_hpda_with_inner(d, 2, 4, inner);
        check(validate_hpda(h).ok(), std::string(w.inner) + ": lifted array invalid");
        auto p = hpda_scheme_point(h);
        Rat bound = design_hpda_r2_bound_with_inner(d, 2, 4, inner);
        check(p.m2 == w.m2, std::string(w.inner) + ": M2/N mismatch");
        check(bound == w.r2, std::string(w.inner) + ": published R2 is the bound");
        check(p.R2 <= bound, std::string(w.inner) + ": realized R2 exceeds the bound");
    }
    notes.push_back(
        "criterion 3: published R2 values equal the closed-form bound; realized "
        "message counts are smaller for lexicographically extreme blocks");
}

void criterion4() {
    auto rows = table2_data();
    check(rows.size() == 7, "expected 7 rows");
    for (const auto& r : rows) {
        long long i = r.i;
        std::ostringstream tag;
        tag << "row i=" << i << ": ";
        check(r.F == binom_ll(10, i), tag.str() + "F");
        check(r.m1 == Rat(binom(10, i) - binom(9, i), binom(10, i)), tag.str() + "M1/N");
        check(r.m2 == Rat(binom(9, i) - binom(7, i), binom(10, i)), tag.str() + "M2/N");
        check(r.R1 == Rat(3 * binom(10, 7 - i), binom(10, i)), tag.str() + "R1");
        check(r.r2_bound == Rat(3 * binom(9, 7 - i) + 36 * (binom(10, i) - binom(9, i)),
                                binom(10, i)),
              tag.str() + "R2 bound");
        check(r.R2 <= r.r2_bound, tag.str() + "realized R2 exceeds the bound");
    }
    // Printed-precision spot checks.
    const char* printed[][5] = {
        {"1", "63.00", "28.80", "91.80", "10"},  {"2", "16.80", "15.60", "32.40", "45"},
        {"3", "5.25", "13.95", "19.20", "120"},  {"4", "1.714", "15.60", "17.314", "210"},
        {"5", "0.53", "18.43", "18.96", "252"},  {"6", "0.143", "21.73", "21.873", "210"},
        {"7", "0.025", "25.22", "25.245", "120"}};
    for (int idx = 0; idx < 7; ++idx) {
        const auto& r = rows[idx];
        std::ostringstream tag;
        tag << "row i=" << r.i << " printed ";
        check(std::to_string(r.F) == printed[idx][4], tag.str() + "F");
        check(matches_printed(r.R1, printed[idx][1]), tag.str() + "R1");
        check(matches_printed(r.r2_bound, printed[idx][2]), tag.str() + "R2");
        check(matches_total(r.T_bound(), printed[idx][3], printed[idx][1],
                            printed[idx][2]),
              tag.str() + "T");
    }
    // Full validation and sampled simulation for every build (F <= 252).
    Design d = trivial_design(10, 9);
    for (int i = 1; i <= 7; ++i) {
        Hpda h = build_design_hpda(d, i, 7);
        std::ostringstream tag;
        tag << "i=" << i << ": ";
        check(validate_hpda(h).ok(), tag.str() + "lifted array invalid");
        SweepOptions opt;
        opt.policy = SweepOptions::Policy::Sampled;
        opt.samples = 200;
        opt.seed = 11 + i;
        SweepResult res = run_demand_sweep(h, opt);
        check(res.demands_run == 200, tag.str() + "expected 200 sampled demands");
        check(res.failures == 0, tag.str() + "decode failures");
    }
}

void criterion5() {
    // ---- comparison against the composite-split baselines.
    {
        auto rows = table3_data();
        check(rows.size() == 12, "expected 12 rows");
        const char* printed[][4] = {
            // F, R1, R2, T
            {"28", "0.2857", "3.285", "3.5714"},
            {"1.346e15", "0.3409", "3.107", "3.448"},
            {"364", "1", "2.9285", "3.9285"},
            {"3.247e7", "7.1428", "2.9285", "10.0713"},
            {"7", "10", "5.14285", "15.14285"},
            {"5.24e6", "4.408", "3", "7.408"},
            {"7", "18", "3", "21"},
            {"5.24e6", "5.14285", "3", "8.14285"},
            {"7", "28.5333", "5.5047", "34.038"},
            {"1.1193e5", "7.8587", "4.60", "12.4587"},
            {"7", "30", "4.60", "34.60"},
            {"1.148e4", "10.4667", "4.6", "15.0667"}};
        for (int idx = 0; idx < 12; ++idx) {
            const auto& r = rows[idx];
            std::ostringstream tag;
            tag << "comparison A row " << (idx + 1) << " printed ";
            if (idx == 8) {
                // Published F=7 for the shared row; the three component
                // subpacketizations are 1, 7 and 21 (decision log entry 17).
                notes.push_back(
                    "criterion 5: shared-row subpacketization printed as 7; the "
                    "largest component value is 21 (reported value)");
            } else {
                check(matches_f(r.F, printed[idx][0]), tag.str() + "F");
            }
            Rat bound = r.has_r2_bound ? r.r2_bound : r.R2;
            check(matches_r2(r.R2, bound, printed[idx][2]), tag.str() + "R2");
            Rat t_printed_r2 = matches_printed(r.R2, printed[idx][2]) ? r.R2 : bound;
            check(matches_total(r.R1 + t_printed_r2, printed[idx][3], printed[idx][1],
                                printed[idx][2]),
                  tag.str() + "T");
            if (idx == 9) {
                // Published first-hop value omits the K2 factor in the first
                // term of the split formula (decision log entry 1): the
                // faithful evaluation gives 8.5254.
                check(r.R1 == make_rat(4689, 550), tag.str() + "faithful R1");
                Rat first = make_rat(5, 33) *
                            man_rate(make_rat(1, 14) / make_rat(5, 33), 7, Rat(42)).rate;
                check(matches_printed(r.R1 - Rat(5) * first, printed[idx][1]),
                      tag.str() + "R1 under the documented coefficient omission");
                notes.push_back(
                    "criterion 5: comparison A row 10 published R1=7.8587 is "
                    "reproduced only by omitting a K2 factor; the faithful value "
                    "8.5254 is reported");
            } else {
                check(matches_printed(r.R1, printed[idx][1]), tag.str() + "R1");
            }
        }
    }
    // ---- comparison against the paired-array scheme.
    {
        auto rows = table4_data();
        check(rows.size() == 12, "expected 12 rows");
        const char* printed[][4] = {{"8", "3", "4", "7"},
                                    {"8", "9.625", "2.75", "12.375"},
                                    {"8", "15", "15", "30"},
                                    {"8", "42", "4", "46"},
                                    {"9", "80", "40", "120"},
                                    {"9", "196", "7", "203"},
                                    {"70", "0.057", "17.55", "17.607"},
                                    {"70", "12", "6", "18"},
                                    {"2450", "4.8", "6", "10.8"},
                                    {"70", "0.80", "4.10", "4.90"},
                                    {"1470", "1.333", "1.667", "3"},
                                    {"168", "1.667", "1.667", "3.333"}};
        for (int idx = 0; idx < 12; ++idx) {
            const auto& r = rows[idx];
            std::ostringstream tag;
            tag << "comparison B row " << (idx + 1) << " printed ";
            check(matches_f(r.F, printed[idx][0]), tag.str() + "F");
            check(matches_printed(r.R1, printed[idx][1]), tag.str() + "R1");
            Rat bound = r.has_r2_bound ? r.r2_bound : r.R2;
            check(matches_r2(r.R2, bound, printed[idx][2]), tag.str() + "R2");
            Rat t_r2 = matches_printed(r.R2, printed[idx][2]) ? r.R2 : bound;
            check(matches_total(r.R1 + t_r2, printed[idx][3], printed[idx][1],
                                printed[idx][2]),
                  tag.str() + "T");
        }
    }
    // ---- closed-form family: direct evaluation for q in {2..5}.
    for (long long q = 2; q <= 5; ++q) {
        std::ostringstream tag;
        tag << "closed forms q=" << q << ": ";
        auto rows = table5_data(q);
        long long n = q * q, k = n - 1, j = n - 2;
        Design d = trivial_design(static_cast<int>(n), static_cast<int>(k));
        auto params = design_pda_params(d, static_cast<int>(q), static_cast<int>(j));
        check(rows[0].F == binom(n, q), tag.str() + "proposed F");
        check(rows[0].R1 == make_rat(params.S, params.F), tag.str() + "proposed R1");
        check(rows[0].R2 == design_hpda_r2_bound(d, static_cast<int>(q),
                                                 static_cast<int>(j)),
              tag.str() + "proposed R2");
        Rat m1 = Rat(1, Int(q)), m2 = Rat(1, Int(q + 1));
        Rat N = Rat(Int(n) * (n - 1));
        auto kn = knmd_point(n, n - 1, m1, m2, Rat(1, Int(q)), Rat(1, Int(q)), N);
        check(kn.R1 == rows[1].R1 && kn.R2 == rows[1].R2 && kn.F == rows[1].F,
              tag.str() + "composite split");
        auto pa = scheme_a_point(n, n - 1, m1, m2, N);
        check(pa.R1 == rows[2].R1 && pa.R2 == rows[2].R2 && pa.F == rows[2].F,
              tag.str() + "mirror-only split");
        auto pb = scheme_b_point(n, n - 1, m2, N);
        check(pb.R1 == rows[3].R1 && pb.R2 == rows[3].R2 && pb.F == rows[3].F,
              tag.str() + "bypass split");
        auto jc = closed_form_two_layer_point(n, n - 1, m1, m2);
        check(jc.R1 == rows[6].R1 && jc.R2 == rows[6].R2 && jc.F == rows[6].F,
              tag.str() + "joint caching");
    }
    // ---- ordering claims for q = 5..12.
    for (long long q = 5; q <= 12; ++q) {
        auto r = table5_data(q);
        std::ostringstream tag;
        tag << "orderings q=" << q;
        bool f_ok = r[0].F == r[2].F && r[0].F < r[5].F && r[5].F < r[6].F &&
                    r[6].F < r[1].F && r[1].F == r[3].F && r[3].F < r[4].F;
        bool t_ok = r[4].T() < r[1].T() && r[1].T() < r[3].T() && r[3].T() < r[5].T() &&
                    r[5].T() < r[0].T() && r[0].T() < r[6].T() && r[6].T() < r[2].T();
        check(f_ok, tag.str() + ": subpacketization ordering");
        check(t_ok, tag.str() + ": delay ordering");
    }
}

void criterion6() {
    long long pda_count = 0, hpda_count = 0, sim_count = 0;
    for (int n = 1; n <= 8; ++n)
        for (int k = 1; k <= n; ++k) {
            Design d = trivial_design(n, k);
            for (int j = 1; j <= k; ++j)
                for (int i = 1; i <= j; ++i) {
                    std::ostringstream tag;
                    tag << "(n,k,j,i)=(" << n << "," << k << "," << j << "," << i << "): ";
                    Pda p = build_design_pda(d, i, j);
                    ++pda_count;
                    if (!validate_pda(p).ok()) {
                        errs.push_back(tag.str() + "flat array invalid");
                        continue;
                    }
                    auto g = pda_regularity(p);
                    long long want_g = binom_ll(n - j + i, i);
                    check(g && *g == want_g, tag.str() + "regularity != C(n-j+i,i)");
                    Hpda h = build_design_hpda(d, i, j);
                    ++hpda_count;
                    if (!validate_hpda(h).ok()) {
                        errs.push_back(tag.str() + "lifted array invalid");
                        continue;
                    }
                    long long sm_count = h.K1 * h.Z1 * h.K2;
                    bool sm_ok =
                        static_cast<long long>(h.S_m.size()) == sm_count &&
                        (sm_count == 0 ||
                         (h.S_m.front() == h.S + 1 && h.S_m.back() == h.S + sm_count));
                    check(sm_ok, tag.str() + "mirror integer range wrong");
                    if (h.K1 * h.K2 <= 40 && sim_count < 40) {
                        SweepOptions opt;
                        opt.policy = SweepOptions::Policy::Sampled;
                        opt.samples = 5;
                        opt.seed = 1000 + sim_count;
                        SweepResult res = run_demand_sweep(h, opt);
                        check(res.failures == 0, tag.str() + "decode failures");
                        ++sim_count;
                    }
                }
        }
    check(pda_count > 100, "unexpectedly few flat instances");
    check(hpda_count > 100, "unexpectedly few lifted instances");
    check(sim_count >= 20, "fewer than 20 simulated instances");
}

void criterion7() {
    // Exact sharing of the published three-point combination.
    Design d = trivial_design(7, 6);
    AchievablePoint triv = trivial_points(Rat(42), 6)[0];
    auto q1 = hpda_scheme_point(build_design_hpda(d, 1, 5));
    auto q2 = hpda_scheme_point(build_design_hpda(d, 2, 5));
    AchievablePoint p1{q1.m1, q1.m2, q1.R1, design_hpda_r2_bound(d, 1, 5), "i=1"};
    AchievablePoint p2{q2.m1, q2.m2, q2.R1, design_hpda_r2_bound(d, 2, 5), "i=2"};
    AchievablePoint s = share3(triv, p1, p2, make_rat(3, 5), make_rat(3, 10));
    check(s.m1 == make_rat(1, 14) && s.m2 == make_rat(1, 15), "shared memory point");
    check(to_decimal(s.R1, 4) == "28.5333", "shared R1 != 28.5333");
    check(trunc_decimal(s.R2, 4) == "5.5047", "shared R2 != 5.5047");
    check(s.R1 == make_rat(428, 15) && s.R2 == make_rat(578, 105),
          "shared point not exact");

    // Envelope self-domination for the 10x36 family.
    auto pts = table2_achievable_points();
    for (auto& t : trivial_points(Rat(360), 36)) pts.push_back(t);
    for (const auto& e : convexity_report(pts))
        check(e.on_envelope, e.source + " dominated by " + e.dominating);
    // The envelope at each family point equals the point's own delay.
    for (const auto& p : pts) {
        auto v = lower_envelope(pts, p.m1, p.m2);
        check(v.has_value() && v->T == p.T(), p.source + ": envelope value differs");
    }
}

void criterion8() {
    auto rows = fig7_data();
    std::map<std::string, std::vector<const FigRow*>> fam;
    for (const auto& r : rows) fam[r.family].push_back(&r);
    check(fam.size() == 5, "expected 5 families");
    for (auto& [name, v] : fam) {
        std::sort(v.begin(), v.end(),
                  [](const FigRow* a, const FigRow* b) { return a->x < b->x; });
        for (size_t t = 1; t < v.size(); ++t)
            check(v[t]->load <= v[t - 1]->load,
                  name + ": load increases with memory at index " + std::to_string(t));
        for (const auto* r : v) check(r->K == 132, name + ": K != 132");
    }
    // Matched-parameter subsumption: identical (K, F, Z) points of the two
    // comparable families carry at least as many integers as ours.
    long long matched_jeqi = 0, matched_zcj = 0, matched_mwzw = 0;
    for (const auto* p : fam["proposed"])
        for (const auto& other : rows) {
            if (other.family == "proposed" || other.family == "man") continue;
            if (other.F == p->F && other.Z == p->Z && other.K == p->K) {
                check(p->S <= other.S,
                      other.family + " matched point b=" + std::to_string(other.param) +
                          ": our integer count is larger");
                if (other.family == "jeqi") ++matched_jeqi;
                if (other.family == "zcj") ++matched_zcj;
                if (other.family == "mwzw") ++matched_mwzw;
            }
        }
    check(matched_jeqi == 10, "expected every sweep point matched against jeqi");
    check(matched_zcj == 9, "expected 9 matched points against zcj");
    check(matched_mwzw == 0, "the mwzw sweep family should have no matched points");
    // The i=j special case does give matched (K, F, Z) points against the
    // union-of-subsets family (decision log entry 18): n=12, s=7, w in {1,2}.
    for (long long w : {1LL, 2LL}) {
        auto params = design_pda_params(trivial_design(12, 5 + static_cast<int>(w)), 5, 5);
        check(params.K == binom_ll(12, 7) * binom_ll(7, w), "special case K");
        check(params.F == binom_ll(12, 7), "special case F");
        check(params.Z == binom_ll(12, 7) - 1, "special case Z");
        check(Int(params.S) == binom(7, w), "special case S");
        check(binom(7, w) < binom(12, w), "special case: no advantage over mwzw");
    }
    notes.push_back(
        "criterion 8: the union-of-subsets sweep family shares no (K,F,Z) points "
        "with ours (vacuously subsumed); matched points exist in the i=j special "
        "case and are checked there");
}

void criterion9() {
    {
        // Star turned into an integer: localized flat-array witness.
        Pda p = build_design_pda(builtin_design("fano-7-3-1"), 1, 2);
        long long row = -1;
        for (long long r = 0; r < p.F; ++r)
            if (p.is_star(r, 0)) {
                p.at(r, 0) = 1;
                row = r;
                break;
            }
        auto rep = validate_pda(p);
        check(!rep.ok(), "fault not detected");
        bool witness = false;
        for (const auto& v : rep.violations)
            if (v.message.find("column 1") != std::string::npos ||
                v.message.find("," + std::to_string(row + 1) + ")") != std::string::npos ||
                v.message.find("(" + std::to_string(row + 1) + ",") != std::string::npos)
                witness = true;
        check(witness, "no localized witness for the star fault");
    }
    {
        // Duplicated mirror-served integer across subarrays.
        Hpda h = build_design_hpda(builtin_design("fano-7-3-1"), 1, 2);
        long long s0 = h.S_m.front();
        bool done = false;
        for (long long r = 0; r < h.F && !done; ++r)
            for (long long c = 0; c < h.K2 && !done; ++c)
                if (h.users[1][r * h.K2 + c] > h.S) {
                    h.users[1][r * h.K2 + c] = s0;
                    done = true;
                }
        auto rep = validate_hpda(h);
        check(!rep.ok(), "duplicate fault not detected");
        bool witness = false;
        for (const auto& v : rep.violations)
            if (v.rule == "B3" &&
                v.message.find(std::to_string(s0)) != std::string::npos)
                witness = true;
        check(witness, "no localized witness for the duplicate fault");
    }
    {
        // Zeroed transcript message: decoder names the user and packet.
        Hpda h = example_hpda_6x3x2();
        Library lib = make_library(6, h.F, 16, 5);
        Demand d = {1, 0, 4, 3, 2, 5};
        Transcript tr = deliver(h, lib, d);
        // Users decode from their attached mirror's messages.
        std::fill(tr.per_mirror[0][0].payload.begin(), tr.per_mirror[0][0].payload.end(),
                  uint8_t{0});
        auto rep = decode_all(h, lib, place(h), tr, d);
        check(!rep.ok, "zeroed message not detected");
        check(!rep.failures.empty() && rep.failures.front().user >= 0 &&
                  rep.failures.front().packet_row >= 0,
              "decode witness lacks user/packet coordinates");
    }
}

}  // namespace

int main() {
    struct Entry {
        int id;
        const char* what;
        std::function<void()> body;
        double limit;  // seconds; 0 = no limit asserted
    };
    const Entry entries[] = {
        {1, "worked fixture: validation + exhaustive decode, R1=R2=1/2", criterion1, 1.0},
        {2, "golden builds: parameters, regularity, star patterns, labels", criterion2,
         2.0},
        {3, "second-layer trade-off points for the three published seeds", criterion3, 0},
        {4, "10x36 family: exact columns, validation, sampled decode", criterion4, 60.0},
        {5, "comparison tables and closed-form family with orderings", criterion5, 0},
        {6, "property sweep over all (n,k,j,i) with n <= 8", criterion6, 300.0},
        {7, "memory sharing exactness and envelope self-domination", criterion7, 0},
        {8, "figure families: monotone loads and matched-point subsumption", criterion8,
         0},
        {9, "fault injection produces localized witnesses", criterion9, 0},
    };
    int failed = 0;
    for (const auto& e : entries) {
        errs.clear();
        double secs = run(e.what, e.body);
        if (e.limit > 0 && secs > e.limit)
            errs.push_back("runtime " + std::to_string(secs) + "s exceeds " +
                           std::to_string(e.limit) + "s");
        std::ostringstream line;
        line << (errs.empty() ? "[PASS]" : "[FAIL]") << " criterion " << e.id << ": "
             << e.what << " (" << static_cast<int>(secs * 1000) << " ms)";
        std::cout << line.str() << "\n";
        for (const auto& err : errs) std::cout << "       - " << err << "\n";
        if (!errs.empty()) ++failed;
    }
    for (const auto& n : notes) std::cout << "[NOTE] " << n << "\n";
    std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) +
                                                            " criterion(s) failed")
              << "\n";
    return failed == 0 ? 0 : 1;
}
