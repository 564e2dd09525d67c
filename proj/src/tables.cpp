#include "hcc/tables.hpp"

#include "hcc/combinatorics.hpp"

#include <algorithm>
#include <sstream>

namespace hcc {

namespace {

Rat rr(long long num, long long den) { return make_rat(num, den); }

Int ipow(long long base, long long exp) {
    Int r = 1;
    for (long long i = 0; i < exp; ++i) r *= base;
    return r;
}

}  // namespace

std::vector<Table1Row> table1_data() {
    Design d = trivial_design(6, 5);
    std::vector<Table1Row> rows;
    {
        Hpda h = build_design_hpda(d, 2, 4);
        auto p = hpda_scheme_point(h);
        rows.push_back({"none", {}, p.m1, p.m2, p.R1, p.R2, design_hpda_r2_bound(d, 2, 4)});
    }
    for (const auto& name :
         {"inner-5-5-1-10", "inner-5-5-2-7", "inner-5-5-3-4", "inner-5-5-4-1"}) {
        Pda inner = builtin_pda(name);
        Hpda h = build_design_hpda_with_inner(d, 2, 4, inner);
        auto p = hpda_scheme_point(h);
        rows.push_back({name, {inner.K, inner.F, inner.Z, inner.S}, p.m1, p.m2, p.R1, p.R2,
                        design_hpda_r2_bound_with_inner(d, 2, 4, inner)});
    }
    return rows;
}

std::vector<Table2Row> table2_data() {
    Design d = trivial_design(10, 9);
    std::vector<Table2Row> rows;
    for (int i = 1; i <= 7; ++i) {
        Hpda h = build_design_hpda(d, i, 7);
        auto p = hpda_scheme_point(h);
        rows.push_back({i, h.F, p.m1, p.m2, p.R1, p.R2, design_hpda_r2_bound(d, i, 7)});
    }
    return rows;
}

std::vector<AchievablePoint> table2_achievable_points() {
    std::vector<AchievablePoint> pts;
    for (const auto& row : table2_data()) {
        AchievablePoint p;
        p.m1 = row.m1;
        p.m2 = row.m2;
        p.R1 = row.R1;
        p.R2 = row.R2;
        p.source = "i=" + std::to_string(row.i);
        pts.push_back(std::move(p));
    }
    return pts;
}

namespace {

Table3Row proposed_row_from_design(const std::string& label, const Design& d, int i, int j) {
    Hpda h = build_design_hpda(d, i, j);
    auto p = hpda_scheme_point(h);
    Table3Row row;
    row.scheme = label;
    row.K1 = h.K1;
    row.K2 = h.K2;
    row.F = Int(h.F);
    row.m1 = p.m1;
    row.m2 = p.m2;
    row.R1 = p.R1;
    row.R2 = p.R2;
    row.has_r2_bound = true;
    row.r2_bound = design_hpda_r2_bound(d, i, j);
    return row;
}

Table3Row baseline_row(const std::string& label, long long K1, long long K2, const Rat& m1,
                       const Rat& m2, const BaselinePoint& bp) {
    Table3Row row;
    row.scheme = label;
    row.K1 = K1;
    row.K2 = K2;
    row.F = bp.F;
    row.m1 = m1;
    row.m2 = m2;
    row.R1 = bp.R1;
    row.R2 = bp.R2;
    return row;
}

}  // namespace

std::vector<Table3Row> table3_data() {
    std::vector<Table3Row> rows;
    // Block 1: the 3-(8,4,1) design lift with j=3, i=2 (14 mirrors, 4 users each).
    {
        Design d = builtin_design("sqs-8-4-1");
        rows.push_back(proposed_row_from_design("proposed (3-(8,4,1), j=3, i=2)", d, 2, 3));
        long long K1 = 14, K2 = 4;
        Rat m1 = rr(11, 14), m2 = rr(3, 28), N = rr(56, 1);
        auto [a, b] = knmd_optimal_ab(m1, m2, K2);
        auto kn = knmd_point(K1, K2, m1, m2, a, b, N);
        auto r = baseline_row("composite split (a*=11/14, b*=1/4)", K1, K2, m1, m2, kn);
        rows.push_back(r);
        rows.push_back(baseline_row("mirror-only split (a=b=1)", K1, K2, m1, m2,
                                    scheme_a_point(K1, K2, m1, m2, N)));
        rows.push_back(baseline_row("bypass split (a=b=0)", K1, K2, m1, m2,
                                    scheme_b_point(K1, K2, m2, N)));
    }
    // Block 2: the complete-design lift n=7, k=6, j=5, i=1 (7 mirrors, 6 users each).
    {
        rows.push_back(
            proposed_row_from_design("proposed (n=7, k=6, j=5, i=1)", trivial_design(7, 6), 1, 5));
        long long K1 = 7, K2 = 6;
        Rat m1 = rr(1, 7), m2 = rr(1, 7), N = rr(42, 1);
        auto [a, b] = knmd_optimal_ab(m1, m2, K2);
        rows.push_back(baseline_row("composite split (a*=b*=1/7)", K1, K2, m1, m2,
                                    knmd_point(K1, K2, m1, m2, a, b, N)));
        rows.push_back(baseline_row("mirror-only split (a=b=1)", K1, K2, m1, m2,
                                    scheme_a_point(K1, K2, m1, m2, N)));
        rows.push_back(baseline_row("bypass split (a=b=0)", K1, K2, m1, m2,
                                    scheme_b_point(K1, K2, m2, N)));
    }
    // Block 3: memory sharing into the small-memory regime (m1=1/14, m2=1/15).
    {
        long long K1 = 7, K2 = 6;
        Rat N = rr(42, 1);
        auto triv = trivial_points(N, K2)[0];
        AchievablePoint p1, p2;
        {
            auto q = hpda_scheme_point(build_design_hpda(trivial_design(7, 6), 1, 5));
            p1 = {q.m1, q.m2, q.R1, q.R2, "i=1"};
            q = hpda_scheme_point(build_design_hpda(trivial_design(7, 6), 2, 5));
            p2 = {q.m1, q.m2, q.R1, q.R2, "i=2"};
        }
        AchievablePoint shared = share3(triv, p1, p2, rr(3, 5), rr(3, 10));
        // Same combination with the components' R2 bounds instead of the
        // realized values.
        AchievablePoint b1 = p1, b2 = p2;
        b1.R2 = design_hpda_r2_bound(trivial_design(7, 6), 1, 5);
        b2.R2 = design_hpda_r2_bound(trivial_design(7, 6), 2, 5);
        AchievablePoint shared_bound = share3(triv, b1, b2, rr(3, 5), rr(3, 10));
        Table3Row row;
        row.scheme = "proposed + memory sharing (0.6/0.3/0.1)";
        row.K1 = K1;
        row.K2 = K2;
        row.F = Int(21);  // largest component subpacketization
        row.m1 = shared.m1;
        row.m2 = shared.m2;
        row.R1 = shared.R1;
        row.R2 = shared.R2;
        row.has_r2_bound = true;
        row.r2_bound = shared_bound.R2;
        row.note = shared.source;
        rows.push_back(row);

        Rat m1 = rr(1, 14), m2 = rr(1, 15);
        auto [a, b] = knmd_optimal_ab(m1, m2, K2);
        rows.push_back(baseline_row("composite split (a*=5/33, b*=0)", K1, K2, m1, m2,
                                    knmd_point(K1, K2, m1, m2, a, b, N)));
        rows.push_back(baseline_row("mirror-only split (a=b=1)", K1, K2, m1, m2,
                                    scheme_a_point(K1, K2, m1, m2, N)));
        rows.push_back(baseline_row("bypass split (a=b=0)", K1, K2, m1, m2,
                                    scheme_b_point(K1, K2, m2, N)));
    }
    return rows;
}

namespace {

Table4Row proposed_row4(const std::string& label, const Design& d, int i, int j) {
    Hpda h = build_design_hpda(d, i, j);
    auto p = hpda_scheme_point(h);
    Table4Row row;
    row.scheme = label;
    row.K1 = h.K1;
    row.K2 = h.K2;
    row.F = Int(h.F);
    row.m1 = p.m1;
    row.m2 = p.m2;
    row.R1 = p.R1;
    row.R2 = p.R2;
    row.has_r2_bound = true;
    row.r2_bound = design_hpda_r2_bound(d, i, j);
    row.r2_realized = p.R2;
    return row;
}

Table4Row pair_row4(const std::string& label, const PdaParams& A, const PdaParams& B) {
    PairPoint p = pair_scheme_point(A, B);
    Table4Row row;
    row.scheme = label;
    row.K1 = A.K;
    row.K2 = B.K;
    row.F = p.F;
    row.m1 = p.m1;
    row.m2 = p.m2;
    row.R1 = p.R1;
    row.R2 = p.R2;
    return row;
}

}  // namespace

std::vector<Table4Row> table4_data() {
    std::vector<Table4Row> rows;
    rows.push_back(proposed_row4("proposed (3-(8,4,1), j=2, i=1)",
                                 builtin_design("sqs-8-4-1"), 1, 2));
    rows.push_back(pair_row4("paired arrays (14,2,1,7)x(6,4,1,11)", {14, 2, 1, 7}, {6, 4, 1, 11}));
    rows.push_back(proposed_row4("proposed (n=8, k=6, j=2, i=1)", trivial_design(8, 6), 1, 2));
    rows.push_back(
        pair_row4("paired arrays (28,4,1,42)x(15,2,1,8)", {28, 4, 1, 42}, {15, 2, 1, 8}));
    rows.push_back(proposed_row4("proposed (n=9, k=6, j=3, i=1)", trivial_design(9, 6), 1, 3));
    rows.push_back(
        pair_row4("paired arrays (84,3,1,84)x(20,3,1,21)", {84, 3, 1, 84}, {20, 3, 1, 21}));
    rows.push_back(proposed_row4("proposed (n=8, k=7, j=4, i=4)", trivial_design(8, 7), 4, 4));
    rows.push_back(
        pair_row4("paired arrays (8,2,1,4)x(35,35,17,210)", {8, 2, 1, 4}, {35, 35, 17, 210}));
    rows.push_back(pair_row4("paired arrays (8,70,35,56)x(35,35,17,210)", {8, 70, 35, 56},
                             {35, 35, 17, 210}));
    rows.push_back(proposed_row4("proposed (n=8, k=7, j=6, i=4)", trivial_design(8, 7), 4, 6));
    rows.push_back(
        pair_row4("paired arrays (8,70,35,56)x(7,21,6,35)", {8, 70, 35, 56}, {7, 21, 6, 35}));
    rows.push_back(
        pair_row4("paired arrays (8,8,4,8)x(7,21,6,35)", {8, 8, 4, 8}, {7, 21, 6, 35}));
    return rows;
}

std::vector<Table5Row> table5_data(long long q) {
    std::vector<Table5Row> rows;
    auto R = [](const Int& num, const Int& den) { return Rat(num, den); };
    Int q2 = Int(q) * q;
    {
        Table5Row r;
        r.scheme = "proposed";
        r.F = binom(q * q, q);
        r.R1 = R(2 * q * (q2 - q - 1) * (q - 1), Int((q + 1) * (q + 2)));
        r.R2 = R((3 * q2 - 1) * (q - 1), Int(q * (q + 1)));
        rows.push_back(r);
    }
    {
        Table5Row r;
        r.scheme = "composite split";
        r.F = binom(q * q * (q * q - 1), q * q * (q - 1));
        Int den = 1 + q2 * (q - 1);
        r.R1 = R(q2 * (q - 1) * (q - 1), den);
        r.R2 = Rat(Int(q - 1));
        rows.push_back(r);
    }
    {
        Table5Row r;
        r.scheme = "mirror-only split";
        r.F = binom(q * q, q);
        r.R1 = Rat(Int(q * (q - 1) * (q - 1)));
        r.R2 = Rat(Int(q - 1));
        rows.push_back(r);
    }
    {
        Table5Row r;
        r.scheme = "bypass split";
        r.F = binom(q * q * (q * q - 1), q * q * (q - 1));
        r.R1 = R(Int(q) * q2 * (q - 1), 1 + q2 * (q - 1));
        r.R2 = Rat(Int(q - 1));
        rows.push_back(r);
    }
    {
        Table5Row r;  // single-array lift (loads are approximations in the source)
        r.scheme = "single-array lift";
        r.F = binom(q * q * (q * q - 1), q * (q - 1) * (2 * q + 1));
        r.R1 = R(q2 - q - 1, Int(2 * q + 1));
        r.R2 = r.R1;
        rows.push_back(r);
    }
    {
        Table5Row r;
        r.scheme = "paired arrays";
        r.F = ipow(q, q - 1) * ipow(q + 1, q - 2);
        r.R1 = Rat(Int(q * (q - 1)));
        r.R2 = Rat(Int(q));
        rows.push_back(r);
    }
    {
        Table5Row r;
        r.scheme = "joint caching";
        r.F = binom(q * q, q) * binom(q * q - 1, q - 1);
        r.R1 = R(q2 * (q - 1) * (q - 1), Int(q + 1));
        r.R2 = Rat(Int(q - 1));
        rows.push_back(r);
    }
    return rows;
}

namespace {

std::vector<FigRow> fig_families() {
    std::vector<FigRow> rows;
    const int n = 12;
    // Complete-design family: k=11, j=10, i=1..10; K = 132 users.
    for (long long i = 1; i <= 10; ++i) {
        FigRow r;
        r.family = "proposed";
        r.K = 132;
        long long F = binom_ll(n, i);
        r.Z = F - binom_ll(10, i);
        r.S = Int(2) * binom(n, 10 - i);
        r.F = Int(F);
        r.x = make_rat(r.Z, F);
        r.load = Rat(r.S, Int(F));
        r.param = i;
        rows.push_back(r);
    }
    // Classic single-layer scheme at K=132: integer cache points t.
    for (long long t = 1; t <= 131; ++t) {
        FigRow r;
        r.family = "man";
        r.K = 132;
        r.F = binom(132, t);
        r.Z = 0;  // row pattern: C(131,t-1) stars per column
        r.S = binom(132, t + 1);
        r.x = make_rat(t, 132);
        r.load = make_rat(132 - t, t + 1);
        r.param = t;
        rows.push_back(r);
    }
    // Bipartite strong-edge-coloring family (a=t=1, b=2..11).
    for (long long b = 2; b <= 11; ++b) {
        FigRow r;
        r.family = "jeqi";
        r.K = 132;
        long long F = binom_ll(n, b - 1);
        r.Z = F - binom_ll(10, b - 1);
        r.S = binom(n, b + 1) * Int(b + 1);
        r.F = Int(F);
        r.x = make_rat(r.Z, F);
        r.load = Rat(r.S, Int(F));
        r.param = b;
        rows.push_back(r);
    }
    // Concatenating-construction family (a=t=1, b=2..10).
    for (long long b = 2; b <= 10; ++b) {
        FigRow r;
        r.family = "zcj";
        r.K = 132;
        long long F = binom_ll(n, b + 1);
        r.Z = F - binom_ll(10, b - 1);
        r.S = binom(n, b) * Int(b);
        r.F = Int(F);
        r.x = make_rat(r.Z, F);
        r.load = Rat(r.S, Int(F));
        r.param = b;
        rows.push_back(r);
    }
    // Union-of-subsets family (m=12, t=2, w=1, s=2..11).
    for (long long s = 2; s <= 11; ++s) {
        FigRow r;
        r.family = "mwzw";
        r.K = 132;
        long long F = binom_ll(n, s);
        r.Z = F - binom_ll(10, s - 1);
        r.S = binom(n, s);
        r.F = Int(F);
        r.x = make_rat(r.Z, F);
        r.load = Rat(r.S, Int(F));
        r.param = s;
        rows.push_back(r);
    }
    return rows;
}

}  // namespace

std::vector<FigRow> fig7_data() { return fig_families(); }
std::vector<FigRow> fig8_data() { return fig_families(); }

std::vector<Fig6Row> fig6_data(int grid) {
    auto pts = table2_achievable_points();
    Rat N = 360;
    for (auto& p : trivial_points(N, 36)) pts.push_back(p);
    std::vector<Fig6Row> out;
    for (int a = 0; a <= grid; ++a)
        for (int b = 0; b <= grid; ++b) {
            Rat m1 = Rat(Int(a) * 7, Int(grid) * 10);  // sweep 0 .. 7/10
            Rat m2 = Rat(Int(b), Int(grid));
            auto env = lower_envelope(pts, m1, m2);
            if (!env) continue;
            std::ostringstream os;
            for (size_t i = 0; i < env->support.size(); ++i) {
                if (i) os << " + ";
                os << env->support[i].first << "*" << rat_to_string(env->support[i].second);
            }
            out.push_back({m1, m2, env->T, os.str()});
        }
    return out;
}

std::string TableDoc::to_text() const {
    std::vector<size_t> w(header.size(), 0);
    for (size_t c = 0; c < header.size(); ++c) w[c] = header[c].size();
    for (const auto& row : rows)
        for (size_t c = 0; c < row.size() && c < w.size(); ++c)
            w[c] = std::max(w[c], row[c].size());
    std::ostringstream os;
    os << title << "\n";
    auto emit = [&](const std::vector<std::string>& row) {
        for (size_t c = 0; c < row.size(); ++c) {
            os << row[c];
            if (c + 1 < row.size()) os << std::string(w[c] - row[c].size() + 2, ' ');
        }
        os << "\n";
    };
    emit(header);
    for (const auto& row : rows) emit(row);
    return os.str();
}

std::string TableDoc::to_csv() const {
    std::ostringstream os;
    for (size_t c = 0; c < header.size(); ++c) os << (c ? "," : "") << header[c];
    os << "\n";
    for (const auto& row : rows) {
        for (size_t c = 0; c < row.size(); ++c) os << (c ? "," : "") << row[c];
        os << "\n";
    }
    return os.str();
}

namespace {

std::string fmt_rat(const Rat& r) { return rat_to_string(r) + " (" + to_decimal(r, 4) + ")"; }

std::string fmt_int(const Int& v) {
    if (v < Int(10000000)) return v.str();
    return to_sci(v, 4);
}

}  // namespace

TableDoc render_table1() {
    TableDoc doc;
    doc.title = "Second-layer trade-offs for the 5-(6,5,1) lift (j=4, i=2)";
    doc.header = {"inner", "M2/N", "R2", "R2 bound"};
    for (const auto& r : table1_data())
        doc.rows.push_back({r.inner, fmt_rat(r.m2), fmt_rat(r.R2), fmt_rat(r.r2_bound)});
    return doc;
}

TableDoc render_table2() {
    TableDoc doc;
    doc.title = "Complete-design lift n=10, k=9, j=7 (K1=10, K2=36)";
    doc.header = {"i", "F", "M1/N", "M2/N", "R1", "R2", "T", "R2 bound"};
    for (const auto& r : table2_data())
        doc.rows.push_back({std::to_string(r.i), std::to_string(r.F), fmt_rat(r.m1),
                            fmt_rat(r.m2), fmt_rat(r.R1), fmt_rat(r.R2), fmt_rat(r.T()),
                            fmt_rat(r.r2_bound)});
    return doc;
}

TableDoc render_table3() {
    TableDoc doc;
    doc.title = "Comparison with composite-split baselines";
    doc.header = {"scheme", "K1", "K2", "M1/N", "M2/N", "F", "R1", "R2", "T", "R2 bound"};
    for (const auto& r : table3_data())
        doc.rows.push_back({r.scheme, std::to_string(r.K1), std::to_string(r.K2), fmt_rat(r.m1),
                            fmt_rat(r.m2), fmt_int(r.F), fmt_rat(r.R1), fmt_rat(r.R2),
                            fmt_rat(r.T()),
                            r.has_r2_bound ? fmt_rat(r.r2_bound) : std::string("-")});
    return doc;
}

TableDoc render_table4() {
    TableDoc doc;
    doc.title = "Comparison with paired-array schemes";
    doc.header = {"scheme", "K1", "K2", "M1/N", "M2/N", "F", "R1", "R2", "T", "R2 bound"};
    for (const auto& r : table4_data())
        doc.rows.push_back({r.scheme, std::to_string(r.K1), std::to_string(r.K2), fmt_rat(r.m1),
                            fmt_rat(r.m2), fmt_int(r.F), fmt_rat(r.R1), fmt_rat(r.R2),
                            fmt_rat(r.T()),
                            r.has_r2_bound ? fmt_rat(r.r2_bound) : std::string("-")});
    return doc;
}

TableDoc render_table5(long long q) {
    TableDoc doc;
    doc.title = "Closed-form comparison at K1=q^2, K2=q^2-1, M1/N=1/q, M2/N=1/(q+1), q=" +
                std::to_string(q);
    doc.header = {"scheme", "F", "R1", "R2", "T"};
    for (const auto& r : table5_data(q))
        doc.rows.push_back({r.scheme, fmt_int(r.F), fmt_rat(r.R1), fmt_rat(r.R2),
                            fmt_rat(r.T())});
    return doc;
}

TableDoc render_fig6(int grid) {
    TableDoc doc;
    doc.title = "Memory-sharing envelope, K1=10, K2=36, N=360";
    doc.header = {"M1/N", "M2/N", "T", "support"};
    for (const auto& r : fig6_data(grid))
        doc.rows.push_back({to_decimal(r.m1, 4), to_decimal(r.m2, 4), to_decimal(r.T, 4),
                            r.support});
    return doc;
}

namespace {

TableDoc render_fig(bool load_column) {
    TableDoc doc;
    doc.title = "Single-layer comparison at K=132, N=132";
    doc.header = {"family", "param", "M/N", load_column ? "R" : "F", "K", "Z", "S"};
    for (const auto& r : fig7_data())
        doc.rows.push_back({r.family, std::to_string(r.param), to_decimal(r.x, 6),
                            load_column ? to_decimal(r.load, 6) : fmt_int(r.F),
                            std::to_string(r.K), std::to_string(r.Z), fmt_int(r.S)});
    return doc;
}

}  // namespace

TableDoc render_fig7() { return render_fig(true); }
TableDoc render_fig8() { return render_fig(false); }

}  // namespace hcc
