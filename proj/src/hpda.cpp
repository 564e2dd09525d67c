#include "hcc/hpda.hpp"

#include "hcc/combinatorics.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace hcc {

std::set<long long> Hpda::subarray_integers(long long k1) const {
    std::set<long long> out;
    for (long long v : users[k1])
        if (v != 0) out.insert(v);
    return out;
}

std::set<long long> Hpda::all_integers() const {
    std::set<long long> out;
    for (long long k1 = 0; k1 < K1; ++k1) {
        auto s = subarray_integers(k1);
        out.insert(s.begin(), s.end());
    }
    return out;
}

namespace {

struct LiftContext {
    Pda base;                 // the design-built single-layer array
    long long K1, K2;
    std::vector<std::vector<long long>> star_rows;  // per subarray, rows fully starred
};

LiftContext lift_context(const Design& d, int i, int j) {
    LiftContext ctx;
    ctx.base = build_design_pda(d, i, j);
    ctx.K1 = d.b();
    ctx.K2 = binom_ll(d.k, j);
    ctx.star_rows.resize(ctx.K1);
    const auto rows = subsets_lex(d.v, i);
    for (long long k1 = 0; k1 < ctx.K1; ++k1) {
        for (long long r = 0; r < ctx.base.F; ++r) {
            // A row is fully starred in subarray k1 exactly when the row subset
            // is not contained in block k1.
            if (!is_subset(rows[r], d.blocks[k1])) ctx.star_rows[k1].push_back(r);
        }
    }
    return ctx;
}

Hpda lift_common(const Design& d, int i, int j, const Pda* inner) {
    LiftContext ctx = lift_context(d, i, j);
    const Pda& base = ctx.base;
    Hpda h;
    h.K1 = ctx.K1;
    h.K2 = ctx.K2;
    h.F = base.F;
    h.Z1 = base.F - binom_ll(d.k, i);
    h.Z2 = binom_ll(d.k, i) - binom_ll(j, i);
    h.S = base.S;

    long long local_span;  // integers added per subarray
    if (inner) {
        if (inner->F != h.Z1 || inner->K != h.K2)
            throw std::invalid_argument("inner array must be " + std::to_string(h.Z1) + " x " +
                                        std::to_string(h.K2));
        Report ir = validate_pda(*inner);
        if (!ir.ok()) throw std::invalid_argument("inner array invalid: " + ir.summary());
        h.Z2 += inner->Z;
        local_span = inner->S;
    } else {
        local_span = h.Z1 * h.K2;
    }

    h.mirror.assign(h.F * h.K1, 0);
    h.users.assign(h.K1, std::vector<long long>(h.F * h.K2, 0));
    for (long long k1 = 0; k1 < h.K1; ++k1) {
        if (static_cast<long long>(ctx.star_rows[k1].size()) != h.Z1)
            throw std::logic_error("starred-row count does not match Z1");
        for (long long r : ctx.star_rows[k1]) h.mirror[r * h.K1 + k1] = 1;
        // copy the subarray
        for (long long r = 0; r < h.F; ++r)
            for (long long c = 0; c < h.K2; ++c)
                h.users[k1][r * h.K2 + c] = base.at(r, k1 * h.K2 + c);
        // refill the fully-starred rows
        long long next = 0;
        for (size_t z = 0; z < ctx.star_rows[k1].size(); ++z) {
            long long r = ctx.star_rows[k1][z];
            for (long long c = 0; c < h.K2; ++c) {
                long long v;
                if (inner) {
                    long long iv = inner->at(static_cast<long long>(z), c);
                    v = iv == 0 ? 0 : h.S + k1 * local_span + iv;
                } else {
                    v = h.S + k1 * local_span + (++next);
                }
                h.users[k1][r * h.K2 + c] = v;
            }
        }
    }
    for (long long s = h.S + 1; s <= h.S + h.K1 * local_span; ++s) h.S_m.push_back(s);
    return h;
}

}  // namespace

Hpda build_design_hpda(const Design& d, int i, int j) { return lift_common(d, i, j, nullptr); }

Hpda build_design_hpda_with_inner(const Design& d, int i, int j, const Pda& inner) {
    return lift_common(d, i, j, &inner);
}

namespace {

void sort_report(Report& rep) {
    std::sort(rep.violations.begin(), rep.violations.end(),
              [](const Violation& a, const Violation& b) {
                  return std::tie(a.rule, a.message) < std::tie(b.rule, b.message);
              });
}

Report validate_hpda_impl(const Hpda& h, bool parallel) {
    Report rep;
    if (h.K1 < 1 || h.K2 < 1 || h.F < 1) {
        rep.add("shape", "requires K1, K2, F >= 1");
        return rep;
    }
    if (static_cast<long long>(h.mirror.size()) != h.F * h.K1 ||
        static_cast<long long>(h.users.size()) != h.K1) {
        rep.add("shape", "mirror/user buffer sizes do not match declared dimensions");
        return rep;
    }
    for (const auto& u : h.users)
        if (static_cast<long long>(u.size()) != h.F * h.K2) {
            rep.add("shape", "user subarray size does not match F*K2");
            return rep;
        }

    std::set<long long> sm(h.S_m.begin(), h.S_m.end());

    // B1: Z1 stars per mirror column.
    for (long long k1 = 0; k1 < h.K1; ++k1) {
        long long stars = 0;
        for (long long r = 0; r < h.F; ++r)
            if (h.mirror_star(r, k1)) ++stars;
        if (stars != h.Z1)
            rep.add("B1", "mirror column " + std::to_string(k1 + 1) + " has " +
                              std::to_string(stars) + " stars, expected Z1=" +
                              std::to_string(h.Z1));
    }

    // B2: each subarray is a valid PDA with Z2 stars per column; entry ranges.
    std::vector<Report> sub_reps(h.K1);
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (long long k1 = 0; k1 < h.K1; ++k1) {
        Report& r2 = sub_reps[k1];
        std::string tag = "subarray " + std::to_string(k1 + 1);
        for (long long c = 0; c < h.K2; ++c) {
            long long stars = 0;
            for (long long r = 0; r < h.F; ++r)
                if (h.user_at(k1, r, c) == 0) ++stars;
            if (stars != h.Z2)
                r2.add("B2", tag + " column " + std::to_string(c + 1) + " has " +
                                 std::to_string(stars) + " stars, expected Z2=" +
                                 std::to_string(h.Z2));
        }
        std::map<long long, std::vector<std::pair<long long, long long>>> occ;
        for (long long r = 0; r < h.F; ++r)
            for (long long c = 0; c < h.K2; ++c) {
                long long v = h.user_at(k1, r, c);
                if (v == 0) continue;
                if (v < 0 || (v > h.S && !sm.count(v)))
                    r2.add("range", tag + " cell (" + std::to_string(r + 1) + "," +
                                        std::to_string(c + 1) + ") holds " + std::to_string(v) +
                                        " outside [1,S] and not in S_m");
                occ[v].push_back({r, c});
            }
        for (const auto& [s, cells] : occ)
            for (size_t a = 0; a < cells.size(); ++a)
                for (size_t b = a + 1; b < cells.size(); ++b) {
                    auto [j1, c1] = cells[a];
                    auto [j2, c2] = cells[b];
                    std::string where = tag + " integer " + std::to_string(s) + " at (" +
                                        std::to_string(j1 + 1) + "," + std::to_string(c1 + 1) +
                                        ") and (" + std::to_string(j2 + 1) + "," +
                                        std::to_string(c2 + 1) + ")";
                    if (j1 == j2) r2.add("B2", where + ": same row");
                    else if (c1 == c2) r2.add("B2", where + ": same column");
                    else {
                        if (h.user_at(k1, j1, c2) != 0)
                            r2.add("B2", where + ": cross cell (" + std::to_string(j1 + 1) + "," +
                                             std::to_string(c2 + 1) + ") is not a star");
                        if (h.user_at(k1, j2, c1) != 0)
                            r2.add("B2", where + ": cross cell (" + std::to_string(j2 + 1) + "," +
                                             std::to_string(c1 + 1) + ") is not a star");
                    }
                }
    }
    for (auto& r : sub_reps)
        for (auto& v : r.violations) rep.violations.push_back(std::move(v));

    // Occurrences of every integer across subarrays.
    std::map<long long, std::vector<std::tuple<long long, long long, long long>>> occ_all;
    for (long long k1 = 0; k1 < h.K1; ++k1)
        for (long long r = 0; r < h.F; ++r)
            for (long long c = 0; c < h.K2; ++c) {
                long long v = h.user_at(k1, r, c);
                if (v != 0) occ_all[v].push_back({k1, r, c});
            }

    // B3: every mirror integer lives in exactly one subarray, in rows starred
    // for that mirror.
    for (long long s : sm) {
        auto it = occ_all.find(s);
        if (it == occ_all.end()) {
            rep.add("B3", "mirror integer " + std::to_string(s) + " never occurs");
            continue;
        }
        std::set<long long> subs;
        for (const auto& [k1, r, c] : it->second) {
            subs.insert(k1);
            if (!h.mirror_star(r, k1))
                rep.add("B3", "mirror integer " + std::to_string(s) + " at subarray " +
                                  std::to_string(k1 + 1) + " cell (" + std::to_string(r + 1) +
                                  "," + std::to_string(c + 1) +
                                  ") sits in a row the mirror does not cache");
        }
        if (subs.size() > 1)
            rep.add("B3", "mirror integer " + std::to_string(s) + " occurs in " +
                              std::to_string(subs.size()) + " subarrays, expected exactly one");
    }

    // B4: occurrences of a shared integer in different subarrays must see a
    // star either in the other occurrence's cross cell or in the mirror array.
    for (const auto& [s, cells] : occ_all) {
        if (sm.count(s)) continue;
        for (size_t a = 0; a < cells.size(); ++a)
            for (size_t b = a + 1; b < cells.size(); ++b) {
                auto [k1a, ja, ca] = cells[a];
                auto [k1b, jb, cb] = cells[b];
                if (k1a == k1b) continue;  // within-subarray pairs are B2's job
                std::string where = "integer " + std::to_string(s) + " at subarray " +
                                    std::to_string(k1a + 1) + " (" + std::to_string(ja + 1) +
                                    "," + std::to_string(ca + 1) + ") and subarray " +
                                    std::to_string(k1b + 1) + " (" + std::to_string(jb + 1) +
                                    "," + std::to_string(cb + 1) + ")";
                if (h.user_at(k1a, jb, ca) != 0 && !h.mirror_star(jb, k1a))
                    rep.add("B4", where + ": subarray " + std::to_string(k1a + 1) + " cell (" +
                                      std::to_string(jb + 1) + "," + std::to_string(ca + 1) +
                                      ") is an integer but mirror (" + std::to_string(jb + 1) +
                                      "," + std::to_string(k1a + 1) + ") is not a star");
                if (h.user_at(k1b, ja, cb) != 0 && !h.mirror_star(ja, k1b))
                    rep.add("B4", where + ": subarray " + std::to_string(k1b + 1) + " cell (" +
                                      std::to_string(ja + 1) + "," + std::to_string(cb + 1) +
                                      ") is an integer but mirror (" + std::to_string(ja + 1) +
                                      "," + std::to_string(k1b + 1) + ") is not a star");
            }
    }

    sort_report(rep);
    return rep;
}

}  // namespace

Report validate_hpda(const Hpda& h, bool parallel) { return validate_hpda_impl(h, parallel); }
Report validate_hpda_serial(const Hpda& h) { return validate_hpda_impl(h, false); }

HpdaPoint hpda_scheme_point(const Hpda& h) {
    HpdaPoint p;
    p.m1 = make_rat(h.Z1, h.F);
    p.m2 = make_rat(h.Z2, h.F);
    std::set<long long> sm(h.S_m.begin(), h.S_m.end());
    std::set<long long> server;
    long long max_sub = 0;
    for (long long k1 = 0; k1 < h.K1; ++k1) {
        auto sub = h.subarray_integers(k1);
        max_sub = std::max(max_sub, static_cast<long long>(sub.size()));
        for (long long s : sub)
            if (!sm.count(s)) server.insert(s);
    }
    p.R1 = make_rat(static_cast<long long>(server.size()), h.F);
    p.R2 = make_rat(max_sub, h.F);
    return p;
}

namespace {

Rat r2_bound_common(const Design& d, int i, int j, long long extra) {
    Int lj_num = Int(d.lambda) * binom(d.v - j, d.t - j);
    Int lj = lj_num / binom(d.k - j, d.t - j);
    Int num = binom(d.k, j - i) * lj + Int(extra);
    return Rat(num, binom(d.v, i));
}

}  // namespace

Rat design_hpda_r2_bound(const Design& d, int i, int j) {
    long long Z1 = binom_ll(d.v, i) - binom_ll(d.k, i);
    return r2_bound_common(d, i, j, Z1 * binom_ll(d.k, j));
}

Rat design_hpda_r2_bound_with_inner(const Design& d, int i, int j, const Pda& inner) {
    return r2_bound_common(d, i, j, inner.S);
}

Hpda example_hpda_6x3x2() {
    Hpda h;
    h.K1 = 3;
    h.K2 = 2;
    h.F = 6;
    h.Z1 = 2;
    h.Z2 = 3;
    h.S = 3;
    h.S_m = {4, 5, 6};
    auto star_col = [&](std::initializer_list<int> rows, long long k1) {
        for (int r : rows) h.mirror[(r - 1) * h.K1 + k1] = 1;
    };
    h.mirror.assign(h.F * h.K1, 0);
    star_col({1, 2}, 0);
    star_col({3, 4}, 1);
    star_col({5, 6}, 2);
    h.users = {
        {0, 4, 4, 0, 0, 1, 1, 0, 0, 2, 2, 0},
        {0, 1, 1, 0, 0, 5, 5, 0, 0, 3, 3, 0},
        {0, 2, 2, 0, 0, 3, 3, 0, 0, 6, 6, 0},
    };
    return h;
}

std::string hpda_to_json(const Hpda& h) {
    nlohmann::ordered_json j;
    j["K1"] = h.K1;
    j["K2"] = h.K2;
    j["F"] = h.F;
    j["Z1"] = h.Z1;
    j["Z2"] = h.Z2;
    j["S"] = h.S;
    auto& mir = j["mirror"] = nlohmann::ordered_json::array();
    for (long long r = 0; r < h.F; ++r) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (long long k1 = 0; k1 < h.K1; ++k1) row.push_back(h.mirror_star(r, k1) ? "*" : "-");
        mir.push_back(std::move(row));
    }
    auto& us = j["users"] = nlohmann::ordered_json::array();
    for (long long k1 = 0; k1 < h.K1; ++k1) {
        nlohmann::ordered_json grid = nlohmann::ordered_json::array();
        for (long long r = 0; r < h.F; ++r) {
            nlohmann::ordered_json row = nlohmann::ordered_json::array();
            for (long long c = 0; c < h.K2; ++c) {
                long long v = h.user_at(k1, r, c);
                if (v == 0) row.push_back("*");
                else row.push_back(v);
            }
            grid.push_back(std::move(row));
        }
        us.push_back(std::move(grid));
    }
    j["S_m"] = h.S_m;
    return j.dump(2) + "\n";
}

Hpda hpda_from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    Hpda h;
    h.K1 = j.at("K1").get<long long>();
    h.K2 = j.at("K2").get<long long>();
    h.F = j.at("F").get<long long>();
    h.Z1 = j.at("Z1").get<long long>();
    h.Z2 = j.at("Z2").get<long long>();
    h.S = j.at("S").get<long long>();
    h.S_m = j.at("S_m").get<std::vector<long long>>();
    h.mirror.assign(h.F * h.K1, 0);
    const auto& mir = j.at("mirror");
    for (long long r = 0; r < h.F; ++r)
        for (long long k1 = 0; k1 < h.K1; ++k1)
            if (mir.at(r).at(k1).get<std::string>() == "*") h.mirror[r * h.K1 + k1] = 1;
    h.users.assign(h.K1, std::vector<long long>(h.F * h.K2, 0));
    const auto& us = j.at("users");
    for (long long k1 = 0; k1 < h.K1; ++k1)
        for (long long r = 0; r < h.F; ++r)
            for (long long c = 0; c < h.K2; ++c) {
                const auto& cell = us.at(k1).at(r).at(c);
                if (cell.is_string()) {
                    if (cell.get<std::string>() != "*")
                        throw std::runtime_error("unexpected cell string");
                } else {
                    h.users[k1][r * h.K2 + c] = cell.get<long long>();
                }
            }
    return h;
}

Hpda load_hpda(const std::string& name_or_path) {
    if (name_or_path == "example-6x3x2") return example_hpda_6x3x2();
    std::ifstream in(name_or_path);
    if (!in) throw std::runtime_error("cannot open file: " + name_or_path);
    std::stringstream ss;
    ss << in.rdbuf();
    return hpda_from_json(ss.str());
}

}  // namespace hcc
