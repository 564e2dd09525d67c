#include "hcc/pda.hpp"

#include "hcc/combinatorics.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace hcc {

namespace {

std::string subset_name(const std::vector<int>& s) {
    std::ostringstream os;
    for (size_t i = 0; i < s.size(); ++i) os << (i ? "." : "") << s[i];
    return os.str();
}

void sort_report(Report& rep) {
    std::sort(rep.violations.begin(), rep.violations.end(),
              [](const Violation& a, const Violation& b) {
                  return std::tie(a.rule, a.message) < std::tie(b.rule, b.message);
              });
}

}  // namespace

PdaParams design_pda_params(const Design& d, int i, int j) {
    if (!(1 <= i && i <= j && j <= d.k))
        throw std::invalid_argument("requires 1 <= i <= j <= k");
    PdaParams p;
    p.F = binom_ll(d.v, i);
    p.Z = p.F - binom_ll(j, i);
    Int K = Int(d.b()) * binom(d.k, j);
    p.K = static_cast<long long>(K);
    // Number of blocks through a fixed j-subset (j <= t lifts via the design's
    // counting identity; j > t is rejected because the occurrence count is no
    // longer uniform).
    if (j > d.t) throw std::invalid_argument("requires j <= t for a uniform integer range");
    Int lj_num = Int(d.lambda) * binom(d.v - j, d.t - j);
    Int lj_den = binom(d.k - j, d.t - j);
    if (lj_den == 0 || lj_num % lj_den != 0)
        throw std::domain_error("block count through a j-subset is not an integer");
    Int lj = lj_num / lj_den;
    p.S = static_cast<long long>(Int(binom(d.v, j - i) * lj));
    return p;
}

Pda build_design_pda(const Design& d, int i, int j) {
    Report dr = validate_design(d);
    if (!dr.ok()) throw std::invalid_argument("invalid design: " + dr.summary());
    PdaParams params = design_pda_params(d, i, j);

    Pda p;
    p.K = params.K;
    p.F = params.F;
    p.Z = params.Z;
    p.S = params.S;
    const auto rows = subsets_lex(d.v, i);
    p.row_names.reserve(rows.size());
    for (const auto& X : rows) p.row_names.push_back(subset_name(X));

    struct ColDef {
        std::vector<int> Y;
        int block_index;
    };
    std::vector<ColDef> cols;
    cols.reserve(p.K);
    for (size_t bi = 0; bi < d.blocks.size(); ++bi) {
        for (auto& Y : subsets_lex_of(d.blocks[bi], j)) {
            p.col_names.push_back("A=" + subset_name(d.blocks[bi]) + "/Y=" + subset_name(Y));
            p.col_block.push_back(static_cast<int>(bi));
            cols.push_back({std::move(Y), static_cast<int>(bi)});
        }
    }
    if (static_cast<long long>(cols.size()) != p.K)
        throw std::logic_error("column count mismatch");

    const long long page = binom_ll(d.v, j - i);
    p.cells.assign(p.F * p.K, 0);
    std::vector<char> seen(p.S + 1, 0);
    long long distinct = 0;
    for (long long r = 0; r < p.F; ++r) {
        const auto& X = rows[r];
        std::map<std::vector<int>, long long> occurrences;
        for (long long c = 0; c < p.K; ++c) {
            if (!is_subset(X, cols[c].Y)) continue;
            std::vector<int> D = set_diff(cols[c].Y, X);
            long long alpha = ++occurrences[D];
            long long value = (alpha - 1) * page + lex_rank(D, d.v);
            if (value < 1 || value > p.S)
                throw std::logic_error("constructed integer " + std::to_string(value) +
                                       " outside [1," + std::to_string(p.S) + "]");
            if (!seen[value]) {
                seen[value] = 1;
                ++distinct;
            }
            p.at(r, c) = value;
        }
    }
    if (distinct != p.S)
        throw std::logic_error("realized integer count " + std::to_string(distinct) +
                               " != declared S " + std::to_string(p.S));
    return p;
}

Pda complete_design_pda(int n, int k, int j, int i) {
    return build_design_pda(trivial_design(n, k), i, j);
}

Pda man_pda(int K_users, int t) {
    if (!(1 <= t && t <= K_users)) throw std::invalid_argument("requires 1 <= t <= K");
    Pda p;
    p.K = K_users;
    p.F = binom_ll(K_users, t);
    p.Z = binom_ll(K_users - 1, t - 1);
    p.S = binom_ll(K_users, t + 1);
    const auto rows = subsets_lex(K_users, t);
    for (const auto& X : rows) p.row_names.push_back(subset_name(X));
    for (int u = 1; u <= K_users; ++u) p.col_names.push_back("u=" + std::to_string(u));
    p.col_block.assign(p.K, -1);
    p.cells.assign(p.F * p.K, 0);
    for (long long r = 0; r < p.F; ++r) {
        const auto& X = rows[r];
        for (int u = 1; u <= K_users; ++u) {
            if (std::binary_search(X.begin(), X.end(), u)) continue;
            std::vector<int> Y = set_union(X, {u});
            p.at(r, u - 1) = lex_rank(Y, K_users);
        }
    }
    return p;
}

Pda transpose_pda(const Pda& p) {
    long long row_stars = -1;
    for (long long r = 0; r < p.F; ++r) {
        long long cnt = 0;
        for (long long c = 0; c < p.K; ++c)
            if (p.is_star(r, c)) ++cnt;
        if (row_stars < 0) row_stars = cnt;
        else if (row_stars != cnt)
            throw std::domain_error("transpose requires a constant number of stars per row");
    }
    Pda q;
    q.K = p.F;
    q.F = p.K;
    q.Z = row_stars < 0 ? 0 : row_stars;
    q.S = p.S;
    q.row_names = p.col_names;
    q.col_names = p.row_names;
    q.col_block.assign(q.K, -1);
    q.cells.assign(q.F * q.K, 0);
    for (long long r = 0; r < p.F; ++r)
        for (long long c = 0; c < p.K; ++c) q.at(c, r) = p.at(r, c);
    return q;
}

namespace {

Report validate_pda_impl(const Pda& p, bool parallel) {
    Report rep;
    if (p.F < 1 || p.K < 1) {
        rep.add("shape", "array must have at least one row and column");
        return rep;
    }
    if (static_cast<long long>(p.cells.size()) != p.F * p.K) {
        rep.add("shape", "cell buffer size does not match F*K");
        return rep;
    }

    // C1: Z stars per column; entry range check.
    std::vector<Report> col_reps(p.K);
#pragma omp parallel for schedule(static) if (parallel)
    for (long long c = 0; c < p.K; ++c) {
        long long stars = 0;
        for (long long r = 0; r < p.F; ++r) {
            long long v = p.at(r, c);
            if (v == 0) ++stars;
            else if (v < 0 || v > p.S)
                col_reps[c].add("range", "cell (" + std::to_string(r + 1) + "," +
                                             std::to_string(c + 1) + ") holds " +
                                             std::to_string(v) + " outside [1," +
                                             std::to_string(p.S) + "]");
        }
        if (stars != p.Z)
            col_reps[c].add("C1", "column " + std::to_string(c + 1) + " has " +
                                      std::to_string(stars) + " stars, expected Z=" +
                                      std::to_string(p.Z));
    }
    for (auto& r : col_reps)
        for (auto& v : r.violations) rep.violations.push_back(std::move(v));

    // Occurrence lists per integer.
    std::vector<std::vector<std::pair<long long, long long>>> occ(p.S + 1);
    for (long long r = 0; r < p.F; ++r)
        for (long long c = 0; c < p.K; ++c) {
            long long v = p.at(r, c);
            if (v >= 1 && v <= p.S) occ[v].push_back({r, c});
        }

    // C2 + C3.
    std::vector<Report> int_reps(p.S + 1);
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (long long s = 1; s <= p.S; ++s) {
        auto& cells = occ[s];
        if (cells.empty()) {
            int_reps[s].add("C2", "integer " + std::to_string(s) + " never occurs");
            continue;
        }
        for (size_t a = 0; a < cells.size(); ++a)
            for (size_t b = a + 1; b < cells.size(); ++b) {
                auto [j1, k1] = cells[a];
                auto [j2, k2] = cells[b];
                std::string where = "integer " + std::to_string(s) + " at (" +
                                    std::to_string(j1 + 1) + "," + std::to_string(k1 + 1) +
                                    ") and (" + std::to_string(j2 + 1) + "," +
                                    std::to_string(k2 + 1) + ")";
                if (j1 == j2)
                    int_reps[s].add("C3", where + ": same row");
                else if (k1 == k2)
                    int_reps[s].add("C3", where + ": same column");
                else {
                    if (!p.is_star(j1, k2))
                        int_reps[s].add("C3", where + ": cell (" + std::to_string(j1 + 1) + "," +
                                                  std::to_string(k2 + 1) + ") is not a star");
                    if (!p.is_star(j2, k1))
                        int_reps[s].add("C3", where + ": cell (" + std::to_string(j2 + 1) + "," +
                                                  std::to_string(k1 + 1) + ") is not a star");
                }
            }
    }
    for (auto& r : int_reps)
        for (auto& v : r.violations) rep.violations.push_back(std::move(v));

    sort_report(rep);
    return rep;
}

}  // namespace

Report validate_pda(const Pda& p, bool parallel) { return validate_pda_impl(p, parallel); }
Report validate_pda_serial(const Pda& p) { return validate_pda_impl(p, false); }

std::optional<long long> pda_regularity(const Pda& p) {
    std::vector<long long> count(p.S + 1, 0);
    for (long long v : p.cells)
        if (v >= 1 && v <= p.S) ++count[v];
    long long g = -1;
    for (long long s = 1; s <= p.S; ++s) {
        if (g < 0) g = count[s];
        else if (g != count[s]) return std::nullopt;
    }
    return g < 0 ? std::nullopt : std::optional<long long>(g);
}

SchemePoint pda_scheme_point(const Pda& p) {
    return {make_rat(p.Z, p.F), make_rat(p.S, p.F)};
}

bool value_partition_equal(const Pda& a, const Pda& b) {
    if (a.F != b.F || a.K != b.K) return false;
    std::unordered_map<long long, long long> fwd, rev;
    for (long long r = 0; r < a.F; ++r)
        for (long long c = 0; c < a.K; ++c) {
            long long va = a.at(r, c), vb = b.at(r, c);
            if ((va == 0) != (vb == 0)) return false;
            if (va == 0) continue;
            auto itf = fwd.find(va);
            if (itf == fwd.end()) fwd[va] = vb;
            else if (itf->second != vb) return false;
            auto itr = rev.find(vb);
            if (itr == rev.end()) rev[vb] = va;
            else if (itr->second != va) return false;
        }
    return true;
}

namespace {

Pda literal_pda(long long Z, long long S, const std::vector<std::vector<long long>>& grid) {
    Pda p;
    p.F = static_cast<long long>(grid.size());
    p.K = static_cast<long long>(grid[0].size());
    p.Z = Z;
    p.S = S;
    for (long long r = 0; r < p.F; ++r) p.row_names.push_back("r" + std::to_string(r + 1));
    for (long long c = 0; c < p.K; ++c) p.col_names.push_back("c" + std::to_string(c + 1));
    p.col_block.assign(p.K, -1);
    p.cells.reserve(p.F * p.K);
    for (const auto& row : grid)
        for (long long v : row) p.cells.push_back(v);
    return p;
}

}  // namespace

Pda builtin_pda(const std::string& name) {
    if (name == "inner-5-5-1-10") return man_pda(5, 1);
    if (name == "inner-5-5-2-7")
        // The worked 5x5 array with 2 stars per column and 7 integers.
        return literal_pda(2, 7,
                           {{0, 0, 1, 2, 5},
                            {1, 0, 0, 3, 6},
                            {0, 1, 0, 4, 7},
                            {2, 3, 4, 0, 0},
                            {5, 6, 7, 0, 0}});
    if (name == "inner-5-5-3-4")
        return literal_pda(3, 4,
                           {{1, 3, 0, 0, 0},
                            {2, 4, 0, 0, 0},
                            {0, 0, 1, 3, 0},
                            {0, 0, 2, 0, 3},
                            {0, 0, 0, 2, 1}});
    if (name == "inner-5-5-4-1")
        return literal_pda(4, 1,
                           {{1, 0, 0, 0, 0},
                            {0, 1, 0, 0, 0},
                            {0, 0, 1, 0, 0},
                            {0, 0, 0, 1, 0},
                            {0, 0, 0, 0, 1}});
    throw std::invalid_argument("unknown builtin array: " + name);
}

std::vector<std::string> builtin_pda_names() {
    return {"inner-5-5-1-10", "inner-5-5-2-7", "inner-5-5-3-4", "inner-5-5-4-1"};
}

std::string pda_to_csv(const Pda& p) {
    std::ostringstream os;
    os << "row";
    for (const auto& n : p.col_names) os << ',' << n;
    os << '\n';
    for (long long r = 0; r < p.F; ++r) {
        os << p.row_names[r];
        for (long long c = 0; c < p.K; ++c) {
            os << ',';
            if (p.is_star(r, c)) os << '*';
            else os << p.at(r, c);
        }
        os << '\n';
    }
    return os.str();
}

Pda pda_from_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("empty CSV");
    Pda p;
    {
        std::istringstream hs(line);
        std::string tok;
        bool first = true;
        while (std::getline(hs, tok, ',')) {
            if (first) first = false;
            else p.col_names.push_back(tok);
        }
    }
    p.K = static_cast<long long>(p.col_names.size());
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string tok;
        bool first = true;
        long long col = 0;
        while (std::getline(ls, tok, ',')) {
            if (first) {
                p.row_names.push_back(tok);
                first = false;
                continue;
            }
            if (tok == "*") p.cells.push_back(0);
            else p.cells.push_back(std::stoll(tok));
            ++col;
        }
        if (col != p.K) throw std::runtime_error("CSV row has wrong number of cells");
    }
    p.F = static_cast<long long>(p.row_names.size());
    p.col_block.assign(p.K, -1);
    long long stars0 = 0, maxv = 0;
    for (long long r = 0; r < p.F; ++r) {
        if (p.is_star(r, 0)) ++stars0;
        for (long long c = 0; c < p.K; ++c) maxv = std::max(maxv, p.at(r, c));
    }
    p.Z = stars0;
    p.S = maxv;
    return p;
}

std::string pda_to_json(const Pda& p) {
    nlohmann::ordered_json j;
    j["K"] = p.K;
    j["F"] = p.F;
    j["Z"] = p.Z;
    j["S"] = p.S;
    j["rows"] = p.row_names;
    j["cols"] = p.col_names;
    auto& cells = j["cells"] = nlohmann::ordered_json::array();
    for (long long r = 0; r < p.F; ++r) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (long long c = 0; c < p.K; ++c) {
            if (p.is_star(r, c)) row.push_back("*");
            else row.push_back(p.at(r, c));
        }
        cells.push_back(std::move(row));
    }
    return j.dump(2) + "\n";
}

Pda pda_from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    Pda p;
    p.K = j.at("K").get<long long>();
    p.F = j.at("F").get<long long>();
    p.Z = j.at("Z").get<long long>();
    p.S = j.at("S").get<long long>();
    p.row_names = j.at("rows").get<std::vector<std::string>>();
    p.col_names = j.at("cols").get<std::vector<std::string>>();
    p.col_block.assign(p.K, -1);
    p.cells.reserve(p.F * p.K);
    for (const auto& row : j.at("cells")) {
        for (const auto& cell : row) {
            if (cell.is_string()) {
                if (cell.get<std::string>() != "*")
                    throw std::runtime_error("unexpected cell string: " +
                                             cell.get<std::string>());
                p.cells.push_back(0);
            } else {
                p.cells.push_back(cell.get<long long>());
            }
        }
    }
    if (static_cast<long long>(p.cells.size()) != p.F * p.K)
        throw std::runtime_error("cell count does not match F*K");
    return p;
}

Pda load_pda(const std::string& name_or_path) {
    for (const auto& n : builtin_pda_names())
        if (n == name_or_path) return builtin_pda(name_or_path);
    std::ifstream in(name_or_path);
    if (!in) throw std::runtime_error("cannot open array file: " + name_or_path);
    std::stringstream ss;
    ss << in.rdbuf();
    if (name_or_path.size() >= 4 &&
        name_or_path.compare(name_or_path.size() - 4, 4, ".csv") == 0)
        return pda_from_csv(ss.str());
    return pda_from_json(ss.str());
}

}  // namespace hcc
