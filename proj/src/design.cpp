#include "hcc/design.hpp"

#include "hcc/combinatorics.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace hcc {

std::string Report::summary() const {
    if (ok()) return "ok";
    std::ostringstream os;
    os << violations.size() << " violation(s):";
    for (const auto& v : violations) os << "\n  [" << v.rule << "] " << v.message;
    return os.str();
}

Report validate_design(const Design& d) {
    Report rep;
    if (d.v < 1) rep.add("design-params", "v must be >= 1");
    if (!(d.v >= d.k && d.k >= d.t && d.t >= 1))
        rep.add("design-params", "requires v >= k >= t >= 1, got v=" + std::to_string(d.v) +
                                     " k=" + std::to_string(d.k) + " t=" + std::to_string(d.t));
    if (d.lambda < 1) rep.add("design-params", "lambda must be >= 1");
    if (d.blocks.empty()) rep.add("design-blocks", "design has no blocks");
    for (size_t bi = 0; bi < d.blocks.size(); ++bi) {
        const auto& B = d.blocks[bi];
        if (static_cast<int>(B.size()) != d.k)
            rep.add("design-blocks", "block " + std::to_string(bi + 1) + " has size " +
                                         std::to_string(B.size()) + ", expected k=" +
                                         std::to_string(d.k));
        for (int x : B)
            if (x < 1 || x > d.v)
                rep.add("design-blocks", "block " + std::to_string(bi + 1) + " contains point " +
                                             std::to_string(x) + " outside [1," +
                                             std::to_string(d.v) + "]");
        if (!std::is_sorted(B.begin(), B.end()) ||
            std::adjacent_find(B.begin(), B.end()) != B.end())
            rep.add("design-blocks",
                    "block " + std::to_string(bi + 1) + " is not a sorted set of distinct points");
    }
    if (!rep.ok()) return rep;

    for (const auto& T : subsets_lex(d.v, d.t)) {
        long long count = 0;
        for (const auto& B : d.blocks)
            if (is_subset(T, B)) ++count;
        if (count != d.lambda) {
            std::ostringstream os;
            os << "t-subset {";
            for (size_t i = 0; i < T.size(); ++i) os << (i ? "," : "") << T[i];
            os << "} lies in " << count << " blocks, expected lambda=" << d.lambda;
            rep.add("design-coverage", os.str());
        }
    }
    return rep;
}

long long lambda_s(const Design& d, int s) {
    if (s < 0 || s > d.t) throw std::invalid_argument("lambda_s requires 0 <= s <= t");
    Int num = Int(d.lambda) * binom(d.v - s, d.t - s);
    Int den = binom(d.k - s, d.t - s);
    if (den == 0 || num % den != 0)
        throw std::domain_error("lambda_s is not an integer");
    return static_cast<long long>(Int(num / den));
}

Design trivial_design(int n, int k) {
    if (!(n >= 1 && k >= 1 && k <= n))
        throw std::invalid_argument("trivial_design requires 1 <= k <= n");
    Design d;
    d.v = n;
    d.k = k;
    d.t = k;
    d.lambda = 1;
    d.blocks = subsets_lex(n, k);
    return d;
}

namespace {

Design fano_design() {
    Design d;
    d.v = 7;
    d.k = 3;
    d.t = 2;
    d.lambda = 1;
    d.blocks = {{1, 2, 7}, {1, 4, 5}, {1, 3, 6}, {4, 6, 7}, {2, 5, 6}, {3, 5, 7}, {2, 3, 4}};
    return d;
}

Design sqs8_design() {
    // The planes of the 3-dimensional binary affine geometry: the unique
    // 3-(8,4,1) design.
    Design d;
    d.v = 8;
    d.k = 4;
    d.t = 3;
    d.lambda = 1;
    d.blocks = {{1, 2, 3, 4}, {5, 6, 7, 8}, {1, 2, 5, 6}, {3, 4, 7, 8}, {1, 2, 7, 8},
                {3, 4, 5, 6}, {1, 3, 5, 7}, {2, 4, 6, 8}, {1, 3, 6, 8}, {2, 4, 5, 7},
                {1, 4, 5, 8}, {2, 3, 6, 7}, {1, 4, 6, 7}, {2, 3, 5, 8}};
    return d;
}

bool parse_trivial_name(const std::string& name, int& n, int& k) {
    if (name.rfind("trivial-", 0) != 0) return false;
    std::string rest = name.substr(8);
    auto dash = rest.find('-');
    if (dash == std::string::npos) return false;
    try {
        n = std::stoi(rest.substr(0, dash));
        k = std::stoi(rest.substr(dash + 1));
    } catch (...) {
        return false;
    }
    return n >= 1 && k >= 1 && k <= n;
}

}  // namespace

bool is_builtin_design_name(const std::string& name) {
    int n, k;
    return name == "fano-7-3-1" || name == "sqs-8-4-1" || parse_trivial_name(name, n, k);
}

Design builtin_design(const std::string& name) {
    if (name == "fano-7-3-1") return fano_design();
    if (name == "sqs-8-4-1") return sqs8_design();
    int n, k;
    if (parse_trivial_name(name, n, k)) return trivial_design(n, k);
    throw std::invalid_argument("unknown builtin design: " + name);
}

std::vector<std::string> builtin_design_names() {
    return {"fano-7-3-1", "sqs-8-4-1", "trivial-<n>-<k>"};
}

std::string design_to_json(const Design& d) {
    nlohmann::ordered_json j;
    j["v"] = d.v;
    j["k"] = d.k;
    j["t"] = d.t;
    j["lambda"] = d.lambda;
    j["blocks"] = d.blocks;
    return j.dump(2) + "\n";
}

Design design_from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    Design d;
    d.v = j.at("v").get<int>();
    d.k = j.at("k").get<int>();
    d.t = j.at("t").get<int>();
    d.lambda = j.at("lambda").get<long long>();
    d.blocks = j.at("blocks").get<std::vector<std::vector<int>>>();
    for (auto& B : d.blocks) std::sort(B.begin(), B.end());
    return d;
}

Design load_design(const std::string& name_or_path) {
    if (is_builtin_design_name(name_or_path)) return builtin_design(name_or_path);
    std::ifstream in(name_or_path);
    if (!in) throw std::runtime_error("cannot open design file: " + name_or_path);
    std::stringstream ss;
    ss << in.rdbuf();
    return design_from_json(ss.str());
}

}  // namespace hcc
