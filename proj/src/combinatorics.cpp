#include "hcc/combinatorics.hpp"

#include <limits>

namespace hcc {

Int binom(long long n, long long k) {
    if (k < 0 || k > n || n < 0) return Int(0);
    if (k > n - k) k = n - k;
    Int r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i;
    }
    return r;
}

long long binom_ll(long long n, long long k) {
    Int r = binom(n, k);
    if (r > Int(std::numeric_limits<long long>::max()))
        throw std::overflow_error("binomial does not fit in 64 bits");
    return static_cast<long long>(r);
}

std::vector<std::vector<int>> subsets_lex(int n, int k) {
    std::vector<int> base(n);
    for (int i = 0; i < n; ++i) base[i] = i + 1;
    return subsets_lex_of(base, k);
}

std::vector<std::vector<int>> subsets_lex_of(const std::vector<int>& base, int k) {
    std::vector<std::vector<int>> out;
    int n = static_cast<int>(base.size());
    if (k < 0 || k > n) return out;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        std::vector<int> s(k);
        for (int i = 0; i < k; ++i) s[i] = base[idx[i]];
        out.push_back(std::move(s));
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
}

long long lex_rank(const std::vector<int>& subset, int n) {
    // 1-based rank among all |subset|-subsets of {1..n} in lexicographic order.
    int k = static_cast<int>(subset.size());
    long long rank = 1;
    int prev = 0;
    for (int pos = 0; pos < k; ++pos) {
        for (int c = prev + 1; c < subset[pos]; ++c)
            rank += binom_ll(n - c, k - pos - 1);
        prev = subset[pos];
    }
    return rank;
}

bool is_subset(const std::vector<int>& a, const std::vector<int>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::vector<int> set_diff(const std::vector<int>& b, const std::vector<int>& a) {
    std::vector<int> out;
    std::set_difference(b.begin(), b.end(), a.begin(), a.end(), std::back_inserter(out));
    return out;
}

std::vector<int> set_union(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

}  // namespace hcc
