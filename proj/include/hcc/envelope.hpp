#pragma once

#include "hcc/types.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hcc {

// An achievable operating point of the two-layer network: cache fractions
// (m1, m2) and the two hop loads.  Total delivery time T = R1 + R2.
struct AchievablePoint {
    Rat m1, m2;
    Rat R1, R2;
    std::string source;
    Rat T() const { return R1 + R2; }
};

// The two degenerate corners every instance achieves:
//   (0, 0): no caches, server ships everything (R1 = N, R2 = K2);
//   (0, 1): users cache everything (R1 = R2 = 0).
std::vector<AchievablePoint> trivial_points(const Rat& N_files, long long K2);

// Component-wise convex combination of three points with weights
// (alpha, beta, 1-alpha-beta); weights must be >= 0 and sum to at most 1.
AchievablePoint share3(const AchievablePoint& a, const AchievablePoint& b,
                       const AchievablePoint& c, const Rat& alpha, const Rat& beta);

struct EnvelopeValue {
    Rat T;
    std::vector<std::pair<std::string, Rat>> support;  // (source, weight)
};
// Minimum T over all convex combinations of at most three of the given points
// hitting exactly (m1, m2); nullopt when (m1, m2) is outside the convex hull
// of the points' memory pairs.  Exact rational arithmetic throughout.
std::optional<EnvelopeValue> lower_envelope(const std::vector<AchievablePoint>& pts,
                                            const Rat& m1, const Rat& m2);

struct ConvexityEntry {
    std::string source;
    bool on_envelope = true;
    Rat envelope_T;             // envelope value at the point's (m1, m2)
    std::string dominating;     // support description when dominated
};
// For each point, whether any combination of the others (and itself) achieves
// a strictly smaller T at the same memory pair.
std::vector<ConvexityEntry> convexity_report(const std::vector<AchievablePoint>& pts);

}  // namespace hcc
