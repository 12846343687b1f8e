#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qa3/hilbert.hpp"
#include "qa3/rng.hpp"

namespace qa3 {

struct SweepResult {
    Field field = Field::rationals();
    int regime = 33;
    std::uint64_t seed = 0;
    int count = 0;
    int max_degree = 0;
    /// Classification histogram for regime 33 (label text -> count);
    /// series-prefix histogram for regime 34.
    std::map<std::string, int> histogram;
    int conflicts = 0;
    std::vector<std::string> conflict_messages;
};

/// Randomized sweep over uniformly random relation subspaces. Sample i draws
/// from a fresh splitmix64 stream seeded with seed + i, so any sample can be
/// replayed in isolation.
///
/// regime 33: 6-dimensional relation spans (dim A_2 = 3), classified into
/// H1..H11; a ClassificationConflict is counted, not thrown.
/// regime 34: 5-dimensional relation spans (dim A_2 = 4); the series prefix
/// is recorded verbatim and no classification is attempted.
inline SweepResult run_sweep(const Field& F, int count, std::uint64_t seed, int regime = 33,
                             int max_degree = 12) {
    if (regime != 33 && regime != 34) throw InvalidParameter("supported sweep regimes: 33, 34");
    if (!F.finite()) throw InfiniteFieldUnsupported();
    SweepResult res;
    res.field = F;
    res.regime = regime;
    res.seed = seed;
    res.count = count;
    res.max_degree = max_degree;
    const int d = regime == 33 ? 6 : 5;
    for (int i = 0; i < count; ++i) {
        SplitMix64 rng(seed + static_cast<std::uint64_t>(i));
        Presentation P = random_quadratic_presentation(rng, F, d);
        if (regime == 33) {
            try {
                ClassifyResult r = classify_33(P, max_degree);
                res.histogram[to_string(r.label)] += 1;
            } catch (const ClassificationConflict& e) {
                res.conflicts += 1;
                res.conflict_messages.push_back("sample " + std::to_string(i) + ": " + e.what());
            }
        } else {
            GBasis b = complete(P, max_degree);
            Series H = hilbert_series(b, max_degree);
            std::string key;
            for (size_t k = 0; k < H.c.size(); ++k) key += (k ? "," : "") + H.c[k].str();
            res.histogram[key] += 1;
        }
    }
    return res;
}

}  // namespace qa3
