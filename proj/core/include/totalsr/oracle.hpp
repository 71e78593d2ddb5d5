#pragma once

#include <vector>

#include "totalsr/rules.hpp"
#include "totalsr/seqdb.hpp"
#include "totalsr/thresholds.hpp"

namespace totalsr {

// Brute-force ground truth: enumerates every totally-ordered rule occurring
// in a (small) database by exhaustive pattern DFS plus itemset-boundary
// splits, with measures computed directly from the definitions. No pruning,
// no shared state with the mining engine.

struct OracleLimits {
    std::int32_t max_antecedent_items = 8;
    std::int32_t max_consequent_items = 8;
    std::int32_t max_total_items = 16;
};

struct ScoredRule {
    Rule rule;
    Fraction support;
    Fraction confidence;
    Utility utility;
};

// Every canonical rule with at least one supporting sequence whose side and
// total item counts respect the limits, sorted by canonical rule text.
std::vector<ScoredRule> enumerate_rules(const SequenceDatabase& db, const OracleLimits& limits);

// enumerate_rules filtered by both thresholds.
std::vector<ScoredRule> oracle_mine(const SequenceDatabase& db, const Thresholds& thresholds,
                                    const OracleLimits& limits);

}  // namespace totalsr
