#pragma once

#include <cstdint>
#include <string>

#include "totalsr/seqdb.hpp"

namespace totalsr {

// Deterministic synthetic quantitative-sequence generator. Itemset counts
// and itemset sizes follow shifted geometric distributions around the given
// averages; items are drawn without replacement per sequence; quantities are
// uniform integers; unit utilities are fixed per item for the whole database
// and drawn uniformly with two decimal places.
struct GenParams {
    std::int32_t num_sequences = 1000;
    std::int32_t alphabet_size = 100;
    double avg_itemsets_per_sequence = 6.0;
    double avg_items_per_itemset = 4.0;
    std::int32_t max_quantity = 5;
    Utility unit_utility_low = Utility::from_int(1);
    Utility unit_utility_high = Utility::from_int(10);
    std::uint64_t seed = 1;
};

// Throws std::invalid_argument on infeasible parameters (including a
// sequence that cannot be filled without repeating items).
SequenceDatabase generate(const GenParams& params);

struct DatasetStats {
    std::int64_t sequences = 0;       // |D|
    std::int64_t distinct_items = 0;  // |I| occurring in the data
    double avg_itemsets = 0.0;        // avg(S)
    std::int64_t max_itemsets = 0;    // max(S)
    double avg_sequence_items = 0.0;  // avg(Seq)
    double avg_itemset_items = 0.0;   // avg(Ele)
};

DatasetStats describe(const SequenceDatabase& db);

std::string format_stats(const DatasetStats& stats);

}  // namespace totalsr
