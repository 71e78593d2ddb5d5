#include "totalsr/datagen.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace totalsr {

namespace {

// Integer-only sampling on top of mt19937_64 keeps output identical across
// standard libraries (the std distributions are implementation-defined).
struct Rng {
    std::mt19937_64 engine;

    explicit Rng(std::uint64_t seed) : engine(seed) {}

    std::uint64_t next() { return engine(); }

    // Uniform in [0, n) by rejection of the biased tail.
    std::uint64_t below(std::uint64_t n) {
        std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % n;
        std::uint64_t v;
        do {
            v = next();
        } while (v >= limit);
        return v % n;
    }

    std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    // Trials until first success with probability 1/mean; support {1,2,...},
    // expectation = mean.
    std::int32_t shifted_geometric(double mean) {
        auto threshold = static_cast<std::uint64_t>(
            static_cast<double>(std::numeric_limits<std::uint64_t>::max()) / mean);
        std::int32_t count = 1;
        while (next() >= threshold) ++count;
        return count;
    }
};

}  // namespace

SequenceDatabase generate(const GenParams& params) {
    if (params.num_sequences < 0 || params.alphabet_size <= 0 ||
        params.avg_itemsets_per_sequence < 1.0 || params.avg_items_per_itemset < 1.0 ||
        params.max_quantity < 1 || !params.unit_utility_low.positive() ||
        params.unit_utility_high < params.unit_utility_low) {
        throw std::invalid_argument("infeasible generator parameters");
    }

    std::vector<std::string> tokens;
    tokens.reserve(params.alphabet_size);
    for (std::int32_t i = 1; i <= params.alphabet_size; ++i) {
        tokens.push_back(std::to_string(i));
    }
    ItemTable table(tokens);

    Rng rng(params.seed);

    // Unit utilities per item, two decimal places, fixed for the database.
    std::vector<Utility> unit(table.size());
    std::int64_t lo = params.unit_utility_low.raw() / 100;
    std::int64_t hi = params.unit_utility_high.raw() / 100;
    for (std::int32_t i = 1; i <= params.alphabet_size; ++i) {
        ItemId id = *table.find(std::to_string(i));
        unit[id] = Utility::from_raw(rng.uniform(lo, hi) * 100);
    }

    std::vector<QSequence> sequences;
    sequences.reserve(params.num_sequences);
    for (std::int32_t n = 0; n < params.num_sequences; ++n) {
        std::int32_t itemset_count = rng.shifted_geometric(params.avg_itemsets_per_sequence);
        std::vector<std::vector<QItem>> itemsets;
        itemsets.reserve(itemset_count);
        std::set<std::int32_t> used;  // alphabet ordinals already in this sequence
        for (std::int32_t e = 0; e < itemset_count; ++e) {
            std::int32_t want = rng.shifted_geometric(params.avg_items_per_itemset);
            if (static_cast<std::size_t>(want) + used.size() >
                static_cast<std::size_t>(params.alphabet_size)) {
                throw std::invalid_argument(
                    "sequence cannot be filled without repeating items; "
                    "enlarge the alphabet or shrink the averages");
            }
            std::vector<QItem> set;
            set.reserve(want);
            for (std::int32_t i = 0; i < want; ++i) {
                std::int32_t ordinal;
                do {
                    ordinal = static_cast<std::int32_t>(rng.below(params.alphabet_size)) + 1;
                } while (used.count(ordinal));
                used.insert(ordinal);
                ItemId id = *table.find(std::to_string(ordinal));
                auto qty = static_cast<std::int32_t>(rng.uniform(1, params.max_quantity));
                set.push_back(QItem{id, qty});
            }
            itemsets.push_back(std::move(set));
        }
        sequences.emplace_back(static_cast<std::int32_t>(sequences.size() + 1),
                               std::move(itemsets));
    }
    return SequenceDatabase(std::move(table), std::move(sequences), std::move(unit));
}

DatasetStats describe(const SequenceDatabase& db) {
    DatasetStats stats;
    stats.sequences = db.size();
    std::set<ItemId> seen;
    std::int64_t itemsets = 0, items = 0;
    for (const QSequence& s : db.sequences()) {
        itemsets += s.itemset_count();
        items += s.item_count();
        stats.max_itemsets = std::max<std::int64_t>(stats.max_itemsets, s.itemset_count());
        for (const QItem& qi : s.items()) seen.insert(qi.item);
    }
    stats.distinct_items = static_cast<std::int64_t>(seen.size());
    if (stats.sequences > 0) {
        stats.avg_itemsets = static_cast<double>(itemsets) / stats.sequences;
        stats.avg_sequence_items = static_cast<double>(items) / stats.sequences;
    }
    if (itemsets > 0) {
        stats.avg_itemset_items = static_cast<double>(items) / itemsets;
    }
    return stats;
}

std::string format_stats(const DatasetStats& s) {
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "sequences\t%lld\nitems\t%lld\navg_itemsets\t%.2f\nmax_itemsets\t%lld\n"
                  "avg_sequence_items\t%.2f\navg_itemset_items\t%.2f\n",
                  static_cast<long long>(s.sequences), static_cast<long long>(s.distinct_items),
                  s.avg_itemsets, static_cast<long long>(s.max_itemsets), s.avg_sequence_items,
                  s.avg_itemset_items);
    return buf;
}

}  // namespace totalsr
