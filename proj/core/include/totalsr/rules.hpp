#pragma once

#include <optional>
#include <string>
#include <vector>

#include "totalsr/seqdb.hpp"
#include "totalsr/utility.hpp"

namespace totalsr {

using Itemset = std::vector<ItemId>;      // sorted ascending
using Pattern = std::vector<Itemset>;     // ordered itemsets

// A totally-ordered sequential rule X -> Y. Both sides are nonempty ordered
// itemset lists with disjoint flat item sets; in a supporting sequence every
// item of X occurs strictly before every item of Y.
struct Rule {
    Pattern antecedent;
    Pattern consequent;

    friend bool operator==(const Rule&, const Rule&) = default;

    std::int32_t antecedent_items() const;
    std::int32_t consequent_items() const;

    // Sorted flat item lists, for membership tests.
    std::vector<ItemId> antecedent_flat_sorted() const;
    std::vector<ItemId> consequent_flat_sorted() const;

    bool valid() const;  // nonempty sides, sorted itemsets, disjoint
};

struct RuleSize {
    std::int32_t k = 0;  // antecedent item count
    std::int32_t m = 0;  // consequent item count

    friend bool operator==(const RuleSize&, const RuleSize&) = default;
};

// "Smaller than" on rule sizes: g*h < f*l iff (g <= f and h < l) or
// (g < f and h <= l). A partial order; unused by the mining engine.
bool rule_size_less(const RuleSize& a, const RuleSize& b);

// The unique occurrence of a rule in a sequence, as 1-based itemset positions.
struct Occurrence {
    std::int32_t sid = 0;
    std::int32_t alpha = 0;  // position of the last antecedent itemset
    std::int32_t beta = 0;   // position of the first consequent itemset
    std::int32_t gamma = 0;  // position of the last consequent itemset
};

// Matches a pattern in a sequence. Because items occur at most once per
// sequence, a pattern has at most one itemset-position assignment; returns
// the matched positions (one per pattern itemset) or nullopt.
std::optional<std::vector<std::int32_t>> match_pattern(const Pattern& p, const QSequence& seq);

bool antecedent_occurs_in(const Pattern& antecedent, const QSequence& seq);

std::optional<Occurrence> occurs_in(const Rule& rule, const QSequence& seq);

// |seq(r)| / |D| as an exact rational.
Fraction support(const Rule& rule, const SequenceDatabase& db);

// |seq(r)| / |ant(r)|; throws std::domain_error when |ant(r)| = 0.
Fraction confidence(const Rule& rule, const SequenceDatabase& db);

// Sum of the rule items' utilities in one sequence; 0 when it does not occur.
Utility rule_utility_in_seq(const Rule& rule, const QSequence& seq, const SequenceDatabase& db);

Utility rule_utility(const Rule& rule, const SequenceDatabase& db);

// Expanding a rule: I-expansion joins the target side's last itemset (the
// item must be order-greater than everything already there), S-expansion
// appends a new singleton itemset.
enum class Side { Left, Right };
enum class ExpandMode { I, S };

struct ExpansionKind {
    Side side = Side::Left;
    ExpandMode mode = ExpandMode::S;
    ItemId item = kNoItem;
};

// Returns the expanded rule; throws std::invalid_argument when the expansion
// violates the I-order constraint or reuses an item of the rule.
Rule apply_expansion(const Rule& rule, const ExpansionKind& kind);

// Canonical text form: "{e,f},{c} -> {b}".
std::string itemset_text(const Itemset& set, const ItemTable& items);
std::string pattern_text(const Pattern& p, const ItemTable& items);
std::string rule_text(const Rule& rule, const ItemTable& items);

// Parses the canonical text form; throws std::invalid_argument on bad syntax
// or unknown items.
Rule parse_rule_text(std::string_view text, const ItemTable& items);

}  // namespace totalsr
