#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "totalsr/utility.hpp"

namespace totalsr {

// Items are interned: an ItemId is an index into the ItemTable, and ids are
// assigned in shortlex token order, so comparing ids compares tokens
// (shorter first, then bytewise). For plain decimal tokens without leading
// zeros this coincides with numeric order; for single letters with a < b < z.
using ItemId = std::int32_t;

inline constexpr ItemId kNoItem = -1;

// True when a < b in shortlex order.
bool shortlex_less(std::string_view a, std::string_view b);

class ItemTable {
public:
    // Builds the registry from tokens (deduplicated, sorted shortlex).
    explicit ItemTable(std::vector<std::string> tokens);
    ItemTable() = default;

    std::optional<ItemId> find(std::string_view token) const;
    const std::string& token(ItemId id) const { return tokens_[id]; }
    std::size_t size() const { return tokens_.size(); }

private:
    struct Hash {
        using is_transparent = void;
        std::size_t operator()(std::string_view s) const {
            return std::hash<std::string_view>{}(s);
        }
    };
    std::vector<std::string> tokens_;
    std::unordered_map<std::string, ItemId, Hash, std::equal_to<>> index_;
};

struct QItem {
    ItemId item = kNoItem;
    std::int32_t quantity = 1;

    friend bool operator==(const QItem&, const QItem&) = default;
};

// A quantitative sequence in flattened form. Items are stored in canonical
// order (itemsets in sequence order, each itemset sorted ascending by item)
// and addressed either by 1-based flat index or by 1-based itemset position.
class QSequence {
public:
    QSequence() = default;
    QSequence(std::int32_t sid, std::vector<std::vector<QItem>> itemsets);

    std::int32_t sid() const { return sid_; }
    std::int32_t item_count() const { return static_cast<std::int32_t>(items_.size()); }
    std::int32_t itemset_count() const { return static_cast<std::int32_t>(bounds_.size()) - 1; }
    bool empty() const { return items_.empty(); }

    // Flat accessors, 1-based index.
    ItemId item_at(std::int32_t index) const { return items_[index - 1].item; }
    std::int32_t quantity_at(std::int32_t index) const { return items_[index - 1].quantity; }
    std::int32_t position_of_index(std::int32_t index) const { return positions_[index - 1]; }

    // Half-open flat-index range [first, last+1) of the 1-based itemset pos.
    std::int32_t itemset_first(std::int32_t pos) const { return bounds_[pos - 1] + 1; }
    std::int32_t itemset_last(std::int32_t pos) const { return bounds_[pos]; }

    // Position and flat index of an item, if present (items occur at most
    // once per sequence, so the hit is unique).
    std::optional<std::int32_t> index_of(ItemId item) const;
    std::optional<std::int32_t> position_of(ItemId item) const;

    const std::vector<QItem>& items() const { return items_; }

private:
    std::int32_t sid_ = 0;
    std::vector<QItem> items_;            // flat, canonical order
    std::vector<std::int32_t> positions_; // positions_[k] = itemset pos of flat k+1
    std::vector<std::int32_t> bounds_;    // bounds_[p] = flat count up to itemset p
    std::vector<std::pair<ItemId, std::int32_t>> lookup_;  // (item, flat index), sorted
};

// Per-sequence utility prefix sums over flat indices; range queries in O(1).
class Upsl {
public:
    Upsl() = default;
    explicit Upsl(std::vector<Utility> prefix) : prefix_(std::move(prefix)) {}

    std::int32_t size() const { return static_cast<std::int32_t>(prefix_.size()); }
    Utility prefix_at(std::int32_t index) const { return prefix_[index - 1]; }

    // Inclusive 1-based range sum. Throws std::out_of_range on a bad range.
    Utility range(std::int32_t from, std::int32_t to) const;

    const std::vector<Utility>& prefix() const { return prefix_; }

private:
    std::vector<Utility> prefix_;
};

class SequenceDatabase {
public:
    SequenceDatabase() = default;
    SequenceDatabase(ItemTable items, std::vector<QSequence> sequences,
                     std::vector<Utility> unit_utilities);

    const ItemTable& items() const { return items_; }
    const std::vector<QSequence>& sequences() const { return sequences_; }
    const QSequence& sequence(std::int32_t sid) const { return sequences_[sid - 1]; }
    std::int32_t size() const { return static_cast<std::int32_t>(sequences_.size()); }

    Utility unit_utility(ItemId item) const { return unit_utilities_[item]; }

    // q(i, s) * iu(i); throws std::out_of_range when the item is absent.
    Utility item_utility(ItemId item, std::int32_t sid) const;

    // Utility of the flat item `index` of sequence `sid`.
    Utility utility_at(std::int32_t sid, std::int32_t index) const;

    Utility sequence_total_utility(std::int32_t sid) const;

private:
    ItemTable items_;
    std::vector<QSequence> sequences_;
    std::vector<Utility> unit_utilities_;  // indexed by ItemId
};

// Parse errors carry the failing input line (1-based, 0 when not line-bound).
enum class ParseErrorKind {
    Malformed,
    DuplicateItemInSequence,
    UnknownItem,
    NonPositiveQuantityOrUtility,
    DuplicateUtilityEntry,
};

class ParseError : public std::runtime_error {
public:
    ParseError(ParseErrorKind kind, int line, const std::string& what)
        : std::runtime_error(what), kind_(kind), line_(line) {}
    ParseErrorKind kind() const { return kind_; }
    int line() const { return line_; }

private:
    ParseErrorKind kind_;
    int line_;
};

// Database text: one sequence per line, itemsets as runs of item:quantity
// tokens terminated by -1, line terminated by -2. Blank lines and lines
// starting with '#' are skipped. External utility text: one item:value per
// line, duplicates rejected.
SequenceDatabase parse_database(std::string_view db_text, std::string_view eutil_text);

std::string serialize_database(const SequenceDatabase& db);
std::string serialize_utilities(const SequenceDatabase& db);

Upsl build_upsl(const QSequence& seq, const SequenceDatabase& db);
std::vector<Upsl> build_upsls(const SequenceDatabase& db);

// Removes every occurrence of the given items. Emptied itemsets are dropped;
// emptied sequences are kept (they still count toward |D|). Flat indices and
// positions are recomputed.
SequenceDatabase remove_items(const SequenceDatabase& db, const std::vector<ItemId>& victims);

}  // namespace totalsr
