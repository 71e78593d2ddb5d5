#include "totalsr/seqdb.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace totalsr {

bool shortlex_less(std::string_view a, std::string_view b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

ItemTable::ItemTable(std::vector<std::string> tokens) {
    std::sort(tokens.begin(), tokens.end(),
              [](const std::string& a, const std::string& b) { return shortlex_less(a, b); });
    tokens.erase(std::unique(tokens.begin(), tokens.end()), tokens.end());
    tokens_ = std::move(tokens);
    index_.reserve(tokens_.size());
    for (std::size_t i = 0; i < tokens_.size(); ++i) {
        index_.emplace(tokens_[i], static_cast<ItemId>(i));
    }
}

std::optional<ItemId> ItemTable::find(std::string_view token) const {
    auto it = index_.find(token);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

QSequence::QSequence(std::int32_t sid, std::vector<std::vector<QItem>> itemsets) : sid_(sid) {
    bounds_.push_back(0);
    std::int32_t pos = 0;
    for (auto& set : itemsets) {
        ++pos;
        std::sort(set.begin(), set.end(),
                  [](const QItem& a, const QItem& b) { return a.item < b.item; });
        for (const QItem& qi : set) {
            items_.push_back(qi);
            positions_.push_back(pos);
        }
        bounds_.push_back(static_cast<std::int32_t>(items_.size()));
    }
    lookup_.reserve(items_.size());
    for (std::size_t k = 0; k < items_.size(); ++k) {
        lookup_.emplace_back(items_[k].item, static_cast<std::int32_t>(k + 1));
    }
    std::sort(lookup_.begin(), lookup_.end());
}

std::optional<std::int32_t> QSequence::index_of(ItemId item) const {
    auto it = std::lower_bound(lookup_.begin(), lookup_.end(), std::make_pair(item, 0));
    if (it == lookup_.end() || it->first != item) return std::nullopt;
    return it->second;
}

std::optional<std::int32_t> QSequence::position_of(ItemId item) const {
    auto idx = index_of(item);
    if (!idx) return std::nullopt;
    return positions_[*idx - 1];
}

Utility Upsl::range(std::int32_t from, std::int32_t to) const {
    if (from < 1 || to < from || to > size()) {
        throw std::out_of_range("upsl range [" + std::to_string(from) + "," +
                                std::to_string(to) + "] out of 1.." + std::to_string(size()));
    }
    Utility lo = from == 1 ? Utility{} : prefix_[from - 2];
    return prefix_[to - 1] - lo;
}

SequenceDatabase::SequenceDatabase(ItemTable items, std::vector<QSequence> sequences,
                                   std::vector<Utility> unit_utilities)
    : items_(std::move(items)),
      sequences_(std::move(sequences)),
      unit_utilities_(std::move(unit_utilities)) {}

Utility SequenceDatabase::item_utility(ItemId item, std::int32_t sid) const {
    const QSequence& s = sequence(sid);
    auto idx = s.index_of(item);
    if (!idx) {
        throw std::out_of_range("item " + items_.token(item) + " absent from s" +
                                std::to_string(sid));
    }
    return unit_utilities_[item] * s.quantity_at(*idx);
}

Utility SequenceDatabase::utility_at(std::int32_t sid, std::int32_t index) const {
    const QSequence& s = sequence(sid);
    return unit_utilities_[s.item_at(index)] * s.quantity_at(index);
}

Utility SequenceDatabase::sequence_total_utility(std::int32_t sid) const {
    const QSequence& s = sequence(sid);
    Utility total;
    for (std::int32_t k = 1; k <= s.item_count(); ++k) total += utility_at(sid, k);
    return total;
}

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

struct LineReader {
    std::string_view text;
    std::size_t offset = 0;
    int line_no = 0;

    std::optional<std::string_view> next() {
        if (offset >= text.size()) return std::nullopt;
        std::size_t end = text.find('\n', offset);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(offset, end - offset);
        offset = end + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        return line;
    }
};

bool skippable(std::string_view line) {
    for (char c : line) {
        if (!std::isspace(static_cast<unsigned char>(c))) return c == '#';
    }
    return true;
}

std::int64_t parse_positive_int(std::string_view s, int line, const char* what) {
    if (s.empty()) throw ParseError(ParseErrorKind::Malformed, line, std::string(what) + " empty");
    std::int64_t v = 0;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            throw ParseError(ParseErrorKind::Malformed, line,
                             std::string(what) + " not a number: " + std::string(s));
        }
        v = v * 10 + (c - '0');
        if (v > 1'000'000'000) {
            throw ParseError(ParseErrorKind::Malformed, line, std::string(what) + " too large");
        }
    }
    if (v <= 0) {
        throw ParseError(ParseErrorKind::NonPositiveQuantityOrUtility, line,
                         std::string(what) + " must be positive");
    }
    return v;
}

void check_item_token(std::string_view tok, int line) {
    if (tok.empty() || tok == "-1" || tok == "-2" || tok.find(':') != std::string_view::npos) {
        throw ParseError(ParseErrorKind::Malformed, line,
                         "bad item token: " + std::string(tok));
    }
}

}  // namespace

SequenceDatabase parse_database(std::string_view db_text, std::string_view eutil_text) {
    // Utility file first; it defines the item registry.
    std::vector<std::string> tokens;
    std::vector<std::pair<std::string, Utility>> entries;
    {
        LineReader rd{eutil_text};
        while (auto line = rd.next()) {
            if (skippable(*line)) continue;
            auto fields = split_ws(*line);
            if (fields.size() != 1) {
                throw ParseError(ParseErrorKind::Malformed, rd.line_no,
                                 "expected a single item:utility entry");
            }
            auto colon = fields[0].rfind(':');
            if (colon == std::string_view::npos) {
                throw ParseError(ParseErrorKind::Malformed, rd.line_no,
                                 "missing ':' in utility entry");
            }
            std::string_view item = fields[0].substr(0, colon);
            std::string_view value = fields[0].substr(colon + 1);
            check_item_token(item, rd.line_no);
            Utility u;
            try {
                u = Utility::parse(value);
            } catch (const std::invalid_argument& e) {
                throw ParseError(ParseErrorKind::Malformed, rd.line_no, e.what());
            }
            if (!u.positive()) {
                throw ParseError(ParseErrorKind::NonPositiveQuantityOrUtility, rd.line_no,
                                 "unit utility must be positive: " + std::string(item));
            }
            entries.emplace_back(std::string(item), u);
            tokens.emplace_back(item);
        }
    }
    ItemTable table(tokens);
    if (table.size() != entries.size()) {
        // Find the duplicate for the message.
        std::set<std::string> seen;
        for (auto& [tok, _] : entries) {
            if (!seen.insert(tok).second) {
                throw ParseError(ParseErrorKind::DuplicateUtilityEntry, 0,
                                 "duplicate utility entry: " + tok);
            }
        }
    }
    std::vector<Utility> unit(table.size());
    for (auto& [tok, u] : entries) unit[*table.find(tok)] = u;

    std::vector<QSequence> sequences;
    LineReader rd{db_text};
    while (auto line = rd.next()) {
        if (skippable(*line)) continue;
        auto fields = split_ws(*line);
        std::vector<std::vector<QItem>> itemsets;
        std::vector<QItem> current;
        std::set<ItemId> seen;
        bool closed = false;
        for (std::size_t f = 0; f < fields.size(); ++f) {
            std::string_view tok = fields[f];
            if (closed) {
                throw ParseError(ParseErrorKind::Malformed, rd.line_no, "tokens after -2");
            }
            if (tok == "-2") {
                if (!current.empty()) {
                    throw ParseError(ParseErrorKind::Malformed, rd.line_no,
                                     "itemset not closed with -1 before -2");
                }
                closed = true;
                continue;
            }
            if (tok == "-1") {
                if (current.empty()) {
                    throw ParseError(ParseErrorKind::Malformed, rd.line_no, "empty itemset");
                }
                itemsets.push_back(std::move(current));
                current.clear();
                continue;
            }
            auto colon = tok.rfind(':');
            if (colon == std::string_view::npos) {
                throw ParseError(ParseErrorKind::Malformed, rd.line_no,
                                 "expected item:quantity, got: " + std::string(tok));
            }
            std::string_view item = tok.substr(0, colon);
            check_item_token(item, rd.line_no);
            std::int64_t qty = parse_positive_int(tok.substr(colon + 1), rd.line_no, "quantity");
            auto id = table.find(item);
            if (!id) {
                throw ParseError(ParseErrorKind::UnknownItem, rd.line_no,
                                 "item not in utility table: " + std::string(item));
            }
            if (!seen.insert(*id).second) {
                throw ParseError(ParseErrorKind::DuplicateItemInSequence, rd.line_no,
                                 "item repeats in sequence: " + std::string(item));
            }
            current.push_back(QItem{*id, static_cast<std::int32_t>(qty)});
        }
        if (!closed) {
            throw ParseError(ParseErrorKind::Malformed, rd.line_no, "line not closed with -2");
        }
        sequences.emplace_back(static_cast<std::int32_t>(sequences.size() + 1),
                               std::move(itemsets));
    }
    return SequenceDatabase(std::move(table), std::move(sequences), std::move(unit));
}

std::string serialize_database(const SequenceDatabase& db) {
    std::ostringstream out;
    for (const QSequence& s : db.sequences()) {
        bool first = true;
        for (std::int32_t pos = 1; pos <= s.itemset_count(); ++pos) {
            for (std::int32_t k = s.itemset_first(pos); k <= s.itemset_last(pos); ++k) {
                if (!first) out << ' ';
                first = false;
                out << db.items().token(s.item_at(k)) << ':' << s.quantity_at(k);
            }
            out << (first ? "-1" : " -1");
            first = false;
        }
        out << (first ? "-2" : " -2") << '\n';
    }
    return out.str();
}

std::string serialize_utilities(const SequenceDatabase& db) {
    std::ostringstream out;
    for (ItemId id = 0; id < static_cast<ItemId>(db.items().size()); ++id) {
        out << db.items().token(id) << ':' << db.unit_utility(id).str() << '\n';
    }
    return out.str();
}

Upsl build_upsl(const QSequence& seq, const SequenceDatabase& db) {
    std::vector<Utility> prefix;
    prefix.reserve(seq.item_count());
    Utility acc;
    for (std::int32_t k = 1; k <= seq.item_count(); ++k) {
        acc += db.unit_utility(seq.item_at(k)) * seq.quantity_at(k);
        prefix.push_back(acc);
    }
    return Upsl(std::move(prefix));
}

std::vector<Upsl> build_upsls(const SequenceDatabase& db) {
    std::vector<Upsl> out;
    out.reserve(db.size());
    for (const QSequence& s : db.sequences()) out.push_back(build_upsl(s, db));
    return out;
}

SequenceDatabase remove_items(const SequenceDatabase& db, const std::vector<ItemId>& victims) {
    std::vector<bool> dead(db.items().size(), false);
    for (ItemId v : victims) dead[v] = true;
    std::vector<QSequence> sequences;
    sequences.reserve(db.size());
    for (const QSequence& s : db.sequences()) {
        std::vector<std::vector<QItem>> itemsets;
        for (std::int32_t pos = 1; pos <= s.itemset_count(); ++pos) {
            std::vector<QItem> set;
            for (std::int32_t k = s.itemset_first(pos); k <= s.itemset_last(pos); ++k) {
                if (!dead[s.item_at(k)]) {
                    set.push_back(QItem{s.item_at(k), s.quantity_at(k)});
                }
            }
            if (!set.empty()) itemsets.push_back(std::move(set));
        }
        // Emptied sequences stay: support denominators use |D|.
        sequences.emplace_back(s.sid(), std::move(itemsets));
    }
    std::vector<Utility> unit(db.items().size());
    for (ItemId id = 0; id < static_cast<ItemId>(db.items().size()); ++id) {
        unit[id] = db.unit_utility(id);
    }
    ItemTable table = db.items();
    return SequenceDatabase(std::move(table), std::move(sequences), std::move(unit));
}

}  // namespace totalsr
