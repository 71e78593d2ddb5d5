#include "totalsr/bounds.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace totalsr {

namespace {

bool contains(const std::vector<ItemId>& sorted, ItemId item) {
    return std::binary_search(sorted.begin(), sorted.end(), item);
}

Utility flat_range_utility(const SequenceDatabase& db, const QSequence& seq,
                           std::int32_t from, std::int32_t to) {
    Utility total;
    for (std::int32_t k = from; k <= to; ++k) total += db.utility_at(seq.sid(), k);
    return total;
}

}  // namespace

std::vector<ExtendableItem> left_extendable_items(const Rule& rule, const QSequence& seq) {
    auto xs = match_pattern(rule.antecedent, seq);
    if (!xs) throw std::invalid_argument("antecedent does not occur in sequence");
    std::int32_t alpha = xs->back();
    std::int32_t beta = std::numeric_limits<std::int32_t>::max();
    if (auto occ = occurs_in(rule, seq)) beta = occ->beta;

    auto in_ant = rule.antecedent_flat_sorted();
    auto in_con = rule.consequent_flat_sorted();
    ItemId last_max = rule.antecedent.back().back();

    std::vector<ExtendableItem> out;
    for (std::int32_t k = 1; k <= seq.item_count(); ++k) {
        ItemId item = seq.item_at(k);
        if (contains(in_ant, item) || contains(in_con, item)) continue;
        std::int32_t pos = seq.position_of_index(k);
        if (pos == alpha && item > last_max) {
            out.push_back({item, k, ExpandMode::I});
        } else if (pos > alpha && pos < beta) {
            out.push_back({item, k, ExpandMode::S});
        }
    }
    return out;
}

std::vector<ExtendableItem> right_extendable_items(const Rule& rule, const QSequence& seq) {
    auto occ = occurs_in(rule, seq);
    if (!occ) throw std::invalid_argument("rule does not occur in sequence");
    std::int32_t gamma = occ->gamma;

    auto in_ant = rule.antecedent_flat_sorted();
    auto in_con = rule.consequent_flat_sorted();
    ItemId last_max = rule.consequent.back().back();

    std::vector<ExtendableItem> out;
    for (std::int32_t k = 1; k <= seq.item_count(); ++k) {
        ItemId item = seq.item_at(k);
        if (contains(in_ant, item) || contains(in_con, item)) continue;
        std::int32_t pos = seq.position_of_index(k);
        if (pos == gamma && item > last_max) {
            out.push_back({item, k, ExpandMode::I});
        } else if (pos > gamma) {
            out.push_back({item, k, ExpandMode::S});
        }
    }
    return out;
}

Utility seu_item(const SequenceDatabase& db, ItemId item) {
    Utility total;
    for (const QSequence& s : db.sequences()) {
        if (s.index_of(item)) total += db.sequence_total_utility(s.sid());
    }
    return total;
}

Utility seu_rule(const SequenceDatabase& db, const Rule& rule) {
    Utility total;
    for (const QSequence& s : db.sequences()) {
        if (occurs_in(rule, s)) total += db.sequence_total_utility(s.sid());
    }
    return total;
}

Utility lepeu_in_seq(const Rule& rule, const QSequence& seq, const SequenceDatabase& db) {
    if (!occurs_in(rule, seq)) return Utility{};
    auto exts = left_extendable_items(rule, seq);
    if (exts.empty()) return Utility{};
    Utility uleft = flat_range_utility(db, seq, exts.front().index, exts.back().index);
    return rule_utility_in_seq(rule, seq, db) + uleft;
}

Utility repeu_in_seq(const Rule& rule, const QSequence& seq, const SequenceDatabase& db) {
    if (!occurs_in(rule, seq)) return Utility{};
    auto exts = right_extendable_items(rule, seq);
    if (exts.empty()) return Utility{};
    Utility uright = flat_range_utility(db, seq, exts.front().index, seq.item_count());
    return rule_utility_in_seq(rule, seq, db) + uright;
}

BoundReport lepeu(const Rule& rule, const SequenceDatabase& db) {
    BoundReport report;
    for (const QSequence& s : db.sequences()) {
        if (!occurs_in(rule, s)) continue;
        Utility value = lepeu_in_seq(rule, s, db);
        report.per_sequence[s.sid()] = value;
        report.total += value;
    }
    return report;
}

BoundReport repeu(const Rule& rule, const SequenceDatabase& db) {
    BoundReport report;
    for (const QSequence& s : db.sequences()) {
        if (!occurs_in(rule, s)) continue;
        Utility value = repeu_in_seq(rule, s, db);
        report.per_sequence[s.sid()] = value;
        report.total += value;
    }
    return report;
}

BoundReport lersu(const Rule& parent, const ExpansionKind& ext, const SequenceDatabase& db) {
    if (ext.side != Side::Left) throw std::invalid_argument("lersu needs a left expansion");
    Rule child = apply_expansion(parent, ext);
    BoundReport parent_lepeu = lepeu(parent, db);
    BoundReport report;
    for (const QSequence& s : db.sequences()) {
        if (!occurs_in(child, s)) continue;
        Utility value = parent_lepeu.per_sequence[s.sid()];
        report.per_sequence[s.sid()] = value;
        report.total += value;
    }
    return report;
}

BoundReport rersu(const Rule& parent, const ExpansionKind& ext, const SequenceDatabase& db) {
    if (ext.side != Side::Right) throw std::invalid_argument("rersu needs a right expansion");
    Rule child = apply_expansion(parent, ext);
    BoundReport parent_repeu = repeu(parent, db);
    BoundReport report;
    for (const QSequence& s : db.sequences()) {
        if (!occurs_in(child, s)) continue;
        Utility value = parent_repeu.per_sequence[s.sid()];
        report.per_sequence[s.sid()] = value;
        report.total += value;
    }
    return report;
}

BoundReport lerspeu(const Rule& parent, const ExpansionKind& ext, const SequenceDatabase& db) {
    if (ext.side != Side::Left) throw std::invalid_argument("lerspeu needs a left expansion");
    Rule child = apply_expansion(parent, ext);
    BoundReport report;
    for (const QSequence& s : db.sequences()) {
        if (!occurs_in(child, s)) continue;
        auto exts = left_extendable_items(parent, s);
        auto idx = s.index_of(ext.item);
        // The child occurs here, so the item is an extendable of the parent.
        Utility uileft = flat_range_utility(db, s, *idx, exts.back().index);
        Utility value = rule_utility_in_seq(parent, s, db) + uileft;
        report.per_sequence[s.sid()] = value;
        report.total += value;
    }
    return report;
}

BoundReport rerspeu(const Rule& parent, const ExpansionKind& ext, const SequenceDatabase& db) {
    if (ext.side != Side::Right) throw std::invalid_argument("rerspeu needs a right expansion");
    Rule child = apply_expansion(parent, ext);
    BoundReport report;
    for (const QSequence& s : db.sequences()) {
        if (!occurs_in(child, s)) continue;
        auto idx = s.index_of(ext.item);
        Utility uiright = flat_range_utility(db, s, *idx, s.item_count());
        Utility value = rule_utility_in_seq(parent, s, db) + uiright;
        report.per_sequence[s.sid()] = value;
        report.total += value;
    }
    return report;
}

}  // namespace totalsr
