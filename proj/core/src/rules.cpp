#include "totalsr/rules.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace totalsr {

std::int32_t Rule::antecedent_items() const {
    std::int32_t n = 0;
    for (const auto& s : antecedent) n += static_cast<std::int32_t>(s.size());
    return n;
}

std::int32_t Rule::consequent_items() const {
    std::int32_t n = 0;
    for (const auto& s : consequent) n += static_cast<std::int32_t>(s.size());
    return n;
}

static std::vector<ItemId> flat_sorted(const Pattern& p) {
    std::vector<ItemId> out;
    for (const auto& s : p) out.insert(out.end(), s.begin(), s.end());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<ItemId> Rule::antecedent_flat_sorted() const { return flat_sorted(antecedent); }
std::vector<ItemId> Rule::consequent_flat_sorted() const { return flat_sorted(consequent); }

bool Rule::valid() const {
    if (antecedent.empty() || consequent.empty()) return false;
    auto check = [](const Pattern& p) {
        for (const auto& s : p) {
            if (s.empty() || !std::is_sorted(s.begin(), s.end())) return false;
            if (std::adjacent_find(s.begin(), s.end()) != s.end()) return false;
        }
        return true;
    };
    if (!check(antecedent) || !check(consequent)) return false;
    auto a = antecedent_flat_sorted();
    auto c = consequent_flat_sorted();
    if (std::adjacent_find(a.begin(), a.end()) != a.end()) return false;
    if (std::adjacent_find(c.begin(), c.end()) != c.end()) return false;
    std::vector<ItemId> inter;
    std::set_intersection(a.begin(), a.end(), c.begin(), c.end(), std::back_inserter(inter));
    return inter.empty();
}

bool rule_size_less(const RuleSize& a, const RuleSize& b) {
    return (a.k <= b.k && a.m < b.m) || (a.k < b.k && a.m <= b.m);
}

std::optional<std::vector<std::int32_t>> match_pattern(const Pattern& p, const QSequence& seq) {
    std::vector<std::int32_t> positions;
    positions.reserve(p.size());
    std::int32_t prev = 0;
    for (const Itemset& set : p) {
        // Items occur at most once, so all members of a pattern itemset must
        // sit in the same sequence itemset; that itemset is forced.
        auto pos0 = seq.position_of(set.front());
        if (!pos0) return std::nullopt;
        for (std::size_t i = 1; i < set.size(); ++i) {
            auto pos = seq.position_of(set[i]);
            if (!pos || *pos != *pos0) return std::nullopt;
        }
        if (*pos0 <= prev) return std::nullopt;
        prev = *pos0;
        positions.push_back(*pos0);
    }
    return positions;
}

bool antecedent_occurs_in(const Pattern& antecedent, const QSequence& seq) {
    return match_pattern(antecedent, seq).has_value();
}

std::optional<Occurrence> occurs_in(const Rule& rule, const QSequence& seq) {
    auto xa = match_pattern(rule.antecedent, seq);
    if (!xa) return std::nullopt;
    auto ya = match_pattern(rule.consequent, seq);
    if (!ya) return std::nullopt;
    std::int32_t alpha = xa->back();
    std::int32_t beta = ya->front();
    if (beta <= alpha) return std::nullopt;
    return Occurrence{seq.sid(), alpha, beta, ya->back()};
}

Fraction support(const Rule& rule, const SequenceDatabase& db) {
    if (db.size() == 0) return Fraction::zero();
    std::int64_t n = 0;
    for (const QSequence& s : db.sequences()) {
        if (occurs_in(rule, s)) ++n;
    }
    return Fraction::of(n, db.size());
}

Fraction confidence(const Rule& rule, const SequenceDatabase& db) {
    std::int64_t sup = 0, ant = 0;
    for (const QSequence& s : db.sequences()) {
        if (antecedent_occurs_in(rule.antecedent, s)) {
            ++ant;
            if (occurs_in(rule, s)) ++sup;
        }
    }
    if (ant == 0) throw std::domain_error("confidence undefined: antecedent unsupported");
    return Fraction::of(sup, ant);
}

Utility rule_utility_in_seq(const Rule& rule, const QSequence& seq, const SequenceDatabase& db) {
    if (!occurs_in(rule, seq)) return Utility{};
    Utility total;
    auto add = [&](const Pattern& p) {
        for (const Itemset& set : p) {
            for (ItemId item : set) total += db.item_utility(item, seq.sid());
        }
    };
    add(rule.antecedent);
    add(rule.consequent);
    return total;
}

Utility rule_utility(const Rule& rule, const SequenceDatabase& db) {
    Utility total;
    for (const QSequence& s : db.sequences()) total += rule_utility_in_seq(rule, s, db);
    return total;
}

Rule apply_expansion(const Rule& rule, const ExpansionKind& kind) {
    Rule out = rule;
    Pattern& side = kind.side == Side::Left ? out.antecedent : out.consequent;
    auto a = rule.antecedent_flat_sorted();
    auto c = rule.consequent_flat_sorted();
    if (std::binary_search(a.begin(), a.end(), kind.item) ||
        std::binary_search(c.begin(), c.end(), kind.item)) {
        throw std::invalid_argument("expansion item already in rule");
    }
    if (kind.mode == ExpandMode::I) {
        Itemset& last = side.back();
        if (kind.item <= last.back()) {
            throw std::invalid_argument("I-expansion item must be order-greater than the itemset");
        }
        last.push_back(kind.item);
    } else {
        side.push_back(Itemset{kind.item});
    }
    return out;
}

std::string itemset_text(const Itemset& set, const ItemTable& items) {
    std::string out = "{";
    for (std::size_t i = 0; i < set.size(); ++i) {
        if (i) out += ',';
        out += items.token(set[i]);
    }
    out += '}';
    return out;
}

std::string pattern_text(const Pattern& p, const ItemTable& items) {
    std::string out;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) out += ',';
        out += itemset_text(p[i], items);
    }
    return out;
}

std::string rule_text(const Rule& rule, const ItemTable& items) {
    return pattern_text(rule.antecedent, items) + " -> " + pattern_text(rule.consequent, items);
}

namespace {

Pattern parse_pattern_text(std::string_view text, const ItemTable& items) {
    Pattern out;
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    while (true) {
        skip_ws();
        if (i >= text.size() || text[i] != '{') {
            throw std::invalid_argument("expected '{' in rule text");
        }
        ++i;
        Itemset set;
        std::string token;
        while (i < text.size() && text[i] != '}') {
            if (text[i] == ',') {
                if (token.empty()) throw std::invalid_argument("empty item in rule text");
                auto id = items.find(token);
                if (!id) throw std::invalid_argument("unknown item: " + token);
                set.push_back(*id);
                token.clear();
            } else if (!std::isspace(static_cast<unsigned char>(text[i]))) {
                token += text[i];
            }
            ++i;
        }
        if (i >= text.size()) throw std::invalid_argument("unterminated itemset");
        if (token.empty()) throw std::invalid_argument("empty item in rule text");
        auto id = items.find(token);
        if (!id) throw std::invalid_argument("unknown item: " + token);
        set.push_back(*id);
        ++i;  // '}'
        std::sort(set.begin(), set.end());
        out.push_back(std::move(set));
        skip_ws();
        if (i < text.size() && text[i] == ',') {
            ++i;
            continue;
        }
        break;
    }
    skip_ws();
    if (i != text.size()) throw std::invalid_argument("trailing text in pattern");
    return out;
}

}  // namespace

Rule parse_rule_text(std::string_view text, const ItemTable& items) {
    auto arrow = text.find("->");
    if (arrow == std::string_view::npos) {
        throw std::invalid_argument("rule text missing '->'");
    }
    Rule rule;
    rule.antecedent = parse_pattern_text(text.substr(0, arrow), items);
    rule.consequent = parse_pattern_text(text.substr(arrow + 2), items);
    if (!rule.valid()) throw std::invalid_argument("invalid rule: " + std::string(text));
    return rule;
}

}  // namespace totalsr
