#include "totalsr/oracle.hpp"

#include <algorithm>

namespace totalsr {

namespace {

std::int32_t pattern_items(const Pattern& p) {
    std::int32_t n = 0;
    for (const auto& s : p) n += static_cast<std::int32_t>(s.size());
    return n;
}

struct Enumerator {
    const SequenceDatabase& db;
    const OracleLimits& limits;
    std::int32_t item_cap;
    std::vector<ScoredRule> out;

    void emit_splits(const Pattern& pattern) {
        if (pattern.size() < 2) return;
        for (std::size_t cut = 1; cut < pattern.size(); ++cut) {
            Rule rule;
            rule.antecedent.assign(pattern.begin(), pattern.begin() + cut);
            rule.consequent.assign(pattern.begin() + cut, pattern.end());
            if (rule.antecedent_items() > limits.max_antecedent_items) continue;
            if (rule.consequent_items() > limits.max_consequent_items) continue;
            ScoredRule scored;
            scored.rule = rule;
            scored.support = support(rule, db);
            if (scored.support.num == 0) continue;
            scored.confidence = confidence(rule, db);
            scored.utility = rule_utility(rule, db);
            out.push_back(std::move(scored));
        }
    }

    void dfs(Pattern& pattern, std::vector<ItemId>& used) {
        emit_splits(pattern);
        if (pattern_items(pattern) >= item_cap) return;
        for (ItemId item = 0; item < static_cast<ItemId>(db.items().size()); ++item) {
            if (std::find(used.begin(), used.end(), item) != used.end()) continue;
            // I-extension keeps itemsets canonical: only order-greater items.
            if (item > pattern.back().back()) {
                pattern.back().push_back(item);
                used.push_back(item);
                if (occurs_somewhere(pattern)) dfs(pattern, used);
                used.pop_back();
                pattern.back().pop_back();
            }
            pattern.push_back({item});
            used.push_back(item);
            if (occurs_somewhere(pattern)) dfs(pattern, used);
            used.pop_back();
            pattern.pop_back();
        }
    }

    bool occurs_somewhere(const Pattern& pattern) const {
        for (const QSequence& s : db.sequences()) {
            if (match_pattern(pattern, s)) return true;
        }
        return false;
    }

    void run() {
        for (ItemId item = 0; item < static_cast<ItemId>(db.items().size()); ++item) {
            Pattern pattern{{item}};
            std::vector<ItemId> used{item};
            if (occurs_somewhere(pattern)) dfs(pattern, used);
        }
    }
};

}  // namespace

std::vector<ScoredRule> enumerate_rules(const SequenceDatabase& db, const OracleLimits& limits) {
    std::int32_t cap = std::min(limits.max_total_items,
                                limits.max_antecedent_items + limits.max_consequent_items);
    Enumerator e{db, limits, cap, {}};
    e.run();
    std::sort(e.out.begin(), e.out.end(), [&](const ScoredRule& a, const ScoredRule& b) {
        return rule_text(a.rule, db.items()) < rule_text(b.rule, db.items());
    });
    return std::move(e.out);
}

std::vector<ScoredRule> oracle_mine(const SequenceDatabase& db, const Thresholds& thresholds,
                                    const OracleLimits& limits) {
    std::vector<ScoredRule> all = enumerate_rules(db, limits);
    std::vector<ScoredRule> kept;
    for (auto& r : all) {
        if (r.utility >= thresholds.minutil && r.confidence >= thresholds.minconf) {
            kept.push_back(std::move(r));
        }
    }
    return kept;
}

}  // namespace totalsr
