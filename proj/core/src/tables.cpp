#include "totalsr/tables.hpp"

#include <algorithm>
#include <sstream>

#include "totalsr/bounds.hpp"

namespace totalsr {

TableMeasures table_measures(const LETable& table) {
    TableMeasures m;
    for (const LEElement& row : table.rows) {
        ++m.antecedent_count;
        if (!row.utility.is_zero()) ++m.support_count;
        m.utility_sum += row.utility;
        m.lepeu_sum += row.lepeu;
        m.repeu_sum += row.repeu;
    }
    return m;
}

TableMeasures table_measures(const RETable& table) {
    TableMeasures m;
    for (const REElement& row : table.rows) {
        ++m.antecedent_count;
        if (!row.utility.is_zero()) ++m.support_count;
        m.utility_sum += row.utility;
        m.repeu_sum += row.repeu;
    }
    return m;
}

void Art::record(const std::string& antecedent_key, std::int32_t sid) {
    auto& sids = entries_[antecedent_key];
    auto it = std::lower_bound(sids.begin(), sids.end(), sid);
    if (it == sids.end() || *it != sid) sids.insert(it, sid);
}

std::int64_t Art::count(const std::string& antecedent_key) const {
    auto it = entries_.find(antecedent_key);
    return it == entries_.end() ? 0 : static_cast<std::int64_t>(it->second.size());
}

const std::vector<std::int32_t>* Art::sids(const std::string& antecedent_key) const {
    auto it = entries_.find(antecedent_key);
    return it == entries_.end() ? nullptr : &it->second;
}

LEElement le_element(const Rule& rule, const QSequence& seq, const SequenceDatabase& db) {
    LEElement row;
    row.sid = seq.sid();
    auto occ = occurs_in(rule, seq);
    if (!occ) {
        auto xs = match_pattern(rule.antecedent, seq);
        if (!xs) throw std::invalid_argument("antecedent does not occur in sequence");
        row.alpha = xs->back();
        return row;
    }
    row.alpha = occ->alpha;
    row.beta = occ->beta;
    row.gamma = occ->gamma;
    row.utility = rule_utility_in_seq(rule, seq, db);
    row.lepeu = lepeu_in_seq(rule, seq, db);
    row.repeu = repeu_in_seq(rule, seq, db);
    row.last_index = seq.item_count();
    auto exts = left_extendable_items(rule, seq);
    row.first_ext_index = exts.empty() ? row.last_index : exts.front().index;
    return row;
}

REElement re_element(const Rule& rule, const QSequence& seq, const SequenceDatabase& db) {
    REElement row;
    row.sid = seq.sid();
    auto occ = occurs_in(rule, seq);
    if (!occ) {
        if (!antecedent_occurs_in(rule.antecedent, seq)) {
            throw std::invalid_argument("antecedent does not occur in sequence");
        }
        return row;
    }
    row.gamma = occ->gamma;
    row.utility = rule_utility_in_seq(rule, seq, db);
    row.repeu = repeu_in_seq(rule, seq, db);
    row.last_index = seq.item_count();
    return row;
}

LETable build_le_table(const Rule& rule, const SequenceDatabase& db) {
    LETable table;
    for (const QSequence& s : db.sequences()) {
        if (antecedent_occurs_in(rule.antecedent, s)) {
            table.rows.push_back(le_element(rule, s, db));
        }
    }
    return table;
}

RETable build_re_table(const Rule& rule, const SequenceDatabase& db) {
    RETable table;
    for (const QSequence& s : db.sequences()) {
        if (antecedent_occurs_in(rule.antecedent, s)) {
            table.rows.push_back(re_element(rule, s, db));
        }
    }
    return table;
}

LETable build_le_table_plus(const Rule& rule, const SequenceDatabase& db) {
    LETable table;
    for (const QSequence& s : db.sequences()) {
        if (occurs_in(rule, s)) table.rows.push_back(le_element(rule, s, db));
    }
    return table;
}

Art build_art(const Rule& rule, const SequenceDatabase& db) {
    Art art;
    std::string key = pattern_text(rule.antecedent, db.items());
    for (const QSequence& s : db.sequences()) {
        if (antecedent_occurs_in(rule.antecedent, s) && !occurs_in(rule, s)) {
            art.record(key, s.sid());
        }
    }
    return art;
}

namespace {

std::string triple(std::int32_t a, std::int32_t b, std::int32_t c) {
    return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
}

std::string pair_text(std::int32_t a, std::int32_t b) {
    return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

}  // namespace

std::string dump_le_table(const LETable& table) {
    std::ostringstream out;
    for (const LEElement& r : table.rows) {
        out << 's' << r.sid << '\t' << r.utility.str() << '\t' << r.lepeu.str() << '\t'
            << r.repeu.str() << '\t' << triple(r.alpha, r.beta, r.gamma) << '\t'
            << pair_text(r.first_ext_index, r.last_index) << '\n';
    }
    return out.str();
}

std::string dump_re_table(const RETable& table) {
    std::ostringstream out;
    for (const REElement& r : table.rows) {
        out << 's' << r.sid << '\t' << r.utility.str() << '\t' << r.repeu.str() << '\t'
            << r.gamma << '\t' << r.last_index << '\n';
    }
    return out.str();
}

std::string dump_upsl(const Upsl& upsl) {
    std::ostringstream out;
    for (std::int32_t k = 1; k <= upsl.size(); ++k) {
        if (k > 1) out << '\t';
        out << upsl.prefix_at(k).str();
    }
    out << '\n';
    return out.str();
}

std::string dump_art(const Art& art) {
    std::ostringstream out;
    for (const auto& [key, sids] : art.entries()) {
        out << key << ':';
        for (std::size_t i = 0; i < sids.size(); ++i) {
            out << (i ? "," : " ") << 's' << sids[i];
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace totalsr
