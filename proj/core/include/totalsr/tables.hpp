#pragma once

#include <map>
#include <string>
#include <vector>

#include "totalsr/rules.hpp"
#include "totalsr/seqdb.hpp"

namespace totalsr {

// Incremental bookkeeping carried along rule expansions. One LE element per
// sequence that contains the rule's antecedent; sequences that contain only
// the antecedent carry the sentinel row (utility 0, positions (alpha,-1,-1),
// indices (-1,-1)) and exist purely for antecedent-support counting.
struct LEElement {
    std::int32_t sid = 0;
    Utility utility;
    Utility lepeu;
    Utility repeu;
    std::int32_t alpha = -1;
    std::int32_t beta = -1;
    std::int32_t gamma = -1;
    // Flat index of the first item that can legally extend the antecedent;
    // equals last_index when the rule occurs but nothing is extendable, and
    // -1 on antecedent-only rows.
    std::int32_t first_ext_index = -1;
    std::int32_t last_index = -1;  // flat item count of the sequence

    bool full() const { return beta != -1; }
};

struct REElement {
    std::int32_t sid = 0;
    Utility utility;
    Utility repeu;
    std::int32_t gamma = -1;       // last consequent itemset position
    std::int32_t last_index = -1;  // flat item count of the sequence

    bool full() const { return gamma != -1; }
};

// Rows ascend by sid, at most one per sid. The plus-variant tables reuse the
// same row types but hold only rows for sequences containing the full rule.
struct LETable {
    std::vector<LEElement> rows;
};

struct RETable {
    std::vector<REElement> rows;
};

struct TableMeasures {
    std::int64_t support_count = 0;     // rows with utility != 0
    std::int64_t antecedent_count = 0;  // all rows
    Utility utility_sum;
    Utility lepeu_sum;
    Utility repeu_sum;
};

TableMeasures table_measures(const LETable& table);
TableMeasures table_measures(const RETable& table);

// Auxiliary antecedent record table: canonical antecedent -> sorted sids
// that contain the antecedent but cannot form the rule. Keeps antecedent
// support computable when the plus tables drop sentinel rows.
class Art {
public:
    // Idempotent insertion.
    void record(const std::string& antecedent_key, std::int32_t sid);
    std::int64_t count(const std::string& antecedent_key) const;
    const std::vector<std::int32_t>* sids(const std::string& antecedent_key) const;
    bool empty() const { return entries_.empty(); }
    const std::map<std::string, std::vector<std::int32_t>>& entries() const { return entries_; }

private:
    std::map<std::string, std::vector<std::int32_t>> entries_;
};

// Reference builders, computed from scratch per definition. The engine keeps
// its tables incrementally; these exist for inspection and as test oracles.
LEElement le_element(const Rule& rule, const QSequence& seq, const SequenceDatabase& db);
REElement re_element(const Rule& rule, const QSequence& seq, const SequenceDatabase& db);

LETable build_le_table(const Rule& rule, const SequenceDatabase& db);
RETable build_re_table(const Rule& rule, const SequenceDatabase& db);
// Plus-variant: rows only for sequences containing the rule.
LETable build_le_table_plus(const Rule& rule, const SequenceDatabase& db);
Art build_art(const Rule& rule, const SequenceDatabase& db);

// Debug dump formats (tab-separated, one row per line) used by the CLI
// `inspect` subcommand; column order mirrors the table definitions.
std::string dump_le_table(const LETable& table);
std::string dump_re_table(const RETable& table);
std::string dump_upsl(const Upsl& upsl);
std::string dump_art(const Art& art);

}  // namespace totalsr
