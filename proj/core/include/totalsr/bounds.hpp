#pragma once

#include <map>
#include <vector>

#include "totalsr/rules.hpp"
#include "totalsr/seqdb.hpp"

namespace totalsr {

// Non-incremental computation of the expansion upper bounds, straight from
// their definitions. These are O(|D| * |s|) reference implementations: the
// mining engine never calls them on hot paths, but its table-carried values
// must agree with them exactly, which is what the differential tests check.

struct ExtendableItem {
    ItemId item = kNoItem;
    std::int32_t index = 0;  // 1-based flat index in the sequence
    ExpandMode mode = ExpandMode::S;
};

// Items that may legally extend the antecedent in this sequence: S-mode at a
// position strictly between alpha and beta, I-mode inside the last matched
// antecedent itemset and order-greater than all of its items. When the rule
// itself does not occur (antecedent-only), beta is treated as +infinity.
// Precondition: the antecedent occurs in seq.
std::vector<ExtendableItem> left_extendable_items(const Rule& rule, const QSequence& seq);

// Items that may extend the consequent: S-mode strictly after gamma, I-mode
// inside the last matched consequent itemset and order-greater than its
// items. Precondition: the rule occurs in seq.
std::vector<ExtendableItem> right_extendable_items(const Rule& rule, const QSequence& seq);

struct BoundReport {
    std::map<std::int32_t, Utility> per_sequence;
    Utility total;
};

Utility seu_item(const SequenceDatabase& db, ItemId item);
Utility seu_rule(const SequenceDatabase& db, const Rule& rule);

// Per-sequence values. Preconditions as for the whole-database variants;
// both return 0 when the rule does not occur in the sequence.
Utility lepeu_in_seq(const Rule& rule, const QSequence& seq, const SequenceDatabase& db);
Utility repeu_in_seq(const Rule& rule, const QSequence& seq, const SequenceDatabase& db);

// LEPEU(r, s) = u(r,s) + ULeft(r,s) when ULeft > 0, else 0, where ULeft is
// the flat-range utility from the first to the last left-extendable index
// (the range may cover non-extendable interlopers; that only loosens the
// bound). Summed over seq(r).
BoundReport lepeu(const Rule& rule, const SequenceDatabase& db);

// REPEU(r, s) = u(r,s) + URight(r,s) when URight > 0, else 0; URight is the
// flat-range utility from the first right-extendable index to the end of
// the sequence.
BoundReport repeu(const Rule& rule, const SequenceDatabase& db);

// LERSU/RERSU: the parent's per-sequence LEPEU/REPEU summed over the
// sequences supporting the extended rule.
BoundReport lersu(const Rule& parent, const ExpansionKind& ext, const SequenceDatabase& db);
BoundReport rersu(const Rule& parent, const ExpansionKind& ext, const SequenceDatabase& db);

// LERSPEU/RERSPEU: u(parent,s) plus the flat-range utility from the
// extension item to the last left-extendable index (left) or to the end of
// the sequence (right), summed over the sequences supporting the child.
BoundReport lerspeu(const Rule& parent, const ExpansionKind& ext, const SequenceDatabase& db);
BoundReport rerspeu(const Rule& parent, const ExpansionKind& ext, const SequenceDatabase& db);

}  // namespace totalsr
