#pragma once

#include <optional>
#include <vector>

#include "dsp/classes.hpp"

namespace dsp {

/// Sum of all eigenvalues is 0 (additive) / product is 1 (multiplicative),
/// exactly.
bool check_global_condition(const std::vector<ConjugacyClassSpec>& classes);

/// A non-genericity relation: index subsets (into each class's
/// with-multiplicity eigenvalue list) of one common cardinality < n whose
/// eigenvalue sum vanishes (additive) or product is 1 (multiplicative).
/// Stored canonically: the lexicographically smaller of the witness and its
/// complement.
struct RelationWitness {
    std::vector<std::vector<int>> sets;  // sorted indices per class
    int cardinality = 0;

    bool operator==(const RelationWitness&) const = default;
};

struct RelationOptions {
    int max_card = 0;              // 0 means n - 1
    long long budget = 10'000'000; // candidate tuples across all cardinalities
};

/// All satisfied relations with 1 <= |set| <= max_card, one canonical
/// representative per complement pair, in deterministic order. Enumeration
/// runs over multiplicity splits of the distinct eigenvalues, expanded to
/// first-index witnesses. Throws SizeLimit past the budget.
std::vector<RelationWitness> enumerate_relations(const std::vector<ConjugacyClassSpec>& classes,
                                                 const RelationOptions& opts = {});

inline bool is_generic(const std::vector<ConjugacyClassSpec>& classes,
                       const RelationOptions& opts = {}) {
    return enumerate_relations(classes, opts).empty();
}

/// Canonical form of a witness (min of itself and its complement) for the
/// given class list; used by property tests.
RelationWitness canonicalize_relation(const RelationWitness& w,
                                      const std::vector<ConjugacyClassSpec>& classes);

/// Per-class choice in a delta witness: an eigenvalue of the class or an
/// off-spectrum shift. `shift` is the value b_j when it is determined
/// (eigenvalue case: b = eigenvalue additively, b = 1/eigenvalue
/// multiplicatively; single-free case: the constraint-determined value).
struct ShiftChoice {
    bool free = false;
    int eigenvalue_index = -1;
    std::optional<Scalar> shift;
};

struct DeltaResult {
    long long min_value = 0;
    std::vector<ShiftChoice> witness;
};

/// Exact minimum over shifts b_j with sum 0 (resp. product 1) of
/// sum_j rk(A_j - b_j I) (resp. rk(b_j M_j - I)), A_j in class j. Finite
/// enumeration over on-spectrum assignments; off-spectrum shifts contribute
/// rank n and are feasible whenever at least two indices are free, or when
/// one is free and the determined value avoids the spectrum (as a rational
/// function). Ties broken by lexicographic witness order.
DeltaResult delta_min_rank_sum(const std::vector<ConjugacyClassSpec>& classes);

}  // namespace dsp
