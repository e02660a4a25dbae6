#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dsp/errors.hpp"

namespace dsp {

/// Multiplicity vector: positive components summing to the matrix size.
/// Order is meaningful to callers (not sorted here).
using MultiplicityVector = std::vector<int>;

struct JnfEntry {
    std::string id;           // opaque eigenvalue token, distinct within a Jnf
    std::vector<int> blocks;  // non-increasing, all >= 1

    auto operator<=>(const JnfEntry&) const = default;
};

/// Jordan normal form of size n: block-size lists per eigenvalue.
struct Jnf {
    int n = 0;
    std::vector<JnfEntry> entries;

    void validate() const;  // throws ValidationError

    /// Diagonal JNF from a multiplicity vector; ids are "e0", "e1", ...
    static Jnf diagonal(const MultiplicityVector& mv);
    /// Single eigenvalue with the given block sizes.
    static Jnf single(std::vector<int> blocks, const std::string& id = "e0");

    int block_count(const JnfEntry& e) const { return static_cast<int>(e.blocks.size()); }
    int max_block_count() const;
    bool is_diagonal() const;

    auto operator<=>(const Jnf&) const = default;
};

/// Shape comparison ignoring eigenvalue ids (multiset of block lists).
bool same_shape(const Jnf& a, const Jnf& b);

/// n minus the maximal number of Jordan blocks sharing one eigenvalue.
int r_of_jnf(const Jnf& j);

/// Dimension of the conjugacy class with this JNF:
/// n^2 - sum over eigenvalues of sum_{i,i'} min(b_i, b_i'). Always even; for
/// diagonal JNFs this is n^2 - sum of squared multiplicities.
int d_of_jnf(const Jnf& j);

struct JnfTuple {
    std::vector<Jnf> jnfs;  // p+1 >= 2 entries, equal sizes

    void validate() const;
    int n() const { return jnfs.empty() ? 0 : jnfs[0].n; }
    int count() const { return static_cast<int>(jnfs.size()); }

    bool operator==(const JnfTuple&) const = default;
};

bool same_shape(const JnfTuple& a, const JnfTuple& b);

/// Index of rigidity: 2n^2 - sum of class dimensions.
long long kappa(const JnfTuple& t);

/// 1 - kappa + n^2.
long long expected_dimension(const JnfTuple& t);

struct Inequalities {
    bool alpha;  // sum d_j >= 2n^2 - 2
    bool beta;   // for all j: sum_{i != j} r_i >= n
    bool omega;  // sum r_j >= 2n
};

Inequalities check_inequalities(const JnfTuple& t);

/// One step of the JNF reduction: defined when beta holds, omega fails and
/// n > 1 (PsiUndefined otherwise). Shrinks size to n1 = sum r_j - n by
/// decreasing the n - n1 smallest blocks of a block-count-maximal eigenvalue
/// in each class. The optional choice supplies that eigenvalue id per class;
/// each must attain the maximal block count (InvalidChoice otherwise).
/// Default: first maximal id in declaration order. The input tuple is
/// assumed well-formed.
JnfTuple psi_step(const JnfTuple& t,
                  const std::optional<std::vector<std::string>>& choice = std::nullopt);

struct ConditionReport {
    bool alpha = false, beta = false, omega = false;  // of the initial tuple
    long long kappa = 0;
    enum class Verdict { satisfied, violated };
    Verdict verdict = Verdict::violated;
    std::vector<JnfTuple> trail;  // every stage, initial tuple included
    int final_n = 0;
    std::string reason;  // set when violated, e.g. "beta at stage 0"

    bool satisfied() const { return verdict == Verdict::satisfied; }
};

/// Iterate psi_step while defined (canonical eigenvalue choice); satisfied
/// iff the final tuple satisfies omega or has size 1.
ConditionReport necessary_condition(const JnfTuple& t);

}  // namespace dsp
