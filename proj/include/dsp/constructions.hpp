#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "dsp/relations.hpp"
#include "dsp/rng.hpp"
#include "dsp/tuples.hpp"

namespace dsp {

struct ConstructionFailed : Error {
    std::optional<MatrixTuple> best_witness;
    explicit ConstructionFailed(const std::string& msg) : Error(msg) {}
};

/// Eigenvalues for the 2x2 building blocks: four lambda_j, mu_j with both
/// sums zero and lambda_j != mu_j for every j.
struct SpectralData2x2 {
    std::vector<Scalar> lambdas, mus;

    void validate() const;  // throws SpectralConstraintViolated
    /// Diagonalizable class with eigenvalues lambda_j (mult lm) and mu_j
    /// (mult mm); entries with zero multiplicity are dropped.
    ConjugacyClassSpec class_at(int j, int lm, int mm) const;
};

/// The irreducible zero-sum quadruple of 2x2 matrices over (lambda_j, mu_j)
/// classes, parametrized by u != 0:
///   [l1 1; 0 m1], [l2 -1; 0 m2], [l3 0; u m3], [l4 0; -u m4].
MatrixTuple build_type_b_quadruple(const SpectralData2x2& s, const Scalar& u);

/// The upper-triangular zero-sum quadruple of (2l+1)x(2l+1) matrices with
/// eigenvalue multiplicities (l+1, l) and trivial centralizer. The permuted
/// variant places equal eigenvalues first and last on the diagonal, which
/// forces E_{1,n} into the centralizer.
MatrixTuple build_type_h_quadruple(int l, const SpectralData2x2& s, bool permuted = false);

/// Split a non-scalar 2x2 matrix S with tr S = tr c1 + tr c2 into B1 + B2
/// with B1 in c1, B2 in c2 (classes with two distinct eigenvalues each).
/// When S[0][1] = 0 the split is done in a conjugated frame and mapped back.
std::pair<ExactMatrix, ExactMatrix> split_sum_2x2(const ExactMatrix& S,
                                                  const ConjugacyClassSpec& c1,
                                                  const ConjugacyClassSpec& c2);

/// Irreducible zero-sum tuple over >= 3 diagonalizable 2x2 classes: fixed
/// representatives for classes 3..p+1 are stirred by seed-driven unimodular
/// conjugations until the completion through split_sum_2x2 is irreducible.
/// Budget of 64 attempts, then ConstructionFailed carrying the best
/// reducible witness found.
MatrixTuple build_2x2_irreducible(const std::vector<ConjugacyClassSpec>& classes,
                                  std::uint64_t seed);

/// Block-diagonal point with s type-B blocks (parameters u_list, pairwise
/// non-equivalent) and one type-H block of size n - 2s (the 1x1 lambda tuple
/// when n - 2s = 1). Centralizer dimension s + 1 is verified.
MatrixTuple build_hb_point(int s, const SpectralData2x2& spec, int n,
                           const std::vector<Scalar>& u_list, bool conjugate = false,
                           std::uint64_t seed = 1);

/// The two components of the disconnected 2x2 example (eigenvalues pi, 2 /
/// 1-pi, -1 / a single non-scalar class at -1) and the two epsilon-families
/// joining their closures. pi is the formal symbol t1.
enum class DisconnectedVariant { component_upper, component_lower, family_upper, family_lower };
MatrixTuple build_disconnected_triple(DisconnectedVariant variant, const Scalar& eps = Scalar(0L));

enum class ExtendSide { left, right };

struct ExtensionResult {
    MatrixTuple tuple;
    int dim_big = 0;    // solution space of the coupled column (or row) system
    int dim_small = 0;  // the common-column subspace inside it
};

/// Extend an irreducible zero-sum tuple of size n-2 by a repeated scalar
/// eigenvalue block of size 2: two independent representatives of the
/// quotient of the coupled-column space by the common-column space become
/// the coupling columns (left) or rows (right). The result has trivial
/// centralizer; the quotient must be 2-dimensional (ExtDimensionMismatch).
ExtensionResult extend_scalar_block(const MatrixTuple& h, const std::vector<Scalar>& mus,
                                    ExtendSide side);

struct HbDims {
    int n = 0, s = 0;
    long long dim_hb = 0;    // n^2 + s - 1
    long long expected = 0;  // 1 - kappa + n^2
    long long kappa = 0;
    std::optional<long long> alt_form;  // n^2 + (n-3)/2 when s = (n-1)/2
};

HbDims stratum_dims_hb(int n, int s);

/// Classes with multiplicity vectors (m_j, 1, ..., 1), r_j = n - m_j summing
/// to 2n - 2, and the dominant eigenvalues satisfying the single relation
/// sum mu_j = 0.
struct SpikedInstance {
    int n = 0, p = 0;
    std::vector<int> m, r;
    std::vector<Scalar> mu;
    std::vector<ConjugacyClassSpec> classes;
    std::vector<ConjugacyClassSpec> star_classes;   // mu multiplicity reduced by 2
    std::vector<ConjugacyClassSpec> prime_classes;  // reduced by 1
};

struct SpikedDims {
    int n = 0;
    std::vector<int> r;
    long long dim_u = 0;  // 3(n-1)^2 + 1 - sum r_j^2
    long long dim_w = 0;  // dim_u - 1
    long long kappa = 0;
    long long expected = 0;
    // proof bookkeeping
    long long u_prime = 0;        // sum d(prime classes) - ((n-1)^2 - 1)
    long long u_star = 0;         // sum d(star classes) - ((n-2)^2 - 1)
    long long transversal_u = 0;  // 2n - 2
    long long transversal_w = 0;  // 2(n - 2)
    long long w_pre_transversal = 0;  // u_star + 2n
};

SpikedDims stratum_dims_spiked(int n, const std::vector<int>& m);

/// Concrete rational eigenvalues for the spiked shape, re-certified by
/// exhaustive relation enumeration: retries seeds until the only relations
/// are the family generated by sum mu_j = 0. The options bound the
/// certification budget.
SpikedInstance make_spiked_instance(int n, int p, std::uint64_t seed,
                                    const RelationOptions& opts = {});

/// Relation-witness filter used by the instance search: true when the
/// witness (or its complement) takes a constant number of copies of the
/// dominant eigenvalue in every class and nothing else.
bool is_dominant_family_relation(const RelationWitness& w,
                                 const std::vector<ConjugacyClassSpec>& classes);

}  // namespace dsp
