#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "dsp/matrix.hpp"

namespace dsp {

/// A (p+1)-tuple of square matrices of common size, additive (sum expected
/// to be 0) or multiplicative (ordered product expected to be I), optionally
/// bound to class specs. The constraint is checked by verify_tuple, not
/// enforced at construction.
struct MatrixTuple {
    Flavor flavor = Flavor::additive;
    std::vector<ExactMatrix> matrices;
    std::optional<std::vector<ConjugacyClassSpec>> classes;

    int n() const { return matrices.empty() ? 0 : matrices[0].rows; }
    int count() const { return static_cast<int>(matrices.size()); }
    void validate_shapes() const;  // throws ShapeMismatch
};

struct VerifyReport {
    bool constraint_ok = false;
    std::vector<bool> membership_ok;  // empty when no classes are bound

    bool all_ok() const {
        if (!constraint_ok) return false;
        for (bool m : membership_ok)
            if (!m) return false;
        return true;
    }
};

VerifyReport verify_tuple(const MatrixTuple& t);

/// Dimension of {Z : Z A_j = A_j Z for all j}; >= 1 always, 1 means the
/// centralizer is trivial.
int centralizer_dimension(const MatrixTuple& t);
/// Basis of that space as matrices.
std::vector<ExactMatrix> centralizer_basis(const MatrixTuple& t);

/// Dimension of the unital algebra generated by the matrices (span of I and
/// all words, grown until stable).
int algebra_dimension(const MatrixTuple& t);

/// Burnside criterion: absolutely irreducible iff the generated algebra is
/// the full n x n matrix algebra.
bool is_irreducible(const MatrixTuple& t);

/// Schur test for irreducible tuples: equivalent iff a nonzero intertwiner
/// X A_j = B_j X exists. PreconditionViolated unless both tuples are
/// irreducible of equal size and length.
bool are_equivalent(const MatrixTuple& a, const MatrixTuple& b);

struct TangentDims {
    long long direct;   // sum d_j - rank of the summed-commutator map
    long long formula;  // sum d_j - n^2 + centralizer dimension
};

/// Both tangent-space dimension computations for an additive tuple with
/// verified classes; throws if they disagree (trace-form duality makes them
/// equal).
TangentDims tangent_dimension(const MatrixTuple& t);

struct InvariantLine {
    std::vector<int> selection;              // eigenvalue index per class
    std::vector<std::vector<Scalar>> basis;  // common eigenvectors for it
};

/// Invariant planes are searched per selection of restricted eigenvalue
/// pairs, through the induced action on the exterior square: a plane is
/// invariant iff its wedge ω is a common eigenvector there. Selections
/// sharing the same per-class pair sums collapse into one stratum whose
/// kernel is computed once. A one-dimensional kernel with decomposable ω
/// pins an isolated plane (extracted into plane_basis); a larger kernel is
/// reported as a family by its ω-basis.
struct InvariantPlaneStratum {
    std::vector<Scalar> key;  // per-class pair sum (additive) or product
    std::vector<std::vector<std::pair<int, int>>> pair_selections;
    std::vector<std::vector<Scalar>> omega_basis;
    bool decomposable = false;
    std::vector<std::vector<Scalar>> plane_basis;  // two vectors when isolated
};

struct InvariantReport {
    std::vector<InvariantLine> lines;
    std::vector<InvariantPlaneStratum> planes;

    bool any() const { return !lines.empty() || !planes.empty(); }
};

/// Common invariant subspaces of dimension 1 (and 2 when max_dim = 2).
/// Classes must be bound; the plane search requires diagonalizable classes.
InvariantReport invariant_subspaces(const MatrixTuple& t, int max_dim);

/// Wedge coordinates of span{v, w} (basis e_a ^ e_b, a < b).
std::vector<Scalar> wedge(const std::vector<Scalar>& v, const std::vector<Scalar>& w);

/// Induced operator on the exterior square: the derivation
/// v^w -> Av^w + v^Aw when additive, the product map Mv^Mw otherwise.
ExactMatrix exterior_square_operator(const ExactMatrix& m, bool additive);

/// Strip everything above the diagonal blocks of a tuple that is block
/// upper-triangular for the given partition; NotBlockTriangular otherwise.
MatrixTuple diagonal_limit(const MatrixTuple& t, const std::vector<int>& partition);

}  // namespace dsp
