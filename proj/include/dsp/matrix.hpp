#pragma once

#include <initializer_list>
#include <vector>

#include "dsp/classes.hpp"
#include "dsp/scalar.hpp"

namespace dsp {

/// Dense matrix over the exact scalar field.
struct ExactMatrix {
    int rows = 0, cols = 0;
    std::vector<Scalar> entries;  // row-major

    ExactMatrix() = default;
    ExactMatrix(int r, int c) : rows(r), cols(c), entries(static_cast<std::size_t>(r) * c) {}

    static ExactMatrix identity(int n);
    static ExactMatrix zero(int r, int c) { return ExactMatrix(r, c); }
    /// E_{i,j}: unit in position (i, j), zero elsewhere (0-based).
    static ExactMatrix unit(int n, int i, int j);
    static ExactMatrix from_rows(std::initializer_list<std::initializer_list<Scalar>> rows);
    static ExactMatrix diagonal(const std::vector<Scalar>& d);

    Scalar& at(int i, int j) { return entries[static_cast<std::size_t>(i) * cols + j]; }
    const Scalar& at(int i, int j) const { return entries[static_cast<std::size_t>(i) * cols + j]; }

    bool is_square() const { return rows == cols; }
    bool is_zero() const;
    /// Scalar multiple of the identity (square matrices).
    bool is_scalar_matrix() const;

    ExactMatrix operator+(const ExactMatrix&) const;
    ExactMatrix operator-(const ExactMatrix&) const;
    ExactMatrix operator*(const ExactMatrix&) const;
    ExactMatrix operator-() const;
    ExactMatrix scale(const Scalar&) const;
    ExactMatrix transpose() const;
    bool operator==(const ExactMatrix&) const;

    /// Assemble from a grid of blocks; row heights and column widths must be
    /// consistent across the grid.
    static ExactMatrix block_assemble(const std::vector<std::vector<ExactMatrix>>& grid);
    static ExactMatrix block_diagonal(const std::vector<ExactMatrix>& blocks);

    std::vector<Scalar> apply(const std::vector<Scalar>& v) const;  // matrix * column
};

/// Exact rank via fraction-free (Bareiss) elimination.
int rank(const ExactMatrix& a);

/// Basis of the right kernel {v : a v = 0}; vectors satisfy the equation
/// exactly and are linearly independent.
std::vector<std::vector<Scalar>> kernel_basis(const ExactMatrix& a);

/// Inverse of a square invertible matrix (Error if singular).
ExactMatrix inverse(const ExactMatrix& a);

/// Membership test by rank profiles of powers: a is in the class iff for
/// every listed eigenvalue with blocks b_1 >= b_2 >= ... and all k <= b_1,
/// rank((a - lambda I)^k) = n - sum_i min(k, b_i). Together with the class
/// invariant that multiplicities sum to n this pins the Jordan form.
bool class_membership(const ExactMatrix& a, const ConjugacyClassSpec& c);

/// Block-diagonal Jordan matrix realizing the class.
ExactMatrix jordan_representative(const ConjugacyClassSpec& c);

/// Incremental row-space builder over the scalar field (reduced rows with
/// unit pivots). Deterministic; used for span growth and containment tests.
class SpanBuilder {
public:
    explicit SpanBuilder(std::size_t width) : width_(width) {}

    /// Returns true when the vector enlarged the span.
    bool insert(std::vector<Scalar> v);
    bool contains(std::vector<Scalar> v) const;
    int dimension() const { return static_cast<int>(rows_.size()); }
    const std::vector<std::vector<Scalar>>& rows() const { return rows_; }

private:
    std::size_t width_;
    std::vector<std::vector<Scalar>> rows_;
    std::vector<std::size_t> pivots_;
    void reduce(std::vector<Scalar>& v) const;
};

std::vector<Scalar> vec(const ExactMatrix& m);            // row-major flatten
ExactMatrix unvec(const std::vector<Scalar>& v, int rows, int cols);

}  // namespace dsp
