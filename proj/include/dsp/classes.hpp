#pragma once

#include <vector>

#include "dsp/jnf.hpp"
#include "dsp/scalar.hpp"

namespace dsp {

enum class Flavor { additive, multiplicative };

struct SpectrumEntry {
    Scalar value;
    std::vector<int> blocks;  // non-increasing Jordan block sizes

    int mult() const {
        int m = 0;
        for (int b : blocks) m += b;
        return m;
    }
};

/// A conjugacy class in gl(n) (additive) or GL(n) (multiplicative), given by
/// its exact eigenvalues with Jordan block structure.
struct ConjugacyClassSpec {
    int n = 0;
    Flavor flavor = Flavor::additive;
    std::vector<SpectrumEntry> spectrum;

    void validate() const;  // throws ValidationError

    /// Diagonalizable class: each eigenvalue with mult blocks of size 1.
    static ConjugacyClassSpec diagonalizable(int n, Flavor flavor,
                                             const std::vector<std::pair<Scalar, int>>& eigs);

    Jnf jnf() const;  // ids "e0", "e1", ... in spectrum order
    int r() const { return r_of_jnf(jnf()); }
    int d() const { return d_of_jnf(jnf()); }
    bool is_diagonalizable() const;

    Scalar trace() const;        // sum of eigenvalues with multiplicity
    Scalar det_weighted() const; // product of eigenvalues with multiplicity

    std::vector<Scalar> eigenvalues_with_multiplicity() const;  // spectrum order

    /// Index into spectrum, or -1 when the value is not an eigenvalue.
    int find_eigenvalue(const Scalar& v) const;
};

JnfTuple jnf_tuple(const std::vector<ConjugacyClassSpec>& classes);

}  // namespace dsp
