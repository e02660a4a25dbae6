#pragma once

#include <vector>

#include "dsp/constructions.hpp"

namespace dsp::testing {

/// PMV ((k+1,k),...,(k+1,k)) of four diagonal classes, size 2k+1.
inline JnfTuple lambda_tuple(int k) {
    JnfTuple t;
    for (int j = 0; j < 4; ++j) t.jnfs.push_back(Jnf::diagonal({k + 1, k}));
    return t;
}

/// Concrete eigenvalues with sum(lambda) = sum(mu) = 0 and no relations
/// beyond the ones they generate.
inline SpectralData2x2 concrete_spectral() {
    SpectralData2x2 s;
    s.lambdas = {Scalar(0L), Scalar(1L), Scalar(3L), Scalar(-4L)};
    s.mus = {Scalar(2L), Scalar(5L), Scalar(11L), Scalar(-18L)};
    return s;
}

/// The four diagonalizable classes with lambda_j of multiplicity k+1 and
/// mu_j of multiplicity k.
inline std::vector<ConjugacyClassSpec> lambda_classes(int k) {
    SpectralData2x2 s = concrete_spectral();
    std::vector<ConjugacyClassSpec> out;
    for (int j = 0; j < 4; ++j) out.push_back(s.class_at(j, k + 1, k));
    return out;
}

/// All integer partitions of n (non-increasing), used to sweep diagonal
/// JNFs.
inline void partitions_rec(int n, int maxpart, std::vector<int>& cur,
                           std::vector<std::vector<int>>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (int k = std::min(n, maxpart); k >= 1; --k) {
        cur.push_back(k);
        partitions_rec(n - k, k, cur, out);
        cur.pop_back();
    }
}

inline std::vector<std::vector<int>> partitions(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    partitions_rec(n, n, cur, out);
    return out;
}

/// All JNF shapes of size n: multisets of partitions with total n, realized
/// with ids e0, e1, ... Enumerated as non-increasing (by standard vector
/// order) sequences of partitions to avoid duplicates.
inline void jnf_shapes_rec(int n, std::vector<int> bound, bool bounded,
                           std::vector<std::vector<int>>& cur,
                           std::vector<std::vector<std::vector<int>>>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (int first = n; first >= 1; --first) {
        for (const auto& part : partitions(first)) {
            if (bounded && !(part <= bound)) continue;
            cur.push_back(part);
            jnf_shapes_rec(n - first, part, true, cur, out);
            cur.pop_back();
        }
    }
}

inline std::vector<Jnf> all_jnfs(int n) {
    std::vector<std::vector<std::vector<int>>> shapes;
    std::vector<std::vector<int>> cur;
    jnf_shapes_rec(n, {}, false, cur, shapes);
    std::vector<Jnf> out;
    for (const auto& shape : shapes) {
        Jnf j;
        j.n = n;
        for (std::size_t i = 0; i < shape.size(); ++i)
            j.entries.push_back({"e" + std::to_string(i), shape[i]});
        j.validate();
        out.push_back(std::move(j));
    }
    return out;
}

}  // namespace dsp::testing
