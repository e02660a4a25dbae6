#include "dsp/classes.hpp"

namespace dsp {

void ConjugacyClassSpec::validate() const {
    if (n <= 0) throw ValidationError("class: size must be positive");
    if (spectrum.empty()) throw ValidationError("class: empty spectrum");
    long long total = 0;
    for (std::size_t i = 0; i < spectrum.size(); ++i) {
        const auto& e = spectrum[i];
        if (e.blocks.empty()) throw ValidationError("class: eigenvalue with no blocks");
        for (std::size_t k = 0; k < e.blocks.size(); ++k) {
            if (e.blocks[k] < 1) throw ValidationError("class: block size must be >= 1");
            if (k > 0 && e.blocks[k] > e.blocks[k - 1])
                throw ValidationError("class: blocks must be non-increasing");
            total += e.blocks[k];
        }
        for (std::size_t j = i + 1; j < spectrum.size(); ++j)
            if (e.value == spectrum[j].value)
                throw ValidationError("class: eigenvalues must be pairwise distinct");
        if (flavor == Flavor::multiplicative && e.value.is_zero())
            throw ValidationError("class: multiplicative eigenvalues must be nonzero");
    }
    if (total != n) throw ValidationError("class: multiplicities must sum to n");
}

ConjugacyClassSpec ConjugacyClassSpec::diagonalizable(
    int n, Flavor flavor, const std::vector<std::pair<Scalar, int>>& eigs) {
    ConjugacyClassSpec c;
    c.n = n;
    c.flavor = flavor;
    for (const auto& [v, m] : eigs) c.spectrum.push_back({v, std::vector<int>(m, 1)});
    c.validate();
    return c;
}

Jnf ConjugacyClassSpec::jnf() const {
    Jnf j;
    j.n = n;
    for (std::size_t i = 0; i < spectrum.size(); ++i)
        j.entries.push_back({"e" + std::to_string(i), spectrum[i].blocks});
    return j;
}

bool ConjugacyClassSpec::is_diagonalizable() const {
    for (const auto& e : spectrum)
        for (int b : e.blocks)
            if (b != 1) return false;
    return true;
}

Scalar ConjugacyClassSpec::trace() const {
    Scalar t(0L);
    for (const auto& e : spectrum) t += e.value * Scalar(static_cast<long>(e.mult()));
    return t;
}

Scalar ConjugacyClassSpec::det_weighted() const {
    Scalar d(1L);
    for (const auto& e : spectrum) d *= e.value.pow(e.mult());
    return d;
}

std::vector<Scalar> ConjugacyClassSpec::eigenvalues_with_multiplicity() const {
    std::vector<Scalar> out;
    for (const auto& e : spectrum)
        for (int k = 0; k < e.mult(); ++k) out.push_back(e.value);
    return out;
}

int ConjugacyClassSpec::find_eigenvalue(const Scalar& v) const {
    for (std::size_t i = 0; i < spectrum.size(); ++i)
        if (spectrum[i].value == v) return static_cast<int>(i);
    return -1;
}

JnfTuple jnf_tuple(const std::vector<ConjugacyClassSpec>& classes) {
    JnfTuple t;
    for (const auto& c : classes) t.jnfs.push_back(c.jnf());
    t.validate();
    return t;
}

}  // namespace dsp
