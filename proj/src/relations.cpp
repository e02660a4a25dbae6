#include "dsp/relations.hpp"

#include <algorithm>
#include <set>

namespace dsp {

bool check_global_condition(const std::vector<ConjugacyClassSpec>& classes) {
    if (classes.empty()) throw EmptyClassList();
    for (const auto& c : classes) c.validate();
    if (classes[0].flavor == Flavor::additive) {
        Scalar s(0L);
        for (const auto& c : classes) s += c.trace();
        return s.is_zero();
    }
    Scalar p(1L);
    for (const auto& c : classes) p *= c.det_weighted();
    return p == Scalar(1L);
}

namespace {

// All vectors (a_i) with 0 <= a_i <= mult_i and sum = card, lexicographic.
void splits_rec(const std::vector<int>& mults, std::size_t i, int remaining,
                std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (i == mults.size()) {
        if (remaining == 0) out.push_back(cur);
        return;
    }
    int rest_cap = 0;
    for (std::size_t k = i + 1; k < mults.size(); ++k) rest_cap += mults[k];
    for (int a = 0; a <= std::min(mults[i], remaining); ++a) {
        if (remaining - a > rest_cap) continue;
        cur.push_back(a);
        splits_rec(mults, i + 1, remaining - a, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<int>> splits(const std::vector<int>& mults, int card) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    splits_rec(mults, 0, card, cur, out);
    return out;
}

// Expand a per-class split to the first-index witness set.
std::vector<int> expand_split(const ConjugacyClassSpec& c, const std::vector<int>& split) {
    std::vector<int> idx;
    int offset = 0;
    for (std::size_t i = 0; i < c.spectrum.size(); ++i) {
        for (int k = 0; k < split[i]; ++k) idx.push_back(offset + k);
        offset += c.spectrum[i].mult();
    }
    return idx;
}

std::vector<int> split_of_witness(const ConjugacyClassSpec& c, const std::vector<int>& set) {
    std::vector<int> split(c.spectrum.size(), 0);
    for (int idx : set) {
        int offset = 0;
        for (std::size_t i = 0; i < c.spectrum.size(); ++i) {
            int m = c.spectrum[i].mult();
            if (idx < offset + m) {
                split[i] += 1;
                break;
            }
            offset += m;
        }
    }
    return split;
}

}  // namespace

RelationWitness canonicalize_relation(const RelationWitness& w,
                                      const std::vector<ConjugacyClassSpec>& classes) {
    RelationWitness direct, comp;
    int n = classes[0].n;
    for (std::size_t j = 0; j < classes.size(); ++j) {
        std::vector<int> split = split_of_witness(classes[j], w.sets[j]);
        std::vector<int> csplit(split.size());
        for (std::size_t i = 0; i < split.size(); ++i)
            csplit[i] = classes[j].spectrum[i].mult() - split[i];
        direct.sets.push_back(expand_split(classes[j], split));
        comp.sets.push_back(expand_split(classes[j], csplit));
    }
    direct.cardinality = w.cardinality;
    comp.cardinality = n - w.cardinality;
    return direct.sets <= comp.sets ? direct : comp;
}

std::vector<RelationWitness> enumerate_relations(const std::vector<ConjugacyClassSpec>& classes,
                                                 const RelationOptions& opts) {
    if (classes.empty()) throw EmptyClassList();
    for (const auto& c : classes) {
        c.validate();
        if (c.n != classes[0].n) throw ValidationError("classes must have equal size");
        if (c.flavor != classes[0].flavor) throw ValidationError("classes must share one flavor");
    }
    int n = classes[0].n;
    bool additive = classes[0].flavor == Flavor::additive;
    int max_card = opts.max_card > 0 ? opts.max_card : n - 1;
    if (max_card >= n) throw ValidationError("max_card must be < n");

    std::vector<std::vector<int>> mults;
    for (const auto& c : classes) {
        std::vector<int> m;
        for (const auto& e : c.spectrum) m.push_back(e.mult());
        mults.push_back(std::move(m));
    }

    std::set<std::vector<std::vector<int>>> seen;
    std::vector<RelationWitness> out;
    long long spent = 0;

    for (int card = 1; card <= max_card; ++card) {
        std::vector<std::vector<std::vector<int>>> per_class;
        long long count = 1;
        for (std::size_t j = 0; j < classes.size(); ++j) {
            per_class.push_back(splits(mults[j], card));
            if (per_class.back().empty()) {
                count = 0;
                break;
            }
            count *= static_cast<long long>(per_class.back().size());
            if (count > opts.budget)
                throw SizeLimit("relation enumeration exceeds budget of " +
                                std::to_string(opts.budget) + " candidate tuples");
        }
        if (count == 0) continue;
        spent += count;
        if (spent > opts.budget)
            throw SizeLimit("relation enumeration exceeds budget of " +
                            std::to_string(opts.budget) + " candidate tuples");

        std::vector<std::size_t> pick(classes.size(), 0);
        for (;;) {
            Scalar acc(additive ? 0L : 1L);
            for (std::size_t j = 0; j < classes.size(); ++j) {
                const auto& split = per_class[j][pick[j]];
                for (std::size_t i = 0; i < split.size(); ++i) {
                    if (split[i] == 0) continue;
                    const Scalar& v = classes[j].spectrum[i].value;
                    if (additive)
                        acc += v * Scalar(static_cast<long>(split[i]));
                    else
                        acc *= v.pow(split[i]);
                }
            }
            bool hit = additive ? acc.is_zero() : acc == Scalar(1L);
            if (hit) {
                RelationWitness w;
                w.cardinality = card;
                for (std::size_t j = 0; j < classes.size(); ++j)
                    w.sets.push_back(expand_split(classes[j], per_class[j][pick[j]]));
                RelationWitness canon = canonicalize_relation(w, classes);
                if (seen.insert(canon.sets).second) out.push_back(std::move(canon));
            }
            // odometer
            std::size_t j = 0;
            while (j < pick.size() && ++pick[j] == per_class[j].size()) pick[j++] = 0;
            if (j == pick.size()) break;
        }
    }
    std::sort(out.begin(), out.end(),
              [](const RelationWitness& a, const RelationWitness& b) { return a.sets < b.sets; });
    return out;
}

DeltaResult delta_min_rank_sum(const std::vector<ConjugacyClassSpec>& classes) {
    if (classes.empty()) throw EmptyClassList();
    for (const auto& c : classes) {
        c.validate();
        if (c.n != classes[0].n) throw ValidationError("classes must have equal size");
        if (c.flavor != classes[0].flavor) throw ValidationError("classes must share one flavor");
    }
    int n = classes[0].n;
    bool additive = classes[0].flavor == Flavor::additive;
    std::size_t p1 = classes.size();

    long long total = 1;
    for (const auto& c : classes) {
        total *= static_cast<long long>(c.spectrum.size()) + 1;
        if (total > 100'000'000LL) throw SizeLimit("delta enumeration too large");
    }

    DeltaResult best;
    best.min_value = -1;

    // choice s_j = spectrum size means "free shift"
    std::vector<std::size_t> pick(p1, 0);
    for (;;) {
        long long value = 0;
        int free_count = 0;
        std::size_t free_at = 0;
        for (std::size_t j = 0; j < p1; ++j) {
            if (pick[j] == classes[j].spectrum.size()) {
                ++free_count;
                free_at = j;
                value += n;
            } else {
                value += n - static_cast<long long>(classes[j].spectrum[pick[j]].blocks.size());
            }
        }
        bool feasible = false;
        std::optional<Scalar> determined;
        if (best.min_value < 0 || value < best.min_value) {
            if (free_count == 0) {
                Scalar acc(additive ? 0L : 1L);
                for (std::size_t j = 0; j < p1; ++j) {
                    const Scalar& v = classes[j].spectrum[pick[j]].value;
                    if (additive)
                        acc += v;
                    else
                        acc *= v;
                }
                feasible = additive ? acc.is_zero() : acc == Scalar(1L);
            } else if (free_count == 1) {
                // the free shift is determined by the constraint; it only
                // contributes rank n when it misses the spectrum
                Scalar acc(additive ? 0L : 1L);
                for (std::size_t j = 0; j < p1; ++j) {
                    if (j == free_at) continue;
                    const Scalar& v = classes[j].spectrum[pick[j]].value;
                    if (additive)
                        acc += v;  // shift b_j equals the eigenvalue
                    else
                        acc *= v.inverse();  // shift b_j = 1/eigenvalue
                }
                Scalar b = additive ? -acc : acc.inverse();
                Scalar spectral_point = additive ? b : b.inverse();
                feasible = classes[free_at].find_eigenvalue(spectral_point) < 0;
                determined = b;
            } else {
                feasible = true;  // infinite field, finitely many spectra to avoid
            }
        }
        if (feasible && (best.min_value < 0 || value < best.min_value)) {
            best.min_value = value;
            best.witness.clear();
            for (std::size_t j = 0; j < p1; ++j) {
                ShiftChoice sc;
                if (pick[j] == classes[j].spectrum.size()) {
                    sc.free = true;
                    if (free_count == 1) sc.shift = determined;
                } else {
                    sc.eigenvalue_index = static_cast<int>(pick[j]);
                    const Scalar& v = classes[j].spectrum[pick[j]].value;
                    sc.shift = additive ? v : v.inverse();
                }
                best.witness.push_back(std::move(sc));
            }
        }
        std::size_t j = p1;
        while (j > 0 && ++pick[j - 1] == classes[j - 1].spectrum.size() + 1) pick[--j] = 0;
        if (j == 0) break;
    }
    return best;
}

}  // namespace dsp
