#include "dsp/jnf.hpp"

#include <algorithm>
#include <numeric>

namespace dsp {

void Jnf::validate() const {
    if (n <= 0) throw ValidationError("Jnf: size must be positive");
    long long total = 0;
    for (std::size_t k = 0; k < entries.size(); ++k) {
        const auto& e = entries[k];
        for (std::size_t j = k + 1; j < entries.size(); ++j)
            if (entries[j].id == e.id)
                throw ValidationError("Jnf: duplicate eigenvalue id " + e.id);
        if (e.blocks.empty()) throw ValidationError("Jnf: eigenvalue with no blocks");
        for (std::size_t i = 0; i < e.blocks.size(); ++i) {
            if (e.blocks[i] < 1) throw ValidationError("Jnf: block size must be >= 1");
            if (i > 0 && e.blocks[i] > e.blocks[i - 1])
                throw ValidationError("Jnf: blocks must be non-increasing");
            total += e.blocks[i];
        }
    }
    if (total != n) throw ValidationError("Jnf: block sizes must sum to n");
}

Jnf Jnf::diagonal(const MultiplicityVector& mv) {
    Jnf j;
    for (std::size_t i = 0; i < mv.size(); ++i) {
        if (mv[i] < 1) throw ValidationError("multiplicity vector components must be >= 1");
        j.entries.push_back({"e" + std::to_string(i), std::vector<int>(mv[i], 1)});
        j.n += mv[i];
    }
    j.validate();
    return j;
}

Jnf Jnf::single(std::vector<int> blocks, const std::string& id) {
    Jnf j;
    j.n = std::accumulate(blocks.begin(), blocks.end(), 0);
    j.entries.push_back({id, std::move(blocks)});
    j.validate();
    return j;
}

int Jnf::max_block_count() const {
    int m = 0;
    for (const auto& e : entries) m = std::max(m, block_count(e));
    return m;
}

bool Jnf::is_diagonal() const {
    for (const auto& e : entries)
        for (int b : e.blocks)
            if (b != 1) return false;
    return true;
}

bool same_shape(const Jnf& a, const Jnf& b) {
    if (a.n != b.n) return false;
    auto shape = [](const Jnf& j) {
        std::vector<std::vector<int>> s;
        for (const auto& e : j.entries) s.push_back(e.blocks);
        std::sort(s.begin(), s.end());
        return s;
    };
    return shape(a) == shape(b);
}

int r_of_jnf(const Jnf& j) {
    return j.n - j.max_block_count();
}

int d_of_jnf(const Jnf& j) {
    long long s = 0;
    for (const auto& e : j.entries)
        for (int b1 : e.blocks)
            for (int b2 : e.blocks) s += std::min(b1, b2);
    return static_cast<int>(static_cast<long long>(j.n) * j.n - s);
}

void JnfTuple::validate() const {
    if (jnfs.size() < 2) throw ValidationError("JnfTuple: need at least 2 classes");
    for (const auto& j : jnfs) {
        j.validate();
        if (j.n != jnfs[0].n) throw ValidationError("JnfTuple: sizes must agree");
    }
}

bool same_shape(const JnfTuple& a, const JnfTuple& b) {
    if (a.jnfs.size() != b.jnfs.size()) return false;
    for (std::size_t i = 0; i < a.jnfs.size(); ++i)
        if (!same_shape(a.jnfs[i], b.jnfs[i])) return false;
    return true;
}

long long kappa(const JnfTuple& t) {
    long long n = t.n(), s = 0;
    for (const auto& j : t.jnfs) s += d_of_jnf(j);
    return 2 * n * n - s;
}

long long expected_dimension(const JnfTuple& t) {
    long long n = t.n();
    return 1 - kappa(t) + n * n;
}

Inequalities check_inequalities(const JnfTuple& t) {
    long long n = t.n(), sum_d = 0, sum_r = 0;
    std::vector<long long> r;
    for (const auto& j : t.jnfs) {
        sum_d += d_of_jnf(j);
        r.push_back(r_of_jnf(j));
        sum_r += r.back();
    }
    Inequalities out;
    out.alpha = sum_d >= 2 * n * n - 2;
    out.beta = true;
    for (long long rj : r)
        if (sum_r - rj < n) out.beta = false;
    out.omega = sum_r >= 2 * n;
    return out;
}

// pre: t well-formed (the defined-ness conditions are checked here, input
// validity is the caller's contract)
JnfTuple psi_step(const JnfTuple& t, const std::optional<std::vector<std::string>>& choice) {
    int n = t.n();
    Inequalities ineq = check_inequalities(t);
    if (!ineq.beta || ineq.omega || n <= 1) {
        std::string why;
        if (!ineq.beta) why = "beta fails";
        if (ineq.omega) why += std::string(why.empty() ? "" : "; ") + "omega holds";
        if (n <= 1) why += std::string(why.empty() ? "" : "; ") + "n = 1";
        throw PsiUndefined("psi undefined: " + why);
    }
    if (choice && static_cast<int>(choice->size()) != t.count())
        throw InvalidChoice("choice must name one eigenvalue per class");

    int sum_r = 0;
    for (const auto& j : t.jnfs) sum_r += r_of_jnf(j);
    int n1 = sum_r - n;
    int drop = n - n1;

    JnfTuple out;
    for (int ci = 0; ci < t.count(); ++ci) {
        const Jnf& j = t.jnfs[ci];
        int maxc = j.max_block_count();
        std::size_t pick = j.entries.size();
        if (choice) {
            const std::string& want = (*choice)[ci];
            for (std::size_t k = 0; k < j.entries.size(); ++k)
                if (j.entries[k].id == want) pick = k;
            if (pick == j.entries.size())
                throw InvalidChoice("unknown eigenvalue id " + want);
            if (j.block_count(j.entries[pick]) != maxc)
                throw InvalidChoice("eigenvalue " + want + " does not attain the maximal block count");
        } else {
            for (std::size_t k = 0; k < j.entries.size(); ++k)
                if (j.block_count(j.entries[k]) == maxc) {
                    pick = k;
                    break;
                }
        }
        Jnf nj;
        nj.n = n1;
        for (std::size_t k = 0; k < j.entries.size(); ++k) {
            JnfEntry e = j.entries[k];
            if (k == pick) {
                // the "drop" smallest blocks are the tail of the
                // non-increasing list
                for (std::size_t b = e.blocks.size() - drop; b < e.blocks.size(); ++b) e.blocks[b] -= 1;
                while (!e.blocks.empty() && e.blocks.back() == 0) e.blocks.pop_back();
            }
            if (!e.blocks.empty()) nj.entries.push_back(std::move(e));
        }
        out.jnfs.push_back(std::move(nj));
    }
    return out;
}

ConditionReport necessary_condition(const JnfTuple& t) {
    t.validate();
    ConditionReport rep;
    Inequalities first = check_inequalities(t);
    rep.alpha = first.alpha;
    rep.beta = first.beta;
    rep.omega = first.omega;
    rep.kappa = kappa(t);
    rep.trail.push_back(t);

    JnfTuple cur = t;
    for (int stage = 0;; ++stage) {
        Inequalities ineq = check_inequalities(cur);
        if (ineq.omega) {
            rep.verdict = ConditionReport::Verdict::satisfied;
            break;
        }
        if (cur.n() == 1) {
            rep.verdict = ConditionReport::Verdict::satisfied;
            break;
        }
        if (!ineq.beta) {
            rep.verdict = ConditionReport::Verdict::violated;
            rep.reason = "beta at stage " + std::to_string(stage);
            break;
        }
        cur = psi_step(cur);
        rep.trail.push_back(cur);
    }
    rep.final_n = rep.trail.back().n();
    return rep;
}

}  // namespace dsp
