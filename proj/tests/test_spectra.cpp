#include <doctest.h>

#include <set>

#include "dsp/jnf.hpp"
#include "dsp/matrix.hpp"
#include "dsp/relations.hpp"
#include "helpers.hpp"

using namespace dsp;
using namespace dsp::testing;

namespace {

// Independent oracle for class dimension: n^2 minus the kernel dimension of
// Z -> [Z, J] on a Jordan representative with a rational eigenvalue.
int d_oracle(const Jnf& j) {
    ConjugacyClassSpec c;
    c.n = j.n;
    c.flavor = Flavor::additive;
    long val = 2;
    for (const auto& e : j.entries) c.spectrum.push_back({Scalar(val++), e.blocks});
    ExactMatrix rep = jordan_representative(c);
    int n = j.n;
    ExactMatrix sys(n * n, n * n);
    for (int i = 0; i < n; ++i)
        for (int cc = 0; cc < n; ++cc)
            for (int k = 0; k < n; ++k) {
                sys.at(i * n + cc, i * n + k) += rep.at(k, cc);
                sys.at(i * n + cc, k * n + cc) -= rep.at(i, k);
            }
    return n * n - static_cast<int>(kernel_basis(sys).size());
}

JnfTuple diagonal_tuple(const std::vector<std::vector<int>>& mvs) {
    JnfTuple t;
    for (const auto& mv : mvs) t.jnfs.push_back(Jnf::diagonal(mv));
    return t;
}

// All verdicts reachable by admissible eigenvalue choices at every stage.
void sweep_choices(const JnfTuple& t, std::set<std::pair<int, bool>>& outcomes, int depth = 0) {
    REQUIRE(depth < 32);
    Inequalities ineq = check_inequalities(t);
    if (ineq.omega || t.n() == 1) {
        outcomes.insert({t.n(), true});
        return;
    }
    if (!ineq.beta) {
        outcomes.insert({t.n(), false});
        return;
    }
    // enumerate every per-class combination of maximal eigenvalue ids
    std::vector<std::vector<std::string>> options;
    for (const auto& j : t.jnfs) {
        std::vector<std::string> ids;
        int maxc = j.max_block_count();
        for (const auto& e : j.entries)
            if (static_cast<int>(e.blocks.size()) == maxc) ids.push_back(e.id);
        options.push_back(std::move(ids));
    }
    std::vector<std::size_t> pick(options.size(), 0);
    for (;;) {
        std::vector<std::string> choice;
        for (std::size_t i = 0; i < options.size(); ++i) choice.push_back(options[i][pick[i]]);
        JnfTuple next = psi_step(t, choice);
        next.validate();  // the step must produce well-formed tuples
        sweep_choices(next, outcomes, depth + 1);
        std::size_t i = 0;
        while (i < pick.size() && ++pick[i] == options[i].size()) pick[i++] = 0;
        if (i == pick.size()) break;
    }
}

}  // namespace

TEST_CASE("r of a JNF") {
    CHECK(r_of_jnf(Jnf::diagonal({3, 2})) == 2);
    CHECK(r_of_jnf(Jnf::diagonal({4})) == 0);       // scalar
    CHECK(r_of_jnf(Jnf::diagonal({1, 1, 1})) == 2); // distinct eigenvalues
    CHECK(r_of_jnf(Jnf::single({3})) == 2);
}

TEST_CASE("d of a JNF") {
    CHECK(d_of_jnf(Jnf::diagonal({3, 2})) == 12);
    CHECK(d_of_jnf(Jnf::diagonal({4})) == 0);
    CHECK(d_of_jnf(Jnf::single({3})) == d_oracle(Jnf::single({3})));
    CHECK(d_of_jnf(Jnf::single({3})) == 6);
}

TEST_CASE("d formula matches the commutator-kernel oracle for all JNFs, n <= 5") {
    for (int n = 1; n <= 5; ++n)
        for (const Jnf& j : all_jnfs(n)) CHECK(d_of_jnf(j) == d_oracle(j));
}

TEST_CASE("diagonal r and d agree with the multiplicity formulas, n <= 8") {
    for (int n = 1; n <= 8; ++n)
        for (const auto& mv : partitions(n)) {
            Jnf j = Jnf::diagonal(mv);
            int maxm = *std::max_element(mv.begin(), mv.end());
            long long sq = 0;
            for (int m : mv) sq += static_cast<long long>(m) * m;
            CHECK(r_of_jnf(j) == n - maxm);
            CHECK(d_of_jnf(j) == n * n - sq);
        }
}

TEST_CASE("d is even for every JNF with n <= 8") {
    for (int n = 1; n <= 8; ++n)
        for (const Jnf& j : all_jnfs(n)) CHECK(d_of_jnf(j) % 2 == 0);
}

TEST_CASE("kappa") {
    CHECK(kappa(lambda_tuple(1)) == 2);
    for (int k = 1; k <= 5; ++k) CHECK(kappa(lambda_tuple(k)) == 2);
    // the disconnected example: two diagonal distinct classes and one
    // non-scalar class with a single eigenvalue, n = 2
    JnfTuple t;
    t.jnfs = {Jnf::diagonal({1, 1}), Jnf::diagonal({1, 1}), Jnf::single({2})};
    CHECK(kappa(t) == 2);
    JnfTuple scalars;
    scalars.jnfs = {Jnf::diagonal({1}), Jnf::diagonal({1})};
    CHECK(kappa(scalars) == 2);
}

TEST_CASE("expected dimension") {
    for (int k = 1; k <= 4; ++k) {
        int n = 2 * k + 1;
        CHECK(expected_dimension(lambda_tuple(k)) == n * n - 1);
    }
    JnfTuple t;
    t.jnfs = {Jnf::diagonal({1, 1}), Jnf::diagonal({1, 1}), Jnf::single({2})};
    CHECK(expected_dimension(t) == 3);
    // four 2x2 diagonal-distinct classes have kappa = 0 and expected dim 5
    JnfTuple q = diagonal_tuple({{1, 1}, {1, 1}, {1, 1}, {1, 1}});
    CHECK(kappa(q) == 0);
    CHECK(expected_dimension(q) == 5);
}

TEST_CASE("the three inequalities") {
    auto [a2, b2, o2] = check_inequalities(lambda_tuple(2));
    CHECK(a2);
    CHECK(b2);
    CHECK_FALSE(o2);

    // six classes with MV (3,1), n = 4: rank sum 2n - 2 = 6 < 8
    JnfTuple spiked = diagonal_tuple({{3, 1}, {3, 1}, {3, 1}, {3, 1}, {3, 1}, {3, 1}});
    auto [a4, b4, o4] = check_inequalities(spiked);
    long long sum_d = 6 * d_of_jnf(Jnf::diagonal({3, 1}));
    CHECK(a4 == (sum_d >= 2 * 16 - 2));
    CHECK(a4);
    CHECK(b4);
    CHECK_FALSE(o4);

    JnfTuple pair = diagonal_tuple({{1, 1}, {1, 1}});
    auto [ap, bp, op] = check_inequalities(pair);
    (void)ap;
    CHECK_FALSE(bp);
    CHECK_FALSE(op);
}

TEST_CASE("psi step") {
    CHECK(same_shape(psi_step(lambda_tuple(3)), lambda_tuple(2)));
    CHECK(psi_step(lambda_tuple(3)).n() == 5);

    JnfTuple spiked = diagonal_tuple({{3, 1}, {3, 1}, {3, 1}, {3, 1}, {3, 1}, {3, 1}});
    JnfTuple reduced = psi_step(spiked);
    CHECK(reduced.n() == 2);
    CHECK(same_shape(reduced, diagonal_tuple({{1, 1}, {1, 1}, {1, 1}, {1, 1}, {1, 1}, {1, 1}})));

    // undefined cases report why
    CHECK_THROWS_AS(psi_step(diagonal_tuple({{1, 1}, {1, 1}})), PsiUndefined);
    CHECK_THROWS_AS(psi_step(diagonal_tuple({{1, 1, 1}, {1, 1, 1}, {1, 1, 1}})), PsiUndefined);

    // choices must attain the maximal block count
    JnfTuple lt = lambda_tuple(2);
    CHECK_THROWS_AS(psi_step(lt, std::vector<std::string>{"e1", "e1", "e1", "e1"}), InvalidChoice);
    CHECK_THROWS_AS(psi_step(lt, std::vector<std::string>{"nope", "e0", "e0", "e0"}),
                    InvalidChoice);
    CHECK(psi_step(lt, std::vector<std::string>{"e0", "e0", "e0", "e0"}) == psi_step(lt));
}

TEST_CASE("psi size bounds across an exhaustive diagonal sweep") {
    for (int n = 2; n <= 8; ++n) {
        auto parts = partitions(n);
        for (std::size_t i = 0; i < parts.size(); ++i)
            for (std::size_t j = 0; j < parts.size(); ++j)
                for (std::size_t k = 0; k < parts.size(); ++k) {
                    JnfTuple t = diagonal_tuple({parts[i], parts[j], parts[k]});
                    Inequalities ineq = check_inequalities(t);
                    if (!ineq.beta || ineq.omega) continue;
                    JnfTuple out = psi_step(t);
                    CHECK(out.n() < n);
                    for (const auto& jn : t.jnfs) CHECK(n - out.n() <= n - r_of_jnf(jn));
                }
    }
}

TEST_CASE("necessary condition: the PMV family") {
    ConditionReport rep = necessary_condition(lambda_tuple(2));
    CHECK(rep.satisfied());
    CHECK(rep.final_n == 1);
    CHECK(rep.kappa == 2);
    REQUIRE(rep.trail.size() == 3);
    CHECK(same_shape(rep.trail[1], lambda_tuple(1)));
    CHECK(rep.trail[2].n() == 1);
    CHECK(rep.kappa % 2 == 0);
}

TEST_CASE("necessary condition: spiked shape satisfied via omega after one step") {
    JnfTuple spiked = diagonal_tuple({{3, 1}, {3, 1}, {3, 1}, {3, 1}, {3, 1}, {3, 1}});
    ConditionReport rep = necessary_condition(spiked);
    CHECK(rep.satisfied());
    CHECK(rep.final_n == 2);
    CHECK(rep.trail.size() == 2);
    CHECK(check_inequalities(rep.trail.back()).omega);
}

TEST_CASE("necessary condition: violated reports the stage") {
    ConditionReport rep = necessary_condition(diagonal_tuple({{1, 1}, {1, 1}}));
    CHECK_FALSE(rep.satisfied());
    CHECK(rep.reason == "beta at stage 0");
    CHECK(rep.final_n == 2);
}

TEST_CASE("verdict and endpoint do not depend on tie choices (exhaustive sweeps)") {
    // every diagonal triple and quadruple up to n = 6, plus all general JNF
    // triples up to n = 5
    auto run = [](const JnfTuple& t) {
        ConditionReport rep = necessary_condition(t);
        std::set<std::pair<int, bool>> outcomes;
        sweep_choices(t, outcomes);
        REQUIRE(outcomes.size() == 1);
        CHECK(outcomes.begin()->first == rep.final_n);
        CHECK(outcomes.begin()->second == rep.satisfied());
    };
    for (int n = 2; n <= 6; ++n) {
        auto parts = partitions(n);
        for (std::size_t i = 0; i < parts.size(); ++i)
            for (std::size_t j = 0; j < parts.size(); ++j)
                for (std::size_t k = 0; k < parts.size(); ++k) {
                    run(diagonal_tuple({parts[i], parts[j], parts[k]}));
                    if (n <= 5)
                        for (std::size_t l = 0; l < parts.size(); ++l)
                            run(diagonal_tuple({parts[i], parts[j], parts[k], parts[l]}));
                }
    }
    for (int n = 2; n <= 5; ++n) {
        auto shapes = all_jnfs(n);
        for (const auto& a : shapes)
            for (const auto& b : shapes)
                for (const auto& c : shapes) {
                    JnfTuple t;
                    t.jnfs = {a, b, c};
                    run(t);
                }
    }
}

// ------------------------------------------------------------------- delta

namespace {

// Independent brute force: recurse over all assignments of eigenvalues or a
// free shift per class, tracking the constraint symbolically.
long long delta_oracle(const std::vector<ConjugacyClassSpec>& classes) {
    int n = classes[0].n;
    bool additive = classes[0].flavor == Flavor::additive;
    long long best = -1;
    std::size_t p1 = classes.size();
    std::vector<int> choice(p1);
    auto value_of = [&]() {
        long long v = 0;
        int frees = 0;
        std::size_t free_at = 0;
        for (std::size_t j = 0; j < p1; ++j) {
            if (choice[j] < 0) {
                ++frees;
                free_at = j;
                v += n;
            } else {
                v += n - static_cast<long long>(classes[j].spectrum[choice[j]].blocks.size());
            }
        }
        Scalar acc(additive ? 0L : 1L);
        for (std::size_t j = 0; j < p1; ++j) {
            if (choice[j] < 0) continue;
            const Scalar& e = classes[j].spectrum[choice[j]].value;
            if (additive)
                acc += e;
            else
                acc *= e;
        }
        if (frees == 0) {
            bool ok = additive ? acc.is_zero() : acc == Scalar(1L);
            return ok ? v : -1;
        }
        if (frees == 1) {
            // additive: the determined shift -acc must miss the spectrum.
            // multiplicative: the determined shift is b = prod sigma = acc
            // and rk(bM - I) = n iff 1/b misses the spectrum.
            Scalar probe = additive ? -acc : acc.inverse();
            return classes[free_at].find_eigenvalue(probe) < 0 ? v : -1;
        }
        return v;
    };
    auto rec = [&](auto&& self, std::size_t j) -> void {
        if (j == p1) {
            long long v = value_of();
            if (v >= 0 && (best < 0 || v < best)) best = v;
            return;
        }
        for (int c = -1; c < static_cast<int>(classes[j].spectrum.size()); ++c) {
            choice[j] = c;
            self(self, j + 1);
        }
    };
    rec(rec, 0);
    return best;
}

}  // namespace

TEST_CASE("delta: PMV family value 4k at k = 2") {
    auto classes = lambda_classes(2);
    DeltaResult res = delta_min_rank_sum(classes);
    CHECK(res.min_value == 8);       // 4k < 4k + 2 = 2n
    CHECK(res.min_value < 2 * 5);    // the delta condition fails
    CHECK(res.min_value == delta_oracle(classes));
    // witness: the lambda eigenvalue (maximal block count) in every class
    for (const auto& w : res.witness) {
        CHECK_FALSE(w.free);
        CHECK(w.eigenvalue_index == 0);
    }
    // the all-minimal tuple satisfies the constraint, so delta <= sum r_j
    long long sum_r = 0;
    for (const auto& c : classes) sum_r += c.r();
    CHECK(res.min_value <= sum_r);
}

TEST_CASE("delta: generic eigenvalues fall back to one free shift") {
    // two classes, eigenvalues independent transcendentals with no vanishing
    // combination: minimum is min_j (n + sum_{i != j} r_i)
    auto c1 = ConjugacyClassSpec::diagonalizable(
        2, Flavor::additive, {{Scalar::variable("a"), 1}, {Scalar::variable("b"), 1}});
    auto c2 = ConjugacyClassSpec::diagonalizable(
        2, Flavor::additive,
        {{Scalar::variable("c"), 1},
         {-(Scalar::variable("a") + Scalar::variable("b") + Scalar::variable("c")), 1}});
    DeltaResult res = delta_min_rank_sum({c1, c2});
    CHECK(res.min_value == 3);  // n + r = 2 + 1
    CHECK(res.min_value == delta_oracle({c1, c2}));
    int frees = 0;
    for (const auto& w : res.witness) frees += w.free ? 1 : 0;
    CHECK(frees == 1);
}

TEST_CASE("delta: empty class list") {
    CHECK_THROWS_AS(delta_min_rank_sum({}), EmptyClassList);
}

TEST_CASE("delta: multiplicative flavor") {
    auto c1 = ConjugacyClassSpec::diagonalizable(
        2, Flavor::multiplicative, {{Scalar(2L), 1}, {Scalar(3L), 1}});
    auto c2 = ConjugacyClassSpec::diagonalizable(
        2, Flavor::multiplicative, {{Scalar(Rational(1, 2)), 1}, {Scalar(Rational(1, 3)), 1}});
    DeltaResult res = delta_min_rank_sum({c1, c2});
    // sigma_1 = 2 pairs with sigma_2 = 1/2 (product of chosen eigenvalues 1)
    CHECK(res.min_value == 2);
    CHECK(res.min_value == delta_oracle({c1, c2}));
}
