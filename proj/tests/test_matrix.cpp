#include <doctest.h>

#include "dsp/matrix.hpp"
#include "dsp/rng.hpp"
#include "helpers.hpp"

using namespace dsp;
using namespace dsp::testing;

namespace {

Scalar t() { return Scalar::variable("t1"); }

ExactMatrix random_matrix(int r, int c, Rng& rng, bool with_symbol) {
    ExactMatrix m(r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) {
            Scalar v(rng.rational(4, 2));
            if (with_symbol && rng.range(0, 3) == 0) v += Scalar(rng.range(-2, 2)) * t();
            m.at(i, j) = v;
        }
    return m;
}

}  // namespace

TEST_CASE("matrix operations") {
    ExactMatrix i2 = ExactMatrix::identity(2);
    CHECK(i2 * i2 == i2);
    CHECK(ExactMatrix::unit(3, 0, 1) * ExactMatrix::unit(3, 1, 0) == ExactMatrix::unit(3, 0, 0));
    CHECK_THROWS_AS(ExactMatrix::identity(2) * ExactMatrix::identity(3), ShapeMismatch);
    CHECK((i2 + i2).scale(Scalar(Rational(1, 2))) == i2);
    CHECK(ExactMatrix::unit(2, 0, 1).transpose() == ExactMatrix::unit(2, 1, 0));
}

TEST_CASE("block assembly") {
    ExactMatrix h = ExactMatrix::from_rows({{Scalar(7L)}});
    ExactMatrix mu = ExactMatrix::from_rows({{Scalar(9L)}});
    ExactMatrix d = ExactMatrix::block_diagonal({h, mu, mu});
    CHECK(d.rows == 3);
    CHECK(d.at(0, 0) == Scalar(7L));
    CHECK(d.at(1, 1) == Scalar(9L));
    CHECK(d.at(2, 2) == Scalar(9L));
    CHECK(d.at(0, 1).is_zero());

    ExactMatrix g = ExactMatrix::block_assemble({
        {ExactMatrix::identity(2), ExactMatrix::zero(2, 1)},
        {ExactMatrix::zero(1, 2), ExactMatrix::from_rows({{Scalar(5L)}})},
    });
    CHECK(g.rows == 3);
    CHECK(g.at(2, 2) == Scalar(5L));
    CHECK_THROWS_AS(ExactMatrix::block_assemble({{ExactMatrix::identity(2)},
                                                 {ExactMatrix::identity(3)}}),
                    ShapeMismatch);
}

TEST_CASE("rank golden cases") {
    CHECK(rank(ExactMatrix::unit(2, 0, 1)) == 1);
    // rows (1, t, 0), (0, 1, t), (1, t, t^2): determinant t^2, full rank as
    // a rational function identity
    ExactMatrix m = ExactMatrix::from_rows({{Scalar(1L), t(), Scalar(0L)},
                                            {Scalar(0L), Scalar(1L), t()},
                                            {Scalar(1L), t(), t() * t()}});
    CHECK(rank(m) == 3);
    CHECK(rank(ExactMatrix::zero(3, 4)) == 0);
    CHECK(rank(ExactMatrix::identity(5)) == 5);
}

TEST_CASE("kernel golden cases") {
    // A = diag(l, l, m), kernel of A - l I spans the first two coordinates
    Scalar l(2L), mu(5L);
    ExactMatrix a = ExactMatrix::diagonal({l, l, mu});
    ExactMatrix shifted = a - ExactMatrix::identity(3).scale(l);
    auto kern = kernel_basis(shifted);
    REQUIRE(kern.size() == 2);
    for (const auto& v : kern) {
        CHECK(v[2].is_zero());
        for (const auto& x : shifted.apply(v)) CHECK(x.is_zero());
    }
}

TEST_CASE("kernel vectors satisfy the equation exactly (random)") {
    Rng rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        int r = static_cast<int>(rng.range(1, 5)), c = static_cast<int>(rng.range(1, 5));
        ExactMatrix m = random_matrix(r, c, rng, trial % 2 == 0);
        auto kern = kernel_basis(m);
        CHECK(static_cast<int>(kern.size()) == c - rank(m));
        for (const auto& v : kern)
            for (const auto& x : m.apply(v)) CHECK(x.is_zero());
        // independence
        SpanBuilder sb(static_cast<std::size_t>(c));
        for (const auto& v : kern) CHECK(sb.insert(v));
    }
}

TEST_CASE("rank equals rank of the transpose (random)") {
    Rng rng(23);
    for (int trial = 0; trial < 200; ++trial) {
        int r = static_cast<int>(rng.range(1, 5)), c = static_cast<int>(rng.range(1, 5));
        ExactMatrix m = random_matrix(r, c, rng, trial % 3 == 0);
        CHECK(rank(m) == rank(m.transpose()));
    }
}

TEST_CASE("rank is invariant under invertible factors (random)") {
    Rng rng(37);
    for (int trial = 0; trial < 100; ++trial) {
        int n = static_cast<int>(rng.range(2, 4));
        ExactMatrix m = random_matrix(n, n, rng, false);
        ExactMatrix g = random_unimodular(n, rng);
        CHECK(rank(g * m) == rank(m));
        CHECK(rank(m * g) == rank(m));
    }
}

TEST_CASE("inverse is exact") {
    Rng rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        int n = static_cast<int>(rng.range(1, 5));
        ExactMatrix g = random_unimodular(n, rng);
        CHECK(g * inverse(g) == ExactMatrix::identity(n));
    }
    CHECK_THROWS(inverse(ExactMatrix::zero(2, 2)));
}

TEST_CASE("class membership by rank profiles") {
    SpectralData2x2 s = concrete_spectral();
    // the first type B matrix against its diagonalizable class
    ExactMatrix b1 =
        ExactMatrix::from_rows({{s.lambdas[0], Scalar(1L)}, {Scalar(0L), s.mus[0]}});
    CHECK(class_membership(b1, s.class_at(0, 1, 1)));

    // a scalar matrix is not in the non-scalar single-block class
    ConjugacyClassSpec c3;
    c3.n = 2;
    c3.flavor = Flavor::additive;
    c3.spectrum = {{Scalar(-1L), {2}}};
    ExactMatrix minus_i = ExactMatrix::identity(2).scale(Scalar(-1L));
    CHECK_FALSE(class_membership(minus_i, c3));
    // but the Jordan block itself is
    CHECK(class_membership(jordan_representative(c3), c3));

    // scalar matrix in the scalar class
    auto scal = ConjugacyClassSpec::diagonalizable(3, Flavor::additive, {{Scalar(5L), 3}});
    CHECK(class_membership(ExactMatrix::identity(3).scale(Scalar(5L)), scal));

    // wrong eigenvalue multiplicity is rejected
    auto wrong = ConjugacyClassSpec::diagonalizable(
        2, Flavor::additive, {{s.lambdas[0], 1}, {Scalar(99L), 1}});
    CHECK_FALSE(class_membership(b1, wrong));
    CHECK_THROWS_AS(class_membership(ExactMatrix::identity(3), wrong), ShapeMismatch);
}

TEST_CASE("jordan representatives live in their classes") {
    for (int n = 1; n <= 5; ++n)
        for (const Jnf& j : all_jnfs(n)) {
            ConjugacyClassSpec c;
            c.n = n;
            c.flavor = Flavor::additive;
            long val = 1;
            for (const auto& e : j.entries) c.spectrum.push_back({Scalar(val++), e.blocks});
            CHECK(class_membership(jordan_representative(c), c));
        }
}

TEST_CASE("span builder") {
    SpanBuilder sb(3);
    CHECK(sb.insert({Scalar(1L), Scalar(2L), Scalar(3L)}));
    CHECK_FALSE(sb.insert({Scalar(2L), Scalar(4L), Scalar(6L)}));
    CHECK(sb.insert({Scalar(0L), Scalar(1L), Scalar(0L)}));
    CHECK(sb.dimension() == 2);
    CHECK(sb.contains({Scalar(1L), Scalar(0L), Scalar(3L)}));
    CHECK_FALSE(sb.contains({Scalar(0L), Scalar(0L), Scalar(1L)}));
}
