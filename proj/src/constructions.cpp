#include "dsp/constructions.hpp"

#include <algorithm>

namespace dsp {

void SpectralData2x2::validate() const {
    if (lambdas.size() != 4 || mus.size() != 4)
        throw SpectralConstraintViolated("need four lambda and four mu values");
    Scalar sl(0L), sm(0L);
    for (int j = 0; j < 4; ++j) {
        sl += lambdas[j];
        sm += mus[j];
        if (lambdas[j] == mus[j])
            throw SpectralConstraintViolated("lambda_j and mu_j must differ");
    }
    if (!sl.is_zero()) throw SpectralConstraintViolated("sum of lambda_j must be 0");
    if (!sm.is_zero()) throw SpectralConstraintViolated("sum of mu_j must be 0");
}

ConjugacyClassSpec SpectralData2x2::class_at(int j, int lm, int mm) const {
    std::vector<std::pair<Scalar, int>> eigs;
    if (lm > 0) eigs.emplace_back(lambdas[j], lm);
    if (mm > 0) eigs.emplace_back(mus[j], mm);
    return ConjugacyClassSpec::diagonalizable(lm + mm, Flavor::additive, eigs);
}

MatrixTuple build_type_b_quadruple(const SpectralData2x2& s, const Scalar& u) {
    s.validate();
    if (u.is_zero()) throw ZeroParameter("u must be nonzero");
    MatrixTuple t;
    t.flavor = Flavor::additive;
    t.matrices = {
        ExactMatrix::from_rows({{s.lambdas[0], Scalar(1L)}, {Scalar(0L), s.mus[0]}}),
        ExactMatrix::from_rows({{s.lambdas[1], Scalar(-1L)}, {Scalar(0L), s.mus[1]}}),
        ExactMatrix::from_rows({{s.lambdas[2], Scalar(0L)}, {u, s.mus[2]}}),
        ExactMatrix::from_rows({{s.lambdas[3], Scalar(0L)}, {-u, s.mus[3]}}),
    };
    t.classes = std::vector<ConjugacyClassSpec>();
    for (int j = 0; j < 4; ++j) t.classes->push_back(s.class_at(j, 1, 1));
    if (!verify_tuple(t).all_ok()) throw Error("internal: type B block failed verification");
    return t;
}

MatrixTuple build_type_h_quadruple(int l, const SpectralData2x2& s, bool permuted) {
    if (l < 1) throw ValidationError("l must be >= 1");
    s.validate();
    int n = 2 * l + 1;
    MatrixTuple t;
    t.flavor = Flavor::additive;

    auto diag = [&](int j) {
        ExactMatrix m(n, n);
        for (int i = 0; i < n; ++i) {
            bool lam;
            if (!permuted) {
                lam = i <= l;  // lambda on the first l+1 positions
            } else {
                lam = i == 0 || i > l;  // lambda first and last: E_{1,n} commutes
            }
            m.at(i, i) = lam ? s.lambdas[j] : s.mus[j];
        }
        return m;
    };

    ExactMatrix h1 = diag(0), h2 = diag(1), h3 = diag(2);
    if (!permuted) {
        // identity coupling of the lower lambda block to the mu block, with
        // the shifted blocking on the third matrix
        for (int i = 1; i <= l; ++i) h2.at(i, l + i) = Scalar(1L);
        for (int i = 0; i < l; ++i) h3.at(i, l + 1 + i) = Scalar(1L);
    } else {
        // couplings must run from mu rows into lambda columns only: a chain
        // through both eigenvalue groups would create a Jordan block
        for (int i = 1; i <= l; ++i) h2.at(i, l + i) = Scalar(1L);
        for (int i = 1; i <= l; ++i) h3.at(i, l + i) = Scalar(2L);
    }
    ExactMatrix h4 = -(h1 + h2 + h3);
    t.matrices = {h1, h2, h3, h4};
    t.classes = std::vector<ConjugacyClassSpec>();
    for (int j = 0; j < 4; ++j) t.classes->push_back(s.class_at(j, l + 1, l));
    if (!verify_tuple(t).all_ok()) throw Error("internal: type H block failed verification");
    return t;
}

std::pair<ExactMatrix, ExactMatrix> split_sum_2x2(const ExactMatrix& S,
                                                  const ConjugacyClassSpec& c1,
                                                  const ConjugacyClassSpec& c2) {
    if (!S.is_square() || S.rows != 2) throw ShapeMismatch("split_sum_2x2 needs a 2x2 matrix");
    for (const ConjugacyClassSpec* c : {&c1, &c2}) {
        c->validate();
        if (c->n != 2 || c->spectrum.size() != 2 || !c->is_diagonalizable())
            throw PreconditionViolated("classes must be 2x2 with two distinct eigenvalues");
    }
    Scalar tr = S.at(0, 0) + S.at(1, 1);
    if (!(tr == c1.trace() + c2.trace())) throw TraceMismatch("tr S != tr c1 + tr c2");
    if (S.is_scalar_matrix()) throw ScalarSum("S must not be scalar");

    ExactMatrix Y = ExactMatrix::identity(2), Yi = Y;
    if (S.at(0, 1).is_zero()) {
        if (!S.at(1, 0).is_zero()) {
            Y = ExactMatrix::from_rows({{Scalar(0L), Scalar(1L)}, {Scalar(1L), Scalar(0L)}});
            Yi = Y;
        } else {
            // diagonal non-scalar: a shear moves the difference into the corner
            Y = ExactMatrix::from_rows({{Scalar(1L), Scalar(1L)}, {Scalar(0L), Scalar(1L)}});
            Yi = ExactMatrix::from_rows({{Scalar(1L), Scalar(-1L)}, {Scalar(0L), Scalar(1L)}});
        }
    }
    ExactMatrix Sc = Y * S * Yi;

    const Scalar &l1 = c1.spectrum[0].value, &m1 = c1.spectrum[1].value;
    const Scalar &l2 = c2.spectrum[0].value, &m2 = c2.spectrum[1].value;
    Scalar g = Sc.at(0, 1);
    Scalar h = Sc.at(0, 0) - l1;
    Scalar w = (h * (l2 + m2 - h) - l2 * m2) / g;
    Scalar u = Sc.at(1, 0) - w;
    ExactMatrix B1 = ExactMatrix::from_rows({{l1, Scalar(0L)}, {u, m1}});
    ExactMatrix B2 = ExactMatrix::from_rows({{h, g}, {w, l2 + m2 - h}});
    B1 = Yi * B1 * Y;
    B2 = Yi * B2 * Y;
    if (!(B1 + B2 == S) || !class_membership(B1, c1) || !class_membership(B2, c2))
        throw Error("internal: split_sum_2x2 produced an invalid split");
    return {B1, B2};
}

MatrixTuple build_2x2_irreducible(const std::vector<ConjugacyClassSpec>& classes,
                                  std::uint64_t seed) {
    if (classes.size() < 3) throw PreconditionViolated("need at least three classes");
    Scalar tr(0L);
    for (const auto& c : classes) {
        c.validate();
        if (c.n != 2 || c.flavor != Flavor::additive || !c.is_diagonalizable())
            throw PreconditionViolated("classes must be diagonalizable additive 2x2");
        tr += c.trace();
    }
    if (!tr.is_zero()) throw TraceMismatch("traces must sum to zero");

    std::optional<MatrixTuple> best;
    for (int attempt = 0; attempt < 64; ++attempt) {
        Rng rng(seed * 1315423911ULL + static_cast<std::uint64_t>(attempt) + 1);
        std::vector<ExactMatrix> mats(classes.size());
        ExactMatrix sum(2, 2);
        for (std::size_t i = 2; i < classes.size(); ++i) {
            ExactMatrix r = random_unimodular(2, rng);
            mats[i] = r * jordan_representative(classes[i]) * inverse(r);
            sum = sum + mats[i];
        }
        ExactMatrix S = -sum;
        if (S.is_scalar_matrix()) continue;
        try {
            auto [b1, b2] = split_sum_2x2(S, classes[0], classes[1]);
            mats[0] = b1;
            mats[1] = b2;
        } catch (const ScalarSum&) {
            continue;
        }
        MatrixTuple t;
        t.flavor = Flavor::additive;
        t.matrices = std::move(mats);
        t.classes = classes;
        if (is_irreducible(t)) return t;
        if (!best) best = t;
    }
    ConstructionFailed err("no irreducible tuple found within the attempt budget");
    err.best_witness = best;
    throw err;
}

MatrixTuple build_hb_point(int s, const SpectralData2x2& spec, int n,
                           const std::vector<Scalar>& u_list, bool conjugate,
                           std::uint64_t seed) {
    spec.validate();
    if (n < 3 || n % 2 == 0) throw InvalidInstance("n must be odd and >= 3");
    int k = (n - 1) / 2;
    if (s < 0 || s > k) throw InvalidInstance("s must lie in [0, (n-1)/2]");
    if (static_cast<int>(u_list.size()) != s) throw ValidationError("u_list must have s entries");

    std::vector<MatrixTuple> blocks;
    for (const Scalar& u : u_list) blocks.push_back(build_type_b_quadruple(spec, u));
    for (std::size_t i = 0; i < blocks.size(); ++i)
        for (std::size_t j = i + 1; j < blocks.size(); ++j)
            if (are_equivalent(blocks[i], blocks[j]))
                throw EquivalentBlocks("type B blocks must be pairwise non-equivalent");
    int hsize = n - 2 * s;
    MatrixTuple hblock;
    if (hsize == 1) {
        hblock.flavor = Flavor::additive;
        for (int j = 0; j < 4; ++j)
            hblock.matrices.push_back(ExactMatrix::from_rows({{spec.lambdas[j]}}));
    } else {
        hblock = build_type_h_quadruple((hsize - 1) / 2, spec);
    }

    MatrixTuple t;
    t.flavor = Flavor::additive;
    for (int j = 0; j < 4; ++j) {
        std::vector<ExactMatrix> parts;
        for (const auto& b : blocks) parts.push_back(b.matrices[j]);
        parts.push_back(hblock.matrices[j]);
        t.matrices.push_back(ExactMatrix::block_diagonal(parts));
    }
    if (conjugate) {
        Rng rng(seed);
        ExactMatrix r = random_unimodular(n, rng);
        ExactMatrix ri = inverse(r);
        for (auto& m : t.matrices) m = r * m * ri;
    }
    t.classes = std::vector<ConjugacyClassSpec>();
    for (int j = 0; j < 4; ++j) t.classes->push_back(spec.class_at(j, k + 1, k));
    if (!verify_tuple(t).all_ok()) throw Error("internal: hb point failed verification");
    if (centralizer_dimension(t) != s + 1)
        throw Error("internal: hb point centralizer dimension is not s + 1");
    return t;
}

MatrixTuple build_disconnected_triple(DisconnectedVariant variant, const Scalar& eps) {
    Scalar pi = Scalar::variable("t1");
    Scalar one(1L), two(2L), neg(-1L), zero(0L);
    MatrixTuple t;
    t.flavor = Flavor::additive;
    ExactMatrix a2 = ExactMatrix::from_rows({{one - pi, zero}, {zero, neg}});
    switch (variant) {
        case DisconnectedVariant::component_upper:
            t.matrices = {ExactMatrix::from_rows({{pi, one}, {zero, two}}), a2,
                          ExactMatrix::from_rows({{neg, -one}, {zero, neg}})};
            break;
        case DisconnectedVariant::component_lower:
            t.matrices = {ExactMatrix::from_rows({{pi, zero}, {one, two}}), a2,
                          ExactMatrix::from_rows({{neg, zero}, {-one, neg}})};
            break;
        case DisconnectedVariant::family_upper:
            t.matrices = {ExactMatrix::from_rows({{pi, eps}, {zero, two}}), a2,
                          ExactMatrix::from_rows({{neg, -eps}, {zero, neg}})};
            break;
        case DisconnectedVariant::family_lower:
            t.matrices = {ExactMatrix::from_rows({{pi, zero}, {eps, two}}), a2,
                          ExactMatrix::from_rows({{neg, zero}, {-eps, neg}})};
            break;
    }
    ConjugacyClassSpec c3;
    c3.n = 2;
    c3.flavor = Flavor::additive;
    c3.spectrum = {{neg, {2}}};  // non-scalar class: one Jordan block
    t.classes = std::vector<ConjugacyClassSpec>{
        ConjugacyClassSpec::diagonalizable(2, Flavor::additive, {{pi, 1}, {two, 1}}),
        ConjugacyClassSpec::diagonalizable(2, Flavor::additive, {{one - pi, 1}, {neg, 1}}),
        c3};
    return t;
}

namespace {

// Rows of the space {((H_j - mu_j) X_j)_j : sum_j (H_j - mu_j) X_j = 0} and
// of its diagonal subspace (common X), as reduced spans.
struct ExtSpaces {
    SpanBuilder big, small;
    ExtSpaces(std::size_t w) : big(w), small(w) {}
};

ExtSpaces extension_spaces(const std::vector<ExactMatrix>& shifted, int m) {
    int p1 = static_cast<int>(shifted.size());
    ExtSpaces spaces(static_cast<std::size_t>(p1) * m);
    // kernel of the row [S_1 | S_2 | ... | S_{p+1}]
    ExactMatrix constraint(m, p1 * m);
    for (int j = 0; j < p1; ++j)
        for (int i = 0; i < m; ++i)
            for (int c = 0; c < m; ++c) constraint.at(i, j * m + c) = shifted[j].at(i, c);
    for (const auto& x : kernel_basis(constraint)) {
        std::vector<Scalar> image(static_cast<std::size_t>(p1) * m);
        for (int j = 0; j < p1; ++j) {
            std::vector<Scalar> xj(x.begin() + static_cast<std::ptrdiff_t>(j) * m,
                                   x.begin() + static_cast<std::ptrdiff_t>(j + 1) * m);
            std::vector<Scalar> lj = shifted[j].apply(xj);
            for (int i = 0; i < m; ++i) image[static_cast<std::size_t>(j) * m + i] = lj[i];
        }
        spaces.big.insert(std::move(image));
    }
    for (int col = 0; col < m; ++col) {
        std::vector<Scalar> x(m);
        x[col] = Scalar(1L);
        std::vector<Scalar> image(static_cast<std::size_t>(p1) * m);
        for (int j = 0; j < p1; ++j) {
            std::vector<Scalar> lj = shifted[j].apply(x);
            for (int i = 0; i < m; ++i) image[static_cast<std::size_t>(j) * m + i] = lj[i];
        }
        spaces.small.insert(std::move(image));
    }
    return spaces;
}

}  // namespace

ExtensionResult extend_scalar_block(const MatrixTuple& h, const std::vector<Scalar>& mus,
                                    ExtendSide side) {
    h.validate_shapes();
    if (h.flavor != Flavor::additive)
        throw PreconditionViolated("extend_scalar_block: additive tuples only");
    if (!h.classes) throw PreconditionViolated("extend_scalar_block: classes must be bound");
    if (mus.size() != static_cast<std::size_t>(h.count()))
        throw ShapeMismatch("one mu per class required");
    Scalar musum(0L);
    for (const auto& mu : mus) musum += mu;
    if (!musum.is_zero()) throw SpectralConstraintViolated("sum of mu_j must be 0");
    if (!verify_tuple(h).all_ok())
        throw PreconditionViolated("extend_scalar_block: input must verify");
    if (!is_irreducible(h)) throw PreconditionViolated("extend_scalar_block: input must be irreducible");
    int m = h.n(), p1 = h.count();
    if (m == 1) {
        bool differs = false;
        for (int j = 0; j < p1; ++j)
            if (!(h.matrices[j].at(0, 0) == mus[j])) differs = true;
        if (!differs)
            throw PreconditionViolated("input must differ from the scalar tuple mu");
    }

    std::vector<ExactMatrix> shifted;
    for (int j = 0; j < p1; ++j) {
        ExactMatrix sj = h.matrices[j] - ExactMatrix::identity(m).scale(mus[j]);
        shifted.push_back(side == ExtendSide::left ? sj : sj.transpose());
    }
    ExtSpaces spaces = extension_spaces(shifted, m);
    int quotient = spaces.big.dimension() - spaces.small.dimension();
    if (quotient != 2)
        throw ExtDimensionMismatch("quotient dimension " + std::to_string(quotient) +
                                   ", expected 2");

    // two representatives independent of the common-column space
    SpanBuilder probe(static_cast<std::size_t>(p1) * m);
    for (const auto& row : spaces.small.rows()) probe.insert(row);
    std::vector<std::vector<Scalar>> reps;
    for (const auto& row : spaces.big.rows()) {
        if (reps.size() == 2) break;
        if (probe.insert(row)) reps.push_back(row);
    }
    if (reps.size() != 2) throw ExtDimensionMismatch("could not pick two representatives");

    MatrixTuple out;
    out.flavor = Flavor::additive;
    int n = m + 2;
    for (int j = 0; j < p1; ++j) {
        ExactMatrix col1(m, 1), col2(m, 1);
        for (int i = 0; i < m; ++i) {
            col1.at(i, 0) = reps[0][static_cast<std::size_t>(j) * m + i];
            col2.at(i, 0) = reps[1][static_cast<std::size_t>(j) * m + i];
        }
        ExactMatrix mu1x1 = ExactMatrix::from_rows({{mus[j]}});
        ExactMatrix a(n, n);
        if (side == ExtendSide::left) {
            a = ExactMatrix::block_assemble({
                {h.matrices[j], col1, col2},
                {ExactMatrix::zero(1, m), mu1x1, ExactMatrix::zero(1, 1)},
                {ExactMatrix::zero(1, m), ExactMatrix::zero(1, 1), mu1x1},
            });
        } else {
            a = ExactMatrix::block_assemble({
                {mu1x1, ExactMatrix::zero(1, 1), col1.transpose()},
                {ExactMatrix::zero(1, 1), mu1x1, col2.transpose()},
                {ExactMatrix::zero(m, 1), ExactMatrix::zero(m, 1), h.matrices[j]},
            });
        }
        out.matrices.push_back(std::move(a));
    }

    out.classes = std::vector<ConjugacyClassSpec>();
    for (int j = 0; j < p1; ++j) {
        ConjugacyClassSpec c = (*h.classes)[j];
        c.n = n;
        int at = c.find_eigenvalue(mus[j]);
        if (at >= 0) {
            c.spectrum[at].blocks.push_back(1);
            c.spectrum[at].blocks.push_back(1);
        } else {
            c.spectrum.push_back({mus[j], {1, 1}});
        }
        c.validate();
        out.classes->push_back(std::move(c));
    }
    if (!verify_tuple(out).all_ok()) throw Error("internal: extension failed verification");
    if (centralizer_dimension(out) != 1)
        throw Error("internal: extension centralizer is not trivial");
    ExtensionResult res;
    res.tuple = std::move(out);
    res.dim_big = spaces.big.dimension();
    res.dim_small = spaces.small.dimension();
    return res;
}

HbDims stratum_dims_hb(int n, int s) {
    if (n < 3 || n % 2 == 0) throw InvalidInstance("n must be odd and >= 3");
    int k = (n - 1) / 2;
    if (s < 0 || s > k) throw InvalidInstance("s must lie in [0, (n-1)/2]");
    HbDims d;
    d.n = n;
    d.s = s;
    JnfTuple jt;
    for (int j = 0; j < 4; ++j) jt.jnfs.push_back(Jnf::diagonal({k + 1, k}));
    d.kappa = kappa(jt);
    d.expected = expected_dimension(jt);
    d.dim_hb = static_cast<long long>(n) * n + s - 1;
    if (s == k) d.alt_form = static_cast<long long>(n) * n + (n - 3) / 2;
    return d;
}

SpikedDims stratum_dims_spiked(int n, const std::vector<int>& m) {
    if (static_cast<int>(m.size()) < 5) throw InvalidInstance("need p > 3, i.e. at least 5 classes");
    SpikedDims d;
    d.n = n;
    long long sum_r = 0, sum_r2 = 0, sum_d = 0;
    long long sum_d_prime = 0, sum_d_star = 0;
    for (int mj : m) {
        if (mj < 3 || mj > n - 1) throw InvalidInstance("multiplicities must satisfy 3 <= m_j <= n-1");
        long long r = n - mj;
        d.r.push_back(static_cast<int>(r));
        sum_r += r;
        sum_r2 += r * r;
        sum_d += static_cast<long long>(n) * n - static_cast<long long>(mj) * mj - r;
        sum_d_prime += (2 * static_cast<long long>(n) - 3) * r - r * r;
        sum_d_star += (2 * static_cast<long long>(n) - 5) * r - r * r;
    }
    if (sum_r != 2 * static_cast<long long>(n) - 2)
        throw InvalidInstance("rank sum must equal 2n - 2");
    d.kappa = 2 * static_cast<long long>(n) * n - sum_d;
    d.expected = 1 - d.kappa + static_cast<long long>(n) * n;
    d.dim_u = 3 * static_cast<long long>(n - 1) * (n - 1) + 1 - sum_r2;
    d.dim_w = d.dim_u - 1;
    d.u_prime = sum_d_prime - (static_cast<long long>(n - 1) * (n - 1) - 1);
    d.u_star = sum_d_star - (static_cast<long long>(n - 2) * (n - 2) - 1);
    d.transversal_u = 2 * static_cast<long long>(n) - 2;
    d.transversal_w = 2 * (static_cast<long long>(n) - 2);
    d.w_pre_transversal = d.u_star + 2 * static_cast<long long>(n);
    if (d.u_prime + d.transversal_u != d.dim_u)
        throw Error("internal: dim U bookkeeping is inconsistent");
    if (d.w_pre_transversal + d.transversal_w != d.dim_w)
        throw Error("internal: dim W bookkeeping is inconsistent");
    return d;
}

bool is_dominant_family_relation(const RelationWitness& w,
                                 const std::vector<ConjugacyClassSpec>& classes) {
    auto star_family = [&](const std::vector<std::vector<int>>& splits) {
        int a = splits[0][0];
        for (const auto& s : splits) {
            if (s[0] != a) return false;
            for (std::size_t i = 1; i < s.size(); ++i)
                if (s[i] != 0) return false;
        }
        return true;
    };
    std::vector<std::vector<int>> splits, csplits;
    for (std::size_t j = 0; j < classes.size(); ++j) {
        std::vector<int> split(classes[j].spectrum.size(), 0);
        for (int idx : w.sets[j]) {
            int offset = 0;
            for (std::size_t i = 0; i < classes[j].spectrum.size(); ++i) {
                int mult = classes[j].spectrum[i].mult();
                if (idx < offset + mult) {
                    split[i] += 1;
                    break;
                }
                offset += mult;
            }
        }
        std::vector<int> csplit(split.size());
        for (std::size_t i = 0; i < split.size(); ++i)
            csplit[i] = classes[j].spectrum[i].mult() - split[i];
        splits.push_back(std::move(split));
        csplits.push_back(std::move(csplit));
    }
    return star_family(splits) || star_family(csplits);
}

SpikedInstance make_spiked_instance(int n, int p, std::uint64_t seed,
                                    const RelationOptions& opts) {
    if (p <= 3) throw InfeasibleShape("p > 3 required");
    int p1 = p + 1;
    long long need = 2 * static_cast<long long>(n) - 2;
    if (p1 > need || static_cast<long long>(p1) * (n - 3) < need)
        throw InfeasibleShape("no multiplicity shape with rank sum 2n - 2");

    SpikedInstance inst;
    inst.n = n;
    inst.p = p;
    inst.r.assign(p1, 1);
    long long extra = need - p1;
    for (int j = 0; j < p1 && extra > 0; ++j) {
        long long add = std::min<long long>(extra, n - 3 - 1);
        inst.r[j] += static_cast<int>(add);
        extra -= add;
    }
    for (int rj : inst.r) inst.m.push_back(n - rj);

    for (int attempt = 0; attempt < 256; ++attempt) {
        Rng rng(seed * 2654435761ULL + static_cast<std::uint64_t>(attempt));
        // dominant eigenvalues: fast-growing magnitudes avoid accidental
        // subset relations; the last one closes the sum
        std::vector<Rational> mu;
        Rational msum(0);
        for (int j = 0; j < p1 - 1; ++j) {
            Rational v(rng.range(1, 4) * (1L << (2 * j + 1)) + rng.range(0, 1));
            if (rng.range(0, 1)) v = -v;
            mu.push_back(v);
            msum += v;
        }
        mu.push_back(-msum);

        Rational global(0);
        for (int j = 0; j < p1; ++j) global += Rational(inst.m[j]) * mu[j];
        std::vector<std::vector<Rational>> nu(p1);
        bool ok = true;
        for (int j = 0; j < p1 && ok; ++j) {
            for (int k = 0; k < inst.r[j]; ++k) {
                if (j == p1 - 1 && k == inst.r[j] - 1) break;  // determined below
                Rational v(rng.range(-99, 99), rng.range(1, 3));
                v.canonicalize();
                nu[j].push_back(v);
                global += v;
            }
        }
        nu[p1 - 1].push_back(-global);

        std::vector<ConjugacyClassSpec> classes;
        for (int j = 0; j < p1 && ok; ++j) {
            std::vector<std::pair<Scalar, int>> eigs;
            eigs.emplace_back(Scalar(mu[j]), inst.m[j]);
            for (const auto& v : nu[j]) eigs.emplace_back(Scalar(v), 1);
            try {
                classes.push_back(ConjugacyClassSpec::diagonalizable(n, Flavor::additive, eigs));
            } catch (const ValidationError&) {
                ok = false;  // eigenvalue collision inside a class; retry
            }
        }
        if (!ok) continue;
        if (!check_global_condition(classes)) throw Error("internal: trace condition broken");

        std::vector<RelationWitness> rels = enumerate_relations(classes, opts);
        bool only_family = true;
        for (const auto& w : rels)
            if (!is_dominant_family_relation(w, classes)) only_family = false;
        if (!only_family || rels.empty()) continue;

        inst.mu.clear();
        for (const auto& v : mu) inst.mu.push_back(Scalar(v));
        inst.classes = classes;
        for (int j = 0; j < p1; ++j) {
            std::vector<std::pair<Scalar, int>> star_eigs, prime_eigs;
            star_eigs.emplace_back(Scalar(mu[j]), inst.m[j] - 2);
            prime_eigs.emplace_back(Scalar(mu[j]), inst.m[j] - 1);
            for (const auto& v : nu[j]) {
                star_eigs.emplace_back(Scalar(v), 1);
                prime_eigs.emplace_back(Scalar(v), 1);
            }
            inst.star_classes.push_back(
                ConjugacyClassSpec::diagonalizable(n - 2, Flavor::additive, star_eigs));
            inst.prime_classes.push_back(
                ConjugacyClassSpec::diagonalizable(n - 1, Flavor::additive, prime_eigs));
        }
        return inst;
    }
    throw ConstructionFailed("no generic-modulo-(*) eigenvalue instance found");
}

}  // namespace dsp
