#include "dsp/tuples.hpp"

#include <algorithm>

namespace dsp {

void MatrixTuple::validate_shapes() const {
    if (matrices.empty()) throw ShapeMismatch("tuple with no matrices");
    for (const auto& m : matrices)
        if (!m.is_square() || m.rows != n()) throw ShapeMismatch("tuple matrices must be square of one size");
    if (classes) {
        if (classes->size() != matrices.size())
            throw ShapeMismatch("one class per matrix required");
        for (const auto& c : *classes) {
            c.validate();
            if (c.n != n()) throw ShapeMismatch("class size mismatch");
            if (c.flavor != flavor) throw ShapeMismatch("class flavor mismatch");
        }
    }
}

VerifyReport verify_tuple(const MatrixTuple& t) {
    t.validate_shapes();
    VerifyReport rep;
    if (t.flavor == Flavor::additive) {
        ExactMatrix sum(t.n(), t.n());
        for (const auto& m : t.matrices) sum = sum + m;
        rep.constraint_ok = sum.is_zero();
    } else {
        ExactMatrix prod = ExactMatrix::identity(t.n());
        for (const auto& m : t.matrices) prod = prod * m;
        rep.constraint_ok = prod == ExactMatrix::identity(t.n());
    }
    if (t.classes)
        for (int j = 0; j < t.count(); ++j)
            rep.membership_ok.push_back(class_membership(t.matrices[j], (*t.classes)[j]));
    return rep;
}

namespace {

// Stacked linear system for {Z : Z A_j - A_j Z = 0}, unknown vec(Z) row-major.
ExactMatrix commutation_system(const std::vector<ExactMatrix>& mats) {
    int n = mats[0].rows;
    ExactMatrix sys(static_cast<int>(mats.size()) * n * n, n * n);
    int row = 0;
    for (const auto& a : mats) {
        for (int i = 0; i < n; ++i)
            for (int c = 0; c < n; ++c) {
                // (Z a - a Z)[i][c] = sum_k Z[i][k] a[k][c] - a[i][k] Z[k][c]
                for (int k = 0; k < n; ++k) {
                    sys.at(row, i * n + k) += a.at(k, c);
                    sys.at(row, k * n + c) -= a.at(i, k);
                }
                ++row;
            }
    }
    return sys;
}

}  // namespace

int centralizer_dimension(const MatrixTuple& t) {
    t.validate_shapes();
    int n = t.n();
    return n * n - rank(commutation_system(t.matrices));
}

std::vector<ExactMatrix> centralizer_basis(const MatrixTuple& t) {
    t.validate_shapes();
    int n = t.n();
    std::vector<ExactMatrix> out;
    for (auto& v : kernel_basis(commutation_system(t.matrices))) out.push_back(unvec(v, n, n));
    return out;
}

int algebra_dimension(const MatrixTuple& t) {
    t.validate_shapes();
    int n = t.n();
    SpanBuilder span(static_cast<std::size_t>(n) * n);
    std::vector<ExactMatrix> basis;
    auto add = [&](const ExactMatrix& m) {
        if (span.insert(vec(m))) {
            // keep the reduced representative: it lies in the algebra and
            // has small entries
            basis.push_back(unvec(span.rows().back(), n, n));
            return true;
        }
        return false;
    };
    add(ExactMatrix::identity(n));
    for (const auto& m : t.matrices) add(m);
    for (std::size_t next = 0; next < basis.size() && span.dimension() < n * n; ++next) {
        ExactMatrix b = basis[next];
        for (const auto& g : t.matrices) {
            add(b * g);
            if (span.dimension() == n * n) break;
        }
    }
    return span.dimension();
}

bool is_irreducible(const MatrixTuple& t) {
    return algebra_dimension(t) == t.n() * t.n();
}

bool are_equivalent(const MatrixTuple& a, const MatrixTuple& b) {
    a.validate_shapes();
    b.validate_shapes();
    if (a.count() != b.count() || a.n() != b.n())
        throw PreconditionViolated("are_equivalent: tuples must have equal size and length");
    if (!is_irreducible(a) || !is_irreducible(b))
        throw PreconditionViolated("are_equivalent: both tuples must be irreducible");
    int n = a.n();
    // X A_j = B_j X
    ExactMatrix sys(a.count() * n * n, n * n);
    int row = 0;
    for (int j = 0; j < a.count(); ++j) {
        const ExactMatrix& aj = a.matrices[j];
        const ExactMatrix& bj = b.matrices[j];
        for (int i = 0; i < n; ++i)
            for (int c = 0; c < n; ++c) {
                for (int k = 0; k < n; ++k) {
                    sys.at(row, i * n + k) += aj.at(k, c);
                    sys.at(row, k * n + c) -= bj.at(i, k);
                }
                ++row;
            }
    }
    return rank(sys) < n * n;
}

TangentDims tangent_dimension(const MatrixTuple& t) {
    t.validate_shapes();
    if (!t.classes) throw PreconditionViolated("tangent_dimension: classes must be bound");
    if (t.flavor != Flavor::additive)
        throw PreconditionViolated("tangent_dimension: additive tuples only");
    VerifyReport rep = verify_tuple(t);
    if (!rep.all_ok())
        throw PreconditionViolated("tangent_dimension: constraint and memberships must hold");
    int n = t.n(), p1 = t.count();
    long long sum_d = 0;
    for (const auto& c : *t.classes) sum_d += c.d();

    // F : (X_1,...,X_{p+1}) -> sum_j [X_j, A_j]
    ExactMatrix f(n * n, p1 * n * n);
    for (int j = 0; j < p1; ++j) {
        const ExactMatrix& a = t.matrices[j];
        int base = j * n * n;
        for (int i = 0; i < n; ++i)
            for (int c = 0; c < n; ++c) {
                int row = i * n + c;
                for (int k = 0; k < n; ++k) {
                    f.at(row, base + i * n + k) += a.at(k, c);
                    f.at(row, base + k * n + c) -= a.at(i, k);
                }
            }
    }
    TangentDims dims;
    dims.direct = sum_d - rank(f);
    dims.formula = sum_d - static_cast<long long>(n) * n + centralizer_dimension(t);
    if (dims.direct != dims.formula)
        throw Error("internal: tangent dimension computations disagree");
    return dims;
}

std::vector<Scalar> wedge(const std::vector<Scalar>& v, const std::vector<Scalar>& w) {
    if (v.size() != w.size()) throw ShapeMismatch("wedge");
    int n = static_cast<int>(v.size());
    std::vector<Scalar> out;
    out.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) out.push_back(v[a] * w[b] - v[b] * w[a]);
    return out;
}

namespace {

int wedge_index(int a, int b, int n) {
    // a < b
    return a * n - a * (a + 1) / 2 + (b - a - 1);
}

}  // namespace

ExactMatrix exterior_square_operator(const ExactMatrix& m, bool additive) {
    int n = m.rows;
    int big = n * (n - 1) / 2;
    ExactMatrix out(big, big);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            int col = wedge_index(a, b, n);
            if (additive) {
                for (int i = 0; i < n; ++i) {
                    // A e_a ^ e_b picks up m[i][a] e_i ^ e_b
                    if (!m.at(i, a).is_zero() && i != b) {
                        if (i < b)
                            out.at(wedge_index(i, b, n), col) += m.at(i, a);
                        else
                            out.at(wedge_index(b, i, n), col) -= m.at(i, a);
                    }
                    // e_a ^ A e_b picks up m[i][b] e_a ^ e_i
                    if (!m.at(i, b).is_zero() && i != a) {
                        if (a < i)
                            out.at(wedge_index(a, i, n), col) += m.at(i, b);
                        else
                            out.at(wedge_index(i, a, n), col) -= m.at(i, b);
                    }
                }
            } else {
                for (int i = 0; i < n; ++i)
                    for (int k = i + 1; k < n; ++k) {
                        Scalar c = m.at(i, a) * m.at(k, b) - m.at(k, a) * m.at(i, b);
                        if (!c.is_zero()) out.at(wedge_index(i, k, n), col) += c;
                    }
            }
        }
    return out;
}

InvariantReport invariant_subspaces(const MatrixTuple& t, int max_dim) {
    t.validate_shapes();
    if (max_dim != 1 && max_dim != 2) throw ValidationError("max_dim must be 1 or 2");
    if (!t.classes) throw PreconditionViolated("invariant_subspaces: classes must be bound");
    const auto& classes = *t.classes;
    int n = t.n(), p1 = t.count();
    bool additive = t.flavor == Flavor::additive;
    bool constraint = verify_tuple(t).constraint_ok;

    InvariantReport rep;

    // dimension 1: common eigenvectors per eigenvalue selection; on a tuple
    // satisfying the constraint the selected eigenvalues must satisfy the
    // cardinality-1 relation, which prunes the enumeration
    {
        std::vector<std::size_t> pick(p1, 0);
        for (;;) {
            bool try_it = true;
            if (constraint) {
                Scalar acc(additive ? 0L : 1L);
                for (int j = 0; j < p1; ++j) {
                    const Scalar& v = classes[j].spectrum[pick[j]].value;
                    if (additive)
                        acc += v;
                    else
                        acc *= v;
                }
                try_it = additive ? acc.is_zero() : acc == Scalar(1L);
            }
            if (try_it) {
                ExactMatrix stacked(p1 * n, n);
                for (int j = 0; j < p1; ++j) {
                    ExactMatrix shifted =
                        t.matrices[j] -
                        ExactMatrix::identity(n).scale(classes[j].spectrum[pick[j]].value);
                    for (int i = 0; i < n; ++i)
                        for (int c = 0; c < n; ++c) stacked.at(j * n + i, c) = shifted.at(i, c);
                }
                auto kern = kernel_basis(stacked);
                if (!kern.empty()) {
                    InvariantLine line;
                    for (int j = 0; j < p1; ++j) line.selection.push_back(static_cast<int>(pick[j]));
                    line.basis = std::move(kern);
                    rep.lines.push_back(std::move(line));
                }
            }
            std::size_t j = p1;
            while (j > 0 && ++pick[j - 1] == classes[j - 1].spectrum.size()) pick[--j] = 0;
            if (j == 0) break;
        }
    }

    if (max_dim < 2 || n < 3) return rep;
    for (const auto& c : classes)
        if (!c.is_diagonalizable())
            throw NotDiagonalizable("plane search requires diagonalizable classes");

    // dimension 2: enumerate restricted-pair selections, group them by the
    // per-class pair sum (or product), one exterior-square kernel per group
    struct Group {
        std::vector<Scalar> key;
        std::vector<std::vector<std::pair<int, int>>> selections;
    };
    std::vector<Group> groups;
    std::vector<std::vector<std::pair<int, int>>> class_pairs(p1);
    for (int j = 0; j < p1; ++j) {
        const auto& spec = classes[j].spectrum;
        for (int a = 0; a < static_cast<int>(spec.size()); ++a) {
            if (spec[a].mult() >= 2) class_pairs[j].emplace_back(a, a);
            for (int b = a + 1; b < static_cast<int>(spec.size()); ++b)
                class_pairs[j].emplace_back(a, b);
        }
    }
    std::vector<std::size_t> pick(p1, 0);
    for (;;) {
        std::vector<Scalar> key;
        Scalar acc(additive ? 0L : 1L);
        std::vector<std::pair<int, int>> sel;
        for (int j = 0; j < p1; ++j) {
            auto [a, b] = class_pairs[j][pick[j]];
            sel.emplace_back(a, b);
            const Scalar& x = classes[j].spectrum[a].value;
            const Scalar& y = classes[j].spectrum[b].value;
            Scalar k = additive ? x + y : x * y;
            if (additive)
                acc += k;
            else
                acc *= k;
            key.push_back(std::move(k));
        }
        bool admissible = !constraint || (additive ? acc.is_zero() : acc == Scalar(1L));
        if (admissible) {
            bool found = false;
            for (auto& g : groups) {
                bool same = true;
                for (int j = 0; j < p1 && same; ++j) same = g.key[j] == key[j];
                if (same) {
                    g.selections.push_back(sel);
                    found = true;
                    break;
                }
            }
            if (!found) groups.push_back({std::move(key), {sel}});
        }
        std::size_t j = p1;
        while (j > 0 && ++pick[j - 1] == class_pairs[j - 1].size()) pick[--j] = 0;
        if (j == 0) break;
    }

    int big = n * (n - 1) / 2;
    for (auto& g : groups) {
        ExactMatrix stacked(p1 * big, big);
        for (int j = 0; j < p1; ++j) {
            ExactMatrix op = exterior_square_operator(t.matrices[j], additive);
            for (int i = 0; i < big; ++i) op.at(i, i) -= g.key[j];
            for (int i = 0; i < big; ++i)
                for (int c = 0; c < big; ++c) stacked.at(j * big + i, c) = op.at(i, c);
        }
        auto kern = kernel_basis(stacked);
        if (kern.empty()) continue;
        InvariantPlaneStratum stratum;
        stratum.key = g.key;
        stratum.pair_selections = g.selections;
        stratum.omega_basis = kern;
        if (kern.size() == 1) {
            // Plücker test: omega decomposable iff all 4x4 sub-pfaffians vanish
            const auto& w = kern[0];
            auto om = [&](int a, int b) -> Scalar {
                if (a == b) return Scalar(0L);
                if (a < b) return w[wedge_index(a, b, n)];
                return -w[wedge_index(b, a, n)];
            };
            bool dec = true;
            for (int a = 0; a < n && dec; ++a)
                for (int b = a + 1; b < n && dec; ++b)
                    for (int c = b + 1; c < n && dec; ++c)
                        for (int d = c + 1; d < n && dec; ++d)
                            dec = (om(a, b) * om(c, d) - om(a, c) * om(b, d) +
                                   om(a, d) * om(b, c))
                                      .is_zero();
            stratum.decomposable = dec;
            if (dec) {
                // the plane is the column space of the antisymmetric matrix
                SpanBuilder sb(n);
                for (int c = 0; c < n && sb.dimension() < 2; ++c) {
                    std::vector<Scalar> col(n);
                    for (int r = 0; r < n; ++r) col[r] = om(r, c);
                    sb.insert(col);
                }
                stratum.plane_basis = sb.rows();
            }
        }
        rep.planes.push_back(std::move(stratum));
    }
    return rep;
}

MatrixTuple diagonal_limit(const MatrixTuple& t, const std::vector<int>& partition) {
    t.validate_shapes();
    int n = t.n();
    int total = 0;
    for (int p : partition) {
        if (p < 1) throw ValidationError("partition parts must be >= 1");
        total += p;
    }
    if (total != n) throw ValidationError("partition must sum to n");
    std::vector<int> block_of(n);
    int b = 0, off = 0;
    for (int p : partition) {
        for (int i = 0; i < p; ++i) block_of[off + i] = b;
        ++b, off += p;
    }
    for (const auto& m : t.matrices)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (block_of[i] > block_of[j] && !m.at(i, j).is_zero())
                    throw NotBlockTriangular("entry below the diagonal blocks is nonzero");
    MatrixTuple out = t;
    for (auto& m : out.matrices)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (block_of[i] != block_of[j]) m.at(i, j) = Scalar(0L);
    return out;
}

}  // namespace dsp
