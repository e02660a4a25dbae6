#include "dsp/matrix.hpp"

#include <algorithm>

namespace dsp {

ExactMatrix ExactMatrix::identity(int n) {
    ExactMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Scalar(1L);
    return m;
}

ExactMatrix ExactMatrix::unit(int n, int i, int j) {
    ExactMatrix m(n, n);
    m.at(i, j) = Scalar(1L);
    return m;
}

ExactMatrix ExactMatrix::from_rows(std::initializer_list<std::initializer_list<Scalar>> rows) {
    ExactMatrix m(static_cast<int>(rows.size()),
                  rows.size() ? static_cast<int>(rows.begin()->size()) : 0);
    int i = 0;
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != m.cols) throw ShapeMismatch("ragged rows");
        int j = 0;
        for (const auto& v : row) m.at(i, j++) = v;
        ++i;
    }
    return m;
}

ExactMatrix ExactMatrix::diagonal(const std::vector<Scalar>& d) {
    ExactMatrix m(static_cast<int>(d.size()), static_cast<int>(d.size()));
    for (std::size_t i = 0; i < d.size(); ++i) m.at(static_cast<int>(i), static_cast<int>(i)) = d[i];
    return m;
}

bool ExactMatrix::is_zero() const {
    for (const auto& v : entries)
        if (!v.is_zero()) return false;
    return true;
}

bool ExactMatrix::is_scalar_matrix() const {
    if (!is_square()) return false;
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            if (i == j ? !(at(i, j) == at(0, 0)) : !at(i, j).is_zero()) return false;
        }
    return true;
}

ExactMatrix ExactMatrix::operator+(const ExactMatrix& o) const {
    if (rows != o.rows || cols != o.cols) throw ShapeMismatch("matrix add");
    ExactMatrix m(rows, cols);
    for (std::size_t i = 0; i < entries.size(); ++i) m.entries[i] = entries[i] + o.entries[i];
    return m;
}

ExactMatrix ExactMatrix::operator-(const ExactMatrix& o) const {
    if (rows != o.rows || cols != o.cols) throw ShapeMismatch("matrix sub");
    ExactMatrix m(rows, cols);
    for (std::size_t i = 0; i < entries.size(); ++i) m.entries[i] = entries[i] - o.entries[i];
    return m;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& o) const {
    if (cols != o.rows) throw ShapeMismatch("matrix mul");
    ExactMatrix m(rows, o.cols);
    for (int i = 0; i < rows; ++i)
        for (int k = 0; k < cols; ++k) {
            if (at(i, k).is_zero()) continue;
            for (int j = 0; j < o.cols; ++j) {
                if (o.at(k, j).is_zero()) continue;
                m.at(i, j) += at(i, k) * o.at(k, j);
            }
        }
    return m;
}

ExactMatrix ExactMatrix::operator-() const {
    ExactMatrix m(rows, cols);
    for (std::size_t i = 0; i < entries.size(); ++i) m.entries[i] = -entries[i];
    return m;
}

ExactMatrix ExactMatrix::scale(const Scalar& c) const {
    ExactMatrix m(rows, cols);
    for (std::size_t i = 0; i < entries.size(); ++i) m.entries[i] = entries[i] * c;
    return m;
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix m(cols, rows);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.at(j, i) = at(i, j);
    return m;
}

bool ExactMatrix::operator==(const ExactMatrix& o) const {
    if (rows != o.rows || cols != o.cols) return false;
    for (std::size_t i = 0; i < entries.size(); ++i)
        if (!(entries[i] == o.entries[i])) return false;
    return true;
}

ExactMatrix ExactMatrix::block_assemble(const std::vector<std::vector<ExactMatrix>>& grid) {
    if (grid.empty() || grid[0].empty()) throw ShapeMismatch("empty block grid");
    std::size_t gcols = grid[0].size();
    std::vector<int> heights(grid.size()), widths(gcols);
    for (std::size_t bi = 0; bi < grid.size(); ++bi) {
        if (grid[bi].size() != gcols) throw ShapeMismatch("ragged block grid");
        heights[bi] = grid[bi][0].rows;
        for (std::size_t bj = 0; bj < gcols; ++bj) {
            if (grid[bi][bj].rows != heights[bi]) throw ShapeMismatch("block row heights differ");
            if (bi == 0) widths[bj] = grid[0][bj].cols;
            if (grid[bi][bj].cols != widths[bj]) throw ShapeMismatch("block column widths differ");
        }
    }
    int total_r = 0, total_c = 0;
    for (int h : heights) total_r += h;
    for (int w : widths) total_c += w;
    ExactMatrix m(total_r, total_c);
    int roff = 0;
    for (std::size_t bi = 0; bi < grid.size(); ++bi) {
        int coff = 0;
        for (std::size_t bj = 0; bj < gcols; ++bj) {
            const ExactMatrix& b = grid[bi][bj];
            for (int i = 0; i < b.rows; ++i)
                for (int j = 0; j < b.cols; ++j) m.at(roff + i, coff + j) = b.at(i, j);
            coff += widths[bj];
        }
        roff += heights[bi];
    }
    return m;
}

ExactMatrix ExactMatrix::block_diagonal(const std::vector<ExactMatrix>& blocks) {
    int n = 0;
    for (const auto& b : blocks) {
        if (!b.is_square()) throw ShapeMismatch("block_diagonal needs square blocks");
        n += b.rows;
    }
    ExactMatrix m(n, n);
    int off = 0;
    for (const auto& b : blocks) {
        for (int i = 0; i < b.rows; ++i)
            for (int j = 0; j < b.cols; ++j) m.at(off + i, off + j) = b.at(i, j);
        off += b.rows;
    }
    return m;
}

std::vector<Scalar> ExactMatrix::apply(const std::vector<Scalar>& v) const {
    if (static_cast<int>(v.size()) != cols) throw ShapeMismatch("matrix apply");
    std::vector<Scalar> out(rows);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            if (!at(i, j).is_zero() && !v[j].is_zero()) out[i] += at(i, j) * v[j];
    return out;
}

// --------------------------------------------------- fraction-free echelon

namespace {

struct Echelon {
    std::vector<std::vector<Poly>> m;
    std::vector<std::pair<int, int>> pivots;  // (row, col)
};

// Clear denominators row by row, then run Bareiss elimination (each division
// by the previous pivot is exact; entries stay minors of the scaled matrix,
// which bounds their growth).
Echelon echelon_form(const ExactMatrix& a) {
    Echelon e;
    e.m.assign(a.rows, std::vector<Poly>(a.cols));
    for (int i = 0; i < a.rows; ++i) {
        std::vector<Poly> dens(a.cols), pre(a.cols + 1), suf(a.cols + 1);
        pre[0] = Poly(1L);
        suf[a.cols] = Poly(1L);
        for (int j = 0; j < a.cols; ++j) dens[j] = a.at(i, j).den();
        for (int j = 0; j < a.cols; ++j) pre[j + 1] = pre[j] * dens[j];
        for (int j = a.cols - 1; j >= 0; --j) suf[j] = suf[j + 1] * dens[j];
        for (int j = 0; j < a.cols; ++j) e.m[i][j] = a.at(i, j).num() * pre[j] * suf[j + 1];
    }
    Poly prev(1L);
    int prow = 0;
    for (int col = 0; col < a.cols && prow < a.rows; ++col) {
        int pr = -1;
        for (int i = prow; i < a.rows; ++i)
            if (!e.m[i][col].is_zero()) {
                pr = i;
                break;
            }
        if (pr < 0) continue;
        std::swap(e.m[prow], e.m[pr]);
        for (int i = prow + 1; i < a.rows; ++i) {
            for (int j = col + 1; j < a.cols; ++j) {
                Poly num = e.m[prow][col] * e.m[i][j] - e.m[i][col] * e.m[prow][j];
                auto q = Poly::divide_exact(num, prev);
                if (!q) throw Error("internal: fraction-free division not exact");
                e.m[i][j] = std::move(*q);
            }
            e.m[i][col] = Poly();
        }
        prev = e.m[prow][col];
        e.pivots.emplace_back(prow, col);
        ++prow;
    }
    return e;
}

}  // namespace

int rank(const ExactMatrix& a) {
    if (a.rows == 0 || a.cols == 0) return 0;
    return static_cast<int>(echelon_form(a).pivots.size());
}

std::vector<std::vector<Scalar>> kernel_basis(const ExactMatrix& a) {
    std::vector<std::vector<Scalar>> out;
    if (a.cols == 0) return out;
    if (a.rows == 0) {
        for (int f = 0; f < a.cols; ++f) {
            std::vector<Scalar> v(a.cols);
            v[f] = Scalar(1L);
            out.push_back(std::move(v));
        }
        return out;
    }
    Echelon e = echelon_form(a);
    std::vector<bool> is_pivot(a.cols, false);
    for (auto [r, c] : e.pivots) is_pivot[c] = true;
    for (int f = 0; f < a.cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Scalar> v(a.cols);
        v[f] = Scalar(1L);
        for (int k = static_cast<int>(e.pivots.size()) - 1; k >= 0; --k) {
            auto [r, c] = e.pivots[k];
            if (c > f) continue;  // columns right of f beyond pivots are zero in v
            Scalar acc(0L);
            for (int j = c + 1; j < a.cols; ++j)
                if (!e.m[r][j].is_zero() && !v[j].is_zero()) acc += Scalar(e.m[r][j]) * v[j];
            v[c] = -(acc / Scalar(e.m[r][c]));
        }
        out.push_back(std::move(v));
    }
    return out;
}

ExactMatrix inverse(const ExactMatrix& a) {
    if (!a.is_square()) throw ShapeMismatch("inverse of non-square matrix");
    int n = a.rows;
    // Gauss-Jordan over the field
    ExactMatrix w = a, inv = ExactMatrix::identity(n);
    for (int col = 0; col < n; ++col) {
        int pr = -1;
        for (int i = col; i < n; ++i)
            if (!w.at(i, col).is_zero()) {
                pr = i;
                break;
            }
        if (pr < 0) throw Error("matrix is singular");
        for (int j = 0; j < n; ++j) {
            std::swap(w.entries[static_cast<std::size_t>(col) * n + j],
                      w.entries[static_cast<std::size_t>(pr) * n + j]);
            std::swap(inv.entries[static_cast<std::size_t>(col) * n + j],
                      inv.entries[static_cast<std::size_t>(pr) * n + j]);
        }
        Scalar piv = w.at(col, col);
        for (int j = 0; j < n; ++j) {
            w.at(col, j) /= piv;
            inv.at(col, j) /= piv;
        }
        for (int i = 0; i < n; ++i) {
            if (i == col || w.at(i, col).is_zero()) continue;
            Scalar f = w.at(i, col);
            for (int j = 0; j < n; ++j) {
                w.at(i, j) -= f * w.at(col, j);
                inv.at(i, j) -= f * inv.at(col, j);
            }
        }
    }
    return inv;
}

bool class_membership(const ExactMatrix& a, const ConjugacyClassSpec& c) {
    c.validate();
    if (!a.is_square() || a.rows != c.n) throw ShapeMismatch("class_membership size");
    int n = c.n;
    for (const auto& entry : c.spectrum) {
        ExactMatrix shifted = a - ExactMatrix::identity(n).scale(entry.value);
        ExactMatrix power = shifted;
        int bmax = entry.blocks[0];
        for (int k = 1; k <= bmax; ++k) {
            long long expect = n;
            for (int b : entry.blocks) expect -= std::min(k, b);
            if (rank(power) != expect) return false;
            if (k < bmax) power = power * shifted;
        }
    }
    return true;
}

ExactMatrix jordan_representative(const ConjugacyClassSpec& c) {
    c.validate();
    std::vector<ExactMatrix> blocks;
    for (const auto& e : c.spectrum)
        for (int b : e.blocks) {
            ExactMatrix jb(b, b);
            for (int i = 0; i < b; ++i) {
                jb.at(i, i) = e.value;
                if (i + 1 < b) jb.at(i, i + 1) = Scalar(1L);
            }
            blocks.push_back(std::move(jb));
        }
    return ExactMatrix::block_diagonal(blocks);
}

// ---------------------------------------------------------------- SpanBuilder

void SpanBuilder::reduce(std::vector<Scalar>& v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const Scalar& c = v[pivots_[r]];
        if (c.is_zero()) continue;
        Scalar f = c;  // pivot entries are normalized to 1
        for (std::size_t j = pivots_[r]; j < width_; ++j)
            if (!rows_[r][j].is_zero()) v[j] -= f * rows_[r][j];
    }
}

bool SpanBuilder::insert(std::vector<Scalar> v) {
    if (v.size() != width_) throw ShapeMismatch("SpanBuilder width");
    reduce(v);
    std::size_t p = width_;
    for (std::size_t j = 0; j < width_; ++j)
        if (!v[j].is_zero()) {
            p = j;
            break;
        }
    if (p == width_) return false;
    Scalar piv = v[p];
    for (std::size_t j = p; j < width_; ++j)
        if (!v[j].is_zero()) v[j] /= piv;
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
}

bool SpanBuilder::contains(std::vector<Scalar> v) const {
    if (v.size() != width_) throw ShapeMismatch("SpanBuilder width");
    reduce(v);
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

std::vector<Scalar> vec(const ExactMatrix& m) {
    return m.entries;
}

ExactMatrix unvec(const std::vector<Scalar>& v, int rows, int cols) {
    if (static_cast<int>(v.size()) != rows * cols) throw ShapeMismatch("unvec size");
    ExactMatrix m(rows, cols);
    m.entries = v;
    return m;
}

}  // namespace dsp
