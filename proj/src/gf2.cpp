#include "multipede/gf2.hpp"

#include <algorithm>

#include "multipede/errors.hpp"
#include "multipede/hypergraph.hpp"

namespace multipede {

Gf2Matrix::Gf2Matrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw InputError("negative matrix dimension");
    words_ = (cols + 63) / 64;
    if (words_ == 0) words_ = 1;
    data_.assign(static_cast<size_t>(rows_) * words_, 0);
}

bool Gf2Matrix::get(int r, int c) const {
    return (row(r)[c >> 6] >> (c & 63)) & 1u;
}

void Gf2Matrix::set(int r, int c, bool v) {
    uint64_t mask = uint64_t{1} << (c & 63);
    if (v)
        row(r)[c >> 6] |= mask;
    else
        row(r)[c >> 6] &= ~mask;
}

void Gf2Matrix::flip(int r, int c) {
    row(r)[c >> 6] ^= uint64_t{1} << (c & 63);
}

namespace {

struct Elim {
    // Reduced row-echelon form of [A | aug], with pivot column per reduced row.
    std::vector<std::vector<uint64_t>> rows;   // packed A part
    std::vector<std::vector<uint64_t>> aug;    // packed augmentation part
    std::vector<int> pivot_col;                // one per rank row
    int rank = 0;
};

bool bit(const std::vector<uint64_t>& w, int c) { return (w[c >> 6] >> (c & 63)) & 1u; }
void xor_into(std::vector<uint64_t>& a, const std::vector<uint64_t>& b) {
    for (size_t i = 0; i < a.size(); ++i) a[i] ^= b[i];
}

// aug_words = words per augmentation row; aug rows initialized by caller.
Elim eliminate(const Gf2Matrix& m, std::vector<std::vector<uint64_t>> aug, int aw,
               const uint64_t* data, int words) {
    Elim e;
    e.rows.resize(m.rows());
    for (int r = 0; r < m.rows(); ++r)
        e.rows[r].assign(data + static_cast<size_t>(r) * words, data + static_cast<size_t>(r + 1) * words);
    e.aug = std::move(aug);
    if (e.aug.empty()) e.aug.assign(m.rows(), std::vector<uint64_t>(std::max(aw, 1), 0));
    for (int c = 0; c < m.cols(); ++c) {
        int piv = -1;
        for (int r = e.rank; r < m.rows(); ++r)
            if (bit(e.rows[r], c)) { piv = r; break; }
        if (piv < 0) continue;
        std::swap(e.rows[e.rank], e.rows[piv]);
        std::swap(e.aug[e.rank], e.aug[piv]);
        for (int r = 0; r < m.rows(); ++r) {
            if (r != e.rank && bit(e.rows[r], c)) {
                xor_into(e.rows[r], e.rows[e.rank]);
                xor_into(e.aug[r], e.aug[e.rank]);
            }
        }
        e.pivot_col.push_back(c);
        ++e.rank;
    }
    return e;
}

}  // namespace

int Gf2Matrix::rank() const {
    return eliminate(*this, {}, 1, data_.data(), words_).rank;
}

std::optional<std::vector<uint8_t>> Gf2Matrix::solve(const std::vector<uint8_t>& t) const {
    if (static_cast<int>(t.size()) != rows_) throw InputError("solve: rhs dimension mismatch");
    std::vector<std::vector<uint64_t>> aug(rows_, std::vector<uint64_t>(1, 0));
    for (int r = 0; r < rows_; ++r) aug[r][0] = t[r] & 1u;
    Elim e = eliminate(*this, std::move(aug), 1, data_.data(), words_);
    // Inconsistent iff some zero row of A has nonzero rhs.
    for (int r = e.rank; r < rows_; ++r)
        if (e.aug[r][0] & 1u) return std::nullopt;
    std::vector<uint8_t> x(cols_, 0);
    for (int i = 0; i < e.rank; ++i) x[e.pivot_col[i]] = static_cast<uint8_t>(e.aug[i][0] & 1u);
    return x;
}

std::vector<std::vector<uint8_t>> Gf2Matrix::kernel() const {
    Elim e = eliminate(*this, {}, 1, data_.data(), words_);
    std::vector<bool> is_pivot(cols_, false);
    for (int c : e.pivot_col) is_pivot[c] = true;
    std::vector<std::vector<uint8_t>> basis;
    for (int free = 0; free < cols_; ++free) {
        if (is_pivot[free]) continue;
        std::vector<uint8_t> v(cols_, 0);
        v[free] = 1;
        for (int i = 0; i < e.rank; ++i)
            if (bit(e.rows[i], free)) v[e.pivot_col[i]] = 1;
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<std::vector<uint8_t>> Gf2Matrix::left_kernel() const {
    // Eliminate with an identity augmentation; zero A-rows yield combinations.
    int aw = (rows_ + 63) / 64;
    if (aw == 0) aw = 1;
    std::vector<std::vector<uint64_t>> aug(rows_, std::vector<uint64_t>(aw, 0));
    for (int r = 0; r < rows_; ++r) aug[r][r >> 6] = uint64_t{1} << (r & 63);
    Elim e = eliminate(*this, std::move(aug), aw, data_.data(), words_);
    std::vector<std::vector<uint8_t>> basis;
    for (int r = e.rank; r < rows_; ++r) {
        std::vector<uint8_t> u(rows_, 0);
        for (int j = 0; j < rows_; ++j) u[j] = static_cast<uint8_t>((e.aug[r][j >> 6] >> (j & 63)) & 1u);
        basis.push_back(std::move(u));
    }
    return basis;
}

Gf2Matrix incidence_matrix(const Hypergraph& h) {
    Gf2Matrix m(h.edge_count(), h.n());
    for (int r = 0; r < h.edge_count(); ++r)
        for (Vertex v : h.edges()[r]) m.set(r, v, true);
    return m;
}

}  // namespace multipede
