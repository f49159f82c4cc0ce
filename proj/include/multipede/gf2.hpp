#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace multipede {

class Hypergraph;

/// Dense GF(2) matrix; rows packed into 64-bit words.
class Gf2Matrix {
  public:
    Gf2Matrix(int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    bool get(int r, int c) const;
    void set(int r, int c, bool v);
    void flip(int r, int c);

    int rank() const;

    /// One solution x of A·x = t (t indexed by rows), or nullopt.
    std::optional<std::vector<uint8_t>> solve(const std::vector<uint8_t>& t) const;

    /// Basis of { x : A·x = 0 }.
    std::vector<std::vector<uint8_t>> kernel() const;

    /// Basis of { u : uᵀ·A = 0 } (row combinations summing to zero).
    std::vector<std::vector<uint8_t>> left_kernel() const;

  private:
    int rows_, cols_, words_;
    std::vector<uint64_t> data_;  // row-major, words_ words per row

    uint64_t* row(int r) { return data_.data() + static_cast<size_t>(r) * words_; }
    const uint64_t* row(int r) const { return data_.data() + static_cast<size_t>(r) * words_; }
};

/// Hyperedge×vertex 0/1 incidence matrix; row per edge, three 1s each.
Gf2Matrix incidence_matrix(const Hypergraph& h);

}  // namespace multipede
