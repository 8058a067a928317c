#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "mbqc/errors.hpp"

namespace mbqc {

// Bit-packed vector over Z2. A Chain is a coefficient vector with respect to
// the basis of one dimension of a complex; `complex_id` ties it to the owner
// so chains from unrelated bases cannot be mixed by accident.
class Chain {
 public:
  Chain() = default;
  Chain(int dimension, std::size_t size, uint64_t complex_id = 0)
      : dim_(dimension), n_(size), complex_id_(complex_id),
        words_((size + 63) / 64, 0) {}

  int dimension() const { return dim_; }
  std::size_t size() const { return n_; }
  uint64_t complex_id() const { return complex_id_; }

  bool get(std::size_t i) const {
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }
  void set(std::size_t i, bool v) {
    uint64_t m = 1ull << (i & 63);
    if (v)
      words_[i >> 6] |= m;
    else
      words_[i >> 6] &= ~m;
  }
  void flip(std::size_t i) { words_[i >> 6] ^= 1ull << (i & 63); }

  Chain& operator^=(const Chain& o) {
    require_same_basis(o);
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= o.words_[w];
    return *this;
  }
  friend Chain operator^(Chain a, const Chain& b) { return a ^= b; }

  bool is_zero() const {
    for (uint64_t w : words_)
      if (w) return false;
    return true;
  }

  std::size_t weight() const {
    std::size_t c = 0;
    for (uint64_t w : words_) c += static_cast<std::size_t>(__builtin_popcountll(w));
    return c;
  }

  void clear() { std::fill(words_.begin(), words_.end(), 0); }

  // Indices of set bits, ascending.
  std::vector<uint32_t> ones() const {
    std::vector<uint32_t> out;
    out.reserve(weight());
    for (std::size_t w = 0; w < words_.size(); ++w) {
      uint64_t x = words_[w];
      while (x) {
        out.push_back(static_cast<uint32_t>((w << 6) + __builtin_ctzll(x)));
        x &= x - 1;
      }
    }
    return out;
  }

  const std::vector<uint64_t>& words() const { return words_; }

  bool operator==(const Chain& o) const {
    return dim_ == o.dim_ && n_ == o.n_ && words_ == o.words_;
  }

  void require_same_basis(const Chain& o) const {
    if (dim_ != o.dim_ || n_ != o.n_ || complex_id_ != o.complex_id_)
      throw StructuralError("chain basis mismatch");
  }

 private:
  int dim_ = 0;
  std::size_t n_ = 0;
  uint64_t complex_id_ = 0;
  std::vector<uint64_t> words_;
};

// Sparse binary matrix, column-indexed for fast XOR-accumulation of selected
// columns. Duplicate positions handed to the builder cancel mod 2.
class BinaryMatrix {
 public:
  BinaryMatrix() = default;
  BinaryMatrix(std::size_t rows, std::size_t cols,
               std::vector<std::pair<uint32_t, uint32_t>> entries = {});

  static BinaryMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t entry_count() const { return row_idx_.size(); }

  // Row indices of column j, sorted.
  const uint32_t* col_begin(std::size_t j) const { return row_idx_.data() + col_ptr_[j]; }
  const uint32_t* col_end(std::size_t j) const { return row_idx_.data() + col_ptr_[j + 1]; }
  std::size_t col_weight(std::size_t j) const { return col_ptr_[j + 1] - col_ptr_[j]; }

  bool at(uint32_t r, uint32_t c) const;

  BinaryMatrix transpose() const;

  // XOR the rows of column j into `acc` (acc indexed by rows()).
  void accumulate_col(std::size_t j, Chain& acc) const;

  std::vector<std::pair<uint32_t, uint32_t>> entries() const;

  bool operator==(const BinaryMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && col_ptr_ == o.col_ptr_ &&
           row_idx_ == o.row_idx_;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<std::size_t> col_ptr_{0};
  std::vector<uint32_t> row_idx_;
};

// result = m * c over Z2. The caller declares the result dimension (a boundary
// map lowers it by one; other maps may not).
Chain apply_map(const BinaryMatrix& m, const Chain& c, int result_dimension,
                uint64_t result_complex_id = 0);

// Parity of the overlap of two chains (dot product mod 2).
int inner_product(const Chain& a, const Chain& b);

// True iff a*b is the zero matrix over Z2.
bool is_zero_map(const BinaryMatrix& a, const BinaryMatrix& b);

// Rank over Z2 (dense elimination; intended for small test/check matrices).
std::size_t z2_rank(const BinaryMatrix& m);

}  // namespace mbqc
