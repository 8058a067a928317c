#include "mbqc/z2.hpp"

#include <algorithm>

namespace mbqc {

BinaryMatrix::BinaryMatrix(std::size_t rows, std::size_t cols,
                           std::vector<std::pair<uint32_t, uint32_t>> entries)
    : rows_(rows), cols_(cols) {
  for (auto [r, c] : entries) {
    if (r >= rows_ || c >= cols_)
      throw StructuralError("matrix entry out of bounds");
  }
  // (col, row) sort, then drop pairs that appear an even number of times.
  std::sort(entries.begin(), entries.end(),
            [](const auto& a, const auto& b) {
              return a.second != b.second ? a.second < b.second : a.first < b.first;
            });
  std::vector<std::pair<uint32_t, uint32_t>> kept;
  kept.reserve(entries.size());
  for (std::size_t i = 0; i < entries.size();) {
    std::size_t j = i;
    while (j < entries.size() && entries[j] == entries[i]) ++j;
    if ((j - i) & 1) kept.push_back(entries[i]);
    i = j;
  }
  col_ptr_.assign(cols_ + 1, 0);
  for (auto& e : kept) col_ptr_[e.second + 1]++;
  for (std::size_t j = 0; j < cols_; ++j) col_ptr_[j + 1] += col_ptr_[j];
  row_idx_.resize(kept.size());
  for (std::size_t i = 0; i < kept.size(); ++i) row_idx_[i] = kept[i].first;
}

BinaryMatrix BinaryMatrix::identity(std::size_t n) {
  std::vector<std::pair<uint32_t, uint32_t>> e;
  e.reserve(n);
  for (uint32_t i = 0; i < n; ++i) e.emplace_back(i, i);
  return BinaryMatrix(n, n, std::move(e));
}

bool BinaryMatrix::at(uint32_t r, uint32_t c) const {
  return std::binary_search(col_begin(c), col_end(c), r);
}

BinaryMatrix BinaryMatrix::transpose() const {
  std::vector<std::pair<uint32_t, uint32_t>> e;
  e.reserve(row_idx_.size());
  for (uint32_t j = 0; j < cols_; ++j)
    for (const uint32_t* p = col_begin(j); p != col_end(j); ++p)
      e.emplace_back(j, *p);
  return BinaryMatrix(cols_, rows_, std::move(e));
}

void BinaryMatrix::accumulate_col(std::size_t j, Chain& acc) const {
  for (const uint32_t* p = col_begin(j); p != col_end(j); ++p) acc.flip(*p);
}

std::vector<std::pair<uint32_t, uint32_t>> BinaryMatrix::entries() const {
  std::vector<std::pair<uint32_t, uint32_t>> e;
  e.reserve(row_idx_.size());
  for (uint32_t j = 0; j < cols_; ++j)
    for (const uint32_t* p = col_begin(j); p != col_end(j); ++p)
      e.emplace_back(*p, j);
  return e;
}

Chain apply_map(const BinaryMatrix& m, const Chain& c, int result_dimension,
                uint64_t result_complex_id) {
  if (c.size() != m.cols()) throw StructuralError("apply_map: dimension mismatch");
  Chain out(result_dimension, m.rows(), result_complex_id);
  for (uint32_t j : c.ones()) m.accumulate_col(j, out);
  return out;
}

int inner_product(const Chain& a, const Chain& b) {
  a.require_same_basis(b);
  uint64_t acc = 0;
  const auto& wa = a.words();
  const auto& wb = b.words();
  for (std::size_t i = 0; i < wa.size(); ++i)
    acc ^= static_cast<uint64_t>(__builtin_popcountll(wa[i] & wb[i]));
  return static_cast<int>(acc & 1);
}

bool is_zero_map(const BinaryMatrix& a, const BinaryMatrix& b) {
  if (a.cols() != b.rows()) throw StructuralError("is_zero_map: shape mismatch");
  Chain acc(0, a.rows());
  for (std::size_t j = 0; j < b.cols(); ++j) {
    acc.clear();
    for (const uint32_t* p = b.col_begin(j); p != b.col_end(j); ++p)
      a.accumulate_col(*p, acc);
    if (!acc.is_zero()) return false;
  }
  return true;
}

std::size_t z2_rank(const BinaryMatrix& m) {
  // Dense column elimination on word-packed columns.
  std::size_t nw = (m.rows() + 63) / 64;
  std::vector<std::vector<uint64_t>> cols(m.cols(), std::vector<uint64_t>(nw, 0));
  for (uint32_t j = 0; j < m.cols(); ++j)
    for (const uint32_t* p = m.col_begin(j); p != m.col_end(j); ++p)
      cols[j][*p >> 6] ^= 1ull << (*p & 63);

  std::size_t rank = 0;
  for (std::size_t r = 0; r < m.rows() && rank < m.cols(); ++r) {
    std::size_t w = r >> 6;
    uint64_t bit = 1ull << (r & 63);
    std::size_t piv = rank;
    while (piv < m.cols() && !(cols[piv][w] & bit)) ++piv;
    if (piv == m.cols()) continue;
    std::swap(cols[piv], cols[rank]);
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j != rank && (cols[j][w] & bit)) {
        for (std::size_t k = 0; k < nw; ++k) cols[j][k] ^= cols[rank][k];
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace mbqc
