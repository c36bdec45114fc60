// Internal dense boolean-matrix helpers backed by dynamic bitsets.  Only .cpp
// files include this; public headers stick to std containers.
#pragma once

#include <boost/dynamic_bitset.hpp>
#include <vector>

namespace mixthin::detail {

using Bitset = boost::dynamic_bitset<>;
using BitMatrix = std::vector<Bitset>;  // row-major; rows of equal width

inline BitMatrix make_bitmatrix(int rows, int cols) {
  return BitMatrix(static_cast<std::size_t>(rows),
                   Bitset(static_cast<std::size_t>(cols)));
}

inline std::vector<std::vector<bool>> to_bool_matrix(const BitMatrix& m) {
  std::vector<std::vector<bool>> out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    out[i].assign(m[i].size(), false);
    for (std::size_t j = m[i].find_first(); j != Bitset::npos;
         j = m[i].find_next(j))
      out[i][j] = true;
  }
  return out;
}

inline BitMatrix from_bool_matrix(const std::vector<std::vector<bool>>& m) {
  BitMatrix out;
  out.reserve(m.size());
  for (const auto& row : m) {
    Bitset b(row.size());
    for (std::size_t j = 0; j < row.size(); ++j)
      if (row[j]) b.set(j);
    out.push_back(std::move(b));
  }
  return out;
}

// Boolean matrix product: out[i][k] = OR_j a[i][j] & b[j][k].
inline BitMatrix bool_multiply(const BitMatrix& a, const BitMatrix& b) {
  const std::size_t cols = b.empty() ? 0 : b[0].size();
  BitMatrix out(a.size(), Bitset(cols));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = a[i].find_first(); j != Bitset::npos;
         j = a[i].find_next(j))
      out[i] |= b[j];
  return out;
}

inline BitMatrix transpose(const BitMatrix& a) {
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  BitMatrix out(cols, Bitset(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = a[i].find_first(); j != Bitset::npos;
         j = a[i].find_next(j))
      out[j].set(i);
  return out;
}

}  // namespace mixthin::detail
