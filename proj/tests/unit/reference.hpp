#pragma once

// Per-coordinate reference implementations. They work on plain int vectors and
// share no code with the library, so tests can compare the two routes.

#include <cstddef>
#include <set>
#include <utility>
#include <vector>

namespace heegaard::reference {

using Bits = std::vector<int>;
using Rows = std::vector<Bits>;

/// sum_i x_{a_i} y_{b_i} + x_{b_i} y_{a_i} mod 2, straight from the definition.
inline int form(const Bits& x, const Bits& y) {
  const std::size_t g = x.size() / 2;
  int sum = 0;
  for (std::size_t i = 0; i < g; ++i) sum += x[i] * y[g + i] + x[g + i] * y[i];
  return sum % 2;
}

inline Bits add(Bits x, const Bits& y) {
  for (std::size_t k = 0; k < x.size(); ++k) x[k] = (x[k] + y[k]) % 2;
  return x;
}

inline Bits transvection(const Bits& gamma, const Bits& x) { return form(gamma, x) ? add(x, gamma) : x; }

/// Textbook Gaussian elimination with explicit row swaps.
inline std::size_t rank(Rows m) {
  std::size_t r = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t pivot = r;
    while (pivot < m.size() && m[pivot][c] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[r], m[pivot]);
    for (std::size_t k = 0; k < m.size(); ++k) {
      if (k != r && m[k][c]) m[k] = add(m[k], m[r]);
    }
    ++r;
  }
  return r;
}

/// Every element of the span, by subset enumeration.
inline std::set<Bits> span(const Rows& vs, std::size_t dim) {
  std::set<Bits> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << vs.size()); ++mask) {
    Bits acc(dim, 0);
    for (std::size_t k = 0; k < vs.size(); ++k) {
      if ((mask >> k) & 1U) acc = add(acc, vs[k]);
    }
    out.insert(acc);
  }
  return out;
}

inline Rows pivot_update(const Rows& m, std::size_t i, std::size_t j) {
  Rows out = m;
  for (std::size_t r = 0; r < m.size(); ++r) {
    for (std::size_t c = 0; c < m[r].size(); ++c) out[r][c] = (m[r][c] + m[r][j] * m[i][c]) % 2;
  }
  return out;
}

inline Bits basis(std::size_t dim, std::size_t k) {
  Bits v(dim, 0);
  v[k] = 1;
  return v;
}

}  // namespace heegaard::reference
