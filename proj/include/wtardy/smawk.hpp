// Row maxima of an implicitly given totally monotone matrix (SMAWK).
#pragma once

#include <cstddef>
#include <vector>

namespace wtardy {

namespace detail {

template <class F>
void smawk_rec(const std::vector<std::size_t>& rows,
               const std::vector<std::size_t>& cols, F& f,
               std::vector<std::size_t>& argmax) {
  if (rows.empty()) return;

  // REDUCE: keep at most |rows| columns that can still hold a leftmost max.
  std::vector<std::size_t> kept;
  kept.reserve(rows.size());
  for (std::size_t c : cols) {
    while (!kept.empty()) {
      const std::size_t r = rows[kept.size() - 1];
      if (f(r, kept.back()) < f(r, c)) {
        kept.pop_back();
      } else {
        break;
      }
    }
    if (kept.size() < rows.size()) kept.push_back(c);
  }

  std::vector<std::size_t> odd;
  odd.reserve(rows.size() / 2);
  for (std::size_t i = 1; i < rows.size(); i += 2) odd.push_back(rows[i]);
  smawk_rec(odd, kept, f, argmax);

  // INTERPOLATE: even rows scan between the answers of their odd neighbours.
  std::size_t ci = 0;
  for (std::size_t i = 0; i < rows.size(); i += 2) {
    const std::size_t r = rows[i];
    const std::size_t stop =
        (i + 1 < rows.size()) ? argmax[rows[i + 1]] : kept.back();
    std::size_t best = kept[ci];
    auto best_value = f(r, best);
    while (kept[ci] != stop) {
      ++ci;
      auto v = f(r, kept[ci]);
      if (v > best_value) {
        best_value = v;
        best = kept[ci];
      }
    }
    argmax[r] = best;
  }
}

}  // namespace detail

/// Leftmost row maxima of the rows x cols matrix f(row, col), where cols is
/// an increasing list of column ids and the leftmost argmax is non-decreasing
/// in the row for every column subset. Returns argmax[row] as a column id.
/// O(rows + cols) evaluations of f.
template <class F>
std::vector<std::size_t> smawk_row_argmax(std::size_t rows,
                                          const std::vector<std::size_t>& cols,
                                          F&& f) {
  std::vector<std::size_t> argmax(rows, 0);
  if (rows == 0 || cols.empty()) return argmax;
  std::vector<std::size_t> row_ids(rows);
  for (std::size_t i = 0; i < rows; ++i) row_ids[i] = i;
  detail::smawk_rec(row_ids, cols, f, argmax);
  return argmax;
}

}  // namespace wtardy
