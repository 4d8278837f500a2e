#pragma once

#include <cstddef>
#include <cstdint>
#include <queue>
#include <stdexcept>
#include <vector>

#include "apportion/tie.hpp"

namespace apportion::detail {

// Selects the M best entries of an M x n matrix whose columns never improve
// going down (column j, row l is key(j, l), l = 1..M). `better(a, b)` is a strict
// order. Only columns flagged active take part. Returns the forced prefix of each
// column plus the block of entries equal to the boundary value, from which every
// optimal selection is obtained.
template <class Key, class KeyFn, class Better>
TieSet select_best(std::size_t n, std::int64_t rows, const std::vector<bool>& active, KeyFn&& key, Better&& better) {
  std::vector<std::vector<Key>> cache(n);
  auto at = [&](std::size_t j, std::int64_t row) -> const Key& {
    auto& col = cache[j];
    while (static_cast<std::int64_t>(col.size()) < row) {
      col.push_back(key(j, static_cast<std::int64_t>(col.size()) + 1));
    }
    return col[static_cast<std::size_t>(row - 1)];
  };
  auto equal = [&](const Key& a, const Key& b) { return !better(a, b) && !better(b, a); };

  std::vector<std::int64_t> cursor(n, 0);
  // Worst-first comparator so the heap top is the best head; ties favour the lower index.
  auto cmp = [&](std::size_t a, std::size_t b) {
    const Key& ka = at(a, cursor[a] + 1);
    const Key& kb = at(b, cursor[b] + 1);
    if (better(kb, ka)) return true;
    if (better(ka, kb)) return false;
    return a > b;
  };
  std::priority_queue<std::size_t, std::vector<std::size_t>, decltype(cmp)> heads(cmp);
  for (std::size_t j = 0; j < n; ++j) {
    if (active[j] && rows > 0) heads.push(j);
  }

  std::size_t last = n;
  for (std::int64_t step = 0; step < rows; ++step) {
    if (heads.empty()) throw std::logic_error("select_best: fewer selectable entries than seats");
    const std::size_t j = heads.top();
    heads.pop();
    ++cursor[j];
    last = j;
    if (cursor[j] < rows) heads.push(j);
  }

  TieSet ties;
  ties.base.assign(n, 0);
  ties.slack.assign(n, 0);
  if (rows == 0) return ties;
  const Key boundary = at(last, cursor[last]);
  for (std::size_t j = 0; j < n; ++j) {
    if (!active[j]) continue;
    std::int64_t taken_equal = 0;
    while (taken_equal < cursor[j] && equal(at(j, cursor[j] - taken_equal), boundary)) ++taken_equal;
    std::int64_t untaken_equal = 0;
    while (cursor[j] + untaken_equal < rows && equal(at(j, cursor[j] + untaken_equal + 1), boundary)) {
      ++untaken_equal;
    }
    ties.base[j] = cursor[j] - taken_equal;
    ties.slack[j] = taken_equal + untaken_equal;
    ties.extra += taken_equal;
  }
  return ties;
}

}  // namespace apportion::detail
