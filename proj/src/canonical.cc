#include "berge/canonical.hh"

#include <algorithm>

#include "berge/bits.hh"
#include "berge/io.hh"

namespace berge {
namespace {

// Row-by-row search for the lexicographically largest column-sorted matrix.
// Columns sharing the same pattern on the rows chosen so far form an ordered
// cell; picking the next row splits each cell into (hit, miss). The next
// matrix row is then fully described by the per-cell hit counts, so only rows
// tying on that vector need branching. Identical rows are tried once.
class CanonicalSearch {
 public:
  explicit CanonicalSearch(const BipartiteGraph& g) : g_(g), n_(g.n()), m_(g.m()) {
    rows_.reserve(n_);
    for (int x = 0; x < n_; ++x) {
      Bits b(m_);
      for (int y : g.x_neighbors(x)) b.set(y);
      rows_.push_back(std::move(b));
    }
  }

  BipartiteGraph run() {
    std::vector<std::vector<int>> cells;
    if (m_ > 0) {
      cells.emplace_back(m_);
      for (int y = 0; y < m_; ++y) cells[0][y] = y;
    }
    std::vector<bool> used(n_, false);
    std::vector<int> order;
    std::vector<std::vector<int>> strings;
    have_best_ = false;
    search(cells, used, order, strings);
    return build();
  }

 private:
  static std::vector<int> hit_counts(const std::vector<std::vector<int>>& cells,
                                     const Bits& row) {
    std::vector<int> counts;
    counts.reserve(cells.size());
    for (const auto& cell : cells) {
      int c = 0;
      for (int y : cell) c += row.test(y);
      counts.push_back(c);
    }
    return counts;
  }

  bool prefix_below_best(const std::vector<std::vector<int>>& strings) const {
    return have_best_ &&
           std::lexicographical_compare(strings.begin(), strings.end(),
                                        best_strings_.begin(),
                                        best_strings_.begin() + strings.size());
  }

  void search(const std::vector<std::vector<int>>& cells, std::vector<bool>& used,
              std::vector<int>& order, std::vector<std::vector<int>>& strings) {
    const int depth = static_cast<int>(order.size());
    if (depth == n_) {
      if (!have_best_ || strings > best_strings_) {
        have_best_ = true;
        best_strings_ = strings;
        best_order_ = order;
        best_cells_ = cells;
      }
      return;
    }
    std::vector<int> best_counts;
    std::vector<int> candidates;
    for (int x = 0; x < n_; ++x) {
      if (used[x]) continue;
      bool twin = false;
      for (int c : candidates)
        if (rows_[c] == rows_[x]) twin = true;
      if (twin) continue;
      auto counts = hit_counts(cells, rows_[x]);
      if (candidates.empty() || counts > best_counts) {
        best_counts = std::move(counts);
        candidates.assign(1, x);
      } else if (counts == best_counts) {
        candidates.push_back(x);
      }
    }
    strings.push_back(best_counts);
    for (int x : candidates) {
      if (prefix_below_best(strings)) break;
      std::vector<std::vector<int>> split;
      for (const auto& cell : cells) {
        std::vector<int> hit, miss;
        for (int y : cell) (rows_[x].test(y) ? hit : miss).push_back(y);
        if (!hit.empty()) split.push_back(std::move(hit));
        if (!miss.empty()) split.push_back(std::move(miss));
      }
      used[x] = true;
      order.push_back(x);
      search(split, used, order, strings);
      order.pop_back();
      used[x] = false;
    }
    strings.pop_back();
  }

  BipartiteGraph build() const {
    std::vector<int> new_index(m_, 0);
    int next = 0;
    for (const auto& cell : best_cells_)
      for (int y : cell) new_index[y] = next++;
    std::vector<std::vector<int>> rows;
    rows.reserve(n_);
    for (int x : best_order_) {
      std::vector<int> row;
      for (int y : g_.x_neighbors(x)) row.push_back(new_index[y]);
      std::sort(row.begin(), row.end());
      rows.push_back(std::move(row));
    }
    return BipartiteGraph(m_, std::move(rows));
  }

  const BipartiteGraph& g_;
  int n_;
  int m_;
  std::vector<Bits> rows_;
  bool have_best_ = false;
  std::vector<std::vector<int>> best_strings_;
  std::vector<int> best_order_;
  std::vector<std::vector<int>> best_cells_;
};

}  // namespace

BipartiteGraph canonical_form(const BipartiteGraph& g) {
  return CanonicalSearch(g).run();
}

GraphEncoding canonical_encode(const BipartiteGraph& g) {
  return {format_bg(canonical_form(g))};
}

bool is_canonical(const BipartiteGraph& g) { return canonical_form(g) == g; }

}  // namespace berge
