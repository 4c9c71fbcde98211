#pragma once

// Canonical labeling by ordered-partition refinement and a backtracking
// search over individualizations. The canonical graph is the relabeling whose
// adjacency rows are lexicographically largest among the search-tree leaves.
// Automorphisms found at equal leaves prune sibling branches that lie in the
// same orbit of the pointwise stabilizer of the current path.

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "chromax/graph.hpp"
#include "chromax/graph6.hpp"

namespace chromax {

inline constexpr int kMaxCanonicalOrder = 12;

struct CanonicalLabeling {
  /// perm[v] is the canonical position of vertex v.
  std::vector<int> perm;
  SimpleGraph graph;
};

namespace detail {

using Cells = std::vector<std::vector<int>>;

/// Refine to the coarsest equitable partition finer than `cells`. Splits are
/// ordered by neighbor count into the splitter, so the result depends only on
/// the graph structure and the input cell order.
inline void refine(const SimpleGraph& g, Cells& cells) {
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t s = 0; s < cells.size() && !changed; ++s) {
      VertexSet splitter = 0;
      for (int v : cells[s]) splitter |= bit(v);
      for (std::size_t i = 0; i < cells.size(); ++i) {
        auto& cell = cells[i];
        if (cell.size() < 2) continue;
        std::vector<std::pair<int, int>> keyed;
        keyed.reserve(cell.size());
        for (int v : cell) keyed.emplace_back(popcount(g.neighbors(v) & splitter), v);
        std::sort(keyed.begin(), keyed.end());
        if (keyed.front().first == keyed.back().first) continue;
        Cells parts;
        for (std::size_t j = 0; j < keyed.size(); ++j) {
          if (j == 0 || keyed[j].first != keyed[j - 1].first) parts.emplace_back();
          parts.back().push_back(keyed[j].second);
        }
        cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(i));
        cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(i), parts.begin(), parts.end());
        changed = true;
        break;
      }
    }
  }
}

class CanonSearch {
 public:
  explicit CanonSearch(const SimpleGraph& g) : g_(g), n_(g.order()) {}

  CanonicalLabeling run() {
    Cells cells;
    if (n_ > 0) {
      cells.emplace_back(static_cast<std::size_t>(n_));
      std::iota(cells[0].begin(), cells[0].end(), 0);
    }
    refine(g_, cells);
    std::vector<int> path;
    search(cells, path);
    return {best_perm_, g_.relabel(best_perm_)};
  }

 private:
  std::vector<VertexSet> code_of(const std::vector<int>& perm) const {
    std::vector<VertexSet> rows(static_cast<std::size_t>(n_), 0);
    for (int v = 0; v < n_; ++v)
      for (int w : members(g_.neighbors(v)))
        rows[static_cast<std::size_t>(perm[static_cast<std::size_t>(v)])] |= bit(perm[static_cast<std::size_t>(w)]);
    return rows;
  }

  void leaf(const Cells& cells) {
    std::vector<int> perm(static_cast<std::size_t>(n_));
    for (std::size_t i = 0; i < cells.size(); ++i) perm[static_cast<std::size_t>(cells[i][0])] = static_cast<int>(i);
    auto code = code_of(perm);
    if (!has_best_ || code > best_code_) {
      has_best_ = true;
      best_code_ = std::move(code);
      best_perm_ = std::move(perm);
    } else if (code == best_code_) {
      // gamma = best^-1 o perm is an automorphism.
      std::vector<int> inv(static_cast<std::size_t>(n_));
      for (int v = 0; v < n_; ++v) inv[static_cast<std::size_t>(best_perm_[static_cast<std::size_t>(v)])] = v;
      std::vector<int> gamma(static_cast<std::size_t>(n_));
      for (int v = 0; v < n_; ++v) gamma[static_cast<std::size_t>(v)] = inv[static_cast<std::size_t>(perm[static_cast<std::size_t>(v)])];
      automorphisms_.push_back(std::move(gamma));
    }
  }

  int find(std::vector<int>& uf, int v) const {
    while (uf[static_cast<std::size_t>(v)] != v) v = uf[static_cast<std::size_t>(v)] = uf[static_cast<std::size_t>(uf[static_cast<std::size_t>(v)])];
    return v;
  }

  /// Union-find of orbits under automorphisms that fix every vertex of `path`.
  std::vector<int> stabilizer_orbits(const std::vector<int>& path) const {
    std::vector<int> uf(static_cast<std::size_t>(n_));
    std::iota(uf.begin(), uf.end(), 0);
    for (const auto& a : automorphisms_) {
      bool fixes = std::all_of(path.begin(), path.end(), [&](int v) { return a[static_cast<std::size_t>(v)] == v; });
      if (!fixes) continue;
      for (int v = 0; v < n_; ++v) {
        int x = find(uf, v), y = find(uf, a[static_cast<std::size_t>(v)]);
        if (x != y) uf[static_cast<std::size_t>(std::max(x, y))] = std::min(x, y);
      }
    }
    return uf;
  }

  void search(const Cells& cells, std::vector<int>& path) {
    auto target = std::find_if(cells.begin(), cells.end(), [](const auto& c) { return c.size() > 1; });
    if (target == cells.end()) {
      leaf(cells);
      return;
    }
    const std::size_t ti = static_cast<std::size_t>(target - cells.begin());
    std::vector<int> cell = cells[ti];
    std::sort(cell.begin(), cell.end());
    std::vector<int> tried;
    for (int v : cell) {
      if (!tried.empty()) {
        auto uf = stabilizer_orbits(path);
        int rv = find(uf, v);
        bool equivalent = std::any_of(tried.begin(), tried.end(), [&](int t) { return find(uf, t) == rv; });
        if (equivalent) continue;
      }
      tried.push_back(v);
      Cells next;
      next.reserve(cells.size() + 1);
      for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i != ti) {
          next.push_back(cells[i]);
          continue;
        }
        next.push_back({v});
        std::vector<int> rest;
        for (int w : cells[i])
          if (w != v) rest.push_back(w);
        next.push_back(std::move(rest));
      }
      refine(g_, next);
      path.push_back(v);
      search(next, path);
      path.pop_back();
    }
  }

  const SimpleGraph& g_;
  int n_;
  bool has_best_ = false;
  std::vector<VertexSet> best_code_;
  std::vector<int> best_perm_;
  std::vector<std::vector<int>> automorphisms_;
};

}  // namespace detail

inline CanonicalLabeling canonical_labeling(const SimpleGraph& g) {
  if (g.order() > kMaxCanonicalOrder)
    throw Error(Errc::too_large, "canonical labeling supports n <= " + std::to_string(kMaxCanonicalOrder));
  return detail::CanonSearch(g).run();
}

/// Label-invariant byte string: the graph6 encoding of the canonical relabeling.
inline std::string canonical_form(const SimpleGraph& g) { return write_graph6(canonical_labeling(g).graph); }

inline bool is_isomorphic(const SimpleGraph& a, const SimpleGraph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  std::vector<int> da, db;
  for (int v = 0; v < a.order(); ++v) {
    da.push_back(a.degree(v));
    db.push_back(b.degree(v));
  }
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  return canonical_labeling(a).graph == canonical_labeling(b).graph;
}

}  // namespace chromax
