#include "wpsing/coset.hpp"

#include <deque>
#include <queue>

namespace wpsing {

namespace {

inline int inv_col(int x) { return x ^ 1; }

// HLT enumerator over a 1-based table; 0 marks an undefined entry.
class Enumerator {
 public:
  Enumerator(const GroupPresentation& p, std::size_t budget)
      : ncols_(2 * p.ngens()), budget_(budget) {
    for (const Word& r : p.relators()) relators_.push_back(r.letters());
    tab_.push_back({});  // slot 0 unused
    parent_.push_back(0);
    new_coset();  // coset 1
  }

  EnumerationResult run(const std::vector<Word>& subgroup_gens) {
    EnumerationResult out;
    for (const Word& w : subgroup_gens) {
      if (!scan_and_fill(1, w.letters())) return budget_result();
    }
    for (std::size_t a = 1; a < tab_.size(); ++a) {
      if (!alive(a)) continue;
      for (const auto& r : relators_) {
        if (!scan_and_fill(a, r)) return budget_result();
        if (!alive(a)) break;
      }
      if (!alive(a)) continue;
      // columns untouched by any relator still need images
      for (int x = 0; x < ncols_; ++x) {
        if (tab_[a][static_cast<std::size_t>(x)] == 0) {
          if (!define(a, x)) return budget_result();
        }
        if (!alive(a)) break;
      }
    }
    out.finished = true;
    out.cosets_defined = defined_;
    out.table = compress();
    out.index = out.table->index();
    return out;
  }

 private:
  bool alive(std::size_t a) const { return parent_[a] == a; }

  std::size_t rep(std::size_t k) {
    while (parent_[k] != k) {
      parent_[k] = parent_[parent_[k]];
      k = parent_[k];
    }
    return k;
  }

  std::size_t new_coset() {
    tab_.push_back(std::vector<int>(static_cast<std::size_t>(ncols_), 0));
    parent_.push_back(tab_.size() - 1);
    ++defined_;
    return tab_.size() - 1;
  }

  bool over_budget() const { return defined_ > budget_; }

  EnumerationResult budget_result() const {
    EnumerationResult out;
    out.finished = false;
    out.cosets_defined = defined_;
    return out;
  }

  // Defines tab[a][x]; false when the budget is exhausted.
  bool define(std::size_t a, int x) {
    std::size_t n = new_coset();
    if (over_budget()) return false;
    tab_[a][static_cast<std::size_t>(x)] = static_cast<int>(n);
    tab_[n][static_cast<std::size_t>(inv_col(x))] = static_cast<int>(a);
    return true;
  }

  void merge(std::size_t a, std::size_t b) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent_[b] = a;
    dead_queue_.push_back(b);
  }

  void coincidence(std::size_t a, std::size_t b) {
    merge(a, b);
    while (!dead_queue_.empty()) {
      std::size_t e = dead_queue_.front();
      dead_queue_.pop_front();
      for (int x = 0; x < ncols_; ++x) {
        std::size_t f = static_cast<std::size_t>(tab_[e][static_cast<std::size_t>(x)]);
        if (f == 0) continue;
        tab_[f][static_cast<std::size_t>(inv_col(x))] = 0;
        std::size_t e1 = rep(e), f1 = rep(f);
        int& mu_x = tab_[e1][static_cast<std::size_t>(x)];
        if (mu_x != 0) {
          merge(f1, static_cast<std::size_t>(mu_x));
        } else if (int nu = tab_[f1][static_cast<std::size_t>(inv_col(x))]; nu != 0) {
          merge(e1, static_cast<std::size_t>(nu));
        } else {
          mu_x = static_cast<int>(f1);
          tab_[f1][static_cast<std::size_t>(inv_col(x))] = static_cast<int>(e1);
        }
      }
    }
  }

  int entry(std::size_t coset, int col) const { return tab_[coset][static_cast<std::size_t>(col)]; }
  void set_entry(std::size_t coset, int col, std::size_t v) {
    tab_[coset][static_cast<std::size_t>(col)] = static_cast<int>(v);
  }

  // Scans word w at coset a, defining cosets to fill gaps. Returns false on
  // budget exhaustion.
  bool scan_and_fill(std::size_t a, const std::vector<int>& w) {
    if (w.empty()) return true;
    a = rep(a);
    std::size_t f = a, b = a;
    std::ptrdiff_t i = 0, j = static_cast<std::ptrdiff_t>(w.size()) - 1;
    for (;;) {
      while (i <= j && entry(f, w[static_cast<std::size_t>(i)]) != 0) {
        f = static_cast<std::size_t>(entry(f, w[static_cast<std::size_t>(i)]));
        ++i;
      }
      if (i > j) {
        if (f != b) coincidence(f, b);
        return true;
      }
      while (j >= i && entry(b, inv_col(w[static_cast<std::size_t>(j)])) != 0) {
        b = static_cast<std::size_t>(entry(b, inv_col(w[static_cast<std::size_t>(j)])));
        --j;
      }
      if (j < i) {
        coincidence(f, b);
        return true;
      }
      if (j == i) {
        set_entry(f, w[static_cast<std::size_t>(i)], b);
        set_entry(b, inv_col(w[static_cast<std::size_t>(i)]), f);
        return true;
      }
      if (!define(f, w[static_cast<std::size_t>(i)])) return false;
    }
  }

  CosetTable compress() {
    std::vector<int> number(tab_.size(), -1);
    int next = 0;
    for (std::size_t a = 1; a < tab_.size(); ++a)
      if (alive(a)) number[a] = next++;
    CosetTable t;
    t.ngens = ncols_ / 2;
    t.rows.reserve(static_cast<std::size_t>(next));
    for (std::size_t a = 1; a < tab_.size(); ++a) {
      if (!alive(a)) continue;
      std::vector<int> row(static_cast<std::size_t>(ncols_));
      for (int x = 0; x < ncols_; ++x) {
        std::size_t img = static_cast<std::size_t>(tab_[a][static_cast<std::size_t>(x)]);
        row[static_cast<std::size_t>(x)] = number[rep(img)];
      }
      t.rows.push_back(std::move(row));
    }
    return t;
  }

  int ncols_;
  std::size_t budget_;
  std::vector<std::vector<int>> relators_;
  std::vector<std::vector<int>> tab_;
  std::vector<std::size_t> parent_;
  std::deque<std::size_t> dead_queue_;
  std::size_t defined_ = 0;
};

}  // namespace

EnumerationResult todd_coxeter(const GroupPresentation& p, const std::vector<Word>& subgroup_gens,
                               std::size_t max_cosets) {
  if (max_cosets < 1) throw argument_error("todd_coxeter: budget must be at least 1");
  for (const Word& w : subgroup_gens)
    for (const GenPower& f : w.factors())
      if (f.gen < 0 || f.gen >= p.ngens())
        throw argument_error("todd_coxeter: subgroup word uses unknown generator");
  return Enumerator(p, max_cosets).run(subgroup_gens);
}

GroupPresentation reidemeister_schreier(const GroupPresentation& p, const CosetTable& table,
                                        TransversalStyle style) {
  const std::size_t n = table.index();
  const int ncols = 2 * table.ngens;
  if (n == 0 || table.ngens != p.ngens())
    throw state_error("reidemeister_schreier: table does not match presentation");
  for (const auto& row : table.rows)
    for (int v : row)
      if (v < 0 || static_cast<std::size_t>(v) >= n)
        throw state_error("reidemeister_schreier: coset table is not closed");

  // Spanning tree by breadth-first search from the subgroup coset.
  std::vector<bool> seen(n, false);
  std::vector<std::pair<std::size_t, int>> tree_edge;  // discovered via (coset, column)
  std::vector<bool> is_tree(n * static_cast<std::size_t>(table.ngens), false);
  std::queue<std::size_t> bfs;
  seen[0] = true;
  bfs.push(0);
  while (!bfs.empty()) {
    std::size_t c = bfs.front();
    bfs.pop();
    for (int k = 0; k < ncols; ++k) {
      int x = style == TransversalStyle::forward ? k : ncols - 1 - k;
      std::size_t t = static_cast<std::size_t>(table.act(c, x));
      if (seen[t]) continue;
      seen[t] = true;
      // record the tree edge by its positive-generator orientation
      if (x % 2 == 0)
        is_tree[c * static_cast<std::size_t>(table.ngens) + static_cast<std::size_t>(x / 2)] = true;
      else
        is_tree[t * static_cast<std::size_t>(table.ngens) + static_cast<std::size_t>(x / 2)] = true;
      bfs.push(t);
    }
  }
  for (bool s : seen)
    if (!s) throw state_error("reidemeister_schreier: coset table is not transitive");

  // Schreier generators: one per non-tree positive edge.
  std::vector<int> edge_gen(n * static_cast<std::size_t>(table.ngens), -1);
  std::vector<std::string> names;
  for (std::size_t c = 0; c < n; ++c)
    for (int g = 0; g < table.ngens; ++g) {
      std::size_t id = c * static_cast<std::size_t>(table.ngens) + static_cast<std::size_t>(g);
      if (is_tree[id]) continue;
      edge_gen[id] = static_cast<int>(names.size());
      names.push_back("x" + std::to_string(names.size()));
    }

  // Rewrite each relator traced from each coset.
  std::vector<Word> relators;
  for (std::size_t c = 0; c < n; ++c) {
    for (const Word& r : p.relators()) {
      std::vector<GenPower> factors;
      std::size_t cur = c;
      for (int x : r.letters()) {
        if (x % 2 == 0) {
          std::size_t id =
              cur * static_cast<std::size_t>(table.ngens) + static_cast<std::size_t>(x / 2);
          if (edge_gen[id] >= 0) factors.push_back({edge_gen[id], 1});
          cur = static_cast<std::size_t>(table.act(cur, x));
        } else {
          std::size_t t = static_cast<std::size_t>(table.act(cur, x));
          std::size_t id =
              t * static_cast<std::size_t>(table.ngens) + static_cast<std::size_t>(x / 2);
          if (edge_gen[id] >= 0) factors.push_back({edge_gen[id], -1});
          cur = t;
        }
      }
      Word w = Word::from_factors(std::move(factors));
      if (!w.empty()) relators.push_back(std::move(w));
    }
  }
  if (names.empty()) names.push_back("x0");  // trivial subgroup of a trivial table
  return GroupPresentation(std::move(names), std::move(relators));
}

}  // namespace wpsing
