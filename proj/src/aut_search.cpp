#include "qsrg/aut_search.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>

#include "qsrg/errors.hpp"

namespace qsrg {

namespace {

using Partition = std::vector<std::vector<int>>;

class Searcher {
 public:
  explicit Searcher(const Graph& g)
      : g_(g), n_(g.vertex_count()), words_(g.words_per_row()) {}

  PermGroup run() {
    PermGroup result;
    result.degree = n_;
    if (n_ == 0) return result;
    Partition root(1);
    root[0].resize(n_);
    std::iota(root[0].begin(), root[0].end(), 0);
    root = refine(std::move(root));
    build_spine(root);
    process_spine(root, 0);
    result.generators = std::move(gens_);
    return result;
  }

 private:
  bool discrete(const Partition& cells) const {
    return static_cast<int>(cells.size()) == n_;
  }

  // Split cells by the vector of neighbour counts into every cell, until
  // stable.  Subcells are ordered by signature, and cells keep their members
  // in ascending order, so two runs over isomorphic configurations evolve
  // position-for-position alike.
  Partition refine(Partition cells) const {
    for (;;) {
      std::vector<std::uint64_t> masks(cells.size() * words_, 0);
      for (std::size_t c = 0; c < cells.size(); ++c)
        for (int v : cells[c])
          masks[c * words_ + v / 64] |= std::uint64_t{1} << (v % 64);

      bool changed = false;
      Partition next;
      next.reserve(cells.size());
      for (std::size_t c = 0; c < cells.size(); ++c) {
        if (cells[c].size() == 1) {
          next.push_back(std::move(cells[c]));
          continue;
        }
        std::map<std::vector<int>, std::vector<int>> split;
        for (int v : cells[c]) {
          std::vector<int> sig(cells.size());
          const std::uint64_t* rv = g_.row(v);
          for (std::size_t d = 0; d < cells.size(); ++d) {
            int cnt = 0;
            for (int w = 0; w < words_; ++w)
              cnt += std::popcount(rv[w] & masks[d * words_ + w]);
            sig[d] = cnt;
          }
          split[sig].push_back(v);
        }
        if (split.size() > 1) changed = true;
        for (auto& [sig, members] : split) next.push_back(std::move(members));
      }
      cells = std::move(next);
      if (!changed) return cells;
    }
  }

  Partition individualize(const Partition& cells, int pos, int v) const {
    Partition next;
    next.reserve(cells.size() + 1);
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (static_cast<int>(c) == pos) {
        next.push_back({v});
        std::vector<int> rest;
        rest.reserve(cells[c].size() - 1);
        for (int u : cells[c])
          if (u != v) rest.push_back(u);
        next.push_back(std::move(rest));
      } else {
        next.push_back(cells[c]);
      }
    }
    return next;
  }

  static std::vector<int> shape(const Partition& cells) {
    std::vector<int> s(cells.size());
    for (std::size_t i = 0; i < cells.size(); ++i) s[i] = static_cast<int>(cells[i].size());
    return s;
  }

  int pick_target(const Partition& cells) const {
    int best = -1;
    for (std::size_t c = 0; c < cells.size(); ++c)
      if (cells[c].size() > 1 &&
          (best < 0 || cells[c].size() < cells[best].size()))
        best = static_cast<int>(c);
    return best;
  }

  void build_spine(Partition cells) {
    for (;;) {
      shapes_.push_back(shape(cells));
      if (discrete(cells)) {
        leaf0_.reserve(n_);
        for (const auto& c : cells) leaf0_.push_back(c[0]);
        return;
      }
      const int pos = pick_target(cells);
      target_pos_.push_back(pos);
      base_.push_back(cells[pos][0]);
      cells = refine(individualize(cells, pos, cells[pos][0]));
    }
  }

  void process_spine(const Partition& cells, int level) {
    if (discrete(cells)) return;
    const int pos = target_pos_[level];
    const int b = base_[level];
    process_spine(refine(individualize(cells, pos, b)), level + 1);

    std::vector<char> done(n_, 0);
    done[b] = 1;
    for (int v : cells[pos]) {
      if (v == b) continue;
      std::vector<Perm> fixing;
      for (const Perm& p : gens_) {
        bool fixes_prefix = true;
        for (int i = 0; i < level && fixes_prefix; ++i) fixes_prefix = p(base_[i]) == base_[i];
        if (fixes_prefix) fixing.push_back(p);
      }
      bool pruned = false;
      for (int u : orbit_of(fixing, v))
        if (done[u]) {
          pruned = true;  // a coset representative reaching v is already derivable
          break;
        }
      if (!pruned) {
        Partition child = refine(individualize(cells, pos, v));
        if (shape(child) == shapes_[level + 1]) find_one(child, level + 1, level, v);
      }
      done[v] = 1;
    }
  }

  bool find_one(const Partition& cells, int level, int branch_level, int branch_vertex) {
    if (discrete(cells)) {
      std::vector<int> img(n_);
      for (int i = 0; i < n_; ++i) img[leaf0_[i]] = cells[i][0];
      Perm h = Perm::from_images(std::move(img));
      for (int i = 0; i < branch_level; ++i)
        if (h(base_[i]) != base_[i]) return false;
      if (h(base_[branch_level]) != branch_vertex) return false;
      if (!is_automorphism(g_, h)) return false;
      gens_.push_back(std::move(h));
      return true;
    }
    const int pos = target_pos_[level];
    for (int v : cells[pos]) {
      Partition child = refine(individualize(cells, pos, v));
      if (shape(child) == shapes_[level + 1] &&
          find_one(child, level + 1, branch_level, branch_vertex))
        return true;
    }
    return false;
  }

  const Graph& g_;
  int n_;
  int words_;
  std::vector<int> base_;
  std::vector<int> target_pos_;
  std::vector<std::vector<int>> shapes_;
  std::vector<int> leaf0_;
  std::vector<Perm> gens_;
};

}  // namespace

PermGroup automorphism_search(const Graph& g, int size_bound) {
  if (g.vertex_count() > size_bound)
    throw bound_error("SizeBoundExceeded: " + std::to_string(g.vertex_count()) +
                      " vertices above search bound " + std::to_string(size_bound));
  return Searcher(g).run();
}

}  // namespace qsrg
