#include "qsrg/group.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "qsrg/errors.hpp"

namespace qsrg {

namespace {

std::string cell(int i, int j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

}  // namespace

FiniteGroup FiniteGroup::validate_table(const std::vector<std::vector<int>>& table,
                                        std::string label) {
  const int n = static_cast<int>(table.size());
  if (n == 0) throw std::invalid_argument("NotLatinSquare: empty table");
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(table[i].size()) != n)
      throw std::invalid_argument("NotLatinSquare: row " + std::to_string(i) +
                                  " has " + std::to_string(table[i].size()) +
                                  " entries, expected " + std::to_string(n));
    for (int j = 0; j < n; ++j)
      if (table[i][j] < 0 || table[i][j] >= n)
        throw std::invalid_argument("NotLatinSquare: entry " + cell(i, j) +
                                    " out of range");
  }
  for (int i = 0; i < n; ++i) {
    std::vector<int> row_seen(n, -1), col_seen(n, -1);
    for (int j = 0; j < n; ++j) {
      if (row_seen[table[i][j]] >= 0)
        throw std::invalid_argument("NotLatinSquare: row " + std::to_string(i) +
                                    " repeats value " + std::to_string(table[i][j]) +
                                    " at columns " + std::to_string(row_seen[table[i][j]]) +
                                    " and " + std::to_string(j));
      row_seen[table[i][j]] = j;
      if (col_seen[table[j][i]] >= 0)
        throw std::invalid_argument("NotLatinSquare: column " + std::to_string(i) +
                                    " repeats value " + std::to_string(table[j][i]) +
                                    " at rows " + std::to_string(col_seen[table[j][i]]) +
                                    " and " + std::to_string(j));
      col_seen[table[j][i]] = j;
    }
  }

  int e = -1;
  for (int i = 0; i < n && e < 0; ++i) {
    bool ok = true;
    for (int j = 0; j < n && ok; ++j) ok = table[i][j] == j && table[j][i] == j;
    if (ok) e = i;
  }
  if (e < 0) throw std::invalid_argument("NoIdentity: no two-sided identity row/column");

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (table[table[i][j]][k] != table[i][table[j][k]])
          throw std::invalid_argument("NotAssociative: (" + std::to_string(i) + "*" +
                                      std::to_string(j) + ")*" + std::to_string(k) +
                                      " != " + std::to_string(i) + "*(" +
                                      std::to_string(j) + "*" + std::to_string(k) + ")");

  std::vector<int> inv(n, -1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j)
      if (table[i][j] == e) {
        if (table[j][i] != e)
          throw std::invalid_argument("NoInverse: " + std::to_string(j) +
                                      " inverts " + std::to_string(i) +
                                      " on one side only");
        inv[i] = j;
        break;
      }
    if (inv[i] < 0)
      throw std::invalid_argument("NoInverse: element " + std::to_string(i) +
                                  " has no inverse");
  }

  FiniteGroup g;
  g.n_ = n;
  g.e_ = e;
  g.table_.resize(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g.table_[i * n + j] = table[i][j];
  g.inv_ = std::move(inv);
  g.label_ = std::move(label);
  return g;
}

int FiniteGroup::element_order(int a) const {
  if (a < 0 || a >= n_)
    throw std::out_of_range("IndexOutOfRange: element " + std::to_string(a));
  int x = a, k = 1;
  while (x != e_) {
    x = mul(x, a);
    ++k;
  }
  return k;
}

bool FiniteGroup::is_abelian() const {
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if (mul(i, j) != mul(j, i)) return false;
  return true;
}

std::vector<std::vector<int>> FiniteGroup::table() const {
  std::vector<std::vector<int>> t(n_, std::vector<int>(n_));
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) t[i][j] = table_[i * n_ + j];
  return t;
}

Subgroup::Subgroup(const FiniteGroup& parent, std::vector<int> members)
    : members_(std::move(members)), parent_order_(parent.order()) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  mask_.assign(parent.order(), 0);
  for (int m : members_) {
    if (m < 0 || m >= parent.order())
      throw std::out_of_range("IndexOutOfRange: subgroup member " + std::to_string(m));
    mask_[m] = 1;
  }
  if (members_.empty() || !mask_[parent.identity()])
    throw std::invalid_argument("NotASubgroup: identity missing");
  for (int a : members_) {
    if (!mask_[parent.inv(a)])
      throw std::invalid_argument("NotASubgroup: inverse of " + std::to_string(a) +
                                  " missing");
    for (int b : members_)
      if (!mask_[parent.mul(a, b)])
        throw std::invalid_argument("NotASubgroup: product " + std::to_string(a) + "*" +
                                    std::to_string(b) + " missing");
  }
  if (parent.order() % order() != 0)
    throw std::logic_error("LagrangeViolation: |H| does not divide |G|");
}

std::string Subgroup::describe() const {
  std::string out = "{";
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(members_[i]);
  }
  return out + "}";
}

GroupAut::GroupAut(const FiniteGroup& group, Perm m) : mapping(std::move(m)) {
  const int n = group.order();
  if (mapping.degree() != n)
    throw std::invalid_argument("DegreeMismatch: automorphism degree " +
                                std::to_string(mapping.degree()) + " vs group order " +
                                std::to_string(n));
  if (mapping(group.identity()) != group.identity())
    throw std::invalid_argument("NotAHomomorphism: identity not fixed");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (mapping(group.mul(a, b)) != group.mul(mapping(a), mapping(b)))
        throw std::invalid_argument("NotAHomomorphism: breaks at " + cell(a, b));
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const int na = a.order(), nb = b.order();
  const int n = na * nb;
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int x1 = 0; x1 < na; ++x1)
    for (int y1 = 0; y1 < nb; ++y1)
      for (int x2 = 0; x2 < na; ++x2)
        for (int y2 = 0; y2 < nb; ++y2)
          t[x1 * nb + y1][x2 * nb + y2] = a.mul(x1, x2) * nb + b.mul(y1, y2);
  std::string label = a.label().empty() || b.label().empty()
                          ? std::string()
                          : a.label() + "x" + b.label();
  return FiniteGroup::validate_table(t, std::move(label));
}

Subgroup trivial_subgroup(const FiniteGroup& g) {
  return Subgroup(g, {g.identity()});
}

Subgroup full_subgroup(const FiniteGroup& g) {
  std::vector<int> all(g.order());
  for (int i = 0; i < g.order(); ++i) all[i] = i;
  return Subgroup(g, std::move(all));
}

Subgroup subgroup_generate(const FiniteGroup& g, const std::vector<int>& generators) {
  std::vector<char> in(g.order(), 0);
  std::vector<int> members{g.identity()};
  in[g.identity()] = 1;
  for (int x : generators) {
    if (x < 0 || x >= g.order())
      throw std::out_of_range("IndexOutOfRange: generator " + std::to_string(x));
    if (!in[x]) {
      in[x] = 1;
      members.push_back(x);
    }
  }
  // Closure under multiplication; inverses follow since the group is finite.
  for (std::size_t head = 0; head < members.size(); ++head)
    for (std::size_t j = 0; j < members.size(); ++j) {
      const int p = g.mul(members[head], members[j]);
      if (!in[p]) {
        in[p] = 1;
        members.push_back(p);
      }
      const int q = g.mul(members[j], members[head]);
      if (!in[q]) {
        in[q] = 1;
        members.push_back(q);
      }
    }
  return Subgroup(g, std::move(members));
}

std::vector<Subgroup> all_subgroups(const FiniteGroup& g, int order_bound) {
  if (g.order() > order_bound)
    throw bound_error("OrderBoundExceeded: |G| = " + std::to_string(g.order()) +
                      " above subgroup-enumeration bound " + std::to_string(order_bound));
  std::set<std::vector<int>> found;
  for (int x = 0; x < g.order(); ++x)
    found.insert(subgroup_generate(g, {x}).members());
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::vector<int>> snapshot(found.begin(), found.end());
    for (std::size_t i = 0; i < snapshot.size(); ++i)
      for (std::size_t j = i + 1; j < snapshot.size(); ++j) {
        std::vector<int> gens = snapshot[i];
        gens.insert(gens.end(), snapshot[j].begin(), snapshot[j].end());
        auto join = subgroup_generate(g, gens).members();
        if (found.insert(join).second) grew = true;
      }
  }
  std::vector<Subgroup> result;
  result.reserve(found.size());
  for (const auto& members : found) result.emplace_back(g, members);
  std::sort(result.begin(), result.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.members() < b.members();
  });
  return result;
}

namespace {

void check_pairing(const FiniteGroup& g, const Subgroup& h, const char* op) {
  if (h.parent_order() != g.order())
    throw std::invalid_argument(std::string("GroupMismatch: ") + op +
                                " called with a subgroup of a different group");
}

}  // namespace

std::vector<std::vector<int>> cosets(const FiniteGroup& g, const Subgroup& h,
                                     CosetSide side) {
  check_pairing(g, h, "cosets");
  std::vector<char> visited(g.order(), 0);
  std::vector<std::vector<int>> blocks;
  for (int x = 0; x < g.order(); ++x) {
    if (visited[x]) continue;
    std::vector<int> block;
    block.reserve(h.order());
    for (int m : h.members())
      block.push_back(side == CosetSide::right ? g.mul(m, x) : g.mul(x, m));
    std::sort(block.begin(), block.end());
    for (int y : block) visited[y] = 1;
    blocks.push_back(std::move(block));
  }
  return blocks;
}

bool is_normal(const FiniteGroup& g, const Subgroup& h) {
  check_pairing(g, h, "is_normal");
  for (int x = 0; x < g.order(); ++x)
    for (int m : h.members())
      if (!h.contains(g.mul(g.mul(x, m), g.inv(x)))) return false;
  return true;
}

std::optional<std::pair<int, int>> witness_coset_asymmetry(const FiniteGroup& g,
                                                           const Subgroup& h) {
  check_pairing(g, h, "witness_coset_asymmetry");
  for (int g1 = 0; g1 < g.order(); ++g1) {
    if (h.contains(g1)) continue;
    for (int g2 = 0; g2 < g.order(); ++g2) {
      if (g2 == g1 || h.contains(g2)) continue;
      const bool same_right = h.contains(g.mul(g1, g.inv(g2)));
      const bool same_left = h.contains(g.mul(g.inv(g2), g1));
      if (same_right && !same_left) return std::make_pair(g1, g2);
    }
  }
  return std::nullopt;
}

Subgroup commutator_subgroup(const FiniteGroup& g) {
  std::vector<int> gens;
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b)
      gens.push_back(g.mul(g.mul(g.inv(a), g.inv(b)), g.mul(a, b)));
  return subgroup_generate(g, gens);
}

FiniteGroup quotient(const FiniteGroup& g, const Subgroup& h) {
  check_pairing(g, h, "quotient");
  if (!is_normal(g, h))
    throw std::invalid_argument("NotNormal: quotient by a non-normal subgroup");
  auto blocks = cosets(g, h, CosetSide::right);
  // Put the block H first so the quotient identity is element 0.
  for (std::size_t i = 0; i < blocks.size(); ++i)
    if (blocks[i][0] == h.members()[0]) {
      std::rotate(blocks.begin(), blocks.begin() + i, blocks.begin() + i + 1);
      break;
    }
  const int q = static_cast<int>(blocks.size());
  std::vector<int> block_of(g.order());
  for (int i = 0; i < q; ++i)
    for (int x : blocks[i]) block_of[x] = i;
  std::vector<std::vector<int>> t(q, std::vector<int>(q));
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j)
      t[i][j] = block_of[g.mul(blocks[i][0], blocks[j][0])];
  std::string label;
  if (!g.label().empty()) label = g.label() + "/" + h.describe();
  return FiniteGroup::validate_table(t, std::move(label));
}

bool is_elementary_abelian(const FiniteGroup& g) {
  if (!g.is_abelian()) return false;
  if (g.order() == 1) return true;
  int p = 0;
  for (int x = 0; x < g.order(); ++x) {
    if (x == g.identity()) continue;
    const int k = g.element_order(x);
    if (p == 0) p = k;
    if (k != p) return false;
  }
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::vector<int> minimal_generating_set(const FiniteGroup& g) {
  std::vector<int> gens;
  Subgroup closure = trivial_subgroup(g);
  while (closure.order() < g.order()) {
    int next = -1;
    for (int x = 0; x < g.order(); ++x)
      if (!closure.contains(x)) {
        next = x;
        break;
      }
    gens.push_back(next);
    closure = subgroup_generate(g, gens);
  }
  return gens;
}

std::vector<GroupAut> automorphism_group(const FiniteGroup& g, int order_bound) {
  const int n = g.order();
  if (n > order_bound)
    throw bound_error("OrderBoundExceeded: |G| = " + std::to_string(n) +
                      " above automorphism bound " + std::to_string(order_bound));
  const std::vector<int> gens = minimal_generating_set(g);
  const int m = static_cast<int>(gens.size());

  // BFS over the whole group records how every element is reached from the
  // generating set, so a candidate image tuple extends to at most one map.
  std::vector<int> parent(n, -1), via(n, -1), bfs_order;
  bfs_order.push_back(g.identity());
  {
    std::vector<char> seen(n, 0);
    seen[g.identity()] = 1;
    for (std::size_t head = 0; head < bfs_order.size(); ++head)
      for (int i = 0; i < m; ++i) {
        const int y = g.mul(bfs_order[head], gens[i]);
        if (!seen[y]) {
          seen[y] = 1;
          parent[y] = bfs_order[head];
          via[y] = i;
          bfs_order.push_back(y);
        }
      }
  }

  std::vector<std::vector<int>> candidates(m);
  for (int i = 0; i < m; ++i) {
    const int target = g.element_order(gens[i]);
    for (int x = 0; x < n; ++x)
      if (g.element_order(x) == target) candidates[i].push_back(x);
  }

  std::vector<GroupAut> result;
  std::vector<int> pick(m, 0);
  while (true) {
    std::vector<int> f(n, -1);
    f[g.identity()] = g.identity();
    for (int idx : bfs_order)
      if (idx != g.identity()) f[idx] = g.mul(f[parent[idx]], candidates[via[idx]][pick[via[idx]]]);

    bool ok = true;
    std::vector<char> hit(n, 0);
    for (int x = 0; x < n && ok; ++x) {
      if (hit[f[x]]) ok = false;
      hit[f[x]] = 1;
    }
    for (int a = 0; a < n && ok; ++a)
      for (int b = 0; b < n && ok; ++b)
        if (f[g.mul(a, b)] != g.mul(f[a], f[b])) ok = false;
    if (ok) result.emplace_back(g, Perm::from_images(f));

    int pos = m - 1;
    while (pos >= 0 && pick[pos] + 1 == static_cast<int>(candidates[pos].size())) {
      pick[pos] = 0;
      --pos;
    }
    if (pos < 0) break;
    ++pick[pos];
  }

  std::sort(result.begin(), result.end(),
            [](const GroupAut& a, const GroupAut& b) { return a.mapping < b.mapping; });
  return result;
}

std::vector<GroupAut> aut_stabilizing_subgroup(const FiniteGroup& g, const Subgroup& h,
                                               int order_bound) {
  check_pairing(g, h, "aut_stabilizing_subgroup");
  std::vector<GroupAut> result;
  for (GroupAut& f : automorphism_group(g, order_bound)) {
    bool stable = true;
    for (int m : h.members())
      if (!h.contains(f.mapping(m))) {
        stable = false;
        break;
      }
    if (stable) result.push_back(std::move(f));
  }
  // Sanity: the stabilizer is a subgroup of Aut(G).  Skip the quadratic
  // check when the stabilizer is large.
  if (result.size() <= 512) {
    std::set<std::vector<int>> images;
    for (const GroupAut& f : result) images.insert(f.mapping.images());
    for (const GroupAut& f1 : result)
      for (const GroupAut& f2 : result)
        if (!images.count(compose(f1.mapping, f2.mapping).images()))
          throw std::logic_error("NotASubgroup: subgroup-stabilizing maps not closed");
  }
  return result;
}

}  // namespace qsrg
