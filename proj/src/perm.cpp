#include "qsrg/perm.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qsrg {

Perm::Perm(int degree) : img_(degree) {
  if (degree < 0) throw std::invalid_argument("NotAPermutation: negative degree");
  std::iota(img_.begin(), img_.end(), 0);
}

Perm Perm::from_images(std::vector<int> images) {
  const int n = static_cast<int>(images.size());
  std::vector<char> seen(n, 0);
  for (int v : images) {
    if (v < 0 || v >= n)
      throw std::invalid_argument("NotAPermutation: image " + std::to_string(v) +
                                  " out of range for degree " + std::to_string(n));
    if (seen[v])
      throw std::invalid_argument("NotAPermutation: image " + std::to_string(v) +
                                  " repeated");
    seen[v] = 1;
  }
  Perm p;
  p.img_ = std::move(images);
  return p;
}

bool Perm::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (img_[i] != i) return false;
  return true;
}

Perm Perm::inverse() const {
  std::vector<int> inv(img_.size());
  for (int i = 0; i < degree(); ++i) inv[img_[i]] = i;
  Perm p;
  p.img_ = std::move(inv);
  return p;
}

std::uint64_t Perm::order() const {
  // lcm of cycle lengths
  std::uint64_t result = 1;
  std::vector<char> seen(img_.size(), 0);
  for (int i = 0; i < degree(); ++i) {
    if (seen[i]) continue;
    std::uint64_t len = 0;
    for (int j = i; !seen[j]; j = img_[j]) {
      seen[j] = 1;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

std::string Perm::to_cycle_string() const {
  std::string out;
  std::vector<char> seen(img_.size(), 0);
  for (int i = 0; i < degree(); ++i) {
    if (seen[i] || img_[i] == i) continue;
    out += '(';
    bool first = true;
    for (int j = i; !seen[j]; j = img_[j]) {
      seen[j] = 1;
      if (!first) out += ' ';
      out += std::to_string(j);
      first = false;
    }
    out += ')';
  }
  return out.empty() ? "id" : out;
}

Perm compose(const Perm& a, const Perm& b) {
  if (a.degree() != b.degree())
    throw std::invalid_argument("DegreeMismatch: compose needs equal degrees, got " +
                                std::to_string(a.degree()) + " and " +
                                std::to_string(b.degree()));
  std::vector<int> r(a.degree());
  for (int i = 0; i < a.degree(); ++i) r[i] = a(b(i));
  return Perm::from_images(std::move(r));
}

std::vector<int> orbit_of(const std::vector<Perm>& perms, int seed) {
  if (seed < 0) throw std::out_of_range("IndexOutOfRange: negative orbit seed");
  for (const Perm& p : perms) {
    if (p.degree() != perms.front().degree())
      throw std::invalid_argument("DegreeMismatch: orbit generators have mixed degrees");
    if (seed >= p.degree())
      throw std::out_of_range("IndexOutOfRange: seed " + std::to_string(seed) +
                              " outside degree " + std::to_string(p.degree()));
  }
  std::vector<int> result{seed};
  std::vector<char> in_orbit;
  if (!perms.empty()) in_orbit.assign(perms.front().degree(), 0);
  else
    return result;
  in_orbit[seed] = 1;
  for (std::size_t head = 0; head < result.size(); ++head) {
    for (const Perm& p : perms) {
      const int y = p(result[head]);
      if (!in_orbit[y]) {
        in_orbit[y] = 1;
        result.push_back(y);
      }
    }
  }
  std::sort(result.begin(), result.end());
  return result;
}

}  // namespace qsrg
