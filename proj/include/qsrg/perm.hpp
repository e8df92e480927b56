#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace qsrg {

// Permutation of {0, ..., n-1} in image form: p(i) == images()[i].
class Perm {
 public:
  Perm() = default;
  explicit Perm(int degree);  // identity

  // Validates that `images` is a bijection on {0, ..., n-1}.
  static Perm from_images(std::vector<int> images);

  int degree() const { return static_cast<int>(img_.size()); }
  int operator()(int x) const { return img_[x]; }
  const std::vector<int>& images() const { return img_; }

  bool is_identity() const;
  Perm inverse() const;
  std::uint64_t order() const;

  std::string to_cycle_string() const;

  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm&, const Perm&) = default;

 private:
  std::vector<int> img_;
};

// (a * b)(x) == a(b(x)): b acts first.
Perm compose(const Perm& a, const Perm& b);

// Orbit of `seed` under the group generated by `perms`, sorted ascending.
// With no permutations the orbit is just {seed}.
std::vector<int> orbit_of(const std::vector<Perm>& perms, int seed);

}  // namespace qsrg
