#pragma once

// Permutations on {0..n-1}. Composition is left-of-right throughout the
// project: (p * q)(i) = p(q(i)).

#include <compare>
#include <string>
#include <vector>

namespace groupeq {

class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<int> images);
  static Perm identity(int degree);
  /// From 1-based image list, e.g. [2,1,3].
  static Perm from_one_based(const std::vector<int>& images);
  /// From disjoint cycles over 1-based points, e.g. "(1 2)(3 4)"; ""
  /// or "e" denotes the identity of the given degree.
  static Perm from_cycles(const std::string& text, int degree);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[i]; }
  const std::vector<int>& images() const { return images_; }
  std::vector<int> one_based_images() const;

  Perm inverse() const;
  bool is_identity() const;

  /// Cycle notation over 1-based points; identity prints as "e".
  std::string cycle_string() const;

  friend Perm operator*(const Perm& p, const Perm& q);
  auto operator<=>(const Perm&) const = default;

 private:
  std::vector<int> images_;
};

}  // namespace groupeq
