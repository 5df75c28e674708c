#pragma once

// Freely reduced words over the generators of a free group of finite
// rank. Letters are signed 1-based generator indices: +k for the k-th
// generator, -k for its inverse. The empty word is the identity.

#include "groupeq/int_matrix.hpp"

#include <compare>
#include <string>
#include <vector>

namespace groupeq {

class FreeWord {
 public:
  FreeWord() = default;
  /// Reduces on construction.
  explicit FreeWord(std::vector<int> letters);
  static FreeWord generator(int index) { return FreeWord({index}); }

  bool empty() const { return letters_.empty(); }
  size_t length() const { return letters_.size(); }
  const std::vector<int>& letters() const { return letters_; }

  FreeWord inverse() const;
  int max_generator() const;

  friend FreeWord operator*(const FreeWord& u, const FreeWord& v);
  auto operator<=>(const FreeWord&) const = default;

 private:
  std::vector<int> letters_;
};

/// Exponent-sum vector in Z^rank.
IntVec abelianize(const FreeWord& w, int rank);

/// "a b^-1 a" given generator names; the empty word prints as "".
std::string word_to_string(const FreeWord& w, const std::vector<std::string>& gen_names);
FreeWord word_from_string(const std::string& text, const std::vector<std::string>& gen_names);

/// Substitution homomorphism determined by generator images.
FreeWord substitute(const FreeWord& w, const std::vector<FreeWord>& images);

/// Image of a word in a finite group under generator targets.
int finite_image(const FreeWord& w, const class FiniteGroup& g, const std::vector<int>& targets);

}  // namespace groupeq
