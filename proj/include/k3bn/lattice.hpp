// include/k3bn/lattice.hpp - the Neron-Severi lattice Num S and the extended K-group.
//
// Classes are integer coordinate vectors in a positional basis; the lattice is
// given by its Gram matrix. Only even lattices are accepted, so every class has
// an even square and the genus (a^2 + 2) / 2 is an integer.

#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

namespace k3bn {

/// A divisor class, as coordinates in the lattice basis.
struct NumClass {
  std::vector<std::int64_t> coords;

  friend bool operator==(const NumClass&, const NumClass&) = default;
};

class IntersectionLattice {
 public:
  /// Throws DimensionError for a non-square or empty matrix and ArgumentError
  /// for an asymmetric matrix or an odd diagonal entry.
  explicit IntersectionLattice(std::vector<std::vector<std::int64_t>> gram);

  std::size_t rank() const noexcept { return gram_.size(); }
  std::int64_t entry(std::size_t i, std::size_t j) const { return gram_.at(i).at(j); }
  const std::vector<std::vector<std::int64_t>>& gram() const noexcept { return gram_; }

  /// x^T * gram * y.
  std::int64_t pair(const NumClass& x, const NumClass& y) const;
  std::int64_t square(const NumClass& x) const { return pair(x, x); }

  friend bool operator==(const IntersectionLattice&, const IntersectionLattice&) = default;

 private:
  void check_class(const NumClass& x, const char* fn, const char* arg) const;

  std::vector<std::vector<std::int64_t>> gram_;
};

/// An element (r, v1, v2) of K'(S) = Z + Num S + Z.
struct ChernCharacter {
  std::int64_t rank = 0;
  NumClass v1;
  std::int64_t v2 = 0;
};

struct EpsilonImage {
  std::int64_t r = 0;
  std::int64_t g = 0;
  std::int64_t d = 0;

  friend bool operator==(const EpsilonImage&, const EpsilonImage&) = default;
};

std::int64_t pair(const IntersectionLattice& lat, const NumClass& x, const NumClass& y);

/// (a^2 + 2) / 2. Non-positive for classes with a^2 < -2.
std::int64_t genus_of_class(const IntersectionLattice& lat, const NumClass& a);

/// epsilon(r, v1, v2) = (r, g, d) with g = (v1^2 + 2) / 2 and d = (v1^2 - 2 v2) / 2.
EpsilonImage epsilon(const IntersectionLattice& lat, const ChernCharacter& v);

/// Accepts either {"gram": [[...], ...]} or a bare [[...], ...] array.
IntersectionLattice parse_lattice_json(std::string_view text);

/// Accepts a JSON integer array, e.g. "[2, 1]".
NumClass parse_class_json(std::string_view text);

}  // namespace k3bn
