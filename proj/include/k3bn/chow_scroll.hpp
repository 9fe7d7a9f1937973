// include/k3bn/chow_scroll.hpp - intersection numbers on the 3-fold scroll F(0,1,2).
//
// The Chow ring is generated by the hyperplane class M and the fiber class L
// with relations L^2 = 0 and M^3 = 3 M^2 L, and deg(M^2 L) = 1. Normal forms use
// the basis 1, M, L, M^2, ML, M^2L.

#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace k3bn::scroll {

/// coeff * M^m * L^l, unreduced.
struct Term {
  std::int64_t coeff = 0;
  int m = 0;
  int l = 0;
};

class ScrollClass {
 public:
  ScrollClass() = default;

  static ScrollClass M();
  static ScrollClass L();
  static ScrollClass constant(std::int64_t c);

  /// Reduce a sum of monomials (each of degree <= 3) to normal form.
  /// Throws DegreeError for a monomial of degree above 3.
  static ScrollClass from_terms(std::vector<Term> terms);

  /// Coefficient of M^m L^l in the normal form (zero for non-basis monomials).
  std::int64_t coeff(int m, int l) const;

  bool is_zero() const;
  /// Highest degree carrying a nonzero coefficient; 0 for the zero class.
  int degree() const;
  bool is_homogeneous() const;

  /// deg of the degree-3 part: the coefficient of M^2 L.
  std::int64_t top_degree() const { return coeff(2, 1); }

  /// E.g. "3M-L", "M^2-3ML", "-1", "0".
  std::string to_string() const;

  friend ScrollClass operator+(const ScrollClass& a, const ScrollClass& b);
  friend ScrollClass operator-(const ScrollClass& a, const ScrollClass& b);
  friend ScrollClass operator-(const ScrollClass& a);
  friend ScrollClass operator*(std::int64_t c, const ScrollClass& a);
  /// Throws DegreeError when deg a + deg b > 3.
  friend ScrollClass operator*(const ScrollClass& a, const ScrollClass& b);

  friend bool operator==(const ScrollClass&, const ScrollClass&) = default;

  friend ScrollClass reduce(std::vector<Term> terms,
                            const std::function<std::size_t(std::size_t)>& choose);

 private:
  // Indexed by (m, l) over m + l <= 3; only basis entries are ever nonzero.
  std::array<std::array<std::int64_t, 4>, 4> c_{};
};

ScrollClass multiply(const ScrollClass& a, const ScrollClass& b);

/// Rewrite terms with L^2 -> 0 and M^3 -> 3 M^2 L until none applies. `choose`
/// picks which of n reducible terms to rewrite next (returns an index < n);
/// the normal form does not depend on it.
ScrollClass reduce(std::vector<Term> terms,
                   const std::function<std::size_t(std::size_t)>& choose);

/// Product of three degree-1 classes, evaluated by deg(M^2 L) = 1.
/// Throws DegreeError if any factor is not homogeneous of degree 1.
std::int64_t intersection_number(const ScrollClass& a, const ScrollClass& b,
                                 const ScrollClass& c);

/// -K_F = 3M - L.
ScrollClass anticanonical_class();
/// K_F = L - 3M.
ScrollClass canonical_class();

/// The surface D = {x0 = 0}, of class M.
ScrollClass class_D();
/// The curve R = {x1 = x2 = 0}, as the product (M - L)(M - 2L).
ScrollClass class_R();
/// A K3 surface S in |-K_F|.
ScrollClass class_S();

/// Parse sums like "3M-L", "M-2L", "2M^2L", "ML", "-1". Symbols M and L only,
/// optional '^' exponents and '*' between coefficient and monomial.
/// Throws ParseError on malformed input.
ScrollClass parse_class(std::string_view text);

}  // namespace k3bn::scroll
