// include/k3bn/quadratic_surd.hpp - exact values of the form (p + sqrt(D)) / q.

#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>

namespace k3bn {

/// A rational number num/den with den > 0, kept in lowest terms.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n) : num(n) {}  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t n, std::int64_t d);

  friend bool operator==(const Rational&, const Rational&) = default;
  std::string to_string() const;
};

std::strong_ordering operator<=>(const Rational& a, const Rational& b);

/// Largest s with s*s <= n, for n >= 0.
std::int64_t isqrt(std::int64_t n);

/// (p + sqrt(D)) / q with q > 0 and D >= 0.
///
/// Comparisons against rationals are decided by a sign argument and one
/// integer squaring in 128-bit arithmetic; no floating point is involved.
class QuadraticSurd {
 public:
  /// Throws ArgumentError when q <= 0 or D < 0.
  QuadraticSurd(std::int64_t p, std::int64_t radicand, std::int64_t q);

  std::int64_t p() const noexcept { return p_; }
  std::int64_t radicand() const noexcept { return radicand_; }
  std::int64_t q() const noexcept { return q_; }

  bool is_rational() const noexcept;
  std::optional<Rational> as_rational() const;

  std::strong_ordering compare(const Rational& m) const;

  std::int64_t floor() const;
  std::int64_t ceil() const;

  /// Extended-precision approximation, for drawing and cross-checks only.
  long double approx() const;

  /// "3", "5/2", or "(p+sqrt(D))/q".
  std::string to_string() const;

  friend bool operator==(const QuadraticSurd& a, const QuadraticSurd& b) = default;

 private:
  std::int64_t p_;
  std::int64_t radicand_;
  std::int64_t q_;
};

inline std::strong_ordering operator<=>(const QuadraticSurd& s, const Rational& m) {
  return s.compare(m);
}
inline bool operator==(const QuadraticSurd& s, const Rational& m) {
  return s.compare(m) == std::strong_ordering::equal;
}

}  // namespace k3bn
