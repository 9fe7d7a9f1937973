// include/k3bn/bn_core.hpp - scalar Brill-Noether numerics on a polarized K3 surface.
//
// Everything here is a pure function of the integers (k, r, g, d). The
// character v = (r, a, beta) enters only through epsilon(v) = (r, g, d) with
// beta = g - 1 - d.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "k3bn/quadratic_surd.hpp"

namespace k3bn {

struct NumericInvariants {
  std::int64_t r = 0;
  std::int64_t g = 0;
  std::int64_t d = 0;
  std::int64_t beta = 0;   // g - 1 - d
  std::int64_t alpha = 0;  // -beta
  std::int64_t chi = 0;    // 2r + beta, the Euler characteristic of v

  static NumericInvariants of(std::int64_t r, std::int64_t g, std::int64_t d);
};

/// rho(r, g, d) = g - (r + 1)(r + g - d).
std::int64_t rho(std::int64_t r, std::int64_t g, std::int64_t d);

/// Dimension of M(r, a, beta); nullopt when the moduli space is empty.
///   r >= 2: 2 rho(r - 1, g, d) when that is >= 0
///   r == 1: 2d when d >= 0 (Hilbert scheme of d points)
///   r == 0: 2g when g >= 0 (relative Picard variety over |a|^s)
/// Throws ArgumentError for r < 0.
std::optional<std::int64_t> moduli_dim(std::int64_t r, std::int64_t g, std::int64_t d);

/// Expected dimension dim M - k(k - chi) of BN_k; nullopt when M is empty.
/// Throws ArgumentError for k < 0 or r < 0.
std::optional<std::int64_t> vdim_bn(std::int64_t k, std::int64_t r, std::int64_t g,
                                    std::int64_t d);

struct BoundaryRoots {
  QuadraticSurd r0;  // positive root of g - r(r + beta) = 0
  QuadraticSurd k0;  // 2 r0 + beta
  QuadraticSurd k1;  // r0 + beta
  QuadraticSurd k2;  // positive root of 2g - k(k - beta) = 0
};

/// Throws ArgumentError for g < 0.
BoundaryRoots boundary_roots(std::int64_t g, std::int64_t beta);

enum class Region { D0, D1, D2, D3, TrivialBand, ModuliEmpty };

std::string_view to_string(Region region);
/// Throws ParseError for an unknown tag.
Region region_from_string(std::string_view tag);

/// Region of the integer point (k, r) for fixed (g, d).
///
/// Precedence: ModuliEmpty, TrivialBand (k < chi), D0 (k < r), D3 (vdim < 0),
/// D1 (r - k >= r0 - k0), D2. The D1 test is the integer condition
/// m <= 0 or g - m(m + beta) >= 0 with m = k - r - beta, which is equivalent
/// to m <= r0.
Region classify(std::int64_t k, std::int64_t r, std::int64_t g, std::int64_t d);

struct Hypotheses {
  bool pic_is_Za = false;   // Pic S = Z a
  bool aH_is_one = false;   // (a, H) = 1
  bool c1 = false;          // (V_d^{r-1})''(|a|^s) is nonempty
  bool c2 = false;          // |a|^s contains a Brill-Noether general curve
  bool c3 = false;          // Pic S = Z a

  /// C3 and pic_is_Za are the same statement; C3 implies C2 implies C1.
  Hypotheses closed() const;

  friend bool operator==(const Hypotheses&, const Hypotheses&) = default;
};

enum class Status { Empty, NonemptyExpectedDim, EmptyOrExpectedDim, NotCovered };

std::string_view to_string(Status status);

struct Prediction {
  Status status = Status::NotCovered;
  Region region = Region::ModuliEmpty;
  /// Known dimension of BN_k when the theorem pins it (or the expected one for D0).
  std::optional<std::int64_t> dimension;
  /// Advisory only: the D0 nonemptiness conjecture applies (Pic S = Z a).
  bool conjecture_nonempty = false;
};

/// Decision table of the main theorem. Hypotheses are closed first.
/// Throws HypothesisError if M(r, a, beta) is empty or if neither
/// Pic S = Z a nor (a, H) = 1 holds.
Prediction predict_status(std::int64_t k, std::int64_t r, std::int64_t g, std::int64_t d,
                          const Hypotheses& hyp);

/// BN_k(0, a, beta) = W^{k-1}_{2g-2-d}(|a|^s).
struct RelativeW {
  std::int64_t degree = 0;
  std::int64_t index = 0;
  friend bool operator==(const RelativeW&, const RelativeW&) = default;
};

/// BN_k(1, a, beta) = Hilb^d_{(L, k + alpha - 2)}(S).
struct SpecialHilb {
  std::int64_t d = 0;
  std::int64_t delta = 0;
  friend bool operator==(const SpecialHilb&, const SpecialHilb&) = default;
};

struct HigherRankBN {
  std::int64_t r = 0;
  std::int64_t k = 0;
  std::int64_t beta = 0;
  friend bool operator==(const HigherRankBN&, const HigherRankBN&) = default;
};

struct LocusInterpretation {
  std::variant<RelativeW, SpecialHilb, HigherRankBN> locus;
  /// Set when the Brill-Noether condition is vacuous (k below chi; for r = 1
  /// this is exactly delta < 0). The locus is then the whole moduli space.
  bool unconstrained = false;

  friend bool operator==(const LocusInterpretation&, const LocusInterpretation&) = default;

  /// "W^1_3(|a|^s)", "Hilb^5_(L,2)(S)", "BN_4(2,a,-2)".
  std::string to_string() const;
  /// Pic^{2g-2-d}(|a|^s), Hilb^d(S) or M(r,a,beta).
  std::string ambient(std::int64_t g, std::int64_t d) const;
};

/// Throws ArgumentError for k < 0 or r < 0.
LocusInterpretation interpret_locus(std::int64_t k, std::int64_t r, std::int64_t g,
                                    std::int64_t d);

}  // namespace k3bn
