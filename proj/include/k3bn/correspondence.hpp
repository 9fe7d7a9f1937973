// include/k3bn/correspondence.hpp - numerics of the correspondences A_{r,r'}.
//
// In the (K, R)-plane the maximal strata (h^1 = 0) lie on the line
// l(beta): K = 2R + beta, and a correspondence moves along a line
// l'(c): K - R = c. Fiber dimensions that are computed sheaf-theoretically
// (h^1(E') = l for the bottom sheaf, h^0 = 2r + beta on the maximal stratum)
// enter here as the resulting integers.

#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

namespace k3bn {

struct StratumTarget {
  std::int64_t r = 0;
  std::int64_t k = 0;
  std::int64_t l = 0;  // r - r' = k - k'

  friend bool operator==(const StratumTarget&, const StratumTarget&) = default;
};

/// The point where l'(k' - r') meets l(beta):
/// r = k' - r' - beta, k = 2r + beta, l = k' - 2r' - beta.
/// Throws ArgumentError when l < 0, i.e. (k', r') lies above l(beta).
StratumTarget maximal_stratum_target(std::int64_t k_prime, std::int64_t r_prime,
                                     std::int64_t g, std::int64_t d);

/// dim Gr(l, n) = l(n - l). Throws ArgumentError unless 0 <= l <= n.
std::int64_t grassmannian_dim(std::int64_t l, std::int64_t n);

struct DimensionCount {
  StratumTarget target;
  std::int64_t lhs = 0;  // 2(g - r(r - alpha)) + l(2r + beta - l)
  std::int64_t rhs = 0;  // 2(g - r'(r' - alpha)) - k'(k' - (2r' + beta))
  bool equal = false;
  /// Whether both moduli spaces are nonempty by Mukai's criterion; the
  /// identity itself holds either way.
  bool moduli_nonempty = false;
};

DimensionCount dimension_count_check(std::int64_t r_prime, std::int64_t k_prime,
                                     std::int64_t g, std::int64_t d);

struct SerreDual {
  std::int64_t r_bar = 0;
  std::int64_t d = 0;

  friend bool operator==(const SerreDual&, const SerreDual&) = default;
};

/// V^{r_bar}_d <-> V^{r_bar + beta}_{2g-2-d}. An involution preserving rho.
SerreDual serre_dual_params(std::int64_t r_bar, std::int64_t g, std::int64_t d);

enum class Pi2Surjectivity { Epimorphic, EpiOverCaleyBacharash, EpiOverVPrime };

std::string_view to_string(Pi2Surjectivity s);

/// Throws ArgumentError unless r' >= 0 and l >= 1.
Pi2Surjectivity pi2_surjectivity(std::int64_t r_prime, std::int64_t l);

struct CorrespondenceRecord {
  std::int64_t g = 0, d = 0, beta = 0;
  std::int64_t r = 0, k = 0;              // top: maximal stratum, k = chi(v)
  std::int64_t r_prime = 0, k_prime = 0;  // bottom
  std::int64_t l = 0;
  std::int64_t pi1_fiber_dim = 0;  // Gr(l, 2r + beta)
  std::int64_t pi2_fiber_dim = 0;  // Gr(l, h^1(E')) with h^1(E') = l
  std::optional<Pi2Surjectivity> pi2_surjectivity;  // absent when l == 0
  DimensionCount count;
};

/// Full case (b) record for the bottom point (k', r').
CorrespondenceRecord correspond(std::int64_t k_prime, std::int64_t r_prime, std::int64_t g,
                                std::int64_t d);

enum class BirationalCase { C, D };

enum class Trichotomy {
  BNInsideMIsGrFibrationOverBase,  // r < alpha (C) or r < alpha - 1 (D)
  MBirationalToBase,               // equality
  BaseContainsGrFibrationOverM,    // r > alpha (C) or r > alpha - 1 (D)
};

std::string_view to_string(BirationalCase c);
std::string_view to_string(Trichotomy t);

struct BirationalStructure {
  BirationalCase which = BirationalCase::C;
  Trichotomy trichotomy = Trichotomy::MBirationalToBase;
  /// Base of the correspondence: Pic^{base_degree}(|a|) in case C with
  /// base_degree = 2g - 2 - d, Hilb^{base_degree}(S) in case D with base_degree = d.
  std::int64_t base_degree = 0;
  /// Index k of the Brill-Noether stratum BN_k(v) that fibers over the base
  /// (r in case C, r - 1 in case D); meaningful for the first branch.
  std::int64_t bn_index = 0;
  /// Index of the special locus in the base that fibers over M(v): the W
  /// index r - 1 - alpha in case C, the speciality r - 1 in case D; meaningful
  /// for the third branch.
  std::int64_t base_special_index = 0;

  friend bool operator==(const BirationalStructure&, const BirationalStructure&) = default;
};

/// Throws ArgumentError for r < 2.
BirationalStructure birational_structure(BirationalCase which, std::int64_t r, std::int64_t g,
                                         std::int64_t d);

/// k >= max(chi, r) in case C, k >= max(chi, r - 1) in case D.
bool in_admissible_band(BirationalCase which, std::int64_t k, std::int64_t r, std::int64_t g,
                        std::int64_t d);

struct CaseDFibers {
  std::int64_t pi1_n = 0;  // Gr(r - 1, k)
  std::int64_t pi2_n = 0;  // Gr(r - 1, k - r + alpha - 1)
  std::int64_t pi1_dim = 0;
  std::int64_t pi2_dim = 0;
  bool pi2_on_boundary = false;  // r - 1 == k - r + alpha - 1
};

/// Throws ArgumentError for r < 2, for (k, r) outside the case D band, or when
/// a fiber Grassmannian would be impossible.
CaseDFibers case_d_fibers(std::int64_t k, std::int64_t r, std::int64_t g, std::int64_t d);

enum class CorrespondenceCase { A, B, C, D, RankOneToZero };

struct CaseSupport {
  CorrespondenceCase which;
  bool implemented;
};

/// Which of the special cases a pair of ranks falls under, or nullopt when
/// none applies. The r = 1, r' = 0 correspondence is reported with
/// implemented == false; no numerics are provided for it.
/// Throws ArgumentError unless 0 <= r' < r.
std::optional<CaseSupport> correspondence_case(std::int64_t r, std::int64_t r_prime,
                                               bool top_on_line);

}  // namespace k3bn
