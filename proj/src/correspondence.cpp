#include "k3bn/correspondence.hpp"

#include <algorithm>
#include <string>

#include "k3bn/bn_core.hpp"
#include "k3bn/errors.hpp"

namespace k3bn {

StratumTarget maximal_stratum_target(std::int64_t k_prime, std::int64_t r_prime,
                                     std::int64_t g, std::int64_t d) {
  const std::int64_t beta = g - 1 - d;
  const std::int64_t l = k_prime - 2 * r_prime - beta;
  if (l < 0) {
    throw ArgumentError("maximal_stratum_target: (k',r') = (" + std::to_string(k_prime) + "," +
                        std::to_string(r_prime) + ") lies above the line K = 2R + beta (l = " +
                        std::to_string(l) + ")");
  }
  const std::int64_t r = k_prime - r_prime - beta;
  return {r, 2 * r + beta, l};
}

std::int64_t grassmannian_dim(std::int64_t l, std::int64_t n) {
  if (l < 0 || l > n) {
    throw ArgumentError("grassmannian_dim: Gr(" + std::to_string(l) + "," + std::to_string(n) +
                        ") is empty; need 0 <= l <= n");
  }
  return l * (n - l);
}

DimensionCount dimension_count_check(std::int64_t r_prime, std::int64_t k_prime,
                                     std::int64_t g, std::int64_t d) {
  DimensionCount out;
  out.target = maximal_stratum_target(k_prime, r_prime, g, d);
  const std::int64_t beta = g - 1 - d;
  const std::int64_t alpha = -beta;
  const std::int64_t r = out.target.r;
  const std::int64_t l = out.target.l;
  out.lhs = 2 * (g - r * (r - alpha)) + l * (2 * r + beta - l);
  out.rhs = 2 * (g - r_prime * (r_prime - alpha)) - k_prime * (k_prime - (2 * r_prime + beta));
  out.equal = out.lhs == out.rhs;
  out.moduli_nonempty = r_prime >= 0 && moduli_dim(r, g, d).has_value() &&
                        moduli_dim(r_prime, g, d).has_value();
  return out;
}

SerreDual serre_dual_params(std::int64_t r_bar, std::int64_t g, std::int64_t d) {
  const std::int64_t beta = g - 1 - d;
  return {r_bar + beta, 2 * g - 2 - d};
}

std::string_view to_string(Pi2Surjectivity s) {
  switch (s) {
    case Pi2Surjectivity::Epimorphic: return "Epimorphic";
    case Pi2Surjectivity::EpiOverCaleyBacharash: return "EpiOverCaleyBacharash";
    case Pi2Surjectivity::EpiOverVPrime: return "EpiOverVPrime";
  }
  return "?";
}

Pi2Surjectivity pi2_surjectivity(std::int64_t r_prime, std::int64_t l) {
  if (r_prime < 0 || l < 1) {
    throw ArgumentError("pi2_surjectivity: need r' >= 0 and l >= 1, got r' = " +
                        std::to_string(r_prime) + ", l = " + std::to_string(l));
  }
  if (r_prime >= 2) return Pi2Surjectivity::Epimorphic;
  if (r_prime == 1) return Pi2Surjectivity::EpiOverCaleyBacharash;
  return l == 1 ? Pi2Surjectivity::Epimorphic : Pi2Surjectivity::EpiOverVPrime;
}

CorrespondenceRecord correspond(std::int64_t k_prime, std::int64_t r_prime, std::int64_t g,
                                std::int64_t d) {
  if (r_prime < 0) throw ArgumentError("correspond: r' must be >= 0");
  CorrespondenceRecord rec;
  rec.g = g;
  rec.d = d;
  rec.beta = g - 1 - d;
  rec.r_prime = r_prime;
  rec.k_prime = k_prime;
  rec.count = dimension_count_check(r_prime, k_prime, g, d);
  rec.r = rec.count.target.r;
  rec.k = rec.count.target.k;
  rec.l = rec.count.target.l;
  rec.pi1_fiber_dim = grassmannian_dim(rec.l, 2 * rec.r + rec.beta);
  rec.pi2_fiber_dim = grassmannian_dim(rec.l, rec.l);
  if (rec.l >= 1) rec.pi2_surjectivity = pi2_surjectivity(r_prime, rec.l);
  return rec;
}

std::string_view to_string(BirationalCase c) { return c == BirationalCase::C ? "C" : "D"; }

std::string_view to_string(Trichotomy t) {
  switch (t) {
    case Trichotomy::BNInsideMIsGrFibrationOverBase: return "BNInsideMIsGrFibrationOverBase";
    case Trichotomy::MBirationalToBase: return "MBirationalToBase";
    case Trichotomy::BaseContainsGrFibrationOverM: return "BaseContainsGrFibrationOverM";
  }
  return "?";
}

BirationalStructure birational_structure(BirationalCase which, std::int64_t r, std::int64_t g,
                                         std::int64_t d) {
  if (r < 2) {
    throw ArgumentError("birational_structure: r must be >= 2, got " + std::to_string(r));
  }
  const std::int64_t alpha = d + 1 - g;
  const std::int64_t pivot = which == BirationalCase::C ? alpha : alpha - 1;
  BirationalStructure out;
  out.which = which;
  if (r < pivot) {
    out.trichotomy = Trichotomy::BNInsideMIsGrFibrationOverBase;
  } else if (r == pivot) {
    out.trichotomy = Trichotomy::MBirationalToBase;
  } else {
    out.trichotomy = Trichotomy::BaseContainsGrFibrationOverM;
  }
  if (which == BirationalCase::C) {
    out.base_degree = 2 * g - 2 - d;
    out.bn_index = r;
    out.base_special_index = r - 1 - alpha;
  } else {
    out.base_degree = d;
    out.bn_index = r - 1;
    out.base_special_index = r - 1;
  }
  return out;
}

bool in_admissible_band(BirationalCase which, std::int64_t k, std::int64_t r, std::int64_t g,
                        std::int64_t d) {
  const std::int64_t chi = 2 * r + (g - 1 - d);
  const std::int64_t floor_k = which == BirationalCase::C ? r : r - 1;
  return k >= std::max(chi, floor_k);
}

CaseDFibers case_d_fibers(std::int64_t k, std::int64_t r, std::int64_t g, std::int64_t d) {
  if (r < 2) throw ArgumentError("case_d_fibers: r must be >= 2");
  if (!in_admissible_band(BirationalCase::D, k, r, g, d)) {
    throw ArgumentError("case_d_fibers: need k >= max(chi, r - 1)");
  }
  const std::int64_t alpha = d + 1 - g;
  CaseDFibers out;
  out.pi1_n = k;
  out.pi2_n = k - r + alpha - 1;
  out.pi1_dim = grassmannian_dim(r - 1, out.pi1_n);
  out.pi2_dim = grassmannian_dim(r - 1, out.pi2_n);
  out.pi2_on_boundary = (r - 1) == out.pi2_n;
  return out;
}

std::optional<CaseSupport> correspondence_case(std::int64_t r, std::int64_t r_prime,
                                               bool top_on_line) {
  if (r_prime < 0 || r_prime >= r) {
    throw ArgumentError("correspondence_case: need 0 <= r' < r");
  }
  if (r == 1) return CaseSupport{CorrespondenceCase::RankOneToZero, false};
  if (top_on_line) {
    return CaseSupport{r_prime == 0 ? CorrespondenceCase::A : CorrespondenceCase::B, true};
  }
  if (r_prime == 0) return CaseSupport{CorrespondenceCase::C, true};
  if (r_prime == 1) return CaseSupport{CorrespondenceCase::D, true};
  return std::nullopt;
}

}  // namespace k3bn
