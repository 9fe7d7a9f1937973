#include "k3bn/bn_core.hpp"

#include <array>
#include <string>

#include "k3bn/errors.hpp"

namespace k3bn {

namespace {

void require_nonnegative(std::int64_t value, const char* fn, const char* name) {
  if (value < 0) {
    throw ArgumentError(std::string(fn) + ": " + name + " must be >= 0, got " +
                        std::to_string(value));
  }
}

constexpr std::array<std::string_view, 6> kRegionNames = {
    "D0", "D1", "D2", "D3", "TrivialBand", "ModuliEmpty"};

}  // namespace

NumericInvariants NumericInvariants::of(std::int64_t r, std::int64_t g, std::int64_t d) {
  const std::int64_t beta = g - 1 - d;
  return {r, g, d, beta, -beta, 2 * r + beta};
}

std::int64_t rho(std::int64_t r, std::int64_t g, std::int64_t d) {
  return g - (r + 1) * (r + g - d);
}

std::optional<std::int64_t> moduli_dim(std::int64_t r, std::int64_t g, std::int64_t d) {
  require_nonnegative(r, "moduli_dim", "r");
  if (r >= 2) {
    const std::int64_t p = rho(r - 1, g, d);
    if (p < 0) return std::nullopt;
    return 2 * p;
  }
  if (r == 1) {
    if (d < 0) return std::nullopt;
    return 2 * d;
  }
  if (g < 0) return std::nullopt;
  return 2 * g;
}

std::optional<std::int64_t> vdim_bn(std::int64_t k, std::int64_t r, std::int64_t g,
                                    std::int64_t d) {
  require_nonnegative(k, "vdim_bn", "k");
  require_nonnegative(r, "vdim_bn", "r");
  const auto dim = moduli_dim(r, g, d);
  if (!dim) return std::nullopt;
  const std::int64_t chi = 2 * r + (g - 1 - d);
  return *dim - k * (k - chi);
}

BoundaryRoots boundary_roots(std::int64_t g, std::int64_t beta) {
  require_nonnegative(g, "boundary_roots", "g");
  const std::int64_t disc4 = beta * beta + 4 * g;
  const std::int64_t disc8 = beta * beta + 8 * g;
  return {QuadraticSurd(-beta, disc4, 2), QuadraticSurd(0, disc4, 1),
          QuadraticSurd(beta, disc4, 2), QuadraticSurd(beta, disc8, 2)};
}

std::string_view to_string(Region region) {
  return kRegionNames.at(static_cast<std::size_t>(region));
}

Region region_from_string(std::string_view tag) {
  for (std::size_t i = 0; i < kRegionNames.size(); ++i) {
    if (kRegionNames[i] == tag) return static_cast<Region>(i);
  }
  throw ParseError("unknown region tag '" + std::string(tag) + "'");
}

Region classify(std::int64_t k, std::int64_t r, std::int64_t g, std::int64_t d) {
  require_nonnegative(k, "classify", "k");
  require_nonnegative(r, "classify", "r");
  const auto vdim = vdim_bn(k, r, g, d);
  if (!vdim) return Region::ModuliEmpty;
  const auto inv = NumericInvariants::of(r, g, d);
  if (k < inv.chi) return Region::TrivialBand;
  if (k < r) return Region::D0;
  if (*vdim < 0) return Region::D3;
  const std::int64_t m = k - r - inv.beta;
  if (m <= 0 || g - m * (m + inv.beta) >= 0) return Region::D1;
  return Region::D2;
}

Hypotheses Hypotheses::closed() const {
  Hypotheses h = *this;
  h.c3 = h.c3 || h.pic_is_Za;
  h.pic_is_Za = h.c3;
  h.c2 = h.c2 || h.c3;
  h.c1 = h.c1 || h.c2;
  return h;
}

std::string_view to_string(Status status) {
  switch (status) {
    case Status::Empty: return "Empty";
    case Status::NonemptyExpectedDim: return "NonemptyExpectedDim";
    case Status::EmptyOrExpectedDim: return "EmptyOrExpectedDim";
    case Status::NotCovered: return "NotCovered";
  }
  return "?";
}

Prediction predict_status(std::int64_t k, std::int64_t r, std::int64_t g, std::int64_t d,
                          const Hypotheses& hyp) {
  const Hypotheses h = hyp.closed();
  const auto dim = moduli_dim(r, g, d);
  if (!dim) {
    throw HypothesisError("moduli_nonempty",
                          "predict_status: M(r,a,beta) is empty for (r,g,d) = (" +
                              std::to_string(r) + "," + std::to_string(g) + "," +
                              std::to_string(d) + ")");
  }
  if (!h.pic_is_Za && !h.aH_is_one) {
    throw HypothesisError("pic_is_Za_or_aH_is_one",
                          "predict_status: requires Pic S = Z a or (a,H) = 1");
  }

  Prediction out;
  out.region = classify(k, r, g, d);
  const auto vdim = vdim_bn(k, r, g, d);
  switch (out.region) {
    case Region::TrivialBand:
      out.status = Status::NonemptyExpectedDim;
      out.dimension = dim;
      break;
    case Region::D0:
      out.status = Status::EmptyOrExpectedDim;
      out.dimension = vdim;
      out.conjecture_nonempty = h.pic_is_Za;
      break;
    case Region::D1:
      if (h.c1 || h.c2 || h.c3) {
        out.status = Status::NonemptyExpectedDim;
        out.dimension = vdim;
      } else {
        out.status = Status::NotCovered;
      }
      break;
    case Region::D2:
      out.status = r >= 2 ? Status::Empty : Status::NotCovered;
      break;
    case Region::D3:
      out.status = Status::Empty;
      break;
    case Region::ModuliEmpty:
      out.status = Status::Empty;  // unreachable: guarded above
      break;
  }
  return out;
}

LocusInterpretation interpret_locus(std::int64_t k, std::int64_t r, std::int64_t g,
                                    std::int64_t d) {
  require_nonnegative(k, "interpret_locus", "k");
  require_nonnegative(r, "interpret_locus", "r");
  const auto inv = NumericInvariants::of(r, g, d);
  LocusInterpretation out;
  out.unconstrained = k < inv.chi;
  if (r == 0) {
    out.locus = RelativeW{2 * g - 2 - d, k - 1};
  } else if (r == 1) {
    out.locus = SpecialHilb{d, k + inv.alpha - 2};
  } else {
    out.locus = HigherRankBN{r, k, inv.beta};
  }
  return out;
}

std::string LocusInterpretation::to_string() const {
  struct Visitor {
    std::string operator()(const RelativeW& w) const {
      return "W^" + std::to_string(w.index) + "_" + std::to_string(w.degree) + "(|a|^s)";
    }
    std::string operator()(const SpecialHilb& h) const {
      return "Hilb^" + std::to_string(h.d) + "_(L," + std::to_string(h.delta) + ")(S)";
    }
    std::string operator()(const HigherRankBN& b) const {
      return "BN_" + std::to_string(b.k) + "(" + std::to_string(b.r) + ",a," +
             std::to_string(b.beta) + ")";
    }
  };
  return std::visit(Visitor{}, locus);
}

std::string LocusInterpretation::ambient(std::int64_t g, std::int64_t d) const {
  struct Visitor {
    std::int64_t g, d;
    std::string operator()(const RelativeW&) const {
      return "Pic^" + std::to_string(2 * g - 2 - d) + "(|a|^s)";
    }
    std::string operator()(const SpecialHilb&) const {
      return "Hilb^" + std::to_string(d) + "(S)";
    }
    std::string operator()(const HigherRankBN& b) const {
      return "M(" + std::to_string(b.r) + ",a," + std::to_string(g - 1 - d) + ")";
    }
  };
  return std::visit(Visitor{g, d}, locus);
}

}  // namespace k3bn
