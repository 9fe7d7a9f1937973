#include "k3bn/lattice.hpp"

#include <string>

#include <json.hpp>

#include "k3bn/errors.hpp"

namespace k3bn {

IntersectionLattice::IntersectionLattice(std::vector<std::vector<std::int64_t>> gram)
    : gram_(std::move(gram)) {
  const std::size_t n = gram_.size();
  if (n == 0) {
    throw DimensionError("lattice: Gram matrix is empty");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (gram_[i].size() != n) {
      throw DimensionError("lattice: Gram matrix row " + std::to_string(i) + " has " +
                           std::to_string(gram_[i].size()) + " entries, expected " +
                           std::to_string(n));
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (gram_[i][i] % 2 != 0) {
      throw ArgumentError("lattice: diagonal entry " + std::to_string(i) + " is odd (" +
                          std::to_string(gram_[i][i]) + "); Num S must be even");
    }
    for (std::size_t j = i + 1; j < n; ++j) {
      if (gram_[i][j] != gram_[j][i]) {
        throw ArgumentError("lattice: Gram matrix is not symmetric at (" + std::to_string(i) +
                            "," + std::to_string(j) + ")");
      }
    }
  }
}

void IntersectionLattice::check_class(const NumClass& x, const char* fn, const char* arg) const {
  if (x.coords.size() != rank()) {
    throw DimensionError(std::string(fn) + ": argument " + arg + " has " +
                         std::to_string(x.coords.size()) + " coordinates, lattice rank is " +
                         std::to_string(rank()));
  }
}

std::int64_t IntersectionLattice::pair(const NumClass& x, const NumClass& y) const {
  check_class(x, "pair", "x");
  check_class(y, "pair", "y");
  std::int64_t total = 0;
  for (std::size_t i = 0; i < rank(); ++i) {
    if (x.coords[i] == 0) continue;
    std::int64_t row = 0;
    for (std::size_t j = 0; j < rank(); ++j) {
      row += gram_[i][j] * y.coords[j];
    }
    total += x.coords[i] * row;
  }
  return total;
}

std::int64_t pair(const IntersectionLattice& lat, const NumClass& x, const NumClass& y) {
  return lat.pair(x, y);
}

std::int64_t genus_of_class(const IntersectionLattice& lat, const NumClass& a) {
  // Evenness of the lattice makes a^2 even.
  return (lat.square(a) + 2) / 2;
}

EpsilonImage epsilon(const IntersectionLattice& lat, const ChernCharacter& v) {
  const std::int64_t sq = lat.square(v.v1);
  return {v.rank, (sq + 2) / 2, (sq - 2 * v.v2) / 2};
}

namespace {

std::vector<std::int64_t> int_row(const nlohmann::json& row, const char* what) {
  if (!row.is_array()) {
    throw ParseError(std::string(what) + ": expected an array of integers");
  }
  std::vector<std::int64_t> out;
  out.reserve(row.size());
  for (const auto& v : row) {
    if (!v.is_number_integer()) {
      throw ParseError(std::string(what) + ": non-integer entry " + v.dump());
    }
    out.push_back(v.get<std::int64_t>());
  }
  return out;
}

nlohmann::json parse_or_throw(std::string_view text, const char* what) {
  auto doc = nlohmann::json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded()) {
    throw ParseError(std::string(what) + ": invalid JSON");
  }
  return doc;
}

}  // namespace

IntersectionLattice parse_lattice_json(std::string_view text) {
  auto doc = parse_or_throw(text, "lattice");
  if (doc.is_object()) {
    if (!doc.contains("gram")) {
      throw ParseError("lattice: object has no \"gram\" key");
    }
    doc = doc.at("gram");
  }
  if (!doc.is_array()) {
    throw ParseError("lattice: expected {\"gram\": [[...]]} or a matrix");
  }
  std::vector<std::vector<std::int64_t>> gram;
  for (const auto& row : doc) {
    gram.push_back(int_row(row, "lattice"));
  }
  return IntersectionLattice(std::move(gram));
}

NumClass parse_class_json(std::string_view text) {
  return NumClass{int_row(parse_or_throw(text, "class"), "class")};
}

}  // namespace k3bn
