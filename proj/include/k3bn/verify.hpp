// include/k3bn/verify.hpp - regeneration of the worked examples against embedded golden data.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace k3bn {

struct GoldenCell {
  std::int64_t r = 0;
  std::int64_t k = 0;
  std::int64_t vdim = 0;
  char symbol = ' ';
};

struct GoldenTable {
  std::int64_t g = 0;
  std::int64_t d = 0;
  std::int64_t top_row = 0;  // highest r printed
  std::int64_t k_last = 0;   // columns 0..k_last are printed
  std::vector<GoldenCell> cells;
  /// Cells printed blank in the source that build_table does fill in.
  std::vector<std::pair<std::int64_t, std::int64_t>> blank_exceptions;
};

struct GoldenChow {
  std::string a, b, c;
  std::int64_t value = 0;
};

struct GoldenLattice {
  std::string name;
  std::vector<std::vector<std::int64_t>> gram;
  std::vector<std::int64_t> a;
  std::int64_t genus = 0;
  std::int64_t a_squared = 0;
  /// (coords of b, expected (a, b)).
  std::vector<std::pair<std::vector<std::int64_t>, std::int64_t>> pairings;
};

struct GoldenData {
  std::vector<GoldenTable> tables;
  std::vector<GoldenChow> chow;
  std::vector<GoldenLattice> lattices;
};

/// The five example tables, four scroll intersection numbers and two lattice checks.
GoldenData golden_examples();

struct ReportItem {
  std::string name;
  bool passed = false;
  std::string detail;  // first mismatch when failed
};

struct VerificationReport {
  std::vector<ReportItem> items;

  std::size_t passed() const;
  bool all_passed() const { return passed() == items.size(); }
  /// One "PASS name" / "FAIL name: detail" line per item, then "n/m passed".
  std::string to_text() const;
};

VerificationReport verify_worked_examples(const GoldenData& golden = golden_examples());

}  // namespace k3bn
