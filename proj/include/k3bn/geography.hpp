// include/k3bn/geography.hpp - the (k, r)-plane geography for a fixed (g, d).

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "k3bn/bn_core.hpp"

namespace k3bn {

struct Cell {
  std::int64_t r = 0;
  std::int64_t k = 0;
  std::optional<std::int64_t> vdim;
  Region region = Region::ModuliEmpty;
  /// '*' for D1, '!' for D2, ' ' otherwise.
  char symbol = ' ';
  LocusInterpretation interpretation;

  /// Whether the printed tables show a value here (D0, D1 or D2).
  bool displayed() const;

  friend bool operator==(const Cell&, const Cell&) = default;
};

struct GeographyTable {
  std::int64_t g = 0;
  std::int64_t d = 0;
  std::int64_t beta = 0;
  std::int64_t r_max = 0;
  std::int64_t k_max = 0;
  /// Row-major, r ascending then k ascending; (r_max + 1) * (k_max + 1) cells.
  std::vector<Cell> cells;

  /// Throws ArgumentError outside the grid.
  const Cell& at(std::int64_t r, std::int64_t k) const;

  friend bool operator==(const GeographyTable&, const GeographyTable&) = default;
};

/// Rows r = 0..floor(r0); columns k = 0..k_max with default k_max = ceil(k0) + 1.
/// Throws ArgumentError for g < 0 or a negative k_max.
GeographyTable build_table(std::int64_t g, std::int64_t d,
                           std::optional<std::int64_t> k_max = std::nullopt);

enum class Format { Text, Csv, Json };
enum class Mode { Values, Symbols };

/// Throws ArgumentError for anything other than text, csv or json.
Format format_from_string(std::string_view name);
/// Throws ArgumentError for anything other than values or symbols.
Mode mode_from_string(std::string_view name);

/// Text: rows r descending, columns k ascending, blanks outside D0..D2.
/// CSV: header "r,k,vdim,region,symbol,interpretation", r ascending.
/// JSON: {"g","d","beta","r_max","k_max","cells":[...]} with a fixed key order.
/// The mode only affects text output.
std::string render_table(const GeographyTable& table, Format format, Mode mode = Mode::Values);

/// Inverse of render_table(..., Format::Json). Throws ParseError.
GeographyTable table_from_json(std::string_view text);

/// SVG 1.1 picture of the geography: axes, the line K = 2R + beta, the D1
/// boundary, the roots k1, k2, k0 on the K axis and r0 on the R axis, and the
/// lattice points colored by region. Output is a pure function of (g, d).
/// Throws ArgumentError for g < 1.
std::string render_geography_svg(std::int64_t g, std::int64_t d);

}  // namespace k3bn
