#include "k3bn/geography.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "k3bn/errors.hpp"

namespace k3bn {

namespace {

using ordered_json = nlohmann::ordered_json;

char symbol_for(Region region, const std::optional<std::int64_t>& vdim) {
  if (region == Region::D1 && vdim) return '*';
  if (region == Region::D2) return '!';
  return ' ';
}

std::string rstrip(std::string s) {
  while (!s.empty() && s.back() == ' ') s.pop_back();
  return s;
}

std::string pad_left(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

ordered_json interpretation_json(const LocusInterpretation& li) {
  ordered_json j;
  if (const auto* w = std::get_if<RelativeW>(&li.locus)) {
    j["kind"] = "RelativeW";
    j["degree"] = w->degree;
    j["index"] = w->index;
  } else if (const auto* h = std::get_if<SpecialHilb>(&li.locus)) {
    j["kind"] = "SpecialHilb";
    j["d"] = h->d;
    j["delta"] = h->delta;
  } else {
    const auto& b = std::get<HigherRankBN>(li.locus);
    j["kind"] = "HigherRankBN";
    j["r"] = b.r;
    j["k"] = b.k;
    j["beta"] = b.beta;
  }
  j["unconstrained"] = li.unconstrained;
  j["text"] = li.to_string();
  return j;
}

LocusInterpretation interpretation_from_json(const nlohmann::json& j) {
  LocusInterpretation li;
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "RelativeW") {
    li.locus = RelativeW{j.at("degree").get<std::int64_t>(), j.at("index").get<std::int64_t>()};
  } else if (kind == "SpecialHilb") {
    li.locus = SpecialHilb{j.at("d").get<std::int64_t>(), j.at("delta").get<std::int64_t>()};
  } else if (kind == "HigherRankBN") {
    li.locus = HigherRankBN{j.at("r").get<std::int64_t>(), j.at("k").get<std::int64_t>(),
                            j.at("beta").get<std::int64_t>()};
  } else {
    throw ParseError("unknown interpretation kind '" + kind + "'");
  }
  li.unconstrained = j.at("unconstrained").get<bool>();
  return li;
}

std::string render_text(const GeographyTable& t, Mode mode) {
  auto cell_text = [&](const Cell& c) -> std::string {
    if (mode == Mode::Symbols) return std::string(1, c.symbol);
    return c.displayed() ? std::to_string(*c.vdim) : std::string();
  };
  std::size_t width = std::to_string(t.k_max).size();
  for (const auto& c : t.cells) width = std::max(width, cell_text(c).size());
  width += 1;
  const std::size_t label = std::max<std::size_t>(std::to_string(t.r_max).size(), 1);

  std::ostringstream os;
  os << "g = " << t.g << ", d = " << t.d << ", beta = " << t.beta << "\n";
  os << pad_left("r", label) << " |\n";
  for (std::int64_t r = t.r_max; r >= 0; --r) {
    std::string line = pad_left(std::to_string(r), label) + " |";
    for (std::int64_t k = 0; k <= t.k_max; ++k) line += pad_left(cell_text(t.at(r, k)), width);
    os << rstrip(line) << "\n";
  }
  os << std::string(label + 1, '-') << "+"
     << std::string(width * static_cast<std::size_t>(t.k_max + 1) + 1, '-') << "\n";
  std::string axis = std::string(label + 1, ' ') + "|";
  for (std::int64_t k = 0; k <= t.k_max; ++k) axis += pad_left(std::to_string(k), width);
  os << axis << "  k\n";
  return os.str();
}

std::string render_csv(const GeographyTable& t) {
  std::ostringstream os;
  os << "r,k,vdim,region,symbol,interpretation\n";
  for (const auto& c : t.cells) {
    os << c.r << ',' << c.k << ',' << (c.vdim ? std::to_string(*c.vdim) : "") << ','
       << to_string(c.region) << ',' << (c.symbol == ' ' ? "" : std::string(1, c.symbol)) << ','
       << csv_field(c.interpretation.to_string()) << "\n";
  }
  return os.str();
}

std::string render_json(const GeographyTable& t) {
  ordered_json doc;
  doc["g"] = t.g;
  doc["d"] = t.d;
  doc["beta"] = t.beta;
  doc["r_max"] = t.r_max;
  doc["k_max"] = t.k_max;
  ordered_json cells = ordered_json::array();
  for (const auto& c : t.cells) {
    ordered_json jc;
    jc["r"] = c.r;
    jc["k"] = c.k;
    jc["vdim"] = c.vdim ? ordered_json(*c.vdim) : ordered_json(nullptr);
    jc["region"] = to_string(c.region);
    jc["symbol"] = std::string(1, c.symbol);
    jc["interpretation"] = interpretation_json(c.interpretation);
    cells.push_back(std::move(jc));
  }
  doc["cells"] = std::move(cells);
  return doc.dump(2) + "\n";
}

}  // namespace

bool Cell::displayed() const {
  return vdim && (region == Region::D0 || region == Region::D1 || region == Region::D2);
}

const Cell& GeographyTable::at(std::int64_t r, std::int64_t k) const {
  if (r < 0 || r > r_max || k < 0 || k > k_max) {
    throw ArgumentError("GeographyTable::at: (r,k) = (" + std::to_string(r) + "," +
                        std::to_string(k) + ") outside the table");
  }
  return cells.at(static_cast<std::size_t>(r * (k_max + 1) + k));
}

GeographyTable build_table(std::int64_t g, std::int64_t d, std::optional<std::int64_t> k_max) {
  if (g < 0) throw ArgumentError("build_table: g must be >= 0");
  if (k_max && *k_max < 0) throw ArgumentError("build_table: k_max must be >= 0");
  GeographyTable t;
  t.g = g;
  t.d = d;
  t.beta = g - 1 - d;
  const auto roots = boundary_roots(g, t.beta);
  t.r_max = roots.r0.floor();
  t.k_max = k_max.value_or(roots.k0.ceil() + 1);
  t.cells.reserve(static_cast<std::size_t>((t.r_max + 1) * (t.k_max + 1)));
  for (std::int64_t r = 0; r <= t.r_max; ++r) {
    for (std::int64_t k = 0; k <= t.k_max; ++k) {
      Cell c;
      c.r = r;
      c.k = k;
      c.vdim = vdim_bn(k, r, g, d);
      c.region = classify(k, r, g, d);
      c.symbol = symbol_for(c.region, c.vdim);
      c.interpretation = interpret_locus(k, r, g, d);
      t.cells.push_back(std::move(c));
    }
  }
  return t;
}

Format format_from_string(std::string_view name) {
  if (name == "text") return Format::Text;
  if (name == "csv") return Format::Csv;
  if (name == "json") return Format::Json;
  throw ArgumentError("unknown format '" + std::string(name) + "' (expected text, csv or json)");
}

Mode mode_from_string(std::string_view name) {
  if (name == "values") return Mode::Values;
  if (name == "symbols") return Mode::Symbols;
  throw ArgumentError("unknown mode '" + std::string(name) + "' (expected values or symbols)");
}

std::string render_table(const GeographyTable& table, Format format, Mode mode) {
  switch (format) {
    case Format::Text: return render_text(table, mode);
    case Format::Csv: return render_csv(table);
    case Format::Json: return render_json(table);
  }
  throw ArgumentError("render_table: unknown format");
}

GeographyTable table_from_json(std::string_view text) {
  const auto doc = nlohmann::json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded() || !doc.is_object()) throw ParseError("table: invalid JSON document");
  try {
    GeographyTable t;
    t.g = doc.at("g").get<std::int64_t>();
    t.d = doc.at("d").get<std::int64_t>();
    t.beta = doc.at("beta").get<std::int64_t>();
    t.r_max = doc.at("r_max").get<std::int64_t>();
    t.k_max = doc.at("k_max").get<std::int64_t>();
    for (const auto& jc : doc.at("cells")) {
      Cell c;
      c.r = jc.at("r").get<std::int64_t>();
      c.k = jc.at("k").get<std::int64_t>();
      if (!jc.at("vdim").is_null()) c.vdim = jc.at("vdim").get<std::int64_t>();
      c.region = region_from_string(jc.at("region").get<std::string>());
      const auto sym = jc.at("symbol").get<std::string>();
      if (sym.size() != 1) throw ParseError("table: symbol must be one character");
      c.symbol = sym[0];
      c.interpretation = interpretation_from_json(jc.at("interpretation"));
      t.cells.push_back(std::move(c));
    }
    if (t.cells.size() != static_cast<std::size_t>((t.r_max + 1) * (t.k_max + 1))) {
      throw ParseError("table: cell count does not match r_max and k_max");
    }
    return t;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("table: ") + e.what());
  }
}

}  // namespace k3bn
