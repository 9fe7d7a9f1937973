// Geography pictures. Coordinates are lattice units: x = K and y = top - R, so
// the viewBox is the integer grid with a one-unit margin.

#include <cstdio>
#include <sstream>
#include <string>

#include "k3bn/errors.hpp"
#include "k3bn/geography.hpp"

namespace k3bn {

namespace {

std::string num(long double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4Lf", v);
  std::string s = buf;
  if (s == "-0.0000") s = "0.0000";
  return s;
}

std::string num(std::int64_t v) { return std::to_string(v); }

const char* fill_for(Region region) {
  switch (region) {
    case Region::D0: return "#7b3294";
    case Region::D1: return "#1a9641";
    case Region::D2: return "#d7191c";
    case Region::D3: return "#bdbdbd";
    case Region::TrivialBand: return "#ffffff";
    case Region::ModuliEmpty: return "none";
  }
  return "none";
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string render_geography_svg(std::int64_t g, std::int64_t d) {
  if (g < 1) throw ArgumentError("render_geography_svg: g must be >= 1");
  const GeographyTable t = build_table(g, d);
  const auto roots = boundary_roots(g, t.beta);
  const std::int64_t top = t.r_max + 1;  // R value drawn at y = 0
  const long double x_lo = -1, y_lo = -1;
  const long double width = static_cast<long double>(t.k_max + 3);
  const long double height = static_cast<long double>(top + 3);
  auto Y = [&](long double r) { return static_cast<long double>(top) - r; };

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" << num(x_lo) << ' '
     << num(y_lo) << ' ' << num(width) << ' ' << num(height) << "\" width=\"" << num(width * 60)
     << "\" height=\"" << num(height * 60) << "\">\n";
  os << "<title>Brill-Noether geography, g = " << g << ", d = " << d << ", beta = " << t.beta
     << "</title>\n";
  os << "<defs><clipPath id=\"plot\"><rect x=\"-0.5\" y=\"-0.5\" width=\"" << num(width - 1)
     << "\" height=\"" << num(height - 1) << "\"/></clipPath></defs>\n";
  os << "<rect x=\"" << num(x_lo) << "\" y=\"" << num(y_lo) << "\" width=\"" << num(width)
     << "\" height=\"" << num(height) << "\" fill=\"#ffffff\"/>\n";

  // Axes and integer ticks.
  os << "<g id=\"axes\" stroke=\"#000000\" stroke-width=\"0.03\">\n"
     << "<line id=\"axis-K\" x1=\"-0.5\" y1=\"" << num(Y(0)) << "\" x2=\"" << num(t.k_max + 1)
     << "\" y2=\"" << num(Y(0)) << "\"/>\n"
     << "<line id=\"axis-R\" x1=\"0\" y1=\"" << num(Y(-0.5L)) << "\" x2=\"0\" y2=\"" << num(Y(top))
     << "\"/>\n</g>\n";
  os << "<g id=\"labels\" font-family=\"sans-serif\" font-size=\"0.3\" text-anchor=\"middle\">\n";
  for (std::int64_t k = 0; k <= t.k_max; ++k) {
    os << "<text x=\"" << num(k) << "\" y=\"" << num(Y(-0.6L)) << "\">" << k << "</text>\n";
  }
  for (std::int64_t r = 0; r <= t.r_max; ++r) {
    os << "<text x=\"-0.5\" y=\"" << num(Y(r) + 0.1L) << "\">" << r << "</text>\n";
  }
  os << "<text x=\"" << num(t.k_max + 1.5L) << "\" y=\"" << num(Y(0) + 0.1L) << "\">K</text>\n"
     << "<text x=\"0\" y=\"" << num(Y(top) - 0.3L) << "\">R</text>\n</g>\n";

  // K = 2R + beta and the D1 boundary K - R = r0 + beta (= k1).
  const long double r_a = -0.5L, r_b = static_cast<long double>(top) + 0.5L;
  const long double beta = static_cast<long double>(t.beta);
  const long double k1 = roots.k1.approx();
  os << "<g clip-path=\"url(#plot)\" fill=\"none\" stroke-width=\"0.04\">\n";
  os << "<line id=\"line-chi\" stroke=\"#2b83ba\" x1=\"" << num(2 * r_a + beta) << "\" y1=\""
     << num(Y(r_a)) << "\" x2=\"" << num(2 * r_b + beta) << "\" y2=\"" << num(Y(r_b))
     << "\"><title>K = 2R + (" << t.beta << ")</title></line>\n";
  os << "<line id=\"boundary-D1\" stroke=\"#fdae61\" stroke-dasharray=\"0.1 0.1\" x1=\""
     << num(r_a + k1) << "\" y1=\"" << num(Y(r_a)) << "\" x2=\"" << num(r_b + k1) << "\" y2=\""
     << num(Y(r_b)) << "\"><title>K - R = " << escape(roots.k1.to_string())
     << "</title></line>\n";
  os << "</g>\n";

  // Root markers.
  os << "<g id=\"markers\" stroke=\"#d7191c\" stroke-width=\"0.05\">\n";
  const std::pair<const char*, const QuadraticSurd*> k_markers[] = {
      {"k1", &roots.k1}, {"k2", &roots.k2}, {"k0", &roots.k0}};
  for (const auto& [name, value] : k_markers) {
    const std::string x = num(value->approx());
    os << "<line id=\"marker-" << name << "\" x1=\"" << x << "\" y1=\"" << num(Y(0) - 0.25L)
       << "\" x2=\"" << x << "\" y2=\"" << num(Y(0) + 0.25L) << "\"><title>" << name << " = "
       << escape(value->to_string()) << " ~ " << num(value->approx()) << "</title></line>\n";
  }
  const std::string y0 = num(Y(roots.r0.approx()));
  os << "<line id=\"marker-r0\" x1=\"-0.25\" y1=\"" << y0 << "\" x2=\"0.25\" y2=\"" << y0
     << "\"><title>r0 = " << escape(roots.r0.to_string()) << " ~ " << num(roots.r0.approx())
     << "</title></line>\n</g>\n";

  // Lattice points.
  os << "<g id=\"points\" stroke=\"#000000\" stroke-width=\"0.02\">\n";
  for (const auto& c : t.cells) {
    os << "<circle cx=\"" << num(c.k) << "\" cy=\"" << num(Y(c.r)) << "\" r=\"0.12\" fill=\""
       << fill_for(c.region) << "\"><title>(k,r) = (" << c.k << "," << c.r << ") "
       << to_string(c.region);
    if (c.vdim) os << ", vdim " << *c.vdim;
    os << "</title></circle>\n";
  }
  os << "</g>\n";

  // Legend.
  os << "<g id=\"legend\" font-family=\"sans-serif\" font-size=\"0.25\">\n";
  const Region legend[] = {Region::D0, Region::D1, Region::D2, Region::D3, Region::TrivialBand};
  long double ly = -0.7L;
  for (Region region : legend) {
    os << "<circle cx=\"" << num(t.k_max + 0.8L) << "\" cy=\"" << num(ly)
       << "\" r=\"0.08\" stroke=\"#000000\" stroke-width=\"0.02\" fill=\"" << fill_for(region)
       << "\"/><text x=\"" << num(t.k_max + 1.0L) << "\" y=\"" << num(ly + 0.08L) << "\">"
       << to_string(region) << "</text>\n";
    ly += 0.35L;
  }
  os << "</g>\n</svg>\n";
  return os.str();
}

}  // namespace k3bn
