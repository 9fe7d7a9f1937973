#include "k3bn/verify.hpp"

#include <algorithm>
#include <sstream>

#include "k3bn/chow_scroll.hpp"
#include "k3bn/geography.hpp"
#include "k3bn/lattice.hpp"

namespace k3bn {

GoldenData golden_examples() {
  GoldenData data;
  // Example tables, (r, k, vdim, symbol).
  data.tables.push_back({3, 3, 2, 3,
                         {{2, 3, 2, '*'},
                          {1, 1, 6, '*'}, {1, 2, 4, '*'}, {1, 3, 0, '!'},
                          {0, 0, 6, '*'}, {0, 1, 4, '*'}, {0, 2, 0, '!'}},
                         {}});
  data.tables.push_back({4, 5, 3, 4,
                         {{3, 4, 2, '*'},
                          {2, 2, 8, '*'}, {2, 3, 5, '*'}, {2, 4, 0, '!'},
                          {1, 0, 10, '*'}, {1, 1, 9, '*'}, {1, 2, 6, '*'}, {1, 3, 1, '!'},
                          {0, 0, 8, '*'}, {0, 1, 5, '*'}, {0, 2, 0, '!'}},
                         {}});
  data.tables.push_back({5, 5, 2, 4,
                         {{2, 3, 6, '*'}, {2, 4, 2, '!'},
                          {1, 1, 10, '*'}, {1, 2, 8, '*'}, {1, 3, 4, '!'},
                          {0, 0, 10, '*'}, {0, 1, 8, '*'}, {0, 2, 4, '!'}},
                         {}});
  // r = 0, k = 0 is printed blank; build_table puts vdim 2g = 10 there.
  data.tables.push_back({5, 4, 2, 4,
                         {{2, 4, 2, '*'},
                          {1, 2, 8, '*'}, {1, 3, 5, '*'}, {1, 4, 0, '!'},
                          {0, 1, 9, '*'}, {0, 2, 6, '*'}, {0, 3, 1, '!'}},
                         {{0, 0}}});
  data.tables.push_back({6, 6, 3, 5,
                         {{3, 5, 0, '*'},
                          {2, 3, 8, '*'}, {2, 4, 4, '*'},
                          {1, 1, 12, '*'}, {1, 2, 10, '*'}, {1, 3, 6, '*'}, {1, 4, 0, '!'},
                          {0, 0, 12, '*'}, {0, 1, 10, '*'}, {0, 2, 6, '*'}, {0, 3, 0, '!'}},
                         {}});

  data.chow = {{"M", "M", "M", 3},
               {"M", "M", "L", 1},
               {"M-L", "M-2L", "3M-L", -1},
               {"M", "M", "3M-L", 8}};

  // Genus-2 lattice in the basis (B, Gamma); a = 2B + Gamma.
  data.lattices.push_back({"genus-2 lattice, a = 2B+Gamma",
                           {{2, 1}, {1, -2}},
                           {2, 1},
                           6,
                           10,
                           {{{1, 0}, 5}, {{0, 1}, 0}}});
  data.lattices.push_back({"sublattice [[8,3],[3,0]], a = (1,0)",
                           {{8, 3}, {3, 0}},
                           {1, 0},
                           5,
                           8,
                           {{{0, 1}, 3}}});
  return data;
}

namespace {

std::string where(const GoldenTable& t, std::int64_t r, std::int64_t k) {
  std::ostringstream os;
  os << "g=" << t.g << " d=" << t.d << " r=" << r << " k=" << k;
  return os.str();
}

// The source marks points of the raw D1 inequality with '*', including the
// D0 overlap that classify() assigns to D0.
bool raw_d1(std::int64_t k, std::int64_t r, std::int64_t g, std::int64_t d) {
  const std::int64_t beta = g - 1 - d;
  const std::int64_t m = k - r - beta;
  return m <= 0 || g - m * (m + beta) >= 0;
}

bool symbol_matches(const Cell& c, char expected, const GoldenTable& t) {
  if (c.symbol == expected) return true;
  return c.region == Region::D0 && expected == '*' && raw_d1(c.k, c.r, t.g, t.d);
}

std::string show(const Cell& c) {
  std::string s = c.displayed() ? std::to_string(*c.vdim) : "blank";
  return s + " '" + c.symbol + "'";
}

ReportItem check_table(const GoldenTable& gt) {
  ReportItem item;
  item.name = "table g=" + std::to_string(gt.g) + " d=" + std::to_string(gt.d);
  auto fail = [&](const std::string& why) {
    item.detail = why;
    return item;
  };
  GeographyTable t;
  try {
    t = build_table(gt.g, gt.d, std::max<std::int64_t>(gt.k_last, 0));
  } catch (const std::exception& e) {
    return fail(e.what());
  }
  if (t.r_max != gt.top_row) {
    return fail("g=" + std::to_string(gt.g) + " d=" + std::to_string(gt.d) + ": top row r=" +
                std::to_string(t.r_max) + ", expected r=" + std::to_string(gt.top_row));
  }
  for (std::int64_t r = 0; r <= t.r_max; ++r) {
    if (!moduli_dim(r, gt.g, gt.d)) return fail(where(gt, r, 0) + ": row has empty moduli");
  }
  for (std::int64_t r = 0; r <= gt.top_row; ++r) {
    for (std::int64_t k = 0; k <= gt.k_last; ++k) {
      const Cell& c = t.at(r, k);
      auto it = std::find_if(gt.cells.begin(), gt.cells.end(),
                             [&](const GoldenCell& gc) { return gc.r == r && gc.k == k; });
      if (it != gt.cells.end()) {
        if (!c.displayed() || *c.vdim != it->vdim || !symbol_matches(c, it->symbol, gt)) {
          return fail(where(gt, r, k) + ": got " + show(c) + ", expected " +
                      std::to_string(it->vdim) + " '" + it->symbol + "'");
        }
        continue;
      }
      const bool excepted =
          std::find(gt.blank_exceptions.begin(), gt.blank_exceptions.end(),
                    std::pair{r, k}) != gt.blank_exceptions.end();
      if (!excepted && (c.displayed() || c.symbol != ' ')) {
        return fail(where(gt, r, k) + ": got " + show(c) + ", expected blank");
      }
    }
  }
  item.passed = true;
  return item;
}

ReportItem check_chow(const GoldenChow& gc) {
  ReportItem item;
  item.name = "chow (" + gc.a + ")(" + gc.b + ")(" + gc.c + ")";
  try {
    const auto v = scroll::intersection_number(scroll::parse_class(gc.a), scroll::parse_class(gc.b),
                                               scroll::parse_class(gc.c));
    item.passed = v == gc.value;
    if (!item.passed) {
      item.detail = "got " + std::to_string(v) + ", expected " + std::to_string(gc.value);
    }
  } catch (const std::exception& e) {
    item.detail = e.what();
  }
  return item;
}

ReportItem check_lattice(const GoldenLattice& gl) {
  ReportItem item;
  item.name = "lattice " + gl.name;
  try {
    const IntersectionLattice lat(gl.gram);
    const NumClass a{gl.a};
    std::ostringstream why;
    if (lat.square(a) != gl.a_squared) {
      why << "a^2 = " << lat.square(a) << ", expected " << gl.a_squared;
    } else if (genus_of_class(lat, a) != gl.genus) {
      why << "genus " << genus_of_class(lat, a) << ", expected " << gl.genus;
    } else {
      for (const auto& [b, expected] : gl.pairings) {
        const auto v = lat.pair(a, NumClass{b});
        if (v != expected) {
          why << "(a, b) = " << v << ", expected " << expected;
          break;
        }
      }
    }
    item.detail = why.str();
    item.passed = item.detail.empty();
  } catch (const std::exception& e) {
    item.detail = e.what();
  }
  return item;
}

}  // namespace

std::size_t VerificationReport::passed() const {
  return static_cast<std::size_t>(
      std::count_if(items.begin(), items.end(), [](const ReportItem& i) { return i.passed; }));
}

std::string VerificationReport::to_text() const {
  std::ostringstream os;
  for (const auto& i : items) {
    os << (i.passed ? "PASS " : "FAIL ") << i.name;
    if (!i.passed) os << ": " << i.detail;
    os << "\n";
  }
  os << passed() << "/" << items.size() << " passed\n";
  return os.str();
}

VerificationReport verify_worked_examples(const GoldenData& golden) {
  VerificationReport report;
  for (const auto& t : golden.tables) report.items.push_back(check_table(t));
  for (const auto& c : golden.chow) report.items.push_back(check_chow(c));
  for (const auto& l : golden.lattices) report.items.push_back(check_lattice(l));
  return report;
}

}  // namespace k3bn
