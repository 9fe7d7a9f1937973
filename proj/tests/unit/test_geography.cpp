#include <map>
#include <regex>
#include <sstream>

#include <gtest/gtest.h>
#include <json.hpp>

#include "k3bn/errors.hpp"
#include "k3bn/geography.hpp"

using namespace k3bn;

namespace {

using Values = std::map<std::pair<std::int64_t, std::int64_t>, std::int64_t>;

Values displayed_values(const GeographyTable& t) {
  Values out;
  for (const auto& c : t.cells) {
    if (c.displayed()) out[{c.r, c.k}] = *c.vdim;
  }
  return out;
}

std::string attr_of(const std::string& svg, const std::string& id, const std::string& attr) {
  const std::regex re("id=\"" + id + "\"[^>]*?" + attr + "=\"([^\"]*)\"");
  std::smatch m;
  if (!std::regex_search(svg, m, re)) return {};
  return m[1];
}

}  // namespace

TEST(Geography, TableG3D3) {
  const auto t = build_table(3, 3);
  EXPECT_EQ(t.r_max, 2);
  EXPECT_EQ(t.k_max, 5);  // ceil(sqrt 13) + 1
  const Values expected = {{{2, 3}, 2}, {{1, 1}, 6}, {{1, 2}, 4}, {{1, 3}, 0},
                           {{0, 0}, 6}, {{0, 1}, 4}, {{0, 2}, 0}};
  EXPECT_EQ(displayed_values(t), expected);
  EXPECT_EQ(t.at(1, 3).symbol, '!');
  EXPECT_EQ(t.at(0, 1).symbol, '*');
}

TEST(Geography, TableG6D6) {
  const auto t = build_table(6, 6, 5);
  EXPECT_EQ(t.r_max, 3);
  const Values expected = {{{3, 5}, 0}, {{2, 3}, 8}, {{2, 4}, 4}, {{1, 1}, 12},
                           {{1, 2}, 10}, {{1, 3}, 6}, {{1, 4}, 0}, {{0, 0}, 12},
                           {{0, 1}, 10}, {{0, 2}, 6}, {{0, 3}, 0}};
  EXPECT_EQ(displayed_values(t), expected);
}

TEST(Geography, TableG5D4) {
  const auto t = build_table(5, 4, 4);
  // r = 0, k = 0 is filled in (D1, 2g) although chi = 0 <= k
  const Values expected = {{{2, 4}, 2}, {{1, 2}, 8}, {{1, 3}, 5}, {{1, 4}, 0},
                           {{0, 0}, 10}, {{0, 1}, 9}, {{0, 2}, 6}, {{0, 3}, 1}};
  EXPECT_EQ(displayed_values(t), expected);
  EXPECT_EQ(t.at(0, 0).region, Region::D1);
}

TEST(Geography, SymbolsG4D5) {
  const auto text = render_table(build_table(4, 5, 4), Format::Text, Mode::Symbols);
  const std::string expected =
      "g = 4, d = 5, beta = -2\n"
      "r |\n"
      "3 |         *\n"
      "2 |     * * !\n"
      "1 |   * * !\n"
      "0 | * * !\n"
      "--+-----------\n"
      "  | 0 1 2 3 4  k\n";
  EXPECT_EQ(text, expected);
}

TEST(Geography, ValuesText) {
  const auto text = render_table(build_table(6, 6, 5), Format::Text, Mode::Values);
  EXPECT_NE(text.find("3 |                 0\n"), std::string::npos) << text;
  EXPECT_NE(text.find("0 | 12 10  6  0\n"), std::string::npos) << text;
}

TEST(Geography, SymbolInvariants) {
  for (auto [g, d] : std::vector<std::pair<int, int>>{{3, 3}, {4, 5}, {5, 5}, {5, 4}, {6, 6}, {9, 2}, {12, 15}}) {
    const auto t = build_table(g, d);
    EXPECT_EQ(t.cells.size(), static_cast<std::size_t>((t.r_max + 1) * (t.k_max + 1)));
    for (std::int64_t r = 0; r <= t.r_max; ++r) EXPECT_TRUE(moduli_dim(r, g, d).has_value());
    for (const auto& c : t.cells) {
      EXPECT_EQ(c.symbol == '*', c.region == Region::D1 && c.vdim.has_value());
      EXPECT_EQ(c.symbol == '!', c.region == Region::D2);
      if (c.region == Region::D1 || c.region == Region::D2) EXPECT_GE(*c.vdim, 0);
      if (c.region == Region::D3) EXPECT_LT(*c.vdim, 0);
    }
  }
}

TEST(Geography, CsvAndJson) {
  const auto t = build_table(4, 5);
  const auto csv = render_table(t, Format::Csv);
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "r,k,vdim,region,symbol,interpretation");
  std::size_t rows = 0;
  while (std::getline(in, line)) ++rows;
  EXPECT_EQ(rows, static_cast<std::size_t>((t.r_max + 1) * (t.k_max + 1)));
  EXPECT_NE(csv.find("2,4,0,D2,!,\"BN_4(2,a,-2)\"\n"), std::string::npos);

  const auto json = render_table(t, Format::Json);
  EXPECT_EQ(table_from_json(json), t);
  const auto doc = nlohmann::json::parse(json);
  EXPECT_EQ(doc["cells"].size(), t.cells.size());
  EXPECT_EQ(doc["g"], 4);
  EXPECT_THROW(table_from_json("{"), ParseError);
  EXPECT_THROW(table_from_json(R"({"g":1})"), ParseError);
}

TEST(Geography, JsonRoundTripMany) {
  for (int g = 0; g <= 12; ++g) {
    for (int d = -2; d <= 14; ++d) {
      const auto t = build_table(g, d);
      ASSERT_EQ(table_from_json(render_table(t, Format::Json)), t);
    }
  }
}

TEST(Geography, FormatNames) {
  EXPECT_EQ(format_from_string("csv"), Format::Csv);
  EXPECT_EQ(mode_from_string("symbols"), Mode::Symbols);
  EXPECT_THROW(format_from_string("xml"), ArgumentError);
  EXPECT_THROW(mode_from_string("dots"), ArgumentError);
  EXPECT_THROW(build_table(-1, 0), ArgumentError);
}

TEST(Svg, MarkersAndDeterminism) {
  const auto a = render_geography_svg(3, 3);
  EXPECT_EQ(a, render_geography_svg(3, 3));
  EXPECT_EQ(a.rfind("<?xml", 0), 0u);
  EXPECT_NE(a.find("version=\"1.1\""), std::string::npos);
  EXPECT_EQ(attr_of(a, "marker-k0", "x1"), "3.6056");  // 2 r0 + beta = sqrt 13
  EXPECT_EQ(attr_of(a, "marker-k2", "x1"), "2.0000");
  EXPECT_NE(a.find("r0 = (1+sqrt(13))/2 ~ 2.3028"), std::string::npos);
  EXPECT_EQ(a.find("http://", a.find("<svg") + 50), std::string::npos);

  const auto b = render_geography_svg(6, 6);
  // y = (r_max + 1) - R with r_max = 3, so R = 3 sits at y = 1
  EXPECT_EQ(attr_of(b, "marker-r0", "y1"), "1.0000");
  EXPECT_NE(b.find("r0 = 3 ~ 3.0000"), std::string::npos);
  EXPECT_THROW(render_geography_svg(0, 0), ArgumentError);
}
