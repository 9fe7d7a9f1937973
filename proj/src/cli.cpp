#include "k3bn/cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>
#include <variant>

#include <CLI11.hpp>
#include <json.hpp>

#include "k3bn/bn_core.hpp"
#include "k3bn/chow_scroll.hpp"
#include "k3bn/correspondence.hpp"
#include "k3bn/errors.hpp"
#include "k3bn/geography.hpp"
#include "k3bn/lattice.hpp"
#include "k3bn/verify.hpp"

namespace k3bn::cli {

namespace {

using ordered_json = nlohmann::ordered_json;
using Value = std::variant<std::monostate, std::int64_t, bool, std::string>;

// Flat key/value output shared by the scalar subcommands.
struct Record {
  std::vector<std::pair<std::string, Value>> fields;
  bool bare = false;  // text mode prints the single value alone

  Record& add(std::string key, Value v) {
    fields.emplace_back(std::move(key), std::move(v));
    return *this;
  }
  Record& add_opt(std::string key, std::optional<std::int64_t> v) {
    return add(std::move(key), v ? Value{*v} : Value{});
  }
};

std::string text_of(const Value& v) {
  struct V {
    std::string operator()(std::monostate) const { return "none"; }
    std::string operator()(std::int64_t i) const { return std::to_string(i); }
    std::string operator()(bool b) const { return b ? "true" : "false"; }
    std::string operator()(const std::string& s) const { return s; }
  };
  return std::visit(V{}, v);
}

ordered_json json_of(const Value& v) {
  struct V {
    ordered_json operator()(std::monostate) const { return nullptr; }
    ordered_json operator()(std::int64_t i) const { return i; }
    ordered_json operator()(bool b) const { return b; }
    ordered_json operator()(const std::string& s) const { return s; }
  };
  return std::visit(V{}, v);
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string render(const Record& rec, Format format) {
  std::ostringstream os;
  switch (format) {
    case Format::Text:
      if (rec.bare && rec.fields.size() == 1) {
        os << text_of(rec.fields[0].second) << "\n";
      } else {
        for (const auto& [k, v] : rec.fields) os << k << ": " << text_of(v) << "\n";
      }
      break;
    case Format::Csv: {
      std::string head, row;
      for (std::size_t i = 0; i < rec.fields.size(); ++i) {
        const auto& [k, v] = rec.fields[i];
        const char* sep = i == 0 ? "" : ",";
        head += sep + k;
        row += sep + csv_quote(std::holds_alternative<std::monostate>(v) ? "" : text_of(v));
      }
      os << head << "\n" << row << "\n";
      break;
    }
    case Format::Json: {
      ordered_json j = ordered_json::object();
      for (const auto& [k, v] : rec.fields) j[k] = json_of(v);
      os << j.dump(2) << "\n";
      break;
    }
  }
  return os.str();
}

struct Options {
  std::int64_t g = 0, d = 0, r = 0, k = 0;
  std::int64_t r_prime = 0, k_prime = 0, r_bar = 0;
  std::optional<std::int64_t> k_max;
  Hypotheses hyp;
  std::string format = "text";
  std::string mode = "values";
  std::string out_path;
  std::string which_case;
  std::string triple;
  std::string gram, cls;
  std::vector<std::string> with;
  std::optional<std::int64_t> rank, v2;
};

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--format", o.format, "text, csv or json")
      ->check(CLI::IsMember({"text", "csv", "json"}));
  sub->add_option("--out", o.out_path, "write output to this file instead of stdout");
}

CLI::Option* need(CLI::App* sub, const std::string& name, std::int64_t& v,
                  const std::string& help) {
  return sub->add_option(name, v, help)->required();
}

void add_gd(CLI::App* sub, Options& o) {
  need(sub, "--g", o.g, "genus of a");
  need(sub, "--d", o.d, "degree; beta = g - 1 - d");
}

void add_hypotheses(CLI::App* sub, Options& o) {
  sub->add_flag("--pic-za", o.hyp.pic_is_Za, "Pic S = Z a");
  sub->add_flag("--ah-one", o.hyp.aH_is_one, "(a, H) = 1");
  sub->add_flag("--c1", o.hyp.c1, "condition C1");
  sub->add_flag("--c2", o.hyp.c2, "condition C2");
  sub->add_flag("--c3", o.hyp.c3, "condition C3 (Pic S = Z a)");
}

Record invariants(const Options& o) {
  const auto inv = NumericInvariants::of(o.r, o.g, o.d);
  Record rec;
  rec.add("r", inv.r).add("g", inv.g).add("d", inv.d);
  rec.add("beta", inv.beta).add("alpha", inv.alpha).add("chi", inv.chi);
  rec.add("rho", rho(o.r - 1, o.g, o.d));
  rec.add_opt("moduli_dim", moduli_dim(o.r, o.g, o.d));
  if (o.g >= 0) {
    const auto roots = boundary_roots(o.g, inv.beta);
    rec.add("r0", roots.r0.to_string()).add("k0", roots.k0.to_string());
    rec.add("k1", roots.k1.to_string()).add("k2", roots.k2.to_string());
  }
  return rec;
}

Record predict(const Options& o) {
  const auto p = predict_status(o.k, o.r, o.g, o.d, o.hyp);
  Record rec;
  rec.add("status", std::string(to_string(p.status)));
  rec.add("region", std::string(to_string(p.region)));
  rec.add_opt("dimension", p.dimension);
  rec.add("conjecture_nonempty", p.conjecture_nonempty);
  return rec;
}

Record interpret(const Options& o) {
  const auto li = interpret_locus(o.k, o.r, o.g, o.d);
  Record rec;
  rec.add("locus", li.to_string());
  rec.add("ambient", li.ambient(o.g, o.d));
  rec.add("unconstrained", li.unconstrained);
  return rec;
}

Record correspond_record(const Options& o) {
  const auto c = correspond(o.k_prime, o.r_prime, o.g, o.d);
  Record rec;
  rec.add("beta", c.beta);
  rec.add("r_prime", c.r_prime).add("k_prime", c.k_prime);
  rec.add("r", c.r).add("k", c.k).add("l", c.l);
  rec.add("pi1_fiber", "Gr(" + std::to_string(c.l) + "," + std::to_string(2 * c.r + c.beta) + ")");
  rec.add("pi1_fiber_dim", c.pi1_fiber_dim);
  rec.add("pi2_fiber", "Gr(" + std::to_string(c.l) + "," + std::to_string(c.l) + ")");
  rec.add("pi2_fiber_dim", c.pi2_fiber_dim);
  rec.add("pi2_surjectivity",
          c.pi2_surjectivity ? Value{std::string(to_string(*c.pi2_surjectivity))} : Value{});
  rec.add("dim_lhs", c.count.lhs).add("dim_rhs", c.count.rhs);
  rec.add("dim_equal", c.count.equal);
  rec.add("moduli_nonempty", c.count.moduli_nonempty);
  return rec;
}

Record serre(const Options& o) {
  const auto s = serre_dual_params(o.r_bar, o.g, o.d);
  Record rec;
  rec.add("r_bar", s.r_bar).add("d", s.d);
  rec.add("rho", rho(o.r_bar, o.g, o.d)).add("rho_dual", rho(s.r_bar, o.g, s.d));
  return rec;
}

Record birational(const Options& o) {
  const auto which = o.which_case == "c" ? BirationalCase::C : BirationalCase::D;
  const auto b = birational_structure(which, o.r, o.g, o.d);
  Record rec;
  rec.add("case", std::string(to_string(b.which)));
  rec.add("trichotomy", std::string(to_string(b.trichotomy)));
  rec.add("base", which == BirationalCase::C
                      ? "Pic^" + std::to_string(b.base_degree) + "(|a|)"
                      : "Hilb^" + std::to_string(b.base_degree) + "(S)");
  rec.add("bn_index", b.bn_index);
  rec.add("base_special_index", b.base_special_index);
  return rec;
}

Record case_d(const Options& o) {
  Record rec = birational(o);
  const auto f = case_d_fibers(o.k, o.r, o.g, o.d);
  rec.add("k", o.k);
  rec.add("pi1_fiber", "Gr(" + std::to_string(o.r - 1) + "," + std::to_string(f.pi1_n) + ")");
  rec.add("pi1_fiber_dim", f.pi1_dim);
  rec.add("pi2_fiber", "Gr(" + std::to_string(o.r - 1) + "," + std::to_string(f.pi2_n) + ")");
  rec.add("pi2_fiber_dim", f.pi2_dim);
  rec.add("pi2_on_boundary", f.pi2_on_boundary);
  return rec;
}

Record chow(const Options& o) {
  std::vector<std::string> parts;
  std::stringstream ss(o.triple);
  for (std::string item; std::getline(ss, item, ',');) parts.push_back(item);
  if (parts.size() != 3) {
    throw ArgumentError("chow: --triple needs three comma-separated classes, got " +
                        std::to_string(parts.size()));
  }
  const auto v = scroll::intersection_number(scroll::parse_class(parts[0]),
                                             scroll::parse_class(parts[1]),
                                             scroll::parse_class(parts[2]));
  Record rec;
  rec.bare = true;
  rec.add("intersection_number", v);
  return rec;
}

Record lattice(const Options& o) {
  const auto lat = parse_lattice_json(o.gram);
  const auto a = parse_class_json(o.cls);
  Record rec;
  rec.add("a_squared", lat.square(a));
  rec.add("genus", genus_of_class(lat, a));
  for (std::size_t i = 0; i < o.with.size(); ++i) {
    rec.add("pair_" + std::to_string(i), lat.pair(a, parse_class_json(o.with[i])));
  }
  if (o.rank || o.v2) {
    if (!o.rank || !o.v2) throw ArgumentError("lattice: --rank and --v2 go together");
    const auto e = epsilon(lat, ChernCharacter{*o.rank, a, *o.v2});
    rec.add("eps_r", e.r).add("eps_g", e.g).add("eps_d", e.d);
  }
  return rec;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Brill-Noether numerics for moduli of sheaves on K3 surfaces", "k3bn"};
  app.require_subcommand(1);
  Options o;

  auto* s_inv = app.add_subcommand("invariants", "beta, alpha, chi, rho(r-1,g,d), moduli dim, roots");
  add_gd(s_inv, o);
  need(s_inv, "--r", o.r, "rank");

  auto* s_vdim = app.add_subcommand("vdim", "expected dimension of BN_k(r, a, beta)");
  auto* s_cls = app.add_subcommand("classify", "region D0..D3 of the point (k, r)");
  auto* s_pred = app.add_subcommand("predict", "status of BN_k under the given hypotheses");
  auto* s_int = app.add_subcommand("interpret", "classical meaning of BN_k for r = 0, 1");
  for (auto* s : {s_vdim, s_cls, s_pred, s_int}) {
    add_gd(s, o);
    need(s, "--r", o.r, "rank");
    need(s, "--k", o.k, "number of sections");
  }
  add_hypotheses(s_pred, o);

  auto* s_table = app.add_subcommand("table", "geography table for fixed (g, d)");
  add_gd(s_table, o);
  s_table->add_option("--k-max", o.k_max, "last column (default ceil(k0) + 1)");
  s_table->add_option("--mode", o.mode, "values or symbols (text only)")
      ->check(CLI::IsMember({"values", "symbols"}));

  auto* s_svg = app.add_subcommand("svg", "geography picture as SVG");
  add_gd(s_svg, o);

  auto* s_corr = app.add_subcommand("correspond", "case (b) correspondence from the bottom point (k', r')");
  add_gd(s_corr, o);
  need(s_corr, "--r-prime", o.r_prime, "bottom rank r'");
  need(s_corr, "--k-prime", o.k_prime, "bottom section count k'");

  auto* s_serre = app.add_subcommand("serre", "Serre dual parameters of V^{r_bar}_d");
  add_gd(s_serre, o);
  need(s_serre, "--r-bar", o.r_bar, "index r_bar");

  auto* s_bir = app.add_subcommand("birational", "birational structure, case c or d");
  add_gd(s_bir, o);
  need(s_bir, "--r", o.r, "rank (>= 2)");
  s_bir->add_option("--case", o.which_case, "c or d")->required()->check(CLI::IsMember({"c", "d"}));
  auto* bir_k = s_bir->add_option("--k", o.k, "case d: also report the fibers over BN_k");

  auto* s_chow = app.add_subcommand("chow", "intersection number on the scroll F(0,1,2)");
  s_chow->add_option("--triple", o.triple, "three divisor classes, e.g. \"M-L,M-2L,3M-L\"")
      ->required();

  auto* s_lat = app.add_subcommand("lattice", "square, genus and pairings of a class");
  s_lat->add_option("--gram", o.gram, "JSON Gram matrix")->required();
  s_lat->add_option("--class", o.cls, "JSON coordinates of a")->required();
  s_lat->add_option("--with", o.with, "JSON coordinates of b; prints (a, b); repeatable")
      ->allow_extra_args(false);
  s_lat->add_option("--rank", o.rank, "rank r of v = (r, a, v2)");
  s_lat->add_option("--v2", o.v2, "v2 of v = (r, a, v2); prints epsilon(v)");

  auto* s_ver = app.add_subcommand("verify", "regenerate the worked examples");

  for (auto* s : app.get_subcommands({})) add_common(s, o);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  std::string document;
  int code = 0;
  try {
    const Format format = format_from_string(o.format);
    if (*s_inv) document = render(invariants(o), format);
    if (*s_vdim) {
      Record rec;
      rec.bare = true;
      rec.add_opt("vdim", vdim_bn(o.k, o.r, o.g, o.d));
      document = render(rec, format);
    }
    if (*s_cls) {
      Record rec;
      rec.bare = true;
      rec.add("region", std::string(to_string(classify(o.k, o.r, o.g, o.d))));
      document = render(rec, format);
    }
    if (*s_pred) document = render(predict(o), format);
    if (*s_int) document = render(interpret(o), format);
    if (*s_table) {
      document = render_table(build_table(o.g, o.d, o.k_max), format, mode_from_string(o.mode));
    }
    if (*s_svg) document = render_geography_svg(o.g, o.d);
    if (*s_corr) document = render(correspond_record(o), format);
    if (*s_serre) document = render(serre(o), format);
    if (*s_bir) {
      if (bir_k->count() > 0 && o.which_case != "d") {
        throw ArgumentError("birational: --k only applies to --case d");
      }
      document = render(bir_k->count() > 0 ? case_d(o) : birational(o), format);
    }
    if (*s_chow) document = render(chow(o), format);
    if (*s_lat) document = render(lattice(o), format);
    if (*s_ver) {
      const auto report = verify_worked_examples();
      if (format == Format::Json) {
        ordered_json j;
        j["passed"] = report.passed();
        j["total"] = report.items.size();
        j["items"] = ordered_json::array();
        for (const auto& i : report.items) {
          j["items"].push_back({{"name", i.name}, {"passed", i.passed}, {"detail", i.detail}});
        }
        document = j.dump(2) + "\n";
      } else {
        document = report.to_text();
      }
      code = report.all_passed() ? 0 : 1;
    }
  } catch (const ArgumentError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const HypothesisError& e) {
    err << "error: missing hypothesis " << e.hypothesis() << ": " << e.what() << "\n";
    return 2;
  }

  if (o.out_path.empty()) {
    out << document;
  } else {
    std::ofstream f(o.out_path, std::ios::binary);
    if (!f || !(f << document)) {
      err << "error: cannot write " << o.out_path << "\n";
      return 2;
    }
  }
  return code;
}

}  // namespace k3bn::cli
