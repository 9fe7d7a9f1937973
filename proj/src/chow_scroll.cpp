#include "k3bn/chow_scroll.hpp"

#include <algorithm>
#include <cctype>

#include "k3bn/errors.hpp"

namespace k3bn::scroll {

namespace {

bool reducible(const Term& t) { return t.l >= 2 || t.m >= 3; }

void check_degree(const Term& t) {
  if (t.m < 0 || t.l < 0 || t.m + t.l > 3) {
    throw DegreeError("scroll: monomial M^" + std::to_string(t.m) + " L^" + std::to_string(t.l) +
                      " has degree " + std::to_string(t.m + t.l) + ", outside 0..3");
  }
}

}  // namespace

ScrollClass reduce(std::vector<Term> terms,
                   const std::function<std::size_t(std::size_t)>& choose) {
  for (const auto& t : terms) check_degree(t);
  for (;;) {
    std::vector<std::size_t> pending;
    for (std::size_t i = 0; i < terms.size(); ++i) {
      if (terms[i].coeff != 0 && reducible(terms[i])) pending.push_back(i);
    }
    if (pending.empty()) break;
    Term& t = terms[pending[choose(pending.size()) % pending.size()]];
    if (t.l >= 2) {
      t.coeff = 0;
    } else {
      // M^3 = 3 M^2 L; in degree <= 3 this only fires on M^3 itself.
      t.coeff *= 3;
      t.m -= 1;
      t.l += 1;
    }
  }
  ScrollClass out;
  for (const auto& t : terms) {
    if (t.coeff == 0) continue;
    out.c_[t.m][t.l] += t.coeff;
  }
  return out;
}

ScrollClass ScrollClass::from_terms(std::vector<Term> terms) {
  if (terms.empty()) return {};
  return reduce(std::move(terms), [](std::size_t) { return std::size_t{0}; });
}

ScrollClass ScrollClass::M() { return from_terms({{1, 1, 0}}); }
ScrollClass ScrollClass::L() { return from_terms({{1, 0, 1}}); }
ScrollClass ScrollClass::constant(std::int64_t c) { return from_terms({{c, 0, 0}}); }

std::int64_t ScrollClass::coeff(int m, int l) const {
  if (m < 0 || l < 0 || m + l > 3) return 0;
  return c_[m][l];
}

bool ScrollClass::is_zero() const { return *this == ScrollClass{}; }

int ScrollClass::degree() const {
  int deg = 0;
  for (int m = 0; m <= 3; ++m) {
    for (int l = 0; m + l <= 3; ++l) {
      if (c_[m][l] != 0) deg = std::max(deg, m + l);
    }
  }
  return deg;
}

bool ScrollClass::is_homogeneous() const {
  const int deg = degree();
  for (int m = 0; m <= 3; ++m) {
    for (int l = 0; m + l <= 3; ++l) {
      if (c_[m][l] != 0 && m + l != deg) return false;
    }
  }
  return true;
}

std::string ScrollClass::to_string() const {
  std::string out;
  // Highest degree first, M before L within a degree.
  for (int deg = 3; deg >= 0; --deg) {
    for (int m = deg; m >= 0; --m) {
      const int l = deg - m;
      const std::int64_t c = c_[m][l];
      if (c == 0) continue;
      std::string mono;
      if (m == 1) mono += "M";
      if (m > 1) mono += "M^" + std::to_string(m);
      if (l == 1) mono += "L";
      if (l > 1) mono += "L^" + std::to_string(l);
      const std::int64_t mag = c < 0 ? -c : c;
      if (c < 0) {
        out += "-";
      } else if (!out.empty()) {
        out += "+";
      }
      if (mag != 1 || mono.empty()) out += std::to_string(mag);
      out += mono;
    }
  }
  return out.empty() ? "0" : out;
}

ScrollClass operator+(const ScrollClass& a, const ScrollClass& b) {
  ScrollClass out = a;
  for (int m = 0; m <= 3; ++m) {
    for (int l = 0; m + l <= 3; ++l) out.c_[m][l] += b.c_[m][l];
  }
  return out;
}

ScrollClass operator-(const ScrollClass& a) { return -1 * a; }

ScrollClass operator-(const ScrollClass& a, const ScrollClass& b) { return a + (-b); }

ScrollClass operator*(std::int64_t c, const ScrollClass& a) {
  ScrollClass out = a;
  for (auto& row : out.c_) {
    for (auto& v : row) v *= c;
  }
  return out;
}

ScrollClass operator*(const ScrollClass& a, const ScrollClass& b) {
  const int da = a.degree();
  const int db = b.degree();
  if (da + db > 3) {
    throw DegreeError("scroll: product of classes of degree " + std::to_string(da) + " and " +
                      std::to_string(db) + " exceeds dimension 3");
  }
  std::vector<Term> terms;
  for (int m1 = 0; m1 <= 3; ++m1) {
    for (int l1 = 0; m1 + l1 <= 3; ++l1) {
      if (a.c_[m1][l1] == 0) continue;
      for (int m2 = 0; m2 <= 3; ++m2) {
        for (int l2 = 0; m2 + l2 <= 3; ++l2) {
          if (b.c_[m2][l2] == 0) continue;
          terms.push_back({a.c_[m1][l1] * b.c_[m2][l2], m1 + m2, l1 + l2});
        }
      }
    }
  }
  return ScrollClass::from_terms(std::move(terms));
}

ScrollClass multiply(const ScrollClass& a, const ScrollClass& b) { return a * b; }

std::int64_t intersection_number(const ScrollClass& a, const ScrollClass& b,
                                 const ScrollClass& c) {
  int idx = 0;
  for (const ScrollClass* f : {&a, &b, &c}) {
    ++idx;
    if (f->is_zero()) continue;  // contributes zero; degree is immaterial
    if (f->degree() != 1 || !f->is_homogeneous()) {
      throw DegreeError("intersection_number: factor " + std::to_string(idx) + " (" +
                        f->to_string() + ") is not a divisor class");
    }
  }
  return (a * b * c).top_degree();
}

ScrollClass anticanonical_class() { return 3 * ScrollClass::M() - ScrollClass::L(); }
ScrollClass canonical_class() { return -anticanonical_class(); }

ScrollClass class_D() { return ScrollClass::M(); }

ScrollClass class_R() {
  const auto M = ScrollClass::M();
  const auto L = ScrollClass::L();
  return (M - L) * (M - 2 * L);
}

ScrollClass class_S() { return anticanonical_class(); }

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  ScrollClass parse() {
    std::vector<Term> terms;
    skip_ws();
    if (at_end()) fail("empty class");
    bool first = true;
    while (!at_end()) {
      std::int64_t sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = get() == '-' ? -1 : 1;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      terms.push_back(term(sign));
      first = false;
      skip_ws();
    }
    return ScrollClass::from_terms(std::move(terms));
  }

 private:
  Term term(std::int64_t sign) {
    Term t{sign, 0, 0};
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      t.coeff *= number();
      have_coeff = true;
      skip_ws();
      if (peek() == '*') {
        get();
        skip_ws();
      }
    }
    bool have_symbol = false;
    while (peek() == 'M' || peek() == 'L') {
      const char sym = get();
      int exponent = 1;
      skip_ws();
      if (peek() == '^') {
        get();
        skip_ws();
        const std::int64_t e = number();
        if (e > 3) fail("exponent above 3");
        exponent = static_cast<int>(e);
        skip_ws();
      }
      (sym == 'M' ? t.m : t.l) += exponent;
      have_symbol = true;
      if (peek() == '*') {
        get();
        skip_ws();
      }
    }
    if (!have_coeff && !have_symbol) fail("expected a coefficient or M/L");
    return t;
  }

  std::int64_t number() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected digits");
    std::int64_t v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (get() - '0');
      if (v > 1'000'000'000'000LL) fail("number too large");
    }
    return v;
  }

  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("scroll class '" + std::string(text_) + "': " + why + " at offset " +
                     std::to_string(pos_));
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  char get() { return text_[pos_++]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

ScrollClass parse_class(std::string_view text) { return Parser(text).parse(); }

}  // namespace k3bn::scroll
