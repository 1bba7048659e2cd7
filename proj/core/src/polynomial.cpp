#include "knotid/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <set>
#include <utility>

namespace knotid {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw CoefficientOverflow("polynomial coefficient overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw CoefficientOverflow("polynomial coefficient overflow");
  return r;
}

bool term_less(const Term& a, const Term& b) {
  return a.m_exp != b.m_exp ? a.m_exp < b.m_exp : a.l_exp < b.l_exp;
}

// Sort, combine like terms and drop zeros.
std::vector<Term> normalize(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), term_less);
  std::vector<Term> out;
  out.reserve(terms.size());
  for (const auto& t : terms) {
    if (!out.empty() && out.back().m_exp == t.m_exp && out.back().l_exp == t.l_exp) {
      out.back().coeff = checked_add(out.back().coeff, t.coeff);
    } else {
      out.push_back(t);
    }
  }
  std::erase_if(out, [](const Term& t) { return t.coeff == 0; });
  return out;
}

std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, std::int64_t b_scale) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && term_less(a[i], b[j]))) {
      out.push_back(a[i++]);
    } else if (i == a.size() || term_less(b[j], a[i])) {
      Term t = b[j++];
      t.coeff = checked_mul(t.coeff, b_scale);
      out.push_back(t);
    } else {
      Term t = a[i];
      t.coeff = checked_add(t.coeff, checked_mul(b[j].coeff, b_scale));
      if (t.coeff != 0) out.push_back(t);
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

LMPolynomial LMPolynomial::constant(std::int64_t c) { return monomial(c, 0, 0); }

LMPolynomial LMPolynomial::monomial(std::int64_t coeff, int l_exp, int m_exp) {
  LMPolynomial p;
  if (coeff != 0) p.terms_.push_back(Term{m_exp, l_exp, coeff});
  return p;
}

LMPolynomial LMPolynomial::from_terms(std::vector<Term> terms) {
  LMPolynomial p;
  p.terms_ = normalize(std::move(terms));
  return p;
}

LMPolynomial LMPolynomial::split_factor() {
  return from_terms({Term{-1, 1, -1}, Term{-1, -1, -1}});
}

LMPolynomial& LMPolynomial::operator+=(const LMPolynomial& rhs) {
  terms_ = merge(terms_, rhs.terms_, 1);
  return *this;
}

LMPolynomial& LMPolynomial::operator-=(const LMPolynomial& rhs) {
  terms_ = merge(terms_, rhs.terms_, -1);
  return *this;
}

LMPolynomial LMPolynomial::operator-() const {
  LMPolynomial out = *this;
  for (auto& t : out.terms_) t.coeff = checked_mul(t.coeff, -1);
  return out;
}

LMPolynomial operator*(const LMPolynomial& lhs, const LMPolynomial& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  std::vector<Term> prod;
  prod.reserve(lhs.terms_.size() * rhs.terms_.size());
  for (const auto& a : lhs.terms_) {
    for (const auto& b : rhs.terms_) {
      prod.push_back(Term{a.m_exp + b.m_exp, a.l_exp + b.l_exp, checked_mul(a.coeff, b.coeff)});
    }
  }
  LMPolynomial out;
  out.terms_ = normalize(std::move(prod));
  return out;
}

LMPolynomial poly_add(const LMPolynomial& p, const LMPolynomial& q) { return p + q; }

LMPolynomial poly_mul(const LMPolynomial& p, const LMPolynomial& q) { return p * q; }

LMPolynomial poly_mono_mul(const LMPolynomial& p, std::int64_t coeff, int dl, int dm) {
  if (coeff == 0) return {};
  std::vector<Term> out = p.terms();
  for (auto& t : out) {
    t.coeff = checked_mul(t.coeff, coeff);
    t.l_exp += dl;
    t.m_exp += dm;
  }
  // A uniform shift keeps the order.
  return LMPolynomial::from_terms(std::move(out));
}

LMPolynomial poly_pow(const LMPolynomial& p, unsigned n) {
  LMPolynomial result = LMPolynomial::constant(1);
  for (unsigned i = 0; i < n; ++i) result = result * p;
  return result;
}

LMPolynomial l_inverse_substitute(const LMPolynomial& p) {
  std::vector<Term> out = p.terms();
  for (auto& t : out) t.l_exp = -t.l_exp;
  return LMPolynomial::from_terms(std::move(out));
}

namespace {

void append_power(std::string& out, char var, int exp) {
  if (exp == 0) return;
  out.push_back(var);
  if (exp != 1) {
    out.push_back('^');
    out += std::to_string(exp);
  }
}

}  // namespace

std::string format_poly(const LMPolynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    const bool negative = t.coeff < 0;
    if (first) {
      if (negative) out.push_back('-');
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    // |INT64_MIN| is not representable; such a coefficient only arises from
    // overflowing arithmetic, which throws earlier.
    const std::uint64_t mag =
        negative ? static_cast<std::uint64_t>(-(t.coeff + 1)) + 1 : static_cast<std::uint64_t>(t.coeff);
    const bool bare = t.m_exp == 0 && t.l_exp == 0;
    if (bare || mag != 1) out += std::to_string(mag);
    append_power(out, 'M', t.m_exp);
    append_power(out, 'L', t.l_exp);
  }
  return out;
}

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view s) : s_(s) {}

  LMPolynomial parse() {
    skip_space();
    if (at_end()) fail("empty polynomial");
    if (s_.substr(pos_) == "0") return {};
    std::vector<Term> terms;
    std::set<std::pair<int, int>> exps;
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      ++pos_;
    }
    for (;;) {
      Term t = term(negative);
      if (!exps.insert({t.m_exp, t.l_exp}).second) fail("duplicate exponent pair");
      terms.push_back(t);
      skip_space();
      if (at_end()) break;
      const char op = peek();
      if (op != '+' && op != '-') fail("expected '+' or '-'");
      negative = op == '-';
      ++pos_;
      skip_space();
    }
    return LMPolynomial::from_terms(std::move(terms));
  }

 private:
  Term term(bool negative) {
    Term t;
    const std::size_t start = pos_;
    std::uint64_t mag = 1;
    bool has_number = false;
    if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      mag = number();
      has_number = true;
    }
    bool has_var = false;
    if (!at_end() && peek() == 'M') {
      ++pos_;
      t.m_exp = exponent();
      has_var = true;
    }
    if (!at_end() && peek() == 'L') {
      ++pos_;
      t.l_exp = exponent();
      has_var = true;
    }
    if (!has_number && !has_var) fail("malformed term");
    if (has_var && (t.m_exp == 0 && t.l_exp == 0)) fail("zero exponent must be omitted");
    if (mag == 0) fail("zero coefficient");
    if (mag > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
      pos_ = start;
      fail("coefficient out of range");
    }
    t.coeff = negative ? -static_cast<std::int64_t>(mag) : static_cast<std::int64_t>(mag);
    return t;
  }

  int exponent() {
    if (at_end() || peek() != '^') return 1;
    ++pos_;
    bool negative = false;
    if (!at_end() && peek() == '-') {
      negative = true;
      ++pos_;
    }
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("malformed exponent");
    const std::uint64_t v = number();
    if (v > 1'000'000) fail("exponent out of range");
    return negative ? -static_cast<int>(v) : static_cast<int>(v);
  }

  std::uint64_t number() {
    std::uint64_t v = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      if (v > (std::numeric_limits<std::uint64_t>::max() - 9) / 10) fail("number out of range");
      v = v * 10 + static_cast<std::uint64_t>(peek() - '0');
      ++pos_;
    }
    return v;
  }

  void skip_space() {
    while (!at_end() && (peek() == ' ' || peek() == '\t')) ++pos_;
  }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }

  [[noreturn]] void fail(const std::string& what) const {
    throw PolynomialParseError(what + " at column " + std::to_string(pos_ + 1) + " in \"" +
                               std::string(s_) + "\"");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

LMPolynomial parse_poly(std::string_view text) { return PolyParser(text).parse(); }

}  // namespace knotid
