#include "hecke/laurent.hpp"

#include <algorithm>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace hecke {

namespace {

void canonicalize(std::vector<LaurentPoly::Term>& terms) {
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return a.exp < b.exp; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    int e = terms[i].exp;
    Integer c = std::move(terms[i].coeff);
    std::size_t j = i + 1;
    for (; j < terms.size() && terms[j].exp == e; ++j) c += terms[j].coeff;
    if (c != 0) terms[out++] = LaurentPoly::Term{e, std::move(c)};
    i = j;
  }
  terms.resize(out);
}

// Merge `sign * c * v^k * b` into `a`.
void merge_into(std::vector<LaurentPoly::Term>& a, const std::vector<LaurentPoly::Term>& b,
                const Integer& c, int k) {
  if (b.empty() || c == 0) return;
  std::vector<LaurentPoly::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].exp < b[j].exp + k)) {
      out.push_back(std::move(a[i++]));
    } else if (i == a.size() || b[j].exp + k < a[i].exp) {
      out.push_back({b[j].exp + k, b[j].coeff * c});
      ++j;
    } else {
      Integer s = a[i].coeff + b[j].coeff * c;
      if (s != 0) out.push_back({a[i].exp, std::move(s)});
      ++i;
      ++j;
    }
  }
  a = std::move(out);
}

}  // namespace

LaurentPoly::LaurentPoly(int c) {
  if (c != 0) terms_.push_back({0, Integer(c)});
}

LaurentPoly::LaurentPoly(Integer c) {
  if (c != 0) terms_.push_back({0, std::move(c)});
}

LaurentPoly::LaurentPoly(std::initializer_list<std::pair<int, long long>> terms) {
  terms_.reserve(terms.size());
  for (const auto& [e, c] : terms) terms_.push_back({e, Integer(c)});
  canonicalize(terms_);
}

LaurentPoly::LaurentPoly(std::vector<Term> terms) : terms_(std::move(terms)) {
  canonicalize(terms_);
}

LaurentPoly LaurentPoly::monomial(int exp, Integer coeff) {
  LaurentPoly p;
  if (coeff != 0) p.terms_.push_back({exp, std::move(coeff)});
  return p;
}

Integer LaurentPoly::coeff_at(int i) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), i,
                             [](const Term& t, int e) { return t.exp < e; });
  if (it != terms_.end() && it->exp == i) return it->coeff;
  return 0;
}

int LaurentPoly::degree() const {
  if (terms_.empty()) throw std::domain_error("degree of the zero Laurent polynomial");
  return terms_.back().exp;
}

int LaurentPoly::valuation() const {
  if (terms_.empty()) throw std::domain_error("valuation of the zero Laurent polynomial");
  return terms_.front().exp;
}

bool LaurentPoly::is_nonneg() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.coeff > 0; });
}

bool LaurentPoly::is_bar_symmetric() const {
  const std::size_t n = terms_.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Term& a = terms_[i];
    const Term& b = terms_[n - 1 - i];
    if (a.exp != -b.exp || a.coeff != b.coeff) return false;
  }
  return true;
}

bool LaurentPoly::is_unit() const {
  return terms_.size() == 1 && (terms_[0].coeff == 1 || terms_[0].coeff == -1);
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.exp += k;
  return r;
}

LaurentPoly LaurentPoly::scaled(const Integer& c) const {
  if (c == 0) return {};
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.coeff *= c;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  merge_into(terms_, o.terms_, Integer(1), 0);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  merge_into(terms_, o.terms_, Integer(-1), 0);
  return *this;
}

LaurentPoly& LaurentPoly::add_scaled(const LaurentPoly& o, const Integer& c, int k) {
  merge_into(terms_, o.terms_, c, k);
  return *this;
}

LaurentPoly& LaurentPoly::add_product(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return *this;
  if (a.size() == 1) return add_scaled(b, a.terms_[0].coeff, a.terms_[0].exp);
  if (b.size() == 1) return add_scaled(a, b.terms_[0].coeff, b.terms_[0].exp);
  return *this += a * b;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  *this = *this * o;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.size() == 1) return b.scaled(a.terms_[0].coeff).shifted(a.terms_[0].exp);
  if (b.size() == 1) return a.scaled(b.terms_[0].coeff).shifted(b.terms_[0].exp);
  const int lo = a.terms_.front().exp + b.terms_.front().exp;
  const int hi = a.terms_.back().exp + b.terms_.back().exp;
  std::vector<Integer> dense(static_cast<std::size_t>(hi - lo + 1));
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_) dense[x.exp + y.exp - lo] += x.coeff * y.coeff;
  LaurentPoly r;
  for (std::size_t i = 0; i < dense.size(); ++i)
    if (dense[i] != 0) r.terms_.push_back({lo + static_cast<int>(i), std::move(dense[i])});
  return r;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

std::strong_ordering LaurentPoly::operator<=>(const LaurentPoly& o) const {
  const std::size_t n = std::min(terms_.size(), o.terms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = terms_[i].exp <=> o.terms_[i].exp; c != 0) return c;
    if (terms_[i].coeff != o.terms_[i].coeff)
      return terms_[i].coeff < o.terms_[i].coeff ? std::strong_ordering::less
                                                 : std::strong_ordering::greater;
  }
  return terms_.size() <=> o.terms_.size();
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest degree first, matching how the tables are usually printed.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    Integer c = it->coeff;
    if (c < 0) {
      os << '-';
      c = -c;
    } else if (!first) {
      os << '+';
    }
    first = false;
    if (it->exp == 0) {
      os << c;
      continue;
    }
    if (c != 1) os << c;
    os << 'v';
    if (it->exp != 1) os << '^' << it->exp;
  }
  return os.str();
}

std::size_t LaurentPoly::hash() const {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (const auto& t : terms_) {
    std::size_t x = std::hash<int>{}(t.exp) ^ (static_cast<std::size_t>(
                                                   static_cast<long long>(t.coeff % 1000003)) *
                                               0x100000001b3ULL);
    h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

LaurentPoly add(const LaurentPoly& a, const LaurentPoly& b) { return a + b; }
LaurentPoly mul(const LaurentPoly& a, const LaurentPoly& b) { return a * b; }

LaurentPoly bar(const LaurentPoly& a) {
  std::vector<LaurentPoly::Term> t;
  t.reserve(a.size());
  for (auto it = a.terms().rbegin(); it != a.terms().rend(); ++it)
    t.push_back({-it->exp, it->coeff});
  return LaurentPoly(std::move(t));
}

LaurentPoly beta_scalar(const LaurentPoly& a) {
  std::vector<LaurentPoly::Term> t;
  t.reserve(a.size());
  for (auto it = a.terms().rbegin(); it != a.terms().rend(); ++it)
    t.push_back({-it->exp, (it->exp % 2 == 0) ? it->coeff : Integer(-it->coeff)});
  return LaurentPoly(std::move(t));
}

Integer eval_at_one(const LaurentPoly& a) {
  Integer s = 0;
  for (const auto& t : a.terms()) s += t.coeff;
  return s;
}

std::optional<LaurentPoly> divide_exact(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by the zero Laurent polynomial");
  if (a.is_zero()) return LaurentPoly{};
  // Normalize both to polynomials with nonzero constant term, then run long
  // division from the top; the shift is restored at the end.
  const int shift = a.valuation() - b.valuation();
  LaurentPoly r = a.shifted(-a.valuation());
  const LaurentPoly d = b.shifted(-b.valuation());
  const int dd = d.degree();
  const Integer& lc = d.terms().back().coeff;
  std::vector<LaurentPoly::Term> q;
  while (!r.is_zero()) {
    const int rd = r.degree();
    if (rd < dd) return std::nullopt;
    const Integer& rc = r.terms().back().coeff;
    if (rc % lc != 0) return std::nullopt;
    Integer c = rc / lc;
    r.add_scaled(d, -c, rd - dd);
    q.push_back({rd - dd, std::move(c)});
  }
  return LaurentPoly(std::move(q)).shifted(shift);
}

nlohmann::ordered_json integer_to_json(const Integer& c) {
  if (c >= std::numeric_limits<std::int64_t>::min() &&
      c <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(c);
  return c.str();
}

Integer integer_from_json(const nlohmann::ordered_json& j) {
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (j.is_string()) return Integer(j.get<std::string>());
  throw std::invalid_argument("expected an integer coefficient");
}

nlohmann::ordered_json to_json(const LaurentPoly& a) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (const auto& t : a.terms()) j[std::to_string(t.exp)] = integer_to_json(t.coeff);
  return j;
}

LaurentPoly laurent_from_json(const nlohmann::ordered_json& j) {
  if (!j.is_object()) throw std::invalid_argument("Laurent polynomial JSON must be an object");
  std::vector<LaurentPoly::Term> terms;
  for (const auto& [key, val] : j.items()) {
    std::size_t used = 0;
    int e = std::stoi(key, &used);
    if (used != key.size()) throw std::invalid_argument("bad exponent key: " + key);
    Integer c = integer_from_json(val);
    if (c == 0) throw std::invalid_argument("zero coefficient in Laurent polynomial JSON");
    terms.push_back({e, std::move(c)});
  }
  return LaurentPoly(std::move(terms));
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& a) { return os << a.to_string(); }

}  // namespace hecke
