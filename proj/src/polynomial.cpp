#include "projconn/polynomial.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

namespace projconn {

Polynomial::Polynomial(const Rational& c) {
  if (c != 0) terms_.push_back({Monomial{}, c});
}

Polynomial Polynomial::variable(std::size_t index) {
  return monomial(Monomial::variable(index));
}

Polynomial Polynomial::monomial(const Monomial& m, const Rational& c) {
  Polynomial p;
  if (c != 0) p.terms_.push_back({m, c});
  return p;
}

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
    return grlex_compare(a.monomial, b.monomial) > 0;
  });
  Polynomial p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial) {
      p.terms_.back().coeff += t.coeff;
      if (p.terms_.back().coeff == 0) p.terms_.pop_back();
    } else if (t.coeff != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one());
}

Rational Polynomial::constant_term() const {
  if (!terms_.empty() && terms_.back().monomial.is_one()) return terms_.back().coeff;
  return 0;
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& key) {
                               return grlex_compare(t.monomial, key) > 0;
                             });
  if (it != terms_.end() && it->monomial == m) return it->coeff;
  return 0;
}

unsigned Polynomial::total_degree() const {
  return terms_.empty() ? 0 : terms_.front().monomial.degree();
}

int Polynomial::last_variable() const {
  int v = -1;
  for (const auto& t : terms_) v = std::max(v, t.monomial.last_variable());
  return v;
}

namespace {
// Merge b*sign into a; both sorted descending.
std::vector<Term> merge(const std::vector<Term>& a, std::span<const Term> b, bool negate) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    int cmp;
    if (i == a.size()) cmp = -1;
    else if (j == b.size()) cmp = 1;
    else cmp = grlex_compare(a[i].monomial, b[j].monomial);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      out.push_back({b[j].monomial, negate ? Rational(-b[j].coeff) : b[j].coeff});
      ++j;
    } else {
      Rational c = negate ? Rational(a[i].coeff - b[j].coeff) : Rational(a[i].coeff + b[j].coeff);
      if (c != 0) out.push_back({a[i].monomial, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}
}  // namespace

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.terms_.empty()) return *this;
  terms_ = merge(terms_, other.terms_, false);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  if (other.terms_.empty()) return *this;
  terms_ = merge(terms_, other.terms_, true);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (b.size() == 1) return a.times_term(b.terms_[0].monomial, b.terms_[0].coeff);
  if (a.size() == 1) return b.times_term(a.terms_[0].monomial, a.terms_[0].coeff);
  std::unordered_map<Monomial, Rational, MonomialHash> acc;
  acc.reserve(a.size() * b.size());
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) {
      acc[s.monomial * t.monomial] += s.coeff * t.coeff;
    }
  }
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (c != 0) terms.push_back({m, std::move(c)});
  }
  std::sort(terms.begin(), terms.end(), [](const Term& x, const Term& y) {
    return grlex_compare(x.monomial, y.monomial) > 0;
  });
  Polynomial p;
  p.terms_ = std::move(terms);
  return p;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  *this = *this * other;
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.coeff *= c;
  }
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

Polynomial Polynomial::times_term(const Monomial& m, const Rational& c) const {
  Polynomial p;
  if (c == 0) return p;
  p.terms_.reserve(terms_.size());
  // Multiplying by a monomial preserves graded-lex order.
  for (const auto& t : terms_) p.terms_.push_back({t.monomial * m, t.coeff * c});
  return p;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result(1);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e > 0) base *= base;
  }
  return result;
}

Polynomial Polynomial::derivative(std::size_t index) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    unsigned e = t.monomial[index];
    if (e == 0) continue;
    Monomial m = t.monomial;
    m.set(index, e - 1);
    out.push_back({m, t.coeff * e});
  }
  return from_terms(std::move(out));
}

Polynomial Polynomial::substitute(std::span<const Polynomial> images) const {
  // Cache powers per variable; exponents in a single polynomial stay small.
  std::vector<std::map<unsigned, Polynomial>> powers(images.size());
  auto power_of = [&](std::size_t v, unsigned e) -> const Polynomial& {
    auto it = powers[v].find(e);
    if (it != powers[v].end()) return it->second;
    return powers[v].emplace(e, images[v].pow(e)).first->second;
  };
  Polynomial result;
  for (const auto& t : terms_) {
    Monomial rest = t.monomial;
    Polynomial term(t.coeff);
    for (std::size_t v = 0; v < images.size(); ++v) {
      unsigned e = rest[v];
      if (e == 0) continue;
      rest.set(v, 0);
      term *= power_of(v, e);
    }
    result += term.times_term(rest, 1);
  }
  return result;
}

Polynomial Polynomial::truncate(std::size_t first, std::size_t last, unsigned max_degree) const {
  Polynomial p;
  for (const auto& t : terms_) {
    if (t.monomial.degree_in(first, last) <= max_degree) p.terms_.push_back(t);
  }
  return p;
}

}  // namespace projconn
