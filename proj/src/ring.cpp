#include "projconn/ring.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "projconn/error.hpp"

namespace projconn {

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (kind == Kind::GradedLex && a.degree() != b.degree()) {
    return a.degree() < b.degree() ? -1 : 1;
  }
  if (precedence.empty()) {
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
      if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
  }
  for (std::size_t i : precedence) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

const Term& leading_term(const Polynomial& f, const MonomialOrder& order) {
  auto terms = f.terms();
  if (order.kind == MonomialOrder::Kind::GradedLex && order.precedence.empty()) {
    return terms.front();
  }
  const Term* best = &terms.front();
  for (const auto& t : terms) {
    if (order.greater(t.monomial, best->monomial)) best = &t;
  }
  return *best;
}

namespace {

struct OrderGreater {
  const MonomialOrder* order;
  bool operator()(const Monomial& a, const Monomial& b) const { return order->greater(a, b); }
};

struct Lead {
  Monomial monomial;
  Rational coeff;
};

std::vector<Lead> leads_of(const std::vector<Polynomial>& basis, const MonomialOrder& order) {
  std::vector<Lead> leads;
  leads.reserve(basis.size());
  for (const auto& g : basis) {
    const Term& t = leading_term(g, order);
    leads.push_back({t.monomial, t.coeff});
  }
  return leads;
}

// Division of f by basis; quotients are accumulated when requested.
Polynomial divide_impl(const Polynomial& f, const std::vector<Polynomial>& basis,
                       const std::vector<Lead>& leads, const MonomialOrder& order,
                       std::vector<std::vector<Term>>* quotients) {
  std::map<Monomial, Rational, OrderGreater> work(OrderGreater{&order});
  for (const auto& t : f.terms()) work.emplace(t.monomial, t.coeff);
  std::vector<Term> remainder;
  while (!work.empty()) {
    auto it = work.begin();
    std::size_t divisor = basis.size();
    for (std::size_t i = 0; i < leads.size(); ++i) {
      if (leads[i].monomial.divides(it->first)) {
        divisor = i;
        break;
      }
    }
    if (divisor == basis.size()) {
      remainder.push_back({it->first, it->second});
      work.erase(it);
      continue;
    }
    const Monomial factor_mono = it->first / leads[divisor].monomial;
    const Rational factor = it->second / leads[divisor].coeff;
    if (quotients != nullptr) (*quotients)[divisor].push_back({factor_mono, factor});
    for (const auto& t : basis[divisor].terms()) {
      Monomial m = t.monomial * factor_mono;
      auto [pos, inserted] = work.try_emplace(m, 0);
      pos->second -= factor * t.coeff;
      if (pos->second == 0) work.erase(pos);
    }
  }
  return Polynomial::from_terms(std::move(remainder));
}

Polynomial make_monic(const Polynomial& f, const MonomialOrder& order) {
  if (f.is_zero()) return f;
  Rational lc = leading_term(f, order).coeff;
  if (lc == 1) return f;
  return f * Rational(1 / lc);
}

}  // namespace

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis,
                       const MonomialOrder& order) {
  return divide_impl(f, basis, leads_of(basis, order), order, nullptr);
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order) {
  const Term& lf = leading_term(f, order);
  const Term& lg = leading_term(g, order);
  Monomial l = lcm(lf.monomial, lg.monomial);
  return f.times_term(l / lf.monomial, Rational(1 / lf.coeff)) -
         g.times_term(l / lg.monomial, Rational(1 / lg.coeff));
}

std::vector<Polynomial> groebner_basis(const std::vector<Polynomial>& generators,
                                       const MonomialOrder& order,
                                       std::optional<unsigned> degree_cap) {
  if (generators.empty()) throw InputError("groebner_basis: no generators");
  const unsigned cap = degree_cap.value_or(kDefaultDegreeCap);

  std::vector<Polynomial> basis;
  std::vector<Lead> leads;
  struct Pair {
    std::size_t i, j;
    Monomial lcm;
  };
  std::vector<Pair> pairs;

  auto add = [&](Polynomial g) {
    g = make_monic(g, order);
    const Term& lt = leading_term(g, order);
    std::size_t n = basis.size();
    for (std::size_t i = 0; i < n; ++i) {
      pairs.push_back({i, n, lcm(leads[i].monomial, lt.monomial)});
    }
    leads.push_back({lt.monomial, lt.coeff});
    basis.push_back(std::move(g));
  };

  for (const auto& g : generators) {
    if (g.is_zero()) continue;
    Polynomial r = basis.empty() ? g : divide_impl(g, basis, leads, order, nullptr);
    if (!r.is_zero()) add(std::move(r));
  }
  if (basis.empty()) return {};

  // Normal selection strategy: always treat the pair with the smallest lcm.
  while (!pairs.empty()) {
    auto best = std::min_element(pairs.begin(), pairs.end(), [&](const Pair& a, const Pair& b) {
      int c = order.compare(a.lcm, b.lcm);
      if (c != 0) return c < 0;
      return std::tie(a.i, a.j) < std::tie(b.i, b.j);
    });
    Pair p = *best;
    pairs.erase(best);
    if (leads[p.i].monomial.coprime(leads[p.j].monomial)) continue;
    if (p.lcm.degree() > cap) {
      throw ResourceError("groebner_basis: S-pair of degree " + std::to_string(p.lcm.degree()) +
                          " exceeds degree cap " + std::to_string(cap));
    }
    Polynomial s = s_polynomial(basis[p.i], basis[p.j], order);
    Polynomial r = divide_impl(s, basis, leads, order, nullptr);
    if (!r.is_zero()) add(std::move(r));
  }

  // Minimalize: drop elements whose leading monomial is divisible by another's.
  std::vector<Polynomial> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j || !leads[j].monomial.divides(leads[i].monomial)) continue;
      // Equal leading monomials: keep the earliest.
      redundant = !(leads[j].monomial == leads[i].monomial) || j < i;
    }
    if (!redundant) minimal.push_back(basis[i]);
  }
  // Interreduce tails.
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < minimal.size(); ++j) {
      if (j != i) others.push_back(minimal[j]);
    }
    const Term lt = leading_term(minimal[i], order);
    Polynomial head = Polynomial::monomial(lt.monomial, lt.coeff);
    Polynomial tail = normal_form(minimal[i] - head, others, order);
    minimal[i] = make_monic(head + tail, order);
  }
  std::sort(minimal.begin(), minimal.end(), [&](const Polynomial& a, const Polynomial& b) {
    return order.compare(leading_term(a, order).monomial, leading_term(b, order).monomial) < 0;
  });
  return minimal;
}

std::vector<std::string> standard_names(std::size_t k, std::size_t blocks) {
  static constexpr const char* kPrefixes[] = {"x", "t", "u", "w"};
  if (blocks == 0 || blocks > 4) throw InputError("standard_names: 1 to 4 blocks");
  if (k * blocks > kMaxVariables) throw InputError("too many variables");
  std::vector<std::string> names;
  for (std::size_t b = 0; b < blocks; ++b) {
    for (std::size_t i = 1; i <= k; ++i) names.push_back(kPrefixes[b] + std::to_string(i));
  }
  return names;
}

RingContext::RingContext(std::vector<std::string> names, std::vector<Polynomial> relations,
                         MonomialOrder order, std::vector<Monomial> truncation,
                         unsigned degree_cap)
    : names_(std::move(names)),
      relations_(std::move(relations)),
      truncation_(std::move(truncation)),
      order_(std::move(order)) {
  if (names_.size() > kMaxVariables) throw InputError("too many variables");
  for (const auto& r : relations_) check_variables(r);
  std::vector<Polynomial> gens = relations_;
  for (const auto& m : truncation_) gens.push_back(Polynomial::monomial(m));
  std::erase_if(gens, [](const Polynomial& p) { return p.is_zero(); });
  if (!gens.empty()) groebner_ = groebner_basis(gens, order_, degree_cap);
}

void RingContext::check_variables(const Polynomial& f) const {
  int last = f.last_variable();
  if (last >= static_cast<int>(names_.size())) {
    throw InputError("polynomial uses variable index " + std::to_string(last) +
                     " outside a ring with " + std::to_string(names_.size()) + " variables");
  }
}

Polynomial RingContext::reduce(const Polynomial& f) const {
  check_variables(f);
  if (groebner_.empty() || f.is_zero()) return f;
  return normal_form(f, groebner_, order_);
}

Division RingContext::divide(const Polynomial& f) const {
  check_variables(f);
  std::vector<std::vector<Term>> q(groebner_.size());
  Division d;
  d.remainder = divide_impl(f, groebner_, leads_of(groebner_, order_), order_, &q);
  for (auto& terms : q) d.quotients.push_back(Polynomial::from_terms(std::move(terms)));
  return d;
}

std::optional<std::size_t> RingContext::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

Polynomial RingContext::parse(std::string_view text) const {
  return parse_polynomial(text, names_);
}

std::string RingContext::format(const Polynomial& f) const {
  return format_polynomial(f, names_);
}

Polynomial taylor_shift(const Polynomial& a, unsigned l, const RingContext& ctx, std::size_t k) {
  if (2 * k > ctx.nvars()) throw InputError("taylor_shift: ring has no t-variables");
  if (a.last_variable() >= static_cast<int>(k)) {
    throw InputError("taylor_shift: argument must use x-variables only");
  }
  std::vector<Polynomial> images;
  images.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    images.push_back(Polynomial::variable(i) + Polynomial::variable(k + i));
  }
  return a.substitute(images).truncate(k, 2 * k, l);
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, const std::vector<std::string>& names)
      : text_(text), names_(names) {}

  Polynomial parse() {
    skip_ws();
    if (at_end()) fail("empty polynomial");
    Polynomial result;
    bool first = true;
    while (true) {
      skip_ws();
      if (at_end()) break;
      bool negative = false;
      char c = text_[pos_];
      if (c == '+' || c == '-') {
        negative = c == '-';
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      Polynomial term = parse_term();
      result += negative ? -term : term;
      first = false;
    }
    return result;
  }

 private:
  Polynomial parse_term() {
    Rational coeff = 1;
    Monomial mono;
    do {
      skip_ws();
      if (at_end()) fail("unexpected end of input");
      if (std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        Rational num(read_digits());
        skip_ws();
        if (!at_end() && text_[pos_] == '/') {
          ++pos_;
          skip_ws();
          mpz_class den(read_digits());
          if (den == 0) fail("zero denominator");
          num /= Rational(den);
        }
        coeff *= num;
      } else {
        std::size_t var = read_variable();
        unsigned e = 1;
        skip_ws();
        if (!at_end() && text_[pos_] == '^') {
          ++pos_;
          skip_ws();
          e = static_cast<unsigned>(std::stoul(read_digits()));
        }
        mono = mono * Monomial::variable(var, e);
      }
      skip_ws();
    } while (!at_end() && text_[pos_] == '*' && ++pos_);
    return Polynomial::monomial(mono, coeff);
  }

  std::string read_digits() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return std::string(text_.substr(start, pos_ - start));
  }

  std::size_t read_variable() {
    std::size_t start = pos_;
    if (at_end() || !std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
      fail("expected a variable or number");
    }
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    std::string_view name = text_.substr(start, pos_ - start);
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (names_[i] == name) return i;
    }
    throw InputError("unknown variable '" + std::string(name) + "'");
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  [[noreturn]] void fail(const std::string& what) const {
    throw InputError("parse error at offset " + std::to_string(pos_) + ": " + what);
  }

  std::string_view text_;
  const std::vector<std::string>& names_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& names) {
  return Parser(text, names).parse();
}

std::string format_polynomial(const Polynomial& f, const std::vector<std::string>& names) {
  if (f.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& t : f.terms()) {
    bool negative = sgn(t.coeff) < 0;
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    Rational mag = abs(t.coeff);
    bool need_star = false;
    if (t.monomial.is_one() || mag != 1) {
      out << mag.get_str();
      need_star = true;
    }
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
      unsigned e = t.monomial[i];
      if (e == 0) continue;
      if (need_star) out << '*';
      out << (i < names.size() ? names[i] : "v" + std::to_string(i + 1));
      if (e > 1) out << '^' << e;
      need_star = true;
    }
  }
  return out.str();
}

}  // namespace projconn
