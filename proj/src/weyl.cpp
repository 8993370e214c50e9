#include "projconn/weyl.hpp"

#include <sstream>

#include "projconn/error.hpp"

namespace projconn {

namespace {

void require_same(const DiffOperator& a, const DiffOperator& b, const char* op) {
  if (a.ctx() != b.ctx() || a.nvars() != b.nvars()) {
    throw InputError(std::string(op) + ": operators act on different rings");
  }
}

void add_term(DiffOperator::Terms& terms, const MultiIndex& alpha, const Polynomial& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms.try_emplace(alpha, c);
  if (!inserted) it->second += c;
}

// Enumerates all gamma <= alpha componentwise.
template <class F>
void for_each_below(const MultiIndex& alpha, std::size_t nvars, F&& f) {
  MultiIndex gamma;
  while (true) {
    f(gamma);
    std::size_t i = 0;
    while (i < nvars) {
      if (gamma[i] < alpha[i]) {
        gamma.set(i, gamma[i] + 1);
        break;
      }
      gamma.set(i, 0);
      ++i;
    }
    if (i == nvars) return;
  }
}

mpz_class binomial(unsigned n, unsigned k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Polynomial partial(const Polynomial& f, const MultiIndex& alpha, std::size_t nvars) {
  Polynomial g = f;
  for (std::size_t i = 0; i < nvars && !g.is_zero(); ++i) {
    for (unsigned e = 0; e < alpha[i] && !g.is_zero(); ++e) g = g.derivative(i);
  }
  return g;
}

}  // namespace

DiffOperator::DiffOperator(RingPtr ctx, std::size_t nvars) : ctx_(std::move(ctx)), nvars_(nvars) {
  if (nvars_ > ctx_->nvars()) throw InputError("operator has more partials than ring variables");
}

DiffOperator::DiffOperator(RingPtr ctx, std::size_t nvars, Terms terms)
    : DiffOperator(std::move(ctx), nvars) {
  for (auto& [alpha, c] : terms) {
    if (alpha.last_variable() >= static_cast<int>(nvars_)) throw InputError("partial index out of range");
    Polynomial r = ctx_->reduce(c);
    if (!r.is_zero()) terms_.emplace(alpha, std::move(r));
  }
}

DiffOperator DiffOperator::multiplication(RingPtr ctx, std::size_t nvars, const Polynomial& a) {
  Terms t;
  t.emplace(MultiIndex{}, a);
  return DiffOperator(std::move(ctx), nvars, std::move(t));
}

DiffOperator DiffOperator::from_field(const TangentField& field) {
  Terms t;
  for (std::size_t i = 0; i < field.size(); ++i) add_term(t, MultiIndex::variable(i), field[i]);
  return DiffOperator(field.ctx(), field.size(), std::move(t));
}

Polynomial DiffOperator::coefficient(const MultiIndex& alpha) const {
  auto it = terms_.find(alpha);
  return it == terms_.end() ? Polynomial{} : it->second;
}

int DiffOperator::order() const {
  int best = -1;
  for (const auto& [alpha, c] : terms_) best = std::max(best, static_cast<int>(alpha.degree()));
  return best;
}

Polynomial DiffOperator::apply(const Polynomial& f) const {
  Polynomial out;
  for (const auto& [alpha, c] : terms_) out += c * partial(f, alpha, nvars_);
  return ctx_->reduce(out);
}

DiffOperator DiffOperator::operator+(const DiffOperator& other) const {
  require_same(*this, other, "operator +");
  Terms t = terms_;
  for (const auto& [alpha, c] : other.terms_) add_term(t, alpha, c);
  return DiffOperator(ctx_, nvars_, std::move(t));
}

DiffOperator DiffOperator::operator-(const DiffOperator& other) const {
  require_same(*this, other, "operator -");
  Terms t = terms_;
  for (const auto& [alpha, c] : other.terms_) add_term(t, alpha, -c);
  return DiffOperator(ctx_, nvars_, std::move(t));
}

DiffOperator DiffOperator::scaled(const Polynomial& a) const {
  Terms t;
  for (const auto& [alpha, c] : terms_) t.emplace(alpha, a * c);
  return DiffOperator(ctx_, nvars_, std::move(t));
}

std::string DiffOperator::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [alpha, c] : terms_) {
    std::string partials;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (alpha[i] == 0) continue;
      if (!partials.empty()) partials += '*';
      partials += "d" + std::to_string(i + 1);
      if (alpha[i] > 1) partials += "^" + std::to_string(alpha[i]);
    }
    std::string coeff = ctx_->format(c);
    if (c.size() > 1) {
      out << (first ? "" : " + ");
      out << '(' << coeff << ')' << (partials.empty() ? "" : "*" + partials);
    } else {
      bool negative = coeff.front() == '-';
      if (negative) coeff.erase(0, 1);
      if (first) out << (negative ? "-" : "");
      else out << (negative ? " - " : " + ");
      if (partials.empty()) out << coeff;
      else if (coeff == "1") out << partials;
      else out << coeff << '*' << partials;
    }
    first = false;
  }
  return out.str();
}

DiffOperator compose(const DiffOperator& s, const DiffOperator& t) {
  require_same(s, t, "compose");
  const std::size_t n = s.nvars();
  DiffOperator::Terms out;
  for (const auto& [alpha, c] : s.terms()) {
    for (const auto& [beta, d] : t.terms()) {
      // c d^alpha o d d^beta = c sum_{gamma <= alpha} C(alpha, gamma) d^gamma(d) d^(alpha - gamma + beta)
      for_each_below(alpha, n, [&](const MultiIndex& gamma) {
        Polynomial dd = partial(d, gamma, n);
        if (dd.is_zero()) return;
        mpz_class coeff = 1;
        for (std::size_t i = 0; i < n; ++i) coeff *= binomial(alpha[i], gamma[i]);
        add_term(out, (alpha / gamma) * beta, c * dd * Rational(coeff));
      });
    }
  }
  return DiffOperator(s.ctx(), n, std::move(out));
}

DiffOperator iterated_commutator(const DiffOperator& t, const std::vector<Polynomial>& multipliers) {
  DiffOperator result = t;
  for (const auto& a : multipliers) {
    DiffOperator mult = DiffOperator::multiplication(t.ctx(), t.nvars(), a);
    result = compose(result, mult) - compose(mult, result);
  }
  return result;
}

Polynomial subset_expansion(const DiffOperator& t, const std::vector<Polynomial>& multipliers,
                            const Polynomial& f) {
  const std::size_t m = multipliers.size();
  if (m > 20) throw InputError("subset_expansion: too many multipliers");
  const auto& ctx = *t.ctx();
  Polynomial total;
  for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
    Polynomial inside = f;
    Polynomial outside = 1;
    int size = 0;
    for (std::size_t i = 0; i < m; ++i) {
      if (mask & (std::size_t{1} << i)) {
        outside = ctx.reduce(outside * multipliers[i]);
        ++size;
      } else {
        inside = ctx.reduce(inside * multipliers[i]);
      }
    }
    Polynomial term = outside * t.apply(inside);
    if (size % 2 == 0) total += term;
    else total -= term;
  }
  return ctx.reduce(total);
}

OperatorMatrix::OperatorMatrix(std::size_t n, std::vector<DiffOperator> entries)
    : n_(n), entries_(std::move(entries)) {
  if (entries_.size() != n_ * n_) throw InputError("operator matrix entry count mismatch");
}

OperatorMatrix OperatorMatrix::operator-(const OperatorMatrix& other) const {
  if (n_ != other.n_) throw InputError("operator matrix -: shape mismatch");
  std::vector<DiffOperator> e;
  e.reserve(entries_.size());
  for (std::size_t i = 0; i < entries_.size(); ++i) e.push_back(entries_[i] - other.entries_[i]);
  return OperatorMatrix(n_, std::move(e));
}

OperatorMatrix rho_lift(const DiffOperator& t, const ProjectiveModule& module) {
  if (t.ctx() != module.ctx()) throw InputError("rho_lift: operator and module live on different rings");
  const std::size_t n = module.generators();
  std::vector<DiffOperator> e;
  e.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      e.push_back(compose(t, DiffOperator::multiplication(t.ctx(), t.nvars(), module.M()(i, j))));
    }
  }
  return OperatorMatrix(n, std::move(e));
}

RingVector opmatrix_apply_lift(const OperatorMatrix& tm, const RingVector& v) {
  if (v.size() != tm.size()) throw InputError("opmatrix_apply: length mismatch");
  std::vector<Polynomial> out(tm.size());
  for (std::size_t i = 0; i < tm.size(); ++i) {
    for (std::size_t j = 0; j < tm.size(); ++j) out[i] += tm(i, j).apply(v[j]);
  }
  return RingVector(v.ctx(), std::move(out));
}

RingVector opmatrix_apply(const OperatorMatrix& tm, const RingVector& v, const ProjectiveModule& module) {
  return module.canonical_rep(opmatrix_apply_lift(tm, v));
}

OperatorMatrix opmatrix_compose(const OperatorMatrix& a, const OperatorMatrix& b) {
  if (a.size() != b.size()) throw InputError("opmatrix_compose: shape mismatch");
  const std::size_t n = a.size();
  std::vector<DiffOperator> e;
  e.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      DiffOperator sum = DiffOperator::zero(a(0, 0).ctx(), a(0, 0).nvars());
      for (std::size_t m = 0; m < n; ++m) sum = sum + compose(a(i, m), b(m, j));
      e.push_back(std::move(sum));
    }
  }
  return OperatorMatrix(n, std::move(e));
}

OperatorMatrix multiplicativity_defect(const DiffOperator& s, const DiffOperator& t,
                                       const ProjectiveModule& module) {
  return rho_lift(compose(s, t), module) - opmatrix_compose(rho_lift(s, module), rho_lift(t, module));
}

bool descends(const OperatorMatrix& tm, const ProjectiveModule& module) {
  for (const auto& r : module.relations()) {
    if (!module.canonical_rep(opmatrix_apply_lift(tm, r)).is_zero()) return false;
  }
  return true;
}

bool module_equal(const OperatorMatrix& a, const OperatorMatrix& b, const ProjectiveModule& module) {
  const OperatorMatrix diff = a - b;
  const std::size_t n = diff.size();
  if (n != module.generators()) throw InputError("module_equal: shape mismatch");
  const auto& m = module.M();
  const auto& proto = diff(0, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      DiffOperator sum = DiffOperator::zero(proto.ctx(), proto.nvars());
      for (std::size_t p = 0; p < n; ++p) {
        for (std::size_t q = 0; q < n; ++q) {
          if (m(i, p).is_zero() || m(q, j).is_zero()) continue;
          auto mult = DiffOperator::multiplication(proto.ctx(), proto.nvars(), m(q, j));
          sum = sum + compose(diff(p, q), mult).scaled(m(i, p));
        }
      }
      if (!sum.is_zero()) return false;
    }
  }
  return true;
}

}  // namespace projconn
