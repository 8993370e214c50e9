#include "projconn/ellipsoid.hpp"

#include <algorithm>
#include <sstream>

#include "projconn/error.hpp"

namespace projconn {

namespace {

Polynomial power(std::size_t var, unsigned e) {
  return Polynomial::monomial(Monomial::variable(var, e));
}

// H = sum x_i^p_i - 1 in graded-lex with x1 > ... > xk: the leading term is
// the largest power, earliest variable on ties.
RingPtr make_ring(const std::vector<unsigned>& exps, Polynomial& h) {
  h = Polynomial(-1);
  for (std::size_t i = 0; i < exps.size(); ++i) h += power(i, exps[i]);
  return std::make_shared<const RingContext>(standard_names(exps.size()), std::vector{h});
}

std::vector<unsigned> validated(std::vector<unsigned> exps) {
  if (exps.size() < 2) throw InputError("ellipsoid needs at least two variables");
  if (exps.size() > 5) throw InputError("ellipsoid supports at most five variables");
  for (unsigned p : exps) {
    if (p < 1) throw InputError("ellipsoid exponents must be >= 1");
  }
  return exps;
}

}  // namespace

EllipsoidRing::EllipsoidRing(std::vector<unsigned> exponents)
    : exponents_(validated(std::move(exponents))) {
  ctx_ = make_ring(exponents_, h_);
}

std::string EllipsoidRing::label() const {
  std::string s;
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(exponents_[i]);
  }
  return s;
}

TangentField::TangentField(RingPtr ctx, std::vector<Polynomial> coeffs, std::string name)
    : ctx_(std::move(ctx)), coeffs_(std::move(coeffs)), name_(std::move(name)) {
  for (auto& c : coeffs_) c = ctx_->reduce(c);
}

Polynomial TangentField::apply_raw(const Polynomial& f) const {
  Polynomial out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    out += coeffs_[i] * f.derivative(i);
  }
  return out;
}

RingVector TangentField::apply(const RingVector& v) const {
  std::vector<Polynomial> out;
  out.reserve(v.size());
  for (const auto& e : v.entries()) out.push_back(apply_raw(e));
  return RingVector(v.ctx(), std::move(out));
}

RingMatrix TangentField::apply(const RingMatrix& m) const {
  return m.map([this](const Polynomial& e) { return apply_raw(e); });
}

bool TangentField::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Polynomial& c) { return c.is_zero(); });
}

std::string TangentField::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    const std::string d = "d" + std::to_string(i + 1);
    std::string c = ctx_->format(coeffs_[i]);
    if (coeffs_[i].size() > 1) {
      out << (first ? "" : " + ") << '(' << c << ")*" << d;
    } else {
      bool negative = c.front() == '-';
      if (negative) c.erase(0, 1);
      if (first) out << (negative ? "-" : "");
      else out << (negative ? " - " : " + ");
      out << (c == "1" ? d : c + "*" + d);
    }
    first = false;
  }
  return first ? "0" : out.str();
}

std::vector<TangentField> tangent_generators(const EllipsoidRing& ring) {
  const auto& p = ring.exponents();
  const std::size_t k = ring.k();
  const bool uniform = std::all_of(p.begin(), p.end(), [&](unsigned e) { return e == p[0]; });
  const Rational scale = uniform ? Rational(1, p[0]) : Rational(1);
  std::vector<TangentField> fields;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      std::vector<Polynomial> c(k);
      c[i] = power(j, p[j] - 1) * Rational(Rational(p[j]) * scale);
      c[j] = power(i, p[i] - 1) * Rational(-Rational(p[i]) * scale);
      fields.emplace_back(ring.ctx(), std::move(c),
                          "d" + std::to_string(i + 1) + std::to_string(j + 1));
    }
  }
  return fields;
}

TangentField lie_bracket(const TangentField& delta, const TangentField& eta) {
  if (delta.ctx() != eta.ctx() || delta.size() != eta.size()) {
    throw InputError("lie_bracket: fields live on different rings");
  }
  std::vector<Polynomial> c(delta.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = delta.apply_raw(eta[i]) - eta.apply_raw(delta[i]);
  std::string name;
  if (!delta.name().empty() && !eta.name().empty()) name = "[" + delta.name() + "," + eta.name() + "]";
  return TangentField(delta.ctx(), std::move(c), std::move(name));
}

ProjectiveModule::ProjectiveModule(std::string name, RingMatrix fundamental,
                                   std::vector<RingVector> relations)
    : name_(std::move(name)), m_(std::move(fundamental)), relations_(std::move(relations)) {
  if (!m_.is_square()) throw InputError("fundamental matrix must be square");
  for (const auto& r : relations_) {
    if (r.size() != m_.rows() || r.ctx() != m_.ctx()) {
      throw InputError("relation vector does not match the fundamental matrix");
    }
  }
}

ProjectiveModule ProjectiveModule::free(RingPtr ctx, std::size_t rank) {
  return ProjectiveModule("free(" + std::to_string(rank) + ")", RingMatrix::identity(std::move(ctx), rank), {});
}

RingVector ProjectiveModule::generator(std::size_t j) const {
  return RingVector::unit(ctx(), generators(), j);
}

RingVector ProjectiveModule::canonical_rep(const RingVector& v) const {
  if (v.size() != generators()) throw InputError("canonical_rep: length mismatch");
  return m_ * v;
}

bool ProjectiveModule::same_class(const RingVector& v, const RingVector& w) const {
  return canonical_rep(v - w).is_zero();
}

bool ProjectiveModule::is_functional(const RingVector& y) const {
  if (y.size() != generators()) return false;
  return std::all_of(relations_.begin(), relations_.end(),
                     [&](const RingVector& r) { return dot(y, r).is_zero(); });
}

namespace {

RingVector relation_vector(const EllipsoidRing& ring) {
  std::vector<Polynomial> g;
  for (std::size_t i = 0; i < ring.k(); ++i) {
    unsigned p = ring.exponents()[i];
    g.push_back(power(i, p - 1) * Rational(p));
  }
  return RingVector(ring.ctx(), std::move(g));
}

// M[i][j] = delta_ij - (p_i / p_j) x_i^(p_i - 1) x_j: row i is e_i^* o s.
RingMatrix fundamental_matrix(const EllipsoidRing& ring) {
  const auto& p = ring.exponents();
  return RingMatrix::generate(ring.ctx(), ring.k(), ring.k(), [&](std::size_t i, std::size_t j) {
    Polynomial entry = power(i, p[i] - 1) * power(j, 1) * Rational(Rational(-static_cast<long>(p[i])) / p[j]);
    if (i == j) entry += 1;
    return entry;
  });
}

}  // namespace

KaehlerModule::KaehlerModule(EllipsoidRing ring)
    : ring_(std::move(ring)),
      g_(relation_vector(ring_)),
      module_("Omega(" + ring_.label() + ")", fundamental_matrix(ring_), {g_}) {}

}  // namespace projconn
