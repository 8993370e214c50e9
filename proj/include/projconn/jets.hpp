#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "projconn/ellipsoid.hpp"

namespace projconn {

/// P^l = A (x) A / I^(l+1) in Taylor coordinates t_i = 1 (x) x_i - x_i (x) 1:
/// Q[x, t] / (H(x), H(x+t) truncated, all t-monomials of degree l+1).
/// Left scalars act as a(x), right scalars as a(x+t).
class JetRing {
 public:
  JetRing(const EllipsoidRing& base, unsigned order, unsigned degree_cap = kDefaultDegreeCap);

  std::size_t k() const { return k_; }
  unsigned order() const { return order_; }
  const RingPtr& ctx() const { return ctx_; }

 private:
  std::size_t k_;
  unsigned order_;
  RingPtr ctx_;
};

/// P^l (x)_A P^k on (x, t, u): the second factor is glued along the right
/// structure of the first, giving relations H(x), H(x+t), H(x+t+u) and the
/// truncations (t)^(l+1), (u)^(k+1).
class JetTensorRing {
 public:
  JetTensorRing(const EllipsoidRing& base, unsigned l, unsigned k, unsigned degree_cap = kDefaultDegreeCap);

  std::size_t k() const { return nvars_; }
  unsigned left_order() const { return l_; }
  unsigned right_order() const { return k_order_; }
  const RingPtr& ctx() const { return ctx_; }

 private:
  std::size_t nvars_;
  unsigned l_;
  unsigned k_order_;
  RingPtr ctx_;
};

/// Lazily built, memoized jet rings over one base ring. Safe for concurrent use.
class JetTower {
 public:
  explicit JetTower(EllipsoidRing base, unsigned degree_cap = kDefaultDegreeCap)
      : base_(std::move(base)), degree_cap_(degree_cap) {}

  const EllipsoidRing& base() const { return base_; }
  unsigned degree_cap() const { return degree_cap_; }
  std::shared_ptr<const JetRing> ring(unsigned l) const;
  /// Also checks that the comultiplication P^(l+k) -> P^l (x) P^k and the
  /// gluing P^k -> P^l (x) P^k send every ideal generator to zero.
  std::shared_ptr<const JetTensorRing> tensor(unsigned l, unsigned k) const;

 private:
  EllipsoidRing base_;
  unsigned degree_cap_;
  mutable std::mutex mutex_;
  mutable std::map<unsigned, std::shared_ptr<const JetRing>> rings_;
  mutable std::map<std::pair<unsigned, unsigned>, std::shared_ptr<const JetTensorRing>> tensors_;
};

/// d^l(a) = class of 1 (x) a, i.e. a(x+t) in P^l.
Polynomial jet(const Polynomial& a, const JetRing& ring);
/// p_l: P^l -> P^(l-1). `to` must have order from.order() - 1.
Polynomial project(const Polynomial& xi, const JetRing& from, const JetRing& to);
/// delta^(l,k): substitute t -> t + u.
Polynomial comultiply(const Polynomial& xi, const JetRing& from, const JetTensorRing& to);
/// Embeds P^k as the right factor of P^l (x)_A P^k: (x, t) -> (x + t, u).
Polynomial glue_right(const Polynomial& eta, const JetTensorRing& to);

/// sum_i xi_i (x) e_i in R (x)_A E where R is a jet ring (x acting on the
/// left); canonical form is M(x) applied to the components.
struct JetModuleElement {
  RingPtr ctx;
  std::vector<Polynomial> components;

  bool is_zero() const;
  std::string to_string() const;
};

JetModuleElement canonical(const ProjectiveModule& module, JetModuleElement e);
JetModuleElement operator-(const JetModuleElement& a, const JetModuleElement& b);

/// nabla^l(v): component i is d^l(x_i(v)), canonicalized.
JetModuleElement nabla_l(const ProjectiveModule& module, const RingVector& v, const JetRing& ring);
/// p_l (x) 1.
JetModuleElement project(const JetModuleElement& e, const JetRing& from, const JetRing& to);

using ModuleMap = std::function<JetModuleElement(const RingVector&)>;

struct MembershipEvidence {
  bool passed = true;
  unsigned samples = 0;
  std::string failure;
  /// Passing is evidence on seeded samples, never a proof.
  static constexpr const char* kNature = "sampled evidence";
};

/// Checks that [...[op, a_1], ..., a_(l+1)](v) vanishes for `samples` seeded
/// random tuples. The multipliers act on the target through x-scalars.
/// l = -1 checks that op itself vanishes.
MembershipEvidence diff_membership_test(const ModuleMap& op, const ProjectiveModule& module, int l,
                                        unsigned samples, std::uint64_t seed);

/// theta_l: E -> E (x)_A P^l for l = 0..L, stored by the images of the
/// generators (column j = theta_l(e_j)); extended by right linearity,
/// theta_l(v) = Theta_l . d^l(v). theta_0 must be the identity.
class InfinityConnection {
 public:
  InfinityConnection(ProjectiveModule module, std::shared_ptr<const JetTower> tower,
                     std::vector<RingMatrix> theta);

  /// theta_l = nabla^l for l = 0..max_order.
  static InfinityConnection from_projective_basis(const ProjectiveModule& module,
                                                  std::shared_ptr<const JetTower> tower,
                                                  unsigned max_order);

  const ProjectiveModule& module() const { return module_; }
  const JetTower& tower() const { return *tower_; }
  unsigned max_order() const { return static_cast<unsigned>(theta_.size() - 1); }
  const RingMatrix& theta(unsigned l) const { return theta_.at(l); }

  JetModuleElement apply(unsigned l, const RingVector& v) const;

 private:
  ProjectiveModule module_;
  std::shared_ptr<const JetTower> tower_;
  std::vector<RingMatrix> theta_;
};

/// K^(l,k)(v) = (theta_l (x) id) theta_k (v) - (id (x) delta^(l,k)) theta_(l+k) (v),
/// canonicalized in E (x) P^l (x) P^k.
JetModuleElement lk_curvature(const InfinityConnection& conn, unsigned l, unsigned k, const RingVector& v);

struct StratificationProbe {
  struct Entry {
    unsigned l;
    unsigned k;
    std::size_t generator;
    bool zero;
    std::string value;
  };
  std::vector<Entry> entries;
  bool flat() const;
  /// First nonzero entry, if any.
  const Entry* witness() const;
};

/// Evaluates K^(l,k) on every generator for l, k >= 1 and l + k <= max_total.
StratificationProbe stratification_probe(const InfinityConnection& conn, unsigned max_total);
/// Evaluates K^(a,b) on every generator for 1 <= a <= l and 1 <= b <= k.
StratificationProbe curvature_probe(const InfinityConnection& conn, unsigned l, unsigned k);

}  // namespace projconn
