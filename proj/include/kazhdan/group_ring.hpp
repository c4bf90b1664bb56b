#pragma once

#include <map>

#include "kazhdan/fusion.hpp"
#include "kazhdan/rational.hpp"
#include "kazhdan/words.hpp"

namespace kazhdan {

/// Finitely supported exact-rational combination of normal forms. Keys are
/// canonical; zero coefficients are never stored.
struct GroupRingElement {
  std::map<NormalForm, Rational> terms;

  bool is_zero() const { return terms.empty(); }
  Rational coefficient(const NormalForm& w) const {
    auto it = terms.find(w);
    return it == terms.end() ? Rational(0) : it->second;
  }
  void add_term(const NormalForm& w, const Rational& c);
};

GroupRingElement ring_zero();
GroupRingElement ring_identity();

GroupRingElement add(const GroupRingElement& x, const GroupRingElement& y);
GroupRingElement subtract(const GroupRingElement& x, const GroupRingElement& y);
GroupRingElement scale(const Rational& c, const GroupRingElement& x);
/// Convolution product via normal-form multiplication.
GroupRingElement multiply(const WordEngine& eng, const GroupRingElement& x,
                          const GroupRingElement& y);
/// Involution g -> g^-1 (rational coefficients fixed).
GroupRingElement star(const WordEngine& eng, const GroupRingElement& x);

/// rho_H = (1/|H|) sum_{h in H} h for a subgroup H of the named vertex group.
GroupRingElement averaging_projection(const WordEngine& eng, int vertex, const Subgroup& h);

/// Coefficient at the identity (the von Neumann trace on group-ring
/// representatives).
Rational canonical_trace(const GroupRingElement& x);

/// Sum of all coefficients.
Rational augmentation(const GroupRingElement& x);

/// Sum of coefficients over the given conjugacy class. Support elements are
/// classified by cyclic reduction; infinite-order elements lie in no torsion
/// class. max_steps caps the reduction (0 = automatic bound).
Rational delocalised_trace(const WordEngine& eng, const TorsionClassTable& classes,
                           const GroupRingElement& x, int cls, int max_steps = 0);

}  // namespace kazhdan
