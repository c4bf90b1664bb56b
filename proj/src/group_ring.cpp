#include "kazhdan/group_ring.hpp"

namespace kazhdan {

void GroupRingElement::add_term(const NormalForm& w, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms.emplace(w, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

GroupRingElement ring_zero() { return {}; }

GroupRingElement ring_identity() {
  GroupRingElement e;
  e.terms.emplace(NormalForm{}, Rational(1));
  return e;
}

GroupRingElement add(const GroupRingElement& x, const GroupRingElement& y) {
  GroupRingElement r = x;
  for (const auto& [w, c] : y.terms) r.add_term(w, c);
  return r;
}

GroupRingElement subtract(const GroupRingElement& x, const GroupRingElement& y) {
  GroupRingElement r = x;
  for (const auto& [w, c] : y.terms) r.add_term(w, -c);
  return r;
}

GroupRingElement scale(const Rational& c, const GroupRingElement& x) {
  GroupRingElement r;
  if (c.is_zero()) return r;
  for (const auto& [w, coef] : x.terms) r.terms.emplace(w, c * coef);
  return r;
}

GroupRingElement multiply(const WordEngine& eng, const GroupRingElement& x,
                          const GroupRingElement& y) {
  GroupRingElement r;
  for (const auto& [g, a] : x.terms)
    for (const auto& [h, b] : y.terms) r.add_term(eng.multiply(g, h), a * b);
  return r;
}

GroupRingElement star(const WordEngine& eng, const GroupRingElement& x) {
  GroupRingElement r;
  for (const auto& [g, a] : x.terms) r.add_term(eng.invert(g), a);
  return r;
}

GroupRingElement averaging_projection(const WordEngine& eng, int vertex, const Subgroup& h) {
  const FiniteGroup& vg = eng.graph().vertex_group(vertex);
  if (!is_subgroup(vg, h.members))
    throw ValidationError("averaging projection: not a subgroup of vertex group '" +
                          eng.graph().vertex(vertex).id + "'");
  GroupRingElement r;
  Rational c(1, h.size());
  for (int x : h.members) r.add_term(eng.vertex_element(vertex, x), c);
  return r;
}

Rational canonical_trace(const GroupRingElement& x) { return x.coefficient(NormalForm{}); }

Rational augmentation(const GroupRingElement& x) {
  Rational s;
  for (const auto& [w, c] : x.terms) s += c;
  return s;
}

Rational delocalised_trace(const WordEngine& eng, const TorsionClassTable& classes,
                           const GroupRingElement& x, int cls, int max_steps) {
  Rational s;
  for (const auto& [w, c] : x.terms) {
    auto loc = eng.classify(w, max_steps);
    if (!loc.torsion) continue;  // infinite order: in no torsion class
    if (classes.locate(loc.vertex, loc.elt) == cls) s += c;
  }
  return s;
}

}  // namespace kazhdan
