#include "kazhdan/invariants.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace kazhdan {

void FormalKClass::normalize() {
  // cancel opposite signs on identical descriptors, then canonical order
  std::map<std::pair<int, Subgroup>, long long> net;
  for (const auto& t : terms) net[{t.vertex, t.stabilizer}] += t.sign;
  terms.clear();
  for (const auto& [key, n] : net) {
    for (long long i = 0; i < std::abs(n); ++i)
      terms.push_back(Term{n < 0 ? -1 : 1, key.first, key.second});
  }
}

namespace {

void require_non_amenable(const ValidatedGraph& g, bool force) {
  if (!force && amenability_gate(g) == Amenability::amenable_or_finite)
    throw AmenableInputError(
        "higher Kazhdan projection does not exist for amenable groups (chi = " +
        euler_characteristic(g).to_string() + " >= 0); pass --force to compute anyway");
}

}  // namespace

FormalKClass kclass_general(const ValidatedGraph& g, const OrbitComplex& complex, int degree) {
  FormalKClass k;
  for (const auto& orbit : complex.orbits) {
    if (orbit.vertex < 0 || orbit.vertex >= g.vertex_count())
      throw ValidationError("orbit stabilizer vertex out of range");
    if (!is_subgroup(g.vertex_group(orbit.vertex), orbit.stabilizer.members))
      throw ValidationError("orbit stabilizer is not a subgroup of vertex group '" +
                            g.vertex(orbit.vertex).id + "'");
    int sign = (orbit.dim + degree) % 2 == 0 ? 1 : -1;
    k.terms.push_back(FormalKClass::Term{sign, orbit.vertex, orbit.stabilizer});
  }
  k.normalize();
  return k;
}

FormalKClass kclass_p1(const ValidatedGraph& g, bool force) {
  require_non_amenable(g, force);
  return kclass_general(g, g.bass_serre_orbits(), 1);
}

RationalSubgroupOfQ fcal(const ValidatedGraph& g) {
  // every finite subgroup is conjugate into a vertex group, so the orders of
  // the vertex-group subgroups exhaust the orders of finite subgroups
  std::set<long long> orders;
  for (int v = 0; v < g.vertex_count(); ++v)
    for (const auto& s : all_subgroups(g.vertex_group(v))) orders.insert(s.size());
  long long lcm = 1;
  for (long long n : orders) lcm = std::lcm(lcm, n);
  long long gc = 0;
  for (long long n : orders) gc = std::gcd(gc, lcm / n);
  return RationalSubgroupOfQ{Rational(gc, lcm)};
}

Rational BettiReport::sum() const {
  Rational s;
  for (const auto& r : rows) s += r.beta;
  return s;
}

BettiReport delocalised_betti_table(const ValidatedGraph& g, const TorsionClassTable& classes,
                                    bool force) {
  require_non_amenable(g, force);
  FormalKClass k = kclass_p1(g, true);

  // which (vertex, element) pairs lie in some edge-stabilizer image
  std::vector<std::vector<char>> in_edge(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) in_edge[v].assign(g.vertex_group(v).order, 0);
  for (int e = 0; e < g.edge_count(); ++e) {
    const auto& ed = g.edge(e);
    for (int x : ed.alpha.image) in_edge[ed.source][x] = 1;
    for (int x : ed.beta.image) in_edge[ed.target][x] = 1;
  }

  // local conjugacy classes per vertex with their least member
  struct Local {
    int vertex;
    std::vector<int> members;
  };
  std::vector<Local> locals;
  std::vector<std::vector<int>> local_of(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) {
    local_of[v].assign(g.vertex_group(v).order, -1);
    for (const auto& cls : conjugacy_classes(g.vertex_group(v))) {
      for (int x : cls) local_of[v][x] = static_cast<int>(locals.size());
      locals.push_back(Local{v, cls});
    }
  }

  BettiReport report;
  report.chi = euler_characteristic(g);
  report.fg = fcal(g);
  report.rows.resize(classes.class_count());

  const int n = classes.class_count();
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (int c = 0; c < n; ++c) {
    BettiReport::Row row;
    row.class_id = c;
    auto [rv, rx] = classes.representative(c);
    row.representative = g.vertex(rv).id + "." + g.vertex_group(rv).label(rx);
    row.order = classes.class_order(c);

    std::map<int, Rational> attribution;  // local class id -> value
    for (const auto& term : k.terms) {
      const Rational weight(term.sign, term.stabilizer.size());
      for (int h : term.stabilizer.members) {
        if (classes.locate(term.vertex, h) != c) continue;
        row.beta += weight;
        attribution[local_of[term.vertex][h]] += weight;
      }
    }
    for (const auto& [lid, value] : attribution) {
      row.attribution.push_back(BettiReport::LocalPart{
          locals[lid].vertex, locals[lid].members.front(), locals[lid].members, value});
    }
    row.in_fg = report.fg.contains(row.beta);
    for (const auto& [v, x] : classes.members(c))
      if (in_edge[v][x]) row.meets_edge_stabilizer = true;
    report.rows[c] = std::move(row);
  }
  return report;
}

Rational l2_betti1(const ValidatedGraph& g) { return -euler_characteristic(g); }

SchreierRank schreier_rank(const ValidatedGraph& g, long long index) {
  if (index < 1) throw ValidationError("schreier rank: index must be >= 1");
  Rational r = Rational(index) * l2_betti1(g) + Rational(1);
  return SchreierRank{r, r.is_integer()};
}

EulerDecomposition euler_cmb_decomposition(const ValidatedGraph& g,
                                           const OrbitComplex& complex) {
  std::vector<SubgroupClassTable::Entry> stabs;
  stabs.reserve(complex.orbits.size());
  for (const auto& o : complex.orbits) {
    auto m = o.stabilizer.members;
    std::sort(m.begin(), m.end());
    stabs.emplace_back(o.vertex, Subgroup{std::move(m)});
  }
  EulerDecomposition d;
  d.classes = subgroup_fusion(g, stabs);
  d.chi.assign(d.classes.class_count(), 0);
  for (size_t i = 0; i < complex.orbits.size(); ++i)
    d.chi[d.classes.class_of_listed(static_cast<int>(i))] +=
        complex.orbits[i].dim % 2 == 0 ? 1 : -1;
  for (int c = 0; c < d.classes.class_count(); ++c) {
    auto [v, s] = d.classes.representative(c);
    for (long long i = 0; i < std::abs(d.chi[c]); ++i)
      d.induced.terms.push_back(FormalKClass::Term{d.chi[c] < 0 ? -1 : 1, v, s});
  }
  d.induced.normalize();
  d.orbitwise = kclass_general(g, complex, 0);  // plain (-1)^{|sigma|} sum
  return d;
}

}  // namespace kazhdan
