#pragma once

#include <string>
#include <vector>

#include "kazhdan/fusion.hpp"
#include "kazhdan/graph_of_groups.hpp"
#include "kazhdan/rational.hpp"

namespace kazhdan {

struct AmenableInputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A class in K_0 of the reduced group C*-algebra written as a signed formal
/// sum of averaging projections over stabilizer subgroups. Terms with equal
/// descriptor and opposite signs cancel on normalization; canonical order is
/// (vertex, member tuple, sign).
struct FormalKClass {
  struct Term {
    int sign = 1;  // +1 or -1
    int vertex = 0;
    Subgroup stabilizer;
    friend bool operator==(const Term&, const Term&) = default;
  };
  std::vector<Term> terms;

  void normalize();
  friend bool operator==(const FormalKClass&, const FormalKClass&) = default;
};

/// The K-theory class of the degree-1 higher Kazhdan projection of the
/// fundamental group, from the Bass-Serre orbit data:
/// [p_1] = sum over edges [rho_e] - sum over vertices [rho_v].
/// Refuses amenable input unless force is set.
FormalKClass kclass_p1(const ValidatedGraph& g, bool force = false);

/// Degree-n class from arbitrary orbit data:
/// [p_n] = sum over orbits (-1)^(|sigma| + n) [rho_sigma].
FormalKClass kclass_general(const ValidatedGraph& g, const OrbitComplex& complex, int degree);

/// The additive subgroup of Q generated by the inverses of the orders of the
/// finite subgroups, represented by its positive generator g/L.
struct RationalSubgroupOfQ {
  Rational generator;
  bool contains(const Rational& q) const { return (q / generator).is_integer(); }
};

RationalSubgroupOfQ fcal(const ValidatedGraph& g);

/// Per torsion class: the first delocalised L2-Betti number, its breakdown
/// over the constituent vertex-local conjugacy classes, and related flags.
struct BettiReport {
  struct LocalPart {
    int vertex = 0;
    int local_rep = 0;  // least element of the local conjugacy class
    std::vector<int> local_members;
    Rational value;
  };
  struct Row {
    int class_id = 0;
    std::string representative;  // "<vertexid>.<element label>"
    int order = 1;
    Rational beta;
    std::vector<LocalPart> attribution;
    bool in_fg = false;
    bool meets_edge_stabilizer = false;
  };
  std::vector<Row> rows;
  Rational chi;
  RationalSubgroupOfQ fg;

  Rational sum() const;
};

BettiReport delocalised_betti_table(const ValidatedGraph& g, const TorsionClassTable& classes,
                                    bool force = false);

/// beta_1 = -chi(G); the identity-class entry of the table.
Rational l2_betti1(const ValidatedGraph& g);

/// Generalised Schreier rank r = j * beta_1 + 1 for a hypothetical free
/// subgroup of index j. Non-integral results are reported, not rejected.
struct SchreierRank {
  Rational rank;
  bool integral = false;
};
SchreierRank schreier_rank(const ValidatedGraph& g, long long index);

/// Stabilizer-class decomposition of the combinatorial Euler class: groups
/// the orbits by fused stabilizer class, records chi(X, H) per class, and
/// the induced formal K-class (dim_H mapped to [rho_H]).
struct EulerDecomposition {
  SubgroupClassTable classes;
  std::vector<long long> chi;  // per class
  FormalKClass induced;        // chi-weighted representatives, normalized
  FormalKClass orbitwise;      // plain alternating sum over orbits, normalized
};
EulerDecomposition euler_cmb_decomposition(const ValidatedGraph& g, const OrbitComplex& complex);

}  // namespace kazhdan
