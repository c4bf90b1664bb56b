#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace kazhdan {

struct GroupError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A finite group on dense element indices 0..order-1 with 0 the identity.
/// Multiplication and inverse are full lookup tables; labels are optional
/// display strings (pairwise distinct when present).
struct FiniteGroup {
  int order = 0;
  std::vector<int> mul;  // row-major order x order
  std::vector<int> inv;
  std::vector<std::string> labels;

  int at(int x, int y) const { return mul[static_cast<size_t>(x) * order + y]; }
  int inverse(int x) const { return inv[x]; }
  const std::string& label(int x) const { return labels[x]; }

  int element_order(int x) const;
  int conjugate(int g, int x) const { return at(at(g, x), inv[g]); }  // g x g^-1
};

/// Build input: either a full multiplication table or permutation generators
/// acting on 0..degree-1.
struct GroupSpec {
  enum class Kind { Table, Perm } kind = Kind::Table;
  std::vector<std::vector<int>> table;
  int degree = 0;
  std::vector<std::vector<int>> generators;
  std::vector<std::string> labels;  // optional
};

inline constexpr int kDefaultGroupCap = 5040;

/// Validates and constructs a FiniteGroup. Table input is checked for the
/// full group axioms (associativity via Light's test on a generating set).
/// Permutation input is closed breadth-first over generator products, which
/// fixes the element indexing.
FiniteGroup build_group(const GroupSpec& spec, int cap = kDefaultGroupCap);

/// Conjugacy classes as sorted index sets, ordered by minimum member.
std::vector<std::vector<int>> conjugacy_classes(const FiniteGroup& g);

/// A subgroup given by its sorted member set (always contains 0).
struct Subgroup {
  std::vector<int> members;
  int size() const { return static_cast<int>(members.size()); }
  bool contains(int x) const;
  friend bool operator==(const Subgroup&, const Subgroup&) = default;
  friend auto operator<=>(const Subgroup&, const Subgroup&) = default;
};

bool is_subgroup(const FiniteGroup& g, const std::vector<int>& members);
Subgroup generated_subgroup(const FiniteGroup& g, const std::vector<int>& gens);

/// The complete subgroup lattice, computed by closing the cyclic subgroups
/// under pairwise joins. Deterministic order: by size, then member set.
std::vector<Subgroup> all_subgroups(const FiniteGroup& g, int cap = kDefaultGroupCap);

/// A homomorphism given as a full image array, one target index per source
/// element.
struct GroupHom {
  std::vector<int> image;
};

/// Returns a witnessing pair (x, y) with image[xy] != image[x]image[y] when
/// the map is not a homomorphism, std::nullopt when it is.
std::optional<std::pair<int, int>> hom_violation(const FiniteGroup& src,
                                                 const FiniteGroup& tgt,
                                                 const GroupHom& h);

/// True iff h is injective. Throws GroupError (naming a witness pair) when h
/// is not a homomorphism at all.
bool check_injective_hom(const FiniteGroup& src, const FiniteGroup& tgt, const GroupHom& h);

}  // namespace kazhdan
