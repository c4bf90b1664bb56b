#pragma once

#include <string>
#include <utility>
#include <vector>

#include "kazhdan/graph_of_groups.hpp"

namespace kazhdan {

/// Partition of all (vertex, element) pairs into conjugacy classes of the
/// fundamental group, generated by local conjugacy inside each vertex group
/// and the edge identifications alpha_e(x) ~ beta_e(x).
class TorsionClassTable {
public:
  using Pair = std::pair<int, int>;  // (vertex index, element index)

  int class_count() const { return static_cast<int>(classes_.size()); }
  const std::vector<Pair>& members(int cls) const { return classes_[cls]; }
  /// Lexicographically least member.
  Pair representative(int cls) const { return classes_[cls].front(); }
  int locate(int vertex, int elt) const;
  /// Common element order of the class members.
  int class_order(int cls) const { return orders_[cls]; }
  int identity_class() const { return locate(0, 0); }

private:
  friend TorsionClassTable element_fusion(const ValidatedGraph& g);
  std::vector<std::vector<Pair>> classes_;
  std::vector<std::vector<int>> index_;  // per vertex, per element -> class id
  std::vector<int> orders_;
};

TorsionClassTable element_fusion(const ValidatedGraph& g);

/// Partition of a list of (vertex, Subgroup) stabilizers under conjugacy in
/// the fundamental group: closed under local conjugacy of subgroups and
/// transfer across edge maps (including through intermediate images).
class SubgroupClassTable {
public:
  using Entry = std::pair<int, Subgroup>;  // (vertex index, subgroup)

  int class_count() const { return static_cast<int>(listed_.size()); }
  /// Listed stabilizers belonging to the class, in input order.
  const std::vector<int>& listed(int cls) const { return listed_[cls]; }
  Entry representative(int cls) const { return reps_[cls]; }
  int class_of_listed(int i) const { return class_of_[i]; }

private:
  friend SubgroupClassTable subgroup_fusion(const ValidatedGraph& g,
                                            const std::vector<Entry>& stabilizers);
  std::vector<std::vector<int>> listed_;
  std::vector<Entry> reps_;
  std::vector<int> class_of_;
};

SubgroupClassTable subgroup_fusion(const ValidatedGraph& g,
                                   const std::vector<SubgroupClassTable::Entry>& stabilizers);

}  // namespace kazhdan
