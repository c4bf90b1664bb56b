#include "kazhdan/fusion.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace kazhdan {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

int TorsionClassTable::locate(int vertex, int elt) const {
  if (vertex < 0 || vertex >= static_cast<int>(index_.size()) || elt < 0 ||
      elt >= static_cast<int>(index_[vertex].size()))
    throw std::out_of_range("locate_class: unknown (vertex, element) pair");
  return index_[vertex][elt];
}

TorsionClassTable element_fusion(const ValidatedGraph& g) {
  // global ids for (vertex, element) pairs
  std::vector<int> offset(g.vertex_count() + 1, 0);
  for (int v = 0; v < g.vertex_count(); ++v)
    offset[v + 1] = offset[v] + g.vertex_group(v).order;
  UnionFind uf(offset.back());

  // (i) local conjugacy, all local relations first
  for (int v = 0; v < g.vertex_count(); ++v) {
    const FiniteGroup& vg = g.vertex_group(v);
    for (int x = 0; x < vg.order; ++x)
      for (int k = 0; k < vg.order; ++k) uf.unite(offset[v] + x, offset[v] + vg.conjugate(k, x));
  }
  // (ii) edge identifications, in declaration order
  for (int e = 0; e < g.edge_count(); ++e) {
    const auto& ed = g.edge(e);
    for (int k = 0; k < ed.group.order; ++k)
      uf.unite(offset[ed.source] + ed.alpha.image[k], offset[ed.target] + ed.beta.image[k]);
  }

  TorsionClassTable t;
  t.index_.resize(g.vertex_count());
  std::map<int, int> root_to_class;
  for (int v = 0; v < g.vertex_count(); ++v) {
    t.index_[v].assign(g.vertex_group(v).order, -1);
    for (int x = 0; x < g.vertex_group(v).order; ++x) {
      int root = uf.find(offset[v] + x);
      auto [it, fresh] = root_to_class.emplace(root, static_cast<int>(t.classes_.size()));
      if (fresh) t.classes_.emplace_back();
      t.index_[v][x] = it->second;
      t.classes_[it->second].emplace_back(v, x);
    }
  }
  // members were discovered in (vertex, element) order, hence sorted; class
  // ids ascend with their least member because roots are minimal ids
  t.orders_.resize(t.classes_.size());
  for (int c = 0; c < t.class_count(); ++c) {
    auto [v, x] = t.classes_[c].front();
    t.orders_[c] = g.vertex_group(v).element_order(x);
  }
  return t;
}

namespace {

using Entry = SubgroupClassTable::Entry;

Subgroup conjugate_subgroup(const FiniteGroup& g, const Subgroup& s, int k) {
  std::vector<int> m;
  m.reserve(s.members.size());
  for (int x : s.members) m.push_back(g.conjugate(k, x));
  std::sort(m.begin(), m.end());
  return Subgroup{std::move(m)};
}

// image of s under an edge map when s lies inside the map's source image;
// returns false when it does not
bool transfer(const GraphOfGroups::Edge& ed, bool from_alpha, const Subgroup& s,
              Subgroup& out) {
  const auto& from = from_alpha ? ed.alpha.image : ed.beta.image;
  const auto& to = from_alpha ? ed.beta.image : ed.alpha.image;
  std::vector<int> inverse(*std::max_element(from.begin(), from.end()) + 1, -1);
  for (int k = 0; k < ed.group.order; ++k) inverse[from[k]] = k;
  std::vector<int> m;
  m.reserve(s.members.size());
  for (int x : s.members) {
    if (x >= static_cast<int>(inverse.size()) || inverse[x] < 0) return false;
    m.push_back(to[inverse[x]]);
  }
  std::sort(m.begin(), m.end());
  out = Subgroup{std::move(m)};
  return true;
}

}  // namespace

SubgroupClassTable subgroup_fusion(const ValidatedGraph& g,
                                   const std::vector<Entry>& stabilizers) {
  for (const auto& [v, s] : stabilizers) {
    if (v < 0 || v >= g.vertex_count())
      throw ValidationError("subgroup_fusion: stabilizer vertex out of range");
    if (!is_subgroup(g.vertex_group(v), s.members))
      throw ValidationError("subgroup_fusion: listed set is not a subgroup of vertex group '" +
                            g.vertex(v).id + "'");
  }

  // closure of the listed subgroups under local conjugacy and edge transfer;
  // discovered entries get dense ids
  std::map<Entry, int> id;
  std::vector<Entry> universe;
  auto intern = [&](const Entry& e) {
    auto [it, fresh] = id.emplace(e, static_cast<int>(universe.size()));
    if (fresh) universe.push_back(e);
    return std::make_pair(it->second, fresh);
  };
  std::vector<int> worklist;
  for (const auto& e : stabilizers) {
    auto [i, fresh] = intern(Entry{e.first, Subgroup{[&] {
                                     auto m = e.second.members;
                                     std::sort(m.begin(), m.end());
                                     return m;
                                   }()}});
    if (fresh) worklist.push_back(i);
  }

  std::vector<std::pair<int, int>> relations;
  while (!worklist.empty()) {
    int cur = worklist.back();
    worklist.pop_back();
    auto [v, s] = universe[cur];
    const FiniteGroup& vg = g.vertex_group(v);
    for (int k = 0; k < vg.order; ++k) {
      auto [j, fresh] = intern(Entry{v, conjugate_subgroup(vg, s, k)});
      relations.emplace_back(cur, j);
      if (fresh) worklist.push_back(j);
    }
    for (int e = 0; e < g.edge_count(); ++e) {
      const auto& ed = g.edge(e);
      Subgroup img;
      if (ed.source == v && transfer(ed, true, s, img)) {
        auto [j, fresh] = intern(Entry{ed.target, img});
        relations.emplace_back(cur, j);
        if (fresh) worklist.push_back(j);
      }
      if (ed.target == v && transfer(ed, false, s, img)) {
        auto [j, fresh] = intern(Entry{ed.source, img});
        relations.emplace_back(cur, j);
        if (fresh) worklist.push_back(j);
      }
    }
  }

  UnionFind uf(static_cast<int>(universe.size()));
  for (auto [a, b] : relations) uf.unite(a, b);

  SubgroupClassTable t;
  std::map<int, int> root_to_class;
  t.class_of_.resize(stabilizers.size());
  for (size_t i = 0; i < stabilizers.size(); ++i) {
    auto m = stabilizers[i].second.members;
    std::sort(m.begin(), m.end());
    int gid = id.at(Entry{stabilizers[i].first, Subgroup{std::move(m)}});
    int root = uf.find(gid);
    auto [it, fresh] = root_to_class.emplace(root, static_cast<int>(t.listed_.size()));
    if (fresh) {
      t.listed_.emplace_back();
      t.reps_.push_back(Entry{-1, Subgroup{}});
    }
    t.class_of_[i] = it->second;
    t.listed_[it->second].push_back(static_cast<int>(i));
  }
  // canonical representative: least (vertex, member tuple) in the whole class
  for (size_t gidx = 0; gidx < universe.size(); ++gidx) {
    auto it = root_to_class.find(uf.find(static_cast<int>(gidx)));
    if (it == root_to_class.end()) continue;
    Entry& rep = t.reps_[it->second];
    if (rep.first < 0 || universe[gidx] < rep) rep = universe[gidx];
  }
  return t;
}

}  // namespace kazhdan
