#include "kazhdan/finite_group.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace kazhdan {

int FiniteGroup::element_order(int x) const {
  int n = 1, cur = x;
  while (cur != 0) {
    cur = at(cur, x);
    ++n;
  }
  return n;
}

namespace {

void check_labels(const std::vector<std::string>& labels, int order) {
  if (labels.empty()) return;
  if (static_cast<int>(labels.size()) != order)
    throw GroupError("labels: expected " + std::to_string(order) + " entries");
  std::set<std::string> seen(labels.begin(), labels.end());
  if (static_cast<int>(seen.size()) != order)
    throw GroupError("labels: not pairwise distinct");
}

std::vector<std::string> default_labels(int order) {
  std::vector<std::string> l(order);
  l[0] = "e";
  for (int i = 1; i < order; ++i) l[i] = "g" + std::to_string(i);
  return l;
}

// Greedy generating set: repeatedly adjoin the least element outside the
// closure of what we have.
std::vector<int> generating_set(const FiniteGroup& g) {
  std::vector<int> gens;
  std::vector<char> in_closure(g.order, 0);
  in_closure[0] = 1;
  int covered = 1;
  while (covered < g.order) {
    int fresh = -1;
    for (int x = 0; x < g.order; ++x)
      if (!in_closure[x]) {
        fresh = x;
        break;
      }
    gens.push_back(fresh);
    // grow closure
    std::vector<int> frontier{fresh};
    in_closure[fresh] = 1;
    ++covered;
    while (!frontier.empty()) {
      int x = frontier.back();
      frontier.pop_back();
      for (int y = 0; y < g.order; ++y) {
        if (!in_closure[y]) continue;
        for (int p : {g.at(x, y), g.at(y, x)}) {
          if (!in_closure[p]) {
            in_closure[p] = 1;
            ++covered;
            frontier.push_back(p);
          }
        }
      }
    }
  }
  return gens;
}

FiniteGroup build_from_table(const GroupSpec& spec, int cap) {
  const int n = static_cast<int>(spec.table.size());
  if (n == 0) throw GroupError("not a group: empty table");
  if (n > cap) throw GroupError("group too large: order " + std::to_string(n) +
                                " exceeds cap " + std::to_string(cap));
  FiniteGroup g;
  g.order = n;
  g.mul.resize(static_cast<size_t>(n) * n);
  for (int x = 0; x < n; ++x) {
    if (static_cast<int>(spec.table[x].size()) != n)
      throw GroupError("not a group: table row " + std::to_string(x) + " has wrong length");
    for (int y = 0; y < n; ++y) {
      int v = spec.table[x][y];
      if (v < 0 || v >= n)
        throw GroupError("not a group: table entry out of range at (" + std::to_string(x) +
                         "," + std::to_string(y) + ")");
      g.mul[static_cast<size_t>(x) * n + y] = v;
    }
  }
  // identity
  for (int x = 0; x < n; ++x) {
    if (g.at(0, x) != x || g.at(x, 0) != x)
      throw GroupError("not a group: element 0 is not a two-sided identity");
  }
  // Latin square (each row and column a bijection)
  for (int x = 0; x < n; ++x) {
    std::vector<char> row(n, 0), col(n, 0);
    for (int y = 0; y < n; ++y) {
      if (row[g.at(x, y)]++)
        throw GroupError("not a group: row " + std::to_string(x) + " is not a bijection");
      if (col[g.at(y, x)]++)
        throw GroupError("not a group: column " + std::to_string(x) + " is not a bijection");
    }
  }
  // associativity via Light's test: enough to check triples with the middle
  // argument a generator
  for (int a : generating_set(g)) {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (g.at(g.at(x, a), y) != g.at(x, g.at(a, y)))
          throw GroupError("not a group: multiplication is not associative");
  }
  // inverses now exist: solve x * inv = 0 per row
  g.inv.resize(n);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y)
      if (g.at(x, y) == 0) {
        if (g.at(y, x) != 0) throw GroupError("not a group: no two-sided inverse");
        g.inv[x] = y;
        break;
      }
  }
  g.labels = spec.labels.empty() ? default_labels(n) : spec.labels;
  check_labels(g.labels, n);
  return g;
}

std::vector<int> compose(const std::vector<int>& f, const std::vector<int>& s) {
  // (f then s): point p -> s[f[p]]
  std::vector<int> r(f.size());
  for (size_t p = 0; p < f.size(); ++p) r[p] = s[f[p]];
  return r;
}

FiniteGroup build_from_perms(const GroupSpec& spec, int cap) {
  const int d = spec.degree;
  if (d <= 0) throw GroupError("not a group: permutation degree must be positive");
  for (const auto& gen : spec.generators) {
    if (static_cast<int>(gen.size()) != d)
      throw GroupError("not a group: generator image has wrong length");
    std::vector<char> hit(d, 0);
    for (int v : gen) {
      if (v < 0 || v >= d || hit[v]++)
        throw GroupError("not a group: generator is not a bijection");
    }
  }
  std::vector<int> identity(d);
  for (int p = 0; p < d; ++p) identity[p] = p;

  // breadth-first closure over generator products; discovery order fixes the
  // element indices
  std::vector<std::vector<int>> elems{identity};
  std::map<std::vector<int>, int> index{{identity, 0}};
  for (size_t head = 0; head < elems.size(); ++head) {
    for (const auto& gen : spec.generators) {
      auto prod = compose(elems[head], gen);
      if (index.emplace(prod, static_cast<int>(elems.size())).second) {
        elems.push_back(std::move(prod));
        if (static_cast<int>(elems.size()) > cap)
          throw GroupError("group too large: order exceeds cap " + std::to_string(cap));
      }
    }
  }
  const int n = static_cast<int>(elems.size());
  FiniteGroup g;
  g.order = n;
  g.mul.resize(static_cast<size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      g.mul[static_cast<size_t>(x) * n + y] = index.at(compose(elems[x], elems[y]));
  g.inv.resize(n);
  for (int x = 0; x < n; ++x) {
    std::vector<int> ix(d);
    for (int p = 0; p < d; ++p) ix[elems[x][p]] = p;
    g.inv[x] = index.at(ix);
  }
  g.labels = spec.labels.empty() ? default_labels(n) : spec.labels;
  check_labels(g.labels, n);
  return g;
}

}  // namespace

FiniteGroup build_group(const GroupSpec& spec, int cap) {
  return spec.kind == GroupSpec::Kind::Table ? build_from_table(spec, cap)
                                             : build_from_perms(spec, cap);
}

std::vector<std::vector<int>> conjugacy_classes(const FiniteGroup& g) {
  std::vector<std::vector<int>> classes;
  std::vector<char> seen(g.order, 0);
  for (int x = 0; x < g.order; ++x) {
    if (seen[x]) continue;
    std::set<int> cls;
    for (int k = 0; k < g.order; ++k) cls.insert(g.conjugate(k, x));
    classes.emplace_back(cls.begin(), cls.end());
    for (int m : classes.back()) seen[m] = 1;
  }
  return classes;  // already ordered by minimum member = first unseen x
}

bool Subgroup::contains(int x) const {
  return std::binary_search(members.begin(), members.end(), x);
}

bool is_subgroup(const FiniteGroup& g, const std::vector<int>& members) {
  if (members.empty()) return false;
  std::set<int> s(members.begin(), members.end());
  if (s.size() != members.size()) return false;
  if (!s.count(0)) return false;
  for (int x : s) {
    if (x < 0 || x >= g.order) return false;
    if (!s.count(g.inv[x])) return false;
    for (int y : s)
      if (!s.count(g.at(x, y))) return false;
  }
  return g.order % static_cast<int>(s.size()) == 0;  // Lagrange, checked
}

Subgroup generated_subgroup(const FiniteGroup& g, const std::vector<int>& gens) {
  std::set<int> s{0};
  std::vector<int> frontier{0};
  for (int x : gens)
    if (s.insert(x).second) frontier.push_back(x);
  while (!frontier.empty()) {
    int x = frontier.back();
    frontier.pop_back();
    for (int y : std::vector<int>(s.begin(), s.end())) {
      for (int p : {g.at(x, y), g.at(y, x), g.inv[x]}) {
        if (s.insert(p).second) frontier.push_back(p);
      }
    }
  }
  return Subgroup{std::vector<int>(s.begin(), s.end())};
}

std::vector<Subgroup> all_subgroups(const FiniteGroup& g, int cap) {
  if (g.order > cap)
    throw GroupError("group too large: order " + std::to_string(g.order) + " exceeds cap " +
                     std::to_string(cap));
  std::set<std::vector<int>> found;
  for (int x = 0; x < g.order; ++x) found.insert(generated_subgroup(g, {x}).members);
  // close under pairwise joins until fixpoint
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::vector<int>> snapshot(found.begin(), found.end());
    for (size_t i = 0; i < snapshot.size(); ++i) {
      for (size_t j = i + 1; j < snapshot.size(); ++j) {
        std::vector<int> gens = snapshot[i];
        gens.insert(gens.end(), snapshot[j].begin(), snapshot[j].end());
        auto join = generated_subgroup(g, gens).members;
        if (found.insert(std::move(join)).second) grew = true;
      }
    }
  }
  std::vector<Subgroup> out;
  out.reserve(found.size());
  for (auto& m : found) out.push_back(Subgroup{m});
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.members.size() != b.members.size()) return a.members.size() < b.members.size();
    return a.members < b.members;
  });
  return out;
}

std::optional<std::pair<int, int>> hom_violation(const FiniteGroup& src,
                                                 const FiniteGroup& tgt,
                                                 const GroupHom& h) {
  if (static_cast<int>(h.image.size()) != src.order) return std::make_pair(0, 0);
  for (int v : h.image)
    if (v < 0 || v >= tgt.order) return std::make_pair(0, 0);
  if (h.image[0] != 0) return std::make_pair(0, 0);
  for (int x = 0; x < src.order; ++x)
    for (int y = 0; y < src.order; ++y)
      if (h.image[src.at(x, y)] != tgt.at(h.image[x], h.image[y]))
        return std::make_pair(x, y);
  return std::nullopt;
}

bool check_injective_hom(const FiniteGroup& src, const FiniteGroup& tgt, const GroupHom& h) {
  if (auto w = hom_violation(src, tgt, h))
    throw GroupError("not a homomorphism: violated at pair (" + std::to_string(w->first) +
                     "," + std::to_string(w->second) + ")");
  std::set<int> img(h.image.begin(), h.image.end());
  return img.size() == h.image.size();
}

}  // namespace kazhdan
