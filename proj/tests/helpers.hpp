#pragma once

// Shared test fixtures: small-group builders, random graph generators, and
// independent oracles (a word rewriter and an integer-matrix model) used to
// cross-check the normal-form engine. Test-only code.

#include <algorithm>
#include <array>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "kazhdan/graph_of_groups.hpp"
#include "kazhdan/io.hpp"
#include "kazhdan/words.hpp"

namespace testutil {

using namespace kazhdan;

#ifndef KAZHDAN_DATA_DIR
#define KAZHDAN_DATA_DIR "data"
#endif

inline InputDocument load_doc(const std::string& name) {
  return load_input(std::string(KAZHDAN_DATA_DIR) + "/" + name);
}

// ---- group builders ----

inline FiniteGroup cyclic(int n) {
  GroupSpec s;
  s.table.assign(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) s.table[i][j] = (i + j) % n;
  return build_group(s);
}

// dihedral group of order 2n; indices: r^i -> i, s r^i -> n + i
inline FiniteGroup dihedral(int n) {
  GroupSpec s;
  int o = 2 * n;
  s.table.assign(o, std::vector<int>(o));
  auto idx = [&](bool flip, int i) { return (flip ? n : 0) + ((i % n) + n) % n; };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      s.table[idx(false, i)][idx(false, j)] = idx(false, i + j);
      s.table[idx(false, i)][idx(true, j)] = idx(true, j - i);
      s.table[idx(true, i)][idx(false, j)] = idx(true, i + j);
      s.table[idx(true, i)][idx(true, j)] = idx(false, j - i);
    }
  return build_group(s);
}

inline FiniteGroup klein_four() {
  GroupSpec s;
  s.table = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  s.labels = {"e", "a", "b", "ab"};
  return build_group(s);
}

inline FiniteGroup quaternion8() {
  // 1, i, -1, -i, j, k, -j, -k
  GroupSpec s;
  s.kind = GroupSpec::Kind::Perm;
  s.degree = 8;
  // right multiplication by i and j on the element list above
  s.generators = {{1, 2, 3, 0, 5, 6, 7, 4}, {4, 7, 6, 5, 2, 1, 0, 3}};
  return build_group(s);
}

inline FiniteGroup symmetric(int n) {
  GroupSpec s;
  s.kind = GroupSpec::Kind::Perm;
  s.degree = n;
  std::vector<int> transposition(n), cycle(n);
  for (int i = 0; i < n; ++i) {
    transposition[i] = i;
    cycle[i] = (i + 1) % n;
  }
  std::swap(transposition[0], transposition[1]);
  s.generators = {transposition, cycle};
  return build_group(s);
}

inline FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  GroupSpec s;
  int o = a.order * b.order;
  s.table.assign(o, std::vector<int>(o));
  auto idx = [&](int x, int y) { return x * b.order + y; };
  for (int x1 = 0; x1 < a.order; ++x1)
    for (int y1 = 0; y1 < b.order; ++y1)
      for (int x2 = 0; x2 < a.order; ++x2)
        for (int y2 = 0; y2 < b.order; ++y2)
          s.table[idx(x1, y1)][idx(x2, y2)] = idx(a.at(x1, x2), b.at(y1, y2));
  return build_group(s);
}

// ---- graph builders ----

inline GraphOfGroups::Edge make_edge(std::string id, FiniteGroup eg, int src, int tgt,
                                     std::vector<int> alpha, std::vector<int> beta) {
  GraphOfGroups::Edge e;
  e.id = std::move(id);
  e.group = std::move(eg);
  e.source = src;
  e.target = tgt;
  e.alpha.image = std::move(alpha);
  e.beta.image = std::move(beta);
  return e;
}

/// Amalgam of two cyclic groups over a common cyclic subgroup: Z_m *_{Z_d} Z_n.
inline ValidatedGraph cyclic_amalgam(int m, int n, int d) {
  GraphOfGroups g;
  g.name = "Z" + std::to_string(m) + " *_Z" + std::to_string(d) + " Z" + std::to_string(n);
  g.vertices.push_back({"v1", cyclic(m), "Zm"});
  g.vertices.push_back({"v2", cyclic(n), "Zn"});
  std::vector<int> alpha(d), beta(d);
  for (int k = 0; k < d; ++k) {
    alpha[k] = (m / d) * k;
    beta[k] = (n / d) * k;
  }
  g.edges.push_back(make_edge("e1", cyclic(d), 0, 1, std::move(alpha), std::move(beta)));
  return ValidatedGraph(std::move(g));
}

inline ValidatedGraph sl2z() { return cyclic_amalgam(4, 6, 2); }

inline ValidatedGraph klein_hnn() {
  GraphOfGroups g;
  g.name = "Klein HNN";
  g.vertices.push_back({"v", klein_four(), "V"});
  g.edges.push_back(make_edge("e1", cyclic(2), 0, 0, {0, 1}, {0, 2}));
  return ValidatedGraph(std::move(g));
}

inline ValidatedGraph d4_hnn() {
  GraphOfGroups g;
  g.name = "D4 HNN";
  FiniteGroup d4 = dihedral(4);  // r^i -> i, s r^i -> 4 + i
  g.vertices.push_back({"v", std::move(d4), "D4"});
  g.edges.push_back(make_edge("e1", cyclic(2), 0, 0, {0, 4}, {0, 5}));
  return ValidatedGraph(std::move(g));
}

// ---- randomized graph generators (deterministic seeds) ----

struct RandomPool {
  std::vector<FiniteGroup> groups;
  RandomPool() {
    for (int n = 1; n <= 12; ++n) groups.push_back(cyclic(n));
    groups.push_back(klein_four());
    for (int n = 3; n <= 6; ++n) groups.push_back(dihedral(n));
    groups.push_back(quaternion8());
    groups.push_back(symmetric(3));
    groups.push_back(direct_product(cyclic(2), cyclic(4)));
    groups.push_back(direct_product(cyclic(2), cyclic(6)));
    groups.push_back(direct_product(cyclic(3), cyclic(3)));
  }
};

/// Random amalgam F *_K L with [F:K] >= 3 or [L:K] >= 3, |F|,|L| <= 12.
inline ValidatedGraph random_amalgam(std::mt19937& rng) {
  RandomPool pool;
  while (true) {
    const FiniteGroup& f = pool.groups[rng() % pool.groups.size()];
    const FiniteGroup& l = pool.groups[rng() % pool.groups.size()];
    if (f.order > 12 || l.order > 12) continue;
    auto fs = all_subgroups(f);
    auto ls = all_subgroups(l);
    std::vector<std::pair<Subgroup, Subgroup>> candidates;
    for (const auto& a : fs)
      for (const auto& b : ls) {
        if (a.size() != b.size()) continue;
        if (a.size() == f.order || b.size() == l.order) continue;  // proper
        if (f.order / a.size() < 3 && l.order / b.size() < 3) continue;
        // need an isomorphism; keep the cyclic-subgroup case where one is
        // easy to write down
        bool a_cyc = false, b_cyc = false;
        int ga = 0, gb = 0;
        for (int x : a.members)
          if (f.element_order(x) == a.size()) {
            a_cyc = true;
            ga = x;
            break;
          }
        for (int x : b.members)
          if (l.element_order(x) == b.size()) {
            b_cyc = true;
            gb = x;
            break;
          }
        if (a_cyc && b_cyc) candidates.emplace_back(Subgroup{{ga}}, Subgroup{{gb}});
      }
    if (candidates.empty()) continue;
    auto [ga, gb] = candidates[rng() % candidates.size()];
    int d = f.element_order(ga.members[0]);
    std::vector<int> alpha(d), beta(d);
    int xa = 0, xb = 0;
    for (int k = 0; k < d; ++k) {
      alpha[k] = xa;
      beta[k] = xb;
      xa = f.at(xa, ga.members[0]);
      xb = l.at(xb, gb.members[0]);
    }
    GraphOfGroups g;
    g.name = "random amalgam";
    g.vertices.push_back({"v1", f, "F"});
    g.vertices.push_back({"v2", l, "L"});
    g.edges.push_back(make_edge("e1", cyclic(d), 0, 1, std::move(alpha), std::move(beta)));
    return ValidatedGraph(std::move(g));
  }
}

/// Random HNN datum: F with two proper cyclic subgroups generated by
/// elements of equal order.
inline ValidatedGraph random_hnn(std::mt19937& rng) {
  RandomPool pool;
  while (true) {
    const FiniteGroup& f = pool.groups[rng() % pool.groups.size()];
    if (f.order > 12 || f.order < 2) continue;
    std::vector<std::pair<int, int>> candidates;
    for (int x = 0; x < f.order; ++x)
      for (int y = 0; y < f.order; ++y)
        if (f.element_order(x) == f.element_order(y) && f.element_order(x) < f.order)
          candidates.emplace_back(x, y);
    if (candidates.empty()) continue;
    auto [gx, gy] = candidates[rng() % candidates.size()];
    int d = f.element_order(gx);
    std::vector<int> alpha(d), beta(d);
    int xa = 0, xb = 0;
    for (int k = 0; k < d; ++k) {
      alpha[k] = xa;
      beta[k] = xb;
      xa = f.at(xa, gx);
      xb = f.at(xb, gy);
    }
    GraphOfGroups g;
    g.name = "random hnn";
    g.vertices.push_back({"v", f, "F"});
    g.edges.push_back(make_edge("e1", cyclic(d), 0, 0, std::move(alpha), std::move(beta)));
    return ValidatedGraph(std::move(g));
  }
}

/// Random free word over the vertex groups (plus stable letters on HNN).
inline std::vector<Letter> random_word(const ValidatedGraph& g, std::mt19937& rng,
                                       int max_len) {
  bool hnn = g.edge(0).source == g.edge(0).target;
  int len = static_cast<int>(rng() % (max_len + 1));
  std::vector<Letter> w;
  for (int i = 0; i < len; ++i) {
    if (hnn && rng() % 3 == 0) {
      w.push_back(Letter::stable(rng() % 2 ? 1 : -1));
    } else {
      int v = static_cast<int>(rng() % g.vertex_count());
      int x = static_cast<int>(rng() % g.vertex_group(v).order);
      w.push_back(Letter::element(v, x));
    }
  }
  return w;
}

// ---- independent oracle 1: breadth-first word rewriting ----
//
// Decides equality of two free words by exhaustively closing each under the
// defining relations (merge/cancel inside a vertex group, identify the two
// edge embeddings, Britton pinches and hops, and splitting off edge-subgroup
// factors), then testing whether the closures intersect. Sound because every
// rewrite is an equality; conclusive whenever the closures stay within the
// caps, which the tests assert.

struct Rewriter {
  const ValidatedGraph& g;
  bool hnn;
  size_t max_states = 400000;
  // closures stay within the start length plus this margin; rewriting to the
  // canonical spelling only ever grows a word transiently by one letter
  int growth = 2;
  mutable int max_len = 12;

  explicit Rewriter(const ValidatedGraph& vg)
      : g(vg), hnn(vg.edge(0).source == vg.edge(0).target) {}

  using Word = std::vector<Letter>;
  struct Key {
    std::vector<std::array<int, 3>> v;
    bool operator<(const Key& o) const { return v < o.v; }
  };
  static Key key(const Word& w) {
    Key k;
    for (const Letter& l : w) k.v.push_back({l.t, l.vertex, l.elt});
    return k;
  }

  void push(std::set<Key>& seen, std::vector<Word>& queue, Word w) const {
    // drop identity letters eagerly
    Word c;
    for (const Letter& l : w)
      if (l.t != 0 || l.elt != 0) c.push_back(l);
    if (static_cast<int>(c.size()) > max_len) return;
    if (seen.insert(key(c)).second) queue.push_back(std::move(c));
  }

  std::set<Key> closure(const Word& start, bool& complete) const {
    std::set<Key> seen;
    std::vector<Word> queue;
    complete = true;
    max_len = static_cast<int>(start.size()) + growth;
    push(seen, queue, start);
    const auto& edge = g.edge(0);
    const int ko = edge.group.order;
    while (!queue.empty()) {
      if (seen.size() > max_states) {
        complete = false;
        break;
      }
      Word w = std::move(queue.back());
      queue.pop_back();
      const int n = static_cast<int>(w.size());
      for (int i = 0; i < n; ++i) {
        // merge adjacent same-vertex letters
        if (i + 1 < n && w[i].t == 0 && w[i + 1].t == 0 && w[i].vertex == w[i + 1].vertex) {
          Word c = w;
          c[i].elt = g.vertex_group(w[i].vertex).at(w[i].elt, w[i + 1].elt);
          c.erase(c.begin() + i + 1);
          push(seen, queue, std::move(c));
        }
        if (w[i].t == 0) {
          int v = w[i].vertex;
          // amalgam: swap a letter lying in one edge image to the other side
          if (!hnn) {
            const auto& from = v == edge.source ? edge.alpha.image : edge.beta.image;
            const auto& to = v == edge.source ? edge.beta.image : edge.alpha.image;
            int other = v == edge.source ? edge.target : edge.source;
            for (int k = 0; k < ko; ++k)
              if (from[k] == w[i].elt) {
                Word c = w;
                c[i] = Letter::element(other, to[k]);
                push(seen, queue, std::move(c));
              }
          }
          // split off an edge-subgroup factor on either side
          const FiniteGroup& vg = g.vertex_group(v);
          std::vector<const std::vector<int>*> images;
          if (hnn)
            images = {&edge.alpha.image, &edge.beta.image};
          else
            images = {v == edge.source ? &edge.alpha.image : &edge.beta.image};
          for (const auto* img : images) {
            for (int k = 1; k < ko; ++k) {
              int z = (*img)[k];
              Word c = w;  // x -> (x z^-1) z
              c[i].elt = vg.at(w[i].elt, vg.inverse(z));
              c.insert(c.begin() + i + 1, Letter::element(v, z));
              push(seen, queue, std::move(c));
              Word d = w;  // x -> z (z^-1 x)
              d[i].elt = vg.at(vg.inverse(z), w[i].elt);
              d.insert(d.begin() + i, Letter::element(v, z));
              push(seen, queue, std::move(d));
            }
          }
        }
        if (hnn && w[i].t != 0) {
          // cancellation t t^-1
          if (i + 1 < n && w[i + 1].t == -w[i].t) {
            Word c = w;
            c.erase(c.begin() + i, c.begin() + i + 2);
            push(seen, queue, std::move(c));
          }
          // pinch t a t^-1 -> psi(a), t^-1 b t -> psi^-1(b)
          if (i + 2 < n && w[i + 1].t == 0 && w[i + 2].t == -w[i].t) {
            const auto& from = w[i].t > 0 ? edge.alpha.image : edge.beta.image;
            const auto& to = w[i].t > 0 ? edge.beta.image : edge.alpha.image;
            for (int k = 0; k < ko; ++k)
              if (from[k] == w[i + 1].elt) {
                Word c = w;
                c[i] = Letter::element(w[i + 1].vertex, to[k]);
                c.erase(c.begin() + i + 1, c.begin() + i + 3);
                push(seen, queue, std::move(c));
              }
          }
          // hop: t a <-> psi(a) t  and  t^-1 b <-> psi^-1(b) t^-1
          if (i + 1 < n && w[i + 1].t == 0) {
            const auto& from = w[i].t > 0 ? edge.alpha.image : edge.beta.image;
            const auto& to = w[i].t > 0 ? edge.beta.image : edge.alpha.image;
            for (int k = 0; k < ko; ++k)
              if (from[k] == w[i + 1].elt) {
                Word c = w;
                c[i] = Letter::element(w[i + 1].vertex, to[k]);
                c[i + 1] = Letter::stable(w[i].t);
                push(seen, queue, std::move(c));
              }
          }
        }
        if (hnn && w[i].t == 0 && i + 1 < n && w[i + 1].t != 0) {
          // b t -> t psi^-1(b)   (and a t^-1 -> t^-1 psi(a))
          const auto& from = w[i + 1].t > 0 ? edge.beta.image : edge.alpha.image;
          const auto& to = w[i + 1].t > 0 ? edge.alpha.image : edge.beta.image;
          for (int k = 0; k < ko; ++k)
            if (from[k] == w[i].elt) {
              Word c = w;
              c[i] = Letter::stable(w[i + 1].t);
              c[i + 1] = Letter::element(w[i].vertex, to[k]);
              push(seen, queue, std::move(c));
            }
        }
      }
    }
    return seen;
  }

  /// true/false when conclusive; complete=false marks a cap hit.
  bool equal(const Word& a, const Word& b, bool& complete) const {
    bool ca = true, cb = true;
    auto sa = closure(a, ca);
    auto sb = closure(b, cb);
    complete = ca && cb;
    for (const auto& k : sb)
      if (sa.count(k)) return true;
    return false;
  }
};

// ---- independent oracle 2: SL(2,Z) as integer matrices ----
//
// Z4 *_Z2 Z6 is isomorphic to SL(2,Z) via s = [[0,-1],[1,0]] (order 4) and
// t = [[0,-1],[1,1]] (order 6), with u = s^2 = t^3 = -I. Exact 2x2 integer
// products decide equality of words independently of the engine.

struct Mat2 {
  long long a = 1, b = 0, c = 0, d = 1;
  friend Mat2 operator*(const Mat2& x, const Mat2& y) {
    return Mat2{x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c,
                x.c * y.b + x.d * y.d};
  }
  friend bool operator==(const Mat2&, const Mat2&) = default;
};

inline Mat2 sl2z_matrix(const std::vector<Letter>& word) {
  const Mat2 s{0, -1, 1, 0};
  const Mat2 t{0, -1, 1, 1};
  Mat2 m;
  for (const Letter& l : word) {
    Mat2 gen = l.vertex == 0 ? s : t;
    for (int i = 0; i < l.elt; ++i) m = m * gen;
  }
  return m;
}

}  // namespace testutil
