#include "kazhdan/words.hpp"

#include <algorithm>
#include <cassert>

namespace kazhdan {

WordEngine::WordEngine(const ValidatedGraph& g) : graph_(g) {
  if (g.edge_count() != 1)
    throw ValidationError("normal forms support one-edge graphs only");
  edge_ = &g.edge(0);
  source_ = edge_->source;
  target_ = edge_->target;
  kind_ = source_ == target_ ? Kind::Hnn : Kind::Amalgam;

  const int ko = edge_->group.order;
  for (int side = 0; side < 2; ++side) {
    const std::vector<int>& img = side == 0 ? edge_->alpha.image : edge_->beta.image;
    const FiniteGroup& vg = side == 0 ? g.vertex_group(source_) : g.vertex_group(target_);
    emb_[side] = img;
    emb_inv_[side].assign(vg.order, -1);
    for (int k = 0; k < ko; ++k) emb_inv_[side][img[k]] = k;
    rep_of_[side].resize(vg.order);
    k_of_[side].resize(vg.order);
    if (kind_ == Kind::Amalgam) {
      // right cosets emb(K) * x, canonical representative = least index
      for (int x = 0; x < vg.order; ++x) {
        int rep = x;
        for (int k = 0; k < ko; ++k) rep = std::min(rep, vg.at(img[k], x));
        rep_of_[side][x] = rep;
        k_of_[side][x] = emb_inv_[side][vg.at(x, vg.inverse(rep))];
        assert(k_of_[side][x] >= 0);
      }
      for (int x = 0; x < vg.order; ++x)
        if (x != 0 && rep_of_[side][x] == x) reps_[side].push_back(x);
    } else {
      // left cosets x * emb(K); side 0 decomposes by A (alpha image, in
      // front of t^-1), side 1 by B (beta image, in front of t^+1)
      for (int x = 0; x < vg.order; ++x) {
        int rep = x;
        for (int k = 0; k < ko; ++k) rep = std::min(rep, vg.at(x, img[k]));
        rep_of_[side][x] = rep;
        k_of_[side][x] = emb_inv_[side][vg.at(vg.inverse(rep), x)];
        assert(k_of_[side][x] >= 0);
      }
      for (int x = 0; x < vg.order; ++x)
        if (rep_of_[side][x] == x) reps_[side].push_back(x);
    }
  }
}

int WordEngine::side_of_vertex(int v) const {
  if (v == source_) return 0;
  if (v == target_) return 1;
  throw ValidationError("vertex index " + std::to_string(v) + " is not on the edge");
}

// ---- amalgam arithmetic ----

void WordEngine::rmul_edge(NormalForm& w, int k) const {
  if (k == 0) return;
  if (w.syls.empty()) {
    w.head = edge_->group.at(w.head, k);
    return;
  }
  int side = w.syls.back().sign;
  rmul_elt(w, side, emb_[side][k]);
}

void WordEngine::rmul_rep(NormalForm& w, int side, int r) const {
  if (!w.syls.empty() && w.syls.back().sign == side) {
    rmul_elt(w, side, r);
    return;
  }
  w.syls.push_back({side, r});
}

void WordEngine::rmul_elt(NormalForm& w, int side, int x) const {
  if (x == 0) return;
  const FiniteGroup& vg = side_group(side);
  if (w.syls.empty()) {
    int y = vg.at(emb_[side][w.head], x);
    w.head = k_of_[side][y];
    int r = rep_of_[side][y];
    if (r != 0) w.syls.push_back({side, r});
    return;
  }
  if (w.syls.back().sign == side) {
    int y = vg.at(w.syls.back().elt, x);
    w.syls.pop_back();
    rmul_edge(w, k_of_[side][y]);
    int r = rep_of_[side][y];
    if (r != 0) rmul_rep(w, side, r);
  } else {
    rmul_edge(w, k_of_[side][x]);
    int r = rep_of_[side][x];
    if (r != 0) rmul_rep(w, side, r);
  }
}

// ---- HNN arithmetic ----

void WordEngine::rmul_hnn_elt(NormalForm& w, int x) const {
  if (x == 0) return;
  const FiniteGroup& f = hnn_vertex_group();
  int& last = w.syls.empty() ? w.head : w.syls.back().elt;
  last = f.at(last, x);
}

void WordEngine::rmul_t(NormalForm& w, int sign) const {
  // side 1 tables decompose by B (append t), side 0 by A (append t^-1)
  const int side = sign > 0 ? 1 : 0;
  const int other = 1 - side;
  int last = w.syls.empty() ? w.head : w.syls.back().elt;
  int c = rep_of_[side][last];
  int k = k_of_[side][last];
  if (!w.syls.empty() && w.syls.back().sign == -sign && c == 0) {
    // pinch: t^-1 (elt of B) t  or  t (elt of A) t^-1
    w.syls.pop_back();
    rmul_hnn_elt(w, emb_[other][k]);
    return;
  }
  (w.syls.empty() ? w.head : w.syls.back().elt) = c;
  w.syls.push_back({sign, emb_[other][k]});
}

// ---- shared operations ----

NormalForm WordEngine::vertex_element(int vertex, int elt) const {
  NormalForm w;
  if (kind_ == Kind::Hnn) {
    (void)side_of_vertex(vertex);
    rmul_hnn_elt(w, elt);
  } else {
    rmul_elt(w, side_of_vertex(vertex), elt);
  }
  return w;
}

NormalForm WordEngine::normalize(const std::vector<Letter>& word) const {
  NormalForm w;
  for (const Letter& l : word) {
    if (l.t != 0) {
      if (kind_ != Kind::Hnn)
        throw ValidationError("word contains a stable letter but the graph is an amalgam");
      rmul_t(w, l.t > 0 ? 1 : -1);
    } else {
      const FiniteGroup& vg = graph_.vertex_group(l.vertex);
      if (l.elt < 0 || l.elt >= vg.order)
        throw ValidationError("word letter element index out of range");
      if (kind_ == Kind::Hnn) {
        (void)side_of_vertex(l.vertex);
        rmul_hnn_elt(w, l.elt);
      } else {
        rmul_elt(w, side_of_vertex(l.vertex), l.elt);
      }
    }
  }
  return w;
}

void WordEngine::multiply_into(NormalForm& out, const NormalForm& a,
                               const NormalForm& b) const {
  out.head = a.head;
  out.syls.assign(a.syls.begin(), a.syls.end());
  if (kind_ == Kind::Hnn) {
    rmul_hnn_elt(out, b.head);
    for (const auto& s : b.syls) {
      rmul_t(out, s.sign);
      rmul_hnn_elt(out, s.elt);
    }
  } else {
    rmul_edge(out, b.head);
    for (const auto& s : b.syls) rmul_elt(out, s.sign, s.elt);
  }
}

NormalForm WordEngine::multiply(const NormalForm& a, const NormalForm& b) const {
  NormalForm r;
  multiply_into(r, a, b);
  return r;
}

void WordEngine::invert_into(NormalForm& out, const NormalForm& a) const {
  out.head = 0;
  out.syls.clear();
  if (kind_ == Kind::Hnn) {
    const FiniteGroup& f = hnn_vertex_group();
    for (size_t i = a.syls.size(); i-- > 0;) {
      rmul_hnn_elt(out, f.inverse(a.syls[i].elt));
      rmul_t(out, -a.syls[i].sign);
    }
    rmul_hnn_elt(out, f.inverse(a.head));
  } else {
    for (size_t i = a.syls.size(); i-- > 0;) {
      int side = a.syls[i].sign;
      rmul_elt(out, side, side_group(side).inverse(a.syls[i].elt));
    }
    rmul_edge(out, edge_->group.inverse(a.head));
  }
}

NormalForm WordEngine::invert(const NormalForm& a) const {
  NormalForm r;
  invert_into(r, a);
  return r;
}

NormalForm WordEngine::conjugate(const NormalForm& w, const NormalForm& g) const {
  return multiply(multiply(w, g), invert(w));
}

int WordEngine::vertex_readings_into(const NormalForm& w, std::pair<int, int> (&out)[2]) const {
  if (kind_ == Kind::Hnn) {
    if (!w.syls.empty()) return 0;
    out[0] = {source_, w.head};
    return 1;
  }
  if (w.syls.empty()) {
    out[0] = {source_, emb_[0][w.head]};
    out[1] = {target_, emb_[1][w.head]};
    return 2;
  }
  if (w.syls.size() == 1) {
    int side = w.syls[0].sign;
    int v = side == 0 ? source_ : target_;
    out[0] = {v, side_group(side).at(emb_[side][w.head], w.syls[0].elt)};
    return 1;
  }
  return 0;
}

std::vector<std::pair<int, int>> WordEngine::vertex_readings(const NormalForm& w) const {
  std::pair<int, int> buf[2];
  int n = vertex_readings_into(w, buf);
  return std::vector<std::pair<int, int>>(buf, buf + n);
}

WordEngine::Classification WordEngine::classify(const NormalForm& w, int max_steps) const {
  NormalForm g = w;
  if (max_steps <= 0) max_steps = 4 * (g.syllable_count() + 2) * (g.syllable_count() + 2) + 16;
  int steps = 0;
  auto spend = [&]() {
    if (++steps > max_steps)
      throw UndecidedMembership("undecided membership: cyclic reduction exceeded step bound");
  };
  if (kind_ == Kind::Amalgam) {
    while (true) {
      auto readings = vertex_readings(g);
      if (!readings.empty())
        return Classification{true, readings[0].first, readings[0].second};
      if (g.syllable_count() % 2 == 0) return Classification{false, 0, 0};
      spend();
      NormalForm c = vertex_element(g.syls.back().sign == 0 ? source_ : target_,
                                    g.syls.back().elt);
      NormalForm next = conjugate(c, g);
      assert(next.syllable_count() < g.syllable_count());
      g = std::move(next);
    }
  }
  while (true) {
    if (g.syls.empty()) return Classification{true, source_, g.head};
    int k = g.syllable_count();
    bool reduced_any = false;
    for (int i = 0; i <= k; ++i) {
      spend();
      NormalForm chunk;
      chunk.head = g.head;
      chunk.syls.push_back({g.syls[0].sign, 0});
      NormalForm next = conjugate(invert(chunk), g);
      if (next.syllable_count() < g.syllable_count()) {
        g = std::move(next);
        reduced_any = true;
        break;
      }
      g = std::move(next);
      if (g.syls.empty()) return Classification{true, source_, g.head};
    }
    if (!reduced_any && g.syllable_count() == k) return Classification{false, 0, 0};
  }
}

int WordEngine::input_syllable_count(const std::vector<Letter>& word) const {
  if (kind_ == Kind::Hnn) {
    int n = 0;
    for (const Letter& l : word) n += l.t != 0;
    return n;
  }
  int blocks = 0, cur = -1;
  for (const Letter& l : word) {
    if (l.elt == 0) continue;
    if (l.vertex != cur) {
      ++blocks;
      cur = l.vertex;
    }
  }
  return blocks;
}

std::string WordEngine::render(const NormalForm& w) const {
  if (is_identity(w)) return "e";
  std::vector<std::string> parts;
  auto vertex_label = [&](int v, int x) {
    return graph_.vertex(v).id + "." + graph_.vertex_group(v).label(x);
  };
  if (kind_ == Kind::Hnn) {
    if (w.head != 0) parts.push_back(vertex_label(source_, w.head));
    for (const auto& s : w.syls) {
      parts.push_back(s.sign > 0 ? "t" : "t^-1");
      if (s.elt != 0) parts.push_back(vertex_label(source_, s.elt));
    }
  } else {
    if (w.head != 0) parts.push_back(vertex_label(source_, emb_[0][w.head]));
    for (const auto& s : w.syls)
      parts.push_back(vertex_label(s.sign == 0 ? source_ : target_, s.elt));
  }
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) out += "*";
    out += parts[i];
  }
  return out;
}

}  // namespace kazhdan
