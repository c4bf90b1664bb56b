#pragma once

#include <string>
#include <vector>

#include "kazhdan/graph_of_groups.hpp"

namespace kazhdan {

struct UndecidedMembership : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A letter of a free word: either a vertex-group element or a stable-letter
/// power t^{+1}/t^{-1} (HNN only).
struct Letter {
  int t = 0;  // 0 = vertex letter, otherwise +1 / -1
  int vertex = 0;
  int elt = 0;
  static Letter stable(int sign) { return Letter{sign, 0, 0}; }
  static Letter element(int vertex, int elt) { return Letter{0, vertex, elt}; }
};

/// Canonical normal form of a fundamental-group element of a one-edge graph.
///
/// Amalgam F *_K L: head is an edge-group element index, syllables are
/// nontrivial canonical right-coset representatives with sides alternating;
/// the word reads emb(head) . r_1 . ... . r_m.
///
/// HNN extension of F over A ~ B: head is an element of F, syllables are
/// (sign, element) meaning head t^{s_1} g_1 ... t^{s_k} g_k, Britton-reduced
/// with every element in front of a t-letter a canonical left-coset
/// representative.
struct NormalForm {
  struct Syl {
    int sign = 0;  // amalgam: side 0/1; HNN: +1/-1
    int elt = 0;
    friend bool operator==(const Syl&, const Syl&) = default;
    friend auto operator<=>(const Syl&, const Syl&) = default;
  };
  int head = 0;
  std::vector<Syl> syls;

  int syllable_count() const { return static_cast<int>(syls.size()); }
  friend bool operator==(const NormalForm&, const NormalForm&) = default;
  friend std::strong_ordering operator<=>(const NormalForm& a, const NormalForm& b) {
    if (a.syls.size() != b.syls.size()) return a.syls.size() <=> b.syls.size();
    if (a.head != b.head) return a.head <=> b.head;
    return a.syls <=> b.syls;
  }
};

/// Normal-form arithmetic for the fundamental group of a one-edge graph of
/// groups. Pure and immutable; the referenced graph must outlive the engine.
class WordEngine {
public:
  enum class Kind { Amalgam, Hnn };

  explicit WordEngine(const ValidatedGraph& g);

  Kind kind() const { return kind_; }
  const ValidatedGraph& graph() const { return graph_; }

  NormalForm identity() const { return NormalForm{}; }
  bool is_identity(const NormalForm& w) const { return w.head == 0 && w.syls.empty(); }

  NormalForm normalize(const std::vector<Letter>& word) const;
  NormalForm multiply(const NormalForm& a, const NormalForm& b) const;
  NormalForm invert(const NormalForm& a) const;
  /// w g w^-1
  NormalForm conjugate(const NormalForm& w, const NormalForm& g) const;
  NormalForm vertex_element(int vertex, int elt) const;

  /// Buffer-reusing variants for hot loops; out must not alias an argument.
  void multiply_into(NormalForm& out, const NormalForm& a, const NormalForm& b) const;
  void invert_into(NormalForm& out, const NormalForm& a) const;

  /// Torsion classification by cyclic reduction: either the element is
  /// conjugate into a vertex group (a concrete (vertex, element) is
  /// returned) or it has infinite order. Throws UndecidedMembership if the
  /// reduction does not settle within max_steps (never at the default).
  struct Classification {
    bool torsion = false;
    int vertex = 0;
    int elt = 0;
  };
  Classification classify(const NormalForm& w, int max_steps = 0) const;

  /// (vertex, element) readings of a normal form that lies in a vertex
  /// group; empty if it does not. Amalgam head-only forms read in both
  /// endpoint groups.
  std::vector<std::pair<int, int>> vertex_readings(const NormalForm& w) const;
  /// Allocation-free variant; fills at most two readings, returns the count.
  int vertex_readings_into(const NormalForm& w, std::pair<int, int> (&out)[2]) const;

  int input_syllable_count(const std::vector<Letter>& word) const;
  std::string render(const NormalForm& w) const;

  // --- structure accessors (used by the conjugacy oracle) ---
  int source_vertex() const { return source_; }
  int target_vertex() const { return target_; }
  int side_of_vertex(int v) const;
  int edge_group_order() const { return edge_->group.order; }
  /// Amalgam: nontrivial canonical right-coset representatives on a side.
  const std::vector<int>& coset_reps(int side) const { return reps_[side]; }
  /// HNN: canonical left-coset representatives (including 0) used in front
  /// of t^{sign}.
  const std::vector<int>& hnn_reps(int sign) const { return reps_[sign > 0 ? 1 : 0]; }
  const FiniteGroup& hnn_vertex_group() const { return graph_.vertex_group(source_); }

private:
  const ValidatedGraph& graph_;
  Kind kind_;
  const GraphOfGroups::Edge* edge_;
  int source_ = 0, target_ = 0;

  // per side: embedding of edge group, inverse on the image
  std::vector<int> emb_[2];
  std::vector<int> emb_inv_[2];
  // amalgam: right-coset decomposition x = emb(k) * rep;
  // HNN: left-coset decomposition x = rep * emb(k)  (side 0 by A, side 1 by B)
  std::vector<int> rep_of_[2];
  std::vector<int> k_of_[2];
  std::vector<int> reps_[2];  // amalgam: nontrivial reps; HNN: all reps

  const FiniteGroup& side_group(int side) const {
    return graph_.vertex_group(side == 0 ? source_ : target_);
  }

  void rmul_elt(NormalForm& w, int side, int x) const;
  void rmul_edge(NormalForm& w, int k) const;
  void rmul_rep(NormalForm& w, int side, int r) const;
  void rmul_t(NormalForm& w, int sign) const;
  void rmul_hnn_elt(NormalForm& w, int x) const;
};

}  // namespace kazhdan
