#include "kazhdan/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace kazhdan {

namespace {

constexpr std::uint64_t kNoRank = std::numeric_limits<std::uint64_t>::max();

/// One family of candidate words sharing syllable count and sign/side
/// pattern. Position 0 is the head; candidates are the cartesian product of
/// the per-position lists, head varying slowest.
struct Shape {
  std::vector<const std::vector<int>*> lists;
  std::vector<int> signs;  // per syllable
  std::uint64_t count = 0;
  std::uint64_t rank_offset = 0;
};

struct Enumerator {
  const WordEngine& eng;
  std::vector<int> all_vertex_elts;  // HNN head / tail domain
  std::vector<int> all_edge_elts;    // amalgam head domain
  std::vector<Shape> shapes;
  std::uint64_t total = 0;

  Enumerator(const WordEngine& e, int depth) : eng(e) {
    if (depth < 0 || depth > 20)
      throw ValidationError("oracle: depth must be between 0 and 20");
    if (eng.kind() == WordEngine::Kind::Hnn) {
      for (int x = 0; x < eng.hnn_vertex_group().order; ++x) all_vertex_elts.push_back(x);
      shapes.push_back(Shape{{&all_vertex_elts}, {}, 0, 0});
      for (int k = 1; k <= depth; ++k) {
        // sign patterns as a binary counter, +1 first
        for (std::uint32_t bits = 0; bits < (1u << k); ++bits) {
          Shape s;
          s.signs.resize(k);
          for (int i = 0; i < k; ++i) s.signs[i] = (bits >> i) & 1 ? -1 : 1;
          s.lists.push_back(&eng.hnn_reps(s.signs[0]));
          for (int i = 1; i < k; ++i) s.lists.push_back(&eng.hnn_reps(s.signs[i]));
          s.lists.push_back(&all_vertex_elts);
          shapes.push_back(std::move(s));
        }
      }
    } else {
      for (int x = 0; x < eng.edge_group_order(); ++x) all_edge_elts.push_back(x);
      shapes.push_back(Shape{{&all_edge_elts}, {}, 0, 0});
      for (int k = 1; k <= depth; ++k) {
        for (int start : {0, 1}) {
          Shape s;
          s.signs.resize(k);
          s.lists.push_back(&all_edge_elts);
          bool possible = true;
          for (int i = 0; i < k; ++i) {
            int side = (start + i) % 2;
            s.signs[i] = side;
            if (eng.coset_reps(side).empty()) possible = false;
            s.lists.push_back(&eng.coset_reps(side));
          }
          if (possible) shapes.push_back(std::move(s));
        }
      }
    }
    const std::uint64_t cap = std::numeric_limits<std::uint64_t>::max() / 2;
    for (auto& s : shapes) {
      s.rank_offset = total;
      s.count = 1;
      for (const auto* l : s.lists) {
        if (l->empty() || s.count > cap / l->size())
          throw ValidationError("oracle: conjugator enumeration overflows; reduce depth");
        s.count *= l->size();
      }
      total += s.count;
    }
  }

  /// Decodes a candidate; false when the combination violates the Britton
  /// no-pinch constraint (HNN only).
  bool decode(const Shape& s, std::uint64_t idx, NormalForm& w) const {
    const int n = static_cast<int>(s.lists.size());
    int choice[64];
    for (int i = n; i-- > 0;) {
      std::uint64_t sz = s.lists[i]->size();
      choice[i] = (*s.lists[i])[static_cast<size_t>(idx % sz)];
      idx /= sz;
    }
    if (eng.kind() == WordEngine::Kind::Hnn) {
      for (size_t i = 1; i < s.signs.size(); ++i)
        if (s.signs[i] == -s.signs[i - 1] && choice[i] == 0) return false;
    }
    w.head = choice[0];
    w.syls.resize(s.signs.size());
    for (size_t i = 0; i < s.signs.size(); ++i) w.syls[i] = {s.signs[i], choice[i + 1]};
    return true;
  }

  NormalForm at_rank(std::uint64_t rank) const {
    for (const auto& s : shapes) {
      if (rank < s.rank_offset + s.count) {
        NormalForm w;
        decode(s, rank - s.rank_offset, w);
        return w;
      }
    }
    throw std::out_of_range("conjugator rank out of range");
  }
};

void check_size(const Enumerator& en, const OracleOptions& opt) {
  if (en.total > opt.max_candidates)
    throw ValidationError("oracle: conjugator enumeration needs " + std::to_string(en.total) +
                          " candidates, above the configured maximum");
}

/// Scratch buffers for one sweeping thread; reused across candidates so the
/// inner loop does not allocate after warmup.
struct Scratch {
  NormalForm w, w_inv, t1, t2;
  bool matches(const WordEngine& eng, const NormalForm& g, const NormalForm& h) {
    eng.invert_into(w_inv, w);
    eng.multiply_into(t1, w, g);
    eng.multiply_into(t2, t1, w_inv);
    return t2 == h;
  }
};

std::uint64_t sweep_serial(const Enumerator& en, const NormalForm& g, const NormalForm& h,
                           const WordEngine& eng) {
  Scratch sc;
  for (const auto& s : en.shapes) {
    for (std::uint64_t i = 0; i < s.count; ++i) {
      if (!en.decode(s, i, sc.w)) continue;
      if (sc.matches(eng, g, h)) return s.rank_offset + i;
    }
  }
  return kNoRank;
}

std::uint64_t sweep_parallel(const Enumerator& en, const NormalForm& g, const NormalForm& h,
                             const WordEngine& eng) {
  for (const auto& s : en.shapes) {
    std::uint64_t best = kNoRank;
#ifdef _OPENMP
#pragma omp parallel
    {
      std::uint64_t local = kNoRank;
      Scratch sc;
#pragma omp for schedule(static)
      for (long long i = 0; i < static_cast<long long>(s.count); ++i) {
        if (!en.decode(s, static_cast<std::uint64_t>(i), sc.w)) continue;
        if (sc.matches(eng, g, h))
          local = std::min(local, s.rank_offset + static_cast<std::uint64_t>(i));
      }
#pragma omp critical
      best = std::min(best, local);
    }
#else
    Scratch sc;
    for (std::uint64_t i = 0; i < s.count; ++i) {
      if (!en.decode(s, i, sc.w)) continue;
      if (sc.matches(eng, g, h)) {
        best = s.rank_offset + i;
        break;
      }
    }
#endif
    if (best != kNoRank) return best;  // shapes are in rank order
  }
  return kNoRank;
}

ConjugacyVerdict verdict_from(const Enumerator& en, std::uint64_t rank, int depth) {
  ConjugacyVerdict v;
  v.searched_depth = depth;
  if (rank != kNoRank) {
    v.conjugate = true;
    v.witness = en.at_rank(rank);
  }
  return v;
}

}  // namespace

std::uint64_t conjugator_count(const WordEngine& eng, int depth) {
  return Enumerator(eng, depth).total;
}

ConjugacyVerdict are_conjugate(const WordEngine& eng, const NormalForm& g, const NormalForm& h,
                               const OracleOptions& opt) {
  Enumerator en(eng, opt.depth);
  check_size(en, opt);
  std::uint64_t rank =
      opt.parallel ? sweep_parallel(en, g, h, eng) : sweep_serial(en, g, h, eng);
  return verdict_from(en, rank, opt.depth);
}

ConjugacyVerdict are_conjugate_serial(const WordEngine& eng, const NormalForm& g,
                                      const NormalForm& h, const OracleOptions& opt) {
  Enumerator en(eng, opt.depth);
  check_size(en, opt);
  return verdict_from(en, sweep_serial(en, g, h, eng), opt.depth);
}

FusionVerification verify_fusion(const WordEngine& eng, const TorsionClassTable& classes,
                                 const OracleOptions& opt) {
  const auto start = std::chrono::steady_clock::now();
  const ValidatedGraph& g = eng.graph();

  // the torsion pairs, their normal forms, and the reverse index
  std::vector<std::pair<int, int>> pairs;
  std::vector<std::vector<int>> pair_id(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) {
    pair_id[v].assign(g.vertex_group(v).order, -1);
    for (int x = 0; x < g.vertex_group(v).order; ++x) {
      pair_id[v][x] = static_cast<int>(pairs.size());
      pairs.emplace_back(v, x);
    }
  }
  const int P = static_cast<int>(pairs.size());
  std::vector<NormalForm> nf(P);
  for (int i = 0; i < P; ++i) nf[i] = eng.vertex_element(pairs[i].first, pairs[i].second);

  Enumerator en(eng, opt.depth);
  check_size(en, opt);

  // reach[i*P + j] = least rank of a conjugator w with w g_i w^-1 = g_j
  std::vector<std::uint64_t> reach(static_cast<size_t>(P) * P, kNoRank);
  auto run_block = [&](const Shape& s, std::uint64_t lo, std::uint64_t hi,
                       std::vector<std::uint64_t>& out) {
    Scratch sc;
    for (std::uint64_t i = lo; i < hi; ++i) {
      if (!en.decode(s, i, sc.w)) continue;
      eng.invert_into(sc.w_inv, sc.w);
      std::uint64_t rank = s.rank_offset + i;
      for (int p = 0; p < P; ++p) {
        eng.multiply_into(sc.t1, sc.w, nf[p]);
        eng.multiply_into(sc.t2, sc.t1, sc.w_inv);
        std::pair<int, int> readings[2];
        int n = eng.vertex_readings_into(sc.t2, readings);
        for (int k = 0; k < n; ++k) {
          auto [v, y] = readings[k];
          std::uint64_t& slot = out[static_cast<size_t>(p) * P + pair_id[v][y]];
          slot = std::min(slot, rank);
        }
      }
    }
  };

  if (opt.parallel) {
    for (const auto& s : en.shapes) {
#ifdef _OPENMP
#pragma omp parallel
      {
        std::vector<std::uint64_t> local(static_cast<size_t>(P) * P, kNoRank);
        int nt = omp_get_num_threads();
        int tid = omp_get_thread_num();
        std::uint64_t chunk = (s.count + nt - 1) / nt;
        std::uint64_t lo = std::min<std::uint64_t>(s.count, chunk * tid);
        std::uint64_t hi = std::min<std::uint64_t>(s.count, lo + chunk);
        run_block(s, lo, hi, local);
#pragma omp critical
        for (size_t i = 0; i < reach.size(); ++i) reach[i] = std::min(reach[i], local[i]);
      }
#else
      run_block(s, 0, s.count, reach);
#endif
    }
  } else {
    for (const auto& s : en.shapes) run_block(s, 0, s.count, reach);
  }

  FusionVerification out;
  out.depth = opt.depth;
  for (int i = 0; i < P; ++i) {
    for (int j = i; j < P; ++j) {
      bool fused = classes.locate(pairs[i].first, pairs[i].second) ==
                   classes.locate(pairs[j].first, pairs[j].second);
      std::uint64_t rank = std::min(reach[static_cast<size_t>(i) * P + j],
                                    reach[static_cast<size_t>(j) * P + i]);
      bool witnessed = rank != kNoRank;
      bool forward = witnessed && rank == reach[static_cast<size_t>(i) * P + j];
      FusionVerification::PairCheck pc;
      pc.a = forward || !witnessed ? pairs[i] : pairs[j];
      pc.b = forward || !witnessed ? pairs[j] : pairs[i];
      pc.fused = fused;
      pc.witnessed = witnessed;
      if (witnessed) pc.witness = en.at_rank(rank);
      if (fused && witnessed) {
        ++out.certified;
        out.certificates.push_back(std::move(pc));
      } else if (fused && !witnessed) {
        out.failures.push_back(std::move(pc));
      } else if (!fused && witnessed) {
        out.failures.push_back(std::move(pc));
      } else {
        int oi = g.vertex_group(pairs[i].first).element_order(pairs[i].second);
        int oj = g.vertex_group(pairs[j].first).element_order(pairs[j].second);
        if (oi == oj) ++out.refuted;
      }
    }
  }
  out.pass = out.failures.empty();
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

}  // namespace kazhdan
