#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kazhdan/fusion.hpp"
#include "kazhdan/words.hpp"

namespace kazhdan {

/// Brute-force conjugacy verification on one-edge graphs: exhaustive
/// enumeration of canonical conjugator words up to a syllable-length bound.
/// The oracle can certify conjugacy (with an exact witness); absence of a
/// witness within the bound is evidence, not proof.

struct OracleOptions {
  int depth = 6;
  bool parallel = true;
  /// refuse enumerations larger than this many candidate conjugators
  std::uint64_t max_candidates = 500'000'000ull;
};

struct ConjugacyVerdict {
  bool conjugate = false;
  NormalForm witness;  // meaningful iff conjugate
  int searched_depth = 0;
};

/// First witness w (in the canonical enumeration order: syllable length,
/// then lexicographic) with w g w^-1 = h, if any exists within depth.
ConjugacyVerdict are_conjugate(const WordEngine& eng, const NormalForm& g,
                               const NormalForm& h, const OracleOptions& opt = {});

/// Straight-line single-threaded reference; must agree with are_conjugate.
ConjugacyVerdict are_conjugate_serial(const WordEngine& eng, const NormalForm& g,
                                      const NormalForm& h, const OracleOptions& opt = {});

struct FusionVerification {
  struct PairCheck {
    std::pair<int, int> a, b;  // (vertex, element) pairs
    bool fused = false;
    bool witnessed = false;
    NormalForm witness;  // meaningful iff witnessed
  };
  bool pass = false;
  int certified = 0;  // fused pairs with a certificate
  int refuted = 0;    // unfused same-order pairs with no witness in range
  std::vector<PairCheck> failures;
  std::vector<PairCheck> certificates;
  double seconds = 0.0;
  int depth = 0;
};

/// Checks the fusion table against exhaustive conjugator search: every fused
/// pair must have a certificate within depth, no unfused pair may have one.
FusionVerification verify_fusion(const WordEngine& eng, const TorsionClassTable& classes,
                                 const OracleOptions& opt = {});

/// Number of canonical conjugator words of syllable length <= depth
/// (the size of the oracle's search space).
std::uint64_t conjugator_count(const WordEngine& eng, int depth);

}  // namespace kazhdan
