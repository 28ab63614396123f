#pragma once

// Decision procedure for antipodal state transfer on Cay(Z_n, S).
//
// Rules, first match wins:
//   1. n odd                                  -> NoPGST (antipodal restriction)
//   2. equal eigenvalues at opposite-parity
//      Fourier modes                          -> NoPGST (parity obstruction)
//   3. S = {1, n-1}: n = 2^k, k >= 2          -> PGST (PST for n = 4); else NoPGST.
//      n = 2                                  -> PST at pi/2
//   4. n = 2^k, S not a gcd-set. With d the least divisor whose gcd class S
//      meets properly:
//        |S ∩ S_n(d)| = 2 mod 4               -> PGST on 2piZ (least divisor)
//        least d' with proper, non-empty
//        intersection of size 2 mod 4         -> PGST on 2piZ (generalised)
//        exactly one of n/2, n/4 in S and
//        every other class size = 0 mod 4     -> PGST on oddHalfPi
//        |S ∩ S_n(d)| = 0 mod 4               -> AlmostPeriodic on 2piZ
//   5. n = 2^k, S a gcd-set: the half/quarter
//      condition above                        -> PST (integral => periodic at
//                                                2 pi, and periodic + PGST => PST)
//   6. otherwise                              -> Unknown
//
// "Least" is numeric order on divisors.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "circulant/diophantine.hpp"
#include "circulant/graph.hpp"
#include "circulant/spectral.hpp"

namespace circulant {

enum class Verdict { PST, PGST, AlmostPeriodic, NoPGST, Unknown };

/// Which result decided the verdict. Wire names (to_string) are
///   CycleCharacterization   "T1"
///   LeastDivisor            "T2"
///   GeneralizedLeastDivisor "T3"
///   HalfQuarterParity       "T4"
///   ParityObstruction       "ParityObstruction"
///   AntipodalRestriction    "LemmaL1"
///   IntegralPeriodicUpgrade "So_IP2_upgrade"
///   None                    "None"
enum class Citation {
  CycleCharacterization,
  LeastDivisor,
  GeneralizedLeastDivisor,
  HalfQuarterParity,
  ParityObstruction,
  AntipodalRestriction,
  IntegralPeriodicUpgrade,
  None,
};

std::string_view to_string(Verdict verdict) noexcept;
std::string_view to_string(Citation citation) noexcept;

struct Classification {
  Verdict verdict = Verdict::Unknown;
  Citation citation = Citation::None;
  std::optional<Index> witness_divisor;
  std::optional<VertexPair> pair;
  std::optional<TimeLattice> lattice;
  std::optional<ParityConflict> obstruction;  // first conflict, lexicographic
  bool numeric_caveat = false;

  bool claims_transfer() const noexcept {
    return verdict == Verdict::PST || verdict == Verdict::PGST;
  }
  friend bool operator==(const Classification& a, const Classification& b) noexcept;
};

Classification classify(const CirculantGraph& graph, const Tolerances& tol = {});

enum class HypothesisOutcome { Holds, Fails, AlmostPeriodicBranch, NotApplicable };

std::string_view to_string(HypothesisOutcome outcome) noexcept;

struct HypothesisCheck {
  Citation rule = Citation::None;
  HypothesisOutcome outcome = HypothesisOutcome::NotApplicable;
  std::optional<Index> divisor;
  std::string detail;
};

/// One entry each for the cycle characterisation, the two least-divisor
/// results, the half/quarter parity result and the parity obstruction.
std::vector<HypothesisCheck> theorem_hypotheses(const CirculantGraph& graph,
                                                const Tolerances& tol = {});

struct VerificationBudget {
  Index q_max = 100'000;
  double pgst_threshold = 0.98;
  double pst_tolerance = 1e-9;
  ScanOptions scan{};
};

struct Evidence {
  TimeLattice lattice;
  QRange range;
  TransferRecord best;
  /// PST: a time with fidelity within pst_tolerance of 1 was found.
  /// PGST: the peak reached pgst_threshold. Other verdicts: false.
  bool confirmed = false;
  /// PST/PGST target not met inside the budget. Reported, never thrown.
  bool budget_exhausted = false;
  std::optional<Amplitude> periodic_phase_at_two_pi;  // integral graphs only
  std::string note;
};

/// Runs the search engine on the verdict's lattice (2piZ for verdicts without
/// one) over q up to budget.q_max. Evidence only; the verdict is untouched.
Evidence verify_classification(const CirculantGraph& graph, const Classification& c,
                               const VerificationBudget& budget = {});

}  // namespace circulant
