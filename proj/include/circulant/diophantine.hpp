#pragma once

// Transfer-time search: simultaneous approximation of eigenvalue phases and
// brute-force fidelity maximisation over arithmetic progressions of times.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "circulant/dynamics.hpp"

namespace circulant {

enum class LatticeKind {
  TwoPiZ,     // t = 2 pi q
  OddHalfPi,  // t = (2q + 1) pi / 2
};

/// Public spelling: "2piZ" and "oddHalfPi".
std::string_view to_string(LatticeKind kind) noexcept;
/// Throws Error{ParseError}.
LatticeKind parse_lattice(std::string_view name);

/// time(q) = offset + step * q.
struct TimeLattice {
  LatticeKind kind = LatticeKind::TwoPiZ;

  static TimeLattice of(LatticeKind kind) noexcept { return TimeLattice{kind}; }

  double offset() const noexcept;
  double step() const noexcept;
  double time(Index q) const noexcept;
  /// Same time in turns of 2 pi; exact for both lattices.
  TimePoint point(Index q) const noexcept;
  /// 1 for 2piZ (t = 0 is trivial), 0 for oddHalfPi.
  Index default_first() const noexcept;

  friend bool operator==(const TimeLattice&, const TimeLattice&) = default;
};

/// Inclusive on both ends.
struct QRange {
  Index first = 0;
  Index last = 0;

  bool empty() const noexcept { return last < first; }
  Index size() const noexcept { return empty() ? 0 : last - first + 1; }
};

inline constexpr Index kDefaultScanCap = 10'000'000;

struct ScanOptions {
  unsigned threads = 0;  // 0: hardware concurrency
  Index cap = kDefaultScanCap;
};

/// Fidelity |H(time(q))_{u,v}| for every q in range, in q order.
/// Throws Error{EmptyRange | RangeTooLarge | VertexOutOfRange}.
std::vector<TransferRecord> scan_lattice(const CirculantGraph& graph, VertexPair pair,
                                         TimeLattice lattice, QRange range,
                                         const ScanOptions& options = {});

/// Record of maximal fidelity over the range; ties go to the smallest q.
/// The result does not depend on the number of worker threads.
TransferRecord best_time_on_lattice(const CirculantGraph& graph, VertexPair pair,
                                    TimeLattice lattice, QRange range,
                                    const ScanOptions& options = {});
TransferRecord best_time_on_lattice(const QuantumWalk& walk, VertexPair pair,
                                    TimeLattice lattice, QRange range,
                                    const ScanOptions& options = {});

/// Smallest q in range whose fidelity reaches threshold.
std::optional<TransferRecord> first_time_above(const QuantumWalk& walk, VertexPair pair,
                                               TimeLattice lattice, QRange range,
                                               double threshold,
                                               const ScanOptions& options = {});

/// Find q with dist(q theta_j - alpha_j, Z) < eps for all j.
struct KroneckerTarget {
  std::vector<double> thetas;
  std::vector<double> alphas;
  double eps = 1e-3;
};

struct KroneckerSolution {
  Index q = 0;
  std::vector<double> residuals;  // dist(q theta_j - alpha_j, Z)
};

/// |x - round(x)|
double distance_to_integer(double x) noexcept;

/// Exhaustive scan for the smallest q in [1, q_max].
/// Throws Error{LengthMismatch | InvalidArgument}.
std::optional<KroneckerSolution> kronecker_solve(const KroneckerTarget& target, Index q_max);

/// Phase targets that steer the cycle C_n toward antipodal transfer on a
/// 2 pi Z time: thetas are lambda_l = 2 cos(2 pi l / n) for 1 <= l < n/4, and
/// alpha_l = 1/2 when l = divisor * a with a odd, 0 otherwise.
/// Throws Error{NotPowerOfTwo | RatioTooSmall}.
KroneckerTarget half_turn_targets(Index n, Index divisor, double eps = 1e-3);

}  // namespace circulant
