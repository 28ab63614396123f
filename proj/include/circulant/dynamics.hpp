#pragma once

// Continuous-time quantum walk H(t) = exp(-i t A) on a circulant graph,
// evaluated through the Fourier diagonalisation of A:
//
//   H(t)_{u,v} = (1/n) sum_l exp(-i theta_l t) w^{l (v - u)},  w = exp(2 pi i / n).
//
// Fidelity is the modulus |H(t)_{u,v}| (not its square).

#include <complex>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "circulant/graph.hpp"

namespace circulant {

using Amplitude = std::complex<double>;

inline constexpr Index kDefaultMatrixCap = 4096;

struct VertexPair {
  Index u = 0;
  Index v = 0;
  friend bool operator==(const VertexPair&, const VertexPair&) = default;
};

/// A time written as t = 2 pi (base + step * q). Lattice scans keep the
/// phase in turns so the reduction mod 2 pi stays exact for large q.
struct TimePoint {
  double base = 0.0;
  double step = 0.0;
  Index q = 0;

  static TimePoint at(double t) noexcept;
  double seconds() const noexcept;
};

struct TransferRecord {
  double t = 0.0;
  std::optional<Index> q;
  Amplitude amplitude{};
  double fidelity = 0.0;
};

/// Caches the spectrum of one graph; all queries are const and thread-safe.
class QuantumWalk {
 public:
  explicit QuantumWalk(CirculantGraph graph);

  const CirculantGraph& graph() const noexcept { return graph_; }
  Index order() const noexcept { return graph_.order(); }
  const std::vector<double>& eigenvalues() const noexcept { return theta_; }

  /// Throws Error{VertexOutOfRange}.
  Amplitude amplitude(Index u, Index v, double t) const;
  double fidelity(Index u, Index v, double t) const;

  /// Entry H_{0,m} at a lattice time; m = (v - u) mod n, no validation.
  Amplitude amplitude_at(Index m, const TimePoint& time) const noexcept;

  /// Row 0 of H(t); row u is this row rotated right by u.
  std::vector<Amplitude> first_row(const TimePoint& time) const;

  /// Dense n x n unitary. Throws Error{OrderTooLarge} when n > cap.
  Eigen::MatrixXcd transition_matrix(double t, Index cap = kDefaultMatrixCap) const;

  /// max( | |H_00| - 1 |, max_{m != 0} |H_0m| ): distance of H(t) from the
  /// set of matrices gamma I with |gamma| = 1.
  double periodicity_defect(const TimePoint& time) const;

 private:
  // weights for target offset m: c_l = cos(2 pi l m / n), doubled for the
  // modes l and n - l which share theta_l.
  void accumulate(Index m, const std::vector<Amplitude>& phases, Amplitude& out) const noexcept;
  std::vector<Amplitude> mode_phases(const TimePoint& time) const;

  CirculantGraph graph_;
  std::vector<double> theta_;
  std::vector<double> root_cos_;  // cos(2 pi j / n), j = 0..n-1
};

Amplitude transition_entry(const CirculantGraph& graph, Index u, Index v, double t);
double fidelity(const CirculantGraph& graph, Index u, Index v, double t);
Eigen::MatrixXcd transition_matrix(const CirculantGraph& graph, double t,
                                   Index cap = kDefaultMatrixCap);

/// gamma when H(t) = gamma I within tol (off-diagonal moduli below tol and
/// the diagonal within tol of a unimodular gamma); nullopt otherwise.
std::optional<Amplitude> is_periodic_at(const CirculantGraph& graph, double t, double tol = 1e-9);

/// || H_{S1 ∪ S2}(t) - H_{S1}(t) H_{S2}(t) ||_max for disjoint symmetric sets
/// on the same vertex set. Throws Error{SetsNotDisjoint | OrderMismatch}.
double product_law_check(const CirculantGraph& first, const CirculantGraph& second, double t,
                         Index cap = kDefaultMatrixCap);

}  // namespace circulant
