#pragma once

// Closed-form spectra of circulant graphs in Fourier order.

#include <vector>

#include "circulant/graph.hpp"

namespace circulant {

struct Tolerances {
  double integrality = 1e-9;  // distance to the nearest integer
  double equality = 1e-10;    // eigenvalue coincidence for parity conflicts
};

/// 2 cos(2 pi l / n). Angles with l/n a multiple of 1/4 or 1/6 return the
/// exact values 2, 1, 0, -1, -2. Throws Error{IndexOutOfRange}.
double cycle_eigenvalue(Index n, Index l);

/// Same as cycle_eigenvalue but l is reduced mod n first; used internally
/// when summing lambda_{l s mod n}.
double cycle_eigenvalue_mod(Index n, Index l) noexcept;

struct CycleSpectrum {
  Index n = 0;
  std::vector<double> values;  // values[l] = 2 cos(2 pi l / n)
};

CycleSpectrum cycle_spectrum(Index n);

/// Eigenvalues of Cay(Z_n, S) indexed by Fourier mode l:
///   theta_l = sum_{s in S} cos(2 pi l s / n) = 1/2 sum_{s in S} lambda_{l s}.
/// The eigenvector for mode l is (1, w^l, w^{2l}, ...), w = exp(2 pi i / n).
struct Spectrum {
  Index n = 0;
  std::vector<double> values;
  bool integral = false;
};

Spectrum spectrum(const CirculantGraph& graph, double integrality_tol = 1e-9);

/// Eigenvalues for an arbitrary symmetric subset of Z_n \ {0} (no validation).
/// Each orbit {s, n-s} is accumulated as one 2 cos term.
std::vector<double> circulant_eigenvalues(Index n, std::span<const Index> set);

bool all_integral(std::span<const double> values, double tol) noexcept;

struct IndexedEigenvalue {
  Index index = 0;
  double value = 0.0;
};

/// (l, lambda_l) for 0 <= l < n/4 of the cycle C_n, strictly decreasing.
/// Throws Error{NotPowerOfTwo} unless n = 2^k with k >= 3.
std::vector<IndexedEigenvalue> distinct_positive_cycle_eigenvalues(Index n);

/// Two Fourier modes of opposite parity sharing an eigenvalue. Such a pair
/// forces contradictory limit phases on the antipodal amplitude, so no
/// antipodal transfer can approach fidelity 1.
struct ParityConflict {
  Index l = 0;
  Index l_prime = 0;
  double value = 0.0;
};

/// All pairs l < l' of opposite parity with |theta_l - theta_l'| < tol,
/// in lexicographic order.
std::vector<ParityConflict> parity_conflicts(const Spectrum& spec, double tol = 1e-10);

}  // namespace circulant
