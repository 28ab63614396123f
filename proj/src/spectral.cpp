#include "circulant/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "circulant/error.hpp"

namespace circulant {

namespace {

// 2 cos(2 pi m / n) for 0 <= m < n, folded into the first quadrant so the
// argument passed to cos/sin never exceeds pi/4.
double two_cos_turns(Index m, Index n) noexcept {
  if (m > n - m) m = n - m;  // cos is even: m in [0, n/2]
  // Exact quarter and sixth turns.
  if ((4 * m) % n == 0) {
    switch ((4 * m) / n) {
      case 0: return 2.0;
      case 1: return 0.0;
      case 2: return -2.0;
    }
  }
  if ((6 * m) % n == 0) {
    switch ((6 * m) / n) {
      case 1: return 1.0;
      case 2: return -1.0;
    }
  }
  // x = m/n in (0, 1/2). Use cos(2 pi x) = sin(2 pi (1/4 - x)) near the
  // quarter turn and flip sign past it.
  const long double pi2 = 2.0L * std::numbers::pi_v<long double>;
  const long double numer = static_cast<long double>(m);
  const long double denom = static_cast<long double>(n);
  long double value = 0.0L;
  if (8 * m <= n) {
    value = std::cos(pi2 * numer / denom);
  } else if (8 * m <= 3 * n) {
    value = std::sin(pi2 * (denom - 4.0L * numer) / (4.0L * denom));
  } else {
    value = -std::cos(pi2 * (denom - 2.0L * numer) / (2.0L * denom));
  }
  return static_cast<double>(2.0L * value);
}

}  // namespace

double cycle_eigenvalue(Index n, Index l) {
  if (n < 1 || l < 0 || l >= n) {
    throw Error(Errc::IndexOutOfRange, "eigenvalue index " + std::to_string(l) +
                                           " out of range for n = " + std::to_string(n));
  }
  return two_cos_turns(l, n);
}

double cycle_eigenvalue_mod(Index n, Index l) noexcept {
  Index m = l % n;
  if (m < 0) m += n;
  return two_cos_turns(m, n);
}

CycleSpectrum cycle_spectrum(Index n) {
  if (n < 1) throw Error(Errc::InvalidOrder, "order must be positive");
  CycleSpectrum out{n, std::vector<double>(static_cast<std::size_t>(n))};
  for (Index l = 0; l < n; ++l) out.values[l] = two_cos_turns(l, n);
  return out;
}

std::vector<double> circulant_eigenvalues(Index n, std::span<const Index> set) {
  std::vector<double> values(static_cast<std::size_t>(n), 0.0);
  for (Index l = 0; l < n; ++l) {
    double sum = 0.0;
    for (Index s : set) {
      if (2 * s < n) {
        sum += cycle_eigenvalue_mod(n, l * s);  // orbit {s, n-s}
      } else if (2 * s == n) {
        sum += (l % 2 == 0) ? 1.0 : -1.0;
      }
    }
    values[l] = sum;
  }
  return values;
}

bool all_integral(std::span<const double> values, double tol) noexcept {
  return std::all_of(values.begin(), values.end(),
                     [tol](double v) { return std::abs(v - std::round(v)) < tol; });
}

Spectrum spectrum(const CirculantGraph& graph, double integrality_tol) {
  Spectrum out;
  out.n = graph.order();
  out.values = circulant_eigenvalues(graph.order(), graph.connections());
  out.integral = all_integral(out.values, integrality_tol);
  return out;
}

std::vector<IndexedEigenvalue> distinct_positive_cycle_eigenvalues(Index n) {
  if (!is_power_of_two(n) || n < 8) {
    throw Error(Errc::NotPowerOfTwo,
                "need n = 2^k with k >= 3, got " + std::to_string(n));
  }
  std::vector<IndexedEigenvalue> out;
  out.reserve(static_cast<std::size_t>(n / 4));
  for (Index l = 0; l < n / 4; ++l) out.push_back({l, two_cos_turns(l, n)});
  return out;
}

std::vector<ParityConflict> parity_conflicts(const Spectrum& spec, double tol) {
  if (!(tol > 0.0)) throw Error(Errc::InvalidArgument, "tolerance must be positive");
  std::vector<Index> order(spec.values.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<Index>(i);
  std::sort(order.begin(), order.end(), [&](Index a, Index b) {
    return spec.values[a] < spec.values[b] || (spec.values[a] == spec.values[b] && a < b);
  });

  std::vector<ParityConflict> out;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t j = i + 1; j < order.size(); ++j) {
      const Index a = order[i];
      const Index b = order[j];
      if (spec.values[b] - spec.values[a] >= tol) break;
      if ((a - b) % 2 == 0) continue;
      const Index lo = std::min(a, b);
      const Index hi = std::max(a, b);
      out.push_back({lo, hi, spec.values[lo]});
    }
  }
  std::sort(out.begin(), out.end(), [](const ParityConflict& x, const ParityConflict& y) {
    return x.l < y.l || (x.l == y.l && x.l_prime < y.l_prime);
  });
  return out;
}

}  // namespace circulant
