#include "circulant/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "circulant/error.hpp"
#include "circulant/spectral.hpp"

namespace circulant {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// H(0) = I exactly; the Fourier sum would leave rounding off the diagonal.
bool at_origin(const TimePoint& time) noexcept {
  return time.base + time.step * static_cast<double>(time.q) == 0.0;
}

// theta * (base + step * q) mod 1, in [-1/2, 1/2]. Each product is split
// into its rounded value and the exact fma residual before reduction.
double reduced_turns(double theta, const TimePoint& time) noexcept {
  const double a = theta * time.base;
  const double ea = std::fma(theta, time.base, -a);
  const double c = theta * time.step;
  const double ec = std::fma(theta, time.step, -c);
  const double qd = static_cast<double>(time.q);
  const double p = c * qd;
  const double ep = std::fma(c, qd, -p);
  double r = (a - std::round(a)) + (p - std::round(p));
  r += ea + ep + ec * qd;
  return r - std::round(r);
}

// exp(-2 pi i r), exact at quarter turns.
Amplitude unit_phase(double r) noexcept {
  const double quarter = r * 4.0;
  if (quarter == std::round(quarter)) {
    switch (static_cast<int>(std::lround(quarter)) & 3) {
      case 0: return {1.0, 0.0};
      case 1: return {0.0, -1.0};
      case 2: return {-1.0, 0.0};
      case 3: return {0.0, 1.0};
    }
  }
  const double angle = -kTwoPi * r;
  return {std::cos(angle), std::sin(angle)};
}

Index wrap(Index x, Index n) noexcept {
  Index r = x % n;
  return r < 0 ? r + n : r;
}

}  // namespace

TimePoint TimePoint::at(double t) noexcept { return {t / kTwoPi, 0.0, 0}; }

double TimePoint::seconds() const noexcept {
  return kTwoPi * (base + step * static_cast<double>(q));
}

QuantumWalk::QuantumWalk(CirculantGraph graph)
    : graph_(std::move(graph)),
      theta_(circulant_eigenvalues(graph_.order(), graph_.connections())) {
  const Index n = graph_.order();
  root_cos_.resize(static_cast<std::size_t>(n));
  for (Index j = 0; j < n; ++j) root_cos_[j] = 0.5 * cycle_eigenvalue_mod(n, j);
}

std::vector<Amplitude> QuantumWalk::mode_phases(const TimePoint& time) const {
  const Index half = order() / 2;
  std::vector<Amplitude> phases(static_cast<std::size_t>(half + 1));
  for (Index l = 0; l <= half; ++l) phases[l] = unit_phase(reduced_turns(theta_[l], time));
  return phases;
}

void QuantumWalk::accumulate(Index m, const std::vector<Amplitude>& phases,
                             Amplitude& out) const noexcept {
  const Index n = order();
  double re = 0.0;
  double im = 0.0;
  for (Index l = 0; l < static_cast<Index>(phases.size()); ++l) {
    const bool self_paired = (l == 0) || (2 * l == n);
    const double weight = (self_paired ? 1.0 : 2.0) * root_cos_[(l * m) % n];
    re += weight * phases[l].real();
    im += weight * phases[l].imag();
  }
  const double inv = 1.0 / static_cast<double>(n);
  out = {re * inv, im * inv};
}

Amplitude QuantumWalk::amplitude_at(Index m, const TimePoint& time) const noexcept {
  const Index n = order();
  if (at_origin(time)) return m == 0 ? Amplitude{1.0, 0.0} : Amplitude{0.0, 0.0};
  const Index half = n / 2;
  double re = 0.0;
  double im = 0.0;
  for (Index l = 0; l <= half; ++l) {
    const bool self_paired = (l == 0) || (2 * l == n);
    const double weight = (self_paired ? 1.0 : 2.0) * root_cos_[(l * m) % n];
    if (weight == 0.0) continue;
    const Amplitude phase = unit_phase(reduced_turns(theta_[l], time));
    re += weight * phase.real();
    im += weight * phase.imag();
  }
  const double inv = 1.0 / static_cast<double>(n);
  return {re * inv, im * inv};
}

Amplitude QuantumWalk::amplitude(Index u, Index v, double t) const {
  const Index n = order();
  if (u < 0 || u >= n || v < 0 || v >= n) {
    throw Error(Errc::VertexOutOfRange, "vertex pair (" + std::to_string(u) + ", " +
                                            std::to_string(v) + ") outside 0.." +
                                            std::to_string(n - 1));
  }
  return amplitude_at(wrap(v - u, n), TimePoint::at(t));
}

double QuantumWalk::fidelity(Index u, Index v, double t) const {
  return std::abs(amplitude(u, v, t));
}

std::vector<Amplitude> QuantumWalk::first_row(const TimePoint& time) const {
  if (at_origin(time)) {
    std::vector<Amplitude> unit(static_cast<std::size_t>(order()));
    unit[0] = 1.0;
    return unit;
  }
  const auto phases = mode_phases(time);
  std::vector<Amplitude> row(static_cast<std::size_t>(order()));
  for (Index m = 0; m < order(); ++m) accumulate(m, phases, row[m]);
  return row;
}

Eigen::MatrixXcd QuantumWalk::transition_matrix(double t, Index cap) const {
  const Index n = order();
  if (n > cap) {
    throw Error(Errc::OrderTooLarge, "dense transition matrix requested for n = " +
                                         std::to_string(n) + " above cap " + std::to_string(cap));
  }
  const auto row = first_row(TimePoint::at(t));
  Eigen::MatrixXcd h(n, n);
  for (Index u = 0; u < n; ++u) {
    for (Index v = 0; v < n; ++v) h(u, v) = row[wrap(v - u, n)];
  }
  return h;
}

double QuantumWalk::periodicity_defect(const TimePoint& time) const {
  const auto row = first_row(time);
  double defect = std::abs(std::abs(row[0]) - 1.0);
  for (std::size_t m = 1; m < row.size(); ++m) defect = std::max(defect, std::abs(row[m]));
  return defect;
}

Amplitude transition_entry(const CirculantGraph& graph, Index u, Index v, double t) {
  return QuantumWalk(graph).amplitude(u, v, t);
}

double fidelity(const CirculantGraph& graph, Index u, Index v, double t) {
  return QuantumWalk(graph).fidelity(u, v, t);
}

Eigen::MatrixXcd transition_matrix(const CirculantGraph& graph, double t, Index cap) {
  return QuantumWalk(graph).transition_matrix(t, cap);
}

std::optional<Amplitude> is_periodic_at(const CirculantGraph& graph, double t, double tol) {
  if (!(tol > 0.0)) throw Error(Errc::InvalidArgument, "tolerance must be positive");
  const QuantumWalk walk(graph);
  const auto row = walk.first_row(TimePoint::at(t));
  for (std::size_t m = 1; m < row.size(); ++m) {
    if (std::abs(row[m]) >= tol) return std::nullopt;
  }
  const double modulus = std::abs(row[0]);
  if (std::abs(modulus - 1.0) >= tol) return std::nullopt;
  // Circulant: every diagonal entry equals row[0].
  return row[0] / modulus;
}

double product_law_check(const CirculantGraph& first, const CirculantGraph& second, double t,
                         Index cap) {
  if (first.order() != second.order()) {
    throw Error(Errc::OrderMismatch, "graphs have different orders " +
                                         std::to_string(first.order()) + " and " +
                                         std::to_string(second.order()));
  }
  std::vector<Index> joined = first.connections();
  for (Index s : second.connections()) {
    if (first.contains(s)) {
      throw Error(Errc::SetsNotDisjoint, "connection sets share " + std::to_string(s));
    }
    joined.push_back(s);
  }
  const CirculantGraph both(first.order(), joined);
  const Eigen::MatrixXcd lhs = transition_matrix(both, t, cap);
  const Eigen::MatrixXcd rhs = transition_matrix(first, t, cap) * transition_matrix(second, t, cap);
  return (lhs - rhs).cwiseAbs().maxCoeff();
}

}  // namespace circulant
