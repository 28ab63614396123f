#include "circulant/diophantine.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <thread>

#include "circulant/error.hpp"
#include "circulant/spectral.hpp"

namespace circulant {

namespace {

unsigned worker_count(const ScanOptions& options, Index work) {
  unsigned threads = options.threads ? options.threads : std::thread::hardware_concurrency();
  threads = std::max(1U, threads);
  // Not worth a thread below a few thousand evaluations.
  const Index useful = std::max<Index>(1, work / 2048);
  return static_cast<unsigned>(std::min<Index>(threads, useful));
}

// Splits [range.first, range.last] into `parts` contiguous chunks and runs
// body(chunk_index, first, last) on each, one thread per chunk.
template <typename Body>
void for_each_chunk(QRange range, unsigned parts, Body&& body) {
  const Index total = range.size();
  auto bounds = [&](unsigned i) {
    const Index lo = range.first + total * i / parts;
    const Index hi = range.first + total * (i + 1) / parts - 1;
    return std::pair{lo, hi};
  };
  if (parts == 1) {
    body(0U, range.first, range.last);
    return;
  }
  std::vector<std::jthread> workers;
  workers.reserve(parts);
  for (unsigned i = 0; i < parts; ++i) {
    const auto [lo, hi] = bounds(i);
    workers.emplace_back([&body, i, lo, hi] { body(i, lo, hi); });
  }
}

void check_pair(const QuantumWalk& walk, VertexPair pair) {
  const Index n = walk.order();
  if (pair.u < 0 || pair.u >= n || pair.v < 0 || pair.v >= n) {
    throw Error(Errc::VertexOutOfRange, "vertex pair (" + std::to_string(pair.u) + ", " +
                                            std::to_string(pair.v) + ") outside 0.." +
                                            std::to_string(n - 1));
  }
}

void check_range(QRange range) {
  if (range.empty()) {
    throw Error(Errc::EmptyRange, "empty q range [" + std::to_string(range.first) + ", " +
                                      std::to_string(range.last) + "]");
  }
}

TransferRecord record_at(const QuantumWalk& walk, Index offset, TimeLattice lattice, Index q) {
  const Amplitude a = walk.amplitude_at(offset, lattice.point(q));
  return {lattice.time(q), q, a, std::abs(a)};
}

Index offset_of(const QuantumWalk& walk, VertexPair pair) {
  const Index n = walk.order();
  return ((pair.v - pair.u) % n + n) % n;
}

// Fractional residual of q * theta - alpha, using the exact product error.
double phase_residual(double theta, Index q, double alpha) noexcept {
  const double qd = static_cast<double>(q);
  const double p = theta * qd;
  const double e = std::fma(theta, qd, -p);
  double r = (p - std::round(p)) + e - alpha;
  return std::abs(r - std::round(r));
}

}  // namespace

std::string_view to_string(LatticeKind kind) noexcept {
  return kind == LatticeKind::TwoPiZ ? "2piZ" : "oddHalfPi";
}

LatticeKind parse_lattice(std::string_view name) {
  if (name == "2piZ") return LatticeKind::TwoPiZ;
  if (name == "oddHalfPi") return LatticeKind::OddHalfPi;
  throw Error(Errc::ParseError,
              "unknown lattice '" + std::string(name) + "' (expected 2piZ or oddHalfPi)");
}

double TimeLattice::offset() const noexcept {
  return kind == LatticeKind::TwoPiZ ? 0.0 : std::numbers::pi / 2.0;
}

double TimeLattice::step() const noexcept {
  return kind == LatticeKind::TwoPiZ ? 2.0 * std::numbers::pi : std::numbers::pi;
}

double TimeLattice::time(Index q) const noexcept {
  return offset() + step() * static_cast<double>(q);
}

TimePoint TimeLattice::point(Index q) const noexcept {
  if (kind == LatticeKind::TwoPiZ) return {0.0, 1.0, q};
  return {0.25, 0.5, q};
}

Index TimeLattice::default_first() const noexcept {
  return kind == LatticeKind::TwoPiZ ? 1 : 0;
}

std::vector<TransferRecord> scan_lattice(const CirculantGraph& graph, VertexPair pair,
                                         TimeLattice lattice, QRange range,
                                         const ScanOptions& options) {
  check_range(range);
  if (range.size() > options.cap) {
    throw Error(Errc::RangeTooLarge, "q range of " + std::to_string(range.size()) +
                                         " values exceeds cap " + std::to_string(options.cap));
  }
  const QuantumWalk walk(graph);
  check_pair(walk, pair);
  const Index offset = offset_of(walk, pair);
  std::vector<TransferRecord> out(static_cast<std::size_t>(range.size()));
  for_each_chunk(range, worker_count(options, range.size()), [&](unsigned, Index lo, Index hi) {
    for (Index q = lo; q <= hi; ++q) out[q - range.first] = record_at(walk, offset, lattice, q);
  });
  return out;
}

TransferRecord best_time_on_lattice(const QuantumWalk& walk, VertexPair pair,
                                    TimeLattice lattice, QRange range,
                                    const ScanOptions& options) {
  check_range(range);
  check_pair(walk, pair);
  const Index offset = offset_of(walk, pair);
  const unsigned parts = worker_count(options, range.size());
  std::vector<TransferRecord> best(parts);
  for_each_chunk(range, parts, [&](unsigned chunk, Index lo, Index hi) {
    TransferRecord local = record_at(walk, offset, lattice, lo);
    for (Index q = lo + 1; q <= hi; ++q) {
      const Amplitude a = walk.amplitude_at(offset, lattice.point(q));
      const double f = std::abs(a);
      if (f > local.fidelity) local = {lattice.time(q), q, a, f};
    }
    best[chunk] = local;
  });
  TransferRecord winner = best.front();
  for (unsigned i = 1; i < parts; ++i) {
    if (best[i].fidelity > winner.fidelity) winner = best[i];
  }
  return winner;
}

TransferRecord best_time_on_lattice(const CirculantGraph& graph, VertexPair pair,
                                    TimeLattice lattice, QRange range,
                                    const ScanOptions& options) {
  return best_time_on_lattice(QuantumWalk(graph), pair, lattice, range, options);
}

std::optional<TransferRecord> first_time_above(const QuantumWalk& walk, VertexPair pair,
                                               TimeLattice lattice, QRange range,
                                               double threshold, const ScanOptions& options) {
  check_range(range);
  check_pair(walk, pair);
  const Index offset = offset_of(walk, pair);
  constexpr Index kBlock = 1 << 16;
  for (Index lo = range.first; lo <= range.last; lo += kBlock) {
    const QRange block{lo, std::min(range.last, lo + kBlock - 1)};
    const unsigned parts = worker_count(options, block.size());
    std::vector<std::optional<TransferRecord>> hits(parts);
    for_each_chunk(block, parts, [&](unsigned chunk, Index a, Index b) {
      for (Index q = a; q <= b; ++q) {
        TransferRecord r = record_at(walk, offset, lattice, q);
        if (r.fidelity >= threshold) {
          hits[chunk] = r;
          return;
        }
      }
    });
    for (const auto& hit : hits) {
      if (hit) return hit;
    }
  }
  return std::nullopt;
}

double distance_to_integer(double x) noexcept { return std::abs(x - std::round(x)); }

std::optional<KroneckerSolution> kronecker_solve(const KroneckerTarget& target, Index q_max) {
  if (target.thetas.size() != target.alphas.size()) {
    throw Error(Errc::LengthMismatch, "thetas has " + std::to_string(target.thetas.size()) +
                                          " entries but alphas has " +
                                          std::to_string(target.alphas.size()));
  }
  if (!(target.eps > 0.0)) throw Error(Errc::InvalidArgument, "eps must be positive");
  if (q_max < 1) throw Error(Errc::InvalidArgument, "q_max must be at least 1");

  const std::size_t dims = target.thetas.size();
  for (Index q = 1; q <= q_max; ++q) {
    std::size_t j = 0;
    while (j < dims && phase_residual(target.thetas[j], q, target.alphas[j]) < target.eps) ++j;
    if (j < dims) continue;
    KroneckerSolution sol{q, std::vector<double>(dims)};
    for (std::size_t k = 0; k < dims; ++k) {
      sol.residuals[k] = phase_residual(target.thetas[k], q, target.alphas[k]);
    }
    return sol;
  }
  return std::nullopt;
}

KroneckerTarget half_turn_targets(Index n, Index divisor, double eps) {
  if (!is_power_of_two(n)) {
    throw Error(Errc::NotPowerOfTwo, "n must be a power of two, got " + std::to_string(n));
  }
  if (!is_power_of_two(divisor)) {
    throw Error(Errc::NotPowerOfTwo, "divisor must be a power of two, got " +
                                         std::to_string(divisor));
  }
  if (divisor > n || n / divisor < 8) {
    throw Error(Errc::RatioTooSmall, "n / divisor must be at least 8, got " +
                                         std::to_string(n) + " / " + std::to_string(divisor));
  }
  KroneckerTarget target;
  target.eps = eps;
  for (Index l = 1; l < n / 4; ++l) {
    target.thetas.push_back(cycle_eigenvalue(n, l));
    const bool odd_multiple = l % divisor == 0 && (l / divisor) % 2 == 1;
    target.alphas.push_back(odd_multiple ? 0.5 : 0.0);
  }
  return target;
}

}  // namespace circulant
