#include <catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "circulant/diophantine.hpp"
#include "circulant/error.hpp"
#include "circulant/spectral.hpp"
#include "oracle.hpp"

using namespace circulant;
using Catch::Matchers::WithinAbs;

namespace {

constexpr double kPi = std::numbers::pi;

Errc error_code(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected circulant::Error");
  return Errc::InvalidArgument;
}

const CirculantGraph& least_divisor_graph() {
  static const auto g = make_graph(16, {1, 2, 3, 4, 12, 13, 14, 15});
  return g;
}

const CirculantGraph& half_quarter_graph() {
  static const auto g = make_graph(16, {1, 3, 4, 12, 13, 15});
  return g;
}

constexpr TimeLattice kTwoPi{LatticeKind::TwoPiZ};
constexpr TimeLattice kOddHalf{LatticeKind::OddHalfPi};

}  // namespace

TEST_CASE("lattice geometry", "[diophantine]") {
  CHECK(to_string(LatticeKind::TwoPiZ) == "2piZ");
  CHECK(to_string(LatticeKind::OddHalfPi) == "oddHalfPi");
  CHECK(parse_lattice("2piZ") == LatticeKind::TwoPiZ);
  CHECK(parse_lattice("oddHalfPi") == LatticeKind::OddHalfPi);
  CHECK(error_code([] { parse_lattice("halfPi"); }) == Errc::ParseError);

  CHECK(kTwoPi.default_first() == 1);
  CHECK(kOddHalf.default_first() == 0);
  CHECK_THAT(kTwoPi.time(3), WithinAbs(6 * kPi, 1e-14));
  CHECK_THAT(kOddHalf.time(0), WithinAbs(kPi / 2, 1e-15));
  CHECK_THAT(kOddHalf.time(249), WithinAbs(499 * kPi / 2, 1e-12));
  CHECK_THAT(kOddHalf.time(3), WithinAbs(kOddHalf.offset() + 3 * kOddHalf.step(), 1e-14));
  CHECK_THAT(kOddHalf.point(5).seconds(), WithinAbs(kOddHalf.time(5), 1e-13));
}

TEST_CASE("kronecker_solve examples", "[diophantine]") {
  {
    const auto sol = kronecker_solve({{2.0, -1.0, 0.0}, {0.0, 0.0, 0.0}, 1e-6}, 10);
    REQUIRE(sol);
    CHECK(sol->q == 1);
    for (double r : sol->residuals) CHECK(r == 0.0);
  }
  {
    // smallest q with |q sqrt2 - m - 1/2| < 0.05, fixed by an independent numpy scan
    const auto sol = kronecker_solve({{std::sqrt(2.0)}, {0.5}, 0.05}, 10'000);
    REQUIRE(sol);
    CHECK(sol->q == 6);
    CHECK_THAT(sol->residuals[0], WithinAbs(0.014718625761428683, 1e-12));
  }
  CHECK_FALSE(kronecker_solve({{std::sqrt(2.0)}, {0.5}, 1e-12}, 10));

  CHECK(error_code([] { kronecker_solve({{1.0, 2.0}, {0.0}, 1e-3}, 10); }) == Errc::LengthMismatch);
  CHECK(error_code([] { kronecker_solve({{1.0}, {0.0}, 0.0}, 10); }) == Errc::InvalidArgument);
  CHECK(error_code([] { kronecker_solve({{1.0}, {0.0}, 1e-3}, 0); }) == Errc::InvalidArgument);
}

TEST_CASE("kronecker_solve residuals are re-checkable and refinement is monotone",
          "[diophantine][property]") {
  const std::vector<double> thetas{std::sqrt(2.0), std::sqrt(3.0), kPi};
  const std::vector<double> alphas{0.5, 0.0, 0.25};
  Index previous = 0;
  for (double eps : {0.2, 0.1, 0.05, 0.02, 0.01}) {
    const auto sol = kronecker_solve({thetas, alphas, eps}, 1'000'000);
    REQUIRE(sol);
    CHECK(sol->q >= previous);
    previous = sol->q;
    REQUIRE(sol->residuals.size() == thetas.size());
    for (std::size_t j = 0; j < thetas.size(); ++j) {
      CHECK(sol->residuals[j] < eps);
      const long double x = static_cast<long double>(sol->q) * thetas[j] - alphas[j];
      CHECK_THAT(sol->residuals[j], WithinAbs(static_cast<double>(std::fabs(x - std::round(x))), 1e-9));
    }
    // nothing smaller works
    for (Index q = 1; q < sol->q; ++q) {
      bool all = true;
      for (std::size_t j = 0; j < thetas.size(); ++j) {
        all = all && distance_to_integer(static_cast<double>(q) * thetas[j] - alphas[j]) < eps;
      }
      CHECK_FALSE(all);
    }
  }
}

TEST_CASE("half_turn_targets case split", "[diophantine]") {
  {
    const auto t = half_turn_targets(8, 1);
    REQUIRE(t.thetas.size() == 1);
    CHECK_THAT(t.thetas[0], WithinAbs(std::sqrt(2.0), 1e-15));
    CHECK(t.alphas == std::vector<double>{0.5});
  }
  {
    const auto t = half_turn_targets(16, 1);
    CHECK(t.alphas == std::vector<double>{0.5, 0.0, 0.5});
    REQUIRE(t.thetas.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) {
      CHECK(t.thetas[i] == cycle_eigenvalue(16, static_cast<Index>(i + 1)));
    }
  }
  CHECK(half_turn_targets(16, 2).alphas == std::vector<double>{0.0, 0.5, 0.0});
  CHECK(half_turn_targets(32, 4).alphas ==
        std::vector<double>{0.0, 0.0, 0.0, 0.5, 0.0, 0.0, 0.0});
  CHECK(half_turn_targets(16, 1, 0.02).eps == 0.02);

  CHECK(error_code([] { half_turn_targets(12, 1); }) == Errc::NotPowerOfTwo);
  CHECK(error_code([] { half_turn_targets(16, 3); }) == Errc::NotPowerOfTwo);
  CHECK(error_code([] { half_turn_targets(16, 4); }) == Errc::RatioTooSmall);
  CHECK(error_code([] { half_turn_targets(4, 1); }) == Errc::RatioTooSmall);
}

TEST_CASE("solved targets put every cycle phase near its half or full turn",
          "[diophantine][property]") {
  struct Case {
    Index n, divisor;
    double eps;
    Index expected_q;  // numpy scan
  };
  for (const Case c : {Case{8, 1, 1e-3, 204}, Case{16, 1, 1e-2, 26665}, Case{16, 2, 1e-2, 52141}}) {
    const auto target = half_turn_targets(c.n, c.divisor, c.eps);
    const auto sol = kronecker_solve(target, 10'000'000);
    REQUIRE(sol);
    CHECK(sol->q == c.expected_q);
    const long double t = 2.0L * std::numbers::pi_v<long double> * sol->q;
    for (Index l = 1; l < c.n / 4; ++l) {
      const long double lambda =
          2.0L * std::cos(2.0L * std::numbers::pi_v<long double> * l / static_cast<long double>(c.n));
      const bool half = l % c.divisor == 0 && (l / c.divisor) % 2 == 1;
      const long double phase = lambda * t + (half ? std::numbers::pi_v<long double> : 0.0L);
      const long double two_pi = 2.0L * std::numbers::pi_v<long double>;
      const long double off = phase - two_pi * std::round(phase / two_pi);
      CHECK(std::fabs(static_cast<double>(off)) < 2 * kPi * c.eps);
    }
  }
}

TEST_CASE("best_time_on_lattice examples", "[diophantine]") {
  const auto c4 = make_graph(4, {1, 3});
  const auto pst = best_time_on_lattice(c4, {0, 2}, kOddHalf, {0, 0});
  CHECK(pst.q == 0);
  CHECK_THAT(pst.t, WithinAbs(kPi / 2, 1e-15));
  CHECK_THAT(pst.fidelity, WithinAbs(1.0, 1e-12));

  const auto c8 = best_time_on_lattice(make_graph(8, {1, 7}), {0, 4}, kTwoPi, {1, 100'000});
  CHECK(c8.q == 40391);
  CHECK(c8.fidelity >= 0.99);
  CHECK_THAT(c8.fidelity, WithinAbs(0.99999999995273708, 1e-8));

  const auto c16 = best_time_on_lattice(make_graph(16, {1, 15}), {0, 8}, kTwoPi, {1, 100'000});
  CHECK(c16.q == 26665);
  CHECK_THAT(c16.fidelity, WithinAbs(0.99951872085182625, 1e-8));

  const auto blocked =
      best_time_on_lattice(make_graph(16, {1, 7, 9, 15}), {0, 8}, kTwoPi, {1, 10'000});
  CHECK(blocked.q == 3465);
  CHECK_THAT(blocked.fidelity, WithinAbs(0.49999999919722598, 1e-8));
  CHECK(blocked.fidelity < 1 - 1e-3);

  CHECK(error_code([] { best_time_on_lattice(make_graph(4, {1, 3}), {0, 2}, kTwoPi, {5, 4}); }) ==
        Errc::EmptyRange);
}

TEST_CASE("scan_lattice over the reference windows", "[diophantine]") {
  const auto window1 = scan_lattice(least_divisor_graph(), {0, 8}, kTwoPi, {7500, 8000});
  REQUIRE(window1.size() == 501);
  CHECK(window1.front().q == 7500);
  CHECK(window1.back().q == 8000);
  const TransferRecord* peak1 = &window1.front();
  for (const auto& r : window1) {
    if (r.fidelity > peak1->fidelity) peak1 = &r;
  }
  CHECK(peak1->q == 7810);
  CHECK(peak1->fidelity >= 0.9);
  CHECK_THAT(peak1->fidelity, WithinAbs(0.99707250728596034, 1e-8));
  CHECK_THAT(peak1->amplitude.real(), WithinAbs(0.99707250696257758, 1e-8));
  CHECK_THAT(peak1->amplitude.imag(), WithinAbs(-2.5394332456903505e-5, 1e-8));

  const auto window2 = scan_lattice(half_quarter_graph(), {0, 8}, kOddHalf, {0, 249});
  REQUIRE(window2.size() == 250);
  CHECK_THAT(window2.front().t, WithinAbs(kPi / 2, 1e-15));
  CHECK(window2.back().t <= 500 * kPi);
  const auto best2 = best_time_on_lattice(half_quarter_graph(), {0, 8}, kOddHalf, {0, 249});
  CHECK(best2.q == 236);
  CHECK_THAT(best2.fidelity, WithinAbs(0.99972708791334607, 1e-8));
  CHECK_THAT(best2.amplitude.real(), WithinAbs(-0.99972708791334607, 1e-8));

  // Spot-check the scan against the dense oracle.
  for (std::size_t i : {0UL, 123UL, 310UL, 500UL}) {
    const auto ref = oracle::entry(16, {1, 2, 3, 4, 12, 13, 14, 15}, 0, 8, window1[i].t);
    CHECK(std::abs(window1[i].amplitude - ref) < 1e-8);
  }
}

TEST_CASE("scan_lattice edge cases", "[diophantine]") {
  const auto g = make_graph(8, {1, 7});
  for (const auto lattice : {kTwoPi, kOddHalf}) {
    const auto one = scan_lattice(g, {0, 4}, lattice, {3, 3});
    REQUIRE(one.size() == 1);
    CHECK(one[0].q == 3);
    CHECK_THAT(one[0].t, WithinAbs(lattice.offset() + 3 * lattice.step(), 1e-13));
  }
  CHECK(error_code([&] { scan_lattice(g, {0, 4}, kTwoPi, {10, 9}); }) == Errc::EmptyRange);
  ScanOptions small;
  small.cap = 100;
  CHECK(error_code([&] { scan_lattice(g, {0, 4}, kTwoPi, {1, 101}, small); }) ==
        Errc::RangeTooLarge);
  CHECK(scan_lattice(g, {0, 4}, kTwoPi, {1, 100}, small).size() == 100);
  CHECK(error_code([&] { scan_lattice(g, {0, 8}, kTwoPi, {1, 2}); }) == Errc::VertexOutOfRange);
}

TEST_CASE("scans are independent of the worker count", "[diophantine][property]") {
  // The integral graph revisits the same fidelity often, so ties matter.
  const auto tied = make_graph(8, {1, 2, 3, 5, 6, 7});
  for (const auto* g : {&least_divisor_graph(), &tied}) {
    ScanOptions one;
    one.threads = 1;
    const auto reference = scan_lattice(*g, {0, g->order() / 2}, kTwoPi, {1, 20'000}, one);
    const auto best_reference = best_time_on_lattice(*g, {0, g->order() / 2}, kTwoPi, {1, 20'000}, one);
    for (unsigned threads : {2U, 3U, 7U, 16U}) {
      ScanOptions many;
      many.threads = threads;
      const auto other = scan_lattice(*g, {0, g->order() / 2}, kTwoPi, {1, 20'000}, many);
      REQUIRE(other.size() == reference.size());
      bool same = true;
      for (std::size_t i = 0; i < other.size(); ++i) {
        same = same && other[i].q == reference[i].q && other[i].amplitude == reference[i].amplitude;
      }
      CHECK(same);
      const auto best = best_time_on_lattice(*g, {0, g->order() / 2}, kTwoPi, {1, 20'000}, many);
      CHECK(best.q == best_reference.q);
      CHECK(best.fidelity == best_reference.fidelity);
    }
  }
  // Ties go to the smallest q: the integral graph returns to the identity at every q.
  const auto first = best_time_on_lattice(tied, {0, 0}, kTwoPi, {5, 5000});
  CHECK(first.q == 5);
}

TEST_CASE("best fidelity never decreases as the range grows", "[diophantine][property]") {
  const QuantumWalk walk(make_graph(16, {1, 15}));
  double previous = 0.0;
  for (Index last : {10, 100, 1000, 10'000, 30'000}) {
    const auto best = best_time_on_lattice(walk, {0, 8}, kTwoPi, {1, last});
    CHECK(best.fidelity >= previous);
    previous = best.fidelity;
  }
}

TEST_CASE("first_time_above", "[diophantine]") {
  const QuantumWalk c16(make_graph(16, {1, 15}));
  const auto hit = first_time_above(c16, {0, 8}, kTwoPi, {1, 100'000}, 0.999);
  REQUIRE(hit);
  CHECK(hit->q == 26665);
  CHECK_FALSE(first_time_above(c16, {0, 8}, kTwoPi, {1, 26664}, 0.999));

  const QuantumWalk c4(make_graph(4, {1, 3}));
  const auto pst = first_time_above(c4, {0, 2}, kOddHalf, {0, 10}, 1 - 1e-9);
  REQUIRE(pst);
  CHECK(pst->q == 0);
}
