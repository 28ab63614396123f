#include "circulant/classifier.hpp"

#include <numbers>
#include <sstream>

#include "circulant/error.hpp"

namespace circulant {

namespace {

struct Context {
  const CirculantGraph& graph;
  Index n;
  DivisorProfile profile;
  bool gcd_set;
};

std::string class_label(Index n, Index d) {
  return "|S ∩ S_" + std::to_string(n) + "(" + std::to_string(d) + ")|";
}

const DivisorEntry* least_proper_two_mod_four(const DivisorProfile& profile) {
  for (const auto& e : profile.entries) {
    if (e.status == ClassStatus::Proper && e.intersection_size % 4 == 2) return &e;
  }
  return nullptr;
}

// Exactly one of n/2, n/4 in S and every other gcd class met in a multiple of
// four elements. On failure, `why` names the first violated condition.
bool half_quarter_condition(const Context& ctx, std::string* why = nullptr) {
  const Index n = ctx.n;
  if (n < 4 || n % 4 != 0) {
    if (why) *why = "n = " + std::to_string(n) + " has no quarter vertex";
    return false;
  }
  const int count = int{ctx.graph.contains(n / 2)} + int{ctx.graph.contains(n / 4)};
  if (count % 2 == 0) {
    if (why) *why = "|{" + std::to_string(n / 2) + ", " + std::to_string(n / 4) + "} ∩ S| = " +
                    std::to_string(count) + " is even";
    return false;
  }
  for (const auto& e : ctx.profile.entries) {
    if (e.divisor == n / 2 || e.divisor == n / 4) continue;
    if (e.intersection_size % 4 != 0) {
      if (why) *why = class_label(n, e.divisor) + " = " + std::to_string(e.intersection_size) +
                      " ≢ 0 mod 4";
      return false;
    }
  }
  return true;
}

Classification transfer(Verdict verdict, Citation citation, Index n, LatticeKind lattice) {
  Classification c;
  c.verdict = verdict;
  c.citation = citation;
  c.pair = VertexPair{0, n / 2};
  c.lattice = TimeLattice::of(lattice);
  return c;
}

}  // namespace

std::string_view to_string(Verdict verdict) noexcept {
  switch (verdict) {
    case Verdict::PST: return "PST";
    case Verdict::PGST: return "PGST";
    case Verdict::AlmostPeriodic: return "AlmostPeriodic";
    case Verdict::NoPGST: return "NoPGST";
    case Verdict::Unknown: return "Unknown";
  }
  return "?";
}

std::string_view to_string(Citation citation) noexcept {
  switch (citation) {
    case Citation::CycleCharacterization: return "T1";
    case Citation::LeastDivisor: return "T2";
    case Citation::GeneralizedLeastDivisor: return "T3";
    case Citation::HalfQuarterParity: return "T4";
    case Citation::ParityObstruction: return "ParityObstruction";
    case Citation::AntipodalRestriction: return "LemmaL1";
    case Citation::IntegralPeriodicUpgrade: return "So_IP2_upgrade";
    case Citation::None: return "None";
  }
  return "?";
}

std::string_view to_string(HypothesisOutcome outcome) noexcept {
  switch (outcome) {
    case HypothesisOutcome::Holds: return "holds";
    case HypothesisOutcome::Fails: return "fails";
    case HypothesisOutcome::AlmostPeriodicBranch: return "almost_periodic_branch";
    case HypothesisOutcome::NotApplicable: return "not_applicable";
  }
  return "?";
}

bool operator==(const Classification& a, const Classification& b) noexcept {
  auto same_conflict = [](const std::optional<ParityConflict>& x,
                          const std::optional<ParityConflict>& y) {
    if (x.has_value() != y.has_value()) return false;
    return !x || (x->l == y->l && x->l_prime == y->l_prime && x->value == y->value);
  };
  return a.verdict == b.verdict && a.citation == b.citation &&
         a.witness_divisor == b.witness_divisor && a.pair == b.pair && a.lattice == b.lattice &&
         same_conflict(a.obstruction, b.obstruction) && a.numeric_caveat == b.numeric_caveat;
}

Classification classify(const CirculantGraph& graph, const Tolerances& tol) {
  const Index n = graph.order();
  Classification c;

  if (n % 2 == 1) {
    c.verdict = Verdict::NoPGST;
    c.citation = Citation::AntipodalRestriction;
    return c;
  }

  const Spectrum spec = spectrum(graph, tol.integrality);
  if (const auto conflicts = parity_conflicts(spec, tol.equality); !conflicts.empty()) {
    c.verdict = Verdict::NoPGST;
    c.citation = Citation::ParityObstruction;
    c.pair = VertexPair{0, n / 2};
    c.obstruction = conflicts.front();
    c.numeric_caveat = true;
    return c;
  }

  if (graph.is_cycle()) {
    if (n == 2) return transfer(Verdict::PST, Citation::HalfQuarterParity, n, LatticeKind::OddHalfPi);
    if (n == 4) {
      return transfer(Verdict::PST, Citation::CycleCharacterization, n, LatticeKind::OddHalfPi);
    }
    if (is_power_of_two(n)) {
      return transfer(Verdict::PGST, Citation::CycleCharacterization, n, LatticeKind::TwoPiZ);
    }
    c.verdict = Verdict::NoPGST;
    c.citation = Citation::CycleCharacterization;
    return c;
  }

  if (!is_power_of_two(n)) return c;

  const Context ctx{graph, n, divisor_profile(graph), is_gcd_set(graph)};

  if (!ctx.gcd_set) {
    const DivisorEntry* least = ctx.profile.least_proper();
    if (least->intersection_size % 4 == 2) {
      auto out = transfer(Verdict::PGST, Citation::LeastDivisor, n, LatticeKind::TwoPiZ);
      out.witness_divisor = least->divisor;
      return out;
    }
    if (const DivisorEntry* general = least_proper_two_mod_four(ctx.profile)) {
      auto out =
          transfer(Verdict::PGST, Citation::GeneralizedLeastDivisor, n, LatticeKind::TwoPiZ);
      out.witness_divisor = general->divisor;
      return out;
    }
    if (half_quarter_condition(ctx)) {
      return transfer(Verdict::PGST, Citation::HalfQuarterParity, n, LatticeKind::OddHalfPi);
    }
    if (least->intersection_size % 4 == 0) {
      c.verdict = Verdict::AlmostPeriodic;
      c.citation = Citation::LeastDivisor;
      c.witness_divisor = least->divisor;
      c.lattice = TimeLattice::of(LatticeKind::TwoPiZ);
      return c;
    }
    return c;
  }

  if (half_quarter_condition(ctx)) {
    return transfer(Verdict::PST, Citation::IntegralPeriodicUpgrade, n, LatticeKind::OddHalfPi);
  }
  return c;
}

std::vector<HypothesisCheck> theorem_hypotheses(const CirculantGraph& graph,
                                                const Tolerances& tol) {
  const Index n = graph.order();
  const Context ctx{graph, n, divisor_profile(graph), is_gcd_set(graph)};
  const bool dyadic = is_power_of_two(n);
  std::vector<HypothesisCheck> out;

  {
    HypothesisCheck h;
    h.rule = Citation::CycleCharacterization;
    if (!graph.is_cycle()) {
      h.detail = "S is not {1, n-1}";
    } else if (n == 2) {
      h.outcome = HypothesisOutcome::NotApplicable;
      h.detail = "P_2: perfect transfer at pi/2";
    } else if (dyadic) {
      h.outcome = HypothesisOutcome::Holds;
      h.detail = "C_" + std::to_string(n) + " with n = 2^" + std::to_string(exponent_of_two(n));
    } else {
      h.outcome = HypothesisOutcome::Fails;
      h.detail = "n = " + std::to_string(n) + " is not a power of two";
    }
    out.push_back(std::move(h));
  }

  const bool divisor_rules_apply = dyadic && !ctx.gcd_set;
  const std::string not_applicable =
      !dyadic ? "n = " + std::to_string(n) + " is not a power of two" : "S is a gcd-set (integral)";

  {
    HypothesisCheck h;
    h.rule = Citation::LeastDivisor;
    if (!divisor_rules_apply) {
      h.detail = not_applicable;
    } else {
      const DivisorEntry* least = ctx.profile.least_proper();
      h.divisor = least->divisor;
      const std::string size = "least proper divisor d = " + std::to_string(least->divisor) +
                               ", " + class_label(n, least->divisor) + " = " +
                               std::to_string(least->intersection_size);
      if (least->intersection_size % 4 == 2) {
        h.outcome = HypothesisOutcome::Holds;
        h.detail = size + " ≡ 2 mod 4";
      } else {
        h.outcome = HypothesisOutcome::AlmostPeriodicBranch;
        h.detail = size + " ≡ 0 mod 4: almost periodic branch";
      }
    }
    out.push_back(std::move(h));
  }

  {
    HypothesisCheck h;
    h.rule = Citation::GeneralizedLeastDivisor;
    if (!divisor_rules_apply) {
      h.detail = not_applicable;
    } else if (const DivisorEntry* e = least_proper_two_mod_four(ctx.profile)) {
      h.outcome = HypothesisOutcome::Holds;
      h.divisor = e->divisor;
      h.detail = "d = " + std::to_string(e->divisor) + ", " + class_label(n, e->divisor) + " = " +
                 std::to_string(e->intersection_size) + " ≡ 2 mod 4";
    } else {
      h.outcome = HypothesisOutcome::Fails;
      h.detail = "no divisor whose class S meets properly in 2 mod 4 elements";
    }
    out.push_back(std::move(h));
  }

  {
    HypothesisCheck h;
    h.rule = Citation::HalfQuarterParity;
    if (!dyadic || n < 4) {
      h.detail = dyadic ? "n = 2 has no quarter vertex" : not_applicable;
    } else {
      std::string why;
      if (half_quarter_condition(ctx, &why)) {
        h.outcome = HypothesisOutcome::Holds;
        bool vacuous = true;
        for (const auto& e : ctx.profile.entries) {
          if (e.divisor != n / 2 && e.divisor != n / 4) vacuous = false;
        }
        h.detail = vacuous ? "holds vacuously: no divisor outside {n/2, n/4}"
                           : "exactly one of n/2, n/4 in S; other classes ≡ 0 mod 4";
      } else {
        h.outcome = HypothesisOutcome::Fails;
        h.detail = why;
      }
    }
    out.push_back(std::move(h));
  }

  {
    HypothesisCheck h;
    h.rule = Citation::ParityObstruction;
    const auto conflicts = parity_conflicts(spectrum(graph, tol.integrality), tol.equality);
    if (conflicts.empty()) {
      h.outcome = HypothesisOutcome::Fails;
      h.detail = "no equal eigenvalues at opposite-parity modes";
    } else {
      h.outcome = HypothesisOutcome::Holds;
      std::ostringstream os;
      os << "theta_" << conflicts.front().l << " = theta_" << conflicts.front().l_prime << " = "
         << conflicts.front().value << " (" << conflicts.size() << " conflicting pair"
         << (conflicts.size() == 1 ? "" : "s") << ")";
      h.detail = os.str();
    }
    out.push_back(std::move(h));
  }
  return out;
}

Evidence verify_classification(const CirculantGraph& graph, const Classification& c,
                               const VerificationBudget& budget) {
  const Index n = graph.order();
  Evidence ev;
  ev.lattice = c.lattice.value_or(TimeLattice::of(LatticeKind::TwoPiZ));
  const Index first = ev.lattice.default_first();
  ev.range = QRange{first, std::max(first, budget.q_max)};

  if (is_gcd_set(graph)) ev.periodic_phase_at_two_pi = is_periodic_at(graph, 2.0 * std::numbers::pi);

  if (n % 2 == 1) {
    ev.note = "odd order: no antipodal vertex to scan";
    return ev;
  }
  const VertexPair pair = c.pair.value_or(VertexPair{0, n / 2});
  const QuantumWalk walk(graph);

  if (c.verdict == Verdict::PST) {
    if (auto hit = first_time_above(walk, pair, ev.lattice, ev.range, 1.0 - budget.pst_tolerance,
                                    budget.scan)) {
      ev.best = *hit;
      ev.confirmed = true;
      ev.note = "fidelity 1 reached";
    } else {
      ev.best = best_time_on_lattice(walk, pair, ev.lattice, ev.range, budget.scan);
      ev.budget_exhausted = true;
      ev.note = "no fidelity-1 time inside the budget";
    }
    return ev;
  }

  ev.best = best_time_on_lattice(walk, pair, ev.lattice, ev.range, budget.scan);
  if (c.verdict == Verdict::PGST) {
    ev.confirmed = ev.best.fidelity >= budget.pgst_threshold;
    ev.budget_exhausted = !ev.confirmed;
    ev.note = ev.confirmed ? "peak reached the threshold" : "peak below threshold inside budget";
  } else if (c.citation == Citation::ParityObstruction && c.obstruction) {
    std::ostringstream os;
    os << "obstruction theta_" << c.obstruction->l << " = theta_" << c.obstruction->l_prime
       << "; scan ceiling " << ev.best.fidelity;
    ev.note = os.str();
  } else {
    std::ostringstream os;
    os << "scan ceiling " << ev.best.fidelity;
    ev.note = os.str();
  }
  return ev;
}

}  // namespace circulant
