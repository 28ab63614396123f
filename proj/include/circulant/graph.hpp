#pragma once

// Circulant graphs Cay(Z_n, S) and the gcd-class structure of Z_n.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace circulant {

using Index = std::int64_t;

/// Immutable circulant graph on vertices 0..n-1; a ~ b iff (a - b) mod n is
/// in the connection set. The set is stored sorted, deduplicated and reduced
/// mod n, and is always symmetric under s -> n - s.
class CirculantGraph {
 public:
  /// Throws Error{InvalidOrder | EmptySet | ContainsZero | NotSymmetric}.
  CirculantGraph(Index n, std::span<const Index> connections);

  Index order() const noexcept { return n_; }
  const std::vector<Index>& connections() const noexcept { return set_; }
  std::size_t degree() const noexcept { return set_.size(); }
  bool contains(Index s) const noexcept;

  /// True when the set is {1, n-1} (the cycle C_n; P_2 when n == 2).
  bool is_cycle() const noexcept;

  friend bool operator==(const CirculantGraph&, const CirculantGraph&) = default;

 private:
  Index n_;
  std::vector<Index> set_;
};

CirculantGraph make_graph(Index n, std::span<const Index> connections);
inline CirculantGraph make_graph(Index n, std::initializer_list<Index> connections) {
  return make_graph(n, std::span<const Index>(connections.begin(), connections.size()));
}

/// Parses "1,7,9,15" (whitespace tolerated). Throws Error{ParseError}.
std::vector<Index> parse_connection_set(std::string_view text);

std::string format_connection_set(std::span<const Index> set);

// --- number theory -----------------------------------------------------------

Index gcd(Index a, Index b) noexcept;
Index euler_phi(Index n);
bool is_power_of_two(Index n) noexcept;
/// log2 of a power of two.
int exponent_of_two(Index n) noexcept;

/// Divisors d of n with 0 < d < n, ascending. Trial division.
std::vector<Index> proper_divisors(Index n);

/// S_n(d) = { x in [1, n-1] : gcd(x, n) = d }.
struct GcdClass {
  Index n = 0;
  Index divisor = 0;
  std::vector<Index> members;
};

/// Throws Error{NotADivisor} unless d | n and 0 < d < n.
GcdClass gcd_class(Index n, Index d);

enum class ClassStatus { Empty, Proper, Full };

std::string_view to_string(ClassStatus status) noexcept;

struct DivisorEntry {
  Index divisor = 0;
  Index intersection_size = 0;  // |S ∩ S_n(d)|
  Index class_size = 0;         // |S_n(d)| = phi(n/d)
  ClassStatus status = ClassStatus::Empty;
};

/// One entry per proper divisor of n, ascending by divisor.
struct DivisorProfile {
  Index n = 0;
  std::vector<DivisorEntry> entries;

  const DivisorEntry* find(Index d) const noexcept;
  /// Least divisor whose intersection is non-empty and proper.
  const DivisorEntry* least_proper() const noexcept;
};

DivisorProfile divisor_profile(const CirculantGraph& graph);

/// True iff S is a union of whole gcd classes.
bool is_gcd_set(const CirculantGraph& graph);

/// Elements of S that lie in S_n(d).
std::vector<Index> intersect_class(const CirculantGraph& graph, Index d);

/// All non-empty symmetric connection sets of Z_n, built by choosing each
/// orbit {s, n-s} (and the self-paired n/2) in or out. Ordered by the bit mask
/// whose bit i selects orbit s = i + 1. Throws Error{InvalidOrder} for n < 2 or
/// n > 48.
std::vector<std::vector<Index>> symmetric_sets(Index n);

}  // namespace circulant
