#include "circulant/graph.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <numeric>
#include <sstream>

#include "circulant/error.hpp"

namespace circulant {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::InvalidOrder: return "InvalidOrder";
    case Errc::EmptySet: return "EmptySet";
    case Errc::ContainsZero: return "ContainsZero";
    case Errc::NotSymmetric: return "NotSymmetric";
    case Errc::NotADivisor: return "NotADivisor";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::NotPowerOfTwo: return "NotPowerOfTwo";
    case Errc::RatioTooSmall: return "RatioTooSmall";
    case Errc::VertexOutOfRange: return "VertexOutOfRange";
    case Errc::OrderTooLarge: return "OrderTooLarge";
    case Errc::OrderMismatch: return "OrderMismatch";
    case Errc::SetsNotDisjoint: return "SetsNotDisjoint";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::EmptyRange: return "EmptyRange";
    case Errc::RangeTooLarge: return "RangeTooLarge";
    case Errc::EmptyRecords: return "EmptyRecords";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::ParseError: return "ParseError";
    case Errc::IoError: return "IoError";
  }
  return "Unknown";
}

CirculantGraph::CirculantGraph(Index n, std::span<const Index> connections) : n_(n) {
  if (n < 2) {
    throw Error(Errc::InvalidOrder, "order must be at least 2, got " + std::to_string(n));
  }
  if (connections.empty()) {
    throw Error(Errc::EmptySet, "connection set is empty");
  }
  set_.reserve(connections.size());
  for (Index s : connections) {
    Index r = s % n;
    if (r < 0) r += n;
    if (r == 0) {
      throw Error(Errc::ContainsZero,
                  "connection set contains " + std::to_string(s) + " = 0 mod " + std::to_string(n));
    }
    set_.push_back(r);
  }
  std::sort(set_.begin(), set_.end());
  set_.erase(std::unique(set_.begin(), set_.end()), set_.end());
  for (Index s : set_) {
    if (!contains(n - s)) {
      throw Error(Errc::NotSymmetric, "connection set is not symmetric: " + std::to_string(s) +
                                          " present but " + std::to_string(n - s) + " missing");
    }
  }
}

bool CirculantGraph::contains(Index s) const noexcept {
  return std::binary_search(set_.begin(), set_.end(), s);
}

bool CirculantGraph::is_cycle() const noexcept {
  if (n_ == 2) return set_.size() == 1;
  return set_.size() == 2 && set_[0] == 1 && set_[1] == n_ - 1;
}

CirculantGraph make_graph(Index n, std::span<const Index> connections) {
  return CirculantGraph(n, connections);
}

std::vector<Index> parse_connection_set(std::string_view text) {
  std::vector<Index> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view token = text.substr(pos, comma - pos);
    while (!token.empty() && (token.front() == ' ' || token.front() == '\t')) token.remove_prefix(1);
    while (!token.empty() && (token.back() == ' ' || token.back() == '\t')) token.remove_suffix(1);
    if (!token.empty() && token.front() == '+') token.remove_prefix(1);
    Index value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
      throw Error(Errc::ParseError, "cannot parse connection set element '" + std::string(token) +
                                        "' in \"" + std::string(text) + "\"");
    }
    out.push_back(value);
    pos = comma + 1;
  }
  return out;
}

std::string format_connection_set(std::span<const Index> set) {
  std::ostringstream os;
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (i) os << ',';
    os << set[i];
  }
  return os.str();
}

Index gcd(Index a, Index b) noexcept { return std::gcd(a, b); }

Index euler_phi(Index n) {
  if (n < 1) throw Error(Errc::InvalidArgument, "euler_phi needs n >= 1");
  Index result = n;
  Index m = n;
  for (Index p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      result -= result / p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

bool is_power_of_two(Index n) noexcept {
  return n > 0 && std::has_single_bit(static_cast<std::uint64_t>(n));
}

int exponent_of_two(Index n) noexcept {
  return std::countr_zero(static_cast<std::uint64_t>(n));
}

std::vector<Index> proper_divisors(Index n) {
  std::vector<Index> small;
  std::vector<Index> large;
  for (Index d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  if (!small.empty() && small.back() == n) small.pop_back();
  return small;
}

GcdClass gcd_class(Index n, Index d) {
  if (n < 2 || d <= 0 || d >= n || n % d != 0) {
    throw Error(Errc::NotADivisor,
                std::to_string(d) + " is not a proper divisor of " + std::to_string(n));
  }
  GcdClass cls{n, d, {}};
  // x = d*y with gcd(y, n/d) = 1
  const Index m = n / d;
  for (Index y = 1; y < m; ++y) {
    if (std::gcd(y, m) == 1) cls.members.push_back(d * y);
  }
  return cls;
}

std::string_view to_string(ClassStatus status) noexcept {
  switch (status) {
    case ClassStatus::Empty: return "Empty";
    case ClassStatus::Proper: return "Proper";
    case ClassStatus::Full: return "Full";
  }
  return "?";
}

const DivisorEntry* DivisorProfile::find(Index d) const noexcept {
  for (const auto& e : entries) {
    if (e.divisor == d) return &e;
  }
  return nullptr;
}

const DivisorEntry* DivisorProfile::least_proper() const noexcept {
  for (const auto& e : entries) {
    if (e.status == ClassStatus::Proper) return &e;
  }
  return nullptr;
}

DivisorProfile divisor_profile(const CirculantGraph& graph) {
  const Index n = graph.order();
  DivisorProfile profile{n, {}};
  for (Index d : proper_divisors(n)) {
    DivisorEntry e;
    e.divisor = d;
    e.class_size = euler_phi(n / d);
    profile.entries.push_back(e);
  }
  for (Index s : graph.connections()) {
    const Index d = std::gcd(s, n);
    for (auto& e : profile.entries) {
      if (e.divisor == d) {
        ++e.intersection_size;
        break;
      }
    }
  }
  for (auto& e : profile.entries) {
    if (e.intersection_size == 0) {
      e.status = ClassStatus::Empty;
    } else if (e.intersection_size == e.class_size) {
      e.status = ClassStatus::Full;
    } else {
      e.status = ClassStatus::Proper;
    }
  }
  return profile;
}

bool is_gcd_set(const CirculantGraph& graph) {
  const auto profile = divisor_profile(graph);
  return std::none_of(profile.entries.begin(), profile.entries.end(),
                      [](const DivisorEntry& e) { return e.status == ClassStatus::Proper; });
}

std::vector<Index> intersect_class(const CirculantGraph& graph, Index d) {
  std::vector<Index> out;
  for (Index s : graph.connections()) {
    if (std::gcd(s, graph.order()) == d) out.push_back(s);
  }
  return out;
}

std::vector<std::vector<Index>> symmetric_sets(Index n) {
  if (n < 2 || n > 48) {
    throw Error(Errc::InvalidOrder,
                "symmetric set enumeration supports 2 <= n <= 48, got " + std::to_string(n));
  }
  const Index orbits = n / 2;  // s = 1..n/2; s = n/2 self-paired when n even
  const std::uint64_t count = std::uint64_t{1} << orbits;
  std::vector<std::vector<Index>> out;
  out.reserve(count - 1);
  for (std::uint64_t mask = 1; mask < count; ++mask) {
    std::vector<Index> set;
    for (Index i = 0; i < orbits; ++i) {
      if (!(mask >> i & 1U)) continue;
      const Index s = i + 1;
      set.push_back(s);
      if (n - s != s) set.push_back(n - s);
    }
    std::sort(set.begin(), set.end());
    out.push_back(std::move(set));
  }
  return out;
}

}  // namespace circulant
