#pragma once

// JSON documents and the scan CSV format shared by the CLI, the Python
// bindings and the plotting tool.

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "circulant/classifier.hpp"
#include "circulant/dynamics.hpp"
#include "circulant/graph.hpp"
#include "circulant/spectral.hpp"

namespace circulant {

using Json = nlohmann::ordered_json;

/// {"n": int, "set": [int, ...]} with the canonical sorted set.
Json to_json(const CirculantGraph& graph);
/// Throws Error{ParseError} plus any make_graph error.
CirculantGraph graph_from_json(const Json& doc);

/// {"n", "set", "eigenvalues", "integral"}
Json to_json(const CirculantGraph& graph, const Spectrum& spec);

/// {"t", "re", "im", "fidelity"} plus "q" when the record came from a lattice.
Json to_json(const TransferRecord& record);

Json to_json(const DivisorProfile& profile);

/// {"n", "set", "verdict", "citation", "witness_divisor", "pair", "lattice",
///  "numeric_caveat"} plus "obstruction" for parity-obstructed graphs.
Json to_json(const CirculantGraph& graph, const Classification& c);

Json to_json(const Evidence& evidence);

Json to_json(const std::vector<HypothesisCheck>& checks);

/// %.17g: enough digits for strtod to recover the same double.
std::string format_double(double value);

inline constexpr const char* kScanCsvHeader = "q,t,re,im,fidelity";

/// Header plus one LF-terminated row per record. Returns the row count.
/// Throws Error{EmptyRecords | IoError}.
std::size_t emit_scan_csv(std::span<const TransferRecord> records, std::ostream& sink);

/// Inverse of emit_scan_csv. Throws Error{ParseError}.
std::vector<TransferRecord> parse_scan_csv(std::istream& source);

}  // namespace circulant
