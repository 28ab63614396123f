#include "circulant/serialization.hpp"

#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>

#include "circulant/error.hpp"

namespace circulant {

Json to_json(const CirculantGraph& graph) {
  Json doc;
  doc["n"] = graph.order();
  doc["set"] = graph.connections();
  return doc;
}

CirculantGraph graph_from_json(const Json& doc) {
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("set") ||
      !doc["n"].is_number_integer() || !doc["set"].is_array()) {
    throw Error(Errc::ParseError, "graph JSON must look like {\"n\": int, \"set\": [int, ...]}");
  }
  std::vector<Index> set;
  for (const auto& v : doc["set"]) {
    if (!v.is_number_integer()) throw Error(Errc::ParseError, "set elements must be integers");
    set.push_back(v.get<Index>());
  }
  return make_graph(doc["n"].get<Index>(), set);
}

Json to_json(const CirculantGraph& graph, const Spectrum& spec) {
  Json doc = to_json(graph);
  doc["eigenvalues"] = spec.values;
  doc["integral"] = spec.integral;
  return doc;
}

Json to_json(const TransferRecord& record) {
  Json doc;
  if (record.q) doc["q"] = *record.q;
  doc["t"] = record.t;
  doc["re"] = record.amplitude.real();
  doc["im"] = record.amplitude.imag();
  doc["fidelity"] = record.fidelity;
  return doc;
}

Json to_json(const DivisorProfile& profile) {
  Json entries = Json::array();
  for (const auto& e : profile.entries) {
    entries.push_back({{"d", e.divisor},
                       {"intersection", e.intersection_size},
                       {"class_size", e.class_size},
                       {"status", std::string(to_string(e.status))}});
  }
  return entries;
}

Json to_json(const CirculantGraph& graph, const Classification& c) {
  Json doc = to_json(graph);
  doc["verdict"] = std::string(to_string(c.verdict));
  doc["citation"] = std::string(to_string(c.citation));
  doc["witness_divisor"] = c.witness_divisor ? Json(*c.witness_divisor) : Json(nullptr);
  doc["pair"] = c.pair ? Json::array({c.pair->u, c.pair->v}) : Json(nullptr);
  doc["lattice"] = c.lattice ? Json(std::string(to_string(c.lattice->kind))) : Json(nullptr);
  doc["numeric_caveat"] = c.numeric_caveat;
  if (c.obstruction) {
    doc["obstruction"] = {{"l", c.obstruction->l},
                          {"l_prime", c.obstruction->l_prime},
                          {"value", c.obstruction->value}};
  }
  return doc;
}

Json to_json(const Evidence& evidence) {
  Json doc;
  doc["lattice"] = std::string(to_string(evidence.lattice.kind));
  doc["qmin"] = evidence.range.first;
  doc["qmax"] = evidence.range.last;
  doc["best"] = to_json(evidence.best);
  doc["peak_fidelity"] = evidence.best.fidelity;
  doc["confirmed"] = evidence.confirmed;
  doc["budget_exhausted"] = evidence.budget_exhausted;
  if (evidence.periodic_phase_at_two_pi) {
    doc["periodic_phase_at_2pi"] = {evidence.periodic_phase_at_two_pi->real(),
                                    evidence.periodic_phase_at_two_pi->imag()};
  }
  doc["note"] = evidence.note;
  return doc;
}

Json to_json(const std::vector<HypothesisCheck>& checks) {
  Json out = Json::array();
  for (const auto& h : checks) {
    Json doc;
    doc["rule"] = std::string(to_string(h.rule));
    doc["outcome"] = std::string(to_string(h.outcome));
    doc["divisor"] = h.divisor ? Json(*h.divisor) : Json(nullptr);
    doc["detail"] = h.detail;
    out.push_back(std::move(doc));
  }
  return out;
}

std::string format_double(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

std::size_t emit_scan_csv(std::span<const TransferRecord> records, std::ostream& sink) {
  if (records.empty()) throw Error(Errc::EmptyRecords, "no records to write");
  sink << kScanCsvHeader << '\n';
  for (const auto& r : records) {
    sink << (r.q ? std::to_string(*r.q) : std::string()) << ',' << format_double(r.t) << ','
         << format_double(r.amplitude.real()) << ',' << format_double(r.amplitude.imag()) << ','
         << format_double(r.fidelity) << '\n';
  }
  sink.flush();
  if (!sink) throw Error(Errc::IoError, "failed writing scan CSV");
  return records.size();
}

std::vector<TransferRecord> parse_scan_csv(std::istream& source) {
  std::string line;
  if (!std::getline(source, line) || line != kScanCsvHeader) {
    throw Error(Errc::ParseError, "scan CSV must start with header " +
                                      std::string(kScanCsvHeader));
  }
  std::vector<TransferRecord> out;
  std::size_t line_no = 1;
  while (std::getline(source, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (fields.size() != 5) {
      throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": expected 5 fields");
    }
    auto number = [&](const std::string& text) {
      char* end = nullptr;
      const double v = std::strtod(text.c_str(), &end);
      if (text.empty() || *end != '\0') {
        throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": bad number '" +
                                          text + "'");
      }
      return v;
    };
    TransferRecord r;
    if (!fields[0].empty()) {
      Index q = 0;
      const char* first = fields[0].data();
      const char* last = first + fields[0].size();
      const auto [ptr, ec] = std::from_chars(first, last, q);
      if (ec != std::errc{} || ptr != last) {
        throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": bad q '" +
                                          fields[0] + "'");
      }
      r.q = q;
    }
    r.t = number(fields[1]);
    r.amplitude = {number(fields[2]), number(fields[3])};
    r.fidelity = number(fields[4]);
    out.push_back(r);
  }
  return out;
}

}  // namespace circulant
