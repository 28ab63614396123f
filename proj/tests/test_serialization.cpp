#include <catch_amalgamated.hpp>

#include <random>
#include <sstream>

#include "circulant/diophantine.hpp"
#include "circulant/error.hpp"
#include "circulant/serialization.hpp"

using namespace circulant;

namespace {

Errc error_code(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected circulant::Error");
  return Errc::InvalidArgument;
}

std::size_t count_lines(const std::string& text) {
  return static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n'));
}

}  // namespace

TEST_CASE("graph JSON round trip", "[serialization]") {
  const auto g = make_graph(16, {15, 9, 7, 1});
  const auto doc = to_json(g);
  CHECK(doc.dump() == R"({"n":16,"set":[1,7,9,15]})");
  CHECK(graph_from_json(doc) == g);
  CHECK(graph_from_json(Json::parse(R"({"set":[3,1],"n":4})")) == make_graph(4, {1, 3}));

  CHECK(error_code([] { graph_from_json(Json::parse(R"({"n":16})")); }) == Errc::ParseError);
  CHECK(error_code([] { graph_from_json(Json::parse(R"({"n":"16","set":[1,15]})")); }) ==
        Errc::ParseError);
  CHECK(error_code([] { graph_from_json(Json::parse("[1,2]")); }) == Errc::ParseError);
  CHECK(error_code([] { graph_from_json(Json::parse(R"({"n":6,"set":[1,2]})")); }) ==
        Errc::NotSymmetric);
}

TEST_CASE("spectrum and classification documents", "[serialization]") {
  const auto g = make_graph(8, {1, 2, 3, 5, 6, 7});
  const auto spec_doc = to_json(g, spectrum(g));
  CHECK(spec_doc["integral"] == true);
  CHECK(spec_doc["eigenvalues"].size() == 8);
  CHECK(spec_doc["eigenvalues"][0] == 6.0);

  const auto blocked = make_graph(16, {1, 7, 9, 15});
  const auto doc = to_json(blocked, classify(blocked));
  CHECK(doc["verdict"] == "NoPGST");
  CHECK(doc["citation"] == "ParityObstruction");
  CHECK(doc["pair"] == Json::array({0, 8}));
  CHECK(doc["lattice"].is_null());
  CHECK(doc["numeric_caveat"] == true);
  CHECK(doc["obstruction"]["l"] == 1);
  CHECK(doc["obstruction"]["l_prime"] == 4);

  const auto ex1 = make_graph(16, {1, 2, 3, 4, 12, 13, 14, 15});
  const auto doc1 = to_json(ex1, classify(ex1));
  CHECK(doc1["witness_divisor"] == 2);
  CHECK(doc1["lattice"] == "2piZ");
  CHECK_FALSE(doc1.contains("obstruction"));
  // key order is part of the wire format
  std::vector<std::string> keys;
  for (const auto& item : doc1.items()) keys.push_back(item.key());
  CHECK(keys == std::vector<std::string>{"n", "set", "verdict", "citation", "witness_divisor",
                                         "pair", "lattice", "numeric_caveat"});
}

TEST_CASE("transfer record JSON", "[serialization]") {
  TransferRecord r;
  r.t = 1.5;
  r.amplitude = {0.25, -0.5};
  r.fidelity = std::abs(r.amplitude);
  CHECK_FALSE(to_json(r).contains("q"));
  r.q = 7;
  const auto doc = to_json(r);
  CHECK(doc["q"] == 7);
  CHECK(doc["re"] == 0.25);
  CHECK(doc["im"] == -0.5);
}

TEST_CASE("emit_scan_csv line counts", "[serialization]") {
  const auto g = make_graph(16, {1, 3, 4, 12, 13, 15});
  const TimeLattice lattice{LatticeKind::OddHalfPi};

  std::ostringstream one;
  CHECK(emit_scan_csv(scan_lattice(g, {0, 8}, lattice, {0, 0}), one) == 1);
  CHECK(count_lines(one.str()) == 2);
  CHECK(one.str().rfind("q,t,re,im,fidelity\n0,", 0) == 0);

  std::ostringstream fig2;
  CHECK(emit_scan_csv(scan_lattice(g, {0, 8}, lattice, {0, 249}), fig2) == 250);
  CHECK(count_lines(fig2.str()) == 251);
  CHECK(fig2.str().find('\r') == std::string::npos);

  std::ostringstream empty;
  CHECK(error_code([&] { emit_scan_csv({}, empty); }) == Errc::EmptyRecords);

  std::ostringstream broken;
  broken.setstate(std::ios::badbit);
  const auto records = scan_lattice(g, {0, 8}, lattice, {0, 3});
  CHECK(error_code([&] { emit_scan_csv(records, broken); }) == Errc::IoError);
}

TEST_CASE("scan CSV round trips bit-exactly", "[serialization][property]") {
  std::mt19937_64 rng{5};
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::vector<TransferRecord> records;
  for (Index q = 0; q < 2000; ++q) {
    TransferRecord r;
    r.q = q * 37 - 5000;
    r.t = std::ldexp(unit(rng), static_cast<int>(q % 60) - 30);
    r.amplitude = {unit(rng), unit(rng) * 1e-300};
    r.fidelity = std::abs(r.amplitude);
    records.push_back(r);
  }
  // and real scan output
  const auto scanned = scan_lattice(make_graph(16, {1, 2, 3, 4, 12, 13, 14, 15}), {0, 8},
                                    TimeLattice{LatticeKind::TwoPiZ}, {7500, 8000});
  records.insert(records.end(), scanned.begin(), scanned.end());

  std::stringstream buffer;
  emit_scan_csv(records, buffer);
  const auto back = parse_scan_csv(buffer);
  REQUIRE(back.size() == records.size());
  bool exact = true;
  for (std::size_t i = 0; i < records.size(); ++i) {
    exact = exact && back[i].q == records[i].q && back[i].t == records[i].t &&
            back[i].amplitude == records[i].amplitude && back[i].fidelity == records[i].fidelity;
  }
  CHECK(exact);

  // identical input, identical bytes
  std::ostringstream a, b;
  emit_scan_csv(scanned, a);
  emit_scan_csv(scanned, b);
  CHECK(a.str() == b.str());
}

TEST_CASE("parse_scan_csv rejects malformed input", "[serialization]") {
  for (const char* text : {"", "q,t,re,im\n1,2,3,4\n", "q,t,re,im,fidelity\n1,2,3,4\n",
                           "q,t,re,im,fidelity\n1,2,x,4,5\n", "q,t,re,im,fidelity\n1.5,2,3,4,5\n"}) {
    std::istringstream in(text);
    INFO(text);
    CHECK(error_code([&] { parse_scan_csv(in); }) == Errc::ParseError);
  }
  std::istringstream ok("q,t,re,im,fidelity\n3,1,0.5,0,0.5\n");
  const auto records = parse_scan_csv(ok);
  REQUIRE(records.size() == 1);
  CHECK(records[0].q == 3);
}

TEST_CASE("format_double keeps 17 significant digits", "[serialization]") {
  CHECK(format_double(0.1) == "0.10000000000000001");
  CHECK(format_double(1.0) == "1");
  CHECK(std::stod(format_double(0.99707250728596034)) == 0.99707250728596034);
}
