#include "stanley/witness_io.hpp"

#include <fstream>
#include <sstream>

#include "stanley/error.hpp"

namespace stanley {

namespace {

nlohmann::json exponent_json(const Exponent& e) { return e.coords(); }

Exponent read_exponent(const nlohmann::json& j, std::size_t n, const char* field) {
  if (!j.is_array() || j.size() != n) {
    throw ParseError(std::string("witness: '") + field + "' must be an array of length n");
  }
  std::vector<std::uint32_t> c;
  for (const auto& x : j) {
    if (!x.is_number_unsigned()) {
      throw ParseError(std::string("witness: '") + field + "' entries must be non-negative");
    }
    c.push_back(x.get<std::uint32_t>());
  }
  return Exponent(std::move(c));
}

}  // namespace

nlohmann::json partition_to_json(const IntervalPartition& part, const MonomialIdeal* ideal) {
  nlohmann::json j;
  if (ideal) j["ideal"] = to_compact(*ideal);
  j["n"] = part.n();
  j["g"] = exponent_json(part.box.g());
  auto& ivs = j["intervals"] = nlohmann::json::array();
  for (const auto& iv : part.intervals) {
    nlohmann::json row{{"lo", exponent_json(part.box.decode(iv.lo))},
                       {"hi", exponent_json(part.box.decode(iv.hi))}};
    if (!iv.rule.empty()) row["rule"] = iv.rule;
    ivs.push_back(std::move(row));
  }
  return j;
}

WitnessFile witness_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("witness: top level must be an object");
  if (!j.contains("n") || !j["n"].is_number_integer()) {
    throw ParseError("witness: missing integer 'n'");
  }
  const long long n = j["n"].get<long long>();
  if (n < 0 || n > 4096) throw ParseError("witness: n out of range");
  const auto un = static_cast<std::size_t>(n);

  WitnessFile out;
  if (j.contains("ideal")) {
    if (!j["ideal"].is_string()) throw ParseError("witness: 'ideal' must be a string");
    out.ideal = parse_ideal(j["ideal"].get<std::string>(), UnitPolicy::allow);
    if (out.ideal->n() != n) throw ParseError("witness: ideal and n disagree");
  }
  Exponent g = j.contains("g") ? read_exponent(j["g"], un, "g")
                               : Exponent(std::vector<std::uint32_t>(un, 1));
  Box box = [&] {
    try {
      return Box(g);
    } catch (const LimitError& e) {
      throw ParseError(std::string("witness: ") + e.what());
    }
  }();
  if (!j.contains("intervals") || !j["intervals"].is_array()) {
    throw ParseError("witness: missing array 'intervals'");
  }
  out.partition.box = box;
  for (const auto& row : j["intervals"]) {
    if (!row.is_object() || !row.contains("lo") || !row.contains("hi")) {
      throw ParseError("witness: every interval needs 'lo' and 'hi'");
    }
    const Exponent lo = read_exponent(row["lo"], un, "lo");
    const Exponent hi = read_exponent(row["hi"], un, "hi");
    for (std::size_t t = 0; t < un; ++t) {
      if (hi[t] > g[t]) throw ParseError("witness: 'hi' exceeds g");
      if (lo[t] > hi[t]) throw ParseError("witness: 'lo' must be <= 'hi'");
    }
    std::string rule;
    if (row.contains("rule") && row["rule"].is_string()) rule = row["rule"].get<std::string>();
    out.partition.intervals.push_back({box.encode(lo), box.encode(hi), std::move(rule)});
  }
  return out;
}

WitnessFile read_witness_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open witness file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return witness_from_json(nlohmann::json::parse(ss.str()));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("witness: ") + e.what());
  }
}

void write_witness_file(const std::string& path, const IntervalPartition& part,
                        const MonomialIdeal* ideal) {
  std::ofstream out(path);
  if (!out) throw PreconditionError("cannot write " + path);
  out << partition_to_json(part, ideal).dump(1) << '\n';
}

nlohmann::json violation_to_json(const Box& box, const Violation& v) {
  return {{"kind", to_string(v.kind)}, {"witness", exponent_json(box.decode(v.witness))}};
}

}  // namespace stanley
