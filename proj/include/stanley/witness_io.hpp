#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "stanley/ideal.hpp"
#include "stanley/poset.hpp"

namespace stanley {

// Witness files:
//   {"ideal": "n=3; x1*x2, ...", "n": 3, "g": [1,1,1],
//    "intervals": [{"lo": [1,1,0], "hi": [1,1,1], "rule": "..."}, ...]}
// Endpoints are exponent vectors. "ideal" is optional on input.

nlohmann::json partition_to_json(const IntervalPartition& part,
                                 const MonomialIdeal* ideal = nullptr);

struct WitnessFile {
  std::optional<MonomialIdeal> ideal;
  IntervalPartition partition;
};

/// Throws ParseError on malformed input.
WitnessFile witness_from_json(const nlohmann::json& j);
WitnessFile read_witness_file(const std::string& path);
void write_witness_file(const std::string& path, const IntervalPartition& part,
                        const MonomialIdeal* ideal = nullptr);

/// {"kind": "gap", "witness": [0,1,1]}
nlohmann::json violation_to_json(const Box& box, const Violation& v);

}  // namespace stanley
