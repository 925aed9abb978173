#pragma once

// JSON forms of the library's values.
//
//   complex:  {"ring": {"type": "cyclic", "p": 7} | {"type": "laurent"} |
//                      {"type": "integer"} | {"type": "complex"},
//              "ranks": [...], "boundaries": [d_1, ..., d_n], "labels": optional}
//             d_k is a list of rows; an entry is an integer, a [re, im] pair, or
//             a list of [coefficient, exponent] pairs for group ring entries.
//   representation: {"kind": "root_of_unity", "p": 7, "k": 1} |
//                   {"kind": "angle", "psi": 1.0} | {"kind": "complex", "re": .., "im": ..}
//   torsion:  {"value": {"re", "im"}, "ambiguity": {...}, "modulus_squared", "method"}
//   lens:     {"p": 7, "q": [1, 2]}

#include <json.hpp>
#include <string>
#include <variant>

#include "rtorsion/chain_complex.hpp"
#include "rtorsion/spaces.hpp"
#include "rtorsion/torsion_class.hpp"

namespace rtorsion {

using Json = nlohmann::json;

using AnyComplex = std::variant<GroupRingComplex, IntegerComplex, ComplexChainComplex>;

Json to_json(const GroupRingElement& x);
GroupRingElement group_ring_from_json(const Json& j, std::int64_t modulus);

Json to_json(const Representation& rep);
Representation representation_from_json(const Json& j);

Json to_json(const GroupRingComplex& c);
Json to_json(const IntegerComplex& c);
Json to_json(const ComplexChainComplex& c);
Json to_json(const AnyComplex& c);
/// Throws std::invalid_argument on malformed input. Does not check d^2 = 0.
AnyComplex complex_from_json(const Json& j);

Json to_json(const Ambiguity& a);
Json to_json(const TorsionClass& t, const std::string& method);
/// A positive real torsion (no ambiguity) in the same shape.
Json real_torsion_json(double value, const std::string& method);

Json to_json(const LensSpace& lens);
LensSpace lens_from_json(const Json& j);

/// Parse a JSON file; throws std::invalid_argument when it cannot be read or parsed.
Json read_json_file(const std::string& path);

}  // namespace rtorsion
