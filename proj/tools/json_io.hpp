#pragma once

// JSON forms used by the command-line tool.
//
// A scalar is {"m": tag, "c": [four "num/den" strings]} over the basis
// 1, zeta, sqrt2, zeta*sqrt2.  On input a bare "num/den" string or an integer
// is accepted as a rational.  Tuples are
//   {"type", "rank", "m", "twisted", "factors": [{"node", "param", "mult"}]}
// with 1-based nodes; a twisted node is the parent node number of the
// minimal element of its orbit.

#include <nlohmann/json.hpp>

#include "foldweyl/drinfeld.hpp"
#include "foldweyl/oracle.hpp"
#include "foldweyl/weylchar.hpp"

namespace foldweyl::io {

using Json = nlohmann::ordered_json;

Json to_json(const FieldElement& x);
FieldElement scalar_from_json(const Json& j);

Json to_json(const DrinfeldTuple& pi, int m = 1);
Json to_json(const TwistedDrinfeldTuple& pi);

// Either kind of tuple, as read from JSON.
struct AnyTuple {
  bool twisted = false;
  DrinfeldTuple untwisted;
  TwistedDrinfeldTuple folded;
  int m = 1;  // folding order carried by the input
};
AnyTuple tuple_from_json(const Json& j);

Json weight_json(const Weight& w);
Json character_json(const Character& ch);
Json tree_json(const FactorNode& node);

}  // namespace foldweyl::io
