#pragma once

// Characters of Weyl modules from the fundamental table.
//
// Untwisted: W(pi) is a tensor product of fundamental Weyl modules
// W(pi_{omega_i,1}), one per unit of multiplicity, whatever the parameters.
// Twisted: the character of W(pi_sigma) is that of W(pi) for the preferred
// preimage pi, restricted to g_0.

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "foldweyl/drinfeld.hpp"

namespace foldweyl {

enum class Provenance { OracleVerified, SuppliedData };
const char* provenance_name(Provenance p);

// g-module decomposition of W(pi_{omega_i,1}).
struct TableEntry {
  std::vector<Weight> weights;
  Provenance provenance = Provenance::SuppliedData;
};
// node is 0-based.  Throws TableGapError when no entry is known.
TableEntry fundamental_table_entry(char type, int rank, int node);
// Character of the entry (cached).
const Character& fundamental_character(char type, int rank, int node);

struct FactorNode {
  std::string label;
  std::int64_t dimension = 1;  // of one copy
  int power = 1;               // tensor power of this node
  std::vector<FactorNode> children;
};

struct WeylCharacterReport {
  bool twisted = false;
  std::string input;
  std::string algebra;         // g, or g_0 when twisted
  FactorNode tree;
  Character character;         // g weights, or g_0 weights in folded indices
  std::int64_t dimension = 0;
  std::map<Weight, std::int64_t> decomposition;  // irreducible constituents
};

WeylCharacterReport untwisted_weyl_character(const DrinfeldTuple& pi);
WeylCharacterReport twisted_weyl_character(const TwistedDrinfeldTuple& pi_sigma);

// Blocks of the standard decomposition, then eps pieces, then fundamental
// leaves; in type A_2n the short node contributes W(pi_s(2 omega_n, 1)).
FactorNode twisted_factorization(const TwistedDrinfeldTuple& pi_sigma);
// Product of dimension^power over the leaves.
std::int64_t tree_dimension(const FactorNode& node);

// Root system of g_0 in folded indices (cached per folding).
std::shared_ptr<const RootSystem> g0_root_system(const DiagramFold& fold);
// Pushes every weight through restrict_weight.
Character restrict_character(const DiagramFold& fold, const Character& ch);

}  // namespace foldweyl
