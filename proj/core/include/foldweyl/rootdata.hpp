#pragma once

// Cartan data, root systems, Weyl group orbits and irreducible characters.
//
// Node numbering follows Bourbaki.  a_ij = <alpha_i^vee, alpha_j>, so the
// simple root alpha_j has fundamental-weight coordinates given by column j of
// the Cartan matrix.
//   B_n: alpha_n short.  C_n: alpha_n long.  F_4: alpha_1, alpha_2 long.
//   G_2: alpha_1 short, a_12 = -3.  D_n: node n-2 is trivalent.
//   E_n: chain 1-3-4-5-...-n with node 2 attached to node 4.

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "foldweyl/exact.hpp"

namespace foldweyl {

using IntMatrix = std::vector<std::vector<int>>;
using Weight = std::vector<int>;   // fundamental-weight coordinates
using RootVec = std::vector<int>;  // simple-root coordinates
using Character = std::map<Weight, std::int64_t>;

struct CartanDatum {
  char type = 'A';
  int rank = 0;
  IntMatrix cartan;
  std::vector<int> symmetrizer;  // minimal positive d_i with d_i a_ij symmetric

  static CartanDatum make(char type, int rank);
  // Arbitrary finite-type matrix; type/rank are labels only.
  static CartanDatum from_matrix(char type, IntMatrix cartan);
  std::string name() const;
  bool simply_laced() const;
};

std::int64_t character_dimension(const Character& ch);
Character character_product(const Character& a, const Character& b);
void character_add(Character& into, const Character& ch, std::int64_t times = 1);

class RootSystem {
 public:
  explicit RootSystem(CartanDatum datum);

  const CartanDatum& datum() const { return datum_; }
  int rank() const { return datum_.rank; }
  // Sorted by height, then lexicographically.
  const std::vector<RootVec>& positive_roots() const { return positive_; }
  int root_index(const RootVec& r) const;  // -1 if not a positive root
  bool is_root(const RootVec& r) const;    // positive or negative
  const RootVec& highest_root() const { return highest_; }
  const RootVec& highest_short_root() const { return highest_short_; }
  int dimension() const { return 2 * static_cast<int>(positive_.size()) + rank(); }

  Weight root_to_weight(const RootVec& r) const;
  // Root coordinates of a weight; rational in general.
  std::vector<Rational> weight_to_root(const Weight& w) const;
  // Integral root coordinates if w lies in the root lattice.
  bool to_root_lattice(const Weight& w, RootVec& out) const;
  static int height(const RootVec& r);

  Rational inner(const Weight& a, const Weight& b) const;
  Rational root_inner(const RootVec& a, const RootVec& b) const;

  Weight reflect(int i, const Weight& w) const;
  std::set<Weight> weyl_orbit(const Weight& w) const;
  Weight dominant_representative(const Weight& w) const;
  bool is_dominant(const Weight& w) const;
  // lambda - mu in Q^+.
  bool dominates(const Weight& lambda, const Weight& mu) const;
  bool in_hull(const Weight& mu, const Weight& lambda) const;
  // The antidominant element of the orbit; w_0(lambda) for dominant lambda.
  Weight lowest_representative(const Weight& w) const;
  std::int64_t weyl_group_order() const;

  // Dominant weights mu <= lambda, lambda first.
  std::vector<Weight> dominant_weights_below(const Weight& lambda) const;
  // Freudenthal recursion; rejects non-dominant lambda.
  Character irreducible_character(const Weight& lambda) const;
  // Multiplicities on dominant weights only.
  std::map<Weight, std::int64_t> dominant_multiplicities(const Weight& lambda) const;
  BigInt weyl_dimension(const Weight& lambda) const;
  // Greedy extraction of irreducible constituents, highest first.
  std::map<Weight, std::int64_t> decompose(Character ch) const;

 private:
  CartanDatum datum_;
  std::vector<std::vector<Rational>> inverse_;  // inverse Cartan matrix
  std::vector<RootVec> positive_;
  std::map<RootVec, int> index_;
  RootVec highest_;
  RootVec highest_short_;
};

}  // namespace foldweyl
