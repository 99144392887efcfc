#pragma once

// Folding of a simply-laced algebra by a diagram automorphism of order m.
//
// Folded weights are indexed by I_0, the minimal node of each sigma-orbit,
// listed in increasing parent order.  In type A_2n the orbit {n, n+1} gives
// the short node n with h_{n,0} = 2(h_n + h_{n+1}).

#include <memory>
#include <string>
#include <vector>

#include "foldweyl/chevalley.hpp"

namespace foldweyl {

// Combinatorial part of a folding: no Lie algebra needed.
struct DiagramFold {
  CartanDatum parent;
  int m = 1;
  std::vector<int> sigma;               // node permutation, 0-based
  std::vector<int> i0;                  // parent node for each folded index
  std::vector<std::vector<int>> orbits; // orbits[k] = (i, sigma i, sigma^2 i, ...)
  int special = -1;                     // folded index of node n in type A_2n
  IntMatrix h0_coeff;                   // h_{k,0} = sum_j h0_coeff[k][j] h_j
  IntMatrix g0_cartan;                  // folded Cartan matrix in I_0 order

  // Supported rows: (A, r>=2, 2), (D, r>=4, 2), (E, 6, 2), (D, 4, 3).
  static DiagramFold make(char type, int rank, int m);

  int rank0() const { return static_cast<int>(i0.size()); }
  bool a2n() const { return special >= 0; }
  bool fixed(int k) const { return orbits[k].size() == 1; }
  // Exponent on the spectral parameter at folded node k: m on fixed nodes.
  int exponent(int k) const { return fixed(k) ? m : 1; }
  // 2 at the A_2n short node, 1 elsewhere.
  int weight_factor(int k) const { return k == special ? 2 : 1; }
  int folded_index(int parent_node) const;  // -1 if not in I_0
  int sigma_power(int node, int power) const;

  // mu |-> (mu(h_{k,0}))_k
  Weight restrict_weight(const Weight& mu) const;
  // P_sigma^+ -> P^+; rejects odd A_2n short-node coordinates.
  Weight embed_weight(const Weight& lambda) const;
  std::string row_label() const;
};

// Identifies a finite-type Cartan matrix up to simultaneous permutation.
// perm[k] = Bourbaki index of node k.  Rank 1 is reported as A1.
struct TypeMatch {
  char type = '?';
  int rank = 0;
  std::vector<int> perm;
  std::string name() const { return std::string(1, type) + std::to_string(rank); }
};
TypeMatch identify_cartan(const IntMatrix& cartan);

struct EigenVector {
  Vec vector;       // parent coordinates, coefficient 1 at `anchor`
  int anchor = -1;  // minimal parent basis index in the support
  Weight weight;    // g_0 weight
};

class FoldedAlgebra {
 public:
  FoldedAlgebra(char type, int rank, int m);

  const DiagramFold& diagram() const { return fold_; }
  const ChevalleyAlgebra& parent() const { return *parent_; }
  std::shared_ptr<const ChevalleyAlgebra> parent_ptr() const { return parent_; }
  const DiagramAutomorphism& sigma() const { return *sigma_; }
  int m() const { return fold_.m; }
  FieldElement zeta() const { return FieldElement::zeta(fold_.m); }

  const std::vector<EigenVector>& eigenbasis(int eps) const { return eigen_[eps]; }
  std::vector<int> eigen_dimensions() const;
  bool in_eigenspace(const Vec& v, int eps) const;
  // Coordinates in eigenbasis(eps); throws ConsistencyError if v is not in g_eps.
  std::vector<FieldElement> eigen_coordinates(int eps, const Vec& v) const;

  // Folded generators in parent coordinates (eps < m).
  const Vec& x_plus(int k, int eps) const { return gens_[k][eps][0]; }
  const Vec& x_minus(int k, int eps) const { return gens_[k][eps][1]; }
  const Vec& h(int k, int eps) const { return gens_[k][eps][2]; }
  // A_2n only: y^{+-}_{n,1} = -+ 1/4 [x^{+-}_{n,0}, x^{+-}_{n,1}].
  const Vec& y_plus() const { return y_[0]; }
  const Vec& y_minus() const { return y_[1]; }

  const RootSystem& g0_roots() const { return *g0_; }
  const TypeMatch& g0_type() const { return g0_type_; }
  // Folded Cartan matrix recomputed from brackets of the folded generators.
  const IntMatrix& g0_cartan_from_brackets() const { return bracket_cartan_; }
  // Highest weight of g_1 as a g_0-module (kernel of all ad x^+_{k,0}).
  Weight g1_highest_weight() const;
  // theta_0^s, or 2 theta_0^s in type A_2n, as a g_0 weight.
  Weight expected_g1_highest_weight() const;

  // Number of basis pairs (u in g_eps, v in g_delta) with [u,v] outside g_{eps+delta}.
  long grading_violations() const;
  // Failed relations among the folded generators: membership in g_eps,
  // [x+_{k,0}, x-_{k,0}] = h_{k,0}, [h_{k,0}, x+-_{k,0}] = +-2 x+-_{k,0}, and
  // in type A_2n that y+-_{n,1} is a nonzero vector of g_1.
  long generator_violations() const;

 private:
  DiagramFold fold_;
  std::shared_ptr<ChevalleyAlgebra> parent_;
  std::shared_ptr<DiagramAutomorphism> sigma_;
  std::vector<std::vector<EigenVector>> eigen_;
  std::vector<std::vector<std::vector<Vec>>> gens_;
  std::vector<Vec> y_;
  IntMatrix bracket_cartan_;
  TypeMatch g0_type_;
  std::shared_ptr<RootSystem> g0_;
};

}  // namespace foldweyl
