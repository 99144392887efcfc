#pragma once

// Weyl modules built directly from generators and relations.
//
// Over a truncated algebra T = n- + h + n+ the induced module
// M = U(T) (x)_{U(h + n+)} C_chi has the PBW basis of U(n-).  The Weyl module
// is M / U(T) S with S the integrability vectors (x-_{i,0})^{lambda_i + 1} w.
// Since U(T) S = U(n-) U(h + n+) S, the relation space is computed in two
// steps: close S under h + n+, then spread it down weight by weight with
// left multiplication by a Lie generating set of n-.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "foldweyl/drinfeld.hpp"
#include "foldweyl/looptrunc.hpp"

namespace foldweyl {

struct HighestWeightData {
  Weight lambda;                     // in the weight coordinates of the algebra
  std::vector<FieldElement> cartan;  // chi on each basis element (zero off the Cartan part)
  // Integrability seeds: (x-_{i,0} in algebra coordinates, lambda_i + 1).
  std::vector<std::pair<SparseVec, int>> seeds;
};

// chi for the untwisted tuple on g_{a,N} resp. the twisted one on g^sigma.
HighestWeightData highest_weight_data(const TruncatedAlgebra& t, const DrinfeldTuple& pi);
HighestWeightData highest_weight_data(const TruncatedAlgebra& t, const TwistedDrinfeldTuple& pi_sigma);

struct TruncationBound {
  std::vector<FieldElement> points;  // distinct (resp. distinct m-th powers)
  int N = 1;                         // starting value
};
TruncationBound truncation_bound(const DrinfeldTuple& pi);
TruncationBound truncation_bound(const TwistedDrinfeldTuple& pi_sigma);

// Environment override FOLDWEYL_MAX_COMPONENT, default 20000.
std::size_t default_component_cap();

struct BuildOptions {
  // Compute every weight of [w_0 lambda, lambda]; otherwise only the
  // dominant weights (and those above them) and fill in by Weyl symmetry.
  bool all_weights = true;
  std::size_t max_component = default_component_cap();
};

class CyclicModule {
 public:
  // The trivial module of a Lie algebra with the given weight lattice rank.
  static CyclicModule trivial(std::shared_ptr<const TruncatedAlgebra> t);
  static CyclicModule build(std::shared_ptr<const TruncatedAlgebra> t, const HighestWeightData& data,
                            const BuildOptions& options = {});

  const TruncatedAlgebra& algebra() const { return *algebra_; }
  const Weight& highest_weight() const { return lambda_; }
  bool all_weights() const { return all_weights_; }
  // Dimensions of the computed components.
  const std::map<Weight, std::int64_t>& components() const { return dims_; }
  Character character() const;
  std::int64_t dimension() const;
  // Weights of [w_0 lambda, lambda] outside the Weyl hull of lambda that
  // came out nonzero.
  long hull_violations() const { return hull_violations_; }
  // Largest graded piece of the induced module that was handled.
  std::size_t largest_component() const { return largest_; }

  // Quotient basis of a computed component, as PBW monomials.
  std::vector<std::string> basis_labels(const Weight& mu) const;
  // Matrix of basis element k of the algebra from component mu to mu + wt(k).
  Matrix action(int k, const Weight& mu) const;

  struct Engine;

 private:
  std::shared_ptr<const TruncatedAlgebra> algebra_;
  Weight lambda_;
  bool all_weights_ = true;
  std::map<Weight, std::int64_t> dims_;
  long hull_violations_ = 0;
  std::size_t largest_ = 0;
  std::shared_ptr<Engine> engine_;
};

CyclicModule build_weyl_module(const DrinfeldTuple& pi, int N, const BuildOptions& options = {});
CyclicModule build_weyl_module(const TwistedDrinfeldTuple& pi_sigma, int N, const BuildOptions& options = {});

struct OracleOptions {
  int N = 0;          // starting N; 0 uses truncation_bound
  int max_extra = 3;  // hard cap: start + max_extra
  BuildOptions build;
};

struct OracleResult {
  std::vector<std::pair<int, std::int64_t>> history;  // (N, dimension)
  int N_used = 0;
  bool stabilized = false;
  bool monotone = true;
  Character character;  // of the last build
  std::int64_t dimension = 0;
  long hull_violations = 0;
  std::size_t largest_component = 0;
};

OracleResult oracle_weyl_module(const DrinfeldTuple& pi, const OracleOptions& options = {});
OracleResult oracle_weyl_module(const TwistedDrinfeldTuple& pi_sigma, const OracleOptions& options = {});

// Pairs (mu, w mu) with different multiplicities, over all simple reflections.
long weyl_symmetry_violations(const RootSystem& rs, const Character& ch);

struct TwistedComparison {
  OracleResult twisted;
  std::vector<DrinfeldTuple> preimages;
  std::vector<OracleResult> untwisted;  // one per fiber element
  bool dimensions_agree = true;
  bool characters_agree = true;
};
// Builds W(pi_sigma) and W(pi) for pi in the fiber (or the first
// `max_preimages` of it when nonzero) and compares g_0 characters.
TwistedComparison verify_twisted_untwisted(const TwistedDrinfeldTuple& pi_sigma, const OracleOptions& options = {},
                                           std::size_t max_preimages = 0);

}  // namespace foldweyl
