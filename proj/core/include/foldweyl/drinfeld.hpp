#pragma once

// Drinfeld tuples in factored form.
//
// An untwisted factor (i, a, k) stands for (1 - a u)^k at node i.  A twisted
// factor (k, a, n) sits at folded index k and stands for (1 - a^{d_k} u)^n
// with d_k = m on sigma-fixed nodes and 1 otherwise; the stored parameter is
// the one before the power.  On a fixed node the parameters a and zeta a give
// the same polynomial, so the stored one is the canonical representative of
// its class.  Nodes are 0-based here.

#include <cstddef>
#include <string>
#include <vector>

#include "foldweyl/folding.hpp"

namespace foldweyl {

struct Factor {
  int node = 0;
  FieldElement param;
  int mult = 1;
  friend bool operator==(const Factor& a, const Factor& b) {
    return a.node == b.node && a.param == b.param && a.mult == b.mult;
  }
};
bool operator<(const Factor& a, const Factor& b);

// Minimal element of {zeta^r a : r < m} under canonical_less, and the r
// with a = zeta^r * rep.
struct ParamClass {
  FieldElement rep;
  int shift = 0;
};
ParamClass param_class(const FieldElement& a, int m);

class DrinfeldTuple {
 public:
  DrinfeldTuple() = default;
  DrinfeldTuple(CartanDatum datum, std::vector<Factor> factors);

  const CartanDatum& datum() const { return datum_; }
  const std::vector<Factor>& factors() const { return factors_; }
  bool empty() const { return factors_.empty(); }
  Weight highest_weight() const;
  std::string str() const;

  friend DrinfeldTuple operator*(const DrinfeldTuple& a, const DrinfeldTuple& b);
  friend bool operator==(const DrinfeldTuple& a, const DrinfeldTuple& b) { return a.factors_ == b.factors_; }
  friend bool operator<(const DrinfeldTuple& a, const DrinfeldTuple& b) { return a.factors_ < b.factors_; }

 private:
  CartanDatum datum_;
  std::vector<Factor> factors_;
};

class TwistedDrinfeldTuple {
 public:
  TwistedDrinfeldTuple() = default;
  TwistedDrinfeldTuple(DiagramFold fold, std::vector<Factor> factors);

  const DiagramFold& fold() const { return fold_; }
  const std::vector<Factor>& factors() const { return factors_; }
  bool empty() const { return factors_.empty(); }
  // Root of the node polynomial: a^{d_k}.
  FieldElement root(const Factor& f) const;
  Weight highest_weight() const;  // P_sigma^+, in folded indices
  std::string str() const;

  friend TwistedDrinfeldTuple operator*(const TwistedDrinfeldTuple& a, const TwistedDrinfeldTuple& b);
  friend bool operator==(const TwistedDrinfeldTuple& a, const TwistedDrinfeldTuple& b) {
    return a.factors_ == b.factors_;
  }

 private:
  DiagramFold fold_;
  std::vector<Factor> factors_;
};

DrinfeldTuple pi_lambda_a(const CartanDatum& datum, const Weight& lambda, const FieldElement& a);
// Rejects an odd coordinate at the A_2n short node.
TwistedDrinfeldTuple pi_sigma_lambda_a(const DiagramFold& fold, const Weight& lambda, const FieldElement& a);

// lambda(eps) in P_sigma^+ for a dominant weight of the parent.
Weight lambda_eps(const DiagramFold& fold, const Weight& lambda, int eps);

TwistedDrinfeldTuple reduce_r(const DiagramFold& fold, const DrinfeldTuple& pi);

// All pi with r(pi) = pi_sigma, sorted and without repeats.  Throws
// ResourceLimitError past `limit` elements.
std::vector<DrinfeldTuple> fiber(const TwistedDrinfeldTuple& pi_sigma, std::size_t limit = 100000);

DrinfeldTuple preferred_preimage(const TwistedDrinfeldTuple& pi_sigma);

struct DecompositionBlock {
  FieldElement a;               // representative of its class
  std::vector<Weight> weights;  // lambda_{k,eps}, eps < m
};
struct StandardDecomposition {
  std::vector<DecompositionBlock> blocks;  // sorted by representative
};
StandardDecomposition standard_decomposition(const TwistedDrinfeldTuple& pi_sigma);
TwistedDrinfeldTuple expand(const DiagramFold& fold, const StandardDecomposition& d);

// pi^- : every parameter inverted.
DrinfeldTuple pi_minus(const DrinfeldTuple& pi);
// Pullback along tau_b: every parameter multiplied by b.
DrinfeldTuple scale_parameters(const DrinfeldTuple& pi, const FieldElement& b);
TwistedDrinfeldTuple scale_parameters(const TwistedDrinfeldTuple& pi, const FieldElement& b);

}  // namespace foldweyl
