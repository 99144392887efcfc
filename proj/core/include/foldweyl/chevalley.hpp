#pragma once

// Chevalley bases of simply-laced Lie algebras and diagram automorphisms.
//
// Basis order: x_alpha^+ for positive roots (height, then lex), then the
// matching x_alpha^-, then h_1 .. h_n.  Structure constants come from the
// bimultiplicative sign eps with eps(a_i, a_i) = -1, eps(a_i, a_j) = -1 for
// i < j adjacent and +1 otherwise: [e_a, e_b] = eps(a, b) e_{a+b} and
// [e_a, e_{-a}] = -h_a, with x_a^+ = e_a and x_a^- = -e_{-a}.

#include <memory>
#include <string>
#include <vector>

#include "foldweyl/linalg.hpp"
#include "foldweyl/rootdata.hpp"

namespace foldweyl {

// Sparse integral combination of basis elements.
using IntTerms = std::vector<std::pair<int, int>>;

class ChevalleyAlgebra {
 public:
  explicit ChevalleyAlgebra(const CartanDatum& datum);

  const RootSystem& roots() const { return roots_; }
  int rank() const { return roots_.rank(); }
  int dimension() const { return dim_; }
  int num_positive() const { return num_pos_; }

  int x_plus(int root) const { return root; }
  int x_minus(int root) const { return num_pos_ + root; }
  int h(int i) const { return 2 * num_pos_ + i; }
  // Root of a basis element (negative for x^-, zero for h).
  const RootVec& basis_root(int b) const { return basis_roots_[b]; }
  std::string basis_label(int b) const;

  const IntTerms& bracket_basis(int a, int b) const { return table_[static_cast<std::size_t>(a) * dim_ + b]; }
  Vec bracket(const Vec& a, const Vec& b) const;
  Vec basis_vector(int b) const;

  // Used by tests to corrupt one structure constant.
  void tamper(int a, int b, IntTerms value);

 private:
  int epsilon(const RootVec& a, const RootVec& b) const;

  RootSystem roots_;
  int num_pos_;
  int dim_;
  std::vector<RootVec> basis_roots_;
  std::vector<IntTerms> table_;
};

// Checks [[a,b],c] + [[b,c],a] + [[c,a],b] = 0.  sample == 0 means all basis
// triples; otherwise that many pseudo-random triples from the given seed.
// Returns the number of violated triples.
long jacobi_violations(const ChevalleyAlgebra& g, long sample = 0, unsigned seed = 1);
// Antisymmetry and the sl2 relations on simple roots and on every root.
bool check_chevalley_relations(const ChevalleyAlgebra& g);

// Automorphism acting on the basis by a signed permutation.
class DiagramAutomorphism {
 public:
  // node_perm[i] = sigma(i), 0-based.  Throws ConsistencyError if the signs
  // cannot be made bracket preserving, InputError if node_perm is not a
  // symmetry of the Cartan matrix.
  DiagramAutomorphism(const ChevalleyAlgebra& g, std::vector<int> node_perm);

  const std::vector<int>& node_perm() const { return node_perm_; }
  int image(int b) const { return perm_[b]; }
  int sign(int b) const { return sign_[b]; }
  Vec apply(const Vec& v) const;
  Matrix matrix() const;
  int order() const;
  // Number of basis pairs with sigma([a,b]) != [sigma a, sigma b].
  long bracket_violations(const ChevalleyAlgebra& g) const;

 private:
  std::vector<int> node_perm_;
  std::vector<int> perm_;
  std::vector<int> sign_;
};

}  // namespace foldweyl
