#pragma once

// Loop algebras, the twist tau_b, finite truncations g_{a,N} and
// g^sigma_{a^m,N}, CRT decompositions and the untwisting isomorphism.
//
// The twisted loop algebra is taken as the sum of g_eps (x) t^{m-eps} C[t^m, t^-m],
// i.e. the g_eps component lives in exponents congruent to -eps mod m.

#include <map>
#include <memory>
#include <tuple>
#include <vector>

#include "foldweyl/folding.hpp"

namespace foldweyl {

// Parent basis index -> Laurent polynomial in t.
class LoopElement {
 public:
  LoopElement() = default;
  static LoopElement basis(int b, int exponent, FieldElement coeff = FieldElement(1));
  // v (x) t^exponent for v in parent coordinates.
  static LoopElement from_vector(const Vec& v, int exponent);
  static LoopElement from_vector(const Vec& v, const LaurentPoly& p);

  const std::map<int, LaurentPoly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add(int b, const LaurentPoly& p);
  LoopElement& operator+=(const LoopElement& other);
  friend LoopElement operator*(const FieldElement& s, const LoopElement& x);
  friend bool operator==(const LoopElement& a, const LoopElement& b) { return a.terms_ == b.terms_; }
  // Parent-coordinate vector at each exponent.
  std::map<int, Vec> by_exponent(int dim) const;

 private:
  std::map<int, LaurentPoly> terms_;
};

LoopElement loop_bracket(const ChevalleyAlgebra& g, const LoopElement& x, const LoopElement& y);
// tau_b(x (x) t^k) = b^k x (x) t^k; b must be nonzero.
LoopElement tau_twist(const LoopElement& x, const FieldElement& b);
// sigma~(x (x) t^k) = zeta^k sigma(x) (x) t^k fixes x.
bool is_twisted_element(const FoldedAlgebra& f, const LoopElement& x);

enum class Part { Lowering, Cartan, Raising };

// Basis of the coefficient ring C[s]/Q(s) (s = t^m, or t when untwisted).
// Monomial: the residues s^j, j < deg Q.  Local: (s - b_r)^j e_r where e_r
// is the CRT idempotent of the point b_r; the structure constants are then
// those of the current algebras g (x) C[u]/u^N, up to the shift s = u + b_r.
enum class Coordinates { Monomial, Local };

struct TruncBasis {
  int eps = 0;        // eigenspace (0 when untwisted)
  int component = 0;  // parent basis index (untwisted) or eigenbasis index (twisted)
  int slot = 0;       // index into the coefficient basis
  int exponent = 0;   // power of t (monomial coordinates); t^{m-eps} prefix otherwise
  int point = -1;     // local coordinates: the point r and the order j
  int order = 0;
  Weight weight;      // g weight (untwisted) or g_0 weight (twisted)
  RootVec root;       // the same in simple-root coordinates
  Part part = Part::Cartan;
};

class TruncatedAlgebra {
 public:
  // g (x) C[t, 1/t] / prod_k (t - a_k)^N
  static TruncatedAlgebra untwisted(std::shared_ptr<const ChevalleyAlgebra> g, std::vector<FieldElement> a, int N,
                                    Coordinates coords = Coordinates::Monomial);
  // L^sigma(g) / prod_k (t^m - a_k^m)^N, parameters given before the m-th power.
  static TruncatedAlgebra twisted(std::shared_ptr<const FoldedAlgebra> f, std::vector<FieldElement> a, int N,
                                  Coordinates coords = Coordinates::Monomial);

  bool is_twisted() const { return folded_ != nullptr; }
  Coordinates coordinates() const { return coords_; }
  int dimension() const { return static_cast<int>(basis_.size()); }
  int truncation() const { return N_; }
  const std::vector<FieldElement>& points() const { return a_; }
  // Ideal generator: P(t) untwisted, Q(s) with s = t^m twisted.
  const LaurentPoly& ideal_generator() const { return ideal_; }
  int residues() const { return degree_; }
  const ChevalleyAlgebra& parent() const { return *parent_; }
  const FoldedAlgebra* folded() const { return folded_.get(); }
  std::shared_ptr<const ChevalleyAlgebra> parent_ptr() const { return parent_; }
  std::shared_ptr<const FoldedAlgebra> folded_ptr() const { return folded_; }
  // Root system the weights refer to (g or g_0).
  const RootSystem& weight_roots() const;

  const TruncBasis& basis(int k) const { return basis_[k]; }
  int index(int eps, int component, int slot) const;  // -1 if absent
  // The polynomial p in t with basis element = v (x) p.
  const LaurentPoly& slot_polynomial(int eps, int slot) const { return slot_poly_[eps][slot]; }
  LoopElement element(int k) const;
  // Coordinates of the image of x in the quotient.  Throws ConsistencyError
  // for an element outside the twisted loop algebra.
  SparseVec project(const LoopElement& x) const;
  LoopElement lift(const SparseVec& v) const;

  const SparseVec& bracket(int i, int j) const { return table_[static_cast<std::size_t>(i) * basis_.size() + j]; }
  SparseVec bracket(const SparseVec& x, const SparseVec& y) const;

 private:
  TruncatedAlgebra() = default;
  void setup_coefficients();
  void build_table();
  // Coordinates of s^power in the coefficient basis.
  const Vec& power_coordinates(int power) const;

  std::shared_ptr<const ChevalleyAlgebra> parent_;
  std::shared_ptr<const FoldedAlgebra> folded_;
  std::vector<FieldElement> a_;
  int N_ = 1;
  int m_ = 1;
  int degree_ = 0;
  Coordinates coords_ = Coordinates::Monomial;
  std::vector<FieldElement> centers_;              // b_r: a_r, or a_r^m when twisted
  std::vector<std::vector<LaurentPoly>> slot_poly_;  // [eps][slot]
  LaurentPoly ideal_;
  std::vector<TruncBasis> basis_;
  std::map<std::tuple<int, int, int>, int> lookup_;
  std::vector<SparseVec> table_;
  mutable std::map<int, Vec> residue_cache_;
};

// Number of basis pairs where phi([x,y]) != [phi x, phi y]; phi is given by
// its columns (images of the source basis) in target coordinates.
long homomorphism_violations(const TruncatedAlgebra& source, const TruncatedAlgebra& target, const Matrix& phi);

struct CrtDecomposition {
  std::vector<TruncatedAlgebra> blocks;
  std::vector<int> offsets;  // start of each block in the direct sum
  Matrix iso;                // source basis -> direct sum coordinates
  long violations = 0;       // failed bracket checks on the direct sum
  bool bijective = false;
  bool inverse_roundtrip = false;  // iso^{-1} iso = id and iso iso^{-1} = id
};
// Requires pairwise distinct points (distinct m-th powers when twisted).
CrtDecomposition crt_decompose(const TruncatedAlgebra& t);

struct UntwistResult {
  TruncatedAlgebra twisted;
  TruncatedAlgebra untwisted;
  Matrix map;  // twisted basis -> untwisted coordinates
  std::size_t rank = 0;
  long violations = 0;
  bool isomorphism() const { return violations == 0 && rank == map.rows() && rank == map.cols(); }
};
// The composite L^sigma(g) -> L(g) -> g_{a,N} on g^sigma_{a^m,N}.
UntwistResult untwist_iso(std::shared_ptr<const FoldedAlgebra> f, const FieldElement& a, int N);

}  // namespace foldweyl
