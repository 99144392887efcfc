#include "foldweyl/folding.hpp"

#include <algorithm>
#include <numeric>

namespace foldweyl {

DiagramFold DiagramFold::make(char type, int rank, int m) {
  DiagramFold f;
  const bool row_ok = (m == 2 && type == 'A' && rank >= 2) || (m == 2 && type == 'D' && rank >= 4) ||
                      (m == 2 && type == 'E' && rank == 6) || (m == 3 && type == 'D' && rank == 4);
  if (!row_ok)
    throw InputError("no diagram folding of order " + std::to_string(m) + " for " + std::string(1, type) +
                     std::to_string(rank));
  f.parent = CartanDatum::make(type, rank);
  f.m = m;
  f.sigma.resize(static_cast<std::size_t>(rank));
  std::iota(f.sigma.begin(), f.sigma.end(), 0);
  if (type == 'A') {
    for (int i = 0; i < rank; ++i) f.sigma[i] = rank - 1 - i;
  } else if (type == 'D' && m == 2) {
    std::swap(f.sigma[rank - 2], f.sigma[rank - 1]);
  } else if (type == 'E') {
    f.sigma = {5, 1, 4, 3, 2, 0};
  } else {
    f.sigma = {2, 1, 3, 0};  // 1 -> 3 -> 4 -> 1
  }
  std::vector<bool> seen(static_cast<std::size_t>(rank), false);
  for (int i = 0; i < rank; ++i) {
    if (seen[i]) continue;
    std::vector<int> orbit;
    for (int j = i; !seen[j]; j = f.sigma[j]) {
      seen[j] = true;
      orbit.push_back(j);
    }
    f.i0.push_back(i);
    f.orbits.push_back(orbit);
  }
  if (type == 'A' && rank % 2 == 0) f.special = rank / 2 - 1;

  const int r0 = f.rank0();
  f.h0_coeff.assign(static_cast<std::size_t>(r0), std::vector<int>(static_cast<std::size_t>(rank), 0));
  for (int k = 0; k < r0; ++k)
    for (int j : f.orbits[k]) f.h0_coeff[k][j] = (k == f.special) ? 2 : 1;
  const auto& A = f.parent.cartan;
  f.g0_cartan.assign(static_cast<std::size_t>(r0), std::vector<int>(static_cast<std::size_t>(r0), 0));
  for (int k = 0; k < r0; ++k)
    for (int l = 0; l < r0; ++l)
      for (int j = 0; j < rank; ++j) f.g0_cartan[k][l] += f.h0_coeff[k][j] * A[j][f.i0[l]];
  return f;
}

int DiagramFold::folded_index(int parent_node) const {
  for (int k = 0; k < rank0(); ++k)
    if (i0[k] == parent_node) return k;
  return -1;
}

int DiagramFold::sigma_power(int node, int power) const {
  power = ((power % m) + m) % m;
  for (int p = 0; p < power; ++p) node = sigma[node];
  return node;
}

Weight DiagramFold::restrict_weight(const Weight& mu) const {
  if (static_cast<int>(mu.size()) != parent.rank) throw InputError("weight has the wrong rank");
  Weight out(static_cast<std::size_t>(rank0()), 0);
  for (int k = 0; k < rank0(); ++k)
    for (int j = 0; j < parent.rank; ++j) out[k] += h0_coeff[k][j] * mu[j];
  return out;
}

Weight DiagramFold::embed_weight(const Weight& lambda) const {
  if (static_cast<int>(lambda.size()) != rank0()) throw InputError("folded weight has the wrong rank");
  Weight out(static_cast<std::size_t>(parent.rank), 0);
  for (int k = 0; k < rank0(); ++k) {
    if (k == special) {
      if (lambda[k] % 2 != 0) throw InputError("A_2n short-node coordinate must be even");
      out[i0[k]] = lambda[k] / 2;
    } else {
      out[i0[k]] = lambda[k];
    }
  }
  return out;
}

std::string DiagramFold::row_label() const { return parent.name() + " m=" + std::to_string(m); }

// ---------------------------------------------------------------------------

TypeMatch identify_cartan(const IntMatrix& cartan) {
  const int r = static_cast<int>(cartan.size());
  TypeMatch match;
  if (r == 1) {
    match.type = 'A';
    match.rank = 1;
    match.perm = {0};
    return match;
  }
  std::vector<CartanDatum> candidates;
  for (char t : std::string("ABCDEFG")) {
    try {
      candidates.push_back(CartanDatum::make(t, r));
    } catch (const InputError&) {
    }
  }
  std::vector<int> perm(static_cast<std::size_t>(r));
  std::iota(perm.begin(), perm.end(), 0);
  auto matches = [&](const CartanDatum& d, const std::vector<int>& p) {
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j)
        if (d.cartan[p[i]][p[j]] != cartan[i][j]) return false;
    return true;
  };
  for (const auto& d : candidates)
    if (matches(d, perm)) return {d.type, r, perm};
  for (const auto& d : candidates) {
    std::iota(perm.begin(), perm.end(), 0);
    do {
      if (matches(d, perm)) return {d.type, r, perm};
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  throw ConsistencyError("folded Cartan matrix is not of a recognised finite type");
}

// ---------------------------------------------------------------------------

FoldedAlgebra::FoldedAlgebra(char type, int rank, int m) : fold_(DiagramFold::make(type, rank, m)) {
  parent_ = std::make_shared<ChevalleyAlgebra>(fold_.parent);
  sigma_ = std::make_shared<DiagramAutomorphism>(*parent_, fold_.sigma);
  if (sigma_->order() != m) throw ConsistencyError("diagram automorphism has the wrong order");
  const ChevalleyAlgebra& g = *parent_;
  const int d = g.dimension();
  const FieldElement z = zeta();

  eigen_.assign(static_cast<std::size_t>(m), {});
  std::vector<bool> seen(static_cast<std::size_t>(d), false);
  for (int b = 0; b < d; ++b) {
    if (seen[b]) continue;
    std::vector<Vec> powers{g.basis_vector(b)};
    seen[b] = true;
    for (int k = 1; k < m; ++k) {
      powers.push_back(sigma_->apply(powers.back()));
      for (int c = 0; c < d; ++c)
        if (!powers.back()[c].is_zero()) seen[c] = true;
    }
    const Weight parent_weight = g.roots().root_to_weight(g.basis_root(b));
    for (int eps = 0; eps < m; ++eps) {
      Vec v(static_cast<std::size_t>(d));
      for (int k = 0; k < m; ++k) axpy(v, z.pow(-static_cast<long>(eps) * k), powers[k]);
      if (v[b].is_zero()) continue;
      v = scaled(v, v[b].inverse());
      eigen_[eps].push_back({std::move(v), b, fold_.restrict_weight(parent_weight)});
    }
  }

  // folded generators
  const int r0 = fold_.rank0();
  gens_.assign(static_cast<std::size_t>(r0), std::vector<std::vector<Vec>>(static_cast<std::size_t>(m)));
  auto simple_root_index = [&](int node) {
    RootVec r(static_cast<std::size_t>(g.rank()), 0);
    r[node] = 1;
    return g.roots().root_index(r);
  };
  auto simple = [&](int kind, int node) {
    if (kind == 0) return g.basis_vector(g.x_plus(simple_root_index(node)));
    if (kind == 1) return g.basis_vector(g.x_minus(simple_root_index(node)));
    return g.basis_vector(g.h(node));
  };
  const FieldElement s2 = FieldElement::sqrt2();
  for (int k = 0; k < r0; ++k) {
    const auto& orbit = fold_.orbits[k];
    for (int eps = 0; eps < m; ++eps) {
      for (int kind = 0; kind < 3; ++kind) {
        Vec v(static_cast<std::size_t>(d));
        if (k == fold_.special) {
          const int n0 = orbit[0], n1 = orbit[1];
          if (kind == 2) {
            if (eps == 0) {
              axpy(v, FieldElement(2), simple(2, n0));
              axpy(v, FieldElement(2), simple(2, n1));
            } else {
              axpy(v, FieldElement(1), simple(2, n0));
              axpy(v, FieldElement(-1), simple(2, n1));
            }
          } else if (eps == 0) {
            axpy(v, s2, simple(kind, n0));
            axpy(v, s2, simple(kind, n1));
          } else {
            axpy(v, -s2, simple(kind, n0));
            axpy(v, s2, simple(kind, n1));
          }
        } else if (orbit.size() == 1) {
          if (eps == 0) v = simple(kind, orbit[0]);
        } else {
          for (std::size_t j = 0; j < orbit.size(); ++j)
            axpy(v, z.pow(-static_cast<long>(eps) * static_cast<long>(j)), simple(kind, orbit[j]));
        }
        gens_[k][eps].push_back(std::move(v));
      }
    }
  }
  y_.assign(2, Vec(static_cast<std::size_t>(d)));
  if (fold_.a2n()) {
    const int n = fold_.special;
    y_[0] = scaled(g.bracket(x_plus(n, 0), x_plus(n, 1)), FieldElement(Rational(-1, 4)));
    y_[1] = scaled(g.bracket(x_minus(n, 0), x_minus(n, 1)), FieldElement(Rational(1, 4)));
  }

  // Cartan matrix of g_0 from [h_{k,0}, x^+_{l,0}] = a_kl x^+_{l,0}
  bracket_cartan_.assign(static_cast<std::size_t>(r0), std::vector<int>(static_cast<std::size_t>(r0), 0));
  for (int k = 0; k < r0; ++k)
    for (int l = 0; l < r0; ++l) {
      const Vec& x = x_plus(l, 0);
      const Vec br = g.bracket(h(k, 0), x);
      int pos = 0;
      while (x[pos].is_zero()) ++pos;
      const FieldElement ratio = br[pos] / x[pos];
      if (!ratio.is_rational() || ratio.rational().get_den() != 1 || scaled(x, ratio) != br)
        throw ConsistencyError("folded generator is not an h_0 weight vector");
      bracket_cartan_[k][l] = static_cast<int>(ratio.rational().get_num().get_si());
    }
  if (bracket_cartan_ != fold_.g0_cartan) throw ConsistencyError("folded Cartan matrix disagrees with weight restriction");
  g0_type_ = identify_cartan(bracket_cartan_);
  g0_ = std::make_shared<RootSystem>(CartanDatum::from_matrix(g0_type_.type, bracket_cartan_));
}

std::vector<int> FoldedAlgebra::eigen_dimensions() const {
  std::vector<int> dims;
  for (const auto& e : eigen_) dims.push_back(static_cast<int>(e.size()));
  return dims;
}

bool FoldedAlgebra::in_eigenspace(const Vec& v, int eps) const {
  return sigma_->apply(v) == scaled(v, zeta().pow(eps));
}

std::vector<FieldElement> FoldedAlgebra::eigen_coordinates(int eps, const Vec& v) const {
  const auto& basis = eigen_[eps];
  std::vector<FieldElement> coords(basis.size());
  Vec rebuilt(v.size());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    coords[j] = v[basis[j].anchor];
    axpy(rebuilt, coords[j], basis[j].vector);
  }
  if (rebuilt != v) throw ConsistencyError("vector does not lie in the requested eigenspace");
  return coords;
}

Weight FoldedAlgebra::g1_highest_weight() const {
  const auto& basis = eigen_[1 % m()];
  const ChevalleyAlgebra& g = *parent_;
  const std::size_t d = static_cast<std::size_t>(g.dimension());
  const int r0 = fold_.rank0();
  Matrix op(d * static_cast<std::size_t>(r0), basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (int k = 0; k < r0; ++k) {
      const Vec br = g.bracket(x_plus(k, 0), basis[j].vector);
      for (std::size_t c = 0; c < d; ++c) op.at(static_cast<std::size_t>(k) * d + c, j) = br[c];
    }
  const auto kernel = nullspace(op);
  if (kernel.size() != 1) throw ConsistencyError("g_1 is not a highest-weight g_0-module");
  Weight w;
  for (std::size_t j = 0; j < basis.size(); ++j) {
    if (kernel[0][j].is_zero()) continue;
    if (!w.empty() && w != basis[j].weight) throw ConsistencyError("g_1 highest-weight vector is not a weight vector");
    w = basis[j].weight;
  }
  return w;
}

Weight FoldedAlgebra::expected_g1_highest_weight() const {
  Weight w = g0_->root_to_weight(g0_->highest_short_root());
  if (fold_.a2n())
    for (auto& x : w) x *= 2;
  return w;
}

long FoldedAlgebra::grading_violations() const {
  const int mm = m();
  long bad = 0;
  for (int e = 0; e < mm; ++e)
    for (int f = 0; f < mm; ++f)
      for (const auto& u : eigen_[e])
        for (const auto& v : eigen_[f])
          if (!in_eigenspace(parent_->bracket(u.vector, v.vector), (e + f) % mm)) ++bad;
  return bad;
}

long FoldedAlgebra::generator_violations() const {
  const ChevalleyAlgebra& g = *parent_;
  long bad = 0;
  for (int k = 0; k < fold_.rank0(); ++k) {
    for (int eps = 0; eps < m(); ++eps)
      for (const Vec* v : {&x_plus(k, eps), &x_minus(k, eps), &h(k, eps)})
        if (!in_eigenspace(*v, eps)) ++bad;
    if (g.bracket(x_plus(k, 0), x_minus(k, 0)) != h(k, 0)) ++bad;
    if (g.bracket(h(k, 0), x_plus(k, 0)) != scaled(x_plus(k, 0), FieldElement(2))) ++bad;
    if (g.bracket(h(k, 0), x_minus(k, 0)) != scaled(x_minus(k, 0), FieldElement(-2))) ++bad;
  }
  if (fold_.a2n()) {
    for (const Vec* v : {&y_[0], &y_[1]})
      if (is_zero(*v) || !in_eigenspace(*v, 1)) ++bad;
  }
  return bad;
}

}  // namespace foldweyl
