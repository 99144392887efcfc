#include "foldweyl/chevalley.hpp"

#include <algorithm>
#include <random>

namespace foldweyl {

namespace {

RootVec negate(const RootVec& r) {
  RootVec n = r;
  for (auto& x : n) x = -x;
  return n;
}

RootVec add(const RootVec& a, const RootVec& b) {
  RootVec s = a;
  for (std::size_t i = 0; i < s.size(); ++i) s[i] += b[i];
  return s;
}

bool is_zero_root(const RootVec& r) {
  return std::all_of(r.begin(), r.end(), [](int x) { return x == 0; });
}

void add_term(std::vector<int>& dense, const IntTerms& terms, int coeff) {
  for (const auto& [k, c] : terms) dense[k] += coeff * c;
}

}  // namespace

ChevalleyAlgebra::ChevalleyAlgebra(const CartanDatum& datum) : roots_(datum) {
  if (!datum.simply_laced()) throw InputError("Chevalley basis construction requires a simply-laced type, got " + datum.name());
  const int n = rank();
  num_pos_ = static_cast<int>(roots_.positive_roots().size());
  dim_ = 2 * num_pos_ + n;
  for (const auto& r : roots_.positive_roots()) basis_roots_.push_back(r);
  for (const auto& r : roots_.positive_roots()) basis_roots_.push_back(negate(r));
  for (int i = 0; i < n; ++i) basis_roots_.push_back(RootVec(static_cast<std::size_t>(n), 0));

  auto basis_of_root = [&](const RootVec& r, int& sign) {
    int idx = roots_.root_index(r);
    if (idx >= 0) {
      sign = 1;
      return x_plus(idx);
    }
    idx = roots_.root_index(negate(r));
    if (idx >= 0) {
      sign = -1;
      return x_minus(idx);
    }
    return -1;
  };

  table_.assign(static_cast<std::size_t>(dim_) * dim_, {});
  const auto& A = datum.cartan;
  for (int a = 0; a < dim_; ++a) {
    for (int b = 0; b < dim_; ++b) {
      const RootVec& ra = basis_roots_[a];
      const RootVec& rb = basis_roots_[b];
      const bool ha = a >= 2 * num_pos_, hb = b >= 2 * num_pos_;
      IntTerms out;
      if (ha && hb) {
        // abelian
      } else if (ha || hb) {
        const int i = ha ? a - 2 * num_pos_ : b - 2 * num_pos_;
        const RootVec& r = ha ? rb : ra;
        int c = 0;
        for (int j = 0; j < n; ++j) c += A[i][j] * r[j];
        if (hb) c = -c;
        if (c != 0) out.emplace_back(ha ? b : a, c);
      } else {
        const int sa = a < num_pos_ ? 1 : -1;
        const int sb = b < num_pos_ ? 1 : -1;
        const RootVec sum = add(ra, rb);
        if (is_zero_root(sum)) {
          // [E_a, E_{-a}] = -h_a
          for (int i = 0; i < n; ++i)
            if (ra[i] != 0) out.emplace_back(h(i), -sa * sb * ra[i]);
        } else {
          int sg = 0;
          const int g = basis_of_root(sum, sg);
          if (g >= 0) out.emplace_back(g, sa * sb * sg * epsilon(ra, rb));
        }
      }
      std::sort(out.begin(), out.end());
      table_[static_cast<std::size_t>(a) * dim_ + b] = std::move(out);
    }
  }
}

int ChevalleyAlgebra::epsilon(const RootVec& a, const RootVec& b) const {
  const auto& A = roots_.datum().cartan;
  long s = 0;
  const int n = rank();
  for (int i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    s += static_cast<long>(a[i]) * b[i];
    for (int j = i + 1; j < n; ++j)
      if (A[i][j] != 0) s += static_cast<long>(a[i]) * b[j];
  }
  return (s % 2 == 0) ? 1 : -1;
}

std::string ChevalleyAlgebra::basis_label(int b) const {
  if (b >= 2 * num_pos_) return "h" + std::to_string(b - 2 * num_pos_ + 1);
  std::string s = b < num_pos_ ? "x+[" : "x-[";
  const RootVec& r = roots_.positive_roots()[b % num_pos_];
  for (std::size_t i = 0; i < r.size(); ++i) s += (i ? "," : "") + std::to_string(r[i]);
  return s + "]";
}

Vec ChevalleyAlgebra::basis_vector(int b) const {
  Vec v(static_cast<std::size_t>(dim_));
  v[b] = FieldElement(1);
  return v;
}

Vec ChevalleyAlgebra::bracket(const Vec& a, const Vec& b) const {
  if (a.size() != static_cast<std::size_t>(dim_) || b.size() != static_cast<std::size_t>(dim_))
    throw InputError("bracket of elements from different algebras");
  Vec out(static_cast<std::size_t>(dim_));
  std::vector<int> nb;
  for (int j = 0; j < dim_; ++j)
    if (!b[j].is_zero()) nb.push_back(j);
  for (int i = 0; i < dim_; ++i) {
    if (a[i].is_zero()) continue;
    for (int j : nb) {
      const auto& terms = bracket_basis(i, j);
      if (terms.empty()) continue;
      const FieldElement c = a[i] * b[j];
      for (const auto& [k, s] : terms) out[k] += c * FieldElement(s);
    }
  }
  return out;
}

void ChevalleyAlgebra::tamper(int a, int b, IntTerms value) {
  table_[static_cast<std::size_t>(a) * dim_ + b] = std::move(value);
}

long jacobi_violations(const ChevalleyAlgebra& g, long sample, unsigned seed) {
  const int d = g.dimension();
  std::vector<int> acc(static_cast<std::size_t>(d));
  auto check = [&](int a, int b, int c) {
    std::fill(acc.begin(), acc.end(), 0);
    for (const auto& [k, s] : g.bracket_basis(a, b)) add_term(acc, g.bracket_basis(k, c), s);
    for (const auto& [k, s] : g.bracket_basis(b, c)) add_term(acc, g.bracket_basis(k, a), s);
    for (const auto& [k, s] : g.bracket_basis(c, a)) add_term(acc, g.bracket_basis(k, b), s);
    return std::any_of(acc.begin(), acc.end(), [](int x) { return x != 0; });
  };
  long bad = 0;
  if (sample == 0) {
    for (int a = 0; a < d; ++a)
      for (int b = a; b < d; ++b)
        for (int c = b; c < d; ++c) bad += check(a, b, c);
  } else {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> pick(0, d - 1);
    for (long s = 0; s < sample; ++s) bad += check(pick(rng), pick(rng), pick(rng));
  }
  return bad;
}

bool check_chevalley_relations(const ChevalleyAlgebra& g) {
  const int d = g.dimension();
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      IntTerms neg = g.bracket_basis(b, a);
      for (auto& t : neg) t.second = -t.second;
      if (g.bracket_basis(a, b) != neg) return false;
    }
  const auto& roots = g.roots();
  for (int r = 0; r < g.num_positive(); ++r) {
    // [x_a^+, x_a^-] = h_a and a(h_a) = 2
    IntTerms expect;
    const RootVec& a = roots.positive_roots()[r];
    for (int i = 0; i < g.rank(); ++i)
      if (a[i] != 0) expect.emplace_back(g.h(i), a[i]);
    if (g.bracket_basis(g.x_plus(r), g.x_minus(r)) != expect) return false;
    const Weight w = roots.root_to_weight(a);
    int pairing = 0;
    for (int i = 0; i < g.rank(); ++i) pairing += a[i] * w[i];
    if (pairing != 2) return false;
  }
  for (int i = 0; i < g.rank(); ++i) {
    RootVec simple(static_cast<std::size_t>(g.rank()), 0);
    simple[i] = 1;
    const int r = roots.root_index(simple);
    if (g.bracket_basis(g.h(i), g.x_plus(r)) != IntTerms{{g.x_plus(r), 2}}) return false;
    if (g.bracket_basis(g.h(i), g.x_minus(r)) != IntTerms{{g.x_minus(r), -2}}) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

DiagramAutomorphism::DiagramAutomorphism(const ChevalleyAlgebra& g, std::vector<int> node_perm)
    : node_perm_(std::move(node_perm)) {
  const int n = g.rank();
  const auto& A = g.roots().datum().cartan;
  if (static_cast<int>(node_perm_.size()) != n) throw InputError("node permutation has the wrong length");
  std::vector<int> sorted = node_perm_;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < n; ++i)
    if (sorted[i] != i) throw InputError("node map is not a permutation");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (A[node_perm_[i]][node_perm_[j]] != A[i][j]) throw InputError("node permutation is not a diagram symmetry");

  const auto& roots = g.roots();
  const int P = g.num_positive();
  auto permute_root = [&](const RootVec& r) {
    RootVec p(static_cast<std::size_t>(n), 0);
    for (int j = 0; j < n; ++j) p[node_perm_[j]] = r[j];
    return p;
  };
  auto eps = [&](const RootVec& a, const RootVec& b) {
    long s = 0;
    for (int i = 0; i < n; ++i) {
      if (a[i] == 0) continue;
      s += static_cast<long>(a[i]) * b[i];
      for (int j = i + 1; j < n; ++j)
        if (A[i][j] != 0) s += static_cast<long>(a[i]) * b[j];
    }
    return s % 2 == 0 ? 1 : -1;
  };

  std::vector<int> root_sign(static_cast<std::size_t>(P), 1);
  std::vector<int> root_image(static_cast<std::size_t>(P), -1);
  for (int r = 0; r < P; ++r) {
    const RootVec& alpha = roots.positive_roots()[r];
    root_image[r] = roots.root_index(permute_root(alpha));
    if (RootSystem::height(alpha) == 1) continue;
    for (int i = 0; i < n; ++i) {
      RootVec beta = alpha;
      beta[i] -= 1;
      const int bi = roots.root_index(beta);
      if (bi < 0) continue;
      RootVec simple(static_cast<std::size_t>(n), 0);
      simple[i] = 1;
      // sigma [x_beta, x_i] = eps(beta, a_i) sigma x_alpha
      root_sign[r] = root_sign[bi] * eps(permute_root(beta), permute_root(simple)) * eps(beta, simple);
      break;
    }
  }
  const int d = g.dimension();
  perm_.assign(static_cast<std::size_t>(d), 0);
  sign_.assign(static_cast<std::size_t>(d), 1);
  for (int r = 0; r < P; ++r) {
    perm_[g.x_plus(r)] = g.x_plus(root_image[r]);
    perm_[g.x_minus(r)] = g.x_minus(root_image[r]);
    sign_[g.x_plus(r)] = sign_[g.x_minus(r)] = root_sign[r];
  }
  for (int i = 0; i < n; ++i) perm_[g.h(i)] = g.h(node_perm_[i]);
  if (bracket_violations(g) != 0) throw ConsistencyError("diagram automorphism does not preserve brackets");
}

Vec DiagramAutomorphism::apply(const Vec& v) const {
  Vec out(v.size());
  for (std::size_t b = 0; b < v.size(); ++b)
    if (!v[b].is_zero()) out[perm_[b]] = sign_[b] == 1 ? v[b] : -v[b];
  return out;
}

Matrix DiagramAutomorphism::matrix() const {
  const std::size_t d = perm_.size();
  Matrix m(d, d);
  for (std::size_t b = 0; b < d; ++b) m.at(perm_[b], b) = FieldElement(sign_[b]);
  return m;
}

int DiagramAutomorphism::order() const {
  const int d = static_cast<int>(perm_.size());
  std::vector<int> cur(perm_), sgn(sign_);
  for (int k = 1; k <= 2 * d + 2; ++k) {
    bool identity = true;
    for (int b = 0; b < d && identity; ++b) identity = cur[b] == b && sgn[b] == 1;
    if (identity) return k;
    std::vector<int> next(static_cast<std::size_t>(d)), nsgn(static_cast<std::size_t>(d));
    for (int b = 0; b < d; ++b) {
      next[b] = perm_[cur[b]];
      nsgn[b] = sgn[b] * sign_[cur[b]];
    }
    cur = std::move(next);
    sgn = std::move(nsgn);
  }
  return -1;
}

long DiagramAutomorphism::bracket_violations(const ChevalleyAlgebra& g) const {
  const int d = g.dimension();
  long bad = 0;
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      IntTerms lhs;
      for (const auto& [k, c] : g.bracket_basis(a, b)) lhs.emplace_back(perm_[k], c * sign_[k]);
      std::sort(lhs.begin(), lhs.end());
      IntTerms rhs = g.bracket_basis(perm_[a], perm_[b]);
      for (auto& t : rhs) t.second *= sign_[a] * sign_[b];
      if (lhs != rhs) ++bad;
    }
  return bad;
}

}  // namespace foldweyl
