#include "foldweyl/looptrunc.hpp"

#include <algorithm>

namespace foldweyl {

LoopElement LoopElement::basis(int b, int exponent, FieldElement coeff) {
  LoopElement x;
  x.add(b, LaurentPoly::monomial(exponent, std::move(coeff)));
  return x;
}

LoopElement LoopElement::from_vector(const Vec& v, const LaurentPoly& p) {
  LoopElement x;
  for (std::size_t b = 0; b < v.size(); ++b)
    if (!v[b].is_zero()) x.add(static_cast<int>(b), v[b] * p);
  return x;
}

LoopElement LoopElement::from_vector(const Vec& v, int exponent) {
  LoopElement x;
  for (std::size_t b = 0; b < v.size(); ++b)
    if (!v[b].is_zero()) x.add(static_cast<int>(b), LaurentPoly::monomial(exponent, v[b]));
  return x;
}

void LoopElement::add(int b, const LaurentPoly& p) {
  if (p.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(b, p);
  if (!inserted) {
    it->second += p;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

LoopElement& LoopElement::operator+=(const LoopElement& other) {
  for (const auto& [b, p] : other.terms_) add(b, p);
  return *this;
}

LoopElement operator*(const FieldElement& s, const LoopElement& x) {
  LoopElement r;
  if (s.is_zero()) return r;
  for (const auto& [b, p] : x.terms_) r.terms_.emplace(b, s * p);
  return r;
}

std::map<int, Vec> LoopElement::by_exponent(int dim) const {
  std::map<int, Vec> out;
  for (const auto& [b, p] : terms_)
    for (const auto& [e, c] : p.terms()) {
      auto [it, inserted] = out.try_emplace(e, Vec(static_cast<std::size_t>(dim)));
      it->second[b] += c;
    }
  return out;
}

LoopElement loop_bracket(const ChevalleyAlgebra& g, const LoopElement& x, const LoopElement& y) {
  LoopElement r;
  for (const auto& [a, p] : x.terms())
    for (const auto& [b, q] : y.terms()) {
      const auto& terms = g.bracket_basis(a, b);
      if (terms.empty()) continue;
      const LaurentPoly pq = p * q;
      for (const auto& [c, s] : terms) r.add(c, FieldElement(s) * pq);
    }
  return r;
}

LoopElement tau_twist(const LoopElement& x, const FieldElement& b) {
  if (b.is_zero()) throw InputError("tau twist requires a nonzero parameter");
  LoopElement r;
  for (const auto& [c, p] : x.terms()) r.add(c, p.scale_variable(b));
  return r;
}

bool is_twisted_element(const FoldedAlgebra& f, const LoopElement& x) {
  const int d = f.parent().dimension();
  const int m = f.m();
  for (const auto& [k, v] : x.by_exponent(d)) {
    const int eps = ((-k) % m + m) % m;
    if (!f.in_eigenspace(v, eps)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

namespace {

void check_points(const std::vector<FieldElement>& a, int N) {
  if (a.empty()) throw InputError("truncation needs at least one point");
  if (N < 1) throw InputError("truncation order N must be positive");
  for (const auto& x : a)
    if (x.is_zero()) throw InputError("truncation points must be nonzero");
}

RootVec root_of(const RootSystem& rs, const Weight& w) {
  RootVec r;
  if (!rs.to_root_lattice(w, r)) throw ConsistencyError("weight outside the root lattice");
  return r;
}

Part part_of(const ChevalleyAlgebra& g, int b) {
  if (b < g.num_positive()) return Part::Raising;
  if (b < 2 * g.num_positive()) return Part::Lowering;
  return Part::Cartan;
}

}  // namespace

TruncatedAlgebra TruncatedAlgebra::untwisted(std::shared_ptr<const ChevalleyAlgebra> g, std::vector<FieldElement> a, int N,
                                             Coordinates coords) {
  check_points(a, N);
  TruncatedAlgebra t;
  t.parent_ = std::move(g);
  t.a_ = std::move(a);
  t.N_ = N;
  t.coords_ = coords;
  t.setup_coefficients();
  const ChevalleyAlgebra& par = *t.parent_;
  for (int b = 0; b < par.dimension(); ++b) {
    const Weight w = par.roots().root_to_weight(par.basis_root(b));
    for (int j = 0; j < t.degree_; ++j) {
      TruncBasis tb;
      tb.component = b;
      tb.slot = j;
      tb.exponent = coords == Coordinates::Monomial ? j : 0;
      if (coords == Coordinates::Local) {
        tb.point = j / N;
        tb.order = j % N;
      } else {
        tb.order = j;
      }
      tb.weight = w;
      tb.root = par.basis_root(b);
      tb.part = part_of(par, b);
      t.lookup_[{0, b, j}] = static_cast<int>(t.basis_.size());
      t.basis_.push_back(std::move(tb));
    }
  }
  t.build_table();
  return t;
}

TruncatedAlgebra TruncatedAlgebra::twisted(std::shared_ptr<const FoldedAlgebra> f, std::vector<FieldElement> a, int N,
                                           Coordinates coords) {
  check_points(a, N);
  TruncatedAlgebra t;
  t.folded_ = std::move(f);
  t.parent_ = t.folded_->parent_ptr();
  t.a_ = std::move(a);
  t.N_ = N;
  t.m_ = t.folded_->m();
  t.coords_ = coords;
  t.setup_coefficients();
  const int m = t.m_;
  const ChevalleyAlgebra& par = *t.parent_;
  for (int eps = 0; eps < m; ++eps) {
    const int shift = (m - eps) % m;
    const auto& eig = t.folded_->eigenbasis(eps);
    for (int q = 0; q < static_cast<int>(eig.size()); ++q) {
      const RootVec root = root_of(t.folded_->g0_roots(), eig[q].weight);
      for (int j = 0; j < t.degree_; ++j) {
        TruncBasis tb;
        tb.eps = eps;
        tb.component = q;
        tb.slot = j;
        tb.exponent = coords == Coordinates::Monomial ? shift + m * j : shift;
        if (coords == Coordinates::Local) {
          tb.point = j / N;
          tb.order = j % N;
        } else {
          tb.order = j;
        }
        tb.weight = eig[q].weight;
        tb.root = root;
        tb.part = part_of(par, eig[q].anchor);
        t.lookup_[{eps, q, j}] = static_cast<int>(t.basis_.size());
        t.basis_.push_back(std::move(tb));
      }
    }
  }
  t.build_table();
  return t;
}

void TruncatedAlgebra::setup_coefficients() {
  for (const auto& x : a_) centers_.push_back(x.pow(m_));
  for (std::size_t i = 0; i < centers_.size(); ++i)
    for (std::size_t j = i + 1; j < centers_.size(); ++j)
      if (coords_ == Coordinates::Local && centers_[i] == centers_[j])
        throw InputError("local coordinates need distinct points");
  ideal_ = LaurentPoly(FieldElement(1));
  for (const auto& b : centers_) ideal_ = ideal_ * LaurentPoly::linear(b).pow(N_);
  degree_ = static_cast<int>(a_.size()) * N_;
  // Coefficient basis as polynomials in s.
  std::vector<LaurentPoly> basis_s;
  if (coords_ == Coordinates::Monomial) {
    for (int j = 0; j < degree_; ++j) basis_s.push_back(LaurentPoly::monomial(j));
  } else {
    std::vector<Vec> cols;
    for (int i = 0; i < degree_; ++i) cols.push_back(power_coordinates(i));
    const auto inv = inverse(Matrix::from_columns(cols, static_cast<std::size_t>(degree_)));
    if (!inv) throw ConsistencyError("local coordinate change is singular");
    for (int j = 0; j < degree_; ++j) {
      LaurentPoly p;
      for (int i = 0; i < degree_; ++i)
        if (!inv->at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)).is_zero())
          p.add_term(i, inv->at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)));
      basis_s.push_back(std::move(p));
    }
  }
  slot_poly_.assign(static_cast<std::size_t>(m_), {});
  for (int eps = 0; eps < m_; ++eps) {
    const int shift = (m_ - eps) % m_;
    for (const auto& p : basis_s) slot_poly_[eps].push_back(LaurentPoly::monomial(shift) * p.inflate(m_));
  }
}

const RootSystem& TruncatedAlgebra::weight_roots() const {
  return folded_ ? folded_->g0_roots() : parent_->roots();
}

int TruncatedAlgebra::index(int eps, int component, int slot) const {
  auto it = lookup_.find({eps, component, slot});
  return it == lookup_.end() ? -1 : it->second;
}

LoopElement TruncatedAlgebra::element(int k) const {
  const TruncBasis& b = basis_[k];
  const LaurentPoly& p = slot_poly_[b.eps][b.slot];
  if (!folded_) return LoopElement::from_vector(parent_->basis_vector(b.component), p);
  return LoopElement::from_vector(folded_->eigenbasis(b.eps)[b.component].vector, p);
}

const Vec& TruncatedAlgebra::power_coordinates(int power) const {
  auto it = residue_cache_.find(power);
  if (it != residue_cache_.end()) return it->second;
  Vec v(static_cast<std::size_t>(degree_));
  if (coords_ == Coordinates::Monomial) {
    const LaurentPoly r = laurent_rem(LaurentPoly::monomial(power), ideal_);
    for (const auto& [e, c] : r.terms()) v[e] = c;
  } else {
    // Taylor coefficients of s^power at each center.
    for (std::size_t r = 0; r < centers_.size(); ++r) {
      Rational binom(1);
      for (int j = 0; j < N_; ++j) {
        if (j > 0) binom = binom * Rational(power - j + 1) / Rational(j);
        if (binom != 0) v[r * N_ + j] = FieldElement(binom) * centers_[r].pow(power - j);
      }
    }
  }
  return residue_cache_.emplace(power, std::move(v)).first->second;
}

SparseVec TruncatedAlgebra::project(const LoopElement& x) const {
  std::map<int, FieldElement> acc;
  auto deposit = [&](int eps, int comp, int power, const FieldElement& c) {
    const Vec& coords = power_coordinates(power);
    for (int j = 0; j < degree_; ++j) {
      if (coords[j].is_zero()) continue;
      acc[index(eps, comp, j)] += c * coords[j];
    }
  };
  if (!folded_) {
    for (const auto& [b, p] : x.terms())
      for (const auto& [e, c] : p.terms()) deposit(0, b, e, c);
  } else {
    const int m = m_;
    for (const auto& [k, v] : x.by_exponent(parent_->dimension())) {
      const int eps = ((-k) % m + m) % m;
      const int shift = (m - eps) % m;
      const auto coords = folded_->eigen_coordinates(eps, v);
      const int power = (k - shift) / m;
      for (int q = 0; q < static_cast<int>(coords.size()); ++q)
        if (!coords[q].is_zero()) deposit(eps, q, power, coords[q]);
    }
  }
  SparseVec out;
  for (auto& [k, c] : acc)
    if (!c.is_zero()) out.emplace_back(k, std::move(c));
  return out;
}

LoopElement TruncatedAlgebra::lift(const SparseVec& v) const {
  LoopElement x;
  for (const auto& [k, c] : v) x += c * element(k);
  return x;
}

void TruncatedAlgebra::build_table() {
  const int D = dimension();
  table_.assign(static_cast<std::size_t>(D) * D, {});
  // Brackets of the finite parts and products of coefficient polynomials
  // are shared by many basis pairs.
  std::map<std::pair<std::pair<int, int>, std::pair<int, int>>, Vec> finite;
  std::map<std::pair<std::pair<int, int>, std::pair<int, int>>, LaurentPoly> products;
  auto component_vector = [&](const TruncBasis& b) {
    if (!folded_) return parent_->basis_vector(b.component);
    return folded_->eigenbasis(b.eps)[b.component].vector;
  };
  for (int i = 0; i < D; ++i)
    for (int j = 0; j < D; ++j) {
      const TruncBasis& bi = basis_[i];
      const TruncBasis& bj = basis_[j];
      const auto key = std::make_pair(std::make_pair(bi.eps, bi.component), std::make_pair(bj.eps, bj.component));
      auto it = finite.find(key);
      if (it == finite.end())
        it = finite.emplace(key, parent_->bracket(component_vector(bi), component_vector(bj))).first;
      if (is_zero(it->second)) continue;
      const auto pkey = std::make_pair(std::make_pair(bi.eps, bi.slot), std::make_pair(bj.eps, bj.slot));
      auto pt = products.find(pkey);
      if (pt == products.end())
        pt = products.emplace(pkey, slot_poly_[bi.eps][bi.slot] * slot_poly_[bj.eps][bj.slot]).first;
      table_[static_cast<std::size_t>(i) * D + j] = project(LoopElement::from_vector(it->second, pt->second));
    }
}

SparseVec TruncatedAlgebra::bracket(const SparseVec& x, const SparseVec& y) const {
  std::map<int, FieldElement> acc;
  for (const auto& [i, a] : x)
    for (const auto& [j, b] : y) {
      const auto& t = bracket(i, j);
      if (t.empty()) continue;
      const FieldElement ab = a * b;
      for (const auto& [k, c] : t) acc[k] += ab * c;
    }
  SparseVec out;
  for (auto& [k, c] : acc)
    if (!c.is_zero()) out.emplace_back(k, std::move(c));
  return out;
}

// ---------------------------------------------------------------------------

namespace {

SparseVec column_sparse(const Matrix& phi, std::size_t c) {
  SparseVec v;
  for (std::size_t r = 0; r < phi.rows(); ++r)
    if (!phi.at(r, c).is_zero()) v.emplace_back(static_cast<int>(r), phi.at(r, c));
  return v;
}

SparseVec apply_sparse(const Matrix& phi, const SparseVec& x) {
  Vec acc(phi.rows());
  for (const auto& [k, c] : x)
    for (std::size_t r = 0; r < phi.rows(); ++r)
      if (!phi.at(r, static_cast<std::size_t>(k)).is_zero()) acc[r] += c * phi.at(r, static_cast<std::size_t>(k));
  SparseVec out;
  for (std::size_t r = 0; r < acc.size(); ++r)
    if (!acc[r].is_zero()) out.emplace_back(static_cast<int>(r), acc[r]);
  return out;
}

}  // namespace

long homomorphism_violations(const TruncatedAlgebra& source, const TruncatedAlgebra& target, const Matrix& phi) {
  const int D = source.dimension();
  std::vector<SparseVec> cols;
  for (int k = 0; k < D; ++k) cols.push_back(column_sparse(phi, static_cast<std::size_t>(k)));
  long bad = 0;
  for (int i = 0; i < D; ++i)
    for (int j = 0; j < D; ++j)
      if (apply_sparse(phi, source.bracket(i, j)) != target.bracket(cols[i], cols[j])) ++bad;
  return bad;
}

CrtDecomposition crt_decompose(const TruncatedAlgebra& t) {
  const auto& pts = t.points();
  const int m = t.is_twisted() ? t.folded()->m() : 1;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      if (pts[i].pow(m) == pts[j].pow(m)) throw InputError("CRT decomposition needs distinct coordinates");
  CrtDecomposition out;
  int offset = 0;
  for (const auto& a : pts) {
    if (t.is_twisted()) {
      out.blocks.push_back(TruncatedAlgebra::twisted(
          t.folded_ptr(), {a}, t.truncation()));
    } else {
      out.blocks.push_back(TruncatedAlgebra::untwisted(
          t.parent_ptr(), {a}, t.truncation()));
    }
    out.offsets.push_back(offset);
    offset += out.blocks.back().dimension();
  }
  const int D = t.dimension();
  out.iso = Matrix(static_cast<std::size_t>(offset), static_cast<std::size_t>(D));
  for (int k = 0; k < D; ++k) {
    const LoopElement x = t.element(k);
    for (std::size_t b = 0; b < out.blocks.size(); ++b)
      for (const auto& [r, c] : out.blocks[b].project(x)) out.iso.at(static_cast<std::size_t>(out.offsets[b] + r), static_cast<std::size_t>(k)) = c;
  }
  out.bijective = offset == D && rank(out.iso) == static_cast<std::size_t>(D);

  // bracket check on the direct sum
  std::vector<SparseVec> cols;
  for (int k = 0; k < D; ++k) cols.push_back(column_sparse(out.iso, static_cast<std::size_t>(k)));
  auto split = [&](const SparseVec& v, std::size_t b) {
    SparseVec part;
    const int lo = out.offsets[b], hi = lo + out.blocks[b].dimension();
    for (const auto& [r, c] : v)
      if (r >= lo && r < hi) part.emplace_back(r - lo, c);
    return part;
  };
  for (int i = 0; i < D; ++i)
    for (int j = 0; j < D; ++j) {
      const SparseVec lhs = apply_sparse(out.iso, t.bracket(i, j));
      SparseVec rhs;
      for (std::size_t b = 0; b < out.blocks.size(); ++b)
        for (const auto& [r, c] : out.blocks[b].bracket(split(cols[i], b), split(cols[j], b)))
          rhs.emplace_back(r + out.offsets[b], c);
      if (lhs != rhs) ++out.violations;
    }
  if (out.bijective) {
    const auto inv = inverse(out.iso);
    out.inverse_roundtrip = inv && (*inv * out.iso) == Matrix::identity(static_cast<std::size_t>(D)) &&
                            (out.iso * *inv) == Matrix::identity(static_cast<std::size_t>(D));
  }
  return out;
}

UntwistResult untwist_iso(std::shared_ptr<const FoldedAlgebra> f, const FieldElement& a, int N) {
  if (a.is_zero()) throw InputError("untwisting needs a nonzero parameter");
  TruncatedAlgebra tw = TruncatedAlgebra::twisted(f, {a}, N);
  TruncatedAlgebra un = TruncatedAlgebra::untwisted(f->parent_ptr(), {a}, N);
  Matrix map(static_cast<std::size_t>(un.dimension()), static_cast<std::size_t>(tw.dimension()));
  for (int k = 0; k < tw.dimension(); ++k)
    for (const auto& [r, c] : un.project(tw.element(k))) map.at(static_cast<std::size_t>(r), static_cast<std::size_t>(k)) = c;
  const std::size_t rk = rank(map);
  const long bad = homomorphism_violations(tw, un, map);
  return UntwistResult{std::move(tw), std::move(un), std::move(map), rk, bad};
}

}  // namespace foldweyl
