#include "foldweyl/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <functional>
#include <mutex>
#include <numeric>
#include <unordered_map>

#include "foldweyl/weylchar.hpp"

namespace foldweyl {

std::size_t default_component_cap() {
  if (const char* env = std::getenv("FOLDWEYL_MAX_COMPONENT")) {
    char* end = nullptr;
    const long long v = std::strtoll(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    throw InputError("FOLDWEYL_MAX_COMPONENT must be a positive integer");
  }
  return 20000;
}

namespace {

// Sparse accumulator keyed by monomial id.
class Acc {
 public:
  void add(const SparseVec& v, const FieldElement& s) {
    if (s.is_zero()) return;
    for (const auto& [k, c] : v) add(k, s * c);
  }
  void add(int k, const FieldElement& c) {
    auto [it, inserted] = m_.try_emplace(k, c);
    if (!inserted) it->second += c;
  }
  SparseVec take() {
    SparseVec out;
    out.reserve(m_.size());
    for (auto& [k, c] : m_)
      if (!c.is_zero()) out.emplace_back(k, std::move(c));
    m_.clear();
    return out;
  }

 private:
  std::map<int, FieldElement> m_;
};

bool nonnegative(const RootVec& d) {
  return std::all_of(d.begin(), d.end(), [](int x) { return x >= 0; });
}

RootVec sub(RootVec a, const RootVec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

RootVec neg(RootVec a) {
  for (auto& x : a) x = -x;
  return a;
}

int total(const RootVec& d) { return std::accumulate(d.begin(), d.end(), 0); }

// Lie generating set of a nilpotent part: basis elements spanning a
// complement of its derived algebra.
std::vector<int> lie_generators(const TruncatedAlgebra& t, const std::vector<int>& part) {
  EchelonBasis derived;
  for (std::size_t i = 0; i < part.size(); ++i)
    for (std::size_t j = i + 1; j < part.size(); ++j) derived.insert(t.bracket(part[i], part[j]));
  std::vector<int> gens;
  for (int k : part) {
    SparseVec e{{k, FieldElement(1)}};
    if (derived.insert(e)) gens.push_back(k);
  }
  return gens;
}

}  // namespace

struct CyclicModule::Engine {
  struct Component {
    RootVec depth;
    std::vector<int> monomials;
    EchelonBasis relations;
    std::vector<SparseVec> raw;  // spanning set of the relations, as inserted
    std::vector<int> quotient;   // non-pivot monomials
  };

  std::shared_ptr<const TruncatedAlgebra> T;
  HighestWeightData data;
  std::size_t cap = 0;
  int rank = 0;
  RootVec bound;

  std::vector<int> lower;        // lowering basis indices in PBW order
  std::vector<int> ord;          // basis index -> position in `lower`, or -1
  std::vector<RootVec> ldepth;   // depth of each lowering element
  std::vector<int> gens_minus;   // positions in `lower`
  std::vector<int> gens_plus;    // basis indices
  std::vector<int> cartan;       // basis indices

  std::vector<std::vector<int>> monos;
  std::map<std::vector<int>, int> mono_id;
  std::unordered_map<long long, SparseVec> lmemo, amemo;
  std::map<RootVec, Component> comps;

  Engine(std::shared_ptr<const TruncatedAlgebra> t, HighestWeightData d, std::size_t c)
      : T(std::move(t)), data(std::move(d)), cap(c), rank(T->weight_roots().rank()) {
    const int D = T->dimension();
    std::vector<int> raising;
    for (int k = 0; k < D; ++k) {
      switch (T->basis(k).part) {
        case Part::Lowering: lower.push_back(k); break;
        case Part::Cartan: cartan.push_back(k); break;
        case Part::Raising: raising.push_back(k); break;
      }
    }
    std::stable_sort(lower.begin(), lower.end(), [&](int a, int b) {
      return RootSystem::height(T->basis(a).root) > RootSystem::height(T->basis(b).root);
    });
    ord.assign(static_cast<std::size_t>(D), -1);
    for (std::size_t p = 0; p < lower.size(); ++p) {
      ord[lower[p]] = static_cast<int>(p);
      ldepth.push_back(neg(T->basis(lower[p]).root));
    }
    for (int k : lie_generators(*T, lower)) gens_minus.push_back(ord[k]);
    gens_plus = lie_generators(*T, raising);
    intern({});
  }

  int intern(std::vector<int> m) {
    auto it = mono_id.find(m);
    if (it != mono_id.end()) return it->second;
    const int id = static_cast<int>(monos.size());
    monos.push_back(m);
    mono_id.emplace(std::move(m), id);
    return id;
  }

  int tail(int mono) {
    const auto& m = monos[mono];
    return intern(std::vector<int>(m.begin() + 1, m.end()));
  }

  RootVec mono_depth(int mono) const {
    RootVec d(static_cast<std::size_t>(rank), 0);
    for (int p : monos[mono])
      for (int i = 0; i < rank; ++i) d[i] += ldepth[p][i];
    return d;
  }

  // lower[b] * monomial, straightened.
  const SparseVec& L(int b, int mono) {
    const long long key = static_cast<long long>(mono) * static_cast<long long>(lower.size() + 1) + b;
    auto it = lmemo.find(key);
    if (it != lmemo.end()) return it->second;
    SparseVec out;
    if (monos[mono].empty() || b <= monos[mono][0]) {
      std::vector<int> m = monos[mono];
      m.insert(m.begin(), b);
      out.emplace_back(intern(std::move(m)), FieldElement(1));
    } else {
      const int c1 = monos[mono][0];
      const int rest = tail(mono);
      Acc acc;
      const SparseVec inner = L(b, rest);
      acc.add(Lvec(c1, inner), FieldElement(1));
      for (const auto& [c, coef] : T->bracket(lower[b], lower[c1])) {
        if (ord[c] < 0) throw ConsistencyError("lowering part is not a subalgebra");
        acc.add(L(ord[c], rest), coef);
      }
      out = acc.take();
    }
    return lmemo.emplace(key, std::move(out)).first->second;
  }

  SparseVec Lvec(int b, const SparseVec& v) {
    Acc acc;
    for (const auto& [mono, c] : v) acc.add(L(b, mono), c);
    return acc.take();
  }

  // x * monomial * w for x in the Cartan or raising part.
  const SparseVec& A(int x, int mono) {
    const long long key = static_cast<long long>(mono) * static_cast<long long>(T->dimension()) + x;
    auto it = amemo.find(key);
    if (it != amemo.end()) return it->second;
    SparseVec out;
    if (monos[mono].empty()) {
      if (T->basis(x).part == Part::Cartan && !data.cartan[x].is_zero()) out.emplace_back(mono, data.cartan[x]);
    } else {
      const int c1 = monos[mono][0];
      const int rest = tail(mono);
      Acc acc;
      const SparseVec inner = A(x, rest);
      acc.add(Lvec(c1, inner), FieldElement(1));
      for (const auto& [c, coef] : T->bracket(x, lower[c1])) {
        if (T->basis(c).part == Part::Lowering)
          acc.add(L(ord[c], rest), coef);
        else
          acc.add(A(c, rest), coef);
      }
      out = acc.take();
    }
    return amemo.emplace(key, std::move(out)).first->second;
  }

  SparseVec Avec(int x, const SparseVec& v) {
    Acc acc;
    for (const auto& [mono, c] : v) acc.add(A(x, mono), c);
    return acc.take();
  }

  SparseVec act(int k, const SparseVec& v) {
    if (T->basis(k).part == Part::Lowering) return Lvec(ord[k], v);
    return Avec(k, v);
  }

  std::vector<int> enumerate(const RootVec& depth) {
    std::vector<int> out;
    std::vector<int> cur;
    std::function<void(int, RootVec&)> rec = [&](int from, RootVec& left) {
      if (std::all_of(left.begin(), left.end(), [](int x) { return x == 0; })) {
        out.push_back(intern(cur));
        if (out.size() > cap)
          throw ResourceLimitError("weight component exceeds " + std::to_string(cap) +
                                   " PBW monomials (raise FOLDWEYL_MAX_COMPONENT)");
        return;
      }
      for (int p = from; p < static_cast<int>(lower.size()); ++p) {
        bool fits = true;
        for (int i = 0; i < rank && fits; ++i) fits = ldepth[p][i] <= left[i];
        if (!fits) continue;
        for (int i = 0; i < rank; ++i) left[i] -= ldepth[p][i];
        cur.push_back(p);
        rec(p, left);
        cur.pop_back();
        for (int i = 0; i < rank; ++i) left[i] += ldepth[p][i];
      }
    };
    RootVec left = depth;
    rec(0, left);
    return out;
  }

  // Relation seeds closed under the Cartan part and the raising generators.
  std::map<RootVec, std::vector<SparseVec>> closure() {
    std::map<RootVec, EchelonBasis> span;
    std::map<RootVec, std::vector<SparseVec>> raw;
    std::deque<std::pair<RootVec, SparseVec>> queue;
    auto offer = [&](const RootVec& d, SparseVec v) {
      if (v.empty()) return;
      if (!span[d].insert(v)) return;
      raw[d].push_back(v);
      queue.emplace_back(d, std::move(v));
    };
    for (const auto& [x, power] : data.seeds) {
      SparseVec v{{intern({}), FieldElement(1)}};
      for (int p = 0; p < power; ++p) {
        Acc acc;
        for (const auto& [k, c] : x) {
          if (ord[k] < 0) throw ConsistencyError("integrability seed is not a lowering element");
          acc.add(Lvec(ord[k], v), c);
        }
        v = acc.take();
      }
      if (v.empty()) continue;
      const RootVec d = mono_depth(v.front().first);
      offer(d, std::move(v));
    }
    while (!queue.empty()) {
      auto [d, v] = std::move(queue.front());
      queue.pop_front();
      for (int x : cartan) offer(d, Avec(x, v));
      for (int x : gens_plus) {
        RootVec d2 = sub(d, T->basis(x).root);
        if (!nonnegative(d2)) continue;
        offer(d2, Avec(x, v));
      }
    }
    return raw;
  }
};

// ---------------------------------------------------------------------------

CyclicModule CyclicModule::trivial(std::shared_ptr<const TruncatedAlgebra> t) {
  CyclicModule m;
  m.lambda_ = Weight(static_cast<std::size_t>(t->weight_roots().rank()), 0);
  m.algebra_ = std::move(t);
  m.dims_[m.lambda_] = 1;
  return m;
}

CyclicModule CyclicModule::build(std::shared_ptr<const TruncatedAlgebra> t, const HighestWeightData& data,
                                 const BuildOptions& options) {
  const RootSystem& rs = t->weight_roots();
  if (!rs.is_dominant(data.lambda)) throw InputError("highest weight is not dominant");
  bool zero = std::all_of(data.lambda.begin(), data.lambda.end(), [](int x) { return x == 0; });
  if (zero) return trivial(std::move(t));

  CyclicModule mod;
  mod.algebra_ = t;
  mod.lambda_ = data.lambda;
  mod.all_weights_ = options.all_weights;
  auto engine = std::make_shared<Engine>(t, data, options.max_component);
  Engine& e = *engine;

  RootVec bound;  // lambda - w_0 lambda
  {
    Weight low = rs.lowest_representative(data.lambda);
    Weight diff(data.lambda.size());
    for (std::size_t i = 0; i < diff.size(); ++i) diff[i] = data.lambda[i] - low[i];
    if (!rs.to_root_lattice(diff, bound)) throw ConsistencyError("weight interval is not integral");
  }
  auto weight_of = [&](const RootVec& d) {
    Weight w = rs.root_to_weight(d);
    for (std::size_t i = 0; i < w.size(); ++i) w[i] = data.lambda[i] - w[i];
    return w;
  };

  // Depths to compute, top first.
  std::vector<RootVec> dominant_depths;
  for (const auto& mu : rs.dominant_weights_below(data.lambda)) {
    Weight diff(mu.size());
    for (std::size_t i = 0; i < diff.size(); ++i) diff[i] = data.lambda[i] - mu[i];
    RootVec d;
    rs.to_root_lattice(diff, d);
    dominant_depths.push_back(d);
  }
  std::vector<RootVec> depths;
  RootVec cur(bound.size(), 0);
  std::function<void(std::size_t)> box = [&](std::size_t i) {
    if (i == cur.size()) {
      bool needed = options.all_weights;
      for (const auto& d : dominant_depths) {
        if (needed) break;
        needed = nonnegative(sub(d, cur));
      }
      if (needed) depths.push_back(cur);
      return;
    }
    for (int v = 0; v <= bound[i]; ++v) {
      cur[i] = v;
      box(i + 1);
    }
  };
  box(0);
  std::stable_sort(depths.begin(), depths.end(), [](const RootVec& a, const RootVec& b) { return total(a) < total(b); });

  e.bound = bound;
  auto generated = e.closure();

  for (const auto& d : depths) {
    Engine::Component comp;
    comp.depth = d;
    comp.monomials = e.enumerate(d);
    mod.largest_ = std::max(mod.largest_, comp.monomials.size());
    auto offer = [&](SparseVec v) {
      if (v.empty()) return;
      SparseVec copy = v;
      if (comp.relations.insert(std::move(v))) comp.raw.push_back(std::move(copy));
    };
    if (auto it = generated.find(d); it != generated.end())
      for (const auto& v : it->second) offer(v);
    for (int b : e.gens_minus) {
      const RootVec up = sub(d, e.ldepth[b]);
      if (!nonnegative(up)) continue;
      auto it = e.comps.find(up);
      if (it == e.comps.end()) continue;
      for (const auto& r : it->second.raw) offer(e.Lvec(b, r));
    }
    for (int id : comp.monomials)
      if (!comp.relations.is_pivot(id)) comp.quotient.push_back(id);
    std::sort(comp.quotient.begin(), comp.quotient.end());
    const Weight w = weight_of(d);
    const auto dim = static_cast<std::int64_t>(comp.quotient.size());
    if (total(d) == 0 && dim != 1) throw ConsistencyError("the highest weight space vanished");
    mod.dims_[w] = dim;
    if (dim != 0 && !rs.in_hull(w, data.lambda)) ++mod.hull_violations_;
    e.comps.emplace(d, std::move(comp));
  }
  mod.engine_ = std::move(engine);
  return mod;
}

Character CyclicModule::character() const {
  Character ch;
  const RootSystem& rs = algebra_->weight_roots();
  for (const auto& [w, d] : dims_) {
    if (d == 0) continue;
    if (all_weights_) {
      ch[w] += d;
    } else if (rs.is_dominant(w)) {
      for (const auto& x : rs.weyl_orbit(w)) ch[x] += d;
    }
  }
  return ch;
}

std::int64_t CyclicModule::dimension() const { return character_dimension(character()); }

std::vector<std::string> CyclicModule::basis_labels(const Weight& mu) const {
  if (!engine_) {
    if (dims_.count(mu)) return {"w"};
    return {};
  }
  const RootSystem& rs = algebra_->weight_roots();
  Weight diff(mu.size());
  for (std::size_t i = 0; i < diff.size(); ++i) diff[i] = lambda_[i] - mu[i];
  RootVec d;
  if (!rs.to_root_lattice(diff, d)) return {};
  auto it = engine_->comps.find(d);
  if (it == engine_->comps.end()) return {};
  std::vector<std::string> out;
  for (int id : it->second.quotient) {
    std::string s;
    for (int p : engine_->monos[id]) s += "x" + std::to_string(engine_->lower[p]) + " ";
    out.push_back(s + "w");
  }
  return out;
}

Matrix CyclicModule::action(int k, const Weight& mu) const {
  if (k < 0 || k >= algebra_->dimension()) throw InputError("basis index out of range");
  const RootSystem& rs = algebra_->weight_roots();
  Weight diff(mu.size());
  for (std::size_t i = 0; i < diff.size(); ++i) diff[i] = lambda_[i] - mu[i];
  RootVec d;
  if (!rs.to_root_lattice(diff, d)) throw InputError("weight is not below the highest weight");
  if (!engine_) {
    const bool top = std::all_of(d.begin(), d.end(), [](int x) { return x == 0; });
    Matrix m(top && algebra_->basis(k).part == Part::Cartan ? 1 : 0, top ? 1 : 0);
    return m;  // the trivial module: everything acts by zero
  }
  Engine& e = *engine_;
  auto src = e.comps.find(d);
  if (src == e.comps.end()) throw InputError("component was not computed");
  const RootVec d2 = sub(d, algebra_->basis(k).root);
  auto dst = e.comps.find(d2);
  const std::size_t cols = src->second.quotient.size();
  if (dst == e.comps.end()) {
    if (nonnegative(d2) && nonnegative(sub(e.bound, d2))) throw InputError("target component was not computed");
    return Matrix(0, cols);  // outside [w_0 lambda, lambda]
  }
  const auto& q = dst->second.quotient;
  Matrix m(q.size(), cols);
  for (std::size_t c = 0; c < cols; ++c) {
    const SparseVec image = dst->second.relations.reduce(e.act(k, SparseVec{{src->second.quotient[c], FieldElement(1)}}));
    for (const auto& [id, coef] : image) {
      auto pos = std::lower_bound(q.begin(), q.end(), id);
      if (pos == q.end() || *pos != id) throw ConsistencyError("action left the quotient basis");
      m.at(static_cast<std::size_t>(pos - q.begin()), c) = coef;
    }
  }
  return m;
}

// ---------------------------------------------------------------------------

namespace {

// chi on basis element k: sum over factors (node j, param a, mult n) of
// n * (coefficient of h_j in the parent vector) * a^e, summed over the terms
// of the lifted loop element.
template <class NodeOf>
FieldElement evaluate_chi(const TruncatedAlgebra& t, int k, const std::vector<Factor>& factors, NodeOf node_of) {
  const int hbase = 2 * t.parent().num_positive();
  FieldElement val;
  const LoopElement x = t.element(k);
  for (const auto& [b, p] : x.terms()) {
    if (b < hbase) continue;
    for (const auto& f : factors) {
      if (node_of(f) != b - hbase) continue;
      val += FieldElement(f.mult) * p.evaluate(f.param);
    }
  }
  return val;
}

}  // namespace

HighestWeightData highest_weight_data(const TruncatedAlgebra& t, const DrinfeldTuple& pi) {
  if (t.is_twisted()) throw InputError("untwisted tuple on a twisted algebra");
  const ChevalleyAlgebra& g = t.parent();
  if (pi.datum().cartan != g.roots().datum().cartan) throw InputError("tuple does not match the algebra");
  HighestWeightData h;
  h.lambda = pi.highest_weight();
  h.cartan.assign(static_cast<std::size_t>(t.dimension()), FieldElement());
  for (int k = 0; k < t.dimension(); ++k)
    if (t.basis(k).part == Part::Cartan)
      h.cartan[k] = evaluate_chi(t, k, pi.factors(), [](const Factor& f) { return f.node; });
  for (int i = 0; i < g.rank(); ++i) {
    RootVec r(static_cast<std::size_t>(g.rank()), 0);
    r[i] = -1;
    int b = -1;
    for (int c = 0; c < g.dimension(); ++c)
      if (g.basis_root(c) == r) b = c;
    if (b < 0) throw ConsistencyError("missing lowering generator");
    h.seeds.emplace_back(t.project(LoopElement::basis(b, 0)), h.lambda[i] + 1);
  }
  return h;
}

HighestWeightData highest_weight_data(const TruncatedAlgebra& t, const TwistedDrinfeldTuple& pi_sigma) {
  if (!t.is_twisted()) throw InputError("twisted tuple on an untwisted algebra");
  const FoldedAlgebra& f = *t.folded();
  const DiagramFold& fold = pi_sigma.fold();
  if (fold.row_label() != f.diagram().row_label()) throw InputError("tuple does not match the folding");
  HighestWeightData h;
  h.lambda = pi_sigma.highest_weight();
  h.cartan.assign(static_cast<std::size_t>(t.dimension()), FieldElement());
  for (int k = 0; k < t.dimension(); ++k)
    if (t.basis(k).part == Part::Cartan)
      h.cartan[k] = evaluate_chi(t, k, pi_sigma.factors(), [&](const Factor& fac) { return fold.i0[fac.node]; });
  const RootSystem& g0 = f.g0_roots();
  for (int k = 0; k < fold.rank0(); ++k) {
    RootVec r(static_cast<std::size_t>(fold.rank0()), 0);
    r[k] = -1;
    const Weight w = g0.root_to_weight(r);
    const Vec* seed = nullptr;
    for (const auto& e : f.eigenbasis(0))
      if (e.weight == w) seed = &e.vector;
    if (!seed) throw ConsistencyError("missing folded lowering generator");
    h.seeds.emplace_back(t.project(LoopElement::from_vector(*seed, 0)), h.lambda[k] + 1);
  }
  return h;
}

TruncationBound truncation_bound(const DrinfeldTuple& pi) {
  TruncationBound b;
  for (const auto& f : pi.factors())
    if (std::find(b.points.begin(), b.points.end(), f.param) == b.points.end()) b.points.push_back(f.param);
  std::sort(b.points.begin(), b.points.end(), CanonicalLess());
  // Largest lambda_r(h_i) at a single point.
  for (const auto& a : b.points) {
    Weight at(static_cast<std::size_t>(pi.datum().rank), 0);
    for (const auto& f : pi.factors())
      if (f.param == a) at[f.node] += f.mult;
    for (int v : at) b.N = std::max(b.N, v);
  }
  if (b.points.empty()) b.points.push_back(FieldElement(1));
  return b;
}

TruncationBound truncation_bound(const TwistedDrinfeldTuple& pi_sigma) {
  TruncationBound b;
  for (const auto& blk : standard_decomposition(pi_sigma).blocks) {
    b.points.push_back(blk.a);
    // Largest lambda_{k,eps}(h_{i,0}) within a block.
    for (const auto& w : blk.weights)
      for (int v : w) b.N = std::max(b.N, v);
  }
  if (b.points.empty()) b.points.push_back(FieldElement(1));
  return b;
}

namespace {

std::shared_ptr<const ChevalleyAlgebra> chevalley_for(const CartanDatum& d) {
  static std::map<std::pair<char, int>, std::shared_ptr<const ChevalleyAlgebra>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{d.type, d.rank}];
  if (!slot) slot = std::make_shared<const ChevalleyAlgebra>(d);
  return slot;
}

std::shared_ptr<const FoldedAlgebra> folded_for(const DiagramFold& fold) {
  static std::map<std::string, std::shared_ptr<const FoldedAlgebra>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[fold.row_label()];
  if (!slot) slot = std::make_shared<const FoldedAlgebra>(fold.parent.type, fold.parent.rank, fold.m);
  return slot;
}

}  // namespace

CyclicModule build_weyl_module(const DrinfeldTuple& pi, int N, const BuildOptions& options) {
  if (N < 1) throw InputError("N must be positive");
  const auto bound = truncation_bound(pi);
  auto t = std::make_shared<const TruncatedAlgebra>(TruncatedAlgebra::untwisted(chevalley_for(pi.datum()), bound.points, N, Coordinates::Local));
  if (pi.empty()) return CyclicModule::trivial(t);
  return CyclicModule::build(t, highest_weight_data(*t, pi), options);
}

CyclicModule build_weyl_module(const TwistedDrinfeldTuple& pi_sigma, int N, const BuildOptions& options) {
  if (N < 1) throw InputError("N must be positive");
  const auto bound = truncation_bound(pi_sigma);
  auto t = std::make_shared<const TruncatedAlgebra>(TruncatedAlgebra::twisted(folded_for(pi_sigma.fold()), bound.points, N, Coordinates::Local));
  if (pi_sigma.empty()) return CyclicModule::trivial(t);
  return CyclicModule::build(t, highest_weight_data(*t, pi_sigma), options);
}

namespace {

template <class Tuple>
OracleResult escalate(const Tuple& pi, const OracleOptions& options) {
  OracleResult r;
  const int start = options.N > 0 ? options.N : truncation_bound(pi).N;
  for (int N = start; N <= start + options.max_extra; ++N) {
    const CyclicModule m = build_weyl_module(pi, N, options.build);
    const std::int64_t dim = m.dimension();
    if (!r.history.empty() && dim < r.history.back().second) r.monotone = false;
    r.history.emplace_back(N, dim);
    r.N_used = N;
    r.character = m.character();
    r.dimension = dim;
    r.hull_violations = m.hull_violations();
    r.largest_component = std::max(r.largest_component, m.largest_component());
    if (pi.empty()) {
      r.stabilized = true;
      break;
    }
    if (r.history.size() >= 2 && r.history[r.history.size() - 2].second == dim) {
      r.stabilized = true;
      break;
    }
  }
  return r;
}

}  // namespace

OracleResult oracle_weyl_module(const DrinfeldTuple& pi, const OracleOptions& options) { return escalate(pi, options); }

OracleResult oracle_weyl_module(const TwistedDrinfeldTuple& pi_sigma, const OracleOptions& options) {
  return escalate(pi_sigma, options);
}

long weyl_symmetry_violations(const RootSystem& rs, const Character& ch) {
  long bad = 0;
  for (const auto& [w, mult] : ch)
    for (int i = 0; i < rs.rank(); ++i) {
      auto it = ch.find(rs.reflect(i, w));
      if (it == ch.end() || it->second != mult) ++bad;
    }
  return bad;
}

TwistedComparison verify_twisted_untwisted(const TwistedDrinfeldTuple& pi_sigma, const OracleOptions& options,
                                           std::size_t max_preimages) {
  TwistedComparison c;
  c.twisted = oracle_weyl_module(pi_sigma, options);
  c.preimages = fiber(pi_sigma);
  if (max_preimages != 0 && c.preimages.size() > max_preimages) c.preimages.resize(max_preimages);
  OracleOptions up = options;
  up.N = 0;
  for (const auto& pi : c.preimages) {
    c.untwisted.push_back(oracle_weyl_module(pi, up));
    const OracleResult& u = c.untwisted.back();
    if (u.dimension != c.twisted.dimension) c.dimensions_agree = false;
    if (restrict_character(pi_sigma.fold(), u.character) != c.twisted.character) c.characters_agree = false;
  }
  return c;
}

}  // namespace foldweyl
