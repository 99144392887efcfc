#include "foldweyl/drinfeld.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace foldweyl {

bool operator<(const Factor& a, const Factor& b) {
  if (a.node != b.node) return a.node < b.node;
  if (canonical_less(a.param, b.param)) return true;
  if (canonical_less(b.param, a.param)) return false;
  return a.mult < b.mult;
}

ParamClass param_class(const FieldElement& a, int m) {
  ParamClass best{a, 0};
  const FieldElement zinv = FieldElement::zeta(m).inverse();
  FieldElement x = a;
  for (int r = 1; r < m; ++r) {
    x = x * zinv;  // a = zeta^r x
    if (canonical_less(x, best.rep)) best = {x, r};
  }
  return best;
}

namespace {

// Sort and merge equal (node, param) pairs.
std::vector<Factor> canonical(std::vector<Factor> fs) {
  std::sort(fs.begin(), fs.end());
  std::vector<Factor> out;
  for (auto& f : fs) {
    if (!out.empty() && out.back().node == f.node && out.back().param == f.param)
      out.back().mult += f.mult;
    else
      out.push_back(std::move(f));
  }
  return out;
}

void check_factor(const Factor& f, int rank) {
  if (f.node < 0 || f.node >= rank) throw InputError("node " + std::to_string(f.node + 1) + " out of range");
  if (f.param.is_zero()) throw InputError("spectral parameters must be nonzero");
  if (f.mult < 1) throw InputError("multiplicities must be positive");
}

std::string factors_str(const std::vector<Factor>& fs, const char* name) {
  if (fs.empty()) return "1";
  std::ostringstream os;
  for (std::size_t k = 0; k < fs.size(); ++k) {
    if (k) os << " * ";
    os << name << "(" << fs[k].node + 1 << ", " << fs[k].param.str() << ")";
    if (fs[k].mult != 1) os << "^" << fs[k].mult;
  }
  return os.str();
}

}  // namespace

// ---------------------------------------------------------------------------

DrinfeldTuple::DrinfeldTuple(CartanDatum datum, std::vector<Factor> factors) : datum_(std::move(datum)) {
  for (const auto& f : factors) check_factor(f, datum_.rank);
  factors_ = canonical(std::move(factors));
}

Weight DrinfeldTuple::highest_weight() const {
  Weight w(static_cast<std::size_t>(datum_.rank), 0);
  for (const auto& f : factors_) w[f.node] += f.mult;
  return w;
}

std::string DrinfeldTuple::str() const { return factors_str(factors_, "pi"); }

DrinfeldTuple operator*(const DrinfeldTuple& a, const DrinfeldTuple& b) {
  if (a.datum_.type != b.datum_.type || a.datum_.rank != b.datum_.rank)
    throw InputError("tuples for different algebras");
  std::vector<Factor> fs = a.factors_;
  fs.insert(fs.end(), b.factors_.begin(), b.factors_.end());
  return DrinfeldTuple(a.datum_, std::move(fs));
}

TwistedDrinfeldTuple::TwistedDrinfeldTuple(DiagramFold fold, std::vector<Factor> factors) : fold_(std::move(fold)) {
  for (auto& f : factors) {
    check_factor(f, fold_.rank0());
    if (fold_.fixed(f.node)) f.param = param_class(f.param, fold_.m).rep;
  }
  factors_ = canonical(std::move(factors));
}

FieldElement TwistedDrinfeldTuple::root(const Factor& f) const { return f.param.pow(fold_.exponent(f.node)); }

Weight TwistedDrinfeldTuple::highest_weight() const {
  Weight w(static_cast<std::size_t>(fold_.rank0()), 0);
  for (const auto& f : factors_) w[f.node] += fold_.weight_factor(f.node) * f.mult;
  return w;
}

std::string TwistedDrinfeldTuple::str() const { return factors_str(factors_, "pi_s"); }

TwistedDrinfeldTuple operator*(const TwistedDrinfeldTuple& a, const TwistedDrinfeldTuple& b) {
  if (a.fold_.row_label() != b.fold_.row_label()) throw InputError("tuples for different foldings");
  std::vector<Factor> fs = a.factors_;
  fs.insert(fs.end(), b.factors_.begin(), b.factors_.end());
  return TwistedDrinfeldTuple(a.fold_, std::move(fs));
}

// ---------------------------------------------------------------------------

DrinfeldTuple pi_lambda_a(const CartanDatum& datum, const Weight& lambda, const FieldElement& a) {
  if (static_cast<int>(lambda.size()) != datum.rank) throw InputError("weight has the wrong length");
  if (a.is_zero()) throw InputError("spectral parameters must be nonzero");
  std::vector<Factor> fs;
  for (int i = 0; i < datum.rank; ++i) {
    if (lambda[i] < 0) throw InputError("weight is not dominant");
    if (lambda[i] > 0) fs.push_back({i, a, lambda[i]});
  }
  return DrinfeldTuple(datum, std::move(fs));
}

TwistedDrinfeldTuple pi_sigma_lambda_a(const DiagramFold& fold, const Weight& lambda, const FieldElement& a) {
  if (static_cast<int>(lambda.size()) != fold.rank0()) throw InputError("weight has the wrong length");
  if (a.is_zero()) throw InputError("spectral parameters must be nonzero");
  std::vector<Factor> fs;
  for (int k = 0; k < fold.rank0(); ++k) {
    if (lambda[k] < 0) throw InputError("weight is not dominant");
    const int c = fold.weight_factor(k);
    if (lambda[k] % c != 0) throw InputError("the short-node coordinate must be even in type A_2n");
    if (lambda[k] > 0) fs.push_back({k, a, lambda[k] / c});
  }
  return TwistedDrinfeldTuple(fold, std::move(fs));
}

Weight lambda_eps(const DiagramFold& fold, const Weight& lambda, int eps) {
  if (eps < 0 || eps >= fold.m) throw InputError("eps must lie in [0, m)");
  if (static_cast<int>(lambda.size()) != fold.parent.rank) throw InputError("weight has the wrong length");
  Weight out(static_cast<std::size_t>(fold.rank0()), 0);
  for (int k = 0; k < fold.rank0(); ++k) {
    if (fold.fixed(k))
      out[k] = eps == 0 ? lambda[fold.i0[k]] : 0;
    else
      out[k] = fold.weight_factor(k) * lambda[fold.sigma_power(fold.i0[k], eps)];
  }
  return out;
}

TwistedDrinfeldTuple reduce_r(const DiagramFold& fold, const DrinfeldTuple& pi) {
  if (pi.datum().type != fold.parent.type || pi.datum().rank != fold.parent.rank)
    throw InputError("tuple does not match the folded algebra");
  std::vector<std::pair<FieldElement, Weight>> blocks;
  for (const auto& f : pi.factors()) {
    auto it = std::find_if(blocks.begin(), blocks.end(), [&](const auto& b) { return b.first == f.param; });
    if (it == blocks.end()) {
      blocks.emplace_back(f.param, Weight(static_cast<std::size_t>(fold.parent.rank), 0));
      it = blocks.end() - 1;
    }
    it->second[f.node] += f.mult;
  }
  const FieldElement z = FieldElement::zeta(fold.m);
  std::vector<Factor> fs;
  for (const auto& [a, lambda] : blocks) {
    FieldElement at = a;
    for (int eps = 0; eps < fold.m; ++eps, at = at * z) {
      const Weight le = lambda_eps(fold, lambda, eps);
      for (int k = 0; k < fold.rank0(); ++k)
        if (le[k] > 0) fs.push_back({k, at, le[k] / fold.weight_factor(k)});
    }
  }
  return TwistedDrinfeldTuple(fold, std::move(fs));
}

std::vector<DrinfeldTuple> fiber(const TwistedDrinfeldTuple& pi_sigma, std::size_t limit) {
  const DiagramFold& fold = pi_sigma.fold();
  const int m = fold.m;
  const FieldElement z = FieldElement::zeta(m);
  // For each factor, the multisets of size mult drawn from its unit fiber.
  std::vector<std::vector<std::vector<Factor>>> choices;
  for (const auto& f : pi_sigma.factors()) {
    std::vector<Factor> unit;
    for (int r = 0; r < m; ++r)
      unit.push_back({fold.sigma_power(fold.i0[f.node], r), f.param * z.pow(m - r), 1});
    std::vector<std::vector<Factor>> combos;
    std::vector<int> pick(static_cast<std::size_t>(f.mult), 0);
    while (true) {
      std::vector<Factor> c;
      for (int p : pick) c.push_back(unit[p]);
      combos.push_back(std::move(c));
      int pos = f.mult - 1;
      while (pos >= 0 && pick[pos] == m - 1) --pos;
      if (pos < 0) break;
      ++pick[pos];
      for (int q = pos + 1; q < f.mult; ++q) pick[q] = pick[pos];
      if (combos.size() > limit) throw ResourceLimitError("fiber exceeds the enumeration limit");
    }
    choices.push_back(std::move(combos));
  }
  std::set<DrinfeldTuple> seen;
  std::vector<std::size_t> idx(choices.size(), 0);
  while (true) {
    std::vector<Factor> fs;
    for (std::size_t k = 0; k < choices.size(); ++k) fs.insert(fs.end(), choices[k][idx[k]].begin(), choices[k][idx[k]].end());
    seen.insert(DrinfeldTuple(fold.parent, std::move(fs)));
    if (seen.size() > limit) throw ResourceLimitError("fiber exceeds the enumeration limit");
    std::size_t k = 0;
    while (k < idx.size() && ++idx[k] == choices[k].size()) idx[k++] = 0;
    if (k == idx.size()) break;
  }
  return {seen.begin(), seen.end()};
}

DrinfeldTuple preferred_preimage(const TwistedDrinfeldTuple& pi_sigma) {
  const DiagramFold& fold = pi_sigma.fold();
  std::vector<Factor> fs;
  for (const auto& f : pi_sigma.factors()) {
    const ParamClass cls = param_class(f.param, fold.m);
    const int node = fold.fixed(f.node) ? fold.i0[f.node] : fold.sigma_power(fold.i0[f.node], cls.shift);
    fs.push_back({node, cls.rep, f.mult});
  }
  return DrinfeldTuple(fold.parent, std::move(fs));
}

StandardDecomposition standard_decomposition(const TwistedDrinfeldTuple& pi_sigma) {
  const DiagramFold& fold = pi_sigma.fold();
  std::map<FieldElement, std::vector<Weight>, CanonicalLess> blocks;
  for (const auto& f : pi_sigma.factors()) {
    const ParamClass cls = param_class(f.param, fold.m);
    auto [it, inserted] = blocks.try_emplace(
        cls.rep, std::vector<Weight>(static_cast<std::size_t>(fold.m), Weight(static_cast<std::size_t>(fold.rank0()), 0)));
    const int eps = fold.fixed(f.node) ? 0 : cls.shift;
    it->second[eps][f.node] += fold.weight_factor(f.node) * f.mult;
  }
  StandardDecomposition d;
  for (auto& [a, ws] : blocks) d.blocks.push_back({a, std::move(ws)});
  return d;
}

TwistedDrinfeldTuple expand(const DiagramFold& fold, const StandardDecomposition& d) {
  const FieldElement z = FieldElement::zeta(fold.m);
  TwistedDrinfeldTuple out(fold, {});
  for (const auto& b : d.blocks)
    for (int eps = 0; eps < static_cast<int>(b.weights.size()); ++eps)
      out = out * pi_sigma_lambda_a(fold, b.weights[eps], b.a * z.pow(eps));
  return out;
}

DrinfeldTuple pi_minus(const DrinfeldTuple& pi) {
  std::vector<Factor> fs = pi.factors();
  for (auto& f : fs) f.param = f.param.inverse();
  return DrinfeldTuple(pi.datum(), std::move(fs));
}

DrinfeldTuple scale_parameters(const DrinfeldTuple& pi, const FieldElement& b) {
  if (b.is_zero()) throw InputError("scaling parameter must be nonzero");
  std::vector<Factor> fs = pi.factors();
  for (auto& f : fs) f.param = f.param * b;
  return DrinfeldTuple(pi.datum(), std::move(fs));
}

TwistedDrinfeldTuple scale_parameters(const TwistedDrinfeldTuple& pi, const FieldElement& b) {
  if (b.is_zero()) throw InputError("scaling parameter must be nonzero");
  std::vector<Factor> fs = pi.factors();
  for (auto& f : fs) f.param = f.param * b;
  return TwistedDrinfeldTuple(pi.fold(), std::move(fs));
}

}  // namespace foldweyl
