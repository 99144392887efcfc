#include "foldweyl/rootdata.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "foldweyl/linalg.hpp"

namespace foldweyl {

namespace {

IntMatrix chain_matrix(int n) {
  IntMatrix a(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
  for (int i = 0; i < n; ++i) {
    a[i][i] = 2;
    if (i + 1 < n) a[i][i + 1] = a[i + 1][i] = -1;
  }
  return a;
}

void connect(IntMatrix& a, int i, int j) {  // 1-based simple bond
  a[i - 1][j - 1] = a[j - 1][i - 1] = -1;
}

std::vector<int> compute_symmetrizer(const IntMatrix& a) {
  const int n = static_cast<int>(a.size());
  std::vector<Rational> d(static_cast<std::size_t>(n));
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int start = 0; start < n; ++start) {
    if (seen[start]) continue;
    seen[start] = true;
    d[start] = 1;
    std::deque<int> queue{start};
    while (!queue.empty()) {
      const int i = queue.front();
      queue.pop_front();
      for (int j = 0; j < n; ++j) {
        if (j == i || a[i][j] == 0) continue;
        // d_i a_ij = d_j a_ji
        Rational dj = d[i] * a[i][j] / Rational(a[j][i]);
        if (!seen[j]) {
          seen[j] = true;
          d[j] = dj;
          queue.push_back(j);
        } else if (d[j] != dj) {
          throw InputError("Cartan matrix is not symmetrizable");
        }
      }
    }
  }
  BigInt lcm_den = 1;
  for (const auto& x : d) lcm_den = lcm(lcm_den, x.get_den());
  std::vector<BigInt> ints;
  BigInt g = 0;
  for (const auto& x : d) {
    BigInt v = x.get_num() * (lcm_den / x.get_den());
    if (v <= 0) throw InputError("Cartan matrix symmetrizer is not positive");
    ints.push_back(v);
    g = gcd(g, v);
  }
  std::vector<int> out;
  for (const auto& v : ints) out.push_back(static_cast<int>(BigInt(v / g).get_si()));
  return out;
}

void check_finite_type(const IntMatrix& a, const std::vector<int>& d) {
  const std::size_t n = a.size();
  for (std::size_t k = 1; k <= n; ++k) {
    Matrix m(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) m.at(i, j) = FieldElement(Rational(d[i] * a[i][j]));
    // determinant by elimination
    std::vector<std::size_t> pivots;
    Matrix r = m;
    Rational det = 1;
    for (std::size_t c = 0; c < k; ++c) {
      std::size_t p = c;
      while (p < k && r.at(p, c).is_zero()) ++p;
      if (p == k) {
        det = 0;
        break;
      }
      if (p != c) {
        for (std::size_t x = 0; x < k; ++x) std::swap(r.at(p, x), r.at(c, x));
        det = -det;
      }
      det *= r.at(c, c).rational();
      const FieldElement inv = r.at(c, c).inverse();
      for (std::size_t rr = c + 1; rr < k; ++rr) {
        if (r.at(rr, c).is_zero()) continue;
        const FieldElement f = r.at(rr, c) * inv;
        for (std::size_t x = c; x < k; ++x) r.at(rr, x) -= f * r.at(c, x);
      }
    }
    if (sgn(det) <= 0) throw InputError("Cartan matrix is not of finite type");
  }
}

}  // namespace

CartanDatum CartanDatum::make(char type, int rank) {
  IntMatrix a;
  switch (type) {
    case 'A':
      if (rank < 1) break;
      a = chain_matrix(rank);
      break;
    case 'B':
      if (rank < 2) break;
      a = chain_matrix(rank);
      a[rank - 1][rank - 2] = -2;
      break;
    case 'C':
      if (rank < 2) break;
      a = chain_matrix(rank);
      a[rank - 2][rank - 1] = -2;
      break;
    case 'D':
      if (rank < 3) break;
      a = chain_matrix(rank);
      a[rank - 2][rank - 1] = a[rank - 1][rank - 2] = 0;
      connect(a, rank - 2, rank);
      break;
    case 'E': {
      if (rank < 6 || rank > 8) break;
      a = IntMatrix(static_cast<std::size_t>(rank), std::vector<int>(static_cast<std::size_t>(rank), 0));
      for (int i = 0; i < rank; ++i) a[i][i] = 2;
      connect(a, 1, 3);
      connect(a, 2, 4);
      for (int i = 3; i < rank; ++i) connect(a, i, i + 1);
      break;
    }
    case 'F':
      if (rank != 4) break;
      a = chain_matrix(4);
      a[2][1] = -2;
      break;
    case 'G':
      if (rank != 2) break;
      a = {{2, -3}, {-1, 2}};
      break;
    default:
      break;
  }
  if (a.empty()) throw InputError(std::string("unsupported Cartan type ") + type + std::to_string(rank));
  return from_matrix(type, std::move(a));
}

CartanDatum CartanDatum::from_matrix(char type, IntMatrix cartan) {
  const std::size_t n = cartan.size();
  if (n == 0) throw InputError("empty Cartan matrix");
  for (std::size_t i = 0; i < n; ++i) {
    if (cartan[i].size() != n) throw InputError("Cartan matrix is not square");
    if (cartan[i][i] != 2) throw InputError("Cartan matrix diagonal must be 2");
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (cartan[i][j] > 0) throw InputError("positive off-diagonal Cartan entry");
      if ((cartan[i][j] == 0) != (cartan[j][i] == 0)) throw InputError("Cartan matrix zero pattern is not symmetric");
    }
  }
  CartanDatum d;
  d.type = type;
  d.rank = static_cast<int>(n);
  d.symmetrizer = compute_symmetrizer(cartan);
  check_finite_type(cartan, d.symmetrizer);
  d.cartan = std::move(cartan);
  return d;
}

std::string CartanDatum::name() const { return std::string(1, type) + std::to_string(rank); }

bool CartanDatum::simply_laced() const {
  for (const auto& row : cartan)
    for (int x : row)
      if (x < -1) return false;
  return true;
}

std::int64_t character_dimension(const Character& ch) {
  std::int64_t total = 0;
  for (const auto& [w, m] : ch) total += m;
  return total;
}

Character character_product(const Character& a, const Character& b) {
  Character out;
  for (const auto& [wa, ma] : a)
    for (const auto& [wb, mb] : b) {
      Weight w = wa;
      for (std::size_t i = 0; i < w.size(); ++i) w[i] += wb[i];
      out[w] += ma * mb;
    }
  return out;
}

void character_add(Character& into, const Character& ch, std::int64_t times) {
  for (const auto& [w, m] : ch) {
    auto& slot = into[w];
    slot += times * m;
    if (slot == 0) into.erase(w);
  }
}

// ---------------------------------------------------------------------------

RootSystem::RootSystem(CartanDatum datum) : datum_(std::move(datum)) {
  const int n = rank();
  Matrix a(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a.at(i, j) = FieldElement(Rational(datum_.cartan[i][j]));
  auto inv = inverse(a);
  if (!inv) throw InputError("singular Cartan matrix");
  inverse_.assign(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inverse_[i][j] = inv->at(i, j).rational();

  // positive roots by alpha-string closure, height by height
  std::vector<RootVec> layer;
  for (int i = 0; i < n; ++i) {
    RootVec r(static_cast<std::size_t>(n), 0);
    r[i] = 1;
    layer.push_back(r);
  }
  std::set<RootVec> all(layer.begin(), layer.end());
  while (!layer.empty()) {
    std::set<RootVec> next;
    for (const auto& beta : layer) {
      const Weight bw = root_to_weight(beta);
      for (int i = 0; i < n; ++i) {
        if (height(beta) == 1 && beta[i] == 1) continue;
        int p = 0;
        RootVec down = beta;
        while (true) {
          down[i] -= 1;
          if (down[i] < 0 || !all.count(down)) break;
          ++p;
        }
        if (p - bw[i] > 0) {
          RootVec up = beta;
          up[i] += 1;
          next.insert(up);
        }
      }
    }
    layer.assign(next.begin(), next.end());
    all.insert(next.begin(), next.end());
  }
  positive_.assign(all.begin(), all.end());
  std::sort(positive_.begin(), positive_.end(), [](const RootVec& x, const RootVec& y) {
    const int hx = height(x), hy = height(y);
    if (hx != hy) return hx < hy;
    return x < y;
  });
  for (std::size_t k = 0; k < positive_.size(); ++k) index_[positive_[k]] = static_cast<int>(k);
  highest_ = positive_.back();
  Rational shortest = root_inner(positive_[0], positive_[0]);
  for (const auto& r : positive_) shortest = std::min(shortest, root_inner(r, r));
  for (const auto& r : positive_)
    if (root_inner(r, r) == shortest) highest_short_ = r;  // sorted, so the last one is highest
}

int RootSystem::root_index(const RootVec& r) const {
  auto it = index_.find(r);
  return it == index_.end() ? -1 : it->second;
}

bool RootSystem::is_root(const RootVec& r) const {
  if (root_index(r) >= 0) return true;
  RootVec neg = r;
  for (auto& x : neg) x = -x;
  return root_index(neg) >= 0;
}

int RootSystem::height(const RootVec& r) { return std::accumulate(r.begin(), r.end(), 0); }

Weight RootSystem::root_to_weight(const RootVec& r) const {
  const int n = rank();
  Weight w(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) w[i] += datum_.cartan[i][j] * r[j];
  return w;
}

std::vector<Rational> RootSystem::weight_to_root(const Weight& w) const {
  const int n = rank();
  std::vector<Rational> r(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (w[j] != 0) r[i] += inverse_[i][j] * w[j];
  return r;
}

bool RootSystem::to_root_lattice(const Weight& w, RootVec& out) const {
  const auto r = weight_to_root(w);
  out.assign(r.size(), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (r[i].get_den() != 1) return false;
    out[i] = static_cast<int>(r[i].get_num().get_si());
  }
  return true;
}

Rational RootSystem::root_inner(const RootVec& a, const RootVec& b) const {
  Rational s = 0;
  const int n = rank();
  for (int i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < n; ++j)
      if (b[j] != 0) s += Rational(a[i] * datum_.symmetrizer[i] * datum_.cartan[i][j] * b[j]);
  }
  return s;
}

Rational RootSystem::inner(const Weight& a, const Weight& b) const {
  const auto ra = weight_to_root(a);
  const auto rb = weight_to_root(b);
  Rational s = 0;
  const int n = rank();
  for (int i = 0; i < n; ++i) {
    if (sgn(ra[i]) == 0) continue;
    for (int j = 0; j < n; ++j)
      if (sgn(rb[j]) != 0) s += ra[i] * datum_.symmetrizer[i] * datum_.cartan[i][j] * rb[j];
  }
  return s;
}

Weight RootSystem::reflect(int i, const Weight& w) const {
  Weight r = w;
  const int c = w[i];
  if (c == 0) return r;
  for (int j = 0; j < rank(); ++j) r[j] -= c * datum_.cartan[j][i];
  return r;
}

std::set<Weight> RootSystem::weyl_orbit(const Weight& w) const {
  std::set<Weight> orbit{w};
  std::deque<Weight> queue{w};
  while (!queue.empty()) {
    Weight cur = std::move(queue.front());
    queue.pop_front();
    for (int i = 0; i < rank(); ++i) {
      if (cur[i] == 0) continue;
      Weight next = reflect(i, cur);
      if (orbit.insert(next).second) queue.push_back(std::move(next));
    }
  }
  return orbit;
}

Weight RootSystem::dominant_representative(const Weight& w) const {
  Weight cur = w;
  while (true) {
    int i = 0;
    while (i < rank() && cur[i] >= 0) ++i;
    if (i == rank()) return cur;
    cur = reflect(i, cur);
  }
}

Weight RootSystem::lowest_representative(const Weight& w) const {
  Weight neg = w;
  for (auto& x : neg) x = -x;
  Weight d = dominant_representative(neg);
  for (auto& x : d) x = -x;
  return d;
}

bool RootSystem::is_dominant(const Weight& w) const {
  return std::all_of(w.begin(), w.end(), [](int x) { return x >= 0; });
}

bool RootSystem::dominates(const Weight& lambda, const Weight& mu) const {
  Weight diff = lambda;
  for (std::size_t i = 0; i < diff.size(); ++i) diff[i] -= mu[i];
  RootVec r;
  if (!to_root_lattice(diff, r)) return false;
  return std::all_of(r.begin(), r.end(), [](int x) { return x >= 0; });
}

bool RootSystem::in_hull(const Weight& mu, const Weight& lambda) const {
  return dominates(lambda, dominant_representative(mu));
}

std::int64_t RootSystem::weyl_group_order() const {
  const int n = rank();
  auto factorial = [](int k) {
    std::int64_t f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
  };
  switch (datum_.type) {
    case 'A': return factorial(n + 1);
    case 'B':
    case 'C': return (std::int64_t{1} << n) * factorial(n);
    case 'D': return (std::int64_t{1} << (n - 1)) * factorial(n);
    case 'E': return n == 6 ? 51840 : n == 7 ? 2903040 : 696729600;
    case 'F': return 1152;
    case 'G': return 12;
    default: {
      Weight rho(static_cast<std::size_t>(n), 1);
      return static_cast<std::int64_t>(weyl_orbit(rho).size());
    }
  }
}

std::vector<Weight> RootSystem::dominant_weights_below(const Weight& lambda) const {
  if (!is_dominant(lambda)) throw InputError("weight is not dominant");
  std::vector<Weight> out{lambda};
  std::set<Weight> seen{lambda};
  std::vector<Weight> roots;
  for (const auto& r : positive_) roots.push_back(root_to_weight(r));
  for (std::size_t k = 0; k < out.size(); ++k) {
    for (const auto& a : roots) {
      Weight mu = out[k];
      for (std::size_t i = 0; i < mu.size(); ++i) mu[i] -= a[i];
      if (is_dominant(mu) && seen.insert(mu).second) out.push_back(mu);
    }
  }
  auto depth = [&](const Weight& mu) {
    Weight diff = lambda;
    for (std::size_t i = 0; i < diff.size(); ++i) diff[i] -= mu[i];
    RootVec r;
    to_root_lattice(diff, r);
    return height(r);
  };
  std::stable_sort(out.begin(), out.end(), [&](const Weight& x, const Weight& y) { return depth(x) < depth(y); });
  return out;
}

std::map<Weight, std::int64_t> RootSystem::dominant_multiplicities(const Weight& lambda) const {
  const auto dominant = dominant_weights_below(lambda);
  const int n = rank();
  // Integer Gram matrix of the fundamental weights scaled by a common denominator.
  std::vector<std::vector<Rational>> gram(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n)));
  BigInt den = 1;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Weight wi(static_cast<std::size_t>(n), 0), wj(static_cast<std::size_t>(n), 0);
      wi[i] = 1;
      wj[j] = 1;
      gram[i][j] = inner(wi, wj);
      den = lcm(den, gram[i][j].get_den());
    }
  std::vector<std::vector<std::int64_t>> g(static_cast<std::size_t>(n), std::vector<std::int64_t>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g[i][j] = Rational(gram[i][j] * den).get_num().get_si();
  auto ip = [&](const Weight& a, const Weight& b) {
    std::int64_t s = 0;
    for (int i = 0; i < n; ++i) {
      if (a[i] == 0) continue;
      for (int j = 0; j < n; ++j) s += a[i] * g[i][j] * b[j];
    }
    return s;
  };
  std::vector<Weight> roots;
  for (const auto& r : positive_) roots.push_back(root_to_weight(r));
  Weight lr = lambda;
  for (auto& x : lr) x += 1;
  const std::int64_t top = ip(lr, lr);

  std::map<Weight, std::int64_t> mult;
  mult[lambda] = 1;
  for (std::size_t k = 1; k < dominant.size(); ++k) {
    const Weight& mu = dominant[k];
    std::int64_t num = 0;
    for (const auto& a : roots) {
      Weight nu = mu;
      while (true) {
        for (int i = 0; i < n; ++i) nu[i] += a[i];
        auto it = mult.find(dominant_representative(nu));
        if (it == mult.end()) break;
        num += it->second * ip(nu, a);
      }
    }
    Weight mr = mu;
    for (auto& x : mr) x += 1;
    const std::int64_t denom = top - ip(mr, mr);
    if (denom <= 0 || (2 * num) % denom != 0) throw ConsistencyError("Freudenthal recursion produced a non-integral multiplicity");
    const std::int64_t m = 2 * num / denom;
    if (m > 0) mult[mu] = m;
  }
  return mult;
}

Character RootSystem::irreducible_character(const Weight& lambda) const {
  Character ch;
  for (const auto& [mu, m] : dominant_multiplicities(lambda))
    for (const auto& w : weyl_orbit(mu)) ch[w] = m;
  return ch;
}

BigInt RootSystem::weyl_dimension(const Weight& lambda) const {
  if (!is_dominant(lambda)) throw InputError("weight is not dominant");
  Weight rho(static_cast<std::size_t>(rank()), 1);
  Weight lr = lambda;
  for (auto& x : lr) x += 1;
  Rational d = 1;
  for (const auto& r : positive_) {
    const Weight a = root_to_weight(r);
    d *= inner(lr, a) / inner(rho, a);
  }
  if (d.get_den() != 1) throw ConsistencyError("Weyl dimension formula is not integral");
  return d.get_num();
}

std::map<Weight, std::int64_t> RootSystem::decompose(Character ch) const {
  std::map<Weight, std::int64_t> out;
  auto weight_height = [&](const Weight& w) {
    Rational h = 0;
    for (const auto& x : weight_to_root(w)) h += x;
    return h;
  };
  while (!ch.empty()) {
    auto best = ch.begin();
    Rational best_h = weight_height(best->first);
    for (auto it = std::next(ch.begin()); it != ch.end(); ++it) {
      Rational h = weight_height(it->first);
      if (h > best_h) {
        best = it;
        best_h = h;
      }
    }
    const Weight top = best->first;
    const std::int64_t m = best->second;
    if (m < 0 || !is_dominant(top)) throw ConsistencyError("character is not a sum of irreducible characters");
    out[top] += m;
    character_add(ch, irreducible_character(top), -m);
  }
  return out;
}

}  // namespace foldweyl
