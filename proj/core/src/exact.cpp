#include "foldweyl/exact.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <vector>
#include <sstream>
#include <utility>

namespace foldweyl {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
  if (s.empty()) throw InputError("empty rational literal");
  const auto slash = s.find('/');
  auto valid_int = [](const std::string& part) {
    if (part.empty()) return false;
    std::size_t start = (part[0] == '-' || part[0] == '+') ? 1 : 0;
    if (start == part.size()) return false;
    return std::all_of(part.begin() + static_cast<long>(start), part.end(),
                       [](unsigned char c) { return std::isdigit(c); });
  };
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!num.empty() && num[0] == '+') num.erase(0, 1);
  if (!valid_int(num) || !valid_int(den)) throw InputError("malformed rational literal: " + s);
  BigInt n(num, 10);
  BigInt d(den, 10);
  if (d == 0) throw DivisionByZero("zero denominator in rational literal: " + s);
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// ---------------------------------------------------------------------------
// FieldElement

int FieldElement::check_tag(int m) {
  if (m < 1 || m > 3) throw InputError("field tag m must be 1, 2 or 3 (got " + std::to_string(m) + ")");
  return m;
}

FieldElement::FieldElement(const FieldElement& other)
    : m_(other.m_), r_(other.r_), ext_(other.ext_ ? std::make_unique<Ext>(*other.ext_) : nullptr) {}

FieldElement& FieldElement::operator=(const FieldElement& other) {
  if (this == &other) return *this;
  m_ = other.m_;
  r_ = other.r_;
  if (!other.ext_)
    ext_.reset();
  else if (ext_)
    *ext_ = *other.ext_;
  else
    ext_ = std::make_unique<Ext>(*other.ext_);
  return *this;
}

const Rational& FieldElement::coeff(int k) const {
  static const Rational zero;
  if (k == 0) return r_;
  return ext_ ? (*ext_)[k - 1] : zero;
}

FieldElement::Ext& FieldElement::ext() {
  if (!ext_) ext_ = std::make_unique<Ext>();
  return *ext_;
}

void FieldElement::drop_zero_ext() {
  if (ext_ && sgn((*ext_)[0]) == 0 && sgn((*ext_)[1]) == 0 && sgn((*ext_)[2]) == 0) ext_.reset();
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  if (a.r_ != b.r_ || !a.ext_ != !b.ext_) return false;
  return !a.ext_ || *a.ext_ == *b.ext_;
}

FieldElement FieldElement::make(int m, Rational rational, Rational zeta_part,
                                Rational sqrt2_part, Rational zeta_sqrt2_part) {
  FieldElement x;
  x.m_ = check_tag(m);
  if (m == 3) {
    x.r_ = std::move(rational);
    x.ext() = {std::move(zeta_part), std::move(sqrt2_part), std::move(zeta_sqrt2_part)};
  } else {
    // zeta = 1 for m = 1, zeta = -1 for m = 2
    const int z = m == 1 ? 1 : -1;
    x.r_ = rational + z * zeta_part;
    x.ext()[1] = sqrt2_part + z * zeta_sqrt2_part;
  }
  x.drop_zero_ext();
  return x;
}

FieldElement FieldElement::zeta(int m) { return make(m, 0, 1, 0, 0); }

FieldElement FieldElement::sqrt2() { return make(1, 0, 0, 1, 0); }

FieldElement FieldElement::with_tag(int m) const {
  check_tag(m);
  if (m < 3 && sgn(coeff(1)) != 0) throw InputError("element with zeta part cannot carry tag " + std::to_string(m));
  FieldElement x = *this;
  x.m_ = m;
  return x;
}

FieldElement FieldElement::operator-() const {
  FieldElement x = *this;
  x.r_ = -x.r_;
  if (x.ext_)
    for (auto& c : *x.ext_) c = -c;
  return x;
}

FieldElement& FieldElement::operator+=(const FieldElement& other) {
  r_ += other.r_;
  if (other.ext_) {
    Ext& e = ext();
    for (int k = 0; k < 3; ++k)
      if (sgn((*other.ext_)[k]) != 0) e[k] += (*other.ext_)[k];
    drop_zero_ext();
  }
  m_ = std::max(m_, other.m_);
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& other) {
  r_ -= other.r_;
  if (other.ext_) {
    Ext& e = ext();
    for (int k = 0; k < 3; ++k)
      if (sgn((*other.ext_)[k]) != 0) e[k] -= (*other.ext_)[k];
    drop_zero_ext();
  }
  m_ = std::max(m_, other.m_);
  return *this;
}

namespace {

// (a + b zeta)(c + d zeta) with zeta^2 = -1 - zeta.  For m <= 2 the zeta
// coordinates are always zero, so the same formula is valid for every tag.
void mul_cyclotomic(const Rational& a, const Rational& b, const Rational& c, const Rational& d,
                    Rational& out_re, Rational& out_ze) {
  const bool bz = sgn(b) == 0;
  const bool dz = sgn(d) == 0;
  if (bz && dz) {
    out_re = a * c;
    out_ze = 0;
    return;
  }
  Rational bd = (bz || dz) ? Rational(0) : Rational(b * d);
  out_re = a * c - bd;
  out_ze = a * d + b * c - bd;
}

}  // namespace

FieldElement operator*(const FieldElement& x, const FieldElement& y) {
  FieldElement r;
  r.m_ = std::max(x.m_, y.m_);
  const bool xr = !x.ext_;
  const bool yr = !y.ext_;
  if (xr && yr) {
    r.r_ = x.r_ * y.r_;
    return r;
  }
  if (xr || yr) {
    const Rational& s = xr ? x.r_ : y.r_;
    const FieldElement& v = xr ? y : x;
    if (sgn(s) == 0) return r;
    r.r_ = s * v.r_;
    auto& e = r.ext();
    for (int k = 0; k < 3; ++k)
      if (sgn((*v.ext_)[k]) != 0) e[k] = s * (*v.ext_)[k];
    return r;
  }
  // x = p + q sqrt2, y = u + v sqrt2 with p, q, u, v in Q(zeta)
  const Rational &x0 = x.r_, &x1 = (*x.ext_)[0], &x2 = (*x.ext_)[1], &x3 = (*x.ext_)[2];
  const Rational &y0 = y.r_, &y1 = (*y.ext_)[0], &y2 = (*y.ext_)[1], &y3 = (*y.ext_)[2];
  Rational pu0, pu1, qv0, qv1, pv0, pv1, qu0, qu1;
  mul_cyclotomic(x0, x1, y0, y1, pu0, pu1);
  mul_cyclotomic(x2, x3, y2, y3, qv0, qv1);
  mul_cyclotomic(x0, x1, y2, y3, pv0, pv1);
  mul_cyclotomic(x2, x3, y0, y1, qu0, qu1);
  r.r_ = pu0 + 2 * qv0;
  r.ext() = {Rational(pu1 + 2 * qv1), Rational(pv0 + qu0), Rational(pv1 + qu1)};
  r.drop_zero_ext();
  return r;
}

FieldElement& FieldElement::operator*=(const FieldElement& other) {
  if (!ext_ && !other.ext_) {
    r_ *= other.r_;
    m_ = std::max(m_, other.m_);
    return *this;
  }
  *this = *this * other;
  return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& other) {
  if (!ext_ && !other.ext_) {
    if (sgn(other.r_) == 0) throw DivisionByZero("inverse of zero field element");
    r_ /= other.r_;
    m_ = std::max(m_, other.m_);
    return *this;
  }
  *this = *this * other.inverse();
  return *this;
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero field element");
  FieldElement r;
  r.m_ = m_;
  if (!ext_) {
    r.r_ = 1 / r_;
    return r;
  }
  const Rational &c0 = r_, &c1 = (*ext_)[0], &c2 = (*ext_)[1], &c3 = (*ext_)[2];
  // norm down to Q(zeta): (p + q sqrt2)(p - q sqrt2) = p^2 - 2 q^2
  Rational pp0, pp1, qq0, qq1;
  mul_cyclotomic(c0, c1, c0, c1, pp0, pp1);
  mul_cyclotomic(c2, c3, c2, c3, qq0, qq1);
  const Rational n0 = pp0 - 2 * qq0;
  const Rational n1 = pp1 - 2 * qq1;
  // (a + b zeta)^{-1} = (a - b - b zeta) / (a^2 - ab + b^2)
  const Rational denom = n0 * n0 - n0 * n1 + n1 * n1;
  const Rational i0 = (n0 - n1) / denom;
  const Rational i1 = -n1 / denom;
  // (p - q sqrt2) * N^{-1}
  Rational e0, t0, t1;
  mul_cyclotomic(c0, c1, i0, i1, r.r_, e0);
  mul_cyclotomic(c2, c3, i0, i1, t0, t1);
  r.ext() = {e0, Rational(-t0), Rational(-t1)};
  r.drop_zero_ext();
  return r;
}

FieldElement FieldElement::pow(long exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  FieldElement result(1);
  result.m_ = m_;
  FieldElement base = *this;
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return result;
}

std::string FieldElement::str() const {
  static const char* kSymbols[4] = {"", "ζ", "√2", "ζ√2"};
  std::ostringstream out;
  bool first = true;
  for (int k = 0; k < 4; ++k) {
    const Rational& c = coeff(k);
    if (sgn(c) == 0) continue;
    Rational mag = abs(c);
    if (sgn(c) < 0) out << "-";
    else if (!first) out << "+";
    if (k == 0 || mag != 1) out << mag.get_str();
    out << kSymbols[k];
    first = false;
  }
  if (first) out << "0";
  return out.str();
}

bool canonical_less(const FieldElement& a, const FieldElement& b) {
  auto nonzero = [](const FieldElement& x) {
    int n = 0;
    for (int k = 0; k < 4; ++k) n += sgn(x.coeff(k)) != 0;
    return n;
  };
  const int na = nonzero(a), nb = nonzero(b);
  if (na != nb) return na < nb;
  for (int k = 0; k < 4; ++k) {
    const Rational& x = a.coeff(k);
    const Rational& y = b.coeff(k);
    if (x == y) continue;
    const bool xz = sgn(x) == 0, yz = sgn(y) == 0;
    if (xz != yz) return !xz;  // nonzero first
    const Rational ax = abs(x), ay = abs(y);
    if (ax != ay) return ax < ay;
    return sgn(x) > 0;  // positive first
  }
  return false;
}

// ---------------------------------------------------------------------------
// LaurentPoly

LaurentPoly::LaurentPoly(FieldElement constant) {
  if (!constant.is_zero()) terms_.emplace(0, std::move(constant));
}

LaurentPoly LaurentPoly::monomial(int exponent, FieldElement coeff) {
  LaurentPoly p;
  if (!coeff.is_zero()) p.terms_.emplace(exponent, std::move(coeff));
  return p;
}

LaurentPoly LaurentPoly::linear(const FieldElement& a) {
  LaurentPoly p = monomial(1);
  p.add_term(0, -a);
  return p;
}

FieldElement LaurentPoly::coeff(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? FieldElement() : it->second;
}

int LaurentPoly::min_exponent() const {
  if (terms_.empty()) throw InputError("zero Laurent polynomial has no exponents");
  return terms_.begin()->first;
}

int LaurentPoly::max_exponent() const {
  if (terms_.empty()) throw InputError("zero Laurent polynomial has no exponents");
  return terms_.rbegin()->first;
}

void LaurentPoly::add_term(int exponent, const FieldElement& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p = *this;
  for (auto& [e, c] : p.terms_) c = -c;
  return p;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly p;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) p.add_term(ea + eb, ca * cb);
  return p;
}

LaurentPoly operator*(const FieldElement& s, const LaurentPoly& p) {
  LaurentPoly r;
  if (s.is_zero()) return r;
  for (const auto& [e, c] : p.terms_) r.terms_.emplace(e, s * c);
  return r;
}

LaurentPoly LaurentPoly::pow(int exponent) const {
  if (exponent < 0) {
    if (terms_.size() != 1) throw InputError("only monomials have Laurent inverses");
    const auto& [e, c] = *terms_.begin();
    return monomial(e * exponent, c.pow(exponent));
  }
  LaurentPoly result(FieldElement(1));
  LaurentPoly base = *this;
  while (exponent > 0) {
    if (exponent & 1) result = result * base;
    exponent >>= 1;
    if (exponent > 0) base = base * base;
  }
  return result;
}

FieldElement LaurentPoly::evaluate(const FieldElement& at) const {
  FieldElement sum;
  for (const auto& [e, c] : terms_) sum += c * at.pow(e);
  return sum;
}

LaurentPoly LaurentPoly::scale_variable(const FieldElement& b) const {
  if (b.is_zero()) throw DivisionByZero("Laurent substitution t -> 0 t");
  LaurentPoly p;
  for (const auto& [e, c] : terms_) p.add_term(e, c * b.pow(e));
  return p;
}

LaurentPoly LaurentPoly::inflate(int k) const {
  if (k < 1) throw InputError("inflate requires k >= 1");
  LaurentPoly p;
  for (const auto& [e, c] : terms_) p.terms_.emplace(e * k, c);
  return p;
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) out << " + ";
    out << "(" << c.str() << ")";
    if (e != 0) out << "t^" << e;
    first = false;
  }
  return out.str();
}

namespace {

using Dense = std::vector<FieldElement>;  // coefficient of t^k at index k

// Polynomial remainder of f by g where g has invertible leading coefficient.
Dense poly_rem(Dense f, const Dense& g) {
  const std::size_t d = g.size() - 1;
  const FieldElement lead_inv = g.back().inverse();
  for (std::size_t k = f.size(); k-- > d;) {
    if (f[k].is_zero()) continue;
    const FieldElement q = f[k] * lead_inv;
    for (std::size_t j = 0; j <= d; ++j) {
      if (!g[j].is_zero()) f[k - d + j] -= q * g[j];
    }
  }
  f.resize(std::min(f.size(), d));
  f.resize(d);
  return f;
}

Dense poly_mulmod(const Dense& a, const Dense& b, const Dense& g) {
  if (a.empty() || b.empty()) return Dense(g.size() - 1);
  Dense prod(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (!b[j].is_zero()) prod[i + j] += a[i] * b[j];
    }
  }
  return poly_rem(std::move(prod), g);
}

Dense poly_powmod(Dense base, long exponent, const Dense& g) {
  Dense result(g.size() - 1);
  result[0] = FieldElement(1);
  while (exponent > 0) {
    if (exponent & 1) result = poly_mulmod(result, base, g);
    exponent >>= 1;
    if (exponent > 0) base = poly_mulmod(base, base, g);
  }
  return result;
}

}  // namespace

LaurentPoly laurent_rem(const LaurentPoly& f, const LaurentPoly& g) {
  if (g.is_zero()) throw DivisionByZero("remainder modulo the zero polynomial");
  const int gv = g.min_exponent();
  const int d = g.max_exponent() - gv;
  if (d == 0 || f.is_zero()) return LaurentPoly();  // g is a unit
  Dense gd(static_cast<std::size_t>(d) + 1);
  for (const auto& [e, c] : g.terms()) gd[static_cast<std::size_t>(e - gv)] = c;

  const int fe = f.min_exponent();
  Dense fd(static_cast<std::size_t>(f.max_exponent() - fe) + 1);
  for (const auto& [e, c] : f.terms()) fd[static_cast<std::size_t>(e - fe)] = c;
  if (fd.size() < gd.size()) fd.resize(gd.size());
  Dense r = poly_rem(std::move(fd), gd);

  if (fe != 0) {
    Dense shift(static_cast<std::size_t>(d));
    if (fe > 0) {
      if (d > 1) {
        shift[1] = FieldElement(1);
      } else {
        // modulo a linear polynomial g1 t + g0, t == -g0/g1
        shift[0] = -gd[0] / gd[1];
      }
    } else {
      // t^{-1} == -(g_1 + g_2 t + ... + g_d t^{d-1}) / g_0
      const FieldElement g0_inv = gd[0].inverse();
      for (int k = 1; k <= d; ++k) shift[static_cast<std::size_t>(k - 1)] = -gd[static_cast<std::size_t>(k)] * g0_inv;
    }
    r = poly_mulmod(r, poly_powmod(std::move(shift), std::abs(fe), gd), gd);
  }

  LaurentPoly out;
  for (int k = 0; k < d; ++k) out.add_term(k, r[static_cast<std::size_t>(k)]);
  return out;
}

}  // namespace foldweyl
