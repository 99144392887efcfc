#pragma once

// Exact scalars: rationals, the field Q(zeta_m, sqrt2) for m in {1,2,3}, and
// Laurent polynomials over it.

#include <gmpxx.h>

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <string_view>

#include "foldweyl/errors.hpp"

namespace foldweyl {

using Rational = mpq_class;
using BigInt = mpz_class;

// Accepts "n", "-n" or "n/d"; the result is canonical (reduced, d > 0).
Rational parse_rational(std::string_view text);
// Always "num/den", e.g. "3/1".
std::string to_string(const Rational& q);

// Element of Q(zeta_m)(sqrt2) in coordinates over {1, zeta, sqrt2, zeta*sqrt2}.
// For m <= 2 zeta is rational (1 or -1) and its coordinates are folded into
// the rational ones, so equality is coordinate-wise.  The tag m is metadata:
// combining elements with different tags yields the larger tag.
class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(long value) : r_(value) {}  // NOLINT
  FieldElement(Rational value) : r_(std::move(value)) {}  // NOLINT
  FieldElement(const FieldElement& other);
  FieldElement(FieldElement&&) noexcept = default;
  FieldElement& operator=(const FieldElement& other);
  FieldElement& operator=(FieldElement&&) noexcept = default;
  ~FieldElement() = default;

  static FieldElement make(int m, Rational rational, Rational zeta_part,
                           Rational sqrt2_part, Rational zeta_sqrt2_part);
  static FieldElement zeta(int m);
  static FieldElement sqrt2();

  int tag() const { return m_; }
  // k = 0..3 over {1, zeta, sqrt2, zeta*sqrt2}.
  const Rational& coeff(int k) const;

  bool is_zero() const { return !ext_ && sgn(r_) == 0; }
  bool is_one() const { return !ext_ && r_ == 1; }
  bool is_rational() const { return !ext_; }
  // Only meaningful when is_rational().
  const Rational& rational() const { return r_; }

  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& other);
  FieldElement& operator-=(const FieldElement& other);
  FieldElement& operator*=(const FieldElement& other);
  FieldElement& operator/=(const FieldElement& other);

  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }

  // Value equality; tags are ignored.
  friend bool operator==(const FieldElement& a, const FieldElement& b);

  FieldElement inverse() const;
  FieldElement pow(long exponent) const;
  FieldElement with_tag(int m) const;

  // Human-readable form such as "1/2+ζ" or "-√2".
  std::string str() const;

 private:
  using Ext = std::array<Rational, 3>;  // zeta, sqrt2, zeta*sqrt2

  static int check_tag(int m);
  Ext& ext();
  void drop_zero_ext();

  int m_ = 1;
  Rational r_;
  std::unique_ptr<Ext> ext_;  // null when the element is rational
};

// Total order used for deterministic serialization: fewer nonzero coordinates
// first, then coordinate-wise with nonzero before zero, smaller magnitude
// first and positive before negative.  Orders 1 < -1 < 2 < -2 < ... < zeta.
bool canonical_less(const FieldElement& a, const FieldElement& b);

struct CanonicalLess {
  bool operator()(const FieldElement& a, const FieldElement& b) const { return canonical_less(a, b); }
};

// Finitely supported Laurent polynomial in t; no zero coefficients stored.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(FieldElement constant);
  static LaurentPoly monomial(int exponent, FieldElement coeff = FieldElement(1));
  // (t - a)
  static LaurentPoly linear(const FieldElement& a);

  bool is_zero() const { return terms_.empty(); }
  const std::map<int, FieldElement>& terms() const { return terms_; }
  FieldElement coeff(int exponent) const;
  int min_exponent() const;
  int max_exponent() const;

  void add_term(int exponent, const FieldElement& coeff);

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly operator-() const;
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const FieldElement& s, const LaurentPoly& p);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

  LaurentPoly pow(int exponent) const;
  FieldElement evaluate(const FieldElement& at) const;
  // Substitutes t -> b t, i.e. multiplies the t^k coefficient by b^k.
  LaurentPoly scale_variable(const FieldElement& b) const;
  // Substitutes t -> t^k for k >= 1.
  LaurentPoly inflate(int k) const;

  std::string str() const;

 private:
  std::map<int, FieldElement> terms_;
};

// Remainder of f modulo the ideal g * F[t, 1/t].  The result is the unique
// representative supported on exponents 0 .. d-1 where d is the degree of g
// after stripping its power of t.  Throws DivisionByZero when g == 0.
LaurentPoly laurent_rem(const LaurentPoly& f, const LaurentPoly& g);

}  // namespace foldweyl
