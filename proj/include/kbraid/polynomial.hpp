#pragma once

// Univariate polynomials over Q and exact real-root isolation.

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

namespace kbraid {

using Rational = mpq_class;

class Polynomial {
 public:
  Polynomial() = default;
  // Coefficients from the constant term upwards; trailing zeros are dropped.
  explicit Polynomial(std::vector<Rational> coefficients);

  static Polynomial constant(const Rational& c);
  // c0 + c1 t
  static Polynomial linear(const Rational& c0, const Rational& c1);

  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  const Rational& leading() const { return coeffs_.back(); }

  Rational operator()(const Rational& t) const;
  int sign_at(const Rational& t) const;
  double evaluate(double t) const;

  Polynomial derivative() const;
  Polynomial monic() const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  // Quotient and remainder; throws std::domain_error for a zero divisor.
  static std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);

  std::string to_string() const;

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

// Monic greatest common divisor; gcd(0, 0) = 0.
Polynomial gcd(Polynomial a, Polynomial b);

// p / gcd(p, p'), monic: same real roots, all simple.
Polynomial square_free_part(const Polynomial& p);

class SturmSequence {
 public:
  explicit SturmSequence(const Polynomial& p);

  int sign_variations(const Rational& t) const;
  // Distinct real roots in (lo, hi]; neither bound may be a root.
  int count_roots(const Rational& lo, const Rational& hi) const;

 private:
  std::vector<Polynomial> chain_;
};

// Open interval holding exactly one root of a fixed square-free polynomial,
// which is nonzero at both ends.
struct IsolatingInterval {
  Rational lo;
  Rational hi;

  Rational width() const { return hi - lo; }
};

// Isolates the roots of a square-free polynomial inside (lo, hi), where it
// must not vanish at lo or hi. Intervals come back sorted and disjoint.
std::vector<IsolatingInterval> isolate_roots(const Polynomial& square_free, const Rational& lo, const Rational& hi);

// Halves the interval around its root.
void refine(const Polynomial& square_free, IsolatingInterval& interval);

// True if `p` vanishes at the root isolated by `interval` (for `square_free`).
bool vanishes_at_root(const Polynomial& p, const Polynomial& square_free, const IsolatingInterval& interval);

}  // namespace kbraid
