#include "kbraid/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace kbraid {

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::linear(const Rational& c0, const Rational& c1) { return Polynomial({c0, c1}); }

void Polynomial::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Rational Polynomial::operator()(const Rational& t) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

int Polynomial::sign_at(const Rational& t) const { return sgn((*this)(t)); }

double Polynomial::evaluate(double t) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + it->get_d();
  return acc;
}

Polynomial Polynomial::derivative() const {
  std::vector<Rational> out;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) out.push_back(coeffs_[i] * static_cast<long>(i));
  return Polynomial(std::move(out));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  std::vector<Rational> out = coeffs_;
  const Rational lead = leading();
  for (Rational& c : out) c /= lead;
  return Polynomial(std::move(out));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] += b.coeffs_[i];
  return Polynomial(std::move(out));
}

Polynomial operator-(const Polynomial& a) {
  std::vector<Rational> out = a.coeffs_;
  for (Rational& c : out) c = -c;
  return Polynomial(std::move(out));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial();
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(out));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> rem = a.coeffs_;
  const int db = b.degree();
  if (a.degree() < db) return {Polynomial(), a};
  std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - db + 1));
  for (int i = a.degree(); i >= db; --i) {
    const Rational factor = rem[static_cast<std::size_t>(i)] / b.leading();
    quot[static_cast<std::size_t>(i - db)] = factor;
    if (sgn(factor) == 0) continue;
    for (int j = 0; j <= db; ++j) {
      rem[static_cast<std::size_t>(i - db + j)] -= factor * b.coeffs_[static_cast<std::size_t>(j)];
    }
  }
  rem.resize(static_cast<std::size_t>(db));
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    if (sgn(coeffs_[i]) == 0) continue;
    if (!first) out << (sgn(coeffs_[i]) > 0 ? " + " : " - ");
    else if (sgn(coeffs_[i]) < 0) out << "-";
    Rational mag = abs(coeffs_[i]);
    if (mag != 1 || i == 0) out << mag.get_str();
    if (i >= 1) out << "t";
    if (i >= 2) out << "^" << i;
    first = false;
  }
  return out.str();
}

Polynomial gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = Polynomial::divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Polynomial square_free_part(const Polynomial& p) {
  if (p.degree() <= 0) return p.monic();
  const Polynomial g = gcd(p, p.derivative());
  return Polynomial::divmod(p, g).first.monic();
}

SturmSequence::SturmSequence(const Polynomial& p) {
  if (p.is_zero()) return;
  chain_.push_back(p);
  chain_.push_back(p.derivative());
  while (!chain_.back().is_zero()) {
    Polynomial r = Polynomial::divmod(chain_[chain_.size() - 2], chain_.back()).second;
    chain_.push_back(-r);
  }
  chain_.pop_back();
}

int SturmSequence::sign_variations(const Rational& t) const {
  int variations = 0;
  int last = 0;
  for (const Polynomial& q : chain_) {
    const int s = q.sign_at(t);
    if (s == 0) continue;
    if (last != 0 && s != last) ++variations;
    last = s;
  }
  return variations;
}

int SturmSequence::count_roots(const Rational& lo, const Rational& hi) const {
  return sign_variations(lo) - sign_variations(hi);
}

std::vector<IsolatingInterval> isolate_roots(const Polynomial& square_free, const Rational& lo, const Rational& hi) {
  if (square_free.is_zero()) throw std::domain_error("cannot isolate the roots of the zero polynomial");
  std::vector<IsolatingInterval> out;
  if (square_free.degree() == 0) return out;
  const SturmSequence sturm(square_free);

  struct Pending {
    Rational lo, hi;
    int count;
  };
  std::vector<Pending> stack{{lo, hi, sturm.count_roots(lo, hi)}};
  while (!stack.empty()) {
    Pending cur = std::move(stack.back());
    stack.pop_back();
    if (cur.count == 0) continue;
    if (cur.count == 1) {
      out.push_back({cur.lo, cur.hi});
      continue;
    }
    const Rational mid = (cur.lo + cur.hi) / 2;
    if (square_free.sign_at(mid) != 0) {
      stack.push_back({mid, cur.hi, sturm.count_roots(mid, cur.hi)});
      stack.push_back({cur.lo, mid, sturm.count_roots(cur.lo, mid)});
      continue;
    }
    // Exact rational root at the midpoint: wrap it in a small isolating interval.
    Rational delta = (cur.hi - cur.lo) / 4;
    while (square_free.sign_at(mid - delta) == 0 || square_free.sign_at(mid + delta) == 0 ||
           sturm.count_roots(mid - delta, mid + delta) != 1) {
      delta /= 2;
    }
    stack.push_back({mid + delta, cur.hi, sturm.count_roots(mid + delta, cur.hi)});
    stack.push_back({mid - delta, mid + delta, 1});
    stack.push_back({cur.lo, mid - delta, sturm.count_roots(cur.lo, mid - delta)});
  }
  std::sort(out.begin(), out.end(), [](const IsolatingInterval& a, const IsolatingInterval& b) { return a.lo < b.lo; });
  return out;
}

void refine(const Polynomial& square_free, IsolatingInterval& interval) {
  const Rational mid = (interval.lo + interval.hi) / 2;
  const int s = square_free.sign_at(mid);
  if (s == 0) {
    interval.lo = (interval.lo + mid) / 2;
    interval.hi = (mid + interval.hi) / 2;
  } else if (s != square_free.sign_at(interval.lo)) {
    interval.hi = mid;
  } else {
    interval.lo = mid;
  }
}

bool vanishes_at_root(const Polynomial& p, const Polynomial& square_free, const IsolatingInterval& interval) {
  if (p.is_zero()) return true;
  const Polynomial g = gcd(p, square_free);
  if (g.degree() <= 0) return false;
  return SturmSequence(g).count_roots(interval.lo, interval.hi) > 0;
}

}  // namespace kbraid
