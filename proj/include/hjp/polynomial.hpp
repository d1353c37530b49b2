#pragma once

#include "hjp/rational.hpp"

#include <vector>

namespace hjp {

// Dense univariate polynomial with exact rational coefficients;
// coeffs()[i] multiplies u^i, trailing zeros trimmed.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs);

  static Poly constant(Rational value);

  // -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(long i) const;

  Rational eval(const Rational& u) const;
  double eval(double u) const;
  Poly derivative() const;

  Poly& operator+=(const Poly& other);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator*(const Rational& c, const Poly& p);
  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  std::vector<Rational> coeffs_;

  void trim();
};

}  // namespace hjp
