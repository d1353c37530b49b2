#include "hjp/polynomial.hpp"

#include <stdexcept>
#include <utility>

namespace hjp {

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly Poly::constant(Rational value) { return Poly({std::move(value)}); }

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Poly::coeff(long i) const {
  if (i < 0) throw std::domain_error("Poly::coeff: negative index");
  if (i >= static_cast<long>(coeffs_.size())) return Rational(0);
  return coeffs_[static_cast<std::size_t>(i)];
}

Rational Poly::eval(const Rational& u) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * u + *it;
  return acc;
}

double Poly::eval(double u) const {
  double acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * u + to_double(*it);
  return acc;
}

Poly Poly::derivative() const {
  if (coeffs_.size() <= 1) return Poly{};
  std::vector<Rational> out(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    out[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
  return Poly(std::move(out));
}

Poly& Poly::operator+=(const Poly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

Poly operator*(const Rational& c, const Poly& p) {
  if (c == 0) return Poly{};
  std::vector<Rational> out(p.coeffs_.size());
  for (std::size_t i = 0; i < p.coeffs_.size(); ++i) out[i] = c * p.coeffs_[i];
  return Poly(std::move(out));
}

}  // namespace hjp
