#include "hjp/rational.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hjp {

namespace {

// prod of v over [lo, hi); empty when lo >= hi.
BigInt rising_range(long lo, long hi) {
  BigInt acc = 1;
  for (long v = lo; v < hi; ++v) acc *= v;
  return acc;
}

}  // namespace

double to_double(const Rational& x) { return x.convert_to<double>(); }

std::string to_fraction(const Rational& x) {
  return numerator(x).str() + "/" + denominator(x).str();
}

Rational parse_fraction(std::string_view text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string_view::npos) {
      return Rational(BigInt(std::string(text)));
    }
    BigInt num(std::string(text.substr(0, slash)));
    BigInt den(std::string(text.substr(slash + 1)));
    if (den == 0) throw std::domain_error("parse_fraction: zero denominator");
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    throw std::domain_error("parse_fraction: malformed rational '" + std::string(text) + "'");
  }
}

BigInt factorial(long n) {
  if (n < 0) throw std::domain_error("factorial: negative argument");
  return rising_range(2, n + 1);
}

BigInt gamma_int(long n) {
  if (n < 1) throw std::domain_error("gamma_int: argument must be >= 1");
  return factorial(n - 1);
}

Rational gamma_ratio(std::vector<long> num_args, std::vector<long> den_args) {
  for (long a : num_args)
    if (a <= 0) throw std::domain_error("gamma_ratio: nonpositive numerator argument");
  for (long a : den_args)
    if (a <= 0) throw std::domain_error("gamma_ratio: nonpositive denominator argument");

  // Pair the largest arguments together so each pair contributes only the
  // short factorial range between them.
  std::sort(num_args.begin(), num_args.end(), std::greater<>());
  std::sort(den_args.begin(), den_args.end(), std::greater<>());

  BigInt num = 1;
  BigInt den = 1;
  const std::size_t shared = std::min(num_args.size(), den_args.size());
  for (std::size_t i = 0; i < shared; ++i) {
    const long a = num_args[i];
    const long b = den_args[i];
    if (a >= b) {
      num *= rising_range(b, a);
    } else {
      den *= rising_range(a, b);
    }
  }
  for (std::size_t i = shared; i < num_args.size(); ++i) num *= factorial(num_args[i] - 1);
  for (std::size_t i = shared; i < den_args.size(); ++i) den *= factorial(den_args[i] - 1);
  return Rational(num, den);
}

Rational pochhammer(long x, long k) {
  if (k < 0) throw std::domain_error("pochhammer: negative order");
  BigInt acc = 1;
  for (long i = 0; i < k; ++i) acc *= BigInt(x + i);
  return Rational(acc);
}

double eval_exp_sum(std::span<const ExpTerm> terms, double t) {
  if (t < 0) throw std::domain_error("eval_exp_sum: negative time");
  if (t == 0.0) {
    Rational total = 0;
    for (const ExpTerm& term : terms) total += term.coeff;
    return to_double(total);
  }
  double sum = 0.0;
  double comp = 0.0;
  for (const ExpTerm& term : terms) {
    const double value =
        to_double(term.coeff) * std::exp(-static_cast<double>(term.rate) * t);
    const double y = value - comp;
    const double next = sum + y;
    comp = (next - sum) - y;
    sum = next;
  }
  return sum;
}

}  // namespace hjp
