#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hjp {

using BigInt   = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

double to_double(const Rational& x);

// Canonical "numerator/denominator" rendering, e.g. "3/5", "-7/2", "4/1".
std::string to_fraction(const Rational& x);
Rational parse_fraction(std::string_view text);

BigInt factorial(long n);
BigInt gamma_int(long n);  // Gamma(n) = (n-1)!, requires n >= 1

// Exact prod Gamma(num_i) / prod Gamma(den_j) for positive integer
// arguments. Shared factorial ranges are cancelled before anything is
// multiplied out, so intermediates stay near the final magnitude.
Rational gamma_ratio(std::vector<long> num_args, std::vector<long> den_args);

// Rising factorial (x)_k = x(x+1)...(x+k-1); (x)_0 = 1.
Rational pochhammer(long x, long k);

struct ExpTerm {
  long rate = 0;  // decay rate, > 0
  Rational coeff;

  friend bool operator==(const ExpTerm&, const ExpTerm&) = default;
};

// Sum of coeff * e^{-rate t}. At t = 0 the coefficients are added exactly
// and converted to double once; otherwise compensated summation.
double eval_exp_sum(std::span<const ExpTerm> terms, double t);

}  // namespace hjp
