#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hjp {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

// Named check suites:
//   identity    - t = 0 identity and the m = 1 closed form
//   oracle      - basis-change oracle equivalence and the special value
//   determinant - Hessenberg block determinant, product vs elimination
//   hyp         - reversed-summation 4F3 route
//   quadrature  - stationary moments against tensor Gauss-Jacobi
//   mc          - Monte Carlo moment and capacity cross-checks (slow)
//   all         - everything above
// Each completed check is also written to `log` when given.
std::vector<CheckResult> run_suite(const std::string& suite, std::ostream* log = nullptr);

}  // namespace hjp
