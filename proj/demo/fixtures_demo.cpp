// Library walk-through on T01^3 + T11^5 + T21*T22 = 0: the divisor in the
// default coordinates and in the coordinates given by a hand-picked basis,
// one evaluation, and a small Hilbert-function check.

#include <iostream>

#include "trinom/downgrade.hpp"
#include "trinom/expression.hpp"
#include "trinom/oracle.hpp"
#include "trinom/ppdivisor.hpp"
#include "trinom/report.hpp"

int main() {
  using namespace trinom;
  const TrinomialInput t = parse_trinomial_expression("T01^3 + T11^5 + T21*T22");

  const TorusData canonical = build_torus_data(t);
  std::cout << ppdivisor_text(t, canonical, compute_ppdivisor(t)) << "\n";

  const IntMatrix F{{5, 0}, {3, 0}, {0, 1}, {15, -1}};
  const IntMatrix S{{2, -3, 0, 0}, {0, 0, 1, 0}};
  const TorusData td = build_torus_data(t, F, S);
  const PPDivisor dv = compute_ppdivisor(t, F, S);
  std::cout << ppdivisor_text(t, td, dv) << "\n";

  const IntVector u{15, 0};
  std::cout << evaluation_text(u, evaluate(dv, u));
  std::cout << "dim K[X]_(15,0) = " << hilbert_dim(t, td, u) << "\n\n";

  std::cout << verify_text(verify_divisor(t, td, dv, 6), 6);
}
