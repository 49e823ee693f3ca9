#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "trinom/convexq.hpp"
#include "trinom/exactla.hpp"
#include "trinom/trinomial.hpp"

namespace trinom::samples {

struct Fixture {
  std::string name;
  TrinomialInput input;
  IntMatrix F;
  IntMatrix S;
};

inline Fixture factorial_fixture() {
  return {"factorial", validate({ExponentBlock{3}, ExponentBlock{5}, ExponentBlock{1, 1}}),
          IntMatrix{{5, 0}, {3, 0}, {0, 1}, {15, -1}}, IntMatrix{{2, -3, 0, 0}, {0, 0, 1, 0}}};
}

inline Fixture type2_fixture() {
  return {"type2", validate({ExponentBlock{2}, ExponentBlock{4}, ExponentBlock{2, 4}}),
          IntMatrix{{2, 0}, {1, 0}, {0, -2}, {1, 1}}, IntMatrix{{1, -1, 0, 0}, {0, -1, 0, 1}}};
}

inline Fixture type1_fixture() {
  return {"type1", validate({ExponentBlock{2}, ExponentBlock{3}, ExponentBlock{3, 3}}),
          IntMatrix{{3, 0}, {2, 0}, {0, 1}, {2, -1}}, IntMatrix{{1, -1, 0, 0}, {0, 0, 1, 0}}};
}

inline Fixture pham_brieskorn_fixture() {
  return {"pham_brieskorn", validate({ExponentBlock{2}, ExponentBlock{3}, ExponentBlock{6}}), IntMatrix{{3}, {2}, {1}},
          IntMatrix{{1, -1, 0}}};
}

inline Fixture nonrational_fixture() {
  return {"nonrational", validate({ExponentBlock{2}, ExponentBlock{3}, ExponentBlock{6, 6}}),
          IntMatrix{{3, 0}, {2, 0}, {0, 1}, {1, -1}}, IntMatrix{{1, -1, 0, 0}, {0, 0, 1, 0}}};
}

inline std::vector<Fixture> all_fixtures() {
  return {factorial_fixture(), type2_fixture(), type1_fixture(), pham_brieskorn_fixture(), nonrational_fixture()};
}

inline Rational q(long long num, long long den = 1) { return ratio(Int(num), Int(den)); }

inline QVector qv(std::initializer_list<Rational> xs) { return QVector(xs); }

inline IntVector iv(std::initializer_list<long long> xs) {
  IntVector v;
  for (long long x : xs) v.emplace_back(x);
  return v;
}

/// Random valid input: block sizes in [1, max_block], exponents in [1, max_exp],
/// total size at most max_n, never a single linear variable.
inline TrinomialInput random_input(std::mt19937& rng, int max_block, int max_exp, std::size_t max_n = 9) {
  std::uniform_int_distribution<int> size(1, max_block);
  std::uniform_int_distribution<Exponent> expo(1, max_exp);
  for (;;) {
    std::array<ExponentBlock, 3> blocks;
    std::size_t n = 0;
    bool ok = true;
    for (auto& b : blocks) {
      b.resize(static_cast<std::size_t>(size(rng)));
      for (Exponent& e : b) e = expo(rng);
      if (b.size() == 1 && b[0] == 1) ok = false;
      n += b.size();
    }
    if (ok && n <= max_n) return validate(blocks);
  }
}

}  // namespace trinom::samples
