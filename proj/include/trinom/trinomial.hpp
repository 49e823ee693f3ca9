#pragma once

// Trinomial input model T0^l0 + T1^l1 + T2^l2, its gcd invariants, the
// matrix L and the rationality classification of the base curve.

#include <array>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <string_view>
#include <string>
#include <vector>

#include "trinom/error.hpp"
#include "trinom/exactla.hpp"

namespace trinom {

using Exponent = std::int64_t;
using ExponentBlock = std::vector<Exponent>;

class TrinomialInput {
 public:
  /// Validating constructor, see validate().
  static TrinomialInput validate(const std::array<ExponentBlock, 3>& blocks) {
    for (std::size_t i = 0; i < 3; ++i) {
      if (blocks[i].empty())
        throw Error(ErrorKind::EmptyBlock, "block " + std::to_string(i) + " has no variables");
      for (Exponent e : blocks[i])
        if (e < 1) throw Error(ErrorKind::ZeroExponent, "block " + std::to_string(i) + " has exponent " + std::to_string(e));
      if (blocks[i].size() == 1 && blocks[i][0] == 1)
        throw Error(ErrorKind::LinearTerm,
                    "block " + std::to_string(i) + " is a single variable to the first power; the hypersurface is an affine space");
    }
    TrinomialInput t;
    t.blocks_ = blocks;
    return t;
  }

  const ExponentBlock& block(std::size_t i) const { return blocks_.at(i); }
  const std::array<ExponentBlock, 3>& blocks() const { return blocks_; }
  std::size_t block_size(std::size_t i) const { return blocks_.at(i).size(); }
  std::size_t n() const { return blocks_[0].size() + blocks_[1].size() + blocks_[2].size(); }

  /// Offset of block i among the n coordinates.
  std::size_t offset(std::size_t i) const {
    std::size_t off = 0;
    for (std::size_t b = 0; b < i; ++b) off += blocks_[b].size();
    return off;
  }

  /// Block index of coordinate k.
  std::size_t block_of(std::size_t k) const {
    for (std::size_t b = 0; b < 3; ++b) {
      if (k < blocks_[b].size()) return b;
      k -= blocks_[b].size();
    }
    throw Error(ErrorKind::DimensionMismatch, "coordinate index out of range");
  }

  /// Exponent vector of the monomial T_i^{l_i} in Z^n.
  std::vector<Int> monomial_exponents(std::size_t i) const {
    std::vector<Int> e(n());
    const std::size_t off = offset(i);
    for (std::size_t j = 0; j < blocks_[i].size(); ++j) e[off + j] = blocks_[i][j];
    return e;
  }

  bool is_pham_brieskorn() const {
    return blocks_[0].size() == 1 && blocks_[1].size() == 1 && blocks_[2].size() == 1;
  }

  friend bool operator==(const TrinomialInput&, const TrinomialInput&) = default;

 private:
  std::array<ExponentBlock, 3> blocks_;
};

inline TrinomialInput validate(const std::array<ExponentBlock, 3>& blocks) {
  return TrinomialInput::validate(blocks);
}

struct GcdInvariants {
  Exponent d0 = 1, d1 = 1, d2 = 1;
  Exponent d = 1;
  Exponent d01 = 1, d02 = 1, d12 = 1;
  Exponent dtilde = 1;

  /// d_i by block index.
  Exponent block_gcd(std::size_t i) const { return i == 0 ? d0 : i == 1 ? d1 : d2; }
  /// d_{jk} for the pair complementary to block i (d12 for 0, d02 for 1, d01 for 2).
  Exponent complementary(std::size_t i) const { return i == 0 ? d12 : i == 1 ? d02 : d01; }

  friend bool operator==(const GcdInvariants&, const GcdInvariants&) = default;
};

inline GcdInvariants invariants_from_block_gcds(Exponent d0, Exponent d1, Exponent d2) {
  GcdInvariants g;
  g.d0 = d0;
  g.d1 = d1;
  g.d2 = d2;
  g.d = std::gcd(std::gcd(d0, d1), d2);
  g.d01 = std::gcd(d0 / g.d, d1 / g.d);
  g.d02 = std::gcd(d0 / g.d, d2 / g.d);
  g.d12 = std::gcd(d1 / g.d, d2 / g.d);
  g.dtilde = g.d * g.d01 * g.d02 * g.d12;
  return g;
}

inline GcdInvariants gcd_invariants(const TrinomialInput& t) {
  std::array<Exponent, 3> di{};
  for (std::size_t i = 0; i < 3; ++i)
    for (Exponent e : t.block(i)) di[i] = std::gcd(di[i], e);
  return invariants_from_block_gcds(di[0], di[1], di[2]);
}

/// L = ( -l0  l1  0 ; -l0  0  l2 ).
inline IntMatrix build_L(const TrinomialInput& t) {
  IntMatrix L(2, t.n());
  std::size_t k = 0;
  for (Exponent e : t.block(0)) {
    L(0, k) = -e;
    L(1, k) = -e;
    ++k;
  }
  for (Exponent e : t.block(1)) L(0, k++) = e;
  for (Exponent e : t.block(2)) L(1, k++) = e;
  return L;
}

enum class RationalType { FactorialRational, TypeI, TypeII, NonRational };

constexpr std::string_view to_string(RationalType tag) {
  switch (tag) {
    case RationalType::FactorialRational: return "FactorialRational";
    case RationalType::TypeI: return "TypeI";
    case RationalType::TypeII: return "TypeII";
    case RationalType::NonRational: return "NonRational";
  }
  return "Unknown";
}

struct Classification {
  RationalType tag = RationalType::NonRational;
  Exponent genus = 0;
  bool pham_brieskorn = false;
  // TypeI only: s >= 2, and the block whose support divisor carries s points
  // (the block opposite the pair with d_jk = s).
  Exponent s = 0;
  std::size_t special_block = 0;
};

/// g = d/2 (d~ - (d01 + d02 + d12)) + 1
inline Exponent genus_of(const GcdInvariants& g) {
  const Exponent twice = g.d * (g.dtilde - (g.d01 + g.d02 + g.d12)) + 2;
  if (twice % 2 != 0 || twice < 0)
    throw Error(ErrorKind::InternalInconsistency, "genus formula produced " + std::to_string(twice) + "/2");
  return twice / 2;
}

inline Classification classify_invariants(const GcdInvariants& g) {
  Classification c;
  c.genus = genus_of(g);
  const bool pairwise_coprime =
      std::gcd(g.d0, g.d1) == 1 && std::gcd(g.d0, g.d2) == 1 && std::gcd(g.d1, g.d2) == 1;
  // complementary(i) = d_jk opposite block i
  const std::array<Exponent, 3> opposite{g.d12, g.d02, g.d01};
  if (pairwise_coprime) {
    c.tag = RationalType::FactorialRational;
  } else if (g.d == 1 && ((opposite[0] == 1) + (opposite[1] == 1) + (opposite[2] == 1)) >= 2) {
    c.tag = RationalType::TypeI;
    for (std::size_t i = 0; i < 3; ++i)
      if (opposite[i] != 1) {
        c.special_block = i;
        c.s = opposite[i];
      }
  } else if (g.d == 2 && g.d01 == 1 && g.d02 == 1 && g.d12 == 1) {
    c.tag = RationalType::TypeII;
  } else {
    c.tag = RationalType::NonRational;
  }
  return c;
}

inline Classification classify(const GcdInvariants& g, const TrinomialInput& t) {
  Classification c = classify_invariants(g);
  c.pham_brieskorn = t.is_pham_brieskorn();
  return c;
}

}  // namespace trinom
