#pragma once

// Text form of a trinomial: "T01^3+T11^5+T21*T22".
//
//   expr   := term '+' term '+' term
//   term   := factor ('*' factor)*
//   factor := 'T' digit+ ('^' integer)?
//
// The first digit of a variable name is its block; the remaining digits order
// the variables inside the block. Blanks are ignored.

#include <algorithm>
#include <array>
#include <cctype>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "trinom/error.hpp"
#include "trinom/trinomial.hpp"

namespace trinom {

namespace detail {

class ExpressionParser {
 public:
  explicit ExpressionParser(std::string_view s) : s_(s) {}

  TrinomialInput parse() {
    std::array<bool, 3> seen{};
    std::array<ExponentBlock, 3> blocks;
    for (int k = 0; k < 3; ++k) {
      if (k > 0) expect('+');
      const std::size_t start = skip();
      auto [block, exps] = term();
      if (block > 2) fail(start, "block index " + std::to_string(block) + " is not 0, 1 or 2", ErrorKind::BlockMismatch);
      if (seen[block]) fail(start, "two terms use block " + std::to_string(block), ErrorKind::BlockMismatch);
      seen[block] = true;
      blocks[block] = std::move(exps);
    }
    if (skip() != s_.size()) fail(pos_, std::string("unexpected '") + s_[pos_] + "'");
    return validate(blocks);
  }

 private:
  [[noreturn]] void fail(std::size_t at, const std::string& what, ErrorKind kind = ErrorKind::ParseError) const {
    throw Error(kind, "at position " + std::to_string(at) + ": " + what);
  }

  std::size_t skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return pos_;
  }

  void expect(char c) {
    if (skip() >= s_.size()) fail(pos_, std::string("expected '") + c + "', found end of input");
    if (s_[pos_] != c) fail(pos_, std::string("expected '") + c + "', found '" + s_[pos_] + "'");
    ++pos_;
  }

  std::string digits() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  std::pair<std::size_t, ExponentBlock> term() {
    std::size_t block = 0;
    std::map<std::pair<std::string, std::string>, Exponent> vars;  // numeric order of the index
    for (bool first = true;; first = false) {
      if (!first) {
        if (skip() >= s_.size() || s_[pos_] != '*') break;
        ++pos_;
      }
      const std::size_t at = skip();
      expect('T');
      const std::string name = digits();
      if (name.empty()) fail(pos_, "variable index expected after 'T'");
      const std::size_t b = static_cast<std::size_t>(name[0] - '0');
      if (first) block = b;
      else if (b != block)
        fail(at, "T" + name + " is not in block " + std::to_string(block), ErrorKind::BlockMismatch);
      if (!names_.insert(name).second) fail(at, "T" + name + " appears twice", ErrorKind::DuplicateVariable);

      Exponent e = 1;
      if (skip() < s_.size() && s_[pos_] == '^') {
        ++pos_;
        skip();
        const std::size_t num_at = pos_;
        const std::string num = digits();
        if (num.empty()) fail(num_at, "exponent expected after '^'");
        if (num.size() > 15) fail(num_at, "exponent too large");
        e = std::stoll(num);
      }
      std::string index = name.substr(1);
      std::string padded = index;
      padded.insert(0, 24 - std::min<std::size_t>(padded.size(), 24), '0');
      vars[{padded, index}] = e;
    }
    ExponentBlock exps;
    for (const auto& [k, e] : vars) exps.push_back(e);
    return {block, std::move(exps)};
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  std::set<std::string> names_;
};

}  // namespace detail

inline TrinomialInput parse_trinomial_expression(std::string_view s) { return detail::ExpressionParser(s).parse(); }

/// Inverse of parse_trinomial_expression; variables are numbered from 1.
inline std::string to_expression(const TrinomialInput& t) {
  std::string out;
  for (std::size_t i = 0; i < 3; ++i) {
    if (i > 0) out += '+';
    for (std::size_t j = 0; j < t.block_size(i); ++j) {
      if (j > 0) out += '*';
      out += 'T' + std::to_string(i) + std::to_string(j + 1);
      if (t.block(i)[j] != 1) out += '^' + std::to_string(t.block(i)[j]);
    }
  }
  return out;
}

}  // namespace trinom
