#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace trinom {

enum class ErrorKind {
  RankDeficient,
  NotPrimitive,
  Unbounded,
  EmptyInput,
  EmptyFiber,
  ZeroExponent,
  LinearTerm,
  EmptyBlock,
  InternalInconsistency,
  BadOverride,
  BadRelation,
  NotRational,
  OutsideDualCone,
  ParseError,
  BlockMismatch,
  DuplicateVariable,
  UnsupportedRank,
  DimensionMismatch,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::RankDeficient: return "RankDeficient";
    case ErrorKind::NotPrimitive: return "NotPrimitive";
    case ErrorKind::Unbounded: return "Unbounded";
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::EmptyFiber: return "EmptyFiber";
    case ErrorKind::ZeroExponent: return "ZeroExponent";
    case ErrorKind::LinearTerm: return "LinearTerm";
    case ErrorKind::EmptyBlock: return "EmptyBlock";
    case ErrorKind::InternalInconsistency: return "InternalInconsistency";
    case ErrorKind::BadOverride: return "BadOverride";
    case ErrorKind::BadRelation: return "BadRelation";
    case ErrorKind::NotRational: return "NotRational";
    case ErrorKind::OutsideDualCone: return "OutsideDualCone";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::BlockMismatch: return "BlockMismatch";
    case ErrorKind::DuplicateVariable: return "DuplicateVariable";
    case ErrorKind::UnsupportedRank: return "UnsupportedRank";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
  }
  return "Unknown";
}

/// Every failure raised by the library carries a machine-checkable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace trinom
