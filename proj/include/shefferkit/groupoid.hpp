#pragma once

#include <optional>
#include <vector>

#include "shefferkit/common.hpp"

namespace shefferkit {

/// Finite groupoid (A, |): a total binary operation table, row = left
/// operand. Bounds are designated constants for laws mentioning 0 and 1.
class Groupoid {
 public:
  Groupoid(Carrier carrier, std::vector<Element> table,
           std::optional<Element> bottom = std::nullopt,
           std::optional<Element> top = std::nullopt);
  /// Groupoid with default element names.
  Groupoid(std::size_t n, std::vector<Element> table);

  std::size_t size() const noexcept { return carrier_.size(); }
  Carrier const& carrier() const noexcept { return carrier_; }
  Element op(Element x, Element y) const noexcept { return table_[x * size() + y]; }
  /// x' = x|x.
  Element prime(Element x) const noexcept { return op(x, x); }
  std::vector<Element> const& table() const noexcept { return table_; }

  std::optional<Element> bottom() const noexcept { return bottom_; }
  std::optional<Element> top() const noexcept { return top_; }
  Groupoid with_bounds(std::optional<Element> bottom, std::optional<Element> top) const;
  Groupoid with_carrier(Carrier carrier) const;

  /// Table and bounds equality, ignoring element names.
  bool same_structure(Groupoid const& other) const {
    return table_ == other.table_ && bottom_ == other.bottom_ && top_ == other.top_;
  }

  friend bool operator==(Groupoid const&, Groupoid const&) = default;

 private:
  Carrier carrier_;
  std::vector<Element> table_;
  std::optional<Element> bottom_;
  std::optional<Element> top_;
};

}  // namespace shefferkit
