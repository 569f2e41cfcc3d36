#pragma once

// Shared vocabulary: element indices, carriers, element subsets, verdicts.

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace shefferkit {

/// Dense element index into a carrier, 0..n-1.
using Element = std::uint32_t;

/// Hard cap on carrier size: one 64-bit word per relation row.
inline constexpr std::size_t kMaxCarrier = 64;

/// Raised for malformed input and violated preconditions.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Finite non-void carrier with user-facing element names.
class Carrier {
 public:
  /// Carrier with default names e0..e(n-1).
  explicit Carrier(std::size_t n);
  explicit Carrier(std::vector<std::string> names);

  std::size_t size() const noexcept { return names_.size(); }
  std::string const& name(Element e) const { return names_.at(e); }
  std::vector<std::string> const& names() const noexcept { return names_; }
  std::optional<Element> find(std::string_view name) const;

  friend bool operator==(Carrier const&, Carrier const&) = default;

 private:
  std::vector<std::string> names_;
};

/// Subset of a carrier of at most kMaxCarrier elements, as a bit word.
class ElementSet {
 public:
  ElementSet() = default;
  explicit constexpr ElementSet(std::uint64_t bits) : bits_(bits) {}
  ElementSet(std::initializer_list<Element> elems) {
    for (Element e : elems) insert(e);
  }

  static ElementSet all(std::size_t n) {
    return ElementSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  bool contains(Element e) const noexcept { return e < 64 && ((bits_ >> e) & 1u) != 0; }
  void insert(Element e) { bits_ |= std::uint64_t{1} << e; }
  void erase(Element e) { bits_ &= ~(std::uint64_t{1} << e); }
  bool empty() const noexcept { return bits_ == 0; }
  std::size_t size() const noexcept { return static_cast<std::size_t>(std::popcount(bits_)); }
  std::uint64_t bits() const noexcept { return bits_; }

  /// Least element; the set must be nonempty.
  Element min() const { return static_cast<Element>(std::countr_zero(bits_)); }
  /// Greatest element; the set must be nonempty.
  Element max() const { return static_cast<Element>(63 - std::countl_zero(bits_)); }

  std::vector<Element> elements() const;

  ElementSet operator&(ElementSet o) const noexcept { return ElementSet(bits_ & o.bits_); }
  ElementSet operator|(ElementSet o) const noexcept { return ElementSet(bits_ | o.bits_); }
  friend bool operator==(ElementSet, ElementSet) = default;

 private:
  std::uint64_t bits_ = 0;
};

/// Outcome of a property check. A failed verdict always carries the
/// offending tuple so that callers can re-check it.
struct Verdict {
  bool holds = true;
  /// Which condition failed (empty on success).
  std::string reason;
  /// Counterexample elements, in the order named by `labels`.
  std::vector<Element> witness;
  /// Names for the witness slots (variable names for law checks).
  std::vector<std::string> labels;
  /// Evaluated lhs/rhs of the violated equation, for law checks.
  std::optional<std::pair<Element, Element>> sides;

  explicit operator bool() const noexcept { return holds; }

  static Verdict pass() { return {}; }
  static Verdict fail(std::string reason, std::vector<Element> witness = {},
                      std::vector<std::string> labels = {}) {
    Verdict v;
    v.holds = false;
    v.reason = std::move(reason);
    v.witness = std::move(witness);
    v.labels = std::move(labels);
    return v;
  }
};

/// Renders a verdict with element names, e.g. "fails (AX2): x=a y=b".
std::string describe(Verdict const& v, Carrier const& carrier);

}  // namespace shefferkit
