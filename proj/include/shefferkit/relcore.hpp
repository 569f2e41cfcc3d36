#pragma once

// Finite binary relations, cones, involutions and the elementary
// property checks on relational systems.

#include <cstdint>
#include <optional>
#include <vector>

#include "shefferkit/common.hpp"

namespace shefferkit {

/// Binary relation on {0..n-1}; row i holds the successors of i and
/// column j the predecessors of j, both as bit words.
class BinaryRelation {
 public:
  BinaryRelation() = default;
  /// Empty relation on n elements.
  explicit BinaryRelation(std::size_t n);

  static BinaryRelation diagonal(std::size_t n);
  static BinaryRelation full(std::size_t n);
  /// Builds from a row-major boolean table of size n*n.
  static BinaryRelation from_matrix(std::size_t n, std::vector<bool> const& cells);
  /// Builds from successor bit words, one per element.
  static BinaryRelation from_rows(std::size_t n, std::vector<std::uint64_t> rows);

  std::size_t size() const noexcept { return n_; }
  bool related(Element x, Element y) const noexcept { return ((rows_[x] >> y) & 1u) != 0; }
  void set(Element x, Element y, bool value = true);

  ElementSet successors(Element x) const { return ElementSet(rows_.at(x)); }
  ElementSet predecessors(Element y) const { return ElementSet(cols_.at(y)); }
  std::vector<std::uint64_t> const& rows() const noexcept { return rows_; }

  /// The converse relation {(y,x) | (x,y) in R}.
  BinaryRelation converse() const;

  friend bool operator==(BinaryRelation const& a, BinaryRelation const& b) {
    return a.n_ == b.n_ && a.rows_ == b.rows_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> rows_;
  std::vector<std::uint64_t> cols_;
};

/// Total function between two finite carriers, given by its image table.
class ElementMap {
 public:
  ElementMap() = default;
  ElementMap(std::size_t codomain_size, std::vector<Element> image);

  static ElementMap identity(std::size_t n);

  std::size_t domain_size() const noexcept { return image_.size(); }
  std::size_t codomain_size() const noexcept { return codomain_size_; }
  Element operator()(Element x) const { return image_.at(x); }
  std::vector<Element> const& image() const noexcept { return image_; }

  bool is_self_map() const noexcept { return codomain_size_ == image_.size(); }
  bool injective() const;
  bool surjective() const;

  friend bool operator==(ElementMap const&, ElementMap const&) = default;

 private:
  std::size_t codomain_size_ = 0;
  std::vector<Element> image_;
};

/// (A, R, ', 0, 1) with optional involution and optional bounds.
class RelationalSystem {
 public:
  RelationalSystem(Carrier carrier, BinaryRelation relation,
                   std::optional<ElementMap> involution = std::nullopt,
                   std::optional<Element> bottom = std::nullopt,
                   std::optional<Element> top = std::nullopt);

  std::size_t size() const noexcept { return carrier_.size(); }
  Carrier const& carrier() const noexcept { return carrier_; }
  BinaryRelation const& relation() const noexcept { return relation_; }
  bool related(Element x, Element y) const noexcept { return relation_.related(x, y); }

  bool has_involution() const noexcept { return involution_.has_value(); }
  /// Throws Error when no involution is designated.
  ElementMap const& involution() const;
  Element prime(Element x) const { return involution()(x); }

  std::optional<Element> bottom() const noexcept { return bottom_; }
  std::optional<Element> top() const noexcept { return top_; }
  bool has_bounds() const noexcept { return bottom_.has_value() && top_.has_value(); }

  RelationalSystem with_involution(std::optional<ElementMap> u) const;
  RelationalSystem with_bounds(std::optional<Element> bottom, std::optional<Element> top) const;

  /// Literal equality of carrier size, relation, involution and bounds.
  /// Element names are not compared.
  bool same_structure(RelationalSystem const& other) const;

  friend bool operator==(RelationalSystem const&, RelationalSystem const&) = default;

 private:
  Carrier carrier_;
  BinaryRelation relation_;
  std::optional<ElementMap> involution_;
  std::optional<Element> bottom_;
  std::optional<Element> top_;
};

/// Four elementary properties, each false flag paired with the
/// lexicographically least counterexample tuple.
struct PropertyReport {
  bool reflexive = true;
  bool symmetric = true;
  bool antisymmetric = true;
  bool transitive = true;
  std::vector<Element> reflexive_witness;      // (x): (x,x) not in R
  std::vector<Element> symmetric_witness;      // (x,y): (x,y) in R, (y,x) not
  std::vector<Element> antisymmetric_witness;  // (x,y): both in R, x != y
  std::vector<Element> transitive_witness;     // (x,y,z): (x,y),(y,z) in R, (x,z) not
};

/// Report of the three defining conditions of a directed relational
/// system with involution, plus the L(x,y) = U(x',y')' cross-check.
struct DrsiReport {
  Verdict reflexive;
  Verdict directed;
  Verdict involution;
  Verdict cone_duality;

  bool passes() const { return reflexive.holds && directed.holds && involution.holds; }
};

/// U(a,b) = { x | (a,x),(b,x) in R }.
ElementSet upper_cone(BinaryRelation const& rel, Element a, Element b);
ElementSet upper_cone(RelationalSystem const& sys, Element a, Element b);
/// L(a,b) = { x | (x,a),(x,b) in R }.
ElementSet lower_cone(BinaryRelation const& rel, Element a, Element b);
ElementSet lower_cone(RelationalSystem const& sys, Element a, Element b);

/// Image B' of a subset under a self-map.
ElementSet image_of(ElementSet set, ElementMap const& map);

PropertyReport relation_properties(BinaryRelation const& rel);

/// Every pair has nonempty upper and lower cones. Failure witness is the
/// least pair; reason names the empty cone.
Verdict is_directed(BinaryRelation const& rel);
Verdict is_directed(RelationalSystem const& sys);

/// u is an antitone map of period 2 on the relation.
Verdict check_involution(BinaryRelation const& rel, ElementMap const& u);
Verdict check_involution(RelationalSystem const& sys, ElementMap const& u);

/// Conditions (reflexive, directed, involution) of a directed relational
/// system with involution. Throws Error if no involution is designated.
DrsiReport validate_drsi(RelationalSystem const& sys);

/// (0,x),(x,1) in R for every x. Throws Error if bounds are missing.
Verdict check_bounded(RelationalSystem const& sys);

/// Bounded, 0' = 1 and U(x,x') = {1} for every x. Throws Error if bounds
/// or involution are missing. On success L(x,x') = {0} is re-verified
/// and a mismatch is reported as a failure.
Verdict check_complemented(RelationalSystem const& sys);

/// B x C is a subset of R; vacuously true when either set is empty.
bool set_related(BinaryRelation const& rel, ElementSet from, ElementSet to);

}  // namespace shefferkit
