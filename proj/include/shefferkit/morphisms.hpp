#pragma once

// Homomorphisms of relational systems and groupoids, kernels,
// congruences and the transfer constructions between them.

#include <functional>
#include <vector>

#include "shefferkit/groupoid.hpp"
#include "shefferkit/relcore.hpp"

namespace shefferkit {

/// Partition of a carrier as a dense block id per element; block ids
/// are numbered in order of first occurrence.
class EquivalenceRelation {
 public:
  explicit EquivalenceRelation(std::vector<Element> block_of);

  static EquivalenceRelation diagonal(std::size_t n);
  static EquivalenceRelation single_block(std::size_t n);

  std::size_t size() const noexcept { return block_of_.size(); }
  std::size_t block_count() const noexcept { return blocks_; }
  Element block(Element x) const { return block_of_.at(x); }
  bool equivalent(Element x, Element y) const { return block_of_.at(x) == block_of_.at(y); }
  std::vector<Element> const& block_ids() const noexcept { return block_of_; }

  /// Quotient map onto block ids.
  ElementMap quotient_map() const;

  friend bool operator==(EquivalenceRelation const&, EquivalenceRelation const&) = default;

 private:
  std::vector<Element> block_of_;
  std::size_t blocks_ = 0;
};

/// (x,y) in R implies (f(x),f(y)) in S, and the converse as well when
/// `strong`. When both systems carry involutions f(x') = f(x)* is also
/// required. Throws Error if f does not map src into dst.
Verdict is_rel_homomorphism(RelationalSystem const& src, RelationalSystem const& dst,
                            ElementMap const& f, bool strong);

/// f(x|y) = f(x)|f(y) for every pair.
Verdict is_groupoid_homomorphism(Groupoid const& ga, Groupoid const& gb, ElementMap const& f);

/// f is a homomorphism between the induced systems R(ga) and R(gb).
/// Throws Error if the groupoids are not Sheffer or f is not a groupoid
/// homomorphism.
bool verify_hom_transfer(Groupoid const& ga, Groupoid const& gb, ElementMap const& f);

struct HomSearchOptions {
  bool strong = false;
  bool surjective = false;
  bool injective = false;
};

/// Streams every map satisfying the predicate in lexicographic order of
/// the image vector. `visit` returning false stops the search.
void find_system_homomorphisms(RelationalSystem const& src, RelationalSystem const& dst,
                               HomSearchOptions const& opts,
                               std::function<bool(ElementMap const&)> const& visit);
/// Groupoid mode; `strong` is ignored.
void find_groupoid_homomorphisms(Groupoid const& src, Groupoid const& dst,
                                 HomSearchOptions const& opts,
                                 std::function<bool(ElementMap const&)> const& visit);

std::vector<ElementMap> system_homomorphisms(RelationalSystem const& src,
                                             RelationalSystem const& dst,
                                             HomSearchOptions const& opts = {});
std::vector<ElementMap> groupoid_homomorphisms(Groupoid const& src, Groupoid const& dst,
                                               HomSearchOptions const& opts = {});

EquivalenceRelation kernel(ElementMap const& f);

/// x ~ x' and y ~ y' imply x|y ~ x'|y'.
Verdict is_congruence(Groupoid const& g, EquivalenceRelation const& eq);

/// All congruences of g, enumerated over set partitions in restricted
/// growth order. Intended for tiny carriers.
std::vector<EquivalenceRelation> congruences(Groupoid const& g);

/// Whether the congruences of g form a distributive lattice under
/// intersection and the join of equivalences.
Verdict congruence_lattice_distributive(Groupoid const& g);

/// f(x)|f(y) := f(x|y) on the image, for |_A assigned to src_sys and f a
/// strong surjective homomorphism src_sys -> dst_sys whose kernel is a
/// congruence of ga. Every representative pair is audited to agree.
/// Throws Error when a precondition fails or the table is ill-defined.
Groupoid induced_image_operation(Groupoid const& ga, RelationalSystem const& src_sys,
                                 ElementMap const& f, RelationalSystem const& dst_sys);

/// x|y = y' if (x',y') in R, else 1. Throws Error unless sys is a bounded
/// DRSI.
Groupoid bounded_top_assignment(RelationalSystem const& sys);

/// For a strong homomorphism f between bounded DRSIs with f(1) = 1, f is
/// a groupoid homomorphism between their top-fallback assignments.
/// Throws Error when the hypotheses fail.
bool verify_bounded_hom(RelationalSystem const& sys_a, RelationalSystem const& sys_b,
                        ElementMap const& f);

}  // namespace shefferkit
