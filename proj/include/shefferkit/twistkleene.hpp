#pragma once

// Twist-products of relational systems, the Sheffer operation they
// inherit from an assigned base operation, and Kleene subsystems.

#include <vector>

#include "shefferkit/execution.hpp"
#include "shefferkit/groupoid.hpp"
#include "shefferkit/relcore.hpp"

namespace shefferkit {

/// Row-major flattening of A x A: (x,y) <-> x*n + y.
class PairIndexing {
 public:
  explicit PairIndexing(std::size_t n) : n_(n) {}
  std::size_t base_size() const noexcept { return n_; }
  std::size_t size() const noexcept { return n_ * n_; }
  Element flat(Element x, Element y) const noexcept { return static_cast<Element>(x * n_ + y); }
  Element first(Element p) const noexcept { return static_cast<Element>(p / n_); }
  Element second(Element p) const noexcept { return static_cast<Element>(p % n_); }

 private:
  std::size_t n_;
};

/// Element names "(x,y)" for the pairs of a carrier.
Carrier pair_carrier(Carrier const& base);

/// (A^2, S, *) with ((x,y),(z,v)) in S iff (x,z),(v,y) in R and
/// (x,y)* = (y,x). Any involution or bounds on sys are ignored.
/// Requires |A|^2 <= 64.
RelationalSystem twist_product(RelationalSystem const& sys, Execution exec = Execution::Parallel);

/// (x,y)|(z,v) = (y'|v', (x|z)') on A^2, where ' is `inv`. Throws Error
/// unless inv(x) = x|x for every x.
Groupoid twist_sheffer(Groupoid const& g, ElementMap const& inv);

struct BaseEmbedding {
  ElementMap map;   // x -> (x,a), as flat pair indices
  Verdict verdict;  // injective strong homomorphism into (A^2, S)
};

/// Throws Error when (a,a) is not in R.
BaseEmbedding embed_base(RelationalSystem const& sys, Element a);

/// (L(x,x'), U(y,y')) in R for all x,y, with empty cones related
/// vacuously. Throws Error without an involution.
Verdict is_kleene(RelationalSystem const& sys);

/// P_a = { (x,y) | (L(x,y), a) in R and (a, U(x,y)) in R }, as flat
/// pair indices.
ElementSet p_a_subset(RelationalSystem const& sys, Element a);

struct KleeneSubsystem {
  RelationalSystem system;       // (P_a, T, *) with T = S restricted to P_a
  std::vector<Element> members;  // flat pair index of each element of `system`
  DrsiReport drsi;
  Verdict kleene;                // cones taken inside (P_a, T)
  Verdict kleene_ambient;        // cones taken in the whole twist-product
  ElementMap embedding;          // x -> (x,a), into `system`
  Verdict embedding_verdict;     // injective strong homomorphism

  bool passes() const {
    return drsi.passes() && kleene.holds && embedding_verdict.holds;
  }
};

/// Throws Error when sys is not directed, or when P_a is not closed
/// under * (which the construction rules out).
KleeneSubsystem kleene_subsystem(RelationalSystem const& sys, Element a);

}  // namespace shefferkit
