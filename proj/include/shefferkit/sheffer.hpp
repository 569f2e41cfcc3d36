#pragma once

// Sheffer axioms, the built-in law catalog and checks derived from it.

#include <string>
#include <string_view>
#include <vector>

#include "shefferkit/groupoid.hpp"
#include "shefferkit/relcore.hpp"
#include "shefferkit/terms.hpp"

namespace shefferkit {

struct CatalogEntry {
  std::string key;
  std::string text;
  Law law;
};

/// Built-in laws, keyed by stable names:
///   AX1     (x|y)|(x|x) = x
///   AX2     (x|y)|(y|y) = y
///   COMM    x|y = y|x
///   SYM7    ((x|y)|(x|y))|x = x|x                      symmetry of R
///   TRANS8  x|(u|u) = u, u = ((x|y)|(x|y))|z            transitivity of R
///   CD3     (x|y)|(x|x) = (x|x)|(x|y)
///   CD9     (x|y)|(y|y) = (y|y)|(x|y)
///   ANTISYM x|y = y' & y|x = x' => x = y                antisymmetry of R
///   BOUND0  (0|0)|x = x|x
///   BOUND1  x|(1|1) = 1
///   COMPL   x|y' = y & x'|y' = y => y = 1
std::vector<CatalogEntry> const& law_catalog();

/// Throws Error for an unknown key.
CatalogEntry const& catalog_entry(std::string_view key);

/// AX1 and AX2; the failure reason names the violated axiom.
Verdict is_sheffer(Groupoid const& g);

/// x -> x|x. Throws Error unless g is a Sheffer groupoid.
ElementMap derived_involution(Groupoid const& g);

/// Checks a catalog law. Throws Error for an unknown key or when the law
/// mentions 0/1 and g has no designated bounds.
Verdict check_named(Groupoid const& g, std::string_view key);

/// m(x,y,z) = ((x|y)|(x|z))'|(y|z) must satisfy m(x,z,z) = z,
/// m(x,y,x) = x and m(x,x,z) = x at every triple.
Verdict majority_check(Groupoid const& g);

Verdict antisymmetry_quasi_check(Groupoid const& g);

}  // namespace shefferkit
