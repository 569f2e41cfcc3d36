#include "shefferkit/sheffer.hpp"

#include <array>
#include <utility>

namespace shefferkit {

std::vector<CatalogEntry> const& law_catalog() {
  static std::vector<CatalogEntry> const catalog = [] {
    constexpr std::array<std::pair<char const*, char const*>, 11> texts{{
        {"AX1", "(x|y)|(x|x) = x"},
        {"AX2", "(x|y)|(y|y) = y"},
        {"COMM", "x|y = y|x"},
        {"SYM7", "((x|y)|(x|y))|x = x|x"},
        {"TRANS8", "x|((((x|y)|(x|y))|z)|(((x|y)|(x|y))|z)) = ((x|y)|(x|y))|z"},
        {"CD3", "(x|y)|(x|x) = (x|x)|(x|y)"},
        {"CD9", "(x|y)|(y|y) = (y|y)|(x|y)"},
        {"ANTISYM", "x|y = y|y & y|x = x|x => x = y"},
        {"BOUND0", "(0|0)|x = x|x"},
        {"BOUND1", "x|(1|1) = 1"},
        {"COMPL", "x|(y|y) = y & (x|x)|(y|y) = y => y = 1"},
    }};
    std::vector<CatalogEntry> out;
    for (auto const& [key, text] : texts) out.push_back({key, text, parse_law(text)});
    return out;
  }();
  return catalog;
}

CatalogEntry const& catalog_entry(std::string_view key) {
  for (auto const& e : law_catalog()) {
    if (e.key == key) return e;
  }
  throw Error("unknown catalog key '" + std::string(key) + "'");
}

Verdict is_sheffer(Groupoid const& g) {
  for (char const* key : {"AX1", "AX2"}) {
    Verdict v = check_law(g, catalog_entry(key).law);
    if (!v) {
      v.reason = key;
      return v;
    }
  }
  return Verdict::pass();
}

ElementMap derived_involution(Groupoid const& g) {
  if (!is_sheffer(g)) throw Error("not a Sheffer groupoid");
  std::vector<Element> image(g.size());
  for (Element x = 0; x < g.size(); ++x) image[x] = g.prime(x);
  return ElementMap(g.size(), std::move(image));
}

Verdict check_named(Groupoid const& g, std::string_view key) {
  CatalogEntry const& e = catalog_entry(key);
  Verdict v = check_law(g, e.law);
  if (!v) v.reason = e.key;
  return v;
}

Verdict majority_check(Groupoid const& g) {
  auto const n = static_cast<Element>(g.size());
  auto m = [&g](Element x, Element y, Element z) {
    return g.op(g.prime(g.op(g.op(x, y), g.op(x, z))), g.op(y, z));
  };
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (m(x, y, y) != y) return Verdict::fail("m(x,z,z) = z", {x, y}, {"x", "z"});
      if (m(x, y, x) != x) return Verdict::fail("m(x,y,x) = x", {x, y}, {"x", "y"});
      if (m(x, x, y) != x) return Verdict::fail("m(x,x,z) = x", {x, y}, {"x", "z"});
    }
  }
  return Verdict::pass();
}

Verdict antisymmetry_quasi_check(Groupoid const& g) { return check_named(g, "ANTISYM"); }

}  // namespace shefferkit
