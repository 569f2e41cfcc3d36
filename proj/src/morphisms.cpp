#include "shefferkit/morphisms.hpp"

#include <numeric>

#include "shefferkit/bridge.hpp"
#include "shefferkit/sheffer.hpp"

namespace shefferkit {

namespace {

void require_map(ElementMap const& f, std::size_t from, std::size_t to) {
  if (f.domain_size() != from || f.codomain_size() != to) {
    throw Error("map does not go from a carrier of size " + std::to_string(from) +
                " to one of size " + std::to_string(to));
  }
}

void require_drsi(RelationalSystem const& sys, char const* which) {
  if (!validate_drsi(sys).passes()) {
    throw Error(std::string(which) + " is not a directed relational system with involution");
  }
}

std::vector<Element> normalize_blocks(std::vector<Element> const& raw) {
  std::vector<Element> out(raw.size());
  std::vector<std::pair<Element, Element>> seen;  // raw id -> dense id
  for (std::size_t i = 0; i < raw.size(); ++i) {
    Element id = static_cast<Element>(seen.size());
    for (auto const& [r, d] : seen) {
      if (r == raw[i]) {
        id = d;
        break;
      }
    }
    if (id == seen.size()) seen.emplace_back(raw[i], id);
    out[i] = id;
  }
  return out;
}

/// Shared depth-first search over partial maps 0..k. `consistent(k)`
/// checks every constraint whose elements are all among 0..k.
class MapSearch {
 public:
  MapSearch(std::size_t from, std::size_t to, HomSearchOptions const& opts)
      : from_(from), to_(to), opts_(opts), image_(from, 0), uses_(to, 0) {}

  template <typename Consistent>
  void run(Consistent const& consistent, std::function<bool(ElementMap const&)> const& visit) {
    stop_ = false;
    descend(0, consistent, visit);
  }

  std::vector<Element> const& image() const { return image_; }

 private:
  template <typename Consistent>
  void descend(std::size_t k, Consistent const& consistent,
               std::function<bool(ElementMap const&)> const& visit) {
    if (k == from_) {
      if (!visit(ElementMap(to_, image_))) stop_ = true;
      return;
    }
    for (Element v = 0; v < to_ && !stop_; ++v) {
      if (opts_.injective && uses_[v] > 0) continue;
      image_[k] = v;
      ++uses_[v];
      if (uses_[v] == 1) ++covered_;
      bool ok = true;
      if (opts_.surjective && (to_ - covered_) > (from_ - k - 1)) ok = false;
      if (ok && consistent(k)) descend(k + 1, consistent, visit);
      if (uses_[v] == 1) --covered_;
      --uses_[v];
    }
  }

  std::size_t from_;
  std::size_t to_;
  HomSearchOptions opts_;
  std::vector<Element> image_;
  std::vector<std::size_t> uses_;
  std::size_t covered_ = 0;
  bool stop_ = false;
};

}  // namespace

EquivalenceRelation::EquivalenceRelation(std::vector<Element> block_of)
    : block_of_(normalize_blocks(block_of)) {
  for (Element b : block_of_) blocks_ = std::max<std::size_t>(blocks_, b + 1);
}

EquivalenceRelation EquivalenceRelation::diagonal(std::size_t n) {
  std::vector<Element> ids(n);
  std::iota(ids.begin(), ids.end(), Element{0});
  return EquivalenceRelation(std::move(ids));
}

EquivalenceRelation EquivalenceRelation::single_block(std::size_t n) {
  return EquivalenceRelation(std::vector<Element>(n, 0));
}

ElementMap EquivalenceRelation::quotient_map() const { return ElementMap(blocks_, block_of_); }

Verdict is_rel_homomorphism(RelationalSystem const& src, RelationalSystem const& dst,
                            ElementMap const& f, bool strong) {
  require_map(f, src.size(), dst.size());
  auto const n = static_cast<Element>(src.size());
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      bool r = src.related(x, y);
      bool s = dst.related(f(x), f(y));
      if (r && !s) return Verdict::fail("related pair maps to unrelated pair", {x, y});
      if (strong && s && !r) return Verdict::fail("unrelated pair maps to related pair", {x, y});
    }
  }
  if (src.has_involution() && dst.has_involution()) {
    for (Element x = 0; x < n; ++x) {
      if (f(src.prime(x)) != dst.prime(f(x))) return Verdict::fail("f(x') differs from f(x)*", {x});
    }
  }
  return Verdict::pass();
}

Verdict is_groupoid_homomorphism(Groupoid const& ga, Groupoid const& gb, ElementMap const& f) {
  require_map(f, ga.size(), gb.size());
  auto const n = static_cast<Element>(ga.size());
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (f(ga.op(x, y)) != gb.op(f(x), f(y))) {
        return Verdict::fail("f(x|y) differs from f(x)|f(y)", {x, y}, {"x", "y"});
      }
    }
  }
  return Verdict::pass();
}

bool verify_hom_transfer(Groupoid const& ga, Groupoid const& gb, ElementMap const& f) {
  if (!is_sheffer(ga) || !is_sheffer(gb)) throw Error("both groupoids must be Sheffer groupoids");
  if (!is_groupoid_homomorphism(ga, gb, f)) throw Error("map is not a groupoid homomorphism");
  return is_rel_homomorphism(induce_system(ga), induce_system(gb), f, false).holds;
}

void find_system_homomorphisms(RelationalSystem const& src, RelationalSystem const& dst,
                               HomSearchOptions const& opts,
                               std::function<bool(ElementMap const&)> const& visit) {
  bool with_involution = src.has_involution() && dst.has_involution();
  MapSearch search(src.size(), dst.size(), opts);
  auto const& f = search.image();
  auto consistent = [&](std::size_t k) {
    auto const kk = static_cast<Element>(k);
    for (Element i = 0; i <= kk; ++i) {
      for (auto [x, y] : {std::pair{i, kk}, std::pair{kk, i}}) {
        bool r = src.related(x, y);
        bool s = dst.related(f[x], f[y]);
        if (r && !s) return false;
        if (opts.strong && s && !r) return false;
      }
    }
    if (with_involution) {
      for (Element x = 0; x <= kk; ++x) {
        Element xp = src.prime(x);
        if (std::max(x, xp) == kk && f[xp] != dst.prime(f[x])) return false;
      }
    }
    return true;
  };
  search.run(consistent, visit);
}

void find_groupoid_homomorphisms(Groupoid const& src, Groupoid const& dst,
                                 HomSearchOptions const& opts,
                                 std::function<bool(ElementMap const&)> const& visit) {
  MapSearch search(src.size(), dst.size(), opts);
  auto const& f = search.image();
  auto consistent = [&](std::size_t k) {
    auto const kk = static_cast<Element>(k);
    for (Element i = 0; i <= kk; ++i) {
      for (Element j = 0; j <= kk; ++j) {
        Element p = src.op(i, j);
        if (p > kk || std::max({i, j, p}) != kk) continue;
        if (f[p] != dst.op(f[i], f[j])) return false;
      }
    }
    return true;
  };
  search.run(consistent, visit);
}

std::vector<ElementMap> system_homomorphisms(RelationalSystem const& src,
                                             RelationalSystem const& dst,
                                             HomSearchOptions const& opts) {
  std::vector<ElementMap> out;
  find_system_homomorphisms(src, dst, opts, [&](ElementMap const& f) {
    out.push_back(f);
    return true;
  });
  return out;
}

std::vector<ElementMap> groupoid_homomorphisms(Groupoid const& src, Groupoid const& dst,
                                               HomSearchOptions const& opts) {
  std::vector<ElementMap> out;
  find_groupoid_homomorphisms(src, dst, opts, [&](ElementMap const& f) {
    out.push_back(f);
    return true;
  });
  return out;
}

EquivalenceRelation kernel(ElementMap const& f) { return EquivalenceRelation(f.image()); }

Verdict is_congruence(Groupoid const& g, EquivalenceRelation const& eq) {
  if (eq.size() != g.size()) throw Error("carrier size mismatch");
  auto const n = static_cast<Element>(g.size());
  // Compatibility in each argument separately implies compatibility in both.
  for (Element x = 0; x < n; ++x) {
    for (Element xx = 0; xx < n; ++xx) {
      if (!eq.equivalent(x, xx)) continue;
      for (Element y = 0; y < n; ++y) {
        if (!eq.equivalent(g.op(x, y), g.op(xx, y))) {
          return Verdict::fail("x|y not equivalent to x^|y", {x, xx, y}, {"x", "x^", "y"});
        }
        if (!eq.equivalent(g.op(y, x), g.op(y, xx))) {
          return Verdict::fail("y|x not equivalent to y|x^", {x, xx, y}, {"x", "x^", "y"});
        }
      }
    }
  }
  return Verdict::pass();
}

std::vector<EquivalenceRelation> congruences(Groupoid const& g) {
  std::size_t n = g.size();
  std::vector<EquivalenceRelation> out;
  std::vector<Element> rgs(n, 0);
  // Restricted growth strings: rgs[i] <= 1 + max(rgs[0..i-1]).
  std::function<void(std::size_t, Element)> rec = [&](std::size_t i, Element max_id) {
    if (i == n) {
      EquivalenceRelation eq(rgs);
      if (is_congruence(g, eq)) out.push_back(std::move(eq));
      return;
    }
    for (Element b = 0; b <= max_id + 1; ++b) {
      rgs[i] = b;
      rec(i + 1, std::max(max_id, b));
    }
  };
  rgs[0] = 0;
  if (n == 1) {
    out.push_back(EquivalenceRelation::diagonal(1));
  } else {
    rec(1, 0);
  }
  return out;
}

Verdict congruence_lattice_distributive(Groupoid const& g) {
  std::vector<EquivalenceRelation> cons = congruences(g);
  std::size_t n = g.size();
  auto meet = [n](EquivalenceRelation const& a, EquivalenceRelation const& b) {
    std::vector<Element> ids(n);
    for (std::size_t i = 0; i < n; ++i) {
      ids[i] = static_cast<Element>(a.block(static_cast<Element>(i)) * n +
                                    b.block(static_cast<Element>(i)));
    }
    return EquivalenceRelation(ids);
  };
  auto join = [n](EquivalenceRelation const& a, EquivalenceRelation const& b) {
    std::vector<Element> parent(n);
    std::iota(parent.begin(), parent.end(), Element{0});
    std::function<Element(Element)> find = [&](Element x) {
      return parent[x] == x ? x : parent[x] = find(parent[x]);
    };
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) {
        if (a.equivalent(x, y) || b.equivalent(x, y)) parent[find(x)] = find(y);
      }
    }
    std::vector<Element> ids(n);
    for (Element x = 0; x < n; ++x) ids[x] = find(x);
    return EquivalenceRelation(ids);
  };
  for (std::size_t i = 0; i < cons.size(); ++i) {
    for (std::size_t j = 0; j < cons.size(); ++j) {
      for (std::size_t k = 0; k < cons.size(); ++k) {
        auto const& a = cons[i];
        if (meet(a, join(cons[j], cons[k])) != join(meet(a, cons[j]), meet(a, cons[k]))) {
          return Verdict::fail("a^(bvc) differs from (a^b)v(a^c)",
                               {static_cast<Element>(i), static_cast<Element>(j),
                                static_cast<Element>(k)},
                               {"a", "b", "c"});
        }
      }
    }
  }
  return Verdict::pass();
}

Groupoid induced_image_operation(Groupoid const& ga, RelationalSystem const& src_sys,
                                 ElementMap const& f, RelationalSystem const& dst_sys) {
  require_map(f, ga.size(), dst_sys.size());
  if (src_sys.size() != ga.size()) throw Error("source system and groupoid differ in size");
  if (!f.surjective()) throw Error("map is not surjective");
  if (!is_sheffer(ga)) throw Error("source groupoid is not a Sheffer groupoid");
  require_drsi(src_sys, "source system");
  require_drsi(dst_sys, "target system");
  if (!is_assigned(src_sys, ga)) throw Error("source operation is not assigned to the source system");
  if (!is_rel_homomorphism(src_sys, dst_sys, f, true)) throw Error("map is not a strong homomorphism");
  if (!is_congruence(ga, kernel(f))) throw Error("kernel of the map is not a congruence");

  auto const n = static_cast<Element>(ga.size());
  std::size_t m = dst_sys.size();
  constexpr Element kUnset = ~Element{0};
  std::vector<Element> table(m * m, kUnset);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      Element& cell = table[f(x) * m + f(y)];
      Element value = f(ga.op(x, y));
      if (cell != kUnset && cell != value) {
        throw Error("induced operation is ill-defined at (" + dst_sys.carrier().name(f(x)) + "," +
                    dst_sys.carrier().name(f(y)) + ")");
      }
      cell = value;
    }
  }
  return Groupoid(dst_sys.carrier(), std::move(table), dst_sys.bottom(), dst_sys.top());
}

Groupoid bounded_top_assignment(RelationalSystem const& sys) {
  require_drsi(sys, "system");
  if (!check_bounded(sys)) throw Error("system is not bounded");
  auto const n = static_cast<Element>(sys.size());
  Element one = *sys.top();
  std::vector<Element> table(n * n);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      table[x * n + y] = sys.related(sys.prime(x), sys.prime(y)) ? sys.prime(y) : one;
    }
  }
  return Groupoid(sys.carrier(), std::move(table), sys.bottom(), sys.top());
}

bool verify_bounded_hom(RelationalSystem const& sys_a, RelationalSystem const& sys_b,
                        ElementMap const& f) {
  Groupoid ga = bounded_top_assignment(sys_a);
  Groupoid gb = bounded_top_assignment(sys_b);
  if (!is_rel_homomorphism(sys_a, sys_b, f, true)) throw Error("map is not a strong homomorphism");
  if (f(*sys_a.top()) != *sys_b.top()) throw Error("map does not preserve the top element");
  return is_groupoid_homomorphism(ga, gb, f).holds;
}

}  // namespace shefferkit
