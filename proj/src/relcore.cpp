#include "shefferkit/relcore.hpp"

#include <string>

namespace shefferkit {

namespace {

void check_index(std::size_t n, Element e) {
  if (e >= n) {
    throw Error("element index " + std::to_string(e) + " out of range for carrier of size " +
                std::to_string(n));
  }
}

}  // namespace

BinaryRelation::BinaryRelation(std::size_t n) : n_(n), rows_(n, 0), cols_(n, 0) {
  if (n > kMaxCarrier) throw Error("relation size exceeds cap of 64");
}

BinaryRelation BinaryRelation::diagonal(std::size_t n) {
  BinaryRelation r(n);
  for (Element i = 0; i < n; ++i) r.set(i, i);
  return r;
}

BinaryRelation BinaryRelation::full(std::size_t n) {
  BinaryRelation r(n);
  for (Element i = 0; i < n; ++i) {
    for (Element j = 0; j < n; ++j) r.set(i, j);
  }
  return r;
}

BinaryRelation BinaryRelation::from_matrix(std::size_t n, std::vector<bool> const& cells) {
  if (cells.size() != n * n) throw Error("relation matrix must have n*n entries");
  BinaryRelation r(n);
  for (Element i = 0; i < n; ++i) {
    for (Element j = 0; j < n; ++j) {
      if (cells[i * n + j]) r.set(i, j);
    }
  }
  return r;
}

BinaryRelation BinaryRelation::from_rows(std::size_t n, std::vector<std::uint64_t> rows) {
  if (rows.size() != n) throw Error("relation needs one row per element");
  BinaryRelation r(n);
  std::uint64_t mask = ElementSet::all(n).bits();
  for (Element i = 0; i < n; ++i) {
    if ((rows[i] & ~mask) != 0) throw Error("relation row has bits outside the carrier");
    for (std::uint64_t b = rows[i]; b != 0; b &= b - 1) {
      r.cols_[static_cast<std::size_t>(std::countr_zero(b))] |= std::uint64_t{1} << i;
    }
  }
  r.rows_ = std::move(rows);
  return r;
}

void BinaryRelation::set(Element x, Element y, bool value) {
  check_index(n_, x);
  check_index(n_, y);
  if (value) {
    rows_[x] |= std::uint64_t{1} << y;
    cols_[y] |= std::uint64_t{1} << x;
  } else {
    rows_[x] &= ~(std::uint64_t{1} << y);
    cols_[y] &= ~(std::uint64_t{1} << x);
  }
}

BinaryRelation BinaryRelation::converse() const {
  BinaryRelation r(n_);
  r.rows_ = cols_;
  r.cols_ = rows_;
  return r;
}

ElementMap::ElementMap(std::size_t codomain_size, std::vector<Element> image)
    : codomain_size_(codomain_size), image_(std::move(image)) {
  for (Element e : image_) {
    if (e >= codomain_size_) {
      throw Error("map image " + std::to_string(e) + " outside codomain of size " +
                  std::to_string(codomain_size_));
    }
  }
}

ElementMap ElementMap::identity(std::size_t n) {
  std::vector<Element> image(n);
  for (Element i = 0; i < n; ++i) image[i] = i;
  return ElementMap(n, std::move(image));
}

bool ElementMap::injective() const {
  std::vector<bool> seen(codomain_size_, false);
  for (Element e : image_) {
    if (seen[e]) return false;
    seen[e] = true;
  }
  return true;
}

bool ElementMap::surjective() const {
  std::vector<bool> seen(codomain_size_, false);
  std::size_t hit = 0;
  for (Element e : image_) {
    if (!seen[e]) {
      seen[e] = true;
      ++hit;
    }
  }
  return hit == codomain_size_;
}

RelationalSystem::RelationalSystem(Carrier carrier, BinaryRelation relation,
                                   std::optional<ElementMap> involution,
                                   std::optional<Element> bottom, std::optional<Element> top)
    : carrier_(std::move(carrier)),
      relation_(std::move(relation)),
      involution_(std::move(involution)),
      bottom_(bottom),
      top_(top) {
  std::size_t n = carrier_.size();
  if (relation_.size() != n) throw Error("relation size does not match carrier size");
  if (involution_ && (involution_->domain_size() != n || involution_->codomain_size() != n)) {
    throw Error("involution must be a self-map of the carrier");
  }
  if (bottom_) check_index(n, *bottom_);
  if (top_) check_index(n, *top_);
}

ElementMap const& RelationalSystem::involution() const {
  if (!involution_) throw Error("relational system has no involution");
  return *involution_;
}

RelationalSystem RelationalSystem::with_involution(std::optional<ElementMap> u) const {
  return RelationalSystem(carrier_, relation_, std::move(u), bottom_, top_);
}

RelationalSystem RelationalSystem::with_bounds(std::optional<Element> bottom,
                                               std::optional<Element> top) const {
  return RelationalSystem(carrier_, relation_, involution_, bottom, top);
}

bool RelationalSystem::same_structure(RelationalSystem const& other) const {
  return size() == other.size() && relation_ == other.relation_ &&
         involution_ == other.involution_ && bottom_ == other.bottom_ && top_ == other.top_;
}

ElementSet upper_cone(BinaryRelation const& rel, Element a, Element b) {
  check_index(rel.size(), a);
  check_index(rel.size(), b);
  return rel.successors(a) & rel.successors(b);
}

ElementSet upper_cone(RelationalSystem const& sys, Element a, Element b) {
  return upper_cone(sys.relation(), a, b);
}

ElementSet lower_cone(BinaryRelation const& rel, Element a, Element b) {
  check_index(rel.size(), a);
  check_index(rel.size(), b);
  return rel.predecessors(a) & rel.predecessors(b);
}

ElementSet lower_cone(RelationalSystem const& sys, Element a, Element b) {
  return lower_cone(sys.relation(), a, b);
}

ElementSet image_of(ElementSet set, ElementMap const& map) {
  ElementSet out;
  for (Element e : set.elements()) out.insert(map(e));
  return out;
}

PropertyReport relation_properties(BinaryRelation const& rel) {
  PropertyReport rep;
  Element n = static_cast<Element>(rel.size());
  for (Element x = 0; x < n && rep.reflexive; ++x) {
    if (!rel.related(x, x)) {
      rep.reflexive = false;
      rep.reflexive_witness = {x};
    }
  }
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (!rel.related(x, y)) continue;
      if (rep.symmetric && !rel.related(y, x)) {
        rep.symmetric = false;
        rep.symmetric_witness = {x, y};
      }
      if (rep.antisymmetric && x != y && rel.related(y, x)) {
        rep.antisymmetric = false;
        rep.antisymmetric_witness = {x, y};
      }
      if (rep.transitive) {
        // z ranges over successors of y that are not successors of x.
        std::uint64_t missing = rel.successors(y).bits() & ~rel.successors(x).bits();
        if (missing != 0) {
          rep.transitive = false;
          rep.transitive_witness = {x, y, ElementSet(missing).min()};
        }
      }
    }
  }
  return rep;
}

Verdict is_directed(BinaryRelation const& rel) {
  Element n = static_cast<Element>(rel.size());
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (upper_cone(rel, x, y).empty()) return Verdict::fail("upper cone empty", {x, y});
      if (lower_cone(rel, x, y).empty()) return Verdict::fail("lower cone empty", {x, y});
    }
  }
  return Verdict::pass();
}

Verdict is_directed(RelationalSystem const& sys) { return is_directed(sys.relation()); }

Verdict check_involution(BinaryRelation const& rel, ElementMap const& u) {
  Element n = static_cast<Element>(rel.size());
  if (u.domain_size() != n || u.codomain_size() != n) {
    throw Error("involution must be a self-map of the carrier");
  }
  for (Element x = 0; x < n; ++x) {
    if (u(u(x)) != x) return Verdict::fail("not of period 2", {x});
  }
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (rel.related(x, y) && !rel.related(u(y), u(x))) {
        return Verdict::fail("not antitone", {x, y});
      }
    }
  }
  return Verdict::pass();
}

Verdict check_involution(RelationalSystem const& sys, ElementMap const& u) {
  return check_involution(sys.relation(), u);
}

DrsiReport validate_drsi(RelationalSystem const& sys) {
  ElementMap const& u = sys.involution();
  DrsiReport rep;
  PropertyReport props = relation_properties(sys.relation());
  if (!props.reflexive) rep.reflexive = Verdict::fail("not reflexive", props.reflexive_witness);
  rep.directed = is_directed(sys);
  rep.involution = check_involution(sys, u);
  if (rep.involution.holds) {
    Element n = static_cast<Element>(sys.size());
    for (Element x = 0; x < n && rep.cone_duality.holds; ++x) {
      for (Element y = 0; y < n; ++y) {
        if (lower_cone(sys, x, y) != image_of(upper_cone(sys, u(x), u(y)), u)) {
          rep.cone_duality = Verdict::fail("L(x,y) differs from U(x',y')'", {x, y});
          break;
        }
      }
    }
  }
  return rep;
}

Verdict check_bounded(RelationalSystem const& sys) {
  if (!sys.has_bounds()) throw Error("bounds not designated");
  Element zero = *sys.bottom();
  Element one = *sys.top();
  for (Element x = 0; x < sys.size(); ++x) {
    if (!sys.related(zero, x)) return Verdict::fail("(0,x) not in R", {zero, x});
    if (!sys.related(x, one)) return Verdict::fail("(x,1) not in R", {x, one});
  }
  return Verdict::pass();
}

Verdict check_complemented(RelationalSystem const& sys) {
  if (!sys.has_bounds()) throw Error("bounds not designated");
  ElementMap const& u = sys.involution();
  Verdict bounded = check_bounded(sys);
  if (!bounded) return bounded;
  Element zero = *sys.bottom();
  Element one = *sys.top();
  if (u(zero) != one) return Verdict::fail("0' differs from 1", {zero});
  for (Element x = 0; x < sys.size(); ++x) {
    if (upper_cone(sys, x, u(x)) != ElementSet{one}) {
      return Verdict::fail("U(x,x') differs from {1}", {x});
    }
  }
  for (Element x = 0; x < sys.size(); ++x) {
    if (lower_cone(sys, x, u(x)) != ElementSet{zero}) {
      return Verdict::fail("L(x,x') differs from {0}", {x});
    }
  }
  return Verdict::pass();
}

bool set_related(BinaryRelation const& rel, ElementSet from, ElementSet to) {
  for (Element b : from.elements()) {
    if ((rel.successors(b).bits() & to.bits()) != to.bits()) return false;
  }
  return true;
}

}  // namespace shefferkit
