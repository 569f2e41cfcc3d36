#include "shefferkit/groupoid.hpp"

#include <string>

namespace shefferkit {

Groupoid::Groupoid(Carrier carrier, std::vector<Element> table, std::optional<Element> bottom,
                   std::optional<Element> top)
    : carrier_(std::move(carrier)), table_(std::move(table)), bottom_(bottom), top_(top) {
  std::size_t n = carrier_.size();
  if (table_.size() != n * n) {
    throw Error("operation table must have " + std::to_string(n * n) + " entries");
  }
  for (Element e : table_) {
    if (e >= n) throw Error("operation table entry " + std::to_string(e) + " out of range");
  }
  if ((bottom_ && *bottom_ >= n) || (top_ && *top_ >= n)) throw Error("bound out of range");
}

Groupoid::Groupoid(std::size_t n, std::vector<Element> table)
    : Groupoid(Carrier(n), std::move(table)) {}

Groupoid Groupoid::with_bounds(std::optional<Element> bottom, std::optional<Element> top) const {
  return Groupoid(carrier_, table_, bottom, top);
}

Groupoid Groupoid::with_carrier(Carrier carrier) const {
  if (carrier.size() != size()) throw Error("carrier size mismatch");
  return Groupoid(std::move(carrier), table_, bottom_, top_);
}

}  // namespace shefferkit
