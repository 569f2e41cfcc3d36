#include "shefferkit/common.hpp"

#include <set>
#include <sstream>

namespace shefferkit {

Carrier::Carrier(std::size_t n) {
  if (n == 0) throw Error("carrier must be non-empty");
  if (n > kMaxCarrier) throw Error("carrier size " + std::to_string(n) + " exceeds cap of 64");
  names_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) names_.push_back("e" + std::to_string(i));
}

Carrier::Carrier(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) throw Error("carrier must be non-empty");
  if (names_.size() > kMaxCarrier) {
    throw Error("carrier size " + std::to_string(names_.size()) + " exceeds cap of 64");
  }
  std::set<std::string_view> seen;
  for (auto const& name : names_) {
    if (name.empty()) throw Error("element names must be non-empty");
    if (!seen.insert(name).second) throw Error("duplicate element name '" + name + "'");
  }
}

std::optional<Element> Carrier::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return static_cast<Element>(i);
  }
  return std::nullopt;
}

std::vector<Element> ElementSet::elements() const {
  std::vector<Element> out;
  out.reserve(size());
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
    out.push_back(static_cast<Element>(std::countr_zero(b)));
  }
  return out;
}

std::string describe(Verdict const& v, Carrier const& carrier) {
  if (v.holds) return "holds";
  std::ostringstream os;
  os << "fails";
  if (!v.reason.empty()) os << " (" << v.reason << ")";
  if (!v.witness.empty()) os << ":";
  for (std::size_t i = 0; i < v.witness.size(); ++i) {
    os << ' ';
    if (i < v.labels.size()) os << v.labels[i] << '=';
    os << carrier.name(v.witness[i]);
  }
  if (v.sides) {
    os << " (lhs=" << carrier.name(v.sides->first) << ", rhs=" << carrier.name(v.sides->second)
       << ')';
  }
  return os.str();
}

}  // namespace shefferkit
