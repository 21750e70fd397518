#include "bitopo/bset.hpp"

#include <sstream>

namespace bitopo {

namespace {

void require_subset(const Carrier& c, Mask m, std::string_view what) {
  if (m & ~c.full())
    throw ValidationError(std::string(what) + ": set not within carrier");
}

}  // namespace

BSet::BSet(CarrierPtr carrier, Mask tcut, Mask fcut)
    : carrier_(std::move(carrier)), tcut_(tcut), fcut_(fcut) {
  require_subset(*carrier_, tcut_, "BSet tt-cut");
  require_subset(*carrier_, fcut_, "BSet ff-cut");
}

BSet BSet::constant(CarrierPtr carrier, BVal b) {
  const Mask full = carrier->full();
  return BSet(std::move(carrier), has_tt(b) ? full : 0, has_ff(b) ? full : 0);
}

BSet BSet::scaled(CarrierPtr carrier, BVal b, Mask points) {
  require_subset(*carrier, points, "scaled set");
  return BSet(std::move(carrier), has_tt(b) ? points : 0,
              has_ff(b) ? points : 0);
}

BSet BSet::point(CarrierPtr carrier, std::size_t x) {
  if (x >= carrier->size())
    throw ValidationError("point not in carrier");
  const Mask m = mask_bit(x);
  return BSet(std::move(carrier), m, m);
}

BVal BSet::value_at(std::size_t x) const {
  if (x >= carrier_->size())
    throw ValidationError("point not in carrier");
  return bval_of(mask_test(tcut_, x), mask_test(fcut_, x));
}

BVal BSet::value_at(std::string_view point_name) const {
  return value_at(carrier_->index_of(point_name));
}

BSet meet(const BSet& a, const BSet& b) {
  require_same_carrier(a.carrier(), b.carrier(), "meet");
  return BSet(a.carrier(), a.tcut() & b.tcut(), a.fcut() & b.fcut());
}

BSet join(const BSet& a, const BSet& b) {
  require_same_carrier(a.carrier(), b.carrier(), "join");
  return BSet(a.carrier(), a.tcut() | b.tcut(), a.fcut() | b.fcut());
}

BSet neg(const BSet& a) {
  const Mask full = a.carrier()->full();
  return BSet(a.carrier(), ~a.tcut() & full, ~a.fcut() & full);
}

BSet scalar_meet(BVal b, const BSet& a) {
  return BSet(a.carrier(), has_tt(b) ? a.tcut() : 0, has_ff(b) ? a.fcut() : 0);
}

BSet scalar_implies(BVal b, const BSet& a) {
  const Mask full = a.carrier()->full();
  // neg(b) v a componentwise: a component is forced full when b lacks it.
  return BSet(a.carrier(), has_tt(b) ? a.tcut() : full,
              has_ff(b) ? a.fcut() : full);
}

bool pointwise_leq(const BSet& a, const BSet& b) {
  require_same_carrier(a.carrier(), b.carrier(), "pointwise_leq");
  return (a.tcut() & ~b.tcut()) == 0 && (a.fcut() & ~b.fcut()) == 0;
}

BVal sub(const BSet& a, const BSet& b) {
  require_same_carrier(a.carrier(), b.carrier(), "sub");
  return bval_of((a.tcut() & ~b.tcut()) == 0, (a.fcut() & ~b.fcut()) == 0);
}

BVal sup(const BSet& a) { return bval_of(a.tcut() != 0, a.fcut() != 0); }

std::string format_bset(const BSet& s) {
  return "tt" + s.carrier()->format_set(s.tcut()) + " ff" +
         s.carrier()->format_set(s.fcut());
}

namespace {

// Reads "prefix{name name ...}" starting at pos; advances pos past it.
Mask parse_braced_set(const Carrier& carrier, std::string_view text,
                      std::size_t& pos, std::string_view prefix) {
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
    ++pos;
  if (text.substr(pos, prefix.size()) != prefix)
    throw ValidationError("expected '" + std::string(prefix) +
                          "{...}' in B-set literal");
  pos += prefix.size();
  if (pos >= text.size() || text[pos] != '{')
    throw ValidationError("expected '{' after '" + std::string(prefix) + "'");
  ++pos;
  Mask m = 0;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    m |= mask_bit(carrier.index_of(token));
    token.clear();
  };
  for (; pos < text.size(); ++pos) {
    const char c = text[pos];
    if (c == '}') {
      flush();
      ++pos;
      return m;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      flush();
    } else {
      token += c;
    }
  }
  throw ValidationError("unterminated '{' in B-set literal");
}

}  // namespace

BSet parse_bset(const CarrierPtr& carrier, std::string_view text) {
  std::size_t pos = 0;
  const Mask t = parse_braced_set(*carrier, text, pos, "tt");
  const Mask f = parse_braced_set(*carrier, text, pos, "ff");
  while (pos < text.size()) {
    if (!std::isspace(static_cast<unsigned char>(text[pos])))
      throw ValidationError("trailing input in B-set literal");
    ++pos;
  }
  return BSet(carrier, t, f);
}

}  // namespace bitopo
