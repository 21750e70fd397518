#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

namespace bitopo {

/// The four-element Boolean algebra {0, ff, tt, 1}: a diamond with 0 at the
/// bottom, 1 at the top, and tt, ff an incomparable complemented pair.
/// Encoding: bit 1 = "at least tt", bit 0 = "at least ff". Under this
/// encoding the algebra is the product of two copies of the Booleans, which
/// is what makes every cut computation componentwise. All operations below
/// are nevertheless spelled out as total lookup tables so that exhaustive
/// testing over the 4^2 input pairs is trivial.
enum class BVal : std::uint8_t { bot = 0, ff = 1, tt = 2, top = 3 };

inline constexpr std::array<BVal, 4> kAllBVals{BVal::bot, BVal::ff, BVal::tt,
                                               BVal::top};

namespace detail {

constexpr std::uint8_t bv(BVal a) { return static_cast<std::uint8_t>(a); }

// Row = first argument, column = second argument; order bot, ff, tt, top.
inline constexpr BVal kMeet[4][4] = {
    {BVal::bot, BVal::bot, BVal::bot, BVal::bot},
    {BVal::bot, BVal::ff, BVal::bot, BVal::ff},
    {BVal::bot, BVal::bot, BVal::tt, BVal::tt},
    {BVal::bot, BVal::ff, BVal::tt, BVal::top},
};

inline constexpr BVal kJoin[4][4] = {
    {BVal::bot, BVal::ff, BVal::tt, BVal::top},
    {BVal::ff, BVal::ff, BVal::top, BVal::top},
    {BVal::tt, BVal::top, BVal::tt, BVal::top},
    {BVal::top, BVal::top, BVal::top, BVal::top},
};

inline constexpr BVal kNeg[4] = {BVal::top, BVal::tt, BVal::ff, BVal::bot};

}  // namespace detail

constexpr BVal meet(BVal a, BVal b) {
  return detail::kMeet[detail::bv(a)][detail::bv(b)];
}

constexpr BVal join(BVal a, BVal b) {
  return detail::kJoin[detail::bv(a)][detail::bv(b)];
}

constexpr BVal neg(BVal a) { return detail::kNeg[detail::bv(a)]; }

/// Residual implication a -> b = neg(a) v b.
constexpr BVal implies(BVal a, BVal b) { return join(neg(a), b); }

/// Diamond order: a <= b iff a ^ b = a.
constexpr bool leq(BVal a, BVal b) { return meet(a, b) == a; }

constexpr bool has_tt(BVal a) { return leq(BVal::tt, a); }
constexpr bool has_ff(BVal a) { return leq(BVal::ff, a); }

/// The unique value with the given tt/ff components.
constexpr BVal bval_of(bool tt_part, bool ff_part) {
  return static_cast<BVal>((tt_part ? 2 : 0) | (ff_part ? 1 : 0));
}

/// Canonical tokens, used verbatim by the file format and all reports.
constexpr std::string_view to_token(BVal a) {
  switch (a) {
    case BVal::bot: return "0";
    case BVal::ff: return "ff";
    case BVal::tt: return "tt";
    case BVal::top: return "1";
  }
  return "?";
}

std::optional<BVal> parse_bval(std::string_view token);

}  // namespace bitopo
