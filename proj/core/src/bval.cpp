#include "bitopo/bval.hpp"

namespace bitopo {

std::optional<BVal> parse_bval(std::string_view token) {
  if (token == "0") return BVal::bot;
  if (token == "ff") return BVal::ff;
  if (token == "tt") return BVal::tt;
  if (token == "1") return BVal::top;
  return std::nullopt;
}

}  // namespace bitopo
