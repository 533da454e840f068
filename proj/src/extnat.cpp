#include "wbo/extnat.hpp"

#include <cctype>

namespace wbo {

std::optional<ExtNat> parse_extnat(std::string_view token) {
  if (token == "omega") return ExtNat::omega();
  if (token.empty()) return std::nullopt;
  std::uint64_t v = 0;
  for (char c : token) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
    std::uint64_t d = static_cast<std::uint64_t>(c - '0');
    if (__builtin_mul_overflow(v, std::uint64_t{10}, &v)) return std::nullopt;
    if (__builtin_add_overflow(v, d, &v)) return std::nullopt;
  }
  if (ExtNat(v).is_omega()) return std::nullopt;
  return ExtNat(v);
}

}  // namespace wbo
