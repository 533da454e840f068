#ifndef WBO_EXTNAT_HPP
#define WBO_EXTNAT_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "wbo/error.hpp"

namespace wbo {

/// A natural number extended with the symbol omega (countable infinity).
/// Arithmetic saturates at omega; omega is greater than every finite value.
/// Subtraction from omega is deliberately not provided.
class ExtNat {
 public:
  constexpr ExtNat() : v_(0) {}
  constexpr ExtNat(std::uint64_t v) : v_(v) {}  // NOLINT: implicit by design

  static constexpr ExtNat omega() {
    ExtNat n;
    n.v_ = kOmega;
    return n;
  }

  constexpr bool is_omega() const { return v_ == kOmega; }
  constexpr bool is_finite() const { return v_ != kOmega; }

  std::uint64_t value() const {
    if (is_omega()) fail(ErrorKind::Internal, "value() on omega");
    return v_;
  }

  ExtNat operator+(ExtNat o) const {
    if (is_omega() || o.is_omega()) return omega();
    std::uint64_t r = 0;
    if (__builtin_add_overflow(v_, o.v_, &r) || r == kOmega)
      fail(ErrorKind::Internal, "ExtNat overflow");
    return ExtNat(r);
  }
  ExtNat& operator+=(ExtNat o) { return *this = *this + o; }

  ExtNat operator*(ExtNat o) const {
    if (v_ == 0 || o.v_ == 0) return ExtNat(0);
    if (is_omega() || o.is_omega()) return omega();
    std::uint64_t r = 0;
    if (__builtin_mul_overflow(v_, o.v_, &r) || r == kOmega)
      fail(ErrorKind::Internal, "ExtNat overflow");
    return ExtNat(r);
  }

  // Finite subtraction only; omega - x is undefined by design.
  ExtNat operator-(ExtNat o) const {
    if (is_omega() || o.is_omega() || o.v_ > v_) fail(ErrorKind::Internal, "bad ExtNat subtraction");
    return ExtNat(v_ - o.v_);
  }

  // Omega is encoded as the maximal raw value, so the default comparison
  // gives the intended total order.
  friend constexpr auto operator<=>(ExtNat a, ExtNat b) = default;

 private:
  static constexpr std::uint64_t kOmega = ~std::uint64_t{0};
  std::uint64_t v_;
};

inline ExtNat floor_half(ExtNat n) {
  if (n.is_omega()) return ExtNat::omega();
  return ExtNat(n.value() / 2);
}

inline std::string to_string(ExtNat n) { return n.is_omega() ? "omega" : std::to_string(n.value()); }

std::optional<ExtNat> parse_extnat(std::string_view token);

}  // namespace wbo

#endif
