#pragma once

#include <cstdint>
#include <iosfwd>

namespace silt {

inline constexpr std::uint32_t kDefaultCharacteristic = 32003;

namespace detail {
inline std::uint32_t g_characteristic = kDefaultCharacteristic;
}

/// Characteristic p of the prime field all computations run over.
inline std::uint32_t field_characteristic() noexcept { return detail::g_characteristic; }

/// Changes the global characteristic. Must be called before any algebra is
/// built; values computed under a different p are meaningless afterwards.
/// Throws std::invalid_argument unless p is a prime below 2^31.
void set_field_characteristic(std::uint32_t p);

bool is_prime(std::uint32_t n) noexcept;

/// Element of F_p, always stored reduced.
class Fp {
 public:
  constexpr Fp() = default;
  Fp(std::int64_t v) {  // NOLINT(google-explicit-constructor)
    const auto p = static_cast<std::int64_t>(field_characteristic());
    v %= p;
    if (v < 0) v += p;
    value_ = static_cast<std::uint32_t>(v);
  }

  std::uint32_t value() const noexcept { return value_; }
  bool is_zero() const noexcept { return value_ == 0; }

  /// Representative in (-p/2, p/2], handy for printing signs.
  std::int64_t signed_value() const noexcept {
    const std::uint32_t p = field_characteristic();
    return value_ > p / 2 ? static_cast<std::int64_t>(value_) - p : value_;
  }

  Fp inverse() const;

  Fp& operator+=(Fp o) noexcept {
    const std::uint32_t p = field_characteristic();
    value_ += o.value_;
    if (value_ >= p) value_ -= p;
    return *this;
  }
  Fp& operator-=(Fp o) noexcept {
    const std::uint32_t p = field_characteristic();
    value_ = value_ >= o.value_ ? value_ - o.value_ : value_ + p - o.value_;
    return *this;
  }
  Fp& operator*=(Fp o) noexcept {
    value_ = static_cast<std::uint32_t>((static_cast<std::uint64_t>(value_) * o.value_) %
                                        field_characteristic());
    return *this;
  }
  Fp& operator/=(Fp o) { return *this *= o.inverse(); }

  friend Fp operator+(Fp a, Fp b) noexcept { return a += b; }
  friend Fp operator-(Fp a, Fp b) noexcept { return a -= b; }
  friend Fp operator*(Fp a, Fp b) noexcept { return a *= b; }
  friend Fp operator/(Fp a, Fp b) { return a /= b; }
  Fp operator-() const noexcept { return Fp{} - *this; }

  friend bool operator==(Fp a, Fp b) noexcept { return a.value_ == b.value_; }
  friend bool operator!=(Fp a, Fp b) noexcept { return a.value_ != b.value_; }

 private:
  std::uint32_t value_ = 0;
};

std::ostream& operator<<(std::ostream& os, Fp x);

}  // namespace silt
