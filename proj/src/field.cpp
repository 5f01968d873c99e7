#include "silt/field.hpp"

#include <ostream>
#include <stdexcept>
#include <string>

namespace silt {

bool is_prime(std::uint32_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

void set_field_characteristic(std::uint32_t p) {
  if (p >= (1u << 31) || !is_prime(p))
    throw std::invalid_argument("field characteristic must be a prime below 2^31, got " +
                                std::to_string(p));
  detail::g_characteristic = p;
}

Fp Fp::inverse() const {
  if (value_ == 0) throw std::domain_error("inverse of zero in F_p");
  // extended Euclid on (value, p)
  std::int64_t a = value_, b = field_characteristic(), x0 = 1, x1 = 0;
  while (b != 0) {
    const std::int64_t q = a / b;
    std::int64_t t = a - q * b;
    a = b;
    b = t;
    t = x0 - q * x1;
    x0 = x1;
    x1 = t;
  }
  return Fp(x0);
}

std::ostream& operator<<(std::ostream& os, Fp x) { return os << x.signed_value(); }

}  // namespace silt
