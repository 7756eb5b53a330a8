#include <numeric>

#include "specht/sym_modules.hpp"

namespace specht {

RingSpec RingSpec::Zmod(long m) {
  if (m < 2) throw std::invalid_argument("Z/m needs m >= 2");
  return RingSpec{m};
}

RingSpec RingSpec::parse(const std::string& text) {
  if (text == "Z") return Z();
  std::string digits;
  if (text.rfind("Zmod:", 0) == 0)
    digits = text.substr(5);
  else if (text.rfind("Z/", 0) == 0)
    digits = text.substr(2);
  else
    throw std::invalid_argument("ring must be Z or Zmod:m");
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos || digits.size() > 9)
    throw std::invalid_argument("ring modulus must be a positive integer");
  return Zmod(std::stol(digits));
}

std::string RingSpec::to_string() const { return is_z() ? "Z" : "Z/" + std::to_string(m); }

Int RingSpec::reduce(const Int& x) const { return is_z() ? x : floor_mod(x, m); }

Int RingSpec::torsion_generator(long k) const {
  if (is_z()) return 0;
  long g = std::gcd(k, m);
  return m / g;
}

bool RingSpec::in_torsion(const Int& r, long k) const {
  if (is_z()) return r == 0;
  return floor_mod(r * k, m) == 0;
}

long RingSpec::congruence_modulus(long k) const {
  k = k < 0 ? -k : k;
  return is_z() ? k : std::gcd(k, m);
}

Constants constants(int n) {
  Constants c{};
  if (n % 2 == 0) {
    c.na = n / 2;
    c.two_a = 1;
    c.b_n1 = n - 1;
    c.b_n1_n2 = static_cast<long>(n - 1) * (n - 2);
    c.two_b = 2;
  } else {
    c.na = n;
    c.two_a = 2;
    c.b_n1 = (n - 1) / 2;
    c.b_n1_n2 = static_cast<long>(n - 1) / 2 * (n - 2);
    c.two_b = 1;
  }
  return c;
}

}  // namespace specht
