#include "diagwin/field.hpp"

#include "diagwin/error.hpp"

namespace diagwin {

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e != 0) {
    if (e & 1)
      r = mul_mod(r, a, m);
    a = mul_mod(a, a, m);
    e >>= 1;
  }
  return r;
}

} // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2)
    return false;
  for (std::uint64_t q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % q == 0)
      return n == q;
  }
  std::uint64_t d = n - 1;
  int twos = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++twos;
  }
  // These witnesses are deterministic for all 64-bit n.
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1)
      continue;
    bool composite = true;
    for (int t = 1; t < twos && composite; ++t) {
      x = mul_mod(x, x, n);
      composite = x != n - 1;
    }
    if (composite)
      return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  if (p >= (std::uint64_t{1} << 62) || !is_prime(p))
    throw DomainError("field characteristic " + std::to_string(p) +
                      " is not a prime below 2^62");
}

PrimeField::Element PrimeField::from_int(std::int64_t v) const {
  const auto p = static_cast<std::int64_t>(p_);
  const std::int64_t r = v % p;
  return static_cast<Element>(r < 0 ? r + p : r);
}

PrimeField::Element PrimeField::inv(Element a) const {
  if (a == 0)
    throw DomainError("inverse of zero in GF(" + std::to_string(p_) + ")");
  return pow_mod(a, p_ - 2, p_);
}

std::string PrimeField::to_string(Element a) const {
  if (is_negative(a))
    return "-" + std::to_string(p_ - a);
  return std::to_string(a);
}

RationalField::Element RationalField::inv(const Element& a) const {
  if (sgn(a) == 0)
    throw DomainError("inverse of zero in Q");
  return 1 / a;
}

} // namespace diagwin
