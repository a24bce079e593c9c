#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace diagwin {

/// GF(p) for a prime p < 2^62, elements held as canonical residues.
class PrimeField {
public:
  using Element = std::uint64_t;

  /// Throws DomainError unless p is a prime below 2^62.
  explicit PrimeField(std::uint64_t p);

  std::uint64_t characteristic() const { return p_; }

  Element zero() const { return 0; }
  Element one() const { return 1; }
  Element from_int(std::int64_t v) const;
  bool is_zero(Element a) const { return a == 0; }
  bool is_one(Element a) const { return a == 1; }
  Element add(Element a, Element b) const { return a >= p_ - b ? a - (p_ - b) : a + b; }
  Element sub(Element a, Element b) const { return a >= b ? a - b : a + (p_ - b); }
  Element neg(Element a) const { return a == 0 ? 0 : p_ - a; }
  Element mul(Element a, Element b) const {
    return static_cast<Element>(static_cast<unsigned __int128>(a) * b % p_);
  }
  /// Throws DomainError for zero.
  Element inv(Element a) const;
  /// Symmetric representative, e.g. p - 1 prints as -1.
  std::string to_string(Element a) const;
  bool is_negative(Element a) const { return a > p_ / 2; }

private:
  std::uint64_t p_;
};

/// The rationals, exact via GMP.
class RationalField {
public:
  using Element = mpq_class;

  std::uint64_t characteristic() const { return 0; }

  Element zero() const { return 0; }
  Element one() const { return 1; }
  Element from_int(std::int64_t v) const { return Element(static_cast<long>(v)); }
  bool is_zero(const Element& a) const { return sgn(a) == 0; }
  bool is_one(const Element& a) const { return a == 1; }
  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element neg(const Element& a) const { return -a; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element inv(const Element& a) const;
  std::string to_string(const Element& a) const { return a.get_str(); }
  bool is_negative(const Element& a) const { return sgn(a) < 0; }
};

bool is_prime(std::uint64_t n);

} // namespace diagwin
