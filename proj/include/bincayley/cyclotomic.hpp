#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace bincayley {

// Coefficients of the m-th cyclotomic polynomial, constant term first.
const std::vector<std::int64_t>& cyclotomic_polynomial(int m);
int euler_phi(int m);

// Element of Z[z] with z a primitive m-th root of unity. Stored as an
// unreduced exponent vector of length m; equality and integrality are decided
// on the remainder modulo the m-th cyclotomic polynomial.
class CyclotomicValue {
 public:
  explicit CyclotomicValue(int m);

  static CyclotomicValue root_power(int m, std::int64_t e);  // z^e
  static CyclotomicValue integer(int m, std::int64_t v);

  int order() const { return static_cast<int>(coeffs_.size()); }
  const std::vector<std::int64_t>& coefficients() const { return coeffs_; }

  void add_power(std::int64_t e, std::int64_t c);  // += c * z^e
  CyclotomicValue& operator+=(const CyclotomicValue& o);
  CyclotomicValue& operator-=(const CyclotomicValue& o);
  CyclotomicValue& operator*=(std::int64_t c);
  friend CyclotomicValue operator*(const CyclotomicValue& a, const CyclotomicValue& b);

  CyclotomicValue conjugate() const;  // z -> z^-1

  // Canonical form: degree below phi(m).
  std::vector<std::int64_t> reduced() const;
  bool is_zero() const;
  std::optional<std::int64_t> as_integer() const;

  // Reduced form as a polynomial in z, e.g. "2 + 3*z - z^2".
  std::string to_string() const;

  friend bool operator==(const CyclotomicValue& a, const CyclotomicValue& b);

 private:
  std::vector<std::int64_t> coeffs_;
};

}  // namespace bincayley
