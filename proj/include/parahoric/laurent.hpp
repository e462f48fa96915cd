#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

namespace parahoric {

// Exact Laurent polynomial with integer coefficients in the formal
// variable v, with v^2 = q.  Canonical form stores no zero coefficients.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  static LaurentPoly zero() { return LaurentPoly(); }
  static LaurentPoly one() { return monomial(0, 1); }
  static LaurentPoly monomial(int exp, long long coeff);
  // q^k = v^{2k}
  static LaurentPoly q_power(int k) { return monomial(2 * k, 1); }

  bool is_zero() const { return coeffs_.empty(); }
  long long coeff(int exp) const;
  const std::map<int, long long>& terms() const { return coeffs_; }

  int min_exp() const;
  int max_exp() const;

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  bool operator==(const LaurentPoly& o) const { return coeffs_ == o.coeffs_; }
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

  LaurentPoly shifted(int dv) const;  // multiply by v^{dv}
  LaurentPoly scaled(long long c) const;

  // Substitutes q -> 1 (requires all exponents even).
  long long eval_q_one() const;
  // Evaluates at v = sqrt(p^r); requires every exponent even, so that
  // the value is p^{r*exp/2}-integral.  Throws on odd exponents.
  long long eval_v_sqrt_q(long long p, int r) const;

  bool only_even_exponents() const;

  // Rendering: polynomial in q when all exponents are even, otherwise
  // in v.  Deterministic, exact.
  std::string to_string() const;

 private:
  std::map<int, long long> coeffs_;  // exponent of v -> coefficient
  void prune(int exp);
};

}  // namespace parahoric
