#include "parahoric/laurent.hpp"

#include <sstream>

namespace parahoric {

LaurentPoly LaurentPoly::monomial(int exp, long long coeff) {
  LaurentPoly p;
  if (coeff != 0) p.coeffs_[exp] = coeff;
  return p;
}

long long LaurentPoly::coeff(int exp) const {
  auto it = coeffs_.find(exp);
  return it == coeffs_.end() ? 0 : it->second;
}

int LaurentPoly::min_exp() const {
  if (is_zero()) throw std::logic_error("min_exp of zero polynomial");
  return coeffs_.begin()->first;
}

int LaurentPoly::max_exp() const {
  if (is_zero()) throw std::logic_error("max_exp of zero polynomial");
  return coeffs_.rbegin()->first;
}

void LaurentPoly::prune(int exp) {
  auto it = coeffs_.find(exp);
  if (it != coeffs_.end() && it->second == 0) coeffs_.erase(it);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.coeffs_) {
    coeffs_[e] += c;
    prune(e);
  }
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.coeffs_) {
    coeffs_[e] -= c;
    prune(e);
  }
  return *this;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly p = *this;
  p += o;
  return p;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  LaurentPoly p = *this;
  p -= o;
  return p;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p;
  for (const auto& [e, c] : coeffs_) p.coeffs_[e] = -c;
  return p;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly p;
  for (const auto& [e1, c1] : coeffs_)
    for (const auto& [e2, c2] : o.coeffs_) {
      p.coeffs_[e1 + e2] += c1 * c2;
      p.prune(e1 + e2);
    }
  return p;
}

LaurentPoly LaurentPoly::shifted(int dv) const {
  LaurentPoly p;
  for (const auto& [e, c] : coeffs_) p.coeffs_[e + dv] = c;
  return p;
}

LaurentPoly LaurentPoly::scaled(long long k) const {
  LaurentPoly p;
  if (k == 0) return p;
  for (const auto& [e, c] : coeffs_) p.coeffs_[e] = c * k;
  return p;
}

bool LaurentPoly::only_even_exponents() const {
  for (const auto& [e, c] : coeffs_)
    if (e % 2 != 0) return false;
  return true;
}

long long LaurentPoly::eval_q_one() const {
  if (!only_even_exponents()) throw std::logic_error("odd v-exponent at q = 1");
  long long s = 0;
  for (const auto& [e, c] : coeffs_) s += c;
  return s;
}

long long LaurentPoly::eval_v_sqrt_q(long long p, int r) const {
  long long s = 0;
  for (const auto& [e, c] : coeffs_) {
    if ((long long)e * r % 2 != 0)
      throw std::logic_error("odd total v-degree: value is not an integer");
    long long k = (long long)e * r / 2;
    if (k < 0) throw std::logic_error("negative q-power cannot specialize to an integer");
    long long pw = 1;
    for (long long i = 0; i < k; ++i) pw *= p;
    s += c * pw;
  }
  return s;
}

std::string LaurentPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool in_q = only_even_exponents();
  bool first = true;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    auto [e, c] = *it;
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    long long a = c > 0 ? c : -c;
    int ee = in_q ? e / 2 : e;
    const char* var = in_q ? "q" : "v";
    if (ee == 0)
      os << a;
    else {
      if (a != 1) os << a << "*";
      os << var;
      if (ee != 1) os << "^" << ee;
    }
    first = false;
  }
  return os.str();
}

}  // namespace parahoric
