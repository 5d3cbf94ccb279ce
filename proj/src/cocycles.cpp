#include "moonshine/cocycles.hpp"

#include <numeric>
#include <stdexcept>

namespace moonshine {

CyclicCocycle::CyclicCocycle(std::int64_t n, std::int64_t s) : n_(n), s_(0) {
  if (n <= 0) throw std::invalid_argument("cocycle group order must be positive");
  s_ = floor_mod(s, n);
}

Rational CyclicCocycle::eval(std::int64_t i, std::int64_t j, std::int64_t k) const {
  i = floor_mod(i, n_);
  j = floor_mod(j, n_);
  k = floor_mod(k, n_);
  const std::int64_t carry = (j + k) / n_;
  return mod_one(frac(s_ * i * carry, n_));
}

bool coboundary_check(std::int64_t n, const CochainTable& alpha) {
  for (std::int64_t a = 0; a < n; ++a) {
    for (std::int64_t b = 0; b < n; ++b) {
      for (std::int64_t c = 0; c < n; ++c) {
        for (std::int64_t d = 0; d < n; ++d) {
          const Rational delta = alpha(b, c, d) - alpha((a + b) % n, c, d) + alpha(a, (b + c) % n, d) -
                                 alpha(a, b, (c + d) % n) + alpha(a, b, c);
          if (!is_integer(delta)) return false;
        }
      }
    }
  }
  return true;
}

bool coboundary_check(const CyclicCocycle& alpha) {
  return coboundary_check(alpha.n(), [&](std::int64_t i, std::int64_t j, std::int64_t k) { return alpha.eval(i, j, k); });
}

bool is_normalized(const CyclicCocycle& alpha) {
  for (std::int64_t x = 0; x < alpha.n(); ++x) {
    for (std::int64_t y = 0; y < alpha.n(); ++y) {
      if (alpha.eval(0, x, y) != 0 || alpha.eval(x, 0, y) != 0 || alpha.eval(x, y, 0) != 0) return false;
    }
  }
  return true;
}

Rational tn_action(const CyclicCocycle& alpha) {
  Rational sum = 0;
  for (std::int64_t k = 0; k < alpha.n(); ++k) sum += alpha.eval(1, k, 1);
  return mod_one(sum);
}

std::int64_t order_mod_one(const Rational& value) { return to_int64(mod_one(value).get_den()); }

CyclicCocycle restrict_to_power(const CyclicCocycle& alpha, std::int64_t m) {
  if (m <= 0 || alpha.n() % m != 0) throw std::invalid_argument("restrict_to_power needs m dividing n");
  const std::int64_t sub = alpha.n() / m;
  Rational sum = 0;
  for (std::int64_t k = 0; k < sub; ++k) sum += alpha.eval(m, m * k, m);
  const Rational value = mod_one(sum) * sub;
  return CyclicCocycle(sub, to_int64(value.get_num()));
}

Rational TwistData::lattice_offset() const {
  const std::int64_t s_prime = s / std::gcd(n, s == 0 ? n : s);
  return frac(s_prime, N);
}

bool TwistData::admits(const Rational& exponent) const {
  return is_integer((exponent - lattice_offset()) * n);
}

TwistData twist_data(std::int64_t n, std::int64_t s) {
  if (n <= 0) throw std::invalid_argument("twist data needs a positive order");
  TwistData t;
  t.n = n;
  t.s = floor_mod(s, n);
  t.h = n / std::gcd(n, t.s == 0 ? n : t.s);
  t.N = n * t.h;
  return t;
}

}  // namespace moonshine
