#include "moonshine/series.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace moonshine {

// ---------------------------------------------------------------- Trunc

const Rational& Trunc::bound() const {
  if (!bound_) throw std::logic_error("exact truncation has no bound");
  return *bound_;
}

Trunc Trunc::shifted(const Rational& delta) const {
  if (!bound_) return *this;
  return Trunc(*bound_ + delta);
}

Trunc Trunc::scaled(const Rational& factor) const {
  if (factor <= 0) throw std::invalid_argument("truncation scale factor must be positive");
  if (!bound_) return *this;
  return Trunc(*bound_ * factor);
}

Trunc min(const Trunc& a, const Trunc& b) {
  if (!a.bound_) return b;
  if (!b.bound_) return a;
  return *a.bound_ <= *b.bound_ ? a : b;
}

bool operator<(const Trunc& a, const Trunc& b) {
  if (!a.bound_) return false;
  if (!b.bound_) return true;
  return *a.bound_ < *b.bound_;
}

std::string Trunc::to_string() const { return bound_ ? moonshine::to_string(*bound_) : "inf"; }

Trunc parse_trunc(const std::string& text) {
  if (text == "inf") return Trunc::exact();
  return Trunc::at(parse_rational(text));
}

// ---------------------------------------------------------------- helpers

namespace {

std::uint32_t lcm32(std::uint32_t a, std::uint32_t b) {
  return static_cast<std::uint32_t>(std::lcm<std::uint64_t>(a, b));
}

// Integer index of an exponent on the grid (1/D)Z.
std::int64_t grid_index(const Rational& exponent, std::uint32_t grid) {
  const Rational scaled = exponent * grid;
  if (!is_integer(scaled)) throw std::logic_error("exponent off the declared grid");
  return to_int64(scaled.get_num());
}

// Number of grid points k >= 0 with start + k/grid < trunc.
std::int64_t count_below(const Rational& start, const Trunc& trunc, std::uint32_t grid) {
  const Rational span = (trunc.bound() - start) * grid;
  const auto c = to_int64(ceil(span));
  return std::max<std::int64_t>(c, 0);
}

bool all_rational(const PuiseuxSeries::Terms& terms) {
  return std::all_of(terms.begin(), terms.end(),
                     [](const auto& t) { return t.second.try_rational().has_value(); });
}

// Brings two series to one cyclotomic order when one of them is rational.
void align_orders(PuiseuxSeries& a, PuiseuxSeries& b) {
  if (a.order() == b.order()) return;
  const bool ra = a.has_rational_coefficients();
  const bool rb = b.has_rational_coefficients();
  if (ra && rb) {
    const auto common = lcm32(a.order(), b.order());
    a = a.embed(common);
    b = b.embed(common);
  } else if (ra) {
    const auto target = b.order();
    PuiseuxSeries::Terms t;
    for (const auto& [e, c] : a.terms()) t.emplace(e, CycloElem(*c.try_rational(), target));
    a = PuiseuxSeries(a.denom(), a.trunc(), std::move(t), target);
  } else if (rb) {
    align_orders(b, a);
  } else {
    throw OrderMismatch("series orders " + std::to_string(a.order()) + " and " +
                        std::to_string(b.order()) + " differ; lift to the lcm first");
  }
}

}  // namespace

// ---------------------------------------------------------------- PuiseuxSeries

PuiseuxSeries::PuiseuxSeries() = default;

PuiseuxSeries::PuiseuxSeries(Unchecked, std::uint32_t denom, Trunc trunc, Terms terms,
                             std::uint32_t order)
    : denom_(denom), trunc_(std::move(trunc)), order_(order), terms_(std::move(terms)) {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->second.is_zero() || !trunc_.admits(it->first)) {
      it = terms_.erase(it);
    } else {
      ++it;
    }
  }
}

PuiseuxSeries::PuiseuxSeries(std::uint32_t denom, Trunc trunc, Terms terms, std::uint32_t order)
    : denom_(denom), trunc_(std::move(trunc)), order_(order) {
  if (denom == 0) throw std::invalid_argument("series denominator must be positive");
  if (order == 0) throw std::invalid_argument("cyclotomic order must be positive");
  for (auto& [e, c] : terms) {
    if (denom % e.get_den() != 0) {
      throw std::invalid_argument("exponent " + to_string(e) + " not in (1/" + std::to_string(denom) + ")Z");
    }
    if (!trunc_.admits(e)) {
      throw std::invalid_argument("exponent " + to_string(e) + " at or beyond trunc " + trunc_.to_string());
    }
    if (c.order() != order) {
      if (order % c.order() != 0) {
        throw std::invalid_argument("coefficient of order " + std::to_string(c.order()) +
                                    " in a series of order " + std::to_string(order));
      }
      c = c.embed(order);
    }
    if (!c.is_zero()) terms_.emplace(e, std::move(c));
  }
}

PuiseuxSeries PuiseuxSeries::zero(Trunc trunc, std::uint32_t order) {
  return PuiseuxSeries(1, std::move(trunc), {}, order);
}

PuiseuxSeries PuiseuxSeries::constant(const CycloElem& value) {
  return PuiseuxSeries(1, Trunc::exact(), {{Rational(0), value}}, value.order());
}

PuiseuxSeries PuiseuxSeries::monomial(const Rational& exponent, const CycloElem& coeff, Trunc trunc) {
  const auto den = static_cast<std::uint32_t>(exponent.get_den().get_ui());
  return PuiseuxSeries(den, std::move(trunc), {{exponent, coeff}}, coeff.order());
}

PuiseuxSeries PuiseuxSeries::laurent(std::int64_t lowest, const std::vector<Rational>& coeffs, Trunc trunc) {
  Terms t;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    const Rational e(static_cast<long>(lowest + static_cast<std::int64_t>(k)));
    if (coeffs[k] != 0 && trunc.admits(e)) t.emplace(e, CycloElem(coeffs[k]));
  }
  return PuiseuxSeries(1, std::move(trunc), std::move(t), 1);
}

std::optional<Rational> PuiseuxSeries::valuation() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.begin()->first;
}

Trunc PuiseuxSeries::valuation_bound() const {
  if (terms_.empty()) return trunc_;
  return Trunc::at(terms_.begin()->first);
}

CycloElem PuiseuxSeries::coefficient(const Rational& exponent) const {
  if (!trunc_.admits(exponent)) {
    throw TruncationError("coefficient of q^" + to_string(exponent) + " requested beyond trunc " +
                          trunc_.to_string());
  }
  const auto it = terms_.find(exponent);
  if (it == terms_.end()) return CycloElem(Rational(0), order_);
  return it->second;
}

bool PuiseuxSeries::has_rational_coefficients() const { return all_rational(terms_); }

PuiseuxSeries PuiseuxSeries::embed(std::uint32_t target_order) const {
  if (target_order % order_ != 0) {
    throw std::invalid_argument("cannot embed series of order " + std::to_string(order_) +
                                " into order " + std::to_string(target_order));
  }
  if (target_order == order_) return *this;
  Terms t;
  for (const auto& [e, c] : terms_) t.emplace(e, c.embed(target_order));
  return PuiseuxSeries(Unchecked{}, denom_, trunc_, std::move(t), target_order);
}

PuiseuxSeries PuiseuxSeries::with_denom(std::uint32_t denom) const {
  if (denom == 0 || denom % denom_ != 0) {
    throw std::invalid_argument("denominator " + std::to_string(denom) + " is not a multiple of " +
                                std::to_string(denom_));
  }
  PuiseuxSeries r = *this;
  r.denom_ = denom;
  return r;
}

PuiseuxSeries PuiseuxSeries::truncated(const Trunc& trunc) const {
  return PuiseuxSeries(Unchecked{}, denom_, min(trunc_, trunc), terms_, order_);
}

PuiseuxSeries PuiseuxSeries::with_minimal_denom() const {
  std::uint64_t d = 1;
  for (const auto& [e, c] : terms_) d = std::lcm<std::uint64_t>(d, e.get_den().get_ui());
  PuiseuxSeries r = *this;
  r.denom_ = static_cast<std::uint32_t>(d);
  return r;
}

PuiseuxSeries PuiseuxSeries::with_rational_order() const {
  if (order_ == 1 || !has_rational_coefficients()) return *this;
  Terms t;
  for (const auto& [e, c] : terms_) t.emplace(e, CycloElem(*c.try_rational()));
  return PuiseuxSeries(Unchecked{}, denom_, trunc_, std::move(t), 1);
}

PuiseuxSeries PuiseuxSeries::scaled(const CycloElem& factor) const {
  PuiseuxSeries self = *this;
  std::uint32_t order = order_;
  if (factor.order() != order_) {
    if (factor.try_rational()) return scaled(*factor.try_rational());
    if (!has_rational_coefficients()) {
      throw OrderMismatch("scalar of order " + std::to_string(factor.order()) +
                          " against series of order " + std::to_string(order_));
    }
    order = factor.order();
    self = PuiseuxSeries::zero(trunc_, order) + *this;
  }
  Terms t;
  for (const auto& [e, c] : self.terms_) t.emplace(e, c * factor);
  return PuiseuxSeries(Unchecked{}, denom_, trunc_, std::move(t), order);
}

PuiseuxSeries PuiseuxSeries::scaled(const Rational& factor) const {
  Terms t;
  if (factor != 0) {
    for (const auto& [e, c] : terms_) t.emplace(e, c * factor);
  }
  return PuiseuxSeries(Unchecked{}, denom_, trunc_, std::move(t), order_);
}

PuiseuxSeries PuiseuxSeries::operator-() const { return scaled(Rational(-1)); }

PuiseuxSeries operator+(const PuiseuxSeries& a_in, const PuiseuxSeries& b_in) {
  PuiseuxSeries a = a_in;
  PuiseuxSeries b = b_in;
  align_orders(a, b);
  const Trunc trunc = min(a.trunc_, b.trunc_);
  PuiseuxSeries::Terms t;
  for (const auto& [e, c] : a.terms_) {
    if (trunc.admits(e)) t.emplace(e, c);
  }
  for (const auto& [e, c] : b.terms_) {
    if (!trunc.admits(e)) continue;
    auto [it, inserted] = t.emplace(e, c);
    if (!inserted) it->second += c;
  }
  return PuiseuxSeries(PuiseuxSeries::Unchecked{}, lcm32(a.denom_, b.denom_), trunc, std::move(t), a.order_);
}

PuiseuxSeries operator-(const PuiseuxSeries& a, const PuiseuxSeries& b) { return a + (-b); }

PuiseuxSeries operator*(const PuiseuxSeries& a_in, const PuiseuxSeries& b_in) {
  PuiseuxSeries a = a_in;
  PuiseuxSeries b = b_in;
  align_orders(a, b);
  const std::uint32_t grid = lcm32(a.denom_, b.denom_);
  // trunc(ab) = min(trunc_a + val_b, trunc_b + val_a)
  auto plus = [](const Trunc& t, const Trunc& v) -> Trunc {
    if (t.is_exact() || v.is_exact()) return Trunc::exact();
    return Trunc::at(t.bound() + v.bound());
  };
  const Trunc trunc = min(plus(a.trunc_, b.valuation_bound()), plus(b.trunc_, a.valuation_bound()));
  if (a.terms_.empty() || b.terms_.empty()) {
    return PuiseuxSeries(PuiseuxSeries::Unchecked{}, grid, trunc, {}, a.order_);
  }
  std::vector<std::pair<std::int64_t, const CycloElem*>> ta, tb;
  for (const auto& [e, c] : a.terms_) ta.emplace_back(grid_index(e, grid), &c);
  for (const auto& [e, c] : b.terms_) tb.emplace_back(grid_index(e, grid), &c);
  const std::int64_t lo = ta.front().first + tb.front().first;
  std::int64_t hi = ta.back().first + tb.back().first + 1;
  if (!trunc.is_exact()) hi = std::min(hi, lo + count_below(frac(lo, grid), trunc, grid));
  if (hi <= lo) return PuiseuxSeries(PuiseuxSeries::Unchecked{}, grid, trunc, {}, a.order_);
  std::vector<CycloElem> acc(static_cast<std::size_t>(hi - lo), CycloElem(Rational(0), a.order_));
  std::vector<char> touched(acc.size(), 0);
  for (const auto& [ia, ca] : ta) {
    for (const auto& [ib, cb] : tb) {
      const std::int64_t k = ia + ib;
      if (k >= hi) break;
      const auto slot = static_cast<std::size_t>(k - lo);
      acc[slot] += *ca * *cb;
      touched[slot] = 1;
    }
  }
  PuiseuxSeries::Terms t;
  for (std::size_t k = 0; k < acc.size(); ++k) {
    if (touched[k] && !acc[k].is_zero()) {
      t.emplace_hint(t.end(), frac(lo + static_cast<std::int64_t>(k), grid),
                     std::move(acc[k]));
    }
  }
  return PuiseuxSeries(PuiseuxSeries::Unchecked{}, grid, trunc, std::move(t), a.order_);
}

bool operator==(const PuiseuxSeries& a, const PuiseuxSeries& b) {
  if (a.trunc_ != b.trunc_ || a.terms_.size() != b.terms_.size()) return false;
  auto ib = b.terms_.begin();
  for (const auto& [e, c] : a.terms_) {
    if (ib->first != e || ib->second != c) return false;
    ++ib;
  }
  return true;
}

bool PuiseuxSeries::agrees_with(const PuiseuxSeries& other) const {
  auto [a, b] = lift_to_common_order(*this, other);
  return (a - b).is_zero();
}

std::complex<double> PuiseuxSeries::evaluate(std::complex<double> tau) const {
  std::complex<double> sum = 0.0;
  const std::complex<double> two_pi_i(0.0, 2.0 * std::numbers::pi);
  for (const auto& [e, c] : terms_) sum += c.to_complex() * std::exp(two_pi_i * e.get_d() * tau);
  return sum;
}

// ---------------------------------------------------------------- lifting

void lift_to_common_order(std::vector<PuiseuxSeries>& series) {
  std::uint32_t common = 1;
  for (const auto& s : series) common = lcm32(common, s.order());
  for (auto& s : series) s = s.embed(common);
}

std::pair<PuiseuxSeries, PuiseuxSeries> lift_to_common_order(const PuiseuxSeries& a, const PuiseuxSeries& b) {
  const auto common = lcm32(a.order(), b.order());
  return {a.embed(common), b.embed(common)};
}

PuiseuxSeries sum_lifted(std::vector<PuiseuxSeries> series) {
  if (series.empty()) return PuiseuxSeries();
  lift_to_common_order(series);
  PuiseuxSeries total = series.front();
  for (std::size_t k = 1; k < series.size(); ++k) total += series[k];
  return total;
}

PuiseuxSeries multiply_lifted(const PuiseuxSeries& a, const PuiseuxSeries& b) {
  auto [x, y] = lift_to_common_order(a, b);
  return x * y;
}

PuiseuxSeries power(const PuiseuxSeries& f, unsigned exponent) {
  PuiseuxSeries result = PuiseuxSeries::constant(CycloElem(Rational(1), f.order()));
  PuiseuxSeries base = f;
  while (exponent != 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent != 0) base *= base;
  }
  return result;
}

// ---------------------------------------------------------------- dense kernels

namespace {

// Coefficients of `a` at start + k/grid for k = 0..count-1.
std::vector<CycloElem> dense_window(const PuiseuxSeries& a, const Rational& start, std::int64_t count,
                                    std::uint32_t grid) {
  std::vector<CycloElem> out(static_cast<std::size_t>(count), CycloElem(Rational(0), a.order()));
  const std::int64_t base = grid_index(start, grid);
  for (const auto& [e, c] : a.terms()) {
    const std::int64_t k = grid_index(e, grid) - base;
    if (k >= 0 && k < count) out[static_cast<std::size_t>(k)] = c;
  }
  return out;
}

PuiseuxSeries from_dense(const std::vector<CycloElem>& coeffs, const Rational& start, std::uint32_t grid,
                         Trunc trunc, std::uint32_t order) {
  PuiseuxSeries::Terms t;
  const std::int64_t base = grid_index(start, grid);
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k].is_zero()) continue;
    t.emplace_hint(t.end(), frac(base + static_cast<std::int64_t>(k), grid), coeffs[k]);
  }
  return PuiseuxSeries(grid, std::move(trunc), std::move(t), order);
}

}  // namespace

PuiseuxSeries invert_unit(const PuiseuxSeries& a) {
  if (a.is_zero()) throw std::domain_error("invert_unit of a zero series");
  const Rational v = *a.valuation();
  const CycloElem lead = a.terms().begin()->second;
  if (a.trunc().is_exact()) {
    if (a.terms().size() != 1) {
      throw TruncationError("exact series with several terms has no terminating inverse; truncate it first");
    }
    return PuiseuxSeries(a.denom(), Trunc::exact(), {{-v, lead.inverse()}}, a.order());
  }
  const std::uint32_t grid = a.denom();
  const std::int64_t count = count_below(v, a.trunc(), grid);
  const auto u = dense_window(a, v, count, grid);
  std::vector<CycloElem> b(u.size(), CycloElem(Rational(0), a.order()));
  const CycloElem inv0 = lead.inverse();
  b[0] = inv0;
  for (std::size_t k = 1; k < u.size(); ++k) {
    CycloElem s(Rational(0), a.order());
    for (std::size_t i = 1; i <= k; ++i) {
      if (!u[i].is_zero() && !b[k - i].is_zero()) s += u[i] * b[k - i];
    }
    b[k] = -(inv0 * s);
  }
  return from_dense(b, -v, grid, a.trunc().shifted(-2 * v), a.order());
}

PuiseuxSeries exp_series(const PuiseuxSeries& a, std::optional<Rational> bound) {
  if (a.is_zero() && a.trunc().is_exact()) {
    const PuiseuxSeries one = PuiseuxSeries::constant(CycloElem(Rational(1), a.order()));
    return bound ? one.truncated(Trunc::at(*bound)) : one;
  }
  if (!a.is_zero() && *a.valuation() <= 0) throw std::domain_error("exp_series needs strictly positive valuation");
  Trunc trunc = a.trunc();
  if (bound) trunc = min(trunc, Trunc::at(*bound));
  if (trunc.is_exact()) throw TruncationError("exp of an exact nonzero series needs a truncation bound");
  const std::uint32_t grid = a.denom();
  const std::int64_t count = count_below(Rational(0), trunc, grid);
  if (count == 0) return PuiseuxSeries::zero(trunc, a.order());
  const auto x = dense_window(a, Rational(0), count, grid);
  std::vector<CycloElem> e(x.size(), CycloElem(Rational(0), a.order()));
  e[0] = CycloElem(Rational(1), a.order());
  // k e_k = sum_{i=1..k} i x_i e_{k-i}
  for (std::size_t k = 1; k < x.size(); ++k) {
    CycloElem s(Rational(0), a.order());
    for (std::size_t i = 1; i <= k; ++i) {
      if (!x[i].is_zero() && !e[k - i].is_zero()) s += (x[i] * e[k - i]) * Rational(static_cast<long>(i));
    }
    e[k] = s * frac(1, static_cast<std::int64_t>(k));
  }
  return from_dense(e, Rational(0), grid, trunc, a.order());
}

PuiseuxSeries log_series(const PuiseuxSeries& a, std::optional<Rational> bound) {
  if (a.is_zero() || *a.valuation() != 0 || !a.terms().begin()->second.is_one()) {
    throw std::domain_error("log_series needs constant term 1 and no negative exponents");
  }
  if (a.terms().size() == 1 && a.trunc().is_exact()) return PuiseuxSeries::zero(Trunc::exact(), a.order());
  Trunc trunc = a.trunc();
  if (bound) trunc = min(trunc, Trunc::at(*bound));
  if (trunc.is_exact()) throw TruncationError("log of an exact non-constant series needs a truncation bound");
  const std::uint32_t grid = a.denom();
  const std::int64_t count = count_below(Rational(0), trunc, grid);
  const auto x = dense_window(a, Rational(0), count, grid);
  std::vector<CycloElem> l(x.size(), CycloElem(Rational(0), a.order()));
  // k l_k = k x_k - sum_{i=1..k-1} i l_i x_{k-i}
  for (std::size_t k = 1; k < x.size(); ++k) {
    CycloElem s = x[k] * Rational(static_cast<long>(k));
    for (std::size_t i = 1; i < k; ++i) {
      if (!l[i].is_zero() && !x[k - i].is_zero()) s -= (l[i] * x[k - i]) * Rational(static_cast<long>(i));
    }
    l[k] = s * frac(1, static_cast<std::int64_t>(k));
  }
  return from_dense(l, Rational(0), grid, trunc, a.order());
}

// ---------------------------------------------------------------- substitutions

PuiseuxSeries substitute(const PuiseuxSeries& f, std::int64_t a, std::int64_t b, std::int64_t d) {
  if (a <= 0 || d <= 0) throw std::invalid_argument("substitute needs a, d > 0");
  if (b < 0 || b >= d) throw std::invalid_argument("substitute needs 0 <= b < d");
  const std::int64_t dn = d * static_cast<std::int64_t>(f.denom());
  const auto order = static_cast<std::uint32_t>(std::lcm<std::int64_t>(f.order(), dn));
  const Rational factor = frac(a, d);
  PuiseuxSeries::Terms t;
  for (const auto& [e, c] : f.terms()) {
    const std::int64_t k = grid_index(e, f.denom());  // r = k / N
    CycloElem coeff = c.embed(order);
    if (b != 0) {
      const std::int64_t zeta_power = floor_mod(b * k, dn) * (static_cast<std::int64_t>(order) / dn);
      coeff *= CycloElem::root_of_unity(order, zeta_power);
    }
    t.emplace(e * factor, std::move(coeff));
  }
  const auto denom = static_cast<std::uint32_t>(dn / std::gcd(a, dn));
  return PuiseuxSeries(denom, f.trunc().scaled(factor), std::move(t), order);
}

PuiseuxSeries translate(const PuiseuxSeries& f, std::int64_t shift) {
  const std::uint32_t n = f.denom();
  const auto order = lcm32(f.order(), n);
  PuiseuxSeries::Terms t;
  for (const auto& [e, c] : f.terms()) {
    const std::int64_t k = grid_index(e, n);
    const std::int64_t power = floor_mod(k * shift, n) * (static_cast<std::int64_t>(order) / n);
    t.emplace(e, c.embed(order) * CycloElem::root_of_unity(order, power));
  }
  return PuiseuxSeries(n, f.trunc(), std::move(t), order);
}

PuiseuxSeries rescale_exponents(const PuiseuxSeries& f, const Rational& factor) {
  if (factor <= 0) throw std::invalid_argument("exponent rescaling factor must be positive");
  PuiseuxSeries::Terms t;
  std::uint64_t den = 1;
  for (const auto& [e, c] : f.terms()) {
    Rational ne = e * factor;
    den = std::lcm<std::uint64_t>(den, ne.get_den().get_ui());
    t.emplace(std::move(ne), c);
  }
  return PuiseuxSeries(static_cast<std::uint32_t>(den), f.trunc().scaled(factor), std::move(t), f.order());
}

// ---------------------------------------------------------------- Faber polynomials

bool is_normalized(const PuiseuxSeries& f) {
  if (f.is_zero() || *f.valuation() != -1) return false;
  if (!f.terms().begin()->second.is_one()) return false;
  if (!f.trunc().admits(Rational(0)) || f.terms().count(Rational(0)) != 0) return false;
  for (const auto& [e, c] : f.terms()) {
    if (!is_integer(e) || !c.try_rational()) return false;
  }
  return true;
}

std::vector<FaberResult> faber_sequence(const PuiseuxSeries& f, unsigned n) {
  if (n == 0) throw std::invalid_argument("Faber index must be positive");
  if (!is_normalized(f)) throw std::invalid_argument("Faber polynomials need f = q^-1 + O(q) with rational coefficients");
  if (!f.trunc().admits(Rational(static_cast<long>(n)))) {
    throw TruncationError("Faber polynomial Phi_" + std::to_string(n) + " needs trunc(f) >= " +
                          std::to_string(n + 1) + ", got " + f.trunc().to_string());
  }
  std::vector<FaberResult> out;
  PuiseuxSeries fk = PuiseuxSeries::constant(CycloElem(Rational(1)));
  for (unsigned k = 1; k <= n; ++k) {
    fk *= f;
    FaberResult r;
    r.n = k;
    r.coefficients.assign(k + 1, Rational(0));
    r.coefficients[k] = 1;
    PuiseuxSeries p = fk;
    for (unsigned m = k - 1; m >= 1; --m) {
      const Rational c = *p.coefficient(Rational(-static_cast<long>(m))).try_rational();
      if (c != 0) {
        p -= out[m - 1].series.scaled(c);
        for (std::size_t i = 0; i < out[m - 1].coefficients.size(); ++i) {
          r.coefficients[i] -= c * out[m - 1].coefficients[i];
        }
      }
    }
    const Rational c0 = *p.coefficient(Rational(0)).try_rational();
    if (c0 != 0) {
      p -= PuiseuxSeries::constant(CycloElem(c0));
      r.coefficients[0] -= c0;
    }
    r.series = std::move(p);
    out.push_back(std::move(r));
  }
  return out;
}

FaberResult faber(const PuiseuxSeries& f, unsigned n) { return faber_sequence(f, n).back(); }

// ---------------------------------------------------------------- j - 744

namespace {

using Dense = std::vector<Integer>;

Dense multiply_dense(const Dense& a, const Dense& b, std::size_t len) {
  Dense out(len, 0);
  for (std::size_t i = 0; i < a.size() && i < len; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size() && i + j < len; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

}  // namespace

PuiseuxSeries j_expansion(unsigned order) {
  if (order == 0) throw std::invalid_argument("j_expansion order must be positive");
  // j q = E4^3 / prod(1 - q^n)^24; we need its coefficients through q^(order+1).
  const std::size_t len = order + 2;
  Dense e4(len, 0);
  e4[0] = 1;
  for (std::size_t n = 1; n < len; ++n) {
    Integer sigma3 = 0;
    for (std::size_t d = 1; d <= n; ++d) {
      if (n % d == 0) sigma3 += Integer(static_cast<unsigned long>(d * d * d));
    }
    e4[n] = 240 * sigma3;
  }
  Dense eta(len, 0);  // prod (1 - q^n)
  eta[0] = 1;
  for (std::size_t n = 1; n < len; ++n) {
    for (std::size_t k = len; k-- > n;) eta[k] -= eta[k - n];
  }
  Dense eta24 = eta;
  for (int i = 1; i < 24; ++i) eta24 = multiply_dense(eta24, eta, len);
  Dense inv(len, 0);  // 1 / eta24, leading coefficient 1
  inv[0] = 1;
  for (std::size_t k = 1; k < len; ++k) {
    Integer s = 0;
    for (std::size_t i = 1; i <= k; ++i) s += eta24[i] * inv[k - i];
    inv[k] = -s;
  }
  const Dense jq = multiply_dense(multiply_dense(multiply_dense(e4, e4, len), e4, len), inv, len);
  std::vector<Rational> coeffs(len);
  for (std::size_t k = 0; k < len; ++k) coeffs[k] = Rational(jq[k]);
  coeffs[1] -= 744;
  return PuiseuxSeries::laurent(-1, coeffs, Trunc::at(Rational(static_cast<long>(order) + 1)));
}

}  // namespace moonshine
