#include "moonshine/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>

namespace moonshine {

namespace {

// Monic Phi_L with small integer coefficients, lowest degree first.
struct CyclotomicData {
  std::vector<long> poly;
  std::uint32_t phi = 0;
};

IntPolynomial exact_divide(IntPolynomial num, const IntPolynomial& den) {
  // den is monic.
  const std::size_t dn = den.size() - 1;
  IntPolynomial quot(num.size() - dn, 0);
  for (std::size_t k = num.size(); k-- > dn;) {
    const Integer c = num[k];
    quot[k - dn] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dn; ++j) num[k - dn + j] -= c * den[j];
  }
  return quot;
}

const CyclotomicData& data_for(std::uint32_t order) {
  static std::recursive_mutex mutex;
  static std::map<std::uint32_t, std::unique_ptr<CyclotomicData>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[order];
  if (!slot) {
    // Phi_L = (x^L - 1) / prod_{d | L, d < L} Phi_d
    IntPolynomial acc(order + 1, 0);
    acc[0] = -1;
    acc[order] = 1;
    for (std::uint32_t d = 1; d < order; ++d) {
      if (order % d != 0) continue;
      IntPolynomial div;
      for (long c : data_for(d).poly) div.emplace_back(c);
      acc = exact_divide(std::move(acc), div);
    }
    auto entry = std::make_unique<CyclotomicData>();
    entry->phi = static_cast<std::uint32_t>(acc.size() - 1);
    for (const auto& c : acc) entry->poly.push_back(c.get_si());
    cache[order] = std::move(entry);
  }
  return *cache[order];
}

// Reduces a dense polynomial (any degree, exponents already < order or not)
// to the canonical basis of order `order`.
std::vector<Rational> reduce(std::vector<Rational> p, std::uint32_t order) {
  const auto& cd = data_for(order);
  const std::size_t phi = cd.phi;
  // Fold exponents >= order using z^order = 1.
  if (p.size() > order) {
    for (std::size_t k = order; k < p.size(); ++k) {
      if (p[k] != 0) p[k % order] += p[k];
    }
    p.resize(order);
  }
  for (std::size_t k = p.size(); k-- > phi;) {
    if (p[k] == 0) continue;
    const Rational c = p[k];
    for (std::size_t j = 0; j < phi; ++j) {
      if (cd.poly[j] != 0) p[k - phi + j] -= c * cd.poly[j];
    }
    p[k] = 0;
  }
  p.resize(phi, Rational(0));
  return p;
}

}  // namespace

IntPolynomial cyclotomic_polynomial(std::uint32_t order) {
  if (order == 0) throw std::invalid_argument("cyclotomic order must be positive");
  const auto& cd = data_for(order);
  IntPolynomial out;
  out.reserve(cd.poly.size());
  for (long c : cd.poly) out.emplace_back(c);
  return out;
}

std::uint32_t euler_phi(std::uint32_t order) {
  if (order == 0) throw std::invalid_argument("euler_phi of 0");
  std::uint32_t result = order;
  std::uint32_t m = order;
  for (std::uint32_t p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      result -= result / p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

CycloElem::CycloElem() : order_(1), coords_(1, Rational(0)) {}

CycloElem::CycloElem(Rational value, std::uint32_t order) : order_(order) {
  if (order == 0) throw std::invalid_argument("cyclotomic order must be positive");
  coords_.assign(euler_phi(order), Rational(0));
  coords_[0] = std::move(value);
}

CycloElem::CycloElem(std::uint32_t order, std::vector<Rational> coords, int)
    : order_(order), coords_(std::move(coords)) {}

CycloElem CycloElem::from_coords(std::uint32_t order, std::vector<Rational> coords) {
  if (order == 0) throw std::invalid_argument("cyclotomic order must be positive");
  if (coords.size() != euler_phi(order)) {
    throw std::invalid_argument("coordinate vector of length " + std::to_string(coords.size()) +
                                " for order " + std::to_string(order) + " (expected phi = " +
                                std::to_string(euler_phi(order)) + ")");
  }
  return CycloElem(order, std::move(coords), 0);
}

CycloElem CycloElem::root_of_unity(std::uint32_t order, std::int64_t power) {
  if (order == 0) throw std::invalid_argument("cyclotomic order must be positive");
  const auto e = static_cast<std::size_t>(floor_mod(power, order));
  std::vector<Rational> p(e + 1, Rational(0));
  p[e] = 1;
  return CycloElem(order, reduce(std::move(p), order), 0);
}

bool CycloElem::rational_coords() const {
  for (std::size_t k = 1; k < coords_.size(); ++k) {
    if (coords_[k] != 0) return false;
  }
  return true;
}

bool CycloElem::is_zero() const {
  for (const auto& c : coords_) {
    if (c != 0) return false;
  }
  return true;
}

bool CycloElem::is_one() const { return rational_coords() && coords_[0] == 1; }

std::optional<Rational> CycloElem::try_rational() const {
  if (!rational_coords()) return std::nullopt;
  return coords_[0];
}

CycloElem CycloElem::embed(std::uint32_t target) const {
  if (target == 0 || target % order_ != 0) {
    throw std::invalid_argument("cannot embed order " + std::to_string(order_) + " into order " +
                                std::to_string(target));
  }
  if (target == order_) return *this;
  if (rational_coords()) return CycloElem(coords_[0], target);
  const std::uint32_t step = target / order_;
  std::vector<Rational> p(target, Rational(0));
  for (std::size_t k = 0; k < coords_.size(); ++k) p[k * step] = coords_[k];
  return CycloElem(target, reduce(std::move(p), target), 0);
}

void CycloElem::align_with(CycloElem& other) {
  if (order_ == other.order_) return;
  const bool mine = rational_coords();
  const bool theirs = other.rational_coords();
  if (mine && theirs) {
    const auto common = static_cast<std::uint32_t>(std::lcm(order_, other.order_));
    *this = CycloElem(coords_[0], common);
    other = CycloElem(other.coords_[0], common);
  } else if (mine) {
    *this = CycloElem(coords_[0], other.order_);
  } else if (theirs) {
    other = CycloElem(other.coords_[0], order_);
  } else {
    throw OrderMismatch("cyclotomic orders " + std::to_string(order_) + " and " +
                        std::to_string(other.order_) + " differ; embed both into the lcm first");
  }
}

CycloElem CycloElem::operator-() const {
  CycloElem r = *this;
  for (auto& c : r.coords_) c = -c;
  return r;
}

CycloElem& CycloElem::operator+=(const CycloElem& other) {
  CycloElem rhs = other;
  align_with(rhs);
  for (std::size_t k = 0; k < coords_.size(); ++k) coords_[k] += rhs.coords_[k];
  return *this;
}

CycloElem& CycloElem::operator-=(const CycloElem& other) {
  CycloElem rhs = other;
  align_with(rhs);
  for (std::size_t k = 0; k < coords_.size(); ++k) coords_[k] -= rhs.coords_[k];
  return *this;
}

CycloElem& CycloElem::operator*=(const Rational& scalar) {
  for (auto& c : coords_) c *= scalar;
  return *this;
}

CycloElem& CycloElem::operator*=(const CycloElem& other) {
  if (order_ != other.order_) {
    CycloElem rhs = other;
    align_with(rhs);
    return *this *= rhs;
  }
  if (other.rational_coords()) {
    const Rational s = other.coords_[0];
    return *this *= s;
  }
  if (rational_coords()) {
    const Rational s = coords_[0];
    *this = other;
    return *this *= s;
  }
  const std::size_t phi = coords_.size();
  std::vector<Rational> prod(2 * phi - 1, Rational(0));
  for (std::size_t i = 0; i < phi; ++i) {
    if (coords_[i] == 0) continue;
    for (std::size_t j = 0; j < phi; ++j) {
      if (other.coords_[j] == 0) continue;
      prod[i + j] += coords_[i] * other.coords_[j];
    }
  }
  coords_ = reduce(std::move(prod), order_);
  return *this;
}

CycloElem CycloElem::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero cyclotomic element");
  if (rational_coords()) return CycloElem(1 / coords_[0], order_);
  const std::size_t phi = coords_.size();
  // Column j of the multiplication matrix is this * z^j.
  std::vector<std::vector<Rational>> m(phi, std::vector<Rational>(phi + 1, Rational(0)));
  for (std::size_t j = 0; j < phi; ++j) {
    const CycloElem col = *this * root_of_unity(order_, static_cast<std::int64_t>(j));
    for (std::size_t i = 0; i < phi; ++i) m[i][j] = col.coords_[i];
  }
  m[0][phi] = 1;
  for (std::size_t col = 0; col < phi; ++col) {
    std::size_t pivot = col;
    while (pivot < phi && m[pivot][col] == 0) ++pivot;
    if (pivot == phi) throw std::domain_error("singular multiplication matrix");
    std::swap(m[pivot], m[col]);
    const Rational inv = 1 / m[col][col];
    for (std::size_t k = col; k <= phi; ++k) m[col][k] *= inv;
    for (std::size_t r = 0; r < phi; ++r) {
      if (r == col || m[r][col] == 0) continue;
      const Rational f = m[r][col];
      for (std::size_t k = col; k <= phi; ++k) m[r][k] -= f * m[col][k];
    }
  }
  std::vector<Rational> x(phi);
  for (std::size_t i = 0; i < phi; ++i) x[i] = m[i][phi];
  return CycloElem(order_, std::move(x), 0);
}

CycloElem CycloElem::pow(std::int64_t exponent) const {
  CycloElem base = exponent < 0 ? inverse() : *this;
  std::uint64_t e = exponent < 0 ? static_cast<std::uint64_t>(-exponent) : static_cast<std::uint64_t>(exponent);
  CycloElem result(Rational(1), order_);
  while (e != 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e != 0) base *= base;
  }
  return result;
}

bool CycloElem::is_root_of_unity() const {
  if (is_zero()) return false;
  const auto m = std::lcm<std::int64_t>(2, order_);
  return pow(m).is_one();
}

std::complex<double> CycloElem::to_complex() const {
  std::complex<double> sum = 0.0;
  for (std::size_t k = 0; k < coords_.size(); ++k) {
    if (coords_[k] == 0) continue;
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / order_;
    sum += coords_[k].get_d() * std::polar(1.0, angle);
  }
  return sum;
}

bool operator==(const CycloElem& a, const CycloElem& b) {
  if (a.order_ == b.order_) return a.coords_ == b.coords_;
  const auto common = static_cast<std::uint32_t>(std::lcm(a.order_, b.order_));
  return a.embed(common).coords_ == b.embed(common).coords_;
}

std::string CycloElem::to_string() const {
  if (rational_coords() && order_ == 1) return moonshine::to_string(coords_[0]);
  std::string out = "[";
  for (std::size_t k = 0; k < coords_.size(); ++k) {
    if (k != 0) out += ",";
    out += moonshine::to_string(coords_[k]);
  }
  out += ";order=" + std::to_string(order_) + "]";
  return out;
}

CycloElem parse_cyclo(const std::string& text) {
  const auto first = text.find_first_not_of(" \t");
  if (first == std::string::npos) throw std::invalid_argument("empty coefficient");
  if (text[first] != '[') return CycloElem(parse_rational(text));
  const auto close = text.find(']', first);
  const auto semi = text.find(';', first);
  if (close == std::string::npos || semi == std::string::npos || semi > close) {
    throw std::invalid_argument("malformed cyclotomic vector '" + text + "'");
  }
  const std::string tail = text.substr(semi + 1, close - semi - 1);
  if (tail.rfind("order=", 0) != 0) throw std::invalid_argument("missing order= in '" + text + "'");
  const Rational order_q = parse_rational(tail.substr(6));
  if (!is_integer(order_q) || order_q <= 0) throw std::invalid_argument("bad order in '" + text + "'");
  const auto order = static_cast<std::uint32_t>(order_q.get_num().get_ui());
  std::vector<Rational> coords;
  std::string body = text.substr(first + 1, semi - first - 1);
  std::size_t pos = 0;
  while (pos <= body.size()) {
    const auto comma = body.find(',', pos);
    coords.push_back(parse_rational(body.substr(pos, comma - pos)));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return CycloElem::from_coords(order, std::move(coords));
}

}  // namespace moonshine
