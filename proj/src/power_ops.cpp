#include "moonshine/power_ops.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace moonshine {

namespace {

NortonSeries one(const Group& G) { return NortonSeries::constant(G, PuiseuxSeries::constant(CycloElem(Rational(1)))); }

NortonSeries zero(const Group& G) { return NortonSeries::constant(G, PuiseuxSeries()); }

// Commuting pairs of Sigma_n grouped by their multiset of orbit triples; psi
// depends only on that multiset.
struct Bucket {
  std::vector<Sublattice> triples;
  Rational sym_weight;
  Rational lambda_weight;
};

const std::vector<Bucket>& buckets(unsigned n) {
  static std::mutex mutex;
  static std::map<unsigned, std::vector<Bucket>> cache;
  {
    std::lock_guard lock(mutex);
    if (const auto it = cache.find(n); it != cache.end()) return it->second;
  }
  const Group& S = symmetric_group(n);
  std::map<std::vector<Sublattice>, std::pair<Rational, Rational>> acc;
  for (const auto& cls : S.pair_classes()) {
    const auto orbits = orbit_decomposition(S.permutation(cls.rep.g), S.permutation(cls.rep.h));
    std::vector<Sublattice> triples;
    int sign = 1;
    for (const auto& o : orbits) {
      triples.push_back(o.lattice);
      if (o.points.size() % 2 == 0) sign = -sign;
    }
    std::sort(triples.begin(), triples.end());
    const Rational w = frac(1, static_cast<std::int64_t>(cls.centralizer_order));
    auto& slot = acc[triples];
    slot.first += w;
    slot.second += sign * w;
  }
  std::vector<Bucket> out;
  for (auto& [t, w] : acc) out.push_back({t, w.first, w.second});
  std::lock_guard lock(mutex);
  return cache.emplace(n, std::move(out)).first->second;
}

NortonSeries weighted_power(const NortonSeries& f, unsigned n, bool signed_sum) {
  if (n == 0) return one(f.group());
  std::optional<NortonSeries> total;
  for (const auto& b : buckets(n)) {
    const Rational& w = signed_sum ? b.lambda_weight : b.sym_weight;
    if (w == 0) continue;
    NortonSeries term = scaled(psi_triples(f, b.triples), w);
    total = total ? *total + term : term;
  }
  return total ? *total : zero(f.group());
}

}  // namespace

NortonSeries psi_triples(const NortonSeries& f, const std::vector<Sublattice>& triples) {
  const Group& G = f.group();
  std::vector<PuiseuxSeries> values;
  for (const auto& cls : G.pair_classes()) {
    const auto [g, h] = cls.rep;
    PuiseuxSeries product = PuiseuxSeries::constant(CycloElem(Rational(1)));
    for (const auto& t : triples) {
      const Elem g2 = G.pow(g, t.d);
      const Elem h2 = G.mul(G.pow(g, -t.b), G.pow(h, t.a));
      product = multiply_lifted(product, substitute(f.evaluate(g2, h2), t.a, t.b, t.d));
    }
    values.push_back(product.with_rational_order());
  }
  return NortonSeries(G, std::move(values));
}

NortonSeries psi_pair(const NortonSeries& f, const Perm& sigma, const Perm& rho) {
  std::vector<Sublattice> triples;
  for (const auto& o : orbit_decomposition(sigma, rho)) triples.push_back(o.lattice);
  return psi_triples(f, triples);
}

NortonSeries sym_n(const NortonSeries& f, unsigned n) { return weighted_power(f, n, false); }

NortonSeries lambda2_n(const NortonSeries& f, unsigned n) { return weighted_power(f, n, true); }

// ---------------------------------------------------------------- total power series

TotalPowerSeries TotalPowerSeries::flipped() const {
  TotalPowerSeries out = *this;
  for (std::size_t k = 1; k < out.coefficients.size(); k += 2) out.coefficients[k] = scaled(out.coefficients[k], Rational(-1));
  return out;
}

TotalPowerSeries multiply(const TotalPowerSeries& a, const TotalPowerSeries& b) {
  TotalPowerSeries out;
  out.var_order = std::min(a.var_order, b.var_order);
  for (unsigned k = 0; k <= out.var_order; ++k) {
    NortonSeries c = a.coefficients[0] * b.coefficients[k];
    for (unsigned i = 1; i <= k; ++i) c = c + a.coefficients[i] * b.coefficients[k - i];
    out.coefficients.push_back(std::move(c));
  }
  return out;
}

TotalPowerSeries inverse(const TotalPowerSeries& a) {
  const Group& G = a.coefficients.at(0).group();
  if (!(a.coefficients[0] == one(G))) throw std::domain_error("t-series inverse needs constant coefficient 1");
  TotalPowerSeries out;
  out.var_order = a.var_order;
  out.coefficients.push_back(one(G));
  for (unsigned k = 1; k <= a.var_order; ++k) {
    NortonSeries s = a.coefficients[1] * out.coefficients[k - 1];
    for (unsigned i = 2; i <= k; ++i) s = s + a.coefficients[i] * out.coefficients[k - i];
    out.coefficients.push_back(scaled(s, Rational(-1)));
  }
  return out;
}

TotalPowerSeries exp_t(const TotalPowerSeries& x) {
  const Group& G = x.coefficients.at(0).group();
  for (const auto& v : x.coefficients[0].values()) {
    if (!v.is_zero()) throw std::domain_error("t-series exp needs zero constant coefficient");
  }
  TotalPowerSeries out;
  out.var_order = x.var_order;
  out.coefficients.push_back(one(G));
  for (unsigned k = 1; k <= x.var_order; ++k) {
    NortonSeries s = scaled(x.coefficients[1] * out.coefficients[k - 1], Rational(1));
    for (unsigned i = 2; i <= k; ++i) s = s + scaled(x.coefficients[i] * out.coefficients[k - i], Rational(i));
    out.coefficients.push_back(scaled(s, frac(1, k)));
  }
  return out;
}

TotalPowerSeries total_sym(const NortonSeries& f, unsigned d) {
  TotalPowerSeries out;
  out.var_order = d;
  for (unsigned k = 0; k <= d; ++k) out.coefficients.push_back(sym_n(f, k));
  return out;
}

TotalPowerSeries total_lambda(const NortonSeries& f, unsigned d) {
  TotalPowerSeries out;
  out.var_order = d;
  for (unsigned k = 0; k <= d; ++k) out.coefficients.push_back(lambda2_n(f, k));
  return out;
}

TotalPowerSeries sym_from_hecke(const NortonSeries& f, unsigned d) {
  TotalPowerSeries x;
  x.var_order = d;
  x.coefficients.push_back(zero(f.group()));
  for (unsigned k = 1; k <= d; ++k) x.coefficients.push_back(hecke_geometric(f, k));
  return exp_t(x);
}

SymExpReport verify_sym_exp_identity(const NortonSeries& f, unsigned d) {
  SymExpReport report;
  report.var_order = d;
  const TotalPowerSeries direct = total_sym(f, d);
  const TotalPowerSeries via_hecke = sym_from_hecke(f, d);
  const TotalPowerSeries product = multiply(direct, total_lambda(f, d).flipped());
  const NortonSeries unit = one(f.group());
  const NortonSeries nil = zero(f.group());
  report.agrees = true;
  for (unsigned k = 0; k <= d; ++k) {
    const bool same = agrees_with(direct.coefficients[k], via_hecke.coefficients[k]);
    const bool inv = agrees_with(product.coefficients[k], k == 0 ? unit : nil);
    report.degree_agrees.push_back(same);
    report.inverse_ok.push_back(inv);
    report.compared_to.push_back(min(direct.coefficients[k].common_trunc(), via_hecke.coefficients[k].common_trunc()));
    report.agrees = report.agrees && same && inv;
  }
  return report;
}

// ---------------------------------------------------------------- replicates

ReplicateResult extract_replicates(const PuiseuxSeries& f, unsigned n_max) {
  if (n_max == 0) throw std::invalid_argument("extract_replicates needs n_max >= 1");
  if (!is_normalized(f)) throw std::invalid_argument("extract_replicates needs f = q^-1 + O(q) with rational coefficients");
  ReplicateResult result;
  result.replicates[1] = f;
  if (n_max == 1) return result;
  const auto faber_polys = faber_sequence(f, n_max);
  for (unsigned n = 2; n <= n_max; ++n) {
    std::vector<PuiseuxSeries> parts{faber_polys[n - 1].series};
    for (unsigned a = 1; a < n; ++a) {
      if (n % a != 0) continue;
      const std::int64_t d = n / a;
      for (std::int64_t b = 0; b < d; ++b) parts.push_back(-substitute(result.replicates.at(a), a, b, d));
    }
    const PuiseuxSeries residual = sum_lifted(std::move(parts));
    PuiseuxSeries::Terms rational_terms;
    for (const auto& [e, c] : residual.terms()) {
      const auto q = c.try_rational();
      if (!q) {
        result.failure = ReplicateFailure{n, e, "coefficient " + c.to_string() + " is not rational"};
        return result;
      }
      if (!is_integer(e / n)) {
        result.failure = ReplicateFailure{n, e, "residual has a term outside " + std::to_string(n) + "Z"};
        return result;
      }
      rational_terms.emplace(e, CycloElem(*q));
    }
    const PuiseuxSeries fn =
        rescale_exponents(PuiseuxSeries(residual.denom(), residual.trunc(), std::move(rational_terms)), frac(1, n))
            .with_minimal_denom();
    if (!fn.trunc().is_exact() && fn.trunc().bound() <= -1) {
      throw TruncationError("f^(" + std::to_string(n) + ") would be unknown even at q^-1; input truncation " +
                            f.trunc().to_string() + " is too short");
    }
    result.replicates[n] = fn;
  }
  return result;
}

Rational replicate_input_order(unsigned n_max, unsigned terms_wanted) {
  if (n_max == 0 || terms_wanted == 0) throw std::invalid_argument("replicate_input_order needs positive arguments");
  const Rational goal = frac(static_cast<std::int64_t>(terms_wanted) - 1);
  auto guaranteed = [&](const Rational& T) {
    std::map<unsigned, Rational> t{{1, T}};
    Rational worst = T;
    for (unsigned n = 2; n <= n_max; ++n) {
      Rational r = T - frac(n - 1);
      for (unsigned a = 1; a < n; ++a) {
        if (n % a == 0) r = std::min<Rational>(r, t[a] * frac(static_cast<std::int64_t>(a) * a, n));
      }
      t[n] = r / n;
      worst = std::min(worst, t[n]);
    }
    return worst;
  };
  std::int64_t T = std::max<std::int64_t>(n_max + 1, 1);
  while (guaranteed(frac(T)) < goal) ++T;
  return frac(T);
}

ReplicabilityReport verify_replicability(const PuiseuxSeries& f, unsigned order) {
  if (!is_normalized(f)) throw std::invalid_argument("verify_replicability needs f = q^-1 + O(q) with rational coefficients");
  const NortonSeries F = NortonSeries::constant(Group::trivial(), f);
  ReplicabilityReport report;
  report.all_constant = true;
  report.identity_holds = agrees_with(lambda2_n(F, 0), one(F.group())) && agrees_with(lambda2_n(F, 1), F);
  for (unsigned n = 1; n <= order; ++n) {
    ReplicabilityEntry e;
    e.n = n;
    e.lambda = lambda2_n(F, n + 1).at_class(0);
    if (!e.lambda.trunc().is_exact() && e.lambda.trunc().bound() <= 0) {
      throw TruncationError("lambda_" + std::to_string(n + 1) + " is known only below q^" +
                            to_string(e.lambda.trunc().bound()) + "; supply a longer series");
    }
    e.is_constant = std::all_of(e.lambda.terms().begin(), e.lambda.terms().end(),
                                [](const auto& t) { return t.first == 0 && t.second.try_rational(); });
    if (e.is_constant) e.constant = e.lambda.is_zero() ? Rational(0) : *e.lambda.terms().begin()->second.try_rational();
    const Rational a_n = *f.coefficient(frac(n)).try_rational();
    e.expected = (n % 2 == 1) ? a_n : Rational(-a_n);
    e.matches = e.is_constant && *e.constant == e.expected;
    report.all_constant = report.all_constant && e.is_constant;
    report.identity_holds = report.identity_holds && e.matches;
    report.entries.push_back(std::move(e));
  }
  return report;
}

// ---------------------------------------------------------------- level 1

std::vector<std::vector<unsigned>> partitions(unsigned n) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> current;
  auto rec = [&](auto&& self, unsigned remaining, unsigned largest) -> void {
    if (remaining == 0) {
      out.push_back(current);
      return;
    }
    for (unsigned part = std::min(remaining, largest); part >= 1; --part) {
      current.push_back(part);
      self(self, remaining - part, part);
      current.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

Integer z_lambda(const std::vector<unsigned>& partition) {
  std::map<unsigned, unsigned> mult;
  for (const unsigned p : partition) ++mult[p];
  Integer z = 1;
  for (const auto& [k, m] : mult) {
    for (unsigned i = 1; i <= m; ++i) z *= Integer(static_cast<unsigned long>(k)) * i;
  }
  return z;
}

namespace {

void require_class_function(const Group& G, const ClassFunction& chi) {
  if (chi.size() != G.pair_classification().conjugacy_classes().size()) {
    throw std::invalid_argument("class function needs one value per conjugacy class");
  }
}

Rational value_at_power(const Group& G, const ClassFunction& chi, Elem g, unsigned k) {
  return chi[G.pair_classification().conjugacy_index(G.pow(g, k))];
}

ClassFunction cycle_sum(const Group& G, const ClassFunction& chi, unsigned n, bool signed_sum) {
  require_class_function(G, chi);
  const auto& classes = G.pair_classification().conjugacy_classes();
  ClassFunction out(classes.size(), Rational(0));
  for (const auto& lambda : partitions(n)) {
    Rational w(1);
    w /= z_lambda(lambda);
    if (signed_sum && (n - lambda.size()) % 2 == 1) w = -w;
    for (std::size_t c = 0; c < classes.size(); ++c) {
      Rational prod = w;
      for (const unsigned part : lambda) prod *= value_at_power(G, chi, classes[c].rep, part);
      out[c] += prod;
    }
  }
  return out;
}

}  // namespace

ClassFunction adams(const Group& G, const ClassFunction& chi, unsigned n) {
  require_class_function(G, chi);
  const auto& classes = G.pair_classification().conjugacy_classes();
  ClassFunction out;
  for (const auto& c : classes) out.push_back(value_at_power(G, chi, c.rep, n));
  return out;
}

ClassFunction level1_sym(const Group& G, const ClassFunction& chi, unsigned n) { return cycle_sum(G, chi, n, false); }

ClassFunction level1_lambda(const Group& G, const ClassFunction& chi, unsigned n) { return cycle_sum(G, chi, n, true); }

std::vector<ClassFunction> level1_total(const Group& G, const ClassFunction& chi, unsigned d, int sign) {
  require_class_function(G, chi);
  const auto classes = chi.size();
  std::vector<ClassFunction> x(d + 1, ClassFunction(classes, Rational(0)));
  for (unsigned k = 1; k <= d; ++k) {
    const auto psi = adams(G, chi, k);
    for (std::size_t c = 0; c < classes; ++c) x[k][c] = sign * psi[c] / k;
  }
  std::vector<ClassFunction> e(d + 1, ClassFunction(classes, Rational(0)));
  e[0].assign(classes, Rational(1));
  for (unsigned k = 1; k <= d; ++k) {
    for (std::size_t c = 0; c < classes; ++c) {
      Rational s = 0;
      for (unsigned i = 1; i <= k; ++i) s += i * x[i][c] * e[k - i][c];
      e[k][c] = s / k;
    }
  }
  return e;
}

}  // namespace moonshine
