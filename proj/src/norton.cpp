#include "moonshine/norton.hpp"

#include <algorithm>
#include <numbers>
#include <numeric>
#include <random>
#include <stdexcept>

#include "moonshine/series_io.hpp"

namespace moonshine {

namespace {

CycloElem mul_lifted(const CycloElem& a, const CycloElem& b) {
  const auto common = static_cast<std::uint32_t>(std::lcm<std::uint64_t>(a.order(), b.order()));
  return a.embed(common) * b.embed(common);
}

Elem conj_rep(const Group& G, Elem g) {
  const auto& pc = G.pair_classification();
  return pc.conjugacy_classes()[pc.conjugacy_index(g)].rep;
}

}  // namespace

// ---------------------------------------------------------------- NortonSeries

NortonSeries::NortonSeries(Group group, std::vector<PuiseuxSeries> values, std::map<Elem, TwistData> twist)
    : group_(std::move(group)), values_(std::move(values)) {
  if (values_.size() != group_.pair_classes().size()) {
    throw std::invalid_argument("Norton series needs " + std::to_string(group_.pair_classes().size()) +
                                " class values, got " + std::to_string(values_.size()));
  }
  for (const auto& [g, t] : twist) {
    if (g >= group_.order()) throw std::invalid_argument("twist data for an element outside the group");
    const std::int64_t n = group_.element_order(g);
    if (t.n != n) {
      throw std::invalid_argument("twist data for " + group_.element_label(g) + " has n=" + std::to_string(t.n) +
                                  " but the element has order " + std::to_string(n));
    }
    twist_[conj_rep(group_, g)] = t;
  }
}

NortonSeries NortonSeries::constant(Group group, const PuiseuxSeries& value) {
  const auto count = group.pair_classes().size();
  return NortonSeries(std::move(group), std::vector<PuiseuxSeries>(count, value));
}

std::optional<TwistData> NortonSeries::twist_for(Elem g) const {
  const auto it = twist_.find(conj_rep(group_, g));
  if (it == twist_.end()) return std::nullopt;
  return it->second;
}

const PuiseuxSeries& NortonSeries::evaluate(Elem g, Elem h) const {
  if (g >= group_.order() || h >= group_.order()) throw std::invalid_argument("element outside the group");
  return values_[group_.pair_classification().index_of(g, h)];
}

Trunc NortonSeries::common_trunc() const {
  Trunc t = Trunc::exact();
  for (const auto& v : values_) t = min(t, v.trunc());
  return t;
}

bool operator==(const NortonSeries& a, const NortonSeries& b) {
  if (a.group_ != b.group_ || a.values_ != b.values_ || a.twist_.size() != b.twist_.size()) return false;
  for (const auto& [g, t] : a.twist_) {
    const auto it = b.twist_.find(g);
    if (it == b.twist_.end() || it->second.s != t.s) return false;
  }
  return true;
}

namespace {

template <class Op>
NortonSeries classwise(const NortonSeries& a, const NortonSeries& b, Op op) {
  if (a.group() != b.group()) throw std::invalid_argument("classwise arithmetic over different groups");
  std::vector<PuiseuxSeries> values;
  for (std::size_t i = 0; i < a.values().size(); ++i) {
    auto [x, y] = lift_to_common_order(a.at_class(i), b.at_class(i));
    values.push_back(op(x, y).with_rational_order());
  }
  return NortonSeries(a.group(), std::move(values));
}

}  // namespace

NortonSeries operator+(const NortonSeries& a, const NortonSeries& b) {
  return classwise(a, b, [](const PuiseuxSeries& x, const PuiseuxSeries& y) { return x + y; });
}

NortonSeries operator-(const NortonSeries& a, const NortonSeries& b) {
  return classwise(a, b, [](const PuiseuxSeries& x, const PuiseuxSeries& y) { return x - y; });
}

NortonSeries operator*(const NortonSeries& a, const NortonSeries& b) {
  return classwise(a, b, [](const PuiseuxSeries& x, const PuiseuxSeries& y) { return x * y; });
}

NortonSeries scaled(const NortonSeries& f, const Rational& factor) {
  std::vector<PuiseuxSeries> values;
  for (const auto& v : f.values()) values.push_back(v.scaled(factor));
  return NortonSeries(f.group(), std::move(values));
}

bool agrees_with(const NortonSeries& a, const NortonSeries& b) {
  if (a.group() != b.group()) return false;
  for (std::size_t i = 0; i < a.values().size(); ++i) {
    if (!a.at_class(i).agrees_with(b.at_class(i))) return false;
  }
  return true;
}

// ---------------------------------------------------------------- T-equivariance

TReport check_T_equivariance(const NortonSeries& f) {
  const Group& G = f.group();
  const auto& classes = G.pair_classes();
  TReport report;
  report.compared_to = f.common_trunc();
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const auto [g, h] = classes[i].rep;
    TClassEntry e;
    e.class_index = i;
    e.rep = classes[i].rep;
    auto [A, B] = lift_to_common_order(f.evaluate(g, G.mul(g, h)), translate(f.evaluate(g, h), 1));
    const Trunc t = min(A.trunc(), B.trunc());
    A = A.truncated(t);
    B = B.truncated(t);
    if (A.is_zero() && B.is_zero()) {
      e.agrees = true;
      e.scalar = CycloElem(Rational(1));
    } else if (A.is_zero() || B.is_zero()) {
      e.note = "one side vanishes below the truncation, the other does not";
    } else if (*A.valuation() != *B.valuation()) {
      e.note = "leading exponents differ: " + to_string(*A.valuation()) + " vs " + to_string(*B.valuation());
    } else {
      const CycloElem lambda = A.terms().begin()->second * B.terms().begin()->second.inverse();
      if (!lambda.is_root_of_unity()) {
        e.note = "leading ratio " + lambda.to_string() + " is not a root of unity";
      } else if (!(A - B.scaled(lambda)).is_zero()) {
        e.note = "series are not proportional";
      } else {
        e.agrees = true;
        e.scalar = lambda;
      }
    }
    report.all_agree = report.all_agree && e.agrees;
    report.entries.push_back(std::move(e));
  }
  const auto& pc = G.pair_classification();
  for (auto& e : report.entries) {
    const auto [g, h] = e.rep;
    const auto n = G.element_order(g);
    CycloElem product(Rational(1));
    bool complete = true;
    Elem x = h;
    for (std::uint32_t k = 0; k < n && complete; ++k) {
      const auto& s = report.entries[pc.index_of(g, x)].scalar;
      if (!s) {
        complete = false;
      } else {
        product = mul_lifted(product, *s);
      }
      x = G.mul(g, x);
    }
    if (complete) e.monodromy = product;
  }
  return report;
}

// ---------------------------------------------------------------- numeric check

std::complex<double> mobius(const Matrix2& gamma, std::complex<double> tau) {
  return (static_cast<double>(gamma.a) * tau + static_cast<double>(gamma.b)) /
         (static_cast<double>(gamma.c) * tau + static_cast<double>(gamma.d));
}

namespace {

double last_term_magnitude(const PuiseuxSeries& f, std::complex<double> tau) {
  if (f.is_zero() || f.trunc().is_exact()) return 0.0;
  const auto& [e, c] = *f.terms().rbegin();
  const std::complex<double> two_pi_i(0.0, 2.0 * std::numbers::pi);
  return std::abs(c.to_complex() * std::exp(two_pi_i * e.get_d() * tau));
}

}  // namespace

NumericReport numeric_check(const NortonSeries& f, const Matrix2& gamma,
                            const std::vector<std::complex<double>>& samples, double tol) {
  if (gamma.det() != 1) throw std::invalid_argument("numeric_check needs a determinant-one matrix");
  if (!(tol > 0)) throw std::invalid_argument("numeric_check needs a positive tolerance");
  for (const auto& tau : samples) {
    if (!(tau.imag() > 0)) throw std::invalid_argument("sample outside the upper half plane");
  }
  const Group& G = f.group();
  NumericReport report;
  report.gamma = gamma;
  report.tolerance = tol;
  const auto& classes = G.pair_classes();
  for (std::size_t i = 0; i < classes.size(); ++i) {
    NumericClassEntry e;
    e.class_index = i;
    e.rep = classes[i].rep;
    e.image = sl2_act(G, e.rep, gamma);
    const PuiseuxSeries& lhs = f.evaluate(e.image.g, e.image.h);
    const PuiseuxSeries& rhs = f.evaluate(e.rep.g, e.rep.h);
    std::vector<std::complex<double>> A, B;
    for (const auto& tau : samples) {
      const auto moved = mobius(gamma, tau);
      A.push_back(lhs.evaluate(tau));
      B.push_back(rhs.evaluate(moved));
      if (last_term_magnitude(lhs, tau) > tol || last_term_magnitude(rhs, moved) > tol) e.divergent = true;
    }
    std::complex<double> s = 0.0;
    for (std::size_t k = 0; k < A.size(); ++k) s += A[k] * std::conj(B[k]);
    e.scalar = std::abs(s) > 0 ? s / std::abs(s) : std::complex<double>(1.0);
    for (std::size_t k = 0; k < A.size(); ++k) e.max_deviation = std::max(e.max_deviation, std::abs(A[k] - e.scalar * B[k]));
    report.max_deviation = std::max(report.max_deviation, e.max_deviation);
    report.any_divergent = report.any_divergent || e.divergent;
    report.entries.push_back(e);
  }
  report.passed = !report.any_divergent && report.max_deviation < tol;
  return report;
}

// ---------------------------------------------------------------- functoriality

Homomorphism make_homomorphism(Group source, Group target, std::vector<Elem> images) {
  if (images.size() != source.order()) throw std::invalid_argument("homomorphism needs one image per element");
  for (const Elem y : images) {
    if (y >= target.order()) throw std::invalid_argument("homomorphism image outside the target");
  }
  for (Elem x = 0; x < source.order(); ++x) {
    for (Elem y = 0; y < source.order(); ++y) {
      if (images[source.mul(x, y)] != target.mul(images[x], images[y])) {
        throw std::invalid_argument("map is not a homomorphism at (" + source.element_label(x) + ", " +
                                    source.element_label(y) + ")");
      }
    }
  }
  return {std::move(source), std::move(target), std::move(images)};
}

Homomorphism trivial_homomorphism(Group source, Group target) {
  std::vector<Elem> images(source.order(), target.identity());
  return make_homomorphism(std::move(source), std::move(target), std::move(images));
}

NortonSeries restrict(const NortonSeries& f, const Homomorphism& a) {
  if (a.target != f.group()) throw std::invalid_argument("restrict: homomorphism target is not the series' group");
  std::vector<PuiseuxSeries> values;
  for (const auto& cls : a.source.pair_classes()) values.push_back(f.evaluate(a(cls.rep.g), a(cls.rep.h)));
  return NortonSeries(a.source, std::move(values));
}

NortonSeries induce(const NortonSeries& f, const Homomorphism& a) {
  if (a.source != f.group()) throw std::invalid_argument("induce: homomorphism source is not the series' group");
  const Group& G = a.target;
  const auto& gclasses = G.pair_classes();
  const auto& gpc = G.pair_classification();
  std::vector<std::vector<PuiseuxSeries>> parts(gclasses.size());
  const auto& hclasses = a.source.pair_classes();
  for (std::size_t i = 0; i < hclasses.size(); ++i) {
    const auto& cls = hclasses[i];
    const auto target = gpc.index_of(a(cls.rep.g), a(cls.rep.h));
    parts[target].push_back(f.at_class(i).scaled(frac(static_cast<std::int64_t>(cls.class_size))));
  }
  const Trunc t = f.common_trunc();
  std::vector<PuiseuxSeries> values;
  for (std::size_t j = 0; j < gclasses.size(); ++j) {
    PuiseuxSeries sum = parts[j].empty() ? PuiseuxSeries::zero(t) : sum_lifted(parts[j]);
    const Rational weight = frac(static_cast<std::int64_t>(gclasses[j].centralizer_order), a.source.order());
    values.push_back(sum.scaled(weight));
  }
  return NortonSeries(G, std::move(values));
}

PuiseuxSeries inner_product(const NortonSeries& f1, const NortonSeries& f2) {
  if (f1.group() != f2.group()) throw std::invalid_argument("inner_product: series over different groups");
  const auto& classes = f1.group().pair_classes();
  std::vector<PuiseuxSeries> parts;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const Rational w = frac(1, static_cast<std::int64_t>(classes[i].centralizer_order));
    parts.push_back(multiply_lifted(f1.at_class(i), f2.at_class(i)).scaled(w));
  }
  return sum_lifted(std::move(parts));
}

// ---------------------------------------------------------------- twisted support

SupportReport validate_twisted_support(const NortonSeries& f) {
  SupportReport report;
  const auto& classes = f.group().pair_classes();
  for (std::size_t i = 0; i < classes.size(); ++i) {
    SupportEntry e;
    e.class_index = i;
    e.rep = classes[i].rep;
    if (const auto t = f.twist_for(e.rep.g)) {
      for (const auto& [exp, c] : f.at_class(i).terms()) {
        if (!t->admits(exp)) {
          e.ok = false;
          e.offending_exponent = exp;
          break;
        }
      }
    }
    report.all_ok = report.all_ok && e.ok;
    report.entries.push_back(std::move(e));
  }
  return report;
}

// ---------------------------------------------------------------- fixtures and I/O

NortonSeries random_norton(const Group& group, std::uint64_t seed, unsigned terms) {
  if (terms < 2) throw std::invalid_argument("random_norton needs at least two terms");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-5, 5);
  std::uniform_int_distribution<int> den(1, 3);
  std::vector<PuiseuxSeries> values;
  for (const auto& cls : group.pair_classes()) {
    const auto m = static_cast<std::int64_t>(group.element_order(cls.rep.g));
    PuiseuxSeries::Terms t;
    for (std::int64_t k = -1; k <= static_cast<std::int64_t>(terms) - 2; ++k) {
      const int p = num(rng);
      const int q = den(rng);
      if (p != 0) t.emplace(frac(k, m), CycloElem(frac(p, q)));
    }
    values.emplace_back(static_cast<std::uint32_t>(m), Trunc::at(frac(static_cast<std::int64_t>(terms) - 1, m)),
                        std::move(t));
  }
  return NortonSeries(group, std::move(values));
}

nlohmann::json group_to_json(const Group& group) {
  if (group.kind() != Group::Kind::Table) return group.name();
  const auto labels = group.labels();
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : group.table()) {
    nlohmann::json r = nlohmann::json::array();
    for (const Elem x : row) r.push_back(labels[x]);
    rows.push_back(r);
  }
  return {{"labels", labels}, {"table", rows}};
}

Group group_from_json(const nlohmann::json& j) {
  if (j.is_string()) {
    try {
      return parse_group_spec(j.get<std::string>());
    } catch (const CapExceeded&) {
      throw;
    } catch (const std::invalid_argument& e) {
      throw ParseError(std::string("group: ") + e.what());
    }
  }
  if (!j.is_object() || !j.contains("labels") || !j.contains("table")) {
    throw ParseError("group: expected a spec string or {labels, table}");
  }
  const auto& jl = j.at("labels");
  const auto& jt = j.at("table");
  if (!jl.is_array() || !jt.is_array()) throw ParseError("group: labels and table must be arrays");
  std::vector<std::string> labels;
  for (const auto& l : jl) {
    if (!l.is_string()) throw ParseError("group: labels must be strings");
    labels.push_back(l.get<std::string>());
  }
  auto index = [&](const nlohmann::json& v) -> Elem {
    if (v.is_number_unsigned() && v.get<std::uint64_t>() < labels.size()) return static_cast<Elem>(v.get<std::uint64_t>());
    if (v.is_string()) {
      const auto it = std::find(labels.begin(), labels.end(), v.get<std::string>());
      if (it != labels.end()) return static_cast<Elem>(it - labels.begin());
    }
    throw ParseError("group: table entry " + v.dump() + " is not an element");
  };
  std::vector<std::vector<Elem>> table;
  for (const auto& row : jt) {
    if (!row.is_array()) throw ParseError("group: table rows must be arrays");
    std::vector<Elem> r;
    for (const auto& v : row) r.push_back(index(v));
    table.push_back(std::move(r));
  }
  try {
    return Group::from_table(std::move(labels), std::move(table));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("group: ") + e.what());
  }
}

nlohmann::json norton_to_json(const NortonSeries& f) {
  const Group& G = f.group();
  nlohmann::json classes = nlohmann::json::array();
  for (std::size_t i = 0; i < G.pair_classes().size(); ++i) {
    const auto& rep = G.pair_classes()[i].rep;
    classes.push_back({{"rep", {G.element_label(rep.g), G.element_label(rep.h)}}, {"series", series_to_json(f.at_class(i))}});
  }
  nlohmann::json out = {{"group", group_to_json(G)}, {"classes", classes}};
  if (!f.twist().empty()) {
    nlohmann::json tw = nlohmann::json::array();
    for (const auto& [g, t] : f.twist()) tw.push_back({{"g", G.element_label(g)}, {"s", t.s}});
    out["twist"] = tw;
  }
  return out;
}

NortonSeries norton_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("group") || !j.contains("classes")) {
    throw ParseError("norton: expected {group, classes[, twist]}");
  }
  const Group G = group_from_json(j.at("group"));
  const auto& pc = G.pair_classification();
  const auto& jc = j.at("classes");
  if (!jc.is_array()) throw ParseError("norton: classes must be an array");
  std::vector<std::optional<PuiseuxSeries>> values(G.pair_classes().size());
  auto element = [&](const nlohmann::json& v, const std::string& where) -> Elem {
    const std::string label = v.is_string() ? v.get<std::string>() : v.dump();
    try {
      return G.parse_element(label);
    } catch (const std::invalid_argument& e) {
      throw ParseError(where + ": " + e.what());
    }
  };
  for (std::size_t k = 0; k < jc.size(); ++k) {
    const std::string where = "norton: classes[" + std::to_string(k) + "]";
    const auto& item = jc[k];
    if (!item.is_object() || !item.contains("rep") || !item.contains("series") || !item.at("rep").is_array() ||
        item.at("rep").size() != 2) {
      throw ParseError(where + ": expected {rep: [g, h], series}");
    }
    const Elem g = element(item.at("rep")[0], where);
    const Elem h = element(item.at("rep")[1], where);
    if (!G.commute(g, h)) throw ParseError(where + ": rep does not commute");
    const auto idx = pc.index_of(g, h);
    if (values[idx]) throw ParseError(where + ": class listed twice");
    try {
      values[idx] = series_from_json(item.at("series"));
    } catch (const ParseError& e) {
      throw ParseError(where + ": " + e.what());
    }
  }
  std::vector<PuiseuxSeries> vals;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!values[i]) {
      const auto& rep = G.pair_classes()[i].rep;
      throw ParseError("norton: no value for class (" + G.element_label(rep.g) + ", " + G.element_label(rep.h) + ")");
    }
    vals.push_back(std::move(*values[i]));
  }
  std::map<Elem, TwistData> twist;
  if (j.contains("twist")) {
    const auto& jt = j.at("twist");
    if (!jt.is_array()) throw ParseError("norton: twist must be an array");
    for (std::size_t k = 0; k < jt.size(); ++k) {
      const std::string where = "norton: twist[" + std::to_string(k) + "]";
      const auto& item = jt[k];
      if (!item.is_object() || !item.contains("g") || !item.contains("s") || !item.at("s").is_number_integer()) {
        throw ParseError(where + ": expected {g, s}");
      }
      const Elem g = element(item.at("g"), where);
      twist[g] = twist_data(G.element_order(g), item.at("s").get<std::int64_t>());
    }
  }
  try {
    return NortonSeries(G, std::move(vals), std::move(twist));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("norton: ") + e.what());
  }
}

}  // namespace moonshine
