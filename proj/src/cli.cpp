#include "moonshine/cli.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>

#include <CLI11.hpp>

#include "moonshine/cocycles.hpp"
#include "moonshine/hecke.hpp"
#include "moonshine/lattice.hpp"
#include "moonshine/norton.hpp"
#include "moonshine/power_ops.hpp"
#include "moonshine/series_io.hpp"

namespace moonshine {

namespace {

using nlohmann::json;

class Table {
 public:
  explicit Table(std::vector<std::string> headers) : rows_{std::move(headers)} {}

  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

  std::string render() const {
    std::vector<std::size_t> width;
    for (const auto& row : rows_) {
      width.resize(std::max(width.size(), row.size()), 0);
      for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
    }
    std::ostringstream out;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      for (std::size_t i = 0; i < rows_[r].size(); ++i) {
        out << rows_[r][i];
        if (i + 1 < rows_[r].size()) out << std::string(width[i] - rows_[r][i].size() + 2, ' ');
      }
      out << '\n';
      if (r == 0) {
        std::size_t total = 0;
        for (const auto w : width) total += w + 2;
        out << std::string(total > 2 ? total - 2 : 0, '-') << '\n';
      }
    }
    return out.str();
  }

 private:
  std::vector<std::vector<std::string>> rows_;
};

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string show(const Rational& r) { return r.get_str(); }

std::string show(const CycloElem& c) {
  const auto q = c.try_rational();
  return q ? show(*q) : c.to_string();
}

std::string show(const Trunc& t) { return t.is_exact() ? "inf" : show(t.bound()); }

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

PuiseuxSeries load_series(const std::string& path) {
  try {
    return parse_series(read_file(path));
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

NortonSeries load_norton(const std::string& path) {
  const std::string text = read_file(path);
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": byte " + std::to_string(e.byte) + ": malformed JSON");
  }
  try {
    return norton_from_json(j);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

std::string pair_label(const Group& G, const CommutingPair& p) {
  return "(" + G.element_label(p.g) + ", " + G.element_label(p.h) + ")";
}

std::string perm_label(const Perm& p) {
  std::string s = "[";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i] + 1);
  return s + "]";
}

std::string triple_label(const Sublattice& t) {
  return "(" + std::to_string(t.a) + "," + std::to_string(t.b) + "," + std::to_string(t.d) + ")";
}

std::string matrix_label(const Matrix2& m) {
  return "[[" + std::to_string(m.a) + "," + std::to_string(m.b) + "],[" + std::to_string(m.c) + "," +
         std::to_string(m.d) + "]]";
}

void require_positive(unsigned v, const char* name) {
  if (v == 0) throw std::invalid_argument(std::string(name) + " must be positive");
}

// Series input shared by faber/replicates/replicability: a file, or j - 744 through `j_order`.
PuiseuxSeries series_input(const RunConfig& c, unsigned j_order) {
  if (c.series_path) return load_series(*c.series_path);
  if (!c.use_j) throw std::invalid_argument("give --series FILE or --j");
  return j_expansion(j_order);
}

// Norton input: a file, j - 744 on the trivial group, or a seeded random fixture.
NortonSeries norton_input(const RunConfig& c) {
  if (c.norton_path) return load_norton(*c.norton_path);
  if (c.use_j) return NortonSeries::constant(Group::trivial(), j_expansion(c.order.value_or(30)));
  return random_norton(parse_group_spec(c.group), c.seed, c.terms);
}

json norton_values_json(const NortonSeries& f) {
  json classes = json::array();
  const auto& pcs = f.group().pair_classes();
  for (std::size_t i = 0; i < pcs.size(); ++i) {
    classes.push_back({{"rep", {f.group().element_label(pcs[i].rep.g), f.group().element_label(pcs[i].rep.h)}},
                       {"trunc", show(f.at_class(i).trunc())},
                       {"series", series_to_json(f.at_class(i))}});
  }
  return classes;
}

// ---------------------------------------------------------------- commands

RunResult cmd_j_expand(const RunConfig& c) {
  require_positive(c.terms, "--terms");
  const PuiseuxSeries j = j_expansion(c.terms - 1);
  Table t({"exponent", "coefficient"});
  json rows = json::array();
  for (const auto& [e, v] : j.terms()) {
    t.add({show(e), show(v)});
    rows.push_back({to_string(e), v.to_string()});
  }
  RunResult r;
  r.text = "j - 744, " + std::to_string(c.terms) + " terms, known below q^" + show(j.trunc()) + "\n" + t.render();
  r.report = {{"terms", rows}, {"trunc", show(j.trunc())}};
  return r;
}

RunResult cmd_faber(const RunConfig& c) {
  require_positive(c.n, "--n");
  const PuiseuxSeries f = series_input(c, c.order.value_or(c.n + 10));
  const FaberResult phi = faber(f, c.n);
  Table t({"k", "coefficient of f^k"});
  json poly = json::array();
  for (std::size_t k = 0; k < phi.coefficients.size(); ++k) {
    t.add({std::to_string(k), show(phi.coefficients[k])});
    poly.push_back(to_string(phi.coefficients[k]));
  }
  RunResult r;
  r.text = "Faber polynomial Phi_" + std::to_string(c.n) + "\n" + t.render() + "Phi_" + std::to_string(c.n) +
           "(f) = " + pretty_series(phi.series) + "\n";
  r.report = {{"n", c.n}, {"polynomial", poly}, {"series", series_to_json(phi.series)}};
  return r;
}

RunResult cmd_replicates(const RunConfig& c) {
  require_positive(c.n_max, "--nmax");
  const unsigned target = c.order.value_or(8);
  const Rational input_order = replicate_input_order(c.n_max, target + 2);
  const PuiseuxSeries f = series_input(c, static_cast<unsigned>(to_int64(input_order.get_num())) - 1);
  const ReplicateResult res = extract_replicates(f, c.n_max);

  RunResult r;
  Table t({"a", "known below", "target met", "equals f", "f^(a)"});
  json reps = json::array();
  bool all_equal = true;
  for (const auto& [a, s] : res.replicates) {
    const bool met = s.trunc().is_exact() || s.trunc().bound() > target;
    const bool equal = s.agrees_with(f);
    all_equal = all_equal && equal;
    t.add({std::to_string(a), show(s.trunc()), yes_no(met), yes_no(equal), pretty_series(s, 5)});
    reps.push_back({{"a", a}, {"trunc", show(s.trunc())}, {"target_met", met}, {"equals_f", equal},
                    {"series", series_to_json(s)}});
  }
  r.text = "input known below q^" + show(f.trunc()) + ", target order " + std::to_string(target) + "\n" + t.render();
  r.report = {{"input_trunc", show(f.trunc())}, {"target_order", target}, {"replicates", reps}};
  if (res.failure) {
    r.exit_code = kVerificationFailed;
    r.text += "not replicable at n = " + std::to_string(res.failure->n) + ", exponent " + to_string(res.failure->exponent) +
              ": " + res.failure->reason + "\n";
    r.report["failure"] = {{"n", res.failure->n}, {"exponent", to_string(res.failure->exponent)}, {"reason", res.failure->reason}};
  } else if (c.use_j && !all_equal) {
    r.exit_code = kVerificationFailed;
  }
  return r;
}

RunResult cmd_hecke(const RunConfig& c) {
  require_positive(c.n, "--n");
  const NortonSeries f = norton_input(c);
  RunResult r;
  if (c.impl == "classical") {
    if (f.group().order() != 1) throw std::invalid_argument("--impl classical needs the trivial group");
    const PuiseuxSeries& base = f.at_class(0);
    const ReplicateResult reps = extract_replicates(base, c.n);
    if (!reps.ok()) throw std::invalid_argument("input is not replicable at n = " + std::to_string(reps.failure->n) + ": " + reps.failure->reason);
    const PuiseuxSeries out = hecke_classical(base, c.n, reps.replicates);
    r.text = "T_" + std::to_string(c.n) + " (classical) = " + pretty_series(out) + "\n";
    r.report = {{"n", c.n}, {"impl", c.impl}, {"trunc", show(out.trunc())}, {"series", series_to_json(out)}};
    return r;
  }
  NortonSeries out = [&] {
    if (c.impl == "geometric") return hecke_geometric(f, c.n);
    if (c.impl == "combinatorial") return hecke_combinatorial(f, c.n);
    throw std::invalid_argument("--impl must be geometric, combinatorial or classical");
  }();
  Table t({"class", "pair", "known below", "T_n f"});
  const auto& pcs = out.group().pair_classes();
  for (std::size_t i = 0; i < pcs.size(); ++i) {
    t.add({std::to_string(i), pair_label(out.group(), pcs[i].rep), show(out.at_class(i).trunc()),
           pretty_series(out.at_class(i), 5)});
  }
  r.text = "T_" + std::to_string(c.n) + " (" + c.impl + ") over " + out.group().name() + "\n" + t.render();
  r.report = {{"n", c.n}, {"impl", c.impl}, {"group", group_to_json(out.group())}, {"classes", norton_values_json(out)}};
  return r;
}

RunResult cmd_verify_hecke(const RunConfig& c) {
  const std::vector<unsigned> ns = c.n_list.empty() ? std::vector<unsigned>{c.n} : c.n_list;
  for (const auto n : ns) require_positive(n, "--n-list entries");
  const NortonSeries f = norton_input(c);
  const bool classical = c.use_j && f.group().order() == 1;
  RunResult r;
  Table t({"n", "class", "pair", "compared below", "geometric = combinatorial", "geometric = classical"});
  json entries = json::array();
  bool ok = true;
  for (const auto n : ns) {
    std::optional<ReplicateResult> reps;
    if (classical) reps = extract_replicates(f.at_class(0), n);
    const HeckeReport h = verify_equivalence(f, n, reps && reps->ok() ? &reps->replicates : nullptr);
    ok = ok && h.agrees;
    const auto& pcs = f.group().pair_classes();
    for (std::size_t i = 0; i < pcs.size(); ++i) {
      const bool zero = h.deltas[i].is_zero();
      std::string cl = "-";
      if (h.classical_delta && i == 0) cl = yes_no(h.classical_delta->is_zero());
      t.add({std::to_string(n), std::to_string(i), pair_label(f.group(), pcs[i].rep), show(h.compared_to), yes_no(zero), cl});
      json e = {{"n", n}, {"class", i}, {"compared_to", show(h.compared_to)}, {"delta_zero", zero},
                {"delta", series_to_json(h.deltas[i])}};
      if (h.classical_delta && i == 0) e["classical_delta_zero"] = h.classical_delta->is_zero();
      entries.push_back(e);
    }
  }
  r.exit_code = ok ? kOk : kVerificationFailed;
  r.text = "Hecke equivalence over " + f.group().name() + ": " + (ok ? "all deltas zero" : "MISMATCH") + "\n" + t.render();
  r.report = {{"group", f.group().name()}, {"agrees", ok}, {"entries", entries}};
  return r;
}

RunResult cmd_verify_replicability(const RunConfig& c) {
  const unsigned order = c.order.value_or(4);
  require_positive(order, "--order");
  const PuiseuxSeries f = c.series_path ? load_series(*c.series_path) : j_expansion(10 * (order + 1));
  const ReplicabilityReport rep = verify_replicability(f, order);
  Table t({"n", "lambda_(n+1)", "known below", "constant", "expected", "match"});
  json entries = json::array();
  for (const auto& e : rep.entries) {
    const std::string value = e.constant ? show(*e.constant) : pretty_series(e.lambda, 4);
    t.add({std::to_string(e.n), value, show(e.lambda.trunc()), yes_no(e.is_constant), show(e.expected), yes_no(e.matches)});
    entries.push_back({{"n", e.n}, {"lambda", series_to_json(e.lambda)}, {"trunc", show(e.lambda.trunc())},
                       {"is_constant", e.is_constant}, {"expected", to_string(e.expected)}, {"matches", e.matches}});
  }
  RunResult r;
  r.exit_code = rep.identity_holds ? kOk : kVerificationFailed;
  r.text = std::string("replicability identity through t^") + std::to_string(order) + ": " +
           (rep.identity_holds ? "holds" : "FAILS") + "\n" + t.render();
  r.report = {{"order", order}, {"all_constant", rep.all_constant}, {"identity_holds", rep.identity_holds}, {"entries", entries}};
  return r;
}

RunResult cmd_verify_sym_exp(const RunConfig& c) {
  require_positive(c.var_order, "--t-order");
  const NortonSeries f = norton_input(c);
  const SymExpReport rep = verify_sym_exp_identity(f, c.var_order);
  Table t({"k", "compared below", "sym_k = exp coefficient", "(Sym_t Lambda_-t)_k = delta_k0"});
  json entries = json::array();
  for (unsigned k = 0; k <= c.var_order; ++k) {
    t.add({std::to_string(k), show(rep.compared_to[k]), yes_no(rep.degree_agrees[k]), yes_no(rep.inverse_ok[k])});
    entries.push_back({{"k", k}, {"compared_to", show(rep.compared_to[k])}, {"sym_matches_exp", rep.degree_agrees[k]},
                       {"inverse_ok", rep.inverse_ok[k]}});
  }
  RunResult r;
  r.exit_code = rep.agrees ? kOk : kVerificationFailed;
  r.text = "Sym_t = exp(sum T_k t^k) over " + f.group().name() + ": " + (rep.agrees ? "holds" : "FAILS") + "\n" + t.render();
  r.report = {{"group", f.group().name()}, {"t_order", c.var_order}, {"agrees", rep.agrees}, {"entries", entries}};
  return r;
}

RunResult cmd_pairs(const RunConfig& c) {
  const Group G = parse_group_spec(c.group);
  Table t({"class", "g", "h", "class size", "centralizer"});
  json rows = json::array();
  const auto& pcs = G.pair_classes();
  for (std::size_t i = 0; i < pcs.size(); ++i) {
    const auto& p = pcs[i];
    t.add({std::to_string(i), G.element_label(p.rep.g), G.element_label(p.rep.h), std::to_string(p.class_size),
           std::to_string(p.centralizer_order)});
    rows.push_back({{"g", G.element_label(p.rep.g)}, {"h", G.element_label(p.rep.h)}, {"class_size", p.class_size},
                    {"centralizer", p.centralizer_order}});
  }
  RunResult r;
  r.text = G.name() + ": " + std::to_string(pcs.size()) + " commuting-pair classes\n" + t.render();
  r.report = {{"group", G.name()}, {"classes", rows}};
  return r;
}

RunResult cmd_transitive(const RunConfig& c) {
  require_positive(c.n, "--n");
  const auto classes = transitive_pair_classes(c.n);
  Table t({"(a,b,d)", "sigma", "rho", "centralizer"});
  json rows = json::array();
  for (const auto& tc : classes) {
    t.add({triple_label(tc.triple), perm_label(tc.sigma), perm_label(tc.rho), std::to_string(tc.cls.centralizer_order)});
    rows.push_back({{"triple", {tc.triple.a, tc.triple.b, tc.triple.d}}, {"sigma", perm_label(tc.sigma)},
                    {"rho", perm_label(tc.rho)}, {"centralizer", tc.cls.centralizer_order}});
  }
  RunResult r;
  r.text = std::to_string(classes.size()) + " transitive commuting-pair classes in S" + std::to_string(c.n) + "\n" + t.render();
  r.report = {{"n", c.n}, {"classes", rows}};
  return r;
}

struct CocycleRow {
  std::int64_t n, s;
  bool cocycle, normalized;
  Rational action;
  std::int64_t order;
  TwistData twist;
  std::int64_t restricted;
  bool ok;
};

CocycleRow cocycle_row(std::int64_t n, std::int64_t s) {
  const CyclicCocycle alpha(n, s);
  CocycleRow row{n, alpha.s(), coboundary_check(alpha), is_normalized(alpha), tn_action(alpha), 0, twist_data(n, s), 0, false};
  row.order = order_mod_one(row.action);
  row.restricted = restrict_to_power(alpha, row.twist.h).s();
  row.ok = row.cocycle && row.normalized && row.action == frac(alpha.s(), n) && row.order == row.twist.h &&
           row.order == n / std::gcd(n, alpha.s()) && row.restricted == 0;
  return row;
}

RunResult cmd_cocycle(const RunConfig& c) {
  require_positive(c.n, "--n");
  if (c.n > 16) throw std::invalid_argument("--n must be at most 16 for the exhaustive coboundary check");
  std::vector<CocycleRow> rows;
  if (c.check_all) {
    for (std::int64_t n = 1; n <= c.n; ++n) {
      for (std::int64_t s = 0; s < n; ++s) rows.push_back(cocycle_row(n, s));
    }
  } else {
    rows.push_back(cocycle_row(c.n, c.s));
  }
  Table t({"n", "s", "cocycle", "normalized", "T^n action", "order", "h", "N", "offset", "restricted to g^h", "ok"});
  json out = json::array();
  bool ok = true;
  for (const auto& w : rows) {
    ok = ok && w.ok;
    t.add({std::to_string(w.n), std::to_string(w.s), yes_no(w.cocycle), yes_no(w.normalized), show(w.action),
           std::to_string(w.order), std::to_string(w.twist.h), std::to_string(w.twist.N), show(w.twist.lattice_offset()),
           std::to_string(w.restricted), yes_no(w.ok)});
    out.push_back({{"n", w.n}, {"s", w.s}, {"cocycle", w.cocycle}, {"normalized", w.normalized},
                   {"tn_action", to_string(w.action)}, {"order", w.order}, {"h", w.twist.h}, {"N", w.twist.N},
                   {"lattice_offset", to_string(w.twist.lattice_offset())}, {"restricted_class", w.restricted}, {"ok", w.ok}});
  }
  RunResult r;
  r.exit_code = ok ? kOk : kVerificationFailed;
  r.text = t.render();
  r.report = {{"all_ok", ok}, {"rows", out}};
  return r;
}

RunResult cmd_fricke(const RunConfig& c) {
  require_positive(c.n, "--n");
  const auto n = static_cast<std::int64_t>(c.n);
  std::vector<std::int64_t> gens;
  if (c.generator) {
    gens.push_back(*c.generator);
  } else {
    for (std::int64_t g = 0; g < n; ++g) {
      if (std::gcd(g, n) == 1) gens.push_back(g);
    }
  }
  const std::complex<double> fixed(0.0, 1.0 / std::sqrt(static_cast<double>(n)));
  Table t({"g", "W", "W^2", "|W(i/sqrt n) - i/sqrt n|"});
  json rows = json::array();
  bool ok = true;
  for (const auto g : gens) {
    const FrickePoint p = fricke(n, g);
    const FrickePoint twice = fricke_twice(p);
    const Matrix2& w2 = twice.tau_map;
    const bool scalar = w2.b == 0 && w2.c == 0 && w2.a == w2.d && w2.a == -n;
    const double dev = std::abs(p.apply(fixed) - fixed);
    ok = ok && scalar && dev < 1e-12;
    t.add({std::to_string(p.g), matrix_label(p.tau_map), matrix_label(w2), std::to_string(dev)});
    rows.push_back({{"g", p.g}, {"W", matrix_label(p.tau_map)}, {"W2", matrix_label(w2)}, {"involution", scalar}, {"fixed_point_deviation", dev}});
  }
  RunResult r;
  r.exit_code = ok ? kOk : kVerificationFailed;
  r.text = "Fricke involution at level " + std::to_string(n) + "\n" + t.render();
  r.report = {{"n", n}, {"involution", ok}, {"rows", rows}};
  return r;
}

RunResult cmd_random_norton(const RunConfig& c) {
  require_positive(c.terms, "--terms");
  const NortonSeries f = random_norton(parse_group_spec(c.group), c.seed, c.terms);
  RunResult r;
  r.report = norton_to_json(f);
  r.text = r.report.dump(2) + "\n";
  return r;
}

const char* command_name(Command c) {
  switch (c) {
    case Command::JExpand: return "j-expand";
    case Command::Faber: return "faber";
    case Command::Replicates: return "replicates";
    case Command::Hecke: return "hecke";
    case Command::VerifyHeckeEquivalence: return "verify hecke-equivalence";
    case Command::VerifyReplicability: return "verify replicability";
    case Command::VerifySymExp: return "verify sym-exp-identity";
    case Command::Pairs: return "pairs";
    case Command::Transitive: return "transitive";
    case Command::Cocycle: return "cocycle";
    case Command::Fricke: return "fricke";
    case Command::RandomNorton: return "random-norton";
  }
  return "?";
}

RunResult dispatch(const RunConfig& c) {
  switch (c.command) {
    case Command::JExpand: return cmd_j_expand(c);
    case Command::Faber: return cmd_faber(c);
    case Command::Replicates: return cmd_replicates(c);
    case Command::Hecke: return cmd_hecke(c);
    case Command::VerifyHeckeEquivalence: return cmd_verify_hecke(c);
    case Command::VerifyReplicability: return cmd_verify_replicability(c);
    case Command::VerifySymExp: return cmd_verify_sym_exp(c);
    case Command::Pairs: return cmd_pairs(c);
    case Command::Transitive: return cmd_transitive(c);
    case Command::Cocycle: return cmd_cocycle(c);
    case Command::Fricke: return cmd_fricke(c);
    case Command::RandomNorton: return cmd_random_norton(c);
  }
  throw std::invalid_argument("unknown command");
}

}  // namespace

RunResult run(const RunConfig& config) {
  try {
    for (const auto* path : {&config.series_path, &config.norton_path}) {
      if (*path && !std::ifstream(**path)) throw ParseError("cannot read " + **path);
    }
    RunResult r = dispatch(config);
    if (config.command != Command::RandomNorton) {
      r.report["command"] = command_name(config.command);
      r.report["exit_code"] = r.exit_code;
    }
    return r;
  } catch (const std::invalid_argument& e) {  // ParseError, CapExceeded, OrderMismatch
    return {kInputError, std::string("error: ") + e.what() + "\n", {{"error", e.what()}}};
  } catch (const std::domain_error& e) {  // TruncationError
    return {kInputError, std::string("error: ") + e.what() + "\n", {{"error", e.what()}}};
  } catch (const nlohmann::json::exception& e) {
    return {kInputError, std::string("error: ") + e.what() + "\n", {{"error", e.what()}}};
  }
}

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Norton series, Hecke operators and power operations"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig c;
  std::string format = "table";
  app.add_option("--out", c.out_path, "write the structured report here");
  app.add_option("--format", format, "table or structured")->check(CLI::IsMember({"table", "structured"}));
  app.add_option("--seed", c.seed, "seed for random fixtures");

  auto add_series_source = [&](CLI::App* sub) {
    auto* file = sub->add_option("--series", c.series_path, "series file");
    sub->add_flag("--j", c.use_j, "use j - 744")->excludes(file);
  };
  auto add_norton_source = [&](CLI::App* sub) {
    auto* file = sub->add_option("--norton", c.norton_path, "Norton series file (JSON)");
    sub->add_flag("--j", c.use_j, "use j - 744 on the trivial group")->excludes(file);
    sub->add_option("--group", c.group, "group spec for the random fixture");
    sub->add_option("--terms", c.terms, "terms per class in the random fixture");
    sub->add_option("--order", c.order, "q-order of j - 744 with --j");
  };

  auto* j_expand = app.add_subcommand("j-expand", "coefficients of j - 744");
  j_expand->add_option("--terms", c.terms, "number of nonzero terms")->required();

  auto* faber_cmd = app.add_subcommand("faber", "Faber polynomial of a normalized series");
  faber_cmd->add_option("--n", c.n)->required();
  faber_cmd->add_option("--order", c.order, "q-order of j - 744 with --j");
  add_series_source(faber_cmd);

  auto* replicates = app.add_subcommand("replicates", "extract replicates f^(a)");
  replicates->add_option("--nmax", c.n_max)->required();
  replicates->add_option("--order", c.order, "target q-order of each replicate");
  add_series_source(replicates);

  auto* hecke = app.add_subcommand("hecke", "apply T_n");
  hecke->add_option("--impl", c.impl)->check(CLI::IsMember({"geometric", "combinatorial", "classical"}));
  hecke->add_option("--n", c.n)->required();
  add_norton_source(hecke);

  auto* verify = app.add_subcommand("verify", "verification suites");
  verify->require_subcommand(1);
  verify->fallthrough();
  auto* v_hecke = verify->add_subcommand("hecke-equivalence", "geometric = combinatorial (= classical)");
  v_hecke->add_option("--n-list", c.n_list)->delimiter(',');
  v_hecke->add_option("--n", c.n);
  add_norton_source(v_hecke);
  auto* v_rep = verify->add_subcommand("replicability", "f(t) - f(q) = t^-1 Lambda_-t(f(q))");
  v_rep->add_option("--order", c.order, "t-order");
  v_rep->add_option("--series", c.series_path, "series file (default j - 744)");
  auto* v_sym = verify->add_subcommand("sym-exp-identity", "Sym_t = exp(sum T_k t^k)");
  v_sym->add_option("--t-order", c.var_order);
  add_norton_source(v_sym);

  auto* pairs = app.add_subcommand("pairs", "commuting-pair classes of a group");
  pairs->add_option("--group", c.group)->required();

  auto* transitive = app.add_subcommand("transitive", "transitive commuting pairs in S_n");
  transitive->add_option("--n", c.n)->required();

  auto* cocycle = app.add_subcommand("cocycle", "cyclic 3-cocycle data");
  cocycle->add_option("--n", c.n)->required();
  cocycle->add_option("--s", c.s);
  cocycle->add_flag("--check-all", c.check_all, "every n' <= n and every class");

  auto* fricke_cmd = app.add_subcommand("fricke", "Fricke involution on cyclic points");
  fricke_cmd->add_option("--n", c.n)->required();
  fricke_cmd->add_option("--g", c.generator, "generator of Z/n");

  auto* random = app.add_subcommand("random-norton", "seeded random Norton series");
  random->add_option("--group", c.group)->required();
  random->add_option("--terms", c.terms);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  c.format = format == "structured" ? Format::Structured : Format::Table;
  if (*j_expand) c.command = Command::JExpand;
  else if (*faber_cmd) c.command = Command::Faber;
  else if (*replicates) c.command = Command::Replicates;
  else if (*hecke) c.command = Command::Hecke;
  else if (*v_hecke) c.command = Command::VerifyHeckeEquivalence;
  else if (*v_rep) c.command = Command::VerifyReplicability;
  else if (*v_sym) c.command = Command::VerifySymExp;
  else if (*pairs) c.command = Command::Pairs;
  else if (*transitive) c.command = Command::Transitive;
  else if (*cocycle) c.command = Command::Cocycle;
  else if (*fricke_cmd) c.command = Command::Fricke;
  else if (*random) c.command = Command::RandomNorton;

  const RunResult r = run(c);
  if (r.exit_code == kInputError) {
    err << r.text;
    return r.exit_code;
  }
  if (c.format == Format::Structured) {
    out << r.report.dump(2) << '\n';
  } else {
    out << r.text;
  }
  if (c.out_path) {
    std::ofstream file(*c.out_path);
    if (!file) {
      err << "error: cannot write " << *c.out_path << '\n';
      return kInputError;
    }
    file << r.report.dump(2) << '\n';
  }
  return r.exit_code;
}

}  // namespace moonshine
