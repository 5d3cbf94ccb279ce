#include "moonshine/groups.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <sstream>

namespace moonshine {

namespace {

constexpr std::uint32_t kTableLimit = 720;
constexpr std::uint32_t kUnassigned = UINT32_MAX;

std::atomic<unsigned> g_symmetric_cap{kDefaultSymmetricCap};

std::uint32_t parse_count(const std::string& text, const std::string& context) {
  if (text.empty() || !std::all_of(text.begin(), text.end(), [](unsigned char ch) { return std::isdigit(ch); })) {
    throw std::invalid_argument("bad " + context + " '" + text + "'");
  }
  const auto v = std::stoull(text);
  if (v == 0 || v > UINT32_MAX) throw std::invalid_argument("bad " + context + " '" + text + "'");
  return static_cast<std::uint32_t>(v);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

std::string strip(std::string s) {
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char ch) { return std::isspace(ch); }), s.end());
  return s;
}

std::uint64_t factorial(unsigned n) {
  std::uint64_t f = 1;
  for (unsigned k = 2; k <= n; ++k) f *= k;
  return f;
}

}  // namespace

unsigned symmetric_cap() { return g_symmetric_cap.load(); }
void set_symmetric_cap(unsigned cap) { g_symmetric_cap.store(cap); }

// ---------------------------------------------------------------- permutations

std::uint32_t perm_rank(const Perm& p) {
  const auto n = static_cast<unsigned>(p.size());
  std::uint32_t rank = 0;
  for (unsigned i = 0; i < n; ++i) {
    unsigned smaller = 0;
    for (unsigned j = i + 1; j < n; ++j) smaller += p[j] < p[i] ? 1U : 0U;
    rank = rank * (n - i) + smaller;
  }
  return rank;
}

Perm perm_unrank(std::uint32_t rank, unsigned n) {
  std::vector<unsigned> digits(n);
  for (unsigned i = n; i-- > 0;) {
    const unsigned base = n - i;
    digits[i] = rank % base;
    rank /= base;
  }
  std::vector<std::uint8_t> pool(n);
  std::iota(pool.begin(), pool.end(), std::uint8_t{0});
  Perm p(n);
  for (unsigned i = 0; i < n; ++i) {
    p[i] = pool[digits[i]];
    pool.erase(pool.begin() + digits[i]);
  }
  return p;
}

Perm perm_compose(const Perm& p, const Perm& q) {
  Perm r(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) r[x] = p[q[x]];
  return r;
}

Perm perm_inverse(const Perm& p) {
  Perm r(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) r[p[x]] = static_cast<std::uint8_t>(x);
  return r;
}

// ---------------------------------------------------------------- Impl

struct Group::Impl {
  Kind kind = Kind::Cyclic;
  std::uint32_t order = 1;
  Elem identity = 0;
  std::vector<std::uint32_t> moduli;  // Cyclic / Abelian
  unsigned degree = 0;                // Symmetric
  std::vector<std::uint8_t> perm_data;
  std::vector<std::string> labels;  // Table
  std::vector<Elem> table;          // flattened, empty when too large
  std::vector<Elem> inverse;

  mutable std::once_flag classified;
  mutable std::unique_ptr<PairClassification> classification;

  const std::uint8_t* perm(Elem x) const { return perm_data.data() + static_cast<std::size_t>(x) * degree; }

  Elem compute_mul(Elem x, Elem y) const {
    switch (kind) {
      case Kind::Cyclic:
        return static_cast<Elem>((static_cast<std::uint64_t>(x) + y) % order);
      case Kind::Abelian: {
        Elem r = 0;
        Elem place = 1;
        for (std::size_t i = moduli.size(); i-- > 0;) {
          const auto m = moduli[i];
          const Elem dx = (x / place) % m;
          const Elem dy = (y / place) % m;
          r += ((dx + dy) % m) * place;
          place *= m;
        }
        return r;
      }
      case Kind::Symmetric: {
        const auto* px = perm(x);
        const auto* py = perm(y);
        std::uint8_t buf[32];
        for (unsigned k = 0; k < degree; ++k) buf[k] = px[py[k]];
        std::uint32_t rank = 0;
        for (unsigned i = 0; i < degree; ++i) {
          unsigned smaller = 0;
          for (unsigned j = i + 1; j < degree; ++j) smaller += buf[j] < buf[i] ? 1U : 0U;
          rank = rank * (degree - i) + smaller;
        }
        return rank;
      }
      case Kind::Table:
        break;
    }
    return table[static_cast<std::size_t>(x) * order + y];
  }

  Elem mul(Elem x, Elem y) const {
    if (!table.empty()) return table[static_cast<std::size_t>(x) * order + y];
    return compute_mul(x, y);
  }

  void finish() {
    if (kind != Kind::Table && order <= kTableLimit) {
      std::vector<Elem> t(static_cast<std::size_t>(order) * order);
      for (Elem x = 0; x < order; ++x) {
        for (Elem y = 0; y < order; ++y) t[static_cast<std::size_t>(x) * order + y] = compute_mul(x, y);
      }
      table = std::move(t);
    }
    inverse.assign(order, 0);
    if (kind == Kind::Symmetric) {
      for (Elem x = 0; x < order; ++x) {
        Perm p(perm(x), perm(x) + degree);
        inverse[x] = perm_rank(perm_inverse(p));
      }
    } else if (kind == Kind::Cyclic || kind == Kind::Abelian) {
      for (Elem x = 0; x < order; ++x) {
        for (Elem y = 0; y < order; ++y) {
          if (mul(x, y) == identity) {
            inverse[x] = y;
            break;
          }
        }
      }
    }
  }
};

Group Group::trivial() { return cyclic(1); }

Group Group::cyclic(std::uint32_t n) {
  if (n == 0) throw std::invalid_argument("cyclic group order must be positive");
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::Cyclic;
  impl->order = n;
  impl->moduli = {n};
  impl->finish();
  return Group(std::move(impl));
}

Group Group::abelian(std::vector<std::uint32_t> moduli) {
  if (moduli.empty()) return trivial();
  if (moduli.size() == 1) return cyclic(moduli[0]);
  std::uint64_t order = 1;
  for (auto m : moduli) {
    if (m == 0) throw std::invalid_argument("cyclic factor order must be positive");
    order *= m;
    if (order > UINT32_MAX) throw std::invalid_argument("abelian group too large");
  }
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::Abelian;
  impl->order = static_cast<std::uint32_t>(order);
  impl->moduli = std::move(moduli);
  impl->finish();
  return Group(std::move(impl));
}

Group Group::symmetric(unsigned n) {
  if (n == 0) throw std::invalid_argument("symmetric group degree must be positive");
  if (n > symmetric_cap()) {
    throw CapExceeded("S" + std::to_string(n) + " exceeds the enumeration cap " + std::to_string(symmetric_cap()));
  }
  if (n > 12) throw CapExceeded("S" + std::to_string(n) + " does not fit 32-bit element indices");
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::Symmetric;
  impl->degree = n;
  impl->order = static_cast<std::uint32_t>(factorial(n));
  impl->perm_data.resize(static_cast<std::size_t>(impl->order) * n);
  Perm p(n);
  std::iota(p.begin(), p.end(), std::uint8_t{0});
  Elem idx = 0;
  do {
    std::copy(p.begin(), p.end(), impl->perm_data.begin() + static_cast<std::ptrdiff_t>(idx) * n);
    ++idx;
  } while (std::next_permutation(p.begin(), p.end()));
  impl->finish();
  return Group(std::move(impl));
}

Group Group::from_table(std::vector<std::string> labels, std::vector<std::vector<Elem>> table) {
  const auto n = table.size();
  if (n == 0) throw std::invalid_argument("Cayley table is empty");
  if (labels.size() != n) throw std::invalid_argument("Cayley table needs one label per element");
  for (std::size_t i = 0; i < n; ++i) {
    if (labels[i].empty()) throw std::invalid_argument("empty element label");
    for (std::size_t j = 0; j < i; ++j) {
      if (labels[i] == labels[j]) throw std::invalid_argument("duplicate element label '" + labels[i] + "'");
    }
  }
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::Table;
  impl->order = static_cast<std::uint32_t>(n);
  impl->table.resize(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    if (table[x].size() != n) throw std::invalid_argument("Cayley table row " + std::to_string(x) + " has wrong length");
    for (std::size_t y = 0; y < n; ++y) {
      if (table[x][y] >= n) throw std::invalid_argument("Cayley table entry out of range");
      impl->table[x * n + y] = table[x][y];
    }
  }
  const auto at = [&](Elem x, Elem y) { return impl->table[static_cast<std::size_t>(x) * n + y]; };
  std::optional<Elem> e;
  for (Elem x = 0; x < n && !e; ++x) {
    bool ok = true;
    for (Elem y = 0; y < n && ok; ++y) ok = at(x, y) == y && at(y, x) == y;
    if (ok) e = x;
  }
  if (!e) throw std::invalid_argument("Cayley table has no identity element");
  impl->identity = *e;
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      for (Elem z = 0; z < n; ++z) {
        if (at(at(x, y), z) != at(x, at(y, z))) {
          throw std::invalid_argument("Cayley table is not associative at (" + labels[x] + "," + labels[y] + "," +
                                      labels[z] + ")");
        }
      }
    }
  }
  impl->inverse.assign(n, kUnassigned);
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      if (at(x, y) == *e && at(y, x) == *e) {
        impl->inverse[x] = y;
        break;
      }
    }
    if (impl->inverse[x] == kUnassigned) throw std::invalid_argument("element '" + labels[x] + "' has no inverse");
  }
  impl->labels = std::move(labels);
  return Group(std::move(impl));
}

Group::Kind Group::kind() const { return impl_->kind; }
std::uint32_t Group::order() const { return impl_->order; }
Elem Group::identity() const { return impl_->identity; }
Elem Group::mul(Elem x, Elem y) const { return impl_->mul(x, y); }
Elem Group::inv(Elem x) const { return impl_->inverse[x]; }

Elem Group::pow(Elem x, std::int64_t k) const {
  if (k < 0) {
    x = inv(x);
    k = -k;
  }
  Elem result = identity();
  while (k != 0) {
    if (k & 1) result = mul(result, x);
    k >>= 1;
    if (k != 0) x = mul(x, x);
  }
  return result;
}

std::uint32_t Group::element_order(Elem x) const {
  std::uint32_t k = 1;
  for (Elem y = x; y != identity(); y = mul(y, x)) ++k;
  return k;
}

std::string Group::name() const {
  switch (impl_->kind) {
    case Kind::Cyclic:
      return impl_->order == 1 ? "1" : "Z/" + std::to_string(impl_->order);
    case Kind::Abelian: {
      std::string s;
      for (std::size_t i = 0; i < impl_->moduli.size(); ++i) {
        if (i != 0) s += "x";
        s += "Z/" + std::to_string(impl_->moduli[i]);
      }
      return s;
    }
    case Kind::Symmetric:
      return "S" + std::to_string(impl_->degree);
    case Kind::Table:
      break;
  }
  return "table(" + std::to_string(impl_->order) + ")";
}

std::string Group::element_label(Elem x) const {
  switch (impl_->kind) {
    case Kind::Cyclic:
      return std::to_string(x);
    case Kind::Abelian: {
      std::vector<Elem> digits(impl_->moduli.size());
      for (std::size_t i = digits.size(); i-- > 0;) {
        digits[i] = x % impl_->moduli[i];
        x /= impl_->moduli[i];
      }
      std::string s;
      for (std::size_t i = 0; i < digits.size(); ++i) s += (i ? "," : "") + std::to_string(digits[i]);
      return s;
    }
    case Kind::Symmetric: {
      std::string s = "[";
      for (unsigned k = 0; k < impl_->degree; ++k) s += (k ? "," : "") + std::to_string(impl_->perm(x)[k] + 1);
      return s + "]";
    }
    case Kind::Table:
      break;
  }
  return impl_->labels[x];
}

Elem Group::parse_element(const std::string& raw) const {
  const std::string label = impl_->kind == Kind::Table ? raw : strip(raw);
  auto fail = [&]() -> Elem { throw std::invalid_argument("'" + raw + "' is not an element of " + name()); };
  try {
    switch (impl_->kind) {
      case Kind::Cyclic: {
        const auto v = std::stoll(label);
        if (std::to_string(v) != label) return fail();
        return static_cast<Elem>(((v % impl_->order) + impl_->order) % impl_->order);
      }
      case Kind::Abelian: {
        std::string body = label;
        if (body.size() >= 2 && body.front() == '(' && body.back() == ')') body = body.substr(1, body.size() - 2);
        const auto parts = split(body, ',');
        if (parts.size() != impl_->moduli.size()) return fail();
        Elem x = 0;
        for (std::size_t i = 0; i < parts.size(); ++i) {
          const auto v = std::stoll(parts[i]);
          if (std::to_string(v) != parts[i]) return fail();
          const std::int64_t m = impl_->moduli[i];
          x = static_cast<Elem>(x * m + ((v % m) + m) % m);
        }
        return x;
      }
      case Kind::Symmetric: {
        if (label.size() < 2 || label.front() != '[' || label.back() != ']') return fail();
        const auto parts = split(label.substr(1, label.size() - 2), ',');
        if (parts.size() != impl_->degree) return fail();
        Perm p(parts.size());
        std::vector<bool> seen(parts.size(), false);
        for (std::size_t i = 0; i < parts.size(); ++i) {
          const auto v = std::stoul(parts[i]);
          if (v < 1 || v > parts.size() || seen[v - 1]) return fail();
          seen[v - 1] = true;
          p[i] = static_cast<std::uint8_t>(v - 1);
        }
        return perm_rank(p);
      }
      case Kind::Table:
        break;
    }
  } catch (const std::logic_error&) {
    return fail();
  }
  const auto it = std::find(impl_->labels.begin(), impl_->labels.end(), label);
  if (it == impl_->labels.end()) return fail();
  return static_cast<Elem>(it - impl_->labels.begin());
}

const std::vector<std::uint32_t>& Group::moduli() const {
  if (impl_->kind != Kind::Cyclic && impl_->kind != Kind::Abelian) {
    throw std::logic_error(name() + " is not a product of cyclic groups");
  }
  return impl_->moduli;
}

unsigned Group::degree() const {
  if (impl_->kind != Kind::Symmetric) throw std::logic_error(name() + " is not a symmetric group");
  return impl_->degree;
}

Perm Group::permutation(Elem x) const {
  const auto d = degree();
  return Perm(impl_->perm(x), impl_->perm(x) + d);
}

Elem Group::from_permutation(const Perm& p) const {
  if (p.size() != degree()) throw std::invalid_argument("permutation degree mismatch");
  return perm_rank(p);
}

std::vector<std::string> Group::labels() const {
  if (impl_->kind == Kind::Table) return impl_->labels;
  std::vector<std::string> out;
  for (Elem x = 0; x < order(); ++x) out.push_back(element_label(x));
  return out;
}

std::vector<std::vector<Elem>> Group::table() const {
  std::vector<std::vector<Elem>> out(order(), std::vector<Elem>(order()));
  for (Elem x = 0; x < order(); ++x) {
    for (Elem y = 0; y < order(); ++y) out[x][y] = mul(x, y);
  }
  return out;
}

bool operator==(const Group& a, const Group& b) {
  if (a.impl_ == b.impl_) return true;
  const auto& x = *a.impl_;
  const auto& y = *b.impl_;
  if (x.kind != y.kind || x.order != y.order) return false;
  switch (x.kind) {
    case Group::Kind::Cyclic:
    case Group::Kind::Abelian:
      return x.moduli == y.moduli;
    case Group::Kind::Symmetric:
      return x.degree == y.degree;
    case Group::Kind::Table:
      break;
  }
  return x.labels == y.labels && x.table == y.table;
}

// ---------------------------------------------------------------- classification

const PairClassification& Group::pair_classification() const {
  const Impl& impl = *impl_;
  std::call_once(impl.classified, [this, &impl] {
    auto pc = std::make_unique<PairClassification>();
    pc->impl_ = &impl;
    const std::uint32_t n = order();
    pc->elem_class_.assign(n, kUnassigned);
    pc->conj_to_rep_.assign(n, identity());
    for (Elem g = 0; g < n; ++g) {
      if (pc->elem_class_[g] != kUnassigned) continue;
      const auto ci = static_cast<std::uint32_t>(pc->conj_classes_.size());
      PairClassification::RepData rd;
      std::uint64_t class_size = 0;
      for (Elem c = 0; c < n; ++c) {
        const Elem x = conj(c, g);
        if (x == g) rd.centralizer.push_back(c);
        if (pc->elem_class_[x] == kUnassigned) {
          pc->elem_class_[x] = ci;
          pc->conj_to_rep_[x] = inv(c);
          ++class_size;
        }
      }
      const std::uint64_t cent = rd.centralizer.size();
      pc->conj_classes_.push_back({g, class_size, cent});
      const auto& C = rd.centralizer;
      rd.pair_of.assign(C.size(), kUnassigned);
      for (std::size_t i = 0; i < C.size(); ++i) {
        if (rd.pair_of[i] != kUnassigned) continue;
        const auto k = static_cast<std::uint32_t>(pc->classes_.size());
        std::uint64_t orbit = 0;
        for (const Elem c : C) {
          const Elem y = conj(c, C[i]);
          const auto j = static_cast<std::size_t>(std::lower_bound(C.begin(), C.end(), y) - C.begin());
          if (rd.pair_of[j] == kUnassigned) {
            rd.pair_of[j] = k;
            ++orbit;
          }
        }
        pc->classes_.push_back({{g, C[i]}, class_size * orbit, cent / orbit});
      }
      pc->rep_data_.push_back(std::move(rd));
    }
    impl.classification = std::move(pc);
  });
  return *impl.classification;
}

const std::vector<PairClass>& Group::pair_classes() const { return pair_classification().classes(); }

std::size_t PairClassification::index_of(Elem g, Elem h) const {
  if (impl_->mul(g, h) != impl_->mul(h, g)) throw std::invalid_argument("pair does not commute");
  const auto ci = elem_class_[g];
  const Elem c = conj_to_rep_[g];
  const Elem h2 = impl_->mul(impl_->mul(c, h), impl_->inverse[c]);
  const auto& rd = rep_data_[ci];
  const auto it = std::lower_bound(rd.centralizer.begin(), rd.centralizer.end(), h2);
  return rd.pair_of[static_cast<std::size_t>(it - rd.centralizer.begin())];
}

std::uint64_t PairClassification::commuting_pair_count() const {
  std::uint64_t total = 0;
  for (const auto& c : classes_) total += c.class_size;
  return total;
}

// ---------------------------------------------------------------- helpers

Group parse_group_spec(const std::string& raw) {
  const std::string spec = strip(raw);
  if (spec == "1" || spec == "trivial") return Group::trivial();
  if (!spec.empty() && spec[0] == 'S') return Group::symmetric(parse_count(spec.substr(1), "symmetric degree"));
  std::vector<std::uint32_t> moduli;
  for (const auto& part : split(spec, 'x')) {
    if (part.rfind("Z/", 0) != 0) throw std::invalid_argument("unknown group spec '" + raw + "'");
    moduli.push_back(parse_count(part.substr(2), "cyclic order"));
  }
  if (moduli.empty()) throw std::invalid_argument("empty group spec");
  return Group::abelian(std::move(moduli));
}

const Group& symmetric_group(unsigned n) {
  if (n > symmetric_cap()) {
    throw CapExceeded("S" + std::to_string(n) + " exceeds the enumeration cap " + std::to_string(symmetric_cap()));
  }
  static std::mutex mutex;
  static std::map<unsigned, Group> cache;
  const Group* g = nullptr;
  {
    std::lock_guard lock(mutex);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, Group::symmetric(n)).first;
    g = &it->second;
  }
  g->pair_classification();
  return *g;
}

CommutingPair sl2_act(const Group& G, CommutingPair p, const Matrix2& gamma) {
  if (gamma.det() != 1) throw std::invalid_argument("sl2_act needs a determinant-one matrix");
  if (!G.commute(p.g, p.h)) throw std::invalid_argument("sl2_act needs a commuting pair");
  return {G.mul(G.pow(p.g, gamma.a), G.pow(p.h, gamma.c)), G.mul(G.pow(p.g, gamma.b), G.pow(p.h, gamma.d))};
}

}  // namespace moonshine
