#include "vqcat/quantale.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <random>
#include <sstream>

#include "vqcat/errors.hpp"

namespace vqcat {

// ---------------------------------------------------------------- Value

Value Value::level(QuantaleId domain, unsigned index) {
  Value v;
  v.domain_ = domain;
  v.kind_ = Kind::level;
  v.level_ = index;
  return v;
}

Value Value::finite_cost(QuantaleId domain, Rational amount) {
  Value v;
  v.domain_ = domain;
  v.kind_ = Kind::finite;
  // mpq_class(num, den) does not reduce, and equality compares raw parts.
  amount.canonicalize();
  v.amount_ = std::move(amount);
  return v;
}

Value Value::infinite_cost(QuantaleId domain) {
  Value v;
  v.domain_ = domain;
  v.kind_ = Kind::infinite;
  return v;
}

const Rational& Value::amount() const {
  if (kind_ != Kind::finite) throw DomainError("value has no finite cost amount");
  return std::get<Rational>(amount_);
}

bool operator==(const Value& a, const Value& b) {
  if (a.domain_ != b.domain_ || a.kind_ != b.kind_) return false;
  switch (a.kind_) {
    case Value::Kind::level: return a.level_ == b.level_;
    case Value::Kind::infinite: return true;
    case Value::Kind::finite: return std::get<Rational>(a.amount_) == std::get<Rational>(b.amount_);
  }
  return false;
}

// ---------------------------------------------------------------- Quantale

namespace {

enum class Family { bool2, cost, lukasiewicz, three_chain, table };

constexpr QuantaleId kBool2Id = 1;
constexpr QuantaleId kCostId = 2;
constexpr QuantaleId kThreeChainId = 3;
constexpr QuantaleId kLukasiewiczBase = 0x1000;
constexpr QuantaleId kTableBase = 0x80000000u;

std::atomic<QuantaleId> next_table_id{kTableBase};

}  // namespace

struct Quantale::Impl {
  Family family;
  QuantaleId id;
  std::string name;
  std::string family_name;
  unsigned levels = 0;  // lukasiewicz n
  unsigned size = 0;    // finite carrier size
  std::vector<unsigned> tensor;    // size*size
  std::vector<unsigned> residual;  // size*size, residual[u*size+v]
  std::vector<Value> elements;
  Value unit, bottom, top;

  unsigned t(unsigned a, unsigned b) const { return tensor[a * size + b]; }
};

namespace {

std::shared_ptr<Quantale::Impl> make_chain(Family family, QuantaleId id, std::string name,
                                           std::string family_name, unsigned size, unsigned unit,
                                           std::vector<unsigned> table) {
  auto impl = std::make_shared<Quantale::Impl>();
  impl->family = family;
  impl->id = id;
  impl->name = std::move(name);
  impl->family_name = std::move(family_name);
  impl->size = size;
  impl->tensor = std::move(table);
  impl->residual.assign(static_cast<std::size_t>(size) * size, 0);
  for (unsigned u = 0; u < size; ++u) {
    for (unsigned v = 0; v < size; ++v) {
      unsigned best = 0;
      for (unsigned z = 0; z < size; ++z) {
        if (impl->t(z, u) <= v) best = z;
      }
      impl->residual[u * size + v] = best;
    }
  }
  for (unsigned i = 0; i < size; ++i) impl->elements.push_back(Value::level(id, i));
  impl->unit = Value::level(id, unit);
  impl->bottom = Value::level(id, 0);
  impl->top = Value::level(id, size - 1);
  return impl;
}

}  // namespace

Quantale::Quantale(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

Quantale Quantale::bool2() {
  static const Quantale q = [] {
    std::vector<unsigned> table{0, 0, 0, 1};
    return Quantale(make_chain(Family::bool2, kBool2Id, "bool2", "bool2", 2, 1, table));
  }();
  return q;
}

Quantale Quantale::three_chain() {
  static const Quantale q = [] {
    // bot = 0, k = 1, top = 2
    std::vector<unsigned> table{0, 0, 0, 0, 1, 2, 0, 2, 2};
    return Quantale(make_chain(Family::three_chain, kThreeChainId, "three_chain",
                               "three_chain", 3, 1, table));
  }();
  return q;
}

Quantale Quantale::lukasiewicz(unsigned levels) {
  if (levels < 2) throw DomainError("lukasiewicz needs levels >= 2");
  unsigned size = levels + 1;
  std::vector<unsigned> table(static_cast<std::size_t>(size) * size);
  for (unsigned a = 0; a < size; ++a) {
    for (unsigned b = 0; b < size; ++b) {
      table[a * size + b] = a + b > levels ? a + b - levels : 0;
    }
  }
  auto impl = make_chain(Family::lukasiewicz, kLukasiewiczBase + levels,
                         "lukasiewicz(" + std::to_string(levels) + ")", "lukasiewicz", size,
                         levels, std::move(table));
  impl->levels = levels;
  return Quantale(std::move(impl));
}

Quantale Quantale::cost() {
  static const Quantale q = [] {
    auto impl = std::make_shared<Impl>();
    impl->family = Family::cost;
    impl->id = kCostId;
    impl->name = "cost";
    impl->family_name = "cost";
    impl->unit = Value::finite_cost(kCostId, Rational(0));
    impl->top = impl->unit;
    impl->bottom = Value::infinite_cost(kCostId);
    return Quantale(std::move(impl));
  }();
  return q;
}

Quantale Quantale::make_builtin(const std::string& name,
                                const std::map<std::string, long long>& params) {
  if (name == "bool2") return bool2();
  if (name == "cost") return cost();
  if (name == "three_chain") return three_chain();
  if (name == "lukasiewicz") {
    auto it = params.find("levels");
    if (it == params.end()) throw DomainError("lukasiewicz requires params.levels");
    if (it->second < 2) throw DomainError("lukasiewicz needs levels >= 2, got " + std::to_string(it->second));
    return lukasiewicz(static_cast<unsigned>(it->second));
  }
  throw DomainError("unknown quantale builtin '" + name + "'");
}

Quantale Quantale::chain_with_table(std::string name, unsigned size, unsigned unit,
                                    std::vector<unsigned> tensor_table) {
  if (size < 2 || unit >= size || tensor_table.size() != static_cast<std::size_t>(size) * size) {
    throw DomainError("malformed tensor table");
  }
  for (unsigned e : tensor_table) {
    if (e >= size) throw DomainError("tensor table entry out of range");
  }
  QuantaleId id = next_table_id.fetch_add(1);
  return Quantale(make_chain(Family::table, id, name, "table", size, unit, std::move(tensor_table)));
}

QuantaleId Quantale::id() const noexcept { return impl_->id; }
const std::string& Quantale::name() const noexcept { return impl_->name; }
const std::string& Quantale::family() const noexcept { return impl_->family_name; }

std::map<std::string, long long> Quantale::params() const {
  if (impl_->family == Family::lukasiewicz) return {{"levels", impl_->levels}};
  return {};
}

bool Quantale::is_finite() const noexcept { return impl_->family != Family::cost; }
bool Quantale::is_cost() const noexcept { return impl_->family == Family::cost; }

std::span<const Value> Quantale::elements() const {
  if (!is_finite()) throw DomainError("the cost quantale has no finite element list");
  return impl_->elements;
}

std::size_t Quantale::size() const {
  if (!is_finite()) throw DomainError("the cost quantale is infinite");
  return impl_->size;
}

bool Quantale::contains(const Value& v) const noexcept {
  if (v.domain() != impl_->id) return false;
  if (is_finite()) return v.is_level() && v.level_index() < impl_->size;
  return v.is_cost();
}

void Quantale::require_member(const Value& v) const {
  if (!contains(v)) throw DomainError("value does not belong to quantale " + impl_->name);
}

namespace {

// Cost comparisons in real terms; infinity is the largest real.
int cost_compare(const Value& a, const Value& b) {
  if (a.is_infinite()) return b.is_infinite() ? 0 : 1;
  if (b.is_infinite()) return -1;
  return cmp(a.amount(), b.amount());
}

}  // namespace

bool Quantale::leq(const Value& u, const Value& v) const {
  require_member(u);
  require_member(v);
  if (is_finite()) return u.level_index() <= v.level_index();
  return cost_compare(u, v) >= 0;  // reversed order
}

Value Quantale::tensor(const Value& u, const Value& v) const {
  require_member(u);
  require_member(v);
  if (is_finite()) return impl_->elements[impl_->t(u.level_index(), v.level_index())];
  if (u.is_infinite() || v.is_infinite()) return impl_->bottom;
  return Value::finite_cost(impl_->id, u.amount() + v.amount());
}

Value Quantale::residual(const Value& u, const Value& v) const {
  require_member(u);
  require_member(v);
  if (is_finite()) {
    return impl_->elements[impl_->residual[u.level_index() * impl_->size + v.level_index()]];
  }
  // greatest z (smallest real) with z + u >= v
  if (u.is_infinite()) return impl_->top;
  if (v.is_infinite()) return impl_->bottom;
  Rational diff = v.amount() - u.amount();
  if (sgn(diff) <= 0) return impl_->top;
  return Value::finite_cost(impl_->id, diff);
}

Value Quantale::join(const Value& u, const Value& v) const {
  return leq(u, v) ? v : u;
}

Value Quantale::meet(const Value& u, const Value& v) const {
  return leq(u, v) ? u : v;
}

Value Quantale::aggregate(std::span<const Value> values, Aggregate mode) const {
  Value acc = mode == Aggregate::join ? impl_->bottom : impl_->top;
  for (const auto& v : values) acc = mode == Aggregate::join ? join(acc, v) : meet(acc, v);
  return acc;
}

const Value& Quantale::unit() const noexcept { return impl_->unit; }
const Value& Quantale::bottom() const noexcept { return impl_->bottom; }
const Value& Quantale::top() const noexcept { return impl_->top; }

bool Quantale::completely_distributive() const noexcept { return impl_->family != Family::table; }

Value Quantale::level(unsigned index) const {
  if (!is_finite() || index >= impl_->size) {
    throw DomainError("level " + std::to_string(index) + " not in " + impl_->name);
  }
  return impl_->elements[index];
}

Value Quantale::cost_value(const Rational& amount) const {
  if (!is_cost()) throw DomainError(impl_->name + " has no cost values");
  if (sgn(amount) < 0) throw DomainError("cost values must be non-negative");
  return Value::finite_cost(impl_->id, amount);
}

Value Quantale::infinity() const {
  if (!is_cost()) throw DomainError(impl_->name + " has no infinity");
  return impl_->bottom;
}

std::string Quantale::format(const Value& v) const {
  require_member(v);
  switch (impl_->family) {
    case Family::bool2: return v.level_index() ? "true" : "false";
    case Family::three_chain: {
      static const char* names[] = {"bot", "k", "top"};
      return names[v.level_index()];
    }
    case Family::lukasiewicz: {
      Rational r(v.level_index(), impl_->levels);
      r.canonicalize();
      return format_fraction(r);
    }
    case Family::cost: return v.is_infinite() ? "inf" : format_fraction(v.amount());
    case Family::table: return std::to_string(v.level_index());
  }
  return "?";
}

Value Quantale::parse(const std::string& text) const {
  switch (impl_->family) {
    case Family::bool2:
      if (text == "true" || text == "1" || text == "top") return level(1);
      if (text == "false" || text == "0" || text == "bot") return level(0);
      break;
    case Family::three_chain:
      if (text == "bot" || text == "0") return level(0);
      if (text == "k" || text == "1/2" || text == "0.5") return level(1);
      if (text == "top" || text == "1") return level(2);
      break;
    case Family::lukasiewicz: {
      Rational r = parse_rational(text);
      Rational scaled = r * impl_->levels;
      if (scaled.get_den() == 1 && sgn(scaled) >= 0 && scaled <= impl_->levels) {
        return level(static_cast<unsigned>(scaled.get_num().get_ui()));
      }
      break;
    }
    case Family::cost:
      if (text == "inf" || text == "infinity" || text == "Infinity") return infinity();
      return cost_value(parse_rational(text));
    case Family::table: {
      Rational r = parse_rational(text);
      if (r.get_den() == 1 && sgn(r) >= 0 && r < impl_->size) {
        return level(static_cast<unsigned>(r.get_num().get_ui()));
      }
      break;
    }
  }
  throw ParseError("'" + text + "' is not an element of " + impl_->name);
}

// ---------------------------------------------------------------- law checks

namespace {

struct LawChecker {
  const Quantale& q;
  LawReport& report;

  std::string f(const Value& v) const { return q.format(v); }

  bool expect_eq(const char* law, const Value& lhs, const Value& rhs,
                 std::vector<std::pair<std::string, std::string>> inputs) {
    ++report.instances;
    if (lhs == rhs) return true;
    report.fail({law, std::move(inputs), f(lhs), "!=", f(rhs)});
    return false;
  }

  bool triple(const Value& u, const Value& v, const Value& w) {
    std::vector<std::pair<std::string, std::string>> in{{"u", f(u)}, {"v", f(v)}, {"w", f(w)}};
    if (!expect_eq("commutativity", q.tensor(u, v), q.tensor(v, u), {{"u", f(u)}, {"v", f(v)}}))
      return false;
    if (!expect_eq("unit", q.tensor(q.unit(), u), u, {{"u", f(u)}})) return false;
    if (!expect_eq("associativity", q.tensor(u, q.tensor(v, w)), q.tensor(q.tensor(u, v), w), in))
      return false;
    if (!expect_eq("bottom absorption", q.tensor(u, q.bottom()), q.bottom(), {{"u", f(u)}}))
      return false;
    if (!expect_eq("join distributivity", q.tensor(u, q.join(v, w)),
                   q.join(q.tensor(u, v), q.tensor(u, w)), in))
      return false;
    ++report.instances;
    // residuation: w <= (u -o v)  <=>  w (x) u <= v
    bool left = q.leq(w, q.residual(u, v));
    bool right = q.leq(q.tensor(w, u), v);
    if (left != right) {
      report.fail({"residuation", in,
                   "[z <= residual(u,v)] = " + std::string(left ? "true" : "false"), "!=",
                   "[z*u <= v] = " + std::string(right ? "true" : "false")});
      report.counterexample->inputs.push_back({"z", f(w)});
      return false;
    }
    ++report.instances;
    if (q.leq(u, v) && q.leq(v, w) && !q.leq(u, w)) {
      report.fail({"order transitivity", in, "u<=v, v<=w", "but not", "u<=w"});
      return false;
    }
    return true;
  }
};

}  // namespace

LawReport check_quantale_laws(const Quantale& q, const LawCheckOptions& options) {
  auto start = std::chrono::steady_clock::now();
  LawReport report;
  report.suite = "quantale:" + q.name();
  LawChecker check{q, report};

  ++report.instances;
  if (!q.less(q.bottom(), q.unit())) {
    report.fail({"k > bottom", {}, q.format(q.unit()), "not >", q.format(q.bottom())});
  }

  if (options.mode == LawCheckMode::exhaustive) {
    if (!q.is_finite()) {
      report.skip("exhaustive law check needs a finite carrier");
      return report;
    }
    auto els = q.elements();
    for (const auto& u : els) {
      for (const auto& v : els) {
        for (const auto& w : els) {
          if (report.failed()) break;
          check.triple(u, v, w);
        }
      }
    }
    // Distribution over every finite subset, including the empty one.
    std::size_t n = els.size();
    if (n <= 16 && !report.failed()) {
      for (std::size_t mask = 0; mask < (std::size_t{1} << n) && !report.failed(); ++mask) {
        std::vector<Value> subset;
        for (std::size_t i = 0; i < n; ++i) {
          if (mask >> i & 1) subset.push_back(els[i]);
        }
        for (const auto& u : els) {
          std::vector<Value> products;
          for (const auto& s : subset) products.push_back(q.tensor(u, s));
          std::string label = "{";
          for (std::size_t i = 0; i < subset.size(); ++i) label += (i ? "," : "") + q.format(subset[i]);
          label += "}";
          if (!check.expect_eq("finite join distributivity",
                               q.tensor(u, q.aggregate(subset, Aggregate::join)),
                               q.aggregate(products, Aggregate::join),
                               {{"u", q.format(u)}, {"S", label}}))
            break;
        }
      }
    }
  } else {
    std::vector<Value> pool;
    if (q.is_finite()) {
      pool.assign(q.elements().begin(), q.elements().end());
    } else {
      for (const char* s : {"0", "1/4", "1/2", "1", "2"}) pool.push_back(q.parse(s));
      pool.push_back(q.infinity());
    }
    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    for (std::size_t i = 0; i < options.samples && !report.failed(); ++i) {
      const Value& u = pool[pick(rng)];
      const Value& v = pool[pick(rng)];
      const Value& w = pool[pick(rng)];
      check.triple(u, v, w);
      if (report.failed()) break;
      std::vector<Value> subset{v, w, pool[pick(rng)]};
      std::vector<Value> products;
      for (const auto& s : subset) products.push_back(q.tensor(u, s));
      check.expect_eq("finite join distributivity", q.tensor(u, q.aggregate(subset, Aggregate::join)),
                      q.aggregate(products, Aggregate::join), {{"u", q.format(u)}});
    }
  }
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace vqcat
