#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "vqcat/law_report.hpp"
#include "vqcat/rational.hpp"

namespace vqcat {

/// Identity token of a quantale. Values remember the quantale they came from
/// so that mixing values of different quantales is caught.
using QuantaleId = std::uint32_t;

/// An element of a builtin quantale: a level index for the finite chains, an
/// extended non-negative rational for the cost quantale.
class Value {
 public:
  Value() = default;

  static Value level(QuantaleId domain, unsigned index);
  static Value finite_cost(QuantaleId domain, Rational amount);
  static Value infinite_cost(QuantaleId domain);

  QuantaleId domain() const noexcept { return domain_; }
  bool is_level() const noexcept { return kind_ == Kind::level; }
  bool is_cost() const noexcept { return kind_ != Kind::level; }
  bool is_infinite() const noexcept { return kind_ == Kind::infinite; }
  unsigned level_index() const noexcept { return level_; }
  /// Only meaningful for finite cost values.
  const Rational& amount() const;

  friend bool operator==(const Value& a, const Value& b);

 private:
  enum class Kind : std::uint8_t { level, finite, infinite };

  QuantaleId domain_ = 0;
  Kind kind_ = Kind::level;
  std::uint32_t level_ = 0;
  std::variant<std::monostate, Rational> amount_;
};

enum class Aggregate { join, meet };

/// A commutative unital quantale given by one of four builtins:
///
///   bool2           ({false < true}, and, true)
///   cost            ([0, inf] ordered by >=, +, 0); joins are real infima
///   lukasiewicz(n)  chain {0, 1/n, ..., 1}, x*y = max(0, x + y - 1), unit 1
///   three_chain     {bot < k < top}, k the unit, top*top = top
///
/// Descriptors are immutable and cheap to copy.
class Quantale {
 public:
  static Quantale bool2();
  static Quantale cost();
  static Quantale lukasiewicz(unsigned levels);
  static Quantale three_chain();

  /// `name` is one of bool2, cost, lukasiewicz, three_chain; lukasiewicz
  /// reads params["levels"] (>= 2).
  static Quantale make_builtin(const std::string& name,
                               const std::map<std::string, long long>& params = {});

  /// A finite chain with an arbitrary (possibly illegal) tensor table, used to
  /// exercise the law checker. Not a builtin and not validated.
  static Quantale chain_with_table(std::string name, unsigned size, unsigned unit,
                                   std::vector<unsigned> tensor_table);

  QuantaleId id() const noexcept;
  const std::string& name() const noexcept;   // e.g. "lukasiewicz(4)"
  const std::string& family() const noexcept; // e.g. "lukasiewicz"
  std::map<std::string, long long> params() const;

  bool is_finite() const noexcept;
  bool is_cost() const noexcept;
  /// Elements in increasing order (finite quantales only).
  std::span<const Value> elements() const;
  std::size_t size() const;

  bool leq(const Value& u, const Value& v) const;
  bool less(const Value& u, const Value& v) const { return leq(u, v) && !(u == v); }
  Value tensor(const Value& u, const Value& v) const;
  /// Greatest z with tensor(z, u) <= v.
  Value residual(const Value& u, const Value& v) const;
  Value join(const Value& u, const Value& v) const;
  Value meet(const Value& u, const Value& v) const;
  Value aggregate(std::span<const Value> values, Aggregate mode) const;

  const Value& unit() const noexcept;
  const Value& bottom() const noexcept;
  const Value& top() const noexcept;
  bool unit_is_top() const noexcept { return unit() == top(); }
  /// All builtins are completely distributive chains or [0, inf].
  bool completely_distributive() const noexcept;

  /// Level `index` of a finite chain.
  Value level(unsigned index) const;
  /// Cost value for a non-negative rational.
  Value cost_value(const Rational& amount) const;
  Value infinity() const;

  /// Throws DomainError unless `v` belongs to this quantale.
  void require_member(const Value& v) const;
  bool contains(const Value& v) const noexcept;

  /// Printable form: "true"/"false" (bool2), "p/q" or "inf" (cost),
  /// "i/n" (lukasiewicz), "bot"/"k"/"top" (three_chain).
  std::string format(const Value& v) const;
  /// Inverse of format, also accepting decimals for cost and level
  /// fractions 0, 1/2, 1 for three_chain.
  Value parse(const std::string& text) const;

  friend bool operator==(const Quantale& a, const Quantale& b) noexcept {
    return a.id() == b.id();
  }

  /// Opaque representation shared by copies.
  struct Impl;

 private:
  explicit Quantale(std::shared_ptr<const Impl> impl);

  std::shared_ptr<const Impl> impl_;
};

enum class LawCheckMode { exhaustive, sampled };

struct LawCheckOptions {
  LawCheckMode mode = LawCheckMode::exhaustive;
  std::uint64_t seed = 0;
  std::size_t samples = 1000;
};

/// Commutativity, associativity, unit, bottom absorption, binary and finite
/// join distribution, the residuation adjunction and k > bottom. Exhaustive
/// mode needs a finite carrier; sampled mode draws triples from
/// {0, 1/4, 1/2, 1, 2, inf} (cost) or the carrier (finite).
LawReport check_quantale_laws(const Quantale& q, const LawCheckOptions& options = {});

}  // namespace vqcat
