#include "vqcat/rational.hpp"

#include <algorithm>
#include <cctype>

#include "vqcat/errors.hpp"

namespace vqcat {

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(),
                                   [](unsigned char c) { return std::isdigit(c) != 0; });
}

mpz_class pow10(unsigned long exponent) {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), 10, exponent);
  return out;
}

Rational parse_unsigned_decimal(std::string_view text, std::string_view whole) {
  auto dot = text.find('.');
  std::string_view int_part = text.substr(0, dot);
  std::string_view frac_part = dot == std::string_view::npos ? std::string_view{} : text.substr(dot + 1);
  if (int_part.empty() && frac_part.empty()) {
    throw ParseError("not a number: '" + std::string(whole) + "'");
  }
  if ((!int_part.empty() && !all_digits(int_part)) ||
      (!frac_part.empty() && !all_digits(frac_part))) {
    throw ParseError("not a number: '" + std::string(whole) + "'");
  }
  std::string digits = std::string(int_part) + std::string(frac_part);
  if (digits.empty()) digits = "0";
  Rational r{mpz_class(digits, 10), pow10(frac_part.size())};
  r.canonicalize();
  return r;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) throw ParseError("empty number");

  bool negative = false;
  if (s.front() == '+' || s.front() == '-') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }

  Rational out;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    auto num = s.substr(0, slash);
    auto den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
      throw ParseError("not a fraction: '" + std::string(text) + "'");
    }
    mpz_class d(std::string{den}, 10);
    if (d == 0) throw ParseError("zero denominator: '" + std::string(text) + "'");
    out = Rational{mpz_class(std::string{num}, 10), d};
    out.canonicalize();
  } else {
    auto e = s.find_first_of("eE");
    out = parse_unsigned_decimal(s.substr(0, e), text);
    if (e != std::string_view::npos) {
      auto exp_text = s.substr(e + 1);
      bool exp_negative = false;
      if (!exp_text.empty() && (exp_text.front() == '+' || exp_text.front() == '-')) {
        exp_negative = exp_text.front() == '-';
        exp_text.remove_prefix(1);
      }
      if (!all_digits(exp_text) || exp_text.size() > 4) {
        throw ParseError("bad exponent: '" + std::string(text) + "'");
      }
      auto scale = pow10(std::stoul(std::string(exp_text)));
      if (exp_negative) {
        out /= Rational(scale);
      } else {
        out *= Rational(scale);
      }
    }
  }
  return negative ? Rational(-out) : out;
}

bool has_terminating_decimal(const Rational& value) {
  mpz_class d = value.get_den();
  while (d % 2 == 0) d /= 2;
  while (d % 5 == 0) d /= 5;
  return d == 1;
}

std::string format_fraction(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string format_decimal(const Rational& value) {
  if (!has_terminating_decimal(value)) return format_fraction(value);
  if (value.get_den() == 1) return value.get_num().get_str();

  unsigned long twos = 0, fives = 0;
  mpz_class d = value.get_den();
  while (d % 2 == 0) { d /= 2; ++twos; }
  while (d % 5 == 0) { d /= 5; ++fives; }
  unsigned long places = std::max(twos, fives);

  mpz_class num = value.get_num();
  bool negative = num < 0;
  if (negative) num = -num;
  mpz_class scaled = num * pow10(places) / value.get_den();
  std::string digits = scaled.get_str();
  if (digits.size() <= places) digits.insert(0, places - digits.size() + 1, '0');
  digits.insert(digits.size() - places, ".");
  return negative ? "-" + digits : digits;
}

}  // namespace vqcat
