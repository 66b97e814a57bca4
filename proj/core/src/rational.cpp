#include "eadm/rational.hpp"

#include <cctype>
#include <cstdio>
#include <cstdlib>

namespace eadm {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

// [+-]?digits
bool signed_digits(std::string_view s, std::string_view* digits, bool* negative) {
  *negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    *negative = s.front() == '-';
    s.remove_prefix(1);
  }
  *digits = s;
  return all_digits(s);
}

}  // namespace

std::optional<Rational> parse_rational(std::string_view text) {
  if (text.empty()) return std::nullopt;

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    std::string_view num = text.substr(0, slash);
    std::string_view den = text.substr(slash + 1);
    std::string_view num_digits;
    bool negative = false;
    if (!signed_digits(num, &num_digits, &negative) || !all_digits(den)) {
      return std::nullopt;
    }
    mpz_class n(std::string(num_digits), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) return std::nullopt;
    Rational r(negative ? mpz_class(-n) : n, d);
    r.canonicalize();
    return r;
  }

  // Decimal form: [+-]digits[.digits][(e|E)[+-]digits]
  std::string_view rest = text;
  bool negative = false;
  if (rest.front() == '+' || rest.front() == '-') {
    negative = rest.front() == '-';
    rest.remove_prefix(1);
  }
  std::string mantissa;
  long frac_digits = 0;
  long exponent = 0;

  std::size_t pos = 0;
  while (pos < rest.size() && std::isdigit(static_cast<unsigned char>(rest[pos]))) {
    mantissa.push_back(rest[pos++]);
  }
  if (mantissa.empty()) return std::nullopt;
  if (pos < rest.size() && rest[pos] == '.') {
    ++pos;
    std::size_t start = pos;
    while (pos < rest.size() && std::isdigit(static_cast<unsigned char>(rest[pos]))) {
      mantissa.push_back(rest[pos++]);
    }
    frac_digits = static_cast<long>(pos - start);
    if (frac_digits == 0) return std::nullopt;
  }
  if (pos < rest.size() && (rest[pos] == 'e' || rest[pos] == 'E')) {
    std::string_view exp_digits;
    bool exp_negative = false;
    if (!signed_digits(rest.substr(pos + 1), &exp_digits, &exp_negative)) {
      return std::nullopt;
    }
    if (exp_digits.size() > 6) return std::nullopt;  // keeps 10^exp sane
    exponent = std::strtol(std::string(exp_digits).c_str(), nullptr, 10);
    if (exp_negative) exponent = -exponent;
    pos = rest.size();
  }
  if (pos != rest.size()) return std::nullopt;

  mpz_class digits_value(mantissa, 10);
  long shift = exponent - frac_digits;
  mpz_class pow10;
  mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(shift)));
  Rational r = shift >= 0 ? Rational(digits_value * pow10) : Rational(digits_value, pow10);
  r.canonicalize();
  if (negative) r = -r;
  return r;
}

std::string to_string(const Rational& x) {
  return x.get_str();
}

std::string to_decimal(const Rational& x, int significant_digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", significant_digits, x.get_d());
  return buf;
}

}  // namespace eadm
