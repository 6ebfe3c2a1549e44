#include "expander_forge/exact.hpp"

#include <cctype>

#include "expander_forge/errors.hpp"

namespace expander_forge {

BigInt factorial(unsigned long k) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), k);
  return r;
}

BigInt binomial(unsigned long n, unsigned long k) {
  if (k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

BigInt perfect_matchings(unsigned long m) {
  // (2m-1)!! computed directly.
  if (m == 0) return 1;
  BigInt r;
  mpz_2fac_ui(r.get_mpz_t(), 2 * m - 1);
  return r;
}

FactorialTable::FactorialTable(unsigned long limit) : table_(limit + 1) {
  table_[0] = 1;
  for (unsigned long k = 1; k <= limit; ++k) table_[k] = table_[k - 1] * k;
}

const BigInt& FactorialTable::operator()(unsigned long k) const {
  if (k >= table_.size()) throw std::out_of_range("FactorialTable: index beyond limit");
  return table_[k];
}

namespace {

BigInt parse_digits(std::string_view s, std::string_view whole) {
  if (s.empty()) throw ParseError("empty number in '" + std::string(whole) + "'");
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw ParseError("not a number: '" + std::string(whole) + "'");
  return BigInt(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) throw ParseError("empty rational literal");

  bool negative = false;
  if (s.front() == '-' || s.front() == '+') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }

  Rational out;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    BigInt num = parse_digits(s.substr(0, slash), text);
    BigInt den = parse_digits(s.substr(slash + 1), text);
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    out = Rational(num, den);
  } else {
    long exponent = 0;
    if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
      std::string_view exp_part = s.substr(e + 1);
      bool exp_neg = false;
      if (!exp_part.empty() && (exp_part.front() == '-' || exp_part.front() == '+')) {
        exp_neg = exp_part.front() == '-';
        exp_part.remove_prefix(1);
      }
      BigInt ev = parse_digits(exp_part, text);
      if (!ev.fits_slong_p() || ev > 10000) throw ParseError("exponent too large in '" + std::string(text) + "'");
      exponent = exp_neg ? -ev.get_si() : ev.get_si();
      s = s.substr(0, e);
    }
    std::string digits;
    long frac_len = 0;
    if (auto dot = s.find('.'); dot != std::string_view::npos) {
      std::string_view ip = s.substr(0, dot);
      std::string_view fp = s.substr(dot + 1);
      if (ip.empty() && fp.empty()) throw ParseError("not a number: '" + std::string(text) + "'");
      digits = std::string(ip) + std::string(fp);
      frac_len = static_cast<long>(fp.size());
    } else {
      digits = std::string(s);
    }
    BigInt mant = parse_digits(digits, text);
    long scale = exponent - frac_len;
    BigInt pow10;
    mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(scale < 0 ? -scale : scale));
    out = scale >= 0 ? Rational(mant * pow10) : Rational(mant, pow10);
  }
  out.canonicalize();
  return negative ? Rational(-out) : out;
}

std::string to_string(const Rational& q) {
  Rational c(q);
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

std::string to_string(const BigInt& z) { return z.get_str(); }

double to_double(const Rational& q) { return q.get_d(); }

}  // namespace expander_forge
