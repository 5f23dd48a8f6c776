#include "dps/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace dps {

Rational parse_rational(const std::string& text)
{
  std::size_t b = 0, e = text.size();
  while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
  std::string t = text.substr(b, e - b);
  if (t.empty()) throw std::invalid_argument("empty rational");

  std::size_t slash = t.find('/');
  auto check_int = [&](const std::string& part, bool allow_sign) {
    std::size_t k = 0;
    if (allow_sign && k < part.size() && (part[k] == '-' || part[k] == '+')) ++k;
    if (k == part.size()) throw std::invalid_argument("bad rational: " + text);
    for (; k < part.size(); ++k)
      if (!std::isdigit(static_cast<unsigned char>(part[k])))
        throw std::invalid_argument("bad rational: " + text);
  };
  std::string num = t.substr(0, slash);
  check_int(num, true);
  if (num[0] == '+') num.erase(0, 1);
  Rational q;
  if (slash == std::string::npos) {
    q = mpz_class(num);
  } else {
    std::string den = t.substr(slash + 1);
    check_int(den, false);
    mpz_class d(den);
    if (d == 0) throw std::invalid_argument("zero denominator: " + text);
    q = Rational(mpz_class(num), d);
  }
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q)
{
  return q.get_str();
}

std::size_t hash_value(const Rational& q)
{
  std::size_t h = static_cast<std::size_t>(mpz_get_si(q.get_num_mpz_t()));
  h = h * 1000003u ^ static_cast<std::size_t>(mpz_get_si(q.get_den_mpz_t()));
  return h;
}

} // namespace dps
