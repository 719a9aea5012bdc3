#include "gmet/rational.hpp"

#include <stdexcept>

namespace gmet {

Rat parse_rat(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  auto slash = s.find('/');
  try {
    if (slash == std::string_view::npos) {
      return Rat(Int(std::string(s)));
    }
    Int num{std::string(s.substr(0, slash))};
    Int den{std::string(s.substr(slash + 1))};
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rat(num, den);
  } catch (const std::runtime_error& e) {
    throw std::invalid_argument("malformed rational literal '" + std::string(s) +
                                "': " + e.what());
  }
}

std::string rat_str(const Rat& r) {
  Int num = boost::multiprecision::numerator(r);
  Int den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

bool rat_divides(const Rat& a, const Rat& b) {
  if (a == 0) return b == 0;
  Rat q = b / a;
  return boost::multiprecision::denominator(q) == 1;
}

Rat ceil_to_multiple(const Rat& v, const Rat& step) {
  if (step <= 0) throw std::invalid_argument("step must be positive");
  Rat q = v / step;
  Int num = boost::multiprecision::numerator(q);
  Int den = boost::multiprecision::denominator(q);
  Int fl = num / den;
  if (num < 0 && num % den != 0) --fl;  // floor for negatives
  Int ce = (fl * den == num) ? fl : fl + 1;
  return Rat(ce) * step;
}

}  // namespace gmet
