#include "goedel/value.hpp"

#include "goedel/errors.hpp"

namespace goedel {

using boost::multiprecision::cpp_int;

Value parse_value(const std::string& text) {
  if (text.empty()) throw Error("empty rational literal");
  auto slash = text.find('/');
  try {
    if (slash != std::string::npos) {
      cpp_int num(text.substr(0, slash));
      cpp_int den(text.substr(slash + 1));
      if (den == 0) throw Error("zero denominator in '" + text + "'");
      return Value(num, den);
    }
    auto dot = text.find('.');
    if (dot != std::string::npos) {
      std::string digits = text.substr(0, dot) + text.substr(dot + 1);
      cpp_int num(digits);
      cpp_int den = 1;
      for (std::size_t i = dot + 1; i < text.size(); ++i) den *= 10;
      return Value(num, den);
    }
    return Value(cpp_int(text));
  } catch (const std::exception&) {
    throw Error("malformed rational literal '" + text + "'");
  }
}

std::vector<Value> vm_values(int m) {
  if (m < 2) throw Error("V_m needs m >= 2");
  std::vector<Value> out;
  out.push_back(Value(0));
  for (int k = 2; k <= m - 1; ++k) out.push_back(Value(k - 1, k));
  out.push_back(Value(1));
  return out;
}

std::string value_to_string(const Value& v) {
  if (denominator(v) == 1) return numerator(v).str();
  return numerator(v).str() + "/" + denominator(v).str();
}

}  // namespace goedel
