#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace goedel {

// Exact rational truth value. All semantic computations compare and copy
// these; no floating point anywhere. Expression templates are off so
// arithmetic yields plain values.
using Value = boost::multiprecision::number<
    boost::multiprecision::backends::rational_adaptor<
        boost::multiprecision::backends::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

// Parses "p/q", "p" or a decimal like "0.25" into an exact rational.
Value parse_value(const std::string& text);

// Renders as "p/q", or "p" when the denominator is 1.
std::string value_to_string(const Value& v);

inline bool in_unit_interval(const Value& v) { return v >= 0 && v <= 1; }

inline Value midpoint(const Value& a, const Value& b) { return (a + b) / 2; }

// The m-element truth value set {0, 1/2, 2/3, ..., (m-2)/(m-1), 1}, sorted.
std::vector<Value> vm_values(int m);

}  // namespace goedel
