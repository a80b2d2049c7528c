#ifndef RANKAX_RATIONAL_HPP
#define RANKAX_RATIONAL_HPP

#include <map>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "rankax/graph.hpp"

namespace rankax {

using Rational = boost::multiprecision::cpp_rational;
using RationalMap = std::map<NodeId, Rational>;

// Parses a decimal literal ("0.85", "2", "1/4") to an exact rational.
Rational rational_from_decimal(std::string_view text);

double to_double(const Rational& r);
std::string to_string(const Rational& r);

}  // namespace rankax

#endif
