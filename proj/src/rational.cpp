#include "rankax/rational.hpp"

#include <sstream>
#include <stdexcept>

namespace rankax {

namespace {

boost::multiprecision::cpp_int parse_digits(std::string_view s) {
    if (s.empty()) return 0;
    boost::multiprecision::cpp_int v = 0;
    for (char c : s) {
        if (c < '0' || c > '9') throw std::invalid_argument("bad digit in number");
        v = v * 10 + (c - '0');
    }
    return v;
}

}  // namespace

Rational rational_from_decimal(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("empty number");
    bool negative = false;
    if (text.front() == '+' || text.front() == '-') {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }
    if (text.empty()) throw std::invalid_argument("bare sign is not a number");

    Rational value;
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        auto num = parse_digits(text.substr(0, slash));
        auto den = parse_digits(text.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        value = Rational(num, den);
    } else {
        auto dot = text.find('.');
        std::string_view whole = text.substr(0, dot);
        std::string_view frac = dot == std::string_view::npos ? std::string_view{}
                                                              : text.substr(dot + 1);
        if (whole.empty() && frac.empty()) throw std::invalid_argument("not a number");
        boost::multiprecision::cpp_int scale = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
        value = Rational(parse_digits(whole) * scale + parse_digits(frac), scale);
    }
    return negative ? -value : value;
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

std::string to_string(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

}  // namespace rankax
