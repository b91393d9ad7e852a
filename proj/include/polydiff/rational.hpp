#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace polydiff {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

// Parses "num", "num/den" or a plain decimal like "-1.25" into an exact rational.
inline Rational parse_rational(const std::string& s)
{
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        Integer num(s.substr(0, slash));
        Integer den(s.substr(slash + 1));
        if (den == 0)
            throw std::invalid_argument("parse_rational: zero denominator in '" + s + "'");
        return Rational(num, den);
    }
    auto dot = s.find('.');
    if (dot != std::string::npos) {
        std::string digits = s.substr(0, dot) + s.substr(dot + 1);
        Integer num(digits);
        Integer den = 1;
        for (size_t i = dot + 1; i < s.size(); ++i)
            den *= 10;
        return Rational(num, den);
    }
    return Rational(Integer(s));
}

inline std::string to_string(const Rational& r)
{
    std::string s = numerator(r).str();
    if (denominator(r) != 1)
        s += "/" + denominator(r).str();
    return s;
}

}  // namespace polydiff
