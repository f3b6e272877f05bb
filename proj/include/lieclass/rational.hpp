#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace lieclass {

// All arithmetic in this library is exact: arbitrary-precision integers and
// rationals kept in lowest terms with positive denominator. cpp_rational
// guarantees both invariants on every operation.
using Integer  = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Raised for malformed or inconsistent user input (CLI exit code 2).
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when a computed result contradicts a structural fact the library
/// asserts unconditionally (CLI exit code 3). Either a bug or a genuine
/// counterexample; never swallowed.
class InternalCheckError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline int sign_of(const Rational& r) {
    if (r == 0) return 0;
    return r < 0 ? -1 : 1;
}

/// Parses "p", "-p" or "p/q" with arbitrary-precision integer parts.
inline Rational parse_rational(const std::string& token) {
    auto fail = [&]() -> Rational {
        throw ValidationError("malformed rational '" + token + "'");
    };
    if (token.empty()) return fail();
    const auto slash = token.find('/');
    auto check_int = [&](const std::string& s, bool allow_sign) {
        if (s.empty()) return false;
        std::size_t i = 0;
        if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') return false;
        return true;
    };
    try {
        if (slash == std::string::npos) {
            if (!check_int(token, true)) return fail();
            return Rational(Integer(token));
        }
        const std::string num = token.substr(0, slash);
        const std::string den = token.substr(slash + 1);
        if (!check_int(num, true) || !check_int(den, false)) return fail();
        Integer d(den);
        if (d == 0) return fail();
        return Rational(Integer(num), d);
    } catch (const std::exception&) {
        return fail();
    }
}

/// Emits "p" or "p/q"; inverse of parse_rational.
inline std::string rational_to_string(const Rational& r) {
    const Integer num = boost::multiprecision::numerator(r);
    const Integer den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

/// Exact test whether r is the square of a rational; returns the
/// non-negative root when it is.
inline bool rational_sqrt(const Rational& r, Rational& root) {
    if (r < 0) return false;
    if (r == 0) { root = 0; return true; }
    const Integer num = boost::multiprecision::numerator(r);
    const Integer den = boost::multiprecision::denominator(r);
    const Integer sn = boost::multiprecision::sqrt(num);
    const Integer sd = boost::multiprecision::sqrt(den);
    if (sn * sn != num || sd * sd != den) return false;
    root = Rational(sn, sd);
    return true;
}

} // namespace lieclass
