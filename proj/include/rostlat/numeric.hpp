#ifndef ROSTLAT_NUMERIC_HPP
#define ROSTLAT_NUMERIC_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace rostlat {

// Arbitrary-precision scalars. Rat keeps lowest terms and a positive
// denominator by construction, which the rational-vector contract relies on.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using RatVector = std::vector<Rat>;

inline Int numerator(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int denominator(const Rat& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const Rat& q) { return denominator(q) == 1; }

inline bool is_integer_vector(const RatVector& v) {
    for (const Rat& q : v)
        if (!is_integer(q)) return false;
    return true;
}

// Canonical residue in [0, n); requires n > 0.
inline Int mod_floor(const Int& a, const Int& n) {
    Int r = a % n;
    if (r < 0) r += n;
    return r;
}

// Least n > 0 with n*v integral.
inline Int lcm_denominators(const RatVector& v) {
    Int n = 1;
    for (const Rat& q : v) n = boost::multiprecision::lcm(n, denominator(q));
    return n;
}

inline std::string to_string(const Int& x) { return x.str(); }

// "2", "3/2", "-5/3": lowest terms, denominator omitted when 1.
inline std::string to_string(const Rat& q) { return q.str(); }

inline int to_int(const Int& x) { return x.convert_to<int>(); }

} // namespace rostlat

#endif
