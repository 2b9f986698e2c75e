#ifndef TPQ_NAT_HPP
#define TPQ_NAT_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace tpq {

// Arbitrary-precision integer. Nat values are non-negative by convention;
// Int is the same type used where signs occur (polynomial coefficients).
using Int = boost::multiprecision::cpp_int;
using Nat = boost::multiprecision::cpp_int;

inline Nat nat_from_decimal(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty decimal string");
    for (char c : s)
        if (c < '0' || c > '9')
            throw std::invalid_argument("invalid decimal string: \"" + s + "\"");
    return Nat(s);
}

inline std::string to_decimal(const Int& n) { return n.str(); }

inline Nat pow3(unsigned e) {
    Nat p = 1;
    for (unsigned i = 0; i < e; ++i) p *= 3;
    return p;
}

// Throws if n does not fit in a machine word (carry arithmetic fast path).
inline std::uint64_t to_u64_checked(const Nat& n, const char* what) {
    if (n < 0 || n > Nat(std::uint64_t(1) << 62))
        throw std::domain_error(std::string(what) + " exceeds the machine-word fast path");
    return static_cast<std::uint64_t>(n);
}

}  // namespace tpq

#endif
