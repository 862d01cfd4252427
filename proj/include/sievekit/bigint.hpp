#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace sievekit {

using Int = boost::multiprecision::cpp_int;

inline Int binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (long i = 1; i <= k; ++i) {
        r *= n - i + 1;
        r /= i;
    }
    return r;
}

// k! / prod(parts[i]!), parts summing to k
inline Int multinomial(long k, std::span<const long> parts) {
    Int r = 1;
    long used = 0;
    for (long p : parts) {
        used += p;
        r *= binomial(used, p);
    }
    return used == k ? r : Int(0);
}

inline std::string to_string(const Int& v) { return v.str(); }

} // namespace sievekit
