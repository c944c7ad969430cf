#include "qarith/numbers.hpp"

#include <bit>
#include <numeric>
#include <stdexcept>
#include <string>

namespace qarith {

std::uint32_t bit_width(std::uint64_t value) {
    return static_cast<std::uint32_t>(std::bit_width(value));
}

std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    if (m == 0) throw std::invalid_argument("modulus must be positive");
    using u128 = unsigned __int128;
    return static_cast<std::uint64_t>((u128{a} * u128{b}) % m);
}

std::uint64_t mod_pow(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    if (m == 0) throw std::invalid_argument("modulus must be positive");
    std::uint64_t result = 1 % m;
    std::uint64_t base = a % m;
    while (e != 0) {
        if (e & 1) result = mod_mul(result, base, m);
        base = mod_mul(base, base, m);
        e >>= 1;
    }
    return result;
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t m) {
    if (m < 2) throw std::invalid_argument("modulus must be at least 2");
    // Extended Euclid on (a mod m, m), tracking only the coefficient of a.
    std::int64_t t = 0, new_t = 1;
    std::uint64_t r = m, new_r = a % m;
    while (new_r != 0) {
        const std::uint64_t q = r / new_r;
        const std::int64_t next_t = t - static_cast<std::int64_t>(q) * new_t;
        t = new_t;
        new_t = next_t;
        const std::uint64_t next_r = r - q * new_r;
        r = new_r;
        new_r = next_r;
    }
    if (r != 1)
        throw std::invalid_argument("no inverse: gcd(" + std::to_string(a) + ", " +
                                    std::to_string(m) + ") = " + std::to_string(r));
    return t < 0 ? static_cast<std::uint64_t>(t + static_cast<std::int64_t>(m))
                 : static_cast<std::uint64_t>(t);
}

} // namespace qarith
