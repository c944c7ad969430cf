#include "qarith/oracle.hpp"

#include <stdexcept>

// The helpers below intentionally duplicate modular arithmetic that
// exists elsewhere in the library. Sharing it would let a single bug
// produce matching wrong answers on both sides of a verification run.

namespace qarith::oracle {

namespace {

using u128 = unsigned __int128;

std::uint64_t reduce(u128 value, std::uint64_t N) {
    return static_cast<std::uint64_t>(value % N);
}

} // namespace

std::uint64_t oracle_add(std::uint64_t a, std::uint64_t b) {
    return a + b;
}

std::uint64_t oracle_modadd(std::uint64_t a, std::uint64_t b, std::uint64_t N) {
    if (N == 0) throw std::invalid_argument("oracle_modadd: zero modulus");
    return reduce(u128{a} + u128{b}, N);
}

std::uint64_t oracle_cmult(std::uint64_t c, std::uint64_t x, std::uint64_t a,
                           std::uint64_t N) {
    if (N == 0) throw std::invalid_argument("oracle_cmult: zero modulus");
    if (c == 0) return x;
    return reduce(u128{a} * u128{x}, N);
}

std::uint64_t oracle_modexp(std::uint64_t a, std::uint64_t x, std::uint64_t N) {
    if (N == 0) throw std::invalid_argument("oracle_modexp: zero modulus");
    std::uint64_t result = 1 % N;
    std::uint64_t base = reduce(u128{a}, N);
    for (std::uint64_t e = x; e != 0; e >>= 1) {
        if (e & 1) result = reduce(u128{result} * base, N);
        base = reduce(u128{base} * base, N);
    }
    return result;
}

} // namespace qarith::oracle
