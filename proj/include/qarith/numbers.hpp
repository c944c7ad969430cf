#pragma once

#include <cstdint>

namespace qarith {

/// Number of bits needed to write `value` in binary; bit_width(0) == 0.
[[nodiscard]] std::uint32_t bit_width(std::uint64_t value);

/// (a * b) mod m without intermediate overflow. Requires m >= 1.
[[nodiscard]] std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b, std::uint64_t m);

/// a^e mod m by square and multiply. Requires m >= 1.
[[nodiscard]] std::uint64_t mod_pow(std::uint64_t a, std::uint64_t e, std::uint64_t m);

/// u with a*u == 1 (mod m) and 0 < u < m, via the extended Euclidean
/// algorithm. Requires m >= 2 and gcd(a, m) == 1; throws
/// std::invalid_argument otherwise.
[[nodiscard]] std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t m);

} // namespace qarith
