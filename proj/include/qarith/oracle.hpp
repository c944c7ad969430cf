#pragma once

#include <cstdint>

// Reference arithmetic the verification harness compares circuits
// against. Deliberately self-contained: nothing here touches circuit,
// simulator, or builder code, so an error in those cannot leak into the
// expected values.

namespace qarith::oracle {

[[nodiscard]] std::uint64_t oracle_add(std::uint64_t a, std::uint64_t b);

[[nodiscard]] std::uint64_t oracle_modadd(std::uint64_t a, std::uint64_t b,
                                          std::uint64_t N);

/// c = 1: a*x mod N; c = 0: x unchanged.
[[nodiscard]] std::uint64_t oracle_cmult(std::uint64_t c, std::uint64_t x,
                                         std::uint64_t a, std::uint64_t N);

[[nodiscard]] std::uint64_t oracle_modexp(std::uint64_t a, std::uint64_t x,
                                          std::uint64_t N);

} // namespace qarith::oracle
