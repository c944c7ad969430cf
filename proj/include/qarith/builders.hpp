#pragma once

#include <cstdint>

#include "qarith/circuit.hpp"

namespace qarith {

/// Construction switches shared by all network builders.
struct BuildOptions {
    /// Give the adder a full n-wire carry register with identical CARRY
    /// blocks throughout, instead of the default n-1 wires with the first
    /// block specialized for a constant-zero carry-in.
    bool uniform_carries = false;
    /// Perform register swaps by relabeling wires instead of emitting
    /// 3 CNOTs per pair. Counts drop accordingly; a closing materialized
    /// swap keeps the declared layout truthful when the net relabeling is
    /// not the identity.
    bool relabel_swaps = false;
};

/// CARRY block over four distinct wires, which must form a permutation of
/// 0..3: c_out ^= majority(c_in, a_i, b_i), b_i left as a_i XOR b_i.
[[nodiscard]] Circuit build_carry(std::uint32_t c_in, std::uint32_t a_i,
                                  std::uint32_t b_i, std::uint32_t c_out);

/// SUM block over three distinct wires, a permutation of 0..2:
/// b_i ^= a_i XOR c_in.
[[nodiscard]] Circuit build_sum(std::uint32_t c_in, std::uint32_t a_i, std::uint32_t b_i);

/// Plain ripple-carry adder: |a, b, 0> -> |a, a+b, 0> with an n-wire a
/// register, an (n+1)-wire b register whose top wire receives the final
/// carry, and a carry register that returns to zero.
[[nodiscard]] Circuit build_adder(std::uint32_t n, const BuildOptions& options = {});

/// reverse(build_adder(n)): |x, y> -> |x, (y - x) mod 2^(n+1)>. The top
/// bit of the second register ends 1 exactly when y < x, making the
/// network double as a comparator.
[[nodiscard]] Circuit build_subtractor(std::uint32_t n, const BuildOptions& options = {});

/// Adder modulo N on |a, b> with 0 <= a, b < N. The modulus register must
/// be pre-loaded with N and is preserved; the overflow qubit t starts and
/// ends at zero. Requires 2 <= N < 2^n.
[[nodiscard]] Circuit build_modular_adder(std::uint32_t n, std::uint64_t N,
                                          const BuildOptions& options = {});

/// Controlled modular multiplier: |c; x, 0> -> |c; x, a*x mod N> when
/// c = 1 and |c; x, x> when c = 0. All temporaries (addend, carry,
/// modulus, t) start and end at zero; the modulus register is loaded and
/// unloaded internally. Requires 0 <= a < N and 2 <= N < 2^n.
[[nodiscard]] Circuit build_cmult(std::uint32_t n, std::uint64_t a, std::uint64_t N,
                                  const BuildOptions& options = {});

/// Modular exponentiation over an m-wire exponent register: on |x, 1, 0>
/// (result register pre-set to 1) produces |x, a^x mod N, 0>. Stage i
/// multiplies by a^(2^i) mod N under control of exponent bit i, swaps the
/// product into place, then uncomputes the workspace by running the
/// multiplication by the precomputed modular inverse backwards.
/// Requires gcd(a, N) = 1, 2 <= N < 2^n, m >= 1.
[[nodiscard]] Circuit build_modexp(std::uint32_t n, std::uint32_t m, std::uint64_t a,
                                   std::uint64_t N, const BuildOptions& options = {});

/// Exponent width used when the caller does not pick one: 2n, wide enough
/// for the period-finding regime where x ranges up to N^2.
[[nodiscard]] constexpr std::uint32_t default_exponent_width(std::uint32_t n) {
    return 2 * n;
}

} // namespace qarith
