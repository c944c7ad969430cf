#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qarith/circuit.hpp"
#include "qarith/network.hpp"

namespace qarith {

struct GateCounts {
    std::uint64_t not_count = 0;
    std::uint64_t cnot_count = 0;
    std::uint64_t toffoli_count = 0;
    std::uint64_t total = 0;

    [[nodiscard]] bool operator==(const GateCounts&) const = default;
};

[[nodiscard]] GateCounts count_gates(const Circuit& circuit);

/// Qubit totals aggregated by register role, in order of first
/// appearance in the layout. total equals the layout width.
struct QubitBreakdown {
    std::vector<std::pair<RegisterRole, std::uint32_t>> role_widths;
    std::uint32_t total = 0;
};

[[nodiscard]] QubitBreakdown qubit_count(const RegisterLayout& layout);

/// Qubit-count formulas for modular exponentiation with a 2n-bit
/// exponent. Only the baseline is ever synthesized; the two reduced
/// variants are known constructions reported as formulas.
struct TheoreticalCounts {
    std::uint64_t baseline = 0;                  ///< 7n+1
    std::uint64_t classical_register_variant = 0; ///< 5n+2
    std::uint64_t toffoli_adder_variant = 0;      ///< 4n+3

    [[nodiscard]] bool operator==(const TheoreticalCounts&) const = default;
};

[[nodiscard]] TheoreticalCounts theoretical_counts(std::uint64_t n);

struct ScalingPoint {
    std::uint32_t n = 0;
    std::uint64_t total_gates = 0;
};

struct ScalingFit {
    NetworkKind kind = NetworkKind::Adder;
    bool relabel_swaps = false;
    std::vector<ScalingPoint> points;
    double slope = 0.0; ///< least-squares slope of log(gates) vs log(n)
};

/// Builds the network for every n in [n_lo, n_hi] and fits the log-log
/// slope of total gate count. Swaps are materialized as 3-CNOT groups
/// unless relabel_swaps is set; the fit records which mode was used.
/// Throws std::invalid_argument for fewer than 4 points.
[[nodiscard]] ScalingFit scaling_fit(NetworkKind kind, std::uint32_t n_lo,
                                     std::uint32_t n_hi, bool relabel_swaps = false);

/// CSV rendering: header line "n,total_gates", one point per line.
[[nodiscard]] std::string scaling_csv(const ScalingFit& fit);

} // namespace qarith
