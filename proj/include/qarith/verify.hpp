#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qarith/builders.hpp"
#include "qarith/circuit.hpp"
#include "qarith/network.hpp"
#include "qarith/sim.hpp"

namespace qarith {

/// What to verify. Omitted a or N means "sweep every legal value", where
/// that keeps the case count within the enumeration budget.
struct VerifyParams {
    NetworkKind kind = NetworkKind::Adder;
    std::uint32_t n = 0;
    std::uint32_t m = 0; ///< modexp exponent width; 0 picks the 2n default
    std::optional<std::uint64_t> a;
    std::optional<std::uint64_t> N;
    BuildOptions build;
};

struct Counterexample {
    std::vector<RegisterValue> inputs; ///< initial register values, layout order
    std::uint64_t expected = 0;
    std::uint64_t actual = 0;
    /// Register decode at every block boundary of the failing run, to
    /// localize which block first diverges.
    std::vector<std::string> block_trace;
};

struct VerificationReport {
    NetworkKind kind = NetworkKind::Adder;
    std::string params_text;      ///< canonical parameter rendering, e.g. "n=4 N=all"
    std::string mode;             ///< "exhaustive" or "random samples=... seed=..."
    std::uint64_t cases_run = 0;
    std::uint64_t cases_failed = 0;
    std::uint64_t cleanliness_violations = 0;
    std::optional<Counterexample> first_counterexample;
    double wall_seconds = 0.0;

    /// key: value lines; the machine-readable serialization.
    [[nodiscard]] std::string to_kv_text() const;

    /// Equality of everything except wall_seconds, which is the one
    /// nondeterministic field.
    [[nodiscard]] bool same_outcome(const VerificationReport& other) const;
};

/// Maximum number of simulated cases an exhaustive run may enumerate.
inline constexpr std::uint64_t EXHAUSTIVE_CASE_BUDGET = std::uint64_t{1} << 24;

/// Enumerates every legal input tuple in lexicographic order, simulates,
/// and compares the result register against the oracle; also checks that
/// every ancilla ends at its required value and that preserved registers
/// are intact. Throws BudgetError when the tuple count exceeds
/// EXHAUSTIVE_CASE_BUDGET.
[[nodiscard]] VerificationReport verify_exhaustive(const VerifyParams& params);

/// Same enumeration and checks, but against a caller-supplied circuit
/// instead of a freshly built one, so an externally stored or modified
/// realization can be held to the standard contract. Requires fully
/// pinned parameters (no sweeps).
[[nodiscard]] VerificationReport verify_exhaustive_on(const Circuit& circuit,
                                                      const VerifyParams& params);

/// Seeded random sampling of the same checks, for sizes beyond
/// exhaustion. Deterministic given (params, samples, seed).
[[nodiscard]] VerificationReport verify_random(const VerifyParams& params,
                                               std::uint64_t samples, std::uint64_t seed);

/// True iff the circuit's basis-state map is injective, by full
/// enumeration. Throws BudgetError for circuits above 24 wires.
[[nodiscard]] bool check_permutation(const Circuit& circuit);

/// Register decode after every debug-tag run, one line per boundary.
/// Used for --trace and for counterexample localization.
[[nodiscard]] std::vector<std::string> trace_blocks(const Circuit& circuit,
                                                    const BasisState& initial);

} // namespace qarith
