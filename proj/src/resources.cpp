#include "qarith/resources.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "qarith/builders.hpp"

namespace qarith {

GateCounts count_gates(const Circuit& circuit) {
    GateCounts counts;
    for (const auto& gate : circuit.gates()) {
        switch (gate.kind) {
        case GateKind::NOT: ++counts.not_count; break;
        case GateKind::CNOT: ++counts.cnot_count; break;
        case GateKind::TOFFOLI: ++counts.toffoli_count; break;
        }
    }
    counts.total = counts.not_count + counts.cnot_count + counts.toffoli_count;
    return counts;
}

QubitBreakdown qubit_count(const RegisterLayout& layout) {
    QubitBreakdown breakdown;
    for (const auto& reg : layout.registers()) {
        bool merged = false;
        for (auto& [role, width] : breakdown.role_widths) {
            if (role == reg.role) {
                width += reg.width;
                merged = true;
                break;
            }
        }
        if (!merged) breakdown.role_widths.emplace_back(reg.role, reg.width);
        breakdown.total += reg.width;
    }
    return breakdown;
}

TheoreticalCounts theoretical_counts(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("qubit formulas need n >= 1");
    return {7 * n + 1, 5 * n + 2, 4 * n + 3};
}

ScalingFit scaling_fit(NetworkKind kind, std::uint32_t n_lo, std::uint32_t n_hi,
                       bool relabel_swaps) {
    const std::uint32_t min_n = kind == NetworkKind::Adder || kind == NetworkKind::Subtractor
                                    ? 1
                                    : 2;
    if (n_lo < min_n)
        throw std::invalid_argument("scaling for this network starts at n = " +
                                    std::to_string(min_n));
    if (n_hi < n_lo || n_hi - n_lo + 1 < 4)
        throw std::invalid_argument("scaling fit needs at least 4 sizes");

    BuildOptions options;
    options.relabel_swaps = relabel_swaps;

    ScalingFit fit;
    fit.kind = kind;
    fit.relabel_swaps = relabel_swaps;
    for (std::uint32_t n = n_lo; n <= n_hi; ++n) {
        // Canonical instance per size: the all-ones modulus keeps every
        // network constructible (odd, so base 2 is coprime).
        const std::uint64_t N = (std::uint64_t{1} << n) - 1;
        Circuit circuit = [&] {
            switch (kind) {
            case NetworkKind::Adder: return build_adder(n, options);
            case NetworkKind::Subtractor: return build_subtractor(n, options);
            case NetworkKind::ModAdder: return build_modular_adder(n, N, options);
            case NetworkKind::CMult: return build_cmult(n, N - 1, N, options);
            case NetworkKind::ModExp:
                return build_modexp(n, default_exponent_width(n), 2, N, options);
            }
            throw std::invalid_argument("unknown network kind");
        }();
        fit.points.push_back({n, count_gates(circuit).total});
    }

    double sum_x = 0, sum_y = 0;
    for (const auto& point : fit.points) {
        sum_x += std::log(static_cast<double>(point.n));
        sum_y += std::log(static_cast<double>(point.total_gates));
    }
    const double mean_x = sum_x / static_cast<double>(fit.points.size());
    const double mean_y = sum_y / static_cast<double>(fit.points.size());
    double num = 0, den = 0;
    for (const auto& point : fit.points) {
        const double dx = std::log(static_cast<double>(point.n)) - mean_x;
        const double dy = std::log(static_cast<double>(point.total_gates)) - mean_y;
        num += dx * dy;
        den += dx * dx;
    }
    fit.slope = num / den;
    return fit;
}

std::string scaling_csv(const ScalingFit& fit) {
    std::ostringstream out;
    out << "n,total_gates\n";
    for (const auto& point : fit.points) out << point.n << ',' << point.total_gates << '\n';
    return std::move(out).str();
}

} // namespace qarith
