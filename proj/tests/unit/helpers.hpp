#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "qarith/circuit.hpp"
#include "qarith/sim.hpp"

namespace qarith::test {

/// Encodes the given register values, runs the circuit, decodes.
inline std::vector<RegisterValue> run_registers(const Circuit& circuit,
                                                const std::vector<RegisterValue>& inputs) {
    const BasisState in = encode(circuit.layout(), circuit.num_wires(), inputs);
    return decode(circuit.layout(), run_basis(circuit, in));
}

inline std::uint64_t value_of(const std::vector<RegisterValue>& values,
                              std::string_view name) {
    for (const auto& entry : values)
        if (entry.name == name) return entry.value;
    return UINT64_MAX; // a width-checked register can never reach this
}

} // namespace qarith::test
