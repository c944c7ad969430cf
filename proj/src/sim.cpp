#include "qarith/sim.hpp"

#include <cmath>
#include <stdexcept>

namespace qarith {

std::size_t BasisStateHash::operator()(const BasisState& state) const {
    // FNV-1a over the packed words; widths collide only across circuits.
    std::uint64_t h = 1469598103934665603ull;
    for (const auto word : state.words()) {
        h ^= word;
        h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h ^ state.width());
}

double SparseState::norm() const {
    double sum = 0.0;
    for (const auto& [state, amp] : terms) sum += std::norm(amp);
    return std::sqrt(sum);
}

void SparseState::prune() {
    for (auto it = terms.begin(); it != terms.end();) {
        if (it->second == std::complex<double>{})
            it = terms.erase(it);
        else
            ++it;
    }
}

BasisState run_basis(const Circuit& circuit, BasisState state) {
    if (state.width() != circuit.num_wires())
        throw std::invalid_argument("state width " + std::to_string(state.width()) +
                                    " does not match circuit with " +
                                    std::to_string(circuit.num_wires()) + " wires");
    for (const Gate& gate : circuit.gates()) {
        switch (gate.kind) {
        case GateKind::NOT:
            state.flip_bit(gate.wire[0]);
            break;
        case GateKind::CNOT:
            if (state.bit(gate.wire[0])) state.flip_bit(gate.wire[1]);
            break;
        case GateKind::TOFFOLI:
            if (state.bit(gate.wire[0]) && state.bit(gate.wire[1]))
                state.flip_bit(gate.wire[2]);
            break;
        }
    }
    return state;
}

SparseState run_sparse(const Circuit& circuit, const SparseState& state) {
    const double norm = state.norm();
    if (std::abs(norm - 1.0) > SparseState::NORM_TOLERANCE)
        throw std::invalid_argument("input state norm " + std::to_string(norm) +
                                    " deviates from 1 beyond tolerance");
    SparseState out;
    out.terms.reserve(state.terms.size());
    for (const auto& [basis, amp] : state.terms) {
        if (amp == std::complex<double>{}) continue;
        out.terms.emplace(run_basis(circuit, basis), amp);
    }
    return out;
}

BasisState encode(const RegisterLayout& layout, std::uint32_t num_wires,
                  const std::vector<RegisterValue>& values) {
    BasisState state(num_wires);
    std::vector<const Register*> seen;
    for (const auto& [name, value] : values) {
        const Register* reg = layout.find(name);
        if (reg == nullptr)
            throw std::invalid_argument("no register named '" + name + "'");
        for (const Register* prior : seen)
            if (prior == reg)
                throw std::invalid_argument("register '" + name + "' set twice");
        seen.push_back(reg);
        if (reg->width > 64)
            throw std::invalid_argument("register '" + name + "' is wider than 64 bits");
        if (reg->width < 64 && (value >> reg->width) != 0)
            throw std::invalid_argument("value " + std::to_string(value) +
                                        " does not fit register '" + name + "' of width " +
                                        std::to_string(reg->width));
        for (std::uint32_t k = 0; k < reg->width; ++k)
            state.set_bit(reg->first_wire + k, (value >> k) & 1);
    }
    return state;
}

std::uint64_t read_register(const Register& reg, const BasisState& state) {
    if (reg.width > 64)
        throw std::invalid_argument("register '" + reg.name + "' is wider than 64 bits");
    std::uint64_t value = 0;
    for (std::uint32_t k = 0; k < reg.width; ++k)
        if (state.bit(reg.first_wire + k)) value |= std::uint64_t{1} << k;
    return value;
}

std::vector<RegisterValue> decode(const RegisterLayout& layout, const BasisState& state) {
    std::vector<RegisterValue> values;
    values.reserve(layout.size());
    for (const auto& reg : layout.registers())
        values.push_back({reg.name, read_register(reg, state)});
    return values;
}

} // namespace qarith
