#include "qarith/gates.hpp"

#include <stdexcept>

namespace qarith {

std::string_view gate_kind_name(GateKind kind) {
    switch (kind) {
    case GateKind::NOT: return "NOT";
    case GateKind::CNOT: return "CNOT";
    case GateKind::TOFFOLI: return "TOFF";
    }
    return "?";
}

std::string_view role_name(RegisterRole role) {
    switch (role) {
    case RegisterRole::InputA: return "input_a";
    case RegisterRole::InputB: return "input_b";
    case RegisterRole::InputX: return "input_x";
    case RegisterRole::Result: return "result";
    case RegisterRole::Carry: return "carry";
    case RegisterRole::ModulusTemp: return "modulus_temp";
    case RegisterRole::MultTemp: return "mult_temp";
    case RegisterRole::ExpTemp: return "exp_temp";
    case RegisterRole::OverflowT: return "overflow_t";
    case RegisterRole::Control: return "control";
    }
    return "?";
}

std::optional<RegisterRole> role_from_name(std::string_view name) {
    for (auto role : {RegisterRole::InputA, RegisterRole::InputB, RegisterRole::InputX,
                      RegisterRole::Result, RegisterRole::Carry, RegisterRole::ModulusTemp,
                      RegisterRole::MultTemp, RegisterRole::ExpTemp, RegisterRole::OverflowT,
                      RegisterRole::Control}) {
        if (role_name(role) == name) return role;
    }
    return std::nullopt;
}

void RegisterLayout::validate(std::uint32_t num_wires) const {
    std::vector<bool> covered(num_wires, false);
    for (const auto& reg : registers_) {
        if (reg.name.empty())
            throw std::invalid_argument("register with empty name");
        for (char ch : reg.name) {
            const bool ok = (ch >= 'a' && ch <= 'z') || (ch >= 'A' && ch <= 'Z') ||
                            (ch >= '0' && ch <= '9') || ch == '_' || ch == '.' || ch == '-';
            if (!ok)
                throw std::invalid_argument("register name '" + reg.name +
                                            "' has characters outside [A-Za-z0-9_.-]");
        }
        if (reg.width == 0) {
            if (reg.first_wire > num_wires)
                throw std::invalid_argument("empty register '" + reg.name +
                                            "' anchored past the wire count");
            continue;
        }
        if (reg.first_wire >= num_wires || num_wires - reg.first_wire < reg.width)
            throw std::invalid_argument("register '" + reg.name + "' exceeds wire count");
        for (std::uint32_t w = reg.first_wire; w < reg.first_wire + reg.width; ++w) {
            if (covered[w])
                throw std::invalid_argument("register '" + reg.name + "' overlaps wire " +
                                            std::to_string(w));
            covered[w] = true;
        }
    }
    for (std::uint32_t w = 0; w < num_wires; ++w)
        if (!covered[w])
            throw std::invalid_argument("wire " + std::to_string(w) +
                                        " not covered by any register");
    for (std::size_t i = 0; i < registers_.size(); ++i)
        for (std::size_t j = i + 1; j < registers_.size(); ++j)
            if (registers_[i].name == registers_[j].name)
                throw std::invalid_argument("duplicate register name '" +
                                            registers_[i].name + "'");
}

const Register* RegisterLayout::find(std::string_view name) const {
    for (const auto& reg : registers_)
        if (reg.name == name) return &reg;
    return nullptr;
}

std::uint32_t RegisterLayout::total_width() const {
    std::uint32_t total = 0;
    for (const auto& reg : registers_) total += reg.width;
    return total;
}

} // namespace qarith
