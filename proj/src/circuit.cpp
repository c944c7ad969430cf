#include "qarith/circuit.hpp"

#include <stdexcept>
#include <string>

namespace qarith {

Circuit::Circuit(std::uint32_t num_wires, RegisterLayout layout)
    : num_wires_(num_wires), layout_(std::move(layout)) {
    if (num_wires_ == 0)
        throw std::invalid_argument("circuit needs at least one wire");
    layout_.validate(num_wires_);
}

void Circuit::append(Gate gate) {
    const auto wires = gate.wires();
    for (std::size_t i = 0; i < wires.size(); ++i) {
        if (wires[i] >= num_wires_)
            throw std::invalid_argument("gate wire " + std::to_string(wires[i]) +
                                        " out of range for " + std::to_string(num_wires_) +
                                        " wires");
        for (std::size_t j = i + 1; j < wires.size(); ++j)
            if (wires[i] == wires[j])
                throw std::invalid_argument("duplicate wire " + std::to_string(wires[i]) +
                                            " within one gate");
    }
    if (gate.tag >= tags_.size())
        throw std::invalid_argument("gate tag not interned in this circuit");
    gates_.push_back(gate);
}

std::uint32_t Circuit::intern_tag(std::string_view text) {
    if (text.empty()) return 0;
    for (std::size_t i = 1; i < tags_.size(); ++i)
        if (tags_[i] == text) return static_cast<std::uint32_t>(i);
    tags_.emplace_back(text);
    return static_cast<std::uint32_t>(tags_.size() - 1);
}

std::string_view Circuit::tag_text(std::uint32_t tag) const {
    if (tag >= tags_.size())
        throw std::invalid_argument("unknown tag id");
    return tags_[tag];
}

bool Circuit::operator==(const Circuit& other) const {
    return num_wires_ == other.num_wires_ && layout_ == other.layout_ &&
           gates_ == other.gates_;
}

Circuit reverse(const Circuit& circuit) {
    Circuit out(circuit.num_wires(), circuit.layout());
    const auto& gates = circuit.gates();
    for (auto it = gates.rbegin(); it != gates.rend(); ++it) {
        Gate gate = *it;
        gate.tag = out.intern_tag(circuit.tag_text(it->tag));
        out.append(gate);
    }
    return out;
}

Circuit concat(const Circuit& first, const Circuit& second) {
    if (first.num_wires() != second.num_wires())
        throw std::invalid_argument("concat of circuits with " +
                                    std::to_string(first.num_wires()) + " and " +
                                    std::to_string(second.num_wires()) + " wires");
    if (!(first.layout() == second.layout()))
        throw std::invalid_argument("concat of circuits with different layouts");
    Circuit out(first.num_wires(), first.layout());
    for (const Circuit* part : {&first, &second}) {
        for (const Gate& gate : part->gates()) {
            Gate copy = gate;
            copy.tag = out.intern_tag(part->tag_text(gate.tag));
            out.append(copy);
        }
    }
    return out;
}

void append_register_swap(Circuit& circuit, const Register& reg_a, const Register& reg_b) {
    if (reg_a.width != reg_b.width)
        throw std::invalid_argument("swap of registers with widths " +
                                    std::to_string(reg_a.width) + " and " +
                                    std::to_string(reg_b.width));
    for (std::uint32_t k = 0; k < reg_a.width; ++k) {
        const std::uint32_t wa = reg_a.first_wire + k;
        const std::uint32_t wb = reg_b.first_wire + k;
        circuit.append(Gate::cx(wa, wb));
        circuit.append(Gate::cx(wb, wa));
        circuit.append(Gate::cx(wa, wb));
    }
}

Circuit emit_swap(const RegisterLayout& layout, std::string_view reg_a,
                  std::string_view reg_b) {
    const Register* first = layout.find(reg_a);
    const Register* second = layout.find(reg_b);
    if (first == nullptr || second == nullptr)
        throw std::invalid_argument("swap names an unknown register");
    Circuit out(layout.total_width(), layout);
    append_register_swap(out, *first, *second);
    return out;
}

} // namespace qarith
