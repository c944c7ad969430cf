#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qarith/gates.hpp"

namespace qarith {

/// A reversible network: a wire count, a register layout partitioning the
/// wires, and an ordered gate list. Equality compares wire count, layout
/// and gates; debug tags are ignored.
class Circuit {
  public:
    Circuit() = default;
    Circuit(std::uint32_t num_wires, RegisterLayout layout);

    [[nodiscard]] std::uint32_t num_wires() const { return num_wires_; }
    [[nodiscard]] const RegisterLayout& layout() const { return layout_; }
    [[nodiscard]] const std::vector<Gate>& gates() const { return gates_; }
    [[nodiscard]] std::size_t size() const { return gates_.size(); }

    /// Appends a gate after checking its wires are in range and distinct.
    /// Throws std::invalid_argument on violation.
    void append(Gate gate);

    /// Interns `text` and returns its tag id (0 is reserved for "no tag").
    std::uint32_t intern_tag(std::string_view text);
    [[nodiscard]] std::string_view tag_text(std::uint32_t tag) const;

    [[nodiscard]] bool operator==(const Circuit& other) const;

  private:
    std::uint32_t num_wires_ = 0;
    RegisterLayout layout_;
    std::vector<Gate> gates_;
    std::vector<std::string> tags_{""};
};

/// The same network with the gate order reversed. Each elementary gate is
/// self-inverse, so this is the exact inverse transform.
[[nodiscard]] Circuit reverse(const Circuit& circuit);

/// Concatenates two circuits over the identical wire set and layout.
/// Throws std::invalid_argument when wire counts or layouts differ.
[[nodiscard]] Circuit concat(const Circuit& first, const Circuit& second);

/// Appends the 3-CNOT swap of two equal-width registers, pairing wires by
/// bit position.
void append_register_swap(Circuit& circuit, const Register& reg_a, const Register& reg_b);

/// Standalone whole-register exchange over the given layout: three CNOTs
/// per wire pair. Throws std::invalid_argument for unknown names or a
/// width mismatch.
[[nodiscard]] Circuit emit_swap(const RegisterLayout& layout, std::string_view reg_a,
                                std::string_view reg_b);

} // namespace qarith
