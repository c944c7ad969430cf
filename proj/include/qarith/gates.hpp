#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qarith {

/// The three elementary reversible gates. All of them are self-inverse.
enum class GateKind : std::uint8_t {
    NOT,     ///< flips its target wire
    CNOT,    ///< flips the target wire when the control wire is set
    TOFFOLI, ///< flips the target wire when both control wires are set
};

[[nodiscard]] constexpr std::uint32_t gate_arity(GateKind kind) {
    switch (kind) {
    case GateKind::NOT: return 1;
    case GateKind::CNOT: return 2;
    case GateKind::TOFFOLI: return 3;
    }
    return 0;
}

[[nodiscard]] std::string_view gate_kind_name(GateKind kind);

/// One gate instance. The last used wire slot is the target, preceding
/// slots are controls. `tag` is a circuit-local annotation id used for
/// debugging traces; it is not part of the gate's identity and is ignored
/// by equality.
struct Gate {
    GateKind kind = GateKind::NOT;
    std::array<std::uint32_t, 3> wire{0, 0, 0};
    std::uint32_t tag = 0;

    [[nodiscard]] static Gate x(std::uint32_t target) {
        return Gate{GateKind::NOT, {target, 0, 0}, 0};
    }
    [[nodiscard]] static Gate cx(std::uint32_t control, std::uint32_t target) {
        return Gate{GateKind::CNOT, {control, target, 0}, 0};
    }
    [[nodiscard]] static Gate ccx(std::uint32_t control_a, std::uint32_t control_b,
                                  std::uint32_t target) {
        return Gate{GateKind::TOFFOLI, {control_a, control_b, target}, 0};
    }

    [[nodiscard]] std::uint32_t arity() const { return gate_arity(kind); }
    [[nodiscard]] std::uint32_t target() const { return wire[arity() - 1]; }
    [[nodiscard]] std::span<const std::uint32_t> wires() const {
        return {wire.data(), arity()};
    }

    [[nodiscard]] bool operator==(const Gate& other) const {
        if (kind != other.kind) return false;
        for (std::uint32_t i = 0; i < arity(); ++i)
            if (wire[i] != other.wire[i]) return false;
        return true;
    }
};

/// Declared purpose of a register within a circuit layout.
enum class RegisterRole : std::uint8_t {
    InputA,
    InputB,
    InputX,
    Result,
    Carry,
    ModulusTemp,
    MultTemp,
    ExpTemp,
    OverflowT,
    Control,
};

[[nodiscard]] std::string_view role_name(RegisterRole role);
[[nodiscard]] std::optional<RegisterRole> role_from_name(std::string_view name);

/// A named contiguous group of wires. Wire `first_wire + k` encodes bit k
/// of the register's value (least significant bit first). Width 0 is legal
/// and denotes an empty register.
struct Register {
    std::string name;
    RegisterRole role = RegisterRole::InputA;
    std::uint32_t first_wire = 0;
    std::uint32_t width = 0;

    [[nodiscard]] bool operator==(const Register&) const = default;
};

/// Ordered list of registers whose wire ranges partition 0..num_wires-1.
class RegisterLayout {
  public:
    RegisterLayout() = default;
    explicit RegisterLayout(std::vector<Register> registers)
        : registers_(std::move(registers)) {}

    /// Checks that ranges are disjoint and cover exactly 0..num_wires-1.
    /// Throws std::invalid_argument otherwise.
    void validate(std::uint32_t num_wires) const;

    [[nodiscard]] const Register* find(std::string_view name) const;
    [[nodiscard]] const std::vector<Register>& registers() const { return registers_; }
    [[nodiscard]] std::size_t size() const { return registers_.size(); }

    /// Sum of register widths; equals num_wires for a valid layout.
    [[nodiscard]] std::uint32_t total_width() const;

    [[nodiscard]] bool operator==(const RegisterLayout&) const = default;

  private:
    std::vector<Register> registers_;
};

} // namespace qarith
