#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

namespace qarith {

/// The five synthesized network families.
enum class NetworkKind : std::uint8_t {
    Adder,
    Subtractor,
    ModAdder,
    CMult,
    ModExp,
};

/// Lowercase CLI-facing name: adder, subtractor, modadder, cmult, modexp.
[[nodiscard]] std::string_view network_name(NetworkKind kind);
[[nodiscard]] std::optional<NetworkKind> network_from_name(std::string_view name);

} // namespace qarith
