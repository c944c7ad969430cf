#include "qarith/network.hpp"

namespace qarith {

std::string_view network_name(NetworkKind kind) {
    switch (kind) {
    case NetworkKind::Adder: return "adder";
    case NetworkKind::Subtractor: return "subtractor";
    case NetworkKind::ModAdder: return "modadder";
    case NetworkKind::CMult: return "cmult";
    case NetworkKind::ModExp: return "modexp";
    }
    return "?";
}

std::optional<NetworkKind> network_from_name(std::string_view name) {
    for (auto kind : {NetworkKind::Adder, NetworkKind::Subtractor, NetworkKind::ModAdder,
                      NetworkKind::CMult, NetworkKind::ModExp}) {
        if (network_name(kind) == name) return kind;
    }
    return std::nullopt;
}

} // namespace qarith
