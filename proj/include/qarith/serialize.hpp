#pragma once

#include <string>
#include <string_view>

#include "qarith/circuit.hpp"

namespace qarith {

// Text circuit format, one item per line:
//   QCIRC v1 <num_wires>
//   REG <name> <role> <first_wire> <width>
//   NOT <t> | CNOT <c> <t> | TOFF <c1> <c2> <t>
// '#' starts a comment; fields are separated by single spaces; wire
// indices are decimal. The serializer writes debug tags as comment
// lines, which the parser skips, so parse(serialize(c)) == c.

[[nodiscard]] std::string serialize(const Circuit& circuit);

/// Throws ParseError carrying the 1-based line number and a reason.
[[nodiscard]] Circuit parse(std::string_view text);

} // namespace qarith
