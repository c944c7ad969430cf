#include "qarith/serialize.hpp"

#include <charconv>
#include <cstdint>
#include <sstream>
#include <utility>
#include <vector>

#include "qarith/errors.hpp"

namespace qarith {

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t pos = 0;
    while (pos < line.size()) {
        std::size_t next = line.find(' ', pos);
        if (next == std::string_view::npos) next = line.size();
        if (next > pos) fields.push_back(line.substr(pos, next - pos));
        pos = next + 1;
    }
    return fields;
}

std::uint32_t parse_number(std::string_view field, std::size_t line_no, const char* what) {
    std::uint32_t value = 0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || ptr != field.data() + field.size())
        throw ParseError(line_no, std::string("bad ") + what + " '" + std::string(field) + "'");
    return value;
}

} // namespace

std::string serialize(const Circuit& circuit) {
    std::ostringstream out;
    out << "QCIRC v1 " << circuit.num_wires() << '\n';
    for (const auto& reg : circuit.layout().registers()) {
        out << "REG " << reg.name << ' ' << role_name(reg.role) << ' ' << reg.first_wire
            << ' ' << reg.width << '\n';
    }
    std::uint32_t last_tag = 0;
    for (const auto& gate : circuit.gates()) {
        if (gate.tag != last_tag) {
            last_tag = gate.tag;
            const auto text = circuit.tag_text(gate.tag);
            if (!text.empty()) out << "# " << text << '\n';
        }
        out << gate_kind_name(gate.kind);
        for (const auto wire : gate.wires()) out << ' ' << wire;
        out << '\n';
    }
    return std::move(out).str();
}

Circuit parse(std::string_view text) {
    std::size_t line_no = 0;
    std::size_t pos = 0;
    bool saw_header = false;
    std::uint32_t num_wires = 0;
    std::size_t last_reg_line = 1;
    std::vector<Register> registers;
    std::vector<std::pair<Gate, std::size_t>> gates;

    while (pos < text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;

        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (const auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        const auto fields = split_fields(line);
        if (fields.empty()) continue;

        if (!saw_header) {
            if (fields[0] != "QCIRC")
                throw ParseError(line_no, "expected header 'QCIRC v1 <num_wires>'");
            if (fields.size() != 3 || fields[1] != "v1")
                throw ParseError(line_no, "unsupported QCIRC header");
            num_wires = parse_number(fields[2], line_no, "wire count");
            if (num_wires == 0) throw ParseError(line_no, "wire count must be positive");
            saw_header = true;
            last_reg_line = line_no;
            continue;
        }

        if (fields[0] == "REG") {
            if (!gates.empty())
                throw ParseError(line_no, "REG line after the first gate");
            if (fields.size() != 5)
                throw ParseError(line_no, "REG needs name, role, first wire, width");
            Register reg;
            reg.name = std::string(fields[1]);
            const auto role = role_from_name(fields[2]);
            if (!role)
                throw ParseError(line_no, "unknown role '" + std::string(fields[2]) + "'");
            reg.role = *role;
            reg.first_wire = parse_number(fields[3], line_no, "first wire");
            reg.width = parse_number(fields[4], line_no, "width");
            registers.push_back(std::move(reg));
            last_reg_line = line_no;
            continue;
        }

        GateKind kind;
        if (fields[0] == "NOT")
            kind = GateKind::NOT;
        else if (fields[0] == "CNOT")
            kind = GateKind::CNOT;
        else if (fields[0] == "TOFF")
            kind = GateKind::TOFFOLI;
        else
            throw ParseError(line_no, "unknown directive '" + std::string(fields[0]) + "'");

        const std::uint32_t arity = gate_arity(kind);
        if (fields.size() != 1 + arity)
            throw ParseError(line_no, std::string(fields[0]) + " takes " +
                                          std::to_string(arity) + " wire(s), got " +
                                          std::to_string(fields.size() - 1));
        Gate gate;
        gate.kind = kind;
        for (std::uint32_t i = 0; i < arity; ++i)
            gate.wire[i] = parse_number(fields[1 + i], line_no, "wire index");
        gates.emplace_back(gate, line_no);
    }

    if (!saw_header) throw ParseError(1, "empty input, expected QCIRC header");

    Circuit circuit = [&] {
        try {
            return Circuit(num_wires, RegisterLayout(std::move(registers)));
        } catch (const std::invalid_argument& err) {
            throw ParseError(last_reg_line, err.what());
        }
    }();
    for (const auto& [gate, gate_line] : gates) {
        try {
            circuit.append(gate);
        } catch (const std::invalid_argument& err) {
            throw ParseError(gate_line, err.what());
        }
    }
    return circuit;
}

} // namespace qarith
