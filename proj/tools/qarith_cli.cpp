// Command-line front end for the qarith library. Everything here goes
// through the C API in qarith.h; the C++ headers are deliberately not
// used so this doubles as a workout for the shared-library interface.

#include "CLI11.hpp"
#include "qarith.h"

#include <charconv>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace {

constexpr int EXIT_VERIFY_FAILED = 1;
constexpr int EXIT_USAGE = 2;
constexpr int EXIT_IO = 3;

struct CircuitHandle {
    qar_circuit* ptr = nullptr;
    CircuitHandle() = default;
    CircuitHandle(const CircuitHandle&) = delete;
    CircuitHandle& operator=(const CircuitHandle&) = delete;
    ~CircuitHandle() { qar_circuit_free(ptr); }
};

struct StringHandle {
    char* ptr = nullptr;
    StringHandle() = default;
    StringHandle(const StringHandle&) = delete;
    StringHandle& operator=(const StringHandle&) = delete;
    ~StringHandle() { qar_string_free(ptr); }
    const char* text() const { return ptr == nullptr ? "" : ptr; }
};

int exit_code_for(qar_status status) {
    switch (status) {
    case QAR_OK: return 0;
    case QAR_ERR_INVALID_ARGUMENT: return EXIT_USAGE;
    case QAR_ERR_BUDGET: return EXIT_USAGE;
    case QAR_ERR_PARSE: return EXIT_IO;
    default: return EXIT_IO;
    }
}

int fail(qar_status status) {
    std::cerr << "error: " << qar_last_error() << '\n';
    return exit_code_for(status);
}

int fail_usage(const std::string& message) {
    std::cerr << "error: " << message << '\n';
    return EXIT_USAGE;
}

int fail_io(const std::string& message) {
    std::cerr << "error: " << message << '\n';
    return EXIT_IO;
}

// Register values: decimal, or binary/hex with a 0b/0x prefix.
uint64_t parse_value(const std::string& text) {
    int base = 10;
    std::string digits = text;
    if (text.size() > 2 && (text.starts_with("0x") || text.starts_with("0X"))) {
        base = 16;
        digits = text.substr(2);
    } else if (text.size() > 2 && (text.starts_with("0b") || text.starts_with("0B"))) {
        base = 2;
        digits = text.substr(2);
    }
    uint64_t out = 0;
    const char* first = digits.data();
    const char* last = first + digits.size();
    const auto [end, ec] = std::from_chars(first, last, out, base);
    if (digits.empty() || ec != std::errc{} || end != last)
        throw std::invalid_argument("bad numeric value '" + text + "'");
    return out;
}

double parse_amplitude(const std::string& text) {
    size_t consumed = 0;
    double out = 0.0;
    try {
        out = std::stod(text, &consumed);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad amplitude '" + text + "'");
    }
    if (consumed != text.size()) throw std::invalid_argument("bad amplitude '" + text + "'");
    return out;
}

uint32_t bit_width64(uint64_t value) {
    uint32_t width = 0;
    while (value != 0) {
        ++width;
        value >>= 1;
    }
    return width;
}

std::string format_binary(uint64_t value, uint32_t width) {
    if (width == 0) return "0b0";
    std::string bits(width, '0');
    for (uint32_t i = 0; i < width && i < 64; ++i)
        if ((value >> i) & 1) bits[width - 1 - i] = '1';
    return "0b" + bits;
}

struct RegisterInfo {
    std::string name;
    std::string role;
    uint32_t first_wire = 0;
    uint32_t width = 0;
};

std::vector<RegisterInfo> list_registers(const qar_circuit* circuit) {
    std::vector<RegisterInfo> out;
    const size_t count = qar_circuit_num_registers(circuit);
    out.reserve(count);
    for (size_t i = 0; i < count; ++i) {
        const char* name = nullptr;
        const char* role = nullptr;
        uint32_t first = 0;
        uint32_t width = 0;
        qar_circuit_register_info(circuit, i, &name, &role, &first, &width);
        out.push_back({name, role, first, width});
    }
    return out;
}

void print_layout(const qar_circuit* circuit, std::ostream& os) {
    const auto registers = list_registers(circuit);
    size_t name_col = 4;
    for (const auto& reg : registers) name_col = std::max(name_col, reg.name.size());
    os << "wires: " << qar_circuit_num_wires(circuit) << '\n';
    os << "registers:\n";
    for (const auto& reg : registers) {
        os << "  " << std::left << std::setw(static_cast<int>(name_col) + 2) << reg.name
           << std::setw(14) << reg.role;
        std::ostringstream range;
        if (reg.width == 0)
            range << "-";
        else if (reg.width == 1)
            range << reg.first_wire;
        else
            range << reg.first_wire << ".." << (reg.first_wire + reg.width - 1);
        os << std::setw(10) << range.str() << "width " << reg.width << '\n';
    }
}

int print_counts(const qar_circuit* circuit, std::ostream& os) {
    qar_gate_counts counts;
    if (const auto status = qar_count_gates(circuit, &counts); status != QAR_OK)
        return fail(status);
    os << "gates: " << counts.total << " (NOT " << counts.not_count << ", CNOT "
       << counts.cnot_count << ", TOFFOLI " << counts.toffoli_count << ")\n";
    return 0;
}

void print_indented(const std::string& text, std::ostream& os) {
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) os << "  " << line << '\n';
}

struct BuildFlags {
    std::string network;
    uint32_t n = 0;
    uint32_t m = 0;
    std::string a_text;
    std::string modulus_text;
    bool uniform_carries = false;
    bool relabel_swaps = false;
};

qar_network network_id(const std::string& name) {
    if (name == "adder") return QAR_NET_ADDER;
    if (name == "subtractor") return QAR_NET_SUBTRACTOR;
    if (name == "modadder") return QAR_NET_MODADDER;
    if (name == "cmult") return QAR_NET_CMULT;
    return QAR_NET_MODEXP;
}

void add_network_arg(CLI::App* sub, std::string& network, bool required) {
    auto* opt = sub->add_option("network", network,
                                "one of: adder, subtractor, modadder, cmult, modexp");
    opt->check(CLI::IsMember({"adder", "subtractor", "modadder", "cmult", "modexp"}));
    if (required) opt->required();
}

void add_build_flags(CLI::App* sub, BuildFlags& flags) {
    sub->add_option("--n", flags.n, "operand bit width (default: width of N)");
    sub->add_option("--m", flags.m, "modexp exponent width (default 2n)");
    sub->add_option("--a", flags.a_text, "multiplier constant / exponentiation base");
    sub->add_option("--N", flags.modulus_text, "modulus for the modular networks");
    sub->add_flag("--uniform-carries", flags.uniform_carries,
                  "n-wire carry register with identical adder blocks");
    sub->add_flag("--relabel-swaps", flags.relabel_swaps,
                  "realize register swaps by relabeling wires instead of CNOT triples");
}

// Returns 0 and fills params, or a nonzero exit code after printing the
// problem.
int fill_build_params(const BuildFlags& flags, qar_build_params& params) {
    params = {};
    params.network = network_id(flags.network);
    const bool modular = params.network == QAR_NET_MODADDER ||
                         params.network == QAR_NET_CMULT || params.network == QAR_NET_MODEXP;
    const bool needs_a =
        params.network == QAR_NET_CMULT || params.network == QAR_NET_MODEXP;
    try {
        if (!flags.modulus_text.empty()) params.modulus = parse_value(flags.modulus_text);
        if (!flags.a_text.empty()) params.a = parse_value(flags.a_text);
    } catch (const std::exception& err) {
        return fail_usage(err.what());
    }
    if (modular && flags.modulus_text.empty())
        return fail_usage("the " + flags.network + " network needs --N");
    if (needs_a && flags.a_text.empty())
        return fail_usage("the " + flags.network + " network needs --a");
    params.n = flags.n != 0 ? flags.n : bit_width64(params.modulus);
    if (params.n == 0) return fail_usage("missing --n");
    params.m = flags.m;
    params.uniform_carries = flags.uniform_carries ? 1 : 0;
    params.relabel_swaps = flags.relabel_swaps ? 1 : 0;
    return 0;
}

int cmd_build(const BuildFlags& flags, const std::string& out_path) {
    qar_build_params params;
    if (const int rc = fill_build_params(flags, params); rc != 0) return rc;
    CircuitHandle circuit;
    if (const auto status = qar_build(&params, &circuit.ptr); status != QAR_OK)
        return fail(status);
    StringHandle text;
    if (const auto status = qar_serialize(circuit.ptr, &text.ptr); status != QAR_OK)
        return fail(status);
    if (!out_path.empty()) {
        std::ofstream file(out_path, std::ios::binary);
        file << text.text();
        if (!file.good()) return fail_io("cannot write '" + out_path + "'");
        std::cout << "wrote " << out_path << '\n';
        print_layout(circuit.ptr, std::cout);
        return print_counts(circuit.ptr, std::cout);
    }
    // Circuit text on stdout so it can be piped; the summary goes to
    // stderr.
    std::cout << text.text();
    print_layout(circuit.ptr, std::cerr);
    return print_counts(circuit.ptr, std::cerr);
}

struct TermSpec {
    double re = 0.0;
    double im = 0.0;
    std::vector<std::pair<std::string, uint64_t>> values;
};

std::vector<std::pair<std::string, uint64_t>> parse_assignments(const std::string& text) {
    std::vector<std::pair<std::string, uint64_t>> out;
    std::istringstream pieces(text);
    std::string piece;
    while (std::getline(pieces, piece, ',')) {
        const auto eq = piece.find('=');
        if (eq == std::string::npos || eq == 0)
            throw std::invalid_argument("expected name=value, got '" + piece + "'");
        out.emplace_back(piece.substr(0, eq), parse_value(piece.substr(eq + 1)));
    }
    return out;
}

TermSpec parse_term(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("term '" + text +
                                    "' must look like re[,im]:name=value,...");
    TermSpec term;
    const std::string amp = text.substr(0, colon);
    const auto comma = amp.find(',');
    if (comma == std::string::npos) {
        term.re = parse_amplitude(amp);
    } else {
        term.re = parse_amplitude(amp.substr(0, comma));
        term.im = parse_amplitude(amp.substr(comma + 1));
    }
    term.values = parse_assignments(text.substr(colon + 1));
    return term;
}

struct SimulateFlags {
    BuildFlags build;
    std::string in_path;
    std::vector<std::string> sets;
    std::vector<std::string> terms;
    bool trace = false;
};

void print_register_values(const qar_circuit* circuit,
                           const std::vector<uint64_t>& values, std::ostream& os) {
    const auto registers = list_registers(circuit);
    size_t name_col = 1;
    for (const auto& reg : registers) name_col = std::max(name_col, reg.name.size());
    for (size_t i = 0; i < registers.size(); ++i) {
        os << "  " << std::left << std::setw(static_cast<int>(name_col)) << registers[i].name
           << " = " << values[i] << " (" << format_binary(values[i], registers[i].width)
           << ")\n";
    }
}

int cmd_simulate(const SimulateFlags& flags) {
    CircuitHandle circuit;
    std::vector<std::pair<std::string, uint64_t>> assignments;

    if (!flags.in_path.empty()) {
        if (!flags.build.network.empty())
            return fail_usage("give either a network or --in, not both");
        std::ifstream file(flags.in_path, std::ios::binary);
        if (!file) return fail_io("cannot read '" + flags.in_path + "'");
        std::ostringstream text;
        text << file.rdbuf();
        if (const auto status = qar_parse(text.str().c_str(), &circuit.ptr);
            status != QAR_OK)
            return fail(status);
    } else if (!flags.build.network.empty()) {
        qar_build_params params;
        if (const int rc = fill_build_params(flags.build, params); rc != 0) return rc;
        if (const auto status = qar_build(&params, &circuit.ptr); status != QAR_OK)
            return fail(status);
        // Inline builds know their parameters, so preload the registers
        // the network contract expects: modexp accumulates into r
        // starting from 1, and the modular adder reads N from its
        // modulus register.
        if (params.network == QAR_NET_MODEXP) assignments.emplace_back("r", 1);
        if (params.network == QAR_NET_MODADDER) assignments.emplace_back("N", params.modulus);
    } else {
        return fail_usage("simulate needs a network or --in <file>");
    }

    auto assign = [&assignments](const std::string& name, uint64_t value) {
        for (auto& [existing, old_value] : assignments) {
            if (existing == name) {
                old_value = value;
                return;
            }
        }
        assignments.emplace_back(name, value);
    };
    try {
        for (const auto& set : flags.sets)
            for (const auto& [name, value] : parse_assignments(set)) assign(name, value);
    } catch (const std::exception& err) {
        return fail_usage(err.what());
    }

    const size_t num_registers = qar_circuit_num_registers(circuit.ptr);

    if (flags.terms.empty()) {
        std::vector<const char*> names;
        std::vector<uint64_t> values;
        for (const auto& [name, value] : assignments) {
            names.push_back(name.c_str());
            values.push_back(value);
        }

        std::vector<uint64_t> before(num_registers, 0);
        const auto registers = list_registers(circuit.ptr);
        for (size_t i = 0; i < registers.size(); ++i)
            for (const auto& [name, value] : assignments)
                if (name == registers[i].name) before[i] = value;

        std::vector<uint64_t> after(num_registers, 0);
        if (const auto status = qar_run_basis(circuit.ptr, names.data(), values.data(),
                                              values.size(), after.data());
            status != QAR_OK)
            return fail(status);

        std::cout << "before:\n";
        print_register_values(circuit.ptr, before, std::cout);
        if (flags.trace) {
            StringHandle trace;
            if (const auto status = qar_trace(circuit.ptr, names.data(), values.data(),
                                              values.size(), &trace.ptr);
                status != QAR_OK)
                return fail(status);
            std::cout << "trace:\n";
            print_indented(trace.text(), std::cout);
        }
        std::cout << "after:\n";
        print_register_values(circuit.ptr, after, std::cout);
        return 0;
    }

    if (flags.trace) return fail_usage("--trace needs a single basis-state input");

    std::vector<TermSpec> terms;
    try {
        for (const auto& text : flags.terms) terms.push_back(parse_term(text));
    } catch (const std::exception& err) {
        return fail_usage(err.what());
    }

    // One shared name list across terms; registers a term leaves unnamed
    // fall back to the preloaded defaults, then to zero.
    std::vector<std::string> names;
    auto name_slot = [&names](const std::string& name) {
        for (size_t i = 0; i < names.size(); ++i)
            if (names[i] == name) return i;
        names.push_back(name);
        return names.size() - 1;
    };
    for (const auto& [name, value] : assignments) name_slot(name);
    for (const auto& term : terms)
        for (const auto& [name, value] : term.values) name_slot(name);

    std::vector<double> amp_re;
    std::vector<double> amp_im;
    std::vector<uint64_t> values(terms.size() * names.size(), 0);
    for (size_t k = 0; k < terms.size(); ++k) {
        amp_re.push_back(terms[k].re);
        amp_im.push_back(terms[k].im);
        for (const auto& [name, value] : assignments)
            values[k * names.size() + name_slot(name)] = value;
        for (const auto& [name, value] : terms[k].values)
            values[k * names.size() + name_slot(name)] = value;
    }
    std::vector<const char*> name_ptrs;
    for (const auto& name : names) name_ptrs.push_back(name.c_str());

    std::cout << "initial terms:\n";
    std::cout << std::setprecision(12);
    for (size_t k = 0; k < terms.size(); ++k) {
        std::cout << "  amp=(" << amp_re[k] << ',' << amp_im[k] << ')';
        for (size_t j = 0; j < names.size(); ++j)
            std::cout << ' ' << names[j] << '=' << values[k * names.size() + j];
        std::cout << '\n';
    }

    StringHandle out_text;
    if (const auto status =
            qar_run_sparse(circuit.ptr, terms.size(), amp_re.data(), amp_im.data(),
                           name_ptrs.data(), names.size(), values.data(), &out_text.ptr);
        status != QAR_OK)
        return fail(status);
    std::cout << "final terms:\n";
    print_indented(out_text.text(), std::cout);
    return 0;
}

struct VerifyFlags {
    BuildFlags build;
    bool random = false;
    uint64_t samples = 1000;
    uint64_t seed = 1;
    bool kv = false;
};

int cmd_verify(const VerifyFlags& flags) {
    qar_verify_params params = {};
    params.network = network_id(flags.build.network);
    params.n = flags.build.n;
    params.m = flags.build.m;
    try {
        if (!flags.build.a_text.empty()) {
            params.a = parse_value(flags.build.a_text);
            params.has_a = 1;
        }
        if (!flags.build.modulus_text.empty()) {
            params.modulus = parse_value(flags.build.modulus_text);
            params.has_modulus = 1;
        }
    } catch (const std::exception& err) {
        return fail_usage(err.what());
    }
    params.uniform_carries = flags.build.uniform_carries ? 1 : 0;
    params.relabel_swaps = flags.build.relabel_swaps ? 1 : 0;
    params.random = flags.random ? 1 : 0;
    params.samples = flags.samples;
    params.seed = flags.seed;

    StringHandle report;
    uint64_t cases = 0;
    uint64_t failures = 0;
    if (const auto status = qar_verify(&params, &report.ptr, &cases, &failures);
        status != QAR_OK)
        return fail(status);

    if (flags.kv) {
        std::cout << report.text();
    } else {
        std::istringstream lines(report.text());
        std::string line;
        while (std::getline(lines, line)) {
            const auto sep = line.find(": ");
            if (sep == std::string::npos) {
                std::cout << line << '\n';
                continue;
            }
            std::cout << std::left << std::setw(26) << line.substr(0, sep)
                      << line.substr(sep + 2) << '\n';
        }
        std::cout << std::left << std::setw(26) << "result"
                  << (failures == 0 ? "PASS" : "FAIL") << '\n';
    }
    return failures == 0 ? 0 : EXIT_VERIFY_FAILED;
}

struct ResourceFlags {
    BuildFlags build;
    std::string sweep;
    std::string csv_path;
};

int print_theoretical(uint64_t n) {
    uint64_t counts[3] = {0, 0, 0};
    if (const auto status = qar_theoretical_counts(n, counts); status != QAR_OK)
        return fail(status);
    std::cout << "qubit formulas at n=" << n << ":\n";
    std::cout << "  synthesized layout          7n+1 = " << counts[0]
              << "  (reconstruction: 2n exponent + n result + 4n+1 temporaries)\n";
    std::cout << "  classical-register variant  5n+2 = " << counts[1] << '\n';
    std::cout << "  toffoli-adder variant       4n+3 = " << counts[2] << '\n';
    return 0;
}

int cmd_resources(const ResourceFlags& flags) {
    const qar_network network = network_id(flags.build.network);

    if (!flags.sweep.empty()) {
        const auto dots = flags.sweep.find("..");
        uint32_t lo = 0;
        uint32_t hi = 0;
        try {
            if (dots == std::string::npos) throw std::invalid_argument("");
            lo = static_cast<uint32_t>(parse_value(flags.sweep.substr(0, dots)));
            hi = static_cast<uint32_t>(parse_value(flags.sweep.substr(dots + 2)));
        } catch (const std::exception&) {
            return fail_usage("--sweep wants LO..HI, got '" + flags.sweep + "'");
        }
        double slope = 0.0;
        StringHandle csv;
        if (const auto status = qar_scaling_fit(network, lo, hi,
                                                flags.build.relabel_swaps ? 1 : 0, &slope,
                                                &csv.ptr);
            status != QAR_OK)
            return fail(status);
        std::cout << "sweep: " << flags.build.network << " n=" << lo << ".." << hi << '\n';
        std::cout << "log-log slope: " << std::fixed << std::setprecision(4) << slope
                  << '\n';
        if (!flags.csv_path.empty()) {
            std::ofstream file(flags.csv_path, std::ios::binary);
            file << csv.text();
            if (!file.good()) return fail_io("cannot write '" + flags.csv_path + "'");
            std::cout << "wrote " << flags.csv_path << '\n';
        } else {
            std::cout << csv.text();
        }
        return 0;
    }

    // Without an explicit modulus, size a representative instance off n
    // alone: the largest n-bit modulus with a legal companion constant.
    BuildFlags build = flags.build;
    const bool modular = network == QAR_NET_MODADDER || network == QAR_NET_CMULT ||
                         network == QAR_NET_MODEXP;
    const bool canonical = modular && build.modulus_text.empty();
    if (canonical) {
        if (build.n == 0) return fail_usage("missing --n");
        const uint64_t modulus = (uint64_t{1} << build.n) - 1;
        build.modulus_text = std::to_string(modulus);
        if (build.a_text.empty())
            build.a_text = network == QAR_NET_CMULT ? std::to_string(modulus - 1) : "2";
    }

    qar_build_params params;
    if (const int rc = fill_build_params(build, params); rc != 0) return rc;
    CircuitHandle circuit;
    const auto status = qar_build(&params, &circuit.ptr);
    if (status != QAR_OK) {
        if (canonical && status == QAR_ERR_INVALID_ARGUMENT &&
            network == QAR_NET_MODEXP) {
            // Too small to synthesize (a modulus needs at least two
            // bits); the memory formulas still apply.
            std::cout << "no instance at n=" << params.n << " (" << qar_last_error()
                      << ")\n";
            return print_theoretical(params.n);
        }
        return fail(status);
    }

    print_layout(circuit.ptr, std::cout);
    if (const int rc = print_counts(circuit.ptr, std::cout); rc != 0) return rc;
    if (network == QAR_NET_MODEXP) return print_theoretical(params.n);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"reversible arithmetic networks: build, simulate, verify, count"};
    app.require_subcommand(1);
    app.set_version_flag("--version", []() { return std::string(qar_version()); });

    BuildFlags build_flags;
    std::string build_out;
    auto* build_cmd = app.add_subcommand("build", "synthesize a network and print it");
    add_network_arg(build_cmd, build_flags.network, true);
    add_build_flags(build_cmd, build_flags);
    build_cmd->add_option("--out", build_out, "write the circuit to this file");

    SimulateFlags sim_flags;
    auto* sim_cmd = app.add_subcommand("simulate", "run basis states or superpositions");
    add_network_arg(sim_cmd, sim_flags.build.network, false);
    add_build_flags(sim_cmd, sim_flags.build);
    sim_cmd->add_option("--in", sim_flags.in_path, "read the circuit from this file");
    sim_cmd->add_option("--set", sim_flags.sets,
                        "initial register values, name=value[,name=value...]");
    sim_cmd->add_option("--term", sim_flags.terms,
                        "superposition term, re[,im]:name=value,... (repeatable)");
    sim_cmd->add_flag("--trace", sim_flags.trace,
                      "print decoded registers at every block boundary");

    VerifyFlags verify_flags;
    auto* verify_cmd =
        app.add_subcommand("verify", "check a network against the arithmetic oracles");
    add_network_arg(verify_cmd, verify_flags.build.network, true);
    add_build_flags(verify_cmd, verify_flags.build);
    verify_cmd->add_flag("--random", verify_flags.random,
                         "seeded random sampling instead of exhaustion");
    verify_cmd->add_option("--samples", verify_flags.samples,
                           "sample count for --random (default 1000)");
    verify_cmd->add_option("--seed", verify_flags.seed, "seed for --random (default 1)");
    verify_cmd->add_flag("--kv", verify_flags.kv, "print the raw key: value report");

    ResourceFlags resource_flags;
    auto* resources_cmd =
        app.add_subcommand("resources", "gate counts, qubit breakdown, scaling");
    add_network_arg(resources_cmd, resource_flags.build.network, true);
    add_build_flags(resources_cmd, resource_flags.build);
    resources_cmd->add_option("--sweep", resource_flags.sweep,
                              "fit gate-count scaling over n=LO..HI");
    resources_cmd->add_option("--csv", resource_flags.csv_path,
                              "write the sweep points to this file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        const int code = app.exit(err);
        return code == 0 ? 0 : EXIT_USAGE;
    }

    if (build_cmd->parsed()) return cmd_build(build_flags, build_out);
    if (sim_cmd->parsed()) return cmd_simulate(sim_flags);
    if (verify_cmd->parsed()) return cmd_verify(verify_flags);
    return cmd_resources(resource_flags);
}
