#include "qarith/verify.hpp"

#include <chrono>
#include <cstdio>
#include <random>
#include <sstream>
#include <stdexcept>

#include "qarith/errors.hpp"
#include "qarith/numbers.hpp"
#include "qarith/oracle.hpp"

namespace qarith {

namespace {

using u128 = unsigned __int128;

struct Resolved {
    NetworkKind kind = NetworkKind::Adder;
    std::uint32_t n = 0;
    std::uint32_t m = 0;
    std::optional<std::uint64_t> a;
    std::optional<std::uint64_t> N;
    BuildOptions build;
};

Resolved resolve(const VerifyParams& params) {
    Resolved r;
    r.kind = params.kind;
    r.n = params.n;
    r.a = params.a;
    r.N = params.N;
    r.build = params.build;
    if (r.n == 0 && r.N) r.n = bit_width(*r.N);
    if (r.n == 0)
        throw std::invalid_argument("operand width n required (or a modulus to infer it)");
    if (r.kind == NetworkKind::ModExp) {
        if (!r.N) throw std::invalid_argument("modexp verification needs a modulus");
        if (!r.a) throw std::invalid_argument("modexp verification needs a base");
        r.m = params.m != 0 ? params.m : default_exponent_width(r.n);
    }
    return r;
}

std::string params_text_for(const Resolved& r) {
    std::ostringstream out;
    out << "n=" << r.n;
    if (r.kind == NetworkKind::ModExp) out << " m=" << r.m;
    const bool takes_a = r.kind == NetworkKind::CMult || r.kind == NetworkKind::ModExp;
    const bool takes_N = takes_a || r.kind == NetworkKind::ModAdder;
    if (takes_a) out << " a=" << (r.a ? std::to_string(*r.a) : "all");
    if (takes_N) out << " N=" << (r.N ? std::to_string(*r.N) : "all");
    if (r.build.uniform_carries) out << " uniform_carries";
    if (r.build.relabel_swaps) out << " relabel_swaps";
    return std::move(out).str();
}

class Harness {
  public:
    Harness(NetworkKind kind, std::string params_text, std::string mode) {
        report_.kind = kind;
        report_.params_text = std::move(params_text);
        report_.mode = std::move(mode);
    }

    void run_case(const Circuit& circuit, const std::vector<RegisterValue>& inputs,
                  const char* result_register, std::uint64_t expected,
                  const std::vector<RegisterValue>& ancilla_final,
                  const std::vector<const char*>& preserved, bool trace_on_failure) {
        const auto& layout = circuit.layout();
        const BasisState in = encode(layout, circuit.num_wires(), inputs);
        const BasisState out = run_basis(circuit, in);
        const std::uint64_t actual = read_register(*layout.find(result_register), out);

        bool ok = actual == expected;
        for (const char* name : preserved) {
            std::uint64_t wanted = 0;
            for (const auto& input : inputs)
                if (input.name == name) wanted = input.value;
            if (read_register(*layout.find(name), out) != wanted) ok = false;
        }
        bool clean = true;
        for (const auto& required : ancilla_final)
            if (read_register(*layout.find(required.name), out) != required.value)
                clean = false;

        ++report_.cases_run;
        if (!clean) ++report_.cleanliness_violations;
        if (!ok || !clean) {
            if (report_.cases_failed == 0) {
                Counterexample ce;
                ce.inputs = inputs;
                ce.expected = expected;
                ce.actual = actual;
                if (trace_on_failure) ce.block_trace = trace_blocks(circuit, in);
                report_.first_counterexample = std::move(ce);
            }
            ++report_.cases_failed;
        }
    }

    VerificationReport finish(double wall_seconds) {
        report_.wall_seconds = wall_seconds;
        return std::move(report_);
    }

  private:
    VerificationReport report_;
};

void run_adder_case(Harness& h, const Circuit& circuit, bool subtract, std::uint32_t n,
                    std::uint64_t a, std::uint64_t b) {
    std::uint64_t expected;
    if (subtract) {
        const std::uint64_t wrap = std::uint64_t{1} << (n + 1);
        expected = (b + wrap - a) & (wrap - 1);
    } else {
        expected = oracle::oracle_add(a, b);
    }
    h.run_case(circuit, {{"a", a}, {"b", b}}, "b", expected, {{"c", 0}}, {"a"}, false);
}

void run_modadder_case(Harness& h, const Circuit& circuit, std::uint64_t N,
                       std::uint64_t a, std::uint64_t b) {
    h.run_case(circuit, {{"a", a}, {"b", b}, {"N", N}}, "b",
               oracle::oracle_modadd(a, b, N), {{"c", 0}, {"t", 0}, {"N", N}}, {"a"},
               true);
}

void run_cmult_case(Harness& h, const Circuit& circuit, std::uint64_t a, std::uint64_t N,
                    std::uint64_t c, std::uint64_t x) {
    h.run_case(circuit, {{"ctl", c}, {"x", x}}, "r", oracle::oracle_cmult(c, x, a, N),
               {{"ax", 0}, {"c", 0}, {"N", 0}, {"t", 0}}, {"ctl", "x"}, false);
}

void run_modexp_case(Harness& h, const Circuit& circuit, std::uint64_t a, std::uint64_t N,
                     std::uint64_t x) {
    h.run_case(circuit, {{"x", x}, {"r", 1}}, "r", oracle::oracle_modexp(a, x, N),
               {{"w", 0}, {"ax", 0}, {"c", 0}, {"N", 0}, {"t", 0}}, {"x"}, false);
}

u128 exhaustive_case_count(const Resolved& r) {
    const u128 two_n = u128{1} << r.n;
    switch (r.kind) {
    case NetworkKind::Adder:
    case NetworkKind::Subtractor:
        return two_n * two_n;
    case NetworkKind::ModAdder: {
        if (r.N) return u128{*r.N} * *r.N;
        u128 total = 0;
        for (std::uint64_t N = 2; N < (std::uint64_t{1} << r.n); ++N)
            total += u128{N} * N;
        return total;
    }
    case NetworkKind::CMult: {
        const u128 per_pair = 2 * two_n;
        if (r.N && r.a) return per_pair;
        if (r.N) return per_pair * *r.N;
        u128 total = 0;
        for (std::uint64_t N = 2; N < (std::uint64_t{1} << r.n); ++N)
            total += per_pair * (r.a ? 1 : N);
        return total;
    }
    case NetworkKind::ModExp:
        return u128{1} << r.m;
    }
    return 0;
}

void enumerate_exhaustive(Harness& h, const Resolved& r, const Circuit* fixed_circuit) {
    switch (r.kind) {
    case NetworkKind::Adder:
    case NetworkKind::Subtractor: {
        const bool subtract = r.kind == NetworkKind::Subtractor;
        const Circuit circuit = fixed_circuit
                                    ? *fixed_circuit
                                    : (subtract ? build_subtractor(r.n, r.build)
                                                : build_adder(r.n, r.build));
        const std::uint64_t limit = std::uint64_t{1} << r.n;
        for (std::uint64_t a = 0; a < limit; ++a)
            for (std::uint64_t b = 0; b < limit; ++b)
                run_adder_case(h, circuit, subtract, r.n, a, b);
        break;
    }
    case NetworkKind::ModAdder: {
        const std::uint64_t n_lo = r.N ? *r.N : 2;
        const std::uint64_t n_hi = r.N ? *r.N : (std::uint64_t{1} << r.n) - 1;
        for (std::uint64_t N = n_lo; N <= n_hi; ++N) {
            const Circuit circuit =
                fixed_circuit ? *fixed_circuit : build_modular_adder(r.n, N, r.build);
            for (std::uint64_t a = 0; a < N; ++a)
                for (std::uint64_t b = 0; b < N; ++b)
                    run_modadder_case(h, circuit, N, a, b);
        }
        break;
    }
    case NetworkKind::CMult: {
        const std::uint64_t n_lo = r.N ? *r.N : 2;
        const std::uint64_t n_hi = r.N ? *r.N : (std::uint64_t{1} << r.n) - 1;
        for (std::uint64_t N = n_lo; N <= n_hi; ++N) {
            const std::uint64_t a_lo = r.a ? *r.a : 0;
            const std::uint64_t a_hi = r.a ? *r.a : N - 1;
            for (std::uint64_t a = a_lo; a <= a_hi; ++a) {
                const Circuit circuit =
                    fixed_circuit ? *fixed_circuit : build_cmult(r.n, a, N, r.build);
                for (std::uint64_t c = 0; c < 2; ++c)
                    for (std::uint64_t x = 0; x < (std::uint64_t{1} << r.n); ++x)
                        run_cmult_case(h, circuit, a, N, c, x);
            }
        }
        break;
    }
    case NetworkKind::ModExp: {
        const Circuit circuit =
            fixed_circuit ? *fixed_circuit : build_modexp(r.n, r.m, *r.a, *r.N, r.build);
        for (std::uint64_t x = 0; x < (std::uint64_t{1} << r.m); ++x)
            run_modexp_case(h, circuit, *r.a, *r.N, x);
        break;
    }
    }
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

VerificationReport exhaustive_impl(const VerifyParams& params, const Circuit* fixed) {
    const Resolved r = resolve(params);
    const u128 cases = exhaustive_case_count(r);
    if (cases > EXHAUSTIVE_CASE_BUDGET) {
        const std::string shown =
            cases > u128{UINT64_MAX} ? "over 2^64"
                                     : std::to_string(static_cast<std::uint64_t>(cases));
        throw BudgetError("exhaustive enumeration needs " + shown + " cases, budget is " +
                          std::to_string(EXHAUSTIVE_CASE_BUDGET));
    }
    Harness h(r.kind, params_text_for(r), "exhaustive");
    const auto start = std::chrono::steady_clock::now();
    enumerate_exhaustive(h, r, fixed);
    return h.finish(seconds_since(start));
}

} // namespace

VerificationReport verify_exhaustive(const VerifyParams& params) {
    return exhaustive_impl(params, nullptr);
}

VerificationReport verify_exhaustive_on(const Circuit& circuit, const VerifyParams& params) {
    const Resolved r = resolve(params);
    const bool pinned = (r.kind == NetworkKind::Adder || r.kind == NetworkKind::Subtractor) ||
                        (r.kind == NetworkKind::ModAdder && r.N) ||
                        (r.kind == NetworkKind::CMult && r.N && r.a) ||
                        r.kind == NetworkKind::ModExp;
    if (!pinned)
        throw std::invalid_argument(
            "verifying a supplied circuit needs fully pinned parameters");
    return exhaustive_impl(params, &circuit);
}

VerificationReport verify_random(const VerifyParams& params, std::uint64_t samples,
                                 std::uint64_t seed) {
    const Resolved r = resolve(params);
    if (samples == 0) throw std::invalid_argument("sample count must be positive");
    Harness h(r.kind, params_text_for(r),
              "random samples=" + std::to_string(samples) + " seed=" + std::to_string(seed));
    const auto start = std::chrono::steady_clock::now();
    std::mt19937_64 rng(seed);
    // Bounded draws use plain remainders: bias is irrelevant here and the
    // sequence stays identical across standard libraries.
    const auto draw = [&rng](std::uint64_t bound) { return rng() % bound; };

    switch (r.kind) {
    case NetworkKind::Adder:
    case NetworkKind::Subtractor: {
        const bool subtract = r.kind == NetworkKind::Subtractor;
        const Circuit circuit =
            subtract ? build_subtractor(r.n, r.build) : build_adder(r.n, r.build);
        const std::uint64_t limit = std::uint64_t{1} << r.n;
        for (std::uint64_t s = 0; s < samples; ++s)
            run_adder_case(h, circuit, subtract, r.n, draw(limit), draw(limit));
        break;
    }
    case NetworkKind::ModAdder: {
        const std::uint64_t limit = std::uint64_t{1} << r.n;
        for (std::uint64_t s = 0; s < samples; ++s) {
            const std::uint64_t N = r.N ? *r.N : 2 + draw(limit - 2);
            const Circuit circuit = build_modular_adder(r.n, N, r.build);
            run_modadder_case(h, circuit, N, draw(N), draw(N));
        }
        break;
    }
    case NetworkKind::CMult: {
        const std::uint64_t limit = std::uint64_t{1} << r.n;
        for (std::uint64_t s = 0; s < samples; ++s) {
            const std::uint64_t N = r.N ? *r.N : 2 + draw(limit - 2);
            const std::uint64_t a = r.a ? *r.a : draw(N);
            if (a >= N) throw std::invalid_argument("multiplier must be below the modulus");
            const Circuit circuit = build_cmult(r.n, a, N, r.build);
            run_cmult_case(h, circuit, a, N, draw(2), draw(limit));
        }
        break;
    }
    case NetworkKind::ModExp: {
        const Circuit circuit = build_modexp(r.n, r.m, *r.a, *r.N, r.build);
        for (std::uint64_t s = 0; s < samples; ++s)
            run_modexp_case(h, circuit, *r.a, *r.N, draw(std::uint64_t{1} << r.m));
        break;
    }
    }
    return h.finish(seconds_since(start));
}

bool check_permutation(const Circuit& circuit) {
    const std::uint32_t wires = circuit.num_wires();
    if (wires > 24)
        throw BudgetError("permutation check enumerates 2^wires states, capped at 24 wires");
    const std::uint64_t states = std::uint64_t{1} << wires;
    std::vector<bool> seen(states, false);
    for (std::uint64_t value = 0; value < states; ++value) {
        BasisState state(wires);
        for (std::uint32_t w = 0; w < wires; ++w)
            if ((value >> w) & 1) state.set_bit(w, true);
        const BasisState out = run_basis(circuit, state);
        const std::uint64_t image = out.words()[0] & (states - 1);
        if (seen[image]) return false;
        seen[image] = true;
    }
    return true;
}

std::vector<std::string> trace_blocks(const Circuit& circuit, const BasisState& initial) {
    if (initial.width() != circuit.num_wires())
        throw std::invalid_argument("trace state width does not match the circuit");
    const auto format = [&](std::string label, const BasisState& state) {
        for (const auto& [name, value] : decode(circuit.layout(), state))
            label += " " + name + "=" + std::to_string(value);
        return label;
    };
    std::vector<std::string> lines;
    lines.push_back(format("initial:", initial));

    BasisState state = initial;
    const auto& gates = circuit.gates();
    for (std::size_t i = 0; i < gates.size(); ++i) {
        const Gate& gate = gates[i];
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
        if (i + 1 == gates.size() || gates[i + 1].tag != gate.tag) {
            const auto text = circuit.tag_text(gate.tag);
            lines.push_back(format(
                "after " + (text.empty() ? std::string("untagged") : std::string(text)) + ":",
                state));
        }
    }
    return lines;
}

std::string VerificationReport::to_kv_text() const {
    std::ostringstream out;
    out << "network: " << network_name(kind) << '\n';
    out << "params: " << params_text << '\n';
    out << "mode: " << mode << '\n';
    out << "cases: " << cases_run << '\n';
    out << "failures: " << cases_failed << '\n';
    out << "cleanliness_violations: " << cleanliness_violations << '\n';
    char wall[32];
    std::snprintf(wall, sizeof wall, "%.6f", wall_seconds);
    out << "wall_seconds: " << wall << '\n';
    if (!first_counterexample) {
        out << "counterexample: none\n";
    } else {
        const auto& ce = *first_counterexample;
        out << "counterexample_inputs:";
        for (const auto& [name, value] : ce.inputs) out << ' ' << name << '=' << value;
        out << '\n';
        out << "counterexample_expected: " << ce.expected << '\n';
        out << "counterexample_actual: " << ce.actual << '\n';
        for (const auto& line : ce.block_trace) out << "counterexample_trace: " << line << '\n';
    }
    return std::move(out).str();
}

bool VerificationReport::same_outcome(const VerificationReport& other) const {
    const auto ce_equal = [](const std::optional<Counterexample>& lhs,
                             const std::optional<Counterexample>& rhs) {
        if (lhs.has_value() != rhs.has_value()) return false;
        if (!lhs) return true;
        const auto values_equal = [](const std::vector<RegisterValue>& a,
                                     const std::vector<RegisterValue>& b) {
            if (a.size() != b.size()) return false;
            for (std::size_t i = 0; i < a.size(); ++i)
                if (a[i].name != b[i].name || a[i].value != b[i].value) return false;
            return true;
        };
        return values_equal(lhs->inputs, rhs->inputs) && lhs->expected == rhs->expected &&
               lhs->actual == rhs->actual && lhs->block_trace == rhs->block_trace;
    };
    return kind == other.kind && params_text == other.params_text && mode == other.mode &&
           cases_run == other.cases_run && cases_failed == other.cases_failed &&
           cleanliness_violations == other.cleanliness_violations &&
           ce_equal(first_counterexample, other.first_counterexample);
}

} // namespace qarith
