#include "qarith.h"

#include <algorithm>
#include <cstring>
#include <new>
#include <sstream>
#include <string>
#include <vector>

#include "qarith/builders.hpp"
#include "qarith/errors.hpp"
#include "qarith/network.hpp"
#include "qarith/resources.hpp"
#include "qarith/serialize.hpp"
#include "qarith/sim.hpp"
#include "qarith/verify.hpp"

struct qar_circuit {
    qarith::Circuit impl;
};

namespace {

thread_local std::string g_last_error;

template <typename Fn>
qar_status guarded(Fn&& fn) {
    try {
        fn();
        return QAR_OK;
    } catch (const qarith::ParseError& err) {
        g_last_error = err.what();
        return QAR_ERR_PARSE;
    } catch (const qarith::BudgetError& err) {
        g_last_error = err.what();
        return QAR_ERR_BUDGET;
    } catch (const std::invalid_argument& err) {
        g_last_error = err.what();
        return QAR_ERR_INVALID_ARGUMENT;
    } catch (const std::bad_alloc&) {
        g_last_error = "out of memory";
        return QAR_ERR_NO_MEMORY;
    } catch (const std::exception& err) {
        g_last_error = err.what();
        return QAR_ERR_INTERNAL;
    }
}

qar_status fail_invalid(const char* message) {
    g_last_error = message;
    return QAR_ERR_INVALID_ARGUMENT;
}

char* dup_string(const std::string& text) {
    char* out = new char[text.size() + 1];
    std::memcpy(out, text.c_str(), text.size() + 1);
    return out;
}

qarith::NetworkKind to_kind(qar_network network) {
    switch (network) {
    case QAR_NET_ADDER: return qarith::NetworkKind::Adder;
    case QAR_NET_SUBTRACTOR: return qarith::NetworkKind::Subtractor;
    case QAR_NET_MODADDER: return qarith::NetworkKind::ModAdder;
    case QAR_NET_CMULT: return qarith::NetworkKind::CMult;
    case QAR_NET_MODEXP: return qarith::NetworkKind::ModExp;
    }
    throw std::invalid_argument("unknown network id");
}

std::vector<qarith::RegisterValue> collect_values(const char* const* names,
                                                  const uint64_t* values,
                                                  size_t num_values) {
    if (num_values != 0 && (names == nullptr || values == nullptr))
        throw std::invalid_argument("register values need both names and values");
    std::vector<qarith::RegisterValue> out;
    out.reserve(num_values);
    for (size_t i = 0; i < num_values; ++i) {
        if (names[i] == nullptr) throw std::invalid_argument("null register name");
        out.push_back({names[i], values[i]});
    }
    return out;
}

} // namespace

extern "C" {

const char* qar_version(void) { return "1.0.0"; }

const char* qar_last_error(void) { return g_last_error.c_str(); }

void qar_circuit_free(qar_circuit* circuit) { delete circuit; }

void qar_string_free(char* text) { delete[] text; }

qar_status qar_build(const qar_build_params* params, qar_circuit** out_circuit) {
    if (params == nullptr || out_circuit == nullptr)
        return fail_invalid("qar_build: null argument");
    *out_circuit = nullptr;
    return guarded([&] {
        qarith::BuildOptions options;
        options.uniform_carries = params->uniform_carries != 0;
        options.relabel_swaps = params->relabel_swaps != 0;
        qarith::Circuit circuit = [&] {
            switch (to_kind(params->network)) {
            case qarith::NetworkKind::Adder:
                return qarith::build_adder(params->n, options);
            case qarith::NetworkKind::Subtractor:
                return qarith::build_subtractor(params->n, options);
            case qarith::NetworkKind::ModAdder:
                return qarith::build_modular_adder(params->n, params->modulus, options);
            case qarith::NetworkKind::CMult:
                return qarith::build_cmult(params->n, params->a, params->modulus, options);
            case qarith::NetworkKind::ModExp: {
                const uint32_t m =
                    params->m != 0 ? params->m : qarith::default_exponent_width(params->n);
                return qarith::build_modexp(params->n, m, params->a, params->modulus,
                                            options);
            }
            }
            throw std::invalid_argument("unknown network id");
        }();
        *out_circuit = new qar_circuit{std::move(circuit)};
    });
}

qar_status qar_parse(const char* text, qar_circuit** out_circuit) {
    if (text == nullptr || out_circuit == nullptr)
        return fail_invalid("qar_parse: null argument");
    *out_circuit = nullptr;
    return guarded([&] { *out_circuit = new qar_circuit{qarith::parse(text)}; });
}

qar_status qar_serialize(const qar_circuit* circuit, char** out_text) {
    if (circuit == nullptr || out_text == nullptr)
        return fail_invalid("qar_serialize: null argument");
    *out_text = nullptr;
    return guarded([&] { *out_text = dup_string(qarith::serialize(circuit->impl)); });
}

uint32_t qar_circuit_num_wires(const qar_circuit* circuit) {
    return circuit == nullptr ? 0 : circuit->impl.num_wires();
}

size_t qar_circuit_num_gates(const qar_circuit* circuit) {
    return circuit == nullptr ? 0 : circuit->impl.size();
}

size_t qar_circuit_num_registers(const qar_circuit* circuit) {
    return circuit == nullptr ? 0 : circuit->impl.layout().size();
}

qar_status qar_circuit_register_info(const qar_circuit* circuit, size_t index,
                                     const char** out_name, const char** out_role,
                                     uint32_t* out_first_wire, uint32_t* out_width) {
    if (circuit == nullptr) return fail_invalid("qar_circuit_register_info: null circuit");
    const auto& registers = circuit->impl.layout().registers();
    if (index >= registers.size())
        return fail_invalid("qar_circuit_register_info: index out of range");
    const auto& reg = registers[index];
    if (out_name != nullptr) *out_name = reg.name.c_str();
    if (out_role != nullptr) *out_role = qarith::role_name(reg.role).data();
    if (out_first_wire != nullptr) *out_first_wire = reg.first_wire;
    if (out_width != nullptr) *out_width = reg.width;
    return QAR_OK;
}

qar_status qar_count_gates(const qar_circuit* circuit, qar_gate_counts* out_counts) {
    if (circuit == nullptr || out_counts == nullptr)
        return fail_invalid("qar_count_gates: null argument");
    return guarded([&] {
        const qarith::GateCounts counts = qarith::count_gates(circuit->impl);
        out_counts->not_count = counts.not_count;
        out_counts->cnot_count = counts.cnot_count;
        out_counts->toffoli_count = counts.toffoli_count;
        out_counts->total = counts.total;
    });
}

qar_status qar_run_basis(const qar_circuit* circuit, const char* const* names,
                         const uint64_t* values, size_t num_values, uint64_t* out_values) {
    if (circuit == nullptr || out_values == nullptr)
        return fail_invalid("qar_run_basis: null argument");
    return guarded([&] {
        const auto initial = collect_values(names, values, num_values);
        const qarith::BasisState in =
            qarith::encode(circuit->impl.layout(), circuit->impl.num_wires(), initial);
        const qarith::BasisState out = qarith::run_basis(circuit->impl, in);
        const auto decoded = qarith::decode(circuit->impl.layout(), out);
        for (size_t i = 0; i < decoded.size(); ++i) out_values[i] = decoded[i].value;
    });
}

qar_status qar_run_sparse(const qar_circuit* circuit, size_t num_terms,
                          const double* amp_re, const double* amp_im,
                          const char* const* names, size_t num_names,
                          const uint64_t* values, char** out_text) {
    if (circuit == nullptr || out_text == nullptr || num_terms == 0 || amp_re == nullptr ||
        amp_im == nullptr || (num_names != 0 && (names == nullptr || values == nullptr)))
        return fail_invalid("qar_run_sparse: null argument");
    *out_text = nullptr;
    return guarded([&] {
        qarith::SparseState state;
        for (size_t k = 0; k < num_terms; ++k) {
            std::vector<qarith::RegisterValue> term_values;
            term_values.reserve(num_names);
            for (size_t j = 0; j < num_names; ++j) {
                if (names[j] == nullptr) throw std::invalid_argument("null register name");
                term_values.push_back({names[j], values[k * num_names + j]});
            }
            const qarith::BasisState basis =
                qarith::encode(circuit->impl.layout(), circuit->impl.num_wires(), term_values);
            const std::complex<double> amp{amp_re[k], amp_im[k]};
            auto [it, inserted] = state.terms.emplace(basis, amp);
            if (!inserted) it->second += amp;
        }
        state.prune();
        const qarith::SparseState out = qarith::run_sparse(circuit->impl, state);

        // Deterministic listing: sort by the decoded register tuple.
        std::vector<std::pair<std::vector<qarith::RegisterValue>, std::complex<double>>> rows;
        rows.reserve(out.terms.size());
        for (const auto& [basis, amp] : out.terms)
            rows.emplace_back(qarith::decode(circuit->impl.layout(), basis), amp);
        std::sort(rows.begin(), rows.end(), [](const auto& lhs, const auto& rhs) {
            for (size_t i = 0; i < lhs.first.size(); ++i) {
                if (lhs.first[i].value != rhs.first[i].value)
                    return lhs.first[i].value < rhs.first[i].value;
            }
            return false;
        });
        std::ostringstream text;
        text.precision(12);
        for (const auto& [regs, amp] : rows) {
            text << "amp=(" << amp.real() << ',' << amp.imag() << ')';
            for (const auto& [name, value] : regs) text << ' ' << name << '=' << value;
            text << '\n';
        }
        *out_text = dup_string(std::move(text).str());
    });
}

qar_status qar_trace(const qar_circuit* circuit, const char* const* names,
                     const uint64_t* values, size_t num_values, char** out_text) {
    if (circuit == nullptr || out_text == nullptr)
        return fail_invalid("qar_trace: null argument");
    *out_text = nullptr;
    return guarded([&] {
        const auto initial = collect_values(names, values, num_values);
        const qarith::BasisState in =
            qarith::encode(circuit->impl.layout(), circuit->impl.num_wires(), initial);
        std::string text;
        for (const auto& line : qarith::trace_blocks(circuit->impl, in)) {
            text += line;
            text += '\n';
        }
        *out_text = dup_string(text);
    });
}

qar_status qar_verify(const qar_verify_params* params, char** out_report,
                      uint64_t* out_cases, uint64_t* out_failures) {
    if (params == nullptr) return fail_invalid("qar_verify: null params");
    return guarded([&] {
        qarith::VerifyParams vp;
        vp.kind = to_kind(params->network);
        vp.n = params->n;
        vp.m = params->m;
        if (params->has_a) vp.a = params->a;
        if (params->has_modulus) vp.N = params->modulus;
        vp.build.uniform_carries = params->uniform_carries != 0;
        vp.build.relabel_swaps = params->relabel_swaps != 0;

        const qarith::VerificationReport report =
            params->random ? qarith::verify_random(vp, params->samples, params->seed)
                           : qarith::verify_exhaustive(vp);
        if (out_report != nullptr) *out_report = dup_string(report.to_kv_text());
        if (out_cases != nullptr) *out_cases = report.cases_run;
        if (out_failures != nullptr) *out_failures = report.cases_failed;
    });
}

qar_status qar_theoretical_counts(uint64_t n, uint64_t out_counts[3]) {
    if (out_counts == nullptr) return fail_invalid("qar_theoretical_counts: null output");
    return guarded([&] {
        const qarith::TheoreticalCounts counts = qarith::theoretical_counts(n);
        out_counts[0] = counts.baseline;
        out_counts[1] = counts.classical_register_variant;
        out_counts[2] = counts.toffoli_adder_variant;
    });
}

qar_status qar_scaling_fit(qar_network network, uint32_t n_lo, uint32_t n_hi,
                           int relabel_swaps, double* out_slope, char** out_csv) {
    if (out_slope == nullptr) return fail_invalid("qar_scaling_fit: null output");
    if (out_csv != nullptr) *out_csv = nullptr;
    return guarded([&] {
        const qarith::ScalingFit fit =
            qarith::scaling_fit(to_kind(network), n_lo, n_hi, relabel_swaps != 0);
        *out_slope = fit.slope;
        if (out_csv != nullptr) *out_csv = dup_string(qarith::scaling_csv(fit));
    });
}

} // extern "C"
