#ifndef QARITH_H
#define QARITH_H

/* C interface to the qarith shared library: synthesis of reversible
 * arithmetic networks over NOT/CNOT/TOFFOLI, exact simulation,
 * oracle-backed verification, and resource accounting.
 *
 * Conventions: every fallible function returns a qar_status; QAR_OK
 * means success and any output parameters are filled. On failure,
 * qar_last_error() returns a message describing the problem, valid on
 * the calling thread until its next qarith call. Strings returned
 * through char** out-parameters are heap-allocated; release them with
 * qar_string_free. Handles are opaque; release circuits with
 * qar_circuit_free. Register values are 64-bit, which caps usable
 * register widths at 64 wires.
 */

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qar_status {
    QAR_OK = 0,
    QAR_ERR_INVALID_ARGUMENT = 1, /* precondition or parameter violation */
    QAR_ERR_PARSE = 2,            /* malformed circuit text */
    QAR_ERR_BUDGET = 3,           /* enumeration budget exceeded */
    QAR_ERR_NO_MEMORY = 4,
    QAR_ERR_INTERNAL = 5
} qar_status;

typedef enum qar_network {
    QAR_NET_ADDER = 0,
    QAR_NET_SUBTRACTOR = 1,
    QAR_NET_MODADDER = 2,
    QAR_NET_CMULT = 3,
    QAR_NET_MODEXP = 4
} qar_network;

typedef struct qar_circuit qar_circuit;

const char* qar_version(void);

/* Message for the most recent failing call on this thread; never NULL. */
const char* qar_last_error(void);

void qar_circuit_free(qar_circuit* circuit);
void qar_string_free(char* text);

typedef struct qar_build_params {
    qar_network network;
    uint32_t n;       /* operand bit width */
    uint32_t m;       /* modexp exponent width; 0 selects the 2n default */
    uint64_t a;       /* multiplier constant or exponentiation base */
    uint64_t modulus; /* N for the modular networks */
    int uniform_carries; /* nonzero: n-wire carry register, identical blocks */
    int relabel_swaps;   /* nonzero: swaps relabel wires instead of emitting CNOTs */
} qar_build_params;

qar_status qar_build(const qar_build_params* params, qar_circuit** out_circuit);

qar_status qar_parse(const char* text, qar_circuit** out_circuit);
qar_status qar_serialize(const qar_circuit* circuit, char** out_text);

uint32_t qar_circuit_num_wires(const qar_circuit* circuit);
size_t qar_circuit_num_gates(const qar_circuit* circuit);
size_t qar_circuit_num_registers(const qar_circuit* circuit);

/* Pointers written to *out_name and *out_role stay valid for the life of
 * the circuit. Any out-parameter may be NULL to skip that field. */
qar_status qar_circuit_register_info(const qar_circuit* circuit, size_t index,
                                     const char** out_name, const char** out_role,
                                     uint32_t* out_first_wire, uint32_t* out_width);

typedef struct qar_gate_counts {
    uint64_t not_count;
    uint64_t cnot_count;
    uint64_t toffoli_count;
    uint64_t total;
} qar_gate_counts;

qar_status qar_count_gates(const qar_circuit* circuit, qar_gate_counts* out_counts);

/* Runs one basis state through the circuit. Initial values are given per
 * register name; unnamed registers start at zero. out_values receives
 * one decoded value per register, in layout order (the array must hold
 * qar_circuit_num_registers entries). */
qar_status qar_run_basis(const qar_circuit* circuit, const char* const* names,
                         const uint64_t* values, size_t num_values,
                         uint64_t* out_values);

/* Runs a superposition given as explicit terms. Amplitudes are complex
 * (amp_re[k], amp_im[k]); term k sets register names[j] to
 * values[k * num_names + j]. The squared magnitudes must sum to 1 within
 * 1e-12. Returns a printable listing of the final terms, one per line,
 * in deterministic order. */
qar_status qar_run_sparse(const qar_circuit* circuit, size_t num_terms,
                          const double* amp_re, const double* amp_im,
                          const char* const* names, size_t num_names,
                          const uint64_t* values, char** out_text);

/* Decodes every register at each block boundary of the run, one line per
 * boundary. Input conventions as in qar_run_basis. */
qar_status qar_trace(const qar_circuit* circuit, const char* const* names,
                     const uint64_t* values, size_t num_values, char** out_text);

typedef struct qar_verify_params {
    qar_network network;
    uint32_t n;
    uint32_t m;      /* modexp exponent width; 0 selects the 2n default */
    uint64_t a;
    int has_a;       /* zero: sweep every legal a (where supported) */
    uint64_t modulus;
    int has_modulus; /* zero: sweep every legal N */
    int uniform_carries;
    int relabel_swaps;
    int random;      /* nonzero: seeded sampling instead of exhaustion */
    uint64_t samples;
    uint64_t seed;
} qar_verify_params;

/* Runs the verification harness against the arithmetic oracles.
 * out_report receives the report as "key: value" lines. A comparison
 * failure is a successful call with *out_failures > 0. */
qar_status qar_verify(const qar_verify_params* params, char** out_report,
                      uint64_t* out_cases, uint64_t* out_failures);

/* out_counts receives {7n+1, 5n+2, 4n+3}: the synthesized layout
 * formula and the two known reduced-variant formulas. */
qar_status qar_theoretical_counts(uint64_t n, uint64_t out_counts[3]);

/* Builds the network for every n in [n_lo, n_hi], counts gates, and fits
 * the log-log slope. out_csv (optional, may be NULL) receives
 * "n,total_gates" lines. */
qar_status qar_scaling_fit(qar_network network, uint32_t n_lo, uint32_t n_hi,
                           int relabel_swaps, double* out_slope, char** out_csv);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* QARITH_H */
