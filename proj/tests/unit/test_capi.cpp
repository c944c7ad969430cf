#include <cstring>
#include <string>

#include "doctest.h"
#include "qarith.h"

namespace {

qar_build_params adder_params(uint32_t n) {
    qar_build_params p = {};
    p.network = QAR_NET_ADDER;
    p.n = n;
    return p;
}

struct Freed {
    qar_circuit* circuit = nullptr;
    char* text = nullptr;
    ~Freed() {
        qar_circuit_free(circuit);
        qar_string_free(text);
    }
};

} // namespace

TEST_SUITE("capi") {

TEST_CASE("version and error text are always available") {
    CHECK(qar_version() != nullptr);
    CHECK(qar_last_error() != nullptr);
}

TEST_CASE("build, inspect, serialize, parse") {
    Freed f;
    const qar_build_params p = adder_params(3);
    REQUIRE(qar_build(&p, &f.circuit) == QAR_OK);
    CHECK(qar_circuit_num_wires(f.circuit) == 9);
    CHECK(qar_circuit_num_gates(f.circuit) == 19); // 8n-5
    REQUIRE(qar_circuit_num_registers(f.circuit) == 3);

    const char* name = nullptr;
    const char* role = nullptr;
    uint32_t first = 0, width = 0;
    REQUIRE(qar_circuit_register_info(f.circuit, 1, &name, &role, &first, &width) ==
            QAR_OK);
    CHECK(std::string(name) == "b");
    CHECK(std::string(role) == "input_b");
    CHECK(first == 3);
    CHECK(width == 4);
    CHECK(qar_circuit_register_info(f.circuit, 3, &name, &role, &first, &width) ==
          QAR_ERR_INVALID_ARGUMENT);

    qar_gate_counts counts;
    REQUIRE(qar_count_gates(f.circuit, &counts) == QAR_OK);
    CHECK(counts.total == 19);
    CHECK(counts.not_count == 0);
    CHECK(counts.cnot_count + counts.toffoli_count == 19);

    REQUIRE(qar_serialize(f.circuit, &f.text) == QAR_OK);
    Freed reparsed;
    REQUIRE(qar_parse(f.text, &reparsed.circuit) == QAR_OK);
    CHECK(qar_circuit_num_gates(reparsed.circuit) == 19);
    // Tags serialize as comments and parsing drops comments, so the text
    // reaches a fixed point after one round trip.
    char* round = nullptr;
    REQUIRE(qar_serialize(reparsed.circuit, &round) == QAR_OK);
    Freed again;
    REQUIRE(qar_parse(round, &again.circuit) == QAR_OK);
    char* round2 = nullptr;
    REQUIRE(qar_serialize(again.circuit, &round2) == QAR_OK);
    CHECK(std::string(round2) == round);
    qar_string_free(round2);
    qar_string_free(round);
}

TEST_CASE("modexp defaults m to 2n") {
    qar_build_params p = {};
    p.network = QAR_NET_MODEXP;
    p.n = 4;
    p.a = 7;
    p.modulus = 15;
    Freed f;
    REQUIRE(qar_build(&p, &f.circuit) == QAR_OK);
    CHECK(qar_circuit_num_wires(f.circuit) == 29);
}

TEST_CASE("build failures set status and message") {
    qar_build_params p = {};
    p.network = QAR_NET_MODEXP;
    p.n = 4;
    p.a = 6;
    p.modulus = 15;
    qar_circuit* circuit = reinterpret_cast<qar_circuit*>(0x1);
    CHECK(qar_build(&p, &circuit) == QAR_ERR_INVALID_ARGUMENT);
    CHECK(circuit == nullptr); // output cleared on failure
    CHECK(std::string(qar_last_error()).find("coprime") != std::string::npos);

    CHECK(qar_build(nullptr, &circuit) == QAR_ERR_INVALID_ARGUMENT);
    CHECK(qar_build(&p, nullptr) == QAR_ERR_INVALID_ARGUMENT);
}

TEST_CASE("parse failures carry the line number") {
    qar_circuit* circuit = nullptr;
    CHECK(qar_parse("not a circuit", &circuit) == QAR_ERR_PARSE);
    CHECK(std::string(qar_last_error()).find("line 1") != std::string::npos);
}

TEST_CASE("run_basis decodes every register in layout order") {
    Freed f;
    const qar_build_params p = adder_params(3);
    REQUIRE(qar_build(&p, &f.circuit) == QAR_OK);
    const char* names[] = {"a", "b"};
    const uint64_t values[] = {3, 5};
    uint64_t out[3] = {0, 0, 0};
    REQUIRE(qar_run_basis(f.circuit, names, values, 2, out) == QAR_OK);
    CHECK(out[0] == 3);
    CHECK(out[1] == 8);
    CHECK(out[2] == 0);

    const char* bad_names[] = {"zz"};
    const uint64_t bad_values[] = {1};
    CHECK(qar_run_basis(f.circuit, bad_names, bad_values, 1, out) ==
          QAR_ERR_INVALID_ARGUMENT);
}

TEST_CASE("run_sparse formats terms in deterministic order") {
    qar_build_params p = {};
    p.network = QAR_NET_MODEXP;
    p.n = 4;
    p.a = 7;
    p.modulus = 15;
    Freed f;
    REQUIRE(qar_build(&p, &f.circuit) == QAR_OK);

    const double inv_sqrt2 = 0.70710678118654752;
    const double re[] = {inv_sqrt2, inv_sqrt2};
    const double im[] = {0.0, 0.0};
    const char* names[] = {"x", "r"};
    const uint64_t values[] = {3, 1, 1, 1}; // row-major: (x=3,r=1), (x=1,r=1)
    REQUIRE(qar_run_sparse(f.circuit, 2, re, im, names, 2, values, &f.text) == QAR_OK);
    // sorted by register tuple, so x=1 comes first regardless of input order
    const std::string expected = "amp=(0.707106781187,0) x=1 r=7 w=0 ax=0 c=0 N=0 t=0\n"
                                 "amp=(0.707106781187,0) x=3 r=13 w=0 ax=0 c=0 N=0 t=0\n";
    CHECK(std::string(f.text) == expected);

    const double half[] = {0.5, 0.5};
    char* text = nullptr;
    CHECK(qar_run_sparse(f.circuit, 2, half, im, names, 2, values, &text) ==
          QAR_ERR_INVALID_ARGUMENT);
}

TEST_CASE("trace text starts at the initial state") {
    Freed f;
    qar_build_params p = {};
    p.network = QAR_NET_MODADDER;
    p.n = 2;
    p.modulus = 3;
    REQUIRE(qar_build(&p, &f.circuit) == QAR_OK);
    const char* names[] = {"a", "b", "N"};
    const uint64_t values[] = {1, 2, 3};
    REQUIRE(qar_trace(f.circuit, names, values, 3, &f.text) == QAR_OK);
    CHECK(std::string(f.text).substr(0, 9) == "initial: ");
    CHECK(std::string(f.text).find("after modadd: reset t:") != std::string::npos);
}

TEST_CASE("verify maps report, cases and failures") {
    qar_verify_params p = {};
    p.network = QAR_NET_ADDER;
    p.n = 2;
    char* report = nullptr;
    uint64_t cases = 0, failures = 1;
    REQUIRE(qar_verify(&p, &report, &cases, &failures) == QAR_OK);
    CHECK(cases == 16);
    CHECK(failures == 0);
    CHECK(std::string(report).find("network: adder") != std::string::npos);
    CHECK(std::string(report).find("counterexample: none") != std::string::npos);
    qar_string_free(report);

    p.n = 13;
    CHECK(qar_verify(&p, nullptr, nullptr, nullptr) == QAR_ERR_BUDGET);

    p.n = 16;
    p.random = 1;
    p.samples = 20;
    p.seed = 5;
    REQUIRE(qar_verify(&p, nullptr, &cases, &failures) == QAR_OK);
    CHECK(cases == 20);
    CHECK(failures == 0);
}

TEST_CASE("theoretical counts and scaling fit") {
    uint64_t counts[3] = {0, 0, 0};
    REQUIRE(qar_theoretical_counts(4, counts) == QAR_OK);
    CHECK(counts[0] == 29);
    CHECK(counts[1] == 22);
    CHECK(counts[2] == 19);
    CHECK(qar_theoretical_counts(0, counts) == QAR_ERR_INVALID_ARGUMENT);

    double slope = 0.0;
    char* csv = nullptr;
    REQUIRE(qar_scaling_fit(QAR_NET_ADDER, 4, 12, 0, &slope, &csv) == QAR_OK);
    CHECK(slope > 0.8);
    CHECK(slope < 1.2);
    CHECK(std::string(csv).substr(0, 14) == "n,total_gates\n");
    qar_string_free(csv);
    CHECK(qar_scaling_fit(QAR_NET_ADDER, 4, 5, 0, &slope, nullptr) ==
          QAR_ERR_INVALID_ARGUMENT);
}

} // TEST_SUITE
