#include <stdexcept>

#include "doctest.h"
#include "helpers.hpp"
#include "qarith/circuit.hpp"

using namespace qarith;
using qarith::test::run_registers;
using qarith::test::value_of;

namespace {

RegisterLayout two_regs(std::uint32_t wide_a, std::uint32_t wide_b) {
    return RegisterLayout{{{"a", RegisterRole::InputA, 0, wide_a},
                           {"b", RegisterRole::InputB, wide_a, wide_b}}};
}

} // namespace

TEST_SUITE("gates") {

TEST_CASE("factories and arity") {
    const Gate n = Gate::x(5);
    CHECK(n.kind == GateKind::NOT);
    CHECK(n.arity() == 1);
    CHECK(n.target() == 5);
    CHECK(n.wires().size() == 1);

    const Gate c = Gate::cx(1, 2);
    CHECK(c.arity() == 2);
    CHECK(c.target() == 2);

    const Gate t = Gate::ccx(1, 2, 3);
    CHECK(t.arity() == 3);
    CHECK(t.target() == 3);
    CHECK(t.wires()[0] == 1);
}

TEST_CASE("equality ignores tags and unused wire slots") {
    Gate a = Gate::cx(1, 2);
    Gate b = Gate::cx(1, 2);
    b.tag = 7;
    b.wire[2] = 99; // beyond arity, not part of identity
    CHECK(a == b);
    CHECK_FALSE(a == Gate::cx(2, 1));
    CHECK_FALSE(a == Gate::x(1));
}

TEST_CASE("names") {
    CHECK(gate_kind_name(GateKind::NOT) == "NOT");
    CHECK(gate_kind_name(GateKind::CNOT) == "CNOT");
    CHECK(gate_kind_name(GateKind::TOFFOLI) == "TOFF");
    CHECK(role_name(RegisterRole::ModulusTemp) == "modulus_temp");
    CHECK(role_from_name("input_a") == RegisterRole::InputA);
    CHECK(role_from_name("overflow_t") == RegisterRole::OverflowT);
    CHECK_FALSE(role_from_name("no_such_role").has_value());
}

} // TEST_SUITE

TEST_SUITE("layout") {

TEST_CASE("valid layout partitions the wires") {
    const RegisterLayout layout = two_regs(2, 3);
    CHECK_NOTHROW(layout.validate(5));
    CHECK(layout.total_width() == 5);
    CHECK(layout.find("b")->first_wire == 2);
    CHECK(layout.find("missing") == nullptr);
}

TEST_CASE("holes, overlaps and duplicates are rejected") {
    // hole: wire 2 uncovered
    RegisterLayout hole{{{"a", RegisterRole::InputA, 0, 2},
                         {"b", RegisterRole::InputB, 3, 2}}};
    CHECK_THROWS_AS(hole.validate(5), std::invalid_argument);

    RegisterLayout overlap{{{"a", RegisterRole::InputA, 0, 3},
                            {"b", RegisterRole::InputB, 2, 3}}};
    CHECK_THROWS_AS(overlap.validate(5), std::invalid_argument);

    RegisterLayout dup{{{"a", RegisterRole::InputA, 0, 2},
                        {"a", RegisterRole::InputB, 2, 3}}};
    CHECK_THROWS_AS(dup.validate(5), std::invalid_argument);

    RegisterLayout bad_name{{{"a b", RegisterRole::InputA, 0, 5}}};
    CHECK_THROWS_AS(bad_name.validate(5), std::invalid_argument);

    RegisterLayout empty_name{{{"", RegisterRole::InputA, 0, 5}}};
    CHECK_THROWS_AS(empty_name.validate(5), std::invalid_argument);
}

TEST_CASE("width-0 registers are legal placeholders") {
    RegisterLayout layout{{{"a", RegisterRole::InputA, 0, 3},
                           {"c", RegisterRole::Carry, 3, 0}}};
    CHECK_NOTHROW(layout.validate(3));
}

} // TEST_SUITE

TEST_SUITE("circuit") {

TEST_CASE("construction validates the layout against the wire count") {
    CHECK_NOTHROW(Circuit(5, two_regs(2, 3)));
    CHECK_THROWS_AS(Circuit(6, two_regs(2, 3)), std::invalid_argument);
    CHECK_THROWS_AS(Circuit(0, RegisterLayout{}), std::invalid_argument);
}

TEST_CASE("append checks wires") {
    Circuit c(5, two_regs(2, 3));
    CHECK_NOTHROW(c.append(Gate::ccx(0, 1, 4)));
    CHECK_THROWS_AS(c.append(Gate::x(5)), std::invalid_argument);
    CHECK_THROWS_AS(c.append(Gate::cx(1, 1)), std::invalid_argument);
    CHECK_THROWS_AS(c.append(Gate::ccx(0, 2, 2)), std::invalid_argument);
    CHECK(c.size() == 1);
}

TEST_CASE("tag interning deduplicates") {
    Circuit c(5, two_regs(2, 3));
    const auto t1 = c.intern_tag("first block");
    const auto t2 = c.intern_tag("second block");
    CHECK(t1 != 0);
    CHECK(t2 != t1);
    CHECK(c.intern_tag("first block") == t1);
    CHECK(c.tag_text(t1) == "first block");
    CHECK(c.tag_text(0) == "");

    Gate g = Gate::x(0);
    g.tag = 99; // never interned
    CHECK_THROWS_AS(c.append(g), std::invalid_argument);
}

TEST_CASE("equality compares gates and layout but not tags") {
    Circuit a(5, two_regs(2, 3));
    a.append(Gate::cx(0, 2));
    Circuit b(5, two_regs(2, 3));
    Gate g = Gate::cx(0, 2);
    g.tag = b.intern_tag("noted");
    b.append(g);
    CHECK(a == b);

    Circuit other_layout(5, two_regs(3, 2));
    other_layout.append(Gate::cx(0, 2));
    CHECK_FALSE(a == other_layout);

    b.append(Gate::x(1));
    CHECK_FALSE(a == b);
}

TEST_CASE("reverse inverts the gate order and the transform") {
    Circuit c(5, two_regs(2, 3));
    c.append(Gate::x(0));
    c.append(Gate::cx(0, 2));
    c.append(Gate::ccx(0, 2, 3));
    const Circuit r = reverse(c);
    CHECK(r.size() == 3);
    CHECK(r.gates()[0] == Gate::ccx(0, 2, 3));
    CHECK(r.gates()[2] == Gate::x(0));
    CHECK(reverse(r) == c);

    // round trip is the identity on every 5-wire basis state
    const Circuit both = concat(c, r);
    for (std::uint64_t v = 0; v < 32; ++v) {
        const auto out = run_registers(both, {{"a", v & 3}, {"b", v >> 2}});
        CHECK(value_of(out, "a") == (v & 3));
        CHECK(value_of(out, "b") == (v >> 2));
    }
}

TEST_CASE("concat requires matching shape") {
    Circuit a(5, two_regs(2, 3));
    a.append(Gate::x(0));
    Circuit b(5, two_regs(2, 3));
    b.append(Gate::x(4));
    const Circuit joined = concat(a, b);
    CHECK(joined.size() == 2);
    CHECK(joined.gates()[1] == Gate::x(4));

    Circuit narrow(4, two_regs(2, 2));
    CHECK_THROWS_AS((void)concat(a, narrow), std::invalid_argument);
    Circuit renamed(5, RegisterLayout{{{"a", RegisterRole::InputA, 0, 2},
                                       {"z", RegisterRole::InputB, 2, 3}}});
    CHECK_THROWS_AS((void)concat(a, renamed), std::invalid_argument);
}

TEST_CASE("emit_swap exchanges equal-width registers") {
    const RegisterLayout layout = two_regs(3, 3);
    const Circuit swap = emit_swap(layout, "a", "b");
    CHECK(swap.size() == 9); // 3 CNOTs per wire pair
    const auto out = run_registers(swap, {{"a", 5}, {"b", 2}});
    CHECK(value_of(out, "a") == 2);
    CHECK(value_of(out, "b") == 5);

    CHECK_THROWS_AS((void)emit_swap(layout, "a", "zz"), std::invalid_argument);
    CHECK_THROWS_AS((void)emit_swap(two_regs(2, 3), "a", "b"), std::invalid_argument);
}

} // TEST_SUITE
