#include "qarith/builders.hpp"

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "qarith/numbers.hpp"

namespace qarith {

namespace {

// Accumulates registers left to right and hands back each one's wires.
struct LayoutBuilder {
    std::vector<Register> regs;
    std::uint32_t next = 0;

    std::vector<std::uint32_t> add(std::string name, RegisterRole role,
                                   std::uint32_t width) {
        regs.push_back({std::move(name), role, next, width});
        std::vector<std::uint32_t> wires(width);
        std::iota(wires.begin(), wires.end(), next);
        next += width;
        return wires;
    }
};

// Emission context for one network build. Gates are addressed by logical
// wire; `map_` tracks where each logical wire currently lives physically,
// which only diverges from the identity in relabel-swap mode. Reversed
// sections buffer their gates and flush them in reverse order, which is
// the exact inverse because every gate is self-inverse.
class Emitter {
  public:
    Emitter(Circuit& circuit, bool relabel_swaps)
        : circuit_(circuit), relabel_(relabel_swaps), map_(circuit.num_wires()) {
        std::iota(map_.begin(), map_.end(), 0);
    }

    void gate(Gate g) {
        const std::uint32_t arity = g.arity();
        for (std::uint32_t i = 0; i < arity; ++i) g.wire[i] = map_[g.wire[i]];
        g.tag = tag_;
        sink(g);
    }

    void swap_wires(const std::vector<std::uint32_t>& a,
                    const std::vector<std::uint32_t>& b, std::uint32_t width) {
        if (relabel_) {
            for (std::uint32_t k = 0; k < width; ++k) std::swap(map_[a[k]], map_[b[k]]);
            return;
        }
        for (std::uint32_t k = 0; k < width; ++k) {
            gate(Gate::cx(a[k], b[k]));
            gate(Gate::cx(b[k], a[k]));
            gate(Gate::cx(a[k], b[k]));
        }
    }

    template <typename Fn>
    void reversed(Fn&& fn) {
        const auto saved_map = map_;
        std::vector<Gate> buffer;
        buffers_.push_back(&buffer);
        fn();
        buffers_.pop_back();
        if (map_ != saved_map)
            throw std::logic_error("reversed section did not restore the wire map");
        for (auto it = buffer.rbegin(); it != buffer.rend(); ++it) sink(*it);
    }

    /// Emits physical swaps until every logical wire is back at its own
    /// physical position. No-op outside relabel mode.
    void materialize_map() {
        if (!buffers_.empty())
            throw std::logic_error("map fixup inside a reversed section");
        const auto wires = static_cast<std::uint32_t>(map_.size());
        std::vector<std::uint32_t> inv(wires);
        for (std::uint32_t l = 0; l < wires; ++l) inv[map_[l]] = l;
        for (std::uint32_t l = 0; l < wires; ++l) {
            while (map_[l] != l) {
                const std::uint32_t p = map_[l];
                for (const Gate raw : {Gate::cx(l, p), Gate::cx(p, l), Gate::cx(l, p)}) {
                    Gate g = raw;
                    g.tag = tag_;
                    sink(g);
                }
                const std::uint32_t q = inv[l];
                map_[l] = l;
                inv[l] = l;
                map_[q] = p;
                inv[p] = q;
            }
        }
    }

  private:
    void sink(const Gate& g) {
        if (!buffers_.empty())
            buffers_.back()->push_back(g);
        else
            circuit_.append(g);
    }

    Circuit& circuit_;
    bool relabel_;
    std::vector<std::uint32_t> map_;
    std::vector<std::vector<Gate>*> buffers_;
    std::uint32_t tag_ = 0;
    std::uint32_t tag_depth_ = 0;

    friend class TagScope;
};

// The outermost scope names the block; nested scopes keep it, so an
// embedded network inherits the label of the stage embedding it.
class TagScope {
  public:
    TagScope(Emitter& emitter, std::string_view text) : emitter_(emitter) {
        if (emitter_.tag_depth_++ == 0) emitter_.tag_ = emitter_.circuit_.intern_tag(text);
    }
    ~TagScope() {
        if (--emitter_.tag_depth_ == 0) emitter_.tag_ = 0;
    }
    TagScope(const TagScope&) = delete;
    TagScope& operator=(const TagScope&) = delete;

  private:
    Emitter& emitter_;
};

struct AdderWires {
    std::vector<std::uint32_t> a; // n
    std::vector<std::uint32_t> b; // n+1, top wire takes the final carry
    std::vector<std::uint32_t> c; // n-1, or n in uniform mode
    bool uniform = false;
};

// CARRY at level i: c_out ^= majority(c_in, a_i, b_i), b_i left as
// a_i XOR b_i. Without a carry-in wire (level 0 of the specialized
// layout) the block controlled on it drops out.
void emit_carry(Emitter& e, std::uint32_t c_in, bool has_c_in, std::uint32_t a,
                std::uint32_t b, std::uint32_t c_out) {
    e.gate(Gate::ccx(a, b, c_out));
    e.gate(Gate::cx(a, b));
    if (has_c_in) e.gate(Gate::ccx(c_in, b, c_out));
}

void emit_carry_rev(Emitter& e, std::uint32_t c_in, bool has_c_in, std::uint32_t a,
                    std::uint32_t b, std::uint32_t c_out) {
    if (has_c_in) e.gate(Gate::ccx(c_in, b, c_out));
    e.gate(Gate::cx(a, b));
    e.gate(Gate::ccx(a, b, c_out));
}

void emit_sum(Emitter& e, std::uint32_t c_in, bool has_c_in, std::uint32_t a,
              std::uint32_t b) {
    e.gate(Gate::cx(a, b));
    if (has_c_in) e.gate(Gate::cx(c_in, b));
}

// |a, b, 0> -> |a, a+b, 0>: carries ripple up, the top bit of b takes the
// final carry, then carry blocks unwind while SUM blocks fix each b_i.
void emit_adder(Emitter& e, const AdderWires& w) {
    const auto n = static_cast<std::uint32_t>(w.a.size());
    const auto c_in = [&](std::uint32_t i) { return w.uniform ? w.c[i] : w.c[i - 1]; };
    const auto has_c_in = [&](std::uint32_t i) { return w.uniform || i > 0; };
    const auto c_out = [&](std::uint32_t i) {
        if (i == n - 1) return w.b[n];
        return w.uniform ? w.c[i + 1] : w.c[i];
    };

    for (std::uint32_t i = 0; i < n; ++i) {
        TagScope tag(e, "carry " + std::to_string(i));
        emit_carry(e, has_c_in(i) ? c_in(i) : 0, has_c_in(i), w.a[i], w.b[i], c_out(i));
    }
    {
        TagScope tag(e, "msb");
        e.gate(Gate::cx(w.a[n - 1], w.b[n - 1]));
        emit_sum(e, has_c_in(n - 1) ? c_in(n - 1) : 0, has_c_in(n - 1), w.a[n - 1],
                 w.b[n - 1]);
    }
    for (std::uint32_t i = n - 1; i-- > 0;) {
        TagScope tag(e, "uncarry " + std::to_string(i));
        emit_carry_rev(e, has_c_in(i) ? c_in(i) : 0, has_c_in(i), w.a[i], w.b[i], c_out(i));
        emit_sum(e, has_c_in(i) ? c_in(i) : 0, has_c_in(i), w.a[i], w.b[i]);
    }
}

struct ModAdderWires {
    AdderWires add;                    // add.a: addend position, add.b: sum register
    std::vector<std::uint32_t> nreg;   // n wires holding N
    std::uint32_t t = 0;
    std::uint64_t N = 0;
};

// Six-block sequence. t records whether N was subtracted (t = 1: kept)
// and is coherently reset by the last three blocks.
void emit_modadder(Emitter& e, const ModAdderWires& w) {
    const auto n = static_cast<std::uint32_t>(w.add.a.size());
    const std::uint32_t b_top = w.add.b[n];
    {
        TagScope tag(e, "modadd: b += a");
        emit_adder(e, w.add);
    }
    {
        TagScope tag(e, "modadd: swap a,N");
        e.swap_wires(w.add.a, w.nreg, n);
    }
    {
        TagScope tag(e, "modadd: b -= N");
        e.reversed([&] { emit_adder(e, w.add); });
    }
    {
        // b's top bit is 0 exactly when the subtraction did not
        // underflow; record that case as t = 1.
        TagScope tag(e, "modadd: flag t");
        e.gate(Gate::x(b_top));
        e.gate(Gate::cx(b_top, w.t));
        e.gate(Gate::x(b_top));
    }
    {
        // The register at the addend position is known to hold N, so
        // CNOTs from t at N's one-bits zero it when t = 1. The following
        // adder therefore re-adds N only in the underflow case.
        TagScope tag(e, "modadd: mask N");
        for (std::uint32_t j = 0; j < n; ++j)
            if ((w.N >> j) & 1) e.gate(Gate::cx(w.t, w.add.a[j]));
    }
    {
        TagScope tag(e, "modadd: b += N or 0");
        emit_adder(e, w.add);
    }
    {
        TagScope tag(e, "modadd: unmask N");
        for (std::uint32_t j = 0; j < n; ++j)
            if ((w.N >> j) & 1) e.gate(Gate::cx(w.t, w.add.a[j]));
    }
    {
        TagScope tag(e, "modadd: swap back");
        e.swap_wires(w.add.a, w.nreg, n);
    }
    {
        // b -= a underflows exactly when t = 1, so b's top bit resets t.
        TagScope tag(e, "modadd: b -= a");
        e.reversed([&] { emit_adder(e, w.add); });
    }
    {
        TagScope tag(e, "modadd: reset t");
        e.gate(Gate::cx(b_top, w.t));
    }
    {
        TagScope tag(e, "modadd: b += a");
        emit_adder(e, w.add);
    }
}

struct CMultWires {
    std::uint32_t ctl = 0;
    std::vector<std::uint32_t> x; // n
    ModAdderWires modadd;         // modadd.add.a: addend register, modadd.add.b: result
    std::uint64_t a = 0;
    std::uint64_t N = 0;
};

// |c; x, 0> -> |c; x, a*x mod N> / |c; x, x>. Stage i loads
// (2^i a) mod N into the addend register under control of c and x_i,
// adds it modulo N, and unloads it again; the modulus register must
// already hold N. The closing block copies x when c = 0, where the
// result register is still zero.
void emit_cmult(Emitter& e, const CMultWires& w) {
    const auto n = static_cast<std::uint32_t>(w.x.size());
    std::uint64_t stage_value = w.a % w.N;
    for (std::uint32_t i = 0; i < n; ++i) {
        const std::string stage = "mult stage " + std::to_string(i);
        {
            TagScope tag(e, stage + ": load addend");
            for (std::uint32_t j = 0; j < n; ++j)
                if ((stage_value >> j) & 1) e.gate(Gate::ccx(w.ctl, w.x[i], w.modadd.add.a[j]));
        }
        {
            TagScope tag(e, stage + ": add");
            emit_modadder(e, w.modadd);
        }
        {
            TagScope tag(e, stage + ": unload addend");
            for (std::uint32_t j = 0; j < n; ++j)
                if ((stage_value >> j) & 1) e.gate(Gate::ccx(w.ctl, w.x[i], w.modadd.add.a[j]));
        }
        stage_value = mod_mul(stage_value, 2, w.N);
    }
    {
        TagScope tag(e, "mult: copy x when ctl=0");
        e.gate(Gate::x(w.ctl));
        for (std::uint32_t j = 0; j < n; ++j)
            e.gate(Gate::ccx(w.ctl, w.x[j], w.modadd.add.b[j]));
        e.gate(Gate::x(w.ctl));
    }
}

void emit_value_load(Emitter& e, const std::vector<std::uint32_t>& wires,
                     std::uint64_t value) {
    for (std::size_t j = 0; j < wires.size(); ++j)
        if ((value >> j) & 1) e.gate(Gate::x(wires[j]));
}

void check_n(std::uint32_t n) {
    if (n == 0) throw std::invalid_argument("operand width n must be at least 1");
    if (n > 62) throw std::invalid_argument("operand width n capped at 62 bits");
}

void check_modulus(std::uint32_t n, std::uint64_t N) {
    check_n(n);
    if (N < 2) throw std::invalid_argument("modulus must be at least 2");
    if (bit_width(N) > n)
        throw std::invalid_argument("modulus " + std::to_string(N) +
                                    " does not fit in " + std::to_string(n) + " bits");
}

std::uint32_t carry_width(std::uint32_t n, const BuildOptions& options) {
    return options.uniform_carries ? n : n - 1;
}

} // namespace

Circuit build_carry(std::uint32_t c_in, std::uint32_t a_i, std::uint32_t b_i,
                    std::uint32_t c_out) {
    const std::uint32_t wires[4] = {c_in, a_i, b_i, c_out};
    for (int i = 0; i < 4; ++i) {
        if (wires[i] > 3)
            throw std::invalid_argument("carry block wires must form a permutation of 0..3");
        for (int j = i + 1; j < 4; ++j)
            if (wires[i] == wires[j])
                throw std::invalid_argument("carry block wires must be distinct");
    }
    std::vector<Register> regs = {{"cin", RegisterRole::Carry, c_in, 1},
                                  {"a", RegisterRole::InputA, a_i, 1},
                                  {"b", RegisterRole::InputB, b_i, 1},
                                  {"cout", RegisterRole::Carry, c_out, 1}};
    Circuit circuit(4, RegisterLayout(std::move(regs)));
    Emitter e(circuit, false);
    emit_carry(e, c_in, true, a_i, b_i, c_out);
    return circuit;
}

Circuit build_sum(std::uint32_t c_in, std::uint32_t a_i, std::uint32_t b_i) {
    const std::uint32_t wires[3] = {c_in, a_i, b_i};
    for (int i = 0; i < 3; ++i) {
        if (wires[i] > 2)
            throw std::invalid_argument("sum block wires must form a permutation of 0..2");
        for (int j = i + 1; j < 3; ++j)
            if (wires[i] == wires[j])
                throw std::invalid_argument("sum block wires must be distinct");
    }
    std::vector<Register> regs = {{"cin", RegisterRole::Carry, c_in, 1},
                                  {"a", RegisterRole::InputA, a_i, 1},
                                  {"b", RegisterRole::InputB, b_i, 1}};
    Circuit circuit(3, RegisterLayout(std::move(regs)));
    Emitter e(circuit, false);
    emit_sum(e, c_in, true, a_i, b_i);
    return circuit;
}

Circuit build_adder(std::uint32_t n, const BuildOptions& options) {
    check_n(n);
    LayoutBuilder lb;
    AdderWires w;
    w.a = lb.add("a", RegisterRole::InputA, n);
    w.b = lb.add("b", RegisterRole::InputB, n + 1);
    w.c = lb.add("c", RegisterRole::Carry, carry_width(n, options));
    w.uniform = options.uniform_carries;

    Circuit circuit(lb.next, RegisterLayout(std::move(lb.regs)));
    Emitter e(circuit, options.relabel_swaps);
    emit_adder(e, w);
    return circuit;
}

Circuit build_subtractor(std::uint32_t n, const BuildOptions& options) {
    return reverse(build_adder(n, options));
}

Circuit build_modular_adder(std::uint32_t n, std::uint64_t N, const BuildOptions& options) {
    check_modulus(n, N);
    LayoutBuilder lb;
    ModAdderWires w;
    w.add.a = lb.add("a", RegisterRole::InputA, n);
    w.add.b = lb.add("b", RegisterRole::InputB, n + 1);
    w.add.c = lb.add("c", RegisterRole::Carry, carry_width(n, options));
    w.add.uniform = options.uniform_carries;
    w.nreg = lb.add("N", RegisterRole::ModulusTemp, n);
    w.t = lb.add("t", RegisterRole::OverflowT, 1)[0];
    w.N = N;

    Circuit circuit(lb.next, RegisterLayout(std::move(lb.regs)));
    Emitter e(circuit, options.relabel_swaps);
    emit_modadder(e, w);
    return circuit;
}

Circuit build_cmult(std::uint32_t n, std::uint64_t a, std::uint64_t N,
                    const BuildOptions& options) {
    check_modulus(n, N);
    if (a >= N)
        throw std::invalid_argument("multiplier " + std::to_string(a) +
                                    " must be below the modulus " + std::to_string(N));
    LayoutBuilder lb;
    CMultWires w;
    w.ctl = lb.add("ctl", RegisterRole::Control, 1)[0];
    w.x = lb.add("x", RegisterRole::InputX, n);
    w.modadd.add.b = lb.add("r", RegisterRole::Result, n + 1);
    w.modadd.add.a = lb.add("ax", RegisterRole::MultTemp, n);
    w.modadd.add.c = lb.add("c", RegisterRole::Carry, carry_width(n, options));
    w.modadd.add.uniform = options.uniform_carries;
    w.modadd.nreg = lb.add("N", RegisterRole::ModulusTemp, n);
    w.modadd.t = lb.add("t", RegisterRole::OverflowT, 1)[0];
    w.modadd.N = N;
    w.a = a;
    w.N = N;

    Circuit circuit(lb.next, RegisterLayout(std::move(lb.regs)));
    Emitter e(circuit, options.relabel_swaps);
    {
        TagScope tag(e, "load N");
        emit_value_load(e, w.modadd.nreg, N);
    }
    emit_cmult(e, w);
    {
        TagScope tag(e, "unload N");
        emit_value_load(e, w.modadd.nreg, N);
    }
    return circuit;
}

Circuit build_modexp(std::uint32_t n, std::uint32_t m, std::uint64_t a, std::uint64_t N,
                     const BuildOptions& options) {
    check_modulus(n, N);
    if (m == 0) throw std::invalid_argument("exponent width m must be at least 1");
    if (m > 63) throw std::invalid_argument("exponent width m capped at 63 bits");
    if (std::gcd(a, N) != 1)
        throw std::invalid_argument("base and modulus must be coprime: gcd(" +
                                    std::to_string(a) + ", " + std::to_string(N) +
                                    ") = " + std::to_string(std::gcd(a, N)));

    LayoutBuilder lb;
    const auto x = lb.add("x", RegisterRole::InputX, m);
    const auto r = lb.add("r", RegisterRole::Result, n);
    const auto wreg = lb.add("w", RegisterRole::ExpTemp, n + 1);
    const auto ax = lb.add("ax", RegisterRole::MultTemp, n);
    const auto carry = lb.add("c", RegisterRole::Carry, carry_width(n, options));
    const auto nreg = lb.add("N", RegisterRole::ModulusTemp, n);
    const auto t = lb.add("t", RegisterRole::OverflowT, 1)[0];
    const std::vector<std::uint32_t> wreg_low(wreg.begin(), wreg.begin() + n);

    CMultWires mult;
    mult.x = r; // the running product feeds each multiplication stage
    mult.modadd.add.a = ax;
    mult.modadd.add.b = wreg;
    mult.modadd.add.c = carry;
    mult.modadd.add.uniform = options.uniform_carries;
    mult.modadd.nreg = nreg;
    mult.modadd.t = t;
    mult.modadd.N = N;
    mult.N = N;

    Circuit circuit(lb.next, RegisterLayout(std::move(lb.regs)));
    Emitter e(circuit, options.relabel_swaps);
    {
        TagScope tag(e, "load N");
        emit_value_load(e, nreg, N);
    }
    std::uint64_t stage_base = a % N;
    for (std::uint32_t i = 0; i < m; ++i) {
        const std::string stage = "stage " + std::to_string(i);
        mult.ctl = x[i];
        {
            TagScope tag(e, stage + ": mult");
            mult.a = stage_base;
            emit_cmult(e, mult);
        }
        {
            TagScope tag(e, stage + ": swap");
            e.swap_wires(r, wreg_low, n);
        }
        {
            // Multiplying the swapped-out product by the precomputed
            // inverse, run backwards, returns the workspace to zero.
            TagScope tag(e, stage + ": unmult");
            mult.a = mod_inverse(stage_base, N);
            e.reversed([&] { emit_cmult(e, mult); });
        }
        stage_base = mod_mul(stage_base, stage_base, N);
    }
    {
        TagScope tag(e, "unload N");
        emit_value_load(e, nreg, N);
    }
    {
        TagScope tag(e, "swap fixup");
        e.materialize_map();
    }
    return circuit;
}

} // namespace qarith
