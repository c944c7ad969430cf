#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qarith/circuit.hpp"

namespace qarith {

/// Exact state of all wires in the computational basis, packed into
/// 64-bit words. Wire index doubles as bit index.
class BasisState {
  public:
    BasisState() = default;
    explicit BasisState(std::uint32_t width)
        : width_(width), words_((width + 63) / 64, 0) {}

    [[nodiscard]] std::uint32_t width() const { return width_; }

    [[nodiscard]] bool bit(std::uint32_t wire) const {
        return (words_[wire >> 6] >> (wire & 63)) & 1u;
    }
    void set_bit(std::uint32_t wire, bool value) {
        const std::uint64_t mask = std::uint64_t{1} << (wire & 63);
        if (value)
            words_[wire >> 6] |= mask;
        else
            words_[wire >> 6] &= ~mask;
    }
    void flip_bit(std::uint32_t wire) {
        words_[wire >> 6] ^= std::uint64_t{1} << (wire & 63);
    }

    [[nodiscard]] const std::vector<std::uint64_t>& words() const { return words_; }

    [[nodiscard]] bool operator==(const BasisState&) const = default;

  private:
    std::uint32_t width_ = 0;
    std::vector<std::uint64_t> words_;
};

struct BasisStateHash {
    [[nodiscard]] std::size_t operator()(const BasisState& state) const;
};

/// Finite superposition: basis states with complex amplitudes, unit norm
/// within NORM_TOLERANCE, zero-amplitude terms dropped.
struct SparseState {
    static constexpr double NORM_TOLERANCE = 1e-12;

    std::unordered_map<BasisState, std::complex<double>, BasisStateHash> terms;

    [[nodiscard]] double norm() const;
    /// Drops exact-zero amplitudes.
    void prune();
};

/// Applies each gate in order under permutation semantics: NOT flips its
/// target, CNOT and TOFFOLI flip the target when all controls are set.
/// Throws std::invalid_argument when widths differ.
[[nodiscard]] BasisState run_basis(const Circuit& circuit, BasisState state);

/// Maps every basis term independently through run_basis, amplitudes
/// unchanged. Throws std::invalid_argument when the input norm deviates
/// from 1 by more than NORM_TOLERANCE or a term width mismatches.
[[nodiscard]] SparseState run_sparse(const Circuit& circuit, const SparseState& state);

/// One named register's value, used for encoding inputs and decoding
/// outputs. Values are little endian within each register.
struct RegisterValue {
    std::string name;
    std::uint64_t value = 0;
};

/// Builds the basis state with the named registers holding the given
/// values and every other wire zero. Throws std::invalid_argument for an
/// unknown name, a duplicate name, a value too wide for its register, or
/// a register wider than 64 bits.
[[nodiscard]] BasisState encode(const RegisterLayout& layout, std::uint32_t num_wires,
                                const std::vector<RegisterValue>& values);

/// Reads every register back out, in layout order.
[[nodiscard]] std::vector<RegisterValue> decode(const RegisterLayout& layout,
                                                const BasisState& state);

/// Value of a single register within a state.
[[nodiscard]] std::uint64_t read_register(const Register& reg, const BasisState& state);

} // namespace qarith
