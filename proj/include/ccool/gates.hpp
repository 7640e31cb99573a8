#pragma once

#include "ccool/pauli_liouville.hpp"

#include <array>
#include <cstdint>
#include <string_view>

namespace ccool {

enum class GateKind {
  Swap13,     // exchange qubits 1 and 3
  Cnot12,     // control q1, target q2
  Cswap,      // exchange q1 and q3 conditioned on q2
  Algorithm,  // Cswap * Cnot12 * Swap13 (the cyclic variant)
  Boykin,     // Cswap * Cnot12
};

// Which value of q2 triggers the controlled swap. `Excited` (|1>) is the
// cooling polarity; `Ground` heats qubit 1 and is kept for comparison.
enum class CswapPolarity { Excited, Ground };

struct GateSpec {
  GateKind kind = GateKind::Algorithm;
  CswapPolarity polarity = CswapPolarity::Excited;
};

std::string_view toString(GateKind kind);

// Image of each computational basis index under a permutation gate.
class BasisPermutation {
 public:
  BasisPermutation();  // identity
  // Throws InvalidArgument unless `image` is a bijection on {0..7}.
  explicit BasisPermutation(const std::array<std::uint8_t, 8>& image);

  int operator()(int s) const { return image_[s]; }
  const std::array<std::uint8_t, 8>& image() const noexcept { return image_; }

  // (a.then(b))(s) = b(a(s))
  BasisPermutation then(const BasisPermutation& next) const;
  BasisPermutation inverse() const;
  // Smallest k >= 1 with this^k = identity.
  int order() const;

  bool operator==(const BasisPermutation&) const = default;

 private:
  std::array<std::uint8_t, 8> image_;
};

BasisPermutation gatePermutation(const GateSpec& g);

// 0/1 permutation matrix U with U|s> = |pi(s)>.
Matrix8 gateUnitary(const GateSpec& g);

SuperOp gateSuperop(const GateSpec& g);

}  // namespace ccool
