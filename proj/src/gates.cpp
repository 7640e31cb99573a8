#include "ccool/gates.hpp"

#include "ccool/error.hpp"

#include <string>

namespace ccool {
namespace {

constexpr int bit(int s, int qubit) { return (s >> (kQubits - qubit)) & 1; }  // qubit in 1..3

constexpr int basisIndex(int q1, int q2, int q3) { return (q1 << 2) | (q2 << 1) | q3; }

template <typename F>
BasisPermutation tabulate(F f) {
  std::array<std::uint8_t, 8> image{};
  for (int s = 0; s < 8; ++s) image[s] = static_cast<std::uint8_t>(f(bit(s, 1), bit(s, 2), bit(s, 3)));
  return BasisPermutation(image);
}

}  // namespace

std::string_view toString(GateKind kind) {
  switch (kind) {
    case GateKind::Swap13: return "SWAP13";
    case GateKind::Cnot12: return "CNOT12";
    case GateKind::Cswap: return "CSWAP";
    case GateKind::Algorithm: return "ALGORITHM";
    case GateKind::Boykin: return "BOYKIN";
  }
  return "?";
}

BasisPermutation::BasisPermutation() {
  for (int s = 0; s < 8; ++s) image_[s] = static_cast<std::uint8_t>(s);
}

BasisPermutation::BasisPermutation(const std::array<std::uint8_t, 8>& image) : image_(image) {
  std::array<bool, 8> seen{};
  for (auto t : image_) {
    if (t >= 8 || seen[t]) throw InvalidArgument("basis permutation is not a bijection on {0..7}");
    seen[t] = true;
  }
}

BasisPermutation BasisPermutation::then(const BasisPermutation& next) const {
  std::array<std::uint8_t, 8> out{};
  for (int s = 0; s < 8; ++s) out[s] = next.image_[image_[s]];
  return BasisPermutation(out);
}

BasisPermutation BasisPermutation::inverse() const {
  std::array<std::uint8_t, 8> out{};
  for (int s = 0; s < 8; ++s) out[image_[s]] = static_cast<std::uint8_t>(s);
  return BasisPermutation(out);
}

int BasisPermutation::order() const {
  const BasisPermutation id;
  BasisPermutation p = *this;
  int k = 1;
  while (!(p == id)) {
    p = p.then(*this);
    ++k;
  }
  return k;
}

BasisPermutation gatePermutation(const GateSpec& g) {
  const int trigger = g.polarity == CswapPolarity::Excited ? 1 : 0;
  switch (g.kind) {
    case GateKind::Swap13:
      return tabulate([](int a, int b, int c) { return basisIndex(c, b, a); });
    case GateKind::Cnot12:
      return tabulate([](int a, int b, int c) { return basisIndex(a, a ^ b, c); });
    case GateKind::Cswap:
      return tabulate([trigger](int a, int b, int c) { return b == trigger ? basisIndex(c, b, a) : basisIndex(a, b, c); });
    case GateKind::Algorithm:
      return gatePermutation({GateKind::Swap13, g.polarity})
          .then(gatePermutation({GateKind::Cnot12, g.polarity}))
          .then(gatePermutation({GateKind::Cswap, g.polarity}));
    case GateKind::Boykin:
      return gatePermutation({GateKind::Cnot12, g.polarity}).then(gatePermutation({GateKind::Cswap, g.polarity}));
  }
  throw InvalidArgument("unknown gate kind");
}

Matrix8 gateUnitary(const GateSpec& g) {
  const BasisPermutation p = gatePermutation(g);
  Matrix8 u = Matrix8::Zero();
  for (int s = 0; s < 8; ++s) u(p(s), s) = 1.0;
  return u;
}

SuperOp gateSuperop(const GateSpec& g) { return conjugationSuperop(gateUnitary(g)); }

}  // namespace ccool
