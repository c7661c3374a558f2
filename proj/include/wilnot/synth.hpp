#pragma once

// Emits cyclic-SWAP networks built only from generalized CNOT gates.
//
// Stage layout (wires 0..d-1):
//   stage2.step{j}  j = 1..d-1, gates (k-1 -> k) for k = 1..d-1
//   stage3          prime: (k-2 -> k) ascending; even: weighted, descending k
//   stage4          (k+1 -> k) for k = 0..d-2
//   stage5          (k -> d-1) with multiplicity eta_k
// Stage 1 is the labelling of inputs and emits no gates.

#include <vector>

#include "wilnot/circuit.hpp"
#include "wilnot/modmath.hpp"

namespace wilnot {

/// Stage-5 multiplicities eta_0..eta_{d-2}.
struct EtaWeights {
  int d = 2;
  std::vector<int> weights;
};

/// Even-dimension stage-3 coefficients a_0..a_{d-3}, reduced mod d.
struct ACoeffs {
  int d = 4;
  std::vector<int> values;
};

/// Prime: 1 on even k, d-1 on odd k. Even: d-1 on even k, 1 on odd k.
EtaWeights eta_weights(int d, Variant variant);

/// a_s = d - [C(s+d, d-2) + sum_{t<s} a_t C(s-t+d-2, d-2)] + (-1)^s  (mod d).
/// Requires even d >= 4.
ACoeffs a_coeffs(int d);

/// Cyclic shift (x_0..x_{d-1}) -> (x_1..x_{d-1}, x_0). Requires prime d.
Circuit wilnot(int d);

/// (x_0..x_{d-1}) -> (x_1..x_{d-1}, (d-1) x_0). Requires even d >= 4.
Circuit wilnot_even(int d);

/// `copies` concatenated copies of wilnot(d): shift by `copies`.
Circuit wilnot_power(int d, int copies);

/// Dispatches on variant; Custom is rejected.
Circuit synthesize(int d, Variant variant);

/// (d-1)^2 + (d-2) + (d-1) + d(d-1)/2.
long long expected_unit_gate_count(int d);

}  // namespace wilnot
