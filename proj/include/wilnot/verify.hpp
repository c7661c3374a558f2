#pragma once

// Checkers that tie synthesized circuits back to their claimed behaviour:
// exhaustive label checks, per-step coefficient traces with closed forms,
// the qutrit matrix reproduction, and the even-dimension scalar scan.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wilnot/circuit.hpp"
#include "wilnot/sim.hpp"

namespace wilnot {

struct Counterexample {
  std::vector<int> input;
  std::vector<int> expected;
  std::vector<int> got;
};

/// Machine-readable shape: {check, d, variant, pass, counterexample?, detail}.
struct Report {
  std::string check;
  int d = 0;
  std::string variant;
  bool pass = false;
  std::optional<Counterexample> counterexample;
  std::string detail;
};

std::string to_json(const Report& r);
std::string to_json(const std::vector<Report>& reports);
std::string to_text(const Report& r);

struct CheckOptions {
  int threads = 1;
  std::uint64_t seed = 42;
  /// Label spaces up to this size are enumerated; larger ones are sampled.
  std::uint64_t exhaustive_limit = 10'000'000;
  std::uint64_t samples = 1'000'000;
};

/// Compares the circuit against `expected` twice: as linear maps, then on
/// labels (every label, or `samples` seeded random labels above the limit).
Report check_label_map(const Circuit& c, const LinearMapZd& expected, std::string check,
                       const CheckOptions& options = {});

/// Output wire k must hold input label (k + shift) mod n.
Report check_cyclic(const Circuit& c, int d, int shift, const CheckOptions& options = {});

/// (x_0, ..., x_{d-1}) -> (x_1, ..., x_{d-1}, (d-1) x_0).
LinearMapZd even_variant_map(int d);
Report check_even_variant(const Circuit& c, int d, const CheckOptions& options = {});

struct TraceStep {
  std::string label;
  std::size_t gates_applied = 0;
  LinearMapZd map;
};

struct TraceMismatch {
  std::string step;
  int row = 0;  // wire k
  int col = 0;  // input label m
  int expected = 0;
  int got = 0;
};

/// Linear-map snapshot after every stage mark; steps[0] is the identity.
struct CoeffTrace {
  int d = 0;
  Variant variant = Variant::Custom;
  std::vector<TraceStep> steps;
  std::vector<TraceMismatch> mismatches;
  /// Number of closed-form rows compared.
  std::size_t rows_checked = 0;

  bool ok() const { return mismatches.empty(); }
};

/// Snapshots a circuit at its stage marks. For prime/even circuits the rows
/// are compared against the closed forms:
///   stage2.step j: C(k-m+j-1, j-1) for m <= k
///   after stage 3: (-1)^(k-m) for m <= k
///   after stage 4: delta(m, k+1) for k < d-1; alternating row on wire d-1
///   after stage 5: the target map of the variant
CoeffTrace trace_circuit(const Circuit& c);
CoeffTrace trace_stages(int d, Variant variant);
Report trace_report(const CoeffTrace& t);

/// Unit CNOTs of the qutrit network as the sequence U1, U1, U3, U4, U5, U6,
/// U7, U7 (U1 itself is two gates).
std::vector<CnotGate> qutrit_unit_sequence();

/// Dense 27x27 checks of the d = 3 network and its stage-2 step-1 prefix.
Report qutrit_matrix_check();

struct XiAnalysis {
  int xi = 0;
  int p_xi = 0;
  /// Scalar left on the second wire of an interior pair (xi^2).
  int pair_scalar = 0;
  /// Scalar left on the last wire by the final pair (-xi^2).
  int final_scalar = 0;
  /// Both gadget outputs also matched the symbolic forms x_k + (1-xi) x_{k+1}
  /// and x_{d-1} + (xi-1) x_0 on the first wire of each pair.
  bool gadget_consistent = false;
  bool both_unity = false;
};

struct XiScan {
  int d = 0;
  std::vector<XiAnalysis> rows;
  bool pass = false;  // no unit xi makes both scalars 1
};

/// Runs the (P_xi - 1)-gate and (d - xi)-gate gadgets on symbolic pair
/// scalars for every unit xi. Requires even d > 2.
XiScan impossibility_scan(int d);

/// Induced map of the even-variant circuit applied twice.
LinearMapZd even_square_map(int d);

}  // namespace wilnot
