#pragma once

// Circuit execution at three fidelities: basis labels over Z_d, the induced
// linear map / basis permutation, and complex state vectors.
//
// Basis index convention is big-endian: index = sum_k x_k * d^(n-1-k), so
// wire 0 is the most significant digit and |i_0 i_1 ... i_{n-1}> reads
// left to right.

#include <complex>
#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <vector>

#include "wilnot/circuit.hpp"

namespace wilnot {

/// Basis permutations and state vectors are refused above this many entries.
inline constexpr std::uint64_t kMaxBasisSize = std::uint64_t{1} << 24;

class SizeBoundError : public std::length_error {
 public:
  using std::length_error::length_error;
};

struct LabelVector {
  int d = 2;
  std::vector<int> labels;

  friend bool operator==(const LabelVector&, const LabelVector&) = default;
};

/// Throws std::invalid_argument when an entry lies outside [0, d).
LabelVector make_labels(int d, std::vector<int> labels);

/// Square matrix over Z_d; row r holds output wire r's coefficients on the
/// input labels.
class LinearMapZd {
 public:
  LinearMapZd(int d, int n);

  static LinearMapZd identity(int d, int n);
  /// Output wire k holds input label (k + shift) mod n.
  static LinearMapZd cyclic_shift(int d, int n, int shift);

  int d() const { return d_; }
  int size() const { return n_; }
  int at(int row, int col) const { return entries_[static_cast<std::size_t>(row) * n_ + col]; }
  void set(int row, int col, long long value);
  std::vector<int> row(int r) const;

  /// M * x mod d.
  std::vector<int> apply(std::span<const int> x) const;
  /// this * rhs: apply rhs first, then this.
  LinearMapZd operator*(const LinearMapZd& rhs) const;
  /// Determinant mod d via unimodular integer row reduction (valid for composite d).
  int determinant() const;

  friend bool operator==(const LinearMapZd&, const LinearMapZd&) = default;

 private:
  int d_;
  int n_;
  std::vector<int> entries_;
};

struct BasisPermutation {
  int d = 2;
  int n = 2;
  /// mapping[input index] = output index.
  std::vector<std::uint32_t> mapping;

  bool is_bijection() const;
  friend bool operator==(const BasisPermutation&, const BasisPermutation&) = default;
};

struct StateVector {
  int d = 2;
  int n = 1;
  std::vector<std::complex<double>> amplitudes;

  double norm() const;
};

/// Number of basis states d^n; throws SizeBoundError above `bound`.
std::uint64_t basis_size(int d, int n, std::uint64_t bound = kMaxBasisSize);

std::uint64_t encode(std::span<const int> labels, int d);
std::vector<int> decode(std::uint64_t index, int d, int n);

/// labels[target] += multiplicity * labels[control] mod d, gate by gate.
void apply_labels_inplace(const Circuit& c, std::span<int> labels);
LabelVector apply_labels(const Circuit& c, const LabelVector& input);

/// Induced map, obtained by running the circuit on each unit label vector.
LinearMapZd linear_map(const Circuit& c);

/// Enumerates all d^n labels. threads > 1 uses the OpenMP kernel; the
/// result is identical to the serial enumeration.
BasisPermutation basis_permutation(const Circuit& c, int threads = 1);

StateVector basis_state(int d, std::span<const int> labels);
/// Tensor product of single-qudit states (each of length d), wire 0 first.
StateVector product_state(int d, const std::vector<std::vector<std::complex<double>>>& factors);
/// Normalized state with i.i.d. Gaussian real and imaginary parts.
StateVector random_state(int d, int n, std::mt19937_64& rng);
/// Normalized single-qudit state, same distribution as random_state.
std::vector<std::complex<double>> random_qudit(int d, std::mt19937_64& rng);

/// out[mapping[i]] = psi[i].
StateVector apply_statevector(const Circuit& c, const StateVector& psi);
StateVector apply_permutation(const BasisPermutation& p, const StateVector& psi);

inline constexpr double kSchmidtTolerance = 1e-9;

struct SchmidtReport {
  bool product = false;
  double largest = 0.0;
  /// Descending singular values of the reshaped amplitude matrix.
  std::vector<double> singular_values;
};

/// Splits the wires into `side_a` and the rest and checks for a product state:
/// product iff exactly one singular value exceeds `tolerance`.
SchmidtReport is_product_across(const StateVector& psi, std::span<const int> side_a,
                                double tolerance = kSchmidtTolerance);

}  // namespace wilnot
