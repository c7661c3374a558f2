#pragma once

// Label-enumeration kernels. Each OpenMP kernel has a serial reference with
// the same contract; tests hold them equal and bench/ compares their speed.

#include <cstdint>
#include <optional>
#include <span>

#include "wilnot/circuit.hpp"
#include "wilnot/sim.hpp"

namespace wilnot::kernels {

/// out[i] = encode(apply_labels(c, decode(i))) for i in [0, out.size()).
void permutation_serial(const Circuit& c, std::span<std::uint32_t> out);
void permutation_parallel(const Circuit& c, std::span<std::uint32_t> out, int threads);

/// Smallest index in [0, count) whose label image under the circuit differs
/// from expected * label.
std::optional<std::uint64_t> first_mismatch_serial(const Circuit& c, const LinearMapZd& expected,
                                                   std::uint64_t count);
std::optional<std::uint64_t> first_mismatch_parallel(const Circuit& c, const LinearMapZd& expected,
                                                     std::uint64_t count, int threads);

/// Same over explicit samples: `labels` is row-major, c.wires() entries per
/// sample. Returns the smallest failing sample position.
std::optional<std::uint64_t> first_sample_mismatch_serial(const Circuit& c, const LinearMapZd& expected,
                                                          std::span<const int> labels);
std::optional<std::uint64_t> first_sample_mismatch_parallel(const Circuit& c,
                                                            const LinearMapZd& expected,
                                                            std::span<const int> labels, int threads);

/// Whether the build has OpenMP; without it the parallel kernels run serially.
bool openmp_enabled();

}  // namespace wilnot::kernels
