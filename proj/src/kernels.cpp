#include "wilnot/kernels.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace wilnot::kernels {

namespace {

constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();

// Flattened gate list so the inner loop touches no std::vector of structs.
struct Program {
  int d;
  int n;
  std::vector<int> ops;  // control, target, multiplicity triples

  explicit Program(const Circuit& c) : d(c.d()), n(c.wires()) {
    ops.reserve(c.gates().size() * 3);
    for (const auto& g : c.gates()) {
      ops.push_back(g.control);
      ops.push_back(g.target);
      ops.push_back(g.multiplicity);
    }
  }

  void run(int* x) const {
    for (std::size_t i = 0; i < ops.size(); i += 3) {
      int& t = x[ops[i + 1]];
      t = (t + ops[i + 2] * x[ops[i]]) % d;
    }
  }

  void decode_into(std::uint64_t index, int* x) const {
    for (int k = n - 1; k >= 0; --k) {
      x[k] = static_cast<int>(index % static_cast<std::uint64_t>(d));
      index /= static_cast<std::uint64_t>(d);
    }
  }

  std::uint64_t encode(const int* x) const {
    std::uint64_t index = 0;
    for (int k = 0; k < n; ++k) index = index * static_cast<std::uint64_t>(d) + static_cast<std::uint64_t>(x[k]);
    return index;
  }
};

bool matches(const Program& p, const LinearMapZd& expected, const int* input, int* work) {
  std::copy(input, input + p.n, work);
  p.run(work);
  for (int r = 0; r < p.n; ++r) {
    long long acc = 0;
    for (int m = 0; m < p.n; ++m) acc += static_cast<long long>(expected.at(r, m)) * input[m];
    if (acc % p.d != work[r]) return false;
  }
  return true;
}

int clamp_threads(int threads) { return std::max(1, threads); }

}  // namespace

bool openmp_enabled() {
#ifdef _OPENMP
  return true;
#else
  return false;
#endif
}

void permutation_serial(const Circuit& c, std::span<std::uint32_t> out) {
  const Program p(c);
  std::vector<int> x(static_cast<std::size_t>(p.n));
  for (std::uint64_t i = 0; i < out.size(); ++i) {
    p.decode_into(i, x.data());
    p.run(x.data());
    out[i] = static_cast<std::uint32_t>(p.encode(x.data()));
  }
}

void permutation_parallel(const Circuit& c, std::span<std::uint32_t> out, int threads) {
  const Program p(c);
  const auto total = static_cast<std::int64_t>(out.size());
#pragma omp parallel num_threads(clamp_threads(threads))
  {
    std::vector<int> x(static_cast<std::size_t>(p.n));
#pragma omp for schedule(static)
    for (std::int64_t i = 0; i < total; ++i) {
      p.decode_into(static_cast<std::uint64_t>(i), x.data());
      p.run(x.data());
      out[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(p.encode(x.data()));
    }
  }
}

std::optional<std::uint64_t> first_mismatch_serial(const Circuit& c, const LinearMapZd& expected,
                                                   std::uint64_t count) {
  const Program p(c);
  std::vector<int> x(static_cast<std::size_t>(p.n)), work(x.size());
  for (std::uint64_t i = 0; i < count; ++i) {
    p.decode_into(i, x.data());
    if (!matches(p, expected, x.data(), work.data())) return i;
  }
  return std::nullopt;
}

std::optional<std::uint64_t> first_mismatch_parallel(const Circuit& c, const LinearMapZd& expected,
                                                     std::uint64_t count, int threads) {
  const Program p(c);
  std::atomic<std::uint64_t> best{kNone};
  const auto total = static_cast<std::int64_t>(count);
#pragma omp parallel num_threads(clamp_threads(threads))
  {
    std::vector<int> x(static_cast<std::size_t>(p.n)), work(x.size());
#pragma omp for schedule(static)
    for (std::int64_t i = 0; i < total; ++i) {
      const auto u = static_cast<std::uint64_t>(i);
      if (u >= best.load(std::memory_order_relaxed)) continue;
      p.decode_into(u, x.data());
      if (!matches(p, expected, x.data(), work.data())) {
        std::uint64_t cur = best.load(std::memory_order_relaxed);
        while (u < cur && !best.compare_exchange_weak(cur, u)) {
        }
      }
    }
  }
  if (best.load() == kNone) return std::nullopt;
  return best.load();
}

std::optional<std::uint64_t> first_sample_mismatch_serial(const Circuit& c, const LinearMapZd& expected,
                                                          std::span<const int> labels) {
  const Program p(c);
  const std::size_t samples = labels.size() / static_cast<std::size_t>(p.n);
  std::vector<int> work(static_cast<std::size_t>(p.n));
  for (std::size_t s = 0; s < samples; ++s) {
    if (!matches(p, expected, labels.data() + s * p.n, work.data())) return s;
  }
  return std::nullopt;
}

std::optional<std::uint64_t> first_sample_mismatch_parallel(const Circuit& c,
                                                            const LinearMapZd& expected,
                                                            std::span<const int> labels, int threads) {
  const Program p(c);
  const auto samples = static_cast<std::int64_t>(labels.size() / static_cast<std::size_t>(p.n));
  std::atomic<std::uint64_t> best{kNone};
#pragma omp parallel num_threads(clamp_threads(threads))
  {
    std::vector<int> work(static_cast<std::size_t>(p.n));
#pragma omp for schedule(static)
    for (std::int64_t s = 0; s < samples; ++s) {
      const auto u = static_cast<std::uint64_t>(s);
      if (u >= best.load(std::memory_order_relaxed)) continue;
      if (!matches(p, expected, labels.data() + s * p.n, work.data())) {
        std::uint64_t cur = best.load(std::memory_order_relaxed);
        while (u < cur && !best.compare_exchange_weak(cur, u)) {
        }
      }
    }
  }
  if (best.load() == kNone) return std::nullopt;
  return best.load();
}

}  // namespace wilnot::kernels
