#include "wilnot/sim.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <string>

#include "wilnot/kernels.hpp"

namespace wilnot {

LabelVector make_labels(int d, std::vector<int> labels) {
  for (int x : labels) {
    if (x < 0 || x >= d) {
      throw std::invalid_argument("label " + std::to_string(x) + " outside Z_" + std::to_string(d));
    }
  }
  return {d, std::move(labels)};
}

LinearMapZd::LinearMapZd(int d, int n)
    : d_(d), n_(n), entries_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0) {
  if (d < 2) throw std::invalid_argument("linear map modulus must be >= 2");
  if (n < 1) throw std::invalid_argument("linear map size must be >= 1");
}

LinearMapZd LinearMapZd::identity(int d, int n) {
  LinearMapZd m(d, n);
  for (int i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

LinearMapZd LinearMapZd::cyclic_shift(int d, int n, int shift) {
  LinearMapZd m(d, n);
  for (int k = 0; k < n; ++k) m.set(k, mod_normalize(static_cast<long long>(k) + shift, n), 1);
  return m;
}

void LinearMapZd::set(int row, int col, long long value) {
  entries_[static_cast<std::size_t>(row) * n_ + col] = mod_normalize(value, d_);
}

std::vector<int> LinearMapZd::row(int r) const {
  auto first = entries_.begin() + static_cast<std::ptrdiff_t>(r) * n_;
  return {first, first + n_};
}

std::vector<int> LinearMapZd::apply(std::span<const int> x) const {
  if (static_cast<int>(x.size()) != n_) throw std::invalid_argument("label vector size mismatch");
  std::vector<int> out(static_cast<std::size_t>(n_));
  for (int r = 0; r < n_; ++r) {
    long long acc = 0;
    for (int c = 0; c < n_; ++c) acc += static_cast<long long>(at(r, c)) * x[c];
    out[r] = mod_normalize(acc, d_);
  }
  return out;
}

LinearMapZd LinearMapZd::operator*(const LinearMapZd& rhs) const {
  if (d_ != rhs.d_ || n_ != rhs.n_) throw std::invalid_argument("linear map shape mismatch");
  LinearMapZd out(d_, n_);
  for (int r = 0; r < n_; ++r) {
    for (int c = 0; c < n_; ++c) {
      long long acc = 0;
      for (int k = 0; k < n_; ++k) acc += static_cast<long long>(at(r, k)) * rhs.at(k, c);
      out.set(r, c, acc);
    }
  }
  return out;
}

int LinearMapZd::determinant() const {
  // Euclidean elimination uses only swaps and integer row additions, so it
  // commutes with reduction mod d even when d is composite.
  std::vector<std::vector<long long>> a(static_cast<std::size_t>(n_));
  for (int r = 0; r < n_; ++r) a[r].assign(entries_.begin() + r * n_, entries_.begin() + (r + 1) * n_);
  long long det = 1;
  for (int col = 0; col < n_; ++col) {
    for (int r = col + 1; r < n_; ++r) {
      while (a[r][col] != 0) {
        long long q = a[col][col] / a[r][col];
        for (int c = col; c < n_; ++c) a[col][c] = mod_normalize(a[col][c] - q * a[r][c], d_);
        std::swap(a[col], a[r]);
        det = -det;
      }
    }
    det = mod_normalize(det * a[col][col], d_);
  }
  return mod_normalize(det, d_);
}

bool BasisPermutation::is_bijection() const {
  std::vector<bool> seen(mapping.size(), false);
  for (auto out : mapping) {
    if (out >= mapping.size() || seen[out]) return false;
    seen[out] = true;
  }
  return true;
}

double StateVector::norm() const {
  double sum = 0.0;
  for (const auto& a : amplitudes) sum += std::norm(a);
  return std::sqrt(sum);
}

std::uint64_t basis_size(int d, int n, std::uint64_t bound) {
  std::uint64_t size = 1;
  for (int k = 0; k < n; ++k) {
    size *= static_cast<std::uint64_t>(d);
    if (size > bound) {
      throw SizeBoundError(std::to_string(d) + "^" + std::to_string(n) +
                           " basis states exceed the bound of " + std::to_string(bound));
    }
  }
  return size;
}

std::uint64_t encode(std::span<const int> labels, int d) {
  std::uint64_t index = 0;
  for (int x : labels) index = index * static_cast<std::uint64_t>(d) + static_cast<std::uint64_t>(x);
  return index;
}

std::vector<int> decode(std::uint64_t index, int d, int n) {
  std::vector<int> labels(static_cast<std::size_t>(n));
  for (int k = n - 1; k >= 0; --k) {
    labels[k] = static_cast<int>(index % static_cast<std::uint64_t>(d));
    index /= static_cast<std::uint64_t>(d);
  }
  return labels;
}

void apply_labels_inplace(const Circuit& c, std::span<int> labels) {
  const int d = c.d();
  for (const auto& g : c.gates()) {
    labels[g.target] = static_cast<int>(
        (labels[g.target] + static_cast<long long>(g.multiplicity) * labels[g.control]) % d);
  }
}

LabelVector apply_labels(const Circuit& c, const LabelVector& input) {
  if (input.d != c.d() || static_cast<int>(input.labels.size()) != c.wires()) {
    throw std::invalid_argument("label vector (d=" + std::to_string(input.d) + ", n=" +
                                std::to_string(input.labels.size()) + ") does not match circuit (d=" +
                                std::to_string(c.d()) + ", n=" + std::to_string(c.wires()) + ")");
  }
  LabelVector out = input;
  apply_labels_inplace(c, out.labels);
  return out;
}

LinearMapZd linear_map(const Circuit& c) {
  const int n = c.wires();
  LinearMapZd m(c.d(), n);
  std::vector<int> unit(static_cast<std::size_t>(n));
  for (int col = 0; col < n; ++col) {
    std::fill(unit.begin(), unit.end(), 0);
    unit[col] = 1;
    apply_labels_inplace(c, unit);
    for (int r = 0; r < n; ++r) m.set(r, col, unit[r]);
  }
  return m;
}

BasisPermutation basis_permutation(const Circuit& c, int threads) {
  BasisPermutation p{c.d(), c.wires(), {}};
  p.mapping.resize(basis_size(c.d(), c.wires()));
  if (threads > 1) {
    kernels::permutation_parallel(c, p.mapping, threads);
  } else {
    kernels::permutation_serial(c, p.mapping);
  }
  return p;
}

StateVector basis_state(int d, std::span<const int> labels) {
  const int n = static_cast<int>(labels.size());
  StateVector psi{d, n, std::vector<std::complex<double>>(basis_size(d, n))};
  psi.amplitudes[encode(labels, d)] = 1.0;
  return psi;
}

StateVector product_state(int d, const std::vector<std::vector<std::complex<double>>>& factors) {
  const int n = static_cast<int>(factors.size());
  StateVector psi{d, n, std::vector<std::complex<double>>(basis_size(d, n))};
  for (std::uint64_t i = 0; i < psi.amplitudes.size(); ++i) {
    auto labels = decode(i, d, n);
    std::complex<double> amp = 1.0;
    for (int k = 0; k < n; ++k) amp *= factors[k].at(static_cast<std::size_t>(labels[k]));
    psi.amplitudes[i] = amp;
  }
  return psi;
}

namespace {

void fill_normalized(std::vector<std::complex<double>>& v, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  double sum = 0.0;
  for (auto& a : v) {
    a = {gauss(rng), gauss(rng)};
    sum += std::norm(a);
  }
  const double scale = 1.0 / std::sqrt(sum);
  for (auto& a : v) a *= scale;
}

}  // namespace

StateVector random_state(int d, int n, std::mt19937_64& rng) {
  StateVector psi{d, n, std::vector<std::complex<double>>(basis_size(d, n))};
  fill_normalized(psi.amplitudes, rng);
  return psi;
}

std::vector<std::complex<double>> random_qudit(int d, std::mt19937_64& rng) {
  std::vector<std::complex<double>> v(static_cast<std::size_t>(d));
  fill_normalized(v, rng);
  return v;
}

StateVector apply_permutation(const BasisPermutation& p, const StateVector& psi) {
  if (psi.d != p.d || psi.n != p.n || psi.amplitudes.size() != p.mapping.size()) {
    throw std::invalid_argument("state vector does not match permutation shape");
  }
  StateVector out{psi.d, psi.n, std::vector<std::complex<double>>(psi.amplitudes.size())};
  for (std::size_t i = 0; i < p.mapping.size(); ++i) out.amplitudes[p.mapping[i]] = psi.amplitudes[i];
  return out;
}

StateVector apply_statevector(const Circuit& c, const StateVector& psi) {
  if (psi.d != c.d() || psi.n != c.wires()) {
    throw std::invalid_argument("state vector does not match circuit dimension or wire count");
  }
  return apply_permutation(basis_permutation(c), psi);
}

SchmidtReport is_product_across(const StateVector& psi, std::span<const int> side_a, double tolerance) {
  const int n = psi.n;
  const int d = psi.d;
  std::vector<bool> in_a(static_cast<std::size_t>(n), false);
  for (int w : side_a) {
    if (w < 0 || w >= n) throw std::invalid_argument("cut wire out of range");
    in_a[w] = true;
  }
  std::vector<int> wires_a, wires_b;
  for (int w = 0; w < n; ++w) (in_a[w] ? wires_a : wires_b).push_back(w);

  std::uint64_t rows = 1, cols = 1;
  for (std::size_t i = 0; i < wires_a.size(); ++i) rows *= static_cast<std::uint64_t>(d);
  for (std::size_t i = 0; i < wires_b.size(); ++i) cols *= static_cast<std::uint64_t>(d);

  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (std::uint64_t i = 0; i < psi.amplitudes.size(); ++i) {
    auto labels = decode(i, d, n);
    std::uint64_t r = 0, c = 0;
    for (int w : wires_a) r = r * static_cast<std::uint64_t>(d) + static_cast<std::uint64_t>(labels[w]);
    for (int w : wires_b) c = c * static_cast<std::uint64_t>(d) + static_cast<std::uint64_t>(labels[w]);
    m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = psi.amplitudes[i];
  }

  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  const auto& sv = svd.singularValues();
  SchmidtReport report;
  report.singular_values.assign(sv.data(), sv.data() + sv.size());
  report.largest = report.singular_values.empty() ? 0.0 : report.singular_values.front();
  auto above = std::count_if(report.singular_values.begin(), report.singular_values.end(),
                             [&](double s) { return s > tolerance; });
  report.product = above == 1;
  return report;
}

}  // namespace wilnot
