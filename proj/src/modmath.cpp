#include "wilnot/modmath.hpp"

#include <limits>
#include <string>

namespace wilnot {

namespace {

ParityClass classify(int d) {
  if (is_prime(static_cast<std::uint64_t>(d))) return ParityClass::Prime;
  if (d % 2 == 0) return ParityClass::EvenComposite;
  return ParityClass::Other;
}

}  // namespace

Dimension::Dimension(int d) : d_(d), class_(ParityClass::Other) {
  if (d < 2) throw std::invalid_argument("dimension must be >= 2, got " + std::to_string(d));
  class_ = classify(d);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t f = 3; f <= n / f; f += 2) {
    if (n % f == 0) return false;
  }
  return true;
}

int gcd(int a, int b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b != 0) {
    int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

int mod_inverse(int x, int d) {
  if (d < 2) throw std::invalid_argument("modulus must be >= 2");
  long long r0 = d, r1 = mod_normalize(x, d);
  long long s0 = 0, s1 = 1;
  while (r1 != 0) {
    long long q = r0 / r1;
    long long r2 = r0 - q * r1;
    r0 = r1;
    r1 = r2;
    long long s2 = s0 - q * s1;
    s0 = s1;
    s1 = s2;
  }
  if (r0 != 1) {
    throw NotInvertibleError(std::to_string(x) + " is not a unit mod " + std::to_string(d) +
                             " (gcd " + std::to_string(r0) + ")");
  }
  return mod_normalize(s0, d);
}

std::vector<int> units(int d) {
  std::vector<int> out;
  for (int x = 1; x < d; ++x) {
    if (gcd(x, d) == 1) out.push_back(x);
  }
  return out;
}

BinomTable::BinomTable(int modulus, int max_n) : modulus_(modulus), max_n_(max_n) {
  if (modulus < 2) throw std::invalid_argument("binomial modulus must be >= 2");
  if (max_n < 0) throw std::invalid_argument("binomial table bound must be >= 0");
  rows_.resize(static_cast<std::size_t>(max_n) + 1);
  for (int n = 0; n <= max_n; ++n) {
    auto& row = rows_[n];
    row.assign(static_cast<std::size_t>(n) + 1, 0);
    row[0] = 1 % modulus;
    row[n] = 1 % modulus;
    for (int k = 1; k < n; ++k) {
      row[k] = (rows_[n - 1][k - 1] + rows_[n - 1][k]) % modulus;
    }
  }
}

int BinomTable::at(int n, int k) const {
  if (n < 0 || n > max_n_) {
    throw std::out_of_range("binomial row " + std::to_string(n) + " outside table bound " +
                            std::to_string(max_n_));
  }
  if (k < 0 || k > n) return 0;
  return rows_[n][k];
}

int binom_mod(int n, int k, int m) {
  if (n < 0 || k < 0) throw std::invalid_argument("binom_mod requires n, k >= 0");
  if (k > n) return 0;
  return BinomTable(m, n).at(n, k);
}

int binom_lucas(long long n, long long k, int p) {
  if (!is_prime(static_cast<std::uint64_t>(p))) {
    throw std::invalid_argument("Lucas decomposition requires a prime modulus");
  }
  if (n < 0 || k < 0) throw std::invalid_argument("binom_lucas requires n, k >= 0");
  BinomTable digits(p, p - 1);
  int result = 1 % p;
  while (n > 0 || k > 0) {
    int nd = static_cast<int>(n % p);
    int kd = static_cast<int>(k % p);
    if (kd > nd) return 0;
    result = static_cast<int>(static_cast<long long>(result) * digits.at(nd, kd) % p);
    n /= p;
    k /= p;
  }
  return result;
}

std::uint64_t binom_exact(int n, int k) {
  if (n < 0 || k < 0) throw std::invalid_argument("binom_exact requires n, k >= 0");
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  unsigned __int128 acc = 1;
  for (int i = 1; i <= k; ++i) {
    // acc * (n - k + i) is divisible by i since acc == C(n - k + i - 1, i - 1).
    acc = acc * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    if (acc > std::numeric_limits<std::uint64_t>::max()) {
      throw std::overflow_error("C(" + std::to_string(n) + ", " + std::to_string(k) +
                                ") exceeds 64 bits");
    }
  }
  return static_cast<std::uint64_t>(acc);
}

std::uint64_t hockey_stick_lhs(int l, int k) {
  if (l < 0 || k < 0) throw std::invalid_argument("hockey_stick_lhs requires l, k >= 0");
  std::uint64_t sum = 0;
  for (int i = 0; i <= k; ++i) {
    std::uint64_t term = binom_exact(l + i, i);
    if (sum > std::numeric_limits<std::uint64_t>::max() - term) {
      throw std::overflow_error("hockey-stick sum exceeds 64 bits");
    }
    sum += term;
  }
  return sum;
}

}  // namespace wilnot
