#pragma once

// Exact arithmetic over Z_d: primality, inverses and binomial coefficients
// reduced modulo prime or composite moduli.

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace wilnot {

enum class ParityClass { Prime, EvenComposite, Other };

/// Qudit dimension d >= 2 with its derived parity class.
class Dimension {
 public:
  explicit Dimension(int d);

  int value() const { return d_; }
  ParityClass parity_class() const { return class_; }
  bool is_prime() const { return class_ == ParityClass::Prime; }
  bool is_even_composite() const { return class_ == ParityClass::EvenComposite; }

  friend bool operator==(const Dimension&, const Dimension&) = default;

 private:
  int d_;
  ParityClass class_;
};

class NotInvertibleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Deterministic trial division; exact for every 64-bit input.
bool is_prime(std::uint64_t n);

/// Representative of x in [0, m).
inline int mod_normalize(long long x, int m) {
  long long r = x % m;
  return static_cast<int>(r < 0 ? r + m : r);
}

int gcd(int a, int b);

/// P with P * x == 1 (mod d). Throws NotInvertibleError when gcd(x, d) != 1.
int mod_inverse(int x, int d);

/// Units of Z_d in ascending order.
std::vector<int> units(int d);

/// Pascal triangle reduced mod `modulus`, rows 0..max_n.
class BinomTable {
 public:
  BinomTable(int modulus, int max_n);

  int modulus() const { return modulus_; }
  int max_n() const { return max_n_; }

  /// C(n, k) mod modulus; 0 when k > n. Requires n <= max_n.
  int at(int n, int k) const;

 private:
  int modulus_;
  int max_n_;
  std::vector<std::vector<int>> rows_;
};

/// C(n, k) mod m via a Pascal table, valid for any modulus m >= 2.
int binom_mod(int n, int k, int m);

/// C(n, k) mod p by Lucas decomposition into base-p digits. p must be prime.
int binom_lucas(long long n, long long k, int p);

/// Exact C(n, k). Throws std::overflow_error beyond 64 bits.
std::uint64_t binom_exact(int n, int k);

/// Sum_{i=0}^{k} C(l + i, i), computed term by term.
std::uint64_t hockey_stick_lhs(int l, int k);

}  // namespace wilnot
