#include "wilnot/synth.hpp"

#include <stdexcept>
#include <string>

namespace wilnot {

namespace {

void require_prime(int d) {
  if (d < 2 || !is_prime(static_cast<std::uint64_t>(d))) {
    throw std::invalid_argument("prime variant requires prime d, got " + std::to_string(d));
  }
}

void require_even(int d) {
  if (d < 4 || d % 2 != 0) {
    throw std::invalid_argument("even variant requires even d >= 4, got " + std::to_string(d));
  }
}

// Stages 1-2 are shared by both variants.
void emit_stage2(Circuit& c) {
  const int d = c.d();
  for (int j = 1; j <= d - 1; ++j) {
    std::size_t from = c.gates().size();
    for (int k = 1; k <= d - 1; ++k) c.append({k - 1, k, 1});
    c.mark_stage("stage2.step" + std::to_string(j), from, c.gates().size());
  }
}

void emit_stage4_5(Circuit& c, const EtaWeights& eta) {
  const int d = c.d();
  std::size_t from = c.gates().size();
  for (int k = 0; k <= d - 2; ++k) c.append({k + 1, k, 1});
  c.mark_stage("stage4", from, c.gates().size());

  from = c.gates().size();
  for (int k = 0; k <= d - 2; ++k) c.append({k, d - 1, eta.weights[k]});
  c.mark_stage("stage5", from, c.gates().size());
}

void mark_if_nonempty(Circuit& c, const std::string& label, std::size_t from) {
  if (c.gates().size() > from) c.mark_stage(label, from, c.gates().size());
}

}  // namespace

EtaWeights eta_weights(int d, Variant variant) {
  if (d < 2) throw std::invalid_argument("eta weights require d >= 2");
  if (variant == Variant::Custom) throw std::invalid_argument("eta weights need prime or even variant");
  EtaWeights eta{d, {}};
  const bool prime = variant == Variant::Prime;
  for (int k = 0; k <= d - 2; ++k) {
    bool even_k = k % 2 == 0;
    eta.weights.push_back(even_k == prime ? 1 % d : d - 1);
  }
  return eta;
}

ACoeffs a_coeffs(int d) {
  require_even(d);
  BinomTable binom(d, 2 * d);
  ACoeffs out{d, {}};
  for (int s = 0; s <= d - 3; ++s) {
    long long bracket = binom.at(s + d, d - 2);
    for (int t = 0; t < s; ++t) {
      bracket += static_cast<long long>(out.values[t]) * binom.at(s - t + d - 2, d - 2);
    }
    long long sign = s % 2 == 0 ? 1 : -1;
    out.values.push_back(mod_normalize(d - bracket + sign, d));
  }
  return out;
}

Circuit wilnot(int d) {
  require_prime(d);
  Circuit c(d, d, Variant::Prime);
  emit_stage2(c);

  std::size_t from = c.gates().size();
  for (int k = 2; k <= d - 1; ++k) c.append({k - 2, k, 1});
  mark_if_nonempty(c, "stage3", from);

  emit_stage4_5(c, eta_weights(d, Variant::Prime));
  return c;
}

Circuit wilnot_even(int d) {
  require_even(d);
  const ACoeffs a = a_coeffs(d);
  Circuit c(d, d, Variant::Even);
  emit_stage2(c);

  // Descending k: every control m < k still holds its stage-2 value.
  std::size_t from = c.gates().size();
  for (int k = d - 1; k >= 2; --k) {
    for (int m = 0; m <= k - 2; ++m) c.append({m, k, a.values[k - 2 - m]});
  }
  mark_if_nonempty(c, "stage3", from);

  emit_stage4_5(c, eta_weights(d, Variant::Even));
  return c;
}

Circuit wilnot_power(int d, int copies) {
  if (copies < 1) throw std::invalid_argument("repetition count must be >= 1");
  const Circuit once = wilnot(d);
  Circuit out = once;
  for (int r = 1; r < copies; ++r) out = concat(out, once);
  return out;
}

Circuit synthesize(int d, Variant variant) {
  switch (variant) {
    case Variant::Prime: return wilnot(d);
    case Variant::Even: return wilnot_even(d);
    case Variant::Custom: break;
  }
  throw std::invalid_argument("synthesis requires the prime or even variant");
}

long long expected_unit_gate_count(int d) {
  long long n = d;
  return (n - 1) * (n - 1) + (n - 2) + (n - 1) + n * (n - 1) / 2;
}

}  // namespace wilnot
