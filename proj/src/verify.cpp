#include "wilnot/verify.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "json.hpp"
#include "wilnot/kernels.hpp"
#include "wilnot/synth.hpp"

namespace wilnot {

using nlohmann::json;

namespace {

std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s;
}

json report_object(const Report& r) {
  json j = {{"check", r.check}, {"d", r.d}, {"variant", r.variant}, {"pass", r.pass}, {"detail", r.detail}};
  if (r.counterexample) {
    j["counterexample"] = {{"input", r.counterexample->input},
                           {"expected", r.counterexample->expected},
                           {"got", r.counterexample->got}};
  }
  return j;
}

Counterexample make_counterexample(const Circuit& c, const LinearMapZd& expected, std::vector<int> input) {
  Counterexample ce;
  ce.expected = expected.apply(input);
  ce.got = input;
  apply_labels_inplace(c, ce.got);
  ce.input = std::move(input);
  return ce;
}

std::optional<std::uint64_t> label_space(int d, int n, std::uint64_t limit) {
  try {
    return basis_size(d, n, limit);
  } catch (const SizeBoundError&) {
    return std::nullopt;
  }
}

}  // namespace

std::string to_json(const Report& r) { return report_object(r).dump(2); }

std::string to_json(const std::vector<Report>& reports) {
  json arr = json::array();
  for (const auto& r : reports) arr.push_back(report_object(r));
  return arr.dump(2);
}

std::string to_text(const Report& r) {
  std::ostringstream os;
  os << (r.pass ? "PASS" : "FAIL") << "  " << r.check << "  d=" << r.d << " variant=" << r.variant
     << "\n  " << r.detail << "\n";
  if (r.counterexample) {
    os << "  counterexample: input (" << join(r.counterexample->input) << ") expected ("
       << join(r.counterexample->expected) << ") got (" << join(r.counterexample->got) << ")\n";
  }
  return os.str();
}

Report check_label_map(const Circuit& c, const LinearMapZd& expected, std::string check,
                       const CheckOptions& options) {
  Report r;
  r.check = std::move(check);
  r.d = c.d();
  r.variant = std::string(to_string(c.variant()));
  const int n = c.wires();
  if (expected.d() != c.d() || expected.size() != n) {
    r.detail = "expected map shape does not match the circuit";
    return r;
  }

  const LinearMapZd actual = linear_map(c);
  bool maps_equal = actual == expected;

  std::ostringstream detail;
  detail << "linear map " << (maps_equal ? "matches" : "differs") << "; ";

  std::optional<std::vector<int>> bad_input;
  if (auto total = label_space(c.d(), n, options.exhaustive_limit)) {
    auto hit = options.threads > 1 ? kernels::first_mismatch_parallel(c, expected, *total, options.threads)
                                   : kernels::first_mismatch_serial(c, expected, *total);
    detail << "exhaustive over " << *total << " labels";
    if (hit) bad_input = decode(*hit, c.d(), n);
  } else {
    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<int> digit(0, c.d() - 1);
    std::vector<int> labels(options.samples * static_cast<std::uint64_t>(n));
    for (auto& x : labels) x = digit(rng);
    auto hit = options.threads > 1
                   ? kernels::first_sample_mismatch_parallel(c, expected, labels, options.threads)
                   : kernels::first_sample_mismatch_serial(c, expected, labels);
    detail << "sampled " << options.samples << " labels (seed " << options.seed << ")";
    if (hit) {
      auto first = labels.begin() + static_cast<std::ptrdiff_t>(*hit * static_cast<std::uint64_t>(n));
      bad_input = std::vector<int>(first, first + n);
    }
  }
  detail << (bad_input ? ", label mismatch found" : ", all labels match");

  if (!bad_input && !maps_equal) {
    // Maps differ but no enumerated label showed it: report a unit vector.
    for (int col = 0; col < n && !bad_input; ++col) {
      std::vector<int> unit(static_cast<std::size_t>(n), 0);
      unit[col] = 1;
      auto got = unit;
      apply_labels_inplace(c, got);
      if (got != expected.apply(unit)) bad_input = unit;
    }
  }
  if (bad_input) r.counterexample = make_counterexample(c, expected, *bad_input);
  r.pass = maps_equal && !bad_input;
  r.detail = detail.str();
  return r;
}

Report check_cyclic(const Circuit& c, int d, int shift, const CheckOptions& options) {
  if (c.d() != d) throw std::invalid_argument("circuit dimension differs from requested d");
  return check_label_map(c, LinearMapZd::cyclic_shift(d, c.wires(), shift),
                         "cyclic_shift_" + std::to_string(shift), options);
}

LinearMapZd even_variant_map(int d) {
  LinearMapZd m = LinearMapZd::cyclic_shift(d, d, 1);
  m.set(d - 1, 0, d - 1);
  return m;
}

Report check_even_variant(const Circuit& c, int d, const CheckOptions& options) {
  if (c.d() != d || c.wires() != d) throw std::invalid_argument("even check needs a d-wire circuit over Z_d");
  return check_label_map(c, even_variant_map(d), "even_signed_shift", options);
}

namespace {

class ClosedForms {
 public:
  ClosedForms(int d, Variant variant) : d_(d), variant_(variant), binom_(d, 2 * d + 2) {}

  int stage2(int j, int k, int m) const { return m <= k ? binom_.at(k - m + j - 1, j - 1) : 0; }

  int alternating(int k, int m) const {
    if (m > k) return 0;
    return (k - m) % 2 == 0 ? 1 % d_ : d_ - 1;
  }

  int stage4(int k, int m) const {
    if (k < d_ - 1) return m == k + 1 ? 1 : 0;
    if (variant_ == Variant::Prime) return m % 2 == 0 ? 1 % d_ : d_ - 1;  // [1, d-1, 1, ...]
    return alternating(k, m);
  }

  LinearMapZd final_map() const {
    return variant_ == Variant::Prime ? LinearMapZd::cyclic_shift(d_, d_, 1) : even_variant_map(d_);
  }

 private:
  int d_;
  Variant variant_;
  BinomTable binom_;
};

template <class Form>
void compare_rows(CoeffTrace& t, const std::string& step, const LinearMapZd& map, Form form) {
  for (int k = 0; k < map.size(); ++k) {
    for (int m = 0; m < map.size(); ++m) {
      int want = form(k, m);
      if (map.at(k, m) != want) t.mismatches.push_back({step, k, m, want, map.at(k, m)});
    }
    ++t.rows_checked;
  }
}

}  // namespace

CoeffTrace trace_circuit(const Circuit& c) {
  CoeffTrace t;
  t.d = c.d();
  t.variant = c.variant();
  t.steps.push_back({"stage1", 0, LinearMapZd::identity(c.d(), c.wires())});

  std::vector<StageMark> marks = c.stages();
  std::stable_sort(marks.begin(), marks.end(), [](const StageMark& a, const StageMark& b) { return a.from < b.from; });
  for (const auto& mark : marks) {
    t.steps.push_back({mark.label, mark.to, linear_map(c.prefix(mark.to))});
  }

  const bool closed_forms = c.variant() != Variant::Custom && c.wires() == c.d();
  if (!closed_forms) return t;

  const ClosedForms forms(c.d(), c.variant());
  std::set<std::string> seen;
  for (const auto& step : t.steps) {
    if (!seen.insert(step.label).second) continue;  // later copies of a repeated circuit
    const std::string prefix = "stage2.step";
    if (step.label.rfind(prefix, 0) == 0) {
      int j = 0;
      try {
        j = std::stoi(step.label.substr(prefix.size()));
      } catch (const std::exception&) {
        continue;
      }
      if (j < 1 || j > c.d() - 1) continue;
      compare_rows(t, step.label, step.map, [&](int k, int m) { return forms.stage2(j, k, m); });
    } else if (step.label == "stage4") {
      compare_rows(t, step.label, step.map, [&](int k, int m) { return forms.stage4(k, m); });
    } else if (step.label == "stage5") {
      const LinearMapZd want = forms.final_map();
      compare_rows(t, step.label, step.map, [&](int k, int m) { return want.at(k, m); });
    }
  }

  // The stage-3 form holds at the stage-4 boundary even when stage 3 is empty (d = 2).
  if (auto s4 = c.find_stage("stage4")) {
    compare_rows(t, "stage3", linear_map(c.prefix(s4->from)),
                 [&](int k, int m) { return forms.alternating(k, m); });
  }
  return t;
}

CoeffTrace trace_stages(int d, Variant variant) { return trace_circuit(synthesize(d, variant)); }

Report trace_report(const CoeffTrace& t) {
  Report r;
  r.check = "stage_trace";
  r.d = t.d;
  r.variant = std::string(to_string(t.variant));
  r.pass = t.ok();
  std::ostringstream os;
  os << t.steps.size() << " snapshots, " << t.rows_checked << " closed-form rows checked, "
     << t.mismatches.size() << " mismatches";
  if (!t.mismatches.empty()) {
    const auto& m = t.mismatches.front();
    os << "; first at " << m.step << " (k=" << m.row << ", m=" << m.col << ", expected " << m.expected
       << ", got " << m.got << ")";
  }
  r.detail = os.str();
  return r;
}

std::vector<CnotGate> qutrit_unit_sequence() {
  const CnotGate u1a{0, 1, 1}, u1b{1, 2, 1};
  const CnotGate u3{0, 2, 1}, u4{1, 0, 1}, u5{2, 1, 1}, u6{0, 2, 1}, u7{1, 2, 1};
  return {u1a, u1b, u1a, u1b, u3, u4, u5, u6, u7, u7};
}

namespace {


// Dense 27x27 matrix, row = output index, column = input index.
using Dense = std::vector<int>;
constexpr int kQutritStates = 27;

Dense dense_from_permutation(const BasisPermutation& p) {
  Dense m(kQutritStates * kQutritStates, 0);
  for (std::size_t in = 0; in < p.mapping.size(); ++in) m[p.mapping[in] * kQutritStates + in] = 1;
  return m;
}

template <class F>
Dense dense_from_action(F action) {
  Dense m(kQutritStates * kQutritStates, 0);
  for (int in = 0; in < kQutritStates; ++in) {
    auto x = decode(static_cast<std::uint64_t>(in), 3, 3);
    auto y = action(x[0], x[1], x[2]);
    m[encode(y, 3) * kQutritStates + in] = 1;
  }
  return m;
}

Dense multiply(const Dense& a, const Dense& b) {
  Dense out(a.size(), 0);
  for (int r = 0; r < kQutritStates; ++r)
    for (int k = 0; k < kQutritStates; ++k)
      if (a[r * kQutritStates + k])
        for (int c = 0; c < kQutritStates; ++c) out[r * kQutritStates + c] += a[r * kQutritStates + k] * b[k * kQutritStates + c];
  return out;
}

int count_diff(const Dense& a, const Dense& b, std::ostringstream& os, const char* what) {
  int diff = 0;
  for (int r = 0; r < kQutritStates; ++r) {
    for (int c = 0; c < kQutritStates; ++c) {
      if (a[r * kQutritStates + c] != b[r * kQutritStates + c]) {
        if (diff == 0) os << " " << what << " first mismatch at (" << r << "," << c << ");";
        ++diff;
      }
    }
  }
  return diff;
}

}  // namespace

Report qutrit_matrix_check() {
  Report r;
  r.check = "qutrit_matrix";
  r.d = 3;
  r.variant = "prime";
  std::ostringstream os;
  const Circuit c = wilnot(3);

  std::vector<CnotGate> units;
  for (const auto& g : c.gates())
    for (int i = 0; i < g.multiplicity; ++i) units.push_back({g.control, g.target, 1});
  const bool sequence_ok = units == qutrit_unit_sequence();
  os << "unit sequence U1,U1,U3,U4,U5,U6,U7,U7 " << (sequence_ok ? "matches" : "differs") << " ("
     << units.size() << " unit CNOTs);";

  auto u1 = dense_from_action([](int i, int j, int k) { return std::vector<int>{i, (i + j) % 3, (i + j + k) % 3}; });
  auto u3 = dense_from_action([](int i, int j, int k) { return std::vector<int>{i, j, (i + k) % 3}; });
  auto u4 = dense_from_action([](int i, int j, int k) { return std::vector<int>{(i + j) % 3, j, k}; });
  auto u5 = dense_from_action([](int i, int j, int k) { return std::vector<int>{i, (j + k) % 3, k}; });
  auto u6 = u3;
  auto u7 = dense_from_action([](int i, int j, int k) { return std::vector<int>{i, j, (j + k) % 3}; });
  auto swap = dense_from_action([](int i, int j, int k) { return std::vector<int>{j, k, i}; });

  const Dense step1 = dense_from_permutation(basis_permutation(*c.prefix_through("stage2.step1")));
  const Dense full = dense_from_permutation(basis_permutation(c));

  int bad_step1 = count_diff(step1, u1, os, "stage2.step1 vs U1");
  int bad_full = count_diff(full, swap, os, "full vs |ijk>->|jki>");

  // Product U7 U7 U6 U5 U4 U3 U1 U1, rightmost applied first.
  Dense product = u1;
  for (const Dense* u : {&u1, &u3, &u4, &u5, &u6, &u7, &u7}) product = multiply(*u, product);
  int bad_product = count_diff(product, full, os, "U-product vs circuit");

  int bad_cells = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        std::vector<int> in{i, j, k}, out{j, k, i};
        int col = static_cast<int>(encode(in, 3));
        int row_one = static_cast<int>(encode(out, 3));
        for (int row = 0; row < kQutritStates; ++row) {
          if (full[row * kQutritStates + col] != (row == row_one ? 1 : 0)) ++bad_cells;
        }
      }

  os << " mismatched cells: step1 " << bad_step1 << ", full " << bad_full << ", product " << bad_product
     << ", column scan " << bad_cells;
  r.pass = sequence_ok && bad_step1 == 0 && bad_full == 0 && bad_product == 0 && bad_cells == 0;
  r.detail = os.str();
  return r;
}

XiScan impossibility_scan(int d) {
  if (d <= 2 || d % 2 != 0) {
    throw std::invalid_argument("impossibility scan requires even d > 2, got " + std::to_string(d));
  }
  XiScan scan;
  scan.d = d;
  for (int xi : units(d)) {
    XiAnalysis row;
    row.xi = xi;
    row.p_xi = mod_inverse(xi, d);

    // Two-wire gadget on a pair (first, second): CNOT first->second, then
    // P_xi - 1 gates back onto first, then d - xi gates onto second.
    Circuit gadget(d, 2);
    gadget.append({0, 1, 1});
    gadget.append({1, 0, row.p_xi - 1});
    gadget.append({0, 1, d - xi});
    const LinearMapZd g = linear_map(gadget);

    // Input forms over two symbols: interior pair (xi a, xi b), final pair (xi a, (d - xi) b).
    LinearMapZd interior(d, 2), final_pair(d, 2);
    interior.set(0, 0, xi);
    interior.set(1, 1, xi);
    final_pair.set(0, 0, xi);
    final_pair.set(1, 1, d - xi);
    const LinearMapZd out_interior = g * interior;
    const LinearMapZd out_final = g * final_pair;

    row.pair_scalar = out_interior.at(1, 1);
    row.final_scalar = out_final.at(1, 1);
    row.gadget_consistent = out_interior.at(0, 0) == 1 && out_interior.at(0, 1) == mod_normalize(1 - xi, d) &&
                            out_interior.at(1, 0) == 0 && out_final.at(0, 0) == 1 &&
                            out_final.at(0, 1) == mod_normalize(xi - 1, d) && out_final.at(1, 0) == 0;
    row.both_unity = row.pair_scalar == 1 && row.final_scalar == 1;
    scan.rows.push_back(row);
  }
  scan.pass = std::none_of(scan.rows.begin(), scan.rows.end(), [](const XiAnalysis& a) { return a.both_unity; });
  return scan;
}

LinearMapZd even_square_map(int d) {
  const Circuit once = wilnot_even(d);
  return linear_map(concat(once, once));
}

}  // namespace wilnot
