#include "wilnot/cli.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "wilnot/circuit.hpp"
#include "wilnot/sim.hpp"
#include "wilnot/synth.hpp"
#include "wilnot/verify.hpp"

namespace wilnot::cli {

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

constexpr const char* kFooter = R"(Conventions:
  Basis index is big-endian: index = sum_k x_k * d^(n-1-k), wire 0 most significant.
  Permutation matrices have row = output index, column = input index.
  Circuit JSON:
    {"dimension": int, "wires": int, "variant": "prime"|"even"|"custom",
     "gates": [{"control": int, "target": int, "multiplicity": int}],
     "stages": [{"label": str, "from": int, "to": int}]}   (gate range [from, to))
Exit codes: 0 success/pass, 1 verification failure, 2 usage or precondition error.)";

// Dense CSV export is refused above this many basis states.
constexpr std::uint64_t kDenseLimit = 4096;

struct Config {
  int d = 0;
  std::string variant = "prime";
  int shift = 1;
  std::string labels;
  std::string output;
  std::string format;
  std::string prefix = "full";
  std::string circuit_path;
  std::uint64_t seed = 42;
  int threads = 1;
};

Variant variant_of(const Config& cfg) {
  auto v = parse_variant(cfg.variant);
  if (!v || *v == Variant::Custom) throw UsageError("variant must be 'prime' or 'even'");
  return *v;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// The synthesized circuit, or the one loaded from --circuit.
Circuit load_or_synthesize(const Config& cfg) {
  if (!cfg.circuit_path.empty()) {
    Circuit c = [&] {
      try {
        return deserialize(read_file(cfg.circuit_path));
      } catch (const ParseError& e) {
        throw UsageError(cfg.circuit_path + ": " + e.what());
      }
    }();
    if (cfg.d != 0 && cfg.d != c.d()) {
      throw UsageError("-d " + std::to_string(cfg.d) + " disagrees with circuit dimension " + std::to_string(c.d()));
    }
    return c;
  }
  if (cfg.d == 0) throw UsageError("-d is required unless --circuit is given");
  const Variant v = variant_of(cfg);
  if (cfg.shift < 1) throw UsageError("--shift must be >= 1");
  if (v == Variant::Even && cfg.shift != 1) throw UsageError("--shift applies to the prime variant only");
  try {
    if (v == Variant::Prime && cfg.shift > 1) return wilnot_power(cfg.d, cfg.shift);
    return synthesize(cfg.d, v);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

void emit(const Config& cfg, const std::string& text, std::ostream& out) {
  if (cfg.output.empty()) {
    out << text;
    return;
  }
  std::ofstream f(cfg.output, std::ios::binary);
  if (!f) throw UsageError("cannot write " + cfg.output);
  f << text;
}

std::string join(const std::vector<int>& v, const char* sep = ",") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(v[i]);
  }
  return s;
}

std::string gate_listing(const Circuit& c) {
  std::ostringstream os;
  os << "# d=" << c.d() << " wires=" << c.wires() << " variant=" << to_string(c.variant())
     << " gates=" << c.gates().size() << " unit-cnots=" << gate_count(c) << "\n";
  auto label_at = [&](std::size_t i) -> std::string {
    for (const auto& s : c.stages())
      if (s.from == i && s.to > s.from) return s.label;
    return {};
  };
  for (std::size_t i = 0; i < c.gates().size(); ++i) {
    if (auto label = label_at(i); !label.empty()) os << label << ":\n";
    const auto& g = c.gates()[i];
    os << "  " << g.control << " -> " << g.target;
    if (g.multiplicity != 1) os << "  x" << g.multiplicity;
    os << "\n";
  }
  return os.str();
}

std::string matrix_text(const LinearMapZd& m, const char* indent = "  ") {
  std::ostringstream os;
  for (int k = 0; k < m.size(); ++k) os << indent << "wire " << k << ": [" << join(m.row(k), ", ") << "]\n";
  return os.str();
}

json matrix_json(const LinearMapZd& m) {
  json rows = json::array();
  for (int k = 0; k < m.size(); ++k) rows.push_back(m.row(k));
  return rows;
}

int cmd_synth(const Config& cfg, std::ostream& out) {
  Circuit c = load_or_synthesize(cfg);
  const std::string fmt = cfg.format.empty() ? "json" : cfg.format;
  if (fmt == "csv") throw UsageError("synth supports --format json or text");
  emit(cfg, fmt == "json" ? serialize(c) : gate_listing(c), out);
  return kOk;
}

std::vector<int> parse_labels(const std::string& text, int d, int n) {
  std::vector<int> labels;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw UsageError("malformed label '" + item + "'");
    }
    if (used != item.size()) throw UsageError("malformed label '" + item + "'");
    if (value < 0 || value >= d) {
      throw UsageError("label " + std::to_string(value) + " outside Z_" + std::to_string(d));
    }
    labels.push_back(value);
  }
  if (static_cast<int>(labels.size()) != n) {
    throw UsageError("expected " + std::to_string(n) + " labels, got " + std::to_string(labels.size()));
  }
  return labels;
}

int cmd_simulate(const Config& cfg, std::ostream& out) {
  Circuit c = load_or_synthesize(cfg);
  auto input = parse_labels(cfg.labels, c.d(), c.wires());
  LabelVector result = apply_labels(c, make_labels(c.d(), input));
  if (cfg.format == "json") {
    out << json{{"d", c.d()}, {"input", input}, {"output", result.labels}}.dump() << "\n";
  } else {
    out << "input:  " << join(input) << "\n";
    out << "output: " << join(result.labels) << "\n";
  }
  return kOk;
}

int cmd_verify(const Config& cfg, std::ostream& out) {
  Circuit c = load_or_synthesize(cfg);
  CheckOptions opts;
  opts.seed = cfg.seed;
  opts.threads = cfg.threads;

  std::vector<Report> reports;
  if (c.variant() == Variant::Even) {
    reports.push_back(check_even_variant(c, c.d(), opts));
  } else {
    reports.push_back(check_cyclic(c, c.d(), cfg.shift, opts));
  }
  if (c.variant() != Variant::Custom && cfg.shift == 1) reports.push_back(trace_report(trace_circuit(c)));

  if (cfg.format == "json") {
    out << to_json(reports) << "\n";
  } else {
    for (const auto& r : reports) out << to_text(r);
  }
  for (const auto& r : reports)
    if (!r.pass) return kVerifyFailed;
  return kOk;
}

int cmd_matrix(const Config& cfg, std::ostream& out) {
  Circuit full = load_or_synthesize(cfg);
  Circuit c = full;
  if (cfg.prefix != "full") {
    auto p = full.prefix_through(cfg.prefix);
    if (!p) throw UsageError("no stage named '" + cfg.prefix + "'");
    c = *p;
  }
  BasisPermutation perm = [&] {
    try {
      return basis_permutation(c, cfg.threads);
    } catch (const SizeBoundError& e) {
      throw UsageError(e.what());
    }
  }();

  std::ostringstream os;
  const std::string fmt = cfg.format.empty() ? "text" : cfg.format;
  if (fmt == "csv") {
    if (perm.mapping.size() > kDenseLimit) {
      throw UsageError("dense export limited to " + std::to_string(kDenseLimit) + " basis states; use --format text");
    }
    std::vector<std::size_t> source(perm.mapping.size());
    for (std::size_t in = 0; in < perm.mapping.size(); ++in) source[perm.mapping[in]] = in;
    for (std::size_t row = 0; row < perm.mapping.size(); ++row) {
      for (std::size_t col = 0; col < perm.mapping.size(); ++col) {
        if (col) os << ',';
        os << (source[row] == col ? '1' : '0');
      }
      os << '\n';
    }
  } else if (fmt == "json") {
    os << json{{"d", c.d()}, {"wires", c.wires()}, {"prefix", cfg.prefix}, {"mapping", perm.mapping}}.dump() << "\n";
  } else {
    os << "# d=" << c.d() << " wires=" << c.wires() << " prefix=" << cfg.prefix
       << " big-endian; in_index -> out_index\n";
    for (std::size_t in = 0; in < perm.mapping.size(); ++in) os << in << " -> " << perm.mapping[in] << "\n";
  }
  emit(cfg, os.str(), out);
  return kOk;
}

int cmd_trace(const Config& cfg, std::ostream& out) {
  Circuit c = load_or_synthesize(cfg);
  CoeffTrace t = trace_circuit(c);
  if (cfg.format == "json") {
    json steps = json::array();
    for (const auto& s : t.steps) steps.push_back({{"label", s.label}, {"gates", s.gates_applied}, {"rows", matrix_json(s.map)}});
    json bad = json::array();
    for (const auto& m : t.mismatches)
      bad.push_back({{"step", m.step}, {"k", m.row}, {"m", m.col}, {"expected", m.expected}, {"got", m.got}});
    out << json{{"d", t.d}, {"variant", std::string(to_string(t.variant))}, {"steps", steps}, {"mismatches", bad}}.dump(2)
        << "\n";
  } else {
    for (const auto& s : t.steps) {
      out << "== " << s.label << " (after " << s.gates_applied << " gates) ==\n" << matrix_text(s.map);
    }
    for (const auto& m : t.mismatches) {
      out << "MISMATCH " << m.step << " k=" << m.row << " m=" << m.col << " expected " << m.expected << " got "
          << m.got << "\n";
    }
    out << to_text(trace_report(t));
  }
  return t.ok() ? kOk : kVerifyFailed;
}

int cmd_analyze_even(const Config& cfg, std::ostream& out) {
  if (cfg.d <= 2 || cfg.d % 2 != 0) {
    throw UsageError("analyze-even requires even d > 2, got " + std::to_string(cfg.d));
  }
  XiScan scan = impossibility_scan(cfg.d);
  LinearMapZd square = even_square_map(cfg.d);
  const std::string verdict = scan.pass ? "no xi achieves unit scalars" : "some xi achieves unit scalars";

  if (cfg.format == "json") {
    json rows = json::array();
    for (const auto& r : scan.rows) {
      rows.push_back({{"xi", r.xi}, {"p_xi", r.p_xi}, {"xi_squared", r.pair_scalar}, {"minus_xi_squared", r.final_scalar},
                      {"gadget_consistent", r.gadget_consistent}, {"both_unity", r.both_unity}});
    }
    out << json{{"d", scan.d}, {"rows", rows}, {"pass", scan.pass}, {"verdict", verdict},
                {"even_variant_squared", matrix_json(square)}}
               .dump(2)
        << "\n";
  } else {
    out << "d = " << scan.d << "\n";
    out << std::setw(6) << "xi" << std::setw(6) << "P_xi" << std::setw(8) << "xi^2" << std::setw(8) << "-xi^2"
        << "  both one\n";
    for (const auto& r : scan.rows) {
      out << std::setw(6) << r.xi << std::setw(6) << r.p_xi << std::setw(8) << r.pair_scalar << std::setw(8)
          << r.final_scalar << "  " << (r.both_unity ? "yes" : "no") << "\n";
    }
    out << "verdict: " << verdict << "\n";
    out << "even variant applied twice, induced map:\n" << matrix_text(square);
  }
  return scan.pass ? kOk : kVerifyFailed;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cyclic qudit SWAP networks from generalized CNOT gates", "wilnot"};
  app.footer(kFooter);
  app.require_subcommand(1);
  Config cfg;

  auto add_dimension = [&](CLI::App* sub) {
    sub->add_option("-d,--dimension", cfg.d, "Qudit dimension d (also the wire count)");
  };
  auto add_variant = [&](CLI::App* sub) {
    sub->add_option("--variant", cfg.variant, "prime | even (default prime)")
        ->check(CLI::IsMember({"prime", "even"}));
  };
  auto add_circuit = [&](CLI::App* sub) {
    sub->add_option("--circuit", cfg.circuit_path, "Load a circuit JSON file instead of synthesizing");
  };
  auto add_format = [&](CLI::App* sub, std::vector<std::string> allowed, const std::string& help) {
    sub->add_option("--format", cfg.format, help)->check(CLI::IsMember(allowed));
  };
  auto add_shift = [&](CLI::App* sub) {
    sub->add_option("--shift", cfg.shift, "Shift l: use l copies of the prime circuit (default 1)");
  };

  auto* synth = app.add_subcommand("synth", "Emit a circuit (JSON by default, or a text gate listing)");
  add_dimension(synth);
  add_variant(synth);
  add_shift(synth);
  add_format(synth, {"json", "text"}, "json (default) | text");
  synth->add_option("-o,--output", cfg.output, "Write to file instead of stdout");

  auto* simulate = app.add_subcommand("simulate", "Run basis labels through a circuit");
  add_dimension(simulate);
  add_variant(simulate);
  add_shift(simulate);
  add_circuit(simulate);
  simulate->add_option("--labels", cfg.labels, "Comma-separated input labels, one per wire")->required();
  add_format(simulate, {"text", "json"}, "text (default) | json");

  auto* verify = app.add_subcommand("verify", "Check the circuit's label action and stage trace");
  add_dimension(verify);
  add_variant(verify);
  add_shift(verify);
  add_circuit(verify);
  verify->add_option("--seed", cfg.seed, "Seed for sampled checks (default 42)");
  verify->add_option("--threads", cfg.threads, "Worker threads for label enumeration (default 1)");
  add_format(verify, {"text", "json"}, "text (default) | json");

  auto* matrix = app.add_subcommand("matrix", "Export the basis permutation of a circuit prefix");
  add_dimension(matrix);
  add_variant(matrix);
  add_shift(matrix);
  add_circuit(matrix);
  matrix->add_option("--prefix", cfg.prefix, "full (default) or a stage label such as stage2.step1");
  matrix->add_option("--threads", cfg.threads, "Worker threads (default 1)");
  add_format(matrix, {"text", "csv", "json"}, "text: sparse in -> out list (default) | csv: dense 0/1 | json");
  matrix->add_option("-o,--output", cfg.output, "Write to file instead of stdout");

  auto* trace = app.add_subcommand("trace", "Print the linear map after every stage step");
  add_dimension(trace);
  add_variant(trace);
  add_circuit(trace);
  add_format(trace, {"text", "json"}, "text (default) | json");

  auto* analyze = app.add_subcommand("analyze-even", "Scalar-pair scan for even d and the squared even map");
  analyze->add_option("-d,--dimension", cfg.d, "Even dimension d > 2")->required();
  add_format(analyze, {"text", "json"}, "text (default) | json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }
  if (cfg.threads < 1) {
    err << "error: --threads must be >= 1\n";
    return kUsage;
  }

  try {
    if (synth->parsed()) return cmd_synth(cfg, out);
    if (simulate->parsed()) return cmd_simulate(cfg, out);
    if (verify->parsed()) return cmd_verify(cfg, out);
    if (matrix->parsed()) return cmd_matrix(cfg, out);
    if (trace->parsed()) return cmd_trace(cfg, out);
    if (analyze->parsed()) return cmd_analyze_even(cfg, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace wilnot::cli
