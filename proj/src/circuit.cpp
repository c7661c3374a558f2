#include "wilnot/circuit.hpp"

#include <algorithm>
#include <set>

#include "json.hpp"

namespace wilnot {

using nlohmann::json;

std::string_view to_string(Variant v) {
  switch (v) {
    case Variant::Prime: return "prime";
    case Variant::Even: return "even";
    case Variant::Custom: return "custom";
  }
  return "custom";
}

std::optional<Variant> parse_variant(std::string_view s) {
  if (s == "prime") return Variant::Prime;
  if (s == "even") return Variant::Even;
  if (s == "custom") return Variant::Custom;
  return std::nullopt;
}

Circuit::Circuit(int dimension, int wires, Variant variant)
    : dim_(dimension), wires_(wires), variant_(variant) {
  if (wires < 2) throw CircuitError("circuit needs at least 2 wires, got " + std::to_string(wires));
}

void Circuit::validate(const CnotGate& gate) const {
  auto in_range = [&](int w) { return w >= 0 && w < wires_; };
  if (!in_range(gate.control) || !in_range(gate.target)) {
    throw CircuitError("gate wire index out of range [0, " + std::to_string(wires_) +
                       "): control " + std::to_string(gate.control) + ", target " +
                       std::to_string(gate.target));
  }
  if (gate.control == gate.target) {
    throw CircuitError("gate control equals target (" + std::to_string(gate.control) + ")");
  }
}

Circuit& Circuit::append(CnotGate gate, AppendMode mode) {
  validate(gate);
  gate.multiplicity = mod_normalize(gate.multiplicity, d());

  bool tail_closed = std::any_of(stages_.begin(), stages_.end(),
                                 [&](const StageMark& s) { return s.to == gates_.size(); });
  if (mode == AppendMode::FoldAdjacent && !gates_.empty() && !tail_closed) {
    CnotGate& last = gates_.back();
    if (last.control == gate.control && last.target == gate.target) {
      last.multiplicity = (last.multiplicity + gate.multiplicity) % d();
      if (last.multiplicity == 0) gates_.pop_back();
      return *this;
    }
  }
  if (gate.multiplicity != 0) gates_.push_back(gate);
  return *this;
}

Circuit& Circuit::mark_stage(std::string label, std::size_t from, std::size_t to) {
  if (from > to || to > gates_.size()) {
    throw CircuitError("stage '" + label + "' range [" + std::to_string(from) + ", " +
                       std::to_string(to) + ") outside gate list of size " +
                       std::to_string(gates_.size()));
  }
  for (const auto& s : stages_) {
    bool disjoint = to <= s.from || s.to <= from || from == to || s.from == s.to;
    if (!disjoint) {
      throw CircuitError("stage '" + label + "' overlaps stage '" + s.label + "'");
    }
  }
  stages_.push_back({std::move(label), from, to});
  return *this;
}

std::optional<StageMark> Circuit::find_stage(std::string_view label) const {
  for (const auto& s : stages_) {
    if (s.label == label) return s;
  }
  return std::nullopt;
}

Circuit Circuit::prefix(std::size_t count) const {
  count = std::min(count, gates_.size());
  Circuit out(d(), wires_, variant_);
  out.gates_.assign(gates_.begin(), gates_.begin() + static_cast<std::ptrdiff_t>(count));
  for (const auto& s : stages_) {
    if (s.to <= count) out.stages_.push_back(s);
  }
  return out;
}

std::optional<Circuit> Circuit::prefix_through(std::string_view label) const {
  auto mark = find_stage(label);
  if (!mark) return std::nullopt;
  return prefix(mark->to);
}

Circuit Circuit::without_gate(std::size_t index) const {
  if (index >= gates_.size()) throw CircuitError("gate index out of range");
  Circuit out(d(), wires_, Variant::Custom);
  out.gates_ = gates_;
  out.gates_.erase(out.gates_.begin() + static_cast<std::ptrdiff_t>(index));
  return out;
}

Circuit concat(const Circuit& a, const Circuit& b) {
  if (a.d() != b.d() || a.wires() != b.wires()) {
    throw CircuitError("cannot concatenate circuits over (d=" + std::to_string(a.d()) +
                       ", wires=" + std::to_string(a.wires()) + ") and (d=" +
                       std::to_string(b.d()) + ", wires=" + std::to_string(b.wires()) + ")");
  }
  Circuit out = a;
  std::size_t offset = a.gates().size();
  for (const auto& g : b.gates()) out.append(g);
  for (const auto& s : b.stages()) out.mark_stage(s.label, s.from + offset, s.to + offset);
  return out;
}

long long gate_count(const Circuit& c) {
  long long n = 0;
  for (const auto& g : c.gates()) n += g.multiplicity;
  return n;
}

std::string serialize(const Circuit& c) {
  json gates = json::array();
  for (const auto& g : c.gates()) {
    gates.push_back({{"control", g.control}, {"target", g.target}, {"multiplicity", g.multiplicity}});
  }
  json stages = json::array();
  for (const auto& s : c.stages()) {
    stages.push_back({{"label", s.label}, {"from", s.from}, {"to", s.to}});
  }
  json doc = {{"dimension", c.d()},
              {"wires", c.wires()},
              {"variant", std::string(to_string(c.variant()))},
              {"gates", gates},
              {"stages", stages}};
  return doc.dump(2) + "\n";
}

namespace {

void reject_unknown(const json& obj, const std::set<std::string>& allowed, const std::string& where) {
  for (const auto& [key, value] : obj.items()) {
    if (!allowed.count(key)) throw ParseError(where + ": unknown field '" + key + "'");
  }
}

const json& require(const json& obj, const std::string& key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(where + ": missing field '" + key + "'");
  return *it;
}

long long require_int(const json& obj, const std::string& key, const std::string& where) {
  const json& v = require(obj, key, where);
  if (!v.is_number_integer()) throw ParseError(where + "." + key + ": expected integer");
  return v.get<long long>();
}

}  // namespace

Circuit deserialize(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed circuit JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("circuit document must be a JSON object");
  reject_unknown(doc, {"dimension", "wires", "variant", "gates", "stages"}, "circuit");

  long long d = require_int(doc, "dimension", "circuit");
  long long wires = require_int(doc, "wires", "circuit");
  if (d < 2 || d > 1'000'000) throw ParseError("circuit.dimension: must be >= 2");
  if (wires < 2 || wires > 1'000'000) throw ParseError("circuit.wires: must be >= 2");

  Variant variant = Variant::Custom;
  if (auto it = doc.find("variant"); it != doc.end()) {
    if (!it->is_string()) throw ParseError("circuit.variant: expected string");
    auto v = parse_variant(it->get<std::string>());
    if (!v) throw ParseError("circuit.variant: unknown variant '" + it->get<std::string>() + "'");
    variant = *v;
  }

  Circuit c(static_cast<int>(d), static_cast<int>(wires), variant);
  const json& gates = require(doc, "gates", "circuit");
  if (!gates.is_array()) throw ParseError("circuit.gates: expected array");
  for (std::size_t i = 0; i < gates.size(); ++i) {
    std::string where = "gates[" + std::to_string(i) + "]";
    const json& g = gates[i];
    if (!g.is_object()) throw ParseError(where + ": expected object");
    reject_unknown(g, {"control", "target", "multiplicity"}, where);
    long long control = require_int(g, "control", where);
    long long target = require_int(g, "target", where);
    long long mult = require_int(g, "multiplicity", where);
    if (control < 0 || control >= wires) throw ParseError(where + ".control: out of range");
    if (target < 0 || target >= wires) throw ParseError(where + ".target: out of range");
    if (control == target) throw ParseError(where + ": control equals target");
    if (mult < 1 || mult >= d) {
      throw ParseError(where + ".multiplicity: must lie in [1, " + std::to_string(d) + ")");
    }
    c.append({static_cast<int>(control), static_cast<int>(target), static_cast<int>(mult)});
  }

  if (auto it = doc.find("stages"); it != doc.end()) {
    if (!it->is_array()) throw ParseError("circuit.stages: expected array");
    for (std::size_t i = 0; i < it->size(); ++i) {
      std::string where = "stages[" + std::to_string(i) + "]";
      const json& s = (*it)[i];
      if (!s.is_object()) throw ParseError(where + ": expected object");
      reject_unknown(s, {"label", "from", "to"}, where);
      const json& label = require(s, "label", where);
      if (!label.is_string()) throw ParseError(where + ".label: expected string");
      long long from = require_int(s, "from", where);
      long long to = require_int(s, "to", where);
      if (from < 0 || to < 0) throw ParseError(where + ": negative range");
      try {
        c.mark_stage(label.get<std::string>(), static_cast<std::size_t>(from),
                     static_cast<std::size_t>(to));
      } catch (const CircuitError& e) {
        throw ParseError(where + ": " + e.what());
      }
    }
  }
  return c;
}

}  // namespace wilnot
