#pragma once

// Generalized-CNOT circuits over d-level wires and their JSON form.
//
// A gate (control c, target t, multiplicity m) maps |x>_c |y>_t to
// |x>_c |y + m*x mod d>_t, i.e. m repetitions of the unit CNOT.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "wilnot/modmath.hpp"

namespace wilnot {

struct CnotGate {
  int control = 0;
  int target = 1;
  int multiplicity = 1;

  friend bool operator==(const CnotGate&, const CnotGate&) = default;
};

/// Labels the half-open gate range [from, to), e.g. "stage2.step1".
struct StageMark {
  std::string label;
  std::size_t from = 0;
  std::size_t to = 0;

  friend bool operator==(const StageMark&, const StageMark&) = default;
};

enum class Variant { Prime, Even, Custom };

std::string_view to_string(Variant v);
/// Accepts "prime", "even", "custom".
std::optional<Variant> parse_variant(std::string_view s);

class CircuitError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised by deserialize; what() names the offending line or field.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class AppendMode { Plain, FoldAdjacent };

class Circuit {
 public:
  Circuit(int dimension, int wires, Variant variant = Variant::Custom);

  const Dimension& dimension() const { return dim_; }
  int d() const { return dim_.value(); }
  int wires() const { return wires_; }
  Variant variant() const { return variant_; }
  const std::vector<CnotGate>& gates() const { return gates_; }
  const std::vector<StageMark>& stages() const { return stages_; }
  bool empty() const { return gates_.empty(); }

  /// Multiplicity is reduced mod d; a gate reducing to 0 is dropped. With
  /// FoldAdjacent, a gate on the same (control, target) as the last gate is
  /// merged into it unless a stage mark ends at the current tail.
  Circuit& append(CnotGate gate, AppendMode mode = AppendMode::Plain);

  /// Marks [from, to). Marks must not overlap and must lie within the gate list.
  Circuit& mark_stage(std::string label, std::size_t from, std::size_t to);

  /// Gate range of the mark with this label (first match).
  std::optional<StageMark> find_stage(std::string_view label) const;

  /// First `count` gates, with the marks that fit entirely inside.
  Circuit prefix(std::size_t count) const;

  /// Prefix ending at the end of the named stage; nullopt if no such mark.
  std::optional<Circuit> prefix_through(std::string_view label) const;

  Circuit without_gate(std::size_t index) const;

  friend bool operator==(const Circuit&, const Circuit&) = default;

 private:
  void validate(const CnotGate& gate) const;

  Dimension dim_;
  int wires_;
  Variant variant_;
  std::vector<CnotGate> gates_;
  std::vector<StageMark> stages_;
};

/// Gates of a followed by gates of b; b's stage marks are shifted. Throws on
/// dimension or wire-count mismatch.
Circuit concat(const Circuit& a, const Circuit& b);

/// Unit-CNOT count: sum of multiplicities.
long long gate_count(const Circuit& c);

/// Circuit JSON document:
///   {"dimension": int, "wires": int, "variant": "prime"|"even"|"custom",
///    "gates": [{"control": int, "target": int, "multiplicity": int}],
///    "stages": [{"label": str, "from": int, "to": int}]}
std::string serialize(const Circuit& c);
Circuit deserialize(std::string_view text);

}  // namespace wilnot
