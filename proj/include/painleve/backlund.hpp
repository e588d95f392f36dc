#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "painleve/ratfn.hpp"
#include "painleve/systems.hpp"

namespace painleve {

struct BacklundGen {
  SystemId system;
  int index;           // s_index
  std::string name;    // "s0", ...
  Substitution action;
};

/// A product of generators; apply_word([u, v], f) = u(v(f)).
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<int> letters) : letters_(std::move(letters)) {}
  /// "s0 s2 s3", "s0s2s3" or "1" (identity).
  static Word parse(std::string_view text);

  const std::vector<int>& letters() const noexcept { return letters_; }
  bool is_identity() const noexcept { return letters_.empty(); }
  Word operator*(const Word& o) const;
  Word pow(unsigned n) const;
  Word inverse() const;
  std::string to_string() const;

  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<int> letters_;
};

/// Generator tables; UnsupportedSystem for P_I.
const std::vector<BacklundGen>& generators(SystemId id);
const BacklundGen& generator(SystemId id, int index);

/// Parameters, t, q, p of the system.
std::vector<Symbol> field_generators(SystemId id);

RatFn apply_word(SystemId id, const Word& w, const RatFn& f);

struct Relation {
  Word word;
  std::string label;  // e.g. "(s0 s2)^3"
};

/// The defining relations of the group, each as a word equal to 1.
std::vector<Relation> fundamental_relations(SystemId id);

/// Result of an exact check; `witness` names the first failing generator.
struct Outcome {
  bool pass = true;
  std::string witness;
};

Outcome check_relation(SystemId id, const Word& w);
bool verify_relation(SystemId id, const Word& w);

Outcome check_symplectic(const BacklundGen& g);
bool verify_symplectic(const BacklundGen& g);

Outcome check_commutes_with_derivation(const BacklundGen& g);
bool verify_commutes_with_derivation(const BacklundGen& g);

Outcome check_constraint_preserved(const BacklundGen& g);

}  // namespace painleve
