#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace obliv {

// Discrete chemical reaction network model.  A network is a finite species
// list plus a finite multiset-rewrite rule list; configurations are species
// count vectors over the canonical species order of their Crn.

enum class SpeciesKind { Input, Output, Leader, Auxiliary };

struct Species {
  std::string name;
  SpeciesKind kind = SpeciesKind::Auxiliary;
  // 1-based position among inputs (resp. outputs) for Input/Output kinds.
  int index = 0;

  friend bool operator==(const Species& a, const Species& b) {
    return a.name == b.name && a.kind == b.kind && a.index == b.index;
  }
};

// Dense count vector indexed by species position within a Crn.
using Configuration = std::vector<int32_t>;

struct Reaction {
  std::vector<int64_t> reactants;  // one slot per species
  std::vector<int64_t> products;

  friend bool operator==(const Reaction& a, const Reaction& b) {
    return a.reactants == b.reactants && a.products == b.products;
  }
};

// Name-based reaction used while assembling a network, before species
// positions are fixed.
struct ReactionDraft {
  std::vector<std::pair<int64_t, std::string>> lhs;
  std::vector<std::pair<int64_t, std::string>> rhs;
};

class Crn {
public:
  // Canonicalizing constructor: orders species (inputs by index, outputs by
  // index, leader, auxiliaries by name), deduplicates and sorts reactions.
  // Species mentioned only in reactions are auto-declared auxiliary.
  // Throws std::invalid_argument on malformed input (duplicate names, gaps
  // in input/output indexing, no output, several leaders, a reaction whose
  // two sides are equal, negative coefficients, bad species names).
  static Crn make(std::vector<Species> declared, const std::vector<ReactionDraft>& reactions);

  int dimension() const { return static_cast<int>(inputs_.size()); }
  int output_count() const { return static_cast<int>(outputs_.size()); }
  bool has_leader() const { return leader_ >= 0; }

  int species_count() const { return static_cast<int>(species_.size()); }
  const Species& species(int pos) const { return species_[pos]; }
  const std::vector<Species>& species() const { return species_; }

  // Position lookups.  species_index returns -1 when absent.
  int species_index(std::string_view name) const;
  int input_position(int axis) const { return inputs_.at(axis - 1); }   // axis 1..d
  int output_position(int k = 1) const { return outputs_.at(k - 1); }   // k 1..outputs
  int leader_position() const { return leader_; }                        // -1 if none

  const std::vector<Reaction>& reactions() const { return reactions_; }

  friend bool operator==(const Crn& a, const Crn& b) {
    return a.species_ == b.species_ && a.reactions_ == b.reactions_;
  }
  friend bool operator!=(const Crn& a, const Crn& b) { return !(a == b); }

private:
  std::vector<Species> species_;
  std::vector<Reaction> reactions_;
  std::vector<int> inputs_;   // position of input axis 1..d
  std::vector<int> outputs_;  // position of output 1..k
  int leader_ = -1;
  std::unordered_map<std::string, int> by_name_;
};

// True when the name is usable in the text format: nonempty, no whitespace,
// none of '+' '#', not "->", not "0", does not start with a digit.
bool valid_species_name(std::string_view name);

// All-zero configuration except count(X_i) = x(i) and count(L) = 1 when a
// leader is declared.  Throws std::invalid_argument on dimension mismatch or
// negative counts.
Configuration initial_configuration(const Crn& crn, std::span<const long long> x);

inline Configuration initial_configuration(const Crn& crn,
                                           std::initializer_list<long long> x) {
  return initial_configuration(crn, std::span<const long long>(x.begin(), x.size()));
}

bool applicable(const Configuration& c, const Reaction& r);

// c - reactants + products; throws std::domain_error when not applicable.
Configuration apply_reaction(const Configuration& c, const Reaction& r);

// No output species ever appears as a reactant.
bool is_output_oblivious(const Crn& crn);

// No reaction strictly decreases any output species.
bool is_output_monotonic(const Crn& crn);

long long output_count_of(const Crn& crn, const Configuration& c);

std::string format_configuration(const Crn& crn, const Configuration& c);

}  // namespace obliv
