#include "oblivcrn/crn.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <stdexcept>

namespace obliv {

bool valid_species_name(std::string_view name) {
  if (name.empty()) return false;
  if (name == "0" || name == "->") return false;
  if (std::isdigit(static_cast<unsigned char>(name.front()))) return false;
  for (char ch : name) {
    if (std::isspace(static_cast<unsigned char>(ch))) return false;
    if (ch == '+' || ch == '#') return false;
  }
  return true;
}

Crn Crn::make(std::vector<Species> declared, const std::vector<ReactionDraft>& reactions) {
  auto fail = [](const std::string& msg) { throw std::invalid_argument("crn: " + msg); };

  // Auto-declare species that only appear in reactions.
  std::set<std::string> seen;
  for (const auto& s : declared) seen.insert(s.name);
  for (const auto& r : reactions) {
    for (const auto* side : {&r.lhs, &r.rhs}) {
      for (const auto& [coeff, name] : *side) {
        (void)coeff;
        if (seen.insert(name).second) {
          declared.push_back({name, SpeciesKind::Auxiliary, 0});
        }
      }
    }
  }

  Crn crn;

  // Validate and bucket the species.
  std::map<int, Species> inputs, outputs;
  std::vector<Species> leaders, aux;
  std::set<std::string> names;
  for (auto& s : declared) {
    if (!valid_species_name(s.name)) fail("bad species name '" + s.name + "'");
    if (!names.insert(s.name).second) fail("duplicate species '" + s.name + "'");
    switch (s.kind) {
      case SpeciesKind::Input:
        if (!inputs.emplace(s.index, s).second) fail("duplicate input index");
        break;
      case SpeciesKind::Output:
        if (!outputs.emplace(s.index, s).second) fail("duplicate output index");
        break;
      case SpeciesKind::Leader:
        leaders.push_back(s);
        break;
      case SpeciesKind::Auxiliary:
        aux.push_back(s);
        break;
    }
  }
  int want = 1;
  for (const auto& [idx, s] : inputs) {
    (void)s;
    if (idx != want++) fail("input indices must be 1..d");
  }
  want = 1;
  for (const auto& [idx, s] : outputs) {
    (void)s;
    if (idx != want++) fail("output indices must be 1..k");
  }
  if (outputs.empty()) fail("a network needs an output species");
  if (leaders.size() > 1) fail("at most one leader");
  std::sort(aux.begin(), aux.end(),
            [](const Species& a, const Species& b) { return a.name < b.name; });

  for (const auto& [idx, s] : inputs) { (void)idx; crn.species_.push_back(s); }
  for (const auto& [idx, s] : outputs) { (void)idx; crn.species_.push_back(s); }
  for (const auto& s : leaders) crn.species_.push_back(s);
  for (const auto& s : aux) crn.species_.push_back(s);

  for (int pos = 0; pos < static_cast<int>(crn.species_.size()); ++pos) {
    const Species& s = crn.species_[pos];
    crn.by_name_[s.name] = pos;
    switch (s.kind) {
      case SpeciesKind::Input: crn.inputs_.push_back(pos); break;
      case SpeciesKind::Output: crn.outputs_.push_back(pos); break;
      case SpeciesKind::Leader: crn.leader_ = pos; break;
      case SpeciesKind::Auxiliary: break;
    }
  }

  // Build dense reaction vectors in canonical species order.
  const size_t ns = crn.species_.size();
  for (const auto& draft : reactions) {
    Reaction r;
    r.reactants.assign(ns, 0);
    r.products.assign(ns, 0);
    auto add = [&](std::vector<int64_t>& side, const std::pair<int64_t, std::string>& term) {
      if (term.first < 0) fail("negative coefficient");
      side[crn.by_name_.at(term.second)] += term.first;
    };
    for (const auto& t : draft.lhs) add(r.reactants, t);
    for (const auto& t : draft.rhs) add(r.products, t);
    if (r.reactants == r.products) fail("reaction with identical sides");
    crn.reactions_.push_back(std::move(r));
  }
  std::sort(crn.reactions_.begin(), crn.reactions_.end(),
            [](const Reaction& a, const Reaction& b) {
              if (a.reactants != b.reactants) return a.reactants < b.reactants;
              return a.products < b.products;
            });
  crn.reactions_.erase(std::unique(crn.reactions_.begin(), crn.reactions_.end()),
                       crn.reactions_.end());
  return crn;
}

int Crn::species_index(std::string_view name) const {
  auto it = by_name_.find(std::string(name));
  return it == by_name_.end() ? -1 : it->second;
}

Configuration initial_configuration(const Crn& crn, std::span<const long long> x) {
  if (static_cast<int>(x.size()) != crn.dimension())
    throw std::invalid_argument("initial_configuration: input has wrong dimension");
  Configuration c(crn.species_count(), 0);
  for (int axis = 1; axis <= crn.dimension(); ++axis) {
    long long v = x[axis - 1];
    if (v < 0) throw std::invalid_argument("initial_configuration: negative input count");
    c[crn.input_position(axis)] = static_cast<int32_t>(v);
  }
  if (crn.has_leader()) c[crn.leader_position()] = 1;
  return c;
}

bool applicable(const Configuration& c, const Reaction& r) {
  for (size_t i = 0; i < c.size(); ++i)
    if (c[i] < r.reactants[i]) return false;
  return true;
}

Configuration apply_reaction(const Configuration& c, const Reaction& r) {
  if (!applicable(c, r)) throw std::domain_error("apply: reaction not applicable");
  Configuration out(c);
  for (size_t i = 0; i < c.size(); ++i) {
    int64_t v = static_cast<int64_t>(out[i]) - r.reactants[i] + r.products[i];
    if (v > (1LL << 30)) throw std::overflow_error("apply: species count overflow");
    out[i] = static_cast<int32_t>(v);
  }
  return out;
}

bool is_output_oblivious(const Crn& crn) {
  for (const auto& r : crn.reactions())
    for (int k = 1; k <= crn.output_count(); ++k)
      if (r.reactants[crn.output_position(k)] != 0) return false;
  return true;
}

bool is_output_monotonic(const Crn& crn) {
  for (const auto& r : crn.reactions())
    for (int k = 1; k <= crn.output_count(); ++k) {
      int pos = crn.output_position(k);
      if (r.products[pos] < r.reactants[pos]) return false;
    }
  return true;
}

long long output_count_of(const Crn& crn, const Configuration& c) {
  return c[crn.output_position()];
}

std::string format_configuration(const Crn& crn, const Configuration& c) {
  std::string out;
  for (int i = 0; i < crn.species_count(); ++i) {
    if (i) out += ' ';
    out += crn.species(i).name;
    out += ':';
    out += std::to_string(c[i]);
  }
  return out;
}

}  // namespace obliv
