#include "oblivcrn/compose.hpp"

#include <functional>
#include <stdexcept>

namespace obliv {

namespace {

// Rebuild a Crn with renamed species.
Crn rename_species(const Crn& crn, const std::function<std::string(const Species&)>& rename,
                   const std::function<SpeciesKind(const Species&)>& rekind) {
  std::vector<Species> declared;
  std::vector<std::string> new_name(crn.species_count());
  for (int i = 0; i < crn.species_count(); ++i) {
    const Species& s = crn.species(i);
    Species t = s;
    t.name = rename(s);
    t.kind = rekind(s);
    if (t.kind == SpeciesKind::Auxiliary || t.kind == SpeciesKind::Leader) t.index = 0;
    new_name[i] = t.name;
    declared.push_back(std::move(t));
  }
  std::vector<ReactionDraft> drafts;
  for (const auto& r : crn.reactions()) {
    ReactionDraft d;
    for (int i = 0; i < crn.species_count(); ++i) {
      if (r.reactants[i]) d.lhs.emplace_back(r.reactants[i], new_name[i]);
      if (r.products[i]) d.rhs.emplace_back(r.products[i], new_name[i]);
    }
    drafts.push_back(std::move(d));
  }
  return Crn::make(std::move(declared), drafts);
}

}  // namespace

Crn namespace_crn(const Crn& crn, const std::string& prefix, const std::set<std::string>& keep) {
  return rename_species(
      crn,
      [&](const Species& s) {
        return keep.count(s.name) ? s.name : prefix + "::" + s.name;
      },
      [](const Species& s) { return s.kind; });
}

Crn concatenate(const Crn& upstream, const Crn& downstream, std::string* warning) {
  if (upstream.output_count() != 1 || downstream.output_count() != 1)
    throw std::invalid_argument("concatenate: both sides need exactly one output");
  if (downstream.dimension() != 1)
    throw std::invalid_argument("concatenate: downstream must have exactly one input");
  if (warning) warning->clear();
  if (!is_output_oblivious(upstream) && warning)
    *warning = "upstream network is not output-oblivious; composition may misbehave";

  const std::string junction = "f::" + upstream.species(upstream.output_position()).name;

  std::vector<Species> declared;
  std::vector<ReactionDraft> drafts;

  auto absorb = [&](const Crn& side, const std::string& prefix, bool is_upstream) {
    std::vector<std::string> new_name(side.species_count());
    for (int i = 0; i < side.species_count(); ++i) {
      const Species& s = side.species(i);
      Species t = s;
      if (is_upstream && s.kind == SpeciesKind::Input) {
        // Composite inputs keep their root names.
      } else if (is_upstream && s.kind == SpeciesKind::Output) {
        t = {junction, SpeciesKind::Auxiliary, 0};
      } else if (!is_upstream && s.kind == SpeciesKind::Input) {
        t = {junction, SpeciesKind::Auxiliary, 0};
      } else if (!is_upstream && s.kind == SpeciesKind::Output) {
        // Composite output keeps its root name.
      } else if (s.kind == SpeciesKind::Leader) {
        t = {prefix + "::" + s.name, SpeciesKind::Auxiliary, 0};
      } else {
        t = {prefix + "::" + s.name, SpeciesKind::Auxiliary, 0};
      }
      new_name[i] = t.name;
      // The junction species is declared once (when absorbing upstream).
      if (!(is_upstream == false && s.kind == SpeciesKind::Input)) declared.push_back(t);
    }
    for (const auto& r : side.reactions()) {
      ReactionDraft d;
      for (int i = 0; i < side.species_count(); ++i) {
        if (r.reactants[i]) d.lhs.emplace_back(r.reactants[i], new_name[i]);
        if (r.products[i]) d.rhs.emplace_back(r.products[i], new_name[i]);
      }
      drafts.push_back(std::move(d));
    }
  };

  absorb(upstream, "f", true);
  absorb(downstream, "g", false);

  if (upstream.has_leader() || downstream.has_leader()) {
    declared.push_back({"L", SpeciesKind::Leader, 0});
    ReactionDraft release;
    release.lhs.emplace_back(1, "L");
    if (upstream.has_leader())
      release.rhs.emplace_back(1, "f::" + upstream.species(upstream.leader_position()).name);
    if (downstream.has_leader())
      release.rhs.emplace_back(1, "g::" + downstream.species(downstream.leader_position()).name);
    drafts.push_back(std::move(release));
  }
  return Crn::make(std::move(declared), drafts);
}

Crn monotonic_to_oblivious(const Crn& crn) {
  if (crn.output_count() != 1)
    throw std::invalid_argument("monotonic_to_oblivious: needs exactly one output");
  if (!is_output_monotonic(crn))
    throw std::invalid_argument("monotonic_to_oblivious: network decreases its output");
  if (is_output_oblivious(crn)) return crn;

  // Fresh catalyst name.
  std::string z = "Z";
  while (crn.species_index(z) != -1) z += "'";

  const int y = crn.output_position();
  std::vector<Species> declared(crn.species().begin(), crn.species().end());
  declared.push_back({z, SpeciesKind::Auxiliary, 0});
  std::vector<ReactionDraft> drafts;
  for (const auto& r : crn.reactions()) {
    int64_t k = r.reactants[y];
    int64_t net = r.products[y] - k;
    ReactionDraft d;
    for (int i = 0; i < crn.species_count(); ++i) {
      int64_t cr = r.reactants[i], cp = r.products[i];
      if (i == y) { cr = 0; cp = net; }
      if (cr) d.lhs.emplace_back(cr, crn.species(i).name);
      if (cp) d.rhs.emplace_back(cp, crn.species(i).name);
    }
    if (k) d.lhs.emplace_back(k, z);
    if (k + net) d.rhs.emplace_back(k + net, z);
    drafts.push_back(std::move(d));
  }
  return Crn::make(std::move(declared), drafts);
}

}  // namespace obliv
