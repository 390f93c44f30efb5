#include "oblivcrn/gadgets.hpp"

#include <stdexcept>

namespace obliv {

std::string class_suffix(std::span<const long long> cls) {
  std::string out;
  for (size_t i = 0; i < cls.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(cls[i]);
  }
  return out;
}

Crn compile_min(int k) {
  if (k < 1) throw std::invalid_argument("compile_min: k must be >= 1");
  std::vector<Species> declared;
  ReactionDraft r;
  for (int i = 1; i <= k; ++i) {
    std::string name = "X" + std::to_string(i);
    declared.push_back({name, SpeciesKind::Input, i});
    r.lhs.emplace_back(1, name);
  }
  declared.push_back({"Y", SpeciesKind::Output, 1});
  r.rhs.emplace_back(1, "Y");
  return Crn::make(std::move(declared), {r});
}

Crn compile_truncate(long long n, int d) {
  if (n < 0 || d < 1) throw std::invalid_argument("compile_truncate: bad arguments");
  std::vector<Species> declared;
  std::vector<ReactionDraft> drafts;
  for (int i = 1; i <= d; ++i) {
    std::string x = "X" + std::to_string(i);
    std::string y = "Y" + std::to_string(i);
    declared.push_back({x, SpeciesKind::Input, i});
    declared.push_back({y, SpeciesKind::Output, i});
    ReactionDraft r;
    r.lhs.emplace_back(n + 1, x);
    if (n > 0) r.rhs.emplace_back(n, x);
    r.rhs.emplace_back(1, y);
    drafts.push_back(std::move(r));
  }
  return Crn::make(std::move(declared), drafts);
}

Crn compile_fanout(int m, int d) {
  if (m < 1 || d < 1) throw std::invalid_argument("compile_fanout: bad arguments");
  std::vector<Species> declared;
  std::vector<ReactionDraft> drafts;
  int out_index = 1;
  for (int i = 1; i <= d; ++i) {
    std::string x = "X" + std::to_string(i);
    declared.push_back({x, SpeciesKind::Input, i});
    ReactionDraft r;
    r.lhs.emplace_back(1, x);
    for (int k = 1; k <= m; ++k) {
      std::string copy = x + "^" + std::to_string(k);
      declared.push_back({copy, SpeciesKind::Output, out_index++});
      r.rhs.emplace_back(1, copy);
    }
    drafts.push_back(std::move(r));
  }
  return Crn::make(std::move(declared), drafts);
}

Crn compile_indicator(int axis, long long j, int d) {
  if (d < 1 || axis < 1 || axis > d || j < 0)
    throw std::invalid_argument("compile_indicator: bad arguments");
  std::vector<Species> declared;
  declared.push_back({"A", SpeciesKind::Input, 1});
  declared.push_back({"B", SpeciesKind::Input, 2});
  for (int i = 1; i <= d; ++i)
    declared.push_back({"X" + std::to_string(i), SpeciesKind::Input, 2 + i});
  declared.push_back({"Y", SpeciesKind::Output, 1});

  ReactionDraft pass;
  pass.lhs.emplace_back(1, "A");
  pass.rhs.emplace_back(1, "Y");

  ReactionDraft gate;
  std::string x = "X" + std::to_string(axis);
  gate.lhs.emplace_back(j + 1, x);
  gate.lhs.emplace_back(1, "B");
  gate.rhs.emplace_back(j + 1, x);
  gate.rhs.emplace_back(1, "Y");
  return Crn::make(std::move(declared), {pass, gate});
}

std::vector<std::pair<int64_t, std::string>> emit_quilt_walk(const QuiltAffine& g,
                                                             const QuiltNames& names,
                                                             std::vector<ReactionDraft>& drafts) {
  if (static_cast<int>(names.inputs.size()) != g.dim)
    throw std::invalid_argument("emit_quilt_walk: name count mismatch");
  auto state = [&](std::span<const long long> cls) {
    return names.state_prefix + class_suffix(cls);
  };
  for (const auto& cls : quilt_classes(g)) {
    for (int axis = 1; axis <= g.dim; ++axis) {
      long long delta = quilt_delta(g, cls, axis);
      std::vector<long long> next = cls;
      next[axis - 1] = (next[axis - 1] + 1) % g.period;
      ReactionDraft r;
      r.lhs.emplace_back(1, state(cls));
      r.lhs.emplace_back(1, names.inputs[axis - 1]);
      r.rhs.emplace_back(1, state(next));
      if (delta > 0) r.rhs.emplace_back(delta, names.output);
      drafts.push_back(std::move(r));
    }
  }
  std::vector<long long> zero(g.dim, 0);
  long long base = quilt_eval(g, zero);
  std::vector<std::pair<int64_t, std::string>> bundle;
  if (base > 0) bundle.emplace_back(base, names.output);
  // A dimension-0 quilt is a constant: no walk, no state to seed.
  if (g.dim > 0) bundle.emplace_back(1, state(zero));
  return bundle;
}

Crn compile_quilt(const QuiltAffine& g) {
  QuiltReport report = quilt_validate(g);
  if (!report.ok) throw std::invalid_argument("compile_quilt: " + report.detail);
  for (const auto& cls : quilt_classes(g))
    if (quilt_eval(g, cls) < 0)
      throw std::invalid_argument("compile_quilt: negative value at class (" +
                                  class_suffix(cls) + ")");

  QuiltNames names;
  std::vector<Species> declared;
  for (int i = 1; i <= g.dim; ++i) {
    std::string x = g.dim == 1 ? "X" : "X" + std::to_string(i);
    names.inputs.push_back(x);
    declared.push_back({x, SpeciesKind::Input, i});
  }
  names.output = "Y";
  names.state_prefix = "L_";
  declared.push_back({"Y", SpeciesKind::Output, 1});
  declared.push_back({"L", SpeciesKind::Leader, 0});

  std::vector<ReactionDraft> drafts;
  auto bundle = emit_quilt_walk(g, names, drafts);
  ReactionDraft init;
  init.lhs.emplace_back(1, "L");
  init.rhs = bundle;
  drafts.push_back(std::move(init));
  return Crn::make(std::move(declared), drafts);
}

}  // namespace obliv
