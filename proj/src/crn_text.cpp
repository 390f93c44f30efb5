#include "oblivcrn/crn_text.hpp"

#include <cctype>
#include <sstream>
#include <vector>

namespace obliv {

namespace {

std::string format_side(const Crn& crn, const std::vector<int64_t>& side) {
  std::string out;
  bool any = false;
  for (size_t i = 0; i < side.size(); ++i) {
    if (side[i] == 0) continue;
    if (any) out += " + ";
    if (side[i] != 1) {
      out += std::to_string(side[i]);
      out += ' ';
    }
    out += crn.species(static_cast<int>(i)).name;
    any = true;
  }
  return any ? out : "0";
}

std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (std::isspace(static_cast<unsigned char>(ch))) {
      if (!cur.empty()) out.push_back(std::move(cur)), cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s)
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  return true;
}

std::vector<std::pair<int64_t, std::string>> parse_side(const std::string& text, int line_no) {
  auto fail = [&](const std::string& msg) {
    throw ParseError("line " + std::to_string(line_no) + ": " + msg);
  };
  std::vector<std::pair<int64_t, std::string>> terms;
  // Split on '+' at top level; species names cannot contain '+'.
  std::vector<std::string> chunks;
  std::string cur;
  for (char ch : text) {
    if (ch == '+') {
      chunks.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  chunks.push_back(cur);

  if (chunks.size() == 1) {
    auto toks = split_ws(chunks[0]);
    if (toks.size() == 1 && toks[0] == "0") return terms;  // empty side
  }
  for (const auto& chunk : chunks) {
    auto toks = split_ws(chunk);
    if (toks.empty()) fail("empty term");
    int64_t coeff = 1;
    std::string name;
    if (toks.size() == 1) {
      name = toks[0];
    } else if (toks.size() == 2 && all_digits(toks[0])) {
      coeff = std::stoll(toks[0]);
      if (coeff < 1) fail("coefficient must be at least 1");
      name = toks[1];
    } else {
      fail("malformed term '" + chunk + "'");
    }
    if (!valid_species_name(name)) fail("bad species name '" + name + "'");
    terms.emplace_back(coeff, name);
  }
  return terms;
}

}  // namespace

std::string print_reaction(const Crn& crn, const Reaction& r) {
  return format_side(crn, r.reactants) + " -> " + format_side(crn, r.products);
}

std::string print_crn(const Crn& crn) {
  if (crn.output_count() != 1)
    throw std::invalid_argument("print_crn: text format requires exactly one output");
  std::ostringstream os;
  if (crn.dimension() > 0) {
    os << "inputs:";
    for (int axis = 1; axis <= crn.dimension(); ++axis)
      os << ' ' << crn.species(crn.input_position(axis)).name;
    os << '\n';
  }
  os << "output: " << crn.species(crn.output_position()).name << '\n';
  if (crn.has_leader())
    os << "leader: " << crn.species(crn.leader_position()).name << '\n';
  for (const auto& r : crn.reactions()) os << print_reaction(crn, r) << '\n';
  return os.str();
}

Crn parse_crn(std::string_view text) {
  std::vector<Species> declared;
  std::vector<ReactionDraft> reactions;
  bool saw_inputs = false, saw_output = false, saw_leader = false;

  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    auto fail = [&](const std::string& msg) {
      throw ParseError("line " + std::to_string(line_no) + ": " + msg);
    };
    std::string line = raw.substr(0, raw.find('#'));
    auto toks = split_ws(line);
    if (toks.empty()) continue;

    if (toks[0] == "inputs:" || toks[0] == "output:" || toks[0] == "leader:") {
      std::vector<std::string> names(toks.begin() + 1, toks.end());
      for (const auto& n : names)
        if (!valid_species_name(n)) fail("bad species name '" + n + "'");
      if (toks[0] == "inputs:") {
        if (saw_inputs) fail("duplicate inputs header");
        if (names.empty()) fail("inputs header needs at least one species");
        saw_inputs = true;
        int axis = 1;
        for (const auto& n : names) declared.push_back({n, SpeciesKind::Input, axis++});
      } else if (toks[0] == "output:") {
        if (saw_output) fail("duplicate output header");
        if (names.size() != 1) fail("output header needs exactly one species");
        saw_output = true;
        declared.push_back({names[0], SpeciesKind::Output, 1});
      } else {
        if (saw_leader) fail("duplicate leader header");
        if (names.size() != 1) fail("leader header needs exactly one species");
        saw_leader = true;
        declared.push_back({names[0], SpeciesKind::Leader, 0});
      }
      continue;
    }

    size_t arrow = line.find("->");
    if (arrow == std::string::npos) fail("expected a reaction or header");
    if (line.find("->", arrow + 2) != std::string::npos) fail("more than one '->'");
    ReactionDraft draft;
    draft.lhs = parse_side(line.substr(0, arrow), line_no);
    draft.rhs = parse_side(line.substr(arrow + 2), line_no);
    reactions.push_back(std::move(draft));
  }
  if (!saw_output) throw ParseError("missing output header");
  try {
    return Crn::make(std::move(declared), reactions);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

}  // namespace obliv
