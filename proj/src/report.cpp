#include "foundalog/report.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "foundalog/printer.hpp"
#include "foundalog/validate.hpp"

namespace foundalog {

namespace {

std::vector<std::string> sorted_strings(std::vector<GroundAtom> atoms) {
  std::vector<std::string> out;
  out.reserve(atoms.size());
  for (const GroundAtom& a : atoms) out.push_back(print(a));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

nlohmann::json founded_to_json(const Program& prog, const Interpretation& F) {
  std::vector<GroundAtom> t, f, ud;
  for (GroundAtom& a : atom_universe(prog, constants_of(prog))) {
    switch (F.truth(a)) {
      case Truth::True: t.push_back(std::move(a)); break;
      case Truth::False: f.push_back(std::move(a)); break;
      case Truth::Undef: ud.push_back(std::move(a)); break;
    }
  }
  return nlohmann::json{{"true", sorted_strings(std::move(t))},
                        {"false", sorted_strings(std::move(f))},
                        {"undefined", sorted_strings(std::move(ud))}};
}

nlohmann::json models_to_json(const ConstraintModels& cm) {
  nlohmann::json out = nlohmann::json::array();
  for (const Interpretation& m : cm.models) {
    std::vector<GroundAtom> t(m.positives().begin(), m.positives().end());
    out.push_back(sorted_strings(std::move(t)));
  }
  return out;
}

std::string founded_text(const Program& prog, const Interpretation& F,
                         bool show_false) {
  // Bucket the universe by predicate, preserving universe order within each.
  std::map<PredKey, std::array<std::vector<GroundAtom>, 3>> by_pred;
  for (GroundAtom& a : atom_universe(prog, constants_of(prog))) {
    PredKey p{a.pred, a.args.size()};
    by_pred[p][(int)F.truth(a)].push_back(std::move(a));
  }

  std::ostringstream os;
  for (auto& [p, buckets] : by_pred) {
    os << p.name << "/" << p.arity << ":\n";
    auto section = [&](const char* label, const std::vector<GroundAtom>& as) {
      if (as.empty()) return;
      os << "  " << label << ":";
      for (const GroundAtom& a : as) os << " " << print(a);
      os << "\n";
    };
    section("true", buckets[(int)Truth::True]);
    section("undefined", buckets[(int)Truth::Undef]);
    const auto& falses = buckets[(int)Truth::False];
    if (!falses.empty() && prog.is_certain(p) && !show_false)
      os << "  false: (" << falses.size()
         << " atoms of a certain predicate hidden; use --show-false)\n";
    else
      section("false", falses);
  }
  return os.str();
}

std::string models_text(const ConstraintModels& cm) {
  std::ostringstream os;
  os << "constraint models: " << cm.models.size()
     << (cm.truncated ? " (truncated)" : "") << "\n";
  std::size_t i = 0;
  for (const Interpretation& m : cm.models) {
    os << "  model " << ++i << ": {";
    bool first = true;
    std::vector<GroundAtom> t(m.positives().begin(), m.positives().end());
    for (const std::string& s : sorted_strings(std::move(t))) {
      if (!first) os << ", ";
      os << s;
      first = false;
    }
    os << "}\n";
  }
  return os.str();
}

}  // namespace foundalog
