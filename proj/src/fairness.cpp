#include "axp/fairness.hpp"

#include <algorithm>
#include <sstream>

#include "axp/logic.hpp"

namespace axp {

FeaturePartition FeaturePartition::validated(std::uint32_t base, std::uint32_t prot,
                                             std::uint32_t equiv, int n) {
  std::uint32_t full = n >= 32 ? ~0u : ((1u << n) - 1u);
  if ((base & prot) || (base & equiv) || (prot & equiv)) {
    throw ParseError("partition parts must be disjoint");
  }
  if ((base | prot | equiv) != full) {
    throw ParseError("partition must cover every feature");
  }
  if (prot == 0) throw ParseError("protected part must be nonempty");
  return {base, prot, equiv};
}

MappingSpec MappingSpec::validated(bool source_value, bool target_value,
                                   std::vector<MappingRule> rules,
                                   const FeaturePartition& fp) {
  for (const MappingRule& r : rules) {
    if ((r.source.mask & fp.base) || (r.target.mask & fp.base)) {
      throw ParseError("mapping rules must not touch base features");
    }
  }
  for (std::size_t i = 0; i < rules.size(); ++i) {
    for (std::size_t j = i + 1; j < rules.size(); ++j) {
      if (rules[i].source == rules[j].source) {
        throw ParseError("ambiguous mapping: two rules share a source");
      }
    }
  }
  return {source_value, target_value, std::move(rules)};
}

std::optional<PartialAssignment> map_explanation(const MappingSpec& ms,
                                                 const FeaturePartition& fp,
                                                 const PartialAssignment& xp) {
  PartialAssignment base_part = xp.restricted(fp.base);
  PartialAssignment pe_part = xp.restricted(fp.pe());
  for (const MappingRule& r : ms.rules) {
    if (r.source == pe_part) return base_part.united(r.target);
  }
  return std::nullopt;
}

bool is_fairness_criterion(const MappingSpec& ms, const FeaturePartition& fp,
                           const PartialAssignment& xp) {
  auto mapped = map_explanation(ms, fp, xp);
  if (!mapped) return false;
  return xp.restricted(fp.base) == mapped->restricted(fp.base);
}

FairnessVerdict audit_individual_fairness(const DecisionProcess& m, Individual x,
                                          const MappingSpec& ms,
                                          const FeaturePartition& fp,
                                          const ConstraintSet* k) {
  FairnessVerdict verdict;
  verdict.subject = x;
  bool d = m.decide(x);
  bool saw_criterion = false;
  for (const Explanation& e : enumerate_minimal_explanations(m, x, k)) {
    if (!is_fairness_criterion(ms, fp, e.literals)) continue;
    saw_criterion = true;
    PartialAssignment counterpart = *map_explanation(ms, fp, e.literals);
    if (is_explanation(m, counterpart, d, k)) {
      verdict.fair = true;
      verdict.reason = FairnessReason::Fair;
      verdict.criterion = e;
      verdict.counterpart = counterpart;
      return verdict;
    }
  }
  verdict.reason = saw_criterion ? FairnessReason::CounterpartChangesDecision
                                 : FairnessReason::NoCriterion;
  return verdict;
}

MappingReport check_mapping_consistency(const MappingSpec& ms,
                                        const FeaturePartition& fp,
                                        const ConstraintSet& k, int n) {
  MappingReport report;
  for (std::size_t i = 0; i < ms.rules.size(); ++i) {
    for (std::size_t j = i + 1; j < ms.rules.size(); ++j) {
      if (ms.rules[i].target == ms.rules[j].target) {
        report.target_collisions.push_back(
            {ms.rules[i].source, ms.rules[j].source});
      }
    }
  }
  for (Individual x : real_individuals(k, n).members) {
    PartialAssignment pe_part = PartialAssignment::all_of(x, n).restricted(fp.pe());
    bool covered = std::any_of(ms.rules.begin(), ms.rules.end(),
                               [&](const MappingRule& r) { return r.source == pe_part; });
    if (!covered) report.uncovered.push_back(x);
  }
  return report;
}

namespace {

std::vector<std::string> tokens_of(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

PartialAssignment parse_literal_set(const std::string& text, const FeatureSpace& space) {
  std::size_t open = text.find('{'), close = text.find('}');
  if (open == std::string::npos || close == std::string::npos || close < open) {
    throw ParseError("expected {lit, lit, ...}: " + text);
  }
  PartialAssignment pa;
  std::string inner = text.substr(open + 1, close - open - 1);
  std::istringstream in(inner);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    std::size_t b = tok.find_first_not_of(" \t");
    if (b == std::string::npos) continue;
    std::size_t e = tok.find_last_not_of(" \t");
    if (!pa.assign(parse_literal(tok.substr(b, e - b + 1), space))) {
      throw ParseError("inconsistent literal set: " + text);
    }
  }
  return pa;
}

}  // namespace

FeaturePartition parse_partition(const std::string& text, const FeatureSpace& space) {
  std::optional<std::uint32_t> base, prot, equiv;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::size_t colon = line.find(':');
    if (colon == std::string::npos) throw ParseError("partition line needs ':'");
    std::string key = line.substr(0, colon);
    key.erase(std::remove_if(key.begin(), key.end(), ::isspace), key.end());
    std::uint32_t mask = 0;
    for (const std::string& name : tokens_of(line.substr(colon + 1))) {
      mask |= 1u << space.require(name);
    }
    if (key == "base") {
      base = mask;
    } else if (key == "protected") {
      prot = mask;
    } else if (key == "equivalence") {
      equiv = mask;
    } else {
      throw ParseError("unknown partition key: " + key);
    }
  }
  if (!base || !prot || !equiv) {
    throw ParseError("partition file needs base:, protected: and equivalence: lines");
  }
  return FeaturePartition::validated(*base, *prot, *equiv, space.size());
}

std::string serialize_partition(const FeaturePartition& fp, const FeatureSpace& space) {
  auto line = [&](const char* key, std::uint32_t mask) {
    std::string out = key;
    out += ":";
    for (int f = 0; f < space.size(); ++f) {
      if ((mask >> f) & 1u) out += " " + space.name(f);
    }
    return out + "\n";
  };
  return line("base", fp.base) + line("protected", fp.prot) +
         line("equivalence", fp.equiv);
}

MappingSpec parse_mapping(const std::string& text, const FeatureSpace& space,
                          const FeaturePartition& fp) {
  std::istringstream in(text);
  std::string line;
  std::optional<std::pair<bool, bool>> header;
  std::vector<MappingRule> rules;
  while (std::getline(in, line)) {
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto toks = tokens_of(line);
    if (toks.size() == 4 && toks[0] == "map" && toks[2] == "->") {
      auto value = [](const std::string& s) {
        if (s != "0" && s != "1") throw ParseError("map header values must be 0 or 1");
        return s == "1";
      };
      header = {value(toks[1]), value(toks[3])};
      continue;
    }
    std::size_t arrow = line.find("=>");
    if (arrow == std::string::npos) throw ParseError("mapping rule needs '=>'");
    rules.push_back({parse_literal_set(line.substr(0, arrow), space),
                     parse_literal_set(line.substr(arrow + 2), space)});
  }
  if (!header) throw ParseError("mapping file needs a 'map <v> -> <v>' header");
  return MappingSpec::validated(header->first, header->second, std::move(rules), fp);
}

std::string serialize_mapping(const MappingSpec& ms, const FeatureSpace& space) {
  std::ostringstream os;
  os << "map " << (ms.source_value ? 1 : 0) << " -> " << (ms.target_value ? 1 : 0)
     << "\n";
  auto set_text = [&](const PartialAssignment& pa) {
    std::string out = "{";
    bool first = true;
    for (Literal l : pa.literals()) {
      if (!first) out += ", ";
      out += format_literal(l, space);
      first = false;
    }
    return out + "}";
  };
  for (const MappingRule& r : ms.rules) {
    os << set_text(r.source) << " => " << set_text(r.target) << "\n";
  }
  return os.str();
}

}  // namespace axp
