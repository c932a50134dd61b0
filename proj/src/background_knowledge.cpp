#include "axp/background_knowledge.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "axp/logic.hpp"

namespace axp {

Formula Constraint::formula() const {
  std::vector<Formula> kids;
  for (Literal l : body) kids.push_back(Formula::lit(l));
  Formula conj = Formula::conjunction(std::move(kids));
  if (kind == Kind::Forbid) return Formula::negation(std::move(conj));
  return Formula::implication(std::move(conj), Formula::lit(head));
}

std::string Constraint::to_string(const FeatureSpace& space) const {
  std::ostringstream os;
  if (kind == Kind::Forbid) os << "forbid ";
  for (std::size_t i = 0; i < body.size(); ++i) {
    if (i) os << " & ";
    os << format_literal(body[i], space);
  }
  if (kind == Kind::Implication) os << " -> " << format_literal(head, space);
  return os.str();
}

ConstraintSet::ConstraintSet(std::vector<Constraint> constraints)
    : constraints_(std::move(constraints)) {
  for (const Constraint& c : constraints_) formulas_.push_back(c.formula());
}

ConstraintSet ConstraintSet::validated(std::vector<Constraint> constraints, int n) {
  ConstraintSet k(std::move(constraints));
  if (!satisfiable(k.formulas(), {}, n)) {
    throw DomainError("background knowledge is unsatisfiable: [[K]] is empty");
  }
  return k;
}

bool check_real(const ConstraintSet& k, Individual x) {
  for (const Formula& f : k.formulas()) {
    if (!f.evaluate(x)) return false;
  }
  return true;
}

RealPopulation real_individuals(const ConstraintSet& k, int n) {
  if (n > kFeatureCap) throw CapError("feature count exceeds cap");
  RealPopulation pop;
  std::uint32_t full = n >= 32 ? ~0u : ((1u << n) - 1u);
  detail::any_completion(full, 0, [&](Individual x) {
    if (check_real(k, x)) pop.members.push_back(x);
    return false;
  });
  if (pop.members.empty()) throw DomainError("[[K]] is empty");
  return pop;
}

bool mentions(const ConstraintSet& k, int v, int n) {
  return std::any_of(k.formulas().begin(), k.formulas().end(),
                     [&](const Formula& f) { return !is_independent(f, v, n); });
}

namespace {

int support(const std::vector<Individual>& data, const PartialAssignment& pattern) {
  int count = 0;
  for (Individual row : data) {
    if (pattern.consistent_with(row)) ++count;
  }
  return count;
}

void combinations(int n, int a, int start, std::vector<int>& cur,
                  const std::function<void(const std::vector<int>&)>& fn) {
  if (static_cast<int>(cur.size()) == a) {
    fn(cur);
    return;
  }
  for (int f = start; f < n; ++f) {
    cur.push_back(f);
    combinations(n, a, f + 1, cur, fn);
    cur.pop_back();
  }
}

}  // namespace

ConstraintSet mine_forbidden_patterns(const std::vector<Individual>& data, int n,
                                      int max_arity) {
  if (data.empty()) throw DomainError("cannot mine an empty dataset");
  if (n > kFeatureCap) throw CapError("feature count exceeds cap");
  max_arity = std::min(max_arity, n);

  // Ascending arity: a pattern already mined subsumes every extension, so
  // skipping subsumed candidates leaves exactly the minimal ones.
  std::vector<PartialAssignment> mined;
  for (int a = 1; a <= max_arity; ++a) {
    std::vector<int> cur;
    combinations(n, a, 0, cur, [&](const std::vector<int>& feats) {
      for (std::uint32_t pat = 0; pat < (1u << a); ++pat) {
        PartialAssignment cand;
        for (int j = 0; j < a; ++j) {
          cand.assign({feats[j], ((pat >> j) & 1u) != 0});
        }
        bool subsumed = std::any_of(mined.begin(), mined.end(),
                                    [&](const PartialAssignment& m) {
                                      return m.subset_of(cand);
                                    });
        if (!subsumed && support(data, cand) == 0) mined.push_back(cand);
      }
    });
  }

  std::sort(mined.begin(), mined.end(), lexicographic_less);
  std::vector<Constraint> out;
  for (const PartialAssignment& m : mined) {
    out.push_back({Constraint::Kind::Forbid, m.literals(), {}});
  }
  return ConstraintSet(std::move(out));
}

namespace {

std::vector<std::string> split_trim(const std::string& s, const std::string& sep) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (true) {
    std::size_t next = s.find(sep, pos);
    std::string tok = s.substr(pos, next == std::string::npos ? next : next - pos);
    std::size_t b = tok.find_first_not_of(" \t\r");
    std::size_t e = tok.find_last_not_of(" \t\r");
    out.push_back(b == std::string::npos ? "" : tok.substr(b, e - b + 1));
    if (next == std::string::npos) break;
    pos = next + sep.size();
  }
  return out;
}

}  // namespace

ConstraintSet parse_bk(const std::string& text, const FeatureSpace& space) {
  std::vector<Constraint> constraints;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::size_t b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    std::size_t e = line.find_last_not_of(" \t\r");
    line = line.substr(b, e - b + 1);

    auto at = [&](const std::string& msg) {
      return ParseError("BK line " + std::to_string(lineno) + ": " + msg);
    };
    Constraint c;
    std::string body_text;
    if (line.rfind("forbid ", 0) == 0) {
      c.kind = Constraint::Kind::Forbid;
      body_text = line.substr(7);
    } else if (std::size_t arrow = line.find("->"); arrow != std::string::npos) {
      c.kind = Constraint::Kind::Implication;
      body_text = line.substr(0, arrow);
      auto head_toks = split_trim(line.substr(arrow + 2), "&");
      if (head_toks.size() != 1 || head_toks[0].empty()) {
        throw at("implication head must be a single literal");
      }
      c.head = parse_literal(head_toks[0], space);
    } else {
      throw at("expected 'forbid ...' or '... -> lit'");
    }
    for (const std::string& tok : split_trim(body_text, "&")) {
      if (tok.empty()) throw at("empty literal");
      c.body.push_back(parse_literal(tok, space));
    }
    if (c.body.empty()) throw at("empty constraint body");
    constraints.push_back(std::move(c));
  }
  return ConstraintSet::validated(std::move(constraints), space.size());
}

std::string serialize_bk(const ConstraintSet& k, const FeatureSpace& space) {
  std::ostringstream os;
  for (const Constraint& c : k.constraints()) os << c.to_string(space) << '\n';
  return os.str();
}

}  // namespace axp
