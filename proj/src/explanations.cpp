#include "axp/explanations.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

#include "axp/logic.hpp"

namespace axp {

bool is_explanation(const DecisionProcess& m, const PartialAssignment& xp, bool d,
                    const ConstraintSet* k) {
  return !exists_flip(m, xp, d, k);
}

std::vector<int> ascending_order(int n) {
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  return order;
}

std::pair<Explanation, ExplanationTrace> compute_explanation(
    const DecisionProcess& m, Individual x, const std::vector<int>& order,
    const ConstraintSet* k) {
  int n = m.feature_count();
  if (static_cast<int>(order.size()) != n) {
    throw DomainError("order must be a permutation of all features");
  }
  std::uint32_t seen = 0;
  for (int f : order) {
    if (f < 0 || f >= n || (seen & (1u << f))) {
      throw DomainError("order must be a permutation of all features");
    }
    seen |= 1u << f;
  }
  if (k && !check_real(*k, x)) {
    throw DomainError("not a real individual: subject violates the background knowledge");
  }

  bool d = m.decide(x);
  PartialAssignment xp = PartialAssignment::all_of(x, n);
  ExplanationTrace trace{x, {}};
  for (int f : order) {
    PartialAssignment candidate = xp.without(f);
    bool flip = exists_flip(m, candidate, d, k);
    if (!flip) xp = candidate;
    trace.steps.push_back({f, flip, flip});
  }
  return {Explanation{xp, d, k != nullptr, false}, trace};
}

std::vector<Explanation> enumerate_minimal_explanations(
    const DecisionProcess& m, Individual x, const ConstraintSet* k) {
  int n = m.feature_count();
  if (n > kFeatureCap) throw CapError("feature count exceeds cap");
  if (k && !check_real(*k, x)) {
    throw DomainError("not a real individual: subject violates the background knowledge");
  }
  bool d = m.decide(x);

  // Ascending-cardinality lattice scan. Sufficiency is monotone upward, so a
  // sufficient subset none of whose predecessors was sufficient is minimal,
  // and every strict superset of a found explanation can be skipped.
  std::vector<std::uint32_t> masks(std::size_t{1} << n);
  std::iota(masks.begin(), masks.end(), 0u);
  std::stable_sort(masks.begin(), masks.end(), [](std::uint32_t a, std::uint32_t b) {
    return std::popcount(a) < std::popcount(b);
  });

  std::vector<Explanation> found;
  for (std::uint32_t mask : masks) {
    bool covered = std::any_of(found.begin(), found.end(), [&](const Explanation& e) {
      return (e.literals.mask & mask) == e.literals.mask;
    });
    if (covered) continue;
    PartialAssignment xp{mask, x.bits & mask};
    if (is_explanation(m, xp, d, k)) {
      found.push_back(Explanation{xp, d, k != nullptr, false});
    }
  }
  std::sort(found.begin(), found.end(), [](const Explanation& a, const Explanation& b) {
    return lexicographic_less(a.literals, b.literals);
  });
  return found;
}

std::string render_trace(const ExplanationTrace& trace, const FeatureSpace& space) {
  int n = space.size();
  std::size_t step_width = std::max<std::size_t>(5, std::to_string(trace.steps.size()).size());
  std::ostringstream os;

  auto pad = [&](const std::string& s, std::size_t w) {
    std::string out = s;
    while (out.size() < w) out.push_back(' ');
    return out;
  };

  os << pad("step", step_width);
  for (int f = 0; f < n; ++f) os << "  " << space.name(f);
  os << "  exists\n";

  std::uint32_t dropped = 0;
  auto row = [&](const std::string& label, std::uint32_t hidden, const char* verdict) {
    os << pad(label, step_width);
    for (int f = 0; f < n; ++f) {
      os << "  ";
      std::string pad_name(space.name(f).size() > 1 ? space.name(f).size() - 1 : 0, ' ');
      if ((hidden >> f) & 1u) {
        os << '?' << pad_name;
      } else {
        os << (trace.subject.value(f) ? '1' : '0') << pad_name;
      }
    }
    os << "  " << verdict << '\n';
  };

  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const TraceStep& s = trace.steps[i];
    row(std::to_string(i + 1), dropped | (1u << s.feature), s.flip_exists ? "T" : "F");
    if (!s.kept) dropped |= 1u << s.feature;
  }
  row("final", dropped, "");
  return os.str();
}

}  // namespace axp
