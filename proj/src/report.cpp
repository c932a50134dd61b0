#include "axp/report.hpp"

#include <sstream>

#include "axp/dataset.hpp"

namespace axp {

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << std::hex;
  for (int i = 15; i >= 0; --i) os << ((h >> (i * 4)) & 0xf);
  return os.str();
}

std::string explanation_line(const Explanation& e, const FeatureSpace& space) {
  std::string out = format_assignment(e.literals, space);
  if (e.vacuous) out += " [vacuous]";
  return out;
}

namespace {

const char* class_name(ExplanationClass c) {
  switch (c) {
    case ExplanationClass::Unbiased:
      return "unbiased";
    case ExplanationClass::ExplicitlyBiased:
      return "explicitly-biased";
    case ExplanationClass::ProxyFactor:
      return "proxy-factor";
    case ExplanationClass::Vacuous:
      return "vacuous";
  }
  return "?";
}

const char* reason_name(FairnessReason r) {
  switch (r) {
    case FairnessReason::Fair:
      return "fair";
    case FairnessReason::NoCriterion:
      return "no-criterion-exists";
    case FairnessReason::CounterpartChangesDecision:
      return "counterpart-changes-decision";
  }
  return "?";
}

}  // namespace

std::string audit_report(const DecisionProcess& m, const std::vector<Individual>& subjects,
                         const AuditOptions& opts, const AuditRun& run) {
  const FeatureSpace& space = m.space();
  int n = space.size();
  int p = opts.protected_feature;
  std::ostringstream os;

  os << "== audit run ==\n";
  os << "command: " << run.command << "\n";
  for (const auto& [label, digest] : run.input_digests) {
    os << "input " << label << ": " << digest << "\n";
  }
  for (const auto& [key, value] : run.parameters) {
    os << "param " << key << ": " << value << "\n";
  }
  os << "protected: " << space.name(p) << "\n";

  for (Individual x : subjects) {
    bool d = m.decide(x);
    os << "\n== individual " << format_individual(x, space) << " ==\n";
    os << "decision: " << (d ? 1 : 0) << "\n";

    os << "\n-- explanations --\n";
    BiasVerdict explicit_verdict = audit_explicit_bias(m, x, p);
    for (const ExplanationEvidence& ev : explicit_verdict.evidence) {
      os << "  " << explanation_line(ev.explanation, space) << "\n";
    }

    os << "\n-- bias --\n";
    os << "explicit_bias: " << (explicit_verdict.explicit_bias ? "true" : "false")
       << "\n";
    if (opts.bk) {
      if (!check_real(*opts.bk, x)) {
        os << "bk_aware_bias: skipped (not a real individual)\n";
      } else {
        BiasVerdict bk_verdict = audit_bk_aware_bias(m, x, *opts.bk, p);
        os << "bk_aware_bias: " << (*bk_verdict.bk_aware_bias ? "true" : "false")
           << "\n";
        for (const ExplanationEvidence& ev : bk_verdict.evidence) {
          os << "  " << explanation_line(ev.explanation, space) << " : "
             << class_name(ev.cls);
          if (ev.cls == ExplanationClass::ProxyFactor) {
            os << " (" << space.name(p) << "=" << (ev.nu ? 1 : 0) << ")";
          }
          os << "\n";
        }
      }
    }

    if (opts.mapping && opts.partition) {
      os << "\n-- fairness --\n";
      const ConstraintSet* k = opts.bk;
      if (k && !check_real(*k, x)) {
        os << "fair: skipped (not a real individual)\n";
      } else {
        FairnessVerdict fv =
            audit_individual_fairness(m, x, *opts.mapping, *opts.partition, k);
        os << "fair: " << (fv.fair ? "true" : "false") << "\n";
        os << "reason: " << reason_name(fv.reason) << "\n";
        if (fv.criterion) {
          os << "criterion: " << explanation_line(*fv.criterion, space) << "\n";
          os << "counterpart: " << format_assignment(*fv.counterpart, space) << "\n";
        }
      }
    }
  }

  os << "\n== summary ==\n";
  std::optional<Individual> process_witness = is_process_biased(m, p);
  os << "process_biased: " << (process_witness ? "true" : "false") << "\n";
  if (process_witness) {
    os << "process_bias_witness: " << format_individual(*process_witness, space)
       << "\n";
  }
  if (opts.bk) {
    os << "\n-- proxy witnesses (context arity <= " << opts.context_arity
       << ", learned constraints describe the sample) --\n";
    for (const ProxyWitness& w :
         find_proxies(*opts.bk, p, opts.context_arity, n)) {
      os << "  q=" << space.name(w.proxy) << " ctx="
         << format_assignment(w.context, space) << " q:=" << (w.nu_q ? 1 : 0)
         << " => " << space.name(p) << ":=" << (w.nu_p ? 1 : 0) << "\n";
    }
  }
  return os.str();
}

}  // namespace axp
