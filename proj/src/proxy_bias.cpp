#include "axp/proxy_bias.hpp"

#include <algorithm>
#include <functional>

#include "axp/logic.hpp"

namespace axp {

bool is_biased_decision(const DecisionProcess& m, Individual x, int p) {
  return m.decide(x.flipped(p)) != m.decide(x);
}

BiasVerdict audit_explicit_bias(const DecisionProcess& m, Individual x, int p) {
  BiasVerdict verdict;
  verdict.subject = x;
  verdict.explicit_bias = true;
  for (const Explanation& e : enumerate_minimal_explanations(m, x)) {
    bool has_p = e.literals.mentions(p);
    verdict.evidence.push_back(
        {e, has_p ? ExplanationClass::ExplicitlyBiased : ExplanationClass::Unbiased,
         false});
    if (!has_p) verdict.explicit_bias = false;
  }
  return verdict;
}

std::optional<Individual> is_process_biased(const DecisionProcess& m, int p) {
  int n = m.feature_count();
  if (n > kFeatureCap) throw CapError("feature count exceeds cap");
  std::uint32_t full = n >= 32 ? ~0u : ((1u << n) - 1u);
  std::optional<Individual> witness;
  detail::any_completion(full, 0, [&](Individual x) {
    if (is_biased_decision(m, x, p)) {
      witness = x;
      return true;
    }
    return false;
  });
  return witness;
}

namespace {

void context_candidates(int n, std::uint32_t excluded, int max_arity,
                        const std::function<void(const PartialAssignment&)>& fn) {
  std::vector<int> allowed;
  for (int f = 0; f < n; ++f) {
    if (!((excluded >> f) & 1u)) allowed.push_back(f);
  }
  std::vector<int> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (static_cast<int>(cur.size()) <= max_arity) {
      std::uint32_t count = 1u << cur.size();
      for (std::uint32_t pat = 0; pat < count; ++pat) {
        PartialAssignment ctx;
        for (std::size_t j = 0; j < cur.size(); ++j) {
          ctx.assign({cur[j], ((pat >> j) & 1u) != 0});
        }
        fn(ctx);
      }
    }
    if (static_cast<int>(cur.size()) == max_arity) return;
    for (std::size_t i = start; i < allowed.size(); ++i) {
      cur.push_back(allowed[i]);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
}

}  // namespace

std::vector<ProxyWitness> find_proxies(const ConstraintSet& k, int p,
                                       int max_context_arity, int n) {
  if (max_context_arity > n - 2) {
    throw DomainError("context arity must leave room for p and q");
  }
  std::vector<ProxyWitness> out;
  std::span<const Formula> fs = k.formulas();
  for (int q = 0; q < n; ++q) {
    if (q == p) continue;
    context_candidates(n, (1u << p) | (1u << q), max_context_arity,
                       [&](const PartialAssignment& ctx) {
                         for (bool nu_q : {false, true}) {
                           for (bool nu_p : {false, true}) {
                             PartialAssignment with_q = ctx.with({q, nu_q});
                             if (entails(fs, ctx, {p, nu_p}, n)) continue;       // (iii)
                             if (!entails(fs, with_q, {p, nu_p}, n)) continue;   // (iv)
                             if (!satisfiable(fs, with_q, n)) continue;          // (v)
                             out.push_back({q, ctx, nu_q, nu_p});
                           }
                         }
                       });
  }
  std::sort(out.begin(), out.end(), [](const ProxyWitness& a, const ProxyWitness& b) {
    if (a.proxy != b.proxy) return a.proxy < b.proxy;
    if (!(a.context == b.context)) return lexicographic_less(a.context, b.context);
    if (a.nu_q != b.nu_q) return !a.nu_q;
    return !a.nu_p && b.nu_p;
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ProxyFactorResult is_factor_of_proxy_discrimination(const PartialAssignment& xp,
                                                    const ConstraintSet& k, int p,
                                                    int n) {
  if (xp.mentions(p)) return {};
  std::span<const Formula> fs = k.formulas();
  if (!satisfiable(fs, xp, n)) return {std::nullopt, true};
  for (bool nu : {false, true}) {
    if (entails(fs, xp, {p, nu}, n)) return {nu, false};
  }
  return {};
}

BiasVerdict audit_bk_aware_bias(const DecisionProcess& m, Individual x,
                                const ConstraintSet& k, int p) {
  if (!check_real(k, x)) {
    throw DomainError("not a real individual: subject violates the background knowledge");
  }
  BiasVerdict verdict;
  verdict.subject = x;
  verdict.explicit_bias = is_biased_decision(m, x, p);
  bool all_biased = true;
  for (const Explanation& e : enumerate_minimal_explanations(m, x, &k)) {
    ExplanationEvidence ev{e, ExplanationClass::Unbiased, false};
    if (e.literals.mentions(p)) {
      ev.cls = ExplanationClass::ExplicitlyBiased;
    } else {
      ProxyFactorResult factor = is_factor_of_proxy_discrimination(
          e.literals, k, p, m.feature_count());
      if (factor.vacuous) {
        ev.cls = ExplanationClass::Vacuous;
        all_biased = false;
      } else if (factor.nu) {
        ev.cls = ExplanationClass::ProxyFactor;
        ev.nu = *factor.nu;
      } else {
        all_biased = false;
      }
    }
    verdict.evidence.push_back(ev);
  }
  verdict.bk_aware_bias = all_biased;
  return verdict;
}

ModelOverride construct_biased_twin(std::shared_ptr<const DecisionProcess> m,
                                    const ConstraintSet& k, const ProxyWitness& w,
                                    int p) {
  int n = m->feature_count();
  if (is_process_biased(*m, p)) {
    throw DomainError("base model is already biased");
  }

  // First real individual (in table-index order) matching the witness
  // premises; condition (iv) then fixes its protected value.
  PartialAssignment premises = w.context.with({w.proxy, w.nu_q});
  std::optional<Individual> x0;
  for (std::uint32_t idx = 0; idx < (1u << n); ++idx) {
    Individual x = individual_from_index(idx, n);
    if (premises.consistent_with(x) && check_real(k, x)) {
      x0 = x;
      break;
    }
  }
  if (!x0) {
    throw std::logic_error("proxy witness has no real individual: witness is invalid");
  }
  if (x0->value(p) != w.nu_p) {
    throw std::logic_error("witness premises fail to fix the protected value");
  }
  Individual x0_prime = x0->flipped(p);
  std::map<Individual, bool> exceptions{{x0_prime, !m->decide(x0_prime)}};
  return ModelOverride(std::move(m), std::move(exceptions));
}

}  // namespace axp
