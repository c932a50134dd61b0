#pragma once

#include <span>

#include "axp/formula.hpp"

namespace axp {

/// True iff some total assignment over n features extends `fixed` and
/// satisfies every formula. Enumerates only the unfixed features that some
/// formula actually mentions; the rest cannot affect satisfaction.
bool satisfiable(std::span<const Formula> fs, const PartialAssignment& fixed, int n);

/// fs, assumptions |= goal. Equals !satisfiable(fs, assumptions + !goal, n).
bool entails(std::span<const Formula> fs, const PartialAssignment& assumptions,
             Literal goal, int n);

/// True iff flipping v never changes the evaluation of f.
bool is_independent(const Formula& f, int v, int n);

namespace detail {

/// Invokes fn(Individual) for every completion of `base` over the features in
/// free_mask (features outside both are left 0). Stops early when fn returns
/// true; returns whether any call did.
template <typename Fn>
bool any_completion(std::uint32_t free_mask, std::uint32_t base_bits, Fn&& fn) {
  std::vector<int> free;
  for (int f = 0; f < 32; ++f) {
    if ((free_mask >> f) & 1u) free.push_back(f);
  }
  std::uint64_t count = 1ull << free.size();
  for (std::uint64_t i = 0; i < count; ++i) {
    std::uint32_t bits = base_bits;
    for (std::size_t j = 0; j < free.size(); ++j) {
      if ((i >> j) & 1u) bits |= 1u << free[j];
    }
    if (fn(Individual{bits})) return true;
  }
  return false;
}

}  // namespace detail
}  // namespace axp
