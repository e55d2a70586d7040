#pragma once

/**
 * @file sliding.hpp
 * @brief Preferred prefixes and suffixes, cyclic sliding in both directions,
 *        transport, pullback, minimal conjugators into the super summit set,
 *        and iterated sliding until the first repetition.
 */

#include <cstddef>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "garside/contract.hpp"
#include "garside/element.hpp"
#include "garside/simple_ops.hpp"

namespace garside {

#ifdef NDEBUG
inline constexpr bool kCheckedByDefault = false;
#else
inline constexpr bool kCheckedByDefault = true;
#endif

/// 𝔭(x) = ι(x) ∧ ∂(φ(x)).
template <GarsideStructure C>
SimpleOf<C> preferred_prefix(const Element<C>& x) {
  const C& ctx = x.context();
  return gcd(ctx, initial_factor(x, Side::left), right_complement(ctx, final_factor(x, Side::left)),
             Side::left);
}

/// 𝔭↰(x) = ι↰(x) ∧↰ ∂⁻¹(φ↰(x)).
template <GarsideStructure C>
SimpleOf<C> preferred_suffix(const Element<C>& x) {
  const C& ctx = x.context();
  return gcd(ctx, initial_factor(x, Side::right), left_complement(ctx, final_factor(x, Side::right)),
             Side::right);
}

/// 𝔰(x) = 𝔭(x)⁻¹·x·𝔭(x).
template <GarsideStructure C>
Element<C> cyclic_sliding(const Element<C>& x) {
  return conjugate_by_simple(x, preferred_prefix(x));
}

/// 𝔰↰(x) = 𝔭↰(x)·x·𝔭↰(x)⁻¹.
template <GarsideStructure C>
Element<C> cyclic_right_sliding(const Element<C>& x) {
  return conjugate_by_inverse_simple(x, preferred_suffix(x));
}

/// α^(1) = 𝔭(x)⁻¹·α·𝔭(x^α).
template <GarsideStructure C>
Element<C> transport(const Element<C>& x, const Element<C>& alpha) {
  detail::require_same_context(x, alpha);
  return multiply_simple(multiply_inverse_simple(alpha, preferred_prefix(x), Side::left),
                         preferred_prefix(conjugate(x, alpha)), Side::right);
}

/// α↰(1) = 𝔭↰(x^{α⁻¹})·α·𝔭↰(x)⁻¹.
template <GarsideStructure C>
Element<C> right_transport(const Element<C>& x, const Element<C>& alpha) {
  detail::require_same_context(x, alpha);
  const Element<C> conjugated = conjugate(x, invert(alpha));
  return multiply_inverse_simple(multiply_simple(alpha, preferred_suffix(conjugated), Side::left),
                                 preferred_suffix(x), Side::right);
}

namespace detail {

template <GarsideStructure C>
Element<C> pullback_with_prefix(const Element<C>& y, const SimpleOf<C>& prefix_of_z,
                                const Element<C>& s) {
  const SimpleOf<C> suffix = preferred_suffix(conjugate(y, s));
  const Element<C> w = multiply_inverse_simple(multiply_simple(s, prefix_of_z, Side::left), suffix,
                                               Side::right);
  return join_with_identity(w);
}

template <GarsideStructure C>
void check_pullback_inputs(const Element<C>& z, const Element<C>& y, const Element<C>& s) {
  if (!(cyclic_sliding(z) == y)) throw ContractViolation("pullback: y is not the sliding of z");
  if (!s.is_positive()) throw ContractViolation("pullback: s is not positive");
  const Element<C> ys = conjugate(y, s);
  if (ys.inf() != z.inf() || ys.sup() != z.sup()) {
    throw ContractViolation("pullback: y^s is not super summit");
  }
}

}  // namespace detail

/**
 * Pullback of s at y = 𝔰(z): (𝔭(z)·s·𝔭↰(y^s)⁻¹) ∨ 1.
 *
 * Requires z in a sliding circuit, s positive and y^s super summit.  With
 * `checked` these are verified (z's inf and sup serve as the summit values).
 */
template <GarsideStructure C>
Element<C> pullback_step(const Element<C>& z, const Element<C>& y, const Element<C>& s,
                         bool checked = kCheckedByDefault) {
  detail::require_same_context(z, y);
  detail::require_same_context(y, s);
  if (checked) detail::check_pullback_inputs(z, y, s);
  return detail::pullback_with_prefix(y, preferred_prefix(z), s);
}

/**
 * The ≼-minimal positive ρ with inf(x^ρ) ≥ inf_target and sup(x^ρ) ≤ sup_target.
 *
 * Each pass multiplies ρ by (1 ∨ x^ρΔ^{-sup_target}) ∨ (1 ∨ (x^ρ)⁻¹Δ^{inf_target}).
 * When `max_iterations` is given and exceeded, raises InternalInvariantError.
 */
template <GarsideStructure C>
Element<C> minimal_sss_conjugator(const Element<C>& x, std::int64_t inf_target, std::int64_t sup_target,
                                  std::optional<std::size_t> max_iterations = std::nullopt) {
  Element<C> rho(x.context());
  Element<C> current = x;
  std::size_t iterations = 0;
  while (current.inf() < inf_target || current.sup() > sup_target) {
    if (max_iterations && ++iterations > *max_iterations) {
      throw InternalInvariantError("minimal_sss_conjugator: iteration bound exceeded");
    }
    const Element<C> step = lcm(join_with_identity(current, sup_target),
                                join_with_identity(invert(current), -inf_target), Side::left);
    if (step.is_identity()) throw InternalInvariantError("minimal_sss_conjugator: no progress");
    rho = multiply(rho, step);
    current = conjugate(current, step);
  }
  return rho;
}

/// s⁰(x), s¹(x), ... up to (excluding) the first repeated value s^j(x) = s^i(x).
template <GarsideStructure C>
struct Trajectory {
  std::vector<Element<C>> elements;
  std::vector<SimpleOf<C>> prefixes;  // prefixes[k] = 𝔭(elements[k])
  std::size_t entry_index = 0;
  std::size_t period = 0;

  const Element<C>& entry() const { return elements[entry_index]; }
};

template <GarsideStructure C>
Trajectory<C> slide_to_first_repetition(const Element<C>& x) {
  Trajectory<C> out;
  std::unordered_map<Element<C>, std::size_t, ElementHash> seen;
  Element<C> current = x;
  for (;;) {
    auto [it, inserted] = seen.try_emplace(current, out.elements.size());
    if (!inserted) {
      out.entry_index = it->second;
      out.period = out.elements.size() - it->second;
      return out;
    }
    SimpleOf<C> prefix = preferred_prefix(current);
    Element<C> next = conjugate_by_simple(current, prefix);
    out.elements.push_back(std::move(current));
    out.prefixes.push_back(std::move(prefix));
    current = std::move(next);
  }
}

/// Whether x lies in its own sliding circuit, i.e. 𝔰^k(x) = x for some k > 0.
template <GarsideStructure C>
bool in_sliding_circuit(const Element<C>& x) {
  return slide_to_first_repetition(x).entry_index == 0;
}

}  // namespace garside
