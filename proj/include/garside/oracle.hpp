#pragma once

/**
 * @file oracle.hpp
 * @brief Brute-force reference implementations for small Garside structures.
 *
 * Nothing here is meant to be fast.  Each function searches an explicit list
 * of simple elements (see enumerate_simples) and is only valid when that list
 * is complete.
 */

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "garside/conjugacy.hpp"
#include "garside/element.hpp"
#include "garside/enumeration.hpp"
#include "garside/simple_ops.hpp"
#include "garside/sliding.hpp"

namespace garside::oracle {

using garside::enumerate_simples;

namespace detail {

// The unique ≼-minimal (or ≼-maximal) candidate: one that divides (or is
// divided by) every other candidate.  Absent if there is none.
template <GarsideStructure C>
std::optional<SimpleOf<C>> extremal(const C& ctx, const std::vector<SimpleOf<C>>& candidates, Side side,
                                    bool minimal) {
  for (const auto& c : candidates) {
    bool ok = true;
    for (const auto& d : candidates) {
      if (!(minimal ? divides(ctx, c, d, side) : divides(ctx, d, c, side))) {
        ok = false;
        break;
      }
    }
    if (ok) return c;
  }
  return std::nullopt;
}

}  // namespace detail

/// s ∧ t (or ∧↰): the greatest common divisor among all listed simples.
template <GarsideStructure C>
SimpleOf<C> brute_force_gcd(const C& ctx, const SimpleOf<C>& s, const SimpleOf<C>& t, Side side,
                            const std::vector<SimpleOf<C>>& simples) {
  std::vector<SimpleOf<C>> common;
  for (const auto& d : simples) {
    if (divides(ctx, d, s, side) && divides(ctx, d, t, side)) common.push_back(d);
  }
  auto g = detail::extremal(ctx, common, side, false);
  if (!g) throw std::logic_error("brute_force_gcd: no greatest common divisor");
  return *g;
}

/// s ∨ t (or ∨↰): the least common multiple among all listed simples.
template <GarsideStructure C>
SimpleOf<C> brute_force_lcm(const C& ctx, const SimpleOf<C>& s, const SimpleOf<C>& t, Side side,
                            const std::vector<SimpleOf<C>>& simples) {
  std::vector<SimpleOf<C>> common;
  for (const auto& m : simples) {
    if (divides(ctx, s, m, side) && divides(ctx, t, m, side)) common.push_back(m);
  }
  auto l = detail::extremal(ctx, common, side, true);
  if (!l) throw std::logic_error("brute_force_lcm: no least common multiple");
  return *l;
}

/// Whether x attains the given summit infimum and supremum.
template <GarsideStructure C>
bool is_super_summit(const Element<C>& x, std::int64_t summit_inf, std::int64_t summit_sup) {
  return x.inf() == summit_inf && x.sup() == summit_sup;
}

/// Whether s is an indecomposable conjugator at v: s ≠ 1, v^s in a sliding
/// circuit, and no proper nontrivial prefix t of s has v^t in one.
template <GarsideStructure C>
bool is_indecomposable(const Element<C>& v, const SimpleOf<C>& s, const std::vector<SimpleOf<C>>& simples) {
  const C& ctx = v.context();
  if (is_trivial(ctx, s) || !in_sliding_circuit(conjugate_by_simple(v, s))) return false;
  for (const auto& t : simples) {
    if (is_trivial(ctx, t) || equal(ctx, t, s) || !divides(ctx, t, s, Side::left)) continue;
    if (in_sliding_circuit(conjugate_by_simple(v, t))) return false;
  }
  return true;
}

/// All indecomposable conjugators at v, in the order of `simples`.
template <GarsideStructure C>
std::vector<SimpleOf<C>> brute_force_arrows(const Element<C>& v, const std::vector<SimpleOf<C>>& simples) {
  std::vector<SimpleOf<C>> out;
  for (const auto& s : simples) {
    if (is_indecomposable(v, s, simples)) out.push_back(s);
  }
  return out;
}

/**
 * The pullback of a simple s at y = 𝔰(z) by its definition: the ≼-minimal
 * positive u with z^u super summit and s ≼ transport(z, u).  Such u is simple
 * when s is, so only simples are searched.
 */
template <GarsideStructure C>
Element<C> brute_force_pullback(const Element<C>& z, const SimpleOf<C>& s, const std::vector<SimpleOf<C>>& simples) {
  const C& ctx = z.context();
  const Element<C> target = from_simple(ctx, s);
  std::vector<SimpleOf<C>> candidates;
  for (const auto& u : simples) {
    const Element<C> ue = from_simple(ctx, u);
    if (!is_super_summit(conjugate_by_simple(z, u), z.inf(), z.sup())) continue;
    if (divides(target, transport(z, ue), Side::left)) candidates.push_back(u);
  }
  auto m = detail::extremal(ctx, candidates, Side::left, true);
  if (!m) throw std::logic_error("brute_force_pullback: no minimal candidate");
  return from_simple(ctx, *m);
}

/**
 * The ≼-minimal simple ρ with x^ρ attaining the targets.  Throws if no simple
 * element qualifies (the answer would then not be simple).
 */
template <GarsideStructure C>
Element<C> brute_force_rho(const Element<C>& x, std::int64_t inf_target, std::int64_t sup_target,
                           const std::vector<SimpleOf<C>>& simples) {
  const C& ctx = x.context();
  std::vector<SimpleOf<C>> candidates;
  for (const auto& r : simples) {
    const Element<C> xr = conjugate_by_simple(x, r);
    if (xr.inf() >= inf_target && xr.sup() <= sup_target) candidates.push_back(r);
  }
  if (candidates.empty()) throw std::logic_error("brute_force_rho: minimal conjugator is not simple");
  auto m = detail::extremal(ctx, candidates, Side::left, true);
  if (!m) throw std::logic_error("brute_force_rho: no minimal candidate");
  return from_simple(ctx, *m);
}

/// SC(x) found by the reference search over all simples.
template <GarsideStructure C>
std::vector<Element<C>> brute_force_sc(const Element<C>& x, std::size_t limit = kDefaultSimpleLimit) {
  SearchOptions options;
  options.simple_limit = limit;
  return naive_enumerate_sc(x, options).vertices;
}

}  // namespace garside::oracle
