#pragma once

/**
 * @file simple_ops.hpp
 * @brief Derived operations on simple elements, written only in terms of the
 *        atom-division contract.
 *
 * Whenever an algorithm needs "an atom a ≼ s" it scans the atoms in index
 * order and takes the first one that divides, so every result here is a
 * deterministic function of its inputs.
 */

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "garside/contract.hpp"

namespace garside {

template <GarsideStructure C>
using SimpleOf = typename C::Simple;

/// Divides s by the atom a on the given side: a⁻¹s for Side::left, s·a⁻¹ for
/// Side::right.  Absent when a does not divide s on that side.
template <GarsideStructure C>
std::optional<SimpleOf<C>> divide_by_atom(const C& ctx, Atom a, const SimpleOf<C>& s,
                                          Side side) {
  return side == Side::left ? ctx.divide_left(a, s) : ctx.divide_right(s, a);
}

/// Lowest-index atom dividing s on the given side, if any.
template <GarsideStructure C>
std::optional<Atom> first_atom_dividing(const C& ctx, const SimpleOf<C>& s, Side side) {
  const int atoms = ctx.atom_count();
  for (int i = 1; i <= atoms; ++i) {
    if (divide_by_atom(ctx, Atom{i}, s, side)) return Atom{i};
  }
  return std::nullopt;
}

/// s = 1 iff no atom left-divides s.
template <GarsideStructure C>
bool is_trivial(const C& ctx, const SimpleOf<C>& s) {
  return !first_atom_dividing(ctx, s, Side::left).has_value();
}

namespace detail {
// Strips atoms off s from the given side until nothing is left, applying the
// same division to d each time.
template <GarsideStructure C>
SimpleOf<C> strip_into(const C& ctx, SimpleOf<C> s, SimpleOf<C> d, Side side) {
  const int atoms = ctx.atom_count();
  for (int i = 1; i <= atoms;) {
    const Atom a{i};
    if (auto q = divide_by_atom(ctx, a, s, side)) {
      s = std::move(*q);
      d = *divide_by_atom(ctx, a, d, side);
      i = 1;
    } else {
      ++i;
    }
  }
  return d;
}
}  // namespace detail

/// ∂(s) = s⁻¹Δ.
template <GarsideStructure C>
SimpleOf<C> right_complement(const C& ctx, const SimpleOf<C>& s) {
  return detail::strip_into(ctx, s, SimpleOf<C>(ctx.delta()), Side::left);
}

/// ∂⁻¹(s) = Δs⁻¹.
template <GarsideStructure C>
SimpleOf<C> left_complement(const C& ctx, const SimpleOf<C>& s) {
  return detail::strip_into(ctx, s, SimpleOf<C>(ctx.delta()), Side::right);
}

/// τ^k(s) = Δ^{-k} s Δ^k, computed as ∂^{2k}.
template <GarsideStructure C>
SimpleOf<C> tau_power(const C& ctx, SimpleOf<C> s, std::int64_t k) {
  if constexpr (HasTauOrder<C>) {
    const std::int64_t order = ctx.tau_order();
    k %= order;
    if (k < 0) k += order;
  }
  for (; k > 0; --k) s = right_complement(ctx, right_complement(ctx, s));
  for (; k < 0; ++k) s = left_complement(ctx, left_complement(ctx, s));
  return s;
}

/// ∂^k(s) for any integer k; odd powers are τ^m∘∂ with k = 2m+1.
template <GarsideStructure C>
SimpleOf<C> complement_power(const C& ctx, const SimpleOf<C>& s, std::int64_t k) {
  if (k % 2 == 0) return tau_power(ctx, s, k / 2);
  return tau_power(ctx, right_complement(ctx, s), (k - 1) / 2);
}

/// Equality via common-atom stripping: s = t iff both reduce to 1 together.
template <GarsideStructure C>
bool equal_generic(const C& ctx, SimpleOf<C> s, SimpleOf<C> t) {
  const int atoms = ctx.atom_count();
  for (int i = 1; i <= atoms;) {
    const Atom a{i};
    auto qs = ctx.divide_left(a, s);
    auto qt = qs ? ctx.divide_left(a, t) : std::nullopt;
    if (qs && qt) {
      s = std::move(*qs);
      t = std::move(*qt);
      i = 1;
    } else {
      ++i;
    }
  }
  return is_trivial(ctx, s) && is_trivial(ctx, t);
}

template <GarsideStructure C>
bool equal(const C& ctx, const SimpleOf<C>& s, const SimpleOf<C>& t) {
  if constexpr (HasFastEquality<C>) {
    return ctx.equal(s, t);
  } else {
    return equal_generic(ctx, s, t);
  }
}

/// s ∧ t (Side::left) or s ∧↰ t (Side::right).
template <GarsideStructure C>
SimpleOf<C> gcd(const C& ctx, SimpleOf<C> s, SimpleOf<C> t, Side side) {
  SimpleOf<C> d = ctx.delta();
  const int atoms = ctx.atom_count();
  for (int i = 1; i <= atoms;) {
    const Atom a{i};
    auto qs = divide_by_atom(ctx, a, s, side);
    auto qt = qs ? divide_by_atom(ctx, a, t, side) : std::nullopt;
    if (qs && qt) {
      s = std::move(*qs);
      t = std::move(*qt);
      d = *divide_by_atom(ctx, a, d, side);
      i = 1;
    } else {
      ++i;
    }
  }
  return side == Side::left ? left_complement(ctx, d) : right_complement(ctx, d);
}

/// s ∨ t = ∂⁻¹(∂s ∧↰ ∂t) and s ∨↰ t = ∂(∂⁻¹s ∧ ∂⁻¹t).
template <GarsideStructure C>
SimpleOf<C> lcm(const C& ctx, const SimpleOf<C>& s, const SimpleOf<C>& t, Side side) {
  if (side == Side::left) {
    return left_complement(
        ctx, gcd(ctx, right_complement(ctx, s), right_complement(ctx, t), Side::right));
  }
  return right_complement(
      ctx, gcd(ctx, left_complement(ctx, s), left_complement(ctx, t), Side::left));
}

/**
 * Local sliding of the pair s·t.
 *
 * Side::left returns (s·u, u⁻¹·t) with u = ∂(s) ∧ t, a left-weighted pair.
 * Side::right returns (s·u⁻¹, u·t) with u = s ∧↰ ∂⁻¹(t), a right-weighted pair.
 * Either way the product is unchanged.
 */
template <GarsideStructure C>
std::pair<SimpleOf<C>, SimpleOf<C>> local_sliding(const C& ctx, SimpleOf<C> s, SimpleOf<C> t,
                                                  Side side) {
  const int atoms = ctx.atom_count();
  if (side == Side::left) {
    SimpleOf<C> rest = right_complement(ctx, s);
    for (int i = 1; i <= atoms;) {
      const Atom a{i};
      auto qr = ctx.divide_left(a, rest);
      auto qt = qr ? ctx.divide_left(a, t) : std::nullopt;
      if (qr && qt) {
        rest = std::move(*qr);
        t = std::move(*qt);
        i = 1;
      } else {
        ++i;
      }
    }
    return {left_complement(ctx, rest), std::move(t)};
  }
  SimpleOf<C> rest = left_complement(ctx, t);
  for (int i = 1; i <= atoms;) {
    const Atom a{i};
    auto qs = ctx.divide_right(s, a);
    auto qr = qs ? ctx.divide_right(rest, a) : std::nullopt;
    if (qs && qr) {
      s = std::move(*qs);
      rest = std::move(*qr);
      i = 1;
    } else {
      ++i;
    }
  }
  return {std::move(s), right_complement(ctx, rest)};
}

/// The product a·s (Side::left) or s·a (Side::right) when it is simple,
/// decided through complements: s·a is simple iff a ≼ ∂(s).
template <GarsideStructure C>
std::optional<SimpleOf<C>> multiply_atom_generic(const C& ctx, const SimpleOf<C>& s, Atom a,
                                                 Side side) {
  if (side == Side::right) {
    auto q = ctx.divide_left(a, right_complement(ctx, s));
    if (!q) return std::nullopt;
    return left_complement(ctx, *q);
  }
  auto q = ctx.divide_right(left_complement(ctx, s), a);
  if (!q) return std::nullopt;
  return right_complement(ctx, *q);
}

template <GarsideStructure C>
std::optional<SimpleOf<C>> multiply_atom(const C& ctx, const SimpleOf<C>& s, Atom a, Side side) {
  if constexpr (HasFastAtomProduct<C>) {
    return ctx.multiply_atom(s, a, side);
  } else {
    return multiply_atom_generic(ctx, s, a, side);
  }
}

/// The simple element represented by an atom.
template <GarsideStructure C>
SimpleOf<C> atom_simple(const C& ctx, Atom a) {
  return *multiply_atom(ctx, SimpleOf<C>(ctx.identity()), a, Side::right);
}

/// ‖s‖: the number of atoms in any decomposition of s.
template <GarsideStructure C>
int atom_length(const C& ctx, SimpleOf<C> s) {
  int length = 0;
  while (auto a = first_atom_dividing(ctx, s, Side::left)) {
    s = *ctx.divide_left(*a, s);
    ++length;
  }
  return length;
}

/// Greedy atom decomposition of s, reading from the left.
template <GarsideStructure C>
std::vector<Atom> atom_word(const C& ctx, SimpleOf<C> s) {
  std::vector<Atom> word;
  while (auto a = first_atom_dividing(ctx, s, Side::left)) {
    s = *ctx.divide_left(*a, s);
    word.push_back(*a);
  }
  return word;
}

/// Side::left: whether d ≼ s.  Side::right: whether s ≽ d.
template <GarsideStructure C>
bool divides(const C& ctx, SimpleOf<C> d, SimpleOf<C> s, Side side) {
  while (auto a = first_atom_dividing(ctx, d, side)) {
    auto q = divide_by_atom(ctx, *a, s, side);
    if (!q) return false;
    s = std::move(*q);
    d = *divide_by_atom(ctx, *a, d, side);
  }
  return true;
}

/// The simple product s·t when it is simple.
template <GarsideStructure C>
std::optional<SimpleOf<C>> product_if_simple(const C& ctx, SimpleOf<C> s, const SimpleOf<C>& t) {
  for (Atom a : atom_word(ctx, t)) {
    auto next = multiply_atom(ctx, s, a, Side::right);
    if (!next) return std::nullopt;
    s = std::move(*next);
  }
  return s;
}

}  // namespace garside
