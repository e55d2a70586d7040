#pragma once

/**
 * @file contract.hpp
 * @brief The minimal interface a finite-type Garside structure must provide.
 *
 * Everything in this library is generic over a context type satisfying
 * `GarsideStructure`.  A context knows its atoms a_1..a_λ (ordered by index),
 * the simple elements 1 and Δ, and can divide a simple element by an atom on
 * either side.  All further lattice operations are derived from these in
 * simple_ops.hpp.
 *
 * Contexts may additionally provide fast paths that the generic code picks up
 * when present:
 *   - `bool equal(const Simple&, const Simple&) const`
 *   - `std::optional<Simple> multiply_atom(const Simple&, Atom, Side) const`
 *   - `int tau_order() const` (order of conjugation by Δ; used to reduce
 *     exponents of τ)
 */

#include <compare>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace garside {

/// An atom of a Garside structure, identified by its 1-based index.
struct Atom {
  int index = 1;

  friend auto operator<=>(const Atom&, const Atom&) = default;
};

/// Which of the two lattice orders an operation refers to: `left` is the
/// prefix order ≼, `right` the suffix order ≽.
enum class Side { left, right };

constexpr Side opposite(Side side) noexcept {
  return side == Side::left ? Side::right : Side::left;
}

/// Raised when values from two different contexts are combined.
class ContextMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A documented precondition of an operation does not hold.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Something that the theory guarantees did not happen.  Seeing this means a
/// bug in the library or in the Garside structure supplied to it.
class InternalInvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

template <class C>
concept GarsideStructure =
    requires(const C& ctx, const typename C::Simple& s, Atom a) {
      typename C::Simple;
      requires std::copyable<typename C::Simple>;
      { ctx.atom_count() } -> std::convertible_to<int>;
      { ctx.atom_name(a) } -> std::convertible_to<std::string>;
      { ctx.identity() } -> std::convertible_to<typename C::Simple>;
      { ctx.delta() } -> std::convertible_to<typename C::Simple>;
      { ctx.delta_length() } -> std::convertible_to<int>;
      { ctx.divide_left(a, s) } -> std::same_as<std::optional<typename C::Simple>>;
      { ctx.divide_right(s, a) } -> std::same_as<std::optional<typename C::Simple>>;
      { ctx.hash(s) } -> std::convertible_to<std::size_t>;
      { ctx.contract_calls() } -> std::convertible_to<std::uint64_t>;
      { ctx == ctx } -> std::convertible_to<bool>;
    };

template <class C>
concept HasFastEquality = requires(const C& ctx, const typename C::Simple& s) {
  { ctx.equal(s, s) } -> std::convertible_to<bool>;
};

template <class C>
concept HasFastAtomProduct =
    requires(const C& ctx, const typename C::Simple& s, Atom a, Side side) {
      { ctx.multiply_atom(s, a, side) } -> std::same_as<std::optional<typename C::Simple>>;
    };

template <class C>
concept HasTauOrder = requires(const C& ctx) {
  { ctx.tau_order() } -> std::convertible_to<int>;
};

/// Number of atom divisions needed to strip Δ down to 1 from the left, always
/// taking the lowest-index atom.  Contexts call this at construction to fix
/// ‖Δ‖.
template <class C>
int measure_delta_length(const C& ctx, typename C::Simple delta, int atom_count) {
  int length = 0;
  for (bool stripped = true; stripped;) {
    stripped = false;
    for (int i = 1; i <= atom_count; ++i) {
      if (auto q = ctx.divide_left(Atom{i}, delta)) {
        delta = std::move(*q);
        ++length;
        stripped = true;
        break;
      }
    }
  }
  return length;
}

}  // namespace garside
