#pragma once

/**
 * @file element.hpp
 * @brief Group elements held in left normal form Δ^p·x_1⋯x_r, with the right
 *        normal form y_1⋯y_r·Δ^p computed on first use and cached.
 *
 * All normal-form maintenance is done with local slidings.  Multiplying an
 * element by a simple element or its inverse, on either side, costs O(r)
 * local slidings; when the right normal form is already cached it is updated
 * alongside the left one at the same cost.
 */

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <tuple>
#include <utility>
#include <vector>

#include "garside/contract.hpp"
#include "garside/simple_ops.hpp"

namespace garside {

template <class S>
struct LeftNormalForm {
  std::int64_t delta_power = 0;
  std::vector<S> factors;

  friend bool operator==(const LeftNormalForm&, const LeftNormalForm&) = default;
};

template <class S>
struct RightNormalForm {
  std::vector<S> factors;
  std::int64_t delta_power = 0;

  friend bool operator==(const RightNormalForm&, const RightNormalForm&) = default;
};

/// A factor of an unnormalized product: s or s⁻¹.
template <class S>
struct SignedSimple {
  S simple;
  bool inverse = false;
};

namespace detail {

struct trusted_t {};
inline constexpr trusted_t trusted{};

template <GarsideStructure C>
bool is_delta(const C& ctx, const SimpleOf<C>& s) {
  return equal(ctx, s, SimpleOf<C>(ctx.delta()));
}

template <GarsideStructure C>
void apply_tau(const C& ctx, std::vector<SimpleOf<C>>& factors, std::int64_t k) {
  if constexpr (HasTauOrder<C>) {
    if (k % ctx.tau_order() == 0) return;
  }
  if (k == 0) return;
  for (auto& f : factors) f = tau_power(ctx, f, k);
}

// One local sliding on factors[i], factors[i+1]; reports whether the pair moved.
template <GarsideStructure C>
bool slide_pair(const C& ctx, std::vector<SimpleOf<C>>& factors, std::size_t i, Side side) {
  auto [first, second] = local_sliding(ctx, factors[i], factors[i + 1], side);
  const bool moved = side == Side::left ? !equal(ctx, second, factors[i + 1])
                                        : !equal(ctx, first, factors[i]);
  factors[i] = std::move(first);
  factors[i + 1] = std::move(second);
  return moved;
}

// Left-weighted sequences: Δ factors collect at the front, 1s at the back.
template <GarsideStructure C>
std::int64_t tidy_left_weighted(const C& ctx, std::vector<SimpleOf<C>>& factors) {
  std::size_t deltas = 0;
  while (deltas < factors.size() && is_delta(ctx, factors[deltas])) ++deltas;
  factors.erase(factors.begin(), factors.begin() + static_cast<std::ptrdiff_t>(deltas));
  while (!factors.empty() && is_trivial(ctx, factors.back())) factors.pop_back();
  return static_cast<std::int64_t>(deltas);
}

// Right-weighted sequences: Δ factors collect at the back, 1s at the front.
template <GarsideStructure C>
std::int64_t tidy_right_weighted(const C& ctx, std::vector<SimpleOf<C>>& factors) {
  std::int64_t deltas = 0;
  while (!factors.empty() && is_delta(ctx, factors.back())) {
    factors.pop_back();
    ++deltas;
  }
  std::size_t ones = 0;
  while (ones < factors.size() && is_trivial(ctx, factors[ones])) ++ones;
  factors.erase(factors.begin(), factors.begin() + static_cast<std::ptrdiff_t>(ones));
  return deltas;
}

// The four ways of adding one simple factor to a weighted sequence.  Each
// returns the number of Δ factors split off.

template <GarsideStructure C>
std::int64_t left_weighted_append(const C& ctx, std::vector<SimpleOf<C>>& f, SimpleOf<C> s) {
  f.push_back(std::move(s));
  for (std::size_t i = f.size() - 1; i-- > 0;) {
    if (!slide_pair(ctx, f, i, Side::left)) break;
  }
  return tidy_left_weighted(ctx, f);
}

template <GarsideStructure C>
std::int64_t left_weighted_prepend(const C& ctx, std::vector<SimpleOf<C>>& f, SimpleOf<C> s) {
  f.insert(f.begin(), std::move(s));
  for (std::size_t i = 0; i + 1 < f.size(); ++i) {
    if (!slide_pair(ctx, f, i, Side::left)) break;
  }
  return tidy_left_weighted(ctx, f);
}

template <GarsideStructure C>
std::int64_t right_weighted_append(const C& ctx, std::vector<SimpleOf<C>>& f, SimpleOf<C> s) {
  f.push_back(std::move(s));
  for (std::size_t i = f.size() - 1; i-- > 0;) {
    if (!slide_pair(ctx, f, i, Side::right)) break;
  }
  return tidy_right_weighted(ctx, f);
}

template <GarsideStructure C>
std::int64_t right_weighted_prepend(const C& ctx, std::vector<SimpleOf<C>>& f, SimpleOf<C> s) {
  f.insert(f.begin(), std::move(s));
  for (std::size_t i = 0; i + 1 < f.size(); ++i) {
    if (!slide_pair(ctx, f, i, Side::right)) break;
  }
  return tidy_right_weighted(ctx, f);
}

// Multiplication of a left normal form Δ^p·f by s or s⁻¹ on one side.
template <GarsideStructure C>
void multiply(const C& ctx, LeftNormalForm<SimpleOf<C>>& nf, const SimpleOf<C>& s, Side side,
              bool inverse) {
  auto& p = nf.delta_power;
  if (!inverse) {
    if (side == Side::right) {
      p += left_weighted_append(ctx, nf.factors, s);
    } else {
      p += left_weighted_prepend(ctx, nf.factors, tau_power(ctx, s, p));
    }
    return;
  }
  if (side == Side::right) {
    // x·s⁻¹ = Δ^{p-1}·τ⁻¹(f)·∂⁻¹(s)
    apply_tau(ctx, nf.factors, -1);
    p -= 1;
    p += left_weighted_append(ctx, nf.factors, left_complement(ctx, s));
  } else {
    // s⁻¹·x = Δ^{p-1}·τ^{p-1}(∂(s))·f
    p -= 1;
    p += left_weighted_prepend(ctx, nf.factors, tau_power(ctx, right_complement(ctx, s), p));
  }
}

// Multiplication of a right normal form g·Δ^p by s or s⁻¹ on one side.
template <GarsideStructure C>
void multiply(const C& ctx, RightNormalForm<SimpleOf<C>>& nf, const SimpleOf<C>& s, Side side,
              bool inverse) {
  auto& p = nf.delta_power;
  if (!inverse) {
    if (side == Side::left) {
      p += right_weighted_prepend(ctx, nf.factors, s);
    } else {
      p += right_weighted_append(ctx, nf.factors, tau_power(ctx, s, -p));
    }
    return;
  }
  if (side == Side::left) {
    // s⁻¹·x = ∂(s)·τ(g)·Δ^{p-1}
    apply_tau(ctx, nf.factors, 1);
    p -= 1;
    p += right_weighted_prepend(ctx, nf.factors, right_complement(ctx, s));
  } else {
    // x·s⁻¹ = g·τ^{-(p-1)}(∂⁻¹(s))·Δ^{p-1}
    p -= 1;
    p += right_weighted_append(ctx, nf.factors, tau_power(ctx, left_complement(ctx, s), -p));
  }
}

template <GarsideStructure C>
void multiply_delta(const C& ctx, LeftNormalForm<SimpleOf<C>>& nf, std::int64_t k, Side side) {
  if (side == Side::right) apply_tau(ctx, nf.factors, k);
  nf.delta_power += k;
}

template <GarsideStructure C>
void multiply_delta(const C& ctx, RightNormalForm<SimpleOf<C>>& nf, std::int64_t k, Side side) {
  if (side == Side::left) apply_tau(ctx, nf.factors, -k);
  nf.delta_power += k;
}

template <GarsideStructure C>
RightNormalForm<SimpleOf<C>> right_from_left(const C& ctx, const LeftNormalForm<SimpleOf<C>>& nf) {
  RightNormalForm<SimpleOf<C>> out;
  out.delta_power = nf.delta_power;
  for (const auto& x : nf.factors) {
    out.delta_power += right_weighted_append(ctx, out.factors, tau_power(ctx, x, -nf.delta_power));
  }
  return out;
}

template <GarsideStructure C>
LeftNormalForm<SimpleOf<C>> left_from_right(const C& ctx, const RightNormalForm<SimpleOf<C>>& nf) {
  LeftNormalForm<SimpleOf<C>> out;
  out.delta_power = nf.delta_power;
  for (const auto& y : nf.factors) {
    out.delta_power += left_weighted_append(ctx, out.factors, tau_power(ctx, y, nf.delta_power));
  }
  return out;
}

}  // namespace detail

/// Whether (p, f) satisfies the left normal form conditions: no factor is 1 or
/// Δ and every adjacent pair is left weighted.
template <GarsideStructure C>
bool is_left_normal_form(const C& ctx, const LeftNormalForm<SimpleOf<C>>& nf) {
  const auto& f = nf.factors;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (is_trivial(ctx, f[i]) || detail::is_delta(ctx, f[i])) return false;
    if (i + 1 < f.size() && !is_trivial(ctx, gcd(ctx, right_complement(ctx, f[i]), f[i + 1], Side::left))) {
      return false;
    }
  }
  return true;
}

template <GarsideStructure C>
bool is_right_normal_form(const C& ctx, const RightNormalForm<SimpleOf<C>>& nf) {
  const auto& f = nf.factors;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (is_trivial(ctx, f[i]) || detail::is_delta(ctx, f[i])) return false;
    if (i + 1 < f.size() && !is_trivial(ctx, gcd(ctx, f[i], left_complement(ctx, f[i + 1]), Side::right))) {
      return false;
    }
  }
  return true;
}

/**
 * An element of a Garside group, always in left normal form.
 *
 * Elements refer to their context by address; the context must outlive them.
 * Values are immutable once built.  The right normal form is computed on the
 * first call to right_normal_form() and published atomically, so concurrent
 * readers are safe.
 */
template <GarsideStructure C>
class Element {
 public:
  using Context = C;
  using Simple = SimpleOf<C>;

  /// The identity of `ctx`.
  explicit Element(const C& ctx) : ctx_(&ctx) {}

  /// Wraps a left normal form that is already known to be valid.
  Element(detail::trusted_t, const C& ctx, LeftNormalForm<Simple> nf,
          std::shared_ptr<const RightNormalForm<Simple>> right = nullptr)
      : ctx_(&ctx), left_(std::move(nf)), right_(std::move(right)) {}

  /// Wraps a left normal form after checking it; throws ContractViolation.
  static Element from_left_normal_form(const C& ctx, LeftNormalForm<Simple> nf) {
    if (!is_left_normal_form(ctx, nf)) throw ContractViolation("not a left normal form");
    return Element(detail::trusted, ctx, std::move(nf));
  }

  Element(const Element& other)
      : ctx_(other.ctx_), left_(other.left_), right_(other.cached_right()) {}
  Element(Element&& other) noexcept
      : ctx_(other.ctx_), left_(std::move(other.left_)), right_(other.cached_right()) {}
  Element& operator=(const Element& other) {
    if (this != &other) {
      ctx_ = other.ctx_;
      left_ = other.left_;
      std::atomic_store(&right_, other.cached_right());
    }
    return *this;
  }
  Element& operator=(Element&& other) noexcept {
    if (this != &other) {
      ctx_ = other.ctx_;
      left_ = std::move(other.left_);
      std::atomic_store(&right_, other.cached_right());
    }
    return *this;
  }
  ~Element() = default;

  const C& context() const noexcept { return *ctx_; }
  const LeftNormalForm<Simple>& left_normal_form() const noexcept { return left_; }

  const RightNormalForm<Simple>& right_normal_form() const {
    if (auto cached = cached_right()) return *cached;
    auto computed = std::make_shared<const RightNormalForm<Simple>>(detail::right_from_left(*ctx_, left_));
    std::shared_ptr<const RightNormalForm<Simple>> expected;
    // Losing the race is fine: both racers computed the same value.
    std::atomic_compare_exchange_strong(&right_, &expected, computed);
    return *cached_right();
  }

  /// The cached right normal form, or null if it has not been computed.
  std::shared_ptr<const RightNormalForm<Simple>> cached_right() const {
    return std::atomic_load(&right_);
  }

  std::int64_t inf() const noexcept { return left_.delta_power; }
  std::int64_t sup() const noexcept { return left_.delta_power + canonical_length(); }
  std::int64_t canonical_length() const noexcept {
    return static_cast<std::int64_t>(left_.factors.size());
  }
  const std::vector<Simple>& factors() const noexcept { return left_.factors; }
  bool is_identity() const noexcept { return left_.delta_power == 0 && left_.factors.empty(); }
  bool is_positive() const noexcept { return left_.delta_power >= 0; }

  std::size_t hash() const {
    std::size_t h = std::hash<std::int64_t>{}(left_.delta_power);
    for (const auto& f : left_.factors) {
      h ^= static_cast<std::size_t>(ctx_->hash(f)) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }

  friend bool operator==(const Element& a, const Element& b) {
    if (a.ctx_ != b.ctx_ && !(*a.ctx_ == *b.ctx_)) return false;
    if (a.left_.delta_power != b.left_.delta_power) return false;
    if (a.left_.factors.size() != b.left_.factors.size()) return false;
    for (std::size_t i = 0; i < a.left_.factors.size(); ++i) {
      if (!equal(*a.ctx_, a.left_.factors[i], b.left_.factors[i])) return false;
    }
    return true;
  }

 private:
  const C* ctx_;
  LeftNormalForm<Simple> left_;
  mutable std::shared_ptr<const RightNormalForm<Simple>> right_;
};

/// Hash functor for unordered containers keyed by Element.
struct ElementHash {
  template <class E>
  std::size_t operator()(const E& x) const {
    return x.hash();
  }
};

namespace detail {

template <GarsideStructure C>
void require_same_context(const Element<C>& a, const Element<C>& b) {
  if (&a.context() != &b.context() && !(a.context() == b.context())) {
    throw ContextMismatch("elements belong to different Garside contexts");
  }
}

// Applies one simple (or inverse simple) multiplication to both normal forms
// of x, updating the right one only if it was already cached.
template <GarsideStructure C>
Element<C> multiply_simple_impl(const Element<C>& x, const SimpleOf<C>& s, Side side, bool inverse) {
  const C& ctx = x.context();
  LeftNormalForm<SimpleOf<C>> left = x.left_normal_form();
  detail::multiply(ctx, left, s, side, inverse);
  std::shared_ptr<const RightNormalForm<SimpleOf<C>>> right;
  if (auto cached = x.cached_right()) {
    auto updated = *cached;
    detail::multiply(ctx, updated, s, side, inverse);
    right = std::make_shared<const RightNormalForm<SimpleOf<C>>>(std::move(updated));
  }
  return Element<C>(trusted, ctx, std::move(left), std::move(right));
}

}  // namespace detail

template <GarsideStructure C>
Element<C> identity_element(const C& ctx) {
  return Element<C>(ctx);
}

/// Δ^k.
template <GarsideStructure C>
Element<C> delta_power(const C& ctx, std::int64_t k) {
  return Element<C>(detail::trusted, ctx, LeftNormalForm<SimpleOf<C>>{k, {}});
}

/// The element represented by a single simple factor.
template <GarsideStructure C>
Element<C> from_simple(const C& ctx, const SimpleOf<C>& s) {
  LeftNormalForm<SimpleOf<C>> nf;
  nf.delta_power = detail::left_weighted_append(ctx, nf.factors, s);
  return Element<C>(detail::trusted, ctx, std::move(nf));
}

/// The element Δ^{delta_power}·∏ parts in normal form.
template <GarsideStructure C>
Element<C> normalize(const C& ctx, std::int64_t delta_power,
                     std::span<const SignedSimple<SimpleOf<C>>> parts) {
  LeftNormalForm<SimpleOf<C>> nf{delta_power, {}};
  for (const auto& part : parts) detail::multiply(ctx, nf, part.simple, Side::right, part.inverse);
  return Element<C>(detail::trusted, ctx, std::move(nf));
}

template <GarsideStructure C>
Element<C> normalize(const C& ctx, std::int64_t delta_power,
                     const std::vector<SignedSimple<SimpleOf<C>>>& parts) {
  return normalize(ctx, delta_power, std::span<const SignedSimple<SimpleOf<C>>>(parts));
}

/// x·s (Side::right) or s·x (Side::left).
template <GarsideStructure C>
Element<C> multiply_simple(const Element<C>& x, const SimpleOf<C>& s, Side side) {
  return detail::multiply_simple_impl(x, s, side, false);
}

/// x·s⁻¹ (Side::right) or s⁻¹·x (Side::left).
template <GarsideStructure C>
Element<C> multiply_inverse_simple(const Element<C>& x, const SimpleOf<C>& s, Side side) {
  return detail::multiply_simple_impl(x, s, side, true);
}

/// x·Δ^k (Side::right) or Δ^k·x (Side::left).
template <GarsideStructure C>
Element<C> multiply_delta(const Element<C>& x, std::int64_t k, Side side) {
  const C& ctx = x.context();
  LeftNormalForm<SimpleOf<C>> left = x.left_normal_form();
  detail::multiply_delta(ctx, left, k, side);
  std::shared_ptr<const RightNormalForm<SimpleOf<C>>> right;
  if (auto cached = x.cached_right()) {
    auto updated = *cached;
    detail::multiply_delta(ctx, updated, k, side);
    right = std::make_shared<const RightNormalForm<SimpleOf<C>>>(std::move(updated));
  }
  return Element<C>(detail::trusted, ctx, std::move(left), std::move(right));
}

/// x^s = s⁻¹·x·s.
template <GarsideStructure C>
Element<C> conjugate_by_simple(const Element<C>& x, const SimpleOf<C>& s) {
  return multiply_simple(multiply_inverse_simple(x, s, Side::left), s, Side::right);
}

/// x^{s⁻¹} = s·x·s⁻¹.
template <GarsideStructure C>
Element<C> conjugate_by_inverse_simple(const Element<C>& x, const SimpleOf<C>& s) {
  return multiply_inverse_simple(multiply_simple(x, s, Side::left), s, Side::right);
}

/// τ^k(x) = Δ^{-k}·x·Δ^k, applied factorwise.
template <GarsideStructure C>
Element<C> tau(const Element<C>& x, std::int64_t k) {
  const C& ctx = x.context();
  LeftNormalForm<SimpleOf<C>> left = x.left_normal_form();
  detail::apply_tau(ctx, left.factors, k);
  std::shared_ptr<const RightNormalForm<SimpleOf<C>>> right;
  if (auto cached = x.cached_right()) {
    auto updated = *cached;
    detail::apply_tau(ctx, updated.factors, k);
    right = std::make_shared<const RightNormalForm<SimpleOf<C>>>(std::move(updated));
  }
  return Element<C>(detail::trusted, ctx, std::move(left), std::move(right));
}

/// x⁻¹, read off the left normal form of x.
template <GarsideStructure C>
Element<C> invert(const Element<C>& x) {
  const C& ctx = x.context();
  const std::int64_t p = x.inf();
  const auto& f = x.factors();
  const auto r = static_cast<std::int64_t>(f.size());
  LeftNormalForm<SimpleOf<C>> nf;
  nf.delta_power = -(p + r);
  nf.factors.reserve(f.size());
  for (std::int64_t i = r; i >= 1; --i) {
    nf.factors.push_back(complement_power(ctx, f[static_cast<std::size_t>(i - 1)], -2 * (p + i) + 1));
  }
  return Element<C>(detail::trusted, ctx, std::move(nf));
}

/// x·y.
template <GarsideStructure C>
Element<C> multiply(const Element<C>& x, const Element<C>& y) {
  detail::require_same_context(x, y);
  const C& ctx = x.context();
  LeftNormalForm<SimpleOf<C>> nf = x.left_normal_form();
  detail::multiply_delta(ctx, nf, y.inf(), Side::right);
  for (const auto& s : y.factors()) {
    nf.delta_power += detail::left_weighted_append(ctx, nf.factors, s);
  }
  return Element<C>(detail::trusted, ctx, std::move(nf));
}

template <GarsideStructure C>
Element<C> operator*(const Element<C>& x, const Element<C>& y) {
  return multiply(x, y);
}

/// x^c = c⁻¹·x·c, one factor of c at a time.
template <GarsideStructure C>
Element<C> conjugate(const Element<C>& x, const Element<C>& c) {
  detail::require_same_context(x, c);
  Element<C> result = tau(x, c.inf());
  for (const auto& s : c.factors()) result = conjugate_by_simple(result, s);
  return result;
}

template <GarsideStructure C>
std::tuple<std::int64_t, std::int64_t, std::int64_t> inf_sup_len(const Element<C>& x) {
  return {x.inf(), x.sup(), x.canonical_length()};
}

/// ι(x) (Side::left) or ι↰(x) (Side::right).
template <GarsideStructure C>
SimpleOf<C> initial_factor(const Element<C>& x, Side side) {
  const C& ctx = x.context();
  if (x.canonical_length() == 0) return ctx.identity();
  if (side == Side::left) return tau_power(ctx, x.factors().front(), -x.inf());
  const auto& right = x.right_normal_form();
  return tau_power(ctx, right.factors.back(), right.delta_power);
}

/// φ(x) (Side::left) or φ↰(x) (Side::right).
template <GarsideStructure C>
SimpleOf<C> final_factor(const Element<C>& x, Side side) {
  const C& ctx = x.context();
  if (x.canonical_length() == 0) return ctx.delta();
  if (side == Side::left) return x.factors().back();
  return x.right_normal_form().factors.front();
}

/// Side::left: whether a ≼ b.  Side::right: whether b ≽ a.
template <GarsideStructure C>
bool divides(const Element<C>& a, const Element<C>& b, Side side) {
  if (side == Side::left) return multiply(invert(a), b).is_positive();
  return multiply(b, invert(a)).is_positive();
}

/// Whether the atom a divides x on the given side.
template <GarsideStructure C>
bool atom_divides(const Element<C>& x, Atom a, Side side) {
  if (!x.is_positive() || x.is_identity()) return false;
  if (x.inf() > 0) return true;
  const C& ctx = x.context();
  const SimpleOf<C>& outer =
      side == Side::left ? x.factors().front() : x.right_normal_form().factors.back();
  return divide_by_atom(ctx, a, outer, side).has_value();
}

namespace detail {

// Largest simple divisor of a positive element on the given side.
template <GarsideStructure C>
SimpleOf<C> outer_simple(const Element<C>& x, Side side) {
  const C& ctx = x.context();
  if (x.inf() > 0) return ctx.delta();
  if (x.canonical_length() == 0) return ctx.identity();
  return side == Side::left ? x.factors().front() : x.right_normal_form().factors.back();
}

template <GarsideStructure C>
Element<C> positive_gcd(Element<C> a, Element<C> b, Side side) {
  const C& ctx = a.context();
  Element<C> d(ctx);
  if (side == Side::right) {
    // keep both normal forms current while dividing on the right
    (void)a.right_normal_form();
    (void)b.right_normal_form();
  }
  for (;;) {
    SimpleOf<C> u = gcd(ctx, outer_simple(a, side), outer_simple(b, side), side);
    if (is_trivial(ctx, u)) return d;
    d = multiply_simple(d, u, opposite(side));
    a = multiply_inverse_simple(a, u, side);
    b = multiply_inverse_simple(b, u, side);
  }
}

}  // namespace detail

/// a ∧ b (Side::left) or a ∧↰ b (Side::right).
template <GarsideStructure C>
Element<C> gcd(const Element<C>& a, const Element<C>& b, Side side) {
  detail::require_same_context(a, b);
  const std::int64_t m = std::min(a.inf(), b.inf());
  const Side outer = side;
  Element<C> g = detail::positive_gcd(multiply_delta(a, -m, outer), multiply_delta(b, -m, outer), side);
  return multiply_delta(g, m, outer);
}

/// a ∨ b (Side::left) or a ∨↰ b (Side::right).
template <GarsideStructure C>
Element<C> lcm(const Element<C>& a, const Element<C>& b, Side side) {
  detail::require_same_context(a, b);
  const std::int64_t m = std::max(a.sup(), b.sup());
  if (side == Side::left) {
    // a ∨ b = Δ^m·d⁻¹ with d = (a⁻¹Δ^m) ∧↰ (b⁻¹Δ^m)
    Element<C> d = gcd(multiply_delta(invert(a), m, Side::right),
                       multiply_delta(invert(b), m, Side::right), Side::right);
    return multiply_delta(invert(d), m, Side::left);
  }
  // a ∨↰ b = d⁻¹·Δ^m with d = (Δ^m a⁻¹) ∧ (Δ^m b⁻¹)
  Element<C> d = gcd(multiply_delta(invert(a), m, Side::left),
                     multiply_delta(invert(b), m, Side::left), Side::left);
  return multiply_delta(invert(d), m, Side::right);
}

/**
 * 1 ∨ x·Δ^{-q}, read off the right normal form of x as the product of its
 * leftmost r factors, where sup(x) = q + r.  Requires 0 ≤ r ≤ ℓ(x).
 */
template <GarsideStructure C>
Element<C> positive_part(const Element<C>& x, std::int64_t q) {
  const std::int64_t r = x.sup() - q;
  if (r < 0 || r > x.canonical_length()) {
    throw ContractViolation("positive_part: sup(x) - q must lie in [0, len(x)]");
  }
  const auto& right = x.right_normal_form();
  RightNormalForm<SimpleOf<C>> prefix;
  prefix.factors.assign(right.factors.begin(), right.factors.begin() + static_cast<std::ptrdiff_t>(r));
  auto left = detail::left_from_right(x.context(), prefix);
  return Element<C>(detail::trusted, x.context(), std::move(left),
                    std::make_shared<const RightNormalForm<SimpleOf<C>>>(std::move(prefix)));
}

/// 1 ∨ x·Δ^{-q} for any q: trivial when sup(x) ≤ q.
template <GarsideStructure C>
Element<C> join_with_identity(const Element<C>& x, std::int64_t q = 0) {
  if (x.sup() <= q) return Element<C>(x.context());
  if (x.inf() >= q) return multiply_delta(x, -q, Side::right);
  return positive_part(x, q);
}

}  // namespace garside

template <garside::GarsideStructure C>
struct std::hash<garside::Element<C>> {
  std::size_t operator()(const garside::Element<C>& x) const { return x.hash(); }
};
