#pragma once

/**
 * @file braid.hpp
 * @brief The Artin Garside structure of the braid group B_n.
 *
 * Simple elements are permutation braids.  A permutation is stored as the
 * table `image[j]` = final position of the strand that starts at position j
 * (0-based), with braid words read left to right.  Under this convention:
 *
 *   - σ_i ≼ s  iff  image[i-1] > image[i]   (the strands starting at i-1, i cross)
 *   - s ≽ σ_i  iff  the strands ending at i-1, i cross
 *   - the product s·t has table t ∘ s.
 *
 * The convention is exercised against an independent word-level oracle in
 * tests/test_braid.cpp.
 */

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

#include "garside/contract.hpp"

namespace garside::braid {

inline constexpr int kMaxStrands = 32;

class Permutation {
 public:
  Permutation() = default;

  static Permutation identity(int n) {
    Permutation p;
    p.size_ = static_cast<std::uint8_t>(n);
    for (int j = 0; j < n; ++j) p.image_[j] = static_cast<std::uint8_t>(j);
    return p;
  }

  /// Builds a permutation from a 0-based image table; throws on non-bijections.
  static Permutation from_table(std::span<const int> table) {
    const int n = static_cast<int>(table.size());
    if (n < 1 || n > kMaxStrands) throw std::invalid_argument("permutation size out of range");
    Permutation p;
    p.size_ = static_cast<std::uint8_t>(n);
    std::array<bool, kMaxStrands> seen{};
    for (int j = 0; j < n; ++j) {
      const int v = table[j];
      if (v < 0 || v >= n || seen[v]) throw std::invalid_argument("not a permutation");
      seen[v] = true;
      p.image_[j] = static_cast<std::uint8_t>(v);
    }
    return p;
  }

  int size() const noexcept { return size_; }
  int operator[](int position) const noexcept { return image_[position]; }
  std::span<const std::uint8_t> table() const noexcept { return {image_.data(), size_}; }

  /// Position at which the strand ending at `position` started.
  int preimage(int position) const noexcept {
    for (int j = 0; j < size_; ++j) {
      if (image_[j] == position) return j;
    }
    return -1;
  }

  void swap_entries(int i, int j) noexcept { std::swap(image_[i], image_[j]); }

  void swap_values(int a, int b) noexcept {
    for (int j = 0; j < size_; ++j) {
      if (image_[j] == a) {
        image_[j] = static_cast<std::uint8_t>(b);
      } else if (image_[j] == b) {
        image_[j] = static_cast<std::uint8_t>(a);
      }
    }
  }

  /// The table of `first` followed by `second`.
  friend Permutation compose(const Permutation& first, const Permutation& second) {
    Permutation p;
    p.size_ = first.size_;
    for (int j = 0; j < first.size_; ++j) p.image_[j] = second.image_[first.image_[j]];
    return p;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::array<std::uint8_t, kMaxStrands> image_{};
  std::uint8_t size_ = 0;
};

/**
 * Garside context for B_n with atoms σ_1..σ_{n-1} and Δ the half twist.
 *
 * The context is immutable apart from an instrumentation counter of contract
 * calls, and is neither copyable nor movable: elements refer to it by address.
 */
class BraidContext {
 public:
  using Simple = Permutation;

  explicit BraidContext(int strands) : n_(strands) {
    if (strands < 2) throw std::invalid_argument("braid groups need at least 2 strands");
    if (strands > kMaxStrands) {
      throw std::invalid_argument("at most " + std::to_string(kMaxStrands) + " strands supported");
    }
    identity_ = Permutation::identity(n_);
    std::array<int, kMaxStrands> table{};
    for (int j = 0; j < n_; ++j) table[j] = n_ - 1 - j;
    delta_ = Permutation::from_table(std::span<const int>(table.data(), n_));
    delta_length_ = measure_delta_length(*this, delta_, atom_count());
    if (delta_length_ != n_ * (n_ - 1) / 2) {
      throw InternalInvariantError("half twist has unexpected atom length");
    }
    calls_.store(0, std::memory_order_relaxed);
  }

  BraidContext(const BraidContext&) = delete;
  BraidContext& operator=(const BraidContext&) = delete;

  int strands() const noexcept { return n_; }
  int atom_count() const noexcept { return n_ - 1; }
  std::string atom_name(Atom a) const { return "s" + std::to_string(a.index); }
  const Permutation& identity() const noexcept { return identity_; }
  const Permutation& delta() const noexcept { return delta_; }
  int delta_length() const noexcept { return delta_length_; }
  int tau_order() const noexcept { return 2; }

  /// The permutation braid of σ_i.
  Permutation generator(int i) const {
    check_atom(Atom{i});
    Permutation p = identity_;
    p.swap_entries(i - 1, i);
    return p;
  }

  std::optional<Permutation> divide_left(Atom a, const Permutation& s) const {
    check(a, s);
    count();
    const int i = a.index;
    if (s[i - 1] < s[i]) return std::nullopt;
    Permutation q = s;
    q.swap_entries(i - 1, i);
    return q;
  }

  std::optional<Permutation> divide_right(const Permutation& s, Atom a) const {
    check(a, s);
    count();
    const int i = a.index;
    if (s.preimage(i - 1) < s.preimage(i)) return std::nullopt;
    Permutation q = s;
    q.swap_values(i - 1, i);
    return q;
  }

  std::size_t hash(const Permutation& s) const {
    check(s);
    count();
    const auto bytes = s.table();
    return std::hash<std::string_view>{}(
        std::string_view(reinterpret_cast<const char*>(bytes.data()), bytes.size()));
  }

  bool equal(const Permutation& s, const Permutation& t) const {
    check(s);
    check(t);
    count();
    return s == t;
  }

  std::optional<Permutation> multiply_atom(const Permutation& s, Atom a, Side side) const {
    check(a, s);
    count();
    const int i = a.index;
    Permutation p = s;
    if (side == Side::right) {
      // s·σ_i stays simple iff the strands ending at i-1, i have not crossed.
      if (s.preimage(i - 1) > s.preimage(i)) return std::nullopt;
      p.swap_values(i - 1, i);
    } else {
      if (s[i - 1] > s[i]) return std::nullopt;
      p.swap_entries(i - 1, i);
    }
    return p;
  }

  std::uint64_t contract_calls() const noexcept { return calls_.load(std::memory_order_relaxed); }

  friend bool operator==(const BraidContext& a, const BraidContext& b) noexcept {
    return a.n_ == b.n_;
  }

 private:
  void count() const noexcept { calls_.fetch_add(1, std::memory_order_relaxed); }

  void check(const Permutation& s) const {
    if (s.size() != n_) throw ContextMismatch("simple element belongs to a different braid group");
  }

  void check_atom(Atom a) const {
    if (a.index < 1 || a.index >= n_) throw ContextMismatch("atom index out of range");
  }

  void check(Atom a, const Permutation& s) const {
    check_atom(a);
    check(s);
  }

  int n_;
  Permutation identity_;
  Permutation delta_;
  int delta_length_ = 0;
  mutable std::atomic<std::uint64_t> calls_{0};
};

static_assert(GarsideStructure<BraidContext>);
static_assert(HasFastEquality<BraidContext> && HasFastAtomProduct<BraidContext>);

}  // namespace garside::braid
