#pragma once

/**
 * @file enumeration.hpp
 * @brief Listing every simple element of a small Garside structure.
 */

#include <cstddef>
#include <deque>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "garside/contract.hpp"
#include "garside/simple_ops.hpp"

namespace garside {

/// Default cap on the number of simple elements an enumeration may produce
/// (6! = 720, i.e. braid groups up to B_6).
inline constexpr std::size_t kDefaultSimpleLimit = 720;

class EnumerationTooLarge : public std::length_error {
 public:
  using std::length_error::length_error;
};

namespace detail {

template <GarsideStructure C>
struct SimpleHash {
  const C* ctx;
  std::size_t operator()(const SimpleOf<C>& s) const { return ctx->hash(s); }
};

template <GarsideStructure C>
struct SimpleEqual {
  const C* ctx;
  bool operator()(const SimpleOf<C>& s, const SimpleOf<C>& t) const { return equal(*ctx, s, t); }
};

}  // namespace detail

/**
 * All simple elements of `ctx`, found by closing {1} under multiplication by
 * atoms on the right.  Ordered breadth-first (by atom length), ties broken by
 * atom index.  Throws EnumerationTooLarge once more than `limit` are found.
 */
template <GarsideStructure C>
std::vector<SimpleOf<C>> enumerate_simples(const C& ctx, std::size_t limit = kDefaultSimpleLimit) {
  std::vector<SimpleOf<C>> out;
  std::unordered_set<SimpleOf<C>, detail::SimpleHash<C>, detail::SimpleEqual<C>> seen(
      16, detail::SimpleHash<C>{&ctx}, detail::SimpleEqual<C>{&ctx});
  std::deque<SimpleOf<C>> queue{SimpleOf<C>(ctx.identity())};
  seen.insert(ctx.identity());
  const int atoms = ctx.atom_count();
  while (!queue.empty()) {
    SimpleOf<C> s = std::move(queue.front());
    queue.pop_front();
    out.push_back(s);
    if (out.size() > limit) {
      throw EnumerationTooLarge("more than " + std::to_string(limit) +
                                " simple elements; refusing to enumerate");
    }
    for (int i = 1; i <= atoms; ++i) {
      if (auto t = multiply_atom(ctx, s, Atom{i}, Side::right)) {
        if (seen.insert(*t).second) queue.push_back(std::move(*t));
      }
    }
  }
  return out;
}

}  // namespace garside
