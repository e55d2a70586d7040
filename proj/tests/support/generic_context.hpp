#pragma once

// A braid context stripped down to the bare contract, so that the generic
// fallbacks (equality, atom products, τ without a known order) get exercised.

#include <atomic>
#include <cstdint>
#include <optional>
#include <string>

#include "garside/braid.hpp"

namespace testsupport {

class BareBraidContext {
 public:
  using Simple = garside::braid::Permutation;

  explicit BareBraidContext(int n) : inner_(n) {}

  int atom_count() const { return inner_.atom_count(); }
  std::string atom_name(garside::Atom a) const { return inner_.atom_name(a); }
  const Simple& identity() const { return inner_.identity(); }
  const Simple& delta() const { return inner_.delta(); }
  int delta_length() const { return inner_.delta_length(); }
  std::optional<Simple> divide_left(garside::Atom a, const Simple& s) const { return inner_.divide_left(a, s); }
  std::optional<Simple> divide_right(const Simple& s, garside::Atom a) const { return inner_.divide_right(s, a); }
  std::size_t hash(const Simple& s) const { return inner_.hash(s); }
  std::uint64_t contract_calls() const { return inner_.contract_calls(); }
  const garside::braid::BraidContext& inner() const { return inner_; }

  friend bool operator==(const BareBraidContext& a, const BareBraidContext& b) { return a.inner_ == b.inner_; }

 private:
  garside::braid::BraidContext inner_;
};

static_assert(garside::GarsideStructure<BareBraidContext>);
static_assert(!garside::HasFastEquality<BareBraidContext>);
static_assert(!garside::HasFastAtomProduct<BareBraidContext>);
static_assert(!garside::HasTauOrder<BareBraidContext>);

}  // namespace testsupport
