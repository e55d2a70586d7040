#pragma once

/**
 * @file conjugacy.hpp
 * @brief Conjugacy decision and search by exploring the sliding circuits
 *        graph, plus a naive reference solver that tries every simple
 *        conjugator.
 *
 * Overview:
 *   - slide_to_circuit: iterate cyclic sliding to a representative in SC(x)
 *     and return it with a conjugator.
 *   - arrows_at: the indecomposable conjugators leaving one vertex, found per
 *     atom through minimal super summit conjugators, iterated pullbacks and
 *     the periodic part of iterated transports.
 *   - solve_conjugacy / enumerate_sc: breadth-first search over SC(x).
 *   - naive_solve / naive_enumerate_sc: the same search over all simples.
 */

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "garside/contract.hpp"
#include "garside/element.hpp"
#include "garside/enumeration.hpp"
#include "garside/simple_ops.hpp"
#include "garside/sliding.hpp"

namespace garside {

/// Instrumentation counters collected by the solvers.
struct RunStats {
  std::size_t T = 0;             // trajectory entry index (largest over the inputs)
  std::size_t N = 0;             // circuit period of the representative of x
  std::size_t M = 0;             // longest sliding circuit met during the search
  std::size_t R_max = 0;         // largest j in a transport repetition s^(jN) = s^(iN)
  std::size_t pullback_max = 0;  // largest j in a pullback repetition
  std::size_t sc_size = 0;       // vertices of SC(x) discovered
  std::uint64_t contract_calls = 0;
};

struct SearchOptions {
  /// Maximum length of a pullback or transport sequence before giving up with
  /// InternalInvariantError.  Unset: 4 * (largest repetition seen so far) + 16.
  std::optional<std::size_t> repetition_limit;
  /// Verify pullback preconditions at every step.
  bool checked = kCheckedByDefault;
  /// Size gate for the naive solver.
  std::size_t simple_limit = kDefaultSimpleLimit;
};

/// Result of iterating cyclic sliding to a sliding circuit.
template <GarsideStructure C>
struct SlideResult {
  Element<C> representative;
  Element<C> conjugator;  // x^conjugator = representative
  std::size_t entry_index = 0;
  std::size_t period = 0;
};

template <GarsideStructure C>
SlideResult<C> slide_to_circuit(const Element<C>& x) {
  Trajectory<C> trajectory = slide_to_first_repetition(x);
  Element<C> c(x.context());
  // The prefixes collected around the circuit itself multiply to an element
  // commuting with the representative; only the pre-periodic part is kept.
  for (std::size_t k = 0; k < trajectory.entry_index; ++k) {
    c = multiply_simple(c, trajectory.prefixes[k], Side::right);
  }
  return {trajectory.entry(), std::move(c), trajectory.entry_index, trajectory.period};
}

/// A sliding circuit v, 𝔰(v), ..., 𝔰^{N-1}(v) with preferred prefixes and
/// suffixes of each element precomputed.
template <GarsideStructure C>
struct Circuit {
  std::vector<Element<C>> elements;
  std::vector<SimpleOf<C>> prefixes;
  std::vector<SimpleOf<C>> suffixes;

  std::size_t period() const noexcept { return elements.size(); }
  const Element<C>& base() const { return elements.front(); }
};

/// The circuit through v; throws ContractViolation if v is not in one.
template <GarsideStructure C>
Circuit<C> make_circuit(const Element<C>& v) {
  Trajectory<C> trajectory = slide_to_first_repetition(v);
  if (trajectory.entry_index != 0) throw ContractViolation("element is not in a sliding circuit");
  Circuit<C> circuit;
  circuit.elements = std::move(trajectory.elements);
  circuit.prefixes = std::move(trajectory.prefixes);
  circuit.suffixes.reserve(circuit.elements.size());
  for (const auto& e : circuit.elements) circuit.suffixes.push_back(preferred_suffix(e));
  return circuit;
}

/// Sequence u, u^(N), u^(2N), ... of N-fold transports up to its first repeat.
template <GarsideStructure C>
struct TransportCycle {
  std::vector<Element<C>> sequence;  // up to but excluding the repeated term
  std::size_t first = 0;             // i with u^(iN) = u^(jN)
  std::size_t second = 0;            // j

  std::size_t period() const noexcept { return second - first; }
  std::span<const Element<C>> periodic_part() const {
    return std::span<const Element<C>>(sequence).subspan(first, second - first);
  }
};

/// Sequence s, s_(N), s_(2N), ... of N-fold pullbacks up to its first repeat.
template <GarsideStructure C>
struct PullbackRepetition {
  Element<C> value;  // s_(jN) = s_(iN)
  std::size_t first = 0;
  std::size_t second = 0;
};

namespace detail {

inline std::size_t repetition_limit(const SearchOptions& options, const RunStats& stats) {
  if (options.repetition_limit) return *options.repetition_limit;
  return 4 * std::max(stats.R_max, stats.pullback_max) + 16;
}

template <GarsideStructure C>
SimpleOf<C> as_simple(const Element<C>& x) {
  const C& ctx = x.context();
  if (x.inf() == 0 && x.canonical_length() == 0) return ctx.identity();
  if (x.inf() == 0 && x.canonical_length() == 1) return x.factors().front();
  if (x.inf() == 1 && x.canonical_length() == 0) return ctx.delta();
  throw InternalInvariantError("expected a simple element");
}

// One full turn of transports starting at the circuit base.
template <GarsideStructure C>
Element<C> transport_around(const Circuit<C>& circuit, Element<C> u) {
  for (std::size_t k = 0; k < circuit.period(); ++k) {
    const Element<C>& x = circuit.elements[k];
    const SimpleOf<C> target_prefix = preferred_prefix(conjugate(x, u));
    u = multiply_simple(multiply_inverse_simple(u, circuit.prefixes[k], Side::left), target_prefix,
                        Side::right);
    if (!u.is_positive()) {
      throw InternalInvariantError("transport of a positive conjugator is not positive");
    }
  }
  return u;
}

// One full turn of pullbacks, walking the circuit backwards to the base.
template <GarsideStructure C>
Element<C> pullback_around(const Circuit<C>& circuit, Element<C> s, bool checked) {
  const std::size_t n = circuit.period();
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t y = (n - k) % n;
    const std::size_t z = (2 * n - k - 1) % n;
    if (checked) check_pullback_inputs(circuit.elements[z], circuit.elements[y], s);
    s = pullback_with_prefix(circuit.elements[y], circuit.prefixes[z], s);
  }
  return s;
}

template <GarsideStructure C, class Step>
TransportCycle<C> iterate_to_repetition(Element<C> u, std::size_t limit, const char* what, Step&& step) {
  TransportCycle<C> cycle;
  std::unordered_map<Element<C>, std::size_t, ElementHash> seen;
  for (;;) {
    auto [it, inserted] = seen.try_emplace(u, cycle.sequence.size());
    if (!inserted) {
      cycle.first = it->second;
      cycle.second = cycle.sequence.size();
      return cycle;
    }
    if (cycle.sequence.size() >= limit) {
      throw InternalInvariantError(std::string(what) + ": no repetition within " +
                                   std::to_string(limit) + " iterations");
    }
    Element<C> next = step(u);
    cycle.sequence.push_back(std::move(u));
    u = std::move(next);
  }
}

}  // namespace detail

/// Iterated N-fold transports of u along the circuit until the first repeat.
/// Requires u positive with base^u super summit.
template <GarsideStructure C>
TransportCycle<C> transport_cycle(const Circuit<C>& circuit, const Element<C>& u,
                                  const SearchOptions& options, RunStats& stats) {
  auto cycle = detail::iterate_to_repetition(u, detail::repetition_limit(options, stats), "transport",
                                             [&](const Element<C>& e) { return detail::transport_around(circuit, e); });
  stats.R_max = std::max(stats.R_max, cycle.second);
  return cycle;
}

template <GarsideStructure C>
TransportCycle<C> transport_cycle(const Circuit<C>& circuit, const Element<C>& u) {
  RunStats stats;
  return transport_cycle(circuit, u, SearchOptions{}, stats);
}

/// Iterated N-fold pullbacks of s until the first repeated value, which is
/// returned together with the indices of the repetition.
template <GarsideStructure C>
PullbackRepetition<C> iterated_pullback_to_repetition(const Circuit<C>& circuit, const Element<C>& s,
                                                      const SearchOptions& options, RunStats& stats) {
  auto cycle = detail::iterate_to_repetition(
      s, detail::repetition_limit(options, stats), "pullback",
      [&](const Element<C>& e) { return detail::pullback_around(circuit, e, options.checked); });
  stats.pullback_max = std::max(stats.pullback_max, cycle.second);
  return {cycle.sequence[cycle.first], cycle.first, cycle.second};
}

template <GarsideStructure C>
PullbackRepetition<C> iterated_pullback_to_repetition(const Circuit<C>& circuit, const Element<C>& s) {
  RunStats stats;
  return iterated_pullback_to_repetition(circuit, s, SearchOptions{}, stats);
}

/// An arrow found by arrows_at, with the atom whose step produced it.
template <GarsideStructure C>
struct ArrowCandidate {
  Atom atom;
  SimpleOf<C> label;
};

/// The arrows of SCG starting at the circuit base, labelled by indecomposable
/// conjugators, listed in the order their atoms were processed.
template <GarsideStructure C>
std::vector<ArrowCandidate<C>> arrows_with_atoms(const Circuit<C>& circuit, const SearchOptions& options,
                                                 RunStats& stats) {
  const Element<C>& v = circuit.base();
  const C& ctx = v.context();
  const int atoms = ctx.atom_count();
  const SimpleOf<C>& prefix = circuit.prefixes.front();
  std::vector<ArrowCandidate<C>> arrows;
  std::set<int> used;

  for (int t = 1; t <= atoms; ++t) {
    const Atom a{t};
    const SimpleOf<C> atom = atom_simple(ctx, a);
    Element<C> s = from_simple(ctx, atom);
    const Element<C> va = conjugate_by_simple(v, atom);
    s = multiply(s, minimal_sss_conjugator(va, v.inf(), v.sup(),
                                           static_cast<std::size_t>(ctx.delta_length())));
    if (ctx.divide_left(a, prefix)) {
      s = iterated_pullback_to_repetition(circuit, s, options, stats).value;
    }
    const TransportCycle<C> cycle = transport_cycle(circuit, s, options, stats);
    for (const Element<C>& u : cycle.periodic_part()) {
      if (!atom_divides(u, a, Side::left)) continue;
      bool keep = true;
      for (int k = 1; k <= atoms && keep; ++k) {
        if ((used.count(k) || k > t) && atom_divides(u, Atom{k}, Side::left)) keep = false;
      }
      if (keep) {
        arrows.push_back({a, detail::as_simple(u)});
        used.insert(t);
      }
      break;
    }
  }
  return arrows;
}

template <GarsideStructure C>
std::vector<SimpleOf<C>> arrows_at(const Circuit<C>& circuit, const SearchOptions& options, RunStats& stats) {
  std::vector<SimpleOf<C>> labels;
  for (auto& arrow : arrows_with_atoms(circuit, options, stats)) labels.push_back(std::move(arrow.label));
  return labels;
}

template <GarsideStructure C>
std::vector<SimpleOf<C>> arrows_at(const Circuit<C>& circuit) {
  RunStats stats;
  return arrows_at(circuit, SearchOptions{}, stats);
}

template <class S>
struct Arrow {
  std::size_t source = 0;
  std::size_t target = 0;
  S label;
};

/**
 * A explored part of SC(x): vertices, labelled arrows between them, and a
 * spanning tree rooted at vertex 0 given by parent links.
 */
template <GarsideStructure C>
struct SCGraph {
  struct Parent {
    std::size_t vertex;
    SimpleOf<C> label;
  };

  std::vector<Element<C>> vertices;
  std::vector<Arrow<SimpleOf<C>>> arrows;
  std::vector<std::optional<Parent>> parent;
  std::unordered_map<Element<C>, std::size_t, ElementHash> index;

  std::size_t size() const noexcept { return vertices.size(); }

  std::optional<std::size_t> find(const Element<C>& x) const {
    auto it = index.find(x);
    if (it == index.end()) return std::nullopt;
    return it->second;
  }

  std::size_t add(Element<C> x, std::optional<Parent> from) {
    const std::size_t id = vertices.size();
    index.emplace(x, id);
    vertices.push_back(std::move(x));
    parent.push_back(std::move(from));
    return id;
  }

  /// c_v: the product of tree labels from the root, so root^{c_v} = vertex id.
  Element<C> path_to(std::size_t id) const {
    std::vector<const SimpleOf<C>*> labels;
    for (std::size_t at = id; parent[at]; at = parent[at]->vertex) labels.push_back(&parent[at]->label);
    Element<C> c(vertices.front().context());
    for (auto it = labels.rbegin(); it != labels.rend(); ++it) c = multiply_simple(c, **it, Side::right);
    return c;
  }
};

template <GarsideStructure C>
struct ConjugacyResult {
  bool conjugate = false;
  std::optional<Element<C>> witness;  // x^witness = y when conjugate
  RunStats stats;
};

namespace detail {

// Breadth-first search from `root`.  `labels(v)` lists conjugators to try at
// v; `admit(w)` decides whether a new w belongs to SC.  Stops at the first
// conjugate equal to *target and returns the conjugator from the root.
template <GarsideStructure C, class Labels, class Admit>
std::optional<Element<C>> explore(SCGraph<C>& graph, const Element<C>& root, const Element<C>* target,
                                  Labels&& labels, Admit&& admit) {
  graph.add(root, std::nullopt);
  std::deque<std::size_t> frontier{0};
  while (!frontier.empty()) {
    const std::size_t id = frontier.front();
    frontier.pop_front();
    const Element<C> v = graph.vertices[id];
    for (const SimpleOf<C>& s : labels(v)) {
      Element<C> w = conjugate_by_simple(v, s);
      if (target && w == *target) return multiply_simple(graph.path_to(id), s, Side::right);
      if (auto known = graph.find(w)) {
        graph.arrows.push_back({id, *known, s});
        continue;
      }
      if (!admit(w)) continue;
      const std::size_t next = graph.add(std::move(w), typename SCGraph<C>::Parent{id, s});
      graph.arrows.push_back({id, next, s});
      frontier.push_back(next);
    }
  }
  return std::nullopt;
}

template <GarsideStructure C, class Search>
ConjugacyResult<C> solve_with(const Element<C>& x, const Element<C>& y, Search&& search) {
  require_same_context(x, y);
  const C& ctx = x.context();
  const std::uint64_t calls_before = ctx.contract_calls();
  ConjugacyResult<C> result;
  const SlideResult<C> sx = slide_to_circuit(x);
  const SlideResult<C> sy = slide_to_circuit(y);
  result.stats.T = std::max(sx.entry_index, sy.entry_index);
  result.stats.N = sx.period;
  result.stats.M = std::max(sx.period, sy.period);

  std::optional<Element<C>> middle;
  if (sx.representative == sy.representative) {
    middle = Element<C>(ctx);
    result.stats.sc_size = 1;
  } else {
    SCGraph<C> graph;
    middle = search(graph, sx.representative, sy.representative, result.stats);
    result.stats.sc_size = graph.size();
  }
  if (middle) {
    Element<C> c = multiply(multiply(sx.conjugator, *middle), invert(sy.conjugator));
    if (!(conjugate(x, c) == y)) throw InternalInvariantError("conjugating element does not verify");
    result.conjugate = true;
    result.witness = std::move(c);
  }
  result.stats.contract_calls = ctx.contract_calls() - calls_before;
  return result;
}

template <GarsideStructure C>
auto arrow_labels(const SearchOptions& options, RunStats& stats) {
  return [&options, &stats](const Element<C>& v) {
    const Circuit<C> circuit = make_circuit(v);
    stats.M = std::max(stats.M, circuit.period());
    return arrows_at(circuit, options, stats);
  };
}

}  // namespace detail

/// Decides whether x and y are conjugate and, if so, finds c with x^c = y.
/// A negative answer is given only after all of SC(x) has been explored.
template <GarsideStructure C>
ConjugacyResult<C> solve_conjugacy(const Element<C>& x, const Element<C>& y,
                                   const SearchOptions& options = {}) {
  return detail::solve_with(x, y, [&](SCGraph<C>& graph, const Element<C>& root, const Element<C>& target,
                                      RunStats& stats) {
    return detail::explore(graph, root, &target, detail::arrow_labels<C>(options, stats),
                           [](const Element<C>&) { return true; });
  });
}

/// The whole of SCG(x), rooted at the representative of x found by sliding.
template <GarsideStructure C>
SCGraph<C> enumerate_sc(const Element<C>& x, const SearchOptions& options, RunStats& stats) {
  const std::uint64_t calls_before = x.context().contract_calls();
  const SlideResult<C> sx = slide_to_circuit(x);
  stats.T = sx.entry_index;
  stats.N = sx.period;
  stats.M = std::max(stats.M, sx.period);
  SCGraph<C> graph;
  detail::explore(graph, sx.representative, static_cast<const Element<C>*>(nullptr),
                  detail::arrow_labels<C>(options, stats), [](const Element<C>&) { return true; });
  stats.sc_size = graph.size();
  stats.contract_calls = x.context().contract_calls() - calls_before;
  return graph;
}

template <GarsideStructure C>
SCGraph<C> enumerate_sc(const Element<C>& x, const SearchOptions& options = {}) {
  RunStats stats;
  return enumerate_sc(x, options, stats);
}

/// Reference solver: every vertex is conjugated by every simple element, and
/// new conjugates are kept when they lie in a sliding circuit.
template <GarsideStructure C>
ConjugacyResult<C> naive_solve(const Element<C>& x, const Element<C>& y, const SearchOptions& options = {}) {
  const auto simples = enumerate_simples(x.context(), options.simple_limit);
  return detail::solve_with(x, y, [&](SCGraph<C>& graph, const Element<C>& root, const Element<C>& target,
                                      RunStats&) {
    return detail::explore(graph, root, &target,
                           [&](const Element<C>&) -> const std::vector<SimpleOf<C>>& { return simples; },
                           [](const Element<C>& w) { return in_sliding_circuit(w); });
  });
}

/// SC(x) found by the reference search; arrows are all simple conjugators
/// between vertices, not only indecomposable ones.
template <GarsideStructure C>
SCGraph<C> naive_enumerate_sc(const Element<C>& x, const SearchOptions& options = {}) {
  const auto simples = enumerate_simples(x.context(), options.simple_limit);
  SCGraph<C> graph;
  detail::explore(graph, slide_to_circuit(x).representative, static_cast<const Element<C>*>(nullptr),
                  [&](const Element<C>&) -> const std::vector<SimpleOf<C>>& { return simples; },
                  [](const Element<C>& w) { return in_sliding_circuit(w); });
  return graph;
}

}  // namespace garside
