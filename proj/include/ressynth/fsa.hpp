/* fsa.hpp -- deterministic partial finite automata
 *
 * Core automaton type shared by plants, specification bounds, damage
 * automata and supervisors, together with the operations the rest of the
 * pipeline is built from: completion (totalisation through an absorbing
 * dump state), synchronous product, reachability and language inclusion.
 */

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ressynth/common.hpp"

namespace ressynth {

/// Ordered set of named events. Declaration order is significant: it fixes
/// EventId numbering and, downstream, propositional variable numbering.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> names);

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(EventId e) const { return names_.at(e); }
  const std::vector<std::string>& names() const { return names_; }

  /// Index of a named event, or nullopt if unknown.
  std::optional<EventId> find(const std::string& name) const;

  /// All events as a set.
  EventSet universe() const { return complement(EventSet{}, size()); }

  friend bool operator==(const Alphabet& a, const Alphabet& b) {
    return a.names_ == b.names_;
  }

 private:
  std::vector<std::string> names_;
  std::map<std::string, EventId> index_;
};

struct Transition {
  StateId src;
  EventId event;
  StateId dst;
};

/// Deterministic partial finite automaton. Immutable after construction;
/// state order follows the declaration order of `state_names`.
class Fsa {
 public:
  Fsa(Alphabet alphabet, std::vector<std::string> state_names, StateId initial,
      std::vector<bool> marked, const std::vector<Transition>& transitions);

  /// Convenience: all states marked.
  Fsa(Alphabet alphabet, std::vector<std::string> state_names, StateId initial,
      const std::vector<Transition>& transitions);

  const Alphabet& alphabet() const { return alphabet_; }
  int num_states() const { return static_cast<int>(state_names_.size()); }
  int num_events() const { return alphabet_.size(); }
  StateId initial() const { return initial_; }
  const std::string& state_name(StateId s) const { return state_names_.at(s); }
  const std::vector<std::string>& state_names() const { return state_names_; }
  bool is_marked(StateId s) const { return marked_.at(s); }
  const std::vector<bool>& marked() const { return marked_; }

  bool defined(StateId s, EventId e) const { return next_raw(s, e) >= 0; }
  std::optional<StateId> next(StateId s, EventId e) const {
    int t = next_raw(s, e);
    return t >= 0 ? std::optional<StateId>(t) : std::nullopt;
  }

  /// Events with a transition defined at `s`.
  EventSet enabled_events(StateId s) const;

  /// Transitions in (src, event) order.
  std::vector<Transition> transitions() const;

  /// True if the transition function is total.
  bool is_complete() const;

 private:
  int next_raw(StateId s, EventId e) const { return trans_[s * alphabet_.size() + e]; }

  Alphabet alphabet_;
  std::vector<std::string> state_names_;
  StateId initial_;
  std::vector<bool> marked_;
  std::vector<int> trans_;  // dense (state, event) -> state, -1 when undefined
};

/// An Fsa with a total transition function plus the identity of the dump
/// state introduced by completion (or -1 when none was needed to exist).
struct CompleteFsa {
  Fsa fsa;
  StateId dump;
};

/// Totalises `p` through one fresh absorbing dump state. Every state of `p`
/// becomes marked in the result; the dump state is unmarked. The closed
/// language of the result is the full event monoid, the marked language is
/// the closed language of `p`.
CompleteFsa complete(const Fsa& p);

/// Synchronous product restricted to its reachable part. Shared events
/// synchronise, private events interleave; a transition undefined in a
/// participating component kills the product transition. Composed state
/// names are rendered "(a,b)" for diagnostics.
Fsa sync_product(const Fsa& a, const Fsa& b);

/// States reachable from the initial state, in ascending StateId order.
std::vector<StateId> reachable_states(const Fsa& f);

/// True iff the closed language of `a` is contained in the closed language
/// of `b`. Requires identical alphabets. Decided by checking that no
/// reachable state of a || complete(b) pairs an `a` state with `b`'s dump.
bool check_language_inclusion(const Fsa& a, const Fsa& b);

}  // namespace ressynth
