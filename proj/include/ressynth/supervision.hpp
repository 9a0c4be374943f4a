/* supervision.hpp -- supervisors, control commands and their transforms
 *
 * A supervisor is a finite automaton over the plant alphabet with every
 * state marked. Controllability requires every uncontrollable event to be
 * defined at every state; observability requires defined unobservable
 * events to be self-loops. The attack-aware transform adds a halt state for
 * unexpected compromised observable events and silent self-loops for
 * compromised unobservable ones, remembering which of those self-loops were
 * genuine in a per-state loop flag.
 */

#pragma once

#include <string>
#include <vector>

#include "ressynth/constraints.hpp"
#include "ressynth/fsa.hpp"

namespace ressynth {

using Supervisor = Fsa;

/// A control command: the set of events enabled at a supervisor state.
/// Always contains every uncontrollable event for a valid supervisor.
using ControlCommand = EventSet;

/// All commands between the uncontrollable set and the full alphabet, in a
/// fixed order (subsets of the controllable events counted in binary over
/// ascending event index). Size is 2^|controllable|.
class CommandSpace {
 public:
  CommandSpace(const Alphabet& sigma, const ControlConstraint& c);

  int size() const { return static_cast<int>(commands_.size()); }
  ControlCommand command(int idx) const { return commands_.at(idx); }
  const std::vector<ControlCommand>& commands() const { return commands_; }

  /// Index of a command; throws if the command is not in the space.
  int index_of(ControlCommand g) const;

 private:
  std::vector<ControlCommand> commands_;
};

struct SupervisorViolation {
  enum class Kind { Controllability, Observability, Marking };
  Kind kind;
  StateId state;
  EventId event;  // -1 for marking violations
  std::string message;
};

/// Diagnostics for the supervisor well-formedness conditions; empty result
/// means valid. Reports every violation rather than stopping at the first.
std::vector<SupervisorViolation> validate_supervisor(
    const Supervisor& s, const ControlConstraint& c);

/// Control command emitted at state `x`: the events defined there.
ControlCommand gamma(const Supervisor& s, StateId x);

/// Supervisor augmented for attack monitoring. `halt` is the added halt
/// state (no outgoing transitions); `dump` is set only for automata that
/// also carry a completion dump state (as produced when decoding). The loop
/// flags record, per original state, which compromised unobservable events
/// were genuinely enabled in the original supervisor.
struct TransformedSupervisor {
  Fsa automaton;
  StateId halt;
  StateId dump = -1;                 // -1 when not completed
  std::vector<EventSet> loop_flags;  // indexed by original state
};

/// Adds, for every original state: a transition to the halt state on each
/// compromised observable event that was undefined, and a self-loop on each
/// compromised unobservable event that was undefined. All original
/// transitions are kept.
TransformedSupervisor transform(const Supervisor& s, const ControlConstraint& c,
                                const AttackConstraint& atk);

/// Inverse of transform: drops the halt state (and dump state if present)
/// together with all transitions into them, and drops each compromised
/// unobservable self-loop whose loop flag is false.
Supervisor untransform(const TransformedSupervisor& t,
                       const ControlConstraint& c, const AttackConstraint& atk);

/// True iff L(lower) <= L(s || g) <= L(upper).
bool check_range_control(const Supervisor& s, const Fsa& g, const Fsa& lower,
                         const Fsa& upper);

/// Specification pair for the behaviour-preserving replacement problem:
/// both bounds equal the reachable product of the reference supervisor and
/// the plant, so any solution has exactly the reference closed-loop
/// language while also resisting attacks.
std::pair<Fsa, Fsa> build_obfuscation_bounds(const Supervisor& reference,
                                             const Fsa& g);

}  // namespace ressynth
