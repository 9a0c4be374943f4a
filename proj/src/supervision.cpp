#include "ressynth/supervision.hpp"

#include <algorithm>

namespace ressynth {

void validate_constraints(const Alphabet& sigma, const ControlConstraint& c,
                          const AttackConstraint& a) {
  EventSet all = sigma.universe();
  if (!c.controllable.subset_of(all) || !c.observable.subset_of(all) ||
      !a.observable.subset_of(all))
    throw ValidationError("constraint set mentions events outside the alphabet");
  if (!a.compromised.subset_of(c.controllable))
    throw ValidationError("compromised events must be controllable");
}

CommandSpace::CommandSpace(const Alphabet& sigma, const ControlConstraint& c) {
  std::vector<EventId> ctrl;
  for (EventId e = 0; e < sigma.size(); ++e)
    if (c.controllable.contains(e)) ctrl.push_back(e);
  const EventSet uc = c.uncontrollable(sigma);
  const std::uint64_t n = std::uint64_t{1} << ctrl.size();
  commands_.reserve(n);
  for (std::uint64_t k = 0; k < n; ++k) {
    ControlCommand g = uc;
    for (size_t b = 0; b < ctrl.size(); ++b)
      if ((k >> b) & 1u) g.insert(ctrl[b]);
    commands_.push_back(g);
  }
}

int CommandSpace::index_of(ControlCommand g) const {
  auto it = std::find(commands_.begin(), commands_.end(), g);
  if (it == commands_.end())
    throw ValidationError("command not in the command space");
  return static_cast<int>(it - commands_.begin());
}

std::vector<SupervisorViolation> validate_supervisor(
    const Supervisor& s, const ControlConstraint& c) {
  std::vector<SupervisorViolation> out;
  const Alphabet& sigma = s.alphabet();
  const EventSet uc = c.uncontrollable(sigma);
  const EventSet uo = c.unobservable(sigma);
  for (StateId x = 0; x < s.num_states(); ++x) {
    if (!s.is_marked(x))
      out.push_back({SupervisorViolation::Kind::Marking, x, -1,
                     "state '" + s.state_name(x) + "' is not marked"});
    for (EventId e = 0; e < sigma.size(); ++e) {
      if (uc.contains(e) && !s.defined(x, e))
        out.push_back({SupervisorViolation::Kind::Controllability, x, e,
                       "uncontrollable event '" + sigma.name(e) +
                           "' undefined at state '" + s.state_name(x) + "'"});
      if (uo.contains(e))
        if (auto t = s.next(x, e); t && *t != x)
          out.push_back({SupervisorViolation::Kind::Observability, x, e,
                         "unobservable event '" + sigma.name(e) +
                             "' moves state '" + s.state_name(x) + "' to '" +
                             s.state_name(*t) + "'"});
    }
  }
  return out;
}

ControlCommand gamma(const Supervisor& s, StateId x) {
  if (x < 0 || x >= s.num_states())
    throw ValidationError("gamma: unknown supervisor state");
  return s.enabled_events(x);
}

TransformedSupervisor transform(const Supervisor& s, const ControlConstraint& c,
                                const AttackConstraint& atk) {
  validate_constraints(s.alphabet(), c, atk);
  const Alphabet& sigma = s.alphabet();
  const EventSet comp_obs = atk.compromised & c.observable;
  const EventSet comp_unobs = atk.compromised - c.observable;

  std::vector<std::string> names = s.state_names();
  std::string halt_name = "halt";
  while (std::find(names.begin(), names.end(), halt_name) != names.end())
    halt_name += "_";
  const StateId halt = static_cast<StateId>(names.size());
  names.push_back(halt_name);

  std::vector<Transition> trans = s.transitions();
  std::vector<EventSet> loops(s.num_states());
  for (StateId x = 0; x < s.num_states(); ++x) {
    for (EventId e = 0; e < sigma.size(); ++e) {
      if (comp_obs.contains(e) && !s.defined(x, e))
        trans.push_back({x, e, halt});
      if (comp_unobs.contains(e)) {
        if (s.defined(x, e))
          loops[x].insert(e);
        else
          trans.push_back({x, e, x});
      }
    }
  }
  std::vector<bool> marked(names.size(), true);
  return TransformedSupervisor{
      Fsa(sigma, std::move(names), s.initial(), std::move(marked), trans), halt,
      -1, std::move(loops)};
}

Supervisor untransform(const TransformedSupervisor& t,
                       const ControlConstraint& c, const AttackConstraint& atk) {
  const Alphabet& sigma = t.automaton.alphabet();
  const EventSet comp_unobs = atk.compromised - c.observable;

  auto is_extra = [&](StateId x) { return x == t.halt || x == t.dump; };
  std::vector<std::string> names;
  std::vector<StateId> back;  // new id -> old id
  for (StateId x = 0; x < t.automaton.num_states(); ++x)
    if (!is_extra(x)) {
      names.push_back(t.automaton.state_name(x));
      back.push_back(x);
    }
  std::vector<StateId> fwd(t.automaton.num_states(), -1);
  for (size_t i = 0; i < back.size(); ++i) fwd[back[i]] = static_cast<StateId>(i);

  std::vector<Transition> trans;
  for (size_t i = 0; i < back.size(); ++i) {
    StateId x = back[i];
    for (EventId e = 0; e < sigma.size(); ++e) {
      auto nx = t.automaton.next(x, e);
      if (!nx || is_extra(*nx)) continue;
      if (comp_unobs.contains(e) && *nx == x &&
          !t.loop_flags.at(x).contains(e))
        continue;  // synthetic self-loop, not part of the original supervisor
      trans.push_back({static_cast<StateId>(i), e, fwd[*nx]});
    }
  }
  return Fsa(sigma, std::move(names), fwd[t.automaton.initial()], trans);
}

bool check_range_control(const Supervisor& s, const Fsa& g, const Fsa& lower,
                         const Fsa& upper) {
  Fsa loop = sync_product(s, g);
  return check_language_inclusion(lower, loop) &&
         check_language_inclusion(loop, upper);
}

std::pair<Fsa, Fsa> build_obfuscation_bounds(const Supervisor& reference,
                                             const Fsa& g) {
  Fsa loop = sync_product(reference, g);
  return {loop, loop};
}

}  // namespace ressynth
