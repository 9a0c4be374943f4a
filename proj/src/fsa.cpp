#include "ressynth/fsa.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace ressynth {

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  if (static_cast<int>(names_.size()) > EventSet::kMaxEvents)
    throw ValidationError("alphabet too large (limit " +
                          std::to_string(EventSet::kMaxEvents) + " events)");
  for (int i = 0; i < static_cast<int>(names_.size()); ++i) {
    if (names_[i].empty())
      throw ValidationError("empty event name in alphabet");
    auto [it, fresh] = index_.emplace(names_[i], i);
    (void)it;
    if (!fresh)
      throw ValidationError("duplicate event name '" + names_[i] + "'");
  }
}

std::optional<EventId> Alphabet::find(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Fsa::Fsa(Alphabet alphabet, std::vector<std::string> state_names,
         StateId initial, std::vector<bool> marked,
         const std::vector<Transition>& transitions)
    : alphabet_(std::move(alphabet)),
      state_names_(std::move(state_names)),
      initial_(initial),
      marked_(std::move(marked)) {
  const int ns = static_cast<int>(state_names_.size());
  if (ns == 0) throw ValidationError("automaton needs at least one state");
  if (initial_ < 0 || initial_ >= ns)
    throw ValidationError("initial state out of range");
  if (static_cast<int>(marked_.size()) != ns)
    throw ValidationError("marked vector size mismatch");
  {
    std::map<std::string, int> seen;
    for (int i = 0; i < ns; ++i) {
      if (state_names_[i].empty()) throw ValidationError("empty state name");
      if (!seen.emplace(state_names_[i], i).second)
        throw ValidationError("duplicate state name '" + state_names_[i] + "'");
    }
  }
  trans_.assign(static_cast<size_t>(ns) * alphabet_.size(), -1);
  for (const Transition& t : transitions) {
    if (t.src < 0 || t.src >= ns || t.dst < 0 || t.dst >= ns)
      throw ValidationError("transition state out of range");
    if (t.event < 0 || t.event >= alphabet_.size())
      throw ValidationError("transition event out of range");
    int& cell = trans_[t.src * alphabet_.size() + t.event];
    if (cell >= 0)
      throw ValidationError("nondeterministic transition at state '" +
                            state_names_[t.src] + "' on event '" +
                            alphabet_.name(t.event) + "'");
    cell = t.dst;
  }
}

Fsa::Fsa(Alphabet alphabet, std::vector<std::string> state_names,
         StateId initial, const std::vector<Transition>& transitions)
    : Fsa(std::move(alphabet), state_names, initial,
          std::vector<bool>(state_names.size(), true), transitions) {}

EventSet Fsa::enabled_events(StateId s) const {
  EventSet out;
  for (EventId e = 0; e < alphabet_.size(); ++e)
    if (defined(s, e)) out.insert(e);
  return out;
}

std::vector<Transition> Fsa::transitions() const {
  std::vector<Transition> out;
  for (StateId s = 0; s < num_states(); ++s)
    for (EventId e = 0; e < alphabet_.size(); ++e)
      if (int t = next_raw(s, e); t >= 0) out.push_back({s, e, t});
  return out;
}

bool Fsa::is_complete() const {
  for (StateId s = 0; s < num_states(); ++s)
    for (EventId e = 0; e < alphabet_.size(); ++e)
      if (!defined(s, e)) return false;
  return true;
}

namespace {

// Fresh name not clashing with the given ones.
std::string fresh_name(const std::vector<std::string>& taken,
                       const std::string& base) {
  std::string name = base;
  int k = 0;
  while (std::find(taken.begin(), taken.end(), name) != taken.end())
    name = base + "_" + std::to_string(k++);
  return name;
}

}  // namespace

CompleteFsa complete(const Fsa& p) {
  std::vector<std::string> names = p.state_names();
  const StateId dump = static_cast<StateId>(names.size());
  names.push_back(fresh_name(names, "dump"));

  std::vector<bool> marked(names.size(), true);
  marked[dump] = false;

  std::vector<Transition> trans = p.transitions();
  for (StateId s = 0; s < p.num_states(); ++s)
    for (EventId e = 0; e < p.num_events(); ++e)
      if (!p.defined(s, e)) trans.push_back({s, e, dump});
  for (EventId e = 0; e < p.num_events(); ++e) trans.push_back({dump, e, dump});

  return CompleteFsa{
      Fsa(p.alphabet(), std::move(names), p.initial(), std::move(marked), trans),
      dump};
}

Fsa sync_product(const Fsa& a, const Fsa& b) {
  // Union alphabet: a's events first, then b's events not in a.
  std::vector<std::string> ev_names = a.alphabet().names();
  for (const std::string& n : b.alphabet().names())
    if (!a.alphabet().find(n)) ev_names.push_back(n);
  Alphabet sigma(ev_names);

  std::vector<std::optional<EventId>> to_a(sigma.size()), to_b(sigma.size());
  for (EventId e = 0; e < sigma.size(); ++e) {
    to_a[e] = a.alphabet().find(sigma.name(e));
    to_b[e] = b.alphabet().find(sigma.name(e));
  }

  std::map<std::pair<StateId, StateId>, StateId> index;
  std::vector<std::pair<StateId, StateId>> pairs;
  std::deque<StateId> queue;
  auto intern = [&](StateId qa, StateId qb) {
    auto [it, fresh] = index.emplace(std::make_pair(qa, qb),
                                     static_cast<StateId>(pairs.size()));
    if (fresh) {
      pairs.emplace_back(qa, qb);
      queue.push_back(it->second);
    }
    return it->second;
  };

  intern(a.initial(), b.initial());
  std::vector<Transition> trans;
  while (!queue.empty()) {
    StateId s = queue.front();
    queue.pop_front();
    auto [qa, qb] = pairs[s];
    for (EventId e = 0; e < sigma.size(); ++e) {
      StateId na = qa, nb = qb;
      if (to_a[e]) {
        auto t = a.next(qa, *to_a[e]);
        if (!t) continue;
        na = *t;
      }
      if (to_b[e]) {
        auto t = b.next(qb, *to_b[e]);
        if (!t) continue;
        nb = *t;
      }
      trans.push_back({s, e, intern(na, nb)});
    }
  }

  std::vector<std::string> names;
  std::vector<bool> marked;
  names.reserve(pairs.size());
  for (auto& [qa, qb] : pairs) {
    names.push_back("(" + a.state_name(qa) + "," + b.state_name(qb) + ")");
    marked.push_back(a.is_marked(qa) && b.is_marked(qb));
  }
  return Fsa(std::move(sigma), std::move(names), 0, std::move(marked), trans);
}

std::vector<StateId> reachable_states(const Fsa& f) {
  std::vector<bool> seen(f.num_states(), false);
  std::deque<StateId> queue{f.initial()};
  seen[f.initial()] = true;
  while (!queue.empty()) {
    StateId s = queue.front();
    queue.pop_front();
    for (EventId e = 0; e < f.num_events(); ++e)
      if (auto t = f.next(s, e); t && !seen[*t]) {
        seen[*t] = true;
        queue.push_back(*t);
      }
  }
  std::vector<StateId> out;
  for (StateId s = 0; s < f.num_states(); ++s)
    if (seen[s]) out.push_back(s);
  return out;
}

bool check_language_inclusion(const Fsa& a, const Fsa& b) {
  if (!(a.alphabet() == b.alphabet()))
    throw ValidationError("language inclusion requires identical alphabets");
  CompleteFsa bc = complete(b);
  // Pair walk; b's side is total, so the product is driven by a alone.
  std::vector<std::vector<bool>> seen(
      a.num_states(), std::vector<bool>(bc.fsa.num_states(), false));
  std::deque<std::pair<StateId, StateId>> queue;
  queue.emplace_back(a.initial(), bc.fsa.initial());
  seen[a.initial()][bc.fsa.initial()] = true;
  while (!queue.empty()) {
    auto [qa, qb] = queue.front();
    queue.pop_front();
    if (qb == bc.dump) return false;
    for (EventId e = 0; e < a.num_events(); ++e) {
      auto ta = a.next(qa, e);
      if (!ta) continue;
      StateId tb = *bc.fsa.next(qb, e);
      if (!seen[*ta][tb]) {
        seen[*ta][tb] = true;
        queue.emplace_back(*ta, tb);
      }
    }
  }
  return true;
}

}  // namespace ressynth
