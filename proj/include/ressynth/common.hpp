/* common.hpp -- shared error types and small event-set utilities */

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ressynth {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed input text (instance files, supervisor files). Carries the
/// offending line number in the message.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Structurally well-formed input that violates a semantic requirement
/// (alphabet mismatches, non-sink damage states, bad constraint sets).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A SAT backend failed or timed out. Distinct from an UNSAT verdict.
class SolverError : public Error {
 public:
  using Error::Error;
};

/// A consistency check inside the pipeline failed; indicates a bug, not
/// bad user input.
class InternalError : public Error {
 public:
  using Error::Error;
};

using EventId = int;
using StateId = int;

/// Set of events over a fixed alphabet, as a bit mask indexed by EventId.
/// Alphabets are capped at 64 events, which is far beyond the sizes the
/// exponential command space makes tractable anyway.
struct EventSet {
  std::uint64_t bits = 0;

  static constexpr int kMaxEvents = 64;

  constexpr EventSet() = default;
  constexpr explicit EventSet(std::uint64_t b) : bits(b) {}

  constexpr bool contains(EventId e) const { return (bits >> e) & 1u; }
  constexpr bool empty() const { return bits == 0; }
  constexpr int count() const { return __builtin_popcountll(bits); }

  constexpr void insert(EventId e) { bits |= (std::uint64_t{1} << e); }
  constexpr void erase(EventId e) { bits &= ~(std::uint64_t{1} << e); }

  constexpr bool subset_of(EventSet other) const {
    return (bits & ~other.bits) == 0;
  }

  friend constexpr EventSet operator|(EventSet a, EventSet b) {
    return EventSet{a.bits | b.bits};
  }
  friend constexpr EventSet operator&(EventSet a, EventSet b) {
    return EventSet{a.bits & b.bits};
  }
  friend constexpr EventSet operator-(EventSet a, EventSet b) {
    return EventSet{a.bits & ~b.bits};
  }
  friend constexpr bool operator==(EventSet a, EventSet b) {
    return a.bits == b.bits;
  }
  friend constexpr bool operator!=(EventSet a, EventSet b) {
    return a.bits != b.bits;
  }
  friend constexpr bool operator<(EventSet a, EventSet b) {
    return a.bits < b.bits;
  }
};

/// Complement of `s` within an alphabet of `alphabet_size` events.
constexpr EventSet complement(EventSet s, int alphabet_size) {
  std::uint64_t all = (alphabet_size >= 64)
                          ? ~std::uint64_t{0}
                          : ((std::uint64_t{1} << alphabet_size) - 1);
  return EventSet{all & ~s.bits};
}

}  // namespace ressynth
