#pragma once

#include <compare>
#include <span>
#include <string>
#include <vector>

#include "walkmin/regex.hpp"

namespace walkmin {

struct NfaTransition {
  int from;
  std::string label;
  int to;

  auto operator<=>(const NfaTransition&) const = default;
};

// Epsilon-free automaton built by the position construction:
// one state per atom occurrence plus the initial state 0.
struct Nfa {
  int state_count = 0;
  int initial = 0;
  std::vector<int> finals;                 // sorted, unique
  std::vector<NfaTransition> transitions;  // sorted, unique

  bool is_final(int state) const;
};

Nfa to_nfa(const RegExp& r);

bool accepts(const Nfa& n, std::span<const std::string> word);

}  // namespace walkmin
