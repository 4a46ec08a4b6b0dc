#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "walkmin/graph.hpp"
#include "walkmin/nfa.hpp"
#include "walkmin/regex.hpp"

// Test-side helpers kept independent of the library's matching machinery:
// a derivative-based membership oracle, deterministic random generators,
// and an accepting-run finder used by the excision property test.

namespace testutil {

// Deterministic splitmix64 stream; avoids libstdc++ distribution quirks.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ull) {}

  std::uint64_t next();
  std::uint64_t below(std::uint64_t n);
  bool chance(std::uint64_t num, std::uint64_t den);

 private:
  std::uint64_t state_;
};

// Word membership computed by word derivatives on a private expression
// tree (with an explicit empty language), independent of the automaton.
bool derivative_accepts(const walkmin::RegExp& r, const std::vector<std::string>& word);

walkmin::RegExp random_regexp(Rng& rng, int max_atoms,
                              const std::vector<std::string>& alphabet);

walkmin::Graph random_graph(Rng& rng, int max_vertices, int max_edges,
                            const std::vector<std::string>& alphabet);

// Some accepting run of the automaton on the walk's label word, as the
// state sequence q_0..q_len; nullopt when the word is rejected.
std::optional<std::vector<int>> find_accepting_run(const walkmin::Nfa& n,
                                                   const std::vector<std::string>& word);

}  // namespace testutil
