#pragma once

#include <optional>
#include <string>
#include <vector>

#include "walkmin/graph.hpp"
#include "walkmin/regex.hpp"

namespace walkmin {

// Minimal-multiset semantics: the bag-minimal matches from s to t.
std::vector<Walk> mm_set(const Graph& g, const RegExp& r, const std::string& s,
                         const std::string& t);

// Shortest-minimal-set semantics: the set-then-length-minimal matches.
std::vector<Walk> sms_set(const Graph& g, const RegExp& r, const std::string& s,
                          const std::string& t);

// Union over all (s, t) pairs; minimality stays per pair.
std::vector<Walk> mm_set_all(const Graph& g, const RegExp& r);
std::vector<Walk> sms_set_all(const Graph& g, const RegExp& r);

std::vector<Walk> trail_set(const Graph& g, const RegExp& r, const std::string& s,
                            const std::string& t);
std::vector<Walk> shortest_set(const Graph& g, const RegExp& r, const std::string& s,
                               const std::string& t);
std::vector<Walk> match_set(const Graph& g, const RegExp& r, const std::string& s,
                            const std::string& t, std::size_t max_len);

struct MembershipResult {
  bool member = false;
  bool is_match = false;                 // walk matches r between its endpoints
  std::optional<Walk> certificate;       // dominating walk when rejected
};

// Does w belong to the minimal set? Throws Error when w is not a walk of g.
// A walk outside Match is a non-member without certificate.
bool mm_membership(const Graph& g, const RegExp& r, const Walk& w);
bool sms_membership(const Graph& g, const RegExp& r, const Walk& w);

MembershipResult mm_membership_check(const Graph& g, const RegExp& r, const Walk& w);
MembershipResult sms_membership_check(const Graph& g, const RegExp& r, const Walk& w);

}  // namespace walkmin
