#include "walkmin/nfa.hpp"

#include <algorithm>

namespace walkmin {

bool Nfa::is_final(int state) const {
  return std::binary_search(finals.begin(), finals.end(), state);
}

namespace {

// Position-automaton ingredients for a subexpression. Positions are
// 1-based indices of atom occurrences in left-to-right order.
struct PosInfo {
  bool nullable = false;
  std::vector<int> first;
  std::vector<int> last;
};

struct Builder {
  std::vector<std::string> position_label;     // index 0 unused
  std::vector<std::vector<int>> follow;        // index 0 unused

  PosInfo build(const RegExp& r) {
    using Kind = RegExp::Kind;
    switch (r.kind()) {
      case Kind::Epsilon:
        return {true, {}, {}};
      case Kind::Atom: {
        int pos = static_cast<int>(position_label.size());
        position_label.push_back(r.label());
        follow.emplace_back();
        return {false, {pos}, {pos}};
      }
      case Kind::Star: {
        PosInfo c = build(r.child());
        link(c.last, c.first);
        return {true, c.first, c.last};
      }
      case Kind::Concat: {
        PosInfo l = build(r.left());
        PosInfo r2 = build(r.right());
        link(l.last, r2.first);
        PosInfo out;
        out.nullable = l.nullable && r2.nullable;
        out.first = l.first;
        if (l.nullable) append(out.first, r2.first);
        out.last = r2.last;
        if (r2.nullable) append(out.last, l.last);
        return out;
      }
      case Kind::Union: {
        PosInfo l = build(r.left());
        PosInfo r2 = build(r.right());
        PosInfo out;
        out.nullable = l.nullable || r2.nullable;
        out.first = l.first;
        append(out.first, r2.first);
        out.last = l.last;
        append(out.last, r2.last);
        return out;
      }
    }
    return {};
  }

  void link(const std::vector<int>& from, const std::vector<int>& to) {
    for (int p : from) append(follow[p], to);
  }

  static void append(std::vector<int>& dst, const std::vector<int>& src) {
    dst.insert(dst.end(), src.begin(), src.end());
  }
};

}  // namespace

Nfa to_nfa(const RegExp& r) {
  Builder b;
  b.position_label.emplace_back();  // slot 0: initial state, no label
  b.follow.emplace_back();
  PosInfo root = b.build(r);

  Nfa n;
  n.state_count = static_cast<int>(b.position_label.size());
  n.initial = 0;
  for (int p : root.first)
    n.transitions.push_back({0, b.position_label[p], p});
  for (int p = 1; p < n.state_count; ++p)
    for (int q : b.follow[p])
      n.transitions.push_back({p, b.position_label[q], q});
  n.finals = root.last;
  if (root.nullable) n.finals.push_back(0);

  std::sort(n.finals.begin(), n.finals.end());
  n.finals.erase(std::unique(n.finals.begin(), n.finals.end()), n.finals.end());
  std::sort(n.transitions.begin(), n.transitions.end());
  n.transitions.erase(std::unique(n.transitions.begin(), n.transitions.end()),
                      n.transitions.end());
  return n;
}

bool accepts(const Nfa& n, std::span<const std::string> word) {
  std::vector<char> current(n.state_count, 0);
  current[n.initial] = 1;
  for (const std::string& letter : word) {
    std::vector<char> next(n.state_count, 0);
    bool any = false;
    for (const NfaTransition& t : n.transitions) {
      if (current[t.from] && t.label == letter) {
        next[t.to] = 1;
        any = true;
      }
    }
    if (!any) return false;
    current = std::move(next);
  }
  for (int f : n.finals)
    if (current[f]) return true;
  return false;
}

}  // namespace walkmin
