#include "testutil.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace testutil {

using walkmin::Edge;
using walkmin::Graph;
using walkmin::Nfa;
using walkmin::NfaTransition;
using walkmin::RegExp;

std::uint64_t Rng::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

std::uint64_t Rng::below(std::uint64_t n) { return next() % n; }

bool Rng::chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

namespace {

// Private expression tree for the derivative oracle. Distinct from the
// library AST on purpose; it needs an empty-language node.
struct DExpr {
  enum class Kind { Empty, Eps, Atom, Star, Cat, Alt } kind;
  std::string label;
  std::shared_ptr<const DExpr> left, right;
};

using DPtr = std::shared_ptr<const DExpr>;

DPtr make(DExpr::Kind kind, std::string label = {}, DPtr l = nullptr, DPtr r = nullptr) {
  return std::make_shared<DExpr>(DExpr{kind, std::move(label), std::move(l), std::move(r)});
}

DPtr d_empty() { return make(DExpr::Kind::Empty); }
DPtr d_eps() { return make(DExpr::Kind::Eps); }

DPtr d_cat(DPtr a, DPtr b) {
  if (a->kind == DExpr::Kind::Empty || b->kind == DExpr::Kind::Empty) return d_empty();
  if (a->kind == DExpr::Kind::Eps) return b;
  if (b->kind == DExpr::Kind::Eps) return a;
  return make(DExpr::Kind::Cat, {}, a, b);
}

DPtr d_alt(DPtr a, DPtr b) {
  if (a->kind == DExpr::Kind::Empty) return b;
  if (b->kind == DExpr::Kind::Empty) return a;
  return make(DExpr::Kind::Alt, {}, a, b);
}

DPtr from_regexp(const RegExp& r) {
  using Kind = RegExp::Kind;
  switch (r.kind()) {
    case Kind::Epsilon:
      return d_eps();
    case Kind::Atom:
      return make(DExpr::Kind::Atom, r.label());
    case Kind::Star:
      return make(DExpr::Kind::Star, {}, from_regexp(r.child()));
    case Kind::Concat:
      return d_cat(from_regexp(r.left()), from_regexp(r.right()));
    case Kind::Union:
      return d_alt(from_regexp(r.left()), from_regexp(r.right()));
  }
  return d_empty();
}

bool d_nullable(const DPtr& e) {
  switch (e->kind) {
    case DExpr::Kind::Empty:
      return false;
    case DExpr::Kind::Eps:
    case DExpr::Kind::Star:
      return true;
    case DExpr::Kind::Atom:
      return false;
    case DExpr::Kind::Cat:
      return d_nullable(e->left) && d_nullable(e->right);
    case DExpr::Kind::Alt:
      return d_nullable(e->left) || d_nullable(e->right);
  }
  return false;
}

DPtr d_derive(const DPtr& e, const std::string& letter) {
  switch (e->kind) {
    case DExpr::Kind::Empty:
    case DExpr::Kind::Eps:
      return d_empty();
    case DExpr::Kind::Atom:
      return e->label == letter ? d_eps() : d_empty();
    case DExpr::Kind::Star:
      return d_cat(d_derive(e->left, letter), make(DExpr::Kind::Star, {}, e->left));
    case DExpr::Kind::Cat: {
      DPtr head = d_cat(d_derive(e->left, letter), e->right);
      if (d_nullable(e->left)) return d_alt(head, d_derive(e->right, letter));
      return head;
    }
    case DExpr::Kind::Alt:
      return d_alt(d_derive(e->left, letter), d_derive(e->right, letter));
  }
  return d_empty();
}

}  // namespace

bool derivative_accepts(const RegExp& r, const std::vector<std::string>& word) {
  DPtr e = from_regexp(r);
  for (const std::string& letter : word) {
    e = d_derive(e, letter);
    if (e->kind == DExpr::Kind::Empty) return false;
  }
  return d_nullable(e);
}

RegExp random_regexp(Rng& rng, int max_atoms, const std::vector<std::string>& alphabet) {
  int budget = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_atoms)));

  // Weighted shapes; stars kept shallow so the samples stay small.
  std::function<RegExp(int&, int)> gen = [&](int& atoms_left, int star_depth) -> RegExp {
    if (atoms_left <= 1) {
      if (rng.chance(1, 10)) return RegExp::epsilon();
      atoms_left = 0;
      return RegExp::atom(alphabet[rng.below(alphabet.size())]);
    }
    std::uint64_t pick = rng.below(10);
    if (pick < 4) {
      atoms_left -= 1;
      return RegExp::atom(alphabet[rng.below(alphabet.size())]);
    }
    if (pick < 7) {
      int left_share = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(atoms_left - 1)));
      int right_share = atoms_left - left_share;
      RegExp l = gen(left_share, star_depth);
      RegExp r2 = gen(right_share, star_depth);
      atoms_left = 0;
      return RegExp::concat(std::move(l), std::move(r2));
    }
    if (pick < 9) {
      int left_share = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(atoms_left - 1)));
      int right_share = atoms_left - left_share;
      RegExp l = gen(left_share, star_depth);
      RegExp r2 = gen(right_share, star_depth);
      atoms_left = 0;
      return RegExp::alt(std::move(l), std::move(r2));
    }
    if (star_depth >= 2) {
      atoms_left -= 1;
      return RegExp::atom(alphabet[rng.below(alphabet.size())]);
    }
    return RegExp::star(gen(atoms_left, star_depth + 1));
  };
  return gen(budget, 0);
}

Graph random_graph(Rng& rng, int max_vertices, int max_edges,
                   const std::vector<std::string>& alphabet) {
  int n = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_vertices)));
  std::vector<std::string> vertices;
  for (int i = 0; i < n; ++i) vertices.push_back("v" + std::to_string(i));

  int m = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_edges)));
  std::set<Edge> edges;
  for (int i = 0; i < m; ++i)
    edges.insert({vertices[rng.below(vertices.size())],
                  alphabet[rng.below(alphabet.size())],
                  vertices[rng.below(vertices.size())]});
  return Graph(vertices, alphabet, {edges.begin(), edges.end()});
}

std::optional<std::vector<int>> find_accepting_run(const Nfa& n,
                                                   const std::vector<std::string>& word) {
  std::vector<int> run = {n.initial};
  std::function<bool(std::size_t, int)> dfs = [&](std::size_t at, int state) -> bool {
    if (at == word.size()) return n.is_final(state);
    for (const NfaTransition& t : n.transitions) {
      if (t.from != state || t.label != word[at]) continue;
      run.push_back(t.to);
      if (dfs(at + 1, t.to)) return true;
      run.pop_back();
    }
    return false;
  };
  if (dfs(0, n.initial)) return run;
  return std::nullopt;
}

}  // namespace testutil
