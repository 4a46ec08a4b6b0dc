#include "walkmin/regex.hpp"

#include <cctype>
#include <utility>

#include "walkmin/error.hpp"

namespace walkmin {

struct RegExp::Node {
  Kind kind;
  std::string label;
  std::shared_ptr<const Node> left;
  std::shared_ptr<const Node> right;
};

RegExp RegExp::epsilon() {
  return RegExp(std::make_shared<Node>(Node{Kind::Epsilon, {}, nullptr, nullptr}));
}

RegExp RegExp::atom(std::string label) {
  if (label.empty()) throw Error("atom label must be nonempty");
  return RegExp(std::make_shared<Node>(Node{Kind::Atom, std::move(label), nullptr, nullptr}));
}

RegExp RegExp::star(RegExp inner) {
  return RegExp(std::make_shared<Node>(Node{Kind::Star, {}, std::move(inner.node_), nullptr}));
}

RegExp RegExp::concat(RegExp left, RegExp right) {
  return RegExp(std::make_shared<Node>(
      Node{Kind::Concat, {}, std::move(left.node_), std::move(right.node_)}));
}

RegExp RegExp::alt(RegExp left, RegExp right) {
  return RegExp(std::make_shared<Node>(
      Node{Kind::Union, {}, std::move(left.node_), std::move(right.node_)}));
}

RegExp::Kind RegExp::kind() const { return node_->kind; }

const std::string& RegExp::label() const {
  if (node_->kind != Kind::Atom) throw Error("label() called on non-atom");
  return node_->label;
}

RegExp RegExp::child() const {
  if (node_->kind != Kind::Star) throw Error("child() called on non-star");
  return RegExp(node_->left);
}

RegExp RegExp::left() const {
  if (node_->kind != Kind::Concat && node_->kind != Kind::Union)
    throw Error("left() called on leaf node");
  return RegExp(node_->left);
}

RegExp RegExp::right() const {
  if (node_->kind != Kind::Concat && node_->kind != Kind::Union)
    throw Error("right() called on leaf node");
  return RegExp(node_->right);
}

bool RegExp::operator==(const RegExp& other) const {
  if (node_ == other.node_) return true;
  if (node_->kind != other.node_->kind) return false;
  switch (node_->kind) {
    case Kind::Epsilon:
      return true;
    case Kind::Atom:
      return node_->label == other.node_->label;
    case Kind::Star:
      return RegExp(node_->left) == RegExp(other.node_->left);
    case Kind::Concat:
    case Kind::Union:
      return RegExp(node_->left) == RegExp(other.node_->left) &&
             RegExp(node_->right) == RegExp(other.node_->right);
  }
  return false;
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  RegExp run() {
    RegExp r = parse_expr();
    skip_ws();
    if (pos_ < text_.size())
      throw ParseError("unexpected character '" + std::string(1, text_[pos_]) +
                           "' at position " + std::to_string(pos_),
                       pos_);
    return r;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek_is(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool peek_starts_base() {
    skip_ws();
    if (pos_ >= text_.size()) return false;
    char c = text_[pos_];
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '(';
  }

  // EXPR := TERM ('+' TERM)*, folded to the right.
  RegExp parse_expr() {
    RegExp first = parse_term();
    if (peek_is('+')) {
      ++pos_;
      return RegExp::alt(std::move(first), parse_expr());
    }
    return first;
  }

  // TERM := FACTOR+ with optional '.' separators, folded to the right.
  RegExp parse_term() {
    RegExp first = parse_factor();
    if (peek_is('.')) {
      ++pos_;
      if (!peek_starts_base())
        throw ParseError("expected expression after '.' at position " + std::to_string(pos_), pos_);
      return RegExp::concat(std::move(first), parse_term());
    }
    if (peek_starts_base()) return RegExp::concat(std::move(first), parse_term());
    return first;
  }

  RegExp parse_factor() {
    RegExp base = parse_base();
    while (peek_is('*')) {
      ++pos_;
      base = RegExp::star(std::move(base));
    }
    return base;
  }

  RegExp parse_base() {
    skip_ws();
    if (pos_ >= text_.size())
      throw ParseError("unexpected end of expression at position " + std::to_string(pos_), pos_);
    char c = text_[pos_];
    if (c == '_') {
      ++pos_;
      return RegExp::epsilon();
    }
    if (c == '(') {
      ++pos_;
      RegExp inner = parse_expr();
      if (!peek_is(')'))
        throw ParseError("expected ')' at position " + std::to_string(pos_), pos_);
      ++pos_;
      return inner;
    }
    if (std::isalnum(static_cast<unsigned char>(c))) {
      std::string label(1, c);
      ++pos_;
      // Apostrophes attach to the atom without intervening whitespace.
      while (pos_ < text_.size() && text_[pos_] == '\'') {
        label.push_back('\'');
        ++pos_;
      }
      return RegExp::atom(std::move(label));
    }
    if (c == ')' || c == '+' || c == '*' || c == '.')
      throw ParseError("unexpected '" + std::string(1, c) + "' at position " +
                           std::to_string(pos_),
                       pos_);
    throw ParseError("unknown character '" + std::string(1, c) + "' at position " +
                         std::to_string(pos_),
                     pos_);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void print_rec(const RegExp& r, std::string& out) {
  using Kind = RegExp::Kind;
  switch (r.kind()) {
    case Kind::Epsilon:
      out += '_';
      break;
    case Kind::Atom:
      out += r.label();
      break;
    case Kind::Star: {
      RegExp c = r.child();
      bool parens = c.kind() == Kind::Union || c.kind() == Kind::Concat;
      if (parens) out += '(';
      print_rec(c, out);
      if (parens) out += ')';
      out += '*';
      break;
    }
    case Kind::Concat: {
      RegExp l = r.left(), rr = r.right();
      // The parser folds concatenation to the right, so a left-nested
      // concat (and any union operand) needs parentheses to round-trip.
      bool lp = l.kind() == Kind::Union || l.kind() == Kind::Concat;
      bool rp = rr.kind() == Kind::Union;
      if (lp) out += '(';
      print_rec(l, out);
      if (lp) out += ')';
      if (rp) out += '(';
      print_rec(rr, out);
      if (rp) out += ')';
      break;
    }
    case Kind::Union: {
      RegExp l = r.left(), rr = r.right();
      bool lp = l.kind() == Kind::Union;
      if (lp) out += '(';
      print_rec(l, out);
      if (lp) out += ')';
      out += '+';
      print_rec(rr, out);
      break;
    }
  }
}

void collect_atoms(const RegExp& r, std::vector<std::string>& out) {
  using Kind = RegExp::Kind;
  switch (r.kind()) {
    case Kind::Epsilon:
      break;
    case Kind::Atom:
      out.push_back(r.label());
      break;
    case Kind::Star:
      collect_atoms(r.child(), out);
      break;
    case Kind::Concat:
    case Kind::Union:
      collect_atoms(r.left(), out);
      collect_atoms(r.right(), out);
      break;
  }
}

}  // namespace

RegExp parse(std::string_view text) { return Parser(text).run(); }

int star_height(const RegExp& r) {
  using Kind = RegExp::Kind;
  switch (r.kind()) {
    case Kind::Epsilon:
    case Kind::Atom:
      return 0;
    case Kind::Star:
      return 1 + star_height(r.child());
    case Kind::Concat:
    case Kind::Union:
      return std::max(star_height(r.left()), star_height(r.right()));
  }
  return 0;
}

std::string to_string(const RegExp& r) {
  std::string out;
  print_rec(r, out);
  return out;
}

std::vector<std::string> atom_labels(const RegExp& r) {
  std::vector<std::string> out;
  collect_atoms(r, out);
  return out;
}

}  // namespace walkmin
