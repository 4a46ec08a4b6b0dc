#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace walkmin {

// Regular expression over string-token atoms.
//
// Immutable tree; copies share structure. Concrete syntax (see parse):
//   EXPR   := TERM ('+' TERM)*
//   TERM   := FACTOR+            ('.' optionally between factors)
//   FACTOR := BASE '*'*
//   BASE   := ATOM | '_' | '(' EXPR ')'
//   ATOM   := [A-Za-z0-9] "'"*
// Whitespace between tokens is ignored. '_' is the empty word.
class RegExp {
 public:
  enum class Kind { Epsilon, Atom, Star, Concat, Union };

  static RegExp epsilon();
  static RegExp atom(std::string label);
  static RegExp star(RegExp inner);
  static RegExp concat(RegExp left, RegExp right);
  static RegExp alt(RegExp left, RegExp right);

  Kind kind() const;
  const std::string& label() const;  // Atom only
  RegExp child() const;              // Star only
  RegExp left() const;               // Concat/Union
  RegExp right() const;              // Concat/Union

  // Structural equality.
  bool operator==(const RegExp& other) const;

 private:
  struct Node;
  explicit RegExp(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// Parses the concrete syntax above. Throws ParseError with a 0-based
// position on malformed input or characters outside the grammar.
RegExp parse(std::string_view text);

// Maximum nesting depth of stars.
int star_height(const RegExp& r);

// Prints so that parse(to_string(r)) is structurally identical to r.
std::string to_string(const RegExp& r);

// Atom labels in left-to-right occurrence order (with repetitions).
std::vector<std::string> atom_labels(const RegExp& r);

}  // namespace walkmin
