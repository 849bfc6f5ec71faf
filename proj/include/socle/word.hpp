#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "socle/numeric.hpp"

namespace socle {

// Named free-group generator. Names are nonempty strings over
// [A-Za-z0-9_()./-] with balanced parentheses, not starting with '(':
// enough for path-shaped names like x(2.1.4) while keeping the word
// grammar unambiguous.
class Gen {
 public:
  Gen() = default;
  explicit Gen(std::string name);  // validates
  const std::string& name() const { return name_; }
  bool operator==(const Gen&) const = default;
  auto operator<=>(const Gen&) const = default;

 private:
  std::string name_;
};

struct Syllable {
  Gen gen;
  Int exp;  // nonzero
  bool operator==(const Syllable&) const = default;
};

// Freely reduced word in syllable (run-length) form: adjacent syllables
// have distinct generators, no zero exponents. Construction reduces.
class Word {
 public:
  Word() = default;  // empty word
  static Word from(std::vector<Syllable> raw);  // reduces
  static Word gen(const Gen& g, Int exp = 1);

  const std::vector<Syllable>& syllables() const { return syll_; }
  bool empty() const { return syll_.empty(); }
  // Total letter length sum |e_i| as Int (can be large).
  Int length() const;

  bool operator==(const Word&) const = default;

 private:
  friend Word reduce(const std::vector<Syllable>& raw);
  std::vector<Syllable> syll_;
};

// One linear pass with a stack; cascading cancellations included.
Word reduce(const std::vector<Syllable>& raw);

Word concat(const Word& a, const Word& b);
Word invert(const Word& w);
// [u, v] = u v u^-1 v^-1
Word commutator(const Word& u, const Word& v);
// c w c^-1
Word conjugate(const Word& w, const Word& c);
// w^n; n may be negative. Expansion of multi-syllable bases is capped
// (error Cap) so pathological exponents cannot exhaust memory.
Word pow(const Word& w, const Int& n);

Int exponent_sum(const Word& w, const Gen& g);

// Syntax: whitespace-separated factors; factor = atom ['^' int];
// atom = name | '(' word ')' | '[' word ',' word ']'. '^1' omissible.
// Parentheses directly attached to a name char belong to the name.
// Groups and commutators expand before reduction. "()" is the empty word.
Word parse_word(std::string_view text);

// Canonical form: syllables as name or name^k, space-separated; empty
// word prints as "()". parse(print(w)) == w.
std::string print_word(const Word& w);

}  // namespace socle
