#include "socle/word.hpp"

#include <cctype>

#include "socle/error.hpp"

namespace socle {

static bool name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '(' ||
         c == ')' || c == '.' || c == '/' || c == '-';
}

Gen::Gen(std::string name) : name_(std::move(name)) {
  if (name_.empty()) fail(ErrorCode::Parse, "empty generator name");
  if (name_[0] == '(')
    fail(ErrorCode::Parse, "generator name may not start with '(': " + name_);
  int depth = 0;
  for (char c : name_) {
    if (!name_char(c))
      fail(ErrorCode::Parse, "bad character in generator name: " + name_);
    if (c == '(') ++depth;
    if (c == ')' && --depth < 0)
      fail(ErrorCode::Parse, "unbalanced ')' in generator name: " + name_);
  }
  if (depth != 0)
    fail(ErrorCode::Parse, "unbalanced '(' in generator name: " + name_);
}

Word reduce(const std::vector<Syllable>& raw) {
  std::vector<Syllable> stack;
  for (const Syllable& s : raw) {
    if (s.exp == 0) continue;
    if (!stack.empty() && stack.back().gen == s.gen) {
      stack.back().exp += s.exp;
      if (stack.back().exp == 0) stack.pop_back();
    } else {
      stack.push_back(s);
    }
  }
  Word w;
  w.syll_ = std::move(stack);
  return w;
}

Word Word::from(std::vector<Syllable> raw) { return reduce(raw); }

Word Word::gen(const Gen& g, Int exp) {
  Word w;
  if (exp != 0) w.syll_.push_back({g, std::move(exp)});
  return w;
}

Int Word::length() const {
  Int n = 0;
  for (const Syllable& s : syll_) n += abs(s.exp);
  return n;
}

Word concat(const Word& a, const Word& b) {
  std::vector<Syllable> raw = a.syllables();
  raw.insert(raw.end(), b.syllables().begin(), b.syllables().end());
  return reduce(raw);
}

Word invert(const Word& w) {
  std::vector<Syllable> raw;
  raw.reserve(w.syllables().size());
  for (auto it = w.syllables().rbegin(); it != w.syllables().rend(); ++it)
    raw.push_back({it->gen, -it->exp});
  return Word::from(std::move(raw));
}

Word commutator(const Word& u, const Word& v) {
  return concat(concat(u, v), concat(invert(u), invert(v)));
}

Word conjugate(const Word& w, const Word& c) {
  return concat(concat(c, w), invert(c));
}

// Upper bound on syllables a single expansion may produce.
static const Int kExpansionCap = 1 << 20;

Word pow(const Word& w, const Int& n) {
  if (n == 0 || w.empty()) return Word();
  const Word base = n > 0 ? w : invert(w);
  Int m = abs(n);
  if (base.syllables().size() == 1) {
    const Syllable& s = base.syllables()[0];
    return Word::gen(s.gen, s.exp * m);
  }
  if (m * Int(base.syllables().size()) > kExpansionCap)
    fail(ErrorCode::Cap, "word power expansion exceeds cap");
  std::vector<Syllable> raw;
  for (Int i = 0; i < m; ++i)
    raw.insert(raw.end(), base.syllables().begin(), base.syllables().end());
  return reduce(raw);
}

Int exponent_sum(const Word& w, const Gen& g) {
  Int sum = 0;
  for (const Syllable& s : w.syllables())
    if (s.gen == g) sum += s.exp;
  return sum;
}

namespace {

// Recursive-descent parser over the raw characters. Structural characters
// '(' '[' ']' ',' '^' and whitespace delimit; a '(' reached while scanning
// a name is absorbed into the name together with its balanced group, which
// is what makes path names like x(2.1.4) work.
class WordParser {
 public:
  explicit WordParser(std::string_view s) : s_(s) {}

  Word parse_all() {
    std::vector<Syllable> raw;
    parse_sequence(raw);
    skip_ws();
    if (pos_ != s_.size())
      fail(ErrorCode::Parse, "unexpected '" + std::string(1, s_[pos_]) +
                                 "' in word at offset " + std::to_string(pos_));
    return reduce(raw);
  }

 private:
  void skip_ws() {
    while (pos_ < s_.size() &&
           std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }

  bool at_terminator() {
    if (pos_ >= s_.size()) return true;
    char c = s_[pos_];
    return c == ')' || c == ']' || c == ',';
  }

  void parse_sequence(std::vector<Syllable>& out) {
    while (true) {
      skip_ws();
      if (at_terminator()) return;
      parse_factor(out);
    }
  }

  void parse_factor(std::vector<Syllable>& out) {
    Word atom = parse_atom();
    skip_ws();
    Int e = 1;
    if (pos_ < s_.size() && s_[pos_] == '^') {
      ++pos_;
      skip_ws();
      e = parse_exponent();
    }
    Word v = pow(atom, e);
    out.insert(out.end(), v.syllables().begin(), v.syllables().end());
  }

  Word parse_atom() {
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      std::vector<Syllable> raw;
      parse_sequence(raw);
      expect(')');
      return reduce(raw);
    }
    if (c == '[') {
      ++pos_;
      std::vector<Syllable> u, v;
      parse_sequence(u);
      expect(',');
      parse_sequence(v);
      expect(']');
      return commutator(reduce(u), reduce(v));
    }
    if (c == '^')
      fail(ErrorCode::Parse, "'^' without a base in word");
    return Word::gen(parse_name());
  }

  Gen parse_name() {
    std::size_t start = pos_;
    while (pos_ < s_.size()) {
      char c = s_[pos_];
      if (c == '(') {
        if (pos_ == start) break;  // grouping, not part of a name
        absorb_name_parens();
        continue;
      }
      if (!name_char(c) || c == ')') break;
      ++pos_;
    }
    if (pos_ == start)
      fail(ErrorCode::Parse, "expected generator name at offset " +
                                 std::to_string(start));
    return Gen(std::string(s_.substr(start, pos_ - start)));
  }

  void absorb_name_parens() {
    int depth = 0;
    do {
      if (pos_ >= s_.size())
        fail(ErrorCode::Parse, "unbalanced '(' inside generator name");
      char c = s_[pos_];
      if (c == '(')
        ++depth;
      else if (c == ')')
        --depth;
      else if (!name_char(c))
        fail(ErrorCode::Parse, "bad character inside generator name");
      ++pos_;
    } while (depth > 0);
  }

  Int parse_exponent() {
    std::size_t start = pos_;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
    while (pos_ < s_.size() &&
           std::isdigit(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
    if (pos_ == start ||
        (pos_ == start + 1 && !std::isdigit(static_cast<unsigned char>(
                                  s_[start]))))
      fail(ErrorCode::Parse, "missing exponent after '^'");
    return parse_int(s_.substr(start, pos_ - start));
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= s_.size() || s_[pos_] != c)
      fail(ErrorCode::Parse, std::string("expected '") + c + "' in word");
    ++pos_;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Word parse_word(std::string_view text) { return WordParser(text).parse_all(); }

std::string print_word(const Word& w) {
  if (w.empty()) return "()";
  std::string s;
  for (const Syllable& syl : w.syllables()) {
    if (!s.empty()) s += ' ';
    s += syl.gen.name();
    if (syl.exp != 1) {
      s += '^';
      s += to_string(syl.exp);
    }
  }
  return s;
}

}  // namespace socle
