#include "socle/presentation.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "socle/error.hpp"

namespace socle {

void Presentation::validate() const {
  std::set<Gen> seen;
  for (const Gen& g : gens)
    if (!seen.insert(g).second)
      fail(ErrorCode::Parse, "duplicate generator " + g.name());
  for (const Word& r : relators) {
    if (r.empty())
      fail(ErrorCode::Parse, "relator reduces to the empty word");
    for (const Syllable& s : r.syllables())
      if (!seen.count(s.gen))
        fail(ErrorCode::Parse,
             "relator uses unknown generator " + s.gen.name());
  }
}

ChainComplex2 presentation_complex(const Presentation& p) {
  p.validate();
  ChainComplex2 c;
  c.gens = p.gens;
  c.relators = p.relators;
  c.d2 = IntMatrix(p.gens.size(), p.relators.size());
  for (std::size_t j = 0; j < p.relators.size(); ++j)
    for (std::size_t i = 0; i < p.gens.size(); ++i)
      c.d2(i, j) = exponent_sum(p.relators[j], p.gens[i]);
  return c;
}

HomologyResult homology(const Presentation& p, const JSet& j) {
  ChainComplex2 c = presentation_complex(p);
  HomologyResult h;
  h.h0 = AbelianInvariants::from_factors({}, 1);
  h.h1 = localize(cokernel(c.d2), j);
  h.h2_rank = kernel_rank(c.d2);
  return h;
}

bool is_r_perfect_presentation(const Presentation& p, const JSet& j) {
  ChainComplex2 c = presentation_complex(p);
  return is_trivial_after_localization(cokernel(c.d2), j);
}

static void check_support(const Presentation& p, const Word& w,
                          const char* what) {
  for (const Syllable& s : w.syllables())
    if (std::find(p.gens.begin(), p.gens.end(), s.gen) == p.gens.end())
      fail(ErrorCode::Cert, std::string(what) + " uses generator " +
                                s.gen.name() + " not in the presentation");
}

bool check_certificate(const Presentation& p, const Certificate& cert) {
  p.validate();
  check_support(p, cert.claim, "claim");
  Word prod;
  for (const CertStep& st : cert.steps) {
    if (st.relator_index >= p.relators.size())
      fail(ErrorCode::Cert, "relator index out of range");
    if (st.sign != 1 && st.sign != -1)
      fail(ErrorCode::Cert, "step sign must be +1 or -1");
    check_support(p, st.conjugator, "conjugator");
    Word r = p.relators[st.relator_index];
    if (st.sign < 0) r = invert(r);
    prod = concat(prod, conjugate(r, st.conjugator));
  }
  return prod == cert.claim;
}

namespace {

// Depth-first over step sequences, used only by the CLI convenience mode.
struct CertSearch {
  const Presentation& p;
  const Word& claim;
  std::size_t max_steps;
  std::size_t budget = 2'000'000;  // explored nodes
  std::vector<Word> conjugators;
  Certificate found;

  bool run(const Word& prefix, std::vector<CertStep>& steps) {
    if (budget == 0) return false;
    --budget;
    if (prefix == claim) {
      found.claim = claim;
      found.steps = steps;
      return true;
    }
    if (steps.size() == max_steps) return false;
    for (std::size_t k = 0; k < p.relators.size(); ++k)
      for (int sign : {1, -1})
        for (const Word& c : conjugators) {
          Word r = p.relators[k];
          if (sign < 0) r = invert(r);
          Word next = concat(prefix, conjugate(r, c));
          steps.push_back({c, k, sign});
          if (run(next, steps)) return true;
          steps.pop_back();
        }
    return false;
  }
};

}  // namespace

bool search_certificate(const Presentation& p, const Word& claim,
                        std::size_t max_steps, std::size_t max_conj,
                        Certificate& out) {
  p.validate();
  check_support(p, claim, "claim");
  CertSearch s{p, claim, max_steps, 2'000'000, {}, {}};
  // All reduced words of letter-length <= max_conj over the generators.
  s.conjugators.push_back(Word());
  std::vector<Word> frontier = s.conjugators;
  for (std::size_t len = 1; len <= max_conj; ++len) {
    std::vector<Word> next;
    for (const Word& w : frontier)
      for (const Gen& g : p.gens)
        for (int e : {1, -1}) {
          Word x = concat(w, Word::gen(g, e));
          if (x.length() == Int(len)) next.push_back(x);
        }
    std::sort(next.begin(), next.end(),
              [](const Word& a, const Word& b) {
                return print_word(a) < print_word(b);
              });
    next.erase(std::unique(next.begin(), next.end()), next.end());
    s.conjugators.insert(s.conjugators.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  std::vector<CertStep> steps;
  if (s.run(Word(), steps)) {
    out = s.found;
    return true;
  }
  return false;
}

Presentation free_product(std::span<const Presentation> ps) {
  Presentation out;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    ps[i].validate();
    const std::string prefix = std::to_string(i + 1) + "/";
    for (const Gen& g : ps[i].gens) out.gens.push_back(Gen(prefix + g.name()));
    for (const Word& r : ps[i].relators) {
      std::vector<Syllable> raw;
      for (const Syllable& s : r.syllables())
        raw.push_back({Gen(prefix + s.gen.name()), s.exp});
      out.relators.push_back(Word::from(std::move(raw)));
    }
    if (i) out.name += "*";
    out.name += ps[i].name;
  }
  if (out.name.empty()) out.name = "trivial";
  out.validate();
  return out;
}

// ----- file formats -----

namespace {

std::vector<std::string> tokenize_line(const std::string& line) {
  std::vector<std::string> toks;
  std::istringstream in(line);
  std::string t;
  while (in >> t) toks.push_back(t);
  return toks;
}

// Strip comment, return significant lines.
std::vector<std::vector<std::string>> significant_lines(
    std::string_view text) {
  std::vector<std::vector<std::string>> out;
  std::string cur;
  std::istringstream in{std::string(text)};
  while (std::getline(in, cur)) {
    if (auto hash = cur.find('#'); hash != std::string::npos)
      cur.erase(hash);
    auto toks = tokenize_line(cur);
    if (!toks.empty()) out.push_back(std::move(toks));
  }
  return out;
}

std::string join(const std::vector<std::string>& toks, std::size_t from,
                 std::size_t to) {
  std::string s;
  for (std::size_t i = from; i < to; ++i) {
    if (i > from) s += ' ';
    s += toks[i];
  }
  return s;
}

}  // namespace

Presentation parse_grp(std::string_view text) {
  Presentation p;
  bool named = false;
  for (const auto& toks : significant_lines(text)) {
    if (toks[0] == "group") {
      if (toks.size() != 2)
        fail(ErrorCode::Parse, "group line needs exactly one name");
      if (named) fail(ErrorCode::Parse, "duplicate group line");
      p.name = toks[1];
      named = true;
    } else if (toks[0] == "gens") {
      for (std::size_t i = 1; i < toks.size(); ++i)
        p.gens.push_back(Gen(toks[i]));
    } else if (toks[0] == "rel") {
      if (toks.size() < 2) fail(ErrorCode::Parse, "empty rel line");
      auto eq = std::find(toks.begin() + 1, toks.end(), "=");
      Word w;
      if (eq == toks.end()) {
        w = parse_word(join(toks, 1, toks.size()));
      } else {
        std::size_t at = static_cast<std::size_t>(eq - toks.begin());
        Word u = parse_word(join(toks, 1, at));
        Word v = parse_word(join(toks, at + 1, toks.size()));
        if (std::find(toks.begin() + at + 1, toks.end(), "=") != toks.end())
          fail(ErrorCode::Parse, "more than one '=' in rel line");
        w = concat(u, invert(v));
      }
      p.relators.push_back(std::move(w));
    } else {
      fail(ErrorCode::Parse, "unknown .grp directive '" + toks[0] + "'");
    }
  }
  if (!named) fail(ErrorCode::Parse, ".grp file has no group line");
  p.validate();
  return p;
}

std::string print_grp(const Presentation& p) {
  std::string s = "group " + p.name + "\n";
  s += "gens";
  for (const Gen& g : p.gens) s += " " + g.name();
  s += "\n";
  for (const Word& r : p.relators) s += "rel " + print_word(r) + "\n";
  return s;
}

Certificate parse_cert(std::string_view text) {
  Certificate c;
  bool claimed = false;
  for (const auto& toks : significant_lines(text)) {
    if (toks[0] == "claim") {
      if (claimed) fail(ErrorCode::Parse, "duplicate claim line");
      c.claim = parse_word(join(toks, 1, toks.size()));
      claimed = true;
    } else if (toks[0] == "step") {
      if (toks.size() < 4)
        fail(ErrorCode::Parse,
             "step line needs conjugator, relator index, sign");
      const std::string& sign_tok = toks.back();
      int sign;
      if (sign_tok == "+1")
        sign = 1;
      else if (sign_tok == "-1")
        sign = -1;
      else
        fail(ErrorCode::Parse, "step sign must be +1 or -1");
      Int idx = parse_int(toks[toks.size() - 2]);
      if (idx < 1) fail(ErrorCode::Parse, "relator index is 1-based");
      Word conj = parse_word(join(toks, 1, toks.size() - 2));
      c.steps.push_back(
          {std::move(conj), static_cast<std::size_t>(idx - 1), sign});
    } else {
      fail(ErrorCode::Parse, "unknown .cert directive '" + toks[0] + "'");
    }
  }
  if (!claimed) fail(ErrorCode::Parse, ".cert file has no claim");
  return c;
}

std::string print_cert(const Certificate& c) {
  std::string s = "claim " + print_word(c.claim) + "\n";
  for (const CertStep& st : c.steps) {
    s += "step " + print_word(st.conjugator) + " " +
         std::to_string(st.relator_index + 1) + " " +
         (st.sign > 0 ? "+1" : "-1") + "\n";
  }
  return s;
}

}  // namespace socle
