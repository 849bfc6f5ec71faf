#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "socle/abelian.hpp"
#include "socle/intmat.hpp"
#include "socle/jset.hpp"
#include "socle/word.hpp"

namespace socle {

// Finite presentation <gens | relators>. Generator names distinct,
// relators freely reduced, nonempty, supported on gens.
struct Presentation {
  std::string name;
  std::vector<Gen> gens;
  std::vector<Word> relators;

  void validate() const;  // throws Error(Parse)
  bool operator==(const Presentation&) const = default;
};

// Differential of the presentation 2-complex: rows indexed by generators,
// columns by relators, entry = exponent sum.
struct ChainComplex2 {
  IntMatrix d2;
  std::vector<Gen> gens;
  std::vector<Word> relators;
};

ChainComplex2 presentation_complex(const Presentation& p);

struct HomologyResult {
  AbelianInvariants h0;  // one copy of the coefficient ring
  AbelianInvariants h1;
  std::size_t h2_rank = 0;
};

// Homology of the presentation 2-complex with Z[J^-1] coefficients.
HomologyResult homology(const Presentation& p, const JSet& j);

// H1(-; Z[J^-1]) = 0?
bool is_r_perfect_presentation(const Presentation& p, const JSet& j);

// One step of a product-of-conjugated-relators identity.
struct CertStep {
  Word conjugator;
  std::size_t relator_index = 0;  // 0-based here; file format is 1-based
  int sign = 1;                   // +1 or -1
  bool operator==(const CertStep&) const = default;
};

// Proof object for "claim = 1 in the presented group":
// claim == reduce(prod_i conjugate(relator[k_i]^s_i, c_i)) as free words.
struct Certificate {
  Word claim;
  std::vector<CertStep> steps;
  bool operator==(const Certificate&) const = default;
};

// Pure verification, never searches. Structural problems (index range,
// sign, foreign generators) throw Error(Cert).
bool check_certificate(const Presentation& p, const Certificate& cert);

// Bounded brute-force search for a certificate for the given claim:
// products of at most max_steps conjugated relators, conjugators of
// letter-length at most max_conj. Returns true and fills `out` on success.
bool search_certificate(const Presentation& p, const Word& claim,
                        std::size_t max_steps, std::size_t max_conj,
                        Certificate& out);

// Generator names namespaced "<k>/<name>" by 1-based input position.
Presentation free_product(std::span<const Presentation> ps);

// .grp: "group <name>" once, "gens <n1> <n2> ...", "rel <word>" or
// "rel <u> = <v>" (meaning u v^-1), '#' comments.
Presentation parse_grp(std::string_view text);
std::string print_grp(const Presentation& p);

// .cert: "claim <word>", then "step <conjugator> <relator-index> <+1|-1>"
// lines; indices 1-based; "()" is the empty conjugator.
Certificate parse_cert(std::string_view text);
std::string print_cert(const Certificate& c);

}  // namespace socle
