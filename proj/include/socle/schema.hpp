#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "socle/fingroup.hpp"
#include "socle/jset.hpp"
#include "socle/presentation.hpp"

namespace socle {

// Branching datum for one stage of the tower: a node carries a root
// exponent r >= 1 (a J-number for the ambient J) and an even list of
// children, or is an "open" leaf (a truncation point contributing a free
// generator). Non-open leaves simply have no children.
struct SchemaNode {
  std::optional<Int> r;  // nullopt = open
  std::vector<SchemaNode> children;

  bool open() const { return !r.has_value(); }
  bool operator==(const SchemaNode&) const = default;
};

struct SchemaTree {
  SchemaNode root;
  bool operator==(const SchemaTree&) const = default;
};

std::size_t node_count(const SchemaTree& t);
bool is_complete(const SchemaTree& t);  // no open leaves

// Generators x(<depth>.<i1>...<ik>) (root x(0)) in preorder; one relator
// per non-open node v: x(v)^r(v) * prod [x(c_{2i-1}), x(c_{2i})].
// Validates child parity and that each r is a J-number.
Presentation schema_presentation(const SchemaTree& t, const JSet& j);

struct SchemaHomology {
  AbelianInvariants h1;
  std::size_t h2_rank = 0;
};

// Homology of the tree's presentation complex with coefficients localized
// at j. Only the tree's shape is validated here — exponents need not be
// J-numbers, so the integral answer is available via j = none.
SchemaHomology schema_homology(const SchemaTree& t, const JSet& j);

// Free product of the presentations of several truncations.
Presentation universal_truncation(std::span<const SchemaTree> trees,
                                  const JSet& j);

// S-expression format: "(4 (2) (4))", "(open)".
SchemaTree parse_tree(std::string_view text);
std::string print_tree(const SchemaTree& t);

// One node of a (possibly cyclic) witness graph: an element of the target
// group, its root exponent, and the ordered commutator pairs that certify
// element^r * prod [a_i, b_i] = 1 in the target.
struct WitnessNode {
  int id = 0;  // as written in the file
  Word element;
  Int r;
  std::vector<std::pair<int, int>> pairs;  // node ids
  bool operator==(const WitnessNode&) const = default;
};

struct WitnessGraph {
  std::string target_name;
  std::vector<WitnessNode> nodes;
  int root = 0;                          // node id
  std::map<int, std::string> cert_refs;  // node id -> cert path as written
  std::map<int, Certificate> certs;      // attached proofs (presented targets)

  const WitnessNode* find(int id) const;
  void validate() const;  // ids distinct and referenced ids exist
  bool operator==(const WitnessGraph&) const = default;
};

// Presented target: every node needs an attached certificate whose claim
// is exactly the reduced node identity; verification is check_certificate.
// Structural faults (missing cert, claim mismatch, bad ids, r not a
// J-number) throw Error(Witness); a failing certificate returns false.
bool check_witness(const Presentation& target, const WitnessGraph& g,
                   const JSet& j);

// Finite target: node elements are words over g1..gk, identities are
// evaluated in the Cayley table directly; no certificates involved.
bool check_witness(const FiniteGroup& target, const WitnessGraph& g,
                   const JSet& j);

// Greatest fixpoint S0 = G, S_{k+1} = { g in S_k : the image of g in
// <S_k>^ab has J-number order }; returns <S_inf>. Agrees with
// gamma_radical; computed set-wise as an independent route.
Subgroup witnessed_subgroup(const FiniteGroup& g, const JSet& j);

// .wit: "target <name>", "node <id> <element-word> <r>",
// "pair <node> <a> <b>", "root <id>", "cert <node> <path>".
WitnessGraph parse_wit(std::string_view text);
std::string print_wit(const WitnessGraph& g);

// parse_wit + load and attach every referenced certificate, paths
// resolved relative to the .wit file's directory.
WitnessGraph load_witness(const std::string& path);

}  // namespace socle
