#include "socle/schema.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <filesystem>
#include <set>
#include <sstream>

#include "socle/error.hpp"
#include "socle/report.hpp"

namespace socle {

static std::size_t count_nodes(const SchemaNode& n) {
  std::size_t c = 1;
  for (const SchemaNode& ch : n.children) c += count_nodes(ch);
  return c;
}

std::size_t node_count(const SchemaTree& t) { return count_nodes(t.root); }

static bool complete_node(const SchemaNode& n) {
  if (n.open()) return false;
  return std::all_of(n.children.begin(), n.children.end(), complete_node);
}

bool is_complete(const SchemaTree& t) { return complete_node(t.root); }

// x(<depth>.<i1>.....<ik>); the root is x(0).
static std::string path_name(const std::vector<int>& path) {
  std::string s = "x(" + std::to_string(path.size());
  for (int i : path) s += "." + std::to_string(i);
  return s + ")";
}

namespace {
struct SchemaWalk {
  const JSet* j;  // when set, every exponent must be a J-number
  std::vector<Gen> gens;
  std::vector<Word> relators;

  void visit(const SchemaNode& n, std::vector<int>& path) {
    Gen self{path_name(path)};
    gens.push_back(self);
    if (n.open()) {
      if (!n.children.empty())
        fail(ErrorCode::Parse, "open nodes must be leaves");
      return;
    }
    if (*n.r < 1) fail(ErrorCode::Parse, "node exponent must be >= 1");
    if (j && !is_j_number(*n.r, *j))
      fail(ErrorCode::Parse, "node exponent " + to_string(*n.r) +
                                 " is not invertible-free for primes " +
                                 j->str());
    if (n.children.size() % 2 != 0)
      fail(ErrorCode::Parse, "odd child count at " + self.name());
    Word rel = Word::gen(self, *n.r);
    for (std::size_t i = 0; i + 1 < n.children.size(); i += 2) {
      path.push_back(static_cast<int>(i + 1));
      Gen a{path_name(path)};
      path.back() = static_cast<int>(i + 2);
      Gen b{path_name(path)};
      path.pop_back();
      rel = concat(rel, commutator(Word::gen(a), Word::gen(b)));
    }
    relators.push_back(std::move(rel));
    for (std::size_t i = 0; i < n.children.size(); ++i) {
      path.push_back(static_cast<int>(i + 1));
      visit(n.children[i], path);
      path.pop_back();
    }
  }
};
}  // namespace

static Presentation build_presentation(const SchemaTree& t, const JSet* j) {
  SchemaWalk walk{j, {}, {}};
  std::vector<int> path;
  walk.visit(t.root, path);
  Presentation p;
  std::string shape = print_tree(t);
  std::erase(shape, ' ');
  p.name = shape;
  p.gens = std::move(walk.gens);
  p.relators = std::move(walk.relators);
  p.validate();
  return p;
}

Presentation schema_presentation(const SchemaTree& t, const JSet& j) {
  return build_presentation(t, &j);
}

SchemaHomology schema_homology(const SchemaTree& t, const JSet& j) {
  HomologyResult h = homology(build_presentation(t, nullptr), j);
  return SchemaHomology{std::move(h.h1), h.h2_rank};
}

Presentation universal_truncation(std::span<const SchemaTree> trees,
                                  const JSet& j) {
  std::vector<Presentation> ps;
  ps.reserve(trees.size());
  for (const SchemaTree& t : trees) ps.push_back(schema_presentation(t, j));
  return free_product(ps);
}

namespace {
struct TreeParser {
  std::string_view s;
  std::size_t i = 0;

  void ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  void expect(char c) {
    if (i >= s.size() || s[i] != c)
      fail(ErrorCode::Parse, std::string("expected '") + c + "' in tree");
    ++i;
  }
  SchemaNode node() {
    ws();
    expect('(');
    ws();
    SchemaNode n;
    if (s.substr(i, 4) == "open" &&
        (i + 4 == s.size() || !std::isalnum(static_cast<unsigned char>(s[i + 4])))) {
      i += 4;
    } else {
      std::size_t start = i;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
        ++i;
      if (i == start)
        fail(ErrorCode::Parse, "expected node exponent or 'open'");
      n.r = parse_int(s.substr(start, i - start));
      if (*n.r < 1) fail(ErrorCode::Parse, "node exponent must be >= 1");
    }
    while (true) {
      ws();
      if (i < s.size() && s[i] == ')') {
        ++i;
        break;
      }
      if (i >= s.size() || s[i] != '(')
        fail(ErrorCode::Parse, "expected child '(' or ')' in tree");
      if (n.open()) fail(ErrorCode::Parse, "open nodes must be leaves");
      n.children.push_back(node());
    }
    return n;
  }
};
}  // namespace

SchemaTree parse_tree(std::string_view text) {
  std::string body;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    body += line;
    body += '\n';
  }
  TreeParser p{body};
  SchemaTree t{p.node()};
  p.ws();
  if (p.i != body.size())
    fail(ErrorCode::Parse, "trailing data after tree expression");
  return t;
}

static void print_node(const SchemaNode& n, std::string& out) {
  out += '(';
  if (n.open())
    out += "open";
  else
    out += to_string(*n.r);
  for (const SchemaNode& ch : n.children) {
    out += ' ';
    print_node(ch, out);
  }
  out += ')';
}

std::string print_tree(const SchemaTree& t) {
  std::string out;
  print_node(t.root, out);
  return out;
}

// ----- witness graphs -----

const WitnessNode* WitnessGraph::find(int id) const {
  for (const WitnessNode& n : nodes)
    if (n.id == id) return &n;
  return nullptr;
}

void WitnessGraph::validate() const {
  if (nodes.empty()) fail(ErrorCode::Witness, "witness graph has no nodes");
  std::set<int> ids;
  for (const WitnessNode& n : nodes) {
    if (!ids.insert(n.id).second)
      fail(ErrorCode::Witness,
           "duplicate node id " + std::to_string(n.id));
    if (n.r < 1) fail(ErrorCode::Witness, "node exponent must be >= 1");
  }
  auto known = [&](int id) { return ids.count(id) > 0; };
  if (!known(root)) fail(ErrorCode::Witness, "root id not a node");
  for (const WitnessNode& n : nodes)
    for (auto [a, b] : n.pairs)
      if (!known(a) || !known(b))
        fail(ErrorCode::Witness,
             "pair at node " + std::to_string(n.id) +
                 " references an unknown node");
  for (const auto& [id, path] : cert_refs)
    if (!known(id))
      fail(ErrorCode::Witness,
           "certificate attached to unknown node " + std::to_string(id));
}

// element(v)^r(v) * prod [element(a), element(b)] as a free word.
static Word node_identity(const WitnessGraph& g, const WitnessNode& v) {
  Word w = pow(v.element, v.r);
  for (auto [a, b] : v.pairs)
    w = concat(w, commutator(g.find(a)->element, g.find(b)->element));
  return w;
}

static void check_exponents(const WitnessGraph& g, const JSet& j) {
  for (const WitnessNode& n : g.nodes)
    if (!is_j_number(n.r, j))
      fail(ErrorCode::Witness, "node " + std::to_string(n.id) +
                                   " exponent " + to_string(n.r) +
                                   " is not invertible-free for primes " +
                                   j.str());
}

bool check_witness(const Presentation& target, const WitnessGraph& g,
                   const JSet& j) {
  g.validate();
  check_exponents(g, j);
  std::set<std::string> gen_names;
  for (const Gen& gn : target.gens) gen_names.insert(gn.name());
  for (const WitnessNode& n : g.nodes)
    for (const Syllable& s : n.element.syllables())
      if (!gen_names.count(s.gen.name()))
        fail(ErrorCode::Witness, "node " + std::to_string(n.id) +
                                     " element uses unknown generator " +
                                     s.gen.name());
  for (const WitnessNode& n : g.nodes) {
    auto it = g.certs.find(n.id);
    if (it == g.certs.end())
      fail(ErrorCode::Witness,
           "no certificate for node " + std::to_string(n.id));
    Word want = node_identity(g, n);
    if (!(it->second.claim == want))
      fail(ErrorCode::Witness,
           "certificate claim at node " + std::to_string(n.id) +
               " is " + print_word(it->second.claim) + ", expected " +
               print_word(want));
    if (!check_certificate(target, it->second)) return false;
  }
  return true;
}

bool check_witness(const FiniteGroup& target, const WitnessGraph& g,
                   const JSet& j) {
  g.validate();
  check_exponents(g, j);
  auto eval = [&](int id) { return target.evaluate(g.find(id)->element); };
  for (const WitnessNode& n : g.nodes) {
    int acc = target.power(target.evaluate(n.element), n.r);
    for (auto [a, b] : n.pairs) {
      int x = eval(a), y = eval(b);
      int comm =
          target.mul(target.mul(x, y), target.mul(target.inv(x), target.inv(y)));
      acc = target.mul(acc, comm);
    }
    if (acc != 0) return false;
  }
  return true;
}

Subgroup witnessed_subgroup(const FiniteGroup& g, const JSet& j) {
  std::vector<int> s(g.order());
  for (int i = 0; i < g.order(); ++i) s[i] = i;
  while (true) {
    Subgroup span = closure(g, s);
    SubgroupAsGroup h = subgroup_as_group(g, span);
    QuotientResult ab = quotient(h.group, commutator_subgroup(h.group));
    std::vector<int> next;
    for (int e : s) {
      int image = ab.projection[h.to_sub[e]];
      if (is_j_number(Int(ab.group.element_order(image)), j))
        next.push_back(e);
    }
    if (next == s) return span;
    s = std::move(next);
  }
}

// ----- .wit format -----

WitnessGraph parse_wit(std::string_view text) {
  WitnessGraph g;
  bool have_target = false, have_root = false;
  std::vector<std::array<int, 3>> raw_pairs;
  std::istringstream in{std::string(text)};
  std::string line;
  auto to_id = [](const std::string& tok) {
    Int v = parse_int(tok);
    if (v < 1 || v > 1'000'000) fail(ErrorCode::Parse, "node id out of range");
    return static_cast<int>(v);
  };
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> tok;
    std::string t;
    while (ls >> t) tok.push_back(t);
    if (tok.empty()) continue;
    const std::string& head = tok[0];
    if (head == "target") {
      if (have_target) fail(ErrorCode::Parse, "duplicate target line");
      if (tok.size() != 2) fail(ErrorCode::Parse, "target needs one name");
      g.target_name = tok[1];
      have_target = true;
    } else if (head == "node") {
      if (tok.size() < 4)
        fail(ErrorCode::Parse, "node line needs id, element, exponent");
      WitnessNode n;
      n.id = to_id(tok[1]);
      for (const WitnessNode& prev : g.nodes)
        if (prev.id == n.id)
          fail(ErrorCode::Parse, "duplicate node id " + tok[1]);
      std::string word_text;
      for (std::size_t i = 2; i + 1 < tok.size(); ++i) {
        if (i > 2) word_text += ' ';
        word_text += tok[i];
      }
      n.element = parse_word(word_text);
      n.r = parse_int(tok.back());
      if (n.r < 1) fail(ErrorCode::Parse, "node exponent must be >= 1");
      g.nodes.push_back(std::move(n));
    } else if (head == "pair") {
      if (tok.size() != 4)
        fail(ErrorCode::Parse, "pair line needs node, a, b");
      raw_pairs.push_back({to_id(tok[1]), to_id(tok[2]), to_id(tok[3])});
    } else if (head == "root") {
      if (have_root) fail(ErrorCode::Parse, "duplicate root line");
      if (tok.size() != 2) fail(ErrorCode::Parse, "root needs one id");
      g.root = to_id(tok[1]);
      have_root = true;
    } else if (head == "cert") {
      if (tok.size() != 3)
        fail(ErrorCode::Parse, "cert line needs node id and path");
      int id = to_id(tok[1]);
      if (g.cert_refs.count(id))
        fail(ErrorCode::Parse, "duplicate cert line for node " + tok[1]);
      g.cert_refs[id] = tok[2];
    } else {
      fail(ErrorCode::Parse, "unknown .wit directive '" + head + "'");
    }
  }
  if (!have_target) fail(ErrorCode::Parse, ".wit file has no target line");
  if (!have_root) fail(ErrorCode::Parse, ".wit file has no root line");
  for (const auto& [id, a, b] : raw_pairs) {
    WitnessNode* n = nullptr;
    for (WitnessNode& cand : g.nodes)
      if (cand.id == id) n = &cand;
    if (!n)
      fail(ErrorCode::Witness,
           "pair line references unknown node " + std::to_string(id));
    n->pairs.emplace_back(a, b);
  }
  g.validate();
  return g;
}

std::string print_wit(const WitnessGraph& g) {
  std::string s = "target " + g.target_name + "\n";
  for (const WitnessNode& n : g.nodes) {
    s += "node " + std::to_string(n.id) + " " + print_word(n.element) + " " +
         to_string(n.r) + "\n";
    for (auto [a, b] : n.pairs)
      s += "pair " + std::to_string(n.id) + " " + std::to_string(a) + " " +
           std::to_string(b) + "\n";
  }
  for (const auto& [id, path] : g.cert_refs)
    s += "cert " + std::to_string(id) + " " + path + "\n";
  s += "root " + std::to_string(g.root) + "\n";
  return s;
}

WitnessGraph load_witness(const std::string& path) {
  WitnessGraph g = parse_wit(slurp(path));
  std::filesystem::path dir = std::filesystem::path(path).parent_path();
  for (const auto& [id, ref] : g.cert_refs) {
    std::filesystem::path cert_path = dir / ref;
    g.certs[id] = parse_cert(slurp(cert_path.string()));
  }
  return g;
}

}  // namespace socle
