#include "socle/fingroup.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "socle/error.hpp"

namespace socle {

Perm perm_identity(int n) {
  Perm p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  return p;
}

Perm perm_compose(const Perm& p, const Perm& q) {
  if (p.size() != q.size()) fail(ErrorCode::Parse, "permutation size mismatch");
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = p[q[i]];
  return r;
}

Perm perm_inverse(const Perm& p) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<int>(i);
  return r;
}

static void validate_perm(const Perm& p) {
  std::vector<char> seen(p.size(), 0);
  for (int x : p) {
    if (x < 0 || x >= static_cast<int>(p.size()) || seen[x])
      fail(ErrorCode::Parse, "not a permutation");
    seen[x] = 1;
  }
}

Perm parse_cycles(std::string_view text, int n) {
  if (n < 1) fail(ErrorCode::Parse, "permutation needs at least one point");
  Perm p = perm_identity(n);
  std::vector<char> used(n, 0);
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };
  skip_ws();
  if (i == text.size()) fail(ErrorCode::Parse, "empty permutation");
  while (i < text.size()) {
    skip_ws();
    if (i == text.size()) break;
    if (text[i] != '(') fail(ErrorCode::Parse, "expected '(' in cycles");
    ++i;
    std::vector<int> cyc;
    while (true) {
      skip_ws();
      if (i < text.size() && text[i] == ')') {
        ++i;
        break;
      }
      std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        ++i;
      if (i == start) fail(ErrorCode::Parse, "expected point number in cycle");
      int pt = std::stoi(std::string(text.substr(start, i - start)));
      if (pt < 1 || pt > n)
        fail(ErrorCode::Parse, "cycle point out of range: " + std::to_string(pt));
      if (used[pt - 1])
        fail(ErrorCode::Parse, "point repeated in cycles: " + std::to_string(pt));
      used[pt - 1] = 1;
      cyc.push_back(pt - 1);
    }
    for (std::size_t k = 0; k < cyc.size(); ++k)
      p[cyc[k]] = cyc[(k + 1) % cyc.size()];
  }
  skip_ws();
  if (i != text.size()) fail(ErrorCode::Parse, "trailing data after cycles");
  return p;
}

std::string cycle_str(const Perm& p) {
  std::string s;
  std::vector<char> done(p.size(), 0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (done[i] || p[i] == static_cast<int>(i)) continue;
    s += '(';
    std::size_t j = i;
    bool first = true;
    while (!done[j]) {
      done[j] = 1;
      if (!first) s += ' ';
      s += std::to_string(j + 1);
      first = false;
      j = static_cast<std::size_t>(p[j]);
    }
    s += ')';
  }
  return s.empty() ? "()" : s;
}

FiniteGroup::FiniteGroup(std::vector<int> table,
                         std::vector<std::string> labels,
                         std::vector<int> gen_ids)
    : table_(std::move(table)),
      labels_(std::move(labels)),
      gen_ids_(std::move(gen_ids)) {
  order_ = static_cast<int>(labels_.size());
  if (order_ < 1 ||
      table_.size() != static_cast<std::size_t>(order_) * order_)
    fail(ErrorCode::Parse, "Cayley table shape mismatch");
  for (int x : table_)
    if (x < 0 || x >= order_) fail(ErrorCode::Parse, "Cayley table entry range");
  for (int a = 0; a < order_; ++a)
    if (mul(0, a) != a || mul(a, 0) != a)
      fail(ErrorCode::Parse, "element 0 is not an identity");
  inv_.assign(order_, -1);
  for (int a = 0; a < order_; ++a) {
    for (int b = 0; b < order_; ++b)
      if (mul(a, b) == 0 && mul(b, a) == 0) {
        inv_[a] = b;
        break;
      }
    if (inv_[a] < 0) fail(ErrorCode::Parse, "element without two-sided inverse");
  }
  // Light's associativity test over the generators: with gen_ids
  // generating, x*(g*y) == (x*g)*y for all x,y,g in gens is equivalent to
  // full associativity.
  for (int g : gen_ids_) {
    if (g < 0 || g >= order_) fail(ErrorCode::Parse, "generator id range");
    for (int a = 0; a < order_; ++a)
      for (int b = 0; b < order_; ++b)
        if (mul(a, mul(g, b)) != mul(mul(a, g), b))
          fail(ErrorCode::Parse, "Cayley table is not associative");
  }
  // gen_ids must actually generate.
  std::vector<char> reached(order_, 0);
  reached[0] = 1;
  std::vector<int> work{0};
  while (!work.empty()) {
    int x = work.back();
    work.pop_back();
    for (int g : gen_ids_) {
      int y = mul(x, g);
      if (!reached[y]) {
        reached[y] = 1;
        work.push_back(y);
      }
    }
  }
  for (int a = 0; a < order_; ++a)
    if (!reached[a])
      fail(ErrorCode::Parse, "gen_ids do not generate the group");
}

int FiniteGroup::element_order(int a) const {
  int ord = 1;
  for (int x = a; x != 0; x = mul(x, a)) ++ord;
  return ord;
}

int FiniteGroup::power(int a, const Int& e) const {
  int ord = element_order(a);
  Int r = e % ord;
  if (r < 0) r += ord;
  int k = static_cast<int>(r);
  int acc = 0;
  for (int i = 0; i < k; ++i) acc = mul(acc, a);
  return acc;
}

int FiniteGroup::evaluate(const Word& w) const {
  int acc = 0;
  for (const Syllable& s : w.syllables()) {
    const std::string& nm = s.gen.name();
    int idx = -1;
    if (nm.size() > 1 && nm[0] == 'g') {
      bool digits = true;
      for (std::size_t i = 1; i < nm.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(nm[i]))) digits = false;
      if (digits) idx = std::stoi(nm.substr(1));
    }
    if (idx < 1 || idx > static_cast<int>(gen_ids_.size()))
      fail(ErrorCode::Parse, "element word expects generator names g1..g" +
                                 std::to_string(gen_ids_.size()) + ", got " +
                                 nm);
    acc = mul(acc, power(gen_ids_[idx - 1], s.exp));
  }
  return acc;
}

FiniteGroup from_permutations(const std::vector<Perm>& gens, int cap) {
  if (gens.empty())
    fail(ErrorCode::Parse, "from_permutations needs at least one permutation");
  if (cap < 1) fail(ErrorCode::Parse, "cap must be >= 1");
  const std::size_t n = gens[0].size();
  for (const Perm& g : gens) {
    if (g.size() != n) fail(ErrorCode::Parse, "permutation size mismatch");
    validate_perm(g);
  }
  std::vector<Perm> elems{perm_identity(static_cast<int>(n))};
  std::map<Perm, int> index{{elems[0], 0}};
  // Breadth-first, layers sorted lexicographically.
  std::vector<int> layer{0};
  while (!layer.empty()) {
    std::set<Perm> fresh;
    for (int e : layer)
      for (const Perm& g : gens) {
        Perm x = perm_compose(elems[e], g);
        if (!index.count(x)) fresh.insert(std::move(x));
      }
    layer.clear();
    for (const Perm& x : fresh) {
      if (static_cast<int>(elems.size()) >= cap)
        fail(ErrorCode::Cap, "group closure exceeds cap " + std::to_string(cap));
      int id = static_cast<int>(elems.size());
      index.emplace(x, id);
      elems.push_back(x);
      layer.push_back(id);
    }
  }
  const int order = static_cast<int>(elems.size());
  std::vector<int> table(static_cast<std::size_t>(order) * order);
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b)
      table[static_cast<std::size_t>(a) * order + b] =
          index.at(perm_compose(elems[a], elems[b]));
  std::vector<std::string> labels(order);
  for (int a = 0; a < order; ++a) labels[a] = cycle_str(elems[a]);
  std::vector<int> gen_ids;
  for (const Perm& g : gens) {
    int id = index.at(g);
    if (std::find(gen_ids.begin(), gen_ids.end(), id) == gen_ids.end())
      gen_ids.push_back(id);
  }
  return FiniteGroup(std::move(table), std::move(labels), std::move(gen_ids));
}

bool Subgroup::contains(int g) const {
  return std::binary_search(members.begin(), members.end(), g);
}

Subgroup whole_group(const FiniteGroup& g) {
  Subgroup s;
  s.members.resize(g.order());
  for (int i = 0; i < g.order(); ++i) s.members[i] = i;
  s.normal = true;
  return s;
}

Subgroup trivial_subgroup() { return Subgroup{{0}, true}; }

Subgroup closure(const FiniteGroup& g, const std::vector<int>& seed) {
  std::vector<char> in(g.order(), 0);
  in[0] = 1;
  std::vector<int> work{0};
  std::vector<int> seeds = seed;
  for (int s : seeds)
    if (s < 0 || s >= g.order()) fail(ErrorCode::Parse, "seed out of range");
  while (!work.empty()) {
    int x = work.back();
    work.pop_back();
    for (int s : seeds) {
      int y = g.mul(x, s);
      if (!in[y]) {
        in[y] = 1;
        work.push_back(y);
      }
    }
  }
  Subgroup out;
  for (int i = 0; i < g.order(); ++i)
    if (in[i]) out.members.push_back(i);
  out.normal = is_normal(g, out);
  return out;
}

bool is_normal(const FiniteGroup& g, const Subgroup& s) {
  for (int gen : g.gen_ids()) {
    int gi = g.inv(gen);
    for (int m : s.members)
      if (!s.contains(g.mul(g.mul(gen, m), gi))) return false;
  }
  return true;
}

Subgroup commutator_subgroup(const FiniteGroup& g, const Subgroup& n) {
  std::set<int> comms;
  for (int a : n.members)
    for (int b : n.members)
      comms.insert(g.mul(g.mul(a, b), g.mul(g.inv(a), g.inv(b))));
  return closure(g, std::vector<int>(comms.begin(), comms.end()));
}

Subgroup commutator_subgroup(const FiniteGroup& g) {
  return commutator_subgroup(g, whole_group(g));
}

std::vector<std::vector<int>> conjugacy_classes(const FiniteGroup& g) {
  std::vector<std::vector<int>> classes;
  std::vector<char> done(g.order(), 0);
  for (int a = 0; a < g.order(); ++a) {
    if (done[a]) continue;
    std::set<int> cls;
    for (int x = 0; x < g.order(); ++x)
      cls.insert(g.mul(g.mul(x, a), g.inv(x)));
    std::vector<int> v(cls.begin(), cls.end());
    for (int m : v) done[m] = 1;
    classes.push_back(std::move(v));
  }
  return classes;
}

// Deterministic small generating set of a member list (greedy closure).
static std::vector<int> greedy_generators(const FiniteGroup& g,
                                          const std::vector<int>& members) {
  std::vector<int> gens;
  std::vector<char> have(g.order(), 0);
  have[0] = 1;
  std::size_t have_count = 1;
  for (int m : members) {
    if (have[m]) continue;
    gens.push_back(m);
    // refresh closure
    std::vector<int> work{0};
    std::vector<char> in(g.order(), 0);
    in[0] = 1;
    while (!work.empty()) {
      int x = work.back();
      work.pop_back();
      for (int s : gens) {
        int y = g.mul(x, s);
        if (!in[y]) {
          in[y] = 1;
          work.push_back(y);
        }
      }
    }
    have = std::move(in);
    have_count = static_cast<std::size_t>(
        std::count(have.begin(), have.end(), 1));
    if (have_count == members.size()) break;
  }
  return gens;
}

QuotientResult quotient(const FiniteGroup& g, const Subgroup& n) {
  if (!n.contains(0)) fail(ErrorCode::Parse, "subgroup without identity");
  if (!is_normal(g, n))
    fail(ErrorCode::Parse, "quotient by a non-normal subgroup");
  std::vector<int> rep(g.order());
  for (int x = 0; x < g.order(); ++x) {
    int r = g.order();
    for (int m : n.members) r = std::min(r, g.mul(x, m));
    rep[x] = r;
  }
  std::vector<int> reps;
  for (int x = 0; x < g.order(); ++x)
    if (rep[x] == x) reps.push_back(x);
  std::vector<int> proj(g.order());
  for (int x = 0; x < g.order(); ++x)
    proj[x] = static_cast<int>(
        std::lower_bound(reps.begin(), reps.end(), rep[x]) - reps.begin());
  const int q = static_cast<int>(reps.size());
  std::vector<int> table(static_cast<std::size_t>(q) * q);
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j)
      table[static_cast<std::size_t>(i) * q + j] = proj[g.mul(reps[i], reps[j])];
  std::vector<std::string> labels(q);
  for (int i = 0; i < q; ++i) labels[i] = "[" + g.label(reps[i]) + "]";
  std::vector<int> gen_ids;
  for (int gid : g.gen_ids()) {
    int im = proj[gid];
    if (im != 0 &&
        std::find(gen_ids.begin(), gen_ids.end(), im) == gen_ids.end())
      gen_ids.push_back(im);
  }
  if (gen_ids.empty()) gen_ids.push_back(0);
  QuotientResult out{
      FiniteGroup(std::move(table), std::move(labels), std::move(gen_ids)),
      std::move(proj)};
  return out;
}

SubgroupAsGroup subgroup_as_group(const FiniteGroup& g, const Subgroup& n) {
  if (!n.contains(0)) fail(ErrorCode::Parse, "subgroup without identity");
  const int sz = static_cast<int>(n.members.size());
  std::vector<int> to_sub(g.order(), -1);
  for (int i = 0; i < sz; ++i) to_sub[n.members[i]] = i;
  std::vector<int> table(static_cast<std::size_t>(sz) * sz);
  for (int i = 0; i < sz; ++i)
    for (int j = 0; j < sz; ++j) {
      int prod = g.mul(n.members[i], n.members[j]);
      if (to_sub[prod] < 0) fail(ErrorCode::Parse, "member set not closed");
      table[static_cast<std::size_t>(i) * sz + j] = to_sub[prod];
    }
  std::vector<std::string> labels(sz);
  for (int i = 0; i < sz; ++i) labels[i] = g.label(n.members[i]);
  std::vector<int> gens_parent = greedy_generators(g, n.members);
  std::vector<int> gen_ids;
  for (int m : gens_parent) gen_ids.push_back(to_sub[m]);
  if (gen_ids.empty()) gen_ids.push_back(0);
  SubgroupAsGroup out{
      FiniteGroup(std::move(table), std::move(labels), std::move(gen_ids)),
      std::move(to_sub)};
  return out;
}

AbelianInvariants abelianization(const FiniteGroup& g) {
  FiniteGroup q = quotient(g, commutator_subgroup(g)).group;
  std::vector<Int> factors;  // collected largest first
  while (q.order() > 1) {
    int best = 1, best_ord = q.element_order(1);
    for (int a = 2; a < q.order(); ++a) {
      int o = q.element_order(a);
      if (o > best_ord) {
        best = a;
        best_ord = o;
      }
    }
    factors.push_back(best_ord);
    Subgroup cyc = closure(q, {best});
    q = quotient(q, cyc).group;
  }
  std::reverse(factors.begin(), factors.end());
  return AbelianInvariants::from_factors(std::move(factors));
}

static void require_subgroup(const FiniteGroup& g, const Subgroup& s) {
  for (int a : s.members)
    for (int b : s.members)
      if (!s.contains(g.mul(a, b)))
        throw std::logic_error("member set is not a subgroup");
}

Subgroup j_derived_step(const FiniteGroup& g, const Subgroup& n,
                        const JSet& j) {
  if (!is_normal(g, n))
    fail(ErrorCode::Parse, "j_derived_step needs a normal subgroup");
  SubgroupAsGroup h = subgroup_as_group(g, n);
  Subgroup c = commutator_subgroup(h.group);
  QuotientResult ab = quotient(h.group, c);
  Subgroup out;
  for (int m : n.members) {
    int image = ab.projection[h.to_sub[m]];
    if (is_j_number(Int(ab.group.element_order(image)), j))
      out.members.push_back(m);
  }
  require_subgroup(g, out);
  out.normal = is_normal(g, out);
  if (!out.normal)
    throw std::logic_error("derived step produced a non-normal subgroup");
  return out;
}

Subgroup gamma_radical(const FiniteGroup& g, const JSet& j) {
  Subgroup n = whole_group(g);
  while (true) {
    Subgroup next = j_derived_step(g, n, j);
    if (next == n) return n;
    n = std::move(next);
  }
}

FiniteGroup nullification(const FiniteGroup& g, const JSet& j) {
  return quotient(g, gamma_radical(g, j)).group;
}

Subgroup brute_force_radical(const FiniteGroup& g, const JSet& j) {
  if (g.order() > 512)
    fail(ErrorCode::Guard, "brute_force_radical guard: order > 512");
  auto classes = conjugacy_classes(g);
  if (classes.size() > 20)
    fail(ErrorCode::Guard, "brute_force_radical guard: > 20 classes");
  const std::size_t m = classes.size() - 1;  // non-identity classes
  std::set<std::vector<int>> normals;
  for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
    std::vector<int> seed;
    for (std::size_t c = 0; c < m; ++c)
      if (mask & (std::size_t{1} << c))
        seed.insert(seed.end(), classes[c + 1].begin(), classes[c + 1].end());
    normals.insert(closure(g, seed).members);
  }
  // Keep the normal subgroups whose abelianization is J-torsion.
  std::vector<Subgroup> perfect;
  for (const auto& mem : normals) {
    Subgroup s{mem, true};
    AbelianInvariants ab = abelianization(subgroup_as_group(g, s).group);
    if (is_trivial_after_localization(ab, j)) perfect.push_back(std::move(s));
  }
  // Unique maximal one, by the product-of-normals argument; anything else
  // would falsify the structure theorem.
  const Subgroup* best = &perfect.front();
  for (const Subgroup& s : perfect)
    if (s.order() > best->order()) best = &s;
  for (const Subgroup& s : perfect)
    if (!std::includes(best->members.begin(), best->members.end(),
                       s.members.begin(), s.members.end()))
      throw std::logic_error("radical is not unique-maximal");
  return *best;
}

// ----- .perm format -----

PermFile parse_perm(std::string_view text) {
  PermFile f;
  bool have_points = false;
  std::vector<std::string> gen_lines;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head)) continue;
    if (head == "points") {
      if (have_points) fail(ErrorCode::Parse, "duplicate points line");
      if (!(ls >> f.points) || f.points < 1)
        fail(ErrorCode::Parse, "points must be >= 1");
      have_points = true;
    } else if (head == "gen") {
      std::string rest;
      std::getline(ls, rest);
      gen_lines.push_back(rest);
    } else if (head == "cap") {
      if (!(ls >> f.cap) || f.cap < 1)
        fail(ErrorCode::Parse, "cap must be >= 1");
    } else {
      fail(ErrorCode::Parse, "unknown .perm directive '" + head + "'");
    }
  }
  if (!have_points) fail(ErrorCode::Parse, ".perm file has no points line");
  for (const std::string& s : gen_lines)
    f.gens.push_back(parse_cycles(s, f.points));
  return f;
}

std::string print_perm(const PermFile& f) {
  std::string s = "points " + std::to_string(f.points) + "\n";
  for (const Perm& g : f.gens) s += "gen " + cycle_str(g) + "\n";
  s += "cap " + std::to_string(f.cap) + "\n";
  return s;
}

FiniteGroup build_group(const PermFile& f) {
  return from_permutations(f.gens, f.cap);
}

}  // namespace socle
