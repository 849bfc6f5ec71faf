#include <algorithm>
#include <atomic>
#include <functional>
#include <iostream>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "socle/fingroup.hpp"
#include "socle/intmat.hpp"
#include "socle/presentation.hpp"
#include "socle/report.hpp"
#include "socle/schema.hpp"

namespace {

using namespace socle;

struct Outcome {
  std::string text;
  int code = 0;
};

std::string join_args(int argc, char** argv) {
  std::string s;
  for (int i = 1; i < argc; ++i) {
    if (i > 1) s += ' ';
    s += argv[i];
  }
  return s;
}

Outcome finish(const Report& rep, bool machine_only) {
  Outcome o;
  o.text = machine_only ? rep.machine() : rep.human() + rep.machine();
  o.code = rep.exit_code();
  return o;
}

template <typename Fn>
Outcome guarded(const std::string& echo, bool machine_only, Fn&& fn) {
  Report rep(echo);
  try {
    fn(rep);
  } catch (const Error& e) {
    rep.set_error(e.code(), e.what());
  }
  return finish(rep, machine_only);
}

// Run jobs (possibly on several threads), print results in input order,
// return the worst exit code.
int run_jobs(const std::vector<std::function<Outcome()>>& jobs, int threads) {
  std::vector<Outcome> out(jobs.size());
  const int n = std::min<int>(threads, static_cast<int>(jobs.size()));
  if (n <= 1) {
    for (std::size_t i = 0; i < jobs.size(); ++i) out[i] = jobs[i]();
  } else {
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t i; (i = next.fetch_add(1)) < jobs.size();)
        out[i] = jobs[i]();
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < n; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }
  int code = 0;
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (i > 0) std::cout << '\n';
    std::cout << out[i].text;
    code = std::max(code, out[i].code);
  }
  return code;
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

std::string subgroup_gen_labels(const FiniteGroup& g, const Subgroup& s) {
  SubgroupAsGroup sub = subgroup_as_group(g, s);
  std::string out;
  for (int id : sub.group.gen_ids()) {
    if (!out.empty()) out += ',';
    out += sub.group.label(id);
  }
  return out;
}

std::string join_ints(const std::vector<Int>& v) {
  std::string s;
  for (const Int& x : v) {
    if (!s.empty()) s += ',';
    s += to_string(x);
  }
  return s;
}

void snf_records(Report& rep, const IntMatrix& m) {
  rep.add("rows", std::to_string(m.rows()));
  rep.add("cols", std::to_string(m.cols()));
  SnfResult s = smith_normal_form(m, true);
  rep.add("factors", join_ints(s.d));
  IntMatrix expect(m.rows(), m.cols());
  for (std::size_t i = 0; i < s.d.size(); ++i) expect(i, i) = s.d[i];
  rep.add("transforms_ok", bool_str(mul(mul(s.u, m), s.v) == expect));
  if (std::min(m.rows(), m.cols()) <= 7)
    rep.add("agreement", bool_str(gcd_minors(m) == s.nonzero_factors()));
  else
    rep.add("agreement", "skipped");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"homology, radicals and witness checking for presented and "
               "finite groups"};
  app.require_subcommand(1);

  std::string invert = "all";
  bool machine = false;
  int jobs = 1;
  app.add_option("--invert", invert,
                 "primes to invert: none | all | 2,3,7 | all-except:2,5")
      ->capture_default_str();
  app.add_flag("--machine", machine, "print only the machine block");
  app.add_option("--jobs", jobs, "worker threads across input files")
      ->check(CLI::Range(1, 64));

  std::vector<std::string> homology_files;
  auto* cmd_homology =
      app.add_subcommand("homology", "chain-complex homology of a .grp file");
  cmd_homology->fallthrough();
  cmd_homology->add_option("files", homology_files, ".grp files")->required();

  auto* cmd_schema = app.add_subcommand("schema", "schema-tree operations");
  cmd_schema->fallthrough();
  cmd_schema->require_subcommand(1);
  std::vector<std::string> schema_present_files, schema_homology_files;
  auto* cmd_schema_present = cmd_schema->add_subcommand(
      "present", "expand a .tree file into a presentation");
  cmd_schema_present->fallthrough();
  cmd_schema_present->add_option("files", schema_present_files, ".tree files")
      ->required();
  auto* cmd_schema_homology =
      cmd_schema->add_subcommand("homology", "homology of a .tree file");
  cmd_schema_homology->fallthrough();
  cmd_schema_homology
      ->add_option("files", schema_homology_files, ".tree files")
      ->required();

  std::vector<std::string> radical_files;
  bool oracle_check = false;
  auto* cmd_radical = app.add_subcommand(
      "radical", "descending-series radical of a .perm group");
  cmd_radical->fallthrough();
  cmd_radical->add_option("files", radical_files, ".perm files")->required();
  cmd_radical->add_flag("--oracle", oracle_check,
                        "cross-check against the lattice and fixpoint oracles");

  std::vector<std::string> plus_files;
  auto* cmd_plus = app.add_subcommand(
      "plus", "radical quotient of a .perm group (quotient only)");
  cmd_plus->fallthrough();
  cmd_plus->add_option("files", plus_files, ".perm files")->required();

  std::string certify_grp, certify_cert, search_claim;
  std::size_t max_steps = 3, max_conj = 2;
  auto* cmd_certify = app.add_subcommand(
      "certify", "check or search a product-of-conjugated-relators proof");
  cmd_certify->fallthrough();
  cmd_certify->add_option("group", certify_grp, ".grp file")->required();
  cmd_certify->add_option("certificate", certify_cert, ".cert file");
  cmd_certify->add_option("--search", search_claim,
                          "search a certificate for this claim word");
  cmd_certify->add_option("--max-steps", max_steps,
                          "search: max relator steps")
      ->capture_default_str();
  cmd_certify->add_option("--max-conj", max_conj,
                          "search: max conjugator letters")
      ->capture_default_str();

  std::string witness_target, witness_file;
  auto* cmd_witness = app.add_subcommand(
      "witness", "verify a witness graph against a .grp or .perm target");
  cmd_witness->fallthrough();
  cmd_witness->add_option("target", witness_target, ".grp or .perm file")
      ->required();
  cmd_witness->add_option("witness", witness_file, ".wit file")->required();

  auto* cmd_oracle = app.add_subcommand("oracle", "self-check oracles");
  cmd_oracle->fallthrough();
  cmd_oracle->require_subcommand(1);
  std::vector<std::string> snf_files;
  std::size_t random_count = 0, random_size = 6;
  long long random_bound = 10;
  std::uint64_t random_seed = 12345;
  auto* cmd_snf = cmd_oracle->add_subcommand(
      "snf", "Smith form vs gcd-of-minors on matrix files or random input");
  cmd_snf->fallthrough();
  cmd_snf->add_option("files", snf_files, "matrix files");
  cmd_snf->add_option("--random", random_count, "check N random matrices");
  cmd_snf->add_option("--size", random_size, "random: max dimension")
      ->capture_default_str();
  cmd_snf->add_option("--bound", random_bound, "random: max |entry|")
      ->capture_default_str();
  cmd_snf->add_option("--seed", random_seed, "random: RNG seed")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int r = app.exit(e);
    return r == 0 ? 0 : 2;
  }

  const std::string echo = join_args(argc, argv);
  const bool machine_only = machine;

  JSet j;
  try {
    j = JSet::parse(invert);
  } catch (const Error& e) {
    Report rep(echo);
    rep.set_error(e.code(), e.what());
    Outcome o = finish(rep, machine_only);
    std::cout << o.text;
    return o.code;
  }

  std::vector<std::function<Outcome()>> work;

  if (*cmd_homology) {
    for (const std::string& file : homology_files)
      work.push_back([=] {
        return guarded(echo, machine_only, [&](Report& rep) {
          std::string text = slurp(file);
          rep.add_input(file, text);
          rep.add("jset", j.str());
          Presentation p = parse_grp(text);
          rep.add("name", p.name);
          HomologyResult h = homology(p, j);
          rep.add("H0", h.h0.str());
          rep.add("H1", h.h1.str());
          rep.add("H2_rank", std::to_string(h.h2_rank));
          rep.add("r_perfect", bool_str(h.h1.trivial()));
        });
      });
  } else if (*cmd_schema_present) {
    for (const std::string& file : schema_present_files)
      work.push_back([=] {
        return guarded(echo, machine_only, [&](Report& rep) {
          std::string text = slurp(file);
          rep.add_input(file, text);
          rep.add("jset", j.str());
          SchemaTree t = parse_tree(text);
          rep.add("nodes", std::to_string(node_count(t)));
          rep.add("complete", bool_str(is_complete(t)));
          Presentation p = schema_presentation(t, j);
          rep.add("name", p.name);
          std::string gens;
          for (const Gen& g : p.gens) {
            if (!gens.empty()) gens += ' ';
            gens += g.name();
          }
          rep.add("gens", gens);
          for (const Word& r : p.relators) rep.add("rel", print_word(r));
        });
      });
  } else if (*cmd_schema_homology) {
    for (const std::string& file : schema_homology_files)
      work.push_back([=] {
        return guarded(echo, machine_only, [&](Report& rep) {
          std::string text = slurp(file);
          rep.add_input(file, text);
          rep.add("jset", j.str());
          SchemaTree t = parse_tree(text);
          rep.add("nodes", std::to_string(node_count(t)));
          rep.add("complete", bool_str(is_complete(t)));
          SchemaHomology h = schema_homology(t, j);
          rep.add("H1", h.h1.str());
          rep.add("H2_rank", std::to_string(h.h2_rank));
          rep.add("r_perfect", bool_str(h.h1.trivial()));
        });
      });
  } else if (*cmd_radical || *cmd_plus) {
    const bool quotient_only = static_cast<bool>(*cmd_plus);
    for (const std::string& file :
         quotient_only ? plus_files : radical_files)
      work.push_back([=] {
        return guarded(echo, machine_only, [&](Report& rep) {
          std::string text = slurp(file);
          rep.add_input(file, text);
          rep.add("jset", j.str());
          FiniteGroup g = build_group(parse_perm(text));
          rep.add("group_order", std::to_string(g.order()));
          Subgroup rad = gamma_radical(g, j);
          if (!quotient_only) {
            rep.add("radical_order", std::to_string(rad.order()));
            rep.add("radical_gens", subgroup_gen_labels(g, rad));
            rep.add("radical_normal", bool_str(rad.normal));
          }
          QuotientResult q = quotient(g, rad);
          rep.add("quotient_order", std::to_string(q.group.order()));
          rep.add("quotient_ab", abelianization(q.group).str());
          if (!quotient_only && oracle_check) {
            Subgroup brute = brute_force_radical(g, j);
            Subgroup wit = witnessed_subgroup(g, j);
            rep.add("brute_order", std::to_string(brute.order()));
            rep.add("witnessed_order", std::to_string(wit.order()));
            rep.add("agreement", bool_str(brute.members == rad.members &&
                                          wit.members == rad.members));
          }
        });
      });
  } else if (*cmd_certify) {
    const bool searching = !search_claim.empty();
    if (searching == !certify_cert.empty()) {
      Report rep(echo);
      rep.set_error(ErrorCode::Parse,
                    "certify needs either a certificate file or --search");
      Outcome o = finish(rep, machine_only);
      std::cout << o.text;
      return o.code;
    }
    work.push_back([=] {
      return guarded(echo, machine_only, [&](Report& rep) {
        std::string grp_text = slurp(certify_grp);
        rep.add_input(certify_grp, grp_text);
        Presentation p = parse_grp(grp_text);
        if (searching) {
          rep.add("name", p.name);
          Word claim = parse_word(search_claim);
          rep.add("claim", print_word(claim));
          Certificate found;
          if (!search_certificate(p, claim, max_steps, max_conj, found)) {
            rep.set_error(ErrorCode::Cert,
                          "no certificate within the given bounds");
            return;
          }
          rep.add("found", "true");
          rep.add("steps", std::to_string(found.steps.size()));
          for (const CertStep& s : found.steps)
            rep.add("step", print_word(s.conjugator) + " " +
                                std::to_string(s.relator_index + 1) + " " +
                                (s.sign > 0 ? "+1" : "-1"));
        } else {
          std::string cert_text = slurp(certify_cert);
          rep.add_input(certify_cert, cert_text);
          rep.add("name", p.name);
          Certificate c = parse_cert(cert_text);
          rep.add("claim", print_word(c.claim));
          rep.add("steps", std::to_string(c.steps.size()));
          if (check_certificate(p, c))
            rep.add("valid", "true");
          else
            rep.set_error(ErrorCode::Cert,
                          "certificate does not reduce to its claim");
        }
      });
    });
  } else if (*cmd_witness) {
    work.push_back([=] {
      return guarded(echo, machine_only, [&](Report& rep) {
        std::string target_text = slurp(witness_target);
        rep.add_input(witness_target, target_text);
        std::string wit_text = slurp(witness_file);
        rep.add_input(witness_file, wit_text);
        rep.add("jset", j.str());
        WitnessGraph g = load_witness(witness_file);
        rep.add("target_name", g.target_name);
        rep.add("nodes", std::to_string(g.nodes.size()));
        rep.add("certs", std::to_string(g.certs.size()));
        bool valid = false;
        if (witness_target.ends_with(".perm"))
          valid = check_witness(build_group(parse_perm(target_text)), g, j);
        else if (witness_target.ends_with(".grp"))
          valid = check_witness(parse_grp(target_text), g, j);
        else
          fail(ErrorCode::Parse, "witness target must be .grp or .perm");
        if (valid)
          rep.add("valid", "true");
        else
          rep.set_error(ErrorCode::Witness, "witness verification failed");
      });
    });
  } else if (*cmd_snf) {
    if (snf_files.empty() && random_count == 0) {
      Report rep(echo);
      rep.set_error(ErrorCode::Parse,
                    "oracle snf needs matrix files or --random N");
      Outcome o = finish(rep, machine_only);
      std::cout << o.text;
      return o.code;
    }
    for (const std::string& file : snf_files)
      work.push_back([=] {
        return guarded(echo, machine_only, [&](Report& rep) {
          std::string text = slurp(file);
          rep.add_input(file, text);
          snf_records(rep, parse_matrix(text));
        });
      });
    if (random_count > 0)
      work.push_back([=] {
        return guarded(echo, machine_only, [&](Report& rep) {
          std::mt19937_64 rng(random_seed);
          std::uniform_int_distribution<int> dim(
              1, static_cast<int>(random_size));
          std::uniform_int_distribution<long long> entry(-random_bound,
                                                         random_bound);
          bool agree = true, transforms = true;
          for (std::size_t k = 0; k < random_count; ++k) {
            IntMatrix m(static_cast<std::size_t>(dim(rng)),
                        static_cast<std::size_t>(dim(rng)));
            for (std::size_t r = 0; r < m.rows(); ++r)
              for (std::size_t c = 0; c < m.cols(); ++c)
                m(r, c) = entry(rng);
            SnfResult s = smith_normal_form(m, true);
            IntMatrix expect(m.rows(), m.cols());
            for (std::size_t i = 0; i < s.d.size(); ++i) expect(i, i) = s.d[i];
            if (!(mul(mul(s.u, m), s.v) == expect)) transforms = false;
            if (std::min(m.rows(), m.cols()) <= 7 &&
                gcd_minors(m) != s.nonzero_factors())
              agree = false;
          }
          rep.add("checked", std::to_string(random_count));
          rep.add("max_size", std::to_string(random_size));
          rep.add("bound", std::to_string(random_bound));
          rep.add("seed", std::to_string(random_seed));
          rep.add("transforms_ok", bool_str(transforms));
          rep.add("agreement", bool_str(agree));
        });
      });
  }

  return run_jobs(work, jobs);
}
