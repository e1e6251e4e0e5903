#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "schur/cut_poset.hpp"
#include "schur/io.hpp"
#include "schur/lr.hpp"
#include "schur/partition.hpp"
#include "schur/schur_nonneg.hpp"
#include "schur/sweeps.hpp"
#include "schur/tensor.hpp"

namespace {

using nlohmann::json;
using namespace schur;

struct LrOpts {
  std::string outer, inner = "0", content;
  int n = 0;
  bool reverse = false, as_json = false;
};

struct ExpandOpts {
  std::string mu, nu;
  int n = 0;
  bool as_json = false;
};

struct CutOpts {
  std::string lambda, mu;
  int s = 0, n = 0;
  bool witness = false, as_json = false;
};

struct PosetOpts {
  std::string lambda, mu;
  int s = 0, n = 0;
  bool as_json = false;
};

struct TensorEqualOpts {
  std::string lambda, mu, nu, rho;
  int n = 0;
  bool brute = false, as_json = false;
};

struct TensorSolveOpts {
  std::string lambda, mu;
  int n = 0;
  bool as_json = false;
};

struct SnnOpts {
  std::string lambda, mu, nu, rho;
  int n = 0;
  bool all = false, brute = false, as_json = false;
};

struct SelfcheckOpts {
  int max_size = 8, max_n = 3;
  bool as_json = false;
};

const char* yesno(bool b) { return b ? "yes" : "no"; }

void run_lr(const LrOpts& o) {
  const Partition outer = parse_partition(o.outer, o.n);
  const Partition inner = parse_partition(o.inner, o.n);
  const Partition content = parse_partition(o.content, o.n);
  const long long c = lr_coefficient(outer, inner, content,
                                     o.reverse ? Convention::reverse : Convention::forward);
  if (o.as_json)
    std::cout << json{{"coefficient", c}}.dump() << '\n';
  else
    std::cout << c << '\n';
}

void run_expand(const ExpandOpts& o) {
  const SchurExpansion e =
      product_schur_expansion(parse_partition(o.mu, o.n), parse_partition(o.nu, o.n));
  if (o.as_json)
    std::cout << json_expansion(e).dump() << '\n';
  else
    std::cout << format_expansion(e);
}

void run_cut(const CutOpts& o) {
  const Partition lambda = parse_partition(o.lambda, o.n);
  const Partition mu = parse_partition(o.mu, o.n);
  const Partition cut = s_cut(lambda, mu, o.s);
  json doc{{"cut", cut.parts()}};
  std::optional<Tableau> witness;
  bool valid = false;
  if (o.witness) {
    witness = s_cut_witness(lambda, mu, o.s);
    valid = verify_witness_hybrid(*witness, lambda, mu, o.s);
    doc["witness"] = json_tableau(*witness);
    doc["witness_valid"] = valid;
  }
  if (o.as_json) {
    std::cout << doc.dump() << '\n';
  } else {
    std::cout << format_partition(cut) << '\n';
    if (witness) {
      std::cout << "witness:\n" << format_tableau(*witness) << '\n';
      std::cout << "witness valid: " << yesno(valid) << '\n';
    }
  }
}

void run_poset(const PosetOpts& o) {
  const SPoset poset =
      s_poset(parse_partition(o.lambda, o.n), parse_partition(o.mu, o.n), o.s);
  if (o.as_json) {
    json members = json::array();
    for (const Partition& p : poset.members) members.push_back(p.parts());
    std::cout << json{{"members", members}, {"minimum", poset.members.front().parts()}}.dump()
              << '\n';
  } else {
    for (std::size_t i = 0; i < poset.members.size(); ++i)
      std::cout << (i == 0 ? "* " : "  ") << format_partition(poset.members[i]) << '\n';
  }
}

void run_tensor_equal(const TensorEqualOpts& o) {
  const TensorQuery q(parse_partition(o.lambda, o.n), parse_partition(o.mu, o.n),
                      parse_partition(o.nu, o.n), parse_partition(o.rho, o.n));
  const bool equal = tensor_equal(q);
  json doc{{"equal", equal}};
  std::optional<bool> oracle;
  if (o.brute) {
    oracle = verify_theorem_bruteforce(q);
    doc["oracle_equal"] = *oracle;
    doc["agree"] = (*oracle == equal);
  }
  if (o.as_json) {
    std::cout << doc.dump() << '\n';
  } else {
    std::cout << yesno(equal) << '\n';
    if (oracle) {
      std::cout << "oracle: " << yesno(*oracle) << '\n';
      std::cout << "agree: " << yesno(*oracle == equal) << '\n';
    }
  }
}

void run_tensor_solve(const TensorSolveOpts& o) {
  const auto pairs =
      tensor_solutions(parse_partition(o.lambda, o.n), parse_partition(o.mu, o.n));
  if (o.as_json) {
    json arr = json::array();
    for (const SolutionPair& p : pairs)
      arr.push_back({{"first", p.first().parts()}, {"second", p.second().parts()}});
    std::cout << arr.dump() << '\n';
  } else {
    for (const SolutionPair& p : pairs)
      std::cout << format_partition(p.first()) << " | " << format_partition(p.second()) << '\n';
  }
}

std::string certificate_line(const SnnCertificate& c) {
  return "certificate s=" + std::to_string(c.s) + " case=" + to_string(c.proof_case) +
         " sigma=" + format_int_sequence(c.sigma) + " tau=" + format_int_sequence(c.tau) +
         " witness=" + format_partition(c.witness);
}

void run_snn(const SnnOpts& o) {
  const Partition lambda = parse_partition(o.lambda, o.n);
  const Partition mu = parse_partition(o.mu, o.n);
  const Partition nu = parse_partition(o.nu, o.n);
  const Partition rho = parse_partition(o.rho, o.n);

  json doc;
  std::string text;
  auto run_direction = [&](const char* key, const std::string& label, const Partition& a,
                           const Partition& b, const Partition& c, const Partition& d,
                           SnnDirection dir) {
    json block;
    if (o.all) {
      auto certs = snn_all_certificates(a, b, c, d);
      json arr = json::array();
      for (SnnCertificate& cert : certs) {
        cert.direction = dir;
        arr.push_back(json_certificate(cert));
        text += label + ": " + certificate_line(cert) + '\n';
      }
      if (certs.empty()) text += label + ": inconclusive\n";
      block["certificates"] = arr;
    } else {
      auto cert = snn_failure_test(a, b, c, d);
      if (cert) {
        cert->direction = dir;
        block["certificate"] = json_certificate(*cert);
        text += label + ": " + certificate_line(*cert) + '\n';
      } else {
        block["certificate"] = nullptr;
        text += label + ": inconclusive\n";
      }
    }
    if (o.brute) {
      const auto negative = snn_bruteforce(a, b, c, d);
      block["schur_nonnegative"] = !negative.has_value();
      if (negative) {
        block["negative_at"] = negative->parts();
        text += label + " definitive: not Schur non-negative (negative at " +
                format_partition(*negative) + ")\n";
      } else {
        text += label + " definitive: Schur non-negative\n";
      }
    }
    doc[key] = std::move(block);
  };

  run_direction("forward", "lambda*mu - nu*rho", lambda, mu, nu, rho, SnnDirection::lhs);
  run_direction("reverse", "nu*rho - lambda*mu", nu, rho, lambda, mu, SnnDirection::rhs);

  if (o.as_json)
    std::cout << doc.dump() << '\n';
  else
    std::cout << text;
}

int run_selfcheck(const SelfcheckOpts& o) {
  std::vector<SweepResult> results;
  results.push_back(sweep_convention_equivalence(o.max_size, o.max_n));
  results.push_back(sweep_oracle_equivalence(o.max_size / 2, o.max_n));
  results.push_back(sweep_cut_poset(o.max_size, o.max_n));
  results.push_back(sweep_theorem(o.max_size, o.max_n));
  const SnnSweepResult snn = sweep_snn_soundness(o.max_size, o.max_n);
  results.push_back(snn.base);
  results.push_back(sweep_triviality_bound(std::min(5, o.max_size / 2)));

  long long failures = 0;
  json suites = json::array();
  for (const SweepResult& r : results) {
    failures += r.failed;
    suites.push_back({{"name", r.name}, {"checked", r.checked}, {"failed", r.failed}});
    if (!o.as_json) {
      std::cout << r.name << ": checked=" << r.checked << ", failed=" << r.failed << '\n';
      for (const std::string& note : r.notes) std::cout << "  " << note << '\n';
    }
  }
  if (o.as_json) {
    std::cout << json{{"suites", suites},
                      {"snn_certificates", snn.certificates},
                      {"snn_inconclusive_negative", snn.inconclusive_negative},
                      {"ok", failures == 0}}
                     .dump()
              << '\n';
  } else {
    std::cout << "snn detail: certificates=" << snn.certificates
              << ", inconclusive-but-negative=" << snn.inconclusive_negative << '\n';
    std::cout << "selfcheck: " << (failures == 0 ? "PASS" : "FAIL") << '\n';
  }
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact Littlewood-Richardson and Schur polynomial calculator: tensor product "
      "equivalence over GL(n), s-cuts, and Schur non-negativity certificates"};
  app.require_subcommand(1);

  LrOpts lr;
  CLI::App* lr_cmd =
      app.add_subcommand("lr", "Littlewood-Richardson coefficient by tableau enumeration");
  lr_cmd->add_option("--outer", lr.outer, "outer partition of the skew shape")->required();
  lr_cmd->add_option("--inner", lr.inner, "inner partition (default: empty)");
  lr_cmd->add_option("--content", lr.content, "content partition")->required();
  lr_cmd->add_option("-n,--rank", lr.n, "rank / number of variables")->required();
  lr_cmd->add_flag("--reverse", lr.reverse, "use the reverse reading convention");
  lr_cmd->add_flag("--json", lr.as_json, "JSON output");

  ExpandOpts expand;
  CLI::App* expand_cmd =
      app.add_subcommand("expand", "product of two Schur polynomials in the Schur basis");
  expand_cmd->add_option("--mu", expand.mu, "first factor")->required();
  expand_cmd->add_option("--nu", expand.nu, "second factor")->required();
  expand_cmd->add_option("-n,--rank", expand.n, "rank / number of variables")->required();
  expand_cmd->add_flag("--json", expand.as_json, "JSON output");

  CutOpts cut;
  CLI::App* cut_cmd = app.add_subcommand("cut", "s-cut of two partitions");
  cut_cmd->add_option("--lambda", cut.lambda, "first partition")->required();
  cut_cmd->add_option("--mu", cut.mu, "second partition")->required();
  cut_cmd->add_option("-s,--cut-index", cut.s, "cut index, 0..n-1")->required();
  cut_cmd->add_option("-n,--rank", cut.n, "rank")->required();
  cut_cmd->add_flag("--witness", cut.witness, "also print the positivity witness tableau");
  cut_cmd->add_flag("--json", cut.as_json, "JSON output");

  PosetOpts poset;
  CLI::App* poset_cmd =
      app.add_subcommand("poset", "lex-sorted s-poset members with the minimum flagged");
  poset_cmd->add_option("--lambda", poset.lambda, "first partition")->required();
  poset_cmd->add_option("--mu", poset.mu, "second partition")->required();
  poset_cmd->add_option("-s,--cut-index", poset.s, "cut index, 0..n-1")->required();
  poset_cmd->add_option("-n,--rank", poset.n, "rank")->required();
  poset_cmd->add_flag("--json", poset.as_json, "JSON output");

  TensorEqualOpts teq;
  CLI::App* teq_cmd =
      app.add_subcommand("tensor-equal", "decide whether two tensor products are isomorphic");
  teq_cmd->add_option("--lambda", teq.lambda, "")->required();
  teq_cmd->add_option("--mu", teq.mu, "")->required();
  teq_cmd->add_option("--nu", teq.nu, "")->required();
  teq_cmd->add_option("--rho", teq.rho, "")->required();
  teq_cmd->add_option("-n,--rank", teq.n, "rank")->required();
  teq_cmd->add_flag("--brute-force", teq.brute, "also run the polynomial oracle");
  teq_cmd->add_flag("--json", teq.as_json, "JSON output");

  TensorSolveOpts tsolve;
  CLI::App* tsolve_cmd =
      app.add_subcommand("tensor-solve", "all pairs with the same tensor product");
  tsolve_cmd->add_option("--lambda", tsolve.lambda, "")->required();
  tsolve_cmd->add_option("--mu", tsolve.mu, "")->required();
  tsolve_cmd->add_option("-n,--rank", tsolve.n, "rank")->required();
  tsolve_cmd->add_flag("--json", tsolve.as_json, "JSON output");

  SnnOpts snn;
  CLI::App* snn_cmd = app.add_subcommand(
      "snn", "lexicographic test for failure of Schur non-negativity, both directions");
  snn_cmd->add_option("--lambda", snn.lambda, "")->required();
  snn_cmd->add_option("--mu", snn.mu, "")->required();
  snn_cmd->add_option("--nu", snn.nu, "")->required();
  snn_cmd->add_option("--rho", snn.rho, "")->required();
  snn_cmd->add_option("-n,--rank", snn.n, "rank")->required();
  snn_cmd->add_flag("--all", snn.all, "report every certifying s, not just the first");
  snn_cmd->add_flag("--brute-force", snn.brute, "also run the definitive Schur-basis check");
  snn_cmd->add_flag("--json", snn.as_json, "JSON output");

  SelfcheckOpts selfcheck;
  CLI::App* selfcheck_cmd =
      app.add_subcommand("selfcheck", "run the exhaustive property suites");
  selfcheck_cmd->add_option("--max-size", selfcheck.max_size, "total degree bound (default 8)");
  selfcheck_cmd->add_option("--max-n", selfcheck.max_n, "rank bound (default 3)");
  selfcheck_cmd->add_flag("--json", selfcheck.as_json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 2;
  }

  try {
    if (*lr_cmd) run_lr(lr);
    if (*expand_cmd) run_expand(expand);
    if (*cut_cmd) run_cut(cut);
    if (*poset_cmd) run_poset(poset);
    if (*teq_cmd) run_tensor_equal(teq);
    if (*tsolve_cmd) run_tensor_solve(tsolve);
    if (*snn_cmd) run_snn(snn);
    if (*selfcheck_cmd) return run_selfcheck(selfcheck);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
