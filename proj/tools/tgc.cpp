// tgc: generate, solve, classify, certify, and verify transversal Hamilton
// structures in graph collections.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "tgc/construct.hpp"
#include "tgc/harness.hpp"

using namespace tgc;

namespace {

constexpr int kExitAbsent = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCampaignFailure = 3;

GraphCollection load(const std::string& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + file);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_tgc(buf.str());
}

void emit(const std::string& text, const std::string& out_file) {
  if (out_file.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_file, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + out_file);
  out << text;
}

std::vector<int> parse_n_list(const std::string& arg) {
  std::vector<int> out;
  std::stringstream ss(arg);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(std::stoi(item));
  }
  if (out.empty()) throw CLI::ValidationError("--n", "expected a value or comma list");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"transversal Hamilton paths/cycles in graph collections"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "generate an extremal family collection");
  std::string gen_family, gen_fill = "complete", gen_out;
  int gen_n = 0, gen_t = -1;
  std::uint64_t gen_seed = 0;
  gen->add_option("--family", gen_family, "family tag")->required();
  gen->add_option("--n", gen_n, "vertex count")->required();
  gen->add_option("--fill", gen_fill, "empty|complete|random")
      ->check(CLI::IsMember({"empty", "complete", "random"}));
  gen->add_option("--t", gen_t, "bipartite color count (hst)");
  gen->add_option("--seed", gen_seed, "seed for random fill");
  gen->add_option("-o,--output", gen_out, "output file (default stdout)");

  // solve
  auto* solve = app.add_subcommand("solve", "search a collection");
  std::string solve_target, solve_file;
  bool solve_json = false;
  int solve_min_len = 3, solve_max_n = 24;
  solve->add_option("--target", solve_target,
                    "hamilton-cycle|hamilton-path|longest-rainbow-cycle|count-hamilton-cycles")
      ->required()
      ->check(CLI::IsMember(
          {"hamilton-cycle", "hamilton-path", "longest-rainbow-cycle", "count-hamilton-cycles"}));
  solve->add_option("file", solve_file, "TGC input")->required();
  solve->add_flag("--json", solve_json, "JSON output");
  solve->add_option("--min-len", solve_min_len, "minimum rainbow cycle length");
  solve->add_option("--max-n", solve_max_n, "override the desk-scale cap");

  // classify
  auto* cls_cmd = app.add_subcommand("classify", "match a collection against the extremal families");
  std::string cls_file;
  bool cls_json = false;
  cls_cmd->add_option("file", cls_file, "TGC input")->required();
  cls_cmd->add_flag("--json", cls_json, "JSON output");

  // certify
  auto* cert_cmd = app.add_subcommand("certify", "issue a no-Hamiltonicity certificate");
  std::string cert_file;
  bool cert_json = false;
  cert_cmd->add_option("file", cert_file, "TGC input")->required();
  cert_cmd->add_flag("--json", cert_json, "JSON output");

  // verify
  auto* verify = app.add_subcommand("verify", "run a verification campaign");
  std::string verify_campaign, verify_n = "4", verify_mode = "sample", verify_target = "cycle";
  int verify_count = 100, verify_threads = 0;
  std::uint64_t verify_seed = 0;
  bool verify_json = false;
  verify->add_option("campaign", verify_campaign, "theorem1|families|threshold")
      ->required()
      ->check(CLI::IsMember({"theorem1", "families", "threshold"}));
  verify->add_option("--n", verify_n, "vertex count or comma list");
  verify->add_option("--mode", verify_mode, "exhaustive|sample")
      ->check(CLI::IsMember({"exhaustive", "sample"}));
  verify->add_option("--target", verify_target, "cycle|path (families)")
      ->check(CLI::IsMember({"cycle", "path"}));
  verify->add_option("--count", verify_count, "sample count");
  verify->add_option("--seed", verify_seed, "campaign seed");
  verify->add_option("--threads", verify_threads, "worker threads (0 = auto)");
  verify->add_flag("--json", verify_json, "JSON output");

  // sample
  auto* sample = app.add_subcommand("sample", "sample a degree-constrained collection");
  int sample_n = 0, sample_m = 0, sample_min_deg = 0;
  std::uint64_t sample_seed = 0;
  std::string sample_out;
  sample->add_option("--n", sample_n, "vertex count")->required();
  sample->add_option("--m", sample_m, "color count")->required();
  sample->add_option("--min-degree", sample_min_deg, "repair threshold")->required();
  sample->add_option("--seed", sample_seed, "seed")->required();
  sample->add_option("-o,--output", sample_out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (gen->parsed()) {
      auto tag = family_tag_from_name(gen_family);
      FamilyParams params;
      params.fill = gen_fill == "empty" ? Fill::Empty
                    : gen_fill == "random" ? Fill::Random
                                           : Fill::Complete;
      params.seed = gen_seed;
      params.t = gen_t;
      GraphCollection c;
      if (tag) {
        c = generate_thm3_family(*tag, gen_n, params);
      } else if (gen_family == "corollary-odd-cone") {
        c = single_graph_corollary_family(gen_n, CorollaryVariant::OddConeTwoCliques);
      } else if (gen_family == "corollary-odd-split") {
        c = single_graph_corollary_family(gen_n, CorollaryVariant::OddSplitIndependent);
      } else if (gen_family == "corollary-even-cone") {
        c = single_graph_corollary_family(gen_n, CorollaryVariant::EvenConeTwoCliques);
      } else if (gen_family == "corollary-even-split") {
        c = single_graph_corollary_family(gen_n, CorollaryVariant::EvenPairSplit);
      } else {
        std::cerr << "unknown family '" << gen_family << "'\n";
        return kExitUsage;
      }
      emit(serialize_tgc(c), gen_out);
      return 0;
    }

    if (solve->parsed()) {
      GraphCollection c = load(solve_file);
      SolverLimits lim{solve_max_n};
      Json j;
      j["target"] = solve_target;
      int exit_code = 0;
      if (solve_target == "count-hamilton-cycles") {
        std::int64_t count = count_transversal_hamilton_cycles(c);
        j["count"] = count;
        if (!solve_json) {
          std::cout << count << "\n";
          return count > 0 ? 0 : kExitAbsent;
        }
        std::cout << j.dump(2) << "\n";
        return count > 0 ? 0 : kExitAbsent;
      }
      std::optional<RainbowWalk> walk;
      if (solve_target == "hamilton-cycle") walk = find_transversal_hamilton_cycle(c, lim);
      else if (solve_target == "hamilton-path") walk = find_transversal_hamilton_path(c, lim);
      else walk = find_longest_rainbow_cycle(c, solve_min_len, lim);
      j["found"] = walk.has_value();
      if (walk) j["walk"] = walk_to_json(*walk, c);
      else exit_code = kExitAbsent;
      if (solve_json) {
        std::cout << j.dump(2) << "\n";
      } else if (walk) {
        std::cout << (walk->kind == RainbowWalk::Kind::Cycle ? "cycle" : "path");
        for (int v : walk->vertices) std::cout << " " << v;
        std::cout << "\n";
      } else {
        std::cout << "absent\n";
      }
      return exit_code;
    }

    if (cls_cmd->parsed()) {
      GraphCollection c = load(cls_file);
      ExtremalClass cls = classify(c);
      if (cls_json) std::cout << class_to_json(cls).dump(2) << "\n";
      else std::cout << family_tag_name(cls.tag) << "\n";
      return cls.tag == FamilyTag::Unknown ? kExitAbsent : 0;
    }

    if (cert_cmd->parsed()) {
      GraphCollection c = load(cert_file);
      ExtremalClass cls = classify(c);
      if (cls.tag == FamilyTag::Unknown) {
        if (cert_json) std::cout << class_to_json(cls).dump(2) << "\n";
        else std::cout << "unknown\n";
        return kExitAbsent;
      }
      auto cert = certify_no_thc(c, cls);
      if (!cert) {
        std::cout << "refused\n";
        return kExitAbsent;
      }
      if (cert_json) std::cout << certificate_to_json(*cert).dump(2) << "\n";
      else std::cout << family_tag_name(cls.tag) << " " << cert_reason_name(cert->reason) << "\n";
      return 0;
    }

    if (verify->parsed()) {
      std::vector<int> ns = parse_n_list(verify_n);
      VerificationReport rep;
      if (verify_campaign == "theorem1") {
        rep = verify_theorem1(ns.front(),
                              verify_mode == "exhaustive" ? VerifyMode::Exhaustive
                                                          : VerifyMode::Sample,
                              verify_count, verify_seed, -1, verify_threads);
      } else if (verify_campaign == "families") {
        rep = verify_families(ns,
                              verify_target == "path" ? WalkTarget::HamiltonPath
                                                      : WalkTarget::HamiltonCycle,
                              verify_threads);
      } else {
        rep = threshold_scan(ns.front(), verify_seed, verify_count, verify_threads);
      }
      if (verify_json) {
        std::cout << rep.to_json().dump(2) << "\n";
      } else {
        std::cout << rep.campaign << ": checked " << rep.checked << ", skipped " << rep.skipped
                  << ", failures " << rep.failures.size() << "\n";
      }
      return rep.ok() ? 0 : kExitCampaignFailure;
    }

    if (sample->parsed()) {
      GraphCollection c = sample_collection(sample_n, sample_m, sample_min_deg, sample_seed);
      emit(serialize_tgc(c), sample_out);
      return 0;
    }
  } catch (const TgcParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
