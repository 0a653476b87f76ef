// Copyright 2026 The digraph-le Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// dle: command-line front end.
//
// Exit codes: 0 success / all PASS, 1 verification failure (or a cycle was
// found by `free`), 2 usage or input error.

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "dle/dle.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

std::string read_input(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw dle::Error("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

// A digraph named either by a family spec or by an arclist file.
dle::Digraph load(const std::string& spec, const std::string& path) {
  if (!spec.empty()) return dle::realize(dle::parse_family_spec(spec));
  return dle::parse_arclist(read_input(path.empty() ? "-" : path));
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw dle::Error("cannot write '" + out_path + "'");
  out << text;
}

int default_jobs() {
  if (const char* env = std::getenv("STL_JOBS")) {
    try {
      return std::max(1, std::stoi(env));
    } catch (const std::exception&) {
      throw dle::Error("STL_JOBS must be a positive integer, got '" + std::string(env) + "'");
    }
  }
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Laplacian energy, arc counts and exhaustive search for digraphs avoiding a directed cycle length"};
  app.require_subcommand(1);

  // gen
  std::string gen_spec;
  std::string gen_format = "arcs";
  std::string gen_out;
  auto* gen = app.add_subcommand("gen", "Generate a family member");
  gen->add_option("spec", gen_spec, "fnk:n=N,k=K,s=S | bk:parts=A+B+... | tt:n=N | kd:n=N")->required();
  gen->add_option("--format", gen_format, "arcs, dot or json")->check(CLI::IsMember({"arcs", "dot", "json"}));
  gen->add_option("--out", gen_out, "Output file (default stdout)");

  // measure
  std::string measure_path;
  std::string measure_spec;
  auto* measure = app.add_subcommand("measure", "Print invariants (le, m1, c2, e, degseq) as JSON");
  measure->add_option("input", measure_path, "Arclist file, '-' for stdin");
  measure->add_option("--spec", measure_spec, "Family spec instead of a file");

  // free
  std::string free_path;
  std::string free_spec;
  int free_len = 0;
  auto* free_cmd = app.add_subcommand("free", "Test for a directed cycle of exactly the given length");
  free_cmd->add_option("input", free_path, "Arclist file, '-' for stdin");
  free_cmd->add_option("--spec", free_spec, "Family spec instead of a file");
  free_cmd->add_option("--len", free_len, "Cycle length")->required();

  // formula
  std::string quantity;
  long long f_n = 0;
  std::optional<long long> f_k;
  auto* formula = app.add_subcommand("formula", "Evaluate a closed-form extremal value");
  formula->add_option("--quantity", quantity, "ex_le, ex_arcs or ex_m1")
      ->required()
      ->check(CLI::IsMember({"ex_le", "ex_arcs", "ex_m1"}));
  formula->add_option("--n", f_n, "Order")->required();
  formula->add_option("--k", f_k, "Forbidden cycle has length k+1 (ex_m1: k=2 only)");

  // search
  dle::SearchOptions sopt;
  std::string objective = "le";
  bool connected_only = false;
  bool timing = false;
  std::string search_out;
  std::optional<int> search_jobs;
  auto* search = app.add_subcommand("search", "Exhaustive extremal search (n <= 5, n = 6 with --allow-n6)");
  search->add_option("--n", sopt.n, "Order")->required();
  search->add_option("--forbid-cycle", sopt.forbidden_len, "Forbidden cycle length")->required();
  search->add_option("--objective", objective, "le, m1 or arcs")->check(CLI::IsMember({"le", "m1", "arcs"}));
  search->add_flag("--connected-only", connected_only, "Only weakly connected digraphs");
  search->add_option("--jobs", search_jobs, "Worker threads (default $STL_JOBS or 1)");
  search->add_option("--out", search_out, "Report file (default stdout)");
  search->add_flag("--timing", timing, "Include elapsed_ms in the report");
  search->add_flag("--allow-n6", sopt.allow_n6, "Permit the 2^30-mask search at n = 6");

  // verify
  std::string tag;
  dle::VerifyOptions vopt;
  std::optional<int> verify_jobs;
  auto* verify = app.add_subcommand("verify", "Check a claim against formula, family and exhaustive search");
  verify->add_option("tag", tag, "thm1.3, thm1.4, thm1.5, thm1.6, lemma2.1 or lemma3.1")->required();
  verify->add_option("--n-max", vopt.n_max, "Largest order");
  verify->add_option("--k-max", vopt.k_max, "Largest block size (thm1.3, thm1.4, lemma3.1)");
  verify->add_option("--oracle-max-n", vopt.oracle_max_n, "Largest order searched exhaustively (<= 6)")
      ->check(CLI::Range(1, dle::kMaxEnumerationOrder));
  verify->add_option("--jobs", verify_jobs, "Worker threads (default $STL_JOBS or 1)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*gen) {
      const dle::FamilySpec spec = dle::parse_family_spec(gen_spec);
      const dle::Digraph g = dle::realize(spec);
      std::string text;
      if (gen_format == "arcs") {
        text = dle::to_arclist(g);
      } else if (gen_format == "dot") {
        text = dle::to_dot(g, dle::block_assignment(spec));
      } else {
        dle::Json j = dle::to_json(g);
        j["family"] = dle::to_string(spec);
        text = j.dump(2) + "\n";
      }
      emit(text, gen_out);
      return kExitOk;
    }
    if (*measure) {
      const dle::Digraph g = load(measure_spec, measure_path);
      std::cout << dle::to_json(dle::measure(g)).dump(2) << "\n";
      return kExitOk;
    }
    if (*free_cmd) {
      const dle::Digraph g = load(free_spec, free_path);
      const auto cycle = dle::find_cycle_of_length(g, free_len);
      if (!cycle) {
        std::cout << "free\n";
        return kExitOk;
      }
      std::cerr << "contains a directed cycle of length " << free_len << "\n";
      dle::DigraphBuilder b(g.size());
      for (const auto& [u, v] : cycle->arcs()) b.add_arc(u, v);
      std::cout << dle::to_arclist(b.build());
      return kExitFailed;
    }
    if (*formula) {
      dle::ExactValue v;
      if (quantity == "ex_m1") {
        if (f_k && *f_k != 2) {
          std::cerr << "ex_m1 is defined for k = 2 only\n";
          return kExitUsage;
        }
        v = dle::ex_m1_c3(f_n);
      } else {
        if (!f_k) {
          std::cerr << quantity << " needs --k\n";
          return kExitUsage;
        }
        v = quantity == "ex_le" ? dle::ex_le_ck(f_n, *f_k) : dle::ex_arcs_ck(f_n, *f_k);
      }
      dle::Json j{{"schema", dle::kSchemaVersion}, {"quantity", quantity}, {"n", f_n}, {"k", f_k.value_or(2)}};
      j.update(dle::to_json(v));
      std::cout << j.dump(2) << "\n";
      return kExitOk;
    }
    if (*search) {
      sopt.objective = objective == "le"   ? dle::Objective::kLaplacianEnergy
                       : objective == "m1" ? dle::Objective::kFirstZagreb
                                           : dle::Objective::kArcs;
      sopt.scope = connected_only ? dle::Scope::kConnectedOnly : dle::Scope::kAll;
      sopt.jobs = search_jobs.value_or(default_jobs());
      const dle::ExtremalSearchReport report = dle::search_extremal(sopt);
      emit(dle::to_json(report, timing).dump(2) + "\n", search_out);
      return kExitOk;
    }
    if (*verify) {
      const auto claim = dle::parse_claim_tag(tag);
      if (!claim) {
        std::cerr << "unknown tag '" << tag << "'\n";
        return kExitUsage;
      }
      vopt.jobs = verify_jobs.value_or(default_jobs());
      const dle::VerifyTable table = dle::verify_theorem(*claim, vopt);
      dle::print_table(std::cout, table);
      return table.all_pass() ? kExitOk : kExitFailed;
    }
  } catch (const dle::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
