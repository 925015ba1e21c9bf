// Batch CLI over the bergebook library. Exit codes: 0 success / found,
// 1 clean not-found, 2 usage or input error, 3 extraction failure.
#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "bergebook/constructions.hpp"
#include "bergebook/io.hpp"
#include "bergebook/pipeline.hpp"
#include "bergebook/search.hpp"

using namespace bergebook;

namespace {

double parse_budget(const std::string& s) {
  if (s.empty()) return 0.0;
  std::string t = s;
  double scale = 1.0;
  if (t.size() > 2 && t.substr(t.size() - 2) == "ms") {
    scale = 1e-3;
    t = t.substr(0, t.size() - 2);
  } else if (t.back() == 's') {
    t = t.substr(0, t.size() - 1);
  }
  std::size_t used = 0;
  double v = std::stod(t, &used);
  if (used != t.size() || v < 0) throw CLI::ValidationError("budget", s);
  return v * scale;
}

nlohmann::ordered_json tool_header(const std::string& subcommand,
                                   const nlohmann::ordered_json& config) {
  nlohmann::ordered_json j;
  j["tool"] = kToolName;
  j["version"] = kToolVersion;
  j["subcommand"] = subcommand;
  j["config"] = config;
  return j;
}

int cmd_gen(const std::string& kind, int n, int m, int k, std::uint64_t seed,
            bool seed_set, const std::string& out_path) {
  Hypergraph h;
  std::ostringstream cfg;
  cfg << "gen " << kind << " n=" << n;
  if (kind == "fig1") {
    h = fig1(n);
  } else if (kind == "sts") {
    h = bose_sts(n);
  } else {
    if (!seed_set) {
      std::cerr << "error: --seed is required for randomized generators\n";
      return 2;
    }
    cfg << " m=" << m << " seed=" << seed;
    if (kind == "uniform") {
      h = random_uniform(n, m, seed);
    } else if (kind == "linear") {
      h = random_linear_greedy(n, m, seed);
    } else if (kind == "planted") {
      cfg << " k=" << k;
      h = random_planted_book(n, k, m, seed);
    } else {
      std::cerr << "error: unknown generator '" << kind << "'\n";
      return 2;
    }
  }
  std::vector<std::string> header = {
      std::string(kToolName) + " " + kToolVersion, cfg.str()};
  if (out_path.empty())
    write_3hg(std::cout, h, header);
  else
    save_3hg(out_path, h, header);
  std::cout << "vertices " << h.n << " edges " << h.edges.size() << "\n";
  return 0;
}

int cmd_detect(const std::string& in_path, int book_k, bool triangle) {
  Hypergraph h = load_3hg(in_path);
  nlohmann::ordered_json cfg;
  cfg["input"] = in_path;
  nlohmann::ordered_json out;
  bool found = false;
  if (triangle) {
    cfg["mode"] = "triangle";
    out = tool_header("detect", cfg);
    if (auto c = find_berge_triangle(h)) {
      found = true;
      out["found"] = true;
      out["certificate"] = to_json(*c);
    }
  } else {
    cfg["mode"] = "book";
    cfg["k"] = book_k;
    out = tool_header("detect", cfg);
    if (auto c = find_berge_book(h, book_k)) {
      found = true;
      out["found"] = true;
      out["certificate"] = to_json(*c);
    }
  }
  if (!found) out["found"] = false;
  std::cout << out.dump(2) << "\n";
  return found ? 0 : 1;
}

int cmd_extract(const std::string& in_path, int k) {
  Hypergraph h = load_3hg(in_path);
  nlohmann::ordered_json cfg;
  cfg["input"] = in_path;
  cfg["k"] = k;
  nlohmann::ordered_json out = tool_header("extract", cfg);
  try {
    PipelineReport rep = run_pipeline(h, k);
    out["report"] = to_json(rep);
    std::cout << out.dump(2) << "\n";
    return 0;
  } catch (const ExtractionFailed& ex) {
    out["error"] = ex.what();
    out["state"] = ex.state_dump;
    std::cout << out.dump(2) << "\n";
    return 3;
  }
}

int cmd_turan(int n, int k, const std::string& budget_str,
              const std::string& method, int workers,
              const std::string& out_path) {
  double budget = parse_budget(budget_str);
  auto t0 = std::chrono::steady_clock::now();
  SearchResult r = method == "exhaustive"
                       ? turan_exhaustive(n, k)
                       : turan_branch_bound(n, k, budget, workers);
  // whole seconds: sub-second runs report 0 and reruns stay byte-identical
  long secs = std::chrono::duration_cast<std::chrono::seconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
  std::ostringstream row;
  row << r.n << "," << r.k << "," << r.max_edges << "," << r.nodes_explored
      << "," << (r.optimal ? 1 : 0) << "," << secs << "\n";
  std::ostringstream meta;
  meta << "# " << kToolName << " " << kToolVersion << " turan n=" << n
       << " k=" << k << " method=" << method << " budget=" << budget_str
       << " workers=" << workers << "\n";
  const std::string header = "n,k,max_edges,nodes_explored,optimal,seconds\n";
  if (out_path.empty()) {
    std::cout << meta.str() << header << row.str();
  } else {
    bool fresh = !std::filesystem::exists(out_path) ||
                 std::filesystem::file_size(out_path) == 0;
    std::ofstream f(out_path, std::ios::app);
    if (!f) throw Error("cannot write " + out_path);
    if (fresh) f << meta.str() << header;
    f << row.str();
    std::cout << "max_edges " << r.max_edges
              << (r.optimal ? "" : " (non-optimal: budget exceeded)") << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"3-uniform hypergraph Berge-book toolkit"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "write a generated hypergraph (.3hg)");
  std::string gen_kind, gen_out;
  int gen_n = 0, gen_m = 0, gen_k = 2;
  std::uint64_t gen_seed = 0;
  gen->add_option("kind", gen_kind,
                  "fig1 | sts | uniform | linear | planted")
      ->required();
  gen->add_option("--n", gen_n, "vertex count parameter")->required();
  gen->add_option("--m,--noise", gen_m, "edge count / noise edges");
  gen->add_option("--k", gen_k, "planted book size");
  auto* seed_opt = gen->add_option("--seed", gen_seed, "RNG seed");
  gen->add_option("-o,--output", gen_out, "output path (default stdout)");

  // detect
  auto* det = app.add_subcommand("detect", "search for a Berge substructure");
  std::string det_in;
  int det_k = 0;
  bool det_tri = false;
  det->add_option("-i,--input", det_in, ".3hg input")->required();
  auto* book_opt = det->add_option("--book", det_k, "Berge book size k");
  det->add_flag("--triangle", det_tri, "search for a Berge triangle");

  // extract
  auto* ext = app.add_subcommand("extract", "run the extraction pipeline");
  std::string ext_in;
  int ext_k = 2;
  ext->add_option("-i,--input", ext_in, ".3hg input")->required();
  ext->add_option("--k", ext_k, "book size k (>= 2)")->required();

  // turan
  auto* tur = app.add_subcommand("turan", "exact ex_3(n, B_k) at small n");
  int tur_n = 0, tur_k = 2, tur_workers = 1;
  std::string tur_budget, tur_method = "bb", tur_out;
  tur->add_option("--n", tur_n, "vertex count")->required();
  tur->add_option("--k", tur_k, "book size k")->required();
  tur->add_option("--budget", tur_budget, "time budget, e.g. 10s or 500ms");
  tur->add_option("--method", tur_method, "bb | exhaustive");
  tur->add_option("--workers", tur_workers, "worker threads (1 = deterministic witness)");
  tur->add_option("-o,--output", tur_out, "CSV path to append to");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    if (gen->parsed())
      return cmd_gen(gen_kind, gen_n, gen_m, gen_k, gen_seed,
                     seed_opt->count() > 0, gen_out);
    if (det->parsed()) {
      if (book_opt->count() == 0 && !det_tri) {
        std::cerr << "error: need --book K or --triangle\n";
        return 2;
      }
      return cmd_detect(det_in, det_k, det_tri);
    }
    if (ext->parsed()) return cmd_extract(ext_in, ext_k);
    if (tur->parsed())
      return cmd_turan(tur_n, tur_k, tur_budget, tur_method, tur_workers,
                       tur_out);
  } catch (const ExtractionFailed& ex) {
    std::cerr << "extraction failed: " << ex.what() << "\n"
              << ex.state_dump << "\n";
    return 3;
  } catch (const Error& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  }
  return 2;
}
