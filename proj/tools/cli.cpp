#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "admp/commands.hpp"
#include "admp/search.hpp"

namespace admp {

namespace {

std::string read_input(const std::string& path) {
  std::ostringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open '" + path + "'");
  ss << in.rdbuf();
  return ss.str();
}

std::vector<AlgebraFile> read_documents(const std::string& path) {
  std::vector<AlgebraFile> docs;
  for (const std::string& text : split_documents(read_input(path))) docs.push_back(parse_file(text));
  if (docs.empty()) throw InvalidInput("'" + path + "' contains no algebra file");
  return docs;
}

// Writes documents separated by "---" lines to `out_path` or `out`.
void write_documents(const std::vector<AlgebraFile>& docs, const std::string& out_path, std::ostream& out) {
  std::ostringstream text;
  for (std::size_t i = 0; i < docs.size(); ++i) {
    if (i) text << "---\n";
    text << print_file(docs[i]);
  }
  if (out_path.empty() || out_path == "-") {
    out << text.str();
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw InvalidInput("cannot write '" + out_path + "'");
  f << text.str();
}

int do_check(const std::string& predicate, const std::string& path, const CheckOptions& opt, std::ostream& out) {
  int code = 0;
  for (const AlgebraFile& f : read_documents(path)) {
    AxiomReport r = evaluate_predicate(predicate, f, opt);
    if (r.holds) {
      out << format_success(predicate, predicate_dim(predicate, f), r) << '\n';
    } else {
      out << format_failure(*r.witness) << '\n';
      code = 1;
    }
  }
  return code;
}

int do_build(const std::string& construction, const std::string& path, const std::string& out_path,
             std::ostream& out) {
  std::vector<AlgebraFile> built;
  for (const AlgebraFile& f : read_documents(path)) {
    BuildResult r = build_construction(construction, f);
    if (r.failed) {
      out << format_failure(*r.failed->witness) << '\n';
      return 1;
    }
    built.push_back(std::move(r.file));
  }
  write_documents(built, out_path, out);
  return 0;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification, construction and search for adm-Poisson algebras", "admp"};
  app.require_subcommand(1);

  std::string predicate, construction, file, out_path;
  CheckOptions opt;
  auto* check = app.add_subcommand("check", "Check a predicate on every document of FILE ('-' for stdin)");
  check->add_option("predicate", predicate, "Predicate name")->required()->check(CLI::IsMember(predicate_names()));
  check->add_option("file", file, "Input file")->required();
  check->add_flag("--symmetric", opt.symmetric, "invariant-form: also require symmetry");
  check->add_flag("--nondegenerate", opt.nondegenerate, "invariant-form: also require nondegeneracy");

  auto* build = app.add_subcommand("build", "Apply a construction to every document of FILE");
  build->add_option("construction", construction, "Construction name")
      ->required()
      ->check(CLI::IsMember(construction_names()));
  build->add_option("file", file, "Input file")->required();
  build->add_option("--out", out_path, "Output file (default stdout)");

  SearchSpec spec;
  std::string target, base_path;
  bool quiet = false;
  auto* srch = app.add_subcommand("search", "Enumerate or sample instances over GF(p)");
  srch->add_option("--target", target,
                   "adm-poisson | poisson | adm-pybe-solution | pre-adm-poisson | o-operator")
      ->required();
  srch->add_option("--dim", spec.dim, "Algebra dimension")->capture_default_str();
  srch->add_option("--p", spec.p, "Field characteristic")->capture_default_str();
  srch->add_option("--base", base_path, "Fixed algebra file (adm-pybe-solution, o-operator)");
  srch->add_flag("--skew", spec.skew, "adm-pybe-solution: skew-symmetric r only");
  srch->add_flag("--via-rota-baxter", spec.via_rota_baxter,
                 "pre-adm-poisson: structures induced by Rota-Baxter operators");
  srch->add_option("--samples", spec.samples, "Random samples when the space exceeds the bound");
  srch->add_option("--seed", spec.seed, "Random seed")->capture_default_str();
  srch->add_option("--count", spec.count, "Stop after this many hits");
  srch->add_flag("--nonzero-only", spec.nonzero_only, "Skip the all-zero candidate");
  srch->add_option("--workers", spec.workers, "Worker threads (0 = all cores)")->capture_default_str();
  srch->add_option("--bound", spec.exhaustive_bound, "Largest exhaustively enumerated space")
      ->capture_default_str();
  srch->add_option("--max-dim", spec.max_exhaustive_dim, "Largest exhaustively enumerated dimension")
      ->capture_default_str();
  srch->add_option("--out", out_path, "Output file (default stdout)");
  srch->add_flag("--quiet", quiet, "Omit the summary line on stderr");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*check) return do_check(predicate, file, opt, out);
    if (*build) return do_build(construction, file, out_path, out);

    auto t = search_target_from_string(target);
    if (!t) throw InvalidInput("unknown search target '" + target + "'");
    spec.target = *t;
    if (!base_path.empty()) {
      std::vector<AlgebraFile> docs = read_documents(base_path);
      spec.base = docs.front();
      if (spec.base->field.is_rational()) throw InvalidInput("search needs a finite field");
      spec.p = spec.base->field.modulus();
      spec.dim = spec.base->dim;
    }
    std::vector<AlgebraFile> hits;
    SearchStats st = search(spec, [&](const AlgebraFile& a) { hits.push_back(a); });
    write_documents(hits, out_path, out);
    if (!quiet)
      err << "search " << to_string(spec.target) << ": " << (st.exhaustive ? "exhaustive" : "sampled") << ", "
          << st.examined << " examined, " << st.found << " found\n";
    return 0;
  } catch (const admp::Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 3;
  }
}

}  // namespace admp
