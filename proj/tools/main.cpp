#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "liederiv/derivations.hpp"
#include "liederiv/families.hpp"
#include "liederiv/goldens.hpp"
#include "liederiv/io.hpp"
#include "liederiv/membership.hpp"
#include "liederiv/oracle.hpp"

namespace {

using namespace liederiv;

/// Splits family arguments so that both `--family gn 2` and
/// `--family "gn 2"` (handy for negative parameters) are accepted.
std::vector<std::string> split_words(const std::vector<std::string>& chunks) {
  std::vector<std::string> out;
  for (const std::string& chunk : chunks) {
    std::istringstream in(chunk);
    std::string word;
    while (in >> word) out.push_back(word);
  }
  return out;
}

struct AlgebraChoice {
  std::string path;
  std::vector<std::string> family;

  bool from_family() const { return !family.empty(); }

  std::string display_name() const {
    if (!from_family()) return path;
    std::string joined;
    for (const std::string& w : split_words(family)) {
      if (!joined.empty()) joined += " ";
      joined += w;
    }
    return joined;
  }

  LieAlgebra resolve() const {
    if (from_family()) {
      std::vector<std::string> words = split_words(family);
      if (words.empty()) throw std::invalid_argument("empty --family spec");
      const std::string name = words.front();
      words.erase(words.begin());
      return make_family(name, words);
    }
    if (path.empty()) {
      throw std::invalid_argument("no input: pass an algebra file or --family");
    }
    AlgebraInput input = load_algebra(path);
    if (!input.rational) {
      throw std::invalid_argument(path +
                                  ": this command needs a rational table");
    }
    return *input.rational;
  }
};

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
  } else {
    write_text_file(out_path, text);
  }
}

bool is_derivation(const LieAlgebra& L, const Matrix& D) {
  for (const auto& [pair, terms] : L.table()) {
    (void)terms;
    const auto [i, j] = pair;
    Vec lhs = D.apply(L.bracket_basis(i, j));
    Vec rhs = L.bracket(D.col(i), L.basis_vector(j));
    const Vec other = L.bracket(L.basis_vector(i), D.col(j));
    for (std::size_t t = 0; t < rhs.size(); ++t) rhs[t] += other[t];
    for (std::size_t t = 0; t < lhs.size(); ++t) {
      if (lhs[t] != rhs[t]) return false;
    }
  }
  return true;
}

int cmd_validate(const std::string& path) {
  const AlgebraInput input = load_algebra(path);
  const int dim = input.rational ? input.rational->dim() : input.modular->dim;
  std::cout << "ok: dim " << dim << " over " << input.field << "\n";
  return 0;
}

int cmd_report(const AlgebraChoice& in, std::uint64_t seed, long depth_cap,
               bool json, const std::string& out_path) {
  const LieAlgebra L = in.resolve();
  DerivationConfig cfg;
  cfg.seed = seed;
  if (depth_cap > 0) cfg.depth_cap = depth_cap;
  const DerivationReport report = compute_report(L, cfg);
  const ReportFile file = make_report_file(in.display_name(), L, report, seed);
  if (json) {
    emit(report_to_json(file), out_path);
  } else {
    emit(table_header() + "\n" + table_row(in.display_name(), L, report) +
             "\n",
         out_path);
  }
  return 0;
}

int cmd_family(const std::vector<std::string>& spec,
               const std::string& out_path) {
  std::vector<std::string> words = split_words(spec);
  if (words.empty()) throw std::invalid_argument("missing family name");
  const std::string name = words.front();
  words.erase(words.begin());
  emit(algebra_to_json(make_family(name, words)), out_path);
  return 0;
}

int cmd_oracle(const AlgebraChoice& in, std::uint32_t prime) {
  OracleReport report;
  if (!in.from_family() && !in.path.empty()) {
    const AlgebraInput input = load_algebra(in.path);
    if (input.modular) {
      if (prime != 0 && prime != input.modular->p) {
        throw std::invalid_argument("--prime disagrees with the file's field");
      }
      report = oracle_aid(*input.modular);
    } else {
      if (prime == 0) throw std::invalid_argument("--prime is required");
      report = oracle_aid(*input.rational, prime);
    }
  } else {
    if (prime == 0) throw std::invalid_argument("--prime is required");
    report = oracle_aid(in.resolve(), prime);
  }
  std::cout << "prime " << report.prime << "\n"
            << "dim " << report.dim << "\n"
            << "dim_der " << report.dim_der << "\n"
            << "dim_inn " << report.dim_inn << "\n"
            << "dim_aid " << report.dim_aid << "\n"
            << "points " << report.points << "\n"
            << "early_exit " << (report.early_exit ? "true" : "false") << "\n";
  return 0;
}

int cmd_certify(const AlgebraChoice& in, const std::string& derivation_path,
                std::uint64_t seed, long depth_cap) {
  const LieAlgebra L = in.resolve();
  const Matrix D = load_matrix(derivation_path);
  if (D.rows() != L.dim() || D.cols() != L.dim()) {
    throw std::invalid_argument("matrix shape does not match the algebra");
  }
  std::cout << "derivation: " << (is_derivation(L, D) ? "yes" : "no") << "\n";
  if (auto cert = search_certificate(L, D)) {
    std::cout << "almost inner: yes (verified certificate)\n"
              << cert->to_string(&L);
    return 0;
  }
  DecideConfig cfg;
  cfg.witness_seed = seed + 1;
  if (depth_cap > 0) cfg.leaf_cap = depth_cap;
  const DecisionOutcome outcome = decide_pointwise_membership(L, D, cfg);
  switch (outcome.kind) {
    case DecisionOutcome::Kind::AlwaysMember:
      std::cout << "almost inner: yes (decision procedure, " << outcome.leaves
                << " leaves)\n";
      return 0;
    case DecisionOutcome::Kind::Counterexample:
      std::cout << "almost inner: no\ncounterexample x = "
                << vec_to_string(outcome.witness) << "\n";
      return 1;
    case DecisionOutcome::Kind::Undecided:
      std::cout << "almost inner: undecided (" << outcome.reason << ")\n";
      return 1;
  }
  return 1;
}

int cmd_isocheck(const std::string& src_path, const std::string& dst_path,
                 const std::string& matrix_path) {
  const AlgebraInput src = load_algebra(src_path);
  const AlgebraInput dst = load_algebra(dst_path);
  if (!src.rational || !dst.rational) {
    throw std::invalid_argument("isocheck needs rational tables");
  }
  const Matrix M = load_matrix(matrix_path);
  const bool good = verify_isomorphism(*src.rational, *dst.rational, M);
  std::cout << "isomorphism: " << (good ? "yes" : "no") << "\n";
  return good ? 0 : 1;
}

int cmd_goldens(std::uint64_t seed) {
  GoldenOptions options;
  options.seed = seed;
  return run_goldens_with_output(std::cout, options) == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact calculator for derivation subspaces of Lie algebras given by "
      "structure constants: Inn, CAID, AID and Der over Q."};
  app.require_subcommand(1);

  std::string path, out_path, derivation_path, matrix_path, src, dst;
  std::vector<std::string> family, family_spec;
  std::uint64_t seed = 0;
  long depth_cap = 0;
  std::uint32_t prime = 0;
  bool json = false, table = false;

  CLI::App* validate = app.add_subcommand("validate", "Parse an algebra file");
  validate->add_option("path", path)->required();

  CLI::App* report =
      app.add_subcommand("report", "Compute the derivation subspace chain");
  report->add_option("path", path);
  report->add_option("--family", family,
                     "Family spec, e.g. g56 or \"aqr 1 -1\"");
  report->add_option("--seed", seed);
  report->add_option("--depth-cap", depth_cap);
  report->add_flag("--json", json, "Emit the full report as JSON");
  report->add_flag("--table", table, "Emit a one-row table (default)");
  report->add_option("--out", out_path);

  CLI::App* familycmd =
      app.add_subcommand("family", "Emit a family member as an algebra file");
  familycmd->add_option("spec", family_spec, family_grammar_help());
  familycmd->add_option("--family", family, "Alternative to the positional");
  familycmd->add_option("--out", out_path);

  CLI::App* oracle = app.add_subcommand(
      "oracle", "Exhaustive almost-inner computation over F_p");
  oracle->add_option("path", path);
  oracle->add_option("--family", family);
  oracle->add_option("--prime", prime);

  CLI::App* certify = app.add_subcommand(
      "certify", "Decide whether a matrix is an almost inner map");
  certify->add_option("path", path);
  certify->add_option("--family", family);
  certify->add_option("--derivation", derivation_path, "Matrix file")
      ->required();
  certify->add_option("--seed", seed);
  certify->add_option("--depth-cap", depth_cap);

  CLI::App* isocheck =
      app.add_subcommand("isocheck", "Check an isomorphism between two files");
  isocheck->add_option("src", src)->required();
  isocheck->add_option("dst", dst)->required();
  isocheck->add_option("--matrix", matrix_path, "Matrix file")->required();

  CLI::App* goldens =
      app.add_subcommand("goldens", "Run the frozen verification suite");
  goldens->add_option("--seed", seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    AlgebraChoice in{path, family};
    if (app.got_subcommand(validate)) return cmd_validate(path);
    if (app.got_subcommand(report))
      return cmd_report(in, seed, depth_cap, json && !table, out_path);
    if (app.got_subcommand(familycmd)) {
      std::vector<std::string> spec = family_spec;
      for (const std::string& w : family) spec.push_back(w);
      return cmd_family(spec, out_path);
    }
    if (app.got_subcommand(oracle)) return cmd_oracle(in, prime);
    if (app.got_subcommand(certify))
      return cmd_certify(in, derivation_path, seed, depth_cap);
    if (app.got_subcommand(isocheck)) return cmd_isocheck(src, dst, matrix_path);
    if (app.got_subcommand(goldens)) return cmd_goldens(seed);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
