#pragma once

// Command-line front end. Subcommands:
//   diagram  <perm>            Rothe diagram, essential set, rank matrix
//   fulton   <spec>            Fulton generators of one scheme
//   union    <spec>...         Gröbner basis of the union (intersection of ideals)
//   groebner <spec>...         reduced Gröbner basis of the intersection via elimination
//   verify   <suite>...|all    packaged property suites
//
// Exit codes: 0 success, 1 verification failure, 2 usage or input error.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include <nwunion/nwunion.hpp>

namespace nwunion::cli {

enum ExitCode : int { kOk = 0, kVerifyFailed = 1, kUsage = 2 };

enum class Format { kText, kJson };
enum class VerifyDepth { kNone, kMembership, kFullOracle };

struct RunConfig {
  std::string subcommand;
  std::vector<std::string> spec_paths;
  std::vector<std::string> perms;
  std::vector<std::string> suites;
  std::string perm_text;
  Format format = Format::kText;
  VerifyDepth verify = VerifyDepth::kNone;
  std::uint64_t seed = 20240101;
  int max_oracle_n = 5;
  std::string out_path;
};

namespace detail {

inline std::vector<RankConditionSpec> load_specs(const RunConfig& cfg) {
  std::vector<RankConditionSpec> specs;
  for (const auto& path : cfg.spec_paths) specs.push_back(load_spec(path));
  for (const auto& p : cfg.perms) specs.push_back(spec_from_permutation(parse_one_line(p)));
  for (auto& s : specs)
    if (s.label.empty()) s.label = "spec" + std::to_string(&s - specs.data() + 1);
  if (specs.empty()) throw std::invalid_argument("no input specs (give spec files or --perm)");
  for (const auto& s : specs)
    if (s.n != specs.front().n) throw std::invalid_argument("specs have different ambient sizes");
  return specs;
}

inline std::string joined_labels(const std::vector<RankConditionSpec>& specs) {
  std::string out;
  for (const auto& s : specs) out += (out.empty() ? "" : " | ") + s.label;
  return out;
}

inline int cmd_diagram(const RunConfig& cfg, std::ostream& out) {
  const auto p = parse_one_line(cfg.perm_text);
  const auto diagram = rothe_diagram(p);
  const auto ess = essential_set(p);
  const auto ranks = rank_matrix(p);
  if (cfg.format == Format::kJson) {
    nlohmann::json cells = nlohmann::json::array();
    for (const Cell& c : diagram) cells.push_back({c.row, c.col});
    nlohmann::json essential = nlohmann::json::array();
    for (const auto& e : ess) essential.push_back({{"cell", {e.cell.row, e.cell.col}}, {"rank", e.rank}});
    out << nlohmann::json{{"n", p.size()},
                          {"permutation", p.one_line()},
                          {"cells", cells},
                          {"essential", essential},
                          {"rank_matrix", ranks.rows()}}
               .dump()
        << '\n';
    return kOk;
  }
  out << "permutation " << p.one_line() << '\n' << render_diagram(p) << "essential:";
  if (ess.empty()) out << " none";
  for (const auto& e : ess) out << ' ' << e.cell << " r=" << e.rank;
  out << "\nrank matrix:\n";
  for (const auto& row : ranks.rows()) {
    for (std::size_t j = 0; j < row.size(); ++j) out << (j ? " " : "") << row[j];
    out << '\n';
  }
  return kOk;
}

inline int cmd_fulton(const RunConfig& cfg, std::ostream& out) {
  const auto specs = load_specs(cfg);
  if (specs.size() != 1) throw std::invalid_argument("fulton takes exactly one spec");
  const auto gens = fulton_generators(specs.front());
  if (cfg.format == Format::kJson) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& g : gens) {
      arr.push_back({{"rows", g.rows},
                     {"cols", g.cols},
                     {"antidiagonal", to_json(g.antidiag)},
                     {"condition", {{"i", g.source.i}, {"j", g.source.j}, {"r", g.source.r}}},
                     {"poly", to_json(g.poly)}});
    }
    out << nlohmann::json{{"label", specs.front().label}, {"n", specs.front().n}, {"generators", arr}}.dump() << '\n';
    return kOk;
  }
  out << "# " << specs.front().label << ": " << gens.size() << " Fulton generators\n";
  for (const auto& g : gens) out << render_determinant(g.antidiag) << " = " << to_string(g.poly) << '\n';
  return kOk;
}

struct VerifyOutcome {
  nlohmann::json json = nlohmann::json::object();
  std::vector<std::string> lines;
  bool ok = true;
};

inline VerifyOutcome verify_union(const std::vector<RankConditionSpec>& specs, const std::vector<Polynomial>& basis,
                                  VerifyDepth depth) {
  VerifyOutcome v;
  std::vector<std::vector<Polynomial>> ideals;
  for (const auto& s : specs) ideals.push_back(fulton_polynomials(s));

  std::size_t checks = 0, failed = 0;
  for (const auto& ideal : ideals) {
    const auto gb = buchberger(ideal);
    for (const auto& g : basis) {
      ++checks;
      if (!reduces_to_zero(g, gb)) ++failed;
    }
  }
  v.json["membership"] = {{"checks", checks}, {"failed", failed}};
  v.lines.push_back("# verify membership: " + std::string(failed ? "FAIL" : "ok") + " (" + std::to_string(checks - failed) +
                    "/" + std::to_string(checks) + ")");
  v.ok = failed == 0;
  if (depth == VerifyDepth::kFullOracle) {
    const bool gb = is_groebner(basis);
    const bool eq = ideals_equal(basis, intersect_all(ideals));
    v.json["groebner"] = gb;
    v.json["equals_intersection"] = eq;
    v.lines.push_back(std::string("# verify groebner: ") + (gb ? "ok" : "FAIL"));
    v.lines.push_back(std::string("# verify equals intersection: ") + (eq ? "ok" : "FAIL"));
    v.ok = v.ok && gb && eq;
  }
  return v;
}

inline void check_size_guard(const RunConfig& cfg, int n) {
  if (n > cfg.max_oracle_n)
    throw std::invalid_argument("ambient size " + std::to_string(n) + " exceeds the oracle size guard (--max-oracle-n=" +
                                std::to_string(cfg.max_oracle_n) + ")");
}

inline int cmd_union(const RunConfig& cfg, std::ostream& out) {
  const auto specs = load_specs(cfg);
  if (cfg.verify == VerifyDepth::kFullOracle) check_size_guard(cfg, specs.front().n);
  const auto basis = union_basis(specs);
  const auto polys = polynomials_of(basis);
  VerifyOutcome v;
  if (cfg.verify != VerifyDepth::kNone) v = verify_union(specs, polys, cfg.verify);

  if (cfg.format == Format::kJson) {
    nlohmann::json labels = nlohmann::json::array();
    for (const auto& s : specs) labels.push_back(s.label);
    nlohmann::json gens = nlohmann::json::array();
    for (const auto& g : basis) gens.push_back(to_json(g));
    nlohmann::json doc{{"n", specs.front().n}, {"specs", labels}, {"generators", gens}};
    if (cfg.verify != VerifyDepth::kNone) doc["verification"] = v.json;
    out << doc.dump() << '\n';
  } else {
    out << "# union of " << joined_labels(specs) << ": " << basis.size() << " generators\n";
    for (const auto& g : basis) out << render_factors(g) << " = " << to_string(g.poly) << '\n';
    for (const auto& line : v.lines) out << line << '\n';
  }
  return v.ok ? kOk : kVerifyFailed;
}

inline int cmd_groebner(const RunConfig& cfg, std::ostream& out) {
  const auto specs = load_specs(cfg);
  check_size_guard(cfg, specs.front().n);
  std::vector<std::vector<Polynomial>> ideals;
  for (const auto& s : specs) ideals.push_back(fulton_polynomials(s));
  const auto basis = intersect_all(ideals);
  const auto init = initial_ideal(basis);
  if (cfg.format == Format::kJson) {
    nlohmann::json polys = nlohmann::json::array();
    for (const auto& p : basis) polys.push_back(to_json(p));
    nlohmann::json lead = nlohmann::json::array();
    for (const auto& m : init.minimal_generators()) lead.push_back(monomial_to_json(m));
    out << nlohmann::json{{"n", specs.front().n}, {"basis", polys}, {"initial_ideal", lead}}.dump() << '\n';
    return kOk;
  }
  out << "# reduced Groebner basis of the intersection of " << joined_labels(specs) << ": " << basis.size()
      << " elements\n";
  for (const auto& p : basis) out << to_string(p) << '\n';
  out << "# initial ideal:";
  for (const auto& m : init.minimal_generators()) out << ' ' << to_string(m);
  out << '\n';
  return kOk;
}

inline int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  std::vector<std::string> names;
  for (const auto& s : cfg.suites) {
    if (s == "all") {
      names.insert(names.end(), suite_names().begin(), suite_names().end());
    } else {
      if (std::find(suite_names().begin(), suite_names().end(), s) == suite_names().end())
        throw std::invalid_argument("unknown suite '" + s + "'");
      names.push_back(s);
    }
  }
  bool ok = true;
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& name : names) {
    const SuiteReport r = run_suite(name, cfg.seed);
    ok = ok && r.ok();
    if (cfg.format == Format::kJson) {
      arr.push_back({{"suite", r.name}, {"cases", r.cases}, {"failures", r.failures}, {"messages", r.messages}});
    } else {
      out << (r.ok() ? "PASS " : "FAIL ") << r.name << ' ' << (r.cases - r.failures) << '/' << r.cases << '\n';
      for (const auto& m : r.messages) out << "    " << m << '\n';
    }
  }
  if (cfg.format == Format::kJson) out << arr.dump() << '\n';
  return ok ? kOk : kVerifyFailed;
}

}  // namespace detail

/// Parses argv and runs one subcommand, writing results to `out` (or the
/// --out file) and diagnostics to `err`.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Gröbner bases for unions of schemes given by northwest rank conditions", "nwunion"};
  app.require_subcommand(1);
  RunConfig cfg;

  const std::map<std::string, Format> formats{{"text", Format::kText}, {"json", Format::kJson}};
  const std::map<std::string, VerifyDepth> depths{
      {"none", VerifyDepth::kNone}, {"membership", VerifyDepth::kMembership}, {"full-oracle", VerifyDepth::kFullOracle}};

  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "Output format: text or json")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    sub->add_option("--out", cfg.out_path, "Write output to this file instead of stdout");
  };
  auto spec_inputs = [&](CLI::App* sub) {
    sub->add_option("specs", cfg.spec_paths, "Spec JSON files")->check(CLI::ExistingFile);
    sub->add_option("-p,--perm", cfg.perms, "Permutation in one-line notation (repeatable; after the files)");
  };

  auto* diagram = app.add_subcommand("diagram", "Rothe diagram, essential set and rank matrix of a permutation");
  diagram->add_option("permutation", cfg.perm_text, "One-line notation, e.g. \"2 1 4 3\" or \"2 * 1\"")->required();
  common(diagram);

  auto* fulton = app.add_subcommand("fulton", "Fulton generators of one scheme");
  spec_inputs(fulton);
  common(fulton);

  auto* uni = app.add_subcommand("union", "Gröbner basis of the union of the given schemes");
  spec_inputs(uni);
  common(uni);
  uni->add_option("--verify", cfg.verify, "none | membership | full-oracle")
      ->transform(CLI::CheckedTransformer(depths, CLI::ignore_case));
  uni->add_option("--max-oracle-n", cfg.max_oracle_n, "Largest ambient size allowed for full-oracle verification");

  auto* groebner = app.add_subcommand("groebner", "Reduced Gröbner basis of the intersection by elimination");
  spec_inputs(groebner);
  common(groebner);
  groebner->add_option("--max-oracle-n", cfg.max_oracle_n, "Largest ambient size allowed");

  auto* verify = app.add_subcommand("verify", "Run packaged property suites");
  verify->add_option("suites", cfg.suites, "Suite names or 'all'")->required();
  verify->add_option("--seed", cfg.seed, "Seed for randomized suites");
  common(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  std::ostringstream buffer;
  int code = kOk;
  try {
    if (diagram->parsed()) code = detail::cmd_diagram(cfg, buffer);
    if (fulton->parsed()) code = detail::cmd_fulton(cfg, buffer);
    if (uni->parsed()) code = detail::cmd_union(cfg, buffer);
    if (groebner->parsed()) code = detail::cmd_groebner(cfg, buffer);
    if (verify->parsed()) code = detail::cmd_verify(cfg, buffer);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  if (cfg.out_path.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(cfg.out_path);
    if (!file) {
      err << "error: cannot write '" << cfg.out_path << "'\n";
      return kUsage;
    }
    file << buffer.str();
  }
  return code;
}

}  // namespace nwunion::cli
