#include "gds/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "gds/analysis.hpp"
#include "gds/character_table.hpp"
#include "gds/corpus.hpp"
#include "gds/errors.hpp"
#include "gds/families.hpp"
#include "gds/isoclinism.hpp"
#include "gds/verifier.hpp"

namespace gds
{

namespace
{

using json = nlohmann::ordered_json;

struct AnalyzeArgs
{
  std::string ref;
  bool pretty = false;
};

struct VerifyArgs
{
  std::string claims = "all";
  std::string corpus;
  std::optional<std::uint64_t> max_order;
  int jobs = 1;
  std::string out;
  std::string cache_dir;
  std::uint64_t max_prime = 31;
  bool allow_vacuous = false;
};

struct FamilyArgs
{
  std::string name;
  std::uint64_t q = 0;
  std::uint64_t q_max = 1024;
  std::string out;
};

struct IsoclinicArgs
{
  std::string first;
  std::string second;
  std::size_t cap = 24;
};

struct ExportArgs
{
  std::string ref;
  std::string out;
  std::string name;
  std::vector<std::string> tags;
};

json family_json(FamilySpec const &spec, FamilyInvariants const &inv)
{
  json j;
  j["family"] = to_string(spec.family());
  j["q"] = spec.q();
  j["order"] = inv.order.get_str();
  j["class_number"] = inv.class_number.get_str();
  j["class_number_is_bound"] = inv.class_number_is_bound;
  j["d"] = to_fraction_string(inv.d_value);
  j["d_is_bound"] = inv.d_is_bound;
  if (inv.largest_prime) {
    j["largest_prime"] = inv.largest_prime->get_str();
    Rational threshold(3, *inv.largest_prime * *inv.largest_prime);
    threshold.canonicalize();
    j["d_below_threshold"] = inv.d_value < threshold;
  } else {
    j["largest_prime"] = nullptr;
    j["d_below_threshold"] = nullptr;
  }
  return j;
}

json sweep_json(SweepRow const &row)
{
  json j;
  j["family"] = to_string(row.family);
  j["q"] = row.q;
  j["order"] = row.order.get_str();
  j["p"] = row.p ? json(row.p->get_str()) : json(nullptr);
  j["d_num"] = row.d.get_num().get_str();
  j["d_den"] = row.d.get_den().get_str();
  j["bound_flag"] = row.bound_flag;
  j["d_below_threshold"] = row.d_below_threshold;
  j["lemma31_holds"] = row.lemma31_holds;
  if (!row.notice.empty())
    j["notice"] = row.notice;
  return j;
}

int run_analyze(AnalyzeArgs const &a, std::ostream &out)
{
  auto g = resolve_group_ref(a.ref);
  auto record = analyze_group(g);
  out << to_json(record).dump(a.pretty ? 2 : -1) << '\n';
  for (auto const &[claim, verdict] : record.verdicts)
    if (verdict == to_string(Verdict::Violated))
      return exit_code::counterexample;
  return exit_code::ok;
}

int run_verify(VerifyArgs const &a, std::ostream &out, std::ostream &err)
{
  VerifyConfig config;
  config.jobs = a.jobs;
  config.max_prime = a.max_prime;
  config.enforce_vacuity_guards = !a.allow_vacuous;
  if (!a.cache_dir.empty())
    config.cache_dir = a.cache_dir;
  else if (char const *env = std::getenv("GDS_CACHE_DIR"); env && *env)
    config.cache_dir = env;

  auto claims = parse_claim_list(a.claims);
  CorpusOptions options;
  options.max_order = a.max_order;
  auto entries = load_corpus(a.corpus, options);
  auto result = verify(corpus_groups(entries), claims, config);

  if (a.out.empty()) {
    write_report_jsonl(out, result);
  } else {
    std::ofstream file(a.out);
    if (!file)
      throw InputError("cannot write " + a.out);
    write_report_jsonl(file, result);
  }

  std::ostream &summary = a.out.empty() ? err : out;
  summary << "groups: " << entries.size() << '\n';
  for (auto const &r : result.reports) {
    summary << to_string(r.claim_id) << ": checked " << r.groups_checked << ", triggered "
            << r.hypotheses_triggered;
    if (r.min_triggers > 0)
      summary << " (min " << r.min_triggers << ")";
    summary << ", counterexamples " << r.counterexamples.size();
    if (r.vacuous())
      summary << ", VACUOUS";
    summary << '\n';
    for (auto const &c : r.counterexamples)
      summary << "  counterexample " << c.group << ": " << c.detail << '\n';
  }
  summary << (result.passed() ? "PASS" : "FAIL") << '\n';
  return result.passed() ? exit_code::ok : exit_code::counterexample;
}

int run_family(FamilyArgs const &a, std::ostream &out)
{
  FamilySpec spec(family_from_string(a.name), a.q);
  out << family_json(spec, family_invariants(spec)).dump() << '\n';
  return exit_code::ok;
}

int run_sweep(FamilyArgs const &a, std::ostream &out, std::ostream &err)
{
  std::vector<Family> families;
  if (a.name.empty() || a.name == "all")
    families = {Family::PSL2, Family::PSL3, Family::PSU3, Family::Suzuki, Family::Ree, Family::TrialityD4};
  else
    families = {family_from_string(a.name)};

  std::ofstream file;
  if (!a.out.empty()) {
    file.open(a.out);
    if (!file)
      throw InputError("cannot write " + a.out);
  }
  std::ostream &sink = a.out.empty() ? out : file;

  std::size_t rows = 0, violations = 0, skipped = 0, lemma31_exceptions = 0;
  for (auto f : families) {
    for (auto const &row : bound_sweep(f, a.q_max)) {
      sink << sweep_json(row).dump() << '\n';
      ++rows;
      if (!row.notice.empty()) {
        ++skipped;
        err << "notice: " << to_string(row.family) << " q=" << row.q << ": " << row.notice << '\n';
        continue;
      }
      violations += !row.d_below_threshold;
      lemma31_exceptions += !row.lemma31_holds;
    }
  }
  err << "rows " << rows << ", violations " << violations << ", skipped " << skipped
      << ", p^2/3 >= sqrt|G| at " << lemma31_exceptions << '\n';
  return violations == 0 ? exit_code::ok : exit_code::counterexample;
}

int run_isoclinic(IsoclinicArgs const &a, std::ostream &out)
{
  auto g = resolve_group_ref(a.first);
  auto h = resolve_group_ref(a.second);
  json j;
  j["g"] = g.name();
  j["h"] = h.name();
  try {
    j["isoclinic"] = are_isoclinic(g, h, {a.cap});
  } catch (CapacityError const &e) {
    j["isoclinic"] = nullptr;
    j["reason"] = e.what();
  }
  auto dg = character_degrees(g);
  auto dh = character_degrees(h);
  auto check = multiplicity_proportion_check(g.order(), h.order(), dg, dh);
  json prop;
  prop["holds"] = check.holds;
  prop["degree_sums_proportional"] = check.degree_sums_proportional;
  json mult = json::array();
  for (auto const &[degree, counts] : check.multiplicities)
    mult.push_back({{"degree", degree}, {"g", counts.first}, {"h", counts.second}});
  prop["multiplicities"] = mult;
  j["proportion"] = prop;
  out << j.dump() << '\n';
  return exit_code::ok;
}

int run_export(ExportArgs const &a, std::ostream &out)
{
  auto g = resolve_group_ref(a.ref);
  if (!a.name.empty())
    g.rename(a.name);
  auto file = group_file_of(g, a.tags);
  if (a.out.empty())
    out << to_json(file).dump() << '\n';
  else
    write_group_file(a.out, file);
  return exit_code::ok;
}

} // namespace

int run_cli(int argc, char const *const *argv, std::ostream &out, std::ostream &err)
{
  CLI::App app{"Character degree sums and commuting probabilities of finite groups"};
  app.require_subcommand(1);

  AnalyzeArgs analyze_args;
  auto *analyze = app.add_subcommand("analyze", "Print the analysis record of one group");
  analyze->add_option("group", analyze_args.ref, "builtin:<spec> or a group file")->required();
  analyze->add_flag("--pretty", analyze_args.pretty, "Indent the JSON output");

  VerifyArgs verify_args;
  auto *verify_cmd = app.add_subcommand("verify", "Check every claim over a group corpus");
  verify_cmd->add_option("--claims", verify_args.claims, "Comma-separated claim ids or 'all'");
  verify_cmd->add_option("--corpus", verify_args.corpus, "Directory of group files")->required();
  verify_cmd->add_option("--max-order", verify_args.max_order, "Skip groups above this order");
  verify_cmd->add_option("--jobs", verify_args.jobs, "Groups analyzed in parallel")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--out", verify_args.out, "Report file (JSONL); stdout if omitted");
  verify_cmd->add_option("--cache-dir", verify_args.cache_dir, "Analysis cache (default: $GDS_CACHE_DIR)");
  verify_cmd->add_option("--max-prime", verify_args.max_prime, "Largest prime tested for p-solvability");
  verify_cmd->add_flag("--allow-vacuous", verify_args.allow_vacuous, "Do not enforce minimum trigger counts");

  FamilyArgs family_args;
  auto *family = app.add_subcommand("family", "Closed-form invariants of a simple group family");
  family->add_option("--name", family_args.name, "psl2, psl3, psu3, suzuki, ree or triality");
  family->add_option("--q", family_args.q, "Field size");
  auto *sweep = family->add_subcommand("sweep", "Check d < 3/p^2 for every valid q up to a bound");
  sweep->add_option("--name", family_args.name, "One family, or 'all' (default)");
  sweep->add_option("--q-max", family_args.q_max, "Largest q (default 1024)");
  sweep->add_option("--out", family_args.out, "Report file (JSONL); stdout if omitted");

  IsoclinicArgs iso_args;
  auto *iso = app.add_subcommand("isoclinic", "Decide isoclinism of two small groups");
  iso->add_option("first", iso_args.first, "builtin:<spec> or a group file")->required();
  iso->add_option("second", iso_args.second, "builtin:<spec> or a group file")->required();
  iso->add_option("--cap", iso_args.cap, "Largest central quotient searched");

  ExportArgs export_args;
  auto *exp = app.add_subcommand("export", "Write a group as a group file");
  exp->add_option("group", export_args.ref, "builtin:<spec> or a group file")->required();
  exp->add_option("--out", export_args.out, "Output path; stdout if omitted");
  exp->add_option("--name", export_args.name, "Override the group name");
  exp->add_option("--tag", export_args.tags, "Tag to record (repeatable)");

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const &e) {
    out << app.help();
    return exit_code::ok;
  } catch (CLI::ParseError const &e) {
    err << "error: " << e.what() << '\n';
    err << "run with --help for usage\n";
    return exit_code::failure;
  }

  try {
    if (*analyze)
      return run_analyze(analyze_args, out);
    if (*verify_cmd)
      return run_verify(verify_args, out, err);
    if (*family) {
      if (*sweep)
        return run_sweep(family_args, out, err);
      if (family_args.name.empty() || family_args.q == 0) {
        err << "error: family needs --name and --q (or the sweep subcommand)\n";
        return exit_code::failure;
      }
      return run_family(family_args, out);
    }
    if (*iso)
      return run_isoclinic(iso_args, out);
    if (*exp)
      return run_export(export_args, out);
  } catch (std::exception const &e) {
    err << "error: " << e.what() << '\n';
    return exit_code::failure;
  }
  return exit_code::failure;
}

} // namespace gds
