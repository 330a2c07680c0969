#include "gds/verifier.hpp"

#include <algorithm>
#include <exception>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <omp.h>

#include "gds/builtins.hpp"
#include "gds/character_table.hpp"
#include "gds/errors.hpp"

namespace gds
{

namespace
{

using json = nlohmann::ordered_json;

struct ClaimName
{
  ClaimId id;
  char const *name;
};

constexpr ClaimName claim_names[] = {
  {ClaimId::THM_1_1, "THM_1_1"},       {ClaimId::THM_1_2, "THM_1_2"},
  {ClaimId::THM_1_3, "THM_1_3"},       {ClaimId::THM_1_4, "THM_1_4"},
  {ClaimId::LEM_2_1, "LEM_2_1"},       {ClaimId::LEM_2_2, "LEM_2_2"},
  {ClaimId::LEM_2_3, "LEM_2_3"},       {ClaimId::LEM_2_4, "LEM_2_4"},
  {ClaimId::LEM_2_5, "LEM_2_5"},       {ClaimId::CITED_4_15, "CITED_4_15"},
  {ClaimId::CITED_2_3, "CITED_2_3"},   {ClaimId::HALF_EQUIV, "HALF_EQUIV"},
  {ClaimId::ISO_INVARIANCE, "ISO_INVARIANCE"}, {ClaimId::ORACLE_D, "ORACLE_D"},
};

ClaimRow row_for(AnalysisRecord const &r, bool triggered, bool conclusion, std::string detail)
{
  Verdict v = !triggered ? Verdict::NotTriggered : conclusion ? Verdict::Holds : Verdict::Violated;
  return {r.name, v, std::move(detail)};
}

std::string t_detail(AnalysisRecord const &r)
{
  return "T=" + std::to_string(r.metrics.degree_sum) + " |G|=" + std::to_string(r.metrics.order);
}

ClaimRow check_thm_1_1(AnalysisRecord const &r, VerifyConfig const &config)
{
  BigInt order = big(r.metrics.order);
  BigInt k = big(r.metrics.class_number);
  BigInt t = big(r.metrics.degree_sum);
  bool triggered = false;
  bool ok = true;
  std::string primes;
  // Only primes dividing |G| can fail; for the others p-solvability is automatic.
  for (auto p : prime_divisors(r.metrics.order)) {
    if (p > config.max_prime)
      continue;
    BigInt p2 = big(p * p);
    bool by_classes = k * p2 >= 3 * order;
    bool by_degrees = t * t * p2 >= 3 * order * order;
    if (!by_classes && !by_degrees)
      continue;
    triggered = true;
    bool solvable = r.profile.is_p_solvable(p);
    ok = ok && solvable;
    primes += (primes.empty() ? "" : ",") + std::to_string(p) + (solvable ? "" : "(not p-solvable)");
  }
  return row_for(r, triggered, ok, triggered ? "primes " + primes : "no prime p <= " + std::to_string(config.max_prime) + " meets either bound");
}

} // namespace

std::vector<ClaimId> all_claims()
{
  std::vector<ClaimId> ids;
  for (auto const &c : claim_names)
    ids.push_back(c.id);
  return ids;
}

std::string to_string(ClaimId id)
{
  for (auto const &c : claim_names)
    if (c.id == id)
      return c.name;
  return "UNKNOWN";
}

ClaimId claim_from_string(std::string const &name)
{
  std::string upper = name;
  std::transform(upper.begin(), upper.end(), upper.begin(), [](unsigned char c) { return std::toupper(c); });
  if (upper == "GALLAGHER")
    return ClaimId::LEM_2_5;
  for (auto const &c : claim_names)
    if (upper == c.name)
      return c.id;
  throw InputError("unknown claim id \"" + name + "\"");
}

std::vector<ClaimId> parse_claim_list(std::string const &list)
{
  if (list == "all")
    return all_claims();
  std::vector<ClaimId> ids;
  std::stringstream in(list);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty())
      continue;
    auto id = claim_from_string(item);
    if (std::find(ids.begin(), ids.end(), id) == ids.end())
      ids.push_back(id);
  }
  if (ids.empty())
    throw InputError("empty claim list");
  std::sort(ids.begin(), ids.end());
  return ids;
}

std::string to_string(Verdict v)
{
  switch (v) {
  case Verdict::Holds: return "holds";
  case Verdict::NotTriggered: return "not-triggered";
  case Verdict::Violated: return "violated";
  case Verdict::Skipped: return "skipped";
  }
  return "unknown";
}

std::optional<ClaimRow> evaluate_record_claim(ClaimId id, AnalysisRecord const &r, VerifyConfig const &config)
{
  auto const &m = r.metrics;
  BigInt order = big(m.order);
  BigInt t = big(m.degree_sum);
  BigInt k = big(m.class_number);

  switch (id) {
  case ClaimId::THM_1_1:
    return check_thm_1_1(r, config);

  case ClaimId::THM_1_2: {
    bool triggered = 4 * t > order;
    bool solvable_branch = r.profile.solvable && r.profile.fitting_height && *r.profile.fitting_height <= 4;
    std::string detail = t_detail(r);
    if (triggered)
      detail += solvable_branch ? " solvable, Fitting height " + std::to_string(*r.profile.fitting_height)
                : r.a5_times_abelian ? " A5 x abelian" : " neither conclusion";
    return row_for(r, triggered, solvable_branch || r.a5_times_abelian, detail);
  }

  case ClaimId::THM_1_3: {
    bool triggered = 8 * t * t > 3 * order * order;
    bool ok = r.profile.abelian || r.rusin_case != RusinCase::None;
    std::string detail = t_detail(r);
    if (triggered)
      detail += r.profile.abelian ? " abelian" : " case " + to_string(r.rusin_case);
    return row_for(r, triggered, ok, detail);
  }

  case ClaimId::THM_1_4: {
    bool triggered = 2 * t > order;
    return row_for(r, triggered, r.profile.supersolvable,
                   t_detail(r) + (r.profile.supersolvable ? " supersolvable" : " not supersolvable"));
  }

  case ClaimId::LEM_2_1:
    return row_for(r, true, sandwich_holds(m),
                   "i=" + to_fraction_string(m.i) + " t=" + to_fraction_string(m.t) + " d=" + to_fraction_string(m.d));

  case ClaimId::LEM_2_2:
    return row_for(r, !r.profile.abelian, m.d <= Rational(5, 8), "d=" + to_fraction_string(m.d));

  case ClaimId::LEM_2_4: {
    auto index = m.order / r.profile.fitting_order;
    Rational bound(1, big(index));
    bound.canonicalize();
    return row_for(r, true, m.d * m.d <= bound,
                   "d=" + to_fraction_string(m.d) + " |G:F|=" + std::to_string(index));
  }

  case ClaimId::CITED_4_15:
    return row_for(r, 15 * t > 4 * order, r.profile.solvable,
                   t_detail(r) + (r.profile.solvable ? " solvable" : " not solvable"));

  case ClaimId::CITED_2_3:
    return row_for(r, 3 * t > 2 * order, r.profile.nilpotent,
                   t_detail(r) + (r.profile.nilpotent ? " nilpotent" : " not nilpotent"));

  case ClaimId::HALF_EQUIV: {
    auto const &h = r.half_bound;
    return row_for(r, true, h.consistent(),
                   "lhs=" + std::to_string(h.lhs) + " rhs=" + std::to_string(h.rhs) +
                     " 2T>|G|=" + (h.direct ? "true" : "false"));
  }

  case ClaimId::ORACLE_D: {
    std::uint64_t squares = 0;
    for (auto d : r.degrees)
      squares += d * d;
    bool ok = squares == m.order && r.degrees.size() == m.class_number;
    std::string detail = "sum of squared degrees " + std::to_string(squares);
    if (r.commuting_bruteforce) {
      ok = ok && *r.commuting_bruteforce == m.d;
      detail += ", brute-force d=" + to_fraction_string(*r.commuting_bruteforce);
    } else {
      detail += ", brute force above cap";
    }
    return row_for(r, true, ok, detail);
  }

  case ClaimId::LEM_2_3:
  case ClaimId::LEM_2_5:
  case ClaimId::ISO_INVARIANCE:
    return std::nullopt;
  }
  return std::nullopt;
}

NagaoResult nagao_check(PermutationGroup const &g)
{
  NagaoResult result;
  auto normals = normal_subgroups(g);
  result.normal_subgroups = normals.size();
  for (auto const &n : normals) {
    auto kn = subgroup_as_group(g, n).class_count();
    auto kq = quotient_group(g, n).group.class_count();
    if (g.class_count() > kn * kq) {
      result.failure = "|N|=" + std::to_string(n.order()) + ": k(G)=" + std::to_string(g.class_count()) +
                       " > k(N)k(G/N)=" + std::to_string(kn) + "*" + std::to_string(kq);
      return result;
    }
  }
  return result;
}

bool GallagherResult::holds() const
{
  return std::all_of(orbits.begin(), orbits.end(), [](auto const &o) { return o.holds(); });
}

GallagherResult gallagher_check(PermutationGroup const &g, Subgroup const &n, GallagherOptions const &options)
{
  if (g.order() > options.order_cap)
    throw CapacityError("orbit bound check capped at |G| <= " + std::to_string(options.order_cap));
  if (!is_normal(g, n))
    throw DomainError("orbit bound check needs a normal subgroup");

  auto chars_g = character_table_mod_p(g);
  auto n_group = subgroup_as_group(g, n);
  auto chars_n = character_table_mod_p(n_group, {chars_g.modulus});
  auto mult = restriction_multiplicities(g, n, n_group, chars_g, chars_n);

  // Each x in G permutes the classes of N by conjugation; theta^x(c) = theta(x c x^-1).
  auto const kn = chars_n.class_count();
  auto row_image = [&](ElementId x, std::size_t row) {
    std::vector<std::uint64_t> values(kn);
    for (std::size_t c = 0; c < kn; ++c) {
      auto rep = g.index_of(n_group.element(n_group.classes()[c].representative));
      auto moved = g.conjugate(rep, g.inverse(x));
      auto cls = n_group.class_of(n_group.index_of(g.element(moved)));
      values[c] = chars_n.table[row][cls];
    }
    auto it = std::find(chars_n.table.begin(), chars_n.table.end(), values);
    if (it == chars_n.table.end())
      throw ConfigurationError("conjugate of an irreducible character is not in the table");
    return static_cast<std::size_t>(it - chars_n.table.begin());
  };

  GallagherResult result;
  std::vector<bool> seen(kn, false);
  for (std::size_t theta = 0; theta < kn; ++theta) {
    if (seen[theta])
      continue;
    GallagherOrbit orbit;
    std::vector<ElementId> inertia;
    for (ElementId x = 0; x < g.order(); ++x) {
      auto image = row_image(x, theta);
      if (image == theta)
        inertia.push_back(x);
      if (!seen[image]) {
        seen[image] = true;
        orbit.characters.push_back(image);
      }
    }
    std::sort(orbit.characters.begin(), orbit.characters.end());

    for (std::size_t chi = 0; chi < mult.size(); ++chi)
      if (mult[chi][theta] != 0)
        ++orbit.characters_over;

    // k(I/N) = #{(a, b) in I x I : [a, b] in N} / (|N| |I|).
    std::vector<bool> in_n(g.order(), false);
    for (auto y : n.elements)
      in_n[y] = true;
    std::uint64_t pairs = 0;
    for (auto a : inertia)
      for (auto b : inertia)
        pairs += in_n[g.commutator(a, b)];
    orbit.inertia_order = inertia.size();
    orbit.inertia_quotient_classes = pairs / (n.order() * inertia.size());
    result.orbits.push_back(std::move(orbit));
  }
  return result;
}

ClaimRow evaluate_group_claim(ClaimId id, PermutationGroup const &g, AnalysisRecord const &record,
                              VerifyConfig const &config)
{
  ClaimRow row{record.name, Verdict::Skipped, {}};
  switch (id) {
  case ClaimId::LEM_2_3: {
    if (g.order() > config.normal_subgroup_order_cap) {
      row.detail = "above the normal-subgroup cap " + std::to_string(config.normal_subgroup_order_cap);
      return row;
    }
    auto r = nagao_check(g);
    row.verdict = r.failure ? Verdict::Violated : Verdict::Holds;
    row.detail = r.failure ? *r.failure : std::to_string(r.normal_subgroups) + " normal subgroups";
    return row;
  }

  case ClaimId::LEM_2_5: {
    if (g.order() > config.gallagher_order_cap) {
      row.detail = "above the orbit-bound cap " + std::to_string(config.gallagher_order_cap);
      return row;
    }
    std::size_t orbits = 0;
    row.verdict = Verdict::Holds;
    for (auto const &n : normal_subgroups(g)) {
      auto r = gallagher_check(g, n, {config.gallagher_order_cap});
      orbits += r.orbits.size();
      for (auto const &o : r.orbits) {
        if (!o.holds() && row.verdict == Verdict::Holds) {
          row.verdict = Verdict::Violated;
          row.detail = "|N|=" + std::to_string(n.order()) + ": " + std::to_string(o.characters_over) +
                       " characters over an orbit > k(I/N)=" + std::to_string(o.inertia_quotient_classes);
        }
      }
    }
    if (row.verdict == Verdict::Holds)
      row.detail = std::to_string(orbits) + " orbits";
    return row;
  }

  case ClaimId::ISO_INVARIANCE: {
    if (g.order() > config.iso_order_cap) {
      row.detail = "above the isoclinism cap " + std::to_string(config.iso_order_cap);
      return row;
    }
    row.verdict = Verdict::Holds;
    std::vector<std::string> checked;
    auto fail = [&](std::string why) {
      if (row.verdict == Verdict::Holds) {
        row.verdict = Verdict::Violated;
        row.detail = std::move(why);
      }
    };
    auto const &m = record.metrics;
    for (auto const *spec : {"cyclic:2", "cyclic:3", "dihedral:2"}) {
      auto a = builtin_group(spec);
      auto h = direct_product(g, a);
      auto degrees = character_degrees(h);
      auto mh = compute_metrics(h, degrees);
      if (mh.t != m.t)
        fail("t differs for " + h.name());
      if (mh.d != m.d)
        fail("d differs for " + h.name());
      if (!multiplicity_proportion_check(m.order, mh.order, record.degrees, degrees).holds)
        fail("degree multiplicities not proportional for " + h.name());
      if (record.central_quotient_order() <= config.isoclinism_quotient_cap) {
        if (!are_isoclinic(g, h, {config.isoclinism_quotient_cap}))
          fail("no isoclinism found with " + h.name());
        checked.push_back(h.name() + "(isoclinic)");
      } else {
        checked.push_back(h.name());
      }
    }
    if (row.verdict == Verdict::Holds) {
      for (auto const &c : checked)
        row.detail += (row.detail.empty() ? "" : " ") + c;
    }
    return row;
  }

  default:
    if (auto r = evaluate_record_claim(id, record, config))
      return *r;
    return row;
  }
}

bool VerificationResult::passed() const
{
  return std::all_of(reports.begin(), reports.end(), [](auto const &r) { return r.passed(); });
}

namespace
{

std::string cache_key(CorpusGroup const &cg, VerifyConfig const &config)
{
  return cg.content_hash + "-v" + std::to_string(analysis_schema_version) + "-b" +
         std::to_string(config.bruteforce_cap) + "-p" + std::to_string(config.max_prime);
}

std::optional<AnalysisRecord> load_cached(std::filesystem::path const &file)
{
  std::ifstream in(file);
  if (!in)
    return std::nullopt;
  try {
    return record_from_json(json::parse(in));
  } catch (std::exception const &) {
    return std::nullopt; // stale or truncated entries are recomputed
  }
}

void store_cached(std::filesystem::path const &file, AnalysisRecord const &record)
{
  std::error_code ec;
  std::filesystem::create_directories(file.parent_path(), ec);
  auto tmp = file;
  tmp += ".tmp" + std::to_string(omp_get_thread_num());
  {
    std::ofstream out(tmp);
    if (!out)
      return;
    out << to_json(record).dump() << '\n';
  }
  std::filesystem::rename(tmp, file, ec);
}

AnalysisRecord analyze_cached(CorpusGroup const &cg, VerifyConfig const &config)
{
  std::optional<std::filesystem::path> file;
  if (config.cache_dir && !cg.content_hash.empty()) {
    file = std::filesystem::path(*config.cache_dir) / (cache_key(cg, config) + ".json");
    if (auto cached = load_cached(*file); cached && cached->name == cg.name)
      return *cached;
  }
  auto record = analyze_group(*cg.group, {config.bruteforce_cap, config.max_prime});
  record.name = cg.name;
  if (file)
    store_cached(*file, record);
  return record;
}

} // namespace

VerificationResult verify(std::vector<CorpusGroup> const &corpus, std::vector<ClaimId> const &claims,
                          VerifyConfig const &config)
{
  std::vector<std::size_t> order(corpus.size());
  for (std::size_t i = 0; i < order.size(); ++i)
    order[i] = i;
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return corpus[a].name < corpus[b].name; });

  std::vector<AnalysisRecord> records(corpus.size());
  std::vector<std::vector<ClaimRow>> rows(corpus.size());
  std::vector<std::exception_ptr> errors(corpus.size());

  int jobs = std::max(1, config.jobs);
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
  for (std::size_t slot = 0; slot < order.size(); ++slot) {
    auto const &cg = corpus[order[slot]];
    try {
      records[slot] = analyze_cached(cg, config);
      for (auto id : claims)
        rows[slot].push_back(evaluate_group_claim(id, *cg.group, records[slot], config));
    } catch (...) {
      errors[slot] = std::current_exception();
    }
  }
  for (auto const &e : errors)
    if (e)
      std::rethrow_exception(e);

  VerificationResult result;
  for (std::size_t c = 0; c < claims.size(); ++c) {
    ClaimReport report;
    report.claim_id = claims[c];
    auto it = config.min_triggers.find(claims[c]);
    report.min_triggers = config.enforce_vacuity_guards && it != config.min_triggers.end() ? it->second : 0;
    for (std::size_t slot = 0; slot < order.size(); ++slot) {
      auto const &row = rows[slot][c];
      if (row.verdict != Verdict::Skipped)
        ++report.groups_checked;
      if (row.verdict == Verdict::Holds || row.verdict == Verdict::Violated)
        ++report.hypotheses_triggered;
      if (row.verdict == Verdict::Violated)
        report.counterexamples.push_back({row.group, row.detail, to_json(records[slot])});
      report.rows.push_back(row);
    }
    result.reports.push_back(std::move(report));
  }
  result.records = std::move(records);
  return result;
}

void write_report_jsonl(std::ostream &out, VerificationResult const &result)
{
  for (auto const &report : result.reports) {
    auto claim = to_string(report.claim_id);
    for (auto const &row : report.rows) {
      json j;
      j["kind"] = "row";
      j["claim"] = claim;
      j["group"] = row.group;
      j["verdict"] = to_string(row.verdict);
      j["detail"] = row.detail;
      out << j.dump() << '\n';
    }
    json s;
    s["kind"] = "summary";
    s["claim"] = claim;
    s["groups_checked"] = report.groups_checked;
    s["hypotheses_triggered"] = report.hypotheses_triggered;
    s["min_triggers"] = report.min_triggers;
    s["vacuous"] = report.vacuous();
    json cex = json::array();
    for (auto const &c : report.counterexamples) {
      json e;
      e["group"] = c.group;
      e["detail"] = c.detail;
      e["metrics"] = c.metrics;
      cex.push_back(e);
    }
    s["counterexamples"] = cex;
    s["passed"] = report.passed();
    out << s.dump() << '\n';
  }
}

} // namespace gds
