#include "gds/analysis.hpp"

#include <algorithm>

#include "gds/character_table.hpp"
#include "gds/errors.hpp"
#include "gds/verifier.hpp"

namespace gds
{

namespace
{

using json = nlohmann::ordered_json;

bool a5_times_abelian(PermutationGroup const &g, DerivedAndCenter const &dc)
{
  auto const &derived = dc.derived;
  if (derived.order() != 60 || derived.order() * dc.center.order() != g.order())
    return false;
  if (!intersection(g, derived, dc.center).is_trivial())
    return false;
  return commutator_subgroup(g, derived, derived).order() == derived.order();
}

template <class T>
T field(json const &j, char const *key)
{
  auto it = j.find(key);
  if (it == j.end())
    throw InputError(std::string("analysis record: missing field '") + key + "'");
  try {
    return it->template get<T>();
  } catch (json::exception const &) {
    throw InputError(std::string("analysis record: malformed field '") + key + "'");
  }
}

Rational rational_field(json const &j, char const *key)
{
  auto text = field<std::string>(j, key);
  try {
    return parse_fraction(text);
  } catch (std::invalid_argument const &) {
    throw InputError(std::string("analysis record: malformed rational in '") + key + "'");
  }
}

} // namespace

AnalysisRecord analyze_group(PermutationGroup const &g, AnalysisOptions const &options)
{
  AnalysisRecord r;
  r.name = g.name();
  r.degree = g.degree();

  auto chars = character_table_mod_p(g);
  r.degrees = chars.degrees;
  std::sort(r.degrees.begin(), r.degrees.end());
  r.modulus = chars.modulus;
  r.exponent = chars.exponent;

  std::uint64_t squares = 0;
  for (auto d : r.degrees)
    squares += d * d;
  if (squares != g.order() || r.degrees.size() != g.class_count())
    throw ConfigurationError("character degrees of " + g.name() + " fail the square-sum check");

  r.metrics = compute_metrics(g, r.degrees);
  r.profile = structural_predicates(g);
  r.rusin_case = rusin_case_classify(g.order() / r.profile.center_order, r.profile.derived_order).case_id;

  auto dc = derived_and_center(g);
  r.stem = dc.center.is_subset_of(dc.derived);
  r.a5_times_abelian = a5_times_abelian(g, dc);
  r.half_bound = half_bound_witness(g.order(), r.degrees, g.order() / dc.derived.order());

  if (g.order() <= options.bruteforce_cap)
    r.commuting_bruteforce = commuting_pairs_bruteforce(g, {options.bruteforce_cap});

  VerifyConfig config;
  config.max_prime = options.max_prime;
  for (auto id : all_claims()) {
    if (auto row = evaluate_record_claim(id, r, config))
      r.verdicts[to_string(id)] = to_string(row->verdict);
  }
  return r;
}

nlohmann::ordered_json to_json(AnalysisRecord const &r)
{
  json j;
  j["schema_version"] = r.schema_version;
  j["name"] = r.name;
  j["order"] = r.metrics.order;
  j["degree"] = r.degree;
  j["class_number"] = r.metrics.class_number;
  j["degree_sum"] = r.metrics.degree_sum;
  j["involution_count"] = r.metrics.involution_count;
  j["t"] = to_fraction_string(r.metrics.t);
  j["d"] = to_fraction_string(r.metrics.d);
  j["i"] = to_fraction_string(r.metrics.i);
  j["degrees"] = r.degrees;
  j["modulus"] = r.modulus;
  j["exponent"] = r.exponent;

  json profile;
  profile["abelian"] = r.profile.abelian;
  profile["nilpotent"] = r.profile.nilpotent;
  profile["supersolvable"] = r.profile.supersolvable;
  profile["solvable"] = r.profile.solvable;
  json ps = json::object();
  for (auto [p, v] : r.profile.p_solvable)
    ps[std::to_string(p)] = v;
  profile["p_solvable"] = ps;
  profile["fitting_height"] = r.profile.fitting_height ? json(*r.profile.fitting_height) : json(nullptr);
  profile["center_order"] = r.profile.center_order;
  profile["derived_order"] = r.profile.derived_order;
  profile["derived_length"] = r.profile.derived_length;
  profile["fitting_order"] = r.profile.fitting_order;
  profile["chief_factors"] = r.profile.chief_factors;
  j["profile"] = profile;

  j["rusin_case"] = to_string(r.rusin_case);
  j["stem"] = r.stem;
  j["a5_times_abelian"] = r.a5_times_abelian;

  json hb;
  hb["lhs"] = r.half_bound.lhs;
  hb["rhs"] = r.half_bound.rhs;
  hb["verdict"] = r.half_bound.verdict;
  hb["direct"] = r.half_bound.direct;
  hb["linear_characters"] = r.half_bound.linear_characters;
  j["half_bound"] = hb;

  j["commuting_probability_bruteforce"] =
    r.commuting_bruteforce ? json(to_fraction_string(*r.commuting_bruteforce)) : json(nullptr);
  json verdicts = json::object();
  for (auto const &[k, v] : r.verdicts)
    verdicts[k] = v;
  j["verdicts"] = verdicts;
  return j;
}

AnalysisRecord record_from_json(nlohmann::ordered_json const &j)
{
  if (!j.is_object())
    throw InputError("analysis record: expected a JSON object");
  AnalysisRecord r;
  r.schema_version = field<int>(j, "schema_version");
  if (r.schema_version != analysis_schema_version)
    throw InputError("analysis record: unsupported schema_version " + std::to_string(r.schema_version));
  r.name = field<std::string>(j, "name");
  r.metrics.order = field<std::uint64_t>(j, "order");
  r.degree = field<std::uint64_t>(j, "degree");
  r.metrics.class_number = field<std::uint64_t>(j, "class_number");
  r.metrics.degree_sum = field<std::uint64_t>(j, "degree_sum");
  r.metrics.involution_count = field<std::uint64_t>(j, "involution_count");
  r.metrics.t = rational_field(j, "t");
  r.metrics.d = rational_field(j, "d");
  r.metrics.i = rational_field(j, "i");
  r.degrees = field<std::vector<std::uint64_t>>(j, "degrees");
  r.modulus = field<std::uint64_t>(j, "modulus");
  r.exponent = field<std::uint64_t>(j, "exponent");

  auto profile = field<json>(j, "profile");
  r.profile.abelian = field<bool>(profile, "abelian");
  r.profile.nilpotent = field<bool>(profile, "nilpotent");
  r.profile.supersolvable = field<bool>(profile, "supersolvable");
  r.profile.solvable = field<bool>(profile, "solvable");
  auto p_solvable = field<json>(profile, "p_solvable");
  for (auto const &[p, v] : p_solvable.items()) {
    try {
      r.profile.p_solvable[std::stoull(p)] = v.get<bool>();
    } catch (std::exception const &) {
      throw InputError("analysis record: malformed field 'p_solvable'");
    }
  }
  auto fh = field<json>(profile, "fitting_height");
  if (!fh.is_null())
    r.profile.fitting_height = field<unsigned>(profile, "fitting_height");
  r.profile.center_order = field<std::uint64_t>(profile, "center_order");
  r.profile.derived_order = field<std::uint64_t>(profile, "derived_order");
  r.profile.derived_length = field<unsigned>(profile, "derived_length");
  r.profile.fitting_order = field<std::uint64_t>(profile, "fitting_order");
  r.profile.chief_factors = field<std::vector<std::uint64_t>>(profile, "chief_factors");

  try {
    r.rusin_case = rusin_case_from_string(field<std::string>(j, "rusin_case"));
  } catch (std::exception const &) {
    throw InputError("analysis record: malformed field 'rusin_case'");
  }
  r.stem = field<bool>(j, "stem");
  r.a5_times_abelian = field<bool>(j, "a5_times_abelian");

  auto hb = field<json>(j, "half_bound");
  r.half_bound.lhs = field<std::uint64_t>(hb, "lhs");
  r.half_bound.rhs = field<std::uint64_t>(hb, "rhs");
  r.half_bound.verdict = field<bool>(hb, "verdict");
  r.half_bound.direct = field<bool>(hb, "direct");
  r.half_bound.linear_characters = field<std::uint64_t>(hb, "linear_characters");

  if (!field<json>(j, "commuting_probability_bruteforce").is_null())
    r.commuting_bruteforce = rational_field(j, "commuting_probability_bruteforce");
  r.verdicts = field<std::map<std::string, std::string>>(j, "verdicts");
  return r;
}

} // namespace gds
