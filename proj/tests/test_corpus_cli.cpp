#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "gds/analysis.hpp"
#include "gds/builtins.hpp"
#include "gds/cli.hpp"
#include "gds/corpus.hpp"
#include "gds/errors.hpp"

using namespace gds;
namespace fs = std::filesystem;

namespace
{

struct TempDir
{
  fs::path path;
  explicit TempDir(std::string const &name) : path(fs::temp_directory_path() / name)
  {
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  void write(std::string const &file, std::string const &text) const { std::ofstream(path / file) << text; }
};

struct CliResult
{
  int code;
  std::string out;
  std::string err;
};

CliResult cli(std::vector<std::string> args)
{
  args.insert(args.begin(), "gds");
  std::vector<char const *> argv;
  for (auto const &a : args)
    argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

} // namespace

TEST(BuiltinGroup, Specs)
{
  auto p = builtin_group("psl2:7");
  EXPECT_EQ(p.order(), 168u);
  EXPECT_EQ(p.degree(), 8u);
  auto d = builtin_group("dihedral:5");
  EXPECT_EQ(d.name(), "D10");
  EXPECT_EQ(d.order(), 10u);
  auto a = builtin_group("product:alternating:5,cyclic:2");
  EXPECT_EQ(a.order(), 120u);
  EXPECT_EQ(a.name(), "A5xC2");
  EXPECT_EQ(builtin_group("psl3:3").order(), 5616u);
  EXPECT_EQ(builtin_group("psl3:3").degree(), 13u);
  EXPECT_EQ(builtin_group("quaternion:8").order(), 8u);
  EXPECT_EQ(builtin_group("extraspecial:27:9").exponent(), 9u);
  EXPECT_EQ(builtin_group("extraspecial:27:3").exponent(), 3u);
  for (unsigned q : {3u, 5u, 7u, 9u, 11u, 13u}) {
    EXPECT_EQ(sl2(q).order(), q * (q * q - 1)) << q;
    EXPECT_EQ(pgl2(q).order(), q * (q * q - 1)) << q;
  }
  EXPECT_THROW(builtin_group("symmetric:7"), InputError);
  EXPECT_THROW(builtin_group("nonsense:3"), InputError);
  EXPECT_THROW(builtin_group("psl2:6"), InputError);
}

TEST(GroupFileFormat, RoundTrip)
{
  auto g = builtin_group("metacyclic:7:3:2");
  auto file = group_file_of(g, {"frobenius"});
  auto back = group_file_from_json(to_json(file), "memory");
  EXPECT_EQ(back.name, file.name);
  EXPECT_EQ(back.generators, file.generators);
  EXPECT_EQ(back.tags, file.tags);
  EXPECT_EQ(build_group(back, "memory").order(), 21u);
}

TEST(GroupFileFormat, ErrorsNameFileAndField)
{
  auto expect_error = [](std::string const &text, std::string const &field) {
    try {
      group_file_from_json(nlohmann::ordered_json::parse(text), "bad.json");
      FAIL() << text;
    } catch (InputError const &e) {
      std::string what = e.what();
      EXPECT_NE(what.find("bad.json"), std::string::npos) << what;
      EXPECT_NE(what.find(field), std::string::npos) << what;
    }
  };
  expect_error(R"({"degree": 3, "generators": []})", "name");
  expect_error(R"({"name": "x", "degree": "3", "generators": []})", "degree");
  expect_error(R"({"name": "x", "degree": 3, "generators": [[1, 2, "3"]]})", "generators[0]");
  expect_error(R"({"name": "x", "degree": 3, "generators": [], "tags": [1]})", "tags");
}

TEST(GroupFileFormat, NonBijectionNamesTheArray)
{
  GroupFile f{"x", 3, {{2, 3, 1}, {1, 1, 2}}, {}};
  try {
    build_group(f, "x.json");
    FAIL();
  } catch (InputError const &e) {
    EXPECT_NE(std::string(e.what()).find("generators[1]"), std::string::npos);
  }
}

TEST(LoadCorpus, EmptyDirectory)
{
  TempDir dir("gds-empty-corpus");
  EXPECT_TRUE(load_corpus(dir.path).empty());
}

TEST(LoadCorpus, SortedDuplicatesAndFilter)
{
  TempDir dir("gds-small-corpus");
  dir.write("a.json", R"({"name": "Zeta", "degree": 3, "generators": [[2, 3, 1]]})");
  dir.write("b.json", R"({"name": "Alpha", "degree": 3, "generators": [[2, 3, 1], [2, 1, 3]]})");
  dir.write("notes.txt", "ignored");
  auto entries = load_corpus(dir.path);
  ASSERT_EQ(entries.size(), 2u);
  EXPECT_EQ(entries[0].file.name, "Alpha");
  EXPECT_EQ(entries[1].file.name, "Zeta");
  EXPECT_EQ(entries[0].group.content_hash.size(), 16u);
  EXPECT_EQ(load_corpus(dir.path, {3, {}}).size(), 1u);

  dir.write("c.json", R"({"name": "Zeta", "degree": 2, "generators": [[2, 1]]})");
  EXPECT_THROW(load_corpus(dir.path), InputError);
}

TEST(LoadCorpus, MalformedFile)
{
  TempDir dir("gds-bad-corpus");
  dir.write("broken.json", "{not json");
  try {
    load_corpus(dir.path);
    FAIL();
  } catch (InputError const &e) {
    EXPECT_NE(std::string(e.what()).find("broken.json"), std::string::npos);
  }
}

TEST(LoadCorpus, ShippedCorpus)
{
  auto entries = load_corpus(GDS_CORPUS_DIR);
  EXPECT_GE(entries.size(), 60u);
  std::set<std::string> names;
  for (auto const &e : entries) {
    EXPECT_LE(e.group.group->order(), 5616u) << e.file.name;
    names.insert(e.file.name);
  }
  for (auto const *required : {"S3", "A4", "A5", "S5", "SL(2,5)", "PSL(2,7)", "D10", "A5xC2", "Q8", "D8",
                               "ES27_exp3", "ES27_exp9"})
    EXPECT_TRUE(names.count(required)) << required;
}

TEST(ContentHash, KnownValues)
{
  EXPECT_EQ(content_hash(""), "cbf29ce484222325");
  EXPECT_EQ(content_hash("a"), "af63dc4c8601ec8c");
}

TEST(AnalysisRecordJson, RoundTripIsIdentity)
{
  for (auto const *spec : {"symmetric:3", "alternating:5", "quaternion", "product:alternating:5,cyclic:2", "cyclic:1"}) {
    auto record = analyze_group(builtin_group(spec));
    auto j = to_json(record);
    auto back = record_from_json(nlohmann::ordered_json::parse(j.dump()));
    EXPECT_EQ(to_json(back).dump(), j.dump()) << spec;
    EXPECT_EQ(back.metrics.t, record.metrics.t);
    EXPECT_EQ(back.profile.fitting_height, record.profile.fitting_height);
  }
}

TEST(AnalysisRecordJson, RejectsMissingFields)
{
  auto j = to_json(analyze_group(symmetric_group(3)));
  j.erase("t");
  EXPECT_THROW(record_from_json(j), InputError);
  j = to_json(analyze_group(symmetric_group(3)));
  j["d"] = "half";
  EXPECT_THROW(record_from_json(j), InputError);
}

TEST(Cli, AnalyzeSymmetricThree)
{
  auto r = cli({"analyze", "builtin:symmetric:3"});
  EXPECT_EQ(r.code, 0);
  auto j = nlohmann::ordered_json::parse(r.out);
  EXPECT_EQ(j["t"], "2/3");
  EXPECT_EQ(j["d"], "1/2");
  EXPECT_EQ(cli({"analyze", "builtin:symmetric:3"}).out, r.out);
}

TEST(Cli, AnalyzeGroupFile)
{
  TempDir dir("gds-cli-analyze");
  dir.write("q.json", to_json(group_file_of(builtin_group("quaternion"))).dump());
  auto r = cli({"analyze", (dir.path / "q.json").string()});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(nlohmann::ordered_json::parse(r.out)["d"], "5/8");
}

TEST(Cli, FamilySuzuki)
{
  auto r = cli({"family", "--name", "suzuki", "--q", "8"});
  EXPECT_EQ(r.code, 0);
  auto j = nlohmann::ordered_json::parse(r.out);
  EXPECT_EQ(j["order"], "29120");
  EXPECT_EQ(j["class_number"], "11");
  EXPECT_EQ(j["largest_prime"], "13");
}

TEST(Cli, FamilySweepRows)
{
  auto r = cli({"family", "sweep", "--name", "psl2", "--q-max", "16"});
  EXPECT_EQ(r.code, 0);
  std::istringstream lines(r.out);
  std::string line;
  std::size_t count = 0;
  while (std::getline(lines, line)) {
    auto j = nlohmann::ordered_json::parse(line);
    for (auto const *key : {"family", "q", "order", "p", "d_num", "d_den", "bound_flag", "lemma31_holds"})
      EXPECT_TRUE(j.contains(key)) << key;
    ++count;
  }
  EXPECT_EQ(count, 8u); // q = 4 5 7 8 9 11 13 16
}

TEST(Cli, Isoclinic)
{
  auto r = cli({"isoclinic", "builtin:dihedral:4", "builtin:quaternion"});
  EXPECT_EQ(r.code, 0);
  auto j = nlohmann::ordered_json::parse(r.out);
  EXPECT_EQ(j["isoclinic"], true);
  EXPECT_EQ(j["proportion"]["holds"], true);
  auto no = nlohmann::ordered_json::parse(cli({"isoclinic", "builtin:symmetric:3", "builtin:dihedral:5"}).out);
  EXPECT_EQ(no["isoclinic"], false);
}

TEST(Cli, VerifyAndExitCodes)
{
  TempDir dir("gds-cli-verify");
  for (auto const *spec : {"symmetric:3", "quaternion", "dihedral:4"}) {
    auto g = builtin_group(spec);
    write_group_file(dir.path / (g.name() + ".json"), group_file_of(g));
  }
  auto report = (dir.path / "report.jsonl").string();
  auto ok = cli({"verify", "--claims", "THM_1_3,THM_1_4", "--corpus", dir.path.string(), "--out", report,
                 "--allow-vacuous"});
  EXPECT_EQ(ok.code, 0) << ok.out << ok.err;
  std::ifstream in(report);
  std::string line;
  std::size_t rows = 0, summaries = 0;
  while (std::getline(in, line)) {
    auto j = nlohmann::ordered_json::parse(line);
    (j["kind"] == "summary" ? summaries : rows) += 1;
  }
  EXPECT_EQ(rows, 6u);
  EXPECT_EQ(summaries, 2u);

  // THM_1_3 needs five triggering groups; three are not enough.
  auto vacuous = cli({"verify", "--claims", "THM_1_3", "--corpus", dir.path.string(), "--out", report});
  EXPECT_EQ(vacuous.code, 2);

  EXPECT_EQ(cli({"verify", "--corpus", (dir.path / "missing").string()}).code, 1);
  EXPECT_EQ(cli({"verify", "--claims", "BOGUS", "--corpus", dir.path.string()}).code, 1);
  EXPECT_EQ(cli({"frobnicate"}).code, 1);
  EXPECT_EQ(cli({}).code, 1);
  EXPECT_EQ(cli({"family", "--name", "psl2", "--q", "6"}).code, 1);
}

TEST(Cli, ExportRoundTrip)
{
  TempDir dir("gds-cli-export");
  auto path = (dir.path / "g.json").string();
  EXPECT_EQ(cli({"export", "builtin:sl2:3", "--out", path, "--name", "Binary tetrahedral", "--tag", "x"}).code, 0);
  auto file = read_group_file(path);
  EXPECT_EQ(file.name, "Binary tetrahedral");
  EXPECT_EQ(file.tags, (std::vector<std::string>{"x"}));
  EXPECT_EQ(build_group(file, path).order(), 24u);
}

TEST(ShippedCorpus, HighCommutingProbabilityHasAStructureCase)
{
  auto result = verify(corpus_groups(load_corpus(GDS_CORPUS_DIR)), {ClaimId::LEM_2_1});
  std::size_t above = 0;
  for (auto const &r : result.records) {
    if (r.metrics.d <= Rational(3, 8))
      continue;
    ++above;
    EXPECT_TRUE(r.profile.abelian || r.rusin_case != RusinCase::None) << r.name;
  }
  EXPECT_GE(above, 5u);
}

TEST(ShippedCorpus, AnalysisIsByteStable)
{
  auto entries = load_corpus(GDS_CORPUS_DIR);
  for (auto const &e : entries) {
    if (e.group.group->order() > 200)
      continue;
    EXPECT_EQ(to_json(analyze_group(*e.group.group)).dump(), to_json(analyze_group(*e.group.group)).dump());
  }
}
