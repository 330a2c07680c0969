#include "gds/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "gds/builtins.hpp"
#include "gds/errors.hpp"

namespace gds
{

namespace
{

using json = nlohmann::ordered_json;

std::string read_all(std::filesystem::path const &path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw InputError("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

[[noreturn]] void bad_field(std::string const &source, std::string const &field, std::string const &what)
{
  throw InputError(source + ": field '" + field + "': " + what);
}

} // namespace

GroupFile group_file_from_json(json const &j, std::string const &source)
{
  if (!j.is_object())
    throw InputError(source + ": expected a JSON object");
  GroupFile f;

  auto name = j.find("name");
  if (name == j.end() || !name->is_string() || name->get<std::string>().empty())
    bad_field(source, "name", "expected a non-empty string");
  f.name = name->get<std::string>();

  auto degree = j.find("degree");
  if (degree == j.end() || !degree->is_number_integer() || degree->get<long long>() < 1 ||
      degree->get<long long>() > 65535)
    bad_field(source, "degree", "expected an integer in 1..65535");
  f.degree = degree->get<std::size_t>();

  auto gens = j.find("generators");
  if (gens == j.end() || !gens->is_array())
    bad_field(source, "generators", "expected an array of image arrays");
  for (std::size_t i = 0; i < gens->size(); ++i) {
    auto const &g = (*gens)[i];
    auto field = "generators[" + std::to_string(i) + "]";
    if (!g.is_array())
      bad_field(source, field, "expected an array of integers");
    std::vector<long long> images;
    for (auto const &v : g) {
      if (!v.is_number_integer())
        bad_field(source, field, "expected an array of integers");
      images.push_back(v.get<long long>());
    }
    f.generators.push_back(std::move(images));
  }

  if (auto tags = j.find("tags"); tags != j.end()) {
    if (!tags->is_array())
      bad_field(source, "tags", "expected an array of strings");
    for (auto const &t : *tags) {
      if (!t.is_string())
        bad_field(source, "tags", "expected an array of strings");
      f.tags.push_back(t.get<std::string>());
    }
  }
  return f;
}

json to_json(GroupFile const &f)
{
  json j;
  j["name"] = f.name;
  j["degree"] = f.degree;
  j["generators"] = f.generators;
  j["tags"] = f.tags;
  return j;
}

GroupFile read_group_file(std::filesystem::path const &path)
{
  auto text = read_all(path);
  json j;
  try {
    j = json::parse(text);
  } catch (json::parse_error const &e) {
    throw InputError(path.string() + ": invalid JSON: " + e.what());
  }
  return group_file_from_json(j, path.string());
}

void write_group_file(std::filesystem::path const &path, GroupFile const &file)
{
  std::ofstream out(path);
  if (!out)
    throw InputError("cannot write " + path.string());
  out << to_json(file).dump() << '\n';
}

GroupFile group_file_of(PermutationGroup const &g, std::vector<std::string> tags)
{
  GroupFile f;
  f.name = g.name();
  f.degree = g.degree();
  for (auto const &p : g.generators()) {
    auto images = p.one_based();
    f.generators.emplace_back(images.begin(), images.end());
  }
  f.tags = std::move(tags);
  return f;
}

PermutationGroup build_group(GroupFile const &file, std::string const &source, GroupOptions const &options)
{
  std::vector<Permutation> gens;
  for (std::size_t i = 0; i < file.generators.size(); ++i) {
    auto const &images = file.generators[i];
    if (images.size() != file.degree)
      bad_field(source, "generators[" + std::to_string(i) + "]",
                "has " + std::to_string(images.size()) + " entries, degree is " + std::to_string(file.degree));
    try {
      gens.push_back(Permutation::from_one_based(images));
    } catch (InputError const &e) {
      bad_field(source, "generators[" + std::to_string(i) + "]", e.what());
    }
  }
  return PermutationGroup(file.name, file.degree, gens, options);
}

std::string content_hash(std::string_view bytes)
{
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  static char const digits[] = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i, h >>= 4)
    out[i] = digits[h & 15];
  return out;
}

std::vector<CorpusEntry> load_corpus(std::filesystem::path const &dir, CorpusOptions const &options)
{
  if (!std::filesystem::is_directory(dir))
    throw InputError("corpus directory not found: " + dir.string());

  std::vector<std::filesystem::path> paths;
  for (auto const &e : std::filesystem::directory_iterator(dir))
    if (e.is_regular_file() && e.path().extension() == ".json")
      paths.push_back(e.path());
  std::sort(paths.begin(), paths.end());

  std::vector<CorpusEntry> entries;
  std::set<std::string> names;
  for (auto const &path : paths) {
    auto text = read_all(path);
    json j;
    try {
      j = json::parse(text);
    } catch (json::parse_error const &e) {
      throw InputError(path.string() + ": invalid JSON: " + e.what());
    }
    auto file = group_file_from_json(j, path.string());
    if (!names.insert(file.name).second)
      throw InputError(path.string() + ": duplicate group name \"" + file.name + "\"");
    auto group = std::make_shared<PermutationGroup const>(build_group(file, path.string(), options.group_options));
    if (options.max_order && group->order() > *options.max_order)
      continue;
    CorpusEntry entry{std::move(file), path, {}};
    entry.group = {entry.file.name, content_hash(text), std::move(group)};
    entries.push_back(std::move(entry));
  }
  std::sort(entries.begin(), entries.end(), [](auto const &a, auto const &b) { return a.file.name < b.file.name; });
  return entries;
}

std::vector<CorpusGroup> corpus_groups(std::vector<CorpusEntry> const &entries)
{
  std::vector<CorpusGroup> groups;
  for (auto const &e : entries)
    groups.push_back(e.group);
  return groups;
}

PermutationGroup resolve_group_ref(std::string const &ref, GroupOptions const &options)
{
  constexpr std::string_view prefix = "builtin:";
  if (ref.starts_with(prefix))
    return builtin_group(ref.substr(prefix.size()), options);
  auto file = read_group_file(ref);
  return build_group(file, ref, options);
}

} // namespace gds
