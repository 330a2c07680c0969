#ifndef GDS_CORPUS_HPP
#define GDS_CORPUS_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "gds/group.hpp"
#include "gds/verifier.hpp"

namespace gds
{

/// On-disk group description: 1-based image arrays.
struct GroupFile
{
  std::string name;
  std::size_t degree = 0;
  std::vector<std::vector<long long>> generators;
  std::vector<std::string> tags;
};

/// Throws InputError naming `source` and the offending field.
GroupFile group_file_from_json(nlohmann::ordered_json const &j, std::string const &source);
nlohmann::ordered_json to_json(GroupFile const &file);

GroupFile read_group_file(std::filesystem::path const &path);
void write_group_file(std::filesystem::path const &path, GroupFile const &file);

GroupFile group_file_of(PermutationGroup const &g, std::vector<std::string> tags = {});

/// Throws InputError naming `source` and the generator index on a bad permutation.
PermutationGroup build_group(GroupFile const &file, std::string const &source, GroupOptions const &options = {});

/// 64-bit FNV-1a, lowercase hex.
std::string content_hash(std::string_view bytes);

struct CorpusOptions
{
  std::optional<std::uint64_t> max_order;
  GroupOptions group_options;
};

struct CorpusEntry
{
  GroupFile file;
  std::filesystem::path path;
  CorpusGroup group;
};

/// Every *.json file in `dir`, sorted by group name. Duplicate names are rejected.
/// Groups above `max_order` are dropped after construction.
std::vector<CorpusEntry> load_corpus(std::filesystem::path const &dir, CorpusOptions const &options = {});

std::vector<CorpusGroup> corpus_groups(std::vector<CorpusEntry> const &entries);

/// "builtin:<spec>" or a path to a group file.
PermutationGroup resolve_group_ref(std::string const &ref, GroupOptions const &options = {});

} // namespace gds

#endif // GDS_CORPUS_HPP
