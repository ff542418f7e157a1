#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "relcomm/group.hpp"
#include "relcomm/group_spec.hpp"

namespace relcomm {

// Number of groups of order 1..32, up to isomorphism.
inline constexpr std::array<std::size_t, 32> kGroupCounts{
    1, 1, 1, 2, 1, 2, 1, 5, 2, 2, 1, 5, 1, 2, 1, 14,
    1, 5, 1, 5, 2, 2, 1, 15, 2, 2, 5, 4, 1, 4, 1, 51};

struct CatalogEntry {
  std::string name;
  std::size_t order = 0;
  GroupSpec spec;
};

// $RELCOMM_DATA_DIR if set, else the directory configured at build time.
std::filesystem::path data_dir();

struct StoredTable {
  std::size_t order = 0;
  std::size_t index = 0;  // 1-based within its order
  std::string name;       // "SG(order,index)"
  std::filesystem::path path;
};

// Reads small/MANIFEST under the data directory, verifies every file's
// checksum and the number of tables per order. Throws Error on any
// discrepancy. Sorted by (order, index).
std::vector<StoredTable> stored_tables();
std::vector<StoredTable> stored_tables(std::filesystem::path const& dir);
FiniteGroup load_stored_table(StoredTable const& t);

// 64-bit FNV-1a over the bytes.
std::uint64_t fnv1a64(std::string const& bytes);

// All built-in groups of order <= max_order, sorted by (order, name).
std::vector<CatalogEntry> builtin_catalog(std::size_t max_order);

// Catalog names of the coprime pairs used by the product audits.
std::vector<std::pair<std::string, std::string>> coprime_pairs();

// Resolves a catalog name ("F20", "SG(8,3)", ...). Throws InputError for
// unknown names.
FiniteGroup named_group(std::string const& id, std::size_t cap = kDefaultOrderCap);

// A JSON array of {"name": ..., "spec": ...}.
std::vector<CatalogEntry> load_catalog_file(std::filesystem::path const& path);

}  // namespace relcomm
