#include "relcomm/catalog.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>

#include "relcomm/errors.hpp"

#ifndef RELCOMM_DEFAULT_DATA_DIR
#define RELCOMM_DEFAULT_DATA_DIR "data"
#endif

namespace relcomm {

namespace fs = std::filesystem;
using Kind = GroupSpec::Kind;

namespace {

GroupSpec leaf(Kind k, std::uint64_t n = 1) {
  GroupSpec s;
  s.kind = k;
  s.n = n;
  return s;
}

GroupSpec elementary(std::uint64_t p, unsigned rank) {
  auto s = leaf(Kind::ElementaryAbelian, p);
  s.rank = rank;
  return s;
}

GroupSpec named(std::string id) {
  GroupSpec s;
  s.kind = Kind::Named;
  s.id = std::move(id);
  return s;
}

GroupSpec with_name(GroupSpec s, std::string name) {
  s.name = std::move(name);
  return s;
}

GroupSpec product(GroupSpec a, GroupSpec b) {
  GroupSpec s;
  s.kind = Kind::Product;
  s.children = {std::move(a), std::move(b)};
  return s;
}

// h is cyclic; image is the permutation of n's elements induced by its
// generator (element 1).
GroupSpec semidirect(GroupSpec n, GroupSpec h, Permutation image) {
  GroupSpec s;
  s.kind = Kind::Semidirect;
  s.children = {std::move(n), std::move(h)};
  s.action_h_gen = true;
  s.action_images = {std::move(image)};
  return s;
}

Permutation power_map(std::uint32_t n, std::uint32_t k) {
  Permutation out(n);
  for (std::uint32_t x = 0; x < n; ++x) out[x] = static_cast<std::uint32_t>((std::uint64_t{x} * k) % n);
  return out;
}

// (a, b) -> M (a, b) on (C_p)^2 with index a + p b.
Permutation linear2(std::uint32_t p, int m00, int m01, int m10, int m11) {
  auto mod = [p](int v) { return static_cast<std::uint32_t>(((v % static_cast<int>(p)) + static_cast<int>(p)) % static_cast<int>(p)); };
  Permutation out(p * p);
  for (std::uint32_t b = 0; b < p; ++b)
    for (std::uint32_t a = 0; a < p; ++a) {
      int ia = static_cast<int>(a), ib = static_cast<int>(b);
      out[a + p * b] = mod(m00 * ia + m01 * ib) + p * mod(m10 * ia + m11 * ib);
    }
  return out;
}

// Multiplication by x in F_8 = F_2[x]/(x^3 + x + 1) on (C_2)^3, index
// a0 + 2 a1 + 4 a2.
Permutation f8_times_x() {
  Permutation out(8);
  for (std::uint32_t v = 0; v < 8; ++v) {
    std::uint32_t a0 = v & 1, a1 = (v >> 1) & 1, a2 = (v >> 2) & 1;
    out[v] = a2 | ((a0 ^ a2) << 1) | (a1 << 2);
  }
  return out;
}

// The order-3 symplectic map (a, b) -> (-b, a - b) lifted to Heis(p),
// p odd. Unitriangular (a, b, c) has index a + p b + p^2 c; in symplectic
// coordinates z = c - ab/2 the map fixes z.
Permutation heisenberg_order3(std::uint32_t p) {
  std::uint32_t const half = (p + 1) / 2;
  auto md = [p](std::int64_t v) { return static_cast<std::uint32_t>(((v % p) + p) % p); };
  Permutation out(p * p * p);
  for (std::uint32_t c = 0; c < p; ++c)
    for (std::uint32_t b = 0; b < p; ++b)
      for (std::uint32_t a = 0; a < p; ++a) {
        std::int64_t z = md(static_cast<std::int64_t>(c) - std::int64_t{a} * b * half);
        std::uint32_t a2 = md(-static_cast<std::int64_t>(b)), b2 = md(std::int64_t{a} - b);
        std::uint32_t c2 = md(z + std::int64_t{a2} * b2 * half);
        out[a + p * b + p * p * c] = a2 + p * b2 + p * p * c2;
      }
  return out;
}

std::vector<CatalogEntry> special_entries() {
  std::vector<std::pair<std::string, GroupSpec>> list;
  auto add = [&](std::string name, GroupSpec s) { list.emplace_back(std::move(name), std::move(s)); };
  auto C = [](std::uint64_t n) { return leaf(Kind::Cyclic, n); };

  add("S3", leaf(Kind::Symmetric, 3));
  add("S4", leaf(Kind::Symmetric, 4));
  add("S5", leaf(Kind::Symmetric, 5));
  add("A4", leaf(Kind::Alternating, 4));
  add("A5", leaf(Kind::Alternating, 5));
  add("Heis3", leaf(Kind::Heisenberg, 3));
  add("Heis5", leaf(Kind::Heisenberg, 5));
  add("SL(2,3)", leaf(Kind::SL23));
  add("ES32+", named("SG(32,49)"));
  add("ES32-", named("SG(32,50)"));
  add("F20", semidirect(C(5), C(4), power_map(5, 2)));
  add("F21", semidirect(C(7), C(3), power_map(7, 2)));
  add("F56", semidirect(elementary(2, 3), C(7), f8_times_x()));
  add("C13:C4", semidirect(C(13), C(4), power_map(13, 5)));
  add("C19:C9", semidirect(C(19), C(9), power_map(19, 4)));
  add("(C3xC3):C2", semidirect(elementary(3, 2), C(2), linear2(3, -1, 0, 0, -1)));
  add("(C5xC5):C3", semidirect(elementary(5, 2), C(3), linear2(5, 0, -1, 1, -1)));
  add("(C7xC7):C3", semidirect(elementary(7, 2), C(3), linear2(7, 2, 0, 0, 4)));
  add("Heis5:C3", semidirect(leaf(Kind::Heisenberg, 5), C(3), heisenberg_order3(5)));

  // Coprime direct products.
  std::map<std::string, GroupSpec> base;
  for (auto const& [n, s] : list) base[n] = s;
  base["D8"] = leaf(Kind::Dihedral, 4);
  base["D10"] = leaf(Kind::Dihedral, 5);
  base["D16"] = leaf(Kind::Dihedral, 8);
  base["Q8"] = leaf(Kind::Dicyclic, 2);
  for (std::uint64_t n : {2, 3, 5, 7}) base["C" + std::to_string(n)] = C(n);
  for (auto const& [a, b] : coprime_pairs()) add(a + "x" + b, product(base.at(a), base.at(b)));

  std::vector<CatalogEntry> out;
  for (auto& [n, s] : list) {
    auto o = expected_order(s);
    if (s.kind == Kind::Named) o = 32;
    out.push_back({n, static_cast<std::size_t>(o), with_name(std::move(s), n)});
  }
  return out;
}

struct StoredCache {
  std::mutex mu;
  std::map<fs::path, std::vector<StoredTable>> by_dir;
};

StoredCache& stored_cache() {
  static StoredCache c;
  return c;
}

std::string read_file(fs::path const& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw InputError("cannot read " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<StoredTable> read_manifest(fs::path const& dir) {
  auto small = dir / "small";
  std::istringstream manifest(read_file(small / "MANIFEST"));
  std::vector<StoredTable> out;
  std::string file, sum;
  while (manifest >> file >> sum) {
    StoredTable t;
    if (std::sscanf(file.c_str(), "order%zu_%zu.tbl", &t.order, &t.index) != 2)
      throw Error("bad manifest entry " + file);
    t.path = small / file;
    t.name = "SG(" + std::to_string(t.order) + "," + std::to_string(t.index) + ")";
    std::ostringstream hex;
    hex << std::hex;
    hex.width(16);
    hex.fill('0');
    hex << fnv1a64(read_file(t.path));
    if (hex.str() != sum) throw Error("checksum mismatch for " + t.path.string());
    out.push_back(std::move(t));
  }
  std::sort(out.begin(), out.end(), [](auto const& a, auto const& b) {
    return std::pair(a.order, a.index) < std::pair(b.order, b.index);
  });
  std::array<std::size_t, 32> counts{};
  for (auto const& t : out) {
    if (t.order < 1 || t.order > 32) throw Error("stored table of unexpected order " + t.name);
    ++counts[t.order - 1];
  }
  for (std::size_t n = 1; n <= 32; ++n)
    if (counts[n - 1] != kGroupCounts[n - 1])
      throw Error("expected " + std::to_string(kGroupCounts[n - 1]) + " stored groups of order " +
                  std::to_string(n) + ", found " + std::to_string(counts[n - 1]));
  return out;
}

}  // namespace

std::uint64_t fnv1a64(std::string const& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

fs::path data_dir() {
  if (char const* env = std::getenv("RELCOMM_DATA_DIR"); env && *env) return env;
  return RELCOMM_DEFAULT_DATA_DIR;
}

std::vector<StoredTable> stored_tables() { return stored_tables(data_dir()); }

std::vector<StoredTable> stored_tables(fs::path const& dir) {
  auto& cache = stored_cache();
  std::lock_guard lock(cache.mu);
  auto it = cache.by_dir.find(dir);
  if (it == cache.by_dir.end()) it = cache.by_dir.emplace(dir, read_manifest(dir)).first;
  return it->second;
}

FiniteGroup load_stored_table(StoredTable const& t) {
  std::istringstream in(read_file(t.path));
  std::size_t n = 0;
  if (!(in >> n) || n != t.order) throw Error(t.path.string() + ": bad header");
  std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
  for (auto& row : table)
    for (auto& x : row)
      if (!(in >> x)) throw Error(t.path.string() + ": truncated table");
  return build_from_table(table, t.name);
}

std::vector<std::pair<std::string, std::string>> coprime_pairs() {
  return {{"D8", "C3"},    {"D8", "C5"},     {"S3", "C5"},    {"S3", "C7"},   {"A4", "C5"},
          {"A4", "C7"},    {"D10", "C3"},    {"F21", "C2"},   {"F20", "C3"},  {"D8", "Heis3"},
          {"Q8", "Heis3"}, {"D8", "F21"},    {"Q8", "F21"},   {"D16", "F21"}, {"D10", "Heis3"},
          {"F20", "Heis3"}};
}

std::vector<CatalogEntry> builtin_catalog(std::size_t max_order) {
  std::vector<CatalogEntry> out;
  auto push = [&](std::string name, std::size_t order, GroupSpec spec) {
    if (order <= max_order) out.push_back({name, order, with_name(std::move(spec), name)});
  };
  for (std::size_t n = 1; n <= max_order; ++n) push("C" + std::to_string(n), n, leaf(Kind::Cyclic, n));
  for (std::size_t n = 2; 2 * n <= max_order; ++n)
    push("D" + std::to_string(2 * n), 2 * n, leaf(Kind::Dihedral, n));
  for (std::size_t n = 2; 4 * n <= max_order; ++n)
    push(n == 2 ? "Q8" : "Dic" + std::to_string(4 * n), 4 * n, leaf(Kind::Dicyclic, n));
  for (auto& e : special_entries())
    if (e.order <= max_order) out.push_back(std::move(e));
  if (max_order >= 2)
    for (auto const& t : stored_tables())
      if (t.order >= 2) push(t.name, t.order, named(t.name));

  std::sort(out.begin(), out.end(), [](auto const& a, auto const& b) {
    return std::pair(a.order, a.name) < std::pair(b.order, b.name);
  });
  return out;
}

FiniteGroup named_group(std::string const& id, std::size_t cap) {
  if (id.rfind("SG(", 0) == 0) {
    for (auto const& t : stored_tables())
      if (t.name == id) return load_stored_table(t);
    throw InputError("no stored table named " + id);
  }
  // Search past the cap so that a known name over it is a cap error.
  for (auto const& e : builtin_catalog(std::max<std::size_t>(cap, 1024)))
    if (e.name == id) return build_group(e.spec, cap);
  throw InputError("unknown catalog group " + id);
}

std::vector<CatalogEntry> load_catalog_file(fs::path const& path) {
  auto text = read_file(path);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (nlohmann::json::parse_error const& e) {
    throw ParseError(path.string() + ": " + e.what(), e.byte);
  }
  if (!j.is_array()) throw SchemaError("catalog file must be a JSON array", "catalog");
  std::vector<CatalogEntry> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    auto field = "catalog[" + std::to_string(i) + "]";
    auto const& e = j[i];
    if (!e.is_object() || !e.contains("name") || !e["name"].is_string() || !e.contains("spec"))
      throw SchemaError(field + ": expected {\"name\": string, \"spec\": spec}", field);
    auto name = e["name"].get<std::string>();
    auto spec = group_spec_from_json(e["spec"]);
    out.push_back({name, static_cast<std::size_t>(expected_order(spec)), with_name(std::move(spec), name)});
  }
  return out;
}

}  // namespace relcomm
