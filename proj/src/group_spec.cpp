#include "relcomm/group_spec.hpp"

#include <limits>
#include <set>

#include "relcomm/catalog.hpp"
#include "relcomm/errors.hpp"
#include "relcomm/families.hpp"
#include "relcomm/number_theory.hpp"

namespace relcomm {

using nlohmann::json;

namespace {

using Kind = GroupSpec::Kind;

struct KindName {
  Kind kind;
  char const* key;
};

constexpr KindName kKinds[] = {
    {Kind::Cyclic, "cyclic"},       {Kind::Dihedral, "dihedral"},
    {Kind::Dicyclic, "dicyclic"},   {Kind::Symmetric, "symmetric"},
    {Kind::Alternating, "alternating"}, {Kind::ElementaryAbelian, "elementary_abelian"},
    {Kind::Heisenberg, "heisenberg"}, {Kind::SL23, "sl23"},
    {Kind::Perm, "perm"},           {Kind::Table, "table"},
    {Kind::Product, "product"},     {Kind::Semidirect, "semidirect"},
    {Kind::Named, "named"},
};

char const* key_of(Kind k) {
  for (auto const& kn : kKinds)
    if (kn.kind == k) return kn.key;
  return "?";
}

constexpr std::uint64_t kMaxParam = 1u << 20;

[[noreturn]] void schema(std::string const& field, std::string const& what) {
  throw SchemaError(field + ": " + what, field);
}

std::uint64_t uint_of(json const& j, std::string const& field, std::uint64_t lo = 0,
                      std::uint64_t hi = kMaxParam) {
  if (!j.is_number_integer()) schema(field, "expected a non-negative integer");
  if (j.is_number_integer() && !j.is_number_unsigned() && j.get<std::int64_t>() < 0)
    schema(field, "expected a non-negative integer");
  auto v = j.get<std::uint64_t>();
  if (v < lo || v > hi)
    schema(field, "value " + std::to_string(v) + " outside " + std::to_string(lo) + ".." +
                      std::to_string(hi));
  return v;
}

json const& member(json const& obj, char const* key, std::string const& field) {
  auto it = obj.find(key);
  if (it == obj.end()) schema(field + "." + key, "missing");
  return *it;
}

void only_keys(json const& obj, std::set<std::string> const& allowed, std::string const& field) {
  for (auto const& [k, v] : obj.items())
    if (!allowed.count(k)) schema(field + "." + k, "unknown field");
}

Permutation perm_of(json const& j, std::string const& field) {
  if (!j.is_array()) schema(field, "expected an array of point images");
  Permutation out;
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(static_cast<std::uint32_t>(
        uint_of(j[i], field + "[" + std::to_string(i) + "]", 0, kMaxParam)));
  return out;
}

GroupSpec parse_node(json const& j, std::string const& path);

GroupSpec parse_body(Kind kind, json const& v, std::string const& field) {
  GroupSpec s;
  s.kind = kind;
  switch (kind) {
    case Kind::Cyclic:
    case Kind::Dihedral:
    case Kind::Dicyclic:
      s.n = uint_of(v, field, 1);
      break;
    case Kind::Symmetric:
    case Kind::Alternating:
      s.n = uint_of(v, field, 1, 6);
      break;
    case Kind::Heisenberg:
      s.n = uint_of(v, field, 2);
      if (!is_prime(s.n)) schema(field, std::to_string(s.n) + " is not prime");
      break;
    case Kind::ElementaryAbelian: {
      if (!v.is_object()) schema(field, "expected {\"p\", \"rank\"}");
      only_keys(v, {"p", "rank"}, field);
      s.n = uint_of(member(v, "p", field), field + ".p", 2);
      if (!is_prime(s.n)) schema(field + ".p", std::to_string(s.n) + " is not prime");
      s.rank = static_cast<unsigned>(uint_of(member(v, "rank", field), field + ".rank", 1, 20));
      break;
    }
    case Kind::SL23:
      if (v != json(true)) schema(field, "expected true");
      break;
    case Kind::Perm: {
      if (!v.is_object()) schema(field, "expected {\"degree\", \"generators\"}");
      only_keys(v, {"degree", "generators"}, field);
      s.n = uint_of(member(v, "degree", field), field + ".degree", 1, 4096);
      auto const& gens = member(v, "generators", field);
      if (!gens.is_array()) schema(field + ".generators", "expected an array");
      for (std::size_t g = 0; g < gens.size(); ++g) {
        auto gf = field + ".generators[" + std::to_string(g) + "]";
        if (!gens[g].is_array()) schema(gf, "expected an array of cycles");
        std::vector<std::vector<std::uint32_t>> cycles;
        std::set<std::uint64_t> seen;
        for (std::size_t c = 0; c < gens[g].size(); ++c) {
          auto cf = gf + "[" + std::to_string(c) + "]";
          if (!gens[g][c].is_array()) schema(cf, "expected a cycle");
          std::vector<std::uint32_t> cyc;
          for (std::size_t k = 0; k < gens[g][c].size(); ++k) {
            auto pt = uint_of(gens[g][c][k], cf + "[" + std::to_string(k) + "]", 0, s.n - 1);
            if (!seen.insert(pt).second) schema(cf, "point " + std::to_string(pt) + " repeated");
            cyc.push_back(static_cast<std::uint32_t>(pt));
          }
          cycles.push_back(std::move(cyc));
        }
        s.generators.push_back(std::move(cycles));
      }
      break;
    }
    case Kind::Table: {
      if (!v.is_array() || v.empty()) schema(field, "expected a non-empty square matrix");
      std::size_t const n = v.size();
      if (n > 4096) schema(field, "table too large");
      for (std::size_t r = 0; r < n; ++r) {
        auto rf = field + "[" + std::to_string(r) + "]";
        if (!v[r].is_array() || v[r].size() != n) schema(rf, "expected a row of length " + std::to_string(n));
        std::vector<std::size_t> row;
        for (std::size_t c = 0; c < n; ++c)
          row.push_back(uint_of(v[r][c], rf + "[" + std::to_string(c) + "]", 0, n - 1));
        s.table.push_back(std::move(row));
      }
      break;
    }
    case Kind::Product:
      if (!v.is_array() || v.size() != 2) schema(field, "expected an array of two specs");
      s.children.push_back(parse_node(v[0], field + "[0]"));
      s.children.push_back(parse_node(v[1], field + "[1]"));
      break;
    case Kind::Semidirect: {
      if (!v.is_object()) schema(field, "expected {\"n\", \"h\", \"action\"}");
      only_keys(v, {"n", "h", "action"}, field);
      s.children.push_back(parse_node(member(v, "n", field), field + ".n"));
      s.children.push_back(parse_node(member(v, "h", field), field + ".h"));
      auto const& act = member(v, "action", field);
      auto af = field + ".action";
      if (!act.is_object()) schema(af, "expected an object");
      if (act.contains("h_gen")) {
        only_keys(act, {"h_gen"}, af);
        s.action_h_gen = true;
        s.action_images.push_back(perm_of(act["h_gen"], af + ".h_gen"));
      } else {
        only_keys(act, {"gens", "images"}, af);
        auto const& gens = member(act, "gens", af);
        auto const& imgs = member(act, "images", af);
        if (!gens.is_array()) schema(af + ".gens", "expected an array");
        if (!imgs.is_array() || imgs.size() != gens.size())
          schema(af + ".images", "expected one image per generator");
        for (std::size_t i = 0; i < gens.size(); ++i) {
          s.action_gens.push_back(static_cast<Element>(uint_of(gens[i], af + ".gens[" + std::to_string(i) + "]")));
          s.action_images.push_back(perm_of(imgs[i], af + ".images[" + std::to_string(i) + "]"));
        }
      }
      break;
    }
    case Kind::Named:
      if (!v.is_string()) schema(field, "expected a catalog id string");
      s.id = v.get<std::string>();
      break;
  }
  return s;
}

GroupSpec parse_node(json const& j, std::string const& path) {
  std::string const where = path.empty() ? "spec" : path;
  if (!j.is_object()) schema(where, "expected an object with one constructor key");
  std::string name;
  std::optional<Kind> kind;
  json const* body = nullptr;
  for (auto const& [k, v] : j.items()) {
    if (k == "name") {
      if (!v.is_string()) schema(path.empty() ? "name" : path + ".name", "expected a string");
      name = v.get<std::string>();
      continue;
    }
    std::optional<Kind> found;
    for (auto const& kn : kKinds)
      if (k == kn.key) found = kn.kind;
    if (!found) schema(path.empty() ? k : path + "." + k, "unknown constructor");
    if (kind) schema(where, "more than one constructor key");
    kind = found;
    body = &v;
  }
  if (!kind) schema(where, "no constructor key");
  auto s = parse_body(*kind, *body, path.empty() ? key_of(*kind) : path + "." + key_of(*kind));
  s.name = std::move(name);
  return s;
}

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  if (a > std::numeric_limits<std::uint64_t>::max() / b) return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

}  // namespace

GroupSpec group_spec_from_json(json const& j) { return parse_node(j, ""); }

GroupSpec parse_group_spec(std::string const& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (json::parse_error const& e) {
    throw ParseError(e.what(), e.byte);
  }
  return group_spec_from_json(j);
}

json to_json(GroupSpec const& s) {
  json body;
  switch (s.kind) {
    case Kind::Cyclic:
    case Kind::Dihedral:
    case Kind::Dicyclic:
    case Kind::Symmetric:
    case Kind::Alternating:
    case Kind::Heisenberg:
      body = s.n;
      break;
    case Kind::ElementaryAbelian:
      body = {{"p", s.n}, {"rank", s.rank}};
      break;
    case Kind::SL23:
      body = true;
      break;
    case Kind::Perm:
      body = {{"degree", s.n}, {"generators", s.generators}};
      break;
    case Kind::Table:
      body = s.table;
      break;
    case Kind::Product:
      body = json::array({to_json(s.children.at(0)), to_json(s.children.at(1))});
      break;
    case Kind::Semidirect: {
      json action;
      if (s.action_h_gen)
        action = {{"h_gen", s.action_images.at(0)}};
      else
        action = {{"gens", s.action_gens}, {"images", s.action_images}};
      body = {{"n", to_json(s.children.at(0))}, {"h", to_json(s.children.at(1))}, {"action", action}};
      break;
    }
    case Kind::Named:
      body = s.id;
      break;
  }
  json out = {{key_of(s.kind), body}};
  if (!s.name.empty()) out["name"] = s.name;
  return out;
}

std::string serialize(GroupSpec const& spec) { return to_json(spec).dump(); }

std::uint64_t expected_order(GroupSpec const& s) {
  switch (s.kind) {
    case Kind::Cyclic: return s.n;
    case Kind::Dihedral: return sat_mul(2, s.n);
    case Kind::Dicyclic: return sat_mul(4, s.n);
    case Kind::Symmetric:
    case Kind::Alternating: {
      std::uint64_t f = 1;
      for (std::uint64_t k = 2; k <= s.n; ++k) f *= k;
      return s.kind == Kind::Alternating && s.n >= 2 ? f / 2 : f;
    }
    case Kind::ElementaryAbelian: {
      std::uint64_t r = 1;
      for (unsigned k = 0; k < s.rank; ++k) r = sat_mul(r, s.n);
      return r;
    }
    case Kind::Heisenberg: return sat_mul(sat_mul(s.n, s.n), s.n);
    case Kind::SL23: return 24;
    case Kind::Perm: return 0;
    case Kind::Table: return s.table.size();
    case Kind::Product:
    case Kind::Semidirect:
      return sat_mul(expected_order(s.children.at(0)), expected_order(s.children.at(1)));
    case Kind::Named: return 0;
  }
  return 0;
}

FiniteGroup build_group(GroupSpec const& s, std::size_t cap) {
  if (auto o = expected_order(s); o > cap)
    throw OrderCapExceeded(std::string(key_of(s.kind)) + " group of order " + std::to_string(o) +
                           " exceeds the order cap " + std::to_string(cap));
  FiniteGroup g;
  switch (s.kind) {
    case Kind::Cyclic: g = cyclic(s.n); break;
    case Kind::Dihedral: g = dihedral(s.n); break;
    case Kind::Dicyclic: g = dicyclic(s.n); break;
    case Kind::Symmetric: g = symmetric(s.n); break;
    case Kind::Alternating: g = alternating(s.n); break;
    case Kind::ElementaryAbelian: g = elementary_abelian(s.n, s.rank); break;
    case Kind::Heisenberg: g = heisenberg(s.n); break;
    case Kind::SL23: g = sl23(); break;
    case Kind::Perm: {
      std::vector<Permutation> gens;
      for (auto const& cycles : s.generators) gens.push_back(perm_from_cycles(s.n, cycles));
      g = build_perm_group(s.n, gens, cap);
      break;
    }
    case Kind::Table: g = build_from_table(s.table); break;
    case Kind::Product:
      g = direct_product(build_group(s.children.at(0), cap), build_group(s.children.at(1), cap), cap);
      break;
    case Kind::Semidirect: {
      auto n = build_group(s.children.at(0), cap);
      auto h = build_group(s.children.at(1), cap);
      std::vector<Element> gens = s.action_gens;
      std::vector<Permutation> images = s.action_images;
      if (s.action_h_gen) {
        gens = {1};
        if (h.order() == 1) {
          gens.clear();
          images.clear();
        }
      }
      g = semidirect_product(n, h, extend_action(n, h, gens, images), cap);
      break;
    }
    case Kind::Named: g = named_group(s.id, cap); break;
  }
  return s.name.empty() ? g : g.renamed(s.name);
}

}  // namespace relcomm
