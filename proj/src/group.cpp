#include "relcomm/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

#include "relcomm/errors.hpp"
#include "relcomm/number_theory.hpp"

namespace relcomm {

namespace {

std::string triple_str(std::size_t a, std::size_t b, std::size_t c) {
  std::ostringstream os;
  os << "(" << a << ", " << b << ", " << c << ")";
  return os.str();
}

}  // namespace

FiniteGroup::FiniteGroup() : data_(std::make_shared<Data const>()), name_("1") {}

Element FiniteGroup::power(Element x, std::uint64_t k) const noexcept {
  k %= element_order(x);
  Element r = identity();
  while (k--) r = mul(r, x);
  return r;
}

FiniteGroup FiniteGroup::renamed(std::string name) const { return FiniteGroup(data_, std::move(name)); }

FiniteGroup FiniteGroup::unchecked(std::size_t n, std::vector<Element> table, std::string name) {
  auto d = std::make_shared<Data>();
  d->n = n;
  d->table = std::move(table);
  d->inverse.assign(n, 0);
  d->orders.assign(n, 1);
  for (std::size_t x = 0; x < n; ++x) {
    auto const* row = d->table.data() + x * n;
    for (std::size_t y = 0; y < n; ++y) {
      if (row[y] == 0) {
        d->inverse[x] = static_cast<Element>(y);
        break;
      }
    }
    std::uint32_t k = 1;
    Element p = static_cast<Element>(x);
    while (p != 0) {
      p = d->table[static_cast<std::size_t>(p) * n + x];
      ++k;
    }
    d->orders[x] = k;
  }
  return FiniteGroup(std::move(d), std::move(name));
}

FiniteGroup build_from_table(std::vector<std::vector<std::size_t>> const& t, std::string name,
                             TableOptions const& opts) {
  std::size_t const n = t.size();
  if (n == 0) throw NotAGroup("empty table");
  for (std::size_t a = 0; a < n; ++a) {
    if (t[a].size() != n) throw NotAGroup("row " + std::to_string(a) + " has wrong length");
    for (std::size_t b = 0; b < n; ++b)
      if (t[a][b] >= n)
        throw NotAGroup("entry out of range at " + triple_str(a, b, t[a][b]),
                        std::array<std::size_t, 3>{a, b, t[a][b]});
  }

  std::optional<std::size_t> e;
  for (std::size_t c = 0; c < n && !e; ++c) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) ok = t[c][x] == x && t[x][c] == x;
    if (ok) e = c;
  }
  if (!e) throw NotAGroup("no identity element");

  std::vector<std::size_t> seen(n);
  for (std::size_t a = 0; a < n; ++a) {
    std::fill(seen.begin(), seen.end(), n);
    for (std::size_t b = 0; b < n; ++b) {
      if (seen[t[a][b]] != n)
        throw NotAGroup("row " + std::to_string(a) + " is not a permutation",
                        std::array<std::size_t, 3>{a, seen[t[a][b]], b});
      seen[t[a][b]] = b;
    }
  }
  for (std::size_t b = 0; b < n; ++b) {
    std::fill(seen.begin(), seen.end(), n);
    for (std::size_t a = 0; a < n; ++a) {
      if (seen[t[a][b]] != n)
        throw NotAGroup("column " + std::to_string(b) + " is not a permutation",
                        std::array<std::size_t, 3>{b, seen[t[a][b]], a});
      seen[t[a][b]] = a;
    }
  }

  auto check = [&](std::size_t a, std::size_t b, std::size_t c) {
    if (t[t[a][b]][c] != t[a][t[b][c]])
      throw NotAGroup("associativity fails at " + triple_str(a, b, c),
                      std::array<std::size_t, 3>{a, b, c});
  };
  if (n <= opts.exhaustive_limit) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c) check(a, b, c);
  } else {
    std::mt19937_64 rng(opts.seed);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (std::size_t s = 0; s < opts.samples; ++s) {
      auto a = pick(rng), b = pick(rng), c = pick(rng);
      check(a, b, c);
    }
  }

  // Swap labels e and 0.
  auto relabel = [&](std::size_t x) -> std::size_t {
    if (x == *e) return 0;
    if (x == 0) return *e;
    return x;
  };
  std::vector<Element> flat(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      flat[relabel(a) * n + relabel(b)] = static_cast<Element>(relabel(t[a][b]));
  if (name.empty()) name = "Table(" + std::to_string(n) + ")";
  return FiniteGroup::unchecked(n, std::move(flat), std::move(name));
}

Permutation compose(Permutation const& x, Permutation const& y) {
  Permutation r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = y[x[i]];
  return r;
}

Permutation perm_from_cycles(std::size_t degree,
                             std::vector<std::vector<std::uint32_t>> const& cycles) {
  Permutation p(degree);
  std::iota(p.begin(), p.end(), 0u);
  std::vector<bool> used(degree, false);
  for (auto const& cyc : cycles) {
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      auto a = cyc[k];
      if (a >= degree) throw InputError("cycle point " + std::to_string(a) + " out of range");
      if (used[a]) throw InputError("point " + std::to_string(a) + " repeated in cycles");
      used[a] = true;
      p[a] = cyc[(k + 1) % cyc.size()];
    }
  }
  return p;
}

FiniteGroup build_perm_group(std::size_t degree, std::vector<Permutation> const& generators,
                             std::size_t cap, std::string name) {
  for (auto const& g : generators) {
    if (g.size() != degree) throw InputError("generator has wrong degree");
    std::vector<bool> hit(degree, false);
    for (auto v : g) {
      if (v >= degree || hit[v]) throw InputError("generator is not a bijection");
      hit[v] = true;
    }
  }
  Permutation id(degree);
  std::iota(id.begin(), id.end(), 0u);

  std::map<Permutation, Element> index{{id, 0}};
  std::vector<Permutation> elems{id};
  std::vector<Element> parent{0};
  std::vector<std::size_t> via{0};
  // right[k * gens + s] = index of elems[k] * gen[s]
  std::vector<Element> right;
  std::size_t const ng = generators.size();
  for (std::size_t k = 0; k < elems.size(); ++k) {
    for (std::size_t s = 0; s < ng; ++s) {
      auto next = compose(elems[k], generators[s]);
      auto [it, fresh] = index.emplace(next, static_cast<Element>(elems.size()));
      if (fresh) {
        if (elems.size() >= cap)
          throw OrderCapExceeded("permutation group order exceeds cap " + std::to_string(cap));
        elems.push_back(std::move(next));
        parent.push_back(static_cast<Element>(k));
        via.push_back(s);
      }
      right.push_back(it->second);
    }
  }

  std::size_t const n = elems.size();
  std::vector<Element> flat(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    flat[a * n] = static_cast<Element>(a);
    for (std::size_t b = 1; b < n; ++b) {
      Element prefix = flat[a * n + parent[b]];
      flat[a * n + b] = right[prefix * ng + via[b]];
    }
  }
  if (name.empty()) name = "Perm(" + std::to_string(degree) + ")";
  return FiniteGroup::unchecked(n, std::move(flat), std::move(name));
}

FiniteGroup direct_product(FiniteGroup const& a, FiniteGroup const& b, std::size_t cap) {
  std::size_t const na = a.order(), nb = b.order(), n = na * nb;
  if (n > cap) throw OrderCapExceeded("direct product order " + std::to_string(n) + " exceeds cap");
  std::vector<Element> flat(n * n);
  for (std::size_t i1 = 0; i1 < na; ++i1)
    for (std::size_t j1 = 0; j1 < nb; ++j1)
      for (std::size_t i2 = 0; i2 < na; ++i2)
        for (std::size_t j2 = 0; j2 < nb; ++j2)
          flat[(i1 * nb + j1) * n + i2 * nb + j2] = static_cast<Element>(
              a.mul(static_cast<Element>(i1), static_cast<Element>(i2)) * nb +
              b.mul(static_cast<Element>(j1), static_cast<Element>(j2)));
  return FiniteGroup::unchecked(n, std::move(flat), a.name() + " x " + b.name());
}

namespace {

void validate_action(FiniteGroup const& n, FiniteGroup const& h, std::vector<Permutation> const& action) {
  if (action.size() != h.order()) throw InputError("action must list one permutation per element of h");
  for (std::size_t k = 0; k < h.order(); ++k) {
    auto const& phi = action[k];
    if (phi.size() != n.order()) throw InputError("action image has wrong length");
    std::vector<bool> hit(n.order(), false);
    for (auto v : phi) {
      if (v >= n.order() || hit[v])
        throw NotAnAutomorphism("action of h element " + std::to_string(k) + " is not a bijection",
                                k, 0, 0);
      hit[v] = true;
    }
    for (Element x = 0; x < n.order(); ++x)
      for (Element y = 0; y < n.order(); ++y)
        if (phi[n.mul(x, y)] != n.mul(phi[x], phi[y]))
          throw NotAnAutomorphism("action of h element " + std::to_string(k) +
                                      " is not a homomorphism at " + triple_str(k, x, y),
                                  k, x, y);
  }
  for (Element h1 = 0; h1 < h.order(); ++h1)
    for (Element h2 = 0; h2 < h.order(); ++h2) {
      auto const& lhs = action[h.mul(h1, h2)];
      for (Element x = 0; x < n.order(); ++x)
        if (lhs[x] != action[h1][action[h2][x]])
          throw NotAHomomorphism("action is not a homomorphism at h elements (" +
                                     std::to_string(h1) + ", " + std::to_string(h2) + ")",
                                 h1, h2);
    }
}

}  // namespace

FiniteGroup semidirect_product(FiniteGroup const& n, FiniteGroup const& h,
                               std::vector<Permutation> const& action, std::size_t cap) {
  std::size_t const nn = n.order(), nh = h.order(), total = nn * nh;
  if (total > cap)
    throw OrderCapExceeded("semidirect product order " + std::to_string(total) + " exceeds cap");
  validate_action(n, h, action);
  std::vector<Element> flat(total * total);
  for (Element n1 = 0; n1 < nn; ++n1)
    for (Element h1 = 0; h1 < nh; ++h1)
      for (Element n2 = 0; n2 < nn; ++n2)
        for (Element h2 = 0; h2 < nh; ++h2)
          flat[(n1 * nh + h1) * total + n2 * nh + h2] =
              static_cast<Element>(n.mul(n1, action[h1][n2]) * nh + h.mul(h1, h2));
  return FiniteGroup::unchecked(total, std::move(flat), n.name() + " : " + h.name());
}

std::vector<Permutation> extend_action(FiniteGroup const& n, FiniteGroup const& h,
                                       std::vector<Element> const& generators,
                                       std::vector<Permutation> const& images) {
  if (generators.size() != images.size())
    throw InputError("action needs one image per generator");
  for (auto g : generators)
    if (g >= h.order()) throw InputError("action generator out of range");
  for (auto const& img : images)
    if (img.size() != n.order()) throw InputError("action image has wrong length");

  Permutation id(n.order());
  std::iota(id.begin(), id.end(), 0u);
  std::vector<std::optional<Permutation>> act(h.order());
  act[0] = id;
  std::vector<Element> queue{0};
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    Element x = queue[qi];
    for (std::size_t s = 0; s < generators.size(); ++s) {
      Element y = h.mul(x, generators[s]);
      // phi_{x g} = phi_x o phi_g
      Permutation cand(n.order());
      for (std::size_t v = 0; v < n.order(); ++v) cand[v] = (*act[x])[images[s][v]];
      if (!act[y]) {
        act[y] = std::move(cand);
        queue.push_back(y);
      } else if (*act[y] != cand) {
        throw NotAHomomorphism("generator images do not extend to a homomorphism at (" +
                                   std::to_string(x) + ", " + std::to_string(generators[s]) + ")",
                               x, generators[s]);
      }
    }
  }
  if (queue.size() != h.order()) throw InputError("action generators do not generate h");
  std::vector<Permutation> out;
  out.reserve(h.order());
  for (auto& a : act) out.push_back(std::move(*a));
  return out;
}

Subgroup Subgroup::checked(FiniteGroup const& g, ElementSet members) {
  if (members.size() != g.order()) throw InputError("subgroup universe does not match group order");
  if (!members.contains(0)) throw InputError("subgroup must contain the identity");
  auto elems = members.members();
  for (auto a : elems) {
    if (!members.contains(g.inv(static_cast<Element>(a))))
      throw InputError("subset is not closed under inverses");
    for (auto b : elems)
      if (!members.contains(g.mul(static_cast<Element>(a), static_cast<Element>(b))))
        throw InputError("subset is not closed under multiplication");
  }
  return Subgroup(std::move(members));
}

Subgroup Subgroup::generated_by(FiniteGroup const& g, std::span<Element const> gens) {
  ElementSet set(g.order());
  set.insert(0);
  std::vector<Element> list{0};
  for (std::size_t k = 0; k < list.size(); ++k)
    for (auto s : gens) {
      Element y = g.mul(list[k], s);
      if (!set.contains(y)) {
        set.insert(y);
        list.push_back(y);
      }
    }
  return Subgroup(std::move(set));
}

Subgroup Subgroup::whole(FiniteGroup const& g) { return Subgroup(ElementSet::full(g.order())); }

Subgroup Subgroup::trivial(FiniteGroup const& g) {
  ElementSet s(g.order());
  s.insert(0);
  return Subgroup(std::move(s));
}

std::vector<Element> Subgroup::elements() const {
  std::vector<Element> out;
  out.reserve(order_);
  members_.for_each([&](std::size_t i) { out.push_back(static_cast<Element>(i)); });
  return out;
}

Subgroup center(FiniteGroup const& g) {
  ElementSet z(g.order());
  for (Element x = 0; x < g.order(); ++x) {
    bool central = true;
    for (Element y = 0; y < g.order() && central; ++y) central = g.commute(x, y);
    if (central) z.insert(x);
  }
  return Subgroup(std::move(z));
}

Subgroup centralizer(FiniteGroup const& g, Element x) {
  ElementSet c(g.order());
  for (Element y = 0; y < g.order(); ++y)
    if (g.commute(x, y)) c.insert(y);
  return Subgroup(std::move(c));
}

std::vector<ElementSet> all_centralizers(FiniteGroup const& g) {
  std::size_t const n = g.order();
  std::vector<ElementSet> out(n, ElementSet(n));
  for (Element x = 0; x < n; ++x) {
    out[x].insert(x);
    for (Element y = x + 1; y < n; ++y)
      if (g.commute(x, y)) {
        out[x].insert(y);
        out[y].insert(x);
      }
  }
  return out;
}

std::vector<std::vector<Element>> conjugacy_classes(FiniteGroup const& g) {
  std::size_t const n = g.order();
  std::vector<bool> done(n, false);
  std::vector<std::vector<Element>> out;
  for (Element x = 0; x < n; ++x) {
    if (done[x]) continue;
    std::vector<Element> cls;
    for (Element h = 0; h < n; ++h) {
      Element c = g.conjugate(x, h);
      if (!done[c]) {
        done[c] = true;
        cls.push_back(c);
      }
    }
    std::sort(cls.begin(), cls.end());
    out.push_back(std::move(cls));
  }
  return out;
}

QuotientMap quotient(FiniteGroup const& g, Subgroup const& normal) {
  std::size_t const n = g.order();
  auto kernel = normal.elements();
  for (Element x = 0; x < n; ++x)
    for (auto k : kernel)
      if (!normal.contains(g.conjugate(k, x))) throw InputError("quotient by a non-normal subgroup");

  constexpr Element kNone = ~Element{0};
  std::vector<Element> proj(n, kNone);
  std::vector<Element> reps;
  for (Element x = 0; x < n; ++x) {
    if (proj[x] != kNone) continue;
    auto c = static_cast<Element>(reps.size());
    reps.push_back(x);
    for (auto k : kernel) proj[g.mul(x, k)] = c;
  }
  std::size_t const m = reps.size();
  std::vector<Element> flat(m * m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) flat[a * m + b] = proj[g.mul(reps[a], reps[b])];
  auto target = FiniteGroup::unchecked(m, std::move(flat), g.name() + " / N");
  return QuotientMap{g, std::move(target), std::move(proj)};
}

QuotientMap central_quotient(FiniteGroup const& g) {
  auto q = quotient(g, center(g));
  q.target = q.target.renamed(g.name() + " / Z");
  return q;
}

bool is_abelian(FiniteGroup const& g) {
  for (Element x = 0; x < g.order(); ++x)
    for (Element y = x + 1; y < g.order(); ++y)
      if (!g.commute(x, y)) return false;
  return true;
}

// A Sylow p-subgroup is normal iff it is the only one, iff the p-elements
// number exactly |G|_p.
bool is_nilpotent(FiniteGroup const& g) {
  for (auto const& [p, e] : factorize(g.order())) {
    std::size_t count = 0;
    for (auto o : g.element_orders()) {
      auto pp = prime_power(o);
      if (o == 1 || (pp && pp->first == p)) ++count;
    }
    if (count != ipow(p, e)) return false;
  }
  return true;
}

std::uint64_t exponent_of(FiniteGroup const& g) {
  std::uint64_t e = 1;
  for (auto o : g.element_orders()) e = std::lcm(e, static_cast<std::uint64_t>(o));
  return e;
}

}  // namespace relcomm
