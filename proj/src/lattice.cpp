#include "relcomm/lattice.hpp"

#include <algorithm>
#include <numeric>

#include "relcomm/errors.hpp"
#include "relcomm/number_theory.hpp"

namespace relcomm {

namespace {

struct Node {
  ElementSet members;
  std::vector<Element> elements;
  std::vector<Element> gens;
};

// <H, c> as a union of right cosets of H.
Node join(FiniteGroup const& g, Node const& h, Element c) {
  Node out{h.members, h.elements, h.gens};
  out.gens.push_back(c);
  std::vector<Element> reps{0};
  for (std::size_t k = 0; k < reps.size(); ++k) {
    Element r = reps[k];
    for (auto s : out.gens) {
      Element y = g.mul(r, s);
      if (out.members.contains(y)) continue;
      for (auto x : h.elements) {
        Element z = g.mul(x, y);
        out.members.insert(z);
        out.elements.push_back(z);
      }
      reps.push_back(y);
    }
  }
  std::sort(out.elements.begin(), out.elements.end());
  return out;
}

}  // namespace

std::optional<std::size_t> SubgroupLattice::find(ElementSet const& members) const {
  auto it = index_.find(members);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

SubgroupLattice all_subgroups(FiniteGroup const& g, std::size_t cap) {
  std::size_t const n = g.order();
  if (n > cap)
    throw LatticeCapExceeded("group order " + std::to_string(n) + " exceeds lattice cap " +
                             std::to_string(cap));

  // One generator per distinct cyclic subgroup of prime-power order.
  std::vector<Element> joiners;
  {
    std::unordered_map<ElementSet, Element, ElementSetHash> seen;
    for (Element x = 1; x < n; ++x) {
      if (!prime_power(g.element_order(x))) continue;
      Element gen[1] = {x};
      auto c = Subgroup::generated_by(g, gen);
      if (seen.emplace(c.members(), x).second) joiners.push_back(x);
    }
  }

  std::vector<Node> nodes;
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> found;
  {
    Node trivial{ElementSet(n), {0}, {}};
    trivial.members.insert(0);
    found.emplace(trivial.members, 0);
    nodes.push_back(std::move(trivial));
  }
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    for (auto c : joiners) {
      if (nodes[k].members.contains(c)) continue;
      Node j = join(g, nodes[k], c);
      if (found.contains(j.members)) continue;
      found.emplace(j.members, nodes.size());
      nodes.push_back(std::move(j));
    }
  }

  std::vector<std::size_t> order(nodes.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    auto sa = nodes[a].elements.size(), sb = nodes[b].elements.size();
    if (sa != sb) return sa < sb;
    return lex_less(nodes[a].members, nodes[b].members);
  });

  SubgroupLattice lat;
  lat.group_ = g;
  lat.subgroups_.reserve(nodes.size());
  for (auto idx : order) {
    lat.index_.emplace(nodes[idx].members, lat.subgroups_.size());
    lat.subgroups_.emplace_back(std::move(nodes[idx].members));
  }

  // Cover relation: scanning candidates from the largest down, a proper
  // subgroup is maximal unless it sits inside one already accepted.
  auto const& subs = lat.subgroups_;
  lat.maximal_of_.resize(subs.size());
  for (std::size_t i = 0; i < subs.size(); ++i) {
    auto& maxes = lat.maximal_of_[i];
    for (std::size_t j = i; j-- > 0;) {
      if (subs[j].order() == subs[i].order() || subs[i].order() % subs[j].order() != 0) continue;
      if (!subs[j].is_subgroup_of(subs[i])) continue;
      bool covered = std::any_of(maxes.begin(), maxes.end(),
                                 [&](std::size_t m) { return subs[j].is_subgroup_of(subs[m]); });
      if (!covered) maxes.push_back(j);
    }
    std::sort(maxes.begin(), maxes.end());
  }
  return lat;
}

std::vector<Subgroup> maximal_subgroups(SubgroupLattice const& lattice) {
  std::vector<Subgroup> out;
  for (auto i : lattice.maximal_of(lattice.whole_index())) out.push_back(lattice[i]);
  return out;
}

std::size_t max_chain_length(SubgroupLattice const& lattice) {
  std::vector<std::size_t> len(lattice.size(), 0);
  for (std::size_t i = 1; i < lattice.size(); ++i)
    for (auto j : lattice.maximal_of(i)) len[i] = std::max(len[i], len[j] + 1);
  return len[lattice.whole_index()];
}

bool is_normal(FiniteGroup const& g, Subgroup const& h) {
  auto elems = h.elements();
  for (Element x = 0; x < g.order(); ++x)
    for (auto y : elems)
      if (!h.contains(g.conjugate(y, x))) return false;
  return true;
}

Subgroup sylow_subgroup(SubgroupLattice const& lattice, std::uint64_t p) {
  auto const n = lattice.group().order();
  if (!is_prime(p) || n % p != 0)
    throw NoSuchPrime(std::to_string(p) + " is not a prime divisor of " + std::to_string(n));
  auto target = p_part(n, p);
  for (auto const& s : lattice.subgroups())
    if (s.order() == target) return s;
  throw Error("lattice has no Sylow subgroup");  // unreachable for a valid lattice
}

std::optional<FrobeniusShape> frobenius_shape(SubgroupLattice const& lattice) {
  auto const& g = lattice.group();
  std::size_t const n = g.order();
  std::optional<std::vector<ElementSet>> cents;
  for (std::size_t i = 1; i < lattice.whole_index(); ++i) {
    auto const& k = lattice[i];
    if (std::gcd(k.order(), n / k.order()) != 1) continue;
    if (!is_normal(g, k)) continue;
    if (!cents) cents = all_centralizers(g);
    bool ok = true;
    k.members().for_each([&](std::size_t x) {
      if (ok && x != 0 && !(*cents)[x].is_subset_of(k.members())) ok = false;
    });
    if (!ok) continue;

    FrobeniusShape shape{k, n / k.order(), false};
    auto kernel_elems = k.elements();
    auto const p = g.element_order(kernel_elems.size() > 1 ? kernel_elems[1] : 0);
    bool elementary = is_prime(p);
    for (auto a : kernel_elems) {
      if (a != 0 && g.element_order(a) != p) elementary = false;
      for (auto b : kernel_elems)
        if (!g.commute(a, b)) elementary = false;
    }
    if (elementary && is_prime(shape.complement_order)) {
      auto const& maxes = lattice.maximal_of(lattice.whole_index());
      bool kernel_max = std::find(maxes.begin(), maxes.end(), i) != maxes.end();
      bool complement_max = false;
      for (auto m : maxes)
        if (lattice[m].order() == shape.complement_order) complement_max = true;
      shape.is_minimal = kernel_max && complement_max;
    }
    return shape;
  }
  return std::nullopt;
}

}  // namespace relcomm
