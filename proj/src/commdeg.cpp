#include "relcomm/commdeg.hpp"

#include <algorithm>
#include <map>

#include "relcomm/errors.hpp"
#include "relcomm/parallel.hpp"

namespace relcomm {

std::optional<std::size_t> DegreeSpectrum::position(Rat const& value) const {
  auto it = std::find(values.begin(), values.end(), value);
  if (it == values.end()) return std::nullopt;
  return static_cast<std::size_t>(it - values.begin());
}

CommutationProfile::CommutationProfile(FiniteGroup const& g) : group_(g), cent_(g.order(), 0) {
  std::size_t const n = g.order();
  for (Element x = 0; x < n; ++x) {
    ++cent_[x];
    for (Element y = x + 1; y < n; ++y)
      if (g.commute(x, y)) {
        ++cent_[x];
        ++cent_[y];
      }
  }
}

std::uint64_t CommutationProfile::commuting_pairs(Subgroup const& h) const {
  std::uint64_t sum = 0;
  h.members().for_each([&](std::size_t x) { sum += cent_[x]; });
  return sum;
}

Rat CommutationProfile::degree(Subgroup const& h) const {
  return Rat(BigInt(commuting_pairs(h)), BigInt(h.order()) * group_.order());
}

Rat comm_degree(FiniteGroup const& g) {
  return Rat(BigInt(conjugacy_classes(g).size()), BigInt(g.order()));
}

Rat rel_comm_degree(FiniteGroup const& g, Subgroup const& h) {
  if (h.parent_order() != g.order()) throw InputError("subgroup belongs to a different group");
  return CommutationProfile(g).degree(h);
}

Rat rel_comm_degree_within(FiniteGroup const& g, Subgroup const& k, Subgroup const& h) {
  if (k.parent_order() != g.order() || h.parent_order() != g.order())
    throw InputError("subgroup belongs to a different group");
  if (!h.is_subgroup_of(k)) throw NotNested("H is not contained in K");
  auto kelems = k.elements();
  std::uint64_t pairs = 0;
  h.members().for_each([&](std::size_t x) {
    for (auto y : kelems)
      if (g.commute(static_cast<Element>(x), y)) ++pairs;
  });
  return Rat(BigInt(pairs), BigInt(h.order()) * k.order());
}

Rat pair_count_oracle(FiniteGroup const& g, Subgroup const& h) {
  std::uint64_t pairs = 0;
  for (Element x = 0; x < g.order(); ++x) {
    if (!h.contains(x)) continue;
    for (Element y = 0; y < g.order(); ++y)
      if (g.mul(x, y) == g.mul(y, x)) ++pairs;
  }
  return Rat(BigInt(pairs), BigInt(h.order()) * g.order());
}

DegreeSpectrum degree_spectrum(SubgroupLattice const& lattice, SpectrumOptions const& opts) {
  auto const& g = lattice.group();
  CommutationProfile profile(g);
  std::optional<Subgroup> z;
  if (opts.central_dedup) z = center(g);

  std::size_t const count = lattice.size();
  std::vector<std::optional<Rat>> value(count);
  parallel_for(count, opts.threads, [&](std::size_t i) {
    if (z && !z->is_subgroup_of(lattice[i])) return;
    value[i] = profile.degree(lattice[i]);
  });

  // Lattice order fixes the witness: first hit wins.
  std::map<Rat, std::size_t, std::greater<>> first;
  for (std::size_t i = 0; i < count; ++i)
    if (value[i]) first.emplace(*value[i], i);

  DegreeSpectrum out;
  for (auto const& [v, i] : first) {
    out.values.push_back(v);
    out.witnesses.push_back(i);
    out.witness_subgroups.push_back(lattice[i]);
  }
  return out;
}

}  // namespace relcomm
