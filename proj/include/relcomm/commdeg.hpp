#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "relcomm/group.hpp"
#include "relcomm/lattice.hpp"
#include "relcomm/rational.hpp"

namespace relcomm {

// D(G) in decreasing order. witnesses[i] is the lattice index of the
// subgroup reported for values[i]: the first one in lattice order (smallest
// order, then least member list) attaining it.
struct DegreeSpectrum {
  std::vector<Rat> values;
  std::vector<std::size_t> witnesses;
  std::vector<Subgroup> witness_subgroups;

  std::size_t size() const noexcept { return values.size(); }
  // Position k of value in the decreasing list (d_k), if present.
  std::optional<std::size_t> position(Rat const& value) const;
};

// |C_G(x)| for every x, computed once. Each relative degree is then a
// single pass over the subgroup.
class CommutationProfile {
 public:
  explicit CommutationProfile(FiniteGroup const& g);

  FiniteGroup const& group() const noexcept { return group_; }
  std::uint64_t centralizer_order(Element x) const noexcept { return cent_[x]; }

  // sum over x in H of |C_G(x)|, i.e. the number of commuting pairs in H x G.
  std::uint64_t commuting_pairs(Subgroup const& h) const;
  Rat degree(Subgroup const& h) const;

 private:
  FiniteGroup group_;
  std::vector<std::uint64_t> cent_;
};

// d(G) = k(G) / |G|.
Rat comm_degree(FiniteGroup const& g);

// d(H, G).
Rat rel_comm_degree(FiniteGroup const& g, Subgroup const& h);

// d(H, K) for H <= K <= G, centralizers taken inside K. Throws NotNested.
Rat rel_comm_degree_within(FiniteGroup const& g, Subgroup const& k, Subgroup const& h);

// Literal count of commuting pairs in H x G over |H||G|.
Rat pair_count_oracle(FiniteGroup const& g, Subgroup const& h);

struct SpectrumOptions {
  // Only evaluate subgroups containing Z(G); d(H,G) = d(HZ,G) makes the
  // value set identical. Witnesses are then the first Z-containing subgroup.
  bool central_dedup = false;
  unsigned threads = 1;
};

DegreeSpectrum degree_spectrum(SubgroupLattice const& lattice, SpectrumOptions const& opts = {});

}  // namespace relcomm
