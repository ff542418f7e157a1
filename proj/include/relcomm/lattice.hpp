#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "relcomm/group.hpp"

namespace relcomm {

inline constexpr std::size_t kDefaultLatticeCap = 768;

struct FrobeniusShape {
  Subgroup kernel;
  std::size_t complement_order = 0;
  bool is_minimal = false;
};

// Every subgroup of a group, each exactly once, sorted by order and then by
// member list (see lex_less). Index 0 is the trivial subgroup and the last
// index is the whole group.
class SubgroupLattice {
 public:
  FiniteGroup const& group() const noexcept { return group_; }
  std::size_t size() const noexcept { return subgroups_.size(); }
  std::vector<Subgroup> const& subgroups() const noexcept { return subgroups_; }
  Subgroup const& operator[](std::size_t i) const noexcept { return subgroups_[i]; }
  std::size_t whole_index() const noexcept { return subgroups_.size() - 1; }

  // Indices of the maximal proper subgroups of subgroup i.
  std::vector<std::size_t> const& maximal_of(std::size_t i) const noexcept { return maximal_of_[i]; }

  std::optional<std::size_t> find(ElementSet const& members) const;

 private:
  friend SubgroupLattice all_subgroups(FiniteGroup const& g, std::size_t cap);
  FiniteGroup group_;
  std::vector<Subgroup> subgroups_;
  std::vector<std::vector<std::size_t>> maximal_of_;
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> index_;
};

// Joins cyclic subgroups of prime-power order onto known subgroups until no
// new subgroup appears. Throws LatticeCapExceeded when g.order() > cap.
SubgroupLattice all_subgroups(FiniteGroup const& g, std::size_t cap = kDefaultLatticeCap);

std::vector<Subgroup> maximal_subgroups(SubgroupLattice const& lattice);

// Longest chain 1 = H_0 < ... < H_l = G, counted in strict inclusions.
std::size_t max_chain_length(SubgroupLattice const& lattice);

bool is_normal(FiniteGroup const& g, Subgroup const& h);

// First Sylow p-subgroup in lattice order. Throws NoSuchPrime.
Subgroup sylow_subgroup(SubgroupLattice const& lattice, std::uint64_t p);

// The Frobenius kernel, when the group is Frobenius: a normal N with
// 1 < N < G, gcd(|N|, [G:N]) = 1 and C_G(x) <= N for every 1 != x in N.
std::optional<FrobeniusShape> frobenius_shape(SubgroupLattice const& lattice);

}  // namespace relcomm
