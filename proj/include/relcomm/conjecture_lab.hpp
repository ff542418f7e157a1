#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "relcomm/commdeg.hpp"
#include "relcomm/lattice.hpp"

namespace relcomm {

enum class Check {
  ChainBound,
  OmegaBound,
  ProductSpectrum,
  ProductCardinality,
  PrimePowerOrders,
  DistinctPrimeDegrees,
};

std::string check_name(Check c);

struct AuditRecord {
  std::string subject;
  Check check = Check::ChainBound;
  bool holds = true;
  std::optional<std::string> witness;  // always set when holds is false
  std::vector<std::pair<std::string, std::string>> detail;
};

// |D(G)| >= l_M(G/Z(G)) + 1.
AuditRecord check_chain_bound(SubgroupLattice const& lattice, DegreeSpectrum const& spectrum);
AuditRecord check_chain_bound(SubgroupLattice const& lattice);

// For every H with d(H,G) = d_k: Omega(|H / (H n Z(G))|) <= k.
AuditRecord check_omega_bound(SubgroupLattice const& lattice, DegreeSpectrum const& spectrum);
AuditRecord check_omega_bound(SubgroupLattice const& lattice);

// D(H x K) = D(H) D(K) and D(H) n D(K) = {1}. Throws NotCoprime.
AuditRecord product_spectrum(FiniteGroup const& h, FiniteGroup const& k,
                             std::size_t cap = kDefaultLatticeCap);

struct ProductSizes {
  std::size_t h = 0, k = 0, product = 0;
  long long delta() const {
    return static_cast<long long>(product) - static_cast<long long>(h * k);
  }
};

ProductSizes product_sizes(FiniteGroup const& h, FiniteGroup const& k,
                           std::size_t cap = kDefaultLatticeCap, unsigned threads = 1);

// |D(H x K)| - |D(H)||D(K)|; no coprimality needed.
long long product_cardinality_delta(FiniteGroup const& h, FiniteGroup const& k,
                                    std::size_t cap = kDefaultLatticeCap);

// On coprime pairs checks |D(H x K)| >= |D(H)| + |D(K)| - 1, and
// >= |D(H)| + |D(K)| when both factors are nonabelian. On other pairs only
// records the sizes.
AuditRecord check_product_cardinality(FiniteGroup const& h, FiniteGroup const& k,
                                      std::size_t cap = kDefaultLatticeCap);

// Non-nilpotent G with |D(G)| = 5: every element of G/Z(G) has order 1, r
// or r^2 for a prime r. Throws Inapplicable otherwise.
AuditRecord check_prime_power_orders(SubgroupLattice const& lattice, DegreeSpectrum const& spectrum);

// Elements with images of distinct prime orders p, q in G/Z(G) and prime
// power order centralizer images: |G/Z(G)| = pq or d(<x>,G) != d(<y>,G).
AuditRecord check_distinct_prime_degrees(SubgroupLattice const& lattice);

}  // namespace relcomm
