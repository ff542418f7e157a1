#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "relcomm/commdeg.hpp"
#include "relcomm/group.hpp"
#include "relcomm/lattice.hpp"
#include "relcomm/rational.hpp"

namespace relcomm {

enum class Case {
  T3_i,
  T3_ii,
  T4_i,
  T4_ii,
  N5_i,
  N5_ii,
  NN5_i,
  NN5_ii,
  NN5_iii,
  NN5_iv_A4,
  NN5_iv_pq,
  NN5_v,
  L31,
  L32,
  Unclassified,
};

// "T3.i", "NN5.iv-A4", ...
std::string case_name(Case c);
std::optional<Case> parse_case(std::string const& name);

struct CaseTag {
  Case kind = Case::Unclassified;
  std::optional<std::uint64_t> p, q, m, n;

  std::string str() const;  // e.g. "NN5.i(p=5,q=2)"
  friend bool operator==(CaseTag const&, CaseTag const&) = default;
};

struct FrobeniusInfo {
  std::size_t kernel_order = 0;
  std::size_t complement_order = 0;
  bool is_minimal = false;
  bool kernel_cyclic = false;
  std::optional<unsigned> kernel_rank;  // set when the kernel is elementary abelian
  bool complement_cyclic = false;
};

// Invariants of G/Z(G) that the case hypotheses are phrased in.
struct QuotientShape {
  std::size_t order = 1;
  std::map<std::uint64_t, unsigned> factorization;
  bool abelian = true;
  std::optional<unsigned> elementary_rank;  // abelian of prime exponent
  // Nonabelian of order pq; first is the prime with a normal Sylow subgroup.
  std::optional<std::pair<std::uint64_t, std::uint64_t>> nonabelian_pq;
  bool is_a4 = false;
  std::optional<FrobeniusInfo> frobenius;
  std::uint64_t exponent = 1;
  std::set<std::uint32_t> element_orders;
  std::set<std::size_t> normal_subgroup_orders;
  std::size_t chain_length = 0;
};

QuotientShape quotient_shape(FiniteGroup const& g, std::size_t cap = kDefaultLatticeCap);

// The value set of a case, decreasing. Throws BadParams when the parameters
// do not fit the case.
std::vector<Rat> predicted_spectrum(CaseTag const& tag);
std::vector<Rat> lemma31_spectrum(std::uint64_t p, unsigned n);
std::vector<Rat> lemma32_spectrum(std::uint64_t p, unsigned m, unsigned n);

// Every theorem case (T3/T4/N5/NN5) whose hypotheses g satisfies, in
// evaluation order. The lemma fallbacks are not included.
std::vector<CaseTag> matching_cases(SubgroupLattice const& lattice);

// First matching theorem case, then the L31/L32 fallbacks, else
// Unclassified.
CaseTag classify(SubgroupLattice const& lattice);

enum class Verdict { Match, Mismatch, NotApplicable };
std::string verdict_name(Verdict v);

struct ClassificationReport {
  std::string name;
  std::size_t order = 0;
  std::size_t center_order = 0;
  CaseTag tag;
  std::vector<Rat> predicted;
  DegreeSpectrum computed;
  Verdict verdict = Verdict::NotApplicable;
};

ClassificationReport verify_classification(SubgroupLattice const& lattice,
                                           SpectrumOptions const& opts = {});
ClassificationReport verify_classification(SubgroupLattice const& lattice,
                                           DegreeSpectrum spectrum);

// Shared small predicates.
bool is_abelian_subgroup(FiniteGroup const& g, Subgroup const& h);
bool has_abelian_maximal_subgroup(SubgroupLattice const& lattice);
std::set<std::size_t> class_sizes(FiniteGroup const& g);

}  // namespace relcomm
