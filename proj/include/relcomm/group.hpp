#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "relcomm/element_set.hpp"

namespace relcomm {

using Element = std::uint32_t;

// Images of 0..degree-1.
using Permutation = std::vector<std::uint32_t>;

inline constexpr std::size_t kDefaultOrderCap = 1024;

// Immutable finite group stored as a dense Cayley table. The identity is
// always element 0. Copies share the underlying tables.
class FiniteGroup {
 public:
  FiniteGroup();  // trivial group

  std::size_t order() const noexcept { return data_->n; }
  static constexpr Element identity() noexcept { return 0; }

  Element mul(Element a, Element b) const noexcept {
    return data_->table[static_cast<std::size_t>(a) * data_->n + b];
  }
  Element inv(Element a) const noexcept { return data_->inverse[a]; }
  std::uint32_t element_order(Element a) const noexcept { return data_->orders[a]; }
  std::span<Element const> row(Element a) const noexcept {
    return {data_->table.data() + static_cast<std::size_t>(a) * data_->n, data_->n};
  }
  std::span<std::uint32_t const> element_orders() const noexcept { return data_->orders; }
  std::span<Element const> table() const noexcept { return data_->table; }

  bool commute(Element a, Element b) const noexcept { return mul(a, b) == mul(b, a); }
  // g^-1 x g
  Element conjugate(Element x, Element g) const noexcept { return mul(mul(inv(g), x), g); }
  Element power(Element x, std::uint64_t k) const noexcept;

  std::string const& name() const noexcept { return name_; }
  FiniteGroup renamed(std::string name) const;

  // Takes a flat n*n table that is already known to be a group with
  // identity 0 (builders that are correct by construction). No validation.
  static FiniteGroup unchecked(std::size_t n, std::vector<Element> table, std::string name);

 private:
  struct Data {
    std::size_t n = 1;
    std::vector<Element> table{0};
    std::vector<Element> inverse{0};
    std::vector<std::uint32_t> orders{1};
  };
  FiniteGroup(std::shared_ptr<Data const> d, std::string name)
      : data_(std::move(d)), name_(std::move(name)) {}
  std::shared_ptr<Data const> data_;
  std::string name_;
};

// A subgroup of some parent group, as a membership bitset.
class Subgroup {
 public:
  Subgroup() = default;
  // Unchecked: the caller guarantees closure.
  explicit Subgroup(ElementSet members)
      : members_(std::move(members)), order_(members_.count()) {}

  // Validates identity membership and closure; throws InputError otherwise.
  static Subgroup checked(FiniteGroup const& g, ElementSet members);
  static Subgroup generated_by(FiniteGroup const& g, std::span<Element const> gens);
  static Subgroup whole(FiniteGroup const& g);
  static Subgroup trivial(FiniteGroup const& g);

  std::size_t parent_order() const noexcept { return members_.size(); }
  std::size_t order() const noexcept { return order_; }
  bool contains(Element x) const noexcept { return members_.contains(x); }
  ElementSet const& members() const noexcept { return members_; }
  std::vector<Element> elements() const;
  bool is_subgroup_of(Subgroup const& other) const noexcept {
    return members_.is_subset_of(other.members_);
  }

  friend bool operator==(Subgroup const& a, Subgroup const& b) { return a.members_ == b.members_; }

 private:
  ElementSet members_;
  std::size_t order_ = 0;
};

// Surjective homomorphism source -> target.
struct QuotientMap {
  FiniteGroup source;
  FiniteGroup target;
  std::vector<Element> projection;
};

struct TableOptions {
  // Associativity is checked on every triple up to this order and on
  // random samples above it.
  std::size_t exhaustive_limit = 256;
  std::size_t samples = 100000;
  std::uint64_t seed = 0x5eed;
};

// Validates an arbitrary n*n table. The identity is moved to index 0 by
// swapping its label with 0. Throws NotAGroup with a witness.
FiniteGroup build_from_table(std::vector<std::vector<std::size_t>> const& table,
                             std::string name = {}, TableOptions const& opts = {});

// Product convention: (x*y)(i) = y(x(i)), i.e. apply x first.
Permutation compose(Permutation const& x, Permutation const& y);
Permutation perm_from_cycles(std::size_t degree,
                             std::vector<std::vector<std::uint32_t>> const& cycles);

// Breadth-first closure from the identity permutation; element k is the
// k-th permutation discovered.
FiniteGroup build_perm_group(std::size_t degree, std::vector<Permutation> const& generators,
                             std::size_t cap = kDefaultOrderCap, std::string name = {});

// Element (i, j) has index i * b.order() + j.
FiniteGroup direct_product(FiniteGroup const& a, FiniteGroup const& b,
                           std::size_t cap = kDefaultOrderCap);

// action[h] is the automorphism of n by which h acts; (n1,h1)(n2,h2) =
// (n1 * action[h1](n2), h1 h2). Element (i, j) has index i * h.order() + j.
FiniteGroup semidirect_product(FiniteGroup const& n, FiniteGroup const& h,
                               std::vector<Permutation> const& action,
                               std::size_t cap = kDefaultOrderCap);

// Extends generator images multiplicatively to a full action table
// (action[h] for every h), validating consistency.
std::vector<Permutation> extend_action(FiniteGroup const& n, FiniteGroup const& h,
                                       std::vector<Element> const& generators,
                                       std::vector<Permutation> const& images);

Subgroup center(FiniteGroup const& g);
Subgroup centralizer(FiniteGroup const& g, Element x);
// C_G(x) for every x, indexed by x.
std::vector<ElementSet> all_centralizers(FiniteGroup const& g);

// Classes sorted by least member; members ascending.
std::vector<std::vector<Element>> conjugacy_classes(FiniteGroup const& g);

// Quotient by a normal subgroup. Cosets are numbered by their least member,
// so the identity coset is 0.
QuotientMap quotient(FiniteGroup const& g, Subgroup const& normal);
QuotientMap central_quotient(FiniteGroup const& g);

bool is_abelian(FiniteGroup const& g);
bool is_nilpotent(FiniteGroup const& g);
std::uint64_t exponent_of(FiniteGroup const& g);

}  // namespace relcomm
