#include "relcomm/conjecture_lab.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "relcomm/errors.hpp"
#include "relcomm/number_theory.hpp"

namespace relcomm {

namespace {

std::string describe(SubgroupLattice const& lattice, std::size_t i) {
  return "subgroup #" + std::to_string(i) + " of order " + std::to_string(lattice[i].order());
}

std::string join_values(std::vector<Rat> const& v) {
  std::string out;
  for (auto const& r : v) {
    if (!out.empty()) out += ' ';
    out += r.str();
  }
  return out;
}

std::string product_name(FiniteGroup const& h, FiniteGroup const& k) {
  return h.name() + " x " + k.name();
}

DegreeSpectrum spectrum_of(FiniteGroup const& g, std::size_t cap, unsigned threads = 1) {
  SpectrumOptions opts;
  opts.threads = threads;
  return degree_spectrum(all_subgroups(g, cap), opts);
}

}  // namespace

std::string check_name(Check c) {
  switch (c) {
    case Check::ChainBound: return "ChainBound";
    case Check::OmegaBound: return "OmegaBound";
    case Check::ProductSpectrum: return "ProductSpectrum";
    case Check::ProductCardinality: return "ProductCardinality";
    case Check::PrimePowerOrders: return "PrimePowerOrders";
    case Check::DistinctPrimeDegrees: return "DistinctPrimeDegrees";
  }
  return "?";
}

AuditRecord check_chain_bound(SubgroupLattice const& lattice, DegreeSpectrum const& spectrum) {
  auto const& g = lattice.group();
  auto q = central_quotient(g).target;
  auto chain = max_chain_length(all_subgroups(q, std::max(q.order(), kDefaultLatticeCap)));

  AuditRecord rec;
  rec.subject = g.name();
  rec.check = Check::ChainBound;
  rec.holds = spectrum.size() >= chain + 1;
  rec.detail = {{"spectrumSize", std::to_string(spectrum.size())},
                {"chainLength", std::to_string(chain)}};
  if (!rec.holds)
    rec.witness = "|D| = " + std::to_string(spectrum.size()) + " < l_M + 1 = " + std::to_string(chain + 1);
  return rec;
}

AuditRecord check_chain_bound(SubgroupLattice const& lattice) {
  return check_chain_bound(lattice, degree_spectrum(lattice));
}

AuditRecord check_omega_bound(SubgroupLattice const& lattice, DegreeSpectrum const& spectrum) {
  auto const& g = lattice.group();
  auto z = center(g);
  CommutationProfile profile(g);

  AuditRecord rec;
  rec.subject = g.name();
  rec.check = Check::OmegaBound;
  unsigned worst_slack = 0;
  bool any = false;
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    auto const& h = lattice[i];
    auto k = spectrum.position(profile.degree(h));
    if (!k) throw Error("degree missing from the supplied spectrum");
    auto omega = big_omega(h.order() / h.members().intersection_count(z.members()));
    if (omega > *k) {
      rec.holds = false;
      rec.witness = describe(lattice, i) + ": Omega = " + std::to_string(omega) +
                    " > k = " + std::to_string(*k);
      break;
    }
    auto slack = static_cast<unsigned>(*k - omega);
    if (!any || slack < worst_slack) worst_slack = slack;
    any = true;
  }
  rec.detail = {{"interpretation", "Z(H,G) = H n Z(G)"},
                {"subgroups", std::to_string(lattice.size())}};
  if (rec.holds) rec.detail.emplace_back("minSlack", std::to_string(worst_slack));
  return rec;
}

AuditRecord check_omega_bound(SubgroupLattice const& lattice) {
  return check_omega_bound(lattice, degree_spectrum(lattice));
}

AuditRecord product_spectrum(FiniteGroup const& h, FiniteGroup const& k, std::size_t cap) {
  if (std::gcd(h.order(), k.order()) != 1)
    throw NotCoprime(h.name() + " and " + k.name() + " have orders " + std::to_string(h.order()) +
                     " and " + std::to_string(k.order()));
  auto dh = spectrum_of(h, cap), dk = spectrum_of(k, cap);
  auto dhk = spectrum_of(direct_product(h, k, std::max(cap, kDefaultOrderCap)), cap);

  std::set<Rat, std::greater<>> prod;
  for (auto const& a : dh.values)
    for (auto const& b : dk.values) prod.insert(a * b);
  std::vector<Rat> expected(prod.begin(), prod.end());

  std::vector<Rat> common;
  std::set_intersection(dh.values.begin(), dh.values.end(), dk.values.begin(), dk.values.end(),
                        std::back_inserter(common), std::greater<>());

  AuditRecord rec;
  rec.subject = product_name(h, k);
  rec.check = Check::ProductSpectrum;
  rec.detail = {{"D(H)", join_values(dh.values)},
                {"D(K)", join_values(dk.values)},
                {"D(HxK)", join_values(dhk.values)},
                {"size", std::to_string(dhk.size())}};
  if (dhk.values != expected) {
    rec.holds = false;
    std::vector<Rat> diff;
    std::set_symmetric_difference(dhk.values.begin(), dhk.values.end(), expected.begin(),
                                  expected.end(), std::back_inserter(diff), std::greater<>());
    rec.witness = "values in only one of D(HxK), D(H)D(K): " + join_values(diff);
  } else if (common != std::vector<Rat>{Rat(1)}) {
    rec.holds = false;
    rec.witness = "D(H) n D(K) = {" + join_values(common) + "}";
  }
  return rec;
}

ProductSizes product_sizes(FiniteGroup const& h, FiniteGroup const& k, std::size_t cap,
                           unsigned threads) {
  ProductSizes s;
  s.h = spectrum_of(h, cap, threads).size();
  s.k = spectrum_of(k, cap, threads).size();
  s.product = spectrum_of(direct_product(h, k, std::max(cap, kDefaultOrderCap)), cap, threads).size();
  return s;
}

long long product_cardinality_delta(FiniteGroup const& h, FiniteGroup const& k, std::size_t cap) {
  return product_sizes(h, k, cap).delta();
}

AuditRecord check_product_cardinality(FiniteGroup const& h, FiniteGroup const& k, std::size_t cap) {
  auto s = product_sizes(h, k, cap);
  AuditRecord rec;
  rec.subject = product_name(h, k);
  rec.check = Check::ProductCardinality;
  bool const coprime = std::gcd(h.order(), k.order()) == 1;
  rec.detail = {{"|D(H)|", std::to_string(s.h)},
                {"|D(K)|", std::to_string(s.k)},
                {"|D(HxK)|", std::to_string(s.product)},
                {"delta", std::to_string(s.delta())},
                {"coprime", coprime ? "true" : "false"}};
  if (coprime) {
    std::size_t bound = s.h + s.k - 1;
    if (s.h > 1 && s.k > 1) bound = s.h + s.k;
    if (s.product < bound) {
      rec.holds = false;
      rec.witness = "|D(HxK)| = " + std::to_string(s.product) + " < " + std::to_string(bound);
    }
  }
  return rec;
}

AuditRecord check_prime_power_orders(SubgroupLattice const& lattice, DegreeSpectrum const& spectrum) {
  auto const& g = lattice.group();
  if (is_nilpotent(g) || spectrum.size() != 5)
    throw Inapplicable(g.name() + ": needs a non-nilpotent group with |D(G)| = 5");
  auto q = central_quotient(g).target;

  AuditRecord rec;
  rec.subject = g.name();
  rec.check = Check::PrimePowerOrders;
  std::set<std::uint32_t> orders(q.element_orders().begin(), q.element_orders().end());
  std::string listed;
  for (auto o : orders) {
    if (!listed.empty()) listed += ' ';
    listed += std::to_string(o);
    if (o == 1) continue;
    auto pp = prime_power(o);
    if ((!pp || pp->second > 2) && !rec.witness) {
      rec.holds = false;
      rec.witness = "element of order " + std::to_string(o) + " in G/Z(G)";
    }
  }
  rec.detail = {{"quotientOrders", listed}};
  return rec;
}

AuditRecord check_distinct_prime_degrees(SubgroupLattice const& lattice) {
  auto const& g = lattice.group();
  auto qm = central_quotient(g);
  auto const& q = qm.target;
  std::size_t const zorder = g.order() / q.order();
  CommutationProfile profile(g);

  // degree -> (prime, representative) of qualifying elements
  std::map<Rat, std::map<std::uint64_t, Element>> by_degree;
  std::size_t qualifying = 0;
  for (Element x = 0; x < g.order(); ++x) {
    auto o = q.element_order(qm.projection[x]);
    if (!is_prime(o)) continue;
    if (!prime_power(profile.centralizer_order(x) / zorder)) continue;
    ++qualifying;
    Element gen[] = {x};
    by_degree[profile.degree(Subgroup::generated_by(g, gen))].emplace(o, x);
  }

  AuditRecord rec;
  rec.subject = g.name();
  rec.check = Check::DistinctPrimeDegrees;
  rec.detail = {{"quotientOrder", std::to_string(q.order())},
                {"qualifyingElements", std::to_string(qualifying)}};
  for (auto const& [d, primes] : by_degree) {
    if (primes.size() < 2) continue;
    auto a = primes.begin(), b = std::next(a);
    if (primes.size() == 2 && q.order() == a->first * b->first) continue;
    rec.holds = false;
    rec.witness = "elements " + std::to_string(a->second) + " and " + std::to_string(b->second) +
                  " of quotient orders " + std::to_string(a->first) + ", " +
                  std::to_string(b->first) + " share d = " + d.str();
    break;
  }
  return rec;
}

}  // namespace relcomm
