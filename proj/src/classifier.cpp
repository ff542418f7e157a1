#include "relcomm/classifier.hpp"

#include <algorithm>
#include <array>

#include "relcomm/errors.hpp"
#include "relcomm/number_theory.hpp"

namespace relcomm {

namespace {

constexpr std::array<std::pair<Case, char const*>, 15> kCaseNames{{
    {Case::T3_i, "T3.i"},
    {Case::T3_ii, "T3.ii"},
    {Case::T4_i, "T4.i"},
    {Case::T4_ii, "T4.ii"},
    {Case::N5_i, "N5.i"},
    {Case::N5_ii, "N5.ii"},
    {Case::NN5_i, "NN5.i"},
    {Case::NN5_ii, "NN5.ii"},
    {Case::NN5_iii, "NN5.iii"},
    {Case::NN5_iv_A4, "NN5.iv-A4"},
    {Case::NN5_iv_pq, "NN5.iv-pq"},
    {Case::NN5_v, "NN5.v"},
    {Case::L31, "L31"},
    {Case::L32, "L32"},
    {Case::Unclassified, "Unclassified"},
}};

BigInt big(std::uint64_t x) { return BigInt(x); }

// Decreasing, without repeats.
std::vector<Rat> as_set(std::vector<Rat> v) {
  std::sort(v.begin(), v.end(), std::greater<>());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

CaseTag tag(Case c, std::optional<std::uint64_t> p = {}, std::optional<std::uint64_t> q = {},
            std::optional<std::uint64_t> m = {}, std::optional<std::uint64_t> n = {}) {
  CaseTag t;
  t.kind = c;
  t.p = p;
  t.q = q;
  t.m = m;
  t.n = n;
  return t;
}

std::uint64_t need(std::optional<std::uint64_t> const& v, char const* what) {
  if (!v) throw BadParams(std::string("missing parameter ") + what);
  return *v;
}

std::uint64_t need_prime(std::optional<std::uint64_t> const& v, char const* what) {
  auto x = need(v, what);
  if (!is_prime(x)) throw BadParams(std::string(what) + " = " + std::to_string(x) + " is not prime");
  return x;
}

unsigned log_exact(std::uint64_t value, std::uint64_t p) {
  unsigned k = 0;
  while (value > 1 && value % p == 0) {
    value /= p;
    ++k;
  }
  return k;
}

bool subgroup_has_element_of_order(FiniteGroup const& g, Subgroup const& h, std::size_t order) {
  bool found = false;
  h.members().for_each([&](std::size_t x) {
    if (g.element_order(static_cast<Element>(x)) == order) found = true;
  });
  return found;
}

bool sylow_is_abelian(SubgroupLattice const& lattice, std::uint64_t p) {
  return is_abelian_subgroup(lattice.group(), sylow_subgroup(lattice, p));
}

}  // namespace

std::string case_name(Case c) {
  for (auto const& [k, s] : kCaseNames)
    if (k == c) return s;
  return "Unclassified";
}

std::optional<Case> parse_case(std::string const& name) {
  for (auto const& [k, s] : kCaseNames)
    if (name == s) return k;
  return std::nullopt;
}

std::string CaseTag::str() const {
  std::string out = case_name(kind);
  std::string args;
  auto add = [&](char const* key, std::optional<std::uint64_t> const& v) {
    if (!v) return;
    if (!args.empty()) args += ',';
    args += key;
    args += '=';
    args += std::to_string(*v);
  };
  add("p", p);
  add("q", q);
  add("m", m);
  add("n", n);
  if (!args.empty()) out += "(" + args + ")";
  return out;
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Match: return "Match";
    case Verdict::Mismatch: return "Mismatch";
    case Verdict::NotApplicable: return "NotApplicable";
  }
  return "NotApplicable";
}

bool is_abelian_subgroup(FiniteGroup const& g, Subgroup const& h) {
  auto e = h.elements();
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t j = i + 1; j < e.size(); ++j)
      if (!g.commute(e[i], e[j])) return false;
  return true;
}

bool has_abelian_maximal_subgroup(SubgroupLattice const& lattice) {
  for (auto i : lattice.maximal_of(lattice.whole_index()))
    if (is_abelian_subgroup(lattice.group(), lattice[i])) return true;
  return false;
}

std::set<std::size_t> class_sizes(FiniteGroup const& g) {
  std::set<std::size_t> sizes;
  for (auto const& c : conjugacy_classes(g)) sizes.insert(c.size());
  return sizes;
}

QuotientShape quotient_shape(FiniteGroup const& g, std::size_t cap) {
  auto qm = central_quotient(g);
  auto const& q = qm.target;
  auto lat = all_subgroups(q, cap);

  QuotientShape s;
  s.order = q.order();
  s.factorization = factorize(q.order());
  s.abelian = is_abelian(q);
  s.exponent = exponent_of(q);
  for (auto o : q.element_orders()) s.element_orders.insert(o);
  for (auto const& h : lat.subgroups())
    if (is_normal(q, h)) s.normal_subgroup_orders.insert(h.order());
  s.chain_length = max_chain_length(lat);

  if (s.abelian && s.order > 1 && s.factorization.size() == 1 && is_prime(s.exponent))
    s.elementary_rank = s.factorization.begin()->second;

  if (!s.abelian && s.factorization.size() == 2 && s.factorization.begin()->second == 1 &&
      s.factorization.rbegin()->second == 1) {
    auto a = s.factorization.begin()->first, b = s.factorization.rbegin()->first;
    // The prime whose Sylow subgroup is normal goes first.
    if (s.normal_subgroup_orders.count(a))
      s.nonabelian_pq = {a, b};
    else
      s.nonabelian_pq = {b, a};
  }

  s.is_a4 = s.order == 12 && !s.abelian && center(q).order() == 1 && !s.element_orders.count(6);

  if (auto f = frobenius_shape(lat)) {
    FrobeniusInfo info;
    info.kernel_order = f->kernel.order();
    info.complement_order = f->complement_order;
    info.is_minimal = f->is_minimal;
    info.kernel_cyclic = subgroup_has_element_of_order(q, f->kernel, info.kernel_order);
    if (auto pk = prime_power(info.kernel_order); pk && is_abelian_subgroup(q, f->kernel)) {
      bool exp_p = true;
      f->kernel.members().for_each([&](std::size_t x) {
        if (x != 0 && q.element_order(static_cast<Element>(x)) != pk->first) exp_p = false;
      });
      if (exp_p) info.kernel_rank = pk->second;
    }
    info.complement_cyclic = s.element_orders.count(static_cast<std::uint32_t>(info.complement_order)) > 0;
    s.frobenius = info;
  }
  return s;
}

std::vector<Rat> lemma31_spectrum(std::uint64_t p, unsigned n) {
  if (!is_prime(p)) throw BadParams("p = " + std::to_string(p) + " is not prime");
  if (n < 2) throw BadParams("n must be at least 2");
  std::vector<Rat> out;
  BigInt P = big(p);
  auto pw = [&](unsigned k) { return BigInt(boost::multiprecision::pow(P, k)); };
  for (unsigned i = 0; i < n; ++i) out.emplace_back(pw(i) + P - 1, pw(i + 1));
  for (unsigned j = 2; j <= n; ++j)
    out.push_back(Rat(pw(j - 1) + P - 1, pw(j + 1)) + Rat(P - 1, pw(n)));
  return as_set(out);
}

std::vector<Rat> lemma32_spectrum(std::uint64_t p, unsigned m, unsigned n) {
  if (!is_prime(p)) throw BadParams("p = " + std::to_string(p) + " is not prime");
  if (m < 1 || m > n) throw BadParams("need 1 <= m <= n");
  std::vector<Rat> out;
  BigInt P = big(p);
  auto pw = [&](unsigned k) { return BigInt(boost::multiprecision::pow(P, k)); };
  for (unsigned i = 0; i <= n; ++i) out.emplace_back(pw(m) + pw(i) - 1, pw(m + i));
  return as_set(out);
}

std::vector<Rat> predicted_spectrum(CaseTag const& t) {
  auto two_primes = [&] {
    auto p = need_prime(t.p, "p"), q = need_prime(t.q, "q");
    if (p == q) throw BadParams("p and q must be distinct");
    return std::pair{big(p), big(q)};
  };
  auto r = [](BigInt a, BigInt b) { return Rat(std::move(a), std::move(b)); };

  switch (t.kind) {
    case Case::T3_i: {
      BigInt p = big(need_prime(t.p, "p"));
      return as_set({1, r(2 * p - 1, p * p), r(p * p + p - 1, p * p * p)});
    }
    case Case::T3_ii: {
      auto [p, q] = two_primes();
      return as_set({1, r(p + q - 1, p * q), r(p + q * q - 1, p * q * q)});
    }
    case Case::T4_i: {
      BigInt p = big(need_prime(t.p, "p"));
      BigInt p2 = p * p, p3 = p2 * p;
      return as_set({1, r(p2 + p - 1, p3), r(2 * p2 - 1, p2 * p2), r(p2 + p3 - 1, p3 * p2)});
    }
    case Case::T4_ii: {
      auto [p, q] = two_primes();
      BigInt p2 = p * p, q2 = q * q;
      return as_set({1, r(p + q - 1, p * q), r(p2 + q - 1, p2 * q), r(p2 + q2 - 1, p2 * q2)});
    }
    case Case::N5_i: {
      BigInt p = big(need_prime(t.p, "p"));
      BigInt p2 = p * p, p3 = p2 * p;
      return as_set({1, r(2 * p - 1, p2), r(p2 + p - 1, p3), r(3 * p - 2, p3), r(2 * p2 - 1, p2 * p2)});
    }
    case Case::N5_ii: {
      auto p = need_prime(t.p, "p");
      auto m = need(t.m, "m");
      if (m < 1 || m > 3) throw BadParams("m must be 1, 2 or 3");
      return lemma32_spectrum(p, static_cast<unsigned>(m), 4);
    }
    case Case::NN5_i: {
      auto [p, q] = two_primes();
      std::vector<Rat> v{1};
      BigInt qi = 1;
      for (int i = 1; i <= 4; ++i) {
        qi *= q;
        v.push_back(r(p + qi - 1, p * qi));
      }
      return as_set(v);
    }
    case Case::NN5_ii:
    case Case::NN5_iii: {
      auto [p, q] = two_primes();
      BigInt p2 = p * p, q2 = q * q;
      return as_set({1, r(p + q - 1, p * q), r(p2 + q - 1, p2 * q),
                     r(p2 + q2 + p * q - p - q, p2 * q2), r(p2 + q2 - 1, p2 * q2)});
    }
    case Case::NN5_iv_A4:
      return as_set({1, Rat::parse("7/12"), Rat::parse("1/2"), Rat::parse("3/8"), Rat::parse("7/24")});
    case Case::NN5_iv_pq: {
      auto [p, q] = two_primes();
      if (p < q) throw BadParams("needs p > q");
      BigInt p2 = p * p;
      // d(G) from |C(x)| = p|Z| for non-central p-elements and q|Z| for
      // q-elements; at p = 2, q = 3 it gives the 7/24 of the A4 case.
      return as_set({1, r(p2 + q - 1, p2 * q), r(p * q + p - 1, p2 * q),
                     r(p * q + p2 - 1, p2 * p * q), r(p * q * q + p2 - 1, p2 * p * q * q)});
    }
    case Case::NN5_v: {
      auto [p, q] = two_primes();
      BigInt p2 = p * p, p3 = p2 * p;
      return as_set({1, r(p + q - 1, p * q), r(p2 + q - 1, p2 * q), r(p3 + q - 1, p3 * q),
                     r(p3 + q * q - 1, p3 * q * q)});
    }
    case Case::L31:
      return lemma31_spectrum(need_prime(t.p, "p"), static_cast<unsigned>(need(t.n, "n")));
    case Case::L32:
      return lemma32_spectrum(need_prime(t.p, "p"), static_cast<unsigned>(need(t.m, "m")),
                              static_cast<unsigned>(need(t.n, "n")));
    case Case::Unclassified:
      break;
  }
  throw BadParams("Unclassified has no predicted spectrum");
}

std::vector<CaseTag> matching_cases(SubgroupLattice const& lattice) {
  auto const& g = lattice.group();
  auto shape = quotient_shape(g, g.order());
  std::vector<CaseTag> out;
  if (shape.order == 1) return out;

  if (auto pp = prime_power(shape.order)) {
    auto [p, k] = *pp;
    if (k == 2 && shape.elementary_rank == 2u) out.push_back(tag(Case::T3_i, p));
    if (k == 3) {
      bool abelian_max = has_abelian_maximal_subgroup(lattice);
      out.push_back(tag(abelian_max ? Case::N5_i : Case::T4_i, p));
    }
    if (k == 4) {
      auto sizes = class_sizes(g);
      if (sizes.size() == 2) {
        auto m = log_exact(*sizes.rbegin(), p);
        if (m >= 1 && m <= 3 && ipow(p, m) == *sizes.rbegin()) out.push_back(tag(Case::N5_ii, p, {}, m));
      }
    }
    return out;
  }

  if (shape.nonabelian_pq) out.push_back(tag(Case::T3_ii, shape.nonabelian_pq->first, shape.nonabelian_pq->second));

  if (!shape.frobenius) return out;
  auto const& f = *shape.frobenius;
  auto pk = prime_power(f.kernel_order);
  auto pc = prime_power(f.complement_order);
  if (!pk || !pc) return out;
  auto [p, kk] = *pk;
  auto [q, cc] = *pc;

  bool const rank2 = f.kernel_rank == 2u;
  bool const prime_complement = cc == 1;
  std::optional<bool> sylow_abelian;
  auto abelian_p = [&] {
    if (!sylow_abelian) sylow_abelian = sylow_is_abelian(lattice, p);
    return *sylow_abelian;
  };

  if (f.is_minimal && rank2 && abelian_p()) out.push_back(tag(Case::T4_ii, p, q));
  if (kk == 1 && cc == 2 && f.complement_cyclic) out.push_back(tag(Case::NN5_i, p, q));
  if (kk == 2 && f.kernel_cyclic && prime_complement) out.push_back(tag(Case::NN5_ii, p, q));
  if (rank2 && prime_complement && shape.normal_subgroup_orders.count(p) && abelian_p())
    out.push_back(tag(Case::NN5_iii, p, q));
  if (f.is_minimal && rank2 && !abelian_p()) {
    if (shape.is_a4)
      out.push_back(tag(Case::NN5_iv_A4, 2, 3));
    else if (p > q)
      out.push_back(tag(Case::NN5_iv_pq, p, q));
  }
  if (f.is_minimal && f.kernel_rank == 3u && abelian_p()) out.push_back(tag(Case::NN5_v, p, q));
  return out;
}

CaseTag classify(SubgroupLattice const& lattice) {
  auto cases = matching_cases(lattice);
  if (!cases.empty()) return cases.front();

  auto const& g = lattice.group();
  auto zbar = g.order() / center(g).order();
  if (auto pp = prime_power(zbar); pp && pp->second >= 2) {
    auto [p, n] = *pp;
    if (has_abelian_maximal_subgroup(lattice)) return tag(Case::L31, p, {}, {}, n);
    auto sizes = class_sizes(g);
    if (sizes.size() == 2) {
      auto top = *sizes.rbegin();
      auto m = log_exact(top, p);
      if (ipow(p, m) == top && m >= 1 && m <= n) return tag(Case::L32, p, {}, m, n);
    }
  }
  return {};
}

ClassificationReport verify_classification(SubgroupLattice const& lattice,
                                           SpectrumOptions const& opts) {
  return verify_classification(lattice, degree_spectrum(lattice, opts));
}

ClassificationReport verify_classification(SubgroupLattice const& lattice,
                                           DegreeSpectrum spectrum) {
  auto const& g = lattice.group();
  ClassificationReport rep;
  rep.name = g.name();
  rep.order = g.order();
  rep.center_order = center(g).order();
  rep.tag = classify(lattice);
  rep.computed = std::move(spectrum);
  if (rep.tag.kind != Case::Unclassified) {
    rep.predicted = predicted_spectrum(rep.tag);
    rep.verdict = rep.predicted == rep.computed.values ? Verdict::Match : Verdict::Mismatch;
  } else if (rep.computed.size() >= 2 && rep.computed.size() <= 5) {
    // Every group with at most five degrees falls under some case.
    rep.verdict = Verdict::Mismatch;
  }
  return rep;
}

}  // namespace relcomm
