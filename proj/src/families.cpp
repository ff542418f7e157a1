#include "relcomm/families.hpp"

#include <array>
#include <numeric>

#include "relcomm/errors.hpp"
#include "relcomm/number_theory.hpp"

namespace relcomm {

namespace {

void require(bool ok, char const* what) {
  if (!ok) throw InputError(what);
}

}  // namespace

FiniteGroup cyclic(std::size_t n) {
  require(n >= 1 && n <= kDefaultOrderCap * 64, "cyclic order out of range");
  std::vector<Element> t(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a * n + b] = static_cast<Element>((a + b) % n);
  return FiniteGroup::unchecked(n, std::move(t), "C" + std::to_string(n));
}

FiniteGroup dihedral(std::size_t n) {
  require(n >= 1, "dihedral needs n >= 1");
  std::size_t const m = 2 * n;
  std::vector<Element> t(m * m);
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y) {
      std::size_t i = x % n, e = x / n, j = y % n, f = y / n;
      std::size_t k = e ? (i + n - j) % n : (i + j) % n;
      t[x * m + y] = static_cast<Element>(k + n * ((e + f) % 2));
    }
  return FiniteGroup::unchecked(m, std::move(t), "D" + std::to_string(m));
}

FiniteGroup dicyclic(std::size_t n) {
  require(n >= 1, "dicyclic needs n >= 1");
  std::size_t const r = 2 * n, m = 4 * n;
  std::vector<Element> t(m * m);
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y) {
      std::size_t i = x % r, e = x / r, j = y % r, f = y / r;
      std::size_t k, g;
      if (!e) {
        k = (i + j) % r;
        g = f;
      } else {
        // a^i x a^j x^f = a^{i-j} x^{1+f}
        k = (i + r - j) % r;
        g = 1 + f;
        if (g == 2) {
          k = (k + n) % r;
          g = 0;
        }
      }
      t[x * m + y] = static_cast<Element>(k + r * g);
    }
  return FiniteGroup::unchecked(m, std::move(t), "Dic" + std::to_string(m));
}

FiniteGroup elementary_abelian(std::uint64_t p, unsigned rank) {
  require(is_prime(p), "elementary abelian needs a prime");
  std::size_t const n = ipow(p, rank);
  require(n <= kDefaultOrderCap * 64, "elementary abelian order out of range");
  std::vector<Element> t(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      std::size_t r = 0, place = 1, x = a, y = b;
      for (unsigned k = 0; k < rank; ++k) {
        r += ((x % p + y % p) % p) * place;
        x /= p;
        y /= p;
        place *= p;
      }
      t[a * n + b] = static_cast<Element>(r);
    }
  std::string name = "C" + std::to_string(p) + "^" + std::to_string(rank);
  return FiniteGroup::unchecked(n, std::move(t), name);
}

FiniteGroup heisenberg(std::uint64_t p) {
  require(is_prime(p), "heisenberg needs a prime");
  std::size_t const n = p * p * p;
  std::vector<Element> t(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      std::size_t a = x % p, b = (x / p) % p, c = x / (p * p);
      std::size_t a2 = y % p, b2 = (y / p) % p, c2 = y / (p * p);
      std::size_t ra = (a + a2) % p, rb = (b + b2) % p, rc = (c + c2 + a * b2) % p;
      t[x * n + y] = static_cast<Element>(ra + p * rb + p * p * rc);
    }
  return FiniteGroup::unchecked(n, std::move(t), "Heis" + std::to_string(p));
}

FiniteGroup sl23() {
  using M = std::array<int, 4>;  // row-major a b / c d
  std::vector<M> elems{{1, 0, 0, 1}};
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c)
        for (int d = 0; d < 3; ++d) {
          M m{a, b, c, d};
          if (((a * d - b * c) % 3 + 3) % 3 == 1 && m != elems[0]) elems.push_back(m);
        }
  auto mulm = [](M const& x, M const& y) {
    return M{(x[0] * y[0] + x[1] * y[2]) % 3, (x[0] * y[1] + x[1] * y[3]) % 3,
             (x[2] * y[0] + x[3] * y[2]) % 3, (x[2] * y[1] + x[3] * y[3]) % 3};
  };
  std::size_t const n = elems.size();
  std::vector<Element> t(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      auto prod = mulm(elems[i], elems[j]);
      for (std::size_t k = 0; k < n; ++k)
        if (elems[k] == prod) t[i * n + j] = static_cast<Element>(k);
    }
  return FiniteGroup::unchecked(n, std::move(t), "SL(2,3)");
}

FiniteGroup symmetric(std::size_t n) {
  require(n >= 1 && n <= 6, "symmetric degree must be in 1..6");
  std::vector<Permutation> gens;
  if (n >= 2) {
    Permutation cyc(n);
    std::iota(cyc.begin(), cyc.end(), 1u);
    cyc[n - 1] = 0;
    gens.push_back(std::move(cyc));
    gens.push_back(perm_from_cycles(n, {{0, 1}}));
  }
  return build_perm_group(n, gens, kDefaultOrderCap, "S" + std::to_string(n));
}

FiniteGroup alternating(std::size_t n) {
  require(n >= 1 && n <= 6, "alternating degree must be in 1..6");
  std::vector<Permutation> gens;
  for (std::uint32_t k = 2; k < n; ++k) gens.push_back(perm_from_cycles(n, {{0, 1, k}}));
  return build_perm_group(n, gens, kDefaultOrderCap, "A" + std::to_string(n));
}

}  // namespace relcomm
