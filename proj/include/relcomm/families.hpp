#pragma once

#include <cstddef>
#include <cstdint>

#include "relcomm/group.hpp"

namespace relcomm {

// Element k is the k-th power of a fixed generator.
FiniteGroup cyclic(std::size_t n);

// Order 2n: r^k has index k, r^k s has index n + k.
FiniteGroup dihedral(std::size_t n);

// Order 4n: <a, x | a^{2n} = 1, x^2 = a^n, x a x^-1 = a^-1>; a^k x^e has
// index k + 2n e. dicyclic(2) is Q8.
FiniteGroup dicyclic(std::size_t n);

// (C_p)^rank, index = sum a_i p^i.
FiniteGroup elementary_abelian(std::uint64_t p, unsigned rank);

// Upper unitriangular 3x3 matrices over F_p; (a,b,c) = [[1,a,c],[0,1,b],[0,0,1]]
// has index a + p b + p^2 c. heisenberg(2) is D8.
FiniteGroup heisenberg(std::uint64_t p);

// 2x2 matrices of determinant 1 over F_3, identity first.
FiniteGroup sl23();

FiniteGroup symmetric(std::size_t n);
FiniteGroup alternating(std::size_t n);

}  // namespace relcomm
