#ifndef LEIBRACK_CORPUS_HPP
#define LEIBRACK_CORPUS_HPP

#include <string>
#include <vector>

#include "leibrack/algebra.hpp"

namespace leibrack::corpus {

// R^3 with the zero bracket.
LeibnizAlgebra abelian3();
// [e1, e1] = e2. Leibniz, not Lie.
LeibnizAlgebra leib2();
// [e2, e1] = e1. Leibniz, not Lie, not nilpotent.
LeibnizAlgebra hs1();
// [e1, e2] = -[e2, e1] = e3.
LeibnizAlgebra heisenberg();
// Free nilpotent Lie algebra of class 3 on two generators:
// e3 = [e1, e2], e4 = [e1, e3], e5 = [e2, e3].
LeibnizAlgebra free_nilpotent3();
// [h, e] = 2e, [h, f] = -2f, [e, f] = h.
LeibnizAlgebra sl2();
// Hemi-semi-direct product of a line acting on R^2 by the nilpotent
// matrix [[0, 1], [0, 0]]: [e3, e2] = e1. Leibniz, not Lie, nilpotent.
LeibnizAlgebra hs1_nilpotentized();

// The six bundled algebras, in the order above.
std::vector<LeibnizAlgebra> bundled();
// bundled() plus hs1_nilpotentized().
std::vector<LeibnizAlgebra> all();

// File stem of the shipped JSON copy, e.g. "heisenberg".
std::string file_stem(const LeibnizAlgebra& alg);

}  // namespace leibrack::corpus

#endif
