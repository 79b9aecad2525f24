#include "leibrack/corpus.hpp"

namespace leibrack::corpus {

LeibnizAlgebra abelian3() { return AlgebraBuilder("abelian3", 3).build(); }

LeibnizAlgebra leib2() { return AlgebraBuilder("leib2", 2).set(0, 0, 1, 1).build(); }

LeibnizAlgebra hs1() { return AlgebraBuilder("hs1", 2).set(1, 0, 0, 1).build(); }

LeibnizAlgebra heisenberg() {
    return AlgebraBuilder("heisenberg", 3).set_antisymmetric(0, 1, 2, 1).build();
}

LeibnizAlgebra free_nilpotent3() {
    return AlgebraBuilder("free_nilpotent3", 5)
        .set_antisymmetric(0, 1, 2, 1)
        .set_antisymmetric(0, 2, 3, 1)
        .set_antisymmetric(1, 2, 4, 1)
        .build();
}

LeibnizAlgebra sl2() {
    return AlgebraBuilder("sl2", 3)
        .basis_names({"h", "e", "f"})
        .set_antisymmetric(0, 1, 1, 2)
        .set_antisymmetric(0, 2, 2, -2)
        .set_antisymmetric(1, 2, 0, 1)
        .build();
}

LeibnizAlgebra hs1_nilpotentized() {
    auto line = AlgebraBuilder("line", 1).build();
    Matrix<Rational> n(2, 2);
    n(0, 1) = 1;
    return hemi_semi_direct(line, {n}, "hs1_nilpotentized");
}

std::vector<LeibnizAlgebra> bundled() {
    return {abelian3(), leib2(), hs1(), heisenberg(), free_nilpotent3(), sl2()};
}

std::vector<LeibnizAlgebra> all() {
    auto out = bundled();
    out.push_back(hs1_nilpotentized());
    return out;
}

std::string file_stem(const LeibnizAlgebra& alg) { return alg.name(); }

}  // namespace leibrack::corpus
