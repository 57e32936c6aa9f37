"""Build determinant vectors in the vacuum module and test singularity.

The m x m matrix of commuting root vectors is expanded by the Leibniz rule,
every entry placed at mode -1, and the n-th power applied to the vacuum.
The resulting vector is annihilated by the simple raising operators at mode
0 always, and by the lowest root vector at mode 1 exactly at one level that
depends on (m, n).
"""

from affine_singular.determinants import (DeterminantSpec, build_matrix,
                                          determinant_vector, verify_singular)
from affine_singular.vacuum import state_weight


def show(spec):
    table = spec.table()
    print("-- %s --" % spec.label())
    mat = build_matrix(table, spec)
    for row in mat:
        print("   [ " + "  ".join("%-9s" % table.text(x) for x in row) + " ]")
    state = determinant_vector(table, spec)
    print("vector:", state.text(table))
    print("weight:", tuple(int(c) for c in state_weight(table, state)))
    print("distinguished level:", spec.level)
    good = verify_singular(spec)
    print(good.summary())
    bad = verify_singular(spec, level=spec.level + 1)
    print(bad.summary())
    print("  failing operator:", bad.witness["operator"])
    print("  residual:", bad.witness["residual"])
    print()


def main():
    show(DeterminantSpec("C", 2, 2, 1))
    show(DeterminantSpec("C", 3, 3, 1))
    show(DeterminantSpec("A", 4, 2, 1))


if __name__ == "__main__":
    main()
