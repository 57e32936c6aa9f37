"""The symbolic form of the failed annihilation.

Keeping the level k as a polynomial variable, the lowest root vector at
mode 1 sends det^n |0> to

    beta * n * (k - distinguished level) * minor(1,1) * det^(n-1) |0>

with beta the form pairing of the two extreme root vectors (-4 for the
symplectic family, 1 for the special linear one).  The vanishing of the
linear factor is then visibly equivalent to singularity.
"""

from affine_singular.determinants import (DeterminantSpec, determinant_vector,
                                          lowering_factor_check)
from affine_singular.vacuum import apply_generator


def show(spec):
    table = spec.table()
    print("-- %s --" % spec.label())
    image = apply_generator(table, table.theta_lowering, 1,
                            determinant_vector(table, spec))
    print("x_-theta(1) det^%d |0> =" % spec.n, image.text(table))
    report = lowering_factor_check(spec)
    print(report.summary())
    for key, value in sorted(report.parameters.items()):
        print("  %s = %s" % (key, value))
    for note in report.notes:
        print("  note:", note)
    print()


def main():
    show(DeterminantSpec("C", 2, 1, 1))
    show(DeterminantSpec("C", 2, 2, 2))
    show(DeterminantSpec("A", 2, 1, 2))
    show(DeterminantSpec("A", 4, 2, 1))


if __name__ == "__main__":
    main()
