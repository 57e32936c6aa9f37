"""From the vacuum module to U(g) and on into the oscillator algebra.

At a numeric level the degree-zero projection drops modes with an
alternating sign and reverses each monomial.  The determinant vector lands
exactly on the n-th power of the plain finite determinant.  Pushing further
through the quadratic realization, that power maps to zero as soon as the
matrix is 2 x 2 or larger, which is the reason the corresponding quotient
acts through oscillator representations.
"""

from affine_singular.determinants import DeterminantSpec, determinant_vector
from affine_singular.zhu import (finite_determinant, uenv_pow,
                                 verify_weyl_vanishing, verify_zhu_generator,
                                 weyl_image, zhu_project)


def show(spec):
    table = spec.table()
    print("-- %s at level %s --" % (spec.label(), spec.level))
    state = determinant_vector(table, spec).specialize(spec.level)
    projected = zhu_project(table, state)
    print("projection:", projected.text(table))
    print(verify_zhu_generator(spec).summary())
    power = uenv_pow(table, finite_determinant(table, spec), spec.n)
    image = weyl_image(table, power)
    print("oscillator image:", image if not image.is_zero else "0")
    print(verify_weyl_vanishing(spec).summary())
    print()


def main():
    show(DeterminantSpec("C", 2, 1, 2))
    show(DeterminantSpec("C", 2, 2, 1))
    show(DeterminantSpec("A", 4, 2, 1))


if __name__ == "__main__":
    main()
