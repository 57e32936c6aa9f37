"""Classify the irreducible highest weight modules killed by the sp_6 ideal.

The 3 x 3 determinant generates, under the adjoint action, an 84-dimensional
module whose zero-weight vectors act on a highest weight vector through four
polynomials in the Cartan coordinates.  An irreducible survives in the
quotient exactly when all four vanish at its weight.  The zero locus comes
out as three parameter lines plus six isolated weights, all of level -1;
the checker recomputes everything and probes random off-locus weights as
negative controls.
"""

from affine_singular.category_o import classify_sp6


def main():
    report = classify_sp6(seed=7, controls=12)
    print(report.summary())
    details = report.details
    print("module dimension:", details["module_dimension"])
    print("zero weight dimension:", details["zero_weight_dimension"])
    print("classification polynomials:")
    for p in details["polynomials"]:
        print("   ", p)
    print("lines (parameter x):")
    for entry in details["lines"]:
        print("   %-18s finite weight (%s)  vanish: %s" % (
            entry["line"], ", ".join(entry["finite_weight"]),
            entry["all_polynomials_vanish"]))
    print("isolated weights:")
    for entry in details["points"]:
        print("   %-26s finite weight (%s)  vanish: %s" % (
            entry["weight"], ", ".join(entry["finite_weight"]),
            entry["all_polynomials_vanish"]))
    hits = sum(1 for c in details["negative_controls"] if c["violates"])
    print("off-locus controls violating some polynomial: %d/%d"
          % (hits, len(details["negative_controls"])))


if __name__ == "__main__":
    main()
