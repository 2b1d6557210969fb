"""Counting ideals two ways: closed formula against brute enumeration.

For a germ over a prime field, the number of principal ideals whose
generator has value vector n is predicted by a Laurent polynomial in L
evaluated at L = q.  The oracle ignores the formula entirely: it
enumerates jets of ring elements, computes their values, groups them by
the ideal they generate, and counts.  The two must agree on every n.
"""

from curveinv import (CurveGerm, GF, brute_force_ideal_counts,
                      evaluate_motclass, ideal_class, value_semigroup)

CASES = [("y^2 - x^3", 2), ("y^2 - x^3", 3), ("x*y", 3), ("x^2*y + y^2", 2)]


def main():
    for text, q in CASES:
        germ = CurveGerm.from_string(text, GF(q))
        vs = value_semigroup(germ)
        bound = sum(vs.conductor) + 2
        counts = brute_force_ideal_counts(germ, bound)
        print("=" * 60)
        print("germ %s = 0 over F_%d, values up to total degree %d"
              % (text, q, bound))
        print("%-12s %8s %8s %10s %12s" % ("n", "ideals", "formula",
                                           "generators", "rays"))
        empty = 0
        for n in sorted(counts.ideals):
            predicted = evaluate_motclass(ideal_class(germ, n), q)
            assert predicted == counts.ideals[n], (n, predicted)
            # rays of generators: each ideal is hit by (q-1) scalar
            # multiples per projective generator class
            assert (q - 1) * counts.proj_fibers[n] == counts.fibers[n]
            if counts.ideals[n] == 0:
                empty += 1
                continue
            print("%-12s %8d %8s %10d %12d"
                  % (list(n), counts.ideals[n], str(predicted),
                     counts.fibers[n], counts.proj_fibers[n]))
        print("all %d value vectors agree with the formula "
              "(%d lie off the semigroup, both routes give 0)"
              % (len(counts.ideals), empty))


if __name__ == "__main__":
    main()
