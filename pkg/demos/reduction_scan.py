"""Which primes spoil the reduction of a rational germ?

The nodal cubic y^2 = x^3 + x^2 splits into two smooth branches over Q,
one tangent to y = x and one to y = -x.  Mod 2 the two tangent
directions collide and the equation turns into (y + x)^2 + x^3, a
sheared cusp: one branch instead of two, and a longer blow-up process.
The scans detect this both at the level of the resolution process and
of the value semigroup.
"""

from curveinv import (CurveGerm, good_reduction_scan,
                      reduction_semigroup_scan, value_semigroup)
from curveinv.curves import reduce_germ
from curveinv.fields import primes_in_range

TEXT = "y^2 - x^3 - x^2"


def main():
    germ = CurveGerm.from_string(TEXT)
    primes = primes_in_range(2, 31)
    print("germ over Q: %s = 0" % TEXT)

    vs = value_semigroup(germ)
    print("characteristic 0: %d branches, delta = %d, conductor = %s"
          % (vs.d, vs.delta, list(vs.conductor)))
    print()

    print("blow-up process scan over primes %d..%d:" % (primes[0], primes[-1]))
    proc_report = good_reduction_scan(germ, primes)
    for e in proc_report.entries:
        line = "  p = %2d  %s" % (e.prime, e.status)
        if e.detail:
            line += "  (%s)" % e.detail
        print(line)
    print("bad primes: %s" % proc_report.bad_primes)
    print()

    print("value semigroup scan over the same primes:")
    semi_report = reduction_semigroup_scan(germ, primes)
    for e in semi_report.entries:
        line = "  p = %2d  %s" % (e.prime, e.status)
        if e.detail:
            line += "  (%s)" % e.detail
        print(line)
    print("bad primes: %s" % semi_report.bad_primes)
    print()

    p = proc_report.bad_primes[0]
    vs_p = value_semigroup(reduce_germ(germ, p))
    print("closer look at p = %d: %d branch(es), delta = %d, conductor = %s"
          % (p, vs_p.d, vs_p.delta, list(vs_p.conductor)))
    print("the reduction mod %d is a unibranch germ with the numerical"
          " semigroup of a cusp," % p)
    print("while every good prime keeps the two-branch node data.")


if __name__ == "__main__":
    main()
