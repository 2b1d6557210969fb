"""Tour of the local invariants of a single plane curve germ.

Takes the cusp y^2 = x^3 and the tacnode y^2 = x^4 through the whole
local pipeline: branch parametrizations, blow-up resolution, value
semigroup, motivic zeta series and its counting specialization.
"""

from curveinv import (CurveGerm, counting_specialization, local_zeta,
                      poincare_series, puiseux_branches, resolve_germ,
                      value_semigroup)


def fmt(coeffs):
    terms = []
    for i, c in enumerate(coeffs):
        if c == "0":
            continue
        if i == 0:
            terms.append(c)
        elif i == 1:
            terms.append("t" if c == "1" else "%s*t" % c)
        else:
            terms.append("t^%d" % i if c == "1" else "%s*t^%d" % (c, i))
    return " + ".join(terms).replace("+ -", "- ") if terms else "0"


def show(text):
    g = CurveGerm.from_string(text)
    print("=" * 60)
    print("germ: %s = 0" % text)

    branches = puiseux_branches(g, 8)
    print("branches: %d" % len(branches))
    for b in branches:
        j = b.to_json()
        print("  x(t) = %s + ...,  y(t) = %s + ..."
              % (fmt(j["x"]), fmt(j["y"])))

    proc = resolve_germ(g)
    print("blow-ups to normal crossings: %d, multiplicities %s"
          % (proc.N, proc.multiplicities))

    vs = value_semigroup(g)
    print("delta = %d, conductor = %s" % (vs.delta, list(vs.conductor)))
    if vs.generators is not None:
        print("value semigroup generated by %s" % vs.generators)
    else:
        print("semigroup members up to the conductor box: %s"
              % vs.box_members())

    z = local_zeta(g)
    print("zeta coefficients (t^n : class):")
    for n in sorted(z.joint.terms):
        print("  %s : %s" % (list(n), z.joint.terms[n].to_str()))

    pg = poincare_series(z)
    print("Poincare series = L^-%d * zeta; first diagonal terms:" % (z.delta + 1))
    for n in sorted(pg.diagonal().terms)[:4]:
        print("  %s : %s" % (list(n), pg.diagonal().terms[n].to_str()))

    spec = counting_specialization(z.single, 3)
    print("counting specialization at q = 3: %s"
          % [str(c) for c in spec.coefficient_list()])
    print()


if __name__ == "__main__":
    show("y^2 - x^3")
    show("y^2 - x^4")
