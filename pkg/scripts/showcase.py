#!/usr/bin/env python3
"""Walk through the package's main results on small concrete inputs.

Prints, for dimensions 1..3: the sign decomposition of a random measure,
universality decisions with verified counterexamples, the unconditional
degree criterion, a zonotope study, and the lifting transfer.  Everything
is exact; no floating point appears anywhere in the output.
"""

from fractions import Fraction

from multconv import (
    GeneratingPair,
    Measure,
    SubsetMask,
    Zonotope,
    all_subsets,
    decide_d_universal,
    decide_universal_rn,
    decide_universal_sphere,
    delta_j,
    gen_measure,
    generating_measure,
    lift,
    lift_class,
    mconv,
    munc,
    radial_project,
    sigma0,
    support_function,
)

F = Fraction


def show_measure(label, mu):
    parts = ", ".join(
        f"{tuple(str(c) for c in pt)} -> {w}" for pt, w in sorted(mu.atoms.items())
    )
    print(f"  {label}: {parts if parts else '0'}")


def section(title):
    print()
    print(f"== {title} ==")


def main():
    section("sign decomposition")
    nu = gen_measure(2024, 2, 4)
    show_measure("nu", nu)
    for j in all_subsets(2):
        term = mconv(delta_j(2, j), nu)
        if term:
            show_measure(f"parity component J={j}", term)

    section("universality of the alternating grid")
    for n in (1, 2, 3):
        rep = decide_universal_rn(sigma0(n), [SubsetMask.full(n)], GeneratingPair.make(n))
        print(f"  n={n}: universal on the top-order class: {rep.universal}")

    section("a symmetric pair of atoms")
    pm = Measure.dirac([F(1)]) + Measure.dirac([F(-1)])
    full = SubsetMask.full(1)
    rep = decide_universal_rn(pm, [full], GeneratingPair.make(1))
    print(f"  without prescribed symmetry: universal = {rep.universal}")
    show_measure("verified counterexample", rep.witness)
    rep = decide_universal_rn(pm, [full], GeneratingPair.make(1, evens=[full]))
    print(f"  on the even class: universal = {rep.universal}")

    section("unconditional degree criterion")
    for seed in (1, 2, 3):
        nu = gen_measure(seed, 2, 3)
        rep = decide_universal_rn(
            nu, [SubsetMask.full(2)], GeneratingPair.make(2, evens=list(all_subsets(2)))
        )
        print(
            f"  seed {seed}: degree of orthant average = {munc(nu).degree()},"
            f" universal on unconditional top-order class = {rep.universal}"
        )

    section("zonotopes")
    cube = Zonotope.cube(2)
    nu = generating_measure(cube)
    print(f"  square support function at (1,1): {support_function(nu, (1, 1))}")
    print(f"  square D-universal: {decide_d_universal(nu).universal}")
    skew = Zonotope.make(2, [(1, 2), (2, 1), (1, -1)])
    nu = generating_measure(skew)
    print(f"  generic zonotope unconditionally D-universal: "
          f"{decide_d_universal(nu, unconditional=True).universal}")

    section("lifting transfer")
    mu = gen_measure(7, 2, 3)
    pair = GeneratingPair.make(2)
    support = [SubsetMask.full(2)]
    below = decide_universal_rn(mu, support, pair).universal
    lifted_support, lifted_pair = lift_class(support, pair)
    above = decide_universal_sphere(lift(mu), lifted_support, lifted_pair).universal
    print(f"  decision below: {below}; decision for the lift one dimension up: {above}")
    print(f"  lift atom count: {lift(mu).atom_count()} (two antipodal rays per atom)")
    print(f"  radial projection mass of mu: {radial_project(mu).total_mass()}")


if __name__ == "__main__":
    main()
