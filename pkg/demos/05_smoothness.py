"""Homomorphisms of monoids: smoothness, Kummer maps, differentials.

Run with:  python3 demos/05_smoothness.py
"""

import logmonoid.exact_lattice as xl
import logmonoid.log_hom_analysis as lha
import logmonoid.monoid_core as mc


def hom(src, dst, rows):
    return lha.MonoidHom(src, dst, xl.intmat(rows, ncols=src.ambient.lift_dim))


def main():
    n1, n2 = mc.free_monoid(1), mc.free_monoid(2)

    print("== The chart criterion on the nodal chart N -> N^2, 1 -> (2,2) ==")
    nodal = hom(n1, n2, [[2], [2]])
    for p in (0, 2, 3):
        v = lha.kato_criterion(nodal, residue_char=p)
        print(f"  residue char {p}: smooth={v.is_smooth} etale={v.is_etale}"
              f"  (cokernel Z^{v.gp_cokernel.free_rank}"
              f" + Z/{list(v.gp_cokernel.invariant_factors)})")
    print("the node is log smooth away from 2: the relation 2a=2b "
          "degenerates mod 2\n")

    print("== Kummer maps ==")
    tripling = hom(n1, n1, [[3]])
    print(f"N --3--> N is Kummer: {lha.is_kummer(tripling)}")
    rc = lha.relative_characteristic(tripling)
    print(f"relative characteristic: Z/{list(rc.ambient.invariant_factors)} "
          f"generated by {sorted(g.as_vector() for g in rc.generators)}")
    axis = hom(n1, n2, [[1], [0]])
    print(f"the axis inclusion N -> N^2 is Kummer: {lha.is_kummer(axis)}\n")

    print("== How local must a neat chart be? ==")
    for rows, label in ([[1], [0]], "axis (free cokernel)"), \
            ([[3]], "tripling (cokernel Z/3)"), ([[2]], "doubling (Z/2)"):
        h = hom(n1, n2 if len(rows) == 2 else n1, rows)
        verdicts = {p: lha.neat_chart_class(h, p) for p in (0, 2, 3)}
        print(f"  {label}: {verdicts}")
    print()

    print("== Universal log differentials of the nodal chart ==")
    pres = lha.universal_differential_presentation(nodal)
    rels = " , ".join(
        " + ".join(f"{c}*{s}" for c, s in zip(col, pres.symbols) if c)
        for col in pres.relation_columns)
    print(f"  symbols {pres.symbols} modulo [{rels}]")
    for p in (0, 2):
        print(f"  rank over a field of characteristic {p}: "
              f"{lha.differential_rank(nodal, p)}")


if __name__ == "__main__":
    main()
