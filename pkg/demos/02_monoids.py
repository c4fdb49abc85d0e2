"""Fine monoids: presentations, saturation, faces, pushouts.

Run with:  python3 demos/02_monoids.py
"""

import logmonoid.exact_lattice as xl
import logmonoid.log_hom_analysis as lha
import logmonoid.monoid_core as mc


def show(label, monoid):
    gens = sorted(g.as_vector() for g in monoid.generators)
    amb = monoid.ambient
    tor = list(amb.invariant_factors)
    print(f"{label}: Z^{amb.free_rank}"
          + (f" + Z/{tor}" if tor else "") + f" gens {gens}")


def main():
    print("== From a presentation to an affine monoid ==")
    cusp = mc.MonoidPresentation(2, (((2, 0), (0, 3)),))
    group, images = mc.grothendieck_group(cusp)
    print(f"<a, b | 2a = 3b>  has group Z^{group.free_rank}, "
          f"a -> {images[0].as_vector()}, b -> {images[1].as_vector()}")
    numerical = mc.integralize(cusp)
    show("integralization", numerical)
    show("saturation     ", mc.saturate(numerical))
    print()

    print("== Units and sharpening ==")
    halfline = mc.AffineMonoid.from_vectors([(1, 0), (-1, 0), (0, 1)])
    print(f"units of Z x N: {sorted(u.as_vector() for u in mc.units(halfline))}")
    show("sharpening     ", mc.sharpen(halfline))
    print()

    print("== The spectrum is the face lattice ==")
    plane = mc.free_monoid(2)
    for prime in mc.spec(plane):
        print(f"  prime with complement face {list(prime.sorted_indices())}")
    print()

    print("== The Kummer pushout: fine vs fs ==")
    base = mc.free_monoid(1)
    doubling = lha.MonoidHom(base, mc.free_monoid(1), xl.intmat([[2]]))
    res = mc.pushout_with_maps(doubling, doubling)
    fine = res.monoid
    show("fine pushout   ", fine)
    print(f"contains the torsion unit (0,1)?  {fine.contains((0, 1))}")
    fs = mc.saturate(fine)
    show("fs pushout     ", fs)
    print(f"contains the torsion unit (0,1)?  {fs.contains((0, 1))}")
    print("(saturation restores exactly the one missing element)")


if __name__ == "__main__":
    main()
