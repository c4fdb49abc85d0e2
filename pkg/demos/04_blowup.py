"""Blowing up a monoid along an ideal: charts and the chart fan.

Run with:  python3 demos/04_blowup.py
"""

import logmonoid.log_ideal_blowup as lib
import logmonoid.monoid_core as mc


def show(label, monoid):
    print(f"  {label}: gens "
          f"{sorted(g.as_vector() for g in monoid.generators)}")


def main():
    print("== The plane blown up at the origin ==")
    plane = mc.free_monoid(2)
    ideal = lib.maximal_ideal(plane)
    print(f"ideal generators: "
          f"{sorted(g.as_vector() for g in ideal.generators)}")
    print(f"invertible already? {lib.is_invertible(ideal)}")
    for chart in lib.blowup_charts(plane, ideal):
        print(f"chart centered at {chart.center.as_vector()}:")
        show("fine chart", chart.fine)
        show("fs chart  ", chart.fs)
        pulled = lib.pulled_ideal(chart.fine, ideal)
        print(f"  pulled-back ideal principal: {lib.is_invertible(pulled)}")
    print(f"blowing up again changes nothing: "
          f"{lib.blowup_is_idempotent(plane, ideal)}")
    print()

    print("== The chart fan ==")
    fan = lib.blowup_fan(plane, ideal)
    for cone in fan.maximal_cones:
        print(f"  cone{sorted(cone.extreme_rays)}")
    print("(the quadrant split along the diagonal: the exceptional ray)")
    print()

    print("== A singular example: three charts, two fan cones ==")
    a1 = mc.AffineMonoid.from_vectors([(1, 0), (1, 1), (1, 2)])
    ideal = lib.maximal_ideal(a1)
    charts = lib.blowup_charts(a1, ideal)
    print(f"{len(charts)} charts; the middle one has units "
          f"{sorted(u.as_vector() for u in mc.units(charts[1].fs))}")
    fan = lib.blowup_fan(a1, ideal)
    print(f"{len(fan.maximal_cones)} maximal cones in the blowup fan "
          f"(the unit-bearing chart covers no full-dimensional region)")


if __name__ == "__main__":
    main()
