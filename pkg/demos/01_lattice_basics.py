"""Exact integer linear algebra: the layer everything else stands on.

Run with:  python3 demos/01_lattice_basics.py
"""

import logmonoid.exact_lattice as xl


def main():
    print("== Smith normal form ==")
    a = [[2, 4, 4], [-6, 6, 12], [10, 4, 16]]
    dec = xl.smith_normal_form(a)
    print(f"matrix        {a}")
    print(f"invariants    {[int(d) for d in dec.diag]}")
    print("left/right are unimodular; left @ a @ right is the diagonal\n")

    print("== Kernels are saturated ==")
    k = xl.kernel_basis([[2, -2, 0], [0, 3, -3]])
    vectors = [tuple(int(k[i, j]) for i in range(k.shape[0]))
               for j in range(k.shape[1])]
    print(f"kernel of [[2,-2,0],[0,3,-3]] has basis {vectors}")
    print("(the primitive (1,1,1), not a multiple of it)\n")

    print("== Finitely generated abelian groups ==")
    group, proj = xl.group_from_relations(2, [(2, -2)])
    print(f"Z^2 modulo (2,-2)  ->  free rank {group.free_rank}, "
          f"torsion {list(group.invariant_factors)}")
    print(f"projection matrix rows: {proj.tolist()}\n")

    print("== Complete nonnegative Diophantine solving ==")
    a = [[3, 5, 7]]
    sols = xl.minimal_nonneg_solutions(a)
    print(f"minimal solutions of 3x + 5y + 7z = 0 ... trivial: {sols}")
    a = [[3, 5, -7]]
    sols = sorted(xl.minimal_nonneg_solutions(a))
    print(f"minimal solutions of 3x + 5y = 7z: {[list(s) for s in sols]}")
    one = xl.solve_nonneg([[3], [5]], [12, 20])
    print(f"lex-smallest nonnegative solution of 3x=12, 5x=20: {list(one)}")


if __name__ == "__main__":
    main()
