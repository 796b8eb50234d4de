"""
G-loops and principal isotopes
==============================

A loop is a G-loop when every principal isotope is isomorphic to it. Groups
always qualify; the twisted loop does too, which is what makes its graph code
transitive. A patched order-6 table shows the property genuinely failing.
"""

from topolinear import (cyclic_loop, find_non_g_loop_order6, is_g_loop,
                        make_cp, make_dihedral, principal_isotope)
from topolinear.loops import loop_isomorphic

for name, loop in [("C3", make_cp(3)), ("C5", make_cp(5)),
                   ("Z6", cyclic_loop(6)), ("D3", make_dihedral(3)),
                   ("D5", make_dihedral(5))]:
    print(f"{name}: g-loop = {bool(is_g_loop(loop))}")

# the twisted loop is not a group, so its verdict is not the trivial one
L = make_cp(3)
t = L.table
assoc = all(t[t[x][y]][z] == t[x][t[y][z]]
            for x in range(6) for y in range(6) for z in range(6))
print(f"C3 associative: {assoc}")

# a loop built to fail: one principal isotope falls out of the isomorphism class
bad = find_non_g_loop_order6()
verdict = is_g_loop(bad)
a, b, iso = verdict.counterexample
print(f"patched order-6 loop: g-loop = {bool(verdict)}, "
      f"counterexample at (a, b) = ({a}, {b})")
print("replayed:", loop_isomorphic(bad, principal_isotope(bad, a, b)) is None)
