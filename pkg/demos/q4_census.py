"""
A census of the order-4 codes
=============================

Every graph of an order-4 Latin square, classified: semilinear or not, and
isotopically transitive or not. The one standard code that fails, and the
pair code that was expected to fail but does not.
"""

from collections import Counter

from topolinear import is_isotopically_transitive, is_topolinear
from topolinear.classify_q4 import (all_latin_squares, classify, code_h,
                                    semilinearity_test,
                                    standard_semilinear_code)
from topolinear.codes import NAryQuasigroup, graph_of
from topolinear.isometry import autotopism_search

# the full length-3 census: all 576 squares
buckets = Counter()
for table in all_latin_squares(4):
    v = classify(graph_of(NAryQuasigroup(table)))
    buckets[(v.semilinear, v.transitive)] += 1
for (semi, trans), count in sorted(buckets.items()):
    print(f"semilinear={semi} transitive={trans}: {count} squares")

# length 4: the four standard forms, r a function of the binary x-parts
for name, monomials in [("0", []), ("x1x2", [(0, 1)]),
                        ("x1x2+x3x4", [(0, 1), (2, 3)]),
                        ("x1x2x3", [(0, 1, 2)])]:
    M = standard_semilinear_code(4, monomials)
    v = classify(M)
    print(f"r = {name}: degree {v.degree}, transitive = {v.transitive}")

# degree 3 is the wall: the cubic code has a word no symmetry can reach
cubic = standard_semilinear_code(4, [(0, 1, 2)])
res = is_isotopically_transitive(cubic, method="pinned")
print(f"cubic code unreachable word: {res.failing_word}")

# the pair code: two order-4 group tables with the same identity glued along
# their values; not semilinear, yet its symmetry group is sharply transitive
H = code_h()
print("pair code semilinear:", semilinearity_test(H) is not None)
group = list(autotopism_search(H))
orbit = {g.apply_word((0, 0, 0, 0)) for g in group}
print(f"pair code symmetries: {len(group)}, orbit {len(orbit)} of {len(H)}")
print("pair code topolinear:", is_topolinear(H).status)
