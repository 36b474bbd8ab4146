"""Sample the first-extension structure: a few stabilized Ext^1 dimensions
in both category flavors, one assembled extension checked as an honest
module, and the quiver of the principal degenerate block.

    python3 demos/ext_tour.py
"""

from fractions import Fraction

from takiff import (Weight, assemble_extension, category_check,
                    check_relations, quiver, stabilize_ext)

PAIRS = [
    (Weight(0, 0), Weight(0, 0)),
    (Weight(0, 0), Weight(-2, 0)),
    (Weight(Fraction(1, 2), 0), Weight(Fraction(1, 2), 0)),
    (Weight(2, 0), Weight(-4, 0)),
    (Weight(2, 0), Weight(-2, 0)),
]

print("== stabilized Ext^1 dimensions ==\n")
for lam, mu in PAIRS:
    dims = {cat: stabilize_ext(lam, mu, cat).dim for cat in ("O", "Otilde")}
    print("  Ext^1(L%s, L%s):  O: %d   Otilde: %d"
          % (lam, mu, dims["O"], dims["Otilde"]))

print("\n== one extension, assembled and verified ==\n")
res = stabilize_ext(Weight(0, 0), Weight(-2, 0), "O", with_cocycles=True)
ext_mod = assemble_extension(res)
rep = check_relations(ext_mod)
print("  0 -> L(-2, 0) -> E -> L(0, 0) -> 0 at window %d" % res.window)
print("  slice dims: %s" % ext_mod.dims)
print("  relations: %s (%d checked)" % ("ok" if rep.passed else "FAILED",
                                        rep.checked))
print("  strict category flavor: %s" % category_check(ext_mod, "O"))

print("\n== quiver of the block of (0, 0), strict flavor ==\n")
print(quiver(Weight(0, 0), lo=-2, hi=2, category="O").to_dot())
