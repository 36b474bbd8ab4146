"""Walk through the structure of one degenerate Verma module, Delta(4, 0):
its character, composition multiplicities, the uniserial quotient M_4, and
the diagram of its standard submodules.

    python3 demos/structure_tour.py
"""

from takiff import (Weight, character, hasse_diagram, mn_filtration,
                    multiplicities, verma)

TOP = Weight(4, 0)
DEPTH = 10

print("== Verma module with top %s, window depth %d ==\n" % (TOP, DEPTH))
delta = verma(TOP, DEPTH)
ch = character(delta)
print("character (depth: dimension):")
for d in range(DEPTH + 1):
    print("  %2d: %d" % (d, ch.dim_at(d)))

print("\ncomposition multiplicities by peeling:")
table = multiplicities(ch)
for k, m in sorted(table.entries.items()):
    print("  [L%s] appears %d time(s)" % (TOP.down(k), m))

print("\nuniserial quotient M_4 = Delta / <f^5 v>:")
fr = mn_filtration(TOP)
for i, layer in enumerate(fr.layers):
    print("  layer %d: simple with top %s" % (i, layer.top))
print("  uniserial: %s" % fr.uniserial)
for key, val in fr.certificate.items():
    print("    %s: %s" % (key, val))

print("\nsubmodule diagram (graphviz):\n")
print(hasse_diagram(TOP).to_dot())
