"""Copies of K3,3 glued along two nonadjacent vertices.

Each copy contributes two cycles with odd intersection; cycles from different
copies that avoid each other give zeros above the diagonal, so the matrix is
unit lower triangular and has full rank t.
"""

from z2lab.certify import UnrealizableError, amalgam_certificate, wing_cycle_pairs
from z2lab.corpus import load_drawing
from z2lab.crosscap import CrosscapDrawing
from z2lab.families import amalgam, k33

for t in (2, 3):
    d = load_drawing(f"amalg-k33-{t}")
    am = amalgam(k33(), 0, 1, t)
    for c in range(t):
        p = wing_cycle_pairs(d, am, c)
        print(f"t={t} copy {c}: {p.placement} pair, edges {p.edges}, placement ok: {p.placement_ok}")
    print(amalgam_certificate(d, am).to_text())

am = amalgam(k33(), 0, 1, 2)
try:
    amalgam_certificate(CrosscapDrawing.zero(am.graph, 2), am)
except UnrealizableError as exc:
    print(f"all-zero datum rejected: {exc}")
