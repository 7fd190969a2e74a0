"""Lower bounds for K3,t from a crosscap datum.

The shipped embeddings give upper bounds. Their crosscap data yield a
tournament matrix whose rank bounds the Euler Z2-genus from below, and the
two meet.
"""

from z2lab.certify import check_lemma_k33, k3t_certificate, k3t_pigeonhole
from z2lab.corpus import load_drawing, load_witness
from z2lab.embedding import euler_genus_of_scheme

for name in ("k34-projective", "k35-torus", "k36-torus"):
    d = load_drawing(name)
    t = d.graph.n - 3
    sums = {check_lemma_k33(d, i, j).sum for i in range(1, t) for j in range(1, t) if i != j}
    cert = k3t_certificate(d)
    upper = euler_genus_of_scheme(load_witness(name))
    print(f"== {name}: embedding has Euler genus {upper}, lemma sums {sums}")
    print(cert.to_text(), end="")
    print(k3t_pigeonhole(d).to_text())
