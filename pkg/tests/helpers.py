import math

from edgecert.constructions import ht_edges
from edgecert.multigraph import build


def h1_closed_form_spectrum(d):
    root = math.sqrt(9 * d * d - 10 * d + 17)
    return sorted(
        [d, (d - 1 + root) / 4, (d - 1 - root) / 4, -(d + 1) / 2, -(d + 1) / 2, -(d - 3) / 2],
        reverse=True,
    )


def ht_unchecked(d, t):
    """``Ht`` edges without the builder's ``t < d - 1`` guard (e.g. d=3,t=2 or d=5,t=4)."""
    return build(4, ht_edges(d, t))


def ht32():
    # the d=3, t=2 member that the Ht builder rejects: two double edges joined by a 2-edge cut
    return build(4, [(0, 1, 2), (2, 3, 2), (0, 2, 1), (1, 3, 1)])
