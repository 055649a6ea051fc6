"""Shared data for the three-variable parametric example with (border) = (xy, xz)."""

from bbk.exactmath import ParameterRing
from bbk.orderideal import OrderIdeal
from bbk.prebasis import Prebasis

G2_HEADS = [(1, 1, 0), (1, 0, 1)]
G3_HEADS = [(2, 1, 0), (2, 0, 1), (1, 2, 0), (1, 0, 2), (1, 1, 1)]
PARAM_NAMES = ([f"c_{{2,{j},{k}}}" for j in range(1, 3) for k in range(1, 5)]
               + [f"c_{{3,{j},{k}}}" for j in range(1, 6) for k in range(1, 6)])

# The 35 displayed conditions, transcribed with explicit "*".
DISPLAYED_CONDITIONS = """
c_{2,1,1}*c_{3,1,1}+c_{3,3,1}
c_{2,1,1}*c_{3,1,5}+c_{3,3,5}
c_{2,1,1}*c_{3,2,1}+c_{3,5,1}
c_{2,1,1}*c_{3,2,2}+c_{3,5,2}
c_{2,2,1}*c_{3,1,1}+c_{3,5,1}
c_{2,2,1}*c_{3,1,5}+c_{3,5,5}
c_{2,2,1}*c_{3,2,1}+c_{3,4,1}
c_{2,2,1}*c_{3,2,2}+c_{3,4,2}
-c_{2,1,1}*c_{3,2,1}+c_{2,2,1}*c_{3,1,1}
c_{2,1,1}*c_{3,1,2}-c_{2,1,2}+c_{3,3,2}
c_{2,1,1}*c_{3,2,3}-c_{2,1,2}+c_{3,5,3}
c_{2,1,1}*c_{3,1,3}-c_{2,1,3}+c_{3,3,3}
c_{2,1,1}*c_{3,2,4}-c_{2,1,3}+c_{3,5,4}
c_{2,1,1}*c_{3,1,4}-c_{2,1,4}+c_{3,3,4}
c_{2,1,1}*c_{3,2,5}-c_{2,1,4}+c_{3,5,5}
c_{2,2,1}*c_{3,1,2}-c_{2,2,2}+c_{3,5,2}
c_{2,2,1}*c_{3,2,3}-c_{2,2,2}+c_{3,4,3}
c_{2,2,1}*c_{3,1,3}-c_{2,2,3}+c_{3,5,3}
c_{2,2,1}*c_{3,2,4}-c_{2,2,3}+c_{3,4,4}
c_{2,2,1}*c_{3,1,4}-c_{2,2,4}+c_{3,5,4}
c_{2,2,1}*c_{3,2,5}-c_{2,2,4}+c_{3,4,5}
-c_{2,1,1}*c_{3,2,5}+c_{2,2,1}*c_{3,1,5}+c_{2,1,4}
-c_{2,1,1}*c_{3,2,2}+c_{2,2,1}*c_{3,1,2}-c_{2,2,2}
-c_{2,1,1}*c_{3,2,3}+c_{2,2,1}*c_{3,1,3}+c_{2,1,2}-c_{2,2,3}
-c_{2,1,1}*c_{3,2,4}+c_{2,2,1}*c_{3,1,4}+c_{2,1,3}-c_{2,2,4}
-c_{2,1,2}*c_{3,3,2}-c_{2,1,3}*c_{3,5,2}-c_{2,1,4}*c_{3,4,2}-c_{3,1,2}
-c_{2,1,2}*c_{3,3,3}-c_{2,1,3}*c_{3,5,3}-c_{2,1,4}*c_{3,4,3}-c_{3,1,3}
-c_{2,1,2}*c_{3,3,4}-c_{2,1,3}*c_{3,5,4}-c_{2,1,4}*c_{3,4,4}-c_{3,1,4}
-c_{2,1,2}*c_{3,3,5}-c_{2,1,3}*c_{3,5,5}-c_{2,1,4}*c_{3,4,5}-c_{3,1,5}
-c_{2,2,2}*c_{3,3,2}-c_{2,2,3}*c_{3,5,2}-c_{2,2,4}*c_{3,4,2}-c_{3,2,2}
-c_{2,2,2}*c_{3,3,3}-c_{2,2,3}*c_{3,5,3}-c_{2,2,4}*c_{3,4,3}-c_{3,2,3}
-c_{2,2,2}*c_{3,3,4}-c_{2,2,3}*c_{3,5,4}-c_{2,2,4}*c_{3,4,4}-c_{3,2,4}
-c_{2,2,2}*c_{3,3,5}-c_{2,2,3}*c_{3,5,5}-c_{2,2,4}*c_{3,4,5}-c_{3,2,5}
-c_{2,1,2}*c_{3,3,1}-c_{2,1,3}*c_{3,5,1}-c_{2,1,4}*c_{3,4,1}+c_{2,1,1}-c_{3,1,1}
-c_{2,2,2}*c_{3,3,1}-c_{2,2,3}*c_{3,5,1}-c_{2,2,4}*c_{3,4,1}+c_{2,2,1}-c_{3,2,1}
""".split()

# G_3 values for the family c_{2,1,1}=c_{2,1,4}=c_{2,2,1}=c_{2,2,2}=0,
# c_{2,1,2}=c_{2,2,3}, c_{2,1,3}=c_{2,2,4}; a = c_{2,2,3}, b = c_{2,2,4}.
G2_FAMILY = {"c_{2,1,1}": "0", "c_{2,1,4}": "0", "c_{2,2,1}": "0", "c_{2,2,2}": "0",
             "c_{2,1,2}": "c_{2,2,3}", "c_{2,1,3}": "c_{2,2,4}"}
G3_SOLUTION = {
    "c_{3,1,1}": "0", "c_{3,1,2}": "-c_{2,2,3}^2", "c_{3,1,3}": "-2*c_{2,2,3}*c_{2,2,4}",
    "c_{3,1,4}": "-c_{2,2,4}^2", "c_{3,1,5}": "0",
    "c_{3,2,1}": "0", "c_{3,2,2}": "0", "c_{3,2,3}": "-c_{2,2,3}^2",
    "c_{3,2,4}": "-2*c_{2,2,3}*c_{2,2,4}", "c_{3,2,5}": "-c_{2,2,4}^2",
    "c_{3,3,1}": "0", "c_{3,3,2}": "c_{2,2,3}", "c_{3,3,3}": "c_{2,2,4}", "c_{3,3,4}": "0", "c_{3,3,5}": "0",
    "c_{3,4,1}": "0", "c_{3,4,2}": "0", "c_{3,4,3}": "0", "c_{3,4,4}": "c_{2,2,3}", "c_{3,4,5}": "c_{2,2,4}",
    "c_{3,5,1}": "0", "c_{3,5,2}": "0", "c_{3,5,3}": "c_{2,2,3}", "c_{3,5,4}": "c_{2,2,4}", "c_{3,5,5}": "0",
}


def order_ideal():
    return OrderIdeal(3, [(1, 1, 0), (1, 0, 1)])


def param_ring():
    return ParameterRing(PARAM_NAMES)


def generic_prebasis(ring=None, g3_zero=False):
    """G_2, G_3 with the displayed sign: g = sigma + sum c_{i,j,k} tau, so stored tails are -c."""
    ring = ring or param_ring()
    O = order_ideal()
    tails = {}
    for j, s in enumerate(G2_HEADS, 1):
        tails[s] = [-ring.gen(f"c_{{2,{j},{k}}}") for k in range(1, 5)]
    for j, s in enumerate(G3_HEADS, 1):
        tails[s] = [ring.zero if g3_zero else -ring.gen(f"c_{{3,{j},{k}}}") for k in range(1, 6)]
    return Prebasis(O, tails, ring, 3)


def numeric_family(a, b, ring):
    """The solved family as a numeric prebasis in degrees 2 and 3."""
    vals = {"c_{2,2,3}": a, "c_{2,2,4}": b}
    pr = param_ring()
    full = {}
    for name in PARAM_NAMES:
        if name in vals:
            full[name] = pr.gen(name)
        elif name in G2_FAMILY:
            full[name] = pr.parse(G2_FAMILY[name])
        elif name in G3_SOLUTION:
            full[name] = pr.parse(G3_SOLUTION[name])
        else:
            full[name] = pr.gen(name)
    numeric = {n: p.evaluate(vals, ring) for n, p in full.items()}
    O = order_ideal()
    tails = {}
    for j, s in enumerate(G2_HEADS, 1):
        tails[s] = [-numeric[f"c_{{2,{j},{k}}}"] for k in range(1, 5)]
    for j, s in enumerate(G3_HEADS, 1):
        tails[s] = [-numeric[f"c_{{3,{j},{k}}}"] for k in range(1, 6)]
    return Prebasis(O, tails, ring, 3)
