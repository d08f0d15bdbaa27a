"""Exact thermomajorization curves and efficient work reservoirs.

Probabilities and Gibbs weights are exact rationals: pass ints, strings
like "1/3" or fractions.Fraction, and get Fraction back.
"""

import json
from fractions import Fraction

try:
    from . import _thermores as _core
except ImportError:  # build tree: the extension sits next to the package
    import _thermores as _core

ThermoresError = _core.ThermoresError

__all__ = [
    "ThermoresError",
    "curve",
    "num_distinct_slopes",
    "majorizes",
    "renyi",
    "default_alpha_grid",
    "entropy_production",
    "minimal_extraction_reservoir",
    "general_efficient_reservoir",
    "verify_efficient",
    "average_work",
    "lp_feasible",
    "cto_feasible",
    "run_carnot",
    "reproduce",
]


def _s(values):
    out = []
    for v in values:
        if isinstance(v, float):
            raise TypeError("floats are not exact; use Fraction or a 'p/q' string")
        if isinstance(v, str):  # parsed, and reported, by the core
            out.append(v)
            continue
        f = Fraction(v)
        out.append(f"{f.numerator}/{f.denominator}")
    return out


def _f(values):
    return tuple(Fraction(v) for v in values)


def _reservoir(t):
    r, init, fin = t
    return {"r": _f(r), "init_weights": _f(init), "fin_weights": _f(fin)}


def curve(probs, weights):
    """Breakpoints of the thermomajorization curve as (x, y) Fractions."""
    return [(Fraction(x), Fraction(y)) for x, y in _core.curve_breakpoints(_s(probs), _s(weights))]


def num_distinct_slopes(probs, weights):
    return _core.num_distinct_slopes(_s(probs), _s(weights))


def majorizes(a_probs, a_weights, b_probs, b_weights):
    return _core.majorizes(_s(a_probs), _s(a_weights), _s(b_probs), _s(b_weights))


def renyi(alpha, probs, weights):
    """D_alpha(p || Gibbs) in nats."""
    return _core.renyi(float(alpha), _s(probs), _s(weights))


def default_alpha_grid():
    return _core.default_alpha_grid()


def entropy_production(initial, final, weights):
    return _core.entropy_production(_s(initial), _s(final), _s(weights))


def minimal_extraction_reservoir(probs, weights, c=1):
    return _reservoir(_core.minimal_extraction_reservoir(_s(probs), _s(weights), _s([c])[0]))


def general_efficient_reservoir(initial, final, weights, anchor=1):
    return _reservoir(_core.general_efficient_reservoir(_s(initial), _s(final), _s(weights), _s([anchor])[0]))


def verify_efficient(initial, final, weights, reservoir):
    return _core.verify_efficient(
        _s(initial), _s(final), _s(weights),
        _s(reservoir["r"]), _s(reservoir["init_weights"]), _s(reservoir["fin_weights"]))


def average_work(reservoir):
    return _core.average_work(_s(reservoir["r"]), _s(reservoir["init_weights"]), _s(reservoir["fin_weights"]))


def lp_feasible(initial, final, weights):
    return _core.lp_feasible(_s(initial), _s(final), _s(weights))


def cto_feasible(initial, final, weights, alpha_grid=None):
    grid = default_alpha_grid() if alpha_grid is None else [float(a) for a in alpha_grid]
    return _core.cto_feasible(_s(initial), _s(final), _s(weights), grid)


def run_carnot(epsilon=1.0, t_hot=2.0, t_cold=1.0):
    return json.loads(_core.run_carnot_json(float(epsilon), float(t_hot), float(t_cold)))


def reproduce(which):
    return json.loads(_core.reproduce_json(which))
