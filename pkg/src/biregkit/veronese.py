"""Regularity bounds for the bigraded Veronese algebra R_(s,t) from a Betti table of R."""

from dataclasses import dataclass

from .errors import MathError


def _ceil_div(a, s):
    return -(-a // s)


def _require_complete(table):
    if not table.complete:
        raise MathError("Veronese bounds need a complete Betti table", box=list(table.box))


def _bound(table, step, axis):
    """max(ceil(deg/step) - i) over the Betti support, with its witnesses"""
    if not step:
        return None, ()
    values = {(i, degree): _ceil_div(degree[axis], step) - i for (i, degree) in table.entries}
    if not values:
        return None, ()
    top = max(values.values())
    witnesses = tuple({'i': i, 'a': degree[0], 'b': degree[1]}
                      for (i, degree), value in sorted(values.items()) if value == top)
    return top, witnesses


def _zero_threshold(table, axis):
    """Least s with ceil(deg/s) <= i for every entry; None if some i = 0 entry has deg > 0"""
    threshold = 1
    for (i, degree) in table.entries:
        deg = degree[axis]
        if i == 0:
            if deg > 0:
                return None
            continue
        threshold = max(threshold, _ceil_div(deg, i))
    return threshold


@dataclass(frozen=True)
class VeroneseBoundReport:
    """Upper bounds, never values, for reg_x and reg_y of R_(s,t)."""

    s: int
    t: int
    bound_x: int | None
    bound_y: int | None
    witnesses_x: tuple
    witnesses_y: tuple
    threshold_s: int | None
    threshold_t: int | None

    def to_json(self):
        return {
            'delta': [self.s, self.t],
            'bound_x': self.bound_x,
            'bound_y': self.bound_y,
            'witnesses_x': list(self.witnesses_x),
            'witnesses_y': list(self.witnesses_y),
            's_star': self.threshold_s,
            't_star': self.threshold_t,
        }


def veronese_bound(table, s, t):
    """bound_x = max(ceil(a/s) - i), bound_y = max(ceil(b/t) - i); a zero step disables that side"""
    _require_complete(table)
    if s < 0 or t < 0 or (s, t) == (0, 0):
        raise MathError("Need s, t >= 0 and (s, t) != (0, 0)", s=s, t=t)
    bound_x, witnesses_x = _bound(table, s, 0)
    bound_y, witnesses_y = _bound(table, t, 1)
    s_star, t_star = veronese_zero_thresholds(table)
    return VeroneseBoundReport(s, t, bound_x, bound_y, witnesses_x, witnesses_y, s_star, t_star)


def veronese_zero_thresholds(table):
    """(s*, t*): least steps from which both bounds are 0"""
    _require_complete(table)
    return _zero_threshold(table, 0), _zero_threshold(table, 1)
