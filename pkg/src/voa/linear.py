"""Exact sparse Gaussian elimination over Q with combination tracking.

Vectors are dicts keyed by arbitrary orderable keys; every inserted row
can carry a tag, and the echelon remembers how each pivot row was built
from tagged inputs, so membership tests return certificates.
"""


def _axpy(dst, src, c):
    for k, v in src.items():
        s = dst.get(k, 0) + c * v
        if s:
            dst[k] = s
        else:
            dst.pop(k, None)


class Echelon:
    """Row echelon structure: pivots maps a leading key to (row, combo)
    with the pivot coefficient normalized to 1."""

    def __init__(self):
        self.pivots = {}

    def rank(self):
        return len(self.pivots)

    def reduce(self, vec, combo=None):
        """Reduce vec against the pivots in place-copy; returns (residual,
        combo) where combo tracks the pivot combinations subtracted."""
        vec = dict(vec)
        combo = dict(combo or {})
        while vec:
            lead = max(vec)
            hit = self.pivots.get(lead)
            if hit is None:
                return vec, combo
            row, rc = hit
            c = vec[lead]
            _axpy(vec, row, -c)
            _axpy(combo, rc, -c)
        return vec, combo

    def insert(self, vec, tag):
        """Insert a tagged row; returns True when it enlarged the span."""
        res, combo = self.reduce(vec, {})
        if not res:
            return False
        lead = max(res)
        c = res[lead]
        row = {k: v / c for k, v in res.items()}
        combo[tag] = combo.get(tag, 0) + 1
        rcombo = {t: v / c for t, v in combo.items()}
        self.pivots[lead] = (row, rcombo)
        return True

    def member(self, vec):
        """(True, certificate) when vec lies in the span: certificate maps
        tags to coefficients with vec = sum cert[tag] * row[tag]."""
        res, combo = self.reduce(vec, {})
        if res:
            return False, None
        return True, {t: -c for t, c in combo.items() if c}

    def solve(self, vec):
        ok, cert = self.member(vec)
        if not ok:
            raise ValueError("vector not in span")
        return cert
