"""Sparse exact Gaussian elimination.

Vectors are dicts ``key -> scalar`` with zero entries omitted.  Keys only
need to be hashable and sortable, which lets monomials serve directly as
coordinates.
"""

from __future__ import annotations


def _axpy(target: dict, scale, source: dict) -> None:
    """target += scale * source, in place."""
    for k, v in source.items():
        s = target.get(k, 0) + scale * v
        if s:
            target[k] = s
        else:
            target.pop(k, None)


def echelonize(vectors, field, key=None) -> list[dict]:
    """Reduced row echelon basis of the span of ``vectors``.

    Each returned vector has a pivot (its smallest coordinate under ``key``)
    with coefficient 1 and that pivot is absent from all other vectors.
    The output is sorted by pivot, so two spans are equal iff their
    echelon bases are equal.
    """
    pivots: dict = {}
    for vec in vectors:
        row = {k: v for k, v in vec.items() if v}
        for p, prow in pivots.items():
            c = row.get(p)
            if c:
                _axpy(row, -c, prow)
        if not row:
            continue
        p = min(row, key=key)
        inv = field.one / row[p]
        row = {k: v * inv for k, v in row.items()}
        for q, qrow in pivots.items():
            c = qrow.get(p)
            if c:
                _axpy(qrow, -c, row)
        pivots[p] = row
    return [pivots[p] for p in sorted(pivots, key=key)]


def nullspace(columns: dict, field, key=None) -> list[dict]:
    """Kernel of the linear map ``unknown -> columns[unknown]``.

    ``columns`` maps each unknown to its image vector (a dict).  Returns a
    basis of ``{lam : sum lam[u] * columns[u] == 0}``, one vector per free
    unknown, in echelon form.
    """
    unknowns = sorted(columns, key=key)
    rows: dict = {}
    for u in unknowns:
        for eq, v in columns[u].items():
            if v:
                rows.setdefault(eq, {})[u] = v
    order = {u: i for i, u in enumerate(unknowns)}
    red = echelonize(rows.values(), field, key=order.__getitem__)
    pivot_of = {}
    for row in red:
        p = min(row, key=order.__getitem__)
        pivot_of[p] = row
    basis = []
    for u in unknowns:
        if u in pivot_of:
            continue
        vec = {u: field.one}
        for p, row in pivot_of.items():
            c = row.get(u)
            if c:
                vec[p] = -c
        basis.append(vec)
    return echelonize(basis, field, key=order.__getitem__)


def solve(columns: dict, rhs: dict, field, key=None):
    """One solution ``lam`` of ``sum lam[u] * columns[u] == rhs``, or None.

    Free unknowns are set to zero, which makes the answer deterministic.
    """
    marker = object()
    unknowns = sorted(columns, key=key)
    order = {u: i for i, u in enumerate(unknowns)}
    order[marker] = len(unknowns)
    rows: dict = {}
    for u in unknowns:
        for eq, v in columns[u].items():
            if v:
                rows.setdefault(eq, {})[u] = v
    for eq, v in rhs.items():
        if v:
            rows.setdefault(eq, {})[marker] = v
    red = echelonize(rows.values(), field, key=order.__getitem__)
    sol = {}
    for row in red:
        p = min(row, key=order.__getitem__)
        if p is marker:
            return None
        c = row.get(marker)
        if c:
            sol[p] = c
    return sol
