"""Exact Gaussian elimination over any field whose elements support + - * /.

Vectors are sparse ``dict[int, value]`` maps with no zero entries.  Nothing
here ever touches floating point.
"""

from __future__ import annotations


def _axpy(target: dict, scale, source: dict) -> None:
    """target -= scale * source, dropping zeros."""
    for k, v in source.items():
        new = target.get(k, 0) - scale * v
        if new:
            target[k] = new
        else:
            target.pop(k, None)


def kernel(columns: list[dict], one=1) -> list[dict]:
    """Basis of {x : sum_j x_j * columns[j] = 0}, as sparse vectors indexed by j.

    Columns are reduced in order against the pivot rows found so far; a column
    that reduces to zero yields the kernel vector recording its reduction.
    """
    pivots: list[tuple[object, dict, dict]] = []  # (key, normalized vector, combination)
    basis = []
    for j, col in enumerate(columns):
        vec = dict(col)
        combo = {j: one}
        for key, pvec, pcombo in pivots:
            c = vec.get(key)
            if c:
                _axpy(vec, c, pvec)
                _axpy(combo, c, pcombo)
        if not vec:
            basis.append(combo)
            continue
        key = min(vec)
        inv = one / vec[key]
        vec = {k: v * inv for k, v in vec.items()}
        combo = {k: v * inv for k, v in combo.items()}
        pivots.append((key, vec, combo))
    return basis


def rref(rows: list[dict], one=1) -> list[dict]:
    """Reduced row echelon form; pivots are the smallest indices, scaled to 1.

    Zero rows are dropped, so the result is a normalized basis of the row span.
    """
    rows = [dict(r) for r in rows if r]
    done: list[tuple[int, dict]] = []
    while rows:
        key = min(min(r) for r in rows)
        idx = next(i for i, r in enumerate(rows) if key in r)
        pivot = rows.pop(idx)
        inv = one / pivot[key]
        pivot = {k: v * inv for k, v in pivot.items()}
        for r in rows:
            c = r.get(key)
            if c:
                _axpy(r, c, pivot)
        for _, r in done:
            c = r.get(key)
            if c:
                _axpy(r, c, pivot)
        rows = [r for r in rows if r]
        done.append((key, pivot))
    return [r for _, r in done]


def rank(rows: list[dict], one=1) -> int:
    return len(rref(rows, one))


def in_span(vectors: list[dict], target: dict, one=1) -> bool:
    return rank(vectors + [target], one) == rank(vectors, one)


def solve_in_span(vectors: list[dict], target: dict, one=1) -> list | None:
    """Coefficients x with sum x_i vectors[i] = target, or None if target is outside the span."""
    columns = list(vectors) + [target]
    for vec in kernel(columns, one):
        last = vec.get(len(vectors))
        if last:
            scale = -one / last
            return [vec.get(i, 0) * scale for i in range(len(vectors))]
    return None


def dense_to_sparse(row) -> dict:
    return {i: v for i, v in enumerate(row) if v}


def sparse_to_dense(vec: dict, size: int, zero=0) -> list:
    return [vec.get(i, zero) for i in range(size)]


def inverse_matrix(matrix: list[list], one=1) -> list[list]:
    """Exact inverse of a square matrix; raises ValueError if singular."""
    n = len(matrix)
    zero = one - one
    aug = [list(row) + [one if i == j else zero for j in range(n)] for i, row in enumerate(matrix)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col]), None)
        if pivot is None:
            raise ValueError("matrix is singular")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = one / aug[col][col]
        aug[col] = [v * inv for v in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                c = aug[r][col]
                aug[r] = [a - c * b for a, b in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def is_invertible(matrix: list[list], one=1) -> bool:
    try:
        inverse_matrix(matrix, one)
    except ValueError:
        return False
    return True
