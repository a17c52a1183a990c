"""Dense linear algebra over F_p on numpy int64 arrays."""
import numpy as np


class InconsistentSystem(ValueError):
    pass


def as_mat(a, p):
    return np.asarray(a, dtype=np.int64) % p


def rref(a, p):
    """Reduced row echelon form and the tuple of pivot columns."""
    m = as_mat(a, p).copy()
    rows, cols = m.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(m[r:, c])[0]
        if nz.size == 0:
            continue
        k = r + nz[0]
        if k != r:
            m[[r, k]] = m[[k, r]]
        inv = pow(int(m[r, c]), p - 2, p)
        m[r] = m[r] * inv % p
        col = m[:, c].copy()
        col[r] = 0
        nzr = np.nonzero(col)[0]
        if nzr.size:
            m[nzr] = (m[nzr] - np.outer(col[nzr], m[r])) % p
        pivots.append(c)
        r += 1
    return m, tuple(pivots)


def rank(a, p):
    a = np.asarray(a)
    if a.size == 0:
        return 0
    return len(rref(a, p)[1])


def nullspace(a, p):
    """Columns spanning {x : a x = 0}."""
    a = np.asarray(a, dtype=np.int64)
    n = a.shape[1]
    if a.shape[0] == 0:
        return np.eye(n, dtype=np.int64)
    r, pivots = rref(a, p)
    free = [c for c in range(n) if c not in set(pivots)]
    out = np.zeros((n, len(free)), dtype=np.int64)
    for j, f in enumerate(free):
        out[f, j] = 1
        for i, pc in enumerate(pivots):
            out[pc, j] = -r[i, f] % p
    return out


def column_basis(a, p):
    """A subset of the columns of a forming a basis of its column space."""
    a = as_mat(a, p)
    if a.size == 0:
        return np.zeros((a.shape[0], 0), dtype=np.int64)
    _, pivots = rref(a, p)
    return a[:, list(pivots)]


def reduced_basis(a, p):
    """Canonical basis of the column space (transpose of the rref of a^T)."""
    a = as_mat(a, p)
    if a.shape[1] == 0:
        return a
    r, pivots = rref(a.T, p)
    return r[: len(pivots)].T.copy()


def solve(a, b, p):
    """Some x with a x = b; raises InconsistentSystem if none exists."""
    a = as_mat(a, p)
    b = as_mat(b, p)
    vec = b.ndim == 1
    if vec:
        b = b[:, None]
    n = a.shape[1]
    if a.shape[0] == 0:
        out = np.zeros((n, b.shape[1]), dtype=np.int64)
        return out[:, 0] if vec else out
    aug = np.concatenate([a, b], axis=1)
    r, pivots = rref(aug, p)
    if any(pc >= n for pc in pivots):
        raise InconsistentSystem("no solution")
    x = np.zeros((n, b.shape[1]), dtype=np.int64)
    for i, pc in enumerate(pivots):
        x[pc] = r[i, n:]
    return x[:, 0] if vec else x


def inverse(a, p):
    a = as_mat(a, p)
    n = a.shape[0]
    if a.shape != (n, n):
        raise ValueError("square matrix required")
    r, pivots = rref(np.concatenate([a, np.eye(n, dtype=np.int64)], axis=1), p)
    if pivots[:n] != tuple(range(n)) or len(pivots) < n:
        raise InconsistentSystem("singular matrix")
    return r[:, n:].copy()


def in_span(basis, v, p):
    basis = as_mat(basis, p)
    v = as_mat(v, p)
    if v.ndim == 1:
        v = v[:, None]
    if basis.shape[1] == 0:
        return not v.any()
    return rank(np.concatenate([basis, v], axis=1), p) == rank(basis, p)


def annihilator(basis, p):
    """Rows spanning the linear forms vanishing on the columns of basis."""
    basis = as_mat(basis, p)
    if basis.shape[1] == 0:
        return np.eye(basis.shape[0], dtype=np.int64)
    return nullspace(basis.T, p).T


def intersect(a, b, p):
    """Basis of col(a) cap col(b)."""
    a = as_mat(a, p)
    b = as_mat(b, p)
    if a.shape[1] == 0 or b.shape[1] == 0:
        return np.zeros((a.shape[0], 0), dtype=np.int64)
    k = nullspace(np.concatenate([a, -b % p], axis=1), p)
    return column_basis(a @ k[: a.shape[1]] % p, p)


def det_nonzero(a, p):
    a = np.asarray(a)
    return a.shape[0] == a.shape[1] and rank(a, p) == a.shape[0]
