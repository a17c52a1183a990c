"""Finite-dimensional weight modules for SL2^l given by exact matrices.

A module stores the matrices of E_i^(p^k) and F_i^(p^k) only; every other
divided power is rebuilt from the p-adic digits of its exponent.  The
torus acts on a basis vector of weight mu through the value of its
function at mu (see hyperalg).
"""
import itertools
import math
import random
from collections import Counter
from functools import reduce

import numpy as np

from . import linalg
from .fparith import DensePoly, PrimeModulus, binom_int
from .hyperalg import Hyperalgebra


class ModuleError(ValueError):
    pass


def _digits(r, p):
    out = []
    while r:
        out.append(r % p)
        r //= p
    return out


class WeightModule:
    """Weights (one tuple per basis vector) plus generator matrices.

    gens maps (kind, i, k) -> matrix of X_i^(p^k), kind in {"E", "F"};
    missing entries act by zero.  A Borel module only carries "F".
    """

    def __init__(self, p, rank, weights, gens, borel=False, check=True):
        self.p = int(PrimeModulus(p))
        self.rank = rank
        self.weights = [tuple(int(c) for c in w) for w in weights]
        if any(len(w) != rank for w in self.weights):
            raise ModuleError("weight of the wrong rank")
        self.borel = borel
        n = len(self.weights)
        self.gens = {}
        for key, m in gens.items():
            kind, i, k = key
            if borel and kind == "E":
                raise ModuleError("Borel modules carry no E action")
            m = np.asarray(m, dtype=np.int64) % self.p
            if m.shape != (n, n):
                raise ModuleError(f"matrix for {key} has shape {m.shape}")
            if m.any():
                self.gens[key] = m
        self._cache = {}
        if check:
            self._check_weights()
            if not borel:
                self._check_commutator()

    @property
    def dim(self):
        return len(self.weights)

    def __repr__(self):
        kind = "BWeightModule" if self.borel else "WeightModule"
        return f"{kind}(p={self.p}, rank={self.rank}, dim={self.dim})"

    def alg(self):
        return Hyperalgebra(self.p, self.rank)

    def spread(self, i):
        if not self.weights:
            return 0
        cs = [w[i] for w in self.weights]
        return max(cs) - min(cs)

    def max_weight(self, i):
        return max(w[i] for w in self.weights)

    def levels(self, i):
        """Exponents k with X^(p^k) possibly nonzero on this module."""
        out = []
        k = 0
        while 2 * self.p ** k <= self.spread(i):
            out.append(k)
            k += 1
        return out

    def gen(self, kind, i, k):
        m = self.gens.get((kind, i, k))
        if m is None:
            return np.zeros((self.dim, self.dim), dtype=np.int64)
        return m

    def identity(self):
        return np.eye(self.dim, dtype=np.int64)

    def divided_power(self, kind, i, r):
        """Matrix of X_i^(r) from the stored X_i^(p^k)."""
        key = (kind, i, r)
        if key in self._cache:
            return self._cache[key]
        p = self.p
        if r == 0:
            out = self.identity()
        elif 2 * r > self.spread(i) or (self.borel and kind == "E"):
            out = np.zeros((self.dim, self.dim), dtype=np.int64)
        else:
            out = self.identity()
            denom = 1
            for k, d in enumerate(_digits(r, p)):
                g = self.gen(kind, i, k)
                for _ in range(d):
                    out = out @ g % p
                denom = denom * math.factorial(d) % p
            out = out * pow(denom, p - 2, p) % p
        self._cache[key] = out
        return out

    def monomial_power(self, kind, exps):
        out = self.identity()
        for i, r in enumerate(exps):
            if r:
                out = out @ self.divided_power(kind, i, r) % self.p
        return out

    def torus_action(self, t, level):
        n = self.p ** level
        vals = [int(t[tuple(c % n for c in w)]) for w in self.weights]
        return np.diag(np.array(vals, dtype=np.int64))

    def act(self, x):
        """Matrix of a DistElement."""
        if x.alg.p != self.p or x.alg.rank != self.rank:
            raise ModuleError("modulus or rank mismatch")
        out = np.zeros((self.dim, self.dim), dtype=np.int64)
        for (a, c), t in x.terms.items():
            if self.borel and any(c):
                raise ModuleError("Borel module cannot be acted on by E")
            term = self.monomial_power("F", a) @ self.torus_action(t, x.level) % self.p
            out = (out + term @ self.monomial_power("E", c)) % self.p
        return out

    def weight_blocks(self):
        blocks = {}
        for j, w in enumerate(self.weights):
            blocks.setdefault(w, []).append(j)
        return blocks

    def character(self):
        return Counter(self.weights)

    def _check_weights(self):
        shift = {"E": 2, "F": -2}
        for (kind, i, k), m in self.gens.items():
            rows, cols = np.nonzero(m)
            for r, c in zip(rows, cols):
                w = list(self.weights[c])
                w[i] += shift[kind] * self.p ** k
                if tuple(w) != self.weights[r]:
                    raise ModuleError(f"{kind}_{i}^(p^{k}) does not shift weights correctly")

    def _check_commutator(self):
        # EF - FE = H on every index
        for i in range(self.rank):
            e, f = self.gen("E", i, 0), self.gen("F", i, 0)
            h = np.diag([w[i] % self.p for w in self.weights])
            if not np.array_equal((e @ f - f @ e - h) % self.p, np.zeros_like(h)):
                raise ModuleError("EF - FE != H")

    def validate(self, bound=None):
        """Check E^(n)F^(m) = sum_k F^(m-k) binom(H-n-m+2k;k) E^(n-k) for n, m <= bound."""
        if self.borel:
            return True
        alg = self.alg()
        bound = self.p ** 2 if bound is None else bound
        for i in range(self.rank):
            for n in range(bound + 1):
                for m in range(bound + 1):
                    lhs = self.divided_power("E", i, n) @ self.divided_power("F", i, m) % self.p
                    rhs = self.act(alg.E(i, n) * alg.F(i, m))
                    if not np.array_equal(lhs, rhs):
                        return False
        return True


def borel_restriction(m):
    gens = {k: v for k, v in m.gens.items() if k[0] == "F"}
    return WeightModule(m.p, m.rank, m.weights, gens, borel=True, check=False)


class ModuleMap:
    """A matrix from source to target (columns indexed by the source basis)."""

    def __init__(self, source, target, matrix):
        self.source = source
        self.target = target
        self.matrix = np.asarray(matrix, dtype=np.int64) % source.p
        if self.matrix.shape != (target.dim, source.dim):
            raise ModuleError("map has the wrong shape")

    def preserves_weights(self):
        rows, cols = np.nonzero(self.matrix)
        return all(self.source.weights[c] == self.target.weights[r] for r, c in zip(rows, cols))

    def is_equivariant(self):
        if not self.preserves_weights():
            return False
        p = self.source.p
        kinds = ("F",) if self.source.borel or self.target.borel else ("E", "F")
        for kind in kinds:
            for i in range(self.source.rank):
                ks = set(self.source.levels(i)) | set(self.target.levels(i))
                for k in ks:
                    lhs = self.matrix @ self.source.gen(kind, i, k) % p
                    rhs = self.target.gen(kind, i, k) @ self.matrix % p
                    if not np.array_equal(lhs, rhs):
                        return False
        return True

    def rank(self):
        return linalg.rank(self.matrix, self.source.p)

    def compose(self, other):
        """self after other."""
        return ModuleMap(other.source, self.target, self.matrix @ other.matrix)


# ----------------------------------------------------------- constructors

def _sl2_weyl(n, p):
    weights = [(n - 2 * j,) for j in range(n + 1)]
    gens = {}
    k = 0
    while 2 * p ** k <= 2 * n:
        r = p ** k
        e = np.zeros((n + 1, n + 1), dtype=np.int64)
        f = np.zeros((n + 1, n + 1), dtype=np.int64)
        for j in range(n + 1):
            if j + r <= n:
                f[j + r, j] = binom_int(j + r, r, p)
            if j - r >= 0:
                e[j - r, j] = binom_int(n - j + r, r, p)
        gens[("E", 0, k)] = e
        gens[("F", 0, k)] = f
        k += 1
    return WeightModule(p, 1, weights, gens)


def outer_tensor(mods):
    """External tensor product of rank-one modules, one per index."""
    p = mods[0].p
    rank = len(mods)
    weights = [tuple(w[0] for w in ws) for ws in itertools.product(*[m.weights for m in mods])]
    gens = {}
    for i, m in enumerate(mods):
        for (kind, _, k), mat in m.gens.items():
            factors = [np.eye(n.dim, dtype=np.int64) for n in mods]
            factors[i] = mat
            gens[(kind, i, k)] = reduce(lambda a, b: np.kron(a, b) % p, factors)
    return WeightModule(p, rank, weights, gens, borel=all(m.borel for m in mods))


def _coords(lam):
    return (lam,) if isinstance(lam, int) else tuple(lam)


def weyl_module(lam, p):
    """Delta(lam): basis w_j = F^(j) w_0, weights n - 2j."""
    lam = _coords(lam)
    if min(lam) < 0:
        raise ModuleError("Weyl modules need a dominant weight")
    return outer_tensor([_sl2_weyl(n, p) for n in lam])


def dual(m):
    """Contragredient module through the antipode: X^(r) -> (-1)^r (X^(r))^T."""
    p = m.p
    gens = {}
    for (kind, i, k), mat in m.gens.items():
        sign = -1 if p ** k % 2 else 1
        gens[(kind, i, k)] = (sign * mat.T) % p
    weights = [tuple(-c for c in w) for w in m.weights]
    return WeightModule(p, m.rank, weights, gens, borel=m.borel)


def change_basis(m, matrix, weights=None):
    """The module with basis given by the columns of an invertible matrix."""
    p = m.p
    inv = linalg.inverse(matrix, p)
    gens = {key: inv @ g @ matrix % p for key, g in m.gens.items()}
    if weights is None:
        weights = []
        for j in range(matrix.shape[1]):
            idx = np.nonzero(matrix[:, j] % p)[0]
            ws = {m.weights[r] for r in idx}
            if len(ws) != 1:
                raise ModuleError("basis vector is not a weight vector")
            weights.append(ws.pop())
    return WeightModule(p, m.rank, weights, gens, borel=m.borel)


def _sl2_dual_weyl(n, p):
    # delta_k = (-1)^k times the functional dual to w_{n-k}; this matches the
    # binary forms x^k y^(n-k) with E = y d/dx and F = x d/dy.
    d = dual(_sl2_weyl(n, p))
    mat = np.zeros((n + 1, n + 1), dtype=np.int64)
    for k in range(n + 1):
        mat[n - k, k] = (-1) ** k % p
    return change_basis(d, mat)


def dual_weyl(lam, p):
    """nabla(lam) as the contragredient of Delta(lam)."""
    lam = _coords(lam)
    if min(lam) < 0:
        raise ModuleError("dual Weyl modules need a dominant weight")
    return outer_tensor([_sl2_dual_weyl(n, p) for n in lam])


def submodule(m, span):
    """The submodule spanned by the columns of span (assumed stable)."""
    p = m.p
    span = linalg.as_mat(span, p)
    cols = []
    weights = []
    for w, idx in sorted(m.weight_blocks().items(), reverse=True):
        proj = np.zeros_like(span)
        proj[idx] = span[idx]
        basis = linalg.reduced_basis(linalg.column_basis(proj, p), p)
        for j in range(basis.shape[1]):
            cols.append(basis[:, j])
            weights.append(w)
    if not cols:
        return WeightModule(p, m.rank, [], {}, borel=m.borel), np.zeros((m.dim, 0), dtype=np.int64)
    basis = np.stack(cols, axis=1)
    gens = {}
    for key, g in m.gens.items():
        gens[key] = linalg.solve(basis, g @ basis % p, p)
    return WeightModule(p, m.rank, weights, gens, borel=m.borel), basis


def _sl2_simple(n, p):
    nab = _sl2_dual_weyl(n, p)
    top = np.zeros(n + 1, dtype=np.int64)
    top[0] = 1
    span = np.stack([nab.divided_power("F", 0, j) @ top % p for j in range(n + 1)], axis=1)
    return submodule(nab, span)[0]


def simple(lam, p):
    """L(lam): image of the canonical map Delta(lam) -> nabla(lam)."""
    lam = _coords(lam)
    if min(lam) < 0:
        raise ModuleError("simple modules need a dominant weight")
    return outer_tensor([_sl2_simple(n, p) for n in lam])


def steinberg(p, rank=1):
    return simple((p - 1,) * rank, p)


def trivial(p, rank=1):
    return WeightModule(p, rank, [(0,) * rank], {})


def line(lam, p, borel=True):
    """One-dimensional B-module of weight lam."""
    lam = _coords(lam)
    return WeightModule(p, len(lam), [lam], {}, borel=borel)


def tensor(m, n):
    """Tensor product with the action through the coproduct."""
    if (m.p, m.rank) != (n.p, n.rank):
        raise ModuleError("modulus or rank mismatch")
    p = m.p
    borel = m.borel or n.borel
    weights = [tuple(a + b for a, b in zip(u, v)) for u in m.weights for v in n.weights]
    gens = {}
    kinds = ("F",) if borel else ("E", "F")
    for i in range(m.rank):
        k = 0
        spread = m.spread(i) + n.spread(i)
        while 2 * p ** k <= spread:
            r = p ** k
            for kind in kinds:
                total = np.zeros((m.dim * n.dim,) * 2, dtype=np.int64)
                for a in range(r + 1):
                    total = (total + np.kron(m.divided_power(kind, i, a),
                                             n.divided_power(kind, i, r - a))) % p
                gens[(kind, i, k)] = total
            k += 1
    return WeightModule(p, m.rank, weights, gens, borel=borel)


def direct_sum(m, n):
    p = m.p
    gens = {}
    for key in set(m.gens) | set(n.gens):
        a, b = m.gen(*key), n.gen(*key)
        out = np.zeros((m.dim + n.dim,) * 2, dtype=np.int64)
        out[: m.dim, : m.dim] = a
        out[m.dim:, m.dim:] = b
        gens[key] = out
    return WeightModule(p, m.rank, m.weights + n.weights, gens, borel=m.borel and n.borel)


def frobenius_twist(m):
    """M^[1]: weights times p, X^(p^k) acting as X^(p^(k-1)) of M."""
    gens = {(kind, i, k + 1): mat for (kind, i, k), mat in m.gens.items()}
    weights = [tuple(m.p * c for c in w) for w in m.weights]
    return WeightModule(m.p, m.rank, weights, gens, borel=m.borel)


def contraction_indices(m):
    return [j for j, w in enumerate(m.weights) if all(c % m.p == 0 for c in w)]


def contract(m):
    """M^phi: the p-divisible weight spaces with x acting as phi(x)."""
    idx = contraction_indices(m)
    gens = {}
    for (kind, i, k), mat in m.gens.items():
        if k >= 1:
            gens[(kind, i, k - 1)] = mat[np.ix_(idx, idx)]
    weights = [tuple(c // m.p for c in m.weights[j]) for j in idx]
    return WeightModule(m.p, m.rank, weights, gens, borel=m.borel)


def restrict_map(f, source_idx, target_idx):
    """A module map cut down to given basis subsets (e.g. contraction blocks)."""
    return f.matrix[np.ix_(target_idx, source_idx)]


# ------------------------------------------------------ characters, homs

def simple_character(lam, p):
    """Weights of L(lam) through the Steinberg tensor product factorisation."""
    lam = _coords(lam)
    per = []
    for n in lam:
        ws = [0]
        for k, d in enumerate(_digits(n, p)):
            ws = [w + p ** k * (d - 2 * j) for w in ws for j in range(d + 1)]
        per.append(ws)
    return Counter(itertools.product(*per))


def composition_factors(m):
    """Multiset of highest weights of the composition factors."""
    remaining = Counter(m.character())
    out = Counter()
    while remaining:
        top = max(remaining)
        if min(top) < 0:
            raise ModuleError("character is not Weyl-invariant")
        for w, c in simple_character(top, m.p).items():
            remaining[w] -= c
            if remaining[w] < 0:
                raise ModuleError("negative multiplicity while peeling simple characters")
            if remaining[w] == 0:
                del remaining[w]
        out[top] += 1
    return out


def hom_space(m, n):
    """Basis (list of ModuleMap) of the equivariant maps m -> n."""
    if (m.p, m.rank) != (n.p, n.rank):
        raise ModuleError("modulus or rank mismatch")
    p = m.p
    slots = [(r, c) for c in range(m.dim) for r in range(n.dim) if m.weights[c] == n.weights[r]]
    if not slots:
        return []
    rows_idx = np.array([s[0] for s in slots])
    cols_idx = np.array([s[1] for s in slots])
    eqs = []
    kinds = ("F",) if m.borel or n.borel else ("E", "F")
    for kind in kinds:
        for i in range(m.rank):
            for k in sorted(set(m.levels(i)) | set(n.levels(i))):
                a, b = m.gen(kind, i, k), n.gen(kind, i, k)
                # (b X - X a)[r, c] as a linear form in the slot variables
                big = np.zeros((n.dim, m.dim, len(slots)), dtype=np.int64)
                for v, (r0, c0) in enumerate(slots):
                    big[:, c0, v] += b[:, r0]
                    big[r0, :, v] -= a[c0, :]
                eqs.append(big.reshape(n.dim * m.dim, len(slots)) % p)
    system = np.concatenate(eqs, axis=0) if eqs else np.zeros((0, len(slots)), dtype=np.int64)
    system = system[np.any(system, axis=1)] if system.size else system
    kernel = linalg.nullspace(system, p)
    out = []
    for j in range(kernel.shape[1]):
        mat = np.zeros((n.dim, m.dim), dtype=np.int64)
        mat[rows_idx, cols_idx] = kernel[:, j]
        out.append(ModuleMap(m, n, mat))
    return out


def is_isomorphic(m, n, seed=0, trials=100):
    if m.dim != n.dim or m.character() != n.character():
        return False
    if m.dim == 0:
        return True
    p = m.p
    basis = hom_space(m, n)
    if not basis:
        return False
    mats = [b.matrix for b in basis]
    if len(mats) <= 3:
        for coeffs in itertools.product(range(p), repeat=len(mats)):
            total = sum(c * a for c, a in zip(coeffs, mats)) % p
            if linalg.det_nonzero(total, p):
                return True
        return False
    rng = random.Random(seed)
    for _ in range(trials):
        total = sum(rng.randrange(p) * a for a in mats) % p
        if linalg.det_nonzero(total, p):
            return True
    return False


# ------------------------------------------------------------ group words

def _poly_stack(param, p):
    if isinstance(param, DensePoly):
        return list(param.coeffs) or [0]
    return [int(param) % p]


def _stack_mul(a, b, p):
    out = np.zeros((a.shape[0] + b.shape[0] - 1, a.shape[1], b.shape[2]), dtype=np.int64)
    for i in range(a.shape[0]):
        for j in range(b.shape[0]):
            out[i + j] = (out[i + j] + a[i] @ b[j]) % p
    return out


def _trim(stack):
    while stack.shape[0] > 1 and not stack[-1].any():
        stack = stack[:-1]
    return stack


def root_element(m, i, sign, param):
    """x_{+-alpha_i}(param) = sum_r param^r X_i^(r) as a polynomial matrix stack."""
    p = m.p
    kind = "E" if sign > 0 else "F"
    base = DensePoly(_poly_stack(param, p), p)
    top = m.spread(i) // 2
    out = np.zeros((1, m.dim, m.dim), dtype=np.int64)
    power = DensePoly([1], p)
    for r in range(top + 1):
        coeffs = power.coeffs
        mat = m.divided_power(kind, i, r)
        if len(coeffs) > out.shape[0]:
            out = np.concatenate([out, np.zeros((len(coeffs) - out.shape[0], m.dim, m.dim),
                                                dtype=np.int64)])
        for d, c in enumerate(coeffs):
            out[d] = (out[d] + c * mat) % p
        power = power * base
    return _trim(out)


def group_word_action(m, word):
    """Matrix of a word in root elements, torus points and Weyl representatives.

    Letters: ("x", i, +1 or -1, param) for x_{+-alpha_i}(param) with param an
    int or a DensePoly; ("h", i, c) for the coroot point c in F_p^x;
    ("s", i) for x_i(1) x_{-i}(-1) x_i(1).  The result is a 2-D matrix when
    every parameter is a scalar, else a stack of coefficient matrices.
    """
    p = m.p
    out = np.eye(m.dim, dtype=np.int64)[None]
    poly = False
    for letter in word:
        if letter[0] == "x":
            _, i, sign, param = letter
            poly = poly or isinstance(param, DensePoly)
            mat = root_element(m, i, sign, param)
        elif letter[0] == "h":
            _, i, c = letter
            if c % p == 0:
                raise ModuleError("torus point must be invertible")
            mat = np.diag([pow(c, w[i] % (p - 1), p) if p > 2 else 1 for w in m.weights])[None]
        elif letter[0] == "s":
            i = letter[1]
            mat = group_word_action(m, [("x", i, 1, 1), ("x", i, -1, -1), ("x", i, 1, 1)])[None]
        else:
            raise ModuleError(f"unknown letter {letter!r}")
        out = _trim(_stack_mul(out, mat, p))
    if not poly:
        if out.shape[0] > 1:
            raise ModuleError("scalar word produced a polynomial")
        return out[0]
    return out
