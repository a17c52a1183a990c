"""Induction from the negative Borel to G in the functional model.

An element f of ind(M) is a Dist(B)-linear map Dist(G) -> M.  Since
Dist(G) = Dist(B) Dist(U+), f is determined by the values f(E^(n)), and
(x f)(y) = f(y x).  A coordinate (n, b) stands for the b-th basis
coordinate of f(E^(n)); it carries weight wt(b) - 2n.

Every weight of ind(M) lies in [-hi, hi] (hi the top weight of M), which
bounds n by hi.  Inside the finite space V of such coordinates, ind(M) is
the largest subspace stable under the divided powers E^(p^k), F^(p^k);
we find it by iterating annihilator conditions to a fixed point.
"""
import itertools

import numpy as np

from . import linalg
from .gmod import (ModuleError, ModuleMap, WeightModule, contract, contraction_indices,
                   frobenius_twist, hom_space, line, borel_restriction, tensor)
from .hyperalg import Hyperalgebra, e_plus, phi
from .weights import two_p_minus_one_rho


class InductionError(RuntimeError):
    pass


def _module_key(m):
    gens = tuple(sorted((k, v.tobytes()) for k, v in m.gens.items()))
    return (m.p, m.rank, m.borel, tuple(m.weights), gens)


_CACHE = {}


class InducedModule:
    """ind(M) together with its coordinates as functionals."""

    def __init__(self, base, module, window, coords, basis):
        self.base = base
        self.module = module
        self.window = window
        self.coords = coords
        self.index = {c: r for r, c in enumerate(coords)}
        self.basis = basis
        self.p = base.p
        self.rank = base.rank
        self.alg = Hyperalgebra(base.p, base.rank)

    @property
    def dim(self):
        return self.module.dim

    def exponents(self):
        return list(itertools.product(*[range(w) for w in self.window]))

    def values(self, vec):
        """{n: f(E^(n))} for the element with coordinates vec."""
        full = self.basis @ np.asarray(vec, dtype=np.int64) % self.p
        out = {}
        for n in self.exponents():
            v = np.zeros(self.base.dim, dtype=np.int64)
            for b in range(self.base.dim):
                r = self.index.get((n, b))
                if r is not None:
                    v[b] = full[r]
            out[n] = v
        return out

    def value_at(self, vals, n):
        v = vals.get(tuple(n))
        return np.zeros(self.base.dim, dtype=np.int64) if v is None else v

    def evaluate(self, vals, x):
        """f(x) for a DistElement x, from the values f(E^(n))."""
        out = np.zeros(self.base.dim, dtype=np.int64)
        m = self.base
        for (a, c), t in x.terms.items():
            v = vals.get(c)
            if v is None or not v.any():
                continue
            mat = m.monomial_power("F", a) @ m.torus_action(t, x.level) % self.p
            out = (out + mat @ v) % self.p
        return out

    def from_values(self, fn):
        """Coordinates of the functional with E^(n) -> fn(n); raises if not in ind(M)."""
        full = np.zeros(len(self.coords), dtype=np.int64)
        for n in self.exponents():
            v = fn(n) % self.p
            for b in range(self.base.dim):
                r = self.index.get((n, b))
                if r is None:
                    if v[b]:
                        raise InductionError(f"functional has a value outside the model at {n}")
                else:
                    full[r] = v[b]
        try:
            return linalg.solve(self.basis, full, self.p)
        except linalg.InconsistentSystem:
            raise InductionError("functional is not in the induced module") from None


def _generator_levels(bound, p):
    """Exponents k used for stability: up to the first p^k beyond bound."""
    out = []
    k = 0
    while True:
        out.append(k)
        if p ** k > bound:
            return out
        k += 1


def induce(m):
    """ind(M) for a Borel module M (G-modules are restricted first)."""
    if not m.borel:
        m = borel_restriction(m)
    key = _module_key(m)
    if key in _CACHE:
        return _CACHE[key]
    p, rank = m.p, m.rank
    alg = Hyperalgebra(p, rank)
    if m.dim == 0:
        hi = (-1,) * rank
    else:
        hi = tuple(m.max_weight(i) for i in range(rank))
    if min(hi) < 0:
        zero = WeightModule(p, rank, [], {})
        out = InducedModule(m, zero, (0,) * rank, [], np.zeros((0, 0), dtype=np.int64))
        _CACHE[key] = out
        return out
    window = tuple(h + 1 for h in hi)

    def weight(n, b):
        return tuple(w - 2 * k for w, k in zip(m.weights[b], n))

    def in_range(n, b):
        if any(k >= w for k, w in zip(n, window)):
            return False
        return all(c >= -h for c, h in zip(weight(n, b), hi))

    coords = [(n, b) for n in itertools.product(*[range(w) for w in window])
              for b in range(m.dim) if in_range(n, b)]
    index = {c: r for r, c in enumerate(coords)}

    def operator(x, extra):
        """Rows: in-range coords then the rest of the extended range; cols: coords."""
        ranges = [range(w + e) for w, e in zip(window, extra)]
        outside = []
        inside_rows = np.zeros((len(coords), len(coords)), dtype=np.int64)
        out_blocks = []
        for j in itertools.product(*ranges):
            y = alg.monomial((0,) * rank, (0,) * rank, j) * x
            block = np.zeros((m.dim, len(coords)), dtype=np.int64)
            for (a, c), t in y.terms.items():
                if any(ci >= w for ci, w in zip(c, window)):
                    continue
                mat = m.monomial_power("F", a) @ m.torus_action(t, y.level) % p
                for b in range(m.dim):
                    col = index.get((c, b))
                    if col is not None:
                        block[:, col] = (block[:, col] + mat[:, b]) % p
            for b in range(m.dim):
                r = index.get((j, b))
                if r is not None:
                    inside_rows[r] = block[b]
                elif block[b].any():
                    out_blocks.append(block[b])
                    outside.append((j, b))
        forbidden = np.array(out_blocks, dtype=np.int64).reshape(-1, len(coords))
        return inside_rows, forbidden

    ops = []
    stored = {}
    for i in range(rank):
        for k in _generator_levels(2 * hi[i] + m.spread(i), p):
            r = p ** k
            e_op = operator(alg.E(i, r), (0,) * rank)
            f_extra = tuple(r if j == i else 0 for j in range(rank))
            f_op = operator(alg.F(i, r), f_extra)
            ops.extend([e_op, f_op])
            if r <= hi[i]:
                stored[("E", i, k)] = e_op[0]
                stored[("F", i, k)] = f_op[0]

    basis = np.eye(len(coords), dtype=np.int64)
    while True:
        conds = []
        ann = linalg.annihilator(basis, p)
        for inside, forbidden in ops:
            img = inside @ basis % p
            if ann.shape[0]:
                conds.append(ann @ img % p)
            if forbidden.shape[0]:
                conds.append(forbidden @ basis % p)
        system = np.concatenate(conds, axis=0) if conds else np.zeros((0, basis.shape[1]), dtype=np.int64)
        kernel = linalg.nullspace(system, p) if system.shape[1] else system[:0].T
        if kernel.shape[1] == basis.shape[1]:
            break
        basis = basis @ kernel % p
        if basis.shape[1] == 0:
            break

    # weight-homogeneous canonical basis, highest weights first
    cols, weights = [], []
    by_weight = {}
    for r, (n, b) in enumerate(coords):
        by_weight.setdefault(weight(n, b), []).append(r)
    for w in sorted(by_weight, reverse=True):
        idx = by_weight[w]
        proj = np.zeros_like(basis)
        proj[idx] = basis[idx]
        if not proj.any():
            continue
        block = linalg.reduced_basis(linalg.column_basis(proj, p), p)
        for j in range(block.shape[1]):
            cols.append(block[:, j])
            weights.append(w)
    if cols:
        basis = np.stack(cols, axis=1)
    else:
        basis = np.zeros((len(coords), 0), dtype=np.int64)
    gens = {}
    for key2, mat in stored.items():
        gens[key2] = linalg.solve(basis, mat @ basis % p, p) if basis.shape[1] else np.zeros((0, 0))
    module = WeightModule(p, rank, weights, gens)
    out = InducedModule(m, module, window, coords, basis)
    _CACHE[key] = out
    return out


# ------------------------------------------------------------ maps

def evaluation(ind):
    """ev: f -> f(1) as a matrix into the base module."""
    zero = (0,) * ind.rank
    cols = [ind.values(np.eye(ind.dim, dtype=np.int64)[:, j])[zero] for j in range(ind.dim)]
    if not cols:
        return np.zeros((ind.base.dim, 0), dtype=np.int64)
    return np.stack(cols, axis=1)


def _map_from(ind_source, ind_target, value_fn, source_cols=None):
    """Matrix whose j-th column is the target element E^(n) -> value_fn(vals_j, n)."""
    cols = range(ind_source.dim) if source_cols is None else source_cols
    out = []
    for j in cols:
        vals = ind_source.values(np.eye(ind_source.dim, dtype=np.int64)[:, j])
        out.append(ind_target.from_values(lambda n, vals=vals: value_fn(vals, n)))
    if not out:
        return np.zeros((ind_target.dim, 0), dtype=np.int64)
    return np.stack(out, axis=1) % ind_source.p


def phi_map(m):
    """Phi_M: ind(M)^[1] -> ind(M^[1]), (Phi f)(x) = f(Dist(Fr) x)."""
    src = induce(m)
    tgt = induce(frobenius_twist(_borel(m)))
    p = m.p

    def value(vals, n):
        if any(k % p for k in n):
            return np.zeros(src.base.dim, dtype=np.int64)
        return src.value_at(vals, tuple(k // p for k in n))

    mat = _map_from(src, tgt, value)
    return ModuleMap(frobenius_twist(src.module), tgt.module, mat)


def _borel(m):
    return m if m.borel else borel_restriction(m)


def psi_map(m, full=False):
    """Psi_M: ind(M)^phi -> ind(M^phi), (Psi f)(x) = f(phi(x)).

    With full=True the same formula is applied on all of ind(M), which
    exhibits the vanishing on weights outside p*Lambda.
    """
    m = _borel(m)
    src = induce(m)
    small = contract(m)
    tgt = induce(small)
    idx = contraction_indices(m)
    alg = src.alg
    cols = list(range(src.dim)) if full else contraction_indices(src.module)

    def value(vals, n):
        v = src.evaluate(vals, phi(alg.monomial((0,) * alg.rank, (0,) * alg.rank, n)))
        rest = np.delete(v, idx)
        if rest.any():
            raise InductionError("phi-pullback left the p-divisible weight spaces")
        return v[idx]

    mat = _map_from(src, tgt, value, cols)
    if full:
        source = src.module
    else:
        source = contract(src.module)
    return ModuleMap(source, tgt.module, mat) if not full else mat


def steinberg_line_twist(m):
    """The B-module line(2(p-1)rho) (x) M^[1]; same coordinates as M."""
    m = _borel(m)
    lam = two_p_minus_one_rho(Hyperalgebra(m.p, m.rank).datum)
    return tensor(line(lam, m.p), frobenius_twist(m))


def psi_rho_map(m):
    """Psi_{2(p-1)rho,M}: ind(2(p-1)rho (x) M^[1])^phi -> ind(M), f -> f(E+ phi(.)) (x) 1."""
    m = _borel(m)
    big = induce(steinberg_line_twist(m))
    tgt = induce(m)
    alg = big.alg
    ep = e_plus(alg)
    cols = contraction_indices(big.module)

    def value(vals, n):
        return big.evaluate(vals, ep * phi(alg.monomial((0,) * alg.rank, (0,) * alg.rank, n)))

    mat = _map_from(big, tgt, value, cols)
    return ModuleMap(contract(big.module), tgt.module, mat)


def cup_values(ind1, v1, ind2, v2):
    """(h1 cup h2)(E^(n)) = sum_k h1(E^(k)) (x) h2(E^(n-k))."""
    a, b = ind1.values(v1), ind2.values(v2)
    p = ind1.p

    def value(n):
        out = None
        for k in itertools.product(*[range(c + 1) for c in n]):
            rest = tuple(c - d for c, d in zip(n, k))
            term = np.kron(ind1.value_at(a, k), ind2.value_at(b, rest))
            out = term if out is None else out + term
        return out % p

    return value


def cup(ind1, v1, ind2, v2):
    """Cup product as an element of ind(M1 (x) M2)."""
    tgt = induce(tensor(ind1.base, ind2.base))
    return tgt, tgt.from_values(cup_values(ind1, v1, ind2, v2))


def cup_left_map(ind1, v1, ind2):
    """Matrix of h -> v1 cup h from ind(M2) to ind(M1 (x) M2)."""
    tgt = induce(tensor(ind1.base, ind2.base))
    cols = []
    for j in range(ind2.dim):
        cols.append(tgt.from_values(cup_values(ind1, v1, ind2, np.eye(ind2.dim, dtype=np.int64)[:, j])))
    mat = np.stack(cols, axis=1) if cols else np.zeros((tgt.dim, 0), dtype=np.int64)
    return tgt, mat % ind1.p


def f0_element(p, rank=1):
    """The weight-0 vector of nabla(2(p-1)rho) with f0(E+) = 1."""
    alg = Hyperalgebra(p, rank)
    ind = induce(line(two_p_minus_one_rho(alg.datum), p))
    zero = (0,) * rank
    idx = [j for j, w in enumerate(ind.module.weights) if w == zero]
    if len(idx) != 1:
        raise InductionError("weight-0 space of nabla(2(p-1)rho) is not a line")
    v = np.zeros(ind.dim, dtype=np.int64)
    v[idx[0]] = 1
    pairing = ind.evaluate(ind.values(v), e_plus(alg))[0]
    if pairing == 0:
        raise InductionError("f0 pairs to zero with E+")
    v = v * pow(int(pairing), p - 2, p) % p
    return ind, v


# ----------------------------------------------------- diagram checks

def _same_module(a, b):
    return _module_key(_borel(a)) == _module_key(_borel(b))


def twist_contract_composite(m):
    """Psi_{M^[1]} o (Phi_M)^phi as a matrix on ind(M)."""
    m = _borel(m)
    ind = induce(m)
    phi_m = phi_map(m)
    tw = frobenius_twist(m)
    if not _same_module(contract(tw), m):
        raise InductionError("contraction of the twist is not literally M")
    rows = contraction_indices(phi_m.target)
    phi_c = phi_m.matrix[rows]
    psi = psi_map(tw)
    return psi.matrix @ phi_c % m.p, ind


def check_twist_contract(m):
    """Psi_{M^[1]} o (Phi_M)^phi = id on ind(M)."""
    comp, ind = twist_contract_composite(m)
    return np.array_equal(comp, np.eye(ind.dim, dtype=np.int64))


def f0_cup_map(m):
    """f0 cup ? : ind(M^[1]) -> ind(2(p-1)rho (x) M^[1])."""
    m = _borel(m)
    ind0, f0 = f0_element(m.p, m.rank)
    tw_ind = induce(frobenius_twist(m))
    tgt, mat = cup_left_map(ind0, f0, tw_ind)
    if not _same_module(tgt.base, steinberg_line_twist(m)):
        raise InductionError("unexpected target for the f0 cup map")
    return ModuleMap(tw_ind.module, tgt.module, mat)


def steinberg_cup_composite(m):
    """Psi_{2(p-1)rho,M} o (f0 cup ?)^phi o (Phi_M)^phi as a matrix on ind(M)."""
    m = _borel(m)
    ind = induce(m)
    phi_m = phi_map(m)
    cupm = f0_cup_map(m)
    psi = psi_rho_map(m)
    mid_rows = contraction_indices(phi_m.target)
    big_rows = contraction_indices(cupm.target)
    phi_c = phi_m.matrix[mid_rows]
    cup_c = cupm.matrix[np.ix_(big_rows, mid_rows)]
    return psi.matrix @ cup_c @ phi_c % m.p, ind


def check_steinberg_cup(m):
    comp, ind = steinberg_cup_composite(m)
    return np.array_equal(comp, np.eye(ind.dim, dtype=np.int64))


def f0_cup_equivariance(m):
    """(T-linear, G-linear) for f0 cup ?; only the first is guaranteed."""
    f = f0_cup_map(m)
    return f.preserves_weights(), f.is_equivariant()


# ---------------------------------------------------- adjunction, naturality

def adjunction_check(q, m):
    """dim Hom_B(Q, M) = dim Hom_G(Q, ind M), and psi -> ev o psi-hat round-trips."""
    m = _borel(m)
    ind = induce(m)
    qb = borel_restriction(q)
    hb = hom_space(qb, m)
    hg = hom_space(q, ind.module)
    if len(hb) != len(hg):
        return False
    ev = evaluation(ind)
    alg = ind.alg
    for psi in hb:
        cols = []
        for j in range(q.dim):
            e = np.eye(q.dim, dtype=np.int64)[:, j]

            def value(n, e=e):
                x = alg.monomial((0,) * alg.rank, (0,) * alg.rank, n)
                return psi.matrix @ (q.act(x) @ e % q.p) % q.p

            try:
                cols.append(ind.from_values(value))
            except InductionError:
                return False
        hat = ModuleMap(q, ind.module, np.stack(cols, axis=1) if cols else np.zeros((ind.dim, 0)))
        if not hat.is_equivariant():
            return False
        if not np.array_equal(ev @ hat.matrix % q.p, psi.matrix):
            return False
    return True


def induce_map(u, m, n):
    """ind(u) for a B-map u: M -> N (matrix), acting by composition."""
    src, tgt = induce(m), induce(n)

    def value(vals, k):
        return u @ src.value_at(vals, k) % m.p

    return ModuleMap(src.module, tgt.module, _map_from(src, tgt, value))


# --------------------------------------------------- T to B, truncated

class BorelWindow:
    """Functionals Dist(B) -> M (M a torus module) seen through F^(n), n < width.

    Dist(T)-linearity gives f(F^(a) t) = t(. + 2a) f(F^(a)); the Borel acts
    by (x f)(y) = f(y x).  Only coordinates determined inside the window
    are compared.
    """

    def __init__(self, weights, p, width):
        self.p = p
        self.weights = [tuple(w) for w in weights]
        self.rank = len(self.weights[0]) if self.weights else 1
        self.width = width
        self.alg = Hyperalgebra(p, self.rank)
        self.exps = list(itertools.product(range(width), repeat=self.rank))

    def _torus(self, t, level, shift):
        n = self.p ** level
        return np.array([int(t[tuple((c + s) % n for c, s in zip(w, shift))]) for w in self.weights],
                        dtype=np.int64)

    def evaluate(self, vals, x):
        """f(x) for x in Dist(B); None if it needs values outside the window."""
        out = np.zeros(len(self.weights), dtype=np.int64)
        for (a, c), t in x.terms.items():
            if any(c):
                raise ModuleError("element not in Dist(B)")
            if a not in vals:
                return None
            out = (out + self._torus(t, x.level, [2 * k for k in a]) * vals[a]) % self.p
        return out

    def act(self, vals, x):
        out = {}
        for n in self.exps:
            y = self.alg.monomial(n, (0,) * self.rank, (0,) * self.rank) * x
            v = self.evaluate(vals, y)
            if v is not None:
                out[n] = v
        return out


def psi_borel_check(weights, p, width):
    """Psi_{B,M}: (Psi f)(F^(n)) = f(phi(F^(n))) intertwines the contracted
    Borel action with the Borel action, on every coordinate the window sees."""
    big = BorelWindow(weights, p, width)
    idx = [j for j, w in enumerate(big.weights) if all(c % p == 0 for c in w)]
    small = BorelWindow([tuple(c // p for c in big.weights[j]) for j in idx], p, max(1, width // p))
    alg = big.alg
    rank = big.rank
    ok = True
    for n0 in big.exps:
        for b in range(len(big.weights)):
            # basis functional concentrated at (n0, b), of weight wt(b) + 2 n0
            w = tuple(c + 2 * k for c, k in zip(big.weights[b], n0))
            if any(c % p for c in w):
                continue
            vals = {n: np.zeros(len(big.weights), dtype=np.int64) for n in big.exps}
            vals[n0][b] = 1

            def psi(v):
                out = {}
                for n in small.exps:
                    y = big.evaluate(v, phi(alg.monomial(n, (0,) * rank, (0,) * rank)))
                    if y is None:
                        continue
                    if np.delete(y, idx).any():
                        return None
                    out[n] = y[idx]
                return out

            base = psi(vals)
            if base is None:
                return False
            for i in range(rank):
                k = 0
                while p ** (k + 1) < width:
                    x = alg.F(i, p ** k)
                    lhs = psi(big.act(vals, phi(x)))
                    rhs = small.act(base, x)
                    if lhs is None:
                        return False
                    for n in set(lhs) & set(rhs):
                        ok = ok and np.array_equal(lhs[n], rhs[n])
                    k += 1
    return ok


def weight_kill_checks(p, bound):
    """Psi_lambda = 0 for lambda outside p*Lambda, and Psi kills every weight
    vector of ind(M^[1]) whose weight is outside p*Lambda."""
    report = {"zero_maps": [], "killed": []}
    for lam in range(-bound, bound + 1):
        if lam % p == 0:
            continue
        mat = psi_map(line((lam,), p), full=True)
        report["zero_maps"].append((lam, not np.asarray(mat).any()))
    for lam in range(0, bound + 1):
        tw = frobenius_twist(line((lam,), p))
        full = psi_map(tw, full=True)
        ind = induce(tw)
        cols = [j for j, w in enumerate(ind.module.weights) if w[0] % p]
        report["killed"].append((lam, not np.asarray(full)[:, cols].any() if cols else True))
    report["ok"] = all(v for _, v in report["zero_maps"]) and all(v for _, v in report["killed"])
    return report
