"""The distribution algebra of SL2^l over F_p in PBW normal form.

A PBW monomial is F^(a) binom(H;b) E^(c) with a, b, c in N^l.  Terms of a
DistElement are grouped by their (a, c) exponents; the torus factor in
front of E^(c) is kept as its function on weights modulo p^K.  The span of
binom(H;j) for j < p^K is exactly the algebra of F_p-valued functions on
(Z/p^K)^l (Lucas), so this is a faithful encoding: products become
pointwise, shifts H -> H + s become rotations, and the binomial
coefficients are recovered by a Mahler transform whenever the explicit
normal form is needed.
"""
import itertools
import re
from functools import lru_cache

import numpy as np

from .fparith import binom_int
from .weights import RootDatum

MAX_TORUS_SIZE = 1 << 20


class ExponentBoundError(RuntimeError):
    """A requested torus level or exponent exceeds the configured bound."""


class SupportError(ValueError):
    """An element is not in the subalgebra it was claimed to lie in."""


@lru_cache(maxsize=None)
def binom_table(p, level):
    """Lucas table C(n, k) mod p for 0 <= n, k < p**level."""
    base = np.array([[binom_int(n, k, p) for k in range(p)] for n in range(p)], dtype=np.int64)
    table = np.ones((1, 1), dtype=np.int64)
    for _ in range(level):
        table = np.kron(table, base) % p
    table.flags.writeable = False
    return table


@lru_cache(maxsize=None)
def mahler_matrix(p, level):
    """Sends the values t(0..N-1) to the coefficients on binom(H; j)."""
    table = binom_table(p, level)
    n = table.shape[0]
    idx = np.arange(n)
    sign = np.where((idx[:, None] - idx[None, :]) % 2 == 0, 1, p - 1)
    out = table * sign % p
    out.flags.writeable = False
    return out


def level_for(n, p):
    """Smallest K with p**K > n."""
    k = 0
    while p ** k <= n:
        k += 1
    return k


def _coef(n, k, p):
    return binom_int(n, k, p)


class Hyperalgebra:
    """Dist(SL2^rank) over F_p."""

    def __init__(self, p, rank=1, max_torus_size=MAX_TORUS_SIZE):
        self.datum = RootDatum(rank, p)
        self.p = self.datum.p
        self.rank = self.datum.rank
        self.max_torus_size = max_torus_size
        self._zero_exp = (0,) * self.rank

    def __eq__(self, other):
        return isinstance(other, Hyperalgebra) and (self.p, self.rank) == (other.p, other.rank)

    def __hash__(self):
        return hash((self.p, self.rank))

    def __repr__(self):
        return f"Hyperalgebra(p={self.p}, rank={self.rank})"

    def check_level(self, level):
        if (self.p ** level) ** self.rank > self.max_torus_size:
            raise ExponentBoundError(
                f"torus level {level} exceeds the bound for p={self.p}, rank={self.rank}")

    # constructors

    def zero(self):
        return DistElement(self, 0, {})

    def one(self):
        return self.monomial(self._zero_exp, self._zero_exp, self._zero_exp)

    def _exp(self, v):
        if isinstance(v, int):
            if self.rank != 1:
                raise ValueError("exponent tuple required for rank > 1")
            v = (v,)
        v = tuple(int(x) for x in v)
        if len(v) != self.rank or min(v) < 0:
            raise ValueError(f"bad exponent {v}")
        return v

    def _unit_vec(self, i, n):
        if not 0 <= i < self.rank:
            raise IndexError(f"index {i} out of range for rank {self.rank}")
        return tuple(n if j == i else 0 for j in range(self.rank))

    def monomial(self, a, b, c, coeff=1):
        a, b, c = self._exp(a), self._exp(b), self._exp(c)
        level = level_for(max(b), self.p)
        self.check_level(level)
        table = binom_table(self.p, level)
        t = np.ones((1,) * 0, dtype=np.int64)
        for j in b:
            t = np.multiply.outer(t, table[:, j]) % self.p
        t = t * (coeff % self.p) % self.p
        return DistElement(self, level, {(a, c): t} if t.any() else {})

    def E(self, i=0, n=1):
        return self.monomial(self._zero_exp, self._zero_exp, self._unit_vec(i, n))

    def F(self, i=0, n=1):
        return self.monomial(self._unit_vec(i, n), self._zero_exp, self._zero_exp)

    def H(self, i=0, n=1):
        """binom(H_i; n)."""
        return self.monomial(self._zero_exp, self._unit_vec(i, n), self._zero_exp)

    def scalar(self, c):
        return self.one() * c

    def torus(self, values, level):
        """Torus element with the given function on weights mod p**level."""
        values = np.asarray(values, dtype=np.int64) % self.p
        n = self.p ** level
        if values.shape != (n,) * self.rank:
            raise ValueError("torus values have the wrong shape")
        z = self._zero_exp
        return DistElement(self, level, {(z, z): values} if values.any() else {})

    def from_terms(self, terms):
        """Build from a mapping (a, b, c) -> coefficient."""
        out = self.zero()
        for (a, b, c), v in terms.items():
            out = out + self.monomial(a, b, c, v)
        return out

    def parse(self, text):
        return _Parser(self, text).parse()


class DistElement:
    """A finite F_p-combination of PBW monomials (see module docstring)."""

    __slots__ = ("alg", "level", "terms")

    def __init__(self, alg, level, terms):
        self.alg = alg
        self.level = level
        self.terms = terms

    # bookkeeping

    @property
    def p(self):
        return self.alg.p

    @property
    def size(self):
        return self.alg.p ** self.level

    def lifted(self, level):
        if level == self.level:
            return self.terms
        if level < self.level:
            raise ValueError("cannot lower the torus level")
        self.alg.check_level(level)
        reps = (self.alg.p ** (level - self.level),) * self.alg.rank
        return {k: np.tile(t, reps) for k, t in self.terms.items()}

    def _check_same(self, other):
        if not isinstance(other, DistElement):
            raise TypeError("DistElement expected")
        if other.alg != self.alg:
            raise ValueError("modulus or rank mismatch")

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    # linear structure

    def __add__(self, other):
        if isinstance(other, int):
            other = self.alg.scalar(other)
        self._check_same(other)
        level = max(self.level, other.level)
        p = self.alg.p
        out = dict(self.lifted(level))
        for k, t in other.lifted(level).items():
            if k in out:
                s = (out[k] + t) % p
                if s.any():
                    out[k] = s
                else:
                    del out[k]
            else:
                out[k] = t
        return DistElement(self.alg, level, out)

    __radd__ = __add__

    def __neg__(self):
        p = self.alg.p
        return DistElement(self.alg, self.level, {k: (-t) % p for k, t in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = self.alg.scalar(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c):
        c %= self.alg.p
        if c == 0:
            return self.alg.zero()
        return DistElement(self.alg, self.level,
                           {k: t * c % self.alg.p for k, t in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, np.integer)):
            return self.scale(int(other))
        return multiply(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, np.integer)):
            return self.scale(int(other))
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.alg.scalar(other)
        if not isinstance(other, DistElement) or other.alg != self.alg:
            return NotImplemented
        level = max(self.level, other.level)
        a, b = self.lifted(level), other.lifted(level)
        return a.keys() == b.keys() and all(np.array_equal(a[k], b[k]) for k in a)

    def __hash__(self):
        return hash(tuple(sorted(self.pbw_terms().items())))

    # normal form

    def pbw_terms(self):
        """The explicit normal form: {(a, b, c): coefficient}."""
        p = self.alg.p
        out = {}
        mahler = mahler_matrix(p, self.level)
        for (a, c), t in self.terms.items():
            coeffs = t
            for ax in range(self.alg.rank):
                coeffs = np.moveaxis(np.tensordot(mahler, coeffs, axes=([1], [ax])), 0, ax) % p
            for b in zip(*np.nonzero(coeffs)):
                out[(a, tuple(int(x) for x in b), c)] = int(coeffs[b])
        return out

    def torus_part(self):
        """Values of the torus factor when the element lies in Dist(T)."""
        z = self.alg._zero_exp
        if any(k != (z, z) for k in self.terms):
            raise SupportError("element is not in Dist(T)")
        return self.terms.get((z, z), np.zeros((self.size,) * self.alg.rank, dtype=np.int64))

    def max_exponent(self):
        out = 0
        for (a, c) in self.terms:
            out = max(out, *a, *c)
        return max(out, self.size - 1)

    def weight(self):
        """Weight of a homogeneous element (None for 0); raises if mixed."""
        ws = {tuple(2 * (ci - ai) for ai, ci in zip(a, c)) for (a, c) in self.terms}
        if len(ws) > 1:
            raise ValueError("element is not weight-homogeneous")
        return ws.pop() if ws else None

    def __str__(self):
        return render(self)

    def __repr__(self):
        return f"DistElement({render(self)})"


# ---------------------------------------------------------------- products

def _roll(t, shifts):
    if not any(shifts):
        return t
    return np.roll(t, shift=tuple(shifts), axis=tuple(range(t.ndim)))


def _shifted_binom(p, level, shift, k):
    """mu -> binom(mu + shift, k) on Z/p^level."""
    table = binom_table(p, level)
    n = table.shape[0]
    return table[(np.arange(n) + shift) % n, k]


def multiply(x, y):
    """Normal form of x*y by straightening E^(c) past F^(a')."""
    x._check_same(y)
    alg = x.alg
    p, rank = alg.p, alg.rank
    if not x.terms or not y.terms:
        return alg.zero()
    kmax = 0
    for (_, c) in x.terms:
        for (a2, _) in y.terms:
            kmax = max(kmax, max(min(ci, ai) for ci, ai in zip(c, a2)))
    level = max(x.level, y.level, level_for(kmax, p))
    xt, yt = x.lifted(level), y.lifted(level)
    n = p ** level
    out = {}
    if rank == 1:
        mu = np.arange(n)
        for ((a,), (c,)), t in xt.items():
            for ((a2,), (c2,)), u in yt.items():
                ks = np.arange(min(c, a2) + 1)
                coefs = np.array([_coef(a + a2 - k, a, p) * _coef(c - k + c2, c2, p) % p
                                  for k in range(len(ks))], dtype=np.int64)
                keep = np.nonzero(coefs)[0]
                if keep.size == 0:
                    continue
                ks, coefs = ks[keep], coefs[keep]
                tt = t[(mu[None, :] - 2 * (a2 - ks[:, None])) % n]
                uu = u[(mu[None, :] - 2 * (c - ks[:, None])) % n]
                gg = binom_table(p, level)[(mu[None, :] - c - a2 + 2 * ks[:, None]) % n, ks[:, None]]
                rows = tt * uu % p * gg % p * coefs[:, None] % p
                for k, row in zip(ks.tolist(), rows):
                    if not row.any():
                        continue
                    key = ((a + a2 - k,), (c - k + c2,))
                    if key in out:
                        out[key] = (out[key] + row) % p
                    else:
                        out[key] = row
    else:
        for (a, c), t in xt.items():
            for (a2, c2), u in yt.items():
                ranges = [range(min(ci, ai) + 1) for ci, ai in zip(c, a2)]
                for ks in itertools.product(*ranges):
                    coef = 1
                    for i in range(rank):
                        coef = coef * _coef(a[i] + a2[i] - ks[i], a[i], p) \
                            * _coef(c[i] - ks[i] + c2[i], c2[i], p) % p
                        if not coef:
                            break
                    if not coef:
                        continue
                    arr = _roll(t, [2 * (a2[i] - ks[i]) for i in range(rank)])
                    arr = arr * _roll(u, [2 * (c[i] - ks[i]) for i in range(rank)]) % p
                    for i in range(rank):
                        if ks[i]:
                            g = _shifted_binom(p, level, -c[i] - a2[i] + 2 * ks[i], ks[i])
                            shape = [1] * rank
                            shape[i] = n
                            arr = arr * g.reshape(shape) % p
                    arr = arr * coef % p
                    if not arr.any():
                        continue
                    key = (tuple(a[i] + a2[i] - ks[i] for i in range(rank)),
                           tuple(c[i] - ks[i] + c2[i] for i in range(rank)))
                    if key in out:
                        out[key] = (out[key] + arr) % p
                    else:
                        out[key] = arr
    return DistElement(alg, level, {k: v for k, v in out.items() if v.any()})


def power(x, n):
    out = x.alg.one()
    for _ in range(n):
        out = out * x
    return out


# ------------------------------------------------------- Frobenius maps

def dist_fr(x):
    """Divide every exponent by p when all are divisible, else send to 0."""
    alg = x.alg
    p = alg.p
    new_level = max(x.level - 1, 0)
    out = {}
    for (a, c), t in x.terms.items():
        if any(v % p for v in a + c):
            continue
        # on the torus this is t -> (mu -> t(p mu)), i.e. binom(H;pj) -> binom(H;j)
        if x.level > 0:
            t = t[(slice(None, None, p),) * alg.rank]
        t = t.copy()
        if t.any():
            out[(tuple(v // p for v in a), tuple(v // p for v in c))] = t
    return DistElement(alg, new_level, out)


_PARTS = {
    None: (True, True, True),
    "plus": (False, False, True),
    "minus": (True, False, False),
    "torus": (False, True, False),
    "borel": (True, True, False),
    "borel_plus": (False, True, True),
}


def fr_prime(x, part=None):
    """Multiply every exponent by p; part names the subalgebra x must lie in.

    part is one of "plus" (Dist(U+)), "minus" (Dist(U)), "torus",
    "borel" (Dist(B), negative roots), "borel_plus", or None for the
    monomial-wise map on all of Dist(G).
    """
    if part not in _PARTS:
        raise ValueError(f"unknown subalgebra {part!r}")
    allow_f, allow_h, allow_e = _PARTS[part]
    alg = x.alg
    p = alg.p
    out = {}
    for (a, c), t in x.terms.items():
        if (any(a) and not allow_f) or (any(c) and not allow_e):
            raise SupportError(f"term with exponents {a},{c} outside {part}")
        if not allow_h and np.any(t != t.flat[0]):
            raise SupportError(f"non-constant torus factor outside {part}")
        # binom(H;j) -> binom(H;jp) is t -> (mu -> t(floor(mu/p)))
        for ax in range(alg.rank):
            t = np.repeat(t, p, axis=ax)
        out[(tuple(v * p for v in a), tuple(v * p for v in c))] = t
    level = x.level + 1
    alg.check_level(level)
    return DistElement(alg, level, out)


_MU0 = {}


def mu0(alg):
    """prod_i sum_{j<p} (-1)^j binom(H_i; j)."""
    key = (alg.p, alg.rank)
    if key not in _MU0:
        _MU0[key] = _build_mu0(alg)
    return _MU0[key]


def _build_mu0(alg):
    out = alg.one()
    for i in range(alg.rank):
        factor = alg.zero()
        for j in range(alg.p):
            factor = factor + alg.H(i, j) * (-1) ** j
        out = out * factor
    return out


def phi(x):
    """The splitting of Dist(Fr): FHE -> 'Fr(F)'Fr(H)'Fr(E) * mu0."""
    return fr_prime(x) * mu0(x.alg)


def chi(x, lam):
    """Character value of lam on an element of Dist(T)."""
    t = x.torus_part()
    n = x.size
    return int(t[tuple(v % n for v in lam)])


# --------------------------------------------- anti-automorphisms, Hopf

def _negated_torus(t):
    for ax in range(t.ndim):
        n = t.shape[ax]
        t = np.take(t, (-np.arange(n)) % n, axis=ax)
    return t


def _part(alg, a, c, level=0, t=None):
    z = alg._zero_exp
    if t is None:
        t = np.ones((1,) * alg.rank, dtype=np.int64)
        level = 0
    return DistElement(alg, level, {(a or z, c or z): t})


def antipode(x):
    """S: E^(n) -> (-1)^n E^(n), F^(n) -> (-1)^n F^(n), H -> -H, order reversed."""
    alg = x.alg
    out = alg.zero()
    for (a, c), t in x.terms.items():
        sign = -1 if (sum(a) + sum(c)) % 2 else 1
        piece = _part(alg, None, c) * _part(alg, None, None, x.level, _negated_torus(t)) \
            * _part(alg, a, None)
        out = out + piece * sign
    return out


def tau(x):
    """Anti-automorphism fixing every E^(n), F^(n) and sending H to -H."""
    alg = x.alg
    out = alg.zero()
    for (a, c), t in x.terms.items():
        out = out + _part(alg, None, c) * _part(alg, None, None, x.level, _negated_torus(t)) \
            * _part(alg, a, None)
    return out


def omega(x):
    """Anti-automorphism exchanging E^(n) and F^(n) and fixing Dist(T).

    It has to fix H: Omega(EF - FE) = EF - FE.
    """
    alg = x.alg
    out = {}
    for (a, c), t in x.terms.items():
        out[(c, a)] = t.copy()
    return DistElement(alg, x.level, out)


def coproduct(x):
    """Delta(x) as {(left (a,b,c), right (a,b,c)): coefficient}."""
    p = x.p
    out = {}
    for (a, b, c), v in x.pbw_terms().items():
        for a1 in itertools.product(*[range(n + 1) for n in a]):
            for b1 in itertools.product(*[range(n + 1) for n in b]):
                for c1 in itertools.product(*[range(n + 1) for n in c]):
                    left = (a1, b1, c1)
                    right = (tuple(u - w for u, w in zip(a, a1)),
                             tuple(u - w for u, w in zip(b, b1)),
                             tuple(u - w for u, w in zip(c, c1)))
                    key = (left, right)
                    out[key] = (out.get(key, 0) + v) % p
    return {k: v for k, v in out.items() if v}


def counit(x):
    z = x.alg._zero_exp
    t = x.terms.get((z, z))
    return 0 if t is None else int(t.flat[0])


def tensor_apply(alg, pairs, left_map, right_map, combine):
    """Sum of combine(left_map(x1), right_map(x2)) * coeff over a coproduct."""
    out = None
    for (left, right), v in pairs.items():
        term = combine(left_map(alg.monomial(*left)), right_map(alg.monomial(*right)))
        term = term * v
        out = term if out is None else out + term
    return out


def adjoint(x, y):
    """ad(x)(y) = sum x_(1) y S(x_(2))."""
    alg = x.alg
    out = alg.zero()
    for (left, right), v in coproduct(x).items():
        out = out + alg.monomial(*left) * y * antipode(alg.monomial(*right)) * v
    return out


def e_plus(alg):
    out = alg.one()
    for i in range(alg.rank):
        out = out * alg.E(i, alg.p - 1)
    return out


def eplus_commutation_certificate(alg, i, r):
    """Sort the terms of E+ F_i^(rp) into the three admissible families.

    bucket 1: exactly F_i^(rp) E+;
    bucket 2: F_i^(s) * Dist(G) with p not dividing s, 0 < s < rp;
    bucket 3: F_i^(sp) z Dist(G), s < r, with z in Dist(T_1) killed by the
    character 2(p-1)rho.  Writing the torus factor as
    sum_J z_J binom(H; pJ) with z_J in Dist(T_1), every z_J is killed
    exactly when the factor vanishes on the coset 2(p-1)rho + p*Lambda.
    """
    p = alg.p
    if r < 1:
        raise ValueError("r must be positive")
    product = e_plus(alg) * alg.F(i, r * p)
    target = alg.F(i, r * p) * e_plus(alg)
    buckets = {1: [], 2: [], 3: []}
    failures = []
    residue = (2 * p - 2) % p
    for (a, c), t in sorted(product.terms.items()):
        term = DistElement(alg, product.level, {(a, c): t})
        s = a[i]
        if any(a[j] for j in range(alg.rank) if j != i):
            failures.append(str(term))
        elif s == r * p:
            (buckets[1] if term == target else failures).append(str(term))
        elif 0 < s < r * p and s % p:
            buckets[2].append(str(term))
        elif s % p == 0 and s < r * p:
            coset = t[(slice(residue, None, p),) * alg.rank]
            (failures if coset.any() else buckets[3]).append(str(term))
        else:
            failures.append(str(term))
    if not buckets[1]:
        failures.append("missing F_i^(rp) E+")
    return {"i": i, "r": r, "p": p, "rank": alg.rank, "buckets": buckets,
            "failures": failures, "ok": not failures}


# ---------------------------------------------------------- rendering

def _factor(name, i, n, rank, torus=False):
    label = name if rank == 1 else f"{name}{i + 1}"
    if torus:
        return f"[{label};{n}]"
    return label if n == 1 else f"{label}^({n})"


def render_monomial(a, b, c, rank):
    parts = [_factor("F", i, n, rank) for i, n in enumerate(a) if n]
    parts += [_factor("H", i, n, rank, torus=True) for i, n in enumerate(b) if n]
    parts += [_factor("E", i, n, rank) for i, n in enumerate(c) if n]
    return " ".join(parts)


def _order(key):
    a, b, c = key
    return (-(sum(a) + sum(c)), tuple(-v for v in a), tuple(-v for v in c), b)


def render(x):
    terms = x.pbw_terms()
    if not terms:
        return "0"
    out = []
    for key in sorted(terms, key=_order):
        mono = render_monomial(*key, x.alg.rank)
        v = terms[key]
        if not mono:
            out.append(str(v))
        else:
            out.append(mono if v == 1 else f"{v} {mono}")
    return " + ".join(out)


# ------------------------------------------------------------ parsing

_TOKEN = re.compile(r"\s*(?:(\d+)|([EF])(\d*)(?:\^\(?(\d+)\)?)?|\[H(\d*)\s*[;,]\s*(\d+)\]|(mu0)|([()+\-*]))")


class ParseError(ValueError):
    pass


class _Parser:
    """expr := term (('+'|'-') term)*; term := factor ('*'? factor)*."""

    def __init__(self, alg, text):
        self.alg = alg
        self.tokens = []
        pos = 0
        text = text.strip()
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if not m or m.end() == pos:
                raise ParseError(f"unexpected input at {text[pos:]!r}")
            self.tokens.append(m.groups())
            pos = m.end()
            while pos < len(text) and text[pos].isspace():
                pos += 1
        self.i = 0

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def parse(self):
        if not self.tokens:
            raise ParseError("empty expression")
        out = self.expr()
        if self.peek() is not None:
            raise ParseError("trailing input")
        return out

    def expr(self):
        sign = 1
        tok = self.peek()
        if tok and tok[7] in ("+", "-"):
            sign = -1 if tok[7] == "-" else 1
            self.i += 1
        out = self.term() * sign
        while (tok := self.peek()) and tok[7] in ("+", "-"):
            self.i += 1
            t = self.term()
            out = out + t if tok[7] == "+" else out - t
        return out

    def term(self):
        out = self.factor()
        while (tok := self.peek()) and tok[7] not in ("+", "-", ")"):  # juxtaposition is a product
            if tok[7] == "*":
                self.i += 1
            out = out * self.factor()
        return out

    def _index(self, s):
        if not s:
            if self.alg.rank != 1:
                raise ParseError("generator index required for rank > 1")
            return 0
        i = int(s) - 1
        if not 0 <= i < self.alg.rank:
            raise ParseError(f"index {s} out of range")
        return i

    def factor(self):
        tok = self.peek()
        if tok is None:
            raise ParseError("unexpected end of input")
        num, gen, gidx, gexp, hidx, hexp, mu, sym = tok
        self.i += 1
        if num:
            return self.alg.scalar(int(num))
        if gen:
            n = int(gexp) if gexp else 1
            i = self._index(gidx)
            return self.alg.E(i, n) if gen == "E" else self.alg.F(i, n)
        if hexp:
            return self.alg.H(self._index(hidx), int(hexp))
        if mu:
            return mu0(self.alg)
        if sym == "(":
            out = self.expr()
            if self.peek() is None or self.peek()[7] != ")":
                raise ParseError("missing ')'")
            self.i += 1
            return out
        raise ParseError(f"unexpected token {sym!r}")
