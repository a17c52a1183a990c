"""Exact arithmetic over the prime field F_p.

Binomial coefficients of arbitrary integers are reduced mod p through
Lucas' digit rule, so no big integers are ever formed.  ``DensePoly``
carries a formal parameter for identities that must hold for every
value of a scalar.
"""
from functools import lru_cache

MAX_PRIME = 13


class ModulusError(ValueError):
    pass


def _is_prime(n):
    if n < 2:
        return False
    return all(n % d for d in range(2, int(n ** 0.5) + 1))


class PrimeModulus:
    """A prime 2 <= p <= 13, checked at construction."""

    __slots__ = ("p",)

    def __init__(self, p):
        p = int(p)
        if not _is_prime(p):
            raise ModulusError(f"{p} is not prime")
        if p > MAX_PRIME:
            raise ModulusError(f"p={p} exceeds the supported bound {MAX_PRIME}")
        self.p = p

    def __int__(self):
        return self.p

    def __index__(self):
        return self.p

    def __eq__(self, other):
        return int(self) == int(other)

    def __hash__(self):
        return hash(self.p)

    def __repr__(self):
        return f"PrimeModulus({self.p})"


def _as_int(p):
    return p.p if isinstance(p, PrimeModulus) else int(p)


@lru_cache(maxsize=None)
def _small_binom_table(p):
    table = [[0] * p for _ in range(p)]
    for n in range(p):
        table[n][0] = 1
        for k in range(1, n + 1):
            table[n][k] = (table[n - 1][k - 1] + table[n - 1][k]) % p
    return table


@lru_cache(maxsize=1 << 16)
def _lucas(n, k, p):
    table = _small_binom_table(p)
    out = 1
    while k:
        nd, kd = n % p, k % p
        if kd > nd:
            return 0
        out = out * table[nd][kd] % p
        n //= p
        k //= p
    return out


def binom_int(n, k, p):
    """C(n, k) mod p for any integer n and natural k."""
    p = _as_int(p)
    if k < 0:
        raise ValueError("k must be natural")
    if k == 0:
        return 1
    if n >= 0:
        return 0 if n < k else _lucas(n, k, p)
    # C(n,k) = (-1)^k C(k-n-1, k) for n < 0
    value = _lucas(k - n - 1, k, p)
    return value if k % 2 == 0 else (-value) % p


def inverse(a, p):
    a %= p
    if a == 0:
        raise ZeroDivisionError("0 has no inverse mod p")
    return pow(a, p - 2, p)


class Scalar:
    """An element of F_p.  Containers mostly store bare ints; this wrapper
    is for callers that want operator syntax with a checked modulus."""

    __slots__ = ("value", "p")

    def __init__(self, value, p):
        self.p = _as_int(p)
        self.value = int(value) % self.p

    def _other(self, other):
        if isinstance(other, Scalar):
            if other.p != self.p:
                raise ModulusError("modulus mismatch")
            return other.value
        return int(other) % self.p

    def __add__(self, other):
        return Scalar(self.value + self._other(other), self.p)

    __radd__ = __add__

    def __sub__(self, other):
        return Scalar(self.value - self._other(other), self.p)

    def __rsub__(self, other):
        return Scalar(self._other(other) - self.value, self.p)

    def __mul__(self, other):
        return Scalar(self.value * self._other(other), self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return Scalar(-self.value, self.p)

    def inverse(self):
        return Scalar(inverse(self.value, self.p), self.p)

    def __truediv__(self, other):
        return self * Scalar(self._other(other), self.p).inverse()

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        return Scalar(pow(self.value, n, self.p), self.p)

    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self.p == other.p and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.p))

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"{self.value} (mod {self.p})"


class DensePoly:
    """Univariate polynomial over F_p in a formal variable, ascending coefficients."""

    __slots__ = ("coeffs", "p")

    def __init__(self, coeffs, p):
        self.p = _as_int(p)
        cs = [int(c) % self.p for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def variable(cls, p):
        return cls([0, 1], p)

    @classmethod
    def constant(cls, c, p):
        return cls([c], p)

    @property
    def degree(self):
        """None for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else None

    def is_zero(self):
        return not self.coeffs

    def _check(self, other):
        if isinstance(other, DensePoly):
            if other.p != self.p:
                raise ModulusError("modulus mismatch")
            return other
        if isinstance(other, Scalar):
            if other.p != self.p:
                raise ModulusError("modulus mismatch")
            return DensePoly([other.value], self.p)
        return DensePoly([int(other)], self.p)

    def __add__(self, other):
        other = self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return DensePoly([x + y for x, y in zip(a, b)], self.p)

    __radd__ = __add__

    def __neg__(self):
        return DensePoly([-c for c in self.coeffs], self.p)

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return self._check(other) - self

    def __mul__(self, other):
        other = self._check(other)
        if self.is_zero() or other.is_zero():
            return DensePoly([], self.p)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return DensePoly(out, self.p)

    __rmul__ = __mul__

    def __pow__(self, n):
        out = DensePoly([1], self.p)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def compose(self, inner):
        """self(inner(xi)) by Horner's rule."""
        inner = self._check(inner)
        out = DensePoly([], self.p)
        for c in reversed(self.coeffs):
            out = out * inner + c
        return out

    def __call__(self, value):
        return self.eval(value)

    def eval(self, value):
        value = int(value) % self.p
        out = 0
        for c in reversed(self.coeffs):
            out = (out * value + c) % self.p
        return out

    def __eq__(self, other):
        if isinstance(other, DensePoly):
            return self.p == other.p and self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == DensePoly([other], self.p).coeffs
        return NotImplemented

    def __hash__(self):
        return hash((self.coeffs, self.p))

    def __repr__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if i == 0 else ("xi" if i == 1 else f"xi^{i}")
            if not mono:
                parts.append(str(c))
            else:
                parts.append(mono if c == 1 else f"{c}*{mono}")
        return " + ".join(parts)
