"""Weights of the root datum A1^l: integer tuples of pairings with the coroots."""
from .fparith import PrimeModulus, binom_int


class RootDatum:
    """A1 x ... x A1 (rank factors) over F_p; the Cartan matrix is 2*Identity."""

    def __init__(self, rank, p):
        if rank < 1:
            raise ValueError("rank must be at least 1")
        self.rank = int(rank)
        self.modulus = p if isinstance(p, PrimeModulus) else PrimeModulus(p)

    @property
    def p(self):
        return self.modulus.p

    def simple_root(self, i):
        """alpha_i has pairing 2 with its own coroot and 0 with the others."""
        check_index(self, i)
        return tuple(2 if j == i else 0 for j in range(self.rank))

    def __eq__(self, other):
        return isinstance(other, RootDatum) and (self.rank, self.p) == (other.rank, other.p)

    def __hash__(self):
        return hash((self.rank, self.p))

    def __repr__(self):
        return f"RootDatum(rank={self.rank}, p={self.p})"


def check_index(datum, i):
    if not 0 <= i < datum.rank:
        raise IndexError(f"index {i} out of range for rank {datum.rank}")


def weight(*coords):
    if len(coords) == 1 and not isinstance(coords[0], int):
        coords = tuple(coords[0])
    return tuple(int(c) for c in coords)


def decompose(lam, p):
    """lam = lam0 + p*lam1 with every coordinate of lam0 in [0, p)."""
    p = int(p)
    low = tuple(c % p for c in lam)
    high = tuple(c // p for c in lam)
    return low, high


def in_restricted(lam, p):
    return all(0 <= c < int(p) for c in lam)


def is_dominant(lam):
    return all(c >= 0 for c in lam)


def divisible(lam, p):
    return all(c % int(p) == 0 for c in lam)


def chi(lam, i, n, p):
    """Value of the torus character lam on binom(H_i; n)."""
    if not 0 <= i < len(lam):
        raise IndexError(f"index {i} out of range for rank {len(lam)}")
    return binom_int(lam[i], n, p)


def rho(datum):
    return (1,) * datum.rank


def two_p_minus_one_rho(datum):
    return (2 * datum.p - 2,) * datum.rank


def p_minus_one_rho(datum):
    return (datum.p - 1,) * datum.rank


class WeylElement:
    """For A1^l the Weyl group is {+-1}^l; an element is the set of flipped factors."""

    def __init__(self, flips=()):
        self.flips = frozenset(int(i) for i in flips)

    def __call__(self, lam):
        return weyl_apply(self, lam)

    def __eq__(self, other):
        return isinstance(other, WeylElement) and self.flips == other.flips

    def __hash__(self):
        return hash(self.flips)

    def __repr__(self):
        return f"WeylElement({sorted(self.flips)})"


def weyl_group(datum):
    out = []
    for mask in range(1 << datum.rank):
        out.append(WeylElement(i for i in range(datum.rank) if mask >> i & 1))
    return out


def weyl_apply(w, lam):
    return tuple(-c if i in w.flips else c for i, c in enumerate(lam))


def render(lam):
    return "(" + ",".join(str(c) for c in lam) + ")"


def parse(text):
    text = text.strip()
    if text.startswith("(") and text.endswith(")"):
        text = text[1:-1]
    parts = [s for s in text.split(",") if s.strip()]
    if not parts:
        raise ValueError(f"cannot parse weight {text!r}")
    return tuple(int(s) for s in parts)


def add(lam, mu):
    return tuple(a + b for a, b in zip(lam, mu))


def scale(lam, k):
    return tuple(k * a for a in lam)
