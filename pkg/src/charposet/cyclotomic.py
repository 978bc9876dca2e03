"""Exact arithmetic in rings of cyclotomic integers Z[zeta_n].

A value is a vector of integer coordinates in the power basis
1, zeta, ..., zeta^(phi(n)-1), i.e. a residue in Z[x]/(Phi_n(x)).  The power
basis is an integral basis, so equality is coordinate-wise and division by a
rational integer is coordinate-wise when it is exact.  All character values in
this package live here; nothing is ever rounded.
"""

from __future__ import annotations

from typing import Sequence

from .errors import ConductorMismatch, NotDivisible, NotRationalInteger

_PHI_CACHE: dict[int, tuple[int, ...]] = {}


def _poly_mul(a: Sequence[int], b: Sequence[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] += ai * bj
    return out


def _poly_divmod(num: Sequence[int], den: Sequence[int]) -> tuple[list[int], list[int]]:
    """Exact long division by a monic integer polynomial."""
    num = list(num)
    d = len(den) - 1
    assert den[d] == 1
    quot = [0] * max(len(num) - d, 1)
    for i in range(len(num) - 1, d - 1, -1):
        c = num[i]
        if c:
            quot[i - d] = c
            for j, dj in enumerate(den):
                num[i - d + j] -= c * dj
    while len(num) > 1 and num[-1] == 0:
        num.pop()
    return quot, num


def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients of Phi_n, low degree first, computed by dividing x^n - 1
    by all Phi_d for proper divisors d."""
    if n < 1:
        raise ValueError(f"conductor must be positive, got {n}")
    cached = _PHI_CACHE.get(n)
    if cached is not None:
        return cached
    if n == 1:
        poly = (-1, 1)
    else:
        num = [0] * (n + 1)
        num[0] = -1
        num[n] = 1
        rem = num
        for d in range(1, n):
            if n % d == 0:
                rem, r = _poly_divmod(rem, cyclotomic_polynomial(d))
                assert r == [0]
        poly = tuple(rem)
    _PHI_CACHE[n] = poly
    return poly


def euler_phi(n: int) -> int:
    return len(cyclotomic_polynomial(n)) - 1


def _reduce(n: int, poly: Sequence[int]) -> tuple[int, ...]:
    """Reduce an integer polynomial in zeta_n to power-basis coordinates."""
    phi = cyclotomic_polynomial(n)
    deg = len(phi) - 1
    if len(poly) > n:
        folded = [0] * n
        for i, c in enumerate(poly):
            folded[i % n] += c
        poly = folded
    _, rem = _poly_divmod(list(poly), phi)
    rem.extend([0] * (deg - len(rem)))
    return tuple(rem)


class CycInt:
    """An element of Z[zeta_n] in canonical power-basis coordinates."""

    __slots__ = ("n", "coeffs")

    def __init__(self, n: int, coeffs: Sequence[int], *, _raw: bool = False):
        deg = euler_phi(n)
        if _raw:
            self.n = n
            self.coeffs = tuple(coeffs)
        else:
            if len(coeffs) > deg:
                coeffs = _reduce(n, coeffs)
            else:
                coeffs = tuple(coeffs) + (0,) * (deg - len(coeffs))
            self.n = n
            self.coeffs = coeffs

    def __eq__(self, other):
        return (
            isinstance(other, CycInt)
            and self.n == other.n
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.n, self.coeffs))

    def __repr__(self):
        return f"CycInt({self.n}, {list(self.coeffs)})"

    def __add__(self, other: "CycInt") -> "CycInt":
        _check(self, other)
        return CycInt(self.n, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)), _raw=True)

    def __sub__(self, other: "CycInt") -> "CycInt":
        _check(self, other)
        return CycInt(self.n, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)), _raw=True)

    def __neg__(self) -> "CycInt":
        return CycInt(self.n, tuple(-a for a in self.coeffs), _raw=True)

    def __mul__(self, other):
        if isinstance(other, int):
            return CycInt(self.n, tuple(a * other for a in self.coeffs), _raw=True)
        _check(self, other)
        return CycInt(self.n, mul_coeffs(self.n, self.coeffs, other.coeffs), _raw=True)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_rational_integer(self) -> bool:
        return not any(self.coeffs[1:])

    def approx(self) -> complex:
        """Debug printer only: floating approximation of the value."""
        import cmath

        z = cmath.exp(2j * cmath.pi / self.n)
        return sum(c * z**i for i, c in enumerate(self.coeffs))


def _check(a: CycInt, b: CycInt) -> None:
    if a.n != b.n:
        raise ConductorMismatch(f"conductors differ: {a.n} vs {b.n}")


def mul_coeffs(n: int, a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    """Product in power-basis coordinates; exponents fold mod n before the
    division by Phi_n."""
    if not any(a[1:]):  # scalar fast path
        s = a[0]
        return tuple(s * x for x in b)
    if not any(b[1:]):
        s = b[0]
        return tuple(s * x for x in a)
    acc = [0] * n if len(a) + len(b) - 1 > n else [0] * (len(a) + len(b) - 1)
    m = len(acc)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    k = i + j
                    if k >= m:
                        k -= n
                    acc[k] += ai * bj
    return _reduce(n, acc)


def integer(n: int, c: int) -> CycInt:
    """The rational integer c as an element of Z[zeta_n]."""
    coeffs = [0] * euler_phi(n)
    coeffs[0] = c
    return CycInt(n, coeffs, _raw=True)


def zero(n: int) -> CycInt:
    return CycInt(n, [0] * euler_phi(n), _raw=True)


def one(n: int) -> CycInt:
    return integer(n, 1)


def zeta_pow(n: int, k: int) -> CycInt:
    """Canonical representative of zeta_n^k."""
    if n < 1:
        raise ValueError(f"conductor must be positive, got {n}")
    k %= n
    deg = euler_phi(n)
    if k < deg:
        coeffs = [0] * deg
        coeffs[k] = 1
        return CycInt(n, coeffs, _raw=True)
    poly = [0] * (k + 1)
    poly[k] = 1
    return CycInt(n, _reduce(n, poly), _raw=True)


def arith(a: CycInt, b: CycInt, op: str) -> CycInt:
    """Ring arithmetic dispatch; op in {add, sub, mul}."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown op {op!r}")


def conjugate(a: CycInt) -> CycInt:
    """Image under zeta -> zeta^(n-1), i.e. complex conjugation."""
    n = a.n
    poly = [0] * n
    for i, c in enumerate(a.coeffs):
        if c:
            poly[(n - i) % n] += c
    return CycInt(n, _reduce(n, poly), _raw=True)


def as_integer(a: CycInt) -> int:
    if any(a.coeffs[1:]):
        raise NotRationalInteger(f"{a!r} has nonzero non-constant coordinates")
    return a.coeffs[0]


def exact_div_int(a: CycInt, m: int) -> CycInt:
    if m < 1:
        raise ValueError(f"divisor must be positive, got {m}")
    out = []
    for c in a.coeffs:
        q, r = divmod(c, m)
        if r:
            raise NotDivisible(f"coefficient {c} not divisible by {m}")
        out.append(q)
    return CycInt(a.n, tuple(out), _raw=True)


def zeta_table(n: int) -> tuple[CycInt, ...]:
    """All powers zeta_n^0 .. zeta_n^(n-1), for bulk character construction."""
    return tuple(zeta_pow(n, k) for k in range(n))
