"""Arithmetic rows of the case tables: feasibility of row (f) and the
group-specific rows for s = 1 and s = 2, checked as integer predicates only."""
from __future__ import annotations

from dataclasses import dataclass

from .errors import PreconditionViolation


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_power(q: int) -> tuple[int, int] | None:
    """(prime, exponent) if q is a prime power, else None."""
    if q < 2:
        return None
    for f in range(2, q + 1):
        if q % f == 0:
            e = 0
            while q % f == 0:
                q //= f
                e += 1
            return (f, e) if q == 1 else None
    return None


@dataclass(frozen=True, order=True)
class FRow:
    p: int
    a: int
    s: int
    v: int
    b: int
    r: int
    lam: int

    @property
    def vbrl(self) -> tuple[int, int, int, int]:
        return (self.v, self.b, self.r, self.lam)


def f_row_conditions(p: int, a: int, s: int) -> bool:
    """All row-(f) side conditions for (p, a, s)."""
    if a < 2 or s < 1:
        return False
    if (p * s + 1) % a:
        return False
    rem = p * s - a + 1
    if rem % a or (rem // a) % s:
        return False
    # (a-1)/(p-a) <= s <= a-1 <= p-2
    return p - a > 0 and a - 1 <= s * (p - a) and s <= a - 1 <= p - 2


def f_row(p: int, a: int, s: int) -> FRow:
    """Derived (v, b, r, λ) for a feasible (p, a, s)."""
    if not f_row_conditions(p, a, s):
        raise PreconditionViolation(f"(p, a, s) = ({p}, {a}, {s}) violates the row (f) conditions")
    b = p * s + 1
    lam = p * (a - 2) + (p * s - a + 1) // (a * s)
    return FRow(p, a, s, p * a, b, b * (a - 1) // a, lam)


def feasible_f_rows(p: int) -> list[FRow]:
    """Exhaustive scan over 2 <= a <= p-1, 1 <= s <= a-1, sorted by (a, s)."""
    if p < 3 or not is_prime(p):
        raise PreconditionViolation(f"p={p} is not an odd prime")
    return [f_row(p, a, s) for a in range(2, p) for s in range(1, a) if f_row_conditions(p, a, s)]


def row_c(q: int, n: int) -> tuple[int, tuple[int, int, int, int]]:
    """(p, (v, b, r, λ)) of row (c) for prime power q and n >= 2."""
    if prime_power(q) is None or n < 2:
        raise PreconditionViolation("row (c) needs a prime power q and n >= 2")
    p = (q ** n - 1) // (q - 1)
    v = (q ** (n + 1) - 1) // (q - 1)
    return p, (v, v, q ** n, q ** n - q ** (n - 1))


def row_c_matches(p: int) -> list[tuple[int, int, tuple[int, int, int, int]]]:
    """Every (q, n, params) with (q^n - 1)/(q - 1) = p."""
    out = []
    for q in range(2, p):
        if prime_power(q) is None:
            continue
        n = 2
        while (q ** n - 1) // (q - 1) <= p:
            if (q ** n - 1) // (q - 1) == p:
                out.append((q, n, row_c(q, n)[1]))
            n += 1
    return out


@dataclass(frozen=True)
class TableRow:
    group: str
    p: int
    a: int
    s: int
    params: tuple[int, int, int, int]
    conditions: bool
    extra: tuple = ()


def s1_alternating(p: int) -> TableRow:
    a = (p + 1) // 2
    ok = is_prime(p) and p > 2 and (p + 1) % 2 == 0
    row = f_row(p, a, 1).vbrl if ok and f_row_conditions(p, a, 1) else None
    return TableRow(f"A{p + 1}", p, a, 1, row, ok and row is not None)


def s1_affine(n: int, m: int) -> TableRow:
    """AGL(n, 2) row: p = 2^n - 1 a Mersenne prime, a = 2^m, 1 <= m <= n-1."""
    p, a = 2 ** n - 1, 2 ** m
    ok = is_prime(p) and 1 <= m <= n - 1
    params = (a * p, 2 ** n, 2 ** n - 2 ** (n - m), (2 ** m - 1) * (2 ** n - 2 ** (n - m) - 1))
    return TableRow(f"AGL({n},2)", p, a, 1, params, ok, extra=(("r_star", p * (a - 1)),))


def s1_projective(p: int, a: int) -> TableRow:
    """PGL(2, p) row: a - 1 divides p - 1."""
    ok = is_prime(p) and a >= 2 and (p - 1) % (a - 1) == 0 and f_row_conditions(p, a, 1)
    params = f_row(p, a, 1).vbrl if f_row_conditions(p, a, 1) else None
    return TableRow(f"PGL(2,{p})", p, a, 1, params, ok)


def s1_symplectic() -> TableRow:
    return TableRow("Sp4(2)", 5, 2, 1, f_row(5, 2, 1).vbrl, True, extra=(("design", "2-(6,3,2)"),))


def s1_mathieu() -> TableRow:
    return TableRow("M11", 11, 2, 1, f_row(11, 2, 1).vbrl, True, extra=(("design", "2-(12,6,5)"),))


def s2_affine(n: int, j: int) -> TableRow:
    """AGL(n, 3) row: n >= 3 odd, p = (3^n - 1)/2 prime, a = 3^j."""
    p, a = (3 ** n - 1) // 2, 3 ** j
    ok = n >= 3 and n % 2 == 1 and is_prime(p) and 1 <= j <= n - 1
    params = ((3 ** n - 1) * 3 ** j // 2, 3 ** n, 3 ** (n - j) * (3 ** j - 1),
              (3 ** n - 1) * (3 ** j - 2) // 2 + (3 ** (n - j) - 1) // 2)
    return TableRow(f"AGL({n},3)", p, a, 2, params, ok)


def s2_projective(n: int, a: int) -> TableRow:
    """PGL(n, 2) row: p = 2^(n-1) - 1 Mersenne prime, a odd divisor of 2p+1, 3 <= a <= (2p+1)/3."""
    p = 2 ** (n - 1) - 1
    ok = (is_prime(p) and a % 2 == 1 and (2 * p + 1) % a == 0 and 3 <= a and 3 * a <= 2 * p + 1)
    params = (a * p, 2 ** n - 1, (2 ** n - 1) * (a - 1) // a,
              p * (a - 2) + (2 ** n - 1 - a) // (2 * a))
    return TableRow(f"PGL({n},2)", p, a, 2, params, ok)


def s2_a7() -> TableRow:
    return TableRow("A7", 7, 5, 2, (35, 15, 12, 22), True, extra=(("complement_dual", "PG(3,2)"),))
