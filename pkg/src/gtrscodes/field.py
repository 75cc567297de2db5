"""Exact arithmetic in GF(p^m) with exp/log tables.

Elements are plain integers in [0, p^m): the base-p digits of the integer
are the coefficients (constant term first) of the element written as a
polynomial over GF(p).  For a prime field this is just the usual residue.
Multiplication, inversion and powers go through discrete-log tables, so
every operation is exact and O(1) at the field sizes supported here.
"""

from __future__ import annotations

from math import gcd
from typing import Sequence

MAX_ORDER = 1 << 16


class FieldError(ValueError):
    """Invalid field construction or an operation outside the field's domain."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


# ---------------------------------------------------------------------------
# Polynomial helpers over GF(p).  Coefficient lists are constant-term first.
# ---------------------------------------------------------------------------

def _poly_trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _poly_mul(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            out[i + j] = (out[i + j] + ai * bj) % p
    return _poly_trim(out)


def _poly_mod(a: Sequence[int], mod: Sequence[int], p: int) -> list[int]:
    a = list(a)
    dm = len(mod) - 1
    inv_lead = pow(mod[-1], p - 2, p)
    while len(a) - 1 >= dm and _poly_trim(a):
        d = len(a) - 1
        if a[-1] == 0:
            a.pop()
            continue
        factor = (a[-1] * inv_lead) % p
        shift = d - dm
        for i, mi in enumerate(mod):
            a[i + shift] = (a[i + shift] - factor * mi) % p
        a = _poly_trim(a)
    return a


def _poly_mulmod(a, b, mod, p):
    return _poly_mod(_poly_mul(a, b, p), mod, p)


def _poly_gcd(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    a, b = _poly_trim(list(a)), _poly_trim(list(b))
    while b:
        a, b = b, _poly_mod(a, b, p)
    return a


def _poly_pow_frobenius(r: list[int], mod: Sequence[int], p: int) -> list[int]:
    """r ** p reduced mod `mod`, by square-and-multiply."""
    out = [1]
    base = list(r)
    e = p
    while e:
        if e & 1:
            out = _poly_mulmod(out, base, mod, p)
        base = _poly_mulmod(base, base, mod, p)
        e >>= 1
    return out


def is_irreducible(modulus: Sequence[int], p: int) -> bool:
    """Exact irreducibility test over GF(p) via x^(p^i) Frobenius iterates."""
    mod = [c % p for c in modulus]
    m = len(mod) - 1
    if m < 1 or mod[-1] == 0:
        return False
    if m == 1:
        return True
    # r_i = x^(p^i) mod f; f irreducible iff gcd(r_i - x, f) = 1 for
    # 1 <= i <= m/2 and r_m = x.
    r = [0, 1]
    for i in range(1, m + 1):
        r = _poly_pow_frobenius(r, mod, p)
        if i <= m // 2:
            diff = list(r)
            while len(diff) < 2:
                diff.append(0)
            diff[1] = (diff[1] - 1) % p
            g = _poly_gcd(mod, diff, p)
            if len(g) - 1 > 0:
                return False
    want = _poly_trim([0, 1])
    return _poly_trim(list(r)) == want


def _find_irreducible(p: int, m: int) -> list[int]:
    """Smallest monic irreducible of degree m, by the integer encoding of
    its low coefficients."""
    if m == 1:
        return [0, 1]
    for j in range(p ** m):
        coeffs = []
        t = j
        for _ in range(m):
            coeffs.append(t % p)
            t //= p
        cand = coeffs + [1]
        if is_irreducible(cand, p):
            return cand
    raise FieldError(f"no irreducible polynomial of degree {m} over GF({p})")


class GaloisField:
    """GF(p^m), immutable after construction and shareable.

    Parameters
    ----------
    p : prime characteristic
    m : extension degree
    modulus : optional monic irreducible of degree m over GF(p), coefficient
        list constant-term first.  Defaults to the smallest one.
    generator : optional primitive element (int encoding or coefficient
        sequence).  Defaults to the smallest element of full order.
    """

    def __init__(self, p: int, m: int = 1, modulus: Sequence[int] | None = None,
                 generator: int | Sequence[int] | None = None):
        if not is_prime(p):
            raise FieldError(f"characteristic {p} is not prime")
        if m < 1:
            raise FieldError("extension degree must be >= 1")
        self.p = p
        self.m = m
        self.order = p ** m
        if self.order > MAX_ORDER:
            raise FieldError(f"field size {self.order} exceeds cap {MAX_ORDER}")

        if modulus is None:
            modulus = _find_irreducible(p, m)
        else:
            modulus = [c % p for c in modulus]
            if len(modulus) != m + 1 or modulus[-1] != 1:
                raise FieldError("modulus must be monic of degree m")
            if not is_irreducible(modulus, p):
                raise FieldError("supplied modulus is reducible")
        self.modulus = tuple(modulus)

        # subfield size for square extensions (Frobenius / norm / trace)
        self.q = p ** (m // 2) if m % 2 == 0 else None

        if generator is None:
            gen = self._scan_generator()
        else:
            gen = self.from_coeffs(generator) if isinstance(generator, (list, tuple)) else int(generator)
            if not (0 < gen < self.order):
                raise FieldError("generator out of range")
            if self._raw_order(gen) != self.order - 1:
                raise FieldError("supplied generator is not primitive")
        self.generator = gen

        # exp/log tables
        n1 = self.order - 1
        exp = [0] * n1
        log = [-1] * self.order
        w = 1
        for i in range(n1):
            exp[i] = w
            log[w] = i
            w = self._raw_mul(w, gen)
        if w != 1:
            raise FieldError("generator order mismatch while building tables")
        self.exp = tuple(exp)
        self.log = tuple(log)

        # dense addition table for small fields (everything at desk scale)
        if self.order <= 1024:
            self._add = [[self._raw_add(x, y) for y in range(self.order)]
                         for x in range(self.order)]
        else:
            self._add = None
        self._np = None
        self._subfield = None

    # -- raw (table-free) arithmetic, used during construction ------------

    def _raw_add(self, x: int, y: int) -> int:
        p = self.p
        if self.m == 1:
            return (x + y) % p
        out = 0
        mult = 1
        for _ in range(self.m):
            out += ((x % p + y % p) % p) * mult
            x //= p
            y //= p
            mult *= p
        return out

    def _raw_mul(self, x: int, y: int) -> int:
        if self.m == 1:
            return (x * y) % self.p
        a = self.coeffs(x)
        b = self.coeffs(y)
        prod = _poly_mod(_poly_mul(a, b, self.p), self.modulus, self.p)
        return self.from_coeffs(prod)

    def _raw_order(self, x: int) -> int:
        n = 1
        w = x
        while w != 1:
            w = self._raw_mul(w, x)
            n += 1
            if n > self.order:
                raise FieldError("element order runaway (corrupt field)")
        return n

    def _scan_generator(self) -> int:
        if self.order == 2:
            return 1
        for cand in range(2, self.order):
            if self._raw_order(cand) == self.order - 1:
                return cand
        raise FieldError("no primitive element found")

    # -- element encoding ---------------------------------------------------

    def coeffs(self, x: int) -> list[int]:
        """Coefficient list over GF(p), constant term first, length m."""
        out = []
        for _ in range(self.m):
            out.append(x % self.p)
            x //= self.p
        return out

    def from_coeffs(self, coeffs: Sequence[int]) -> int:
        if len(coeffs) > self.m and any(c % self.p for c in coeffs[self.m:]):
            raise FieldError("coefficient tuple too long")
        out = 0
        for c in reversed(list(coeffs[:self.m])):
            out = out * self.p + (c % self.p)
        return out

    def check(self, x: int) -> int:
        if not (0 <= x < self.order):
            raise FieldError(f"{x} is not an element of GF({self.order})")
        return x

    def elements(self) -> range:
        return range(self.order)

    # -- arithmetic ----------------------------------------------------------

    def add(self, x: int, y: int) -> int:
        if self._add is not None:
            return self._add[x][y]
        return self._raw_add(x, y)

    def neg(self, x: int) -> int:
        if x == 0:
            return 0
        p = self.p
        if self.m == 1:
            return p - x
        out = 0
        mult = 1
        for _ in range(self.m):
            d = x % p
            out += (p - d if d else 0) * mult
            x //= p
            mult *= p
        return out

    def sub(self, x: int, y: int) -> int:
        return self.add(x, self.neg(y))

    def mul(self, x: int, y: int) -> int:
        if x == 0 or y == 0:
            return 0
        return self.exp[(self.log[x] + self.log[y]) % (self.order - 1)]

    def inv(self, x: int) -> int:
        if x == 0:
            raise FieldError("inversion of zero")
        return self.exp[(-self.log[x]) % (self.order - 1)]

    def div(self, x: int, y: int) -> int:
        return self.mul(x, self.inv(y))

    def pow(self, x: int, e: int) -> int:
        if x == 0:
            if e > 0:
                return 0
            if e == 0:
                return 1
            raise FieldError("negative power of zero")
        return self.exp[(self.log[x] * e) % (self.order - 1)]

    def scalar(self, n: int) -> int:
        """The image of the integer n in the prime subfield."""
        return n % self.p

    def element_order(self, x: int) -> int:
        if x == 0:
            raise FieldError("zero has no multiplicative order")
        n1 = self.order - 1
        return n1 // gcd(self.log[x], n1)

    # -- square-extension structure ------------------------------------------

    def _require_square(self) -> int:
        if self.q is None:
            raise FieldError("operation requires a square extension GF(q^2)")
        return self.q

    def frobenius(self, x: int) -> int:
        q = self._require_square()
        if x == 0:
            return 0
        return self.exp[(self.log[x] * q) % (self.order - 1)]

    def norm(self, x: int) -> int:
        q = self._require_square()
        return self.pow(x, q + 1) if x else 0

    def trace(self, x: int) -> int:
        self._require_square()
        return self.add(self.frobenius(x), x)

    def in_subfield(self, x: int) -> bool:
        self._require_square()
        return self.frobenius(x) == x

    def subfield_elements(self) -> tuple[int, ...]:
        """The q elements fixed by Frobenius: zero first, then ascending
        discrete log."""
        q = self._require_square()
        if self._subfield is None:
            out = [0] + [self.exp[s * (q + 1)] for s in range(q - 1)]
            assert len(out) == q
            self._subfield = tuple(out)
        return self._subfield

    def solve_norm(self, c: int) -> int:
        """Deterministic xi with xi^(q+1) = c: the smallest exponent j such
        that generator^j works."""
        q = self._require_square()
        if c == 0:
            raise FieldError("norm equation with zero right-hand side")
        if not self.in_subfield(c):
            raise FieldError("right-hand side is not in the subfield")
        lc = self.log[c]
        if lc % (q + 1):
            raise FieldError("unsolvable norm equation (corrupt field)")
        j = (lc // (q + 1)) % (q - 1)
        return self.exp[j]

    def power_roots(self, d: int, c: int) -> list[int]:
        """All x with x^d = c (c nonzero), ascending by discrete log."""
        if c == 0:
            raise FieldError("power equation with zero right-hand side")
        n1 = self.order - 1
        g = gcd(d, n1)
        lc = self.log[c]
        if lc % g:
            return []
        step = n1 // g
        j0 = (lc // g) * pow(d // g, -1, step) % step
        return [self.exp[(j0 + s * step) % n1] for s in range(g)]

    def poly_roots(self, coeffs: Sequence[int], scan_cap: int = MAX_ORDER) -> set[int]:
        """Exact root set of a nonzero polynomial by exhaustive evaluation."""
        coeffs = [self.check(c) for c in coeffs]
        if not any(coeffs):
            raise FieldError("root finding on the zero polynomial")
        if self.order > scan_cap:
            raise FieldError(f"field size {self.order} exceeds scan cap {scan_cap}")
        roots = set()
        for x in range(self.order):
            acc = 0
            for c in reversed(coeffs):
                acc = self.add(self.mul(acc, x), c)
            if acc == 0:
                roots.add(x)
        return roots

    def primitive_elements(self) -> list[int]:
        """All primitive elements, ascending by discrete log of the default
        generator."""
        n1 = self.order - 1
        return [self.exp[j] for j in range(1, n1) if gcd(j, n1) == 1] if n1 > 1 else [1]

    # -- numpy tables for the bulk codeword enumerator ------------------------

    def np_tables(self):
        if self._np is None:
            import numpy as np
            if self.order > 4096:
                raise FieldError("vectorized tables unsupported above 4096 elements")
            n1 = self.order - 1
            exp2 = np.array(list(self.exp) * 2, dtype=np.int32)
            log = np.zeros(self.order, dtype=np.int32)
            for x in range(1, self.order):
                log[x] = self.log[x]
            addt = np.array([[self.add(x, y) for y in range(self.order)]
                             for x in range(self.order)], dtype=np.int32)
            self._np = (exp2, log, addt)
        return self._np

    # -- identity / serialization ---------------------------------------------

    def __eq__(self, other):
        return (isinstance(other, GaloisField)
                and (self.p, self.m, self.modulus, self.generator)
                == (other.p, other.m, other.modulus, other.generator))

    def __hash__(self):
        return hash((self.p, self.m, self.modulus, self.generator))

    def __repr__(self):
        return f"GaloisField(p={self.p}, m={self.m})"

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "m": self.m,
            "modulus": list(self.modulus),
            "generator": self.coeffs(self.generator),
        }

    @classmethod
    def from_dict(cls, d: dict) -> "GaloisField":
        return cls(d["p"], d["m"], modulus=d.get("modulus"),
                   generator=d.get("generator"))


def build_field(p: int, m: int = 1, modulus: Sequence[int] | None = None,
                generator: int | Sequence[int] | None = None) -> GaloisField:
    """Construct GF(p^m); see GaloisField."""
    return GaloisField(p, m, modulus=modulus, generator=generator)


def quadratic_extension(q: int) -> GaloisField:
    """GF(q^2) for a prime power q, with default modulus and generator."""
    p, s = _prime_power(q)
    return GaloisField(p, 2 * s)


def _prime_power(q: int) -> tuple[int, int]:
    for p in range(2, q + 1):
        if is_prime(p) and q % p == 0:
            s = 0
            t = q
            while t % p == 0:
                t //= p
                s += 1
            if t != 1:
                break
            return p, s
    raise FieldError(f"{q} is not a prime power")
