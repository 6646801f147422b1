"""Immutable multivariate polynomials over GF(p).

A polynomial is a map from packed monomial codes (see rings.py) to
nonzero coefficients in [1, p).  All operations return fresh values, so
polynomials can be shared freely between concurrent workers.
"""

from __future__ import annotations

from .field import PrimeField
from .rings import RingDescriptor


class Polynomial:
    __slots__ = ("ring", "terms", "_lead")

    def __init__(self, ring: RingDescriptor, terms: dict | None = None):
        p = ring.characteristic
        clean = {}
        if terms:
            for code, c in terms.items():
                c %= p
                if c:
                    clean[code] = c
        self.ring = ring
        self.terms = clean
        self._lead = None

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, ring: RingDescriptor) -> "Polynomial":
        return cls(ring, {})

    @classmethod
    def constant(cls, ring: RingDescriptor, c: int) -> "Polynomial":
        return cls(ring, {ring.pack((0,) * ring.nvars): c})

    @classmethod
    def one(cls, ring: RingDescriptor) -> "Polynomial":
        return cls.constant(ring, 1)

    @classmethod
    def variable(cls, ring: RingDescriptor, name: str) -> "Polynomial":
        i = ring.variables.index(name)
        return cls(ring, {ring.var_code(i): 1})

    @classmethod
    def from_exponents(cls, ring: RingDescriptor, exps, c: int = 1) -> "Polynomial":
        return cls(ring, {ring.pack(exps): c})

    # -- basic queries --------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(self.ring.mon_deg(m) == 0 for m in self.terms)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        deg = self.ring.mon_deg
        return max(deg(m) for m in self.terms)

    def is_homogeneous(self) -> bool:
        if not self.terms:
            return True
        deg = self.ring.mon_deg
        degs = {deg(m) for m in self.terms}
        return len(degs) == 1

    def lead_code(self) -> int:
        if self._lead is None:
            if not self.terms:
                raise ValueError("zero polynomial has no leading term")
            self._lead = max(self.terms, key=self.ring.key)
        return self._lead

    def lead_coeff(self) -> int:
        return self.terms[self.lead_code()]

    def sorted_codes(self) -> list[int]:
        return sorted(self.terms, key=self.ring.key, reverse=True)

    def __len__(self):
        return len(self.terms)

    def __bool__(self):
        return bool(self.terms)

    # -- arithmetic -----------------------------------------------------

    def _check_ring(self, other: "Polynomial"):
        if self.ring != other.ring:
            raise ValueError("polynomials from different rings")

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check_ring(other)
        p = self.ring.characteristic
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = (out.get(m, 0) + c) % p
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        r = Polynomial.__new__(Polynomial)
        r.ring, r.terms, r._lead = self.ring, out, None
        return r

    def __neg__(self) -> "Polynomial":
        p = self.ring.characteristic
        r = Polynomial.__new__(Polynomial)
        r.ring = self.ring
        r.terms = {m: p - c for m, c in self.terms.items()}
        r._lead = None
        return r

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        self._check_ring(other)
        p = self.ring.characteristic
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = (out.get(m, 0) - c) % p
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        r = Polynomial.__new__(Polynomial)
        r.ring, r.terms, r._lead = self.ring, out, None
        return r

    def scale(self, c: int) -> "Polynomial":
        p = self.ring.characteristic
        c %= p
        if c == 0:
            return Polynomial.zero(self.ring)
        r = Polynomial.__new__(Polynomial)
        r.ring = self.ring
        r.terms = {m: v * c % p for m, v in self.terms.items()}
        r._lead = self._lead
        return r

    def term_mul(self, code: int, c: int = 1) -> "Polynomial":
        """Multiply by the single term c * (monomial code)."""
        p = self.ring.characteristic
        c %= p
        if c == 0:
            return Polynomial.zero(self.ring)
        r = Polynomial.__new__(Polynomial)
        r.ring = self.ring
        r.terms = {m + code: v * c % p for m, v in self.terms.items()}
        r._lead = None if self._lead is None else self._lead + code
        return r

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        self._check_ring(other)
        p = self.ring.characteristic
        out: dict = {}
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        for m1, c1 in a.items():
            for m2, c2 in b.items():
                k = m1 + m2
                v = (out.get(k, 0) + c1 * c2) % p
                if v:
                    out[k] = v
                else:
                    del out[k]
        r = Polynomial.__new__(Polynomial)
        r.ring, r.terms, r._lead = self.ring, out, None
        return r

    def __pow__(self, e: int) -> "Polynomial":
        if e < 0:
            raise ValueError("negative power")
        result = Polynomial.one(self.ring)
        for _ in range(e):
            result = result * self
        return result

    def monic(self) -> "Polynomial":
        if not self.terms:
            return self
        return self.scale(self.ring.field.inv(self.lead_coeff()))

    def exact_div(self, g: "Polynomial") -> "Polynomial":
        """Quotient self / g, raising if the division is not exact."""
        self._check_ring(g)
        if g.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        ring = self.ring
        p = ring.characteristic
        ginv = ring.field.inv(g.lead_coeff())
        glead = g.lead_code()
        rem = dict(self.terms)
        quo: dict = {}
        key = ring.key
        while rem:
            m = max(rem, key=key)
            if not ring.mon_divides(glead, m):
                raise ArithmeticError("inexact polynomial division")
            c = rem[m] * ginv % p
            u = m - glead
            quo[u] = c
            for gm, gc in g.terms.items():
                k = gm + u
                v = (rem.get(k, 0) - c * gc) % p
                if v:
                    rem[k] = v
                else:
                    rem.pop(k, None)
        return Polynomial(ring, quo)

    # -- ring moves -----------------------------------------------------

    def map_vars(self, target: RingDescriptor, index_map: dict[int, int]) -> "Polynomial":
        """Reindex exponents into another ring; unmapped positions must be 0."""
        out: dict = {}
        for code, c in self.terms.items():
            exps = self.ring.unpack(code)
            new = [0] * target.nvars
            for i, e in enumerate(exps):
                if e == 0:
                    continue
                j = index_map.get(i)
                if j is None:
                    raise ValueError(
                        f"variable {self.ring.variables[i]} has no image in target ring")
                new[j] = e
            k = target.pack(new)
            out[k] = (out.get(k, 0) + c) % target.characteristic
        return Polynomial(target, out)

    def substitute(self, target: RingDescriptor, images: list["Polynomial"]) -> "Polynomial":
        """Evaluate at images[i] in place of variable i."""
        if len(images) != self.ring.nvars:
            raise ValueError("one image per variable required")
        result = Polynomial.zero(target)
        pow_cache: dict[tuple[int, int], Polynomial] = {}
        for code, c in self.terms.items():
            exps = self.ring.unpack(code)
            term = Polynomial.constant(target, c)
            for i, e in enumerate(exps):
                if e == 0:
                    continue
                key = (i, e)
                pw = pow_cache.get(key)
                if pw is None:
                    pw = pow_cache[key] = images[i] ** e
                term = term * pw
            result = result + term
        return result

    # -- equality and display ---------------------------------------------

    def __eq__(self, other):
        return (isinstance(other, Polynomial) and self.ring == other.ring
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    def __str__(self):
        if not self.terms:
            return "0"
        field: PrimeField = self.ring.field
        parts = []
        for i, code in enumerate(self.sorted_codes()):
            c = field.centered(self.terms[code])
            mono = self.ring.monomial_string(code)
            sign = "-" if c < 0 else ("+" if i else "")
            mag = abs(c)
            if mono == "1":
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            parts.append(sign + body)
        return "".join(parts)

    def __repr__(self):
        return f"Polynomial({self})"


def random_homogeneous(ring: RingDescriptor, d: int, rng, sparse: float = 1.0) -> Polynomial:
    """A random homogeneous polynomial of degree d with coefficients from rng.

    ``sparse`` < 1 keeps each monomial with that probability (at least one
    term is always kept so the result is nonzero).
    """
    p = ring.characteristic
    codes = ring.codes_of_degree(d)
    terms = {}
    for code in codes:
        if sparse >= 1.0 or rng.random() < sparse:
            c = rng.randrange(p)
            if c:
                terms[code] = c
    if not terms:
        terms[codes[rng.randrange(len(codes))]] = 1 + rng.randrange(p - 1)
    return Polynomial(ring, terms)
