"""Graded polynomial ring descriptors, monomials, and monomial orders.

Monomials are stored internally as packed integer codes: one byte per
variable plus a top byte holding the total degree.  With that layout a
monomial product is a single integer addition and divisibility is two
bitwise operations (a guard bit per byte absorbs borrows).  Exponents
must stay below 128, which is far beyond the degrees this toolkit
targets (<= ~10 variables, degrees <= ~12).

Supported orders: ``grevlex``, ``lex`` and ``elim(k)`` (an elimination
block order that compares the first k exponents' subvector first,
grevlex within each block).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations_with_replacement

from .field import DEFAULT_CHARACTERISTIC, PrimeField, is_prime

MAX_VARIABLES = 24
_ELIM_RE = re.compile(r"^elim\((\d+)\)$")


def parse_order(order: str, nvars: int) -> tuple[str, int]:
    """Validate an order name, returning (kind, block) with block for elim."""
    if order == "grevlex" or order == "lex":
        return order, 0
    m = _ELIM_RE.match(order)
    if m:
        k = int(m.group(1))
        if not 1 <= k < nvars:
            raise ValueError(f"elimination block size {k} out of range for {nvars} variables")
        return "elim", k
    raise ValueError(f"unknown monomial order {order!r}")


def _grevlex_key(exps):
    return (sum(exps), tuple(-e for e in reversed(exps)))


def _grevlex_invkey(exps):
    return (-sum(exps), tuple(reversed(exps)))


@dataclass(frozen=True)
class RingDescriptor:
    """A polynomial ring over GF(p) with named variables and a monomial order."""

    characteristic: int
    variables: tuple[str, ...]
    order: str = "grevlex"

    def __post_init__(self):
        if not is_prime(self.characteristic):
            raise ValueError(f"characteristic {self.characteristic} is not prime")
        if not self.variables:
            raise ValueError("ring needs at least one variable")
        if len(self.variables) > MAX_VARIABLES:
            raise ValueError(f"at most {MAX_VARIABLES} variables supported")
        if len(set(self.variables)) != len(self.variables):
            raise ValueError("variable names must be unique")
        parse_order(self.order, len(self.variables))

    # -- basic data -------------------------------------------------

    @property
    def nvars(self) -> int:
        return len(self.variables)

    @cached_property
    def field(self) -> PrimeField:
        return PrimeField(self.characteristic)

    @cached_property
    def _guards(self) -> int:
        # guard bit at the top of every exponent byte (degree byte included)
        return sum(0x80 << (8 * i) for i in range(self.nvars + 1))

    @cached_property
    def _var_codes(self) -> tuple[int, ...]:
        n = self.nvars
        top = 1 << (8 * n)
        return tuple(top + (1 << (8 * (n - 1 - i))) for i in range(n))

    # -- packed monomial helpers ------------------------------------

    def pack(self, exps) -> int:
        n = self.nvars
        if len(exps) != n:
            raise ValueError(f"expected {n} exponents, got {len(exps)}")
        code = 0
        deg = 0
        for i, e in enumerate(exps):
            if e < 0 or e > 120:
                raise ValueError(f"exponent {e} out of supported range")
            code |= e << (8 * (n - 1 - i))
            deg += e
        if deg > 120:
            raise ValueError(f"total degree {deg} out of supported range")
        return code | (deg << (8 * n))

    def unpack(self, code: int) -> tuple[int, ...]:
        n = self.nvars
        return tuple((code >> (8 * (n - 1 - i))) & 0xFF for i in range(n))

    def var_code(self, i: int) -> int:
        return self._var_codes[i]

    def mon_deg(self, code: int) -> int:
        return code >> (8 * self.nvars)

    def mon_mul(self, a: int, b: int) -> int:
        return a + b

    def mon_div(self, a: int, b: int) -> int:
        return a - b

    def mon_divides(self, u: int, m: int) -> bool:
        """True iff u divides m (componentwise exponent comparison)."""
        g = self._guards
        return ((m | g) - u) & g == g

    def mon_lcm(self, a: int, b: int) -> int:
        ea, eb = self.unpack(a), self.unpack(b)
        return self.pack(tuple(max(x, y) for x, y in zip(ea, eb)))

    def mon_coprime(self, a: int, b: int) -> bool:
        ea, eb = self.unpack(a), self.unpack(b)
        return all(x == 0 or y == 0 for x, y in zip(ea, eb))

    # -- order keys ---------------------------------------------------

    @cached_property
    def _key_builders(self):
        kind, k = parse_order(self.order, self.nvars)
        if kind == "grevlex":
            fwd = _grevlex_key
            inv = _grevlex_invkey
        elif kind == "lex":
            fwd = lambda exps: tuple(exps)  # noqa: E731
            inv = lambda exps: tuple(-e for e in exps)  # noqa: E731
        else:
            def fwd(exps, _k=k):
                return _grevlex_key(exps[:_k]) + _grevlex_key(exps[_k:])

            def inv(exps, _k=k):
                return _grevlex_invkey(exps[:_k]) + _grevlex_invkey(exps[_k:])

        return fwd, inv

    @cached_property
    def _key_cache(self) -> dict:
        return {}

    @cached_property
    def _invkey_cache(self) -> dict:
        return {}

    def key(self, code: int):
        """Sort key: larger key <=> larger monomial in the ring order."""
        cache = self._key_cache
        k = cache.get(code)
        if k is None:
            k = cache[code] = self._key_builders[0](self.unpack(code))
        return k

    def invkey(self, code: int):
        """Negated key for min-heaps that must pop the largest monomial."""
        cache = self._invkey_cache
        k = cache.get(code)
        if k is None:
            k = cache[code] = self._key_builders[1](self.unpack(code))
        return k

    # -- graded pieces ------------------------------------------------

    @cached_property
    def _degree_cache(self) -> dict:
        return {}

    def codes_of_degree(self, d: int) -> tuple[int, ...]:
        """All monomial codes of total degree d, largest first."""
        if d < 0:
            raise ValueError("degree must be >= 0")
        cache = self._degree_cache
        codes = cache.get(d)
        if codes is None:
            n = self.nvars
            out = []
            for combo in combinations_with_replacement(range(n), d):
                exps = [0] * n
                for i in combo:
                    exps[i] += 1
                out.append(self.pack(exps))
            out.sort(key=self.key, reverse=True)
            codes = cache[d] = tuple(out)
        return codes

    def degree_index(self, d: int) -> dict:
        """Map monomial code -> column position within degree d."""
        codes = self.codes_of_degree(d)
        return {c: i for i, c in enumerate(codes)}

    def monomial_string(self, code: int) -> str:
        exps = self.unpack(code)
        parts = []
        for name, e in zip(self.variables, exps):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "*".join(parts) if parts else "1"


# -- public monomial value type --------------------------------------


@dataclass(frozen=True)
class Monomial:
    """A monomial as an exponent vector; degree is the exponent sum."""

    exponents: tuple[int, ...]

    def __post_init__(self):
        if any(e < 0 for e in self.exponents):
            raise ValueError("exponents must be non-negative")

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    def __mul__(self, other: "Monomial") -> "Monomial":
        if len(self.exponents) != len(other.exponents):
            raise ValueError("monomials from different rings")
        return Monomial(tuple(a + b for a, b in zip(self.exponents, other.exponents)))


def compare_monomials(a: Monomial, b: Monomial, order: str) -> int:
    """Total-order comparison: -1, 0 or 1 as a <, =, > b in the given order."""
    if len(a.exponents) != len(b.exponents):
        raise ValueError("monomials have mismatched exponent lengths")
    kind, k = parse_order(order, len(a.exponents))
    if kind == "grevlex":
        ka, kb = _grevlex_key(a.exponents), _grevlex_key(b.exponents)
    elif kind == "lex":
        ka, kb = a.exponents, b.exponents
    else:
        ka = _grevlex_key(a.exponents[:k]) + _grevlex_key(a.exponents[k:])
        kb = _grevlex_key(b.exponents[:k]) + _grevlex_key(b.exponents[k:])
    return (ka > kb) - (ka < kb)


def graded_monomial_basis(ring: RingDescriptor, d: int) -> list[Monomial]:
    """All monomials of total degree d in the ring, largest first."""
    return [Monomial(ring.unpack(c)) for c in ring.codes_of_degree(d)]


# -- ring surgery -----------------------------------------------------


def extend_ring(ring: RingDescriptor, new_vars, front: bool = False,
                order: str | None = None) -> RingDescriptor:
    """Adjoin fresh variables (at the front or back), keeping the field."""
    new_vars = tuple(new_vars)
    clash = set(new_vars) & set(ring.variables)
    if clash:
        raise ValueError(f"variable names already present: {sorted(clash)}")
    variables = new_vars + ring.variables if front else ring.variables + new_vars
    return RingDescriptor(ring.characteristic, variables, order or ring.order)


def subring(ring: RingDescriptor, keep_names, order: str | None = None) -> RingDescriptor:
    """The subring on a subset of the variables (order defaults to the same kind)."""
    keep = tuple(n for n in ring.variables if n in set(keep_names))
    if not keep:
        raise ValueError("subring needs at least one variable")
    return RingDescriptor(ring.characteristic, keep, order or "grevlex")


def default_ring(variables, characteristic: int = DEFAULT_CHARACTERISTIC,
                 order: str = "grevlex") -> RingDescriptor:
    return RingDescriptor(characteristic, tuple(variables), order)
