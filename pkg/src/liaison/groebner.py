"""Buchberger engine producing canonical reduced Groebner bases.

Pair selection is the classical normal strategy keyed by sugar degree,
with Buchberger's coprime-lcm and chain criteria applied lazily at pop
time.  The returned basis is always the unique reduced basis for the
ideal and order: monic elements, no term of any element divisible by
another element's lead, sorted ascending by leading monomial.
"""

from __future__ import annotations

import heapq

from .poly import Polynomial
from .rings import RingDescriptor


class GroebnerBasis:
    """A reduced Groebner basis (possibly empty, for the zero ideal)."""

    __slots__ = ("ring", "elements", "reduced", "_leads")

    def __init__(self, ring: RingDescriptor, elements, reduced: bool = True):
        self.ring = ring
        self.elements = tuple(elements)
        self.reduced = reduced
        self._leads = None

    def leads(self) -> tuple[int, ...]:
        if self._leads is None:
            self._leads = tuple(g.lead_code() for g in self.elements)
        return self._leads

    def is_unit(self) -> bool:
        return any(self.ring.mon_deg(l) == 0 for l in self.leads())

    def normal_form(self, f: Polynomial) -> Polynomial:
        return normal_form(f, self)

    def contains(self, f: Polynomial) -> bool:
        return normal_form(f, self).is_zero()

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)


def _reduce_terms(terms: dict, reducers, ring: RingDescriptor) -> dict:
    """Full normal form of a term dict against (lead, terms) reducer pairs.

    Reducers must be monic.  Works largest-monomial-first via a lazy heap;
    every term of the remainder is irreducible.
    """
    p = ring.characteristic
    invkey = ring.invkey
    divides = ring.mon_divides
    work = dict(terms)
    heap = [(invkey(m), m) for m in work]
    heapq.heapify(heap)
    pop, push = heapq.heappop, heapq.heappush
    remainder: dict = {}
    while heap:
        m = pop(heap)[1]
        c = work.pop(m, 0)
        if not c:
            continue
        hit = None
        for lead, gterms in reducers:
            if divides(lead, m):
                hit = (lead, gterms)
                break
        if hit is None:
            remainder[m] = c
            continue
        lead, gterms = hit
        u = m - lead
        for gm, gc in gterms.items():
            if gm == lead:
                continue
            k = gm + u
            old = work.get(k)
            if old is None:
                v = (-c * gc) % p
                if v:
                    work[k] = v
                    push(heap, (invkey(k), k))
            else:
                v = (old - c * gc) % p
                if v:
                    work[k] = v
                else:
                    del work[k]
    return remainder


def _reducer_list(polys):
    return [(g.lead_code(), g.terms) for g in polys]


def normal_form(f: Polynomial, G) -> Polynomial:
    """Remainder of f modulo a set of monic polynomials (full reduction).

    When G is a Groebner basis the remainder is canonical and is zero
    exactly for ideal members.
    """
    if isinstance(G, GroebnerBasis):
        if f.ring != G.ring:
            raise ValueError("polynomial and basis from different rings")
        polys = G.elements
    else:
        polys = tuple(G)
        if polys and any(g.ring != f.ring for g in polys):
            raise ValueError("polynomial and basis from different rings")
    if f.is_zero() or not polys:
        return f
    rem = _reduce_terms(f.terms, _reducer_list(polys), f.ring)
    return Polynomial(f.ring, rem)


def s_polynomial(f: Polynomial, g: Polynomial) -> Polynomial:
    """S(f, g) = (lcm/lt(f)) f - (lcm/lt(g)) g, with monic normalization."""
    if f.ring != g.ring:
        raise ValueError("polynomials from different rings")
    ring = f.ring
    lcm = ring.mon_lcm(f.lead_code(), g.lead_code())
    finv = ring.field.inv(f.lead_coeff())
    ginv = ring.field.inv(g.lead_coeff())
    return f.term_mul(lcm - f.lead_code(), finv) - g.term_mul(lcm - g.lead_code(), ginv)


def _interreduce(polys, ring: RingDescriptor) -> list[Polynomial]:
    """Minimalize and tail-reduce a basis; output is the reduced basis."""
    polys = sorted((f.monic() for f in polys if f), key=lambda f: ring.key(f.lead_code()))
    minimal: list[Polynomial] = []
    for f in polys:
        lf = f.lead_code()
        if not any(ring.mon_divides(g.lead_code(), lf) for g in minimal):
            minimal.append(f)
    # leads are now pairwise indivisible; one full-reduction pass of each
    # tail against the others yields the reduced basis (leads never move)
    out = list(minimal)
    for i, f in enumerate(minimal):
        others = out[:i] + out[i + 1:]
        if others:
            r = Polynomial(ring, _reduce_terms(f.terms, _reducer_list(others), ring))
            out[i] = r.monic()
    out.sort(key=lambda f: ring.key(f.lead_code()))
    return out


def groebner_basis(gens, seed: GroebnerBasis | None = None) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by ``gens``.

    ``seed`` may carry an existing basis for the same ring whose ideal is
    to be enlarged by ``gens``; its elements are taken as already
    processed, which saves the pairs among them.
    """
    gens = [g for g in gens if g is not None and not g.is_zero()]
    if seed is not None:
        ring = seed.ring
    elif gens:
        ring = gens[0].ring
    else:
        raise ValueError("empty generator list and no seed basis")
    if any(g.ring != ring for g in gens):
        raise ValueError("generators from different rings")

    basis: list[Polynomial] = list(seed.elements) if seed is not None else []
    sugars: list[int] = [g.degree() for g in basis]
    leads: list[int] = [g.lead_code() for g in basis]
    key = ring.key
    deg = ring.mon_deg
    pending: set[tuple[int, int]] = set()
    heap: list = []
    counter = 0

    def push_pairs(new_index: int):
        nonlocal counter
        lead_n = leads[new_index]
        sugar_n = sugars[new_index]
        for i in range(new_index):
            lcm = ring.mon_lcm(leads[i], lead_n)
            sugar = max(sugars[i] + deg(lcm) - deg(leads[i]),
                        sugar_n + deg(lcm) - deg(lead_n))
            counter += 1
            heapq.heappush(heap, (sugar, key(lcm), i, new_index, counter))
            pending.add((i, new_index))

    def add_element(h: Polynomial, sugar: int):
        basis.append(h.monic())
        leads.append(h.lead_code())
        sugars.append(sugar)
        push_pairs(len(basis) - 1)

    for f in sorted(gens, key=lambda g: (g.degree(), key(g.lead_code()))):
        r = Polynomial(ring, _reduce_terms(f.terms, _reducer_list(basis), ring))
        if r:
            if r.is_constant():
                return GroebnerBasis(ring, [Polynomial.one(ring)])
            add_element(r, f.degree())

    while heap:
        sugar, _, i, j, _ = heapq.heappop(heap)
        if (i, j) not in pending:
            continue
        pending.discard((i, j))
        li, lj = leads[i], leads[j]
        if ring.mon_coprime(li, lj):
            continue
        lcm = ring.mon_lcm(li, lj)
        chained = False
        for k in range(len(basis)):
            if k == i or k == j:
                continue
            if ring.mon_divides(leads[k], lcm) \
                    and (min(i, k), max(i, k)) not in pending \
                    and (min(j, k), max(j, k)) not in pending:
                chained = True
                break
        if chained:
            continue
        s = s_polynomial(basis[i], basis[j])
        if s.is_zero():
            continue
        r = Polynomial(ring, _reduce_terms(s.terms, _reducer_list(basis), ring))
        if r:
            if r.is_constant():
                return GroebnerBasis(ring, [Polynomial.one(ring)])
            add_element(r, sugar)

    return GroebnerBasis(ring, _interreduce(basis, ring))


def eliminate_polys(gens, k: int) -> list[Polynomial]:
    """Generators of the ideal's intersection with the subring that omits
    the first k variables.

    The generators' ring must already carry an elimination order whose
    first block is exactly those k variables (``elim(k)``, or ``lex``).
    """
    gens = [g for g in gens if g and not g.is_zero()]
    if not gens:
        return []
    ring = gens[0].ring
    if ring.order not in (f"elim({k})", "lex"):
        raise ValueError(f"ring order {ring.order!r} does not eliminate the first {k} variables")
    G = groebner_basis(gens)
    out = []
    for g in G.elements:
        if all(not any(ring.unpack(m)[:k]) for m in g.terms):
            out.append(g)
    return out
