"""Factorization of monic integer polynomials and mod-p diagnostics.

The integer route is classical Zassenhaus: squarefree split, factorization
modulo a prime that keeps the polynomial squarefree, Hensel lifting past
the Mignotte coefficient bound, then exhaustive subset recombination.
Everything is deterministic: the randomized equal-degree splitting is
seeded from the input.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction

from .numth import UnsupportedSizeError, divisors, is_prime, primes_up_to
from .polyring import (
    IntPoly,
    ModPoly,
    degree,
    derivative,
    discriminant,
    divmod_exact,
    gcd_monic,
    is_monic,
    mod_reduce,
    mul,
    normalize,
    squarefree_part,
)

MAX_DEGREE = 12
MAX_COEFF = 10**6

# Global override for the equal-degree-splitting seed; None keeps the
# per-input derivation.  Set by the CLI's --seed flag.
DEFAULT_SEED: int | None = None


@dataclass(frozen=True)
class Factorization:
    """Monic irreducible factors with multiplicities; sign * product == input."""

    factors: tuple[tuple[tuple[int, ...], int], ...]
    sign: int

    def expand(self) -> IntPoly:
        out: IntPoly = [self.sign]
        for f, e in self.factors:
            for _ in range(e):
                out = mul(out, list(f))
        return out

    def is_irreducible(self) -> bool:
        return len(self.factors) == 1 and self.factors[0][1] == 1


@dataclass(frozen=True)
class FactorPattern:
    """Multiset of mod-p irreducible factor degrees; Frobenius cycle type at unramified p."""

    prime: int
    pattern: tuple[int, ...]
    ramified: bool


def _sort_key(coeffs: tuple[int, ...]):
    return (len(coeffs), coeffs)


# -- factorization over F_p --------------------------------------------------


def _gf_pth_root(f: ModPoly) -> ModPoly:
    # in F_p[x], a polynomial with zero derivative is g(x^p); c^(1/p) = c
    p = f.modulus
    return ModPoly.make(list(f.coeffs[::p]), p)


def _gf_squarefree_list(f: ModPoly) -> list[tuple[ModPoly, int]]:
    """Squarefree decomposition of monic f over F_p (Yun with p-th root descent)."""
    p = f.modulus
    out: list[tuple[ModPoly, int]] = []
    mult = 1
    f = f.monic()
    while f.deg > 0:
        d = f.derivative()
        if d.is_zero():
            f = _gf_pth_root(f)
            mult *= p
            continue
        g = f.gcd(d)
        w = f.divmod(g)[0]
        i = 1
        while w.deg > 0:
            y = w.gcd(g)
            z = w.divmod(y)[0]
            if z.deg > 0:
                out.append((z.monic(), i * mult))
            w = y
            g = g.divmod(y)[0]
            i += 1
        f = g
    return out


def _gf_distinct_degree(f: ModPoly) -> list[tuple[ModPoly, int]]:
    """Split squarefree monic f into products of irreducibles of equal degree."""
    p = f.modulus
    out = []
    x = ModPoly.make([0, 1], p)
    h = x
    i = 1
    rest = f
    while rest.deg >= 2 * i:
        h = h.pow_mod(p, rest)
        g = rest.gcd(h.sub(x.rem(rest)))
        if g.deg > 0:
            out.append((g, i))
            rest = rest.divmod(g)[0]
            h = h.rem(rest)
        i += 1
    if rest.deg > 0:
        out.append((rest, rest.deg))
    return out


def _gf_equal_degree(f: ModPoly, d: int, rng: random.Random) -> list[ModPoly]:
    """Cantor-Zassenhaus split of monic squarefree f, all factors of degree d."""
    p = f.modulus
    if f.deg == d:
        return [f.monic()]
    one = ModPoly.make([1], p)
    while True:
        r = ModPoly.make([rng.randrange(p) for _ in range(f.deg)], p)
        if r.deg < 1:
            continue
        if p == 2:
            # trace map r + r^2 + ... + r^(2^(d-1))
            t = r
            acc = r
            for _ in range(d - 1):
                t = t.mul(t).rem(f)
                acc = acc.add(t)
            g = f.gcd(acc)
        else:
            g = f.gcd(r)
            if 0 < g.deg < f.deg:
                pass
            else:
                s = r.pow_mod((p**d - 1) // 2, f)
                g = f.gcd(s.sub(one))
        if 0 < g.deg < f.deg:
            h = f.divmod(g)[0]
            return _gf_equal_degree(g, d, rng) + _gf_equal_degree(h, d, rng)


def factor_mod_p(f: ModPoly, seed: int | None = None) -> list[tuple[ModPoly, int]]:
    """Complete factorization of f over F_p into monic irreducibles.

    Output is sorted canonically (degree, then coefficients) regardless of
    the internal randomness, which is seeded from the input unless an
    explicit seed is given.
    """
    if f.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    if seed is None:
        seed = DEFAULT_SEED
    if seed is None:
        seed = hash((f.modulus,) + f.coeffs) & 0x7FFFFFFF
    rng = random.Random(seed)
    out: list[tuple[ModPoly, int]] = []
    for sqf, mult in _gf_squarefree_list(f.monic()):
        for block, d in _gf_distinct_degree(sqf):
            for irr in _gf_equal_degree(block, d, rng):
                out.append((irr, mult))
    out.sort(key=lambda t: _sort_key(t[0].coeffs))
    return out


# -- Hensel lifting ----------------------------------------------------------


def _poly_mod(f: list[int], m: int) -> list[int]:
    c = [a % m for a in f]
    while c and c[-1] == 0:
        c.pop()
    return c


def _poly_mul_mod(f: list[int], g: list[int], m: int) -> list[int]:
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] = (out[i + j] + a * b) % m
    return _poly_mod(out, m)


def _poly_divmod_monic_mod(f: list[int], g: list[int], m: int) -> tuple[list[int], list[int]]:
    # g monic; works over Z/m for any m
    r = list(f)
    q = [0] * max(len(r) - len(g) + 1, 1)
    while True:
        r = _poly_mod(r, m)
        if len(r) < len(g):
            break
        c = r[-1]
        shift = len(r) - len(g)
        q[shift] = (q[shift] + c) % m
        for i, b in enumerate(g):
            r[shift + i] = (r[shift + i] - c * b) % m
    return _poly_mod(q, m), r


def _hensel_pair(f: list[int], g: list[int], h: list[int], s: list[int], t: list[int], p: int, k: int):
    """Lift f = g*h (mod p) with s*g + t*h = 1 (mod p) to modulus p**k.

    All of g, h monic; quadratic lifting.  Returns (g, h, s, t) mod p**k.
    """
    m = p
    while m < p**k:
        m2 = min(m * m, p**k)
        e = _poly_mod([a - b for a, b in zip_pad(f, _poly_mul_mod(g, h, m2))], m2)
        q, r = _poly_divmod_monic_mod(_poly_mul_mod(s, e, m2), h, m2)
        g = _poly_mod([a + b for a, b in zip_pad(g, add_lists(_poly_mul_mod(t, e, m2), _poly_mul_mod(q, g, m2)))], m2)
        h = _poly_mod([a + b for a, b in zip_pad(h, r)], m2)
        b = _poly_mod([a - c for a, c in zip_pad(add_lists(_poly_mul_mod(s, g, m2), _poly_mul_mod(t, h, m2)), [1])], m2)
        c, d = _poly_divmod_monic_mod(_poly_mul_mod(s, b, m2), h, m2)
        s = _poly_mod([a - bb for a, bb in zip_pad(s, d)], m2)
        t = _poly_mod(
            [a - bb for a, bb in zip_pad(t, add_lists(_poly_mul_mod(t, b, m2), _poly_mul_mod(c, g, m2)))], m2
        )
        m = m2
    return g, h, s, t


def zip_pad(f: list[int], g: list[int]):
    n = max(len(f), len(g))
    for i in range(n):
        yield (f[i] if i < len(f) else 0), (g[i] if i < len(g) else 0)


def add_lists(f: list[int], g: list[int]) -> list[int]:
    return [a + b for a, b in zip_pad(f, g)]


def hensel_lift(f: IntPoly, factors_mod_p: list[ModPoly], p: int, k: int) -> list[list[int]]:
    """Lift a coprime monic factorization of f mod p to mod p**k.

    The seeds must be pairwise coprime mod p with product congruent to f.
    Each returned factor is congruent to its seed mod p and their product
    is congruent to f mod p**k.
    """
    seeds = [g.monic() for g in factors_mod_p]
    prod = ModPoly.make([1], p)
    for g in seeds:
        prod = prod.mul(g)
    if prod.coeffs != mod_reduce(f, p).monic().coeffs:
        raise ValueError("seed product does not match the polynomial mod p")
    for i in range(len(seeds)):
        for j in range(i + 1, len(seeds)):
            if seeds[i].gcd(seeds[j]).deg != 0:
                raise ValueError("seed factors are not pairwise coprime mod p")
    if k < 1:
        raise ValueError("target exponent must be positive")

    def lift(target: list[int], parts: list[ModPoly]) -> list[list[int]]:
        if len(parts) == 1:
            return [_poly_mod(target, p**k)]
        half = len(parts) // 2
        g = ModPoly.make([1], p)
        for q in parts[:half]:
            g = g.mul(q)
        h = ModPoly.make([1], p)
        for q in parts[half:]:
            h = h.mul(q)
        s, t = _gf_bezout(g, h)
        gl, hl, _, _ = _hensel_pair(
            _poly_mod(target, p**k), list(g.coeffs), list(h.coeffs), list(s.coeffs), list(t.coeffs), p, k
        )
        return lift(gl, parts[:half]) + lift(hl, parts[half:])

    return lift(list(normalize(f)), seeds)


def _gf_bezout(g: ModPoly, h: ModPoly) -> tuple[ModPoly, ModPoly]:
    """s, t with s*g + t*h = 1 over F_p, for coprime g, h."""
    p = g.modulus
    r0, r1 = g, h
    s0, s1 = ModPoly.make([1], p), ModPoly.make([], p)
    t0, t1 = ModPoly.make([], p), ModPoly.make([1], p)
    while not r1.is_zero():
        q, r = r0.divmod(r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0.sub(q.mul(s1))
        t0, t1 = t1, t0.sub(q.mul(t1))
    if r0.deg != 0:
        raise ValueError("polynomials are not coprime mod p")
    inv = pow(r0.coeffs[0], -1, p)
    unit = ModPoly.make([inv], p)
    return s0.mul(unit), t0.mul(unit)


# -- factorization over Z ----------------------------------------------------


def _symmetric(c: int, m: int) -> int:
    c %= m
    return c - m if c > m // 2 else c


def _mignotte_bound(f: IntPoly) -> int:
    norm = math.isqrt(sum(c * c for c in f)) + 1
    return 2 ** len(f) * norm


def _squarefree_decomposition(f: IntPoly) -> list[tuple[IntPoly, int]]:
    """Yun's algorithm for monic f over Z: pairwise coprime squarefree parts."""
    out = []
    g = gcd_monic(f, derivative(f))
    w = divmod_exact(f, g)[0]
    i = 1
    while degree(w) > 0:
        y = gcd_monic(w, g)
        z = divmod_exact(w, y)[0]
        if degree(z) > 0:
            out.append((z, i))
        w = y
        g = divmod_exact(g, y)[0]
        i += 1
    return out


_SMALL_PRIMES = primes_up_to(10_000).primes


def _good_prime(f: IntPoly) -> int:
    fd = derivative(f)
    for p in _SMALL_PRIMES:
        fp = mod_reduce(f, p)
        if fp.deg != degree(f):
            continue
        if fp.gcd(mod_reduce(fd, p)).deg == 0:
            return p
    raise UnsupportedSizeError("no squarefree-preserving prime below 10000")


def _factor_squarefree_over_Z(f: IntPoly, seed: int | None) -> list[IntPoly]:
    """Irreducible monic factors of a monic squarefree f over Z."""
    if degree(f) == 1:
        return [f]
    p = _good_prime(f)
    modular = factor_mod_p(mod_reduce(f, p), seed=seed)
    if len(modular) == 1:
        return [f]
    bound = 2 * _mignotte_bound(f)
    k = 1
    while p**k <= bound:
        k += 1
    lifted = hensel_lift(f, [g for g, _ in modular], p, k)
    m = p**k

    remaining = list(range(len(lifted)))
    result: list[IntPoly] = []
    rest = list(f)
    size = 1
    while 2 * size <= len(remaining):
        found = False
        for subset in _combinations(remaining, size):
            cand = [1]
            for idx in subset:
                cand = _poly_mul_mod(cand, lifted[idx], m)
            cand_z = normalize([_symmetric(c, m) for c in cand])
            dm = divmod_exact(rest, cand_z)
            if dm is not None and not dm[1]:
                result.append(cand_z)
                rest = dm[0]
                remaining = [i for i in remaining if i not in subset]
                found = True
                break
        if not found:
            size += 1
    if degree(rest) > 0:
        result.append(rest)
    return result


def _combinations(items: list[int], size: int):
    import itertools

    return itertools.combinations(items, size)


def factor_over_Z(f: IntPoly, seed: int | None = None) -> Factorization:
    """Factor a monic integer polynomial into monic irreducibles over Z.

    Supported envelope: degree <= 12, coefficients up to 1e6 in magnitude;
    outside it an UnsupportedSizeError is raised, never a wrong answer.
    """
    f = normalize(f)
    if not is_monic(f):
        raise ValueError("factor_over_Z requires a monic polynomial")
    if degree(f) > MAX_DEGREE:
        raise UnsupportedSizeError(f"degree {degree(f)} exceeds supported envelope {MAX_DEGREE}")
    if any(abs(c) > MAX_COEFF for c in f):
        raise UnsupportedSizeError(f"coefficient magnitude exceeds supported envelope {MAX_COEFF}")
    if degree(f) == 0:
        return Factorization((), 1)
    factors: list[tuple[tuple[int, ...], int]] = []
    for sqf, mult in _squarefree_decomposition(f):
        for irr in _factor_squarefree_over_Z(sqf, seed):
            factors.append((tuple(irr), mult))
    factors.sort(key=lambda t: _sort_key(t[0]))
    return Factorization(tuple(factors), 1)


# -- Frobenius-flavored diagnostics -----------------------------------------


def irreducibility_witness(f: IntPoly, search_bound: int) -> int | None:
    """Smallest prime p <= bound with f squarefree and irreducible mod p.

    Such a p certifies that f stays irreducible modulo infinitely many
    primes (the mod-p factor degrees are the Frobenius cycle type, and a
    full-length cycle occurs with positive density).  None means no
    witness up to the bound: inconclusive.
    """
    f = normalize(f)
    if degree(gcd_monic(f, derivative(f))) > 0:
        raise ValueError("irreducibility_witness requires a squarefree polynomial")
    if search_bound < 2:
        raise ValueError("search bound must be at least 2")
    disc = discriminant(f)
    for p in primes_up_to(search_bound).primes:
        if disc % p == 0:
            continue
        if degree(f) == 1:
            return p
        if len(factor_mod_p(mod_reduce(f, p))) == 1:
            return p
    return None


def degree_pattern(f: IntPoly, p: int) -> FactorPattern:
    """Degrees (with multiplicity) of the irreducible mod-p factors of f."""
    f = normalize(f)
    if degree(gcd_monic(f, derivative(f))) > 0:
        raise ValueError("degree_pattern requires a squarefree polynomial")
    disc = discriminant(f)
    fac = factor_mod_p(mod_reduce(f, p))
    pat = []
    for g, e in fac:
        pat.extend([g.deg] * e)
    return FactorPattern(prime=p, pattern=tuple(sorted(pat)), ramified=disc % p == 0)


def _has_root_mod_p(f: ModPoly) -> bool:
    p = f.modulus
    x = ModPoly.make([0, 1], p)
    frob = x.pow_mod(p, f)
    return f.gcd(frob.sub(x.rem(f))).deg > 0


def root_density(f: IntPoly, prime_bound: int) -> Fraction:
    """Fraction of unramified primes p <= bound for which f has a root mod p."""
    if prime_bound < 100:
        raise ValueError("prime bound must be at least 100")
    f = normalize(f)
    disc = discriminant(squarefree_part(f))
    hits = 0
    total = 0
    for p in primes_up_to(prime_bound).primes:
        if disc % p == 0:
            continue
        total += 1
        if _has_root_mod_p(mod_reduce(f, p)):
            hits += 1
    return Fraction(hits, total)
