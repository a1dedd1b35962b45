"""Exhaustive generation, exact counting and uniform sampling.

Two kinds of count tables exist for each class:

* ``count_gff`` / ``count_ff`` transcribe the case analyses of the
  decompositions as dynamic programs.  They are simple and slow (quartic).
* ``gff_table`` / ``ff_table`` solve the same functional equations through
  the power series of the square root of their discriminant.  The series in
  ``x`` are packed into big integers (one fixed-width slot per coefficient) so
  each step costs a single GMP multiplication.  Results are checked against the
  closed-form totals before being returned.

The samplers use the fast tables and draw exactly uniform objects by the
recursive method.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from math import factorial

import gmpy2

from . import gff as G
from . import planarmap as P
from .planarmap import RootedMap
from .word import zero_visits

RNG_ALGORITHM = "python-mt19937"
BRUTE_FORCE_LIMIT = 5
EXHAUSTIVE_LIMIT = 8
TABLE_LIMIT = 500


# -- closed formulas ----------------------------------------------------------

def formula_ff(n: int) -> int:
    """Number of fighting fish of size n (n >= 2)."""
    if n < 2:
        raise ValueError("fighting fish have size at least 2")
    m = n - 1
    return 2 * factorial(3 * m) // (factorial(m + 1) * factorial(2 * m + 1))


def formula_ff_ij(i: int, j: int) -> int:
    """Number of fighting fish with i E steps and j N steps (i, j >= 1)."""
    if i < 1 or j < 1:
        raise ValueError("need i, j >= 1")
    num = factorial(2 * i + j - 2) * factorial(2 * j + i - 2)
    den = factorial(i) * factorial(j) * factorial(2 * i - 1) * factorial(2 * j - 1)
    return num // den


def formula_gff(n: int) -> int:
    """Number of rooted planar maps with n edges, 2 * 3^n (2n)! / (n! (n+2)!)."""
    if n < 0:
        raise ValueError("negative size")
    return 2 * 3 ** n * factorial(2 * n) // (factorial(n) * factorial(n + 2))


# -- count tables ---------------------------------------------------------------

@dataclass(frozen=True)
class CountTable:
    """Exact counts ``rows[n][s]`` by size n and a statistic s."""

    cls: str
    stat: str
    rows: tuple

    @property
    def max_size(self) -> int:
        return len(self.rows) - 1

    def get(self, n: int, s: int) -> int:
        row = self.rows[n]
        return row[s] if 0 <= s < len(row) else 0

    def total(self, n: int) -> int:
        return sum(self.rows[n])

    def csv_rows(self, n: int) -> list[str]:
        out = ["%s,%d,%s=%d,%d" % (self.cls, n, self.stat, s, v)
               for s, v in enumerate(self.rows[n]) if v]
        out.append("%s,%d,all,%d" % (self.cls, n, self.total(n)))
        return out


CSV_HEADER = "class,n,stat,count"


def count_gff(n: int) -> CountTable:
    """N(n, l) by the two-case recurrence, rows 0..n."""
    N = [[1]]
    for s in range(1, n + 1):
        row = [0] * (2 * s + 1)
        for n1 in range(s):
            r1, r2 = N[n1], N[s - 1 - n1]
            for l1, a in enumerate(r1):
                if a:
                    for l2, b in enumerate(r2):
                        if b:
                            row[l1 + l2 + 2] += a * b
        prev = N[s - 1]
        tail = 0
        for l in range(len(prev), 0, -1):
            tail += prev[l - 1]
            row[l] += tail
        N.append(row)
    return CountTable("gff", "ell", tuple(tuple(r) for r in N))


def count_ff(n: int) -> CountTable:
    """f(n, jaw) by the four-case recurrence, rows 0..n."""
    f = [[0] * (m + 1) for m in range(n + 1)]
    g = [[0] * (m + 1) for m in range(n + 1)]   # g[m][i] = sum_{j >= i} f[m][j]
    irr = [[0] * (m + 1) for m in range(n + 1)]
    for m in range(2, n + 1):
        if m == 2:
            irr[2][1] = 1
        else:
            for k in range(1, m):
                irr[m][k] = g[m - 1][k] if k < m - 1 else 0
        row = list(irr[m])
        for s in range(2, m):
            m2 = m + 1 - s
            for i in range(1, s):
                a = irr[s][i]
                if a:
                    for j in range(1, m2):
                        b = f[m2][j]
                        if b:
                            row[i + j] += a * b
        f[m] = row
        acc = 0
        for k in range(m, -1, -1):
            acc += row[k]
            g[m][k] = acc
    return CountTable("ff", "jaw", tuple(tuple(r) for r in f))


# -- fast tables through the discriminant ------------------------------------------

class _Packed:
    """Truncated power series in x packed into one integer."""

    def __init__(self, deg: int, bits: int):
        self.deg = deg
        self.B = (bits + 7) // 8 * 8
        self.nb = self.B // 8

    def pack(self, coeffs) -> "gmpy2.mpz":
        nb = self.nb
        return gmpy2.mpz(int.from_bytes(b"".join(int(c).to_bytes(nb, "little") for c in coeffs), "little"))

    def unpack(self, z, length: int) -> list[int]:
        nb = self.nb
        if z < 0:
            raise ArithmeticError("negative packed series")
        bs = int(z).to_bytes(max(1, nb * length, (z.bit_length() + 7) // 8), "little")
        return [int.from_bytes(bs[i * nb:(i + 1) * nb], "little") for i in range(length)]

    def trunc(self, z, length: int):
        """Keep coefficients of degree < length (signed slots, centered residue)."""
        if length <= 0:
            return gmpy2.mpz(0)
        k = self.B * length
        t = gmpy2.f_mod_2exp(z, k)
        if gmpy2.bit_test(t, k - 1):
            t -= gmpy2.mpz(1) << k
        return t

    def val(self, z) -> int:
        return gmpy2.bit_scan1(abs(z)) // self.B

    def mul(self, dense, z):
        """dense * z truncated to degree deg; dense has nonnegative slots."""
        if z == 0:
            return gmpy2.mpz(0)
        v = self.val(z)
        length = self.deg + 1 - v
        if length <= 0:
            return gmpy2.mpz(0)
        shift = self.B * v
        d = gmpy2.f_mod_2exp(dense, self.B * length)
        return self.trunc(d * (z >> shift), length) << shift

    def x(self, z, power: int = 1):
        return self.trunc(z << (self.B * power), self.deg + 1)


_TABLE_CACHE: dict = {}


def ff_table(n: int) -> CountTable:
    """f(m, jaw) for m <= n, through the square root of the discriminant.

    With Y(u) = F(u)/x the fish equation is x u Y^2 + beta Y - x u (1 - u + Y(1)) = 0,
    beta = 1 - p u + x u^2 and p = 1 + x Y(1).  The coefficients s_k of the square
    root of the discriminant satisfy 2 D s' = D' s, a five-term recurrence in k.
    """
    n = max(n, 2)
    hit = _TABLE_CACHE.get("ff")
    if hit is not None and hit.max_size >= n:
        return CountTable("ff", "jaw", hit.rows[:n + 1])
    deg = n
    p = [0] * (deg + 1)
    p[0] = 1
    for m in range(2, deg + 1):
        p[m] = formula_ff(m)
    bits = p[deg].bit_length() + 3 * deg.bit_length() + 64
    S = _Packed(deg, bits)
    P1 = S.pack(p)
    P2 = S.trunc(P1 * P1, deg + 1)
    one = gmpy2.mpz(1)
    s = [one, -P1]
    rows = [[0] * (m + 1) for m in range(deg + 1)]

    def emit(k, z):
        # z = s_{k+1}; f(m, k) = [x^m] z / 2 (minus the x term when k = 1)
        if k == 1:
            z = z - S.x(one)
        vals = S.unpack(z, deg + 1)
        for m in range(k + 1, deg + 1):
            rows[m][k] = vals[m] // 2

    for k in range(1, deg):
        c1 = 2 * k - 1
        c2 = 2 * k - 4
        c3 = 2 * k - 7
        c4 = 2 * k - 10
        sk = s[k]
        sk1 = s[k - 1] if k >= 1 else 0
        sk2 = s[k - 2] if k >= 2 else 0
        sk3 = s[k - 3] if k >= 3 else 0
        # delta_1 = -2p, delta_2 = p^2 + 4xp - 2x + 4x^2, delta_3 = -2xp - 4x^2, delta_4 = x^2
        lin = -2 * c1 * sk + 4 * c2 * S.x(sk1) - 2 * c3 * S.x(sk2)
        acc = S.mul(P1, lin)
        if c2 and sk1 != 0:
            acc += S.mul(P2, c2 * sk1)
        acc += c2 * (S.x(sk1, 2) * 4 - 2 * S.x(sk1))
        acc += -4 * c3 * S.x(sk2, 2) + c4 * S.x(sk3, 2)
        q, rem = gmpy2.f_divmod(-acc, 2 * (k + 1))
        if rem:
            raise ArithmeticError("inexact step in the fish recurrence")
        s.append(q)
        if k >= 1:
            emit(k, q)
        if k >= 4:
            s[k - 3] = None
    table = CountTable("ff", "jaw", tuple(tuple(r) for r in rows))
    for m in range(2, deg + 1):
        if table.total(m) != formula_ff(m):
            raise ArithmeticError("fish table failed its total check at size %d" % m)
    _TABLE_CACHE["ff"] = table
    return table


def gff_table(n: int) -> CountTable:
    """N(m, l) for m <= n, through the square root of the discriminant.

    The two-case recurrence reads (u - 1) M = (u - 1) + x u^2 (u - 1) M^2 + x u (u M - M(1)).
    Writing s = 2 x u^2 (u - 1) M + b with b = 1 - u + x u^2, s^2 is a quartic in u
    whose coefficients only involve M(1), known in closed form.
    """
    hit = _TABLE_CACHE.get("gff")
    if hit is not None and hit.max_size >= n:
        return CountTable("gff", "ell", hit.rows[:n + 1])
    deg = n + 1
    m1 = [formula_gff(m) for m in range(deg + 1)]
    bits = m1[deg].bit_length() + 3 * deg.bit_length() + 64
    S = _Packed(deg, bits)
    Q = S.x(S.pack(m1), 2) * 4          # 4 x^2 M(1)
    one = gmpy2.mpz(1)
    x1 = S.x(one)
    # delta_1 = -2, delta_2 = 1 - 2x, delta_3 = 6x - Q, delta_4 = x^2 - 4x + Q
    s = [one, -one]
    rows = [[0] * (2 * m + 1) for m in range(n + 1)]
    M_prev = gmpy2.mpz(0)
    L = 2 * n
    for k in range(1, L + 2):
        c1 = 2 * k - 1
        c2 = 2 * k - 4
        c3 = 2 * k - 7
        c4 = 2 * k - 10
        sk = s[k]
        sk1 = s[k - 1]
        sk2 = s[k - 2] if k >= 2 else 0
        sk3 = s[k - 3] if k >= 3 else 0
        acc = -2 * c1 * sk + c2 * (sk1 - 2 * S.x(sk1))
        acc += c3 * 6 * S.x(sk2) + c4 * (S.x(sk3, 2) - 4 * S.x(sk3))
        mix = c4 * sk3 - c3 * sk2
        if mix != 0:
            acc += S.mul(Q, mix)
        q, rem = gmpy2.f_divmod(-acc, 2 * (k + 1))
        if rem:
            raise ArithmeticError("inexact step in the map recurrence")
        s.append(q)
        if k >= 4:
            s[k - 3] = None
        # recover M_l from s_{l+2}
        l = k - 1
        if l < 0:
            continue
        z = q - x1 if l == 0 else q
        z, rem = gmpy2.f_divmod(z, 2)
        if rem:
            raise ArithmeticError("odd coefficient in the map recurrence")
        M = M_prev - (z >> S.B)
        M_prev = M
        vals = S.unpack(M, n + 1) if M != 0 else [0] * (n + 1)
        for m in range(n + 1):
            if l <= 2 * m:
                rows[m][l] = vals[m]
    table = CountTable("gff", "ell", tuple(tuple(r) for r in rows))
    for m in range(n + 1):
        if table.total(m) != formula_gff(m):
            raise ArithmeticError("map table failed its total check at size %d" % m)
    _TABLE_CACHE["gff"] = table
    return table


# -- exhaustive generation -----------------------------------------------------------

def all_excursions(length: int) -> list[str]:
    """All quadrant excursions of the given length, in lexicographic E<N<W<S order."""
    out: list[str] = []
    buf: list[str] = []

    def rec(x, y):
        rem = length - len(buf)
        if x + y > rem:
            return
        if rem == 0:
            out.append("".join(buf))
            return
        for ch, nx, ny in (("E", x + 1, y), ("N", x, y + 1), ("W", x - 1, y), ("S", x, y - 1)):
            if nx >= 0 and ny >= 0:
                buf.append(ch)
                rec(nx, ny)
                buf.pop()

    if length % 2 == 0:
        rec(0, 0)
    return out


@lru_cache(maxsize=None)
def _all_gff(n: int) -> tuple:
    if n == 0:
        return ("",)
    out = []
    for n1 in range(n):
        for f1 in _all_gff(n1):
            for f2 in _all_gff(n - 1 - n1):
                out.append(G.gff_oplus(f1, f2))
    for f in _all_gff(n - 1):
        for i in range(_ell(f) + 1):
            out.append(G.gff_augment(f, i))
    return tuple(out)


def _ell(w: str) -> int:
    return len(zero_visits(w)) - 1


def all_gff(n: int) -> list[str]:
    """Every Gff of size n, each produced once by the grammar."""
    return list(_all_gff(n))


@lru_cache(maxsize=None)
def _irreducible_ff(n: int) -> tuple:
    if n == 2:
        return (G.HEAD,)
    if n < 2:
        return ()
    out = []
    for f in _all_ff(n - 1):
        for i in range(1, len(f) - len(f.lstrip("E")) + 1):
            out.append(G.fish_augment(f, i))
    return tuple(out)


@lru_cache(maxsize=None)
def _all_ff(n: int) -> tuple:
    out = list(_irreducible_ff(n))
    for s in range(2, n):
        for a in _irreducible_ff(s):
            for b in _all_ff(n + 1 - s):
                out.append(G.fish_odot(a, b))
    return tuple(out)


def all_ff(n: int) -> list[str]:
    """Every fighting fish of size n, each produced once by the grammar."""
    return list(_all_ff(n))


@lru_cache(maxsize=None)
def _grammar_maps(n: int) -> tuple:
    if n == 0:
        return (P.vertex_map(),)
    out = []
    for n1 in range(n):
        for m1 in _grammar_maps(n1):
            for m2 in _grammar_maps(n - 1 - n1):
                out.append(P.map_oplus(m1, m2))
    for m in _grammar_maps(n - 1):
        for i in range(P.corner_count(m) + 1):
            out.append(P.map_augment(m, i))
    return tuple(out)


def grammar_maps(n: int) -> list[RootedMap]:
    return list(_grammar_maps(n))


def _planar_connected(p: tuple, n2: int) -> bool:
    # connectivity through sigma and the pairing
    parent = list(range(n2))

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    comps = n2
    for h in range(n2):
        for g in (p[h], h ^ 1):
            a, b = find(h), find(g)
            if a != b:
                parent[a] = b
                comps -= 1
    if comps != 1:
        return False
    seen = [False] * n2
    cyc = 0
    for h in range(n2):
        if not seen[h]:
            cyc += 1
            g = h
            while not seen[g]:
                seen[g] = True
                g = p[g]
    seen = [False] * n2
    for h in range(n2):
        if not seen[h]:
            cyc += 1
            g = h
            while not seen[g]:
                seen[g] = True
                g = p[g ^ 1]
    return cyc == n2 // 2 + 2


def brute_force_maps(n: int, limit: int = BRUTE_FORCE_LIMIT) -> list[RootedMap]:
    """All rooted maps with n edges from raw rotation systems.

    Every rooted map can be relabeled so that its root is half-edge 0, so only
    that root is tried; duplicates are merged by canonical form.
    """
    if n > limit:
        raise ValueError("size %d exceeds the brute-force limit %d" % (n, limit))
    if n == 0:
        return [P.vertex_map()]
    n2 = 2 * n
    found: dict[bytes, RootedMap] = {}
    for p in permutations(range(n2)):
        if _planar_connected(p, n2):
            m = RootedMap(p, 0, check=False)
            found.setdefault(P.canonical_form(m), m)
    return [found[k] for k in sorted(found)]


# -- samplers --------------------------------------------------------------------------

def _rng(seed: int) -> random.Random:
    return random.Random(seed)


def _pick(rng: random.Random, weights) -> int:
    """Index chosen with probability proportional to the big-integer weights."""
    total = sum(weights)
    r = rng.randrange(total)
    for j, w in enumerate(weights):
        if r < w:
            return j
        r -= w
    raise AssertionError("unreachable")


def sample_ff(n: int, seed: int) -> str:
    """A uniform fighting fish of size n."""
    if n < 2:
        raise ValueError("fighting fish have size at least 2")
    if n > TABLE_LIMIT:
        raise ValueError("size %d beyond the table limit %d" % (n, TABLE_LIMIT))
    f = ff_table(n).rows
    rng = _rng(seed)
    # tails[m][i] = sum_{j >= i} f[m][j]
    tails = {}

    def tail(m, i):
        key = (m, i)
        if key not in tails:
            row = f[m]
            tails[key] = sum(row[i:])
        return tails[key]

    def irr(m, i):
        if m == 2:
            return 1 if i == 1 else 0
        return tail(m - 1, i) if i <= m - 2 else 0

    prog = []
    k0 = _pick(rng, f[n])
    tasks = [("F", n, k0)]
    while tasks:
        kind, m, k = tasks.pop()
        if kind == "F":
            r = rng.randrange(f[m][k])
            w = irr(m, k)
            if r < w:
                tasks.append(("I", m, k))
                continue
            r -= w
            chosen = None
            for s in range(2, m):
                m2 = m + 1 - s
                for i in range(max(1, k - m2 + 1), min(k - 1, s - 1) + 1):
                    w = irr(s, i) * f[m2][k - i]
                    if r < w:
                        chosen = (s, i, m2)
                        break
                    r -= w
                if chosen:
                    break
            s, i, m2 = chosen
            prog.append(("odot",))
            tasks.append(("F", m2, k - i))
            tasks.append(("I", s, i))
        else:
            if m == 2:
                prog.append(("head",))
                continue
            row = f[m - 1]
            r = rng.randrange(tail(m - 1, k))
            j = k
            while r >= row[j]:
                r -= row[j]
                j += 1
            prog.append(("aug", k))
            tasks.append(("F", m - 1, j))
    stack: list[str] = []
    for op in reversed(prog):
        if op[0] == "head":
            stack.append(G.HEAD)
        elif op[0] == "aug":
            stack.append(G.fish_augment(stack.pop(), op[1]))
        else:
            a = stack.pop()
            b = stack.pop()
            stack.append(G.fish_odot(a, b))
    return stack[0]


def sample_gff(n: int, seed: int) -> str:
    """A uniform generalized fighting fish of size n."""
    if n < 0:
        raise ValueError("negative size")
    if n > TABLE_LIMIT:
        raise ValueError("size %d beyond the table limit %d" % (n, TABLE_LIMIT))
    N = gff_table(n).rows
    rng = _rng(seed)

    def get(m, l):
        row = N[m]
        return row[l] if 0 <= l < len(row) else 0

    prog = []
    tasks = [(n, _pick(rng, N[n]))]
    while tasks:
        m, l = tasks.pop()
        if m == 0:
            prog.append(("empty",))
            continue
        r = rng.randrange(N[m][l])
        if l >= 1:
            w = sum(N[m - 1][l - 1:])
            if r < w:
                row = N[m - 1]
                j = l - 1
                while r >= row[j]:
                    r -= row[j]
                    j += 1
                prog.append(("aug", l - 1))
                tasks.append((m - 1, j))
                continue
            r -= w
        chosen = None
        for m1 in range(m):
            m2 = m - 1 - m1
            for l1 in range(0, min(2 * m1, l - 2) + 1):
                w = get(m1, l1) * get(m2, l - 2 - l1)
                if r < w:
                    chosen = (m1, l1, m2)
                    break
                r -= w
            if chosen:
                break
        m1, l1, m2 = chosen
        prog.append(("oplus",))
        tasks.append((m2, l - 2 - l1))
        tasks.append((m1, l1))
    stack: list[str] = []
    for op in reversed(prog):
        if op[0] == "empty":
            stack.append("")
        elif op[0] == "aug":
            stack.append(G.gff_augment(stack.pop(), op[1]))
        else:
            a = stack.pop()
            b = stack.pop()
            stack.append(G.gff_oplus(a, b))
    return stack[0]


def sample_map(n: int, seed: int) -> RootedMap:
    from .bijection import xi_inv_fast
    return xi_inv_fast(sample_gff(n, seed))
