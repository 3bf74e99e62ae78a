"""Reflection representations attached to decorated diagrams.

A diagram on generators s1..sn carries, for each edge {i, j}, a pair of
weights (k_ij, k_ji): the generator s_i sends the basis vector a_j to
a_j + k_ij a_i (and negates a_i).  Matrices act on coordinate columns and a
word s_{i1} s_{i2} ... multiplies left to right.  Tree edges are decorated
(C, 1); the single cycle edge, when there is one, carries the pair (l, m).

Fixed presets live in presets.json next to this module; the parameterized
families (the circuit diagrams and the n-indexed rank-3 family) are built
in code.
"""

import json
import os
from fractions import Fraction
from math import gcd

from .cyclo import CycloElem, field_ctx
from .matrices import SquareMat, mat_word
from .upoly import v_poly

_PRESET_PATH = os.path.join(os.path.dirname(__file__), "presets.json")
_PRESET_DATA = None


class DiagramSpec:
    def __init__(self, rank, edges, conductor=1):
        """edges: dict {(i, j): (k_ij, k_ji)} with 1 <= i < j <= rank."""
        self.rank = rank
        self.edges = dict(edges)
        self.conductor = conductor
        for (i, j) in self.edges:
            if not (1 <= i < j <= rank):
                raise ValueError("bad edge (%d, %d)" % (i, j))


def build_generators(spec, ctx):
    """The rank reflection matrices over Q(zeta_conductor)."""
    n = spec.rank
    one, zero = ctx.one(), ctx.zero()

    def as_elem(x):
        if isinstance(x, CycloElem):
            return x if x.ctx.N == ctx.N else x.lift(ctx)
        return ctx.from_fraction(Fraction(x))

    weights = {}
    for (i, j), (kij, kji) in spec.edges.items():
        weights[(i, j)] = as_elem(kij)
        weights[(j, i)] = as_elem(kji)

    gens = []
    for i in range(1, n + 1):
        rows = [[one if r == c else zero for c in range(n)] for r in range(n)]
        rows[i - 1][i - 1] = -one
        for j in range(1, n + 1):
            if j != i and (i, j) in weights:
                rows[i - 1][j - 1] = weights[(i, j)]
        gens.append(SquareMat(rows, one, zero))
    return gens


class ReflectionRep:
    def __init__(self, name, spec, ctx):
        self.name = name
        self.spec = spec
        self.ctx = ctx
        self.gens = build_generators(spec, ctx)
        for i, s in enumerate(self.gens):
            if not (s * s).is_identity():
                raise ValueError("generator s%d is not an involution" % (i + 1))

    @property
    def rank(self):
        return self.spec.rank

    def identity(self):
        return SquareMat.identity(self.rank, self.ctx.one(), self.ctx.zero())

    def word(self, indices):
        """Matrix of the word given as 1-based generator indices."""
        return mat_word(self.gens, [i - 1 for i in indices])

    def s0_word(self):
        """The extra reflection of the circuit diagram: s1 conjugated by
        s2 s3 ... s_{n-1}."""
        n = self.rank
        middle = list(range(n - 1, 1, -1)) + [1] + list(range(2, n))
        return middle

    def edge_constants(self):
        """For rank 3: (alpha, beta, l, m) in the fixed layout
        alpha = k_12, beta = k_13, (l, m) on {2, 3}."""
        if self.rank != 3:
            raise ValueError("edge_constants is a rank-3 helper")

        def get(i, j):
            if (min(i, j), max(i, j)) not in self.spec.edges:
                return self.ctx.zero()
            kij, kji = self.spec.edges[(min(i, j), max(i, j))]
            x = kij if i < j else kji
            if isinstance(x, CycloElem):
                return x if x.ctx.N == self.ctx.N else x.lift(self.ctx)
            return self.ctx.from_fraction(Fraction(x))

        return get(1, 2), get(1, 3), get(2, 3), get(3, 2)

    def delta(self):
        """8 - 2 alpha - 2 beta - 2 gamma - (alpha l + beta m), the
        degeneracy invariant of the rank-3 diagram."""
        a, b, l, m = self.edge_constants()
        g = l * m
        return 8 - 2 * a - 2 * b - 2 * g - (a * l + b * m)

    def theta_pair(self):
        a, b, l, m = self.edge_constants()
        g = l * m
        return (-4 + a + b + g + a * l, 4 - a - b - g - b * m)

    def pair_C(self, s, t):
        """trace((s - 1)(t - 1)); the pairing that controls the order of the
        product of two reflections."""
        n = s.n
        for mat in (s, t):
            if mat.trace() != n - 2:
                raise ValueError("pair_C expects reflections "
                                 "(trace must be n - 2)")
        acc = None
        for i in range(n):
            for j in range(n):
                term = (s.rows[i][j] - (1 if i == j else 0)) * \
                       (t.rows[j][i] - (1 if i == j else 0))
                acc = term if acc is None else acc + term
        return acc

    def pair_C_order(self, s, t, pmax=60):
        """(C, order of s t): the order is read off from which v_p vanishes
        at C; None when no p <= pmax matches (C = 4 means unipotent or
        worse, so infinite order when s t is not the identity)."""
        c = self.pair_C(s, t)
        if c == 0:
            return c, 2
        for p in range(3, pmax + 1):
            if v_poly(p).eval(c).is_zero():
                return c, p
        return c, None


# -- preset catalog ----------------------------------------------------

def _load_presets():
    global _PRESET_DATA
    if _PRESET_DATA is None:
        with open(_PRESET_PATH) as fh:
            _PRESET_DATA = json.load(fh)
        if _PRESET_DATA.get("version") != 1:
            raise RuntimeError("unsupported presets.json version")
    return _PRESET_DATA


def preset_names():
    data = _load_presets()
    return sorted(data["presets"])


def preset_info(name):
    data = _load_presets()
    if name not in data["presets"]:
        raise KeyError("unknown preset %r" % (name,))
    return data["presets"][name]


def _scalar_from_json(ctx, data):
    den, vec = data
    return CycloElem(ctx, vec, den)


def preset(name):
    """Build a representation by name.  Fixed names come from presets.json;
    parameterized families are spelled gppn:p:n, gnn3:n:k and atilde:n."""
    if ":" in name:
        head, *args = name.split(":")
        args = [int(a) for a in args]
        if head == "gppn":
            return circuit_rep(*args)
        if head == "atilde":
            return affine_circuit_rep(*args)
        if head == "gnn3":
            return gnn3_rep(*args)
        raise KeyError("unknown parameterized preset family %r" % (head,))
    info = preset_info(name)
    ctx = field_ctx(info["conductor"])
    edges = {}
    for i, j, kij, kji in info["edges"]:
        edges[(i, j)] = (_scalar_from_json(ctx, kij), _scalar_from_json(ctx, kji))
    spec = DiagramSpec(info["rank"], edges, conductor=info["conductor"])
    return ReflectionRep(name, spec, ctx)


def rank3_rep(name, alpha, beta, l, m, conductor):
    ctx = field_ctx(conductor)
    spec = DiagramSpec(3, {(1, 2): (alpha, 1), (1, 3): (beta, 1),
                           (2, 3): (l, m)}, conductor=conductor)
    return ReflectionRep(name, spec, ctx)


def circuit_rep(p, n):
    """The circuit diagram on n generators whose cycle edge carries
    (zeta_p, zeta_p^-1); the image group is the monomial group of order
    p^(n-1) n!."""
    if n < 3:
        raise ValueError("need rank >= 3")
    cond = 1 if p == 1 else p
    ctx = field_ctx(cond)
    l = ctx.from_int(-1) if p == 2 else ctx.zeta(1)
    m = ctx.from_int(-1) if p == 2 else ctx.zeta(-1)
    edges = {(i, i + 1): (1, 1) for i in range(1, n)}
    edges[(1, n)] = (l, m)
    spec = DiagramSpec(n, edges, conductor=cond)
    return ReflectionRep("gppn:%d:%d" % (p, n), spec, ctx)


def affine_circuit_rep(n):
    """Same circuit with both cycle weights 1; infinite (affine) image."""
    if n < 3:
        raise ValueError("need rank >= 3")
    ctx = field_ctx(1)
    edges = {(i, i + 1): (1, 1) for i in range(1, n)}
    edges[(1, n)] = (1, 1)
    spec = DiagramSpec(n, edges, conductor=1)
    return ReflectionRep("atilde:%d" % n, spec, ctx)


def gnn3_rep(n, k=1):
    """Rank-3 diagram with alpha = beta = 1 and cycle pair
    (-1 - zeta_n^k, -1 - zeta_n^-k); gamma = l m is then the (n, k) v-root
    shifted into place and the image has order 6 n^2."""
    if n < 2:
        raise ValueError("need n >= 2")
    if n == 2:
        return rank3_rep("gnn3:2:1", 1, 1, 0, 0, 1)
    if gcd(k, n) != 1:
        raise ValueError("k must be coprime to n")
    ctx = field_ctx(n)
    l = -1 - ctx.zeta(k)
    m = -1 - ctx.zeta(-k)
    return rank3_rep("gnn3:%d:%d" % (n, k), 1, 1, l, m, n)
