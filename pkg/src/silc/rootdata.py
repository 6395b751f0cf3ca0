"""Finite irreducible root systems and their Weyl groups.

Conventions used throughout the package:

* Cartan matrix ``A[i][j] = <alpha_j, alpha_i^vee>``.
* Weights live in the fundamental-weight basis, coweights in the simple
  coroot basis and roots in the simple-root basis.  The pairing of a weight
  with a coweight is therefore the plain dot product.
* Simple indices are ``1..rank`` in user-facing data and ``0..rank-1`` in
  internal tuples.
"""

from __future__ import annotations

from collections import deque
from fractions import Fraction
from functools import lru_cache

from .errors import InputError, ResourceError

DEFAULT_GROUP_BOUND = 10**6


class Weight(tuple):
    """Integer vector in the fundamental-weight basis."""

    __slots__ = ()

    def __repr__(self):
        return f"Weight{tuple(self)}"


class Coweight(tuple):
    """Integer vector in the simple-coroot basis."""

    __slots__ = ()

    def __repr__(self):
        return f"Coweight{tuple(self)}"


class Root(tuple):
    """Integer vector in the simple-root basis."""

    __slots__ = ()

    def __repr__(self):
        return f"Root{tuple(self)}"


def _matmul(a, b):
    n = len(a)
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n))
        for i in range(n)
    )


def _matvec(m, v):
    return tuple(sum(r[j] * v[j] for j in range(len(v))) for r in m)


def _identity(n):
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def cartan_matrix(series: str, rank: int) -> tuple[tuple[int, ...], ...]:
    """Cartan matrix in Bourbaki numbering (0-based rows/columns)."""
    s = str(series).upper()
    n = rank
    valid = {
        "A": n >= 1,
        "B": n >= 2,
        "C": n >= 2,
        "D": n >= 4,
        "E": n in (6, 7, 8),
        "F": n == 4,
        "G": n == 2,
    }
    if s not in valid or not isinstance(n, int) or not valid[s]:
        raise InputError(f"invalid Cartan type {series}{rank}")
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def link(i, j, aij=-1, aji=-1):
        a[i][j] = aij
        a[j][i] = aji

    if s in "ABC":
        for i in range(n - 1):
            link(i, i + 1)
        if s == "B":
            # alpha_n short
            link(n - 2, n - 1, -1, -2)
        elif s == "C":
            # alpha_n long
            link(n - 2, n - 1, -2, -1)
    elif s == "D":
        for i in range(n - 2):
            link(i, i + 1)
        link(n - 3, n - 1)
    elif s == "E":
        link(0, 2)
        link(1, 3)
        for i in range(2, n - 1):
            link(i, i + 1)
    elif s == "F":
        link(0, 1)
        link(1, 2, -1, -2)
        link(2, 3)
    elif s == "G":
        link(0, 1, -3, -1)
    return tuple(tuple(r) for r in a)


class FiniteWeylElement:
    """Element of the finite Weyl group, canonicalized by its coweight matrix.

    Elements are interned per datum, so ``is`` comparison is valid between
    elements of the same datum.  ``matrix`` acts on coweights, ``wmat`` on
    weights and ``rmat`` on roots (all as column vectors).
    """

    __slots__ = (
        "datum", "matrix", "wmat", "rmat", "index", "_word", "_inv", "_hash",
        "__weakref__",
    )

    def __init__(self, datum, matrix, wmat, rmat, index):
        self.datum = datum
        self.matrix = matrix
        self.wmat = wmat
        self.rmat = rmat
        self.index = index
        self._word = None
        self._inv = None
        self._hash = hash(matrix)

    def __hash__(self):
        return self._hash

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, FiniteWeylElement):
            return NotImplemented
        return self.matrix == other.matrix

    def __mul__(self, other):
        return self.datum.mul(self, other)

    def __repr__(self):
        w = " ".join(str(i + 1) for i in self.word)
        return f"W[{w}]"

    def inverse(self) -> FiniteWeylElement:
        if self._inv is None:
            d = self.datum
            x = d.identity
            for i in self.word[::-1]:
                x = d.mul(x, d.simple[i])
            self._inv = x
            x._inv = self
        return self._inv

    def is_descent(self, i: int) -> bool:
        """True when ``w alpha_i`` is negative (0-based ``i``)."""
        return any(r[i] < 0 for r in self.rmat)

    @property
    def word(self) -> tuple[int, ...]:
        """Reduced word (0-based indices), built from right descents."""
        if self._word is None:
            d = self.datum
            tail = []
            x = self
            while x._word is None:
                for i in range(d.rank):
                    if x.is_descent(i):
                        break
                else:
                    x._word = ()
                    break
                tail.append((x, i))
                x = d.mul(x, d.simple[i])
            word = x._word
            for y, i in reversed(tail):
                word = word + (i,)
                y._word = word
        return self._word

    @property
    def length(self) -> int:
        return len(self.word)

    def act_coweight(self, xi):
        return _matvec(self.matrix, xi)

    def act_weight(self, mu):
        return _matvec(self.wmat, mu)

    def act_root(self, alpha):
        return _matvec(self.rmat, alpha)


class CartanDatum:
    """Exact data of a finite irreducible root system."""

    def __init__(self, series: str, rank: int):
        self.series = series.upper()
        self.rank = rank
        A = cartan_matrix(series, rank)
        self.cartan = A
        n = rank
        self._elements: dict = {}
        self._by_index: list[FiniteWeylElement] = []
        self._mul_cache: dict = {}
        ident = _identity(n)
        self.identity = self._intern(ident, ident, ident)
        self.identity._word = ()
        self.identity._inv = self.identity
        simple = []
        for i in range(n):
            m = tuple(
                tuple(int(k == j) - int(k == i) * A[j][i] for j in range(n))
                for k in range(n)
            )
            wm = tuple(
                tuple(int(k == j) - int(j == i) * A[k][i] for j in range(n))
                for k in range(n)
            )
            rm = tuple(
                tuple(int(k == j) - int(k == i) * A[i][j] for j in range(n))
                for k in range(n)
            )
            s = self._intern(m, wm, rm)
            s._word = (i,)
            s._inv = s
            simple.append(s)
        self.simple = tuple(simple)
        self._build_roots()
        self.rho = Weight((1,) * n)
        half = [Fraction(0)] * n
        for a in self.positive_roots:
            for k, c in enumerate(self.coroot_of[a]):
                half[k] += Fraction(c, 2)
        self.rho_check = tuple(half)
        self.two_rho_check = Coweight(int(2 * c) for c in half)
        w = self.identity
        while True:
            for i in range(n):
                if not w.is_descent(i):
                    w = self.mul(w, simple[i])
                    break
            else:
                break
        self.w0 = w
        self.theta = max(self.positive_roots, key=lambda r: (sum(r), r))
        self.theta_check = self.coroot_of[self.theta]
        self.theta_weight = self.root_to_weight(self.theta)
        self._reflections: dict = {}
        self._components: dict = {}
        self._group = None

    def __repr__(self):
        return f"CartanDatum({self.series}{self.rank})"

    def __reduce__(self):
        return (build_cartan, (self.series, self.rank))

    # -- group plumbing -------------------------------------------------
    def _intern(self, m, wm, rm):
        e = self._elements.get(m)
        if e is None:
            e = FiniteWeylElement(self, m, wm, rm, len(self._by_index))
            self._elements[m] = e
            self._by_index.append(e)
        return e

    def mul(self, a: FiniteWeylElement, b: FiniteWeylElement) -> FiniteWeylElement:
        key = (a.index, b.index)
        r = self._mul_cache.get(key)
        if r is None:
            if a.index == 0:
                r = b
            elif b.index == 0:
                r = a
            else:
                r = self._intern(
                    _matmul(a.matrix, b.matrix),
                    _matmul(a.wmat, b.wmat),
                    _matmul(a.rmat, b.rmat),
                )
            self._mul_cache[key] = r
        return r

    def from_word(self, word) -> FiniteWeylElement:
        """Product of simple reflections; ``word`` uses 0-based indices."""
        x = self.identity
        for i in word:
            if not 0 <= i < self.rank:
                raise InputError(f"simple index {i + 1} out of range")
            x = self.mul(x, self.simple[i])
        return x

    def element_from_matrix(self, matrix) -> FiniteWeylElement:
        m = tuple(tuple(int(v) for v in r) for r in matrix)
        e = self._elements.get(m)
        if e is None:
            for w in self.enumerate_weyl_group():
                if w.matrix == m:
                    return w
            raise InputError("matrix is not a Weyl group element")
        return e

    # -- roots ------------------------------------------------------------
    def _build_roots(self):
        n = self.rank
        A = self.cartan
        seen = {}
        queue = deque()
        for i in range(n):
            r = tuple(int(k == i) for k in range(n))
            seen[r] = r
            queue.append(r)
        while queue:
            r = queue.popleft()
            c = seen[r]
            for i in range(n):
                p = sum(A[i][j] * r[j] for j in range(n))
                r2 = tuple(r[k] - (p if k == i else 0) for k in range(n))
                q = sum(A[j][i] * c[j] for j in range(n))
                c2 = tuple(c[k] - (q if k == i else 0) for k in range(n))
                if r2 not in seen:
                    seen[r2] = c2
                    queue.append(r2)
        pos = sorted((r for r in seen if all(v >= 0 for v in r)), key=lambda r: (sum(r), r))
        self.positive_roots = tuple(Root(r) for r in pos)
        self.roots = self.positive_roots + tuple(Root(-v for v in r) for r in pos)
        self.coroot_of = {Root(r): Coweight(c) for r, c in seen.items()}
        self._root_weight = {r: self.root_to_weight(r) for r in self.roots}
        self._root_index = {r: k for k, r in enumerate(self.positive_roots)}

    def root_to_weight(self, alpha) -> Weight:
        A = self.cartan
        n = self.rank
        return Weight(sum(A[k][j] * alpha[j] for j in range(n)) for k in range(n))

    def root_pair(self, alpha, xi) -> int:
        """``<alpha, xi>`` for a root in the simple-root basis."""
        w = self._root_weight.get(alpha)
        if w is None:
            w = self.root_to_weight(alpha)
        return sum(a * b for a, b in zip(w, xi))

    def is_root(self, alpha) -> bool:
        return tuple(alpha) in self.coroot_of

    def coroot(self, alpha) -> Coweight:
        try:
            return self.coroot_of[Root(alpha)]
        except KeyError:
            raise InputError(f"{tuple(alpha)} is not a root") from None

    def reflection(self, alpha) -> FiniteWeylElement:
        """The reflection ``s_alpha`` for a (signed) root."""
        alpha = Root(alpha)
        if any(v < 0 for v in alpha):
            alpha = Root(-v for v in alpha)
        r = self._reflections.get(alpha)
        if r is None:
            n = self.rank
            c = self.coroot(alpha)
            aw = self.root_to_weight(alpha)
            A = self.cartan
            m = tuple(tuple(int(k == j) - c[k] * aw[j] for j in range(n)) for k in range(n))
            wm = tuple(tuple(int(k == j) - aw[k] * c[j] for j in range(n)) for k in range(n))
            cw = [sum(A[l][j] * c[l] for l in range(n)) for j in range(n)]
            rm = tuple(tuple(int(k == j) - alpha[k] * cw[j] for j in range(n)) for k in range(n))
            r = self._intern(m, wm, rm)
            r._inv = r
            self._reflections[alpha] = r
        return r

    # -- parabolic data -----------------------------------------------------
    def components(self, J) -> tuple[tuple[int, ...], ...]:
        """Connected components of the Dynkin subdiagram on ``J`` (0-based)."""
        J = tuple(sorted(set(J)))
        res = self._components.get(J)
        if res is None:
            left = set(J)
            comps = []
            while left:
                start = min(left)
                comp = {start}
                stack = [start]
                left.discard(start)
                while stack:
                    i = stack.pop()
                    for j in list(left):
                        if self.cartan[i][j] != 0:
                            left.discard(j)
                            comp.add(j)
                            stack.append(j)
                comps.append(tuple(sorted(comp)))
            res = tuple(sorted(comps))
            self._components[J] = res
        return res

    def highest_root_of(self, comp) -> Root:
        """Highest root of the subsystem spanned by the simple roots in ``comp``."""
        sup = set(comp)
        cand = [r for r in self.positive_roots if all(v == 0 or k in sup for k, v in enumerate(r))]
        return max(cand, key=lambda r: (sum(r), r))

    # -- group enumeration ------------------------------------------------------
    def enumerate_weyl_group(self, bound: int = DEFAULT_GROUP_BOUND) -> tuple[FiniteWeylElement, ...]:
        if self._group is not None:
            return self._group
        seen = {self.identity}
        order = [self.identity]
        queue = deque(order)
        while queue:
            w = queue.popleft()
            for s in self.simple:
                v = self.mul(w, s)
                if v not in seen:
                    if len(seen) >= bound:
                        raise ResourceError(f"Weyl group of {self!r} exceeds bound {bound}")
                    seen.add(v)
                    order.append(v)
                    queue.append(v)
        self._group = tuple(order)
        return self._group

    def weyl_dimension(self, lam) -> int:
        num = 1
        den = 1
        for a in self.positive_roots:
            c = self.coroot_of[a]
            num *= sum((l + 1) * v for l, v in zip(lam, c))
            den *= sum(c)
        assert num % den == 0
        return num // den

    def is_dominant(self, lam) -> bool:
        return all(v >= 0 for v in lam)


@lru_cache(maxsize=None)
def _build(series: str, rank: int) -> CartanDatum:
    return CartanDatum(series, rank)


def build_cartan(series: str, rank: int) -> CartanDatum:
    """Cartan datum of type ``series``\\ ``rank`` (cached singleton)."""
    if not isinstance(rank, int) or isinstance(rank, bool):
        raise InputError(f"rank must be an integer, got {rank!r}")
    cartan_matrix(series, rank)
    return _build(str(series).upper(), rank)


def _check_rank(datum, v):
    if len(v) != datum.rank:
        raise InputError(f"expected a vector of length {datum.rank}, got {len(v)}")


def pairing(mu, xi) -> int:
    """``<mu, xi>`` for a weight and a coweight."""
    if len(mu) != len(xi):
        raise InputError("rank mismatch in pairing")
    return sum(a * b for a, b in zip(mu, xi))


def weyl_act(w: FiniteWeylElement, v):
    _check_rank(w.datum, v)
    if isinstance(v, Weight):
        return Weight(w.act_weight(v))
    if isinstance(v, Coweight):
        return Coweight(w.act_coweight(v))
    if isinstance(v, Root):
        return Root(w.act_root(v))
    raise InputError("weyl_act needs a Weight, Coweight or Root")


def length_and_word(w: FiniteWeylElement) -> tuple[int, list[int]]:
    """Length and a reduced word with 1-based simple indices."""
    word = [i + 1 for i in w.word]
    return len(word), word


def inversion_count(w: FiniteWeylElement) -> int:
    return sum(1 for a in w.datum.positive_roots if any(v < 0 for v in w.act_root(a)))


def enumerate_weyl_group(datum: CartanDatum, bound: int = DEFAULT_GROUP_BOUND):
    return datum.enumerate_weyl_group(bound)


def dominant_weights(datum: CartanDatum, max_coord: int):
    """All dominant weights with every coordinate in ``0..max_coord``."""
    from itertools import product

    return [Weight(c) for c in product(range(max_coord + 1), repeat=datum.rank)]


def weyl_dimension(datum: CartanDatum, lam) -> int:
    return datum.weyl_dimension(lam)


__all__ = [
    "CartanDatum", "Coweight", "FiniteWeylElement", "Root", "Weight",
    "build_cartan", "cartan_matrix", "dominant_weights", "enumerate_weyl_group",
    "inversion_count", "length_and_word", "pairing", "weyl_act", "weyl_dimension",
]
