"""The Weyl group of a quiver acting on Z^n.

Group elements are stored as a reduced word together with the n x n integer
matrix of their action (column j is the image of e_j).  The action is
faithful, so matrix equality is element equality - a canonical form that
works unchanged for infinite groups.  Reducedness is decided by the
prefix-root criterion: a word is reduced iff reflecting the simple roots
along its prefixes never produces a negative vector, and the first negative
prefix root pinpoints a deletable letter pair.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property, lru_cache

from .errors import (
    InternalInvariantError,
    InputFormatError,
    NonReducedWordError,
    QuiverMismatchError,
    SingularRootError,
    IntegralityError,
    UnsupportedScopeError,
)
from .quiver import (
    IntVector,
    Quiver,
    check_vector,
    check_vertex,
    delete_vertex,
    dynkin_type,
    mutate_at,
    sym_form,
    unit_vector,
)

Word = tuple[int, ...]
Matrix = tuple[tuple[int, ...], ...]


def _check_word(q: Quiver, word) -> Word:
    word = tuple(int(l) for l in word)
    for l in word:
        check_vertex(q, l)
    return word


def simple_reflection(q: Quiver, i: int, v: IntVector) -> IntVector:
    """Apply s_i = t_{e_i}: subtract (e_i, v) times e_i.  An involution."""
    check_vertex(q, i)
    check_vector(q, v)
    c = 2 * v[i - 1]
    for s, t in q.arrows:
        if s == i:
            c -= v[t - 1]
        elif t == i:
            c -= v[s - 1]
    out = list(v)
    out[i - 1] -= c
    return tuple(out)


def reflect_by_root(q: Quiver, beta: IntVector, v: IntVector) -> IntVector:
    """Reflection t_beta(v) = v - 2 (beta,v)/(beta,beta) beta.

    Only defined when (beta, beta) != 0 and the coefficient is integral;
    real roots have (beta, beta) = 2, for which both conditions always hold.
    """
    check_vector(q, beta)
    check_vector(q, v)
    bb = sym_form(q, beta, beta)
    if bb == 0:
        raise SingularRootError("(beta, beta) = 0: reflection undefined")
    num = 2 * sym_form(q, beta, v)
    if num % bb != 0:
        raise IntegralityError("reflection does not preserve the integer lattice here")
    coef = num // bb
    return tuple(x - coef * b for x, b in zip(v, beta))


@lru_cache(maxsize=None)
def simple_reflection_matrix(q: Quiver, i: int) -> Matrix:
    n = q.n
    cols = [simple_reflection(q, i, unit_vector(n, j)) for j in range(1, n + 1)]
    return tuple(tuple(cols[c][r] for c in range(n)) for r in range(n))


def _identity_matrix(n: int) -> Matrix:
    return tuple(tuple(1 if r == c else 0 for c in range(n)) for r in range(n))


def _mat_mul(a: Matrix, b: Matrix) -> Matrix:
    n = len(a)
    return tuple(
        tuple(sum(a[r][k] * b[k][c] for k in range(n)) for c in range(n)) for r in range(n)
    )


def _mat_col(m: Matrix, j: int) -> IntVector:
    return tuple(row[j - 1] for row in m)


def _matrix_of_word(q: Quiver, word: Word) -> Matrix:
    m = _identity_matrix(q.n)
    for letter in word:
        m = _mat_mul(m, simple_reflection_matrix(q, letter))
    return m


@dataclass(frozen=True, eq=False)
class WeylElement:
    """A group element: reduced word plus integer action matrix.

    Two elements are equal exactly when their matrices agree; the stored
    word is one reduced expression among possibly many.
    """

    quiver: Quiver
    word: Word
    matrix: Matrix

    def __eq__(self, other: object) -> bool:
        return isinstance(other, WeylElement) and self.matrix == other.matrix

    def __hash__(self) -> int:
        return hash(self.matrix)

    @property
    def length(self) -> int:
        return len(self.word)

    def apply(self, v: IntVector) -> IntVector:
        check_vector(self.quiver, v)
        return tuple(sum(row[c] * v[c] for c in range(len(v))) for row in self.matrix)

    def __repr__(self) -> str:
        name = "*".join(f"s{l}" for l in self.word) or "e"
        return f"WeylElement({name})"


def weyl_element(q: Quiver, word) -> WeylElement:
    """Build the element of the given word; the stored word is re-reduced."""
    reduced = reduce_word(q, word)
    return WeylElement(q, reduced, _matrix_of_word(q, reduced))


def identity_element(q: Quiver) -> WeylElement:
    return WeylElement(q, (), _identity_matrix(q.n))


def compose(a: WeylElement, b: WeylElement) -> WeylElement:
    """The product a.b (a acting after b)."""
    if a.quiver != b.quiver:
        raise QuiverMismatchError("elements live over different quivers")
    q = a.quiver
    word = reduce_word(q, a.word + b.word)
    return WeylElement(q, word, _mat_mul(a.matrix, b.matrix))


def invert(a: WeylElement) -> WeylElement:
    word = a.word[::-1]
    return WeylElement(a.quiver, word, _matrix_of_word(a.quiver, word))


@dataclass(frozen=True)
class InversionSet:
    """Inversions of a reduced word: prefix-reflected simple roots, in word
    order.  As a set this is {positive roots alpha : w^{-1} alpha < 0} and
    does not depend on the chosen reduced word."""

    roots: tuple[IntVector, ...]

    @cached_property
    def root_set(self) -> frozenset[IntVector]:
        return frozenset(self.roots)

    def __contains__(self, root: IntVector) -> bool:
        return root in self.root_set

    def __iter__(self):
        return iter(self.roots)

    def __len__(self) -> int:
        return len(self.roots)


def _prefix_roots(q: Quiver, word: Word) -> tuple[IntVector, ...] | None:
    """Roots e_{i1}, s_{i1} e_{i2}, ... or None if one goes negative."""
    m = _identity_matrix(q.n)
    roots = []
    for letter in word:
        root = _mat_col(m, letter)
        if any(x < 0 for x in root):
            return None
        roots.append(root)
        m = _mat_mul(m, simple_reflection_matrix(q, letter))
    return tuple(roots)


def is_reduced(q: Quiver, word) -> bool:
    word = _check_word(q, word)
    roots = _prefix_roots(q, word)
    return roots is not None and len(set(roots)) == len(roots)


def inversion_set(q: Quiver, word) -> InversionSet:
    word = _check_word(q, word)
    roots = _prefix_roots(q, word)
    if roots is None:
        raise NonReducedWordError("word is not reduced: a prefix root went negative")
    if len(set(roots)) != len(roots):
        raise InternalInvariantError("positive prefix roots repeated on a non-reduced word")
    return InversionSet(roots)


def reduce_word(q: Quiver, word) -> Word:
    """A reduced word for the same element.

    Repeatedly locates the first prefix root that goes negative and deletes
    the two letters the deletion condition pairs up; already-reduced input
    is returned unchanged.
    """
    word = _check_word(q, word)
    while True:
        m = _identity_matrix(q.n)
        neg_k = None
        for k, letter in enumerate(word):
            root = _mat_col(m, letter)
            if any(x < 0 for x in root):
                neg_k = k
                break
            m = _mat_mul(m, simple_reflection_matrix(q, letter))
        if neg_k is None:
            return word
        # Walk the suffix backwards; the letter whose reflection first sends
        # the accumulated root negative must be that root itself.
        u = unit_vector(q.n, word[neg_k])
        t = neg_k - 1
        while t >= 0:
            nxt = simple_reflection(q, word[t], u)
            if any(x < 0 for x in nxt):
                break
            u = nxt
            t -= 1
        if t < 0 or u != unit_vector(q.n, word[t]):
            raise InternalInvariantError("deletion condition failed to locate a letter pair")
        word = word[:t] + word[t + 1 : neg_k] + word[neg_k + 1 :]


def left_descent(q: Quiver, i: int, w: WeylElement) -> bool:
    """True iff l(s_i w) < l(w), i.e. e_i is an inversion of w."""
    check_vertex(q, i)
    u = unit_vector(q.n, i)
    for letter in w.word:
        u = simple_reflection(q, letter, u)
    if all(x <= 0 for x in u):
        return True
    if all(x >= 0 for x in u):
        return False
    raise InternalInvariantError("w^{-1} e_i is not sign-coherent")


def coxeter_of_quiver(q: Quiver) -> Word:
    """The Coxeter word matching the orientation: s_i precedes s_j whenever
    some arrow j -> i exists.  Ties break towards smaller vertex indices, so
    the output is deterministic; any other linear extension is the same
    group element."""
    indeg = [0] * (q.n + 1)
    succ: list[list[int]] = [[] for _ in range(q.n + 1)]
    for s, t in q.arrows:
        # t must come before s
        indeg[s] += 1
        succ[t].append(s)
    import heapq

    ready = [v for v in range(1, q.n + 1) if indeg[v] == 0]
    heapq.heapify(ready)
    order = []
    while ready:
        v = heapq.heappop(ready)
        order.append(v)
        for u in succ[v]:
            indeg[u] -= 1
            if indeg[u] == 0:
                heapq.heappush(ready, u)
    return tuple(order)


def quiver_of_coxeter(graph: Quiver, word) -> Quiver:
    """Orient the underlying graph of ``graph`` by a Coxeter word: each edge
    {i, j} points at whichever of i, j appears earlier in the word.  Inverse
    of coxeter_of_quiver, arrow ids preserved."""
    word = _check_word(graph, word)
    if sorted(word) != list(range(1, graph.n + 1)):
        raise InputFormatError("Coxeter word must contain each generator exactly once")
    pos = {v: k for k, v in enumerate(word)}
    arrows = tuple((s, t) if pos[t] < pos[s] else (t, s) for s, t in graph.arrows)
    return Quiver(graph.n, arrows)


def is_c_sortable(q: Quiver, w: WeylElement) -> bool:
    """Sortability with respect to c = coxeter_of_quiver(q).

    Recursive test: let i be the first letter of c (a sink of q).  If s_i
    shortens w, strip it and continue on the mutated quiver, whose Coxeter
    element is the rotated word.  Otherwise w must avoid vertex i entirely
    (no inversion supported there) and the question descends to the
    vertex-deleted quiver.
    """
    if len(w.word) == 0:
        return True
    c = coxeter_of_quiver(q)
    i = c[0]
    if left_descent(q, i, w):
        q2 = mutate_at(q, i)
        return is_c_sortable(q2, weyl_element(q2, (i,) + w.word))
    inv = inversion_set(q, w.word)
    if any(root[i - 1] != 0 for root in inv.roots):
        return False
    if i in w.word:
        raise InternalInvariantError("word uses a vertex outside the support of its inversions")
    q2 = delete_vertex(q, i)
    word2 = tuple(j if j < i else j - 1 for j in w.word)
    return is_c_sortable(q2, weyl_element(q2, word2))


def enumerate_c_sortable(q: Quiver, length_bound: int | None = None) -> list[WeylElement]:
    """All c-sortable elements of length at most ``length_bound``.

    Generated depth-first over nested generator subsets J1 >= J2 >= ...,
    pruning as soon as appending the next subword stops being reduced.  With
    ``length_bound=None`` the quiver must be Dynkin and the bound is the
    (finite) number of positive roots.  Distinct chains give distinct
    elements; a matrix-keyed set deduplicates defensively anyway.
    """
    if length_bound is None:
        if not dynkin_type(q).is_dynkin:
            raise UnsupportedScopeError("an explicit length bound is required off Dynkin type")
        from .roots import positive_real_roots

        listing = positive_real_roots(q)
        if not listing.complete:
            raise InternalInvariantError("root orbit of a Dynkin quiver did not close")
        length_bound = len(listing.roots)
    if length_bound < 0:
        raise InputFormatError("length bound must be nonnegative")

    c = coxeter_of_quiver(q)
    seen: set[WeylElement] = set()
    out: list[WeylElement] = []

    def record(word: Word, matrix: Matrix) -> None:
        elem = WeylElement(q, word, matrix)
        if elem not in seen:
            seen.add(elem)
            out.append(elem)

    def subsets(vertices: tuple[int, ...]):
        for size in range(1, len(vertices) + 1):
            yield from itertools.combinations(vertices, size)

    def extend(word: Word, matrix: Matrix, allowed: tuple[int, ...]) -> None:
        for J in subsets(allowed):
            letters = tuple(l for l in c if l in J)
            if len(word) + len(letters) > length_bound:
                continue
            m = matrix
            ok = True
            for letter in letters:
                if any(x < 0 for x in _mat_col(m, letter)):
                    ok = False
                    break
                m = _mat_mul(m, simple_reflection_matrix(q, letter))
            if not ok:
                continue
            new_word = word + letters
            record(new_word, m)
            extend(new_word, m, J)

    record((), _identity_matrix(q.n))
    extend((), _identity_matrix(q.n), tuple(range(1, q.n + 1)))
    out.sort(key=lambda w: (w.length, w.word))
    return out


def element_to_json(w: WeylElement) -> dict:
    return {"word": list(w.word), "matrix": [list(row) for row in w.matrix]}


def element_from_json(q: Quiver, data: object) -> WeylElement:
    if not isinstance(data, dict) or "word" not in data:
        raise InputFormatError('element JSON must be {"word": [...], "matrix": [[...], ...]}')
    elem = weyl_element(q, data["word"])
    if "matrix" in data:
        given = tuple(tuple(int(x) for x in row) for row in data["matrix"])
        if given != elem.matrix:
            raise InputFormatError("element JSON matrix disagrees with its word")
    return elem
