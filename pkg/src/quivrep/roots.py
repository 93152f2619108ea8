"""Positive real roots, the fundamental imaginary cone, and classification
of integer vectors as roots."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import cached_property

from .errors import InconclusiveError, InvalidParameterError
from .quiver import IntVector, Quiver, check_vector, sym_form, unit_vector
from .weyl import simple_reflection


class RootClass(Enum):
    REAL_POSITIVE = "RealPositive"
    REAL_NEGATIVE = "RealNegative"
    IMAGINARY = "Imaginary"
    NOT_A_ROOT = "NotARoot"


@dataclass(frozen=True)
class RootListing:
    """Positive real roots found up to a height bound, lexicographically
    sorted.  ``complete`` records whether the reflection orbit closed below
    the bound, i.e. whether this is the whole of the positive real roots."""

    roots: tuple[IntVector, ...]
    complete: bool

    @cached_property
    def root_set(self) -> frozenset[IntVector]:
        return frozenset(self.roots)

    def __contains__(self, root: IntVector) -> bool:
        return root in self.root_set

    def __iter__(self):
        return iter(self.roots)

    def __len__(self) -> int:
        return len(self.roots)


def positive_real_roots(q: Quiver, height_bound: int | None = None) -> RootListing:
    """Orbit of the simple roots under simple reflections, kept while all
    coordinates stay nonnegative and the coordinate sum stays within the
    bound.  On a Dynkin quiver the orbit closes on its own and the listing
    comes back complete."""
    if height_bound is None:
        height_bound = 10 * q.n + 10
    if height_bound < 1:
        raise InvalidParameterError("height bound must be at least 1")
    found: set[IntVector] = set()
    frontier: set[IntVector] = set()
    complete = True
    for i in range(1, q.n + 1):
        e = unit_vector(q.n, i)
        if sum(e) <= height_bound:
            found.add(e)
            frontier.add(e)
    while frontier:
        new: set[IntVector] = set()
        for root in frontier:
            for i in range(1, q.n + 1):
                image = simple_reflection(q, i, root)
                if any(x < 0 for x in image):
                    continue
                if image in found or image in new:
                    continue
                if sum(image) > height_bound:
                    complete = False
                    continue
                new.add(image)
        found |= new
        frontier = new
    return RootListing(tuple(sorted(found)), complete)


def _support_connected(q: Quiver, v: IntVector) -> bool:
    support = {i for i in range(1, q.n + 1) if v[i - 1] != 0}
    if not support:
        return False
    start = min(support)
    seen = {start}
    stack = [start]
    while stack:
        x = stack.pop()
        for u in q.neighbors(x):
            if u in support and u not in seen:
                seen.add(u)
                stack.append(u)
    return seen == support


def in_fundamental_cone(q: Quiver, alpha: IntVector) -> bool:
    """Membership in the fundamental cone of imaginary roots: nonnegative,
    connected support, and (alpha, e_i) <= 0 for every vertex i."""
    check_vector(q, alpha)
    if all(x == 0 for x in alpha):
        raise InvalidParameterError("zero vector has no cone membership")
    if any(x < 0 for x in alpha):
        return False
    if not _support_connected(q, alpha):
        return False
    return all(sym_form(q, alpha, unit_vector(q.n, i)) <= 0 for i in range(1, q.n + 1))


def classify_vector(q: Quiver, alpha: IntVector, search_bound: int | None = None) -> RootClass:
    """Classify an integer vector as a positive/negative real root, an
    imaginary root, or neither.

    Works by height-decreasing minimization: repeatedly reflect at a vertex
    where the pairing with the simple root is positive.  A real root walks
    down to a simple root; an imaginary root bottoms out in the fundamental
    cone; anything that leaves the sign-coherent cones on the way is not a
    root.  Raises InconclusiveError rather than guessing if the step budget
    runs out."""
    check_vector(q, alpha)
    if search_bound is None:
        search_bound = sum(abs(x) for x in alpha) + q.n + 10
    if all(x == 0 for x in alpha):
        return RootClass.NOT_A_ROOT
    if all(x <= 0 for x in alpha):
        flipped = classify_vector(q, tuple(-x for x in alpha), search_bound)
        return RootClass.REAL_NEGATIVE if flipped is RootClass.REAL_POSITIVE else RootClass.NOT_A_ROOT
    if any(x < 0 for x in alpha):
        # roots are sign-coherent
        return RootClass.NOT_A_ROOT
    v = alpha
    units = [unit_vector(q.n, i) for i in range(1, q.n + 1)]
    for _ in range(search_bound + 1):
        if sum(v) == 1:
            return RootClass.REAL_POSITIVE
        drop = next(
            (i for i in range(1, q.n + 1) if sym_form(q, units[i - 1], v) > 0),
            None,
        )
        if drop is None:
            return RootClass.IMAGINARY if _support_connected(q, v) else RootClass.NOT_A_ROOT
        v = simple_reflection(q, drop, v)
        if any(x < 0 for x in v):
            return RootClass.NOT_A_ROOT
    raise InconclusiveError("height minimization did not settle within the search bound")
