"""
Coxeter graphs and group elements in ShortLex normal form.

Elements are canonicalized through the braid-move closure of a reduced word:
all reduced words of an element are connected by braid moves, so the
ShortLex-least member of the closure is a normal form. Closures are cached
per graph. This is only meant for small groups and short words.
"""
from __future__ import annotations

import itertools
import math
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .errors import CapExceededError, GraphError, InfiniteGroupError, NotReducedError

INF = math.inf

Word = tuple  # tuple of generator labels


def _parse_order(m) -> float | int:
    if isinstance(m, str):
        if m.strip().lower() in ("inf", "infinity", "oo"):
            return INF
        m = int(m)
    if m == INF:
        return INF
    if isinstance(m, bool) or not isinstance(m, int):
        raise GraphError(f"edge order must be an integer or 'inf', got {m!r}")
    return m


class CoxeterGraph:
    """A Coxeter matrix on an ordered generating set.

    Pairs not listed have order 2. The generator order fixes the ShortLex
    order used for normal forms.
    """

    def __init__(self, generators: Sequence[str], orders: Mapping | Iterable = ()):
        gens = tuple(str(s) for s in generators)
        if len(set(gens)) != len(gens):
            raise GraphError(f"duplicate generator labels in {gens}")
        if not gens:
            raise GraphError("a Coxeter graph needs at least one generator")
        self.generators = gens
        self.index = {s: i for i, s in enumerate(gens)}
        self._m: dict[frozenset, float | int] = {}
        items = orders.items() if isinstance(orders, Mapping) else orders
        for pair, m in items:
            a, b = pair
            for s in (a, b):
                if s not in self.index:
                    raise GraphError(f"unknown generator {s!r} in edge {a}-{b}")
            if a == b:
                raise GraphError(f"edge from {a!r} to itself")
            m = _parse_order(m)
            if m < 2:
                raise GraphError(f"order m({a},{b}) = {m} must be at least 2")
            key = frozenset((a, b))
            if key in self._m and self._m[key] != m:
                raise GraphError(f"conflicting orders for {a}-{b}")
            self._m[key] = m
        # caches
        self._closure: dict[Word, frozenset] = {}
        self._canon: dict[Word, Word] = {}
        self._bruhat: dict[tuple[Word, Word], bool] = {}

    # -- structure

    def m(self, s: str, t: str):
        if s == t:
            return 1
        return self._m.get(frozenset((s, t)), 2)

    def edges(self, min_order=3) -> list[tuple[str, str, float | int]]:
        """Pairs (s, t) with s before t and m_st >= min_order."""
        out = []
        for s, t in itertools.combinations(self.generators, 2):
            m = self.m(s, t)
            if m >= min_order:
                out.append((s, t, m))
        return out

    def neighbors(self, s: str) -> list[str]:
        return [t for t in self.generators if t != s and self.m(s, t) >= 3]

    @property
    def rank(self) -> int:
        return len(self.generators)

    def components(self) -> list[list[str]]:
        seen: set[str] = set()
        comps = []
        for s in self.generators:
            if s in seen:
                continue
            comp, queue = [], [s]
            seen.add(s)
            while queue:
                x = queue.pop()
                comp.append(x)
                for y in self.neighbors(x):
                    if y not in seen:
                        seen.add(y)
                        queue.append(y)
            comps.append(sorted(comp, key=self.index.__getitem__))
        return comps

    @property
    def connected(self) -> bool:
        return len(self.components()) == 1

    @property
    def simply_laced(self) -> bool:
        return all(m in (2, 3) for _, _, m in self.edges(min_order=2) if m != INF)

    @property
    def cycle_count(self) -> int:
        return len(self.edges()) - self.rank + len(self.components())

    def __eq__(self, other):
        return (
            isinstance(other, CoxeterGraph)
            and self.generators == other.generators
            and all(self.m(s, t) == other.m(s, t) for s, t in itertools.combinations(self.generators, 2))
        )

    def __hash__(self):
        return hash((self.generators, tuple(self.m(s, t) for s, t in itertools.combinations(self.generators, 2))))

    def __repr__(self):
        edges = ", ".join(f"{s}-{t}:{m}" for s, t, m in self.edges())
        return f"CoxeterGraph({list(self.generators)}; {edges})"

    # -- serialization

    def to_json(self) -> dict:
        edges = []
        for s, t, m in self.edges(min_order=3):
            edges.append({"a": s, "b": t, "m": "inf" if m == INF else m})
        return {"generators": list(self.generators), "edges": edges}

    @classmethod
    def from_json(cls, data: Mapping) -> CoxeterGraph:
        return validate_graph(data)

    # -- words

    def shortlex_key(self, word: Word):
        return (len(word), tuple(self.index[s] for s in word))

    def identity(self) -> Element:
        return Element(self, ())

    def gen(self, s: str) -> Element:
        return Element(self, (s,))

    def __call__(self, *letters) -> Element:
        """Shorthand: ``g("r", "t")`` or ``g("rt")`` for single-letter labels."""
        if len(letters) == 1 and isinstance(letters[0], str) and letters[0] not in self.index:
            letters = tuple(letters[0])
        elif len(letters) == 1 and not isinstance(letters[0], str):
            letters = tuple(letters[0])
        return normal_form(self, letters)


def validate_graph(raw: Mapping | CoxeterGraph) -> CoxeterGraph:
    """Build a :class:`CoxeterGraph` from its JSON description."""
    if isinstance(raw, CoxeterGraph):
        return raw
    try:
        gens = raw["generators"]
    except (KeyError, TypeError):
        raise GraphError("graph description needs a 'generators' list") from None
    if not isinstance(gens, list):
        raise GraphError("'generators' must be a list")
    orders = []
    for e in raw.get("edges", []):
        try:
            orders.append(((e["a"], e["b"]), e.get("m", 3)))
        except (KeyError, TypeError):
            raise GraphError(f"malformed edge {e!r}") from None
    return CoxeterGraph(gens, orders)


# ---------------------------------------------------------------------------
# standard graphs


def dihedral_graph(m, r="r", t="t") -> CoxeterGraph:
    return CoxeterGraph([r, t], {(r, t): m})


def type_a(n: int) -> CoxeterGraph:
    gens = [f"s{i}" for i in range(1, n + 1)]
    return CoxeterGraph(gens, {(gens[i], gens[i + 1]): 3 for i in range(n - 1)})


def type_d(n: int) -> CoxeterGraph:
    gens = [f"s{i}" for i in range(1, n + 1)]
    orders = {(gens[i], gens[i + 1]): 3 for i in range(n - 2)}
    orders[(gens[n - 3], gens[n - 1])] = 3
    return CoxeterGraph(gens, orders)


def affine_a(n: int) -> CoxeterGraph:
    """The cycle on n + 1 vertices, all edges of order 3."""
    gens = [f"s{i}" for i in range(n + 1)]
    return CoxeterGraph(gens, {(gens[i], gens[(i + 1) % (n + 1)]): 3 for i in range(n + 1)})


# ---------------------------------------------------------------------------
# braid moves and normal forms


def _alternating(a, b, k) -> Word:
    return tuple(a if i % 2 == 0 else b for i in range(k))


def _braid_neighbors(g: CoxeterGraph, w: Word):
    n = len(w)
    for i in range(n - 1):
        a, b = w[i], w[i + 1]
        if a == b:
            continue
        m = g.m(a, b)
        if m == INF or i + m > n:
            continue
        if w[i : i + m] == _alternating(a, b, m):
            yield w[:i] + _alternating(b, a, m) + w[i + m :]


def _raw_closure(g: CoxeterGraph, w: Word) -> frozenset:
    cached = g._closure.get(w)
    if cached is not None:
        return cached
    seen = {w}
    queue = deque([w])
    while queue:
        x = queue.popleft()
        for y in _braid_neighbors(g, x):
            if y not in seen:
                seen.add(y)
                queue.append(y)
    result = frozenset(seen)
    for x in seen:
        g._closure[x] = result
    return result


def _has_square(w: Word) -> bool:
    return any(w[i] == w[i + 1] for i in range(len(w) - 1))


def is_reduced(g: CoxeterGraph, word: Iterable[str]) -> bool:
    w = tuple(word)
    return not any(_has_square(x) for x in _raw_closure(g, w))


def braid_closure(g: CoxeterGraph, word: Iterable[str]) -> frozenset:
    """All reduced words of the element represented by a reduced word."""
    w = tuple(word)
    for s in w:
        if s not in g.index:
            raise GraphError(f"unknown generator {s!r}")
    cl = _raw_closure(g, w)
    if any(_has_square(x) for x in cl):
        raise NotReducedError(f"word {w} is not reduced")
    return cl


def _canonical(g: CoxeterGraph, reduced: Word) -> Word:
    c = g._canon.get(reduced)
    if c is None:
        cl = _raw_closure(g, reduced)
        c = min(cl, key=g.shortlex_key)
        for x in cl:
            g._canon[x] = c
    return c


def _append(g: CoxeterGraph, canon: Word, s: str) -> Word:
    for x in _raw_closure(g, canon):
        if x and x[-1] == s:
            return _canonical(g, x[:-1])
    return _canonical(g, canon + (s,))


def _prepend(g: CoxeterGraph, s: str, canon: Word) -> Word:
    for x in _raw_closure(g, canon):
        if x and x[0] == s:
            return _canonical(g, x[1:])
    return _canonical(g, (s,) + canon)


class Element:
    """A group element, stored as its ShortLex-least reduced word."""

    __slots__ = ("graph", "word")

    def __init__(self, graph: CoxeterGraph, word: Word):
        # callers guarantee `word` is already canonical; use normal_form otherwise
        self.graph = graph
        self.word = tuple(word)

    def __len__(self):
        return len(self.word)

    @property
    def length(self) -> int:
        return len(self.word)

    @property
    def is_identity(self) -> bool:
        return not self.word

    def __eq__(self, other):
        return isinstance(other, Element) and self.word == other.word and self.graph is other.graph

    def __hash__(self):
        return hash(self.word)

    def __lt__(self, other: Element):
        return self.graph.shortlex_key(self.word) < other.graph.shortlex_key(other.word)

    def __mul__(self, other: Element) -> Element:
        return multiply(self, other)

    def left_mul(self, s: str) -> Element:
        return Element(self.graph, _prepend(self.graph, s, self.word))

    def right_mul(self, s: str) -> Element:
        return Element(self.graph, _append(self.graph, self.word, s))

    def inverse(self) -> Element:
        return normal_form(self.graph, reversed(self.word))

    def __str__(self):
        return word_str(self.word)

    def __repr__(self):
        return f"Element({word_str(self.word)})"


def word_str(word: Sequence[str]) -> str:
    """Canonical string key of a word: letters concatenated, 'e' for the identity."""
    return "".join(word) if word else "e"


def normal_form(g: CoxeterGraph, word: Iterable[str]) -> Element:
    """Reduce an arbitrary word and return its element.

    Letters are appended one at a time to a reduced prefix. Appending s either
    cancels against a reduced word of the prefix ending in s (found in the
    braid closure) or yields a longer reduced word.
    """
    canon: Word = ()
    for s in word:
        if s not in g.index:
            raise GraphError(f"unknown generator {s!r}")
        canon = _append(g, canon, s)
    return Element(g, canon)


def multiply(a: Element, b: Element, cap: int | None = None) -> Element:
    if a.graph is not b.graph:
        raise ValueError("elements belong to different graphs")
    if cap is not None and a.length + b.length > cap:
        raise CapExceededError(f"length {a.length} + {b.length} exceeds cap {cap}")
    canon = a.word
    for s in b.word:
        canon = _append(a.graph, canon, s)
    return Element(a.graph, canon)


def descents(w: Element) -> tuple[frozenset, frozenset]:
    """Left and right descent sets."""
    g = w.graph
    left, right = set(), set()
    for x in _raw_closure(g, w.word):
        if x:
            left.add(x[0])
            right.add(x[-1])
    return frozenset(left), frozenset(right)


def bruhat_leq(y: Element, w: Element) -> bool:
    """Bruhat order by descent recursion.

    With s a left descent of w: if sy < y then y <= w iff sy <= sw, otherwise
    y <= w iff y <= sw.
    """
    g = w.graph
    if y.graph is not g:
        raise ValueError("elements belong to different graphs")
    return _bruhat(g, y.word, w.word, g._bruhat)


def _bruhat(g, y: Word, w: Word, cache) -> bool:
    if len(y) > len(w):
        return False
    if not y:
        return True
    if len(y) == len(w):
        return y == w
    key = (y, w)
    res = cache.get(key)
    if res is not None:
        return res
    s = w[0]
    sw = _canonical(g, w[1:])
    ys = _raw_closure(g, y)
    if any(x[0] == s for x in ys):
        res = _bruhat(g, _prepend(g, s, y), sw, cache)
    else:
        res = _bruhat(g, y, sw, cache)
    cache[key] = res
    return res


def subword_leq(y: Element, w: Element) -> bool:
    """Bruhat order by the subword property (exponential; used as a cross-check)."""
    g = w.graph
    target = y.word
    ly = len(target)
    word = w.word
    for positions in itertools.combinations(range(len(word)), ly):
        sub = tuple(word[i] for i in positions)
        if is_reduced(g, sub) and _canonical(g, sub) == target:
            return True
    return False


def unique_reduced_expression(w: Element) -> bool:
    return len(_raw_closure(w.graph, w.word)) == 1


def alternating_word(g: CoxeterGraph, r: str, t: str, k: int) -> Element:
    """The element rtr... with k factors."""
    if r == t:
        raise ValueError("r and t must differ")
    m = g.m(r, t)
    if k < 0 or k > m:
        raise NotReducedError(f"alternating word of length {k} exceeds m = {m}")
    return normal_form(g, _alternating(r, t, k))


def longest_dihedral(g: CoxeterGraph, r: str, t: str) -> Element:
    m = g.m(r, t)
    if m == INF:
        raise ValueError(f"m({r},{t}) is infinite")
    return alternating_word(g, r, t, m)


# ---------------------------------------------------------------------------
# enumeration


DEFAULT_LENGTH_CAP = 12
DEFAULT_SIZE_CAP = 2000


def enumerate_elements(g: CoxeterGraph, cap: int = DEFAULT_LENGTH_CAP) -> list[list[Element]]:
    """Elements grouped by length, by breadth-first search up to length `cap`.

    The result ends early (with fewer than cap + 1 levels) exactly when the
    group is finite and has been exhausted.
    """
    levels = [[g.identity()]]
    seen = {()}
    while len(levels) <= cap:
        nxt = []
        for w in levels[-1]:
            for s in g.generators:
                x = _append(g, w.word, s)
                if len(x) == len(w.word) + 1 and x not in seen:
                    seen.add(x)
                    nxt.append(Element(g, x))
        if not nxt:
            break
        nxt.sort()
        levels.append(nxt)
    return levels


@dataclass
class FiniteCoxeterGroup:
    """An exhaustively enumerated finite Coxeter group with multiplication tables.

    Elements are numbered in ShortLex order, so index 0 is the identity and
    lengths are nondecreasing along the list.
    """

    graph: CoxeterGraph
    elements: list[Element]
    index: dict[Element, int] = field(repr=False)
    lengths: list[int] = field(repr=False)
    lmul: dict[str, list[int]] = field(repr=False)
    rmul: dict[str, list[int]] = field(repr=False)

    @classmethod
    def from_graph(
        cls, g: CoxeterGraph, max_length: int | None = None, max_size: int = DEFAULT_SIZE_CAP
    ) -> FiniteCoxeterGroup:
        cap = max_length if max_length is not None else max_size
        levels = enumerate_elements(g, cap=cap)
        size = sum(len(level) for level in levels)
        if len(levels) > cap or size > max_size:
            raise InfiniteGroupError(
                f"group not exhausted within length {cap} / size {max_size}"
            )
        # confirm exhaustion: the last level has no longer successors
        for w in levels[-1]:
            for s in g.generators:
                if len(_append(g, w.word, s)) > w.length:
                    raise InfiniteGroupError("group not exhausted within the caps")
        elements = [w for level in levels for w in level]
        index = {w: i for i, w in enumerate(elements)}
        lengths = [w.length for w in elements]
        lmul = {s: [index[w.left_mul(s)] for w in elements] for s in g.generators}
        rmul = {s: [index[w.right_mul(s)] for w in elements] for s in g.generators}
        return cls(g, elements, index, lengths, lmul, rmul)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    @property
    def longest(self) -> Element:
        return self.elements[-1]

    def element(self, word) -> Element:
        return normal_form(self.graph, word)

    def idx(self, w) -> int:
        if isinstance(w, int):
            return w
        if not isinstance(w, Element):
            w = normal_form(self.graph, w)
        return self.index[w]

    def multiply_idx(self, i: int, j: int) -> int:
        k = i
        for s in self.elements[j].word:
            k = self.rmul[s][k]
        return k

    def bruhat_ideals(self) -> list[frozenset[int]]:
        """For each w, the set of y <= w (lifting property, by induction on length)."""
        ideals: list[frozenset[int]] = []
        for w in range(len(self.elements)):
            word = self.elements[w].word
            if not word:
                ideals.append(frozenset({0}))
                continue
            s = word[0]
            v = self.lmul[s][w]
            below = ideals[v]
            ideals.append(below | frozenset(self.lmul[s][y] for y in below))
        return ideals
