"""Arrows of the simplex category.

An ordinal ``[n]`` is the linearly ordered set ``{0, 1, ..., n}`` (so it has
n+1 elements; all indices here are 0-based).  A :class:`MonotoneMap` is a
weakly increasing function between two ordinals, stored as its explicit value
sequence.  Every such map factors uniquely as a surjection followed by an
injection, and the surjections/injections are generated by the elementary
collapses (``codegeneracy``) and omissions (``coface``).  Keeping maps as
value sequences makes equality canonical; generator words are recovered on
demand through :func:`epi_mono_factor`.
"""

from dataclasses import dataclass
from itertools import combinations_with_replacement


@dataclass(frozen=True)
class MonotoneMap:
    """A weakly increasing map ``[domain] -> [codomain]``.

    ``values[i]`` is the image of ``i``; the tuple has ``domain + 1``
    entries, each in ``0..codomain``.
    """

    domain: int
    codomain: int
    values: tuple[int, ...]

    def __post_init__(self):
        if self.domain < 0 or self.codomain < 0:
            raise ValueError("ordinals must be nonnegative")
        if len(self.values) != self.domain + 1:
            raise ValueError(
                f"value sequence has {len(self.values)} entries, "
                f"expected {self.domain + 1}"
            )
        for a, b in zip(self.values, self.values[1:]):
            if a > b:
                raise ValueError(f"values {self.values} not weakly increasing")
        if self.values and not (0 <= self.values[0] and self.values[-1] <= self.codomain):
            raise ValueError(f"values {self.values} leave [0, {self.codomain}]")

    def __call__(self, i: int) -> int:
        return self.values[i]

    @property
    def is_identity(self) -> bool:
        return self.domain == self.codomain and self.values == tuple(range(self.domain + 1))

    @property
    def is_injective(self) -> bool:
        return all(a < b for a, b in zip(self.values, self.values[1:]))

    @property
    def is_surjective(self) -> bool:
        return set(self.values) == set(range(self.codomain + 1))

    def __repr__(self):
        return f"MonotoneMap([{self.domain}]->[{self.codomain}], {list(self.values)})"


def identity(n: int) -> MonotoneMap:
    """The identity map on ``[n]``."""
    return MonotoneMap(n, n, tuple(range(n + 1)))


def coface(i: int, n: int) -> MonotoneMap:
    """The injection ``[n-1] -> [n]`` whose image omits ``i``.

    Requires ``n >= 1`` and ``0 <= i <= n``.
    """
    if n < 1:
        raise ValueError(f"coface needs n >= 1, got n={n}")
    if not 0 <= i <= n:
        raise ValueError(f"coface index {i} out of range for [{n}]")
    return MonotoneMap(n - 1, n, tuple(v for v in range(n + 1) if v != i))


def codegeneracy(i: int, n: int) -> MonotoneMap:
    """The surjection ``[n+1] -> [n]`` collapsing ``i`` and ``i+1`` to ``i``.

    Requires ``0 <= i <= n``.
    """
    if not 0 <= i <= n:
        raise ValueError(f"codegeneracy index {i} out of range for [{n}]")
    values = list(range(i + 1)) + [i] + list(range(i + 1, n + 1))
    return MonotoneMap(n + 1, n, tuple(values))


def compose(f: MonotoneMap, g: MonotoneMap) -> MonotoneMap:
    """The composite ``f . g`` (apply ``g`` first)."""
    if g.codomain != f.domain:
        raise ValueError(
            f"cannot compose: g lands in [{g.codomain}] but f starts at [{f.domain}]"
        )
    return MonotoneMap(g.domain, f.codomain, tuple(f.values[v] for v in g.values))


def epi_mono_factor(f: MonotoneMap) -> tuple[MonotoneMap, MonotoneMap]:
    """Factor ``f`` as ``mono . epi`` with epi surjective and mono injective.

    The image of ``f`` determines both pieces, so the factorization is
    unique and this function is deterministic.  Returns ``(epi, mono)``.
    """
    image = sorted(set(f.values))
    rank = {v: r for r, v in enumerate(image)}
    k = len(image) - 1 if image else -1
    if k < 0:
        # f.domain >= 0 always gives a nonempty value sequence
        raise ValueError("empty value sequence")
    epi = MonotoneMap(f.domain, k, tuple(rank[v] for v in f.values))
    mono = MonotoneMap(k, f.codomain, tuple(image))
    return epi, mono


def monotone_maps(n: int, m: int):
    """All monotone maps ``[n] -> [m]`` in lexicographic order of values."""
    for values in combinations_with_replacement(range(m + 1), n + 1):
        yield MonotoneMap(n, m, values)


def surjections(n: int, m: int):
    """All monotone surjections ``[n] -> [m]``, lexicographically."""
    for f in monotone_maps(n, m):
        if f.is_surjective:
            yield f


def injections(n: int, m: int):
    """All monotone injections ``[n] -> [m]``, lexicographically."""
    for values in combinations_with_replacement(range(m + 1), n + 1):
        if all(a < b for a, b in zip(values, values[1:])):
            yield MonotoneMap(n, m, values)
