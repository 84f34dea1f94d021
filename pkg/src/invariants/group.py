"""
De stabilisator van symbool ppPNNp: een groep van 60 ordeningen (≅ A5).

Een ordening is een tuple `order` van lengte 6; na herordening staat op
positie i de vector die eerst op positie order[i] stond.
"""
from functools import lru_cache
from typing import Iterable, Sequence
import logging

logger = logging.getLogger(__name__)


Ordering = tuple[int, ...]

IDENTITY: Ordering = (0, 1, 2, 3, 4, 5)

# 5-cyclus (0,1,2,3,5): de vector op positie i gaat naar α(i)
ALPHA_ORDER: Ordering = (5, 0, 1, 2, 4, 3)

# involutie (1,2)(4,5)
BETA_ORDER: Ordering = (0, 2, 1, 3, 5, 4)

GENERATORS = {"alpha": ALPHA_ORDER, "beta": BETA_ORDER}


def compose(p: Sequence[int], q: Sequence[int]) -> Ordering:
    """Eerst p toepassen, dan q: compose(p, q)[i] = p[q[i]]."""
    return tuple(p[q[i]] for i in range(len(q)))


def apply_ordering(items: Sequence, order: Sequence[int]) -> list:
    """Herordende lijst: positie i krijgt items[order[i]]."""
    return [items[i] for i in order]


def word_ordering(word: Iterable[str]) -> Ordering:
    """Ordening van een woord over {"alpha", "beta"}, links eerst toegepast."""
    result = IDENTITY
    for letter in word:
        result = compose(result, GENERATORS[letter])
    return result


def inverse(p: Sequence[int]) -> Ordering:
    inv = [0] * len(p)
    for i, pi in enumerate(p):
        inv[pi] = i
    return tuple(inv)


@lru_cache(maxsize=1)
def stabilizer() -> frozenset[Ordering]:
    """Afsluiting van {α, β} onder samenstelling; bevat precies 60 ordeningen."""
    group = {IDENTITY}
    frontier = [IDENTITY]
    while frontier:
        nxt = []
        for g in frontier:
            for gen in (ALPHA_ORDER, BETA_ORDER):
                h = compose(g, gen)
                if h not in group:
                    group.add(h)
                    nxt.append(h)
        frontier = nxt
    logger.debug(f"Stabilisator gesloten met {len(group)} elementen")
    return frozenset(group)


def is_transitive(group: Iterable[Ordering], n: int = 6) -> bool:
    """Bereikt de groep elke positie vanuit positie 0?"""
    return {g[0] for g in group} == set(range(n))
