"""Word bases for tensor and free graded algebras.

Words are tuples of letter indices.  All bases are enumerated in
lexicographic order; every derived basis in the package inherits this
order, which is what makes reductions and pivot complements reproducible.
"""

from __future__ import annotations

from functools import lru_cache


@lru_cache(maxsize=None)
def tensor_words(n: int, k: int) -> tuple:
    """All length-k words over letters 0..n-1, lex order."""
    if k == 0:
        return ((),)
    shorter = tensor_words(n, k - 1)
    return tuple(w + (j,) for w in shorter for j in range(n))


def tensor_index(n: int, word) -> int:
    idx = 0
    for c in word:
        idx = idx * n + c
    return idx


@lru_cache(maxsize=None)
def graded_words(degrees: tuple, total: int) -> tuple:
    """Words over a graded alphabet with the given letter degrees, lex order,
    summing to the given total degree."""
    if total == 0:
        return ((),)
    if total < 0:
        return ()
    out = []
    for j, d in enumerate(degrees):
        if d <= total:
            for w in graded_words(degrees, total - d):
                out.append((j,) + w)
    return tuple(sorted(out))


def word_degree(word, degrees) -> int:
    return sum(degrees[c] for c in word)
