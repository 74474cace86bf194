"""Word-level invariants of positive braid closures, independent of linking graphs.

The Alexander polynomial comes from the reduced Burau representation:
``Δ(t) ≐ det(I - ρ(β)) / (1 + t + ... + t^{n-1})``.
"""

from __future__ import annotations

from .braidword import BraidWord, as_word
from .laurent import LaurentPoly
from .linalg import det_polynomial_by_interpolation


class UnusedGenerator(ValueError):
    pass


def braid_permutation(word) -> tuple[int, ...]:
    """Image of each strand position (0-based) after the braid, as a tuple."""
    word = as_word(word)
    perm = list(range(word.strands))
    for i in word.letters:
        perm[i - 1], perm[i] = perm[i], perm[i - 1]
    # perm[p] is the strand now at position p; invert to strand -> position
    inv = [0] * word.strands
    for pos, strand in enumerate(perm):
        inv[strand] = pos
    return tuple(inv)


def component_count(word) -> int:
    perm = braid_permutation(word)
    seen = [False] * len(perm)
    cycles = 0
    for s in range(len(perm)):
        if not seen[s]:
            cycles += 1
            while not seen[s]:
                seen[s] = True
                s = perm[s]
    return cycles


def reduced_burau_at(word: BraidWord, t: int) -> list[list[int]]:
    """Integer matrix of the reduced Burau image, evaluated at ``t``."""
    m = word.strands - 1
    mat = [[1 if i == j else 0 for j in range(m)] for i in range(m)]
    for gen in word.letters:
        k = gen - 1
        # right-multiply by rho(sigma_gen), which is I except row k = (.., t, -t, 1, ..)
        for row in mat:
            row_k = row[k]
            if k > 0:
                row[k - 1] += t * row_k
            if k + 1 < m:
                row[k + 1] += row_k
            row[k] = -t * row_k
    return mat


def alexander_closure(word) -> LaurentPoly:
    """Normalized Alexander polynomial of the closure; 0 for split closures."""
    word = as_word(word)
    n = word.strands
    if n < 2:
        return LaurentPoly.monomial()
    m = n - 1

    def at(t):
        b = reduced_burau_at(word, t)
        return [[(1 if i == j else 0) - b[i][j] for j in range(m)] for i in range(m)]

    det = det_polynomial_by_interpolation(at, max(len(word), m))
    denom = LaurentPoly.from_coeffs([1] * n)
    return det.exact_div(denom).normalized()


def genus_from_word(word) -> tuple[int, int]:
    word = as_word(word)
    if not word.uses_all_generators():
        raise UnusedGenerator("every generator 1..n-1 must appear")
    betti1 = len(word) - word.strands + 1
    mu = component_count(word)
    return betti1, (betti1 - mu + 1) // 2
