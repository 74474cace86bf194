"""Homological invariants of checkerboard open books.

Rows and columns follow a twist order ``v_1, ..., v_n``. The intersection
form ``B`` has ``B[i][j] = 1`` for an edge ``v_i -> v_j``; the twist along
``v_k`` acts by the identity with row ``k`` replaced off the diagonal by
``-B[k]``; the monodromy is ``S = S^n ... S^1``; and when ``S - 1`` is
invertible the Seifert matrix is ``A = B (S - 1)^{-1}``.

Signature convention: ``σ = -sig(A + A^T)``, so the positive trefoil has
``σ = +2`` (its ``A + A^T`` is negative definite).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from . import linalg
from .coxeter import twist_order
from .laurent import LaurentPoly
from .openbook import surface_summary
from .planegraph import CheckerboardGraph, GraphError

Matrix = list[list[int]]


class SingularMonodromy(GraphError):
    pass


def intersection_matrix(g: CheckerboardGraph, enumeration: Sequence[int]) -> Matrix:
    index = {v: i for i, v in enumerate(enumeration)}
    n = len(enumeration)
    b = linalg.zeros(n)
    for _, t, h in g.edges:
        b[index[t]][index[h]] = 1
        b[index[h]][index[t]] = -1
    return b


def twist_matrix(b: Matrix, k: int) -> Matrix:
    """Homological Dehn twist along the ``k``-th basis curve (``k`` is 1-based)."""
    n = len(b)
    if not 1 <= k <= n:
        raise ValueError(f"twist index {k} outside 1..{n}")
    s = linalg.identity(n)
    r = k - 1
    for j in range(n):
        if j != r:
            s[r][j] = -b[r][j]
    return s


def monodromy_from_form(b: Matrix) -> Matrix:
    n = len(b)
    s = linalg.identity(n)
    # S = S^n ... S^1: left-multiplying by S^k only rewrites row k
    for k in range(n):
        row = [s[k][c] - sum(b[k][j] * s[j][c] for j in range(n) if j != k) for c in range(n)]
        s[k] = row
    return s


def monodromy_matrix(g: CheckerboardGraph, enumeration: Sequence[int] | None = None) -> Matrix:
    if enumeration is None:
        enumeration = twist_order(g)
    return monodromy_from_form(intersection_matrix(g, enumeration))


def seifert_from_form(b: Matrix, s: Matrix | None = None) -> Matrix:
    if s is None:
        s = monodromy_from_form(b)
    n = len(b)
    m = linalg.sub(s, linalg.identity(n))
    try:
        d, adj = linalg.scaled_inverse(m)
    except ZeroDivisionError:
        raise SingularMonodromy("S - 1 is singular; the closure has more than one component") from None
    num = linalg.matmul(b, adj)
    out = []
    for row in num:
        if any(x % d for x in row):
            raise ArithmeticError("Seifert matrix is not integral")
        out.append([x // d for x in row])
    return out


def seifert_matrix(g: CheckerboardGraph, enumeration: Sequence[int] | None = None) -> Matrix:
    if enumeration is None:
        enumeration = twist_order(g)
    return seifert_from_form(intersection_matrix(g, enumeration))


def triangular_seifert(b: Matrix) -> Matrix:
    """Seifert form of the twist basis in twist order: ``-1`` on the diagonal, ``-B`` below, ``0`` above.

    Agrees with ``B (S - 1)^{-1}`` whenever that is defined and stays available for links.
    """
    n = len(b)
    return [[-1 if i == j else (-b[i][j] if i > j else 0) for j in range(n)] for i in range(n)]


def symmetrized_seifert(g: CheckerboardGraph, enumeration: Sequence[int] | None = None) -> Matrix:
    if enumeration is None:
        enumeration = twist_order(g)
    a = triangular_seifert(intersection_matrix(g, enumeration))
    return linalg.add(a, linalg.transpose(a))


def alexander_from_monodromy(s: Matrix) -> LaurentPoly:
    return linalg.charpoly(s).normalized()


def alexander(g: CheckerboardGraph, enumeration: Sequence[int] | None = None) -> LaurentPoly:
    return alexander_from_monodromy(monodromy_matrix(g, enumeration))


def signature_of_seifert(a: Matrix) -> int:
    return -linalg.signature(linalg.add(a, linalg.transpose(a)))


def signature(g: CheckerboardGraph, enumeration: Sequence[int] | None = None) -> int:
    return signature_of_seifert(seifert_matrix(g, enumeration))


@dataclass(frozen=True)
class Fingerprint:
    alexander: LaurentPoly
    signature: int | None
    determinant: int
    genus: int
    components: int
    betti1: int

    def key(self) -> tuple:
        return (self.alexander.coeffs(), self.signature, self.determinant, self.genus, self.components, self.betti1)

    def to_json(self) -> dict:
        return {
            "alexander": self.alexander.to_json(),
            "signature": self.signature,
            "determinant": self.determinant,
            "genus": self.genus,
            "components": self.components,
            "betti1": self.betti1,
        }


def fingerprint(g: CheckerboardGraph) -> Fingerprint:
    order = twist_order(g)
    b = intersection_matrix(g, order)
    s = monodromy_from_form(b)
    delta = alexander_from_monodromy(s)
    try:
        sig = signature_of_seifert(seifert_from_form(b, s))
    except SingularMonodromy:
        sig = None
    summary = surface_summary(g)
    mu = summary.boundary_components
    betti1 = g.n_vertices()
    return Fingerprint(delta, sig, abs(delta(-1)), (betti1 - mu + 1) // 2, mu, betti1)


def components_from_monodromy(s: Matrix) -> int:
    return 1 + linalg.nullity(linalg.sub(s, linalg.identity(len(s))))
