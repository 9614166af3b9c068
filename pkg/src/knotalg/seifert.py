"""Seifert matrices, S-equivalence moves and the named-knot catalog."""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from typing import Sequence

from .errors import InvalidSeifertMatrix, NotUnimodular, ParseError, SizeMismatch, UnknownName
from .linalg import int_det, matmul, transpose

__all__ = [
    "SeifertMatrix",
    "EnlargementData",
    "CATALOG",
    "catalog",
    "congruence",
    "column_enlarge",
    "row_enlarge",
    "mirror",
    "reverse",
    "inverse",
    "block_sum",
    "random_unimodular",
    "random_s_equivalent",
    "random_seifert_matrix",
    "torus_2_knot",
]


class SeifertMatrix:
    """Square integer matrix ``V`` of even size with ``det(V - V^T) = 1``."""

    __slots__ = ("rows",)

    def __init__(self, rows: Sequence[Sequence[int]] = ()):
        rows = tuple(tuple(row) for row in rows)
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise InvalidSeifertMatrix("Seifert matrix must be square")
        for r in rows:
            for x in r:
                if isinstance(x, bool) or not isinstance(x, int):
                    raise InvalidSeifertMatrix(f"entries must be integers, got {x!r}")
        if n % 2:
            raise InvalidSeifertMatrix(f"Seifert matrix must have even size, got {n}")
        skew = [[rows[i][j] - rows[j][i] for j in range(n)] for i in range(n)]
        d = int_det(skew)
        if d != 1:
            raise InvalidSeifertMatrix(f"det(V - V^T) = {d}, expected 1")
        self.rows = rows

    @property
    def size(self) -> int:
        return len(self.rows)

    @property
    def genus(self) -> int:
        return len(self.rows) // 2

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.rows]

    def transpose(self) -> list[list[int]]:
        return transpose(self.rows)

    def __eq__(self, other):
        if not isinstance(other, SeifertMatrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"SeifertMatrix({self.tolist()!r})"

    def to_json(self) -> dict:
        return {"size": self.size, "rows": self.tolist()}

    @classmethod
    def from_json(cls, data) -> "SeifertMatrix":
        if isinstance(data, str):
            try:
                data = json.loads(data)
            except json.JSONDecodeError as exc:
                raise ParseError(f"invalid JSON: {exc.msg}", exc.lineno, exc.colno) from exc
        if isinstance(data, list):
            data = {"size": len(data), "rows": data}
        if not isinstance(data, dict) or "rows" not in data:
            raise ParseError("matrix JSON needs a 'rows' field")
        rows = data["rows"]
        if "size" in data and data["size"] != len(rows):
            raise InvalidSeifertMatrix(f"declared size {data['size']} but {len(rows)} rows given")
        return cls(rows)


@dataclass(frozen=True)
class EnlargementData:
    u: tuple[int, ...]
    v: tuple[int, ...]
    x: int = 0

    def __post_init__(self):
        object.__setattr__(self, "u", tuple(self.u))
        object.__setattr__(self, "v", tuple(self.v))
        if len(self.u) != len(self.v):
            raise SizeMismatch("enlargement vectors u and v differ in length")


# ------------------------------------------------------------------- moves
def congruence(V: SeifertMatrix, P: Sequence[Sequence[int]]) -> SeifertMatrix:
    """Return ``P^T V P`` for a unimodular integer matrix ``P``."""
    n = V.size
    if len(P) != n or any(len(r) != n for r in P):
        raise SizeMismatch(f"P must be {n}x{n}")
    d = int_det(P)
    if d not in (1, -1):
        raise NotUnimodular(f"det P = {d}")
    if n == 0:
        return V
    return SeifertMatrix(matmul(matmul(transpose(P), V.rows), P))


def column_enlarge(V: SeifertMatrix, d: EnlargementData) -> SeifertMatrix:
    """The block matrix ``[[V, u^T, 0], [v, x, 1], [0, 0, 0]]``."""
    n = V.size
    if len(d.u) != n:
        raise SizeMismatch(f"enlargement vectors must have length {n}")
    rows = [list(V.rows[i]) + [d.u[i], 0] for i in range(n)]
    rows.append(list(d.v) + [d.x, 1])
    rows.append([0] * (n + 2))
    return SeifertMatrix(rows)


def row_enlarge(V: SeifertMatrix, d: EnlargementData) -> SeifertMatrix:
    """Transposed move ``[[V, u^T, 0], [v, x, 0], [0, 1, 0]]``."""
    n = V.size
    if len(d.u) != n:
        raise SizeMismatch(f"enlargement vectors must have length {n}")
    rows = [list(V.rows[i]) + [d.u[i], 0] for i in range(n)]
    rows.append(list(d.v) + [d.x, 0])
    rows.append([0] * n + [1, 0])
    return SeifertMatrix(rows)


def mirror(V: SeifertMatrix) -> SeifertMatrix:
    return SeifertMatrix([[-x for x in row] for row in V.transpose()])


def reverse(V: SeifertMatrix) -> SeifertMatrix:
    return SeifertMatrix(V.transpose())


def inverse(V: SeifertMatrix) -> SeifertMatrix:
    """Concordance inverse ``-K``, i.e. ``mirror(reverse(V)) = -V``."""
    return SeifertMatrix([[-x for x in row] for row in V.rows])


def block_sum(V: SeifertMatrix, W: SeifertMatrix) -> SeifertMatrix:
    n, m = V.size, W.size
    rows = [list(r) + [0] * m for r in V.rows]
    rows += [[0] * n + list(r) for r in W.rows]
    return SeifertMatrix(rows)


# ------------------------------------------------------------------ random
def random_unimodular(n: int, rng: random.Random, steps: int | None = None) -> list[list[int]]:
    """Product of elementary matrices ``I + c E_ij`` with ``c`` in [-2, 2], and random sign flips."""
    p = [[int(i == j) for j in range(n)] for i in range(n)]
    if n == 0:
        return p
    steps = n + 1 if steps is None else steps
    for _ in range(steps):
        if n > 1 and rng.random() < 0.85:
            i, j = rng.sample(range(n), 2)
            c = rng.choice((-2, -1, 1, 2))
            # column op: col_j += c * col_i
            for r in range(n):
                p[r][j] += c * p[r][i]
        else:
            i = rng.randrange(n)
            for r in range(n):
                p[r][i] = -p[r][i]
    return p


def random_s_equivalent(V: SeifertMatrix, moves: int, seed: int) -> SeifertMatrix:
    """Apply a seeded random sequence of congruences and enlargements."""
    if moves < 0:
        raise ValueError("moves must be non-negative")
    rng = random.Random(seed)
    W = V
    for _ in range(moves):
        kind = rng.random()
        n = W.size
        if kind < 0.5 and n > 0:
            W = congruence(W, random_unimodular(n, rng))
        else:
            d = EnlargementData(
                tuple(rng.randint(-2, 2) for _ in range(n)),
                tuple(rng.randint(-2, 2) for _ in range(n)),
                rng.randint(-2, 2),
            )
            W = column_enlarge(W, d) if kind < 0.8 else row_enlarge(W, d)
    return W


def random_seifert_matrix(genus: int, rng: random.Random, bound: int = 2) -> SeifertMatrix:
    """Random ``S + E`` conjugated by a random unimodular matrix.

    ``S`` is symmetric with entries in [-bound, bound] and ``E`` is the
    block sum of ``[[0, 1], [0, 0]]``, so ``V - V^T`` is the standard
    symplectic form.
    """
    n = 2 * genus
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            rows[i][j] = rows[j][i] = rng.randint(-bound, bound)
    for b in range(genus):
        rows[2 * b][2 * b + 1] += 1
    return congruence(SeifertMatrix(rows), random_unimodular(n, rng))


# ----------------------------------------------------------------- catalog
def torus_2_knot(crossings: int, left: bool = False) -> SeifertMatrix:
    """Seifert matrix of the (2, crossings) torus knot on its standard genus-(crossings-1)/2 surface."""
    if crossings < 1 or crossings % 2 == 0:
        raise ValueError("crossings must be odd and positive")
    n = crossings - 1
    right = [[-1 if i == j else (1 if j == i + 1 else 0) for j in range(n)] for i in range(n)]
    V = SeifertMatrix(right)
    return inverse(V) if left else V


def _build_catalog() -> dict[str, SeifertMatrix]:
    lt = SeifertMatrix([[1, -1], [0, 1]])
    rt = inverse(lt)
    fig8 = SeifertMatrix([[-1, 1], [0, 1]])
    return {
        "unknot": SeifertMatrix(),
        "left_trefoil": lt,
        "right_trefoil": rt,
        "figure_eight": fig8,
        "granny": block_sum(lt, lt),
        "square": block_sum(lt, rt),
        "left_cinquefoil": torus_2_knot(5, left=True),
        "right_cinquefoil": torus_2_knot(5),
        "knot_5_2": SeifertMatrix([[-1, 1], [0, -2]]),
        "stevedore": SeifertMatrix([[-1, 1], [0, 2]]),
        "left_torus_2_7": torus_2_knot(7, left=True),
        "trefoil_figure_eight": block_sum(lt, fig8),
    }


CATALOG: dict[str, SeifertMatrix] = _build_catalog()

# knots in the catalog known to be fibered (monic Alexander polynomial and
# a fibered realization: torus knots, figure-eight, and their sums)
FIBERED = frozenset(
    {
        "left_trefoil",
        "right_trefoil",
        "figure_eight",
        "granny",
        "square",
        "left_cinquefoil",
        "right_cinquefoil",
        "left_torus_2_7",
        "trefoil_figure_eight",
    }
)


def catalog(name: str) -> SeifertMatrix:
    try:
        return CATALOG[name]
    except KeyError:
        raise UnknownName(f"unknown knot {name!r}; known: {', '.join(sorted(CATALOG))}") from None
