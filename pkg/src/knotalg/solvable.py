"""Free groups and their free solvable quotients ``F / F^(n+1)``.

Membership in the derived series is decided with the iterated Magnus
embedding: ``F / F^(n+1)`` embeds in the wreath product of ``Z^k`` with
``F / F^(n)``, so an element of level ``n`` is a pair
``(cocycle, base)`` where ``base`` lives at level ``n - 1`` and
``cocycle`` is a finitely supported map from level ``n - 1`` into
``Z^k``.  Level 0 is the abelianization ``Z^k``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable

from .errors import ParseError, RankMismatch, VerificationFailed

__all__ = [
    "FreeWord",
    "TowerElement",
    "tower_image",
    "in_derived",
    "derived_depth",
    "derived_witness",
    "parse_word",
]

LETTERS = "abcdefghijklmnopqrstuvwxyz"


@dataclass(frozen=True)
class FreeWord:
    """Freely reduced word in the free group of rank ``rank``.

    ``letters`` holds ``(generator, exponent)`` pairs with generators
    numbered from 1 and exponents ``±1``.
    """

    rank: int
    letters: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        if self.rank < 1:
            raise ValueError("rank must be positive")
        stack: list[tuple[int, int]] = []
        for g, e in self.letters:
            if not 1 <= g <= self.rank or e not in (1, -1):
                raise ValueError(f"bad letter {(g, e)} for rank {self.rank}")
            if stack and stack[-1] == (g, -e):
                stack.pop()
            else:
                stack.append((g, e))
        object.__setattr__(self, "letters", tuple(stack))

    @classmethod
    def identity(cls, rank: int) -> "FreeWord":
        return cls(rank)

    @classmethod
    def gen(cls, rank: int, i: int, e: int = 1) -> "FreeWord":
        return cls(rank, ((i, 1 if e > 0 else -1),) * abs(e))

    def __len__(self):
        return len(self.letters)

    def is_identity(self) -> bool:
        return not self.letters

    def _check(self, other: "FreeWord"):
        if self.rank != other.rank:
            raise RankMismatch(f"rank {self.rank} vs {other.rank}")

    def __mul__(self, other: "FreeWord") -> "FreeWord":
        self._check(other)
        return FreeWord(self.rank, self.letters + other.letters)

    def inverse(self) -> "FreeWord":
        return FreeWord(self.rank, tuple((g, -e) for g, e in reversed(self.letters)))

    def __pow__(self, n: int) -> "FreeWord":
        base = self if n >= 0 else self.inverse()
        return FreeWord(self.rank, base.letters * abs(n))

    def commutator(self, other: "FreeWord") -> "FreeWord":
        """``self^-1 other^-1 self other``."""
        self._check(other)
        return self.inverse() * other.inverse() * self * other

    def conj(self, g: "FreeWord") -> "FreeWord":
        """``g^-1 self g``."""
        self._check(g)
        return g.inverse() * self * g

    def exponent_sums(self) -> tuple[int, ...]:
        v = [0] * self.rank
        for g, e in self.letters:
            v[g - 1] += e
        return tuple(v)

    def __str__(self):
        if not self.letters:
            return "1"
        return " ".join(LETTERS[g - 1] if e > 0 else LETTERS[g - 1].upper() for g, e in self.letters)

    @classmethod
    def parse(cls, text: str, rank: int | None = None) -> "FreeWord":
        return parse_word(text, rank)


def commutator(w: FreeWord, v: FreeWord) -> FreeWord:
    return w.commutator(v)


_TOKEN = re.compile(r"\s*(?:(?P<letter>[A-Za-z])|(?P<sym>[\[\](),^])|(?P<int>-?\d+)|(?P<one>1(?![0-9])))")


def parse_word(text: str, rank: int | None = None) -> FreeWord:
    """Parse ``"a b A B"`` (uppercase = inverse), ``"[a,b]"``, ``"a^2"`` and ``"(a b)^-1"``.

    ``rank`` defaults to the largest generator used (at least 2).
    """
    tokens: list[tuple[str, str, int]] = []
    pos = 0
    s = text.strip()
    while pos < len(s):
        m = _TOKEN.match(s, pos)
        if not m or m.end() == pos:
            if s[pos:].strip() == "":
                break
            raise ParseError(f"unexpected character {s[pos]!r} in word", line=1, column=pos + 1)
        kind = m.lastgroup
        tokens.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    idx = 0
    letters_seen: list[int] = []

    def peek():
        return tokens[idx] if idx < len(tokens) else (None, None, len(s))

    def expect(sym):
        nonlocal idx
        kind, val, col = peek()
        if val != sym:
            raise ParseError(f"expected {sym!r}", line=1, column=col + 1)
        idx += 1

    # parse into a nested tree first, rank is only known at the end
    def word():
        nonlocal idx
        items = []
        while True:
            kind, val, col = peek()
            if kind == "letter" or val in ("[", "("):
                items.append(factor())
            elif kind == "int" and val == "1" and not items:
                idx += 1
            else:
                return ("seq", items)

    def factor():
        nonlocal idx
        kind, val, col = peek()
        if kind == "letter":
            idx += 1
            g = LETTERS.index(val.lower()) + 1
            letters_seen.append(g)
            node = ("gen", g, -1 if val.isupper() else 1)
        elif val == "[":
            idx += 1
            left = word()
            expect(",")
            right = word()
            expect("]")
            node = ("comm", left, right)
        else:
            idx += 1
            node = word()
            expect(")")
        if peek()[1] == "^":
            idx += 1
            kind, val, col = peek()
            if kind not in ("int", "one"):
                raise ParseError("expected integer exponent", line=1, column=col + 1)
            idx += 1
            node = ("pow", node, int(val))
        return node

    tree = word()
    if idx != len(tokens):
        raise ParseError(f"unexpected token {tokens[idx][1]!r}", line=1, column=tokens[idx][2] + 1)
    k = rank if rank is not None else max(letters_seen + [2])
    if letters_seen and max(letters_seen) > k:
        raise RankMismatch(f"word uses generator {max(letters_seen)} beyond rank {k}")

    def build(node) -> FreeWord:
        tag = node[0]
        if tag == "gen":
            return FreeWord(k, ((node[1], node[2]),))
        if tag == "seq":
            out = FreeWord(k)
            for item in node[1]:
                out = out * build(item)
            return out
        if tag == "comm":
            return build(node[1]).commutator(build(node[2]))
        return build(node[1]) ** node[2]

    return build(tree)


# ------------------------------------------------------------------ tower
class TowerElement:
    """Element of ``F_k / F_k^(level+1)`` in the iterated wreath-product model.

    Level 0 stores an exponent vector; higher levels store ``cocycle``
    (dict from level-``(level-1)`` elements to nonzero vectors) and ``base``.
    Multiplication is ``(f1, q1)(f2, q2) = (f1 + q1.f2, q1 q2)`` with
    ``(q.f)(x) = f(q^-1 x)``.
    """

    __slots__ = ("rank", "level", "vec", "cocycle", "base", "_hash")

    def __init__(self, rank: int, level: int, vec=None, cocycle=None, base=None):
        self.rank = rank
        self.level = level
        self.vec = vec
        self.cocycle = cocycle
        self.base = base
        self._hash = None

    @classmethod
    def identity(cls, rank: int, level: int) -> "TowerElement":
        if level == 0:
            return cls(rank, 0, vec=(0,) * rank)
        return cls(rank, level, cocycle={}, base=cls.identity(rank, level - 1))

    @classmethod
    def generator(cls, rank: int, i: int, level: int) -> "TowerElement":
        """Image of ``x_i`` (1-based)."""
        e = tuple(int(j == i - 1) for j in range(rank))
        if level == 0:
            return cls(rank, 0, vec=e)
        return cls(
            rank,
            level,
            cocycle={cls.identity(rank, level - 1): e},
            base=cls.generator(rank, i, level - 1),
        )

    def is_identity(self) -> bool:
        if self.level == 0:
            return not any(self.vec)
        return not self.cocycle and self.base.is_identity()

    def __mul__(self, other: "TowerElement") -> "TowerElement":
        if self.level != other.level or self.rank != other.rank:
            raise RankMismatch("tower elements of different rank or level")
        if self.level == 0:
            return TowerElement(self.rank, 0, vec=tuple(a + b for a, b in zip(self.vec, other.vec)))
        f = dict(self.cocycle)
        for key, v in other.cocycle.items():
            _acc(f, self.base * key, v, 1)
        return TowerElement(self.rank, self.level, cocycle=f, base=self.base * other.base)

    def inverse(self) -> "TowerElement":
        if self.level == 0:
            return TowerElement(self.rank, 0, vec=tuple(-a for a in self.vec))
        qinv = self.base.inverse()
        f: dict = {}
        for key, v in self.cocycle.items():
            _acc(f, qinv * key, v, -1)
        return TowerElement(self.rank, self.level, cocycle=f, base=qinv)

    def _key(self):
        if self.level == 0:
            return self.vec
        return (frozenset(self.cocycle.items()), self.base)

    def __eq__(self, other):
        if not isinstance(other, TowerElement):
            return NotImplemented
        if self.level != other.level or self.rank != other.rank:
            return False
        if self.level == 0:
            return self.vec == other.vec
        return self.base == other.base and self.cocycle == other.cocycle

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.level, self._key()))
        return self._hash

    def support_size(self) -> int:
        if self.level == 0:
            return 0
        return len(self.cocycle)

    def serialize(self):
        """Canonical nested-list form (sorted) for JSON output."""
        if self.level == 0:
            return list(self.vec)
        items = sorted(([k.serialize(), list(v)] for k, v in self.cocycle.items()), key=repr)
        return {"cocycle": items, "base": self.base.serialize()}

    def __repr__(self):
        return f"TowerElement(level={self.level}, {self.serialize()!r})"


def _acc(f: dict, key, v: tuple, sign: int):
    cur = f.get(key)
    new = tuple(sign * b for b in v) if cur is None else tuple(a + sign * b for a, b in zip(cur, v))
    if any(new):
        f[key] = new
    else:
        f.pop(key, None)


def _prefix_images(w: FreeWord, level: int) -> list[TowerElement]:
    """Images at ``level`` of every prefix of ``w`` (``len(w) + 1`` elements)."""
    k = w.rank
    if level == 0:
        cur = [0] * k
        out = [TowerElement(k, 0, vec=tuple(cur))]
        for g, e in w.letters:
            cur[g - 1] += e
            out.append(TowerElement(k, 0, vec=tuple(cur)))
        return out
    below = _prefix_images(w, level - 1)
    f: dict = {}
    out = [TowerElement(k, level, cocycle={}, base=below[0])]
    for p, (g, e) in enumerate(w.letters):
        unit = tuple(int(j == g - 1) for j in range(k))
        # x_g adds e_g at the current prefix; x_g^-1 subtracts it at the next one
        _acc(f, below[p] if e > 0 else below[p + 1], unit, e)
        out.append(TowerElement(k, level, cocycle=dict(f), base=below[p + 1]))
    return out


def tower_image(w: FreeWord, level: int) -> TowerElement:
    """Image of ``w`` in ``F / F^(level+1)``."""
    if level < 0:
        raise ValueError("level must be >= 0")
    return _prefix_images(w, level)[-1]


def in_derived(w: FreeWord, n: int) -> bool:
    """Exact membership ``w in F^(n)``."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return True
    return tower_image(w, n - 1).is_identity()


def derived_depth(w: FreeWord, cap: int) -> int:
    """Largest ``n <= cap`` with ``w in F^(n)``."""
    n = 0
    while n < cap and in_derived(w, n + 1):
        n += 1
    return n


def _conjugators(k: int) -> Iterable[FreeWord]:
    a, b = FreeWord.gen(k, 1), FreeWord.gen(k, 2)
    yield b
    yield a
    yield b * b
    yield a * b
    yield b.inverse()
    yield a * b * b


def derived_witness(k: int, n: int) -> FreeWord:
    """A word in ``F_k^(n)`` but not in ``F_k^(n+1)``.

    ``w_0 = a``, ``w_1 = [a, b]`` and ``w_(m+1) = [w_m, g^-1 w_m g]``
    for the first conjugator ``g`` that survives verification.
    """
    if k < 2:
        raise ValueError("need rank >= 2")
    if n < 0:
        raise ValueError("n must be >= 0")
    a, b = FreeWord.gen(k, 1), FreeWord.gen(k, 2)
    w = a
    if n >= 1:
        w = a.commutator(b)
    for m in range(1, n):
        for g in _conjugators(k):
            cand = w.commutator(w.conj(g))
            if not in_derived(cand, m + 2):
                w = cand
                break
        else:
            raise VerificationFailed(f"no surviving conjugator at level {m + 1}")
    if not (in_derived(w, n) and not in_derived(w, n + 1)):
        raise VerificationFailed(f"witness {w} failed verification at level {n}")
    return w
