"""Free-group words, integral group-ring elements and Fox derivatives.

A word is a tuple of nonzero ints: ``k`` stands for the generator ``x_k``
and ``-k`` for its inverse, so ``(1, 2, -1, -2)`` is the commutator
``x_1 x_2 x_1^-1 x_2^-1``.  Words returned by this module are always
freely reduced.
"""

from __future__ import annotations

from typing import Iterable, Mapping, Sequence

from .errors import ResourceError

Word = tuple[int, ...]

DEFAULT_MAX_TERMS = 10**6


def check_distinct(seq: Sequence[int]) -> tuple[int, ...]:
    seq = tuple(seq)
    if len(set(seq)) != len(seq):
        raise ValueError(f"index sequence {list(seq)} has a repeated index")
    return seq


def word_normalize(letters: Iterable[int]) -> Word:
    """Freely reduce a word.

    >>> word_normalize([1, 2, -2, 1])
    (1, 1)
    >>> word_normalize([1, -1])
    ()
    """
    out: list[int] = []
    for a in letters:
        if a == 0:
            raise ValueError("0 is not a generator letter")
        if out and out[-1] == -a:
            out.pop()
        else:
            out.append(a)
    return tuple(out)


def word_multiply(a: Sequence[int], b: Sequence[int]) -> Word:
    # both inputs reduced: cancellation only happens at the seam
    a = word_normalize(a)
    b = word_normalize(b)
    i = 0
    while i < min(len(a), len(b)) and a[len(a) - 1 - i] == -b[i]:
        i += 1
    return a[: len(a) - i] + b[i:]


def word_inverse(w: Sequence[int]) -> Word:
    return tuple(-a for a in reversed(word_normalize(w)))


def word_power(w: Sequence[int], e: int) -> Word:
    base = word_normalize(w) if e >= 0 else word_inverse(w)
    out: Word = ()
    for _ in range(abs(e)):
        out = word_multiply(out, base)
    return out


def parse_word(text: str) -> Word:
    """Read the literal syntax ``"1 2 -1 -2"``."""
    return word_normalize(int(tok) for tok in text.split())


def format_word(w: Sequence[int]) -> str:
    return " ".join(str(a) for a in w)


class GroupRingElement:
    """Finite integral combination of reduced words.

    Instances are treated as immutable; the arithmetic operators return
    new elements.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Sequence[int], int] | None = None):
        acc: dict[Word, int] = {}
        for w, c in (terms or {}).items():
            w = word_normalize(w)
            acc[w] = acc.get(w, 0) + c
        self.terms: dict[Word, int] = {w: c for w, c in acc.items() if c}

    @classmethod
    def _raw(cls, terms: dict[Word, int]) -> "GroupRingElement":
        el = cls.__new__(cls)
        el.terms = terms
        return el

    @classmethod
    def from_word(cls, w: Sequence[int]) -> "GroupRingElement":
        return cls._raw({word_normalize(w): 1})

    @classmethod
    def one(cls) -> "GroupRingElement":
        return cls._raw({(): 1})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GroupRingElement):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __len__(self) -> int:
        return len(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __repr__(self) -> str:
        if not self.terms:
            return "GroupRingElement(0)"
        parts = [f"{c}*[{format_word(w)}]" for w, c in sorted(self.terms.items())]
        return "GroupRingElement(" + " + ".join(parts) + ")"

    def __add__(self, other: "GroupRingElement") -> "GroupRingElement":
        acc = dict(self.terms)
        for w, c in other.terms.items():
            s = acc.get(w, 0) + c
            if s:
                acc[w] = s
            else:
                acc.pop(w, None)
        return GroupRingElement._raw(acc)

    def __neg__(self) -> "GroupRingElement":
        return GroupRingElement._raw({w: -c for w, c in self.terms.items()})

    def __sub__(self, other: "GroupRingElement") -> "GroupRingElement":
        return self + (-other)

    def __mul__(self, other: "GroupRingElement | int") -> "GroupRingElement":
        if isinstance(other, int):
            if other == 0:
                return GroupRingElement()
            return GroupRingElement._raw({w: c * other for w, c in self.terms.items()})
        acc: dict[Word, int] = {}
        for u, cu in self.terms.items():
            for v, cv in other.terms.items():
                w = word_multiply(u, v)
                acc[w] = acc.get(w, 0) + cu * cv
        return GroupRingElement._raw({w: c for w, c in acc.items() if c})

    __rmul__ = __mul__


def fox_derivative(
    i: int, e: GroupRingElement | Sequence[int], max_terms: int = DEFAULT_MAX_TERMS
) -> GroupRingElement:
    """Fox free derivative with respect to ``x_i``.

    Uses d(x_i) = 1 and d(x_i^-1) = -x_i^-1, extended by linearity and
    d(uv) = d(u) + u d(v).
    """
    if i <= 0:
        raise ValueError(f"generator index must be positive, got {i}")
    if not isinstance(e, GroupRingElement):
        e = GroupRingElement.from_word(e)
    acc: dict[Word, int] = {}
    for w, c in e.terms.items():
        for p, a in enumerate(w):
            if a == i:
                key, coeff = w[:p], c
            elif a == -i:
                key, coeff = w[: p + 1], -c
            else:
                continue
            s = acc.get(key, 0) + coeff
            if s:
                acc[key] = s
                if len(acc) > max_terms:
                    raise ResourceError(
                        f"Fox derivative exceeded {max_terms} terms; raise the term guard"
                    )
            else:
                del acc[key]
    return GroupRingElement._raw(acc)


def augment(e: GroupRingElement) -> int:
    """Evaluate at x_1 = ... = x_n = 1."""
    return sum(e.terms.values())


def mu_of_word(
    w: Sequence[int], seq: Sequence[int], max_terms: int = DEFAULT_MAX_TERMS
) -> int:
    """Augmented iterated Fox derivative of ``w`` along ``seq``.

    The last index of ``seq`` is differentiated first, so the result is
    the coefficient of ``X_{seq[0]} ... X_{seq[-1]}`` in the Magnus
    expansion.

    >>> mu_of_word((1, 2, -1, -2), [1, 2])
    1
    >>> mu_of_word((1, 2, -1, -2), [2, 1])
    -1
    """
    seq = check_distinct(seq)
    e = GroupRingElement.from_word(w)
    for i in reversed(seq):
        e = fox_derivative(i, e, max_terms)
        if not e:
            return 0
    return augment(e)
