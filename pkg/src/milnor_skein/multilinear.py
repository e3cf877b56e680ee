"""Integer series in noncommuting X_i modulo monomials with a repeated variable.

Keys are tuples of generator indices (component labels) with pairwise
distinct entries; the empty tuple holds the constant term.  Because every
monomial of degree above the number of variables vanishes, elements are
stored exactly as finite coefficient tables.

Several operations take an optional ``max_degree``: dropping all
monomials longer than that is a ring homomorphism, so truncated
computations agree with the truncation of the exact ones.
"""

from __future__ import annotations

from typing import Iterable, Mapping, Sequence

from .errors import NonUnitError
from .group_words import check_distinct

Monomial = tuple[int, ...]


def _mask(key: Monomial) -> int:
    m = 0
    for i in key:
        m |= 1 << i
    return m


class Series:
    """An element of the multilinear quotient ring.  Immutable by convention."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping[Sequence[int], int] | None = None):
        acc: dict[Monomial, int] = {}
        for key, c in (coeffs or {}).items():
            key = tuple(key)
            if len(set(key)) != len(key):
                continue
            acc[key] = acc.get(key, 0) + c
        self.coeffs: dict[Monomial, int] = {k: c for k, c in acc.items() if c}

    @classmethod
    def _raw(cls, coeffs: dict[Monomial, int]) -> "Series":
        s = cls.__new__(cls)
        s.coeffs = coeffs
        return s

    @classmethod
    def constant(cls, c: int) -> "Series":
        return cls._raw({(): c} if c else {})

    @classmethod
    def generator(cls, i: int) -> "Series":
        """``1 + X_i``, the image of ``x_i``."""
        return cls._raw({(): 1, (i,): 1})

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = Series.constant(other)
        if not isinstance(other, Series):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(frozenset(self.coeffs.items()))

    def __repr__(self) -> str:
        return f"Series({format_series(self)!r})"

    def __str__(self) -> str:
        return format_series(self)

    def __add__(self, other: "Series") -> "Series":
        return series_add(self, other)

    def __neg__(self) -> "Series":
        return Series._raw({k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other: "Series") -> "Series":
        return series_add(self, -other)

    def __mul__(self, other: "Series") -> "Series":
        return series_multiply(self, other)

    @property
    def constant_term(self) -> int:
        return self.coeffs.get((), 0)

    def degree_part(self, r: int) -> "Series":
        return Series._raw({k: c for k, c in self.coeffs.items() if len(k) == r})

    def truncate(self, max_degree: int) -> "Series":
        return Series._raw({k: c for k, c in self.coeffs.items() if len(k) <= max_degree})

    def restrict(self, labels: Iterable[int]) -> "Series":
        """Set every X_j with j outside ``labels`` to zero."""
        keep = set(labels)
        return Series._raw(
            {k: c for k, c in self.coeffs.items() if all(i in keep for i in k)}
        )


ZERO = Series()
ONE = Series.constant(1)


def series_add(a: Series, b: Series) -> Series:
    acc = dict(a.coeffs)
    for k, c in b.coeffs.items():
        s = acc.get(k, 0) + c
        if s:
            acc[k] = s
        else:
            acc.pop(k, None)
    return Series._raw(acc)


def series_multiply(a: Series, b: Series, max_degree: int | None = None) -> Series:
    if not a.coeffs or not b.coeffs:
        return ZERO
    right = [(kb, _mask(kb), cb) for kb, cb in b.coeffs.items()]
    acc: dict[Monomial, int] = {}
    for ka, ca in a.coeffs.items():
        ma = _mask(ka)
        room = None if max_degree is None else max_degree - len(ka)
        for kb, mb, cb in right:
            if ma & mb:
                continue
            if room is not None and len(kb) > room:
                continue
            k = ka + kb
            acc[k] = acc.get(k, 0) + ca * cb
    return Series._raw({k: c for k, c in acc.items() if c})


def series_inverse(a: Series, max_degree: int | None = None) -> Series:
    """Inverse of a unit, via the terminating geometric series.

    With ``a = c(1 + N)``, ``c = +-1`` and ``N`` in the augmentation ideal,
    ``N`` is nilpotent so ``(1 + N)^-1 = 1 - N + N^2 - ...`` is finite.
    """
    c = a.constant_term
    if c not in (1, -1):
        raise NonUnitError(f"constant term {c} is not a unit")
    nil = Series._raw({k: v * c for k, v in a.coeffs.items() if k})
    if max_degree is not None:
        nil = nil.truncate(max_degree)
    result = ONE
    power = ONE
    sign = 1
    while True:
        power = series_multiply(power, nil, max_degree)
        if not power.coeffs:
            break
        sign = -sign
        result = series_add(result, power if sign > 0 else -power)
    return result if c == 1 else -result


def conjugate(a: Series, m: Series, e: int = 1, max_degree: int | None = None) -> Series:
    """``a^e m a^-e`` for a unit ``a`` and ``e = +-1``."""
    ai = series_inverse(a, max_degree)
    left, right = (a, ai) if e > 0 else (ai, a)
    return series_multiply(series_multiply(left, m, max_degree), right, max_degree)


def magnus_of_word(w: Sequence[int], max_degree: int | None = None) -> Series:
    """Image of a free-group word under x_i -> 1 + X_i."""
    result = ONE
    for a in w:
        i = abs(a)
        letter = Series._raw({(): 1, (i,): 1 if a > 0 else -1})
        result = series_multiply(result, letter, max_degree)
    return result


def coefficient(a: Series, seq: Sequence[int]) -> int:
    return a.coeffs.get(check_distinct(seq), 0)


def _monomial_text(key: Monomial) -> str:
    return "*".join(f"X{i}" for i in key)


def format_series(a: Series) -> str:
    """Render as ``1 + X1*X2 - X2*X1``; degree first, then index order."""
    if not a.coeffs:
        return "0"
    out: list[str] = []
    for key in sorted(a.coeffs, key=lambda k: (len(k), k)):
        c = a.coeffs[key]
        mag = abs(c)
        if not key:
            body = str(mag)
        elif mag == 1:
            body = _monomial_text(key)
        else:
            body = f"{mag}*{_monomial_text(key)}"
        if not out:
            out.append(body if c > 0 else f"-{body}")
        else:
            out.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(out)


def parse_series(text: str) -> Series:
    """Inverse of :func:`format_series`."""
    toks = text.replace("- ", "-").replace("+ ", "+").split()
    acc: dict[Monomial, int] = {}
    for tok in toks:
        sign = 1
        if tok[0] in "+-":
            sign = -1 if tok[0] == "-" else 1
            tok = tok[1:]
        factors = tok.split("*")
        c = 1
        if factors and factors[0].isdigit():
            c = int(factors.pop(0))
        key = tuple(int(f[1:]) for f in factors)
        acc[key] = acc.get(key, 0) + sign * c
    return Series(acc)
