"""Forbidden-word sets: explicit finite lists and the construction families.

Both kinds answer ``forbidden(n)``: the minimal forbidden words of degree n.
Words use the letter encoding of :mod:`gradedhilbert.monoid` (``y = 0``).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .errors import InvalidSpecError, PresentationSyntaxError, UnsupportedVariantError
from .monoid import Y, ASetRealization, format_word, iter_words, parse_word, realize_A
from .powseries import SeriesSpec, generate


class Variant(enum.Enum):
    THEOREM_1 = "theorem1"
    COROLLARY_12 = "corollary12"
    REMARK_13 = "remark13"
    THEOREM_14 = "theorem14"

    @property
    def is_monomial(self) -> bool:
        return self in (Variant.THEOREM_1, Variant.REMARK_13)

    @property
    def commutative_A(self) -> bool:
        return self is Variant.THEOREM_14


@dataclass(frozen=True)
class ConstructionSpec:
    variant: Variant
    d: int
    p: int = 2
    q: int = 0
    series: SeriesSpec = field(default_factory=SeriesSpec.zero)

    def __post_init__(self):
        if isinstance(self.variant, str):
            object.__setattr__(self, "variant", Variant(self.variant))
        if self.d < 1:
            raise InvalidSpecError(f"d must be >= 1, got {self.d}")
        if self.p not in (0, 1, 2):
            raise InvalidSpecError(f"p must be 0, 1 or 2, got {self.p}")
        if self.variant is Variant.COROLLARY_12:
            if self.q not in (0, 1, 2) or self.p + self.q > 2:
                raise InvalidSpecError(
                    f"corollary12 needs q in 0..2 and p + q <= 2, got p={self.p}, q={self.q}"
                )
        elif self.q != 0:
            raise InvalidSpecError(f"q is only meaningful for corollary12, got q={self.q}")
        if self.variant is Variant.REMARK_13 and self.p != 2:
            raise InvalidSpecError("remark13 is built on the p = 2 relations; p must be 2")

    def side_kinds(self) -> tuple:
        """Kinds of the (left, right) sides around ``y v y``.

        Each side is ``"free"``, ``"sym"`` (commutative monomials) or
        ``"killed"``.  Killed sides are assigned from the left first, then
        symmetrized ones, so p = 1 kills ``u1`` and (p, q) = (1, 1)
        symmetrizes ``u1``.
        """
        v = self.variant
        if v is Variant.REMARK_13:
            return ("killed", "killed")
        if v is Variant.THEOREM_14:
            other = "sym"
            n_sym = 0
        elif v is Variant.COROLLARY_12:
            other = "free"
            n_sym = self.q
        else:
            other = "free"
            n_sym = 0
        n_killed = 2 - self.p - n_sym
        kinds = ["killed"] * n_killed + ["sym"] * n_sym
        kinds += [other] * (2 - len(kinds))
        return tuple(kinds)

    def __str__(self):
        s = f"{self.variant.value} d={self.d} p={self.p}"
        if self.variant is Variant.COROLLARY_12:
            s += f" q={self.q}"
        return s + f" series={self.series}"


class PresentationKind(enum.Enum):
    FINITE = "finite"
    STRUCTURED = "structured"


@dataclass(frozen=True)
class Presentation:
    """An alphabet together with a degree-wise list of forbidden words."""

    d: int
    has_y: bool
    kind: PresentationKind = PresentationKind.FINITE
    words: tuple = ()
    construction: ConstructionSpec | None = None
    aset: ASetRealization | None = None
    redundant: tuple = ()

    @property
    def alphabet(self) -> tuple:
        xs = tuple(range(1, self.d + 1))
        return ((Y,) + xs) if self.has_y else xs

    @property
    def alphabet_size(self) -> int:
        return self.d + (1 if self.has_y else 0)

    @property
    def max_degree(self) -> int | None:
        """Largest degree with forbidden words, or None if unbounded."""
        if self.kind is PresentationKind.FINITE:
            return max((len(w) for w in self.words), default=0)
        return None

    def forbidden(self, n: int) -> list:
        if self.kind is PresentationKind.FINITE:
            return sorted(w for w in self.words if len(w) == n)
        return construction_forbidden(self.construction, self.aset, n)

    def forbidden_upto(self, n: int) -> list:
        out = []
        for k in range(n + 1):
            out.extend(self.forbidden(k))
        return out

    def to_text(self) -> str:
        if self.kind is not PresentationKind.FINITE:
            raise UnsupportedVariantError("only finite presentations serialize to text")
        lines = [f"alphabet d={self.d} y={int(self.has_y)}"]
        lines += [format_word(w) for w in self.words]
        return "\n".join(lines) + "\n"


def _has_factor(word, others) -> bool:
    n = len(word)
    for i in range(n):
        for j in range(i, n + 1):
            if (i, j) != (0, n) and word[i:j] in others:
                return True
    return False


def reduce_words(words):
    """Drop duplicates and words containing another listed word as a factor.

    Returns ``(kept, dropped)``, both in input order.
    """
    pool = set(words)
    kept, dropped, seen = [], [], set()
    for w in words:
        if w in seen or _has_factor(w, pool):
            dropped.append(w)
        else:
            kept.append(w)
        seen.add(w)
    return kept, dropped


def finite_presentation(words, d: int, has_y: bool = True) -> Presentation:
    kept, dropped = reduce_words([tuple(w) for w in words])
    return Presentation(d, has_y, PresentationKind.FINITE, tuple(kept), redundant=tuple(dropped))


def parse_presentation(text: str) -> Presentation:
    """Parse the presentation file format.

    First non-comment line: ``alphabet d=<d> y=<0|1>``; then one forbidden
    word per line (``x1 x2 y``).  Blank lines and ``#`` comments are ignored.
    """
    header = None
    words = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if header is None:
            header = _parse_header(line, lineno)
            continue
        words.append(parse_word(line, header[0], header[1], lineno))
    if header is None:
        raise PresentationSyntaxError("missing 'alphabet d=<d> y=<0|1>' header", 1)
    return finite_presentation(words, *header)


def _parse_header(line, lineno):
    parts = line.split()
    if not parts or parts[0] != "alphabet":
        raise PresentationSyntaxError("expected 'alphabet d=<d> y=<0|1>'", lineno)
    fields = {}
    for part in parts[1:]:
        key, sep, value = part.partition("=")
        if not sep or key not in ("d", "y") or not value.isdigit():
            raise PresentationSyntaxError(f"bad header field {part!r}", lineno)
        fields[key] = int(value)
    if "d" not in fields or fields["d"] < 1:
        raise PresentationSyntaxError("header needs d >= 1", lineno)
    if fields.get("y", 1) not in (0, 1):
        raise PresentationSyntaxError("y must be 0 or 1", lineno)
    return fields["d"], bool(fields.get("y", 1))


# ---------------------------------------------------------------------------
# Construction families
# ---------------------------------------------------------------------------


def construction_presentation(spec: ConstructionSpec, order: int) -> Presentation:
    """Structured presentation whose forbidden words are enumerable up to ``order``."""
    if not spec.variant.is_monomial:
        raise UnsupportedVariantError(
            f"{spec.variant.value} is not a monomial algebra; use structured counting"
        )
    a = generate(spec.series, max(order - 2, 0))
    aset = realize_A(a, spec.d, commutative=False)
    return Presentation(spec.d, True, PresentationKind.STRUCTURED,
                        construction=spec, aset=aset)


def construction_forbidden(spec: ConstructionSpec, aset: ASetRealization, n: int) -> list:
    """Reduced degree-n slice of the defining monomial relations.

    The relations ``y u1 y u2 y`` for arbitrary ``u1, u2`` are replaced by
    the subfamily with ``u1, u2`` in A (the rest already contain some
    ``y w y`` with w outside A), and words containing one of the relations
    added for p <= 1 or for the remark are omitted as well.
    """
    v = spec.variant
    if not v.is_monomial:
        raise UnsupportedVariantError(
            f"{v.value} is not a monomial presentation; no forbidden words"
        )
    if n - 2 > aset.order:
        raise ValueError(
            f"A is realized up to degree {aset.order}; degree-{n} relations need {n - 2}"
        )
    d = spec.d
    one = aset.contains_one
    out = []

    if n >= 2:
        for w in iter_words(d, n - 2):
            if w not in aset:
                out.append((Y,) + w + (Y,))

    if v is Variant.THEOREM_1:
        p = spec.p
        if n >= 3:
            m = n - 3
            if p == 2:
                for i in range(m + 1):
                    for v1 in aset.degree_set(i):
                        for v2 in aset.degree_set(m - i):
                            out.append((Y,) + v1 + (Y,) + v2 + (Y,))
            elif one and (p == 1 or m == 0):
                # a nonempty v1 (resp. v2) contains x y v y (resp. y v y x)
                for v2 in aset.degree_set(m):
                    out.append((Y, Y) + v2 + (Y,))
            if p <= 1:
                for v0 in aset.degree_set(m):
                    for i in range(1, d + 1):
                        out.append((i, Y) + v0 + (Y,))
            if p == 0:
                for v0 in aset.degree_set(m):
                    for i in range(1, d + 1):
                        out.append((Y,) + v0 + (Y, i))
    else:  # REMARK_13
        if n == 3:
            if one:
                out.append((Y, Y, Y))
            for i in range(1, d + 1):
                for j in range(1, d + 1):
                    out.append((i, Y, j))
            if one:
                for i in range(1, d + 1):
                    out.append((i, Y, Y))
                    out.append((Y, Y, i))
    out.sort()
    return out
