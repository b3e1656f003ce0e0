"""Identity calculus for loops of Bol-Moufang type.

A Bol-Moufang identity equates two bracketings of one four-letter word in
three variables, one of which occurs twice, with the variables in the same
order on both sides -- e.g. x((yy)z) = ((xy)y)z.  Up to renaming variables
and swapping sides there are 6 variable patterns and 5 bracketings, hence
6*(4+3+2+1) = 60 distinct identities.  Each gets a short name Xij: letter
X in A..F for the pattern, digits i < j for the bracketings of the two
sides.  Reading an identity right to left (its dual) acts on names by
A'=F, B'=E, C'=C, D'=D and 1'=5, 2'=4, 3'=3.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

VARIABLES = ("x", "y", "z")

# Leaf patterns: which of the three variables sits at each of the four slots.
PATTERNS = {
    "A": (0, 0, 1, 2),
    "B": (0, 1, 0, 2),
    "C": (0, 1, 1, 2),
    "D": (0, 1, 2, 0),
    "E": (0, 1, 2, 1),
    "F": (0, 1, 2, 2),
}

DUAL_PATTERN = {"A": "F", "B": "E", "C": "C", "D": "D", "E": "B", "F": "A"}
DUAL_BRACKETING = {1: 5, 2: 4, 3: 3, 4: 2, 5: 1}


class IdentitySyntaxError(ValueError):
    """The input string does not parse as an identity at all."""


class NotBolMoufangError(ValueError):
    """The identity is well formed but not of Bol-Moufang type."""


@dataclass(frozen=True)
class Var:
    name: str

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class App:
    left: "Term"
    right: "Term"

    def __str__(self) -> str:
        return _wrap(self.left) + _wrap(self.right)


Term = Var | App


def _wrap(t: Term) -> str:
    return f"({t})" if isinstance(t, App) else str(t)


def leaves(t: Term) -> list[str]:
    """Variable names of a term, read left to right."""
    if isinstance(t, Var):
        return [t.name]
    return leaves(t.left) + leaves(t.right)


def mirror(t: Term) -> Term:
    """The term read right to left (children swapped recursively)."""
    if isinstance(t, Var):
        return t
    return App(mirror(t.right), mirror(t.left))


def _rename(t: Term, mapping: dict[str, str]) -> Term:
    if isinstance(t, Var):
        return Var(mapping[t.name])
    return App(_rename(t.left, mapping), _rename(t.right, mapping))


def _first_occurrence_renaming(word: list[str]) -> dict[str, str]:
    mapping: dict[str, str] = {}
    for v in word:
        if v not in mapping:
            mapping[v] = VARIABLES[len(mapping)]
    return mapping


def _build(word: list[str], bracketing: int) -> Term:
    a, b, c, d = (Var(v) for v in word)
    if bracketing == 1:
        return App(a, App(b, App(c, d)))
    if bracketing == 2:
        return App(a, App(App(b, c), d))
    if bracketing == 3:
        return App(App(a, b), App(c, d))
    if bracketing == 4:
        return App(App(a, App(b, c)), d)
    if bracketing == 5:
        return App(App(App(a, b), c), d)
    raise ValueError(f"bracketing must be 1..5, got {bracketing}")


def _shape(t: Term):
    return None if isinstance(t, Var) else (_shape(t.left), _shape(t.right))


_SHAPE_TO_BRACKETING = {_shape(_build(["x"] * 4, k)): k for k in range(1, 6)}


def bracketing_of(t: Term) -> int:
    """Which of the five length-4 bracketings a term has."""
    k = _SHAPE_TO_BRACKETING.get(_shape(t))
    if k is None:
        raise NotBolMoufangError(f"term {t} is not a bracketing of a length-4 word")
    return k


@dataclass(frozen=True)
class Identity:
    """A pair of bracketed terms over one binary operation, lhs = rhs."""

    lhs: Term
    rhs: Term

    def __post_init__(self) -> None:
        lw, rw = leaves(self.lhs), leaves(self.rhs)
        if len(lw) != 4 or len(rw) != 4:
            raise NotBolMoufangError(
                f"each side needs exactly 4 variable occurrences, got {len(lw)} and {len(rw)}"
            )
        if lw != rw:
            raise NotBolMoufangError(f"variable order differs between sides: {lw} vs {rw}")
        if not set(lw) <= set(VARIABLES):
            raise NotBolMoufangError(f"variables must come from {VARIABLES}")
        if len(set(lw)) != 3:
            raise NotBolMoufangError(f"need exactly 3 distinct variables, got {sorted(set(lw))}")
        if bracketing_of(self.lhs) == bracketing_of(self.rhs):
            raise NotBolMoufangError("both sides have the same bracketing (trivial identity)")

    def __str__(self) -> str:
        return f"{self.lhs}={self.rhs}"


@dataclass(frozen=True, order=True)
class IdentityName:
    """Canonical Xij name: pattern letter and the two side bracketings, i < j."""

    pattern: str
    i: int
    j: int

    def __post_init__(self) -> None:
        if self.pattern not in PATTERNS:
            raise ValueError(f"pattern must be one of {''.join(PATTERNS)}, got {self.pattern!r}")
        if not (1 <= self.i <= 5 and 1 <= self.j <= 5):
            raise ValueError(f"bracketings must be in 1..5, got {self.i}, {self.j}")
        if self.i == self.j:
            raise ValueError("the two sides must be bracketed differently")
        if self.i > self.j:
            i, j = self.j, self.i
            object.__setattr__(self, "i", i)
            object.__setattr__(self, "j", j)

    @classmethod
    def from_string(cls, text: str) -> "IdentityName":
        s = text.strip()
        if len(s) != 3 or s[0].upper() not in PATTERNS or not s[1:].isdigit():
            raise ValueError(f"not an identity name (expected e.g. 'C25'): {text!r}")
        return cls(s[0].upper(), int(s[1]), int(s[2]))

    def __str__(self) -> str:
        return f"{self.pattern}{self.i}{self.j}"


def _tokenize(text: str):
    for ch in text:
        if ch in "xyz()*":
            yield ch
        elif not ch.isspace():
            raise IdentitySyntaxError(f"unexpected character {ch!r}")


def _parse_term(text: str) -> Term:
    tokens = list(_tokenize(text))
    pos = 0

    def primary() -> Term:
        nonlocal pos
        tok = tokens[pos]
        if tok in "xyz":
            pos += 1
            return Var(tok)
        if tok == "(":
            pos += 1
            t = expr()
            if pos >= len(tokens) or tokens[pos] != ")":
                raise IdentitySyntaxError("missing closing parenthesis")
            pos += 1
            return t
        raise IdentitySyntaxError(f"unexpected {tok!r}")

    def expr() -> Term:
        nonlocal pos
        t = primary()
        while pos < len(tokens) and tokens[pos] != ")":
            if tokens[pos] == "*":
                pos += 1
                if pos >= len(tokens) or tokens[pos] == ")":
                    raise IdentitySyntaxError("dangling '*'")
            t = App(t, primary())  # juxtaposition associates to the left
        return t

    if not tokens:
        raise IdentitySyntaxError("empty term")
    t = expr()
    if pos != len(tokens):
        raise IdentitySyntaxError(f"trailing input at token {pos}")
    return t


def parse_identity(text: str) -> Identity:
    """Parse 'x((yy)z)=((xy)y)z' style input into a Bol-Moufang identity."""
    if text.count("=") != 1:
        raise IdentitySyntaxError("an identity needs exactly one '='")
    left, right = text.split("=")
    return Identity(_parse_term(left), _parse_term(right))


def encode_name(ident: Identity) -> IdentityName:
    """Canonical Xij name: variables in first-occurrence order, smaller bracketing first."""
    word = leaves(ident.lhs)
    renamed = tuple(VARIABLES.index(_first_occurrence_renaming(word)[v]) for v in word)
    letter = next(k for k, pat in PATTERNS.items() if pat == renamed)
    return IdentityName(letter, bracketing_of(ident.lhs), bracketing_of(ident.rhs))


def decode_name(name: IdentityName) -> Identity:
    """The unique identity with the named pattern and bracketings."""
    word = [VARIABLES[k] for k in PATTERNS[name.pattern]]
    return Identity(_build(word, name.i), _build(word, name.j))


def dual_name(name: IdentityName) -> IdentityName:
    """Name of the identity read right to left: Xij -> X'j'i'."""
    return IdentityName(
        DUAL_PATTERN[name.pattern], DUAL_BRACKETING[name.j], DUAL_BRACKETING[name.i]
    )


def dual_term(ident: Identity) -> Identity:
    """Mirror both sides, rename variables canonically, put sides in canonical order."""
    lhs, rhs = mirror(ident.lhs), mirror(ident.rhs)
    mapping = _first_occurrence_renaming(leaves(lhs))
    lhs, rhs = _rename(lhs, mapping), _rename(rhs, mapping)
    if bracketing_of(lhs) > bracketing_of(rhs):
        lhs, rhs = rhs, lhs
    return Identity(lhs, rhs)


def enumerate_all() -> list[IdentityName]:
    """All 60 canonical identity names in lexicographic order."""
    return [
        IdentityName(letter, i, j)
        for letter in PATTERNS
        for i, j in combinations(range(1, 6), 2)
    ]
