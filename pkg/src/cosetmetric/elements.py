"""Exact arithmetic and canonical forms for the four supported group families.

Families:
  * Perm(n)        -- permutations of {0..n-1}
  * RatMatrix(n)   -- n x n rational matrices, nonzero determinant
                      (optionally det = 1, enforced at construction)
  * AffineQ        -- pairs (a, b), a in Q with a > 0, b in Q, with the law
                      (a, b) * (a', b') = (a a', a b' + b), acting on Q by
                      x |-> a x + b
  * BS(m, n)       -- Baumslag-Solitar group <t, x : t^-1 x^m t = x^n>,
                      elements stored in Britton-reduced range form

Every stored element is canonical: normalizing an element is idempotent and
two elements are equal in the group iff their stored forms are equal.  The
total order `cmp_elems` is the lexicographic order on the canonical text
serialization, which is decimal-free and identical across platforms.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
import re

from .errors import FamilyMismatch, MalformedInput, SingularMatrix


# ---------------------------------------------------------------------------
# element variants
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Perm:
    """A permutation of {0..n-1}, stored as the tuple of images."""

    images: tuple[int, ...]

    def __post_init__(self):
        n = len(self.images)
        if sorted(self.images) != list(range(n)):
            raise MalformedInput(f"not a permutation of 0..{n - 1}: {self.images}")

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i]


@dataclass(frozen=True)
class RatMatrix:
    """Square rational matrix with nonzero determinant."""

    rows: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        n = len(self.rows)
        if n == 0 or any(len(r) != n for r in self.rows):
            raise MalformedInput("matrix must be square and nonempty")
        object.__setattr__(
            self, "rows", tuple(tuple(Fraction(x) for x in r) for r in self.rows)
        )

    @property
    def size(self) -> int:
        return len(self.rows)


@dataclass(frozen=True)
class Affine:
    """Element (a, b) of Q+* x| Q with a > 0."""

    a: Fraction
    b: Fraction

    def __post_init__(self):
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", Fraction(self.b))
        if self.a <= 0:
            raise MalformedInput(f"affine scale must be positive, got {self.a}")


@dataclass(frozen=True)
class BSWord:
    """Britton-reduced range-form word in BS(m, n).

    `word` alternates letters ("x", a) with a != 0 and ("t", e) with
    e in {+1, -1}.  Interior x-exponents are range-reduced: an exponent
    immediately followed by t^+1 lies in [0, m), one followed by t^-1 lies
    in [0, n).  No pinches remain (which, in range form, means no adjacent
    t^e t^-e).  The trailing x-exponent is unrestricted.
    """

    m: int
    n: int
    word: tuple[tuple[str, int], ...]


GroupElem = object  # Perm | RatMatrix | Affine | BSWord


# ---------------------------------------------------------------------------
# rational matrix helpers
# ---------------------------------------------------------------------------

def mat_from_rows(rows) -> RatMatrix:
    return RatMatrix(tuple(tuple(Fraction(x) for x in r) for r in rows))


def mat_identity(n: int) -> RatMatrix:
    return mat_from_rows([[1 if i == j else 0 for j in range(n)] for i in range(n)])


def mat_mul(a: RatMatrix, b: RatMatrix) -> RatMatrix:
    n = a.size
    rows = tuple(
        tuple(sum(a.rows[i][k] * b.rows[k][j] for k in range(n)) for j in range(n))
        for i in range(n)
    )
    return RatMatrix(rows)


def mat_det(a: RatMatrix) -> Fraction:
    # fraction-free enough for the small sizes we use; plain Gaussian
    # elimination with exact Fractions
    n = a.size
    m = [list(r) for r in a.rows]
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            det = -det
        det *= m[col][col]
        inv = 1 / m[col][col]
        for r in range(col + 1, n):
            f = m[r][col] * inv
            if f:
                for c in range(col, n):
                    m[r][c] -= f * m[col][c]
    return det


def mat_inv(a: RatMatrix) -> RatMatrix:
    n = a.size
    m = [list(r) + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(a.rows)]
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] != 0), None)
        if piv is None:
            raise SingularMatrix("matrix is singular")
        m[col], m[piv] = m[piv], m[col]
        inv = 1 / m[col][col]
        m[col] = [x * inv for x in m[col]]
        for r in range(n):
            if r != col and m[r][col]:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return RatMatrix(tuple(tuple(row[n:]) for row in m))


# ---------------------------------------------------------------------------
# BS(m, n) normal form
# ---------------------------------------------------------------------------

def bs_normalize(m: int, n: int, letters) -> tuple[tuple[str, int], ...]:
    """Britton-reduced range form of a raw letter sequence.

    Raw letters are ("x", a) or ("t", e) with arbitrary integer exponents.
    Rewriting rules: x^m t = t x^n and x^n t^-1 = t^-1 x^m push excess
    exponent rightward; in range form a pinch can only be an adjacent
    t^e t^-e, which cancels.  The loop terminates because cancellations
    strictly decrease the t-length and the range-reduction pass is a single
    left-to-right sweep.
    """
    if m < 1 or n < 1:
        raise MalformedInput(f"BS parameters must be >= 1, got ({m}, {n})")
    # expand t-letters into single steps, validate
    flat: list[tuple[str, int]] = []
    for kind, val in letters:
        if kind == "x":
            flat.append(("x", int(val)))
        elif kind == "t":
            e = int(val)
            step = 1 if e > 0 else -1
            flat.extend(("t", step) for _ in range(abs(e)))
        else:
            raise MalformedInput(f"unknown letter kind {kind!r}")

    word = flat
    while True:
        # merge adjacent x's, drop zeros, range-reduce before each t
        out: list[tuple[str, int]] = []
        for kind, val in word:
            if kind == "x":
                if out and out[-1][0] == "x":
                    out[-1] = ("x", out[-1][1] + val)
                else:
                    out.append(("x", val))
                if out[-1][1] == 0:
                    out.pop()
            else:  # t
                modulus = m if val == 1 else n
                push = n if val == 1 else m
                carry = 0
                if out and out[-1][0] == "x":
                    q, r = divmod(out[-1][1], modulus)
                    out.pop()
                    if r:
                        out.append(("x", r))
                    carry = q * push
                out.append(("t", val))
                if carry:
                    out.append(("x", carry))
        # cancel adjacent t^e t^-e (the only pinches left in range form)
        cancelled = False
        reduced: list[tuple[str, int]] = []
        for letter in out:
            if (
                reduced
                and letter[0] == "t"
                and reduced[-1][0] == "t"
                and reduced[-1][1] == -letter[1]
            ):
                reduced.pop()
                cancelled = True
            else:
                reduced.append(letter)
        word = reduced
        if not cancelled:
            return tuple(word)


def bs_word(m: int, n: int, letters) -> BSWord:
    return BSWord(m, n, bs_normalize(m, n, letters))


def bs_identity(m: int, n: int) -> BSWord:
    return BSWord(m, n, ())


def bs_t_length(w: BSWord) -> int:
    return sum(1 for kind, _ in w.word if kind == "t")


# ---------------------------------------------------------------------------
# generic element operations
# ---------------------------------------------------------------------------

def _check_same_family(a, b):
    if type(a) is not type(b):
        raise FamilyMismatch(f"{type(a).__name__} vs {type(b).__name__}")
    if isinstance(a, Perm) and a.degree != b.degree:
        raise FamilyMismatch(f"permutation degrees {a.degree} vs {b.degree}")
    if isinstance(a, RatMatrix) and a.size != b.size:
        raise FamilyMismatch(f"matrix sizes {a.size} vs {b.size}")
    if isinstance(a, BSWord) and (a.m, a.n) != (b.m, b.n):
        raise FamilyMismatch(f"BS parameters {(a.m, a.n)} vs {(b.m, b.n)}")


def elem_mul(a, b):
    """Product a * b in canonical form."""
    _check_same_family(a, b)
    if isinstance(a, Perm):
        return Perm(tuple(a.images[b.images[i]] for i in range(a.degree)))
    if isinstance(a, RatMatrix):
        return mat_mul(a, b)
    if isinstance(a, Affine):
        return Affine(a.a * b.a, a.a * b.b + a.b)
    if isinstance(a, BSWord):
        return BSWord(a.m, a.n, bs_normalize(a.m, a.n, a.word + b.word))
    raise FamilyMismatch(f"unsupported element type {type(a).__name__}")


def elem_inv(a):
    """Inverse of a in canonical form."""
    if isinstance(a, Perm):
        images = [0] * a.degree
        for i, j in enumerate(a.images):
            images[j] = i
        return Perm(tuple(images))
    if isinstance(a, RatMatrix):
        return mat_inv(a)
    if isinstance(a, Affine):
        return Affine(1 / a.a, -a.b / a.a)
    if isinstance(a, BSWord):
        letters = tuple((kind, -val) for kind, val in reversed(a.word))
        return BSWord(a.m, a.n, bs_normalize(a.m, a.n, letters))
    raise FamilyMismatch(f"unsupported element type {type(a).__name__}")


def elem_is_identity(a) -> bool:
    if isinstance(a, Perm):
        return a.images == tuple(range(a.degree))
    if isinstance(a, RatMatrix):
        return a == mat_identity(a.size)
    if isinstance(a, Affine):
        return a.a == 1 and a.b == 0
    if isinstance(a, BSWord):
        return a.word == ()
    raise FamilyMismatch(f"unsupported element type {type(a).__name__}")


# ---------------------------------------------------------------------------
# canonical text serialization (decimal-free, platform independent)
# ---------------------------------------------------------------------------

def _frac_str(x: Fraction) -> str:
    return str(x)  # "3", "-3", "1/2", "-5/7" -- already canonical


def serialize(e) -> str:
    if isinstance(e, Perm):
        return "perm[" + ",".join(str(i) for i in e.images) + "]"
    if isinstance(e, RatMatrix):
        rows = ",".join(
            "[" + ",".join(_frac_str(x) for x in row) + "]" for row in e.rows
        )
        return "mat[" + rows + "]"
    if isinstance(e, Affine):
        return f"aff({_frac_str(e.a)},{_frac_str(e.b)})"
    if isinstance(e, BSWord):
        if not e.word:
            return "e"
        toks = []
        for kind, val in e.word:
            toks.append(kind if val == 1 else f"{kind}^{val}")
        return "*".join(toks)
    raise FamilyMismatch(f"unsupported element type {type(e).__name__}")


def cmp_elems(a, b) -> int:
    """Total order: -1 / 0 / +1 by lexicographic canonical serialization."""
    _check_same_family(a, b)
    ka, kb = serialize(a), serialize(b)
    return (ka > kb) - (ka < kb)


def sort_key(e) -> str:
    return serialize(e)


# ---------------------------------------------------------------------------
# parsing
# ---------------------------------------------------------------------------

_FRAC_RE = re.compile(r"^-?\d+(/\d+)?$")


def _parse_frac(s: str) -> Fraction:
    s = s.strip()
    if not _FRAC_RE.match(s):
        raise MalformedInput(f"not an integer or p/q fraction: {s!r}")
    return Fraction(s)


def parse_perm(s: str) -> Perm:
    s = s.strip()
    if not (s.startswith("perm[") and s.endswith("]")):
        raise MalformedInput(f"bad permutation literal: {s!r}")
    body = s[len("perm["):-1]
    try:
        images = tuple(int(tok) for tok in body.split(",")) if body else ()
    except ValueError as exc:
        raise MalformedInput(f"bad permutation literal: {s!r}") from exc
    return Perm(images)


def parse_matrix(s: str) -> RatMatrix:
    s = s.strip()
    if not (s.startswith("mat[[") and s.endswith("]]")):
        raise MalformedInput(f"bad matrix literal: {s!r}")
    body = s[len("mat[["):-2]
    rows = []
    for part in body.split("],["):
        rows.append([_parse_frac(tok) for tok in part.split(",")])
    return mat_from_rows(rows)


def parse_affine(s: str) -> Affine:
    s = s.strip()
    if not (s.startswith("aff(") and s.endswith(")")):
        raise MalformedInput(f"bad affine literal: {s!r}")
    parts = s[len("aff("):-1].split(",")
    if len(parts) != 2:
        raise MalformedInput(f"bad affine literal: {s!r}")
    return Affine(_parse_frac(parts[0]), _parse_frac(parts[1]))


_BS_TOK_RE = re.compile(r"^([xt])(\^(-?\d+))?$")


def parse_bs(m: int, n: int, s: str) -> BSWord:
    s = s.strip()
    if s == "e":
        return bs_identity(m, n)
    letters = []
    for tok in s.split("*"):
        match = _BS_TOK_RE.match(tok.strip())
        if not match:
            raise MalformedInput(f"bad BS word token: {tok!r}")
        kind = match.group(1)
        val = int(match.group(3)) if match.group(3) is not None else 1
        letters.append((kind, val))
    return bs_word(m, n, letters)


# ---------------------------------------------------------------------------
# group contexts
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GroupCtx:
    """A concrete group: family tag, parameters, and a symmetric generator set.

    family is one of "perm", "ratmat", "affine", "bs".  `n` is the
    permutation degree or matrix size; `det_one` constrains ratmat to SL;
    `bs_params` holds (m, n) for the BS family.  Generators are stored in
    canonical form, closed under inverse, deduplicated and sorted.
    """

    family: str
    n: int = 0
    det_one: bool = True
    bs_params: tuple[int, int] = (0, 0)
    generators: tuple = ()

    def identity(self):
        if self.family == "perm":
            return Perm(tuple(range(self.n)))
        if self.family == "ratmat":
            return mat_identity(self.n)
        if self.family == "affine":
            return Affine(Fraction(1), Fraction(0))
        if self.family == "bs":
            return bs_identity(*self.bs_params)
        raise FamilyMismatch(f"unknown family {self.family!r}")

    def validate(self, e):
        """Raise unless e belongs to this context."""
        if self.family == "perm":
            if not isinstance(e, Perm) or e.degree != self.n:
                raise FamilyMismatch(f"expected Perm({self.n}), got {e!r}")
        elif self.family == "ratmat":
            if not isinstance(e, RatMatrix) or e.size != self.n:
                raise FamilyMismatch(f"expected RatMatrix({self.n}), got {e!r}")
            det = mat_det(e)
            if det == 0:
                raise SingularMatrix(f"singular matrix {serialize(e)}")
            if self.det_one and det != 1:
                raise SingularMatrix(
                    f"det constraint violated: det = {det} for {serialize(e)}"
                )
        elif self.family == "affine":
            if not isinstance(e, Affine):
                raise FamilyMismatch(f"expected Affine, got {e!r}")
        elif self.family == "bs":
            if not isinstance(e, BSWord) or (e.m, e.n) != self.bs_params:
                raise FamilyMismatch(f"expected BS{self.bs_params} word, got {e!r}")
        else:
            raise FamilyMismatch(f"unknown family {self.family!r}")

    def parse(self, s: str):
        if self.family == "perm":
            e = parse_perm(s)
        elif self.family == "ratmat":
            e = parse_matrix(s)
        elif self.family == "affine":
            e = parse_affine(s)
        elif self.family == "bs":
            e = parse_bs(*self.bs_params, s)
        else:
            raise FamilyMismatch(f"unknown family {self.family!r}")
        self.validate(e)
        return e


def _symmetric_closure(ctx: GroupCtx, gens) -> tuple:
    seen = {}
    for g in gens:
        ctx.validate(g)
        seen[serialize(g)] = g
        gi = elem_inv(g)
        seen[serialize(gi)] = gi
    # drop the identity: it contributes nothing as a generator
    seen = {k: v for k, v in seen.items() if not elem_is_identity(v)}
    return tuple(seen[k] for k in sorted(seen))


def perm_ctx(n: int, gens) -> GroupCtx:
    ctx = GroupCtx(family="perm", n=n)
    return GroupCtx(family="perm", n=n, generators=_symmetric_closure(ctx, gens))


def sl_ctx(n: int, gens) -> GroupCtx:
    ctx = GroupCtx(family="ratmat", n=n, det_one=True)
    return GroupCtx(
        family="ratmat", n=n, det_one=True, generators=_symmetric_closure(ctx, gens)
    )


def affine_ctx(gens) -> GroupCtx:
    ctx = GroupCtx(family="affine")
    return GroupCtx(family="affine", generators=_symmetric_closure(ctx, gens))


def bs_ctx(m: int, n: int, gens=None) -> GroupCtx:
    if gens is None:
        gens = [bs_word(m, n, [("t", 1)]), bs_word(m, n, [("x", 1)])]
    ctx = GroupCtx(family="bs", bs_params=(m, n))
    return GroupCtx(
        family="bs", bs_params=(m, n), generators=_symmetric_closure(ctx, gens)
    )


def mul(ctx: GroupCtx, a, b):
    """Canonical product inside ctx's family."""
    ctx.validate(a)
    ctx.validate(b)
    return elem_mul(a, b)


def inv(ctx: GroupCtx, a):
    ctx.validate(a)
    return elem_inv(a)


def normal_form(ctx: GroupCtx, raw):
    """Canonicalize a raw element.

    Accepts a string (family serialization, see `GroupCtx.parse`), a raw
    BS letter sequence, raw matrix rows, or an already-built element.
    Idempotent by construction.
    """
    if isinstance(raw, str):
        return ctx.parse(raw)
    if ctx.family == "bs" and isinstance(raw, (list, tuple)) and not isinstance(raw, BSWord):
        return bs_word(*ctx.bs_params, raw)
    if ctx.family == "ratmat" and isinstance(raw, (list, tuple)):
        e = mat_from_rows(raw)
        ctx.validate(e)
        return e
    ctx.validate(raw)
    if isinstance(raw, BSWord):
        return BSWord(raw.m, raw.n, bs_normalize(raw.m, raw.n, raw.word))
    return raw
