"""Countable G-sets with encoded points and word-based group actions.

An `EncodedGSet` carries named generator bijections (with inverses) on a
countable point set.  Acting group elements are *words*: tuples of
(generator_name, +-1) applied right-to-left, so concatenation of words is
composition of the corresponding bijections and the left-action axioms hold
by construction.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .errors import OutOfDomain


Word = tuple  # tuple[(str, int), ...]

IDENTITY_WORD: Word = ()


@dataclass
class EncodedGSet:
    """A countable set with a group action given by generator bijections."""

    name: str
    gen_names: tuple[str, ...]
    forward: dict[str, Callable] = field(repr=False)
    backward: dict[str, Callable] = field(repr=False)
    encode: Callable = field(default=str, repr=False)
    contains: Callable = field(default=lambda p: True, repr=False)

    def act(self, word: Word, point):
        """Apply a word (rightmost letter first) to a point."""
        if not self.contains(point):
            raise OutOfDomain(f"{point!r} not in G-set {self.name}")
        for name, sign in reversed(word):
            fn = self.forward[name] if sign == 1 else self.backward[name]
            point = fn(point)
        return point

    def generator_words(self) -> list[Word]:
        """Symmetric list of length-1 words."""
        words = []
        for name in self.gen_names:
            words.append(((name, 1),))
            words.append(((name, -1),))
        return words


def mul_words(w1: Word, w2: Word) -> Word:
    return tuple(w1) + tuple(w2)


def inv_word(w: Word) -> Word:
    return tuple((name, -sign) for name, sign in reversed(w))


# ---------------------------------------------------------------------------
# standard G-sets used by the example corpus
# ---------------------------------------------------------------------------

def infinite_dihedral_on_z() -> EncodedGSet:
    """Z with the infinite dihedral action: T: k -> k+1, R: k -> -k."""
    return EncodedGSet(
        name="infinite_dihedral_on_z",
        gen_names=("T", "R"),
        forward={"T": lambda k: k + 1, "R": lambda k: -k},
        backward={"T": lambda k: k - 1, "R": lambda k: -k},
        contains=lambda p: isinstance(p, int),
    )


def rationals_mult_gset(primes: tuple[int, ...] = (2, 3, 5)) -> EncodedGSet:
    """Q acted on by the sampled dilation subgroup <primes> of Q+*.

    Q+* has no finite generating set; this is the documented sampled
    schedule, so verdicts derived from it are SAMPLED, never certified.
    """
    forward = {f"mul{p}": (lambda p: (lambda x: x * p))(p) for p in primes}
    backward = {f"mul{p}": (lambda p: (lambda x: x / p))(p) for p in primes}
    return EncodedGSet(
        name="rationals_mult",
        gen_names=tuple(f"mul{p}" for p in primes),
        forward=forward,
        backward=backward,
        contains=lambda p: isinstance(p, (int, Fraction)),
    )


def affine_rationals_gset(primes: tuple[int, ...] = (2, 3)) -> EncodedGSet:
    """Q acted on by sampled generators of Q+* x| Q: dilations and x -> x+1."""
    forward = {f"mul{p}": (lambda p: (lambda x: x * p))(p) for p in primes}
    backward = {f"mul{p}": (lambda p: (lambda x: x / p))(p) for p in primes}
    forward["add1"] = lambda x: x + 1
    backward["add1"] = lambda x: x - 1
    return EncodedGSet(
        name="affine_rationals",
        gen_names=tuple(f"mul{p}" for p in primes) + ("add1",),
        forward=forward,
        backward=backward,
        contains=lambda p: isinstance(p, (int, Fraction)),
    )


def odometer_gset(max_level: int = 10) -> EncodedGSet:
    """Disjoint union of Z/2^k, k = 1..max_level, with Z acting by +1 mod 2^k.

    Points are pairs (k, r) with 0 <= r < 2^k.  The level-k window
    {(i, r) : i <= k} sees exactly the +1-mod-2^k odometer, whose restriction
    images number 2^k -- the finite shadows of the 2-adic integers.
    """

    def step(point):
        k, r = point
        return (k, (r + 1) % (1 << k))

    def unstep(point):
        k, r = point
        return (k, (r - 1) % (1 << k))

    def contains(point):
        if not (isinstance(point, tuple) and len(point) == 2):
            return False
        k, r = point
        return 1 <= k <= max_level and 0 <= r < (1 << k)

    return EncodedGSet(
        name="odometer",
        gen_names=("step",),
        forward={"step": step},
        backward={"step": unstep},
        contains=contains,
    )


def odometer_windows(max_level: int) -> list[list]:
    """Nested windows W_k = all points of levels <= k."""
    windows = []
    points: list = []
    for k in range(1, max_level + 1):
        points = points + [(k, r) for r in range(1 << k)]
        windows.append(list(points))
    return windows


def coset_gset(pair) -> EncodedGSet:
    """G acting on G/H by left multiplication; points are canonical Cosets.

    Generator names are the serializations of the context's (symmetric)
    generator list.
    """
    from . import cosets as _cosets
    from .elements import elem_inv, serialize

    forward = {}
    backward = {}
    names = []
    for g in pair.ctx.generators:
        name = serialize(g)
        names.append(name)
        forward[name] = (lambda g: (lambda c: _cosets.left_mul(pair, g, c)))(g)
        backward[name] = (
            lambda gi: (lambda c: _cosets.left_mul(pair, gi, c))
        )(elem_inv(g))
    return EncodedGSet(
        name=f"cosets_of_{pair.describe()}",
        gen_names=tuple(names),
        forward=forward,
        backward=backward,
        encode=lambda c: c.key(),
        contains=lambda c: isinstance(c, _cosets.Coset),
    )
