"""Lorenz-template symbolic dynamics.

Orbits on the (even-twist) Lorenz-like templates are coded by cyclic words
in ``x`` (left lobe) and ``y`` (right lobe). Cutting the template along the
branch line turns a set of orbits into a Lorenz permutation; its
overcrossing displacements, grouped by value, form the Lorenz vector.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from itertools import groupby

from .braidcore import BraidWord, Permutation

Syllable = tuple[int, int]  # x^k y^l


def _expand(word: tuple[Syllable, ...]) -> str:
    return "".join("x" * k + "y" * l for k, l in word)


def _is_primitive(s: str) -> bool:
    # s is a proper power iff it occurs inside (s+s) away from 0 and len(s)
    return (s + s).find(s, 1) == len(s)


def _min_rotation(s: str) -> str:
    return min(s[i:] + s[:i] for i in range(len(s)))


@dataclass(frozen=True)
class CodeWordSet:
    """One cyclic word per link component, stored as ``(k, l)`` syllables.

    Parallel copies of the same orbit (identical words) are rejected unless
    ``allow_parallel`` is set; they occur in Lorenz braids built from
    vectors such as <2^2>, but not among distinct periodic orbits.
    """

    words: tuple[tuple[Syllable, ...], ...]
    allow_parallel: bool = False

    def __post_init__(self):
        words = tuple(tuple((int(k), int(l)) for k, l in w) for w in self.words)
        object.__setattr__(self, "words", words)
        seen: set[str] = set()
        for w in words:
            if not w:
                raise ValueError("code words must be nonempty")
            if any(k < 1 or l < 1 for k, l in w):
                raise ValueError(f"exponents must be positive: {w}")
            s = _expand(w)
            if not _is_primitive(s):
                raise ValueError(f"code word {format_word(w)} is a proper power")
            canon = _min_rotation(s)
            if canon in seen and not self.allow_parallel:
                raise ValueError(f"duplicate orbit {format_word(w)}")
            seen.add(canon)

    @property
    def periods(self) -> tuple[int, ...]:
        return tuple(len(w) for w in self.words)

    def __str__(self):
        return "\n".join(format_word(w) for w in self.words)

    def to_json(self) -> str:
        return json.dumps({"words": [[list(s) for s in w] for w in self.words]}, sort_keys=True)


@dataclass(frozen=True)
class LorenzPermutation:
    """Permutation of ``N`` branch-line points, the first ``p`` in the x lobe.

    ``p == 0`` is allowed only for the identity (an unlink parallel to the
    template boundary).
    """

    image: tuple[int, ...]
    p: int

    def __post_init__(self):
        image = tuple(int(i) for i in self.image)
        object.__setattr__(self, "image", image)
        Permutation(image)  # bijection check
        n, p = len(image), self.p
        if not 0 <= p <= n:
            raise ValueError(f"p={p} out of range for {n} points")
        if p == 0:
            if image != tuple(range(1, n + 1)):
                raise ValueError("p = 0 requires the identity permutation")
            return
        if p == n:
            raise ValueError("a Lorenz permutation needs at least one y point")
        over, under = image[:p], image[p:]
        if any(a >= b for a, b in zip(over, over[1:])):
            raise ValueError("x-lobe images must strictly increase")
        if any(a >= b for a, b in zip(under, under[1:])):
            raise ValueError("y-lobe images must strictly increase")
        if any(image[i] <= i + 1 for i in range(p)):
            raise ValueError("x points must move right")
        if any(image[j] >= j + 1 for j in range(p, n)):
            raise ValueError("y points must move left")

    @property
    def size(self) -> int:
        return len(self.image)

    @property
    def displacements(self) -> tuple[int, ...]:
        return tuple(self.image[i] - (i + 1) for i in range(self.p))

    def permutation(self) -> Permutation:
        return Permutation(self.image)


@dataclass(frozen=True)
class LorenzVector:
    """<d_1^s_1, ..., d_k^s_k>: ``s_i`` overcrossing strands each moving ``d_i`` places."""

    pairs: tuple[tuple[int, int], ...] = field(default=())

    def __post_init__(self):
        pairs = tuple((int(d), int(s)) for d, s in self.pairs)
        object.__setattr__(self, "pairs", pairs)
        for d, s in pairs:
            if d < 2 or s < 1:
                raise ValueError(f"need d >= 2 and s >= 1, got ({d}, {s})")
        if any(a[0] >= b[0] for a, b in zip(pairs, pairs[1:])):
            raise ValueError("displacements must strictly increase")

    @property
    def p(self) -> int:
        return sum(s for _, s in self.pairs)

    @property
    def width(self) -> int:
        """d_k; the empty vector counts as one strand in the right lobe."""
        return self.pairs[-1][0] if self.pairs else 1

    @property
    def strands(self) -> int:
        return self.p + self.width

    def displacements(self) -> list[int]:
        return [d for d, s in self.pairs for _ in range(s)]

    def __str__(self):
        return "<" + ", ".join(f"{d}^{s}" for d, s in self.pairs) + ">"


def format_word(word) -> str:
    def pw(ch, e):
        return ch if e == 1 else f"{ch}^{e}"

    return " ".join(f"{pw('x', k)} {pw('y', l)}" for k, l in word)


_TOKEN = re.compile(r"([xy])\s*(?:\^\s*\{?\s*(\d+)\s*\}?)?")


def parse_word(text: str) -> tuple[Syllable, ...]:
    """Parse ``x^10 y^2 x^5 y^3`` (also ``xxyxy``) into syllables, read cyclically."""
    letters = []
    pos = 0
    text = text.strip()
    for m in _TOKEN.finditer(text):
        if text[pos:m.start()].strip():
            raise ValueError(f"cannot parse code word {text!r}")
        letters.append(m.group(1) * int(m.group(2) or 1))
        pos = m.end()
    if text[pos:].strip():
        raise ValueError(f"cannot parse code word {text!r}")
    s = "".join(letters)
    return _syllables(s)


def _syllables(s: str) -> tuple[Syllable, ...]:
    if not s or "x" not in s or "y" not in s:
        raise ValueError(f"code word must use both x and y: {s!r}")
    # rotate so the word starts at an x that follows a y
    k = next(i for i in range(len(s)) if s[i] == "x" and s[i - 1] == "y")
    s = s[k:] + s[:k]
    runs = [(ch, len(list(g))) for ch, g in groupby(s)]
    return tuple((runs[i][1], runs[i + 1][1]) for i in range(0, len(runs), 2))


def parse_code_words(text: str, allow_parallel: bool = False) -> CodeWordSet:
    """Text format (one component per line or ';'-separated) or the JSON mirror."""
    text = text.strip()
    if text.startswith("{"):
        data = json.loads(text)
        words = tuple(tuple(tuple(s) for s in w) for w in data["words"])
        return CodeWordSet(words, allow_parallel)
    parts = [p for p in re.split(r"[;\n]", text) if p.strip()]
    return CodeWordSet(tuple(parse_word(p) for p in parts), allow_parallel)


def trip_number(cw: CodeWordSet) -> int:
    """Sum of word periods, i.e. the number of x-to-y passages."""
    return sum(cw.periods)


def permutation_from_code_words(cw: CodeWordSet) -> LorenzPermutation:
    """Place every orbit point on the branch line and read off the return map.

    Points are ordered by their forward itineraries, lexicographically with
    x < y. Periodic itineraries with periods a, b agree forever once they
    agree on a + b symbols, so comparing prefixes of twice the longest word
    decides every pair. Parallel copies keep their list order.
    """
    strings = [_expand(w) for w in cw.words]
    horizon = 2 * max(len(s) for s in strings)
    points = []  # (key, copy, word index, offset)
    for wi, s in enumerate(strings):
        reps = -(-horizon // len(s)) + 1
        long = s * reps
        for off in range(len(s)):
            points.append((long[off:off + horizon], wi, off))
    points.sort(key=lambda t: (t[0], t[1]))
    if not cw.allow_parallel and any(a[0] == b[0] for a, b in zip(points, points[1:])):
        raise ValueError("two orbits share an itinerary")
    rank = {(wi, off): r for r, (_, wi, off) in enumerate(points, start=1)}
    image = [0] * len(points)
    for (wi, off), r in rank.items():
        image[r - 1] = rank[(wi, (off + 1) % len(strings[wi]))]
    p = sum(1 for key, _, _ in points if key[0] == "x")
    return LorenzPermutation(tuple(image), p)


def code_words_from_permutation(lp: LorenzPermutation) -> CodeWordSet:
    """One word per cycle, traced from the cycle's smallest point."""
    if lp.p == 0:
        raise ValueError("the p = 0 permutation carries no template orbits")
    words = []
    for cyc in lp.permutation().cycles():
        s = "".join("x" if i <= lp.p else "y" for i in cyc)
        words.append(_syllables(s))
    strings = [_min_rotation(_expand(w)) for w in words]
    parallel = len(set(strings)) < len(strings)
    return CodeWordSet(tuple(words), allow_parallel=parallel)


def permutation_from_vector(v: LorenzVector) -> LorenzPermutation:
    if not v.pairs:
        return LorenzPermutation((1,), 0)
    r = v.displacements()
    p, n = len(r), v.strands
    over = [i + 1 + r[i] for i in range(p)]
    taken = set(over)
    rest = [t for t in range(1, n + 1) if t not in taken]
    return LorenzPermutation(tuple(over + rest), p)


def vector_from_permutation(lp: LorenzPermutation) -> LorenzVector:
    """Group displacements after stripping leading unit displacements.

    A leading r_1 = 1 is removed by a left destabilization, which deletes
    that strand and leaves the remaining displacements unchanged.
    """
    r = list(lp.displacements)
    while r and r[0] == 1:
        r.pop(0)
    return LorenzVector(tuple((d, len(list(g))) for d, g in groupby(r)))


def destabilize_permutation(lp: LorenzPermutation) -> LorenzPermutation:
    """Remove strand 1 when it moves by exactly one place."""
    if lp.p == 0 or lp.image[0] != 2:
        raise ValueError("left destabilization needs r_1 = 1")
    target = lp.image[0]
    image = [target if t == 1 else t for t in lp.image[1:]]
    return LorenzPermutation(tuple(t - 1 for t in image), lp.p - 1)


def permutation_braid(lp: LorenzPermutation) -> BraidWord:
    """Positive braid in which each exchanged pair crosses exactly once.

    The overcrossing strands move in turn, rightmost first: strand i
    contributes the run sigma_i ... sigma_{i + r_i - 1}.
    """
    letters: list[int] = []
    for i in range(lp.p, 0, -1):
        r = lp.image[i - 1] - i
        letters.extend(range(i, i + r))
    return BraidWord(lp.size, tuple(letters))


def lorenz_braid(v: LorenzVector) -> BraidWord:
    """Concatenate the blocks (d_k, s_k) ... (d_1, s_1) on p + d_k strands.

    Block i covers the overcrossing strands S+1 .. S+s_i with
    S = s_1 + ... + s_{i-1}; inside the block the strand S+j contributes the
    run sigma_{S+j} ... sigma_{S+j+d_i-1}, taken for j = s_i down to 1.
    """
    offsets = []
    S = 0
    for d, s in v.pairs:
        offsets.append(S)
        S += s
    letters: list[int] = []
    for (d, s), off in reversed(list(zip(v.pairs, offsets))):
        for j in range(s, 0, -1):
            letters.extend(range(off + j, off + j + d))
    return BraidWord(v.strands, tuple(letters))


def trip_number_of_vector(v: LorenzVector) -> int:
    """Number of overcrossing strands that end in the right lobe."""
    p = v.p
    return sum(1 for i, r in enumerate(v.displacements(), start=1) if i + r > p)


_VEC_ITEM = re.compile(r"^\s*(\d+)\s*(?:\^\s*\{?\s*(\d+)\s*\}?)?\s*$")


def parse_vector(text: str) -> LorenzVector:
    """Parse ``<2^2, 4^2, 7^3, 8^2>`` (angle brackets optional)."""
    body = text.strip().lstrip("<⟨").rstrip(">⟩").strip()
    if not body:
        return LorenzVector(())
    pairs = []
    for item in body.split(","):
        m = _VEC_ITEM.match(item)
        if not m:
            raise ValueError(f"cannot parse vector entry {item!r}")
        pairs.append((int(m.group(1)), int(m.group(2) or 1)))
    return LorenzVector(tuple(pairs))
