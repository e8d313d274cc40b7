"""Braid words, their permutations, twist blocks and closure diagrams.

A braid word lives on a fixed number of strands. Letter ``e > 0`` is the
generator sigma_e and ``e < 0`` its inverse; letters are read left to right,
top to bottom. A positive letter is a positive crossing of the closure.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Sequence


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(int(e) for e in self.letters))
        if self.strands < 1:
            raise ValueError(f"a braid needs at least one strand, got {self.strands}")
        for e in self.letters:
            if e == 0 or abs(e) >= self.strands:
                raise ValueError(f"letter {e} out of range for {self.strands} strands")

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __str__(self) -> str:
        return f"strands: {self.strands}\n" + " ".join(map(str, self.letters))

    @property
    def writhe(self) -> int:
        """Exponent sum, i.e. the writhe of the closure diagram."""
        return sum(1 if e > 0 else -1 for e in self.letters)

    @property
    def is_positive(self) -> bool:
        return all(e > 0 for e in self.letters)

    def inverse(self) -> "BraidWord":
        return BraidWord(self.strands, tuple(-e for e in reversed(self.letters)))

    def mirror(self) -> "BraidWord":
        return BraidWord(self.strands, tuple(-e for e in self.letters))

    def rotate(self, k: int) -> "BraidWord":
        """Cyclic rotation: move the first ``k`` letters to the end (a conjugation)."""
        if not self.letters:
            return self
        k %= len(self.letters)
        return BraidWord(self.strands, self.letters[k:] + self.letters[:k])

    def widen(self, strands: int) -> "BraidWord":
        """Same letters on more strands (extra strands added on the right)."""
        return shift(self, 0, strands)

    def __add__(self, other: "BraidWord") -> "BraidWord":
        return compose(self, other)


@dataclass(frozen=True)
class Permutation:
    """``image[i-1]`` is the bottom position reached by the strand entering at top position ``i``."""

    image: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "image", tuple(int(i) for i in self.image))
        if sorted(self.image) != list(range(1, len(self.image) + 1)):
            raise ValueError(f"not a permutation of 1..{len(self.image)}: {self.image}")

    @property
    def size(self) -> int:
        return len(self.image)

    def cycles(self) -> list[tuple[int, ...]]:
        """Cycles in order of their smallest element, each starting there."""
        seen = set()
        out = []
        for start in range(1, self.size + 1):
            if start in seen:
                continue
            cyc = []
            i = start
            while i not in seen:
                seen.add(i)
                cyc.append(i)
                i = self.image[i - 1]
            out.append(tuple(cyc))
        return out

    def inversions(self) -> int:
        im = self.image
        return sum(1 for a in range(len(im)) for b in range(a + 1, len(im)) if im[a] > im[b])

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))


@dataclass(frozen=True)
class Crossing:
    """Four edge labels counterclockwise from the incoming under-strand, plus the sign."""

    a: int
    b: int
    c: int
    d: int
    sign: int

    @property
    def labels(self) -> tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.d)


@dataclass(frozen=True)
class PDCode:
    crossings: tuple[Crossing, ...]
    free_loops: int = 0

    def __post_init__(self):
        object.__setattr__(self, "crossings", tuple(self.crossings))
        if self.free_loops < 0:
            raise ValueError("free_loops must be nonnegative")
        counts: dict[int, int] = {}
        for x in self.crossings:
            for lab in x.labels:
                counts[lab] = counts.get(lab, 0) + 1
        bad = [lab for lab, n in counts.items() if n != 2]
        if bad:
            raise ValueError(f"edge labels must occur exactly twice: {sorted(bad)}")

    def __len__(self) -> int:
        return len(self.crossings)

    @property
    def writhe(self) -> int:
        return sum(x.sign for x in self.crossings)

    def to_json(self) -> str:
        data = {
            "crossings": [[x.a, x.b, x.c, x.d, x.sign] for x in self.crossings],
            "free_loops": self.free_loops,
        }
        return json.dumps(data, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "PDCode":
        data = json.loads(text)
        crossings = tuple(Crossing(*row) for row in data["crossings"])
        return cls(crossings, int(data.get("free_loops", 0)))


def make_braid(strands: int, letters: Iterable[int]) -> BraidWord:
    return BraidWord(int(strands), tuple(letters))


def compose(b1: BraidWord, b2: BraidWord) -> BraidWord:
    if b1.strands != b2.strands:
        raise ValueError(f"strand counts differ: {b1.strands} vs {b2.strands}")
    return BraidWord(b1.strands, b1.letters + b2.letters)


def concat(strands: int, *words: BraidWord | Sequence[int]) -> BraidWord:
    """Juxtapose several words (or raw letter lists) on ``strands`` strands."""
    letters: list[int] = []
    for w in words:
        letters.extend(w.letters if isinstance(w, BraidWord) else w)
    return BraidWord(strands, tuple(letters))


def shift(b: BraidWord, offset: int, new_strands: int) -> BraidWord:
    """Add ``offset`` (possibly negative) to every generator index."""
    letters = []
    for e in b.letters:
        idx = abs(e) + offset
        if not 1 <= idx <= new_strands - 1:
            raise ValueError(f"letter {e} shifted by {offset} leaves 1..{new_strands - 1}")
        letters.append(idx if e > 0 else -idx)
    return BraidWord(new_strands, tuple(letters))


def underlying_permutation(b: BraidWord) -> Permutation:
    # where[s] = current position of the strand that entered at s
    pos_to_strand = list(range(1, b.strands + 1))
    for e in b.letters:
        i = abs(e) - 1
        pos_to_strand[i], pos_to_strand[i + 1] = pos_to_strand[i + 1], pos_to_strand[i]
    image = [0] * b.strands
    for pos, strand in enumerate(pos_to_strand, start=1):
        image[strand - 1] = pos
    return Permutation(tuple(image))


def component_count(b: BraidWord) -> int:
    return len(underlying_permutation(b).cycles())


def delta_power(total_strands: int, width: int, halftwists: int) -> BraidWord:
    """``halftwists`` copies of the half twist on the last ``width`` of ``total_strands`` strands."""
    a, b, n = total_strands, width, halftwists
    if b > a:
        raise ValueError(f"twist width {b} exceeds strand count {a}")
    if b < 1:
        raise ValueError("twist width must be positive")
    if b == 1 or n == 0:
        return BraidWord(a)
    lo = a - b + 1
    if n > 0:
        # (s_lo ... s_{a-1})(s_lo ... s_{a-2}) ... (s_lo)
        one = [i for top in range(a - 1, lo - 1, -1) for i in range(lo, top + 1)]
    else:
        # (s_{a-1}^-1 ... s_lo^-1)(s_{a-1}^-1 ... s_{lo+1}^-1) ... (s_{a-1}^-1)
        one = [-i for bottom in range(lo, a) for i in range(a - 1, bottom - 1, -1)]
    return BraidWord(a, tuple(one * abs(n)))


def torus_block(r: int, s: int, d: int, total_strands: int) -> BraidWord:
    """``(sigma_{1+d} ... sigma_{d+r-1})^s``; negative ``s`` uses the descending inverse run."""
    if r < 2:
        raise ValueError(f"block radius must be at least 2, got {r}")
    if d < 0:
        raise ValueError("offset d must be nonnegative")
    if d + r > total_strands:
        raise ValueError(f"block needs {d + r} strands, only {total_strands} available")
    if s >= 0:
        run = list(range(1 + d, d + r))
    else:
        run = [-i for i in range(d + r - 1, d, -1)]
    return BraidWord(total_strands, tuple(run * abs(s)))


def free_reduce(b: BraidWord) -> BraidWord:
    """Cancel adjacent ``e, -e`` pairs. Never applied implicitly."""
    stack: list[int] = []
    for e in b.letters:
        if stack and stack[-1] == -e:
            stack.pop()
        else:
            stack.append(e)
    return BraidWord(b.strands, tuple(stack))


def destabilize(b: BraidWord, side: str = "right", allow_negative: bool = False) -> BraidWord:
    """Markov destabilization at an outer strand crossed by exactly one letter.

    ``right`` removes the single sigma_{n-1}; ``left`` removes the single
    sigma_1 and renumbers the remaining letters down by one. Removing the
    letter in place is valid because a single occurrence can be rotated to
    the end of the word by conjugation.
    """
    if side not in ("left", "right"):
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    if b.strands < 2:
        raise ValueError("cannot destabilize a one-strand braid")
    target = 1 if side == "left" else b.strands - 1
    hits = [k for k, e in enumerate(b.letters) if abs(e) == target]
    if len(hits) != 1:
        raise ValueError(f"sigma_{target} occurs {len(hits)} times; need exactly one")
    k = hits[0]
    if b.letters[k] < 0 and not allow_negative:
        raise ValueError(f"sigma_{target} occurs negatively; pass allow_negative=True")
    rest = BraidWord(b.strands, b.letters[:k] + b.letters[k + 1:])
    if side == "right":
        return BraidWord(b.strands - 1, rest.letters)
    return shift(rest, -1, b.strands - 1)


def closure_pd(b: BraidWord) -> PDCode:
    """PD code of the braid closure, strands oriented top to bottom.

    Edges are numbered 1, 2, ... in the order met while walking each
    component along its orientation, components taken by smallest top
    position. For sigma_i with incoming edges l (position i), r (position
    i+1) and outgoing edges l', r': a positive letter gives
    ``[l, l', r', r]`` (r passes over to l'), a negative letter gives
    ``[r, l, l', r']`` (l passes over to r').
    """
    n = b.strands
    next_edge = n
    top = list(range(n))
    cur = list(range(n))
    raw: list[tuple[int, int, int, int, int]] = []  # (l, r, l', r', sign)
    succ: dict[int, int] = {}
    touched = [False] * n
    for e in b.letters:
        i = abs(e) - 1
        touched[i] = touched[i + 1] = True
        l, r = cur[i], cur[i + 1]
        lo, ro = next_edge, next_edge + 1
        next_edge += 2
        raw.append((l, r, lo, ro, 1 if e > 0 else -1))
        succ[l] = ro
        succ[r] = lo
        cur[i], cur[i + 1] = lo, ro

    # the bottom edge at each position is the same edge as the top edge there
    glue = {cur[j]: top[j] for j in range(n) if touched[j]}

    def canon(edge: int) -> int:
        return glue.get(edge, edge)

    label: dict[int, int] = {}
    counter = 0
    for j in range(n):
        if not touched[j] or top[j] in label:
            continue
        e = top[j]
        while e not in label:
            counter += 1
            label[e] = counter
            e = canon(succ[e])

    crossings = []
    for l, r, lo, ro, sign in raw:
        L, R, Lo, Ro = (label[canon(x)] for x in (l, r, lo, ro))
        if sign > 0:
            crossings.append(Crossing(L, Lo, Ro, R, 1))
        else:
            crossings.append(Crossing(R, L, Lo, Ro, -1))
    return PDCode(tuple(crossings), free_loops=touched.count(False))


def parse_braid_text(text: str) -> BraidWord:
    """Parse the two-line text format ``strands: N`` / signed letters."""
    lines = [ln.strip() for ln in text.strip().splitlines() if ln.strip()]
    if not lines or not lines[0].lower().startswith("strands:"):
        raise ValueError("first line must be 'strands: N'")
    strands = int(lines[0].split(":", 1)[1])
    letters = [int(tok) for ln in lines[1:] for tok in ln.split()]
    return BraidWord(strands, tuple(letters))


def format_braid_text(b: BraidWord) -> str:
    return str(b) + "\n"
