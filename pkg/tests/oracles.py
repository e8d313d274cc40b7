"""Independent reference computations for the test suite.

These deliberately avoid the package's own algorithms: permutations are
composed as functions, itineraries are ordered with the ``st < ts`` rule for
periodic words, and Jones polynomials come from a table of standard knots.
"""

from __future__ import annotations

from functools import cmp_to_key
from itertools import groupby

from tlinks.laurent import LaurentPoly


def permutation_by_composition(strands: int, letters) -> tuple[int, ...]:
    """Follow each strand through the word one letter at a time."""
    image = []
    for start in range(1, strands + 1):
        pos = start
        for e in letters:
            i = abs(e)
            if pos == i:
                pos = i + 1
            elif pos == i + 1:
                pos = i
        image.append(pos)
    return tuple(image)


def cycle_count(image) -> int:
    seen, count = set(), 0
    for s in range(1, len(image) + 1):
        if s in seen:
            continue
        count += 1
        while s not in seen:
            seen.add(s)
            s = image[s - 1]
    return count


def inversions(image) -> int:
    return sum(a > b for i, a in enumerate(image) for b in image[i + 1:])


def _periodic_cmp(u: str, v: str) -> int:
    # u^inf < v^inf  iff  uv < vu
    a, b = u + v, v + u
    return (a > b) - (a < b)


def lorenz_permutation_by_itineraries(words: list[str]) -> tuple[tuple[int, ...], int]:
    """Sort all rotations of all words as infinite periodic sequences."""
    points = [(w[i:] + w[:i], wi, i) for wi, w in enumerate(words) for i in range(len(w))]
    order = sorted(points, key=cmp_to_key(lambda a, b: _periodic_cmp(a[0], b[0]) or (a[1] > b[1]) - (a[1] < b[1])))
    rank = {(wi, i): r for r, (_, wi, i) in enumerate(order, start=1)}
    image = [0] * len(order)
    for (wi, i), r in rank.items():
        image[r - 1] = rank[(wi, (i + 1) % len(words[wi]))]
    p = sum(1 for s, _, _ in order if s[0] == "x")
    return tuple(image), p


def word_period(word: str) -> int:
    """Number of x-runs in a cyclic word, i.e. its syllable count."""
    runs = [ch for ch, _ in groupby(word)]
    if runs[0] == runs[-1] and len(runs) > 1:
        runs = runs[1:]
    return runs.count("x")


def _t(pairs: dict[int, int]) -> LaurentPoly:
    """Polynomial in t = A^-4."""
    return LaurentPoly({-4 * e: c for e, c in pairs.items()})


# Jones polynomials of right-handed / positive closures, in t
KNOWN_JONES = {
    "unknot": LaurentPoly({0: 1}),
    "trefoil": _t({1: 1, 3: 1, 4: -1}),
    "figure_eight": _t({-2: 1, -1: -1, 0: 1, 1: -1, 2: 1}),
    "cinquefoil": _t({2: 1, 4: 1, 5: -1, 6: 1, 7: -1}),
    "torus_3_4": _t({3: 1, 5: 1, 8: -1}),
    # -t^(1/2) - t^(5/2)
    "hopf": LaurentPoly({-2: -1, -10: -1}),
}
