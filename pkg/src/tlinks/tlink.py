"""T-links, T^n-links and generalised T-links, and the rewrites between them.

Conventions used throughout:

* ``TLinkParams``: T((r_1,s_1),...,(r_k,s_k)), closure of the product of
  ``(sigma_1 ... sigma_{r_i-1})^{s_i}`` on r_k strands.
* ``TnLinkParams``: T^n((r_1,s_1),...,(r_k,s_k),(r_last; d)). ``n`` counts
  half twists on the last r_last of d + r_last strands; the blocks sit
  after d untouched strands.
* ``GenTLinkParams``: T((r_1,s_1),...,(r_k,s_k),(r_{k+1},s_{k+1}), d) where
  only the last exponent may be negative.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .braidcore import BraidWord, concat, delta_power, destabilize, shift, torus_block
from .lorenz import LorenzVector, lorenz_braid

Pair = tuple[int, int]


def _pairs(raw) -> tuple[Pair, ...]:
    return tuple((int(r), int(s)) for r, s in raw)


def _check_increasing(pairs: tuple[Pair, ...]) -> None:
    for r, s in pairs:
        if r < 2 or s < 1:
            raise ValueError(f"need r >= 2 and s >= 1, got ({r}, {s})")
    if any(a[0] >= b[0] for a, b in zip(pairs, pairs[1:])):
        raise ValueError(f"radii must strictly increase: {pairs}")


@dataclass(frozen=True)
class TLinkParams:
    """An empty ``pairs`` tuple stands for the trivial (unknot/unlink) case."""

    pairs: tuple[Pair, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "pairs", _pairs(self.pairs))
        _check_increasing(self.pairs)

    @property
    def is_empty(self) -> bool:
        return not self.pairs

    def vector(self) -> LorenzVector:
        """The Lorenz vector with the same parameters."""
        return LorenzVector(self.pairs)

    def __str__(self):
        return "T(" + ",".join(f"({r},{s})" for r, s in self.pairs) + ")"


@dataclass(frozen=True)
class TnLinkParams:
    n: int
    pairs: tuple[Pair, ...]
    r_last: int
    d: int = 0

    def __post_init__(self):
        object.__setattr__(self, "pairs", _pairs(self.pairs))
        _check_increasing(self.pairs)
        if self.d < 0:
            raise ValueError("d must be nonnegative")
        if self.r_last < 1:
            raise ValueError("r_last must be at least 1")
        if self.pairs and self.pairs[-1][0] > self.r_last:
            raise ValueError(f"r_last={self.r_last} is smaller than r_k={self.pairs[-1][0]}")

    @property
    def strands(self) -> int:
        return self.d + self.r_last

    def __str__(self):
        inner = [f"({r},{s})" for r, s in self.pairs] + [f"({self.r_last};{self.d})"]
        return f"T^{{{self.n}}}(" + ",".join(inner) + ")"


@dataclass(frozen=True)
class GenTLinkParams:
    pairs: tuple[Pair, ...]
    last: Pair
    d: int = 0

    def __post_init__(self):
        object.__setattr__(self, "pairs", _pairs(self.pairs))
        object.__setattr__(self, "last", (int(self.last[0]), int(self.last[1])))
        _check_increasing(self.pairs)
        r, s = self.last
        if r < 2:
            raise ValueError("last radius must be at least 2")
        if self.pairs and self.pairs[-1][0] >= r:
            raise ValueError(f"last radius {r} must exceed r_k={self.pairs[-1][0]}")
        if s == 0:
            raise ValueError("last exponent must be nonzero")
        if self.d < 0:
            raise ValueError("d must be nonnegative")

    @property
    def strands(self) -> int:
        return self.d + self.last[0]

    def __str__(self):
        inner = [f"({r},{s})" for r, s in self.pairs + (self.last,)]
        return "T(" + ",".join(inner) + f";d={self.d})"


@dataclass(frozen=True)
class TrivialDescriptor:
    """The unlink with ``components`` components."""

    components: int

    def braid(self) -> BraidWord:
        return BraidWord(self.components)

    def __str__(self):
        return f"unlink({self.components})"


# -- braid builders ---------------------------------------------------------


def tlink_braid(t: TLinkParams) -> BraidWord:
    if t.is_empty:
        return BraidWord(1)
    n = t.pairs[-1][0]
    return concat(n, *(torus_block(r, s, 0, n) for r, s in t.pairs))


def gen_tlink_braid(g: GenTLinkParams) -> BraidWord:
    n = g.strands
    blocks = [torus_block(r, s, g.d, n) for r, s in g.pairs + (g.last,)]
    return concat(n, *blocks)


def tn_link_braid(t: TnLinkParams) -> BraidWord:
    n = t.strands
    blocks = [torus_block(r, s, t.d, n) for r, s in t.pairs]
    return concat(n, *blocks, delta_power(n, t.r_last, t.n))


def lorenz_like_braid(v: LorenzVector, n: int, d: int = 0, d_prime: int = 0) -> BraidWord:
    """Lorenz braid of ``v`` with n half twists on its last d_k + d strands.

    ``d`` adds loops inside the twisted strip, ``d_prime`` adds loops
    parallel to the left boundary (untouched strands on the left).
    """
    core = lorenz_braid(v)
    total = d_prime + core.strands + d
    twist = delta_power(total, v.width + d, n)
    return concat(total, shift(core, d_prime, total), twist)


# -- the strand-reduction engine --------------------------------------------


@dataclass(frozen=True)
class RewriteState:
    """The braid ``lorenz_braid(vector) * beta * tail`` on ``beta.strands`` strands."""

    vector: LorenzVector
    beta: BraidWord
    tail: BraidWord

    def __post_init__(self):
        if self.beta.strands != self.tail.strands:
            raise ValueError("beta and tail must share a strand count")
        if self.vector.strands > self.beta.strands:
            raise ValueError(
                f"vector needs {self.vector.strands} strands, braid has {self.beta.strands}"
            )

    @property
    def strands(self) -> int:
        return self.beta.strands

    def braid(self) -> BraidWord:
        n = self.strands
        return concat(n, lorenz_braid(self.vector).widen(n), self.beta, self.tail)


def _min_index(*words: BraidWord) -> int:
    return min((abs(e) for w in words for e in w.letters), default=10**9)


def prop1_step(state: RewriteState) -> RewriteState:
    """Remove one strand from the first Lorenz block.

    (d_k,s_k)...(d_1,s_1) beta  ~  (d_k,s_k)...(d_1,s_1-1) beta' (sigma_p ... sigma_{p+d_1-2})

    where p = s_1 + ... + s_k, beta' is beta with indices lowered by one and
    the result has one strand fewer. ``tail`` is carried along as part of beta.
    """
    v = state.vector
    if not v.pairs:
        raise ValueError("empty Lorenz vector")
    (d1, s1), rest = v.pairs[0], v.pairs[1:]
    if not rest and s1 == 1:
        raise ValueError("need k > 1 or s_1 > 1; use lemma1_reduce")
    p = v.p
    if _min_index(state.beta, state.tail) <= p:
        raise ValueError(f"beta and tail must avoid generators sigma_1..sigma_{p}")
    new_pairs = ((d1, s1 - 1),) + rest if s1 > 1 else rest
    n = state.strands - 1
    run = BraidWord(n, tuple(range(p, p + d1 - 1)))
    return RewriteState(
        LorenzVector(new_pairs),
        shift(state.beta, -1, n),
        concat(n, shift(state.tail, -1, n), run),
    )


@dataclass(frozen=True)
class BlockReduction:
    beta_prime: BraidWord
    runs: BraidWord

    def braid(self) -> BraidWord:
        return self.beta_prime + self.runs


def lemma1_reduce(d1: int, s1: int, beta: BraidWord) -> BlockReduction:
    """(d_1, s_1) beta  ~  beta' (sigma_1 ... sigma_{d_1-1})^{s_1}, beta' = beta lowered by s_1.

    Runs s_1 - 1 single-strand reductions, destabilizes on the left and
    rotates the leading run to the end.
    """
    v = LorenzVector(((d1, s1),))
    if beta.strands < s1 + d1:
        raise ValueError(f"beta needs at least {s1 + d1} strands")
    if _min_index(beta) <= s1:
        raise ValueError(f"beta must avoid generators sigma_1..sigma_{s1}")
    state = RewriteState(v, beta, BraidWord(beta.strands))
    for _ in range(s1 - 1):
        state = prop1_step(state)
    # now (sigma_1 ... sigma_{d1}) beta_{s1-1} (sigma_2 ... sigma_{d1})^{s1-1}
    reduced = destabilize(state.braid(), "left")
    rotated = reduced.rotate(d1 - 1)
    n = rotated.strands
    k = len(beta)
    beta_prime = BraidWord(n, rotated.letters[:k])
    runs = BraidWord(n, rotated.letters[k:])
    assert beta_prime == shift(beta, -s1, n)
    return BlockReduction(beta_prime, runs)


def prop2_normalize(v: LorenzVector, beta: BraidWord | None = None) -> BraidWord:
    """Rewrite the Lorenz braid of ``v`` followed by ``beta`` into T-link form.

    Output: (sigma_1...sigma_{d_1-1})^{s_1} ... (sigma_1...sigma_{d_k-1})^{s_k} beta'
    on (strands - p) strands, beta' = beta lowered by p.
    """
    if beta is None:
        beta = BraidWord(v.strands)
    if not v.pairs:
        return beta
    p = v.p
    if beta.strands < v.strands:
        raise ValueError(f"beta needs at least {v.strands} strands")
    if _min_index(beta) <= p:
        raise ValueError(f"beta must avoid generators sigma_1..sigma_{p}")
    state = RewriteState(v, beta, BraidWord(beta.strands))
    for _ in range(p - v.pairs[-1][1]):
        state = prop1_step(state)
    (dk, sk), = state.vector.pairs
    lem = lemma1_reduce(dk, sk, state.beta + state.tail)
    out = lem.braid()
    k = len(beta)
    return out.rotate(k)


# -- conversions -----------------------------------------------------------


def lorenz_like_to_tn(v: LorenzVector, n: int, d: int = 0, d_prime: int = 0) -> TnLinkParams:
    """T^n((d_1,s_1),...,(d_k,s_k),(d_k + d; d')). The empty vector has width 1."""
    return TnLinkParams(n, v.pairs, v.width + d, d_prime)


def associated_lorenz(t: TnLinkParams) -> TLinkParams:
    """Drop the twist: the T-link on the same pairs (empty when there are none)."""
    return TLinkParams(t.pairs)


def gen_to_tn(g: GenTLinkParams, n: int) -> TnLinkParams:
    """T(..., (r, s), d) = T^{2n}(..., (r, s - n r), (r; d)) when s >= n r."""
    r, s = g.last
    residual = s - n * r
    if residual < 0:
        raise ValueError(f"need s_(k+1) >= n r_(k+1), got {s} < {n * r}")
    pairs = g.pairs + (((r, residual),) if residual else ())
    return TnLinkParams(2 * n, pairs, r, g.d)


def tn_to_gen(t: TnLinkParams) -> GenTLinkParams | TrivialDescriptor:
    """Express a T^{2n}-link as a generalised T-link (or an unlink).

    The full twists on the last r_last strands equal (sigma...)^{n r_last};
    they merge with a last block of the same radius or become a new last block.
    """
    if t.n % 2:
        raise ValueError("only even twist counts convert to generalised T-links")
    m = t.n // 2
    rl, d = t.r_last, t.d
    if not t.pairs:
        if rl == 1:
            return GenTLinkParams((), (2, 1), d)
        if m == 0:
            return TrivialDescriptor(d + rl)
        return GenTLinkParams((), (rl, m * rl), d)
    *head, (rk, sk) = t.pairs
    head = tuple(head)
    if rk == rl:
        merged = sk + m * rk
        if merged:
            return GenTLinkParams(head, (rk, merged), d)
        if head:
            # strands right of the new last block are split unknots; move them left
            return GenTLinkParams(head[:-1], head[-1], d + rl - head[-1][0])
        return TrivialDescriptor(d + rl)
    if m == 0:
        # no twist: the strands right of r_k are split unknots, moved to the left
        return GenTLinkParams(head, (rk, sk), d + rl - rk)
    return GenTLinkParams(t.pairs, (rl, m * rl), d)


def _merge_equal_radii(pairs: list[Pair]) -> tuple[Pair, ...]:
    out: list[Pair] = []
    for r, s in pairs:
        if out and out[-1][0] == r:
            out[-1] = (r, out[-1][1] + s)
        else:
            out.append((r, s))
    return tuple(out)


def normalize_last_exponent(t: TLinkParams) -> TLinkParams:
    """Destabilize a final block with s_k = 1 into T(..., (r_{k-1}, s_{k-1} + 1))."""
    if t.is_empty or t.pairs[-1][1] > 1:
        return t
    if len(t.pairs) == 1:
        raise ValueError(f"{t} is the unknot; it has no T-link form with s_k > 1")
    *head, (r_prev, s_prev), _ = t.pairs
    return TLinkParams(tuple(head) + ((r_prev, s_prev + 1),))


def alt_trip_family(t: TLinkParams, n: int, r_prime: int) -> TnLinkParams:
    """T^{2n}((r_1,s_1),...,(r_k,s_k-1),(r',1-n r'),(r'; 0)), equal to T for n < 0.

    Adjacent pairs of equal radius (r' = r_k) are merged; the braid word is
    unchanged by this.
    """
    if n >= 0:
        raise ValueError("n must be negative")
    if t.is_empty:
        raise ValueError("empty T-link")
    t = normalize_last_exponent(t)
    *head, (rk, sk) = t.pairs
    if r_prime < rk:
        raise ValueError(f"r' must be at least r_k = {rk}")
    pairs = list(head) + [(rk, sk - 1), (r_prime, 1 - n * r_prime)]
    return TnLinkParams(2 * n, _merge_equal_radii(pairs), r_prime, 0)


def tlink_as_gen(t: TLinkParams, d: int = 0) -> GenTLinkParams:
    """View a nonempty T-link as a generalised T-link with its last pair as the tail."""
    if t.is_empty:
        raise ValueError("empty T-link")
    return GenTLinkParams(t.pairs[:-1], t.pairs[-1], d)
