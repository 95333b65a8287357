"""Exceptional sequences in the derived category and their mutations.

A sequence (E_1, ..., E_r) of stalk objects is exceptional when the
underlying module sequence is: Hom and Ext^1 vanish from later to earlier
terms.  Right mutation replaces the adjacent pair (E_i, E_{i+1}) by
(E_{i+1}, E_i*) through the approximation triangle; the composite mu_rev
of n(n-1)/2 right mutations carries silting sequences to configuration
sequences and back.

Positions are 1-based throughout, matching the operator subscripts:
mutate(seq, i, ...) acts on the pair at positions (i, i+1).
"""
from __future__ import annotations

import enum
from typing import Iterable, Iterator

from .derived import DObj, class_of, hom_dim, nu_inv, object_of_class, shift
from .roots import RootSystemData, vec_scale, vec_sub

ExcSeq = tuple[DObj, ...]


class MutationSign(enum.Enum):
    """Classification of one mutation by the degree of its approximation.

    The unique p with Hom(E_i, E_{i+1}[p]) nonzero puts the approximation
    triangle in the normal form with index j = p - 1; the mutation is
    negative when j < 0 and non-negative when j >= 0.  When the pair is
    orthogonal there is no approximation and no sign.
    """

    NEGATIVE = "negative"
    NONNEGATIVE = "nonnegative"
    ORTHOGONAL = "orthogonal"


class MutationError(RuntimeError):
    """An internal consistency failure: mutation produced a non-root class,
    an ambiguous degree, or an output violating a theorem-backed postcondition."""


def _module(x: DObj) -> DObj:
    return DObj(x.rs, x.root, 0) if x.degree else x


def _module_orthogonal(later: DObj, earlier: DObj) -> bool:
    """Hom and Ext^1 vanish from later to earlier on underlying modules."""
    a, b = _module(later), _module(earlier)
    return hom_dim(a, b) == 0 and hom_dim(a, shift(b, 1)) == 0


def is_exceptional(items: Iterable[DObj]) -> bool:
    """Whether the list of objects forms an exceptional sequence."""
    seq = tuple(items)
    for j in range(len(seq)):
        for i in range(j):
            if not _module_orthogonal(seq[j], seq[i]):
                return False
    return True


def _approximation(a: DObj, b: DObj) -> tuple[int, int] | None:
    """The unique (p, r) with r = dim Hom(a, b[p]) nonzero, or None.

    Stalk objects interact in at most two consecutive shifts, and for an
    exceptional pair at most one of them is nonzero.
    """
    base = a.degree - b.degree
    hits = []
    for p in (base, base + 1):
        r = hom_dim(a, shift(b, p))
        if r:
            hits.append((p, r))
    if not hits:
        return None
    if len(hits) > 1:
        raise MutationError(
            f"pair ({a!r}, {b!r}) interacts in two shifts; sequence not exceptional"
        )
    return hits[0]


def mutate(seq: ExcSeq, i: int, direction: str = "right") -> tuple[ExcSeq, MutationSign]:
    """Mutate the exceptional pair at positions (i, i+1), 1-based.

    Right mutation sends (E_i, E_{i+1}) to (E_{i+1}, E_i*); left mutation
    sends it to (E_{i+1}^!, E_i).  The new object is pinned down by its
    class in K_0 together with a two-degree hint, which the sign parity of
    the class resolves uniquely.  The caller must pass an exceptional
    sequence; internal failures raise MutationError.
    """
    seq = tuple(seq)
    if not 1 <= i <= len(seq) - 1:
        raise ValueError(f"mutation position {i} out of range 1..{len(seq) - 1}")
    if direction not in ("right", "left"):
        raise ValueError(f"direction must be 'right' or 'left', not {direction!r}")
    a, b = seq[i - 1], seq[i]
    rs = a.rs
    approx = _approximation(a, b)
    if approx is None:
        pair = (b, a)
        sign = MutationSign.ORTHOGONAL
    else:
        p, r = approx
        sign = MutationSign.NEGATIVE if p <= 0 else MutationSign.NONNEGATIVE
        if direction == "right":
            cls = vec_sub(class_of(a), vec_scale(r, class_of(shift(b, p))))
            new = object_of_class(rs, cls, (a.degree, a.degree - 1))
            pair = (b, new)
        else:
            cls = vec_sub(class_of(b), vec_scale(r, class_of(shift(a, -p))))
            new = object_of_class(rs, cls, (b.degree, b.degree + 1))
            pair = (new, a)
    return seq[: i - 1] + pair + seq[i + 1 :], sign


# ---------------------------------------------------------------------------
# The reversal composite mu_rev.
# ---------------------------------------------------------------------------

def mu_rev_order(n: int) -> list[int]:
    """Positions, in application order, of the standard presentation
    mu_{n-1} (mu_{n-2} mu_{n-1}) ... (mu_1 ... mu_{n-1})."""
    return [i for k in range(1, n) for i in range(n - 1, k - 1, -1)]


def mu_rev_order_alt(n: int) -> list[int]:
    """Application order of the braid-equivalent presentation
    mu_1 (mu_2 mu_1) ... (mu_{n-1} ... mu_1)."""
    return [i for k in range(n - 1, 0, -1) for i in range(1, k + 1)]


def _check_complete(seq: ExcSeq) -> RootSystemData:
    if not seq:
        raise ValueError("empty sequence")
    rs = seq[0].rs
    if len(seq) != rs.n:
        raise ValueError(
            f"complete exceptional sequence of length {rs.n} required, got {len(seq)}"
        )
    return rs


def mu_rev_steps(seq: ExcSeq, order: list[int] | None = None
                 ) -> Iterator[tuple[int, MutationSign, ExcSeq]]:
    """Drive mu_rev one right mutation at a time, yielding
    (position, sign, sequence after the step)."""
    rs = _check_complete(seq)
    if order is None:
        order = mu_rev_order(rs.n)
    current = tuple(seq)
    for i in order:
        current, sign = mutate(current, i, "right")
        yield i, sign, current


def mu_rev(seq: ExcSeq, alt_order: bool = False) -> tuple[ExcSeq, tuple[MutationSign, ...]]:
    """Apply the full reversal composite; also report the signs encountered."""
    rs = _check_complete(seq)
    order = mu_rev_order_alt(rs.n) if alt_order else mu_rev_order(rs.n)
    signs = []
    current = tuple(seq)
    for i, sign, current in mu_rev_steps(current, order):
        signs.append(sign)
    return current, tuple(signs)


def mu_rev_inverse_steps(seq: ExcSeq) -> Iterator[tuple[int, MutationSign, ExcSeq]]:
    """Drive the inverse composite: left mutations in reversed order."""
    rs = _check_complete(seq)
    current = tuple(seq)
    for i in reversed(mu_rev_order(rs.n)):
        current, sign = mutate(current, i, "left")
        yield i, sign, current


def mu_rev_inverse(seq: ExcSeq) -> tuple[ExcSeq, tuple[MutationSign, ...]]:
    """The two-sided inverse of mu_rev."""
    signs = []
    current = tuple(seq)
    for i, sign, current in mu_rev_inverse_steps(seq):
        signs.append(sign)
    return current, tuple(signs)


def rotate(seq: ExcSeq) -> ExcSeq:
    """Apply mu_{n-1} ... mu_1 and assert it equals (E_2, ..., E_n, nu^{-1} E_1)."""
    rs = _check_complete(seq)
    current = tuple(seq)
    for i in range(1, rs.n):
        current, _ = mutate(current, i, "right")
    expected = tuple(seq[1:]) + (nu_inv(seq[0]),)
    if current != expected:
        raise MutationError("rotation did not produce (E_2, ..., E_n, nu^{-1} E_1)")
    return current


# ---------------------------------------------------------------------------
# Completion and exhaustive enumeration at module level.
# ---------------------------------------------------------------------------

def _extends(cand: DObj, prefix: ExcSeq) -> bool:
    return all(_module_orthogonal(cand, e) for e in prefix)


def complete_sequence(partial: Iterable[DObj]) -> ExcSeq:
    """Extend a module-level exceptional sequence to a complete one by
    appending, deterministically in the stored root order.

    Objects in nonzero degrees are first normalized to degree 0; existence
    of a completion is guaranteed, so failure raises MutationError.
    """
    seq = tuple(_module(x) for x in partial)
    if seq and not is_exceptional(seq):
        raise ValueError("partial sequence is not exceptional")
    if seq and len(seq) > seq[0].rs.n:
        raise ValueError("sequence longer than the rank")
    if not seq:
        raise ValueError("cannot complete an empty sequence without a root system")
    rs = seq[0].rs
    result = _complete_from(rs, seq)
    if result is None:
        raise MutationError("no completion found; exceptional-sequence data corrupt")
    return result


def _complete_from(rs: RootSystemData, seq: ExcSeq) -> ExcSeq | None:
    if len(seq) == rs.n:
        return seq
    for root in range(len(rs.positive_roots)):
        cand = DObj(rs, root, 0)
        if _extends(cand, seq):
            found = _complete_from(rs, seq + (cand,))
            if found is not None:
                return found
    return None


def enumerate_complete_sequences(rs: RootSystemData) -> list[ExcSeq]:
    """All complete exceptional sequences of modules, by depth-first search.

    Independent of the mutation machinery; used as the counting oracle
    (A2 gives 3, A3 gives 16, D4 gives 162).
    """
    out: list[ExcSeq] = []
    roots = range(len(rs.positive_roots))

    def extend(seq: ExcSeq) -> None:
        if len(seq) == rs.n:
            out.append(seq)
            return
        for root in roots:
            cand = DObj(rs, root, 0)
            if _extends(cand, seq):
                extend(seq + (cand,))

    extend(())
    return out
