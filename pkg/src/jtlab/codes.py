"""Branch labels, hook codes, and the classification of complete
intersection Jordan types (CIJT).

A partition P with diagonal lengths T = (1,2,...,d^k,...,2,1) is obtained
from the basic triangle of all monomials of degree < d by attaching d+1
branches: vertical ones below a gap, horizontal ones above it (two gaps when
k = 1).  The branch label records the branch lengths, with the gap written
as the sentinel E; when k >= 2 every branch carries k-2 extra "thickening"
boxes not counted in the label.

P is CIJT exactly when its power form satisfies p_{i-1} = n_{i-1} + n_i + p_i
for every i, equivalently when P has d or d+k-1 parts.  CIJT partitions are
parametrized by ordered partitions (compositions) of n in [0, d] (k >= 2) or
[0, d-1] (k = 1).

A difference-one hook of P is a hook of the Ferrers diagram whose arm
exceeds its leg by exactly one; the hook code counts these by the degree of
the hand monomial.  The total count is the dimension of the affine cell of
ideals whose initial ideal is the monomial ideal complementary to P.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    InternalInconsistency,
    InvalidLabel,
    NotCIJT,
    NotCIJTWithDParts,
    ParseError,
)
from .partitions import HilbertFunction, Partition, diagonal_lengths

__all__ = [
    "E",
    "BranchLabel",
    "HookCode",
    "partition_to_branch_label",
    "branch_label_to_partition",
    "enumerate_branch_labels",
    "enumerate_diagonal_partitions",
    "is_cijt",
    "enumerate_cijt",
    "compositions",
    "hook_counts_by_degree",
    "hook_code_direct",
    "hook_code_from_label",
    "cell_dimension",
    "iota",
]


class _Gap:
    """Sentinel for an omitted attachment point in a branch label."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "E"

    def __deepcopy__(self, memo):
        return self


E = _Gap()


class BranchLabel:
    """A (d+1)-tuple over {E, 1..d} (k >= 2) or {E, E, 1..d-1} (k = 1)."""

    __slots__ = ("entries",)

    def __init__(self, entries):
        if isinstance(entries, str):
            entries = [piece.strip() for piece in entries.split(",")]
        elif isinstance(entries, BranchLabel):
            entries = entries.entries
        clean = []
        for e in entries:
            if e is E or e in ("E", "e"):
                clean.append(E)
                continue
            try:
                value = int(e)
            except (TypeError, ValueError):
                raise ParseError(f"bad branch label entry {e!r}") from None
            clean.append(E if value == 0 else value)  # 0 is the gap too
        if not clean:
            raise ParseError("empty branch label")
        object.__setattr__(self, "entries", tuple(clean))

    def __setattr__(self, name, value):
        raise AttributeError("BranchLabel is immutable")

    @property
    def gaps(self):
        """Positions of the E entries."""
        return tuple(i for i, e in enumerate(self.entries) if e is E)

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def __eq__(self, other):
        return isinstance(other, BranchLabel) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __str__(self):
        return ",".join("E" if e is E else str(e) for e in self.entries)

    def __repr__(self):
        return f"BranchLabel({str(self)!r})"


def _column_lengths(P):
    """Column lengths of the Ferrers diagram, indexed by x-exponent."""
    cols = [0] * P.parts[0]
    for p in P.parts:
        for m in range(p):
            cols[m] += 1
    return cols


def _gap_positions(P, d):
    """x-exponents m in [0, d] with no cell of the diagram at x^m y^(d-m)."""
    gaps = []
    for m in range(d + 1):
        r = d - m  # 0-based row of the degree-d cell in column m
        present = r < len(P.parts) and P.parts[r] > m
        if not present:
            gaps.append(m)
    return gaps


def partition_to_branch_label(P):
    """The branch label of a partition with CI-shaped diagonal lengths.

    Vertical attachment lengths are read off the columns left of the (last)
    gap, horizontal ones off the rows above it, each reduced by the
    thickening offset s = max(0, k-2).
    """
    P = Partition(P)
    T = HilbertFunction(diagonal_lengths(P))
    d, k = T.d, T.k
    s = max(0, k - 2)
    cols = _column_lengths(P)
    gaps = _gap_positions(P, d)

    def col_len(m):
        return cols[m] if m < len(cols) else 0

    def row_len(r):  # 1-based
        return P.parts[r - 1] if r <= len(P.parts) else 0

    entries = [None] * (d + 1)
    if k >= 2:
        assert len(gaps) == 1
        e = gaps[0]
        entries[e] = E
        for i in range(e):
            entries[i] = col_len(i) - (d - i) - s
        for i in range(e + 1, d + 1):
            entries[i] = row_len(i - e) - (d - i + e + 1) - s
    else:
        assert len(gaps) == 2
        v, h = gaps
        entries[v] = entries[h] = E
        for i in range(v + 1, h):
            entries[i] = i - v
        for i in range(v):
            entries[i] = col_len(i) - (d - i)
        for i in range(h + 1, d + 1):
            entries[i] = row_len(i - h) - (d - i + h + 1)
    label = BranchLabel(entries)
    _validate_label(label, T)
    return label


def _segments(label, T):
    """Split a valid-shaped label into (vertical, between, horizontal).

    For k >= 2 `between` is always empty.  Raises InvalidLabel when the
    entry multiset or gap count is wrong.
    """
    d, k = T.d, T.k
    entries = label.entries
    if len(entries) != d + 1:
        raise InvalidLabel(f"{label} has {len(entries)} entries, want {d + 1}")
    gaps = label.gaps
    if k >= 2:
        if len(gaps) != 1:
            raise InvalidLabel(f"{label}: need exactly one E when k >= 2")
        values = sorted(e for e in entries if e is not E)
        if values != list(range(1, d + 1)):
            raise InvalidLabel(f"{label}: entries must be a permutation of E,1..{d}")
        e = gaps[0]
        return entries[:e], (), entries[e + 1 :]
    if len(gaps) != 2:
        raise InvalidLabel(f"{label}: need exactly two E's when k = 1")
    values = sorted(e for e in entries if e is not E)
    if values != list(range(1, d)):
        raise InvalidLabel(f"{label}: entries must be E,E,1..{d - 1}")
    v, h = gaps
    return entries[:v], entries[v + 1 : h], entries[h + 1 :]


def _validate_label(label, T):
    """Interval conditions: within the vertical and horizontal segments each
    step satisfies next <= prev + 1, and for k = 1 the segment between the
    two E's is exactly 1, 2, ..., g-1."""
    vert, between, horiz = _segments(label, T)
    if T.k == 1 and list(between) != list(range(1, len(between) + 1)):
        raise InvalidLabel(f"{label}: segment between the E's must be 1,2,...")
    for segment in (vert, horiz):
        for a, b in zip(segment, segment[1:]):
            if b > a + 1:
                raise InvalidLabel(f"{label}: step {a} -> {b} rises by more than one")
    return vert, between, horiz


def branch_label_to_partition(label, T):
    """Glue the labelled branches to the basic triangle and read the rows.

    Inverse of partition_to_branch_label.
    """
    label = BranchLabel(label)
    T = HilbertFunction(T)
    _validate_label(label, T)
    d, k = T.d, T.k
    s = max(0, k - 2)
    e = label.gaps[-1]
    cells = {(r, m) for r in range(1, d + 1) for m in range(d - r + 1)}
    for i, entry in enumerate(label.entries):
        if entry is E:
            continue
        length = entry + s
        if i < e:  # vertical branch below column i
            cells.update((d - i + a, i) for a in range(1, length + 1))
        else:  # horizontal branch on row i - e
            r = i - e
            cells.update((r, d - r + a) for a in range(1, length + 1))
    nrows = max(r for r, _ in cells)
    parts = []
    for r in range(1, nrows + 1):
        row = {m for rr, m in cells if rr == r}
        if row != set(range(len(row))):
            raise InvalidLabel(f"{label}: glued diagram is not left justified")
        parts.append(len(row))
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        raise InvalidLabel(f"{label}: glued rows are not weakly decreasing")
    P = Partition(parts)
    if diagonal_lengths(P) != T.values:
        raise InvalidLabel(f"{label}: diagram has wrong diagonal lengths")
    return P


def _interval_splits(lo, hi):
    """All divisions of the interval [lo, hi] into consecutive subintervals."""
    n = hi - lo + 1
    if n <= 0:
        yield ()
        return
    for mask in range(1 << (n - 1)):
        intervals = []
        start = lo
        for pos in range(n - 1):
            if mask >> pos & 1:
                intervals.append((start, lo + pos))
                start = lo + pos + 1
        intervals.append((start, hi))
        yield tuple(intervals)


def _arranged(verticals, horizontals):
    """Expand interval sets in their forced order: vertical intervals by
    decreasing minimum, horizontal by decreasing maximum."""
    vert = []
    for lo, hi in sorted(verticals, key=lambda iv: -iv[0]):
        vert.extend(range(lo, hi + 1))
    horiz = []
    for lo, hi in sorted(horizontals, key=lambda iv: -iv[1]):
        horiz.extend(range(lo, hi + 1))
    return vert, horiz


def enumerate_branch_labels(T):
    """All valid branch labels for T: 2*3^(d-1) of them when k >= 2,
    3^(d-1) when k = 1."""
    T = HilbertFunction(T)
    d, k = T.d, T.k
    labels = []
    if k >= 2:
        for intervals in _interval_splits(1, d):
            for mask in range(1 << len(intervals)):
                verts = [iv for b, iv in enumerate(intervals) if mask >> b & 1]
                horizs = [iv for b, iv in enumerate(intervals) if not mask >> b & 1]
                vert, horiz = _arranged(verts, horizs)
                labels.append(BranchLabel([*vert, E, *horiz]))
    else:
        for g in range(1, d + 1):
            between = list(range(1, g))
            if g == d:
                labels.append(BranchLabel([E, *between, E]))
                continue
            for intervals in _interval_splits(g, d - 1):
                for mask in range(1 << len(intervals)):
                    verts = [iv for b, iv in enumerate(intervals) if mask >> b & 1]
                    horizs = [iv for b, iv in enumerate(intervals) if not mask >> b & 1]
                    vert, horiz = _arranged(verts, horizs)
                    labels.append(BranchLabel([*vert, E, *between, E, *horiz]))
    expected = 2 * 3 ** (d - 1) if k >= 2 else 3 ** (d - 1)
    assert len(labels) == len(set(labels)) == expected
    return labels


def enumerate_diagonal_partitions(T):
    """All partitions of diagonal lengths T, via their branch labels,
    sorted by parts in descending lexicographic order (a linear extension
    of dominance)."""
    T = HilbertFunction(T)
    parts = [branch_label_to_partition(b, T) for b in enumerate_branch_labels(T)]
    assert len(parts) == len(set(parts))
    return sorted(parts, key=lambda P: P.parts, reverse=True)


def is_cijt(P):
    """Whether P occurs as the Jordan type of a linear form on a graded
    complete intersection.

    Both characterizations are computed and compared: the power-form
    equality p_{i-1} = n_{i-1} + n_i + p_i, and the part count being d or
    d+k-1.
    """
    P = Partition(P)
    T = HilbertFunction(diagonal_lengths(P))
    pf = P.power_form
    by_equality = all(
        pf[i - 1][0] == pf[i - 1][1] + pf[i][1] + pf[i][0] for i in range(1, len(pf))
    )
    by_parts = len(P) in (T.d, T.d + T.k - 1)
    if by_equality != by_parts:
        raise InternalInconsistency(
            f"{P}: equality criterion says {by_equality}, part count says {by_parts}"
        )
    return by_equality


def compositions(n):
    """Ordered partitions of n, by increasing cut bitmask; () for n = 0."""
    if n == 0:
        yield ()
        return
    for mask in range(1 << (n - 1)):
        comp = []
        run = 1
        for pos in range(n - 1):
            if mask >> pos & 1:
                comp.append(run)
                run = 1
            else:
                run += 1
        comp.append(run)
        yield tuple(comp)


def cijt_from_composition(T, comp):
    """The CIJT partition attached to an ordered partition n_1 + ... + n_c.

    Parts p_i = k - 1 + 2d - n_i - 2(n_1 + ... + n_{i-1}) with multiplicity
    n_i, followed by the rectangle (d-n)^(d-n+k-1); for k = 1 the same with
    k - 1 = 0 and rectangle (d-n)^(d-n).
    """
    T = HilbertFunction(T)
    d, k = T.d, T.k
    n = sum(comp)
    if k >= 2 and not 0 <= n <= d:
        raise NotCIJT(f"composition sums to {n}, want 0..{d}")
    if k == 1 and not 0 <= n <= d - 1:
        raise NotCIJT(f"composition sums to {n}, want 0..{d - 1}")
    parts = []
    prefix = 0
    for n_i in comp:
        p_i = (k - 1) + 2 * d - n_i - 2 * prefix
        parts.extend([p_i] * n_i)
        prefix += n_i
    if n < d:
        tail = (d - n + k - 1) if k >= 2 else (d - n)
        parts.extend([d - n] * tail)
    P = Partition(parts)
    assert diagonal_lengths(P) == T.values
    return P


def enumerate_cijt(T):
    """All CIJT partitions of diagonal lengths T: 2^d of them when k >= 2,
    2^(d-1) when k = 1.  Order: n ascending, then composition bitmask."""
    T = HilbertFunction(T)
    top = T.d if T.k >= 2 else T.d - 1
    out = []
    for n in range(top + 1):
        for comp in compositions(n):
            out.append(cijt_from_composition(T, comp))
    assert len(out) == len(set(out)) == 2**top
    assert all(is_cijt(P) for P in out)
    return out


def hook_counts_by_degree(P):
    """Count difference-one hooks by the degree of the hand monomial.

    Every cell (r, m) is the corner of one hook: the arm runs to the end of
    row r (length u = p_r - m), the leg to the bottom of column m (length
    v = number of rows at or below r longer than m).  The hook counts when
    u - v = 1; its hand is the last cell of row r, of degree r + p_r - 2
    (1-based row).
    """
    P = Partition(P)
    parts = P.parts
    counts = {}
    for r0, p in enumerate(parts):
        hand_degree = r0 + p - 1
        for m in range(p):
            arm = p - m
            leg = sum(1 for q in parts[r0:] if q > m)
            if arm - leg == 1:
                counts[hand_degree] = counts.get(hand_degree, 0) + 1
    return counts


def cell_dimension(P):
    """Total number of difference-one hooks = dimension of the affine cell
    of ideals with this initial-monomial-ideal partition."""
    return sum(hook_counts_by_degree(P).values())


@dataclass(frozen=True)
class HookCode:
    """Hook counts of a partition of CI-shaped diagonal lengths.

    traditional: counts by hand degree over the window [d, j], stored as
    ((degree, count), ...).  subscripted: the branch label with each entry
    annotated by the hook count at its branch endpoint, stored aligned with
    the label entries (None at E).
    """

    traditional: tuple
    label: BranchLabel
    subscripts: tuple
    d: int
    k: int

    def traditional_str(self, support_only=False):
        """Comma list "1_3,2_4,2_5".  With support_only the window starts at
        d+k-2, the least possible hand degree, as reference tables print it;
        degrees d..d+k-3 are identically zero (only visible when k >= 3)."""
        lo = max(self.d, self.d + self.k - 2) if support_only else self.d
        return ",".join(f"{c}_{deg}" for deg, c in self.traditional if deg >= lo)

    def subscripted_str(self):
        pieces = []
        for entry, sub in zip(self.label.entries, self.subscripts):
            pieces.append("E" if entry is E else f"{entry}_{sub}")
        return ",".join(pieces)

    def traditional_counts(self):
        return tuple(c for _, c in self.traditional)

    def total(self):
        return sum(c for _, c in self.traditional)


def parse_traditional_hook_code(text):
    """Inverse of HookCode.traditional_str: "1_3,2_4" -> ((3, 1), (4, 2))."""
    out = []
    for piece in text.split(","):
        piece = piece.strip()
        if not piece:
            continue
        count, _, degree = piece.partition("_")
        if not degree:
            raise ParseError(f"bad hook code entry {piece!r}")
        out.append((int(degree), int(count)))
    return tuple(out)


def parse_subscripted_hook_code(text):
    """Inverse of HookCode.subscripted_str: "E,2_2,1_1" -> (label, subscripts)."""
    entries = []
    subscripts = []
    for piece in text.split(","):
        piece = piece.strip()
        if piece == "E":
            entries.append(E)
            subscripts.append(None)
            continue
        value, _, sub = piece.partition("_")
        if not sub:
            raise ParseError(f"bad subscripted entry {piece!r}")
        entries.append(int(value))
        subscripts.append(int(sub))
    return BranchLabel(entries), tuple(subscripts)


def _hand_degree(value, T):
    """Degree of the endpoint of the branch labelled `value`: the branch has
    actual length value + s and ends on the diagonal of degree d-1 + length."""
    s = max(0, T.k - 2)
    return T.d - 1 + value + s


def _assemble_hook_code(label, T, subs_by_value, counts_by_degree):
    subs = tuple(
        None if entry is E else subs_by_value[entry] for entry in label.entries
    )
    window = {deg: 0 for deg in range(T.d, T.j + 1)}
    window.update(counts_by_degree)
    assert set(window) == set(range(T.d, T.j + 1)), (
        "difference-one hook hands outside [d, j]"
    )
    traditional = tuple(sorted(window.items()))
    return HookCode(
        traditional=traditional, label=label, subscripts=subs, d=T.d, k=T.k
    )


def hook_code_direct(P):
    """Hook code by scanning all cells of the Ferrers diagram."""
    P = Partition(P)
    T = HilbertFunction(diagonal_lengths(P))
    label = partition_to_branch_label(P)
    counts = hook_counts_by_degree(P)
    subs_by_value = {
        entry: counts.get(_hand_degree(entry, T), 0)
        for entry in label.entries
        if entry is not E
    }
    return _assemble_hook_code(label, T, subs_by_value, counts)


def _runs(segment):
    """Maximal ascending runs (steps of exactly +1) of a label segment."""
    runs = []
    for value in segment:
        if runs and value == runs[-1][-1] + 1:
            runs[-1].append(value)
        else:
            runs.append([value])
    return runs


def hook_code_from_label(label, T):
    """Hook code computed from the interval structure of the branch label,
    without touching the Ferrers diagram.

    Vertical runs: first entry 0 hooks, later entries 1.  Horizontal runs
    (above the gap): first entry the maximum possible -- 2, except that when
    k >= 2 the entry 1 admits only 1 -- and later entries 1.  For k = 1 the
    segment between the two E's continues the ascending run started by the
    lower gap, so all its entries get 1.
    """
    label = BranchLabel(label)
    T = HilbertFunction(T)
    vert, between, horiz = _validate_label(label, T)
    subs_by_value = {}
    for run in _runs(vert):
        subs_by_value[run[0]] = 0
        for value in run[1:]:
            subs_by_value[value] = 1
    for value in between:
        subs_by_value[value] = 1
    for run in _runs(horiz):
        first = run[0]
        if T.k >= 2:
            subs_by_value[first] = 1 if first == 1 else 2
        else:
            subs_by_value[first] = 2
        for value in run[1:]:
            subs_by_value[value] = 1
    counts = {
        _hand_degree(v, T): s for v, s in subs_by_value.items()
    }
    return _assemble_hook_code(label, T, subs_by_value, counts)


def iota(P):
    """Conjugate the smallest-part rectangular block in place.

    Defined on CIJT partitions with exactly d parts, where the bottom block
    has shape (a+k)^(a+1); flipping it to (a+1)^(a+k) gives the CIJT
    partition with d+k-1 parts, bijectively.  Identity when k = 1.
    """
    P = Partition(P)
    T = HilbertFunction(diagonal_lengths(P))
    if not is_cijt(P) or len(P) != T.d:
        raise NotCIJTWithDParts(f"{P} is not a CIJT partition with {T.d} parts")
    p_t, n_t = P.power_form[-1]
    a = n_t - 1
    assert p_t == a + T.k, "smallest block of a d-part CIJT must be (a+k)^(a+1)"
    flipped = P.parts[: len(P) - n_t] + (a + 1,) * (a + T.k)
    Q = Partition(flipped)
    assert is_cijt(Q) and len(Q) == T.d + T.k - 1
    return Q
