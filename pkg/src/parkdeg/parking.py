"""Column-restricted parking functions and the label-insertion bijections.

A parking function of size n is a Dyck path of height n together with a
labelling of the squares left of its up-steps by 1..n, increasing up each
column.  We store only the column label sets; the path is recovered from
the column heights, which must form a Catalan composition.

The dominance index of a label a counts the columns strictly to its left
containing no label greater than a (empty columns count).  A parking
function is column-restricted (a CPF) when every label a has dominance
index strictly less than a.

Two different insertion algorithms graft a new largest label n onto a
size n-1 CPF pointed at one of the 2(n-1)+1 lattice points of its path,
and both are bijections onto the size-n CPFs:

* `insert_iota` splits the column under the point, then repairs the
  dominance bookkeeping by moving whole columns into empty slots on their
  left; `remove_nu` inverts it.
* `insert_iota_prime` agrees with the first algorithm away from upper-left
  corners; at a corner it pushes displaced labels one square to the right,
  exchanging the small-label bottoms of adjacent columns when a push is
  blocked.  `remove_nu_prime` inverts it.

Points on the path are encoded as step counts 0..2n from the origin; a
point is an upper-left corner when it follows an up-step and precedes a
right-step.
"""

from __future__ import annotations

import itertools
import json
from bisect import bisect_left
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from . import compositions as comp
from .errors import DuplicateError, LabelError, ShapeError


class ParkingFunction:
    """Immutable parking function stored as column label sets."""

    __slots__ = ("_columns", "_heights", "_col_of")

    def __init__(self, columns: Iterable[Iterable[int]]):
        cols = tuple(tuple(sorted(int(a) for a in col)) for col in columns)
        n = len(cols)
        labels = [a for col in cols for a in col]
        if len(labels) != n or set(labels) != set(range(1, n + 1)):
            raise ShapeError(
                f"column sets must partition 1..{n} across {n} columns, got {cols}"
            )
        heights = tuple(len(c) for c in cols)
        if not comp.is_catalan(heights):
            raise ShapeError(f"column heights {heights} are not Catalan")
        self._columns = cols
        self._heights = heights
        self._col_of = {a: c for c, col in enumerate(cols) for a in col}

    @property
    def n(self) -> int:
        return len(self._columns)

    @property
    def columns(self) -> tuple[tuple[int, ...], ...]:
        return self._columns

    def heights(self) -> comp.Composition:
        """Column heights, a Catalan composition in Comp(n,n)."""
        return self._heights

    def column_of(self, a: int) -> int:
        """1-based index of the column containing label a."""
        if a not in self._col_of:
            raise LabelError(f"label {a} not present (size {self.n})")
        return self._col_of[a] + 1

    def dominance_index(self, a: int) -> int:
        """Number of columns left of a containing no label greater than a."""
        if a not in self._col_of:
            raise LabelError(f"label {a} not present (size {self.n})")
        c = self._col_of[a]
        return sum(1 for col in self._columns[:c] if not col or col[-1] < a)

    def is_column_restricted(self) -> bool:
        """True iff every label's dominance index is below the label."""
        return all(self.dominance_index(a) < a for a in range(1, self.n + 1))

    def to_preferences(self) -> tuple[int, ...]:
        """Classical car-parking form: label a prefers its 1-based column."""
        return tuple(self._col_of[a] + 1 for a in range(1, self.n + 1))

    @classmethod
    def from_preferences(cls, prefs: Sequence[int]) -> "ParkingFunction":
        n = len(prefs)
        cols: list[list[int]] = [[] for _ in range(n)]
        for a, p in enumerate(prefs, start=1):
            if not 1 <= p <= n:
                raise ShapeError(f"preference {p} outside 1..{n}")
            cols[p - 1].append(a)
        return cls(cols)

    def to_json_dict(self) -> dict:
        return {"n": self.n, "columns": [list(c) for c in self._columns]}

    @classmethod
    def from_json_dict(cls, data: dict) -> "ParkingFunction":
        pf = cls(data["columns"])
        if "n" in data and data["n"] != pf.n:
            raise ShapeError(f"declared n={data['n']} but {pf.n} columns given")
        return pf

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True)

    def render(self) -> str:
        """ASCII picture: '|' marks up-steps, '_' right-steps, '.' inner cells.

        Two characters per cell, rows printed top to bottom.  Human-oriented;
        the JSON form is the stable interface.
        """
        n = self.n
        if n == 0:
            return ""
        prefix = [0]
        for h in self._heights:
            prefix.append(prefix[-1] + h)
        # column (1-based) whose up-step sits in row y
        col_at = {}
        label_at = {}
        for c, col in enumerate(self._columns, start=1):
            for idx, a in enumerate(col):
                y = prefix[c - 1] + idx + 1
                col_at[y] = c
                label_at[y] = a
        width = len(str(n))
        lines: list[str] = []

        def cell(text: str, lead: str) -> str:
            return lead + text.rjust(width)

        for y in range(n, 0, -1):
            cy = col_at[y]
            top = col_at[y + 1] if y < n else n + 1
            if top > cy:
                run = [" " * (width + 1)] * n
                for c in range(cy, top):
                    run[c - 1] = " " + "_" * width
                lines.append("".join(run).rstrip())
            row = []
            for c in range(1, n + 1):
                if c == cy:
                    row.append(cell(str(label_at[y]), "|"))
                elif cy < c <= y:
                    row.append(cell(".", " "))
                else:
                    row.append(" " * (width + 1))
            lines.append("".join(row).rstrip())
        return "\n".join(lines)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ParkingFunction):
            return NotImplemented
        return self._columns == other._columns

    def __hash__(self) -> int:
        return hash(self._columns)

    def __repr__(self) -> str:
        return f"ParkingFunction({[list(c) for c in self._columns]})"


@dataclass(frozen=True)
class PointedParkingFunction:
    """A parking function with a marked lattice point on its path."""

    pf: ParkingFunction
    point: int

    def __post_init__(self):
        if not 0 <= self.point <= 2 * self.pf.n:
            raise ValueError(
                f"point {self.point} outside 0..{2 * self.pf.n} for size {self.pf.n}"
            )

    def to_json_dict(self) -> dict:
        out = self.pf.to_json_dict()
        out["point"] = self.point
        return out

    @classmethod
    def from_json_dict(cls, data: dict) -> "PointedParkingFunction":
        return cls(ParkingFunction.from_json_dict(data), data["point"])


def _point_split(heights: Sequence[int], s: int) -> tuple[int, int]:
    """Decompose step-count s into (columns closed, up-steps into the next)."""
    steps = "".join("U" * h + "R" for h in heights)
    closed = steps[:s].count("R")
    ups = s - closed
    return closed, ups - sum(heights[:closed])


def point_is_corner(heights: Sequence[int], s: int) -> bool:
    """True iff point s follows an up-step and precedes a right-step."""
    steps = "".join("U" * h + "R" for h in heights)
    return 1 <= s < len(steps) and steps[s - 1] == "U" and steps[s] == "R"


def is_good(q: ParkingFunction) -> bool:
    """Good: nothing below the top label n, or the cell up-right of n holds
    a label bigger than the one directly below n."""
    n = q.n
    c0 = q.column_of(n) - 1
    col = q.columns[c0]
    if len(col) == 1:
        return True
    r = col[-2]
    if c0 == n - 1:
        return False
    nxt = q.columns[c0 + 1]
    return bool(nxt) and nxt[0] > r


def classify(q: ParkingFunction) -> str:
    return "good" if is_good(q) else "bad"


def is_good_pointed(pp: PointedParkingFunction) -> bool:
    """Pointed version: good iff the point is not an upper-left corner."""
    return not point_is_corner(pp.pf.heights(), pp.point)


def _cpf_column_sets(n: int, k: comp.Composition) -> Iterator[tuple[tuple[int, ...], ...]]:
    placed: list[tuple[int, ...]] = []
    maxes: list[int] = []  # sorted tops of nonempty placed columns

    def rec(c: int, remaining: tuple[int, ...]) -> Iterator[tuple[tuple[int, ...], ...]]:
        if c == n:
            yield tuple(placed)
            return
        kc = k[c]
        if kc == 0:
            placed.append(())
            yield from rec(c + 1, remaining)
            placed.pop()
            return
        n_empty = c - len(maxes)
        # membership of label a in column c+1 only constrains d(a), which is
        # fixed by the columns already placed
        eligible = [a for a in remaining if n_empty + bisect_left(maxes, a) < a]
        if len(eligible) < kc:
            return
        for combo in itertools.combinations(eligible, kc):
            chosen = set(combo)
            placed.append(combo)
            pos = bisect_left(maxes, combo[-1])
            maxes.insert(pos, combo[-1])
            yield from rec(c + 1, tuple(a for a in remaining if a not in chosen))
            maxes.pop(pos)
            placed.pop()

    yield from rec(0, tuple(range(1, n + 1)))


def _check_cpf_shape(n: int, k: Sequence[int]) -> comp.Composition:
    parts = comp.as_composition(k)
    if len(parts) != n or sum(parts) != n:
        raise ShapeError(
            f"heights must form a composition of {n} of length {n}, got {parts}"
        )
    return parts


def enumerate_cpf(n: int, k: Sequence[int]) -> Iterator[ParkingFunction]:
    """All column-restricted parking functions with the given heights.

    Empty for non-Catalan heights.  Columns are filled left to right with
    label subsets in ascending lexicographic order, so the stream order is
    deterministic.
    """
    parts = _check_cpf_shape(n, k)
    if not comp.is_catalan(parts):
        return
    for cols in _cpf_column_sets(n, parts):
        yield ParkingFunction(cols)


def count_cpf(n: int, k: Sequence[int]) -> int:
    """|CPF(n, k)| by direct enumeration (no recursion involved)."""
    parts = _check_cpf_shape(n, k)
    if not comp.is_catalan(parts):
        return 0
    return sum(1 for _ in _cpf_column_sets(n, parts))


def count_cpf_total(n: int) -> int:
    """Total number of size-n CPFs, summed over all Catalan heights."""
    return sum(
        count_cpf(n, k)
        for k in comp.enumerate_compositions(n, n)
        if comp.is_catalan(k)
    )


def _require_cpf(p: ParkingFunction) -> None:
    if not p.is_column_restricted():
        raise ValueError("parking function is not column-restricted")


def _step1_columns(
    cols: tuple[tuple[int, ...], ...], heights: Sequence[int], s: int, new_label: int
) -> tuple[list[tuple[int, ...]], int, int]:
    """Graft new_label at point s: split the column under the point.

    Returns the new column list plus (closed, ups) describing the point.
    """
    closed, ups = _point_split(heights, s)
    work = list(cols)
    if closed == len(cols):
        work.append((new_label,))
    else:
        col = work[closed]
        work[closed : closed + 1] = [col[:ups] + (new_label,), col[ups:]]
    return work, closed, ups


def _assert_dominance_bookkeeping(
    before: ParkingFunction, step1: Sequence[tuple[int, ...]], corner: bool, r: int | None
) -> None:
    # Grafting changes dominance indices only at a corner, where the labels
    # below r sitting right of r each gain exactly 1.
    mid = ParkingFunction(step1)
    raised = set()
    if corner:
        assert r is not None
        rc = mid.column_of(r)
        raised = {
            a
            for col in mid.columns[rc:]
            for a in col
            if a < r
        }
    for a in range(1, before.n + 1):
        gain = mid.dominance_index(a) - before.dominance_index(a)
        assert gain == (1 if a in raised else 0), (
            f"dominance shift {gain} at label {a} contradicts the corner rule"
        )


def insert_iota(pp: PointedParkingFunction) -> ParkingFunction:
    """Column-moving insertion of the next label at the marked point.

    Away from upper-left corners the graft alone suffices.  At a corner the
    labels below r (the label under the new top) to its right each gain one
    dominance unit; their columns are restored by moving each affected
    column, left to right, into the rightmost empty column on its left.
    """
    p, s = pp.pf, pp.point
    _require_cpf(p)
    n = p.n + 1
    heights = p.heights()
    work, closed, ups = _step1_columns(p.columns, heights, s, n)
    corner = closed < p.n and ups == heights[closed] and ups > 0
    r = work[closed][-2] if corner else None
    if __debug__:
        _assert_dominance_bookkeeping(p, tuple(work), corner, r)
    if corner:
        affected = [
            j for j in range(closed + 1, len(work)) if any(a < r for a in work[j])
        ]
        for j in affected:
            target = max(e for e in range(j) if not work[e])
            work[target], work[j] = work[j], ()
    out = ParkingFunction(work)
    assert out.is_column_restricted()
    return out


def remove_nu(q: ParkingFunction) -> PointedParkingFunction:
    """Inverse of `insert_iota`: strip the top label, recording the point.

    For a bad input the columns right of r holding a label below r are first
    moved back, rightmost first, into the nearest empty column on their
    right; then n is removed and the path tail closes up.
    """
    _require_cpf(q)
    n = q.n
    if n < 2:
        raise ValueError(f"need size >= 2, got {n}")
    cols = list(q.columns)
    c0 = q.column_of(n) - 1
    if not is_good(q):
        r = cols[c0][-2]
        affected = [j for j in range(c0 + 1, n) if any(a < r for a in cols[j])]
        for j in reversed(affected):
            targets = [e for e in range(j + 1, n) if not cols[e]]
            assert targets, "no empty column available on the right"
            cols[targets[0]], cols[j] = cols[j], ()
    ups = len(cols[c0]) - 1
    if c0 == n - 1:
        assert ups == 0
        newcols = cols[:c0]
    else:
        bottom = cols[c0][:-1]
        nxt = cols[c0 + 1]
        assert not bottom or not nxt or bottom[-1] < nxt[0]
        newcols = cols[:c0] + [bottom + nxt] + cols[c0 + 2 :]
    s = c0 + sum(len(c) for c in newcols[:c0]) + ups
    out = ParkingFunction(newcols)
    assert out.is_column_restricted()
    return PointedParkingFunction(out, s)


def insert_iota_prime(pp: PointedParkingFunction) -> ParkingFunction:
    """Label-pushing insertion; identical to `insert_iota` off corners.

    At an upper-left corner the new label lands above r and the tail labels
    are scanned top to bottom: a label above r moves one square right when
    the landing column stays increasing; when blocked, the sub-r bottoms of
    the two adjacent columns are exchanged (the blocking column must hold a
    label below r) and the scan resumes strictly to the left.
    """
    p, s = pp.pf, pp.point
    _require_cpf(p)
    n = p.n + 1
    heights = p.heights()
    closed, ups = _point_split(heights, s)
    corner = closed < p.n and ups == heights[closed] and ups > 0
    if not corner:
        work, _, _ = _step1_columns(p.columns, heights, s, n)
    else:
        work = list(p.columns)
        r = work[closed][-1]
        work[closed] = work[closed] + (n,)
        work.append(())
        for c in range(len(work) - 2, closed, -1):
            while work[c] and work[c][-1] > r:
                a = work[c][-1]
                right = work[c + 1]
                if not right or right[0] > a:
                    work[c] = work[c][:-1]
                    work[c + 1] = (a,) + right
                    continue
                # blocked push: a still crosses, and the sub-r bottoms of the
                # two columns are exchanged alongside it
                small_right = tuple(x for x in right if x < r)
                if not small_right:
                    raise AssertionError(
                        "blocked push with no small labels to exchange"
                    )
                small_here = tuple(x for x in work[c] if x < r)
                work[c] = small_right + tuple(x for x in work[c][:-1] if x > r)
                work[c + 1] = small_here + (a,) + tuple(x for x in right if x > r)
    out = ParkingFunction(work)
    assert out.is_column_restricted()
    return out


def remove_nu_prime(q: ParkingFunction) -> PointedParkingFunction:
    """Inverse of `insert_iota_prime`; agrees with `remove_nu` on good input.

    For a bad input the tail labels are scanned bottom to top: a label above
    r with nothing below it in its column moves one square left when the
    landing column stays increasing; when blocked, its sub-r bottom is
    exchanged with the next column's and the scan resumes above the moved
    labels.
    """
    _require_cpf(q)
    n = q.n
    if n < 2:
        raise ValueError(f"need size >= 2, got {n}")
    if is_good(q):
        return remove_nu(q)
    cols = list(q.columns)
    c0 = q.column_of(n) - 1
    r = cols[c0][-2]
    cols[c0] = cols[c0][:-1]
    for c in range(c0 + 1, n):
        while True:
            bigs = [x for x in cols[c] if x > r]
            if not bigs:
                break
            a = bigs[0]
            smalls = tuple(x for x in cols[c] if x < r)
            left = cols[c - 1]
            if not smalls:
                if left and left[-1] > a:
                    raise AssertionError(
                        "blocked pull with no small labels to exchange"
                    )
                assert c - 1 > c0, "pull would cross the removal column"
                cols[c] = tuple(x for x in cols[c] if x != a)
                cols[c - 1] = left + (a,)
                continue
            assert c + 1 < n, "small labels would overflow past the last column"
            right = cols[c + 1]
            cols[c] = tuple(x for x in right if x < r) + tuple(bigs)
            cols[c + 1] = smalls + tuple(x for x in right if x > r)
            break
    assert not cols[n - 1], "last column did not empty out"
    newcols = cols[: n - 1]
    s = c0 + sum(len(c) for c in newcols[:c0]) + len(newcols[c0])
    out = ParkingFunction(newcols)
    assert out.is_column_restricted()
    assert point_is_corner(out.heights(), s)
    return PointedParkingFunction(out, s)


_ALGORITHMS = {
    "iota": insert_iota,
    "iota_prime": insert_iota_prime,
    "iota-prime": insert_iota_prime,
}


def build_all_by_insertion(n: int, algorithm: str = "iota") -> set[ParkingFunction]:
    """All size-n CPFs grown from the unique size-1 CPF by repeated insertion.

    Every pointed extension is inserted at every level; a repeated output
    would contradict injectivity and raises DuplicateError.
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    try:
        insert = _ALGORITHMS[algorithm]
    except KeyError:
        raise ValueError(f"unknown algorithm {algorithm!r}") from None
    current = {ParkingFunction([(1,)])}
    for m in range(2, n + 1):
        grown: set[ParkingFunction] = set()
        for p in current:
            for s in range(2 * (m - 1) + 1):
                q = insert(PointedParkingFunction(p, s))
                if q in grown:
                    raise DuplicateError(
                        f"{algorithm} produced {q!r} from two different pointed inputs"
                    )
                grown.add(q)
        current = grown
    return current
