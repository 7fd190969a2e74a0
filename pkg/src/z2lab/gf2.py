"""Bit-packed linear algebra over GF(2).

Vectors and matrix rows are stored as Python ints used as bitsets: bit ``i``
of the int is coordinate ``i``. Python ints give arbitrary-width words, so a
row of any length packs into a single object and XOR/AND run word-parallel.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Sequence


def parity(x: int) -> int:
    return x.bit_count() & 1


@dataclass(frozen=True)
class BitVec:
    """Fixed-length vector over GF(2)."""

    length: int
    bits: int = 0

    def __post_init__(self):
        if self.length < 0:
            raise ValueError("negative length")
        if self.bits < 0 or self.bits >> self.length:
            raise ValueError(f"bits {self.bits:#x} do not fit in length {self.length}")

    @classmethod
    def zeros(cls, length: int) -> "BitVec":
        return cls(length, 0)

    @classmethod
    def from_str(cls, s: str) -> "BitVec":
        """Parse a 0/1 string, leftmost character is coordinate 0."""
        s = s.strip()
        if any(c not in "01" for c in s):
            raise ValueError(f"not a bitstring: {s!r}")
        bits = 0
        for i, c in enumerate(s):
            if c == "1":
                bits |= 1 << i
        return cls(len(s), bits)

    @classmethod
    def from_iter(cls, values: Iterable[int]) -> "BitVec":
        values = list(values)
        bits = 0
        for i, v in enumerate(values):
            if v & 1:
                bits |= 1 << i
        return cls(len(values), bits)

    def __str__(self) -> str:
        return "".join("1" if (self.bits >> i) & 1 else "0" for i in range(self.length))

    def __getitem__(self, i: int) -> int:
        if not 0 <= i < self.length:
            raise IndexError(i)
        return (self.bits >> i) & 1

    def __iter__(self):
        return (self[i] for i in range(self.length))

    def __len__(self) -> int:
        return self.length

    def _check(self, other: "BitVec"):
        if self.length != other.length:
            raise ValueError(f"length mismatch: {self.length} vs {other.length}")

    def __xor__(self, other: "BitVec") -> "BitVec":
        self._check(other)
        return BitVec(self.length, self.bits ^ other.bits)

    __add__ = __xor__

    def weight(self) -> int:
        return self.bits.bit_count()

    def is_zero(self) -> bool:
        return self.bits == 0

    def padded(self, length: int) -> "BitVec":
        if length < self.length and self.bits >> length:
            raise ValueError("cannot truncate nonzero coordinates")
        return BitVec(length, self.bits)


def dot(u: BitVec, v: BitVec) -> int:
    """Scalar product over GF(2): parity of the AND-popcount."""
    u._check(v)
    return parity(u.bits & v.bits)


@dataclass(frozen=True)
class Gf2Matrix:
    """Dense rows x cols matrix; ``data[i]`` holds row ``i`` as an int bitset."""

    rows: int
    cols: int
    data: tuple[int, ...]

    def __post_init__(self):
        if len(self.data) != self.rows:
            raise ValueError("row count does not match data")
        for r in self.data:
            if r < 0 or r >> self.cols:
                raise ValueError("row does not fit in column count")

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Gf2Matrix":
        return cls(rows, cols, (0,) * rows)

    @classmethod
    def identity(cls, n: int) -> "Gf2Matrix":
        return cls(n, n, tuple(1 << i for i in range(n)))

    @classmethod
    def from_lists(cls, rows: Sequence[Sequence[int]]) -> "Gf2Matrix":
        if not rows:
            return cls(0, 0, ())
        ncols = len(rows[0])
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged rows")
        return cls(len(rows), ncols, tuple(BitVec.from_iter(r).bits for r in rows))

    @classmethod
    def from_function(cls, rows: int, cols: int, f: Callable[[int, int], int]) -> "Gf2Matrix":
        data = []
        for i in range(rows):
            r = 0
            for j in range(cols):
                if f(i, j) & 1:
                    r |= 1 << j
            data.append(r)
        return cls(rows, cols, tuple(data))

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(ij)
        return (self.data[i] >> j) & 1

    def row(self, i: int) -> BitVec:
        return BitVec(self.cols, self.data[i])

    def to_lists(self) -> list[list[int]]:
        return [[(r >> j) & 1 for j in range(self.cols)] for r in self.data]

    def row_strings(self) -> list[str]:
        return [str(BitVec(self.cols, r)) for r in self.data]

    def transpose(self) -> "Gf2Matrix":
        return Gf2Matrix.from_function(self.cols, self.rows, lambda i, j: self[j, i])

    def __add__(self, other: "Gf2Matrix") -> "Gf2Matrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        return Gf2Matrix(self.rows, self.cols, tuple(a ^ b for a, b in zip(self.data, other.data)))

    def __matmul__(self, other: "Gf2Matrix") -> "Gf2Matrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        out = []
        for r in self.data:
            acc = 0
            k = r
            while k:
                low = k & -k
                acc ^= other.data[low.bit_length() - 1]
                k ^= low
            out.append(acc)
        return Gf2Matrix(self.rows, other.cols, tuple(out))

    def is_square(self) -> bool:
        return self.rows == self.cols

    def to_text(self) -> str:
        lines = [f"m {self.rows} {self.cols}"]
        lines.extend(self.row_strings())
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "Gf2Matrix":
        lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
        lines = [ln for ln in lines if ln]
        if not lines or not lines[0].startswith("m "):
            raise ValueError("missing 'm <rows> <cols>' header")
        _, r, c = lines[0].split()
        rows, cols = int(r), int(c)
        body = lines[1:]
        if cols == 0 and not body:  # empty rows leave no lines behind
            return cls(rows, 0, (0,) * rows)
        if len(body) != rows:
            raise ValueError(f"expected {rows} rows, found {len(body)}")
        data = []
        for ln in body:
            v = BitVec.from_str(ln)
            if v.length != cols:
                raise ValueError(f"row {ln!r} does not have {cols} columns")
            data.append(v.bits)
        return cls(rows, cols, tuple(data))


def rank_rows(rows: Iterable[int]) -> int:
    """Rank of a list of int-bitset rows (elimination on a private copy)."""
    pivots: dict[int, int] = {}
    r = 0
    for v in rows:
        while v:
            top = v.bit_length() - 1
            p = pivots.get(top)
            if p is None:
                pivots[top] = v
                r += 1
                break
            v ^= p
    return r


def rank(m: Gf2Matrix) -> int:
    return rank_rows(m.data)


def basis_map(vectors: Sequence[BitVec]) -> tuple[int, Callable[[BitVec], BitVec], list[BitVec]]:
    """Pick a basis of the span and express vectors in it.

    Returns ``(d, coords, basis)``. The basis is chosen greedily in input
    order (a vector joins when it is independent of the earlier ones), and
    each pivot is the lowest set bit of its reduced form. ``coords`` maps any
    span member to its length-``d`` coordinate vector; it is linear, so XOR is
    preserved. Raises ``ValueError`` on vectors outside the span.
    """
    if vectors:
        n = vectors[0].length
        if any(v.length != n for v in vectors):
            raise ValueError("length mismatch")
    basis: list[BitVec] = []
    # reduced rows keyed by pivot (lowest bit); each carries its combination
    # of basis indices as an int
    reduced: list[tuple[int, int, int]] = []

    def reduce(bits: int) -> tuple[int, int]:
        combo = 0
        for piv, row, c in reduced:
            if (bits >> piv) & 1:
                bits ^= row
                combo ^= c
        return bits, combo

    for v in vectors:
        rest, combo = reduce(v.bits)
        if rest:
            k = len(basis)
            basis.append(v)
            piv = (rest & -rest).bit_length() - 1
            c = combo ^ (1 << k)
            # keep rows fully reduced so a single pass suffices
            reduced = [
                (p, row ^ rest, cc ^ c) if (row >> piv) & 1 else (p, row, cc)
                for p, row, cc in reduced
            ]
            reduced.append((piv, rest, c))
    d = len(basis)

    def coords(v: BitVec) -> BitVec:
        rest, combo = reduce(v.bits)
        if rest:
            raise ValueError(f"{v} is not in the span")
        return BitVec(d, combo)

    return d, coords, basis


def is_tournament(a: Gf2Matrix) -> bool:
    """True iff ``A[i,j] + A[j,i] = 1`` for all ``i != j`` (diagonal free)."""
    if not a.is_square():
        raise ValueError("tournament check needs a square matrix")
    n = a.rows
    full = (1 << n) - 1
    at = a.transpose()
    for i in range(n):
        if (a.data[i] ^ at.data[i]) | (1 << i) != full:
            return False
    return True


def tournament_rank_floor(n: int) -> int:
    """Smallest GF(2) rank of an ``n x n`` tournament matrix: ceil((n-1)/2)."""
    if n < 1:
        raise ValueError("n must be positive")
    return n // 2


# ---------------------------------------------------------------------------
# symmetric bilinear forms


def _apply(gram: Sequence[int], v: int) -> int:
    out = 0
    for i, row in enumerate(gram):
        if parity(row & v):
            out |= 1 << i
    return out


def gram_factor(gram: Gf2Matrix) -> list[BitVec]:
    """Factor a symmetric Gram matrix as ``G = Y Y^T`` over GF(2).

    Row ``i`` of the result is ``y_i`` with ``y_i . y_j = G[i, j]``. The
    length is ``rank(G)`` when the form is non-alternating (some diagonal
    entry is 1) and ``rank(G) + 1`` when it is alternating and nonzero, the
    minimum possible in each case. A zero form gives length-0 vectors.
    """
    if not gram.is_square():
        raise ValueError("Gram matrix must be square")
    n = gram.rows
    g = list(gram.data)
    for i in range(n):
        for j in range(i):
            if ((g[i] >> j) ^ (g[j] >> i)) & 1:
                raise ValueError("Gram matrix is not symmetric")

    # extended space: coordinate n is a phantom anisotropic vector orthogonal to everything
    ext = g + [1 << n]

    def form(u: int, v: int) -> int:
        return parity(u & _apply(ext, v))

    work = [1 << i for i in range(n)]
    ortho: list[int] = []
    hyper: list[tuple[int, int]] = []
    while True:
        work = [w for w in work if w]
        a = next((w for w in work if form(w, w)), None)
        if a is not None:
            ortho.append(a)
            work = [w ^ a if form(w, a) else w for w in work]
            continue
        pair = None
        for idx, u in enumerate(work):
            for v in work[idx + 1:]:
                if form(u, v):
                    pair = (u, v)
                    break
            if pair:
                break
        if pair is None:
            break
        u, v = pair
        hyper.append(pair)
        nxt = []
        for w in work:
            if form(w, v):
                w ^= u
            if form(w, u):
                w ^= v
            nxt.append(w)
        work = nxt

    if hyper and not ortho:
        ortho.append(1 << n)
    for u, v in hyper:
        b = ortho.pop()
        ortho.extend((b ^ u, b ^ v, b ^ u ^ v))

    h = len(ortho)
    ys = []
    for i in range(n):
        bits = 0
        for k, a in enumerate(ortho):
            if form(1 << i, a):
                bits |= 1 << k
        ys.append(BitVec(h, bits))
    return ys


def gram_matrix(vectors: Sequence[BitVec]) -> Gf2Matrix:
    return Gf2Matrix.from_function(len(vectors), len(vectors), lambda i, j: dot(vectors[i], vectors[j]))


def is_alternating(gram: Gf2Matrix) -> bool:
    return all(gram[i, i] == 0 for i in range(gram.rows))
