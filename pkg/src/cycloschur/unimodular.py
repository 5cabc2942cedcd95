"""Vector systems, unimodularity, total unimodularity, and network matrices.

A vector system is a finite spanning family of nonzero rational vectors.
It is unimodular when all of its bases (maximal independent subsets) have
the same absolute determinant.  Totally unimodular matrices, maximal
circuits, tensor products, disjoint sums, and network matrices supply the
constructions these checks are run against.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from math import comb, lcm

from . import linalg


def _is_integral(value) -> bool:
    return isinstance(value, int) or (isinstance(value, Fraction) and value.denominator == 1)


@dataclass(frozen=True)
class RationalMatrix:
    """Immutable rational matrix; entries[i][j] is row i, column j."""

    rows: int
    cols: int
    entries: tuple[tuple[Fraction | int, ...], ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        if len(self.entries) != self.rows:
            raise ValueError("row count mismatch")
        for row in self.entries:
            if len(row) != self.cols:
                raise ValueError("column count mismatch")

    @classmethod
    def from_rows(cls, rows) -> "RationalMatrix":
        ents = tuple(tuple(x for x in row) for row in rows)
        nrows = len(ents)
        ncols = len(ents[0]) if nrows else 0
        return cls(nrows, ncols, ents)

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        return cls(n, n, tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix(self.cols, self.rows,
                              tuple(tuple(self.entries[i][j] for i in range(self.rows))
                                    for j in range(self.cols)))

    def __matmul__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.rows}x{self.cols} by "
                             f"{other.rows}x{other.cols}")
        rows = tuple(tuple(sum(self.entries[i][k] * other.entries[k][j]
                               for k in range(self.cols))
                           for j in range(other.cols))
                     for i in range(self.rows))
        return RationalMatrix(self.rows, other.cols, rows)

    def is_integral(self) -> bool:
        return all(_is_integral(x) for row in self.entries for x in row)

    def to_integer_strings(self) -> list[list[str]]:
        """Entries as exact decimal strings; requires an integral matrix."""
        if not self.is_integral():
            raise ValueError("matrix has non-integer entries")
        return [[str(int(x)) for x in row] for row in self.entries]

    @classmethod
    def from_integer_strings(cls, rows) -> "RationalMatrix":
        return cls.from_rows([[int(x) for x in row] for row in rows])

    def __repr__(self) -> str:
        return f"RationalMatrix({self.rows}x{self.cols})"


def det_exact(matrix: RationalMatrix) -> Fraction:
    """Exact determinant by fraction-free elimination.

    Rows are scaled integral first, then Bareiss elimination runs over Z with
    the pivot taken as the first nonzero entry of the current column in row
    order; an all-zero column short-circuits to zero.
    """
    if matrix.rows != matrix.cols:
        raise ValueError("determinant requires a square matrix")
    if matrix.is_integral():
        return Fraction(linalg.bareiss_det_int([[int(x) for x in row] for row in matrix.entries]))
    return linalg.det_fraction([list(row) for row in matrix.entries])


@dataclass
class TUReport:
    is_totally_unimodular: bool
    mode: str                      # "exhaustive" or "sampled"
    submatrices_checked: int
    witness: tuple[tuple[int, ...], tuple[int, ...], Fraction] | None = None

    def __bool__(self) -> bool:
        return self.is_totally_unimodular


def is_totally_unimodular(matrix: RationalMatrix, *, sample_trials: int = 4000,
                          seed: int = 0) -> TUReport:
    """Check that every square submatrix has determinant in {-1, 0, 1}.

    Enumeration is exhaustive when rows*cols <= 36 and min(rows, cols) <= 6;
    larger matrices are checked on ``sample_trials`` seeded random square
    submatrices and the report says so.  A witness, when found, is the
    lexicographically first offending (row set, column set, det) triple in
    exhaustive mode.
    """
    r, c = matrix.rows, matrix.cols
    k_max = min(r, c)
    exhaustive = r * c <= 36 and k_max <= 6

    def subdet(row_idx, col_idx) -> Fraction:
        sub = RationalMatrix.from_rows([[matrix.entries[i][j] for j in col_idx] for i in row_idx])
        return det_exact(sub)

    checked = 0
    if exhaustive:
        for k in range(1, k_max + 1):
            for row_idx in itertools.combinations(range(r), k):
                for col_idx in itertools.combinations(range(c), k):
                    d = subdet(row_idx, col_idx)
                    checked += 1
                    if d not in (-1, 0, 1):
                        return TUReport(False, "exhaustive", checked, (row_idx, col_idx, d))
        return TUReport(True, "exhaustive", checked)
    rng = random.Random(seed)
    for _ in range(sample_trials):
        k = rng.randint(1, k_max)
        row_idx = tuple(sorted(rng.sample(range(r), k)))
        col_idx = tuple(sorted(rng.sample(range(c), k)))
        d = subdet(row_idx, col_idx)
        checked += 1
        if d not in (-1, 0, 1):
            return TUReport(False, "sampled", checked, (row_idx, col_idx, d))
    return TUReport(True, "sampled", checked)


@dataclass(frozen=True)
class VectorSystem:
    """A spanning family of nonzero vectors in QQ^ambient_dim.

    Construction validates both invariants: no zero vector, and the family
    spans the ambient space.  Duplicate vectors are allowed.
    """

    ambient_dim: int
    vectors: tuple[tuple[Fraction | int, ...], ...]

    def __post_init__(self):
        if self.ambient_dim < 1:
            raise ValueError("ambient dimension must be at least 1")
        if not self.vectors:
            raise ValueError("a vector system cannot be empty")
        for v in self.vectors:
            if len(v) != self.ambient_dim:
                raise ValueError("vector length does not match ambient dimension")
            if all(x == 0 for x in v):
                raise ValueError("vector systems exclude the zero vector")
        if linalg.rank_exact([list(v) for v in self.vectors]) != self.ambient_dim:
            raise ValueError("vectors do not span the ambient space")

    @classmethod
    def from_vectors(cls, vectors) -> "VectorSystem":
        vecs = tuple(tuple(x for x in v) for v in vectors)
        if not vecs:
            raise ValueError("a vector system cannot be empty")
        return cls(len(vecs[0]), vecs)

    def __len__(self) -> int:
        return len(self.vectors)

    def is_integral(self) -> bool:
        return all(_is_integral(x) for v in self.vectors for x in v)

    def columns_matrix(self) -> RationalMatrix:
        return RationalMatrix(self.ambient_dim, len(self.vectors),
                              tuple(tuple(v[i] for v in self.vectors)
                                    for i in range(self.ambient_dim)))


@dataclass
class UnimodularityReport:
    verdict: bool | None           # None when the check could not conclude
    mode: str                      # "exhaustive", "sampled", or "budget-exceeded"
    common_abs_det: Fraction | None
    bases: int                     # nonsingular subsets seen
    singular: int                  # singular subsets seen
    subsets_total: int             # full count of size-dim subsets
    witness: tuple[tuple[int, ...], tuple[int, ...], Fraction, Fraction] | None = None

    def __bool__(self) -> bool:
        return self.verdict is True


def _subset_det(system: VectorSystem, idx, integral: bool) -> Fraction:
    if integral:
        rows = [[int(system.vectors[j][i]) for j in idx] for i in range(system.ambient_dim)]
        return Fraction(linalg.bareiss_det_int(rows))
    rows = [[system.vectors[j][i] for j in idx] for i in range(system.ambient_dim)]
    return linalg.det_fraction(rows)


def is_unimodular_system(system: VectorSystem, *, budget: int = 2_000_000) -> UnimodularityReport:
    """Decide unimodularity by enumerating all dim-sized subsets in
    lexicographic index order and comparing absolute determinants.

    When C(len(system), dim) exceeds ``budget`` the report comes back with
    mode "budget-exceeded" and verdict None; it never silently passes.
    """
    m = system.ambient_dim
    total = comb(len(system), m)
    if total > budget:
        return UnimodularityReport(None, "budget-exceeded", None, 0, 0, total)
    integral = system.is_integral()
    common: Fraction | None = None
    first_basis: tuple[int, ...] | None = None
    bases = 0
    singular = 0
    for idx in itertools.combinations(range(len(system)), m):
        d = abs(_subset_det(system, idx, integral))
        if d == 0:
            singular += 1
            continue
        bases += 1
        if common is None:
            common = d
            first_basis = idx
        elif d != common:
            return UnimodularityReport(False, "exhaustive", None, bases, singular, total,
                                       (first_basis, idx, common, d))
    return UnimodularityReport(True, "exhaustive", common, bases, singular, total)


def sample_unimodularity(system: VectorSystem, *, trials: int = 200,
                         seed: int = 0) -> UnimodularityReport:
    """Seeded random-subset probe for large systems.

    A verdict of False is definitive (two bases with distinct |det| are
    reported); otherwise the verdict stays None because sampling cannot
    prove unimodularity.
    """
    m = system.ambient_dim
    total = comb(len(system), m)
    integral = system.is_integral()
    rng = random.Random(seed)
    common: Fraction | None = None
    first_basis: tuple[int, ...] | None = None
    bases = 0
    singular = 0
    for _ in range(trials):
        idx = tuple(sorted(rng.sample(range(len(system)), m)))
        d = abs(_subset_det(system, idx, integral))
        if d == 0:
            singular += 1
            continue
        bases += 1
        if common is None:
            common = d
            first_basis = idx
        elif d != common:
            return UnimodularityReport(False, "sampled", None, bases, singular, total,
                                       (first_basis, idx, common, d))
    return UnimodularityReport(None, "sampled", common, bases, singular, total)


def maximal_circuit(dim: int) -> VectorSystem:
    """The standard maximal circuit: the unit basis plus the negated sum.

    dim + 1 vectors in QQ^dim whose sum is zero; every dim of them form a
    basis with |det| = 1.
    """
    if dim < 1:
        raise ValueError("maximal_circuit requires dim >= 1")
    vecs = [tuple(1 if i == j else 0 for j in range(dim)) for i in range(dim)]
    vecs.append(tuple(-1 for _ in range(dim)))
    return VectorSystem(dim, tuple(vecs))


def is_maximal_circuit(system: VectorSystem) -> bool:
    """True iff the system has dim + 1 vectors summing to zero.

    Together with the spanning invariant this says the family is a circuit:
    its unique linear dependency (up to scale) has full support.
    """
    if len(system) != system.ambient_dim + 1:
        return False
    return all(sum(v[i] for v in system.vectors) == 0 for i in range(system.ambient_dim))


def tensor_product(x: VectorSystem, y: VectorSystem) -> VectorSystem:
    """All Kronecker products, enumerated X-major (x fixed, y running).

    Coordinates follow the Kronecker convention: entry i*dim(y) + j of
    x (x) y is x_i * y_j.
    """
    dim = x.ambient_dim * y.ambient_dim
    vecs = []
    for a in x.vectors:
        for b in y.vectors:
            vecs.append(tuple(ai * bj for ai in a for bj in b))
    return VectorSystem(dim, tuple(vecs))


def disjoint_sum(x: VectorSystem, y: VectorSystem) -> VectorSystem:
    """Block embedding of both systems into QQ^(dim x + dim y); X first."""
    dx, dy = x.ambient_dim, y.ambient_dim
    vecs = [v + (0,) * dy for v in x.vectors]
    vecs += [(0,) * dx + v for v in y.vectors]
    return VectorSystem(dx + dy, tuple(vecs))


def augment_identity(matrix: RationalMatrix) -> RationalMatrix:
    """[A | I]: append an identity block on the right."""
    m = matrix.rows
    rows = [tuple(matrix.entries[i]) + tuple(1 if j == i else 0 for j in range(m))
            for i in range(m)]
    return RationalMatrix(m, matrix.cols + m, tuple(rows))


@dataclass(frozen=True)
class NetworkInstance:
    """A directed spanning tree plus directed graph arcs on shared vertices."""

    vertices: tuple[str, ...]
    tree_arcs: tuple[tuple[str, str], ...]
    graph_arcs: tuple[tuple[str, str], ...]

    def __post_init__(self):
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("duplicate vertex names")
        vs = set(self.vertices)
        for u, v in self.tree_arcs + self.graph_arcs:
            if u not in vs or v not in vs:
                raise ValueError(f"arc endpoint not among vertices: ({u}, {v})")
        if len(self.tree_arcs) != len(self.vertices) - 1:
            raise ValueError("a spanning tree needs exactly |V| - 1 arcs")
        # connectivity of the undirected tree
        if self.vertices:
            adj: dict[str, list[str]] = {v: [] for v in self.vertices}
            for u, v in self.tree_arcs:
                adj[u].append(v)
                adj[v].append(u)
            seen = {self.vertices[0]}
            stack = [self.vertices[0]]
            while stack:
                w = stack.pop()
                for nb in adj[w]:
                    if nb not in seen:
                        seen.add(nb)
                        stack.append(nb)
            if len(seen) != len(self.vertices):
                raise ValueError("tree arcs do not connect all vertices")


def network_matrix(instance: NetworkInstance) -> RationalMatrix:
    """The tree-arc x graph-arc path-incidence matrix.

    For a graph arc (u, v), walk the unique tree path from u to v; the entry
    for tree arc x is +1 when the walk traverses x in its own direction, -1
    against it, 0 when x is off the path.  (The opposite orientation
    convention, reading the path from v to u, just negates the matrix; the
    one fixed here makes a 1-arc tree (a, b) with graph arc (a, b) give [1].)
    """
    adj: dict[str, list[tuple[str, int, int]]] = {v: [] for v in instance.vertices}
    for k, (u, v) in enumerate(instance.tree_arcs):
        adj[u].append((v, k, 1))
        adj[v].append((u, k, -1))

    def path_row(u: str, v: str) -> dict[int, int]:
        # BFS over the tree from u; record (arc, direction) steps
        prev: dict[str, tuple[str, int, int]] = {}
        seen = {u}
        queue = [u]
        while queue:
            w = queue.pop(0)
            if w == v:
                break
            for nb, arc, sgn in adj[w]:
                if nb not in seen:
                    seen.add(nb)
                    prev[nb] = (w, arc, sgn)
                    queue.append(nb)
        out: dict[int, int] = {}
        w = v
        while w != u:
            pw, arc, sgn = prev[w]
            out[arc] = sgn
            w = pw
        return out

    cols = []
    for u, v in instance.graph_arcs:
        hits = path_row(u, v) if u != v else {}
        cols.append([hits.get(k, 0) for k in range(len(instance.tree_arcs))])
    rows = [[cols[c][r] for c in range(len(cols))] for r in range(len(instance.tree_arcs))]
    return RationalMatrix(len(instance.tree_arcs), len(instance.graph_arcs),
                          tuple(tuple(r) for r in rows))


def bipartite_construction(m: int, n: int) -> tuple[RationalMatrix, NetworkInstance]:
    """The coordinate matrix of the joined circuit family on a complete
    bipartite support, together with a network realization of its transpose.

    Taking maximal circuits e_0..e_m and f_0..f_n (e_0 and f_0 the negated
    sums), the family {e_0 (x) f_0} + {e_0 (x) f_j} + {e_i (x) f_0} is written
    in the basis e_i (x) f_j.  Rows are indexed by the pairs (i, j) with j
    outermost, matching the graph-arc enumeration of the instance; columns
    follow the family order above.

    The instance uses the star-shaped spanning tree e_0-f_0, e_0-f_j, e_i-f_0
    and one graph arc per basis pair, oriented f_j -> e_i.  With that
    orientation the transpose of the returned matrix equals its network
    matrix entry for entry; orienting the graph arcs the other way would
    negate the network matrix.
    """
    if m < 1 or n < 1:
        raise ValueError("bipartite_construction requires m, n >= 1")
    nrows = m * n

    def row_of(i: int, j: int) -> int:
        # i in 1..m, j in 1..n
        return (j - 1) * m + (i - 1)

    cols: list[list[int]] = []
    cols.append([1] * nrows)                                  # e_0 (x) f_0
    for j in range(1, n + 1):                                 # e_0 (x) f_j
        col = [0] * nrows
        for i in range(1, m + 1):
            col[row_of(i, j)] = -1
        cols.append(col)
    for i in range(1, m + 1):                                 # e_i (x) f_0
        col = [0] * nrows
        for j in range(1, n + 1):
            col[row_of(i, j)] = -1
        cols.append(col)
    entries = tuple(tuple(cols[c][r] for c in range(len(cols))) for r in range(nrows))
    matrix = RationalMatrix(nrows, m + n + 1, entries)

    vertices = tuple(f"e{i}" for i in range(m + 1)) + tuple(f"f{j}" for j in range(n + 1))
    tree = [("e0", "f0")]
    tree += [("e0", f"f{j}") for j in range(1, n + 1)]
    tree += [(f"e{i}", "f0") for i in range(1, m + 1)]
    graph = [(f"f{j}", f"e{i}") for j in range(1, n + 1) for i in range(1, m + 1)]
    instance = NetworkInstance(vertices, tuple(tree), tuple(graph))
    return matrix, instance


@dataclass
class NonUnimodularWitness:
    basis_a: tuple[int, ...]
    basis_b: tuple[int, ...]
    abs_det_a: Fraction
    abs_det_b: Fraction
    moves_used: int


def find_nonunimodular_witness(system: VectorSystem, *, budget: int = 60,
                               seed: int = 0) -> NonUnimodularWitness | None:
    """Search for two bases of the system with different |det|.

    Randomized basis-exchange walk, deterministic for a fixed seed: from a
    random greedy basis, every single-column exchange determinant is scanned
    (one integer-preserving elimination per step); any exchange producing a
    new nonzero |det| yields the witness.  ``budget`` counts exchange scans
    across all restarts.  Returning None means no witness was found within
    the budget, never that the system is unimodular.
    """
    rng = random.Random(seed)
    d = system.ambient_dim
    nvec = len(system)
    if nvec <= d:
        return None

    # scale rows to integers once; a common row scaling multiplies every
    # basis determinant by the same factor, preserving |det| comparisons
    dens = []
    for i in range(d):
        dens.append(lcm(*(Fraction(v[i]).denominator for v in system.vectors)))
    cols = [[int(Fraction(v[i]) * dens[i]) for i in range(d)] for v in system.vectors]

    def greedy_basis() -> list[int]:
        order = list(range(nvec))
        rng.shuffle(order)
        chosen: list[int] = []
        by_lead: dict[int, list[Fraction]] = {}
        for j in order:
            vec = [Fraction(x) for x in cols[j]]
            while True:
                lead = next((k for k, x in enumerate(vec) if x != 0), None)
                if lead is None:
                    break
                row = by_lead.get(lead)
                if row is None:
                    by_lead[lead] = vec
                    chosen.append(j)
                    break
                f = vec[lead] / row[lead]
                for k in range(lead, d):
                    vec[k] -= f * row[k]
            if len(chosen) == d:
                return chosen
        raise AssertionError("spanning system must contain a basis")

    def true_abs_det(idx) -> Fraction:
        rows = [[system.vectors[j][i] for j in idx] for i in range(d)]
        return abs(linalg.det_fraction(rows))

    restart_every = max(1, budget // 4)
    basis: list[int] = []
    moves = 0
    while moves < budget:
        if moves % restart_every == 0 or not basis:
            basis = greedy_basis()
        det, table = linalg.exchange_table_int([cols[j] for j in basis], cols)
        moves += 1
        a = abs(det)
        in_basis = set(basis)
        candidates = []
        for i in range(d):
            for j in range(nvec):
                if j in in_basis:
                    continue
                t = abs(table[i][j])
                if t == 0:
                    continue
                if t != a:
                    other = sorted(basis[:i] + [j] + basis[i + 1:])
                    return NonUnimodularWitness(tuple(sorted(basis)), tuple(other),
                                                true_abs_det(sorted(basis)),
                                                true_abs_det(other), moves)
                candidates.append((i, j))
        if not candidates:
            basis = []
            continue
        i, j = candidates[rng.randrange(len(candidates))]
        basis[i] = j
    return None
