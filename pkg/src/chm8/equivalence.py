"""Permutation equivalence, Hadamard equivalence and the defect."""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import perms
from ._kernels import perm_search
from .errors import DimensionMismatch, NonHadamardInput
from .numerics import DEFAULT_TOL, ToleranceConfig, neighbor_keys, quantize
from .verify import as_cmatrix, dephase, is_hadamard

__all__ = [
    "PermPair",
    "EquivalenceWitness",
    "DephasedClassSet",
    "entry_labels",
    "perm_equivalent",
    "dephase_at",
    "dephased_classes",
    "equivalent",
    "defect",
]


@dataclass(frozen=True)
class PermPair:
    """Row and column permutations ``p1, p2`` (0-based one-line arrays)."""

    p1: np.ndarray
    p2: np.ndarray

    def apply(self, X) -> np.ndarray:
        return perms.apply(self.p1, X, self.p2)

    def one_line(self) -> tuple[str, str]:
        return perms.one_line(self.p1), perms.one_line(self.p2)

    def __eq__(self, other):
        if not isinstance(other, PermPair):
            return NotImplemented
        return np.array_equal(self.p1, other.p1) and np.array_equal(self.p2, other.p2)

    def __hash__(self):
        return hash((tuple(self.p1.tolist()), tuple(self.p2.tolist())))


@dataclass(frozen=True)
class EquivalenceWitness:
    """``H1 = diag(d1) P1 H2 P2 diag(d2)``."""

    perms: PermPair
    d1: np.ndarray
    d2: np.ndarray

    def apply(self, H2) -> np.ndarray:
        return self.d1[:, None] * self.perms.apply(H2) * self.d2[None, :]

    def residual(self, H1, H2) -> float:
        return float(np.max(np.abs(as_cmatrix(H1) - self.apply(as_cmatrix(H2)))))


@dataclass
class DephasedClassSet:
    reps: list[np.ndarray]
    # per rep: ((row pivot, column pivot), PermPair with rep = D(P1 H P2))
    provenance: list[tuple[tuple[int, int], PermPair]] = field(default_factory=list)

    def __len__(self):
        return len(self.reps)


# --- labelling -----------------------------------------------------------

_DENSE_LIMIT = 2048


def _labels_dense(flat: np.ndarray, eps: float) -> np.ndarray:
    close = np.abs(flat[:, None] - flat[None, :]) < eps
    lab = np.arange(len(flat))
    while True:
        # every point takes the smallest index reachable in one step
        new = np.where(close, lab[None, :], len(flat)).min(axis=1)
        if np.array_equal(new, lab):
            break
        lab = new
    _, inv = np.unique(lab, return_inverse=True)
    return inv.astype(np.int_)


def _labels_bucketed(flat: np.ndarray, tol: ToleranceConfig) -> np.ndarray:
    parent = list(range(len(flat)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    buckets: dict[tuple[int, int], list[int]] = {}
    for idx, z in enumerate(flat):
        key = quantize(z, tol)
        for nk in neighbor_keys(key):
            for other in buckets.get(nk, ()):
                if abs(flat[other] - z) < tol.match:
                    ra, rb = find(idx), find(other)
                    if ra != rb:
                        parent[max(ra, rb)] = min(ra, rb)
        buckets.setdefault(key, []).append(idx)
    ids: dict[int, int] = {}
    lab = np.empty(len(flat), dtype=np.int_)
    for idx in range(len(flat)):
        lab[idx] = ids.setdefault(find(idx), len(ids))
    return lab


def entry_labels(*mats, tol: ToleranceConfig = DEFAULT_TOL):
    """Cluster the entries of all matrices into shared integer labels.

    Entries within ``tol.match`` of each other (transitively) share a label.
    Labels are numbered by first occurrence. Returns ``(labels, nlabels)``
    where ``labels`` is a list of int arrays shaped like the inputs.
    """
    flat = np.concatenate([np.asarray(m, dtype=complex).ravel() for m in mats])
    if len(flat) <= _DENSE_LIMIT:
        lab = _labels_dense(flat, tol.match)
    else:
        lab = _labels_bucketed(flat, tol)
    out, pos = [], 0
    for m in mats:
        shape = np.shape(m)
        size = int(np.prod(shape))
        out.append(lab[pos:pos + size].reshape(shape))
        pos += size
    return out, int(lab.max()) + 1 if len(lab) else 0


def _share(sigs_a, sigs_b):
    table = {s: i for i, s in enumerate(sorted(set(sigs_a) | set(sigs_b)))}
    return [table[s] for s in sigs_a], [table[s] for s in sigs_b]


def _colours(la, lb):
    """Joint row/column colour refinement; None when the colourings differ."""
    la_l, lb_l = la.tolist(), lb.tolist()
    la_t, lb_t = la.T.tolist(), lb.T.tolist()
    ra, rb = _share([tuple(sorted(r)) for r in la_l], [tuple(sorted(r)) for r in lb_l])
    ca, cb = _share([tuple(sorted(c)) for c in la_t], [tuple(sorted(c)) for c in lb_t])
    n = len(la_l)
    classes = -1
    for _ in range(2 * n + 1):
        if sorted(ra) != sorted(rb) or sorted(ca) != sorted(cb):
            return None
        count = len(set(ra)) + len(set(ca))
        if count == classes:
            break
        classes = count
        new_ra, new_rb = _share(
            [(ra[i], tuple(sorted(zip(la_l[i], ca)))) for i in range(n)],
            [(rb[i], tuple(sorted(zip(lb_l[i], cb)))) for i in range(n)],
        )
        ca, cb = _share(
            [(ca[j], tuple(sorted(zip(la_t[j], ra)))) for j in range(n)],
            [(cb[j], tuple(sorted(zip(lb_t[j], rb)))) for j in range(n)],
        )
        ra, rb = new_ra, new_rb
    return ra, rb, ca, cb


def _match(A, B, tol: ToleranceConfig):
    """Index maps ``r, c`` with ``A[i, j] ~ B[r[i], c[j]]``, or None."""
    if A.shape != B.shape:
        raise DimensionMismatch(f"shapes {A.shape} and {B.shape} differ")
    (la, lb), nl = entry_labels(A, B, tol=tol)
    return _match_labelled(A, B, la, lb, nl, tol)


def _match_labelled(A, B, la, lb, nl: int, tol: ToleranceConfig):
    """``_match`` with entry labels already shared between ``A`` and ``B``."""
    if not np.array_equal(np.sort(la, axis=None), np.sort(lb, axis=None)):
        return None
    colours = _colours(la, lb)
    if colours is None:
        return None
    found = perm_search(la, lb, *colours, nl)
    if found is None:
        return None
    r, c = found
    if np.max(np.abs(A - B[r][:, c])) >= tol.match:
        return None
    return r, c


def perm_equivalent(A, B, tol: ToleranceConfig = DEFAULT_TOL) -> PermPair | None:
    """Permutations with ``P1 @ B @ P2 == A`` within ``tol.match``."""
    A, B = as_cmatrix(A), as_cmatrix(B)
    found = _match(A, B, tol)
    if found is None:
        return None
    r, c = found
    return PermPair(perms.inverse(r), c)


# --- dephased classes ----------------------------------------------------

def _require_hadamard(H, tol, what="input"):
    H = as_cmatrix(H)
    if not is_hadamard(H, tol):
        raise NonHadamardInput(f"{what} is not a complex Hadamard matrix")
    return H


def pivot_perms(n: int, r: int, c: int) -> PermPair:
    """Perms moving row ``r`` and column ``c`` to index 0, keeping the rest in order."""
    order_r = np.array([r] + [i for i in range(n) if i != r], dtype=np.intp)
    order_c = np.array([c] + [j for j in range(n) if j != c], dtype=np.intp)
    return PermPair(perms.inverse(order_r), order_c)


def dephase_at(H, r: int, c: int, tol: ToleranceConfig = DEFAULT_TOL) -> np.ndarray:
    H = as_cmatrix(H)
    return dephase(pivot_perms(H.shape[0], r, c).apply(H), tol).dephased


def dephased_classes(H, tol: ToleranceConfig = DEFAULT_TOL) -> DephasedClassSet:
    H = _require_hadamard(H, tol)
    n = H.shape[0]
    out = DephasedClassSet([], [])
    for r in range(n):
        for c in range(n):
            pp = pivot_perms(n, r, c)
            M = dephase(pp.apply(H), tol).dephased
            if any(_match(M, rep, tol) is not None for rep in out.reps):
                continue
            out.reps.append(M)
            out.provenance.append(((r, c), pp))
    return out


# --- equivalence ---------------------------------------------------------

def witness_from_maps(H1, H2, rows, cols, tol: ToleranceConfig = DEFAULT_TOL):
    """Witness for ``H1[u, v] ~ H2[rows[u], cols[v]]`` up to diagonal phases.

    Returns None when the diagonals do not reconcile within ``tol.match``.
    """
    K = H2[rows][:, cols]
    d2 = H1[0, :] / K[0, :]
    d1 = H1[:, 0] / (K[:, 0] * d2[0])
    w = EquivalenceWitness(PermPair(perms.inverse(rows), np.asarray(cols, dtype=np.intp)), d1, d2)
    if w.residual(H1, H2) >= tol.match * max(1.0, float(np.max(np.abs(H1)))):
        return None
    return w


def equivalent(A, B, tol: ToleranceConfig = DEFAULT_TOL) -> EquivalenceWitness | None:
    """Witness ``A = diag(d1) P1 B P2 diag(d2)`` or None if inequivalent."""
    A = _require_hadamard(A, tol, "first matrix")
    B = _require_hadamard(B, tol, "second matrix")
    if A.shape != B.shape:
        raise DimensionMismatch(f"shapes {A.shape} and {B.shape} differ")
    DB = dephase(B, tol).dephased
    classes = dephased_classes(A, tol)
    for rep, (_, pp) in zip(classes.reps, classes.provenance):
        found = _match(DB, rep, tol)
        if found is None:
            continue
        r, c = found
        # DB[x, y] ~ rep[r[x], c[y]] and rep = pp.apply(A) up to phases
        inv1 = perms.inverse(pp.p1)
        rows = inv1[r]  # B row x  <->  A row rows[x]
        cols = pp.p2[c]
        w = witness_from_maps(A, B, perms.inverse(rows), perms.inverse(cols), tol)
        if w is not None:
            return w
    return None


# --- defect --------------------------------------------------------------

def defect_system(H) -> np.ndarray:
    """Real matrix of the first-order phase-perturbation system of ``H``.

    Unknowns are the phases ``R[j, k]`` for ``j, k >= 1``; each pair of rows
    ``j < l`` gives the real and imaginary parts of
    ``sum_k H[j, k] conj(H[l, k]) (R[j, k] - R[l, k]) = 0``.
    """
    H = dephase(as_cmatrix(H)).dephased
    n = H.shape[0]
    m = n - 1
    rows = []
    for j in range(n):
        for l in range(j + 1, n):
            w = H[j, 1:] * np.conj(H[l, 1:])
            eq = np.zeros((m, m), dtype=complex)
            if j > 0:
                eq[j - 1] += w
            eq[l - 1] -= w
            rows.append(eq.ravel())
    M = np.array(rows)
    return np.vstack([M.real, M.imag])


def defect(H, tol: ToleranceConfig = DEFAULT_TOL) -> int:
    H = _require_hadamard(H, tol)
    n = H.shape[0]
    if n == 1:
        return 0
    s = np.linalg.svd(defect_system(H), compute_uv=False)
    rank = int(np.sum(s > tol.rank * s[0])) if s.size and s[0] > 0 else 0
    return (n - 1) ** 2 - rank
