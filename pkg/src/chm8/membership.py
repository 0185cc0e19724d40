"""Decide whether a Hadamard matrix is equivalent to a member of a family.

The search runs on every dephased class representative ``H'`` of the input.
A family is described by its dephased symbolic table and a triangular list
of iterable entries: entry ``k`` depends only on the first ``k`` search
symbols and has a nonzero exponent on symbol ``k``. Each entry value of
``H'`` is tried as the image of the next iterable entry, the symbol is
recovered (all roots), and entries already fixed by the known symbols must
form a sub-multiset of the entries of ``H'``. Complete symbol tuples are
turned into parameter points, compared by multiset and finally by
permutation equivalence.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from itertools import permutations, product
from typing import Callable, Iterator, Sequence

import numpy as np

from . import perms
from .equivalence import PermPair, _match_labelled, dephased_classes, entry_labels
from .errors import NonHadamardInput, NonUnimodularInput, OutOfDomain, UnsupportedFamily
from .families import registry as reg
from .families import solutions as sol
from .families.catalogue import f4_table
from .families.monomial import MonomialMatrix
from .numerics import DEFAULT_TOL, ToleranceConfig
from .verify import as_cmatrix, dephase, is_hadamard

__all__ = [
    "IterableEntry",
    "MembershipReport",
    "SearchFamily",
    "iterable_entry_specs",
    "search_family",
    "member",
    "member_f4_worked_example",
    "F4WorkedExample",
    "inequivalence_table",
]


@dataclass(frozen=True)
class IterableEntry:
    """Entry ``coef * prod(x_s ** exps[s])`` of the dephased family table,
    used to recover ``symbol`` once the earlier search symbols are known."""

    position: tuple[int, int]
    symbol: int
    coef: complex
    exps: tuple[int, ...]

    def value(self, symbols: Sequence[complex]) -> complex:
        v = self.coef
        for x, e in zip(symbols, self.exps):
            if e:
                v *= complex(x) ** e
        return v

    def inverse(self, h: complex, symbols: Sequence[complex]) -> list[complex]:
        """All values of ``symbol`` giving entry value ``h``; other symbols
        are read from ``symbols`` (only the earlier search symbols matter)."""
        rest = self.coef
        for s, (x, e) in enumerate(zip(symbols, self.exps)):
            if e and s != self.symbol:
                rest *= complex(x) ** e
        k = self.exps[self.symbol]
        phi = cmath.phase(complex(h) / rest)
        return [cmath.exp(1j * (phi + 2 * math.pi * m) / k) for m in range(abs(k))]


# Search-symbol rows X (m, nsym) -> (leaf index, params, branch, symbol values),
# candidates ordered by leaf.
Completion = Callable[
    [np.ndarray, ToleranceConfig], tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]
]


@dataclass
class SearchFamily:
    name: str
    table: MonomialMatrix  # dephased
    entries: list[IterableEntry]
    complete: Completion
    # dephased matrix at (params, branch); used to re-verify witnesses
    evaluate: Callable[[tuple, int], np.ndarray]
    family_id: object = None
    _levels: list = field(default_factory=list, repr=False)

    def levels(self) -> list[list[tuple[int, int]]]:
        """Positions first fully determined after each search step (index 0:
        constants)."""
        if not self._levels:
            order = [e.symbol for e in self.entries]
            exps = self.table.exps
            n = exps.shape[0]
            levels: list[list] = [[] for _ in range(len(order) + 1)]
            for i in range(n):
                for j in range(n):
                    used = set(np.nonzero(exps[i, j])[0].tolist())
                    if not used <= set(order):
                        continue
                    depth = max((order.index(s) + 1 for s in used), default=0)
                    levels[depth].append((i, j))
            self._levels = levels
        return self._levels


@dataclass
class MembershipReport:
    family: object
    found: bool
    params: tuple | None = None
    branch: int | None = None
    perms: PermPair | None = None
    dephased_class_index: int | None = None
    n_classes: int = 0
    symbols: tuple | None = None
    residual: float | None = None
    reason: str | None = None

    def to_dict(self) -> dict:
        name = getattr(self.family, "value", self.family)
        out = {"family": str(name), "found": self.found, "dephased_classes": self.n_classes}
        if self.found:
            p1, p2 = self.perms.one_line()
            out.update(
                params=[float(p) for p in self.params],
                branch=self.branch,
                p1=p1,
                p2=p2,
                dephased_class_index=self.dephased_class_index,
                residual=self.residual,
            )
        if self.reason:
            out["reason"] = self.reason
        return out


# --- plans ---------------------------------------------------------------

def _plan(table: MonomialMatrix, search: Sequence[int], pinned=None) -> list[IterableEntry]:
    """Triangular iterable entries for ``search`` symbols.

    With ``pinned`` positions (one per search symbol, in order) those are
    used verbatim. Otherwise every ordering of the search symbols is tried
    and the one with the fewest preimages wins; per step the entry with the
    smallest exponent, then fewest symbols, then coefficient 1, then
    row-major position is taken.
    """
    exps, coef = table.exps, table.coef
    n = exps.shape[0]
    nsym = exps.shape[2]

    def entry(pos, sym):
        i, j = pos
        return IterableEntry(pos, sym, complex(coef[i, j]), tuple(int(x) for x in exps[i, j]))

    if pinned is not None:
        return [entry(pos, sym) for pos, sym in zip(pinned, search)]

    best = None
    for order in permutations(search):
        chosen = []
        for d, sym in enumerate(order):
            allowed = set(order[: d + 1])
            pick = None
            for i in range(1, n):
                for j in range(1, n):
                    e = exps[i, j]
                    if e[sym] == 0 or any(e[m] for m in range(nsym) if m not in allowed):
                        continue
                    key = (
                        abs(int(e[sym])),
                        int(np.count_nonzero(e)),
                        abs(coef[i, j] - 1) > 1e-12,
                        (i, j),
                    )
                    if pick is None or key < pick[0]:
                        pick = (key, (i, j))
            if pick is None:
                break
            chosen.append(entry(pick[1], sym))
        else:
            cost = math.prod(abs(c.exps[c.symbol]) for c in chosen)
            if best is None or cost < best[0]:
                best = (cost, chosen)
    if best is None:
        raise UnsupportedFamily("no triangular choice of iterable entries exists")
    return best[1]


def _phases(x: np.ndarray) -> np.ndarray:
    return np.angle(np.asarray(x, dtype=complex))


def _unit(x: np.ndarray) -> np.ndarray:
    return x / np.abs(x)


def _affine_completion(spec: reg.FamilySpec) -> Completion:
    k = spec.signature.count

    def complete(X, tol):
        params = _phases(X[:, :k])
        return np.arange(len(X)), params, np.zeros(len(X), dtype=int), np.exp(1j * params)

    return complete


_BATCH = {
    reg._t8b_solver: sol.batch_t8b,
    reg._t8c_solver: sol.batch_t8c,
    reg._t8d_solver: sol.batch_t8d,
    reg._t8e_solver: sol.batch_t8e,
}


def _solved_completion(spec: reg.FamilySpec) -> Completion:
    batch = _BATCH[spec.solver]
    k = spec.signature.count
    nb = spec.signature.branch_count

    def complete(X, tol):
        params = _phases(X[:, :k])
        a, b, c = np.exp(1j * params).T
        idx, brs, vals = [], [], []
        for br in range(nb):
            values, inside = batch(a, b, c, br, tol)
            keep = np.nonzero(inside)[0]
            idx.append(keep)
            brs.append(np.full(len(keep), br))
            vals.append(values[keep])
        idx, brs, vals = np.concatenate(idx), np.concatenate(brs), np.concatenate(vals)
        order = np.lexsort((brs, idx))
        idx = idx[order]
        return idx, params[idx], brs[order], vals[order]

    return complete


def _t8f_c_candidates(a, b, e) -> tuple[np.ndarray, np.ndarray]:
    """Values of ``c`` compatible with ``a``, ``b`` and ``Re(e)**2``.

    ``Re(e)**2 * B1 * B2 = A2`` is linear in ``Im(c)**2`` once ``a`` and
    ``b`` are fixed. Returns candidates of shape ``(m, 4)`` over the sign
    pairs of ``(Re c, Im c)`` and a mask of valid, distinct ones.
    """
    ar, ai, br = a.real, a.imag, b.real
    E = e.real**2 * (ar * ar - br * br)
    num = ai**4 * br**2 + E * (1 - ar * ar * br * br)
    den = ar**4 + ai * ai * br * br - ar * ar * br * br - E * (ar * ar - 1)
    with np.errstate(all="ignore"):
        ci2 = num / den
    ok = (np.abs(den) >= 1e-12) & (ci2 >= -1e-9) & (ci2 <= 1 + 1e-9)
    ci = np.sqrt(np.clip(np.nan_to_num(ci2), 0.0, 1.0))
    cr = np.sqrt(np.maximum(0.0, 1 - ci * ci))
    cands, mask = [], []
    for sr, si in product((1, -1), repeat=2):
        cands.append(sr * cr + 1j * si * ci)
        distinct = ok.copy()
        if sr < 0:
            distinct &= cr > 1e-12
        if si < 0:
            distinct &= ci > 1e-12
        mask.append(distinct)
    return np.stack(cands, axis=1), np.stack(mask, axis=1)


def _t8f_completion(spec: reg.FamilySpec) -> Completion:
    def complete(X, tol):
        a_m, b_m, e_m = X[:, 0], X[:, 1], X[:, 4]
        cands, cmask = _t8f_c_candidates(a_m, b_m, e_m)
        m = len(X)
        # candidate grid in search order: leaf, c, conj, free signs
        free = np.array(list(product((1, -1), repeat=3)))
        L, C, J, F = np.meshgrid(np.arange(m), np.arange(4), np.arange(2), np.arange(8),
                                 indexing="ij")
        L, C, J, F = L.ravel(), C.ravel(), J.ravel(), F.ravel()
        live = cmask[L, C]
        L, C, J, F = L[live], C[live], J[live], F[live]
        conj = np.where(J == 0, 1, -1)
        c_p = cands[L, C]
        a_p = np.where(conj > 0, a_m[L], np.conj(a_m[L]))
        b_p = np.where(conj > 0, b_m[L], np.conj(b_m[L]))
        params = np.stack([a_p.real, b_p.real, c_p.imag], axis=1)
        signs = [
            np.where(a_p.imag >= 0, 1, -1),
            np.where(b_p.imag >= 0, 1, -1),
            np.where(c_p.real >= 0, 1, -1),
            free[F, 0], free[F, 1], free[F, 2],
            conj,
        ]
        values, inside = sol.batch_t8f(params[:, 0], params[:, 1], params[:, 2], signs, tol)
        inside &= np.all(np.abs(params) <= 1, axis=1)
        inside &= np.abs(values[:, 4] ** 2 - e_m[L] ** 2) < tol.match
        bits = np.stack(signs, axis=1) < 0
        branch = (bits * (1 << np.arange(6, -1, -1))).sum(axis=1)
        keep = np.nonzero(inside)[0]
        return L[keep], params[keep], branch[keep], values[keep]

    return complete


# Positions (0-based) in the dephased T8F table holding
# 1/a^2, 1/b^2 and 1/e^2.
_T8F_PINNED = ((7, 1), (6, 1), (4, 2))

_SEARCH_CACHE: dict = {}


def search_family(family) -> SearchFamily:
    spec = reg.get_family(family)
    if spec.id in _SEARCH_CACHE:
        return _SEARCH_CACHE[spec.id]
    if not spec.parametric:
        raise UnsupportedFamily(f"{spec.name} is an isolated matrix, not a parametric family")
    if spec.id is reg.FamilyId.T8_1_RAW:
        raise UnsupportedFamily("T8raw has no solved parametrisation to search over")
    table = spec.dephased_table
    F = reg.FamilyId
    if spec.id is F.T8F_3:
        entries = _plan(table, (0, 1, 4), pinned=_T8F_PINNED)
        complete = _t8f_completion(spec)
    elif spec.id in (F.F8_5, F.D8A_5, F.D8B_5, F.S8A_4, F.S8B_4):
        entries = _plan(table, tuple(range(spec.signature.count)))
        complete = _affine_completion(spec)
    else:
        entries = _plan(table, tuple(range(spec.signature.count)))
        complete = _solved_completion(spec)

    def evaluate(params, branch):
        return dephase(reg.eval_family(spec, params, branch)).dephased

    sf = SearchFamily(spec.name, table, entries, complete, evaluate, spec.id)
    _SEARCH_CACHE[spec.id] = sf
    return sf


def iterable_entry_specs(family) -> list[IterableEntry]:
    return list(search_family(family).entries)


# --- search --------------------------------------------------------------

class _Target:
    """Distinct entry values of a class representative with multiplicities."""

    def __init__(self, H: np.ndarray, tol: ToleranceConfig):
        (lab,), nl = entry_labels(H, tol=tol)
        self.grid = lab
        flat, lab = H.ravel(), lab.ravel()
        first = np.array([np.argmax(lab == k) for k in range(nl)])
        self.values = flat[first]
        self.counts = np.bincount(lab, minlength=nl)
        self.eps = tol.match
        # dephased Hadamard entries are unimodular: look labels up by angle
        ang = np.angle(self.values)
        self._angle = ang
        self._order = np.argsort(ang)
        self._sorted = ang[self._order]

    def labels_of(self, vals: np.ndarray) -> np.ndarray:
        """Label of the nearest distinct value, or -1 when none is within tolerance."""
        vals = np.asarray(vals, dtype=complex)
        return self.labels_of_phase(np.angle(vals), np.abs(vals))

    def labels_of_phase(self, phase: np.ndarray, modulus=1.0) -> np.ndarray:
        """``labels_of`` for values ``modulus * exp(1j * phase)``."""
        phase = np.remainder(phase + np.pi, 2 * np.pi) - np.pi
        L = len(self._sorted)
        pos = np.searchsorted(self._sorted, phase)
        best = np.full(phase.shape, -1, dtype=np.intp)
        bestd = np.full(phase.shape, np.inf)
        for shift in (-1, 0):
            lab = self._order[(pos + shift) % L]
            gap = np.abs(phase - self._angle[lab])
            # arc length, which bounds the chord from above
            d = np.minimum(gap, 2 * np.pi - gap)
            if not np.isscalar(modulus):
                d = d + np.abs(modulus - 1.0)
            better = d < bestd
            best = np.where(better, lab, best)
            bestd = np.where(better, d, bestd)
        return np.where(bestd < self.eps, best, -1)

    def tally(self, labels: np.ndarray, base: np.ndarray | None = None):
        """Per-row label counts added to ``base``; rows with an unknown
        label or an exceeded multiplicity are flagged in the returned mask."""
        m, L = labels.shape[0], len(self.counts)
        ok = np.all(labels >= 0, axis=1)
        rows = np.repeat(np.arange(m), labels.shape[1])
        flat = np.where(labels >= 0, labels, 0).ravel()
        counts = np.bincount(rows * L + flat, minlength=m * L).reshape(m, L)
        if base is not None:
            counts = counts + base
        ok &= np.all(counts <= self.counts, axis=1)
        return counts, ok

    def same_multiset(self, M: np.ndarray) -> bool:
        counts, ok = self.tally(self.labels_of(M.reshape(1, -1)))
        return bool(ok[0]) and np.array_equal(counts[0], self.counts)


# frontier rows expanded at once
CHUNK = 4096


def _search_class(sf: SearchFamily, Hc: np.ndarray, tol: ToleranceConfig):
    """Yield ``(params, branch, values, (r, c))`` with
    ``D(f(params))[i, j] ~ Hc[r[i], c[j]]`` in depth-first order."""
    target = _Target(Hc, tol)
    levels = sf.levels()
    table = sf.table
    nsym = len(table.symbols)
    k = len(sf.entries)
    L = len(target.values)

    exps = table.exps.astype(float)
    carg = np.angle(table.coef)

    def admit(depth, T, base):
        pos = levels[depth]
        if not pos:
            return T, base
        ii, jj = np.array(pos).T
        phase = T @ exps[ii, jj].T + carg[ii, jj]
        counts, ok = target.tally(target.labels_of_phase(phase), base)
        return T[ok], counts[ok]

    def children(depth, T, counts):
        ent = sf.entries[depth]
        e = np.array(ent.exps, dtype=float)
        e[ent.symbol] = 0.0
        rest = T @ e + cmath.phase(ent.coef)
        kk = ent.exps[ent.symbol]
        phi = target._angle[None, :] - rest[:, None]
        turns = 2 * np.pi * np.arange(abs(kk))
        roots = ((phi[:, :, None] + turns) / kk).reshape(len(T), -1)
        per = roots.shape[1]
        U = np.repeat(T, per, axis=0)
        U[:, ent.symbol] = roots.ravel()
        return admit(depth + 1, U, np.repeat(counts, per, axis=0))

    seen = {p for lvl in levels for p in lvl}
    rest = [(i, j) for i in range(table.n) for j in range(table.n) if (i, j) not in seen]
    blocks = [rest[s:s + 8] for s in range(0, len(rest), 8)]
    n = table.n

    def leaves(T, counts):
        idx, params, branch, values = sf.complete(np.exp(1j * T), tol)
        if len(idx) == 0:
            return
        counts = counts[idx]
        arg, logmod = np.angle(values), np.log(np.abs(values))
        keep = np.arange(len(idx))
        # remaining entries block by block, dropping rows as soon as they fail
        for block in blocks:
            ii, jj = np.array(block).T
            e = exps[ii, jj].T
            phase = arg[keep] @ e + carg[ii, jj]
            modulus = np.exp(logmod[keep] @ e)
            c, ok = target.tally(target.labels_of_phase(phase, modulus), counts[keep])
            counts[keep[ok]] = c[ok]
            keep = keep[ok]
            if not len(keep):
                return
        keep = keep[np.all(counts[keep] == target.counts, axis=1)]
        for t in keep:
            M = table.evaluate(values[t])
            found = _match_labelled(M, Hc, target.labels_of(M), target.grid, L, tol)
            if found is not None:
                yield tuple(params[t]), int(branch[t]), tuple(values[t]), found

    def rec(depth, X, counts):
        if depth == k:
            yield from leaves(X, counts)
            return
        step = max(1, CHUNK // max(1, L * abs(sf.entries[depth].exps[sf.entries[depth].symbol])))
        for s in range(0, len(X), step):
            Y, C = children(depth, X[s:s + step], counts[s:s + step])
            if len(Y):
                yield from rec(depth + 1, Y, C)

    X0, C0 = admit(0, np.zeros((1, nsym)), np.zeros((1, L), dtype=np.int64))
    if len(X0):
        yield from rec(0, X0, C0)


def _member_search(sf: SearchFamily, H, tol: ToleranceConfig, family_tag) -> MembershipReport:
    H = as_cmatrix(H)
    if not is_hadamard(H, tol):
        raise NonHadamardInput("input is not a complex Hadamard matrix")
    if H.shape[0] != sf.table.coef.shape[0]:
        return MembershipReport(family_tag, False, reason="order differs from the family")
    classes = dephased_classes(H, tol)
    for ci, (rep, (_, pp)) in enumerate(zip(classes.reps, classes.provenance)):
        for params, br, values, (r, c) in _search_class(sf, rep, tol):
            # D(f)[i, j] ~ rep[r[i], c[j]]  =>  D(f) = Q1 rep Q2
            q = PermPair(perms.inverse(r), np.asarray(c, dtype=np.intp))
            p1 = perms.compose(q.p1, pp.p1)
            p2 = perms.compose(pp.p2, q.p2)
            witness = PermPair(p1, p2)
            lhs = dephase(witness.apply(H), tol).dephased
            try:
                expected = sf.evaluate(params, br)
            except (NonUnimodularInput, OutOfDomain):
                # numerically marginal point: the family matrix itself fails the checks
                continue
            res = float(np.max(np.abs(lhs - expected)))
            if res >= tol.match:
                continue
            return MembershipReport(
                family_tag,
                True,
                params=tuple(float(p) for p in params),
                branch=int(br),
                perms=witness,
                dephased_class_index=ci,
                n_classes=len(classes),
                symbols=tuple(complex(v) for v in values),
                residual=res,
            )
    return MembershipReport(family_tag, False, n_classes=len(classes),
                            reason="search exhausted")


def member(family, H, tol: ToleranceConfig = DEFAULT_TOL) -> MembershipReport:
    """Search for ``P1, P2`` and a family point with ``D(P1 H P2) = D(f(point))``."""
    sf = search_family(family)
    return _member_search(sf, H, tol, sf.family_id)


# --- order-4 worked example ---------------------------------------------

F4_BETA = cmath.exp(1j * math.sqrt(3))
F4_GAMMA = cmath.exp(1j * math.sqrt(7))


def f4_example_matrices() -> tuple[np.ndarray, np.ndarray]:
    """The order-4 Hadamard matrix ``G`` and its corrupted copy ``G'``."""
    b, g = F4_BETA, F4_GAMMA
    bc = b.conjugate()
    G = np.array(
        [
            [g, b * g, b, -1],
            [bc * g, g, -1, bc],
            [bc, -1, g, bc * g],
            [-1, b, b * g, g],
        ]
    )
    Gp = G.copy()
    Gp[3, 2] = -b * g
    Gp[3, 3] = -g
    return G, Gp


# Witnesses (one-line, 0-based) for G: D(P G Q) = F4(a)
F4_WITNESSES = (
    ((0, 2, 3, 1), (0, 2, 1, 3), 1j * F4_GAMMA**2),
    ((0, 2, 1, 3), (0, 2, 1, 3), -1j * F4_GAMMA**2),
    ((3, 1, 0, 2), (0, 2, 1, 3), 1j * F4_GAMMA**-2),
    ((1, 3, 0, 2), (0, 2, 1, 3), -1j * F4_GAMMA**-2),
)


def f4_search_family() -> SearchFamily:
    table = f4_table()
    entries = _plan(table, (0,), pinned=((1, 1),))

    def complete(X, tol):
        a = _unit(X[:, :1])
        return np.arange(len(X)), np.angle(a), np.zeros(len(X), dtype=int), a

    def evaluate(params, branch):
        return table.evaluate([cmath.exp(1j * params[0])])

    return SearchFamily("F4", table, entries, complete, evaluate, "F4")


@dataclass
class F4WorkedExample:
    report: MembershipReport
    parameter: complex | None
    rejected: MembershipReport


def member_f4_worked_example(tol: ToleranceConfig = DEFAULT_TOL) -> F4WorkedExample:
    """Run the order-4 example: ``G`` is found, ``G'`` is rejected up front."""
    sf = f4_search_family()
    G, Gp = f4_example_matrices()
    report = _member_search(sf, G, tol, "F4")
    a = cmath.exp(1j * report.params[0]) if report.found else None
    try:
        rejected = _member_search(sf, Gp, tol, "F4")
    except NonHadamardInput as exc:
        rejected = MembershipReport("F4", False, reason=f"rejected: {exc}")
    return F4WorkedExample(report, a, rejected)


# --- inequivalence table ------------------------------------------------

def inequivalence_table(tol: ToleranceConfig = DEFAULT_TOL, families=None):
    """``table[x][y]`` is True when the test point of family ``x`` is found in ``y``."""
    fams = list(families or reg.INEQUIVALENCE_LIST)
    out = np.zeros((len(fams), len(fams)), dtype=bool)
    for i, fx in enumerate(fams):
        params, branch = reg.reference_point(fx)
        H = reg.eval_family(fx, params, branch, tol)
        for j, fy in enumerate(fams):
            out[i, j] = member(fy, H, tol).found
    return fams, out
