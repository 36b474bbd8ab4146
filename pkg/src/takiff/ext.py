"""Blocks, first extensions between simples, and the resulting quivers.

Ext^1(L(lam), L(mu)) is computed as graded Lie-algebra 1-cocycles modulo
1-coboundaries.  A cochain assigns to each generator g a linear map
V -> W shifting the common coset grading by g's depth shift; the cocycle
condition

    phi([a,b]) = rho_W(a) phi(b) - phi(b) rho_V(a)
               + phi(a) rho_V(b) - rho_W(b) phi(a)

is imposed for all 15 generator pairs on every depth slice whose composites
stay inside the truncation window, and coboundaries are the maps
d psi (g) = rho_W(g) psi - psi rho_V(g) for depth-preserving psi.  This is
exactly the condition for the block-triangular matrices [[W, phi], [0, V]]
to define a module extending V by W.

Two category flavors: in the strict one ("O") the extension must stay
h-semisimple, which forces phi(h) = 0 (on a common coset both modules give
h the same scalar on aligned slices, and a Jordan block above a scalar is
never diagonalizable), so the phi(h) unknowns are simply dropped.  The
relaxed flavor ("Otilde") keeps them.

Pairs of simples in different blocks admit no extensions (their central
characters differ), so ext1 short-circuits to 0 unless the two weights are
equal nondegenerate weights or lie in one hbar = 0 coset.

Truncation is handled by re-running the computation at three consecutive
window depths and requiring the dimension to be flat; the starting window
is sized past both modules' supports and slides upward (to the cap given by
the environment variable TAKIFF_DEPTH_CAP, default 40) if not yet flat.
"""

import os
from dataclasses import dataclass, field
from fractions import Fraction
from math import floor

from .algebra import (E, EBAR, F, FBAR, H, HBAR, GENERATORS, GEN_NAMES,
                      DEPTH_SHIFT, _BRACKET)
from .linalg import Mat, RowSpace, SparseSystem
from .modules import Weight, simple_module, casimir_scalar

__all__ = [
    "Block", "block_of", "same_block", "ext1", "stabilize_ext", "ExtResult",
    "StabilizationError", "assemble_extension", "quiver", "Quiver",
    "DEFAULT_DEPTH_CAP", "depth_cap",
]

DEFAULT_DEPTH_CAP = 40

_PAIRS = [(x, y) for x in GENERATORS for y in GENERATORS if x < y]


def depth_cap():
    return int(os.environ.get("TAKIFF_DEPTH_CAP", DEFAULT_DEPTH_CAP))


# ---------------------------------------------------------------------------
# blocks

@dataclass(frozen=True)
class Block:
    """A block of the highest-weight category: a nondegenerate weight is a
    block of its own; the degenerate (hbar = 0) simples clump into one block
    per alpha-coset, represented by the unique coset member with h in [0,2)."""
    kind: str
    rep: Weight

    def label(self):
        if self.kind == "nondegenerate":
            return "nondegenerate %s" % (self.rep,)
        return "coset %s + Z*alpha" % (self.rep,)

    def to_json(self):
        return {"kind": self.kind, "rep": self.rep.to_json()}


def block_of(w):
    if not isinstance(w, Weight):
        w = Weight(*w)
    if w.hbar != 0:
        return Block("nondegenerate", w)
    rep = w.h - 2 * floor(w.h / 2)
    return Block("coset", Weight(rep, 0))


def same_block(a, b):
    return block_of(a) == block_of(b)


# ---------------------------------------------------------------------------
# results

@dataclass
class ExtResult:
    lam: Weight
    mu: Weight
    category: str
    window: int
    dim: int
    stabilized: bool = False
    depths_checked: list = field(default_factory=list)
    dim_sequence: list = field(default_factory=list)
    cocycles: list = field(default_factory=list)  # {gen name: {depth: Mat}}
    note: str = ""
    dims_v: list = field(default_factory=list)    # coset-graded dimensions
    dims_w: list = field(default_factory=list)

    def to_json(self):
        cocycles = []
        for phi in self.cocycles:
            entry = {}
            for gname, blocks in phi.items():
                out = []
                for d in sorted(blocks):
                    mat = blocks[d]
                    ents = [[r, c, str(mat.rows[r][c])]
                            for r in range(mat.nrows)
                            for c in range(mat.ncols) if mat.rows[r][c]]
                    if ents:
                        out.append({"from_depth": d, "entries": ents})
                if out:
                    entry[gname] = out
            cocycles.append(entry)
        return {"lambda": self.lam.to_json(), "mu": self.mu.to_json(),
                "category": self.category, "window": self.window,
                "dim": self.dim, "stabilized": self.stabilized,
                "depths_checked": list(self.depths_checked),
                "dim_sequence": list(self.dim_sequence),
                "note": self.note, "cocycles": cocycles}


class StabilizationError(RuntimeError):
    """Raised when the Ext dimension keeps drifting with the window depth."""

    def __init__(self, lam, mu, category, history, note=None):
        self.history = history
        msg = ("Ext^1(%s, %s) in %s did not stabilize within the depth cap; "
               "window -> dim: %s" % (lam, mu, category, history))
        if note:
            msg = "Ext^1(%s, %s) in %s: %s" % (lam, mu, category, note)
        super().__init__(msg)


# ---------------------------------------------------------------------------
# the cocycle solver

def _coset_layout(lam, mu):
    """Common-coset offsets: the higher weight sits at depth 0."""
    k2 = lam.h - mu.h
    if lam.hbar != mu.hbar or k2.denominator != 1 or int(k2) % 2:
        raise ValueError("weights %s and %s do not share a coset" % (lam, mu))
    k = int(k2) // 2
    if k >= 0:
        return 0, k
    return -k, 0


def _support_extent(w):
    return int(w.h) if w.is_integral_dominant() else 0


def _default_window(lam, mu):
    offv, offw = _coset_layout(lam, mu)
    return max(offv + _support_extent(lam),
               offw + _support_extent(mu), 1) + 2


def _coset_dims_and_actions(mod, off, N):
    dims = [0] * (N + 1)
    for d in range(mod.depth + 1):
        dims[off + d] = mod.dims[d]
    act = {g: {} for g in GENERATORS}
    for g in GENERATORS:
        s = DEPTH_SHIFT[g]
        for d in range(N + 1):
            t = d + s
            if dims[d] and 0 <= t <= N:
                act[g][d] = mod.act(g, d - off)
    return dims, act


def _zero_result(lam, mu, category, note):
    return ExtResult(lam, mu, category, 0, 0, stabilized=True, note=note)


def ext1(lam, mu, category="O", window=None, with_cocycles=True):
    """dim Ext^1(L(lam), L(mu)) at one window depth, with representative
    cocycles.  Categories: "O" (strict) or "Otilde" (relaxed).

    The result of a single window is only meaningful once the dimension is
    flat across consecutive windows; use stabilize_ext for the final answer.
    """
    if not isinstance(lam, Weight):
        lam = Weight(*lam)
    if not isinstance(mu, Weight):
        mu = Weight(*mu)
    if category not in ("O", "Otilde"):
        raise ValueError("category must be 'O' or 'Otilde'")
    if not same_block(lam, mu):
        return _zero_result(
            lam, mu, category,
            "different blocks (%s vs %s): no extensions"
            % (block_of(lam).label(), block_of(mu).label()))
    offv, offw = _coset_layout(lam, mu)
    N = _default_window(lam, mu) if window is None else int(window)
    if N < max(offv, offw) + 2:
        raise ValueError("window %d too small for offsets (%d, %d)"
                         % (N, offv, offw))
    V = simple_module(lam, N - offv)
    W = simple_module(mu, N - offw)
    dv, av = _coset_dims_and_actions(V, offv, N)
    dw, aw = _coset_dims_and_actions(W, offw, N)

    gens_used = tuple(g for g in GENERATORS if not (category == "O" and g == H))

    # unknown layout: one block of scalars per (source depth, generator);
    # depth-major order keeps elimination fill inside the depth band
    blocks = {}
    nunk = 0
    for d in range(N + 1):
        for g in gens_used:
            t = d + DEPTH_SHIFT[g]
            if dv[d] and 0 <= t <= N and dw[t]:
                blocks[(g, d)] = (nunk, dw[t], dv[d])
                nunk += dw[t] * dv[d]

    system = SparseSystem(nunk)

    def act_or_none(table, g, d):
        return table[g].get(d)

    for a, b in _PAIRS:
        sa, sb = DEPTH_SHIFT[a], DEPTH_SHIFT[b]
        for d in range(N + 1):
            if dv[d] == 0:
                continue
            if max(d + sa, d + sb, d + sa + sb) > N:
                continue  # composite leaves the window: cannot be imposed
            t = d + sa + sb
            if t < 0 or dw[t] == 0:
                continue
            rows = [{} for _ in range(dw[t] * dv[d])]

            def add(key, MW, MV, sign):
                # contribution  sign * MW . phi(key) . MV  with identity
                # for a missing factor; phi blocks outside the unknown set
                # are identically zero.
                blk = blocks.get(key)
                if blk is None:
                    return
                off, nr, nc = blk
                if MW is None and MV is None:
                    for r in range(nr):
                        base = r * dv[d]
                        for c in range(nc):
                            row = rows[base + c]
                            idx = off + r * nc + c
                            row[idx] = row.get(idx, 0) + sign
                elif MW is None:
                    for j in range(MV.nrows):
                        mvrow = MV.rows[j]
                        for c in range(MV.ncols):
                            coef = mvrow[c]
                            if coef:
                                for r in range(nr):
                                    row = rows[r * dv[d] + c]
                                    idx = off + r * nc + j
                                    row[idx] = row.get(idx, 0) + sign * coef
                else:  # MV is None
                    for r in range(MW.nrows):
                        mwrow = MW.rows[r]
                        for i in range(MW.ncols):
                            coef = mwrow[i]
                            if coef:
                                for c in range(nc):
                                    row = rows[r * dv[d] + c]
                                    idx = off + i * nc + c
                                    row[idx] = row.get(idx, 0) + sign * coef

            add((b, d), act_or_none(aw, a, d + sb), None, 1)
            add((b, d + sa), None, act_or_none(av, a, d), -1)
            add((a, d + sb), None, act_or_none(av, b, d), 1)
            add((a, d), act_or_none(aw, b, d + sa), None, -1)
            for g, coef in _BRACKET[(a, b)]:
                add((g, d), None, None, -coef)
            for row in rows:
                if row:
                    system.add_row(row)

    rank_eq = system.rank()
    dim_z = nunk - rank_eq

    # coboundaries of depth-preserving maps psi
    bsys = SparseSystem(nunk)
    bvectors = []
    for d in range(N + 1):
        if dv[d] == 0 or dw[d] == 0:
            continue
        for r0 in range(dw[d]):
            for c0 in range(dv[d]):
                vec = {}
                for g in gens_used:
                    s = DEPTH_SHIFT[g]
                    blk = blocks.get((g, d))
                    if blk is not None:
                        off, nr, nc = blk
                        mw = act_or_none(aw, g, d)
                        if mw is not None:
                            for r in range(nr):
                                coef = mw.rows[r][r0]
                                if coef:
                                    idx = off + r * nc + c0
                                    vec[idx] = vec.get(idx, 0) + coef
                    blk = blocks.get((g, d - s))
                    if blk is not None:
                        off, nr, nc = blk
                        mv = act_or_none(av, g, d - s)
                        if mv is not None:
                            for c in range(nc):
                                coef = mv.rows[c0][c]
                                if coef:
                                    idx = off + r0 * nc + c
                                    vec[idx] = vec.get(idx, 0) - coef
                if vec:
                    bvectors.append(dict(vec))
                    bsys.add_row(vec)
    rank_b = bsys.rank()
    dim = dim_z - rank_b

    result = ExtResult(lam, mu, category, N, dim,
                       depths_checked=[N], dim_sequence=[dim],
                       dims_v=dv, dims_w=dw)
    if not with_cocycles or dim == 0:
        return result

    # representatives: kernel basis reduced modulo the coboundary space
    reps = []
    seen = RowSpace(nunk)
    for v in system.nullspace_basis():
        v = bsys.reduce_vector(v)
        if any(v) and seen.add(v):
            reps.append(v)
        if len(reps) == dim:
            break
    assert len(reps) == dim, "representative extraction out of step"
    for v in reps:
        phi = {}
        for (g, d), (off, nr, nc) in sorted(blocks.items()):
            mat = Mat.zeros(nr, nc)
            nonzero = False
            for r in range(nr):
                for c in range(nc):
                    val = v[off + r * nc + c]
                    if val:
                        mat.rows[r][c] = val
                        nonzero = True
            if nonzero:
                phi.setdefault(GEN_NAMES[g], {})[d] = mat
        result.cocycles.append(phi)
    return result


def stabilize_ext(lam, mu, category="O", start=None, cap=None,
                  with_cocycles=False):
    """Ext^1 with the truncation window slid until the dimension is flat on
    three consecutive depths.  Raises StabilizationError at the depth cap."""
    if not isinstance(lam, Weight):
        lam = Weight(*lam)
    if not isinstance(mu, Weight):
        mu = Weight(*mu)
    if not same_block(lam, mu):
        return _zero_result(
            lam, mu, category,
            "different blocks (%s vs %s): no extensions"
            % (block_of(lam).label(), block_of(mu).label()))
    cap = depth_cap() if cap is None else int(cap)
    base = _default_window(lam, mu) if start is None else int(start)
    dims = {}
    history = []

    def dim_at(N):
        if N not in dims:
            dims[N] = ext1(lam, mu, category, window=N,
                           with_cocycles=False).dim
            history.append((N, dims[N]))
        return dims[N]

    if base + 2 > cap:
        raise StabilizationError(
            lam, mu, category, [],
            note="depth cap %d leaves no room for windows %d..%d"
                 % (cap, base, base + 2))
    N = base
    while N + 2 <= cap:
        seq = [dim_at(N), dim_at(N + 1), dim_at(N + 2)]
        if seq[0] == seq[1] == seq[2]:
            final = ext1(lam, mu, category, window=N + 2,
                         with_cocycles=with_cocycles)
            final.stabilized = True
            final.depths_checked = [N, N + 1, N + 2]
            final.dim_sequence = seq
            return final
        N += 1
    raise StabilizationError(lam, mu, category, sorted(history))


def assemble_extension(result, index=0):
    """Build the block-triangular module [[W, phi], [0, V]] for one of the
    representative cocycles (slices ordered W then V at each depth).  The
    result is a TruncatedModule on the common coset window; its relation
    check is how the solver's output is validated end to end."""
    from .modules import TruncatedModule
    lam, mu, N = result.lam, result.mu, result.window
    offv, offw = _coset_layout(lam, mu)
    V = simple_module(lam, N - offv)
    W = simple_module(mu, N - offw)
    dv, av = _coset_dims_and_actions(V, offv, N)
    dw, aw = _coset_dims_and_actions(W, offw, N)
    phi = result.cocycles[index] if result.cocycles else {}
    dims = [dw[d] + dv[d] for d in range(N + 1)]
    actions = {g: {} for g in GENERATORS}
    anchor = lam if offv == 0 else mu
    for g in GENERATORS:
        s = DEPTH_SHIFT[g]
        gblocks = phi.get(GEN_NAMES[g], {})
        for d in range(N + 1):
            t = d + s
            if dims[d] == 0 or not (0 <= t <= N):
                continue
            mat = Mat.zeros(dims[t], dims[d])
            wblk = aw[g].get(d)
            if wblk is not None:
                for r in range(wblk.nrows):
                    for c in range(wblk.ncols):
                        mat.rows[r][c] = wblk.rows[r][c]
            vblk = av[g].get(d)
            if vblk is not None:
                for r in range(vblk.nrows):
                    for c in range(vblk.ncols):
                        mat.rows[dw[t] + r][dw[d] + c] = vblk.rows[r][c]
            pblk = gblocks.get(d)
            if pblk is not None:
                for r in range(pblk.nrows):
                    for c in range(pblk.ncols):
                        mat.rows[r][dw[d] + c] = pblk.rows[r][c]
            actions[g][d] = mat
    return TruncatedModule(anchor, N, dims, actions, complete=False,
                           label="extension")


# ---------------------------------------------------------------------------
# quivers

@dataclass
class Quiver:
    """Gabriel quiver of a block: one vertex per simple in the window, and
    dim Ext^1(L(u), L(v)) arrows u -> v (loops included)."""
    block: Block
    category: str
    vertices: list   # (offset m, Weight, label)
    arrows: dict     # (m_from, m_to) -> dim

    def to_json(self):
        return {"block": self.block.to_json(), "category": self.category,
                "vertices": [{"offset": m, "h": str(w.h), "hbar": str(w.hbar),
                              "label": label}
                             for m, w, label in self.vertices],
                "arrows": [{"from": a, "to": b, "dim": d}
                           for (a, b), d in sorted(self.arrows.items())]}

    def to_dot(self):
        lines = ["digraph ext_quiver {",
                 '  label="Ext1 quiver: %s, category %s";'
                 % (self.block.label(), self.category),
                 "  rankdir=LR;",
                 "  node [shape=circle];"]
        for m, w, label in self.vertices:
            lines.append('  "m%+d" [label="%s"];' % (m, label))
        for (a, b), d in sorted(self.arrows.items()):
            lines.extend(['  "m%+d" -> "m%+d";' % (a, b)] * d)
        lines.append("}")
        return "\n".join(lines) + "\n"


def _offset_label(m):
    if m == 0:
        return "w"
    mag = abs(m)
    coef = "" if mag == 1 else str(mag)
    return "w%s%sa" % ("+" if m > 0 else "-", coef)


def quiver(seed, lo=-2, hi=2, category="O", cap=None):
    """Quiver of the block containing ``seed``.

    A nondegenerate weight yields a single vertex with its self-extensions
    as loops.  For an hbar = 0 coset the window is the block representative
    shifted by lo..hi alphas; every ordered pair in the window (both
    directions, so the symmetry of the table is computed rather than
    assumed) gets its stabilized Ext dimension.
    """
    if not isinstance(seed, Weight):
        seed = Weight(*seed)
    blk = block_of(seed)
    if blk.kind == "nondegenerate":
        vertices = [(0, blk.rep, "w")]
    else:
        if lo > hi:
            raise ValueError("empty window: lo > hi")
        vertices = [(m, blk.rep.down(-m), _offset_label(m))
                    for m in range(lo, hi + 1)]
    arrows = {}
    for m1, w1, _ in vertices:
        for m2, w2, _ in vertices:
            d = stabilize_ext(w1, w2, category, cap=cap).dim
            if d:
                arrows[(m1, m2)] = d
    return Quiver(blk, category, vertices, arrows)
