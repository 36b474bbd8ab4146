"""Submodule structure of truncated highest-weight modules.

Singular vectors, submodule generation and quotients, composition-factor
multiplicities by character peeling, the uniserial filtration of the
quotients Delta/K_n, and submodule Hasse diagrams for integral dominant
Verma modules.

All of this works inside a finite depth window.  Because PBW normal forms
put raising operators on the right, the submodule generated by homogeneous
vectors is computed exactly on the visible window by closing under the six
single-generator actions; no information leaks in from below the truncation.
Characters, on the other hand, are only trusted up to ``depth - guard``
wherever a statement depends on slices near the boundary.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil

from .algebra import (E, EBAR, F, FBAR, H, HBAR, GENERATORS, GEN_NAMES,
                      DEPTH_SHIFT)
from .linalg import Mat, RowSpace, kernel_basis, solve_columns
from .modules import (Weight, Character, TruncatedModule, character,
                      simple_dims, verma, dualize)

__all__ = [
    "singular_vectors", "cosingular_dim", "submodule", "quotient",
    "multiplicities", "MultiplicityTable",
    "mn_filtration", "FiltrationResult",
    "hasse_diagram", "SubmodulePoset",
]


# ---------------------------------------------------------------------------
# singular vectors

def singular_vectors(module, mu):
    """Basis of the singular vectors of weight mu: joint eigenvectors of h
    and hbar killed by both raising operators.

    mu must lie on the module's coset (same hbar-value, h-value differing
    from the top by a nonnegative even integer within the window); otherwise
    a ValueError is raised.  Returns a list of coordinate vectors in the
    depth slice of mu (possibly empty).
    """
    if not isinstance(mu, Weight):
        mu = Weight(*mu)
    if mu.hbar != module.top.hbar:
        raise ValueError("weight %s has the wrong hbar-value for this coset"
                         % (mu,))
    k2 = module.top.h - mu.h
    if k2.denominator != 1 or int(k2) % 2 != 0 or k2 < 0:
        raise ValueError("weight %s is not top - k*alpha for integer k >= 0"
                         % (mu,))
    d = int(k2) // 2
    if d > module.depth:
        raise ValueError("weight %s lies below the truncation window" % (mu,))
    dim = module.dims[d]
    if dim == 0:
        return []
    stacked = []
    stacked += module.act(E, d).rows
    stacked += module.act(EBAR, d).rows
    stacked += (module.act(H, d) - Mat.identity(dim) * mu.h).rows
    stacked += (module.act(HBAR, d) - Mat.identity(dim) * mu.hbar).rows
    if not stacked:
        return [[Fraction(1) if i == j else Fraction(0) for j in range(dim)]
                for i in range(dim)]
    return kernel_basis(Mat.from_rows(stacked, ncols=dim))


def cosingular_dim(module, mu):
    """Dimension of the mu-slice modulo everything reachable from above
    (images of both lowering operators) plus the non-eigen directions.
    Dual notion to singular_vectors: cosingular_dim(M, mu) equals the number
    of singular vectors of weight mu in dualize(M)."""
    if not isinstance(mu, Weight):
        mu = Weight(*mu)
    d = int((module.top.h - mu.h) / 2)
    dim = module.dims[d]
    if dim == 0:
        return 0
    space = RowSpace(dim)
    count = 0
    for mat in (module.act(F, d - 1), module.act(FBAR, d - 1),
                module.act(H, d) - Mat.identity(dim) * mu.h,
                module.act(HBAR, d) - Mat.identity(dim) * mu.hbar):
        for col in range(mat.ncols):
            if space.add(mat.column(col)):
                count += 1
    return dim - space.dim()


# ---------------------------------------------------------------------------
# submodules and quotients

def submodule(module, generators):
    """Submodule generated by homogeneous vectors, as a TruncatedModule.

    ``generators`` is a list of (depth, coordinate vector) pairs.  The result
    keeps the parent's coset anchor (its top weight), so leading slices may
    be zero-dimensional.  The embedding into the parent is attached as
    ``.embedding``: {depth: Mat whose columns are the canonical basis}.
    """
    N = module.depth
    spaces = [RowSpace(module.dims[d]) for d in range(N + 1)]
    work = []
    for d, vec in generators:
        vec = [Fraction(x) for x in vec]
        if len(vec) != module.dims[d]:
            raise ValueError("generator at depth %d has length %d, expected %d"
                             % (d, len(vec), module.dims[d]))
        if spaces[d].add(vec):
            work.append((d, vec))
    while work:
        d, vec = work.pop()
        for g in GENERATORS:
            t = d + DEPTH_SHIFT[g]
            if not (0 <= t <= N) or module.dims[t] == 0:
                continue
            img = module.act(g, d).matvec(vec)
            if spaces[t].add(img):
                work.append((t, img))
    # canonical bases are the RREF rows; embed as columns
    dims = [spaces[d].dim() for d in range(N + 1)]
    embedding = {}
    for d in range(N + 1):
        cols = spaces[d].basis()
        embedding[d] = Mat(module.dims[d], dims[d],
                           [[cols[j][i] for j in range(dims[d])]
                            for i in range(module.dims[d])])
    actions = {g: {} for g in GENERATORS}
    for g in GENERATORS:
        for d in range(N + 1):
            t = d + DEPTH_SHIFT[g]
            if dims[d] == 0 or not (0 <= t <= N):
                continue
            image = module.act(g, d) * embedding[d]
            actions[g][d] = solve_columns(embedding[t], image)
    sub = TruncatedModule(module.top, N, dims, actions,
                          complete=module.complete, label="submodule")
    sub.embedding = embedding
    sub.parent = module
    return sub


def _closure_check(module, sub):
    for g in GENERATORS:
        for d in range(module.depth + 1):
            t = d + DEPTH_SHIFT[g]
            if sub.dims[d] == 0 or not (0 <= t <= module.depth):
                continue
            img = module.act(g, d) * sub.embedding[d]
            space = RowSpace(module.dims[t])
            for col in sub.embedding[t].columns():
                space.add(col)
            for col in img.columns():
                if not space.contains(col):
                    return False
    return True


def quotient(module, sub):
    """Quotient of a module by a submodule carrying an ``.embedding``.

    Coordinates of the quotient at each depth are the non-pivot coordinates
    of the submodule's RREF column space; the projection kills the submodule
    exactly.  Raises ValueError if the alleged submodule is not closed under
    the action inside the window.
    """
    if not hasattr(sub, "embedding"):
        raise ValueError("submodule must carry an embedding (use submodule())")
    if not _closure_check(module, sub):
        raise ValueError("not a submodule: images leave the span")
    N = module.depth
    proj, lift, dims = {}, {}, []
    for d in range(N + 1):
        amb = module.dims[d]
        space = RowSpace(amb)
        for col in sub.embedding[d].columns():
            space.add(col)
        pivots = list(space.pivots)
        rows = space.basis()
        kept = [c for c in range(amb) if c not in pivots]
        dims.append(len(kept))
        q = Mat.zeros(len(kept), amb)
        for r, c in enumerate(kept):
            q.rows[r][c] = Fraction(1)
            for row, p in zip(rows, pivots):
                q.rows[r][p] -= row[c]
        proj[d] = q
        lf = Mat.zeros(amb, len(kept))
        for r, c in enumerate(kept):
            lf.rows[c][r] = Fraction(1)
        lift[d] = lf
    actions = {g: {} for g in GENERATORS}
    for g in GENERATORS:
        for d in range(N + 1):
            t = d + DEPTH_SHIFT[g]
            if dims[d] == 0 or not (0 <= t <= N):
                continue
            actions[g][d] = proj[t] * (module.act(g, d) * lift[d])
    quo = TruncatedModule(module.top, N, dims, actions,
                          complete=module.complete, label="quotient")
    quo.projection = proj
    quo.parent = module
    return quo


def project_vector(quo, d, vec):
    """Image of an ambient depth-d vector in the quotient's coordinates."""
    return quo.projection[d].matvec([Fraction(x) for x in vec])


# ---------------------------------------------------------------------------
# composition multiplicities by peeling

@dataclass
class MultiplicityTable:
    """Composition multiplicities [ch] = sum m_k [simple at top - k*alpha],
    read off a truncated character by peeling top to bottom.  Only depths up
    to ``trusted_depth`` were used; deeper slices of the input are ignored."""
    top: Weight
    trusted_depth: int
    entries: dict  # k -> multiplicity of the simple with top - k*alpha

    def __getitem__(self, k):
        return self.entries.get(k, 0)

    def to_json(self):
        return {"top": self.top.to_json(),
                "trusted_depth": self.trusted_depth,
                "multiplicities": {str(k): m
                                   for k, m in sorted(self.entries.items())}}


def multiplicities(ch, guard=2):
    """Peel a truncated character into simple characters, top to bottom.

    At each depth k within the trusted window the residual dimension there
    is the multiplicity of the simple with highest weight top - k*alpha
    (simple characters are upper triangular against the depth grading, so
    the peeling order is forced and the answer unique).  A negative residual
    means the input was not a character of a module on this coset.
    """
    if guard < 0:
        raise ValueError("guard must be >= 0")
    trusted = ch.depth - guard
    if trusted < 0:
        raise ValueError("window too small for guard %d" % guard)
    residual = [ch.dim_at(d) for d in range(trusted + 1)]
    entries = {}
    for k in range(trusted + 1):
        m = residual[k]
        if m < 0:
            raise ValueError("negative residual at depth %d: not a character "
                             "on this coset" % k)
        if m == 0:
            continue
        entries[k] = m
        sdims = simple_dims(ch.top.down(k), trusted - k)
        for d in range(k, trusted + 1):
            residual[d] -= m * sdims[d - k]
    return MultiplicityTable(ch.top, trusted, entries)


# ---------------------------------------------------------------------------
# the uniserial quotients Delta / K_n

def _fbar_power_vector(module, i):
    """Coordinates of fbar^i v in the Verma basis (depth i, index i)."""
    vec = [Fraction(0)] * module.dims[i]
    vec[i] = Fraction(1)
    return vec


@dataclass
class FiltrationResult:
    """Top-down filtration M = X_0 > X_1 > ... > X_k = 0 of M = Delta/K_n,
    with layer i = X_i / X_{i+1} simple of highest weight top - i*alpha."""
    top: Weight
    n: int
    depth: int
    trusted_depth: int
    layers: list            # Characters of the layers, top-down
    uniserial: bool
    certificate: dict = field(default_factory=dict)


def mn_filtration(top, depth=None, guard=2):
    """Filtration certificate for M_n = Delta(top) / <f^(n+1) v>.

    ``top`` must be integral dominant: top(hbar) = 0 and top(h) = n a
    nonnegative integer.  The module M_n is uniserial with
    ceil((n+1)/2) layers, the i-th layer from the top being the simple of
    highest weight top - i*alpha; this function builds the chain
    X_i = image of <fbar^i v> and certifies both the layer characters and
    uniseriality (each successive quotient has exactly one singular line
    generating a character-simple submodule).
    """
    if not isinstance(top, Weight):
        top = Weight(*top)
    if not top.is_integral_dominant():
        raise ValueError("top weight must have hbar-value 0 and h-value a "
                         "nonnegative integer, got %s" % (top,))
    n = int(top.h)
    if depth is None:
        depth = n + guard + 3
    if depth < n + 1 + guard:
        raise ValueError("window %d too small: need at least %d"
                         % (depth, n + 1 + guard))
    trusted = depth - guard
    k = ceil((n + 1) / 2)
    delta = verma(top, depth)
    kn = submodule(delta, [(n + 1, [Fraction(1)] + [Fraction(0)] * (n + 1))])
    mn = quotient(delta, kn)

    # the chain X_0 = M_n  >  X_1  >  ...  >  X_k = 0
    chain = []
    for i in range(k + 1):
        if i > depth:
            break
        gen = project_vector(mn, i, _fbar_power_vector(delta, i))
        if all(x == 0 for x in gen):
            chain.append(None)  # the zero submodule
        else:
            chain.append(submodule(mn, [(i, gen)]))
    cert = {"layer_characters_match": True, "chain_strictly_decreasing": True,
            "terminates_at_zero": chain[-1] is None,
            "unique_simple_socle": True}

    def dims_of(x):
        return [0] * (depth + 1) if x is None else x.dims

    if dims_of(chain[0]) != mn.dims:
        cert["chain_strictly_decreasing"] = False  # X_0 must be all of M_n
    layers = []
    for i in range(k):
        xi, xi1 = dims_of(chain[i]), dims_of(chain[i + 1])
        ldims = {d: xi[d] - xi1[d] for d in range(trusted + 1)}
        layers.append(Character(top.down(i), trusted,
                                {d - i: m for d, m in ldims.items() if m}))
        expected = simple_dims(top.down(i), trusted - i)
        if [ldims.get(d + i, 0) for d in range(trusted + 1 - i)] != expected:
            cert["layer_characters_match"] = False
        if sum(xi[d] for d in range(trusted + 1)) <= \
           sum(xi1[d] for d in range(trusted + 1)):
            cert["chain_strictly_decreasing"] = False

    # uniseriality: in each successive quotient M_n / X_{i+1}, exactly one
    # singular line generates a submodule whose character is simple
    for i in range(k):
        if chain[i + 1] is None:
            stage = mn
        else:
            stage = quotient(mn, chain[i + 1])
        candidates = 0
        for j in range(trusted + 1):
            if stage.dims[j] == 0:
                continue
            for vec in singular_vectors(stage, top.down(j)):
                gen = submodule(stage, [(j, vec)])
                sdims = simple_dims(top.down(j), trusted - j)
                if [gen.dims[d + j] for d in range(trusted + 1 - j)] == sdims:
                    candidates += 1
        if candidates != 1:
            cert["unique_simple_socle"] = False
    # layers re-anchored at their own tops
    layers = [Character(c.top, c.depth, c.dims) for c in layers]
    ok = all(cert.values())
    return FiltrationResult(top, n, depth, trusted, layers, ok, cert)


# ---------------------------------------------------------------------------
# Hasse diagram of the known submodules of an integral dominant Verma

@dataclass
class SubmodulePoset:
    """Covering diagram of the standard submodules of Delta(top):
    the embedded Vermas V_i = <fbar^i v> and the kernels K_m = <f^(m+1)
    fbar^((n-m)/2) v>, ordered by inclusion inside the window."""
    top: Weight
    depth: int
    nodes: list       # (label, kind, generator depth, dims list)
    edges: list       # (upper label, lower label) covering pairs
    window_offsets: int

    def node_labels(self):
        return [n[0] for n in self.nodes]

    def to_json(self):
        return {"top": self.top.to_json(), "depth": self.depth,
                "nodes": [{"label": l, "kind": k, "generator_depth": d,
                           "dims": dims} for l, k, d, dims in self.nodes],
                "edges": [list(e) for e in self.edges]}

    def to_dot(self):
        lines = ["digraph submodules {",
                 "  // covering relations, larger module on top",
                 "  rankdir=TB;",
                 "  node [shape=box];"]
        for label, kind, gdepth, dims in self.nodes:
            total = sum(dims)
            lines.append('  "%s" [label="%s\\ndim %d in window"];'
                         % (label, label, total))
        for up, down in self.edges:
            lines.append('  "%s" -> "%s";' % (up, down))
        lines.append("}")
        return "\n".join(lines) + "\n"


def hasse_diagram(top, depth=None, offsets=None):
    """Hasse diagram of the embedded Vermas and the kernels K_m inside the
    integral dominant Verma module Delta(top), computed by explicit
    generation and pairwise span comparison inside the window.

    Nodes: V_i = submodule generated by fbar^i v (an embedded Verma of
    highest weight top - i*alpha), for i = 0..offsets; and K_m = submodule
    generated by f^(m+1) fbar^((n-m)/2) v for m = n, n-2, ..., n-2*floor(n/2)
    (the kernels of the maps onto the uniserial quotients).
    """
    if not isinstance(top, Weight):
        top = Weight(*top)
    if not top.is_integral_dominant():
        raise ValueError("top weight must have hbar-value 0 and h-value a "
                         "nonnegative integer, got %s" % (top,))
    n = int(top.h)
    k = n // 2  # deepest i with K_{n-2i} distinct
    if offsets is None:
        offsets = k + 2
    if depth is None:
        depth = n + offsets + 3
    delta = verma(top, depth)
    mods = {}
    for i in range(offsets + 1):
        mods["V%d" % i] = ("verma", i,
                           submodule(delta, [(i, _fbar_power_vector(delta, i))]))
    for i in range(k + 1):
        m = n - 2 * i
        d = m + 1 + i
        if d > depth:
            continue
        vec = [Fraction(0)] * delta.dims[d]
        vec[i] = Fraction(1)  # f^(m+1) fbar^i v
        mods["K%d" % m] = ("kernel", d, submodule(delta, [(d, vec)]))
    labels = sorted(mods)
    spaces = {}
    for label in labels:
        sub = mods[label][2]
        spaces[label] = []
        for d in range(depth + 1):
            rs = RowSpace(delta.dims[d])
            for col in sub.embedding[d].columns():
                rs.add(col)
            spaces[label].append(rs)

    def leq(a, b):  # a contained in b
        return all(spaces[b][d].contains_space(spaces[a][d])
                   for d in range(depth + 1))

    strict = {(a, b) for a in labels for b in labels
              if a != b and leq(a, b) and not leq(b, a)}
    edges = []
    for a, b in strict:  # b covers a unless something sits strictly between
        if not any((a, c) in strict and (c, b) in strict for c in labels):
            edges.append((b, a))
    nodes = [(label, mods[label][0], mods[label][1], mods[label][2].dims)
             for label in labels]
    order = {"verma": 0, "kernel": 1}
    nodes.sort(key=lambda t: (order[t[1]], t[2]))
    edges.sort()
    return SubmodulePoset(top, depth, nodes, edges, offsets)
