"""Computable invariants of bracket presentations: abelianization and
counts of homomorphisms into finite groups.

Homomorphism counts are equivalence invariants, so they serve both as
evidence when a certificate search fails (differing counts rule a candidate
out) and as a consistency check on certificates that were found.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

import numpy as np

from arrgroup.vankampen import Presentation


# ---------------------------------------------------------------------------
# abelianization via integer Smith normal form
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class AbelianInvariants:
    rank: int
    torsion: tuple  # elementary divisors > 1, ascending

    def __str__(self):
        parts = [f"Z^{self.rank}"] if self.rank else []
        parts.extend(f"Z/{d}" for d in self.torsion)
        return " + ".join(parts) if parts else "0"


def _exponent_vector(word, ngens):
    v = [0] * ngens
    for c in word:
        v[abs(c) - 1] += 1 if c > 0 else -1
    return v


def smith_diagonal(rows, ncols):
    """Diagonal of the Smith normal form of an integer matrix given as a
    list of rows, by exact elementary operations; entries satisfy
    d1 | d2 | ..."""
    mat = [list(r) for r in rows]
    nrows = len(mat)
    diag = []
    top = 0
    while top < nrows and top < ncols:
        pivot = None
        for i in range(top, nrows):
            for j in range(top, ncols):
                v = mat[i][j]
                if v and (pivot is None or abs(v) < abs(pivot[2])):
                    pivot = (i, j, v)
        if pivot is None:
            break
        pi, pj, _ = pivot
        mat[top], mat[pi] = mat[pi], mat[top]
        for row in mat:
            row[top], row[pj] = row[pj], row[top]
        stable = False
        while not stable:
            stable = True
            p = mat[top][top]
            for i in range(top + 1, nrows):
                q = mat[i][top] // p
                if q:
                    mat[i] = [a - q * b for a, b in zip(mat[i], mat[top])]
                if mat[i][top]:
                    mat[top], mat[i] = mat[i], mat[top]
                    stable = False
                    break
            if not stable:
                continue
            for j in range(top + 1, ncols):
                q = mat[top][j] // p
                if q:
                    for row in mat[top:]:
                        row[j] -= q * row[top]
                if mat[top][j]:
                    for row in mat[top:]:
                        row[top], row[j] = row[j], row[top]
                    stable = False
                    break
        diag.append(abs(mat[top][top]))
        top += 1
    changed = True
    while changed:
        changed = False
        for i in range(len(diag) - 1):
            a, b = diag[i], diag[i + 1]
            if a and b % a:
                g = gcd(a, b)
                diag[i], diag[i + 1] = g, a * b // g
                changed = True
    return diag


def abelianization(p: Presentation) -> AbelianInvariants:
    """Invariants of the abelianized group.  Each bracket contributes one
    row per split-point equality (the difference of the two product
    exponent vectors); for honest bracket input these rows vanish and the
    result is free of rank ngens."""
    rows = []
    for rel in p.relations:
        prods = rel.rotation_products()
        base = _exponent_vector(prods[0], p.ngens)
        for q in prods[1:]:
            vec = _exponent_vector(q, p.ngens)
            rows.append([a - b for a, b in zip(vec, base)])
    diag = [d for d in smith_diagonal(rows, p.ngens) if d]
    return AbelianInvariants(p.ngens - len(diag),
                             tuple(d for d in diag if d > 1))


# ---------------------------------------------------------------------------
# finite group tables
# ---------------------------------------------------------------------------

class GroupTableError(Exception):
    pass


@dataclass(frozen=True)
class FiniteGroupTable:
    """A finite group as a validated multiplication table.

    table[i][j] is the index of g_i * g_j; index 0 is the identity;
    inverse[i] is the index of g_i^-1.
    """

    order: int
    names: tuple
    table: tuple  # of row tuples
    inverse: tuple

    @staticmethod
    def make(rows, names=None) -> "FiniteGroupTable":
        order = len(rows)
        if any(len(r) != order for r in rows):
            raise GroupTableError("table is not square")
        for r in rows:
            for v in r:
                if not 0 <= v < order:
                    raise GroupTableError(f"entry {v} out of range")
        if names is None:
            names = tuple(f"g{i}" for i in range(order))
        if len(names) != order:
            raise GroupTableError("wrong number of names")
        for j in range(order):
            if rows[0][j] != j or rows[j][0] != j:
                raise GroupTableError("element 0 is not an identity")
        inverse = [None] * order
        for i in range(order):
            for j in range(order):
                if rows[i][j] == 0:
                    inverse[i] = j
                    break
            if inverse[i] is None or rows[inverse[i]][i] != 0:
                raise GroupTableError(f"element {i} has no inverse")
        for a in range(order):
            for b in range(order):
                ab = rows[a][b]
                for c in range(order):
                    if rows[ab][c] != rows[a][rows[b][c]]:
                        raise GroupTableError(
                            f"associativity fails at ({a},{b},{c})")
        return FiniteGroupTable(order, tuple(names),
                                tuple(tuple(r) for r in rows),
                                tuple(inverse))


def _perm_group(generators, degree):
    """Close a set of permutations (tuples of images, 0-based) under
    composition and return the table with the identity first and the other
    elements in sorted order."""
    identity = tuple(range(degree))
    elems = {identity}
    frontier = [identity]
    gens = [tuple(g) for g in generators]
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                q = tuple(p[g[i]] for i in range(degree))
                if q not in elems:
                    elems.add(q)
                    nxt.append(q)
        frontier = nxt
    ordered = [identity] + sorted(elems - {identity})
    index = {p: i for i, p in enumerate(ordered)}
    rows = []
    for a in ordered:
        # (a * b)(x) = a(b(x))
        rows.append(tuple(index[tuple(a[b[i]] for i in range(degree))]
                          for b in ordered))
    names = tuple("".join(str(x + 1) for x in p) for p in ordered)
    return FiniteGroupTable.make(rows, names)


def builtin_group(name: str) -> FiniteGroupTable:
    """Symmetric, alternating and dihedral tables used for counting:
    S3, S4, A4, D4, A5."""
    name = name.upper()
    if name == "S3":
        return _perm_group([(1, 0, 2), (0, 2, 1)], 3)
    if name == "S4":
        return _perm_group([(1, 0, 2, 3), (0, 2, 1, 3), (0, 1, 3, 2)], 4)
    if name == "A4":
        return _perm_group([(1, 2, 0, 3), (0, 2, 3, 1)], 4)
    if name == "D4":
        return _perm_group([(1, 2, 3, 0), (3, 2, 1, 0)], 4)
    if name == "A5":
        return _perm_group([(1, 2, 0, 3, 4), (0, 1, 3, 4, 2),
                            (2, 0, 1, 3, 4)], 5)
    raise GroupTableError(f"no builtin group named {name!r}")


def format_group_table(g: FiniteGroupTable) -> str:
    lines = [f"order={g.order}", "names=" + " ".join(g.names)]
    lines.extend(" ".join(str(v) for v in row) for row in g.table)
    return "\n".join(lines) + "\n"


def parse_group_table(text: str) -> FiniteGroupTable:
    order = None
    names = None
    rows = []
    for raw in text.splitlines():
        body = raw.split("#", 1)[0].strip()
        if not body:
            continue
        if body.startswith("order="):
            order = int(body[6:])
        elif body.startswith("names="):
            names = tuple(body[6:].split())
        else:
            rows.append(tuple(int(t) for t in body.split()))
    if order is None:
        raise GroupTableError("missing order= header")
    if len(rows) != order:
        raise GroupTableError(f"expected {order} rows, found {len(rows)}")
    return FiniteGroupTable.make(rows, names)


# ---------------------------------------------------------------------------
# homomorphism counting
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class HomCount:
    count: int | None  # None when aborted
    outcome: str  # "exact" | "aborted"
    nodes: int


class _Abort(Exception):
    pass


def _equations(p: Presentation):
    """Split-point equalities (base word, other word) with their generator
    support."""
    eqs = []
    for rel in p.relations:
        prods = rel.rotation_products()
        base = prods[0]
        for q in prods[1:]:
            support = frozenset(abs(c) for c in base) | frozenset(
                abs(c) for c in q)
            if support:
                eqs.append((base, q, support))
    return eqs


def _assignment_order(p: Presentation):
    """Greedy generator order that makes equations decidable as early as
    possible: each step takes the generator completing the most pending
    equation supports (ties: most pending appearances, then lowest
    index)."""
    eqs = _equations(p)
    order = []
    assigned = set()
    remaining = set(range(1, p.ngens + 1))
    pending = list(eqs)
    while remaining:
        def score(g):
            completes = sum(1 for _, _, s in pending
                            if g in s and s <= assigned | {g})
            appears = sum(1 for _, _, s in pending if g in s)
            return (completes, appears, -g)
        best = max(sorted(remaining), key=score)
        order.append(best)
        assigned.add(best)
        remaining.discard(best)
        pending = [e for e in pending if not e[2] <= assigned]
    return order


def _constraints_by_layer(p: Presentation, order):
    """Equations grouped by the first layer of the assignment order where
    they are decidable, rewritten into layer coordinates (generator
    order[j-1] becomes column j)."""
    col = {g: j + 1 for j, g in enumerate(order)}

    def recode(word):
        return tuple(col[c] if c > 0 else -col[-c] for c in word)

    layers = {j: [] for j in range(1, len(order) + 1)}
    for base, q, support in _equations(p):
        layer = max(col[g] for g in support)
        layers[layer].append((recode(base), recode(q)))
    for eqs in layers.values():
        eqs.sort(key=lambda e: (len(e[0]) + len(e[1]), e))
    return layers


def _brackets_by_layer(p: Presentation, order):
    """Whole brackets grouped by the layer where all their entries are
    decidable (every split-point equality of a bracket has the same
    support), entries recoded into layer coordinates."""
    col = {g: j + 1 for j, g in enumerate(order)}

    def recode(word):
        return tuple(col[c] if c > 0 else -col[-c] for c in word)

    layers = {j: [] for j in range(1, len(order) + 1)}
    for rel in p.relations:
        support = {abs(c) for w in rel.words for c in w}
        if not support:
            continue
        layer = max(col[g] for g in support)
        layers[layer].append(tuple(recode(w) for w in rel.words))
    for brs in layers.values():
        brs.sort(key=lambda ws: (sum(len(w) for w in ws), ws))
    return layers


def hom_count(p: Presentation, table: FiniteGroupTable,
              node_cap: int = 100_000_000) -> HomCount:
    """Count homomorphisms from the presented group into the table group.

    Layered backtracking over generator images, vectorized: rows are
    surviving partial assignments and the candidate image of the next
    generator is a broadcast axis, so a bracket is checked on the whole
    (rows, order) grid at once.  A bracket [w1..wk] holds iff the prefix
    product v(wm..w1) commutes with the suffix product v(wk..w_{m+1}) for
    every split point m, which evaluates every equality from one pass over
    the entries.  Aborts (honestly) when more than node_cap candidate
    assignments would be generated."""
    order = table.order
    dtype = np.uint8 if order <= 256 else np.int32
    tab = np.array(table.table, dtype=dtype)
    inv = np.array(table.inverse, dtype=dtype)
    layers = _brackets_by_layer(p, _assignment_order(p))
    last_constrained = max((j for j, brs in layers.items() if brs), default=0)
    chunk_rows = max(1, (1 << 22) // order)
    gcol = np.arange(order, dtype=dtype)[None, :]
    state = {"nodes": 0}

    def eval_word(word, part, layer):
        # (rows, order) value grid; column `layer` is the broadcast axis
        val = np.zeros((len(part), 1), dtype=dtype)
        for c in word:
            a = abs(c)
            idx = gcol if a == layer else part[:, a - 1][:, None]
            if c < 0:
                idx = inv[idx]
            val = tab[val, idx]
        return val

    def bracket_keep(entries, part, layer):
        vals = [eval_word(w, part, layer) for w in entries]
        k = len(vals)
        suffix = [None] * k  # suffix[m-1] = v(wk ... w_{m+1})
        acc = vals[k - 1]
        for m in range(k - 1, 0, -1):
            suffix[m - 1] = acc
            if m > 1:
                acc = tab[acc, vals[m - 1]]
        keep = None
        prefix = vals[0]
        for m in range(1, k):
            ok = tab[suffix[m - 1], prefix] == tab[prefix, suffix[m - 1]]
            keep = ok if keep is None else keep & ok
            if m < k - 1:
                prefix = tab[vals[m], prefix]
        return keep

    def expand(assigned, layer):
        if layer > last_constrained:
            return len(assigned) * order ** (p.ngens - layer + 1)
        total = 0
        for lo in range(0, len(assigned), chunk_rows):
            part = assigned[lo:lo + chunk_rows]
            state["nodes"] += len(part) * order
            if state["nodes"] > node_cap:
                raise _Abort
            keep = np.ones((len(part), order), dtype=bool)
            for entries in layers[layer]:
                if not keep.any():
                    break
                keep &= bracket_keep(entries, part, layer)
            if layer == last_constrained:
                total += int(keep.sum()) * order ** (p.ngens - layer)
                continue
            ri, gi = np.nonzero(keep)
            nxt = np.empty((len(ri), layer), dtype=dtype)
            nxt[:, :layer - 1] = part[ri]
            nxt[:, layer - 1] = gi.astype(dtype)
            total += expand(nxt, layer + 1)
        return total

    seed = np.zeros((1, 0), dtype=dtype)
    try:
        count = expand(seed, 1)
    except _Abort:
        return HomCount(None, "aborted", state["nodes"])
    return HomCount(int(count), "exact", state["nodes"])


def hom_count_scalar(p: Presentation, table: FiniteGroupTable,
                     node_cap: int = 1_000_000) -> HomCount:
    """Plain backtracking reference for cross-checking the vectorized
    counter on small inputs."""
    order = table.order
    tab = table.table
    inv = table.inverse
    layers = _constraints_by_layer(p, list(range(1, p.ngens + 1)))
    state = {"nodes": 0}

    def value(word, assign):
        v = 0
        for c in word:
            x = assign[abs(c) - 1]
            if c < 0:
                x = inv[x]
            v = tab[v][x]
        return v

    def recurse(assign, layer):
        if layer > p.ngens:
            return 1
        total = 0
        for x in range(order):
            state["nodes"] += 1
            if state["nodes"] > node_cap:
                raise _Abort
            assign.append(x)
            if all(value(a, assign) == value(b, assign)
                   for a, b in layers[layer]):
                total += recurse(assign, layer + 1)
            assign.pop()
        return total

    try:
        count = recurse([], 1)
    except _Abort:
        return HomCount(None, "aborted", state["nodes"])
    return HomCount(count, "exact", state["nodes"])
