"""Certified transformations between bracket presentations.

``prove_equivalent`` searches for a finite sequence of sound rewriting steps
carrying the source presentation, relation by relation, onto the target:

* ``rot``: rotate the entry tuple of one bracket (a relation is cyclic),
* ``conj``: simultaneously conjugate every entry of one bracket by a
  generator (re-chooses the split point of the underlying loop),
* ``comm``: inside one entry, replace a product u^a v^b by v^b u^a, licensed
  by another relation of the presentation that is a 2-bracket [u, v],
* ``swap``: inside one entry, replace one split-point product of another
  relation by a different split-point product of the same relation (or the
  inverse of one by the inverse of the other),
* ``expand``: insert a canceling pair g g^-1 (used by inverted steps to undo
  free reduction), and ``reduce``: freely reduce one entry.

Every accepted search move is recorded together with a mechanically built
inverse, so success produces a two-sided :class:`Certificate` which the
independent checker :func:`replay` verifies letter for letter in both
directions.  Failure is reported as Unknown with the stuck states, never as
a guess.
"""

from __future__ import annotations

import heapq
import itertools
from collections import deque
from dataclasses import dataclass, replace as dc_replace

from arrgroup.braid import format_word, free_reduce, word_inverse
from arrgroup.vankampen import (
    Presentation,
    candidate_cf,
    is_conjugation_free,
    relabel_presentation,
)


@dataclass(frozen=True)
class Budget:
    """Caps for the proof search and downstream counting.

    ``bfs_nodes``/``bfs_depth`` bound the per-relation rescue search that
    runs when the guided phase stalls; ``hom_nodes`` caps the backtracking
    tree of homomorphism counting.
    """

    max_word_len: int = 64
    max_steps: int = 20000
    plateau_nodes: int = 4000
    bfs_nodes: int = 20000
    bfs_depth: int = 12
    hom_nodes: int = 100_000_000


class ProverError(Exception):
    pass


class ReplayError(Exception):
    """A certificate failed verification; carries a machine-readable code."""

    def __init__(self, code, message):
        super().__init__(f"{code}: {message}")
        self.code = code


class _BudgetExceeded(Exception):
    pass


class _WordTooLong(Exception):
    pass


@dataclass(frozen=True)
class Certificate:
    ngens: int
    nrels: int
    match: tuple  # of (source_index, target_index)
    forward: tuple  # of step tuples
    backward: tuple

    @property
    def nsteps(self):
        return len(self.forward) + len(self.backward)


@dataclass(frozen=True)
class ProveResult:
    status: str  # "certified" | "unknown"
    certificate: Certificate | None
    reason: str


# ---------------------------------------------------------------------------
# licensed rewrite enumeration (shared by the prover and the checker)
# ---------------------------------------------------------------------------

def rotation_products(words):
    """The split-point products of a bracket, freely reduced: product m is
    w_{m} w_{m-1} ... w_1 w_k ... w_{m+1} read with 1-based entries."""
    k = len(words)
    out = []
    for m in range(k):
        idx = list(range(m - 1, -1, -1)) + list(range(k - 1, m - 1, -1))
        out.append(free_reduce([c for t in idx for c in words[t]]))
    return out


def _signed(word, sign):
    return tuple(word) if sign == 1 else word_inverse(word)


def _comm_sides(src_words, e1, s1, e2, s2):
    a = _signed(src_words[e1], s1)
    b = _signed(src_words[e2], s2)
    return free_reduce(a + b), free_reduce(b + a)


def _comm_variants(src_words):
    out = []
    for (e1, e2) in ((0, 1), (1, 0)):
        for s1 in (1, -1):
            for s2 in (1, -1):
                lhs, rhs = _comm_sides(src_words, e1, s1, e2, s2)
                if lhs and lhs != rhs:
                    out.append((lhs, rhs, (e1, s1, e2, s2)))
    return out


def _swap_variants(src_words):
    prods = rotation_products(src_words)
    out = []
    for m1 in range(len(prods)):
        for m2 in range(len(prods)):
            if m1 == m2:
                continue
            for iv in (0, 1):
                lhs = _signed(prods[m1], 1 - 2 * iv)
                rhs = _signed(prods[m2], 1 - 2 * iv)
                if lhs and lhs != rhs:
                    out.append((lhs, rhs, (m1, m2, iv)))
    return out


def _reduce_trace(letters):
    """Leftmost-pair free reduction.  Returns (reduced word, trace) where
    trace lists (position, letter) removals; re-inserting (letter, -letter)
    at each position, in reverse order, rebuilds the input exactly."""
    word = list(letters)
    trace = []
    changed = True
    while changed:
        changed = False
        for p in range(len(word) - 1):
            if word[p] == -word[p + 1]:
                trace.append((p, word[p]))
                del word[p:p + 2]
                changed = True
                break
    return tuple(word), trace


# ---------------------------------------------------------------------------
# prover state: applies moves while recording forward and inverse steps
# ---------------------------------------------------------------------------

class _State:
    def __init__(self, source: Presentation, budget: Budget):
        self.rels = [list(rel.words) for rel in source.relations]
        self.forward = []
        self.backward = []  # reverse-chronological: executable back to front
        self.budget = budget

    def total_len(self, r):
        return sum(len(w) for w in self.rels[r])

    def snapshot(self):
        return ([list(r) for r in self.rels], len(self.forward),
                len(self.backward))

    def restore(self, snap):
        rels, nf, nb = snap
        self.rels = [list(r) for r in rels]
        del self.forward[nf:]
        del self.backward[:len(self.backward) - nb]

    def _bump(self, n=1):
        if len(self.forward) + n > self.budget.max_steps:
            raise _BudgetExceeded

    def apply_rot(self, r, k):
        self._bump()
        words = self.rels[r]
        n = len(words)
        k %= n
        if k == 0:
            return
        self.rels[r] = words[k:] + words[:k]
        self.forward.append(("rot", r, k))
        self.backward[0:0] = [("rot", r, (n - k) % n)]

    def apply_conj(self, r, g):
        self._bump()
        new = [free_reduce((-g,) + tuple(w) + (g,)) for w in self.rels[r]]
        if any(len(w) > self.budget.max_word_len for w in new):
            raise _WordTooLong
        self.rels[r] = new
        self.forward.append(("conj", r, g))
        self.backward[0:0] = [("conj", r, -g)]

    def apply_subst(self, r, e, pos, lhs, rhs, fwd, bwd):
        self._bump(2)
        w = tuple(self.rels[r][e])
        if w[pos:pos + len(lhs)] != lhs:
            raise ProverError("substitution site mismatch")
        unreduced = w[:pos] + rhs + w[pos + len(lhs):]
        reduced, trace = _reduce_trace(unreduced)
        if len(reduced) > self.budget.max_word_len:
            raise _WordTooLong
        self.rels[r][e] = reduced
        self.forward.extend([fwd, ("reduce", r, e)])
        expands = [("expand", r, e, p, g) for (p, g) in reversed(trace)]
        self.backward[0:0] = expands + [bwd]

    def apply_licensed(self, r, move):
        e, pos, lhs, rhs, tag = move
        if tag[0] == "comm":
            _, s, e1, s1, e2, s2 = tag
            fwd = ("comm", r, e, pos, s, e1, s1, e2, s2)
            bwd = ("comm", r, e, pos, s, e2, s2, e1, s1)
        else:
            _, s, m1, m2, iv = tag
            fwd = ("swap", r, e, pos, s, m1, m2, iv)
            bwd = ("swap", r, e, pos, s, m2, m1, iv)
        self.apply_subst(r, e, pos, lhs, rhs, fwd, bwd)


def _licenses(rels, skip):
    out = []
    for s, ws in enumerate(rels):
        if s == skip:
            continue
        if len(ws) == 2:
            for lhs, rhs, (e1, s1, e2, s2) in _comm_variants(ws):
                out.append((lhs, rhs, ("comm", s, e1, s1, e2, s2)))
        for lhs, rhs, (m1, m2, iv) in _swap_variants(ws):
            out.append((lhs, rhs, ("swap", s, m1, m2, iv)))
    return out


def _find_shortening(rels, r, licenses):
    for e, w in enumerate(rels[r]):
        w = tuple(w)
        for lhs, rhs, tag in licenses:
            length = len(lhs)
            if length > len(w):
                continue
            for pos in range(len(w) - length + 1):
                if w[pos:pos + length] == lhs:
                    red, _ = _reduce_trace(w[:pos] + rhs + w[pos + length:])
                    if len(red) < len(w):
                        return (e, pos, lhs, rhs, tag)
    return None


def _strip_fixpoint(state, r):
    progressed = False
    while True:
        move = _find_shortening(state.rels, r, _licenses(state.rels, r))
        if move is None:
            return progressed
        state.apply_licensed(r, move)
        progressed = True


def _entry_plateau(state, r):
    """Search for a strictly shorter form of one entry through licensed
    substitutions that never lengthen it (equal-length bridge steps allowed,
    as when a product of a plain bracket must be re-split before anything
    cancels).  Applies the found path and reports success."""
    licenses = _licenses(state.rels, r)
    budget = state.budget
    for e in range(len(state.rels[r])):
        start = tuple(state.rels[r][e])
        if len(start) < 3:
            continue
        found = _plateau_path(start, licenses, budget.plateau_nodes)
        if found:
            for pos, lhs, rhs, tag in found:
                state.apply_licensed(r, (e, pos, lhs, rhs, tag))
            return True
    return False


def _plateau_path(start, licenses, node_cap):
    visited = {start}
    queue = deque([(start, ())])
    nodes = 0
    while queue:
        w, path = queue.popleft()
        for lhs, rhs, tag in licenses:
            length = len(lhs)
            if length > len(w):
                continue
            for pos in range(len(w) - length + 1):
                if w[pos:pos + length] != lhs:
                    continue
                red, _ = _reduce_trace(w[:pos] + rhs + w[pos + length:])
                if len(red) > len(start) or red in visited:
                    continue
                newpath = path + ((pos, lhs, rhs, tag),)
                if len(red) < len(start):
                    return newpath
                nodes += 1
                if nodes > node_cap:
                    return None
                visited.add(red)
                queue.append((red, newpath))
    return None


def _improve_fixpoint(state, r):
    progressed = False
    while True:
        if _strip_fixpoint(state, r):
            progressed = True
            continue
        if _entry_plateau(state, r):
            progressed = True
            continue
        return progressed


def _wrap_depth(w):
    d = 0
    while d < (len(w) - 1) // 2 and w[d] == -w[-1 - d]:
        d += 1
    return d


def _rot_hits_pool(words, pool):
    words = tuple(tuple(w) for w in words)
    n = len(words)
    for k in range(n):
        if pool.get(words[k:] + words[:k]):
            return True
    return False


def _conj_lookahead(state, r, pool):
    """Peel a conjugating prefix off one wrapped entry (re-splitting the
    relation), then strip; keep the chain only if it shortens the relation
    or lands on an unclaimed target."""
    total0 = state.total_len(r)
    for e in range(len(state.rels[r])):
        depth = _wrap_depth(tuple(state.rels[r][e]))
        if depth == 0:
            continue
        for dd in range(1, depth + 1):
            snap = state.snapshot()
            try:
                ok = True
                for _ in range(dd):
                    w = tuple(state.rels[r][e])
                    if len(w) < 3 or w[0] != -w[-1]:
                        ok = False
                        break
                    state.apply_conj(r, w[0])
                if ok:
                    _improve_fixpoint(state, r)
                    if (state.total_len(r) < total0
                            or _rot_hits_pool(state.rels[r], pool)):
                        return True
            except _WordTooLong:
                pass
            state.restore(snap)
    return False


def _try_claim(state, r, pool, claims):
    cur = tuple(tuple(w) for w in state.rels[r])
    n = len(cur)
    for k in range(n):
        rot = cur[k:] + cur[:k]
        waiting = pool.get(rot)
        if waiting:
            state.apply_rot(r, k)
            claims[r] = waiting.pop(0)
            return True
    return False


def _guided_phase(state, pool, claims):
    progress = True
    while progress:
        progress = False
        for r in range(len(state.rels)):
            if r in claims:
                continue
            if _try_claim(state, r, pool, claims):
                progress = True
                continue
            if _improve_fixpoint(state, r):
                progress = True
            if r not in claims and _try_claim(state, r, pool, claims):
                progress = True
                continue
            if r in claims:
                continue
            if _conj_lookahead(state, r, pool):
                progress = True
                _try_claim(state, r, pool, claims)


# ---------------------------------------------------------------------------
# breadth-first rescue for relations the guided phase cannot finish
# ---------------------------------------------------------------------------

def _simulate(words, move, max_len):
    if move[0] == "conj":
        g = move[1]
        new = tuple(free_reduce((-g,) + w + (g,)) for w in words)
    else:
        _, e, pos, lhs, rhs = move[:5]
        w = words[e]
        if w[pos:pos + len(lhs)] != lhs:
            return None
        red, _ = _reduce_trace(w[:pos] + rhs + w[pos + len(lhs):])
        new = words[:e] + (red,) + words[e + 1:]
    if any(len(w) > max_len for w in new):
        return None
    return new


def _bfs_moves(words, licenses, ngens):
    for g in range(1, ngens + 1):
        yield ("conj", g), None
        yield ("conj", -g), None
    for e, w in enumerate(words):
        for lhs, rhs, tag in licenses:
            length = len(lhs)
            if length > len(w):
                continue
            for pos in range(len(w) - length + 1):
                if w[pos:pos + length] == lhs:
                    yield ("subst", e, pos, lhs, rhs), tag


def _bfs_rescue(state, r, pool, ngens):
    """Best-first search (priority: total relation length, then insertion
    order) over single-relation moves, other relations frozen."""
    budget = state.budget
    base = tuple(tuple(w) for w in state.rels[r])
    licenses = _licenses(state.rels, r)
    visited = {base}
    counter = itertools.count()
    heap = [(sum(len(w) for w in base), next(counter), base, ())]
    nodes = 0
    while heap:
        _, _, words, path = heapq.heappop(heap)
        if len(path) >= budget.bfs_depth:
            continue
        for move, tag in _bfs_moves(words, licenses, ngens):
            new = _simulate(words, move, budget.max_word_len)
            if new is None or new in visited:
                continue
            nodes += 1
            if nodes > budget.bfs_nodes:
                return False
            visited.add(new)
            newpath = path + ((move, tag),)
            if _rot_hits_pool(new, pool):
                for mv, mtag in newpath:
                    if mv[0] == "conj":
                        state.apply_conj(r, mv[1])
                    else:
                        _, e, pos, lhs, rhs = mv
                        state.apply_licensed(r, (e, pos, lhs, rhs, mtag))
                return True
            heapq.heappush(heap, (sum(len(w) for w in new), next(counter),
                                  new, newpath))
    return False


# ---------------------------------------------------------------------------
# prove / replay
# ---------------------------------------------------------------------------

def _unmatched_report(state, claims):
    stuck = []
    for r in range(len(state.rels)):
        if r not in claims:
            body = " ; ".join(format_word(tuple(w)) for w in state.rels[r])
            stuck.append(f"relation {r}: [ {body} ]")
    return "; ".join(stuck)


def prove_equivalent(source: Presentation, target: Presentation,
                     budget: Budget | None = None) -> ProveResult:
    """Search for a certificate carrying source onto target.

    Returns status "certified" with a two-sided, replay-checked certificate,
    or "unknown" with the stuck intermediate states.  Unknown means the
    search failed within budget, nothing more.
    """
    budget = budget or Budget()
    if source.ngens != target.ngens:
        return ProveResult("unknown", None, "generator counts differ")
    if len(source.relations) != len(target.relations):
        return ProveResult("unknown", None, "relation counts differ")

    pool = {}
    for t, rel in enumerate(target.relations):
        pool.setdefault(rel.words, []).append(t)

    state = _State(source, budget)
    claims = {}
    try:
        _guided_phase(state, pool, claims)
        progress = True
        while progress and len(claims) < len(state.rels):
            progress = False
            for r in range(len(state.rels)):
                if r in claims:
                    continue
                if _bfs_rescue(state, r, pool, source.ngens):
                    if not _try_claim(state, r, pool, claims):
                        raise ProverError("rescue landed off target")
                    _guided_phase(state, pool, claims)
                    progress = True
    except _BudgetExceeded:
        return ProveResult("unknown", None, "step budget exhausted")
    except _WordTooLong:
        return ProveResult("unknown", None, "word length budget exhausted")

    if len(claims) < len(state.rels):
        return ProveResult(
            "unknown", None, "no path found for: " +
            _unmatched_report(state, claims))

    cert = Certificate(
        ngens=source.ngens,
        nrels=len(state.rels),
        match=tuple(sorted(claims.items())),
        forward=tuple(state.forward),
        backward=tuple(state.backward),
    )
    try:
        replay(source, target, cert)
    except ReplayError as exc:
        return ProveResult("unknown", None,
                           f"internal certificate check failed: {exc}")
    return ProveResult("certified", cert, "")


def _replay_step(rels, step, nrels):
    kind = step[0]
    if kind == "rot":
        _, r, k = step
        words = rels[r]
        k %= len(words)
        rels[r] = words[k:] + words[:k]
    elif kind == "conj":
        _, r, g = step
        rels[r] = [free_reduce((-g,) + tuple(w) + (g,)) for w in rels[r]]
    elif kind == "reduce":
        _, r, e = step
        rels[r][e] = free_reduce(rels[r][e])
    elif kind == "expand":
        _, r, e, pos, g = step
        w = tuple(rels[r][e])
        if not 0 <= pos <= len(w):
            raise ReplayError("bad-position", f"expand at {pos} in {w}")
        rels[r][e] = w[:pos] + (g, -g) + w[pos:]
    elif kind in ("comm", "swap"):
        r, e, pos, s = step[1:5]
        if s == r:
            raise ReplayError("self-justified", f"relation {r} cites itself")
        if not 0 <= s < nrels:
            raise ReplayError("bad-index", f"source relation {s}")
        src = [tuple(w) for w in rels[s]]
        if kind == "comm":
            _, _, _, _, _, e1, s1, e2, s2 = step
            if len(src) != 2:
                raise ReplayError("not-a-pair",
                                  f"relation {s} is not a 2-bracket")
            lhs, rhs = _comm_sides(src, e1, s1, e2, s2)
        else:
            _, _, _, _, _, m1, m2, iv = step
            prods = rotation_products(src)
            if not (0 <= m1 < len(prods) and 0 <= m2 < len(prods)
                    and m1 != m2):
                raise ReplayError("bad-index", f"products {m1},{m2}")
            lhs = _signed(prods[m1], 1 - 2 * iv)
            rhs = _signed(prods[m2], 1 - 2 * iv)
        w = tuple(rels[r][e])
        if w[pos:pos + len(lhs)] != lhs:
            raise ReplayError(
                "no-occurrence",
                f"{kind}: expected {format_word(lhs)} at {pos} of "
                f"{format_word(w)}")
        rels[r][e] = w[:pos] + rhs + w[pos + len(lhs):]
    else:
        raise ReplayError("unknown-step", str(step))


def replay(source: Presentation, target: Presentation,
           cert: Certificate) -> None:
    """Independently verify a certificate in both directions.

    Forward: apply every forward step to the source; relation r must end
    letter-for-letter equal to target relation match(r).  Backward: arrange
    the target relations by the matching and apply the backward steps; the
    result must equal the source exactly.  Raises ReplayError on any
    discrepancy.
    """
    if source.ngens != cert.ngens or target.ngens != cert.ngens:
        raise ReplayError("gens-mismatch", "generator counts differ")
    nrels = len(source.relations)
    if len(target.relations) != nrels or cert.nrels != nrels:
        raise ReplayError("rels-mismatch", "relation counts differ")
    match = dict(cert.match)
    if (sorted(match) != list(range(nrels))
            or sorted(match.values()) != list(range(nrels))):
        raise ReplayError("bad-matching", "match is not a bijection")

    rels = [list(rel.words) for rel in source.relations]
    for step in cert.forward:
        _replay_step(rels, step, nrels)
    for r in range(nrels):
        got = tuple(tuple(w) for w in rels[r])
        want = target.relations[match[r]].words
        if got != want:
            raise ReplayError(
                "forward-mismatch",
                f"relation {r} ended at {got}, target has {want}")

    rels = [list(target.relations[match[r]].words) for r in range(nrels)]
    for step in cert.backward:
        _replay_step(rels, step, nrels)
    for r in range(nrels):
        got = tuple(tuple(w) for w in rels[r])
        want = source.relations[r].words
        if got != want:
            raise ReplayError(
                "backward-mismatch",
                f"relation {r} ended at {got}, source has {want}")


# ---------------------------------------------------------------------------
# certificate files
# ---------------------------------------------------------------------------

def format_certificate(cert: Certificate) -> str:
    lines = [
        "certificate-v1",
        f"gens={cert.ngens}",
        f"relations={cert.nrels}",
    ]
    lines.extend(f"match {r} {t}" for r, t in cert.match)
    lines.append(f"forward {len(cert.forward)}")
    lines.extend(" ".join(str(x) for x in step) for step in cert.forward)
    lines.append(f"backward {len(cert.backward)}")
    lines.extend(" ".join(str(x) for x in step) for step in cert.backward)
    lines.append("end")
    return "\n".join(lines) + "\n"


_STEP_ARITY = {"rot": 2, "conj": 2, "reduce": 2, "expand": 4,
               "comm": 8, "swap": 7}


def parse_certificate(text: str) -> Certificate:
    lines = [ln.strip() for ln in text.splitlines()
             if ln.strip() and not ln.strip().startswith("#")]
    if not lines or lines[0] != "certificate-v1":
        raise ReplayError("bad-file", "not a certificate file")
    ngens = nrels = None
    match = []
    forward = []
    backward = []
    section = None
    for ln in lines[1:]:
        if ln == "end":
            break
        if ln.startswith("gens="):
            ngens = int(ln[5:])
        elif ln.startswith("relations="):
            nrels = int(ln[10:])
        elif ln.startswith("match "):
            _, a, b = ln.split()
            match.append((int(a), int(b)))
        elif ln.startswith("forward "):
            section = forward
        elif ln.startswith("backward "):
            section = backward
        else:
            parts = ln.split()
            kind = parts[0]
            if kind not in _STEP_ARITY:
                raise ReplayError("bad-file", f"unknown step kind {kind!r}")
            if len(parts) - 1 != _STEP_ARITY[kind]:
                raise ReplayError("bad-file", f"step {kind} expects "
                                  f"{_STEP_ARITY[kind]} fields: {ln!r}")
            if section is None:
                raise ReplayError("bad-file", "step outside forward/backward section")
            section.append((kind,) + tuple(int(x) for x in parts[1:]))
    if ngens is None or nrels is None:
        raise ReplayError("bad-file", "missing gens= or relations= header")
    return Certificate(ngens, nrels, tuple(match), tuple(forward),
                       tuple(backward))


# ---------------------------------------------------------------------------
# the full verdict: search over generator orderings
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Verdict:
    status: str  # "Certified" | "Unknown"
    ordering: tuple | None
    candidate: Presentation | None  # in ascending generator labels
    candidate_line_labels: Presentation | None
    certificate: Certificate | None
    orderings_tried: int
    candidates_distinct: int
    evidence: tuple
    reason: str


def cf_verdict(lattice, pres: Presentation, orderings: str = "identity",
               budget: Budget | None = None) -> Verdict:
    """Certify (or fail to certify) that the arrangement presentation is
    equivalent to the lattice-determined conjugation-free candidate.

    orderings="identity" tries the given line order only; "all" tries every
    permutation of the lines (distinct candidates are proved once; a
    permutation only changes the candidate through the cyclic order of the
    entries at each multiple point).  The Unknown verdict carries
    homomorphism-count evidence when the "all" search fails everywhere.
    """
    budget = budget or Budget()
    n = pres.ngens
    if lattice.n != n:
        raise ProverError("lattice and presentation disagree on line count")
    if not isinstance(orderings, str):
        perm = tuple(orderings)
        if sorted(perm) != list(range(1, n + 1)):
            raise ProverError("explicit ordering must permute the lines")
        perms = [perm]
        per_budget = budget
    elif orderings == "identity":
        perms = [tuple(range(1, n + 1))]
        per_budget = budget
    elif orderings == "all":
        if n > 8:
            raise ProverError("ordering search is capped at 8 lines")
        perms = [tuple(p) for p in
                 itertools.permutations(range(1, n + 1))]
        per_budget = dc_replace(budget,
                                bfs_nodes=max(100, budget.bfs_nodes // 4))
    else:
        raise ProverError(f"unknown orderings mode {orderings!r}")

    cache = {}
    tried = 0
    for perm in perms:
        cand_pos = candidate_cf(lattice, perm)
        cand_line = relabel_presentation(cand_pos, perm)
        key = tuple(rel.words for rel in cand_line.relations)
        tried += 1
        if key not in cache:
            cache[key] = (prove_equivalent(pres, cand_line, per_budget),
                          cand_pos, cand_line)
        result, cand_pos, cand_line = cache[key]
        if result.status == "certified":
            assert is_conjugation_free(cand_pos)
            return Verdict("Certified", perm, cand_pos, cand_line,
                           result.certificate, tried, len(cache), (), "")

    evidence = []
    if orderings == "all":
        from arrgroup.invariants import builtin_group, hom_count
        table = builtin_group("S3")
        src_count = hom_count(pres, table, budget.hom_nodes)
        evidence.append(f"homomorphisms to S3: presentation {src_count.count}")
        ruled_out = 0
        for key, (result, cand_pos, cand_line) in sorted(cache.items()):
            cnt = hom_count(cand_line, table, budget.hom_nodes)
            marker = "matches"
            if (cnt.outcome == "exact" and src_count.outcome == "exact"
                    and cnt.count != src_count.count):
                marker = "differs, so this candidate is not equivalent"
                ruled_out += 1
            evidence.append(
                f"candidate with relations {len(cand_line.relations)}: "
                f"{cnt.count} ({marker})")
        if ruled_out == len(cache):
            evidence.append(
                "every distinct candidate has a different homomorphism "
                "count, so no ordering can work; reported Unknown because "
                "the verdict vocabulary has no stronger negative")
    return Verdict("Unknown", None, None, None, None, tried, len(cache),
                   tuple(evidence),
                   "no ordering produced a certificate within budget")


def format_verdict(v: Verdict) -> str:
    from arrgroup.vankampen import format_presentation
    lines = [f"status: {v.status}",
             f"orderings tried: {v.orderings_tried}",
             f"distinct candidates: {v.candidates_distinct}"]
    if v.status == "Certified":
        lines.append("ordering (line for each generator slot): "
                     + " ".join(str(i) for i in v.ordering))
        lines.append(f"certificate steps: {v.certificate.nsteps}")
        lines.append("candidate (ascending labels):")
        lines.append(format_presentation(v.candidate).rstrip())
        lines.append("candidate (line labels, the certificate target):")
        lines.append(format_presentation(v.candidate_line_labels).rstrip())
    else:
        lines.append(f"reason: {v.reason}")
        for item in v.evidence:
            lines.append(f"evidence: {item}")
    return "\n".join(lines) + "\n"
