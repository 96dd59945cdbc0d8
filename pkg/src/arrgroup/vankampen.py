"""Presentations of arrangement-complement fundamental groups.

One cyclic relation per intersection point.  A bracket [w1, ..., wk] encodes
the k-1 equalities obtained by cyclically sliding the descending product:

    wk w_{k-1} ... w1  =  w1 wk ... w3 w2  =  ...

The relation words for point i come from transporting the meridians of the
wires through the point back to the far right side of the diagram: apply the
inverse of the braid accumulated over points 1..i-1 (under the mirror
involution x_g -> x_g^-1, which converts the Artin convention of
``arrgroup.braid`` into the one the sweep direction requires), then shorten
the resulting word tuple by greedy simultaneous conjugation.  The shortening
is sound: a simultaneous conjugation of all bracket entries re-chooses the
point where the monodromy loop is split, which does not change the relation.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from arrgroup.braid import (
    artin_apply,
    braid_inverse,
    format_word,
    free_reduce,
    parse_word,
    prefix_braid,
    word_inverse,
    word_mul,
)
from arrgroup.wiring import PairList, validate_pairs


def _iota(w):
    """The mirror involution x_g -> x_g^-1, letterwise (an automorphism of
    the free group since it reverses no ordering)."""
    return tuple(-c for c in w)


def conjugate_all(words, v):
    """Simultaneously conjugate every entry: w -> v^-1 w v."""
    vi = word_inverse(v)
    return tuple(word_mul(vi, w, v) for w in words)


def greedy_shorten(words, ngens):
    """Strict-greedy minimal-total-length simultaneous conjugation.

    Accept the first single-letter conjugation that strictly shortens the
    total length, restart, stop at a fixpoint.  Deterministic.
    """
    cur = tuple(words)
    best = sum(len(w) for w in cur)
    improved = True
    while improved:
        improved = False
        for g in range(1, ngens + 1):
            for s in (1, -1):
                cand = conjugate_all(cur, (s * g,))
                tot = sum(len(w) for w in cand)
                if tot < best:
                    cur, best, improved = cand, tot, True
                    break
            if improved:
                break
    return cur


def canonical_rotation(words):
    """Lexicographically least cyclic rotation of the word tuple."""
    rots = [tuple(words[i:] + words[:i]) for i in range(len(words))]
    return min(rots)


def _word_key(w):
    return (len(w), tuple((abs(c), 0 if c > 0 else 1) for c in w))


def _keyed_rotation(words):
    rots = [tuple(words[i:] + words[:i]) for i in range(len(words))]
    return min(rots, key=lambda t: tuple(_word_key(w) for w in t))


def canonical_form(words, ngens, cap=512):
    """Conjugation-and-rotation canonical representative of a bracket.

    Greedy shortening first, then a breadth-first walk over all simultaneous
    single-letter conjugations that keep the minimal total length (plateau,
    capped), finally the least rotation under a sign-insensitive-first key.
    Two brackets related by simultaneous conjugation and rotation map to the
    same representative (within the plateau cap, which desk-scale inputs
    never reach).
    """
    start = greedy_shorten(words, ngens)
    total = sum(len(w) for w in start)
    seen = {start}
    frontier = [start]
    while frontier and len(seen) < cap:
        nxt = []
        for cur in frontier:
            for g in range(1, ngens + 1):
                for s in (1, -1):
                    cand = conjugate_all(cur, (s * g,))
                    if sum(len(w) for w in cand) == total and cand not in seen:
                        seen.add(cand)
                        nxt.append(cand)
        frontier = nxt
    return min((_keyed_rotation(t) for t in seen),
               key=lambda t: tuple(_word_key(w) for w in t))


@dataclass(frozen=True)
class CyclicRelation:
    """Bracket relation [w1, ..., wk]; stored greedily shortened and in the
    least rotation, so equal brackets compare equal."""

    words: tuple

    @staticmethod
    def make(words, ngens) -> "CyclicRelation":
        words = tuple(free_reduce(w, ngens) for w in words)
        if len(words) < 2:
            raise ValueError("a cyclic relation needs at least 2 entries")
        return CyclicRelation(canonical_rotation(greedy_shorten(words, ngens)))

    @property
    def k(self):
        return len(self.words)

    def rotation_products(self):
        """The k equal products, one per split point, freely reduced."""
        k = len(self.words)
        out = []
        for m in range(k):
            idx = list(range(m - 1, -1, -1)) + list(range(k - 1, m - 1, -1))
            out.append(word_mul(*[self.words[t] for t in idx]))
        return out

    def __str__(self):
        return "[ " + " ; ".join(format_word(w) for w in self.words) + " ]"


def conjugate_parts(w):
    """Split a reduced word syntactically as (conjugator u, core letter g)
    when it is literally u g u^-1; otherwise None."""
    if len(w) % 2 == 0:
        return None
    half = len(w) // 2
    u, core, tail = w[:half], w[half], w[half + 1:]
    if tail == word_inverse(u):
        return (u, core)
    return None


@dataclass(frozen=True)
class Presentation:
    ngens: int
    relations: tuple  # of CyclicRelation
    kind: str = "affine"  # or "projective"

    def __post_init__(self):
        for rel in self.relations:
            for w in rel.words:
                for c in w:
                    if abs(c) > self.ngens:
                        raise ValueError(
                            f"generator x{abs(c)} exceeds ngens={self.ngens}"
                        )


def point_relation_words(pl: PairList, i: int):
    """Relation words of point i: the meridians x_a..x_b of the wires through
    the point, transported through the inverse of the accumulated prefix
    braid.  The first point gets plain generators."""
    braid = braid_inverse(prefix_braid(pl, i))
    a, b = pl.pairs[i - 1]
    return [
        _iota(artin_apply(braid, _iota((t,)), pl.ell)) for t in range(a, b + 1)
    ]


def presentation(pl: PairList) -> Presentation:
    """The affine presentation: ngens = number of wires, one bracket per
    point."""
    validate_pairs(pl)
    rels = tuple(
        CyclicRelation.make(point_relation_words(pl, i), pl.ell)
        for i in range(1, len(pl.pairs) + 1)
    )
    return Presentation(pl.ell, rels, "affine")


def _substitute_last(w, ngens):
    """Replace x_ngens by (x_{ngens-1} ... x_1)^-1 in a word."""
    expansion = tuple(-g for g in range(1, ngens))
    out = []
    for c in w:
        if c == ngens:
            out.extend(expansion)
        elif c == -ngens:
            out.extend(-e for e in reversed(expansion))
        else:
            out.append(c)
    return free_reduce(out)


def projectivize(p: Presentation) -> Presentation:
    """Impose the far-side relation x_n ... x_2 x_1 = e and eliminate x_n.

    Relations whose split-point equalities all become free identities are
    dropped.  No other simplification happens here.
    """
    if p.kind != "affine":
        raise ValueError("presentation is already projective")
    n = p.ngens
    rels = []
    for rel in p.relations:
        words = tuple(_substitute_last(w, n) for w in rel.words)
        new = CyclicRelation.make(words, n - 1)
        products = new.rotation_products()
        if len(set(products)) == 1:
            continue  # trivially satisfied after elimination
        rels.append(new)
    return Presentation(n - 1, tuple(rels), "projective")


def candidate_cf(lattice, ordering=None) -> Presentation:
    """The lattice-determined conjugation-free candidate: one plain bracket
    per intersection point, entries the generators of the incident lines in
    ascending label order.

    ordering, when given, lists the lines in generator order (line
    ordering[j-1] becomes generator j); the candidate is always emitted in
    ascending generator labels, so the choice of ordering only changes the
    cyclic order of the entries at each multiple point.
    """
    n = lattice.n
    if ordering is None:
        ordering = tuple(range(1, n + 1))
    if sorted(ordering) != list(range(1, n + 1)):
        raise ValueError("ordering must be a permutation of the lines")
    slot = {line: j + 1 for j, line in enumerate(ordering)}
    rels = []
    for pt in lattice.points:
        gens = sorted(slot[i] for i in pt.incident)
        rels.append(CyclicRelation.make(tuple((g,) for g in gens), n))
    return Presentation(n, tuple(rels), "affine")


def is_conjugation_free(p: Presentation) -> bool:
    """True when every relation is a plain bracket: single positive-letter
    entries, strictly ascending within each bracket."""
    for rel in p.relations:
        letters = []
        for w in rel.words:
            if len(w) != 1 or w[0] < 0:
                return False
            letters.append(w[0])
        if letters != sorted(set(letters)):
            return False
    return True


def relabel_presentation(p: Presentation, newlabels) -> Presentation:
    """Rename generator j to newlabels[j-1] (a permutation); relations are
    re-canonicalized under the new labels."""
    if sorted(newlabels) != list(range(1, p.ngens + 1)):
        raise ValueError("newlabels must be a permutation of the generators")

    def rename(c):
        return newlabels[c - 1] if c > 0 else -newlabels[-c - 1]

    rels = tuple(
        CyclicRelation.make(
            tuple(tuple(rename(c) for c in w) for w in rel.words), p.ngens)
        for rel in p.relations)
    return Presentation(p.ngens, rels, p.kind)


# ---------------------------------------------------------------------------
# presentation file formats
# ---------------------------------------------------------------------------

def format_presentation(p: Presentation) -> str:
    lines = [f"gens={p.ngens}", f"kind={p.kind}"]
    lines.extend(str(rel) for rel in p.relations)
    return "\n".join(lines) + "\n"


def parse_presentation(text: str) -> Presentation:
    ngens = None
    kind = "affine"
    rels = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0].strip()
        if not body:
            continue
        if body.startswith("gens="):
            ngens = int(body[5:])
            continue
        if body.startswith("kind="):
            kind = body[5:].strip()
            continue
        if not (body.startswith("[") and body.endswith("]")):
            raise ValueError(f"line {lineno}: expected [ w1 ; w2 ; ... ]")
        if ngens is None:
            raise ValueError("missing gens= header before relations")
        inner = body[1:-1].strip()
        words = tuple(parse_word(part.strip()) for part in inner.split(";"))
        rels.append(CyclicRelation.make(words, ngens))
    if ngens is None:
        raise ValueError("missing gens= header")
    return Presentation(ngens, tuple(rels), kind)


def format_presentation_json(p: Presentation) -> str:
    doc = {
        "ngens": p.ngens,
        "kind": p.kind,
        "relations": [[list(w) for w in rel.words] for rel in p.relations],
    }
    return json.dumps(doc, indent=2) + "\n"


def parse_presentation_json(text: str) -> Presentation:
    doc = json.loads(text)
    rels = tuple(
        CyclicRelation.make([tuple(w) for w in words], doc["ngens"])
        for words in doc["relations"]
    )
    return Presentation(doc["ngens"], rels, doc.get("kind", "affine"))
