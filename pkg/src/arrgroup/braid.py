"""Free-group words, braid words, half-twists, and the Artin action.

Words in the free group on x_1..x_ell are tuples of signed integers: +i is
x_i, -i is x_i^-1.  Braid words are tuples of signed integers over the
elementary twists: +i is sigma_i, -i its inverse.  Everything is kept freely
reduced; there are no normal forms beyond that, since the words that arise
here are short conjugates of generators.
"""

from __future__ import annotations


def free_reduce(letters, ell=None):
    """Freely reduce a raw letter sequence with a single stack pass.

    Letters are signed generator indices.  Raises ValueError for index 0 or,
    when ``ell`` is given, for indices beyond it.
    """
    out = []
    for c in letters:
        if c == 0 or (ell is not None and abs(c) > ell):
            raise ValueError(f"generator index {c} out of range")
        if out and out[-1] == -c:
            out.pop()
        else:
            out.append(c)
    return tuple(out)


def word_inverse(w):
    return tuple(-c for c in reversed(w))


def word_mul(*words):
    out = []
    for w in words:
        for c in w:
            if out and out[-1] == -c:
                out.pop()
            else:
                out.append(c)
    return tuple(out)


def format_word(w, letter="x"):
    if not w:
        return "1"
    return " ".join(f"{letter}{c}" if c > 0 else f"{letter}{-c}^-1" for c in w)


def parse_word(text, letter="x"):
    letters = []
    for tok in text.split():
        if tok == "1":
            continue
        body = tok
        sign = 1
        if body.endswith("^-1"):
            sign = -1
            body = body[:-3]
        if not body.startswith(letter):
            raise ValueError(f"cannot parse word token {tok!r}")
        idx = int(body[len(letter):])
        letters.append(sign * idx)
    return free_reduce(letters)


# ---------------------------------------------------------------------------
# Artin action
#
# The convention is fixed once and for all:
#   sigma_i   sends  x_i -> x_i x_{i+1} x_i^-1,   x_{i+1} -> x_i
#   sigma_i^-1 sends x_i -> x_{i+1},              x_{i+1} -> x_{i+1}^-1 x_i x_{i+1}
# and both fix every other generator.  Under this convention the ordered
# product x_1 x_2 ... x_ell is fixed by every braid word.
# ---------------------------------------------------------------------------

def _letter_image(g, i, sign):
    """Image of the signed word letter g under sigma_i^sign."""
    a = abs(g)
    if sign > 0:
        if a == i:
            img = (i, i + 1, -i)
        elif a == i + 1:
            img = (i,)
        else:
            return (g,)
    else:
        if a == i:
            img = (i + 1,)
        elif a == i + 1:
            img = (-(i + 1), i, i + 1)
        else:
            return (g,)
    return img if g > 0 else tuple(-c for c in reversed(img))


def artin_apply(braid, w, ell=None):
    """Apply a braid word to a free-group word, twist by twist.

    The braid word acts as the composite of its letters, first letter first.
    The result is freely reduced.
    """
    w = free_reduce(w, ell)
    for t in braid:
        i = abs(t)
        if i == 0 or (ell is not None and i + 1 > ell):
            raise ValueError(f"strand index {t} out of range")
        sign = 1 if t > 0 else -1
        out = []
        for g in w:
            for c in _letter_image(g, i, sign):
                if out and out[-1] == -c:
                    out.pop()
                else:
                    out.append(c)
        w = tuple(out)
    return w


def braid_inverse(braid):
    return tuple(-t for t in reversed(braid))


def halftwist(a, b, ell):
    """The positive half-twist on the interval [a, b] as a braid word:
    (sigma_a ... sigma_{b-1})(sigma_a ... sigma_{b-2}) ... (sigma_a).

    Its length is C(b-a+1, 2).
    """
    if not (1 <= a < b <= ell):
        raise ValueError(f"need 1 <= a < b <= ell, got a={a} b={b} ell={ell}")
    word = []
    for top in range(b - 1, a - 1, -1):
        word.extend(range(a, top + 1))
    return tuple(word)


def prefix_braid(pl, i):
    """Concatenation of the half-twists of the first i-1 Lefschetz pairs, in
    list order; the empty braid for i = 1."""
    if not (1 <= i <= len(pl.pairs)):
        raise ValueError(f"point index {i} out of range 1..{len(pl.pairs)}")
    word = []
    for (a, b) in pl.pairs[: i - 1]:
        word.extend(halftwist(a, b, pl.ell))
    return tuple(word)


def format_braid(braid):
    if not braid:
        return "1"
    return " ".join(f"s{t}" if t > 0 else f"s{-t}^-1" for t in braid)
