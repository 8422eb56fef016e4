"""Braid and welded braid words, free-group words, Fox calculus.

Braid letters are tuples ("s", i, sign) for the Artin generator sigma_i^sign
and ("t", i) for the virtual generator tau_i (which is its own inverse).
Generator indices are 1-based, 1 <= i <= n-1.
"""
from __future__ import annotations

from fractions import Fraction

from .matrices import Permutation


class WordParseError(ValueError):
    """Braid word text does not match the grammar."""


class BraidWord:
    """A word in the welded braid group on n strands."""

    __slots__ = ("n", "letters")

    def __init__(self, n, letters=()):
        letters = tuple(letters)
        for lt in letters:
            if lt[0] == "s":
                _, i, s = lt
                if not (1 <= i <= n - 1) or s not in (1, -1):
                    raise ValueError("bad letter %r for %d strands" % (lt, n))
            elif lt[0] == "t":
                _, i = lt
                if not (1 <= i <= n - 1):
                    raise ValueError("bad letter %r for %d strands" % (lt, n))
            else:
                raise ValueError("unknown letter %r" % (lt,))
        self.n = n
        self.letters = letters

    @classmethod
    def sigma(cls, n, i, sign=1):
        return cls(n, [("s", i, sign)])

    @classmethod
    def tau(cls, n, i):
        return cls(n, [("t", i)])

    @classmethod
    def identity(cls, n):
        return cls(n)

    def __len__(self):
        return len(self.letters)

    def __mul__(self, other):
        if self.n != other.n:
            raise ValueError("strand count mismatch: %d vs %d" % (self.n, other.n))
        return BraidWord(self.n, self.letters + other.letters)

    def inverse(self):
        inv = []
        for lt in reversed(self.letters):
            if lt[0] == "s":
                inv.append(("s", lt[1], -lt[2]))
            else:
                inv.append(lt)
        return BraidWord(self.n, inv)

    def __pow__(self, k):
        k = int(k)
        base = self if k >= 0 else self.inverse()
        return BraidWord(self.n, base.letters * abs(k))

    def is_classical(self):
        return all(lt[0] == "s" for lt in self.letters)

    def shift(self, k):
        """Raise every generator index and the strand count by k (id_1-style embedding)."""
        out = []
        for lt in self.letters:
            if lt[0] == "s":
                out.append(("s", lt[1] + k, lt[2]))
            else:
                out.append(("t", lt[1] + k))
        return BraidWord(self.n + k, out)

    def permutation(self):
        """tau(j) = index of the string ending at bottom position j (0-based)."""
        pos2str = list(range(self.n))
        for lt in self.letters:
            k = lt[1] - 1
            pos2str[k], pos2str[k + 1] = pos2str[k + 1], pos2str[k]
        return Permutation(pos2str)

    def is_pure(self):
        return self.permutation().is_identity()

    def exponent_sum(self):
        return sum(lt[2] for lt in self.letters if lt[0] == "s")

    def render(self):
        tokens = []
        for lt in self.letters:
            if lt[0] == "s":
                tokens.append(str(lt[1] * lt[2]))
            else:
                tokens.append("v%d" % lt[1])
        return "n=%d\n%s\n" % (self.n, " ".join(tokens))

    @classmethod
    def parse(cls, text):
        lines = text.split("\n")
        header = None
        body = []
        for lineno, raw in enumerate(lines, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if header is None:
                if not line.startswith("n="):
                    raise WordParseError("line %d: expected 'n=<strands>' header" % lineno)
                try:
                    header = int(line[2:])
                except ValueError:
                    raise WordParseError("line %d: bad strand count %r" % (lineno, line[2:]))
            else:
                body.extend((lineno, tok) for tok in line.split())
        if header is None:
            raise WordParseError("missing 'n=<strands>' header")
        letters = []
        for lineno, tok in body:
            if tok.startswith("v"):
                try:
                    i = int(tok[1:])
                except ValueError:
                    raise WordParseError("line %d: bad token %r" % (lineno, tok))
                letters.append(("t", i))
            else:
                try:
                    k = int(tok)
                except ValueError:
                    raise WordParseError("line %d: bad token %r" % (lineno, tok))
                if k == 0:
                    raise WordParseError("line %d: generator index 0" % lineno)
                letters.append(("s", abs(k), 1 if k > 0 else -1))
        try:
            return cls(header, letters)
        except ValueError as exc:
            raise WordParseError(str(exc))

    def __eq__(self, other):
        return isinstance(other, BraidWord) and self.n == other.n and self.letters == other.letters

    def __hash__(self):
        return hash((self.n, self.letters))

    def __repr__(self):
        return "BraidWord(n=%d, %s)" % (self.n, " ".join(
            ("s%d" % lt[1] if lt[2] > 0 else "S%d" % lt[1]) if lt[0] == "s" else "t%d" % lt[1]
            for lt in self.letters) or "1")


def commutator(a, b):
    """[a, b] = a^{-1} b^{-1} a b."""
    return a.inverse() * b.inverse() * a * b


class FreeWord:
    """A freely reduced word in the free group on `rank` generators."""

    __slots__ = ("rank", "letters")

    def __init__(self, rank, letters=()):
        stack = []
        for g, s in letters:
            if not (1 <= g <= rank) or s not in (1, -1):
                raise ValueError("bad free letter (%r, %r)" % (g, s))
            if stack and stack[-1] == (g, -s):
                stack.pop()
            else:
                stack.append((g, s))
        self.rank = rank
        self.letters = tuple(stack)

    @classmethod
    def identity(cls, rank):
        return cls(rank)

    @classmethod
    def gen(cls, rank, i, sign=1):
        return cls(rank, [(i, sign)])

    def __mul__(self, other):
        if self.rank != other.rank:
            raise ValueError("rank mismatch")
        return FreeWord(self.rank, self.letters + other.letters)

    def inverse(self):
        return FreeWord(self.rank, [(g, -s) for g, s in reversed(self.letters)])

    def __pow__(self, k):
        k = int(k)
        base = self if k >= 0 else self.inverse()
        return FreeWord(self.rank, base.letters * abs(k))

    def is_identity(self):
        return not self.letters

    def exponent_sum(self):
        return sum(s for _, s in self.letters)

    def __len__(self):
        return len(self.letters)

    def __eq__(self, other):
        return isinstance(other, FreeWord) and self.rank == other.rank and self.letters == other.letters

    def __hash__(self):
        return hash((self.rank, self.letters))

    def __repr__(self):
        return "FreeWord(%s)" % ("*".join(
            ("x%d" % g if s > 0 else "x%d^-1" % g) for g, s in self.letters) or "1")


class GroupRingElement:
    """An element of the integral group ring of a free group."""

    __slots__ = ("rank", "terms")

    def __init__(self, rank, terms=()):
        self.rank = rank
        clean = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for w, c in items:
            c = int(c)
            if c:
                clean[w] = clean.get(w, 0) + c
        self.terms = {w: c for w, c in clean.items() if c}

    @classmethod
    def zero(cls, rank):
        return cls(rank)

    @classmethod
    def from_word(cls, w, c=1):
        return cls(w.rank, [(w, c)])

    @classmethod
    def one(cls, rank):
        return cls.from_word(FreeWord.identity(rank))

    def __add__(self, other):
        return GroupRingElement(self.rank, list(self.terms.items()) + list(other.terms.items()))

    def __neg__(self):
        return GroupRingElement(self.rank, [(w, -c) for w, c in self.terms.items()])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, FreeWord):
            other = GroupRingElement.from_word(other)
        out = []
        for wa, ca in self.terms.items():
            for wb, cb in other.terms.items():
                out.append((wa * wb, ca * cb))
        return GroupRingElement(self.rank, out)

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        return (isinstance(other, GroupRingElement)
                and self.rank == other.rank and self.terms == other.terms)

    def __repr__(self):
        return "GroupRingElement(%r)" % (self.terms,)


def _artin_letter_image(letter, j, rank):
    """Image of x_j under the Artin action of a single braid letter."""
    kind = letter[0]
    if kind != "s":
        raise ValueError("Artin action is defined on classical letters only")
    _, i, sign = letter
    x = lambda g, s=1: FreeWord.gen(rank, g, s)
    if sign > 0:
        if j == i:
            return x(i + 1)
        if j == i + 1:
            return x(i + 1, -1) * x(i) * x(i + 1)
        return x(j)
    else:
        if j == i:
            return x(i) * x(i + 1) * x(i, -1)
        if j == i + 1:
            return x(i)
        return x(j)


def _substitute(letter, w):
    rank = w.rank
    out = FreeWord.identity(rank)
    for g, s in w.letters:
        img = _artin_letter_image(letter, g, rank)
        out = out * (img if s > 0 else img.inverse())
    return out


def artin_action(word):
    """Images of x_1..x_n under the Artin action of a classical braid word.

    The action is a homomorphism to Aut(F_n) with composition
    a(w1 w2) = a(w1) after a(w2).
    """
    if not word.is_classical():
        raise ValueError("Artin action is defined on classical words only")
    rank = word.n
    images = []
    for j in range(1, rank + 1):
        expr = FreeWord.gen(rank, j)
        for letter in reversed(word.letters):
            expr = _substitute(letter, expr)
        images.append(expr)
    return images


def chi(w):
    """The injection F_n -> B_{n+1}: x_i maps to a conjugate of sigma_i^2.

    x_i -> (sigma_{i-1} ... sigma_1)^{-1} sigma_i^2 (sigma_{i-1} ... sigma_1),
    extended homomorphically over the free word w.
    """
    n = w.rank
    out = BraidWord.identity(n + 1)
    cache = {}
    for g, s in w.letters:
        if g not in cache:
            conj = BraidWord(n + 1, [("s", k, 1) for k in range(g - 1, 0, -1)])
            cache[g] = conj.inverse() * BraidWord.sigma(n + 1, g) ** 2 * conj
        block = cache[g]
        out = out * (block if s > 0 else block.inverse())
    return out


def fox_derivative(w, j):
    """Right Fox derivative D_j with w - 1 = sum_j (x_j - 1) * D_j(w).

    Rules: D_j(x_i) = delta_ij, D_j(x_i^{-1}) = -delta_ij x_i^{-1},
    D_j(ab) = D_j(a) b + D_j(b).
    """
    rank = w.rank
    out = GroupRingElement.zero(rank)
    m = len(w.letters)
    for idx, (g, s) in enumerate(w.letters):
        if g != j:
            continue
        suffix = FreeWord(rank, w.letters[idx + 1:])
        if s > 0:
            out = out + GroupRingElement.from_word(suffix)
        else:
            out = out - GroupRingElement.from_word(FreeWord(rank, [(g, -1)]) * suffix)
    return out


class LinkingProfile:
    """Signed crossing tallies between the strings of a (welded) word or diagram.

    vl[(i, j)] counts classical crossings where string i passes over string j;
    V[(i, j)] is the signed virtual-pass count (antisymmetric).  Strings are
    1-based and identified by their starting position.
    """

    __slots__ = ("n", "vl", "V")

    def __init__(self, n):
        self.n = n
        self.vl = {(i, j): 0 for i in range(1, n + 1) for j in range(1, n + 1) if i != j}
        self.V = {(i, j): 0 for i in range(1, n + 1) for j in range(1, n + 1) if i != j}

    def lk(self, i, j):
        """Classical linking number: half the signed crossing count."""
        return Fraction(self.vl[(i, j)] + self.vl[(j, i)], 2)

    def row_sums(self, j):
        """(sum_i vl_ij, sum_i vl_ji, sum_i V_ij) over i != j."""
        others = [i for i in range(1, self.n + 1) if i != j]
        return (sum(self.vl[(i, j)] for i in others),
                sum(self.vl[(j, i)] for i in others),
                sum(self.V[(i, j)] for i in others))

    def __eq__(self, other):
        return (isinstance(other, LinkingProfile) and self.n == other.n
                and self.vl == other.vl and self.V == other.V)

    def __repr__(self):
        return "LinkingProfile(n=%d, vl=%r, V=%r)" % (self.n, self.vl, self.V)


def linking_profile_word(word):
    """Track strand positions letter by letter and tally the crossings.

    At a positive classical crossing the strand entering on the right
    passes over; at a negative one the strand entering on the left does.
    A virtual letter moves the left strand across the right one.
    Strings are identified by starting position (1-based).
    """
    n = word.n
    prof = LinkingProfile(n)
    pos2str = list(range(1, n + 1))
    for lt in word.letters:
        k = lt[1] - 1
        a, b = pos2str[k], pos2str[k + 1]
        if lt[0] == "s":
            sign = lt[2]
            over, under = (b, a) if sign > 0 else (a, b)
            if over != under:
                prof.vl[(over, under)] += sign
        else:
            if a != b:
                prof.V[(a, b)] += 1
                prof.V[(b, a)] -= 1
        pos2str[k], pos2str[k + 1] = pos2str[k + 1], pos2str[k]
    return prof
