"""String link diagrams and the monomial invariants computed from crossing relations.

A diagram is an abstract incidence structure: n strings run from a family of
top arcs to a family of bottom arcs through a sequence of crossings.  Each
classical crossing rewrites its two incoming arcs with monomial weights, and
eliminating the intermediate arcs yields a monomial matrix invariant.
"""
from __future__ import annotations

from dataclasses import dataclass

from .matrices import Permutation, RingMatrix
from .ring import RingContext
from .words import LinkingProfile

MODES = ("2var", "multi", "w3", "wmulti")


class DiagramError(ValueError):
    """The incidence structure does not describe n directed strings."""


@dataclass(frozen=True)
class Classical:
    sign: int
    over_in: str
    over_out: str
    under_in: str
    under_out: str


@dataclass(frozen=True)
class Virtual:
    chirality: int
    a_in: str
    a_out: str
    b_in: str
    b_out: str


@dataclass(frozen=True)
class LambdaRelation:
    src: str
    dst: str
    weight: object


class Diagram:
    """An n-string diagram given by top/bottom arcs and a crossing list."""

    __slots__ = ("n", "crossings", "top", "bottom", "_succ", "_arc_string")

    def __init__(self, n, crossings, top, bottom):
        self.n = n
        self.crossings = tuple(crossings)
        self.top = tuple(top)
        self.bottom = tuple(bottom)
        if len(self.top) != n or len(self.bottom) != n:
            raise DiagramError("need exactly %d top and bottom arcs" % n)
        self._succ = self._build_successors()
        self._arc_string = self._trace_strings()

    def _build_successors(self):
        succ = {}
        sources = list(self.top)
        sinks = list(self.bottom)
        for c in self.crossings:
            if isinstance(c, Classical):
                pairs = [(c.over_in, c.over_out), (c.under_in, c.under_out)]
            else:
                pairs = [(c.a_in, c.a_out), (c.b_in, c.b_out)]
            for a_in, a_out in pairs:
                if a_in in succ:
                    raise DiagramError("arc %r consumed twice" % a_in)
                succ[a_in] = a_out
                sources.append(a_out)
                sinks.append(a_in)
        if len(set(sources)) != len(sources):
            raise DiagramError("some arc is produced twice")
        if set(sources) != set(sinks):
            raise DiagramError("produced and consumed arcs do not match")
        return succ

    def _trace_strings(self):
        arc_string = {}
        bottom_pos = {a: j for j, a in enumerate(self.bottom)}
        for s, arc in enumerate(self.top, 1):
            seen = set()
            while True:
                if arc in seen:
                    raise DiagramError("string %d loops" % s)
                seen.add(arc)
                arc_string[arc] = s
                if arc in bottom_pos:
                    break
                if arc not in self._succ:
                    raise DiagramError("string %d breaks at arc %r" % (s, arc))
                arc = self._succ[arc]
        if len(arc_string) != len(self.top) + 2 * len(self.crossings):
            raise DiagramError("unreachable arcs present")
        return arc_string

    def arc_string(self, arc):
        """1-based index (top position) of the string containing an arc."""
        return self._arc_string[arc]

    def permutation(self):
        """perm(j) = 0-based string index ending at bottom position j."""
        return Permutation([self._arc_string[a] - 1 for a in self.bottom])

    def is_pure(self):
        return self.permutation().is_identity()

    def has_virtual(self):
        return any(isinstance(c, Virtual) for c in self.crossings)

    def self_writhe(self, s):
        """Signed count of classical crossings of string s with itself."""
        k = 0
        for c in self.crossings:
            if (isinstance(c, Classical)
                    and self._arc_string[c.over_in] == s
                    and self._arc_string[c.under_in] == s):
                k += c.sign
        return k

    @classmethod
    def trivial(cls, n):
        arcs = ["s%d" % i for i in range(1, n + 1)]
        return cls(n, [], arcs, arcs)

    def render(self):
        lines = ["strands %d" % self.n]
        for s, a in enumerate(self.top, 1):
            lines.append("top %d %s" % (s, a))
        for s, a in enumerate(self.bottom, 1):
            lines.append("bottom %d %s" % (s, a))
        for c in self.crossings:
            if isinstance(c, Classical):
                lines.append("x %s %s %s %s %s" % (
                    "+" if c.sign > 0 else "-",
                    c.over_in, c.over_out, c.under_in, c.under_out))
            else:
                lines.append("v %s %s %s %s %s" % (
                    "+" if c.chirality > 0 else "-",
                    c.a_in, c.a_out, c.b_in, c.b_out))
        return "\n".join(lines) + "\n"

    @classmethod
    def parse(cls, text):
        n = None
        top = {}
        bottom = {}
        crossings = []
        for lineno, raw in enumerate(text.split("\n"), 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            parts = line.split()
            kw = parts[0]
            try:
                if kw == "strands":
                    n = int(parts[1])
                elif kw == "top":
                    top[int(parts[1])] = parts[2]
                elif kw == "bottom":
                    bottom[int(parts[1])] = parts[2]
                elif kw == "x":
                    sign = {"+": 1, "-": -1}[parts[1]]
                    crossings.append(Classical(sign, *parts[2:6]))
                elif kw == "v":
                    chir = {"+": 1, "-": -1}[parts[1]]
                    crossings.append(Virtual(chir, *parts[2:6]))
                else:
                    raise DiagramError("line %d: unknown keyword %r" % (lineno, kw))
            except (IndexError, KeyError, ValueError) as exc:
                if isinstance(exc, DiagramError):
                    raise
                raise DiagramError("line %d: malformed %r line" % (lineno, kw))
        if n is None:
            raise DiagramError("missing 'strands' line")
        if sorted(top) != list(range(1, n + 1)) or sorted(bottom) != list(range(1, n + 1)):
            raise DiagramError("top/bottom positions must cover 1..%d" % n)
        return cls(n, crossings, [top[s] for s in range(1, n + 1)],
                   [bottom[s] for s in range(1, n + 1)])


def diagram_from_word(word):
    """Thread arcs through the letters of a (welded) braid word."""
    n = word.n
    cur = ["t%d" % s for s in range(1, n + 1)]
    top = list(cur)
    crossings = []
    counter = [0]

    def fresh():
        counter[0] += 1
        return "m%d" % counter[0]

    for lt in word.letters:
        k = lt[1] - 1
        left, right = cur[k], cur[k + 1]
        new_left, new_right = fresh(), fresh()
        if lt[0] == "s":
            if lt[2] > 0:
                crossings.append(Classical(1, right, new_left, left, new_right))
            else:
                crossings.append(Classical(-1, left, new_right, right, new_left))
        else:
            crossings.append(Virtual(1, left, new_right, right, new_left))
        cur[k], cur[k + 1] = new_left, new_right
    return Diagram(n, crossings, top, cur)


def ctx_for_mode(mode, n):
    if mode == "2var":
        return RingContext(("u", "v"))
    if mode == "multi":
        names = tuple("u%d" % i for i in range(1, n + 1))
        names += tuple("v%d" % i for i in range(1, n + 1))
        return RingContext(names)
    if mode == "w3":
        return RingContext(("u", "v", "al"))
    if mode == "wmulti":
        names = tuple("u%d" % i for i in range(1, n + 1))
        names += tuple("v%d" % i for i in range(1, n + 1))
        names += tuple("al%d" % i for i in range(1, n + 1))
        return RingContext(names)
    raise ValueError("unknown mode %r" % mode)


def _mode_vars(mode, ctx, s_over, s_under):
    """(u, v) weight variables for a classical crossing in the given mode."""
    if mode in ("2var", "w3"):
        return ctx.var("u"), ctx.var("v")
    return ctx.var("u%d" % s_over), ctx.var("v%d" % s_under)


def relations_of(d, mode, ctx=None):
    """One weighted rewriting relation per arc consumed by a crossing.

    At a classical crossing of sign e, the under arc picks up the weight
    u^e indexed by the over string, and the over arc picks up v^e indexed
    by the under string.  A virtual crossing trades al^{+-chirality}
    factors indexed by the other string.
    """
    if mode not in MODES:
        raise ValueError("unknown mode %r" % mode)
    if mode in ("2var", "multi") and d.has_virtual():
        raise DiagramError("virtual crossings need a welded mode")
    if ctx is None:
        ctx = ctx_for_mode(mode, d.n)
    rels = []
    for c in d.crossings:
        if isinstance(c, Classical):
            s_over = d.arc_string(c.over_in)
            s_under = d.arc_string(c.under_in)
            u, v = _mode_vars(mode, ctx, s_over, s_under)
            rels.append(LambdaRelation(c.under_in, c.under_out, u ** c.sign))
            rels.append(LambdaRelation(c.over_in, c.over_out, v ** c.sign))
        else:
            s_a = d.arc_string(c.a_in)
            s_b = d.arc_string(c.b_in)
            if mode == "w3":
                al_for_a = al_for_b = ctx.var("al")
            else:
                al_for_a = ctx.var("al%d" % s_b)
                al_for_b = ctx.var("al%d" % s_a)
            rels.append(LambdaRelation(c.a_in, c.a_out, al_for_a ** (-c.chirality)))
            rels.append(LambdaRelation(c.b_in, c.b_out, al_for_b ** c.chirality))
    return rels


class NormalForm:
    """Bottom position j comes from string source[j] with monomial weight[j]."""

    __slots__ = ("n", "source", "weight")

    def __init__(self, n, source, weight):
        self.n = n
        self.source = tuple(source)
        self.weight = tuple(weight)
        if sorted(self.source) != list(range(1, n + 1)):
            raise DiagramError("sources are not a permutation of 1..%d" % n)
        for w in self.weight:
            if not w.is_unit():
                raise DiagramError("weight %r is not a monomial" % w)

    def __eq__(self, other):
        return (isinstance(other, NormalForm) and self.n == other.n
                and self.source == other.source and self.weight == other.weight)

    def __repr__(self):
        return "NormalForm(%r, %r)" % (self.source, self.weight)


def eliminate(relations, tops, bottoms):
    """Chain the relations from each top arc to a bottom arc.

    Relations are treated as undirected edges: following dst = src^w in
    reverse contributes w^{-1}.  Each top arc must reach exactly one
    bottom arc along a simple chain.
    """
    adj = {}
    for r in relations:
        adj.setdefault(r.src, []).append((r.dst, r.weight, 1))
        adj.setdefault(r.dst, []).append((r.src, r.weight, -1))
    bottom_pos = {a: j for j, a in enumerate(bottoms)}
    top_pos = {a: s for s, a in enumerate(tops, 1)}
    n = len(tops)
    source = [None] * n
    weight = [None] * n
    for s, start in enumerate(tops, 1):
        arc = start
        prev = None
        w = None
        steps = 0
        while arc not in bottom_pos:
            nexts = [(b, wt, sgn) for (b, wt, sgn) in adj.get(arc, []) if b != prev]
            if len(nexts) != 1:
                raise DiagramError("broken chain at arc %r" % arc)
            b, wt, sgn = nexts[0]
            step_w = wt if sgn > 0 else wt.inverse()
            w = step_w if w is None else w * step_w
            prev, arc = arc, b
            steps += 1
            if steps > 2 * len(relations) + 1:
                raise DiagramError("relation chain does not terminate")
        j = bottom_pos[arc]
        if source[j] is not None:
            raise DiagramError("two strings end at bottom position %d" % (j + 1))
        source[j] = s
        weight[j] = w
    if any(w is None for w in weight):
        ctx = relations[0].weight.ctx if relations else None
        if ctx is None:
            raise DiagramError("cannot infer ring for a trivial string")
        weight = [ctx.one() if w is None else w for w in weight]
    return NormalForm(n, source, weight)


def _eliminate_diagram(d, mode, ctx):
    rels = relations_of(d, mode, ctx)
    if not rels:
        return NormalForm(d.n, [d.arc_string(a) for a in d.bottom],
                          [ctx.one()] * d.n)
    nf = eliminate(rels, d.top, d.bottom)
    fixed = []
    for j, a in enumerate(d.bottom):
        if nf.source[j] != d.arc_string(a):
            raise DiagramError("relation chain disagrees with string traversal")
        fixed.append(nf.weight[j])
    return NormalForm(d.n, nf.source, fixed)


def self_writhe_correct(nf, d, mode, ctx=None):
    """Divide each weight by (uv)^k for the k signed self-crossings of its string."""
    if ctx is None:
        ctx = nf.weight[0].ctx
    out = []
    for j in range(d.n):
        s = nf.source[j]
        k = d.self_writhe(s)
        w = nf.weight[j]
        if k:
            if mode in ("2var", "w3"):
                uv = ctx.var("u") * ctx.var("v")
            else:
                uv = ctx.var("u%d" % s) * ctx.var("v%d" % s)
            w = w * uv ** (-k)
        out.append(w)
    return NormalForm(d.n, nf.source, out)


def tym_matrix(d, mode, ctx=None, self_writhe_correction=True):
    """The monomial matrix with entry (source string, bottom position) = weight."""
    if ctx is None:
        ctx = ctx_for_mode(mode, d.n)
    nf = _eliminate_diagram(d, mode, ctx)
    if self_writhe_correction:
        nf = self_writhe_correct(nf, d, mode, ctx)
    entries = {(nf.source[j] - 1, j): nf.weight[j] for j in range(d.n)}
    return RingMatrix.from_entries_dict(ctx, d.n, entries)


def compose(d1, d2):
    """Stack d2 below d1, identifying bottom arcs of d1 with top arcs of d2."""
    if d1.n != d2.n:
        raise DiagramError("strand counts differ")
    rename = {}
    used = set(d1.top) | set(d1.bottom)
    for c in d1.crossings:
        if isinstance(c, Classical):
            used.update((c.over_in, c.over_out, c.under_in, c.under_out))
        else:
            used.update((c.a_in, c.a_out, c.b_in, c.b_out))
    for j, a in enumerate(d2.top):
        rename[a] = d1.bottom[j]

    def rn(a):
        if a in rename:
            return rename[a]
        b = a
        while b in used:
            b = b + "'"
        rename[a] = b
        used.add(b)
        return b

    crossings = list(d1.crossings)
    for c in d2.crossings:
        if isinstance(c, Classical):
            crossings.append(Classical(c.sign, rn(c.over_in), rn(c.over_out),
                                       rn(c.under_in), rn(c.under_out)))
        else:
            crossings.append(Virtual(c.chirality, rn(c.a_in), rn(c.a_out),
                                     rn(c.b_in), rn(c.b_out)))
    bottom = [rn(a) for a in d2.bottom]
    return Diagram(d1.n, crossings, d1.top, bottom)


def add_kink(d, position, sign=1):
    """Append a single-string curl at the given bottom position (1-based)."""
    old = d.bottom[position - 1]
    used = set(d.top) | set(d.bottom)
    for c in d.crossings:
        if isinstance(c, Classical):
            used.update((c.over_in, c.over_out, c.under_in, c.under_out))
        else:
            used.update((c.a_in, c.a_out, c.b_in, c.b_out))
    mid, new = old + "k", old + "kk"
    while mid in used or new in used:
        mid, new = mid + "k", new + "kk"
    crossings = list(d.crossings)
    crossings.append(Classical(sign, mid, new, old, mid))
    bottom = list(d.bottom)
    bottom[position - 1] = new
    return Diagram(d.n, crossings, d.top, bottom)


def linking_profile_diagram(d):
    prof = LinkingProfile(d.n)
    for c in d.crossings:
        if isinstance(c, Classical):
            i = d.arc_string(c.over_in)
            j = d.arc_string(c.under_in)
            if i != j:
                prof.vl[(i, j)] += c.sign
        else:
            a = d.arc_string(c.a_in)
            b = d.arc_string(c.b_in)
            if a != b:
                prof.V[(a, b)] += c.chirality
                prof.V[(b, a)] -= c.chirality
    return prof


def kernel_predicate(d, which):
    """Linking number criteria for the invariant being the identity matrix."""
    prof = linking_profile_diagram(d)
    n = d.n
    pairs = [(i, j) for i in range(1, n + 1) for j in range(1, n + 1) if i != j]
    if which == "318":
        if d.has_virtual():
            raise DiagramError("criterion 318 applies to classical diagrams")
        return all(sum(prof.lk(i, j) for j in range(1, n + 1) if j != i) == 0
                   for i in range(1, n + 1))
    if which == "319":
        if d.has_virtual():
            raise DiagramError("criterion 319 applies to classical diagrams")
        if not d.is_pure():
            raise DiagramError("criterion 319 needs a pure diagram")
        return all(prof.lk(i, j) == 0 for i, j in pairs)
    if which == "48":
        return all(all(x == 0 for x in prof.row_sums(j)) for j in range(1, n + 1))
    if which == "49":
        if not d.is_pure():
            raise DiagramError("criterion 49 needs a pure diagram")
        return all(prof.vl[p] == 0 and prof.V[p] == 0 for p in pairs)
    raise ValueError("unknown criterion %r" % which)
