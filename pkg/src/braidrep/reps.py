"""Matrix representations of braid and welded braid groups given by generator images."""
from __future__ import annotations

from .matrices import RingMatrix
from .ring import RingContext
from .words import BraidWord


class GenRep:
    """A representation determined by images of the generators.

    sigma_images and sigma_inv_images map 1-based generator index to a
    RingMatrix; tau_images may be None for classical-only representations.
    """

    __slots__ = ("n", "dim", "ring", "sigma_images", "sigma_inv_images",
                 "tau_images", "name")

    def __init__(self, n, dim, ring, sigma_images, sigma_inv_images,
                 tau_images=None, name=""):
        self.n = n
        self.dim = dim
        self.ring = ring
        self.sigma_images = dict(sigma_images)
        self.sigma_inv_images = dict(sigma_inv_images)
        self.tau_images = dict(tau_images) if tau_images is not None else None
        self.name = name
        for i in range(1, n):
            if i not in self.sigma_images or i not in self.sigma_inv_images:
                raise ValueError("missing image for generator %d" % i)

    def letter_image(self, letter):
        if letter[0] == "s":
            _, i, s = letter
            return self.sigma_images[i] if s > 0 else self.sigma_inv_images[i]
        if self.tau_images is None:
            raise ValueError("representation has no virtual generator images")
        return self.tau_images[letter[1]]

    def evaluate(self, word):
        if word.n != self.n:
            raise ValueError("word on %d strands, representation on %d" % (word.n, self.n))
        out = RingMatrix.identity(self.ring, self.dim)
        for lt in word.letters:
            out = out * self.letter_image(lt)
        return out

    def check_relations(self):
        """Verify the defining relations of the (welded) braid group.

        Returns a list of human-readable descriptions of violated relations;
        an empty list means the images really define a representation.
        """
        n = self.n
        bad = []
        W = lambda *ls: BraidWord(n, ls)
        s = lambda i, e=1: ("s", i, e)
        t = lambda i: ("t", i)

        def chk(label, left, right):
            if self.evaluate(left) != self.evaluate(right):
                bad.append(label)

        for i in range(1, n):
            chk("sigma_%d invertible" % i, W(s(i), s(i, -1)), W())
            for j in range(i + 2, n):
                chk("sigma_%d sigma_%d commute" % (i, j),
                    W(s(i), s(j)), W(s(j), s(i)))
        for i in range(1, n - 1):
            chk("braid relation at %d" % i,
                W(s(i), s(i + 1), s(i)), W(s(i + 1), s(i), s(i + 1)))
        if self.tau_images is not None:
            for i in range(1, n):
                chk("tau_%d involution" % i, W(t(i), t(i)), W())
                for j in range(i + 2, n):
                    chk("tau_%d tau_%d commute" % (i, j),
                        W(t(i), t(j)), W(t(j), t(i)))
                    chk("sigma_%d tau_%d commute" % (i, j),
                        W(s(i), t(j)), W(t(j), s(i)))
                    chk("tau_%d sigma_%d commute" % (i, j),
                        W(t(i), s(j)), W(s(j), t(i)))
            for i in range(1, n - 1):
                chk("virtual braid relation at %d" % i,
                    W(t(i), t(i + 1), t(i)), W(t(i + 1), t(i), t(i + 1)))
                chk("mixed relation at %d" % i,
                    W(t(i), t(i + 1), s(i)), W(s(i + 1), t(i), t(i + 1)))
                chk("welded relation at %d" % i,
                    W(s(i), s(i + 1), t(i)), W(t(i + 1), s(i), s(i + 1)))
        return bad


def _block_rep(n, ring, block, block_inv, tau_block=None, name=""):
    """Build a GenRep whose sigma_i image is identity except a 2x2 block at i, i+1."""
    def at(b, i):
        entries = {}
        for k in range(n):
            if k not in (i - 1, i):
                entries[(k, k)] = ring.one()
        entries[(i - 1, i - 1)] = b[0][0]
        entries[(i - 1, i)] = b[0][1]
        entries[(i, i - 1)] = b[1][0]
        entries[(i, i)] = b[1][1]
        return RingMatrix.from_entries_dict(ring, n, entries)

    sig = {i: at(block, i) for i in range(1, n)}
    sig_inv = {i: at(block_inv, i) for i in range(1, n)}
    taus = {i: at(tau_block, i) for i in range(1, n)} if tau_block is not None else None
    return GenRep(n, n, ring, sig, sig_inv, taus, name=name)


def make_burau(n, param):
    """Unreduced Burau representation of B_n with t specialized to the unit `param`."""
    ring = param.ctx
    zero, one = ring.zero(), ring.one()
    tinv = param.inverse()
    return _block_rep(
        n, ring,
        [[zero, param], [one, one - param]],
        [[one - tinv, one], [tinv, zero]],
        name="burau")


def make_tym(n, ctx=None):
    """Tong-Yang-Ma representation of B_n over Z[t, t^-1] (or a given context with t)."""
    ring = ctx if ctx is not None else RingContext(("t",))
    t = ring.var("t")
    zero, one = ring.zero(), ring.one()
    return _block_rep(
        n, ring,
        [[zero, one], [t, zero]],
        [[zero, t.inverse()], [one, zero]],
        name="tym")


def make_wtym(n):
    """Welded Tong-Yang-Ma representation of wB_n over Z[u^-1, v^-1, al^-1]."""
    ring = RingContext(("u", "v", "al"))
    u, v, al = ring.var("u"), ring.var("v"), ring.var("al")
    zero = ring.zero()
    return _block_rep(
        n, ring,
        [[zero, u], [v, zero]],
        [[zero, v.inverse()], [u.inverse(), zero]],
        tau_block=[[zero, al.inverse()], [al, zero]],
        name="wtym")


def make_one_dim(n, r):
    """One-dimensional representation sigma_i -> (r) for a unit r."""
    ring = r.ctx
    m = RingMatrix.from_rows(ring, [[r]])
    m_inv = RingMatrix.from_rows(ring, [[r.inverse()]])
    sig = {i: m for i in range(1, n)}
    sig_inv = {i: m_inv for i in range(1, n)}
    return GenRep(n, 1, ring, sig, sig_inv, name="onedim")


def tensor_one_dim(rep, r):
    """Tensor a representation with the one-dimensional rep sigma_i -> r."""
    if r.ctx != rep.ring:
        raise ValueError("scalar lives in a different ring")
    rinv = r.inverse()
    sig = {i: m.scale(r) for i, m in rep.sigma_images.items()}
    sig_inv = {i: m.scale(rinv) for i, m in rep.sigma_inv_images.items()}
    taus = rep.tau_images
    return GenRep(rep.n, rep.dim, rep.ring, sig, sig_inv, taus,
                  name=rep.name + "*onedim")
