"""The Long-Moody construction and the experiments built on top of it."""
from __future__ import annotations

import random

import numpy as np

from .matrices import Permutation, RingMatrix, direct_sum
from .reps import GenRep, make_burau, make_one_dim, make_tym, tensor_one_dim
from .ring import RingContext
from .words import (BraidWord, FreeWord, artin_action, chi, commutator,
                    fox_derivative)


def _rho_group_ring(rho, elem):
    """Linear extension of rho o chi over a group ring element."""
    ring = rho.ring
    out = RingMatrix.zeros(ring, rho.dim, rho.dim)
    for w, c in elem.terms.items():
        out = out + rho.evaluate(chi(w)).scale(ring.const(c))
    return out


def _lm_letter(rho, letter):
    """Long-Moody image of a single braid letter, as an n*d square matrix."""
    n = rho.n - 1
    d = rho.dim
    ring = rho.ring
    lam = BraidWord(n, [letter])
    images = artin_action(lam)
    outer = rho.evaluate(lam.shift(1))
    blocks = {}
    for k in range(1, n + 1):
        target = images[k - 1]
        for j in range(1, n + 1):
            dj = fox_derivative(target, j)
            if dj.is_zero():
                continue
            blocks[(j, k)] = _rho_group_ring(rho, dj) * outer
    entries = {}
    for (j, k), b in blocks.items():
        for r in range(d):
            for c in range(d):
                v = b[r, c]
                if not v.is_zero():
                    entries[((j - 1) * d + r, (k - 1) * d + c)] = v
    return RingMatrix.from_entries_dict(ring, n * d, entries)


def lm_apply(rho):
    """Turn a representation of B_{n+1} into one of B_n of dimension n*d.

    The underlying space is indexed by pairs (j, k): j picks a free-group
    generator, k a coordinate of the source representation.
    """
    n = rho.n - 1
    if n < 2:
        raise ValueError("source representation must have at least 3 strands")
    sig = {i: _lm_letter(rho, ("s", i, 1)) for i in range(1, n)}
    sig_inv = {i: _lm_letter(rho, ("s", i, -1)) for i in range(1, n)}
    return GenRep(n, n * rho.dim, rho.ring, sig, sig_inv,
                  name="lm(%s)" % rho.name)


def lm_q(rho):
    """The q-twisted Long-Moody construction: q^{-1} * lm(q tensor rho)."""
    ring = rho.ring
    if "q" not in ring.variables:
        raise ValueError("ring context must contain q")
    q = ring.var("q")
    lm = lm_apply(tensor_one_dim(rho, q))
    qinv = q.inverse()
    sig = {i: m.scale(qinv) for i, m in lm.sigma_images.items()}
    sig_inv = {i: m.scale(q) for i, m in lm.sigma_inv_images.items()}
    return GenRep(lm.n, lm.dim, ring, sig, sig_inv, name="lm_q(%s)" % rho.name)


class SemidirectRep:
    """A representation of F_n x| B_n by images of sigma_i and x_i."""

    __slots__ = ("n", "dim", "ring", "sigma_images", "sigma_inv_images",
                 "x_images", "x_inv_images", "name")

    def __init__(self, n, dim, ring, sigma_images, sigma_inv_images,
                 x_images, x_inv_images, name=""):
        self.n = n
        self.dim = dim
        self.ring = ring
        self.sigma_images = dict(sigma_images)
        self.sigma_inv_images = dict(sigma_inv_images)
        self.x_images = dict(x_images)
        self.x_inv_images = dict(x_inv_images)
        self.name = name

    def sigma(self, word):
        out = RingMatrix.identity(self.ring, self.dim)
        for lt in word.letters:
            out = out * (self.sigma_images[lt[1]] if lt[2] > 0
                         else self.sigma_inv_images[lt[1]])
        return out

    def x_word(self, w):
        out = RingMatrix.identity(self.ring, self.dim)
        for g, s in w.letters:
            out = out * (self.x_images[g] if s > 0 else self.x_inv_images[g])
        return out

    def x_group_ring(self, elem):
        out = RingMatrix.zeros(self.ring, self.dim, self.dim)
        for w, c in elem.terms.items():
            out = out + self.x_word(w).scale(self.ring.const(c))
        return out


def make_eta(n, ctx=None):
    """The semidirect representation with sigma_i -> TYM and x_i -> q Diag(1,..,t,..,1)."""
    ring = ctx if ctx is not None else RingContext(("t", "q"))
    tym = make_tym(n, ring)
    q = ring.var("q")
    t = ring.var("t")
    x_images = {}
    x_inv = {}
    for i in range(1, n + 1):
        diag = {(k, k): (q * t if k == i - 1 else q) for k in range(n)}
        x_images[i] = RingMatrix.from_entries_dict(ring, n, diag)
        x_inv[i] = x_images[i].monomial_inverse()
    return SemidirectRep(n, n, ring, tym.sigma_images, tym.sigma_inv_images,
                         x_images, x_inv, name="eta%d" % n)


def check_semidirect(eta):
    """Verify sigma * x_j * sigma^{-1} = image of the Artin twist of x_j."""
    n = eta.n
    bad = []
    for i in range(1, n):
        w = BraidWord.sigma(n, i)
        s = eta.sigma(w)
        s_inv = eta.sigma(w.inverse())
        twisted = artin_action(w)
        for j in range(1, n + 1):
            lhs = s * eta.x_images[j] * s_inv
            rhs = eta.x_word(twisted[j - 1])
            if lhs != rhs:
                bad.append((i, j))
    return bad


def lm_semidirect(eta, q_twist=False):
    """Long-Moody construction from a semidirect representation.

    With q_twist the sigma and x images are first scaled by q and the
    result by q^{-1}, the same normalization as lm_q.
    """
    n = eta.n
    d = eta.dim
    ring = eta.ring
    if q_twist:
        q = ring.var("q")
        qinv = q.inverse()
        eta = SemidirectRep(
            n, d, ring,
            {i: m.scale(q) for i, m in eta.sigma_images.items()},
            {i: m.scale(qinv) for i, m in eta.sigma_inv_images.items()},
            {i: m.scale(q) for i, m in eta.x_images.items()},
            {i: m.scale(qinv) for i, m in eta.x_inv_images.items()},
            name=eta.name)

    def letter_image(letter):
        lam = BraidWord(n, [letter])
        images = artin_action(lam)
        outer = eta.sigma(lam)
        entries = {}
        for k in range(1, n + 1):
            for j in range(1, n + 1):
                dj = fox_derivative(images[k - 1], j)
                if dj.is_zero():
                    continue
                b = eta.x_group_ring(dj) * outer
                for r in range(d):
                    for c in range(d):
                        v = b[r, c]
                        if not v.is_zero():
                            entries[((j - 1) * d + r, (k - 1) * d + c)] = v
        return RingMatrix.from_entries_dict(ring, n * d, entries)

    sig = {i: letter_image(("s", i, 1)) for i in range(1, n)}
    sig_inv = {i: letter_image(("s", i, -1)) for i in range(1, n)}
    if q_twist:
        sig = {i: m.scale(qinv) for i, m in sig.items()}
        sig_inv = {i: m.scale(q) for i, m in sig_inv.items()}
    return GenRep(n, n * d, ring, sig, sig_inv,
                  name="lm_sd(%s%s)" % (eta.name, ",q" if q_twist else ""))


def reduced_lm3():
    """The six-dimensional reduction of the nine-dimensional construction on B_3."""
    ring = RingContext(("t", "q"))
    t, q = ring.var("t"), ring.var("q")
    q2 = q * q
    rows1 = [
        [0, -q2, 0, 0, 0, 0],
        [-q2 * t * t, 0, 0, 0, 0, 0],
        [0, 0, -q2, 0, 0, 0],
        [0, 1, 0, 0, 1, 0],
        [t, 0, 0, t, 0, 0],
        [0, 0, 1, 0, 0, 1],
    ]
    rows2 = [
        [1, 0, 0, q2, 0, 0],
        [0, 0, 1, 0, 0, q2],
        [0, t, 0, 0, q2 * t * t, 0],
        [0, 0, 0, -q2, 0, 0],
        [0, 0, 0, 0, 0, -q2],
        [0, 0, 0, 0, -q2 * t * t, 0],
    ]
    m1 = RingMatrix.from_rows(ring, rows1)
    m2 = RingMatrix.from_rows(ring, rows2)
    return GenRep(3, 6, ring,
                  {1: m1, 2: m2},
                  {1: m1.inverse(), 2: m2.inverse()},
                  name="reduced_lm3")


def decompose_block_permutation(n):
    """Order that lists the (j, 1) coordinates first, then the rest."""
    d = n + 1
    first = [j * d for j in range(n)]
    rest = [i for i in range(n * d) if i % d != 0]
    return Permutation(first + rest)


def decompose_check(n):
    """Split lm_q(TYM_{n+1}) into a Burau block and a semidirect block."""
    ring = RingContext(("t", "q"))
    lm = lm_q(make_tym(n + 1, ring))
    q, t = ring.var("q"), ring.var("t")
    bur = make_burau(n, q * q * t)
    sd = lm_semidirect(make_eta(n, ring), q_twist=True)
    perm = decompose_block_permutation(n)
    report = {"n": n, "blocks": (n, n * n), "generators": {}, "ok": True}
    for i in range(1, n):
        got = lm.sigma_images[i].index_relabel(perm)
        want = direct_sum([bur.sigma_images[i], sd.sigma_images[i]], ring=ring)
        ok = got == want
        report["generators"][i] = ok
        report["ok"] = report["ok"] and ok
    return report


def identify_trivial_burau(n):
    """Compare lm_q of the trivial one-dimensional rep with Burau at q^2.

    Returns (base change matrix, ok).  The identity turns out to be the
    right base change in the basis used here.
    """
    ring = RingContext(("t", "q"))
    lm = lm_q(make_one_dim(n + 1, ring.one()))
    q = ring.var("q")
    bur = make_burau(n, q * q)
    basis = RingMatrix.identity(ring, n)
    ok = all(lm.sigma_images[i] == bur.sigma_images[i]
             and lm.sigma_inv_images[i] == bur.sigma_inv_images[i]
             for i in range(1, n))
    return basis, ok


def block_formula_lm_q_tym(n, i):
    """Closed form for lm_q(TYM_{n+1})(sigma_i) used as an independent check.

    The image is a block matrix over d = n + 1: identity blocks off the
    i, i+1 rows, the 2x2 insert [[0, M_i], [I, I - N_i]] there, all
    multiplied by the block diagonal matrix of TYM_{n+1}(sigma_{i+1}).
    """
    ring = RingContext(("t", "q"))
    t, q = ring.var("t"), ring.var("q")
    q2 = q * q
    d = n + 1
    tym = make_tym(n + 1, ring)
    sfac = tym.sigma_images[i + 1]
    mi = RingMatrix.from_entries_dict(
        ring, d, {(k, k): (q2 * t if k in (0, i + 1) else q2) for k in range(d)})
    ni = RingMatrix.from_entries_dict(
        ring, d, {(k, k): (q2 * t if k in (0, i) else q2) for k in range(d)})
    ident = RingMatrix.identity(ring, d)
    zero = RingMatrix.zeros(ring, d, d)
    blocks = {}
    for j in range(n):
        blocks[(j, j)] = ident
    blocks[(i - 1, i - 1)] = zero
    blocks[(i - 1, i)] = mi
    blocks[(i, i - 1)] = ident
    blocks[(i, i)] = ident - ni
    entries = {}
    for (bj, bk), b in blocks.items():
        for r in range(d):
            for c in range(d):
                v = b[r, c]
                if not v.is_zero():
                    entries[(bj * d + r, bk * d + c)] = v
    left = RingMatrix.from_entries_dict(ring, n * d, entries)
    right = direct_sum([sfac] * n, ring=ring)
    return left * right


def _specialize_matrix_mod_p(m, p, values):
    """Evaluate a Laurent matrix at unit values of the variables mod p."""
    ctx = m.ring
    out = np.zeros((m.rows, m.cols), dtype=np.int64)
    for r in range(m.rows):
        for c in range(m.cols):
            poly = m[r, c]
            acc = 0
            for exps, coeff in poly.terms.items():
                term = coeff % p
                for var, e in zip(ctx.variables, exps):
                    if e:
                        term = (term * pow(values[var], e, p)) % p
                acc = (acc + term) % p
            out[r, c] = acc
    return out


def _mod_inverse_matrix(a, p):
    """Inverse of an integer matrix mod p by Gaussian elimination, or None."""
    d = a.shape[0]
    aug = np.concatenate([a % p, np.eye(d, dtype=np.int64)], axis=1)
    for col in range(d):
        piv = None
        for r in range(col, d):
            if aug[r, col] % p:
                piv = r
                break
        if piv is None:
            return None
        if piv != col:
            aug[[col, piv]] = aug[[piv, col]]
        inv = pow(int(aug[col, col]), -1, p)
        aug[col] = (aug[col] * inv) % p
        for r in range(d):
            if r != col and aug[r, col]:
                aug[r] = (aug[r] - aug[r, col] * aug[col]) % p
    return aug[:, d:]


class _SpanBasis:
    """Row echelon basis of a subspace of F_p^(d*d)."""

    def __init__(self, p, length):
        self.p = p
        self.length = length
        self.pivots = {}

    def add(self, vec):
        v = vec % self.p
        for piv, row in self.pivots.items():
            if v[piv]:
                v = (v - v[piv] * row) % self.p
        nz = np.nonzero(v)[0]
        if len(nz) == 0:
            return False
        piv = int(nz[0])
        v = (v * pow(int(v[piv]), -1, self.p)) % self.p
        self.pivots[piv] = v
        return True

    def dim(self):
        return len(self.pivots)


def irreducibility_probe(rep, p=10007, trials=5, seed=0):
    """Burnside span probe at random prime-field specializations.

    A trial specializes every variable to a random nonzero value mod p and
    closes the span of words in the generator images under multiplication.
    Reaching dimension d*d in any trial certifies that no proper invariant
    subspace can exist generically.
    """
    rng = random.Random(seed)
    d = rep.dim
    best = 0
    for trial in range(1, trials + 1):
        values = {v: rng.randrange(1, p) for v in rep.ring.variables}
        gens = []
        singular = False
        for i in range(1, rep.n):
            g = _specialize_matrix_mod_p(rep.sigma_images[i], p, values)
            g_inv = _mod_inverse_matrix(g, p)
            if g_inv is None:
                singular = True
                break
            gens.extend([g, g_inv])
        if singular:
            continue
        basis = _SpanBasis(p, d * d)
        queue = [np.eye(d, dtype=np.int64)]
        basis.add(queue[0].reshape(-1))
        while queue and basis.dim() < d * d:
            m = queue.pop()
            for g in gens:
                prod = (m @ g) % p
                if basis.add(prod.reshape(-1)):
                    queue.append(prod)
        best = max(best, basis.dim())
        if best == d * d:
            return {"dimension": best, "full": True, "trials_used": trial}
    return {"dimension": best, "full": False, "trials_used": trials}


def kernel_words():
    """The four commutator words of the kernel experiment, keyed by name."""
    def b(n, *ks):
        letters = []
        for k in ks:
            letters.append(("s", abs(k), 1 if k > 0 else -1))
        return BraidWord(n, letters)

    psi1 = b(5, -3, 2, 1, 1, 2, 4, 4, 4, 3, 2)
    psi2 = b(5, -4, 3, 2, -1, -1, 2, 1, 1, 2, 2, 1, 4, 4, 4, 4, 4)
    mid = b(5, 4, 3, 2, 1, 1, 2, 3, 4)
    sigma = commutator(psi1.inverse() * b(5, 4) * psi1,
                       psi2.inverse() * mid * psi2)

    delta1 = b(6, 4, -5, -2, 1)
    delta2 = b(6, -4, 5, 5, 2, -1, -1)
    theta = b(6, -5, -4, 5, -3, 4, -2, -3, -3, -3, 1, 1, 1, 5, 4, -3, -2, 1)
    tau = commutator(delta1.inverse() * b(6, 3) * delta1,
                     delta2.inverse() * b(6, 3) * delta2)
    xi = commutator(theta.inverse() * b(6, 5) * theta,
                    b(6, 2, 3, 4, 5) ** 5)

    theta7 = theta.shift(1)
    upsilon = commutator(b(7, 1), theta7.inverse() * b(7, 6) * theta7)
    return {"sigma": sigma, "tau": tau, "xi": xi, "upsilon": upsilon}


def kernel_experiment(words=None):
    """Evaluate the kernel words in Burau, lm(TYM) and shifted lm_q(TYM).

    Returns, per word, whether each of the three images is the identity.
    """
    if words is None:
        words = kernel_words()
    results = {}
    cache = {}
    for name, w in words.items():
        n = w.n
        if n not in cache:
            tctx = RingContext(("t",))
            tqctx = RingContext(("t", "q"))
            cache[n] = (
                make_burau(n, tctx.var("t")),
                lm_apply(make_tym(n + 1, tctx)),
                lm_q(make_tym(n + 2, tqctx)),
            )
        bur, lm, t1lm = cache[n]
        results[name] = {
            "n": n,
            "burau_identity": bur.evaluate(w).is_identity(),
            "lm_identity": lm.evaluate(w).is_identity(),
            "t1lm_identity": t1lm.evaluate(w.shift(1)).is_identity(),
        }
    return results


def intertwining_check(rho):
    """Matrix form of the relation making the construction well defined.

    For every generator sigma_i and free generator x_j:
    rho(shift(sigma_i)) rho(chi(x_j)) = rho(chi(a(sigma_i)(x_j))) rho(shift(sigma_i)).
    """
    n = rho.n - 1
    bad = []
    for i in range(1, n):
        lam = BraidWord.sigma(n, i)
        outer = rho.evaluate(lam.shift(1))
        images = artin_action(lam)
        for j in range(1, n + 1):
            lhs = outer * rho.evaluate(chi(FreeWord.gen(n, j)))
            rhs = rho.evaluate(chi(images[j - 1])) * outer
            if lhs != rhs:
                bad.append((i, j))
    return bad
