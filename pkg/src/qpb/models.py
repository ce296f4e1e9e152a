"""Builders for the bundled example structures.

Finite groups enter either through their function algebra Fun(G) (basis of
point evaluations) or their group algebra; the classical line enters as a
truncated Laurent span with an open product table.  The calculi built here
are the ones shipped as descriptor files:

* classical-u1: the classical one-dimensional calculus over the Laurent
  span, with trivial adjoint coaction, counit circ action and a vanishing
  differential lift; its envelope is the exterior line.
* z2-universal, z3-universal: universal first-order calculi of the function
  algebras on Z_2 and Z_3 (free envelopes, nonvanishing differential).
* s3-transpositions: the conjugation-class calculus on Fun(S_3), the
  smallest example with genuinely braided sigma and a nontrivial adjoint
  coaction.
* torus-base: a q-deformed two-dimensional exterior algebra (zero
  differential, swap star) whose degree-1 graded centre is trivial for
  generic q.
* two-point-base: functions on two points thickened by contractible form
  directions, so the space of regular gauge potentials is nonzero while
  the cohomology is still that of two points.
"""

from __future__ import annotations

from .calculus import CalculusDescriptor
from .hopf import HopfData
from .linalg import Matrix, Subspace, unit_vec, vec_add, vec_scale, zero_vec
from .scalar import ONE, Q, ZERO, Scalar


# ---------------------------------------------------------------------------
# finite groups as multiplication tables (index 0 is the identity)
# ---------------------------------------------------------------------------

def cyclic_group(m):
    table = tuple(tuple((a + b) % m for b in range(m)) for a in range(m))
    labels = tuple("e" if k == 0 else f"g{k}" if m > 2 else "g" for k in range(m))
    return table, labels


def symmetric_group_3():
    """S_3 as permutations of 3 points; order: e, the three transpositions, the two 3-cycles."""
    perms = [
        (0, 1, 2),   # e
        (1, 0, 2),   # t12
        (2, 1, 0),   # t13
        (0, 2, 1),   # t23
        (1, 2, 0),   # c123  (0->1->2->0)
        (2, 0, 1),   # c132
    ]
    labels = ("e", "t12", "t13", "t23", "c123", "c132")

    def compose(p, r):
        # (p r)(x) = p(r(x))
        return tuple(p[r[x]] for x in range(3))

    index = {p: i for i, p in enumerate(perms)}
    table = tuple(tuple(index[compose(perms[a], perms[b])] for b in range(6)) for a in range(6))
    return table, labels


def _group_inverse(table):
    m = len(table)
    inv = [None] * m
    for a in range(m):
        for b in range(m):
            if table[a][b] == 0:
                inv[a] = b
    return tuple(inv)


def function_algebra(table, labels) -> HopfData:
    """Fun(G): point evaluations, pointwise product, group coproduct."""
    m = len(table)
    inv = _group_inverse(table)
    product = [[vec_scale(ONE, unit_vec(m, a)) if a == b else zero_vec(m)
                for b in range(m)] for a in range(m)]
    coproduct = []
    for g in range(m):
        rows = [[ZERO] * m for _ in range(m)]
        for a in range(m):
            for b in range(m):
                if table[a][b] == g:
                    rows[a][b] = ONE
        coproduct.append(rows)
    counit = [ONE if g == 0 else ZERO for g in range(m)]
    antipode = Matrix.from_columns([unit_vec(m, inv[g]) for g in range(m)], m)
    star = Matrix.identity(m)
    return HopfData(m, [f"d_{lab}" for lab in labels], tuple(ONE for _ in range(m)),
                    product, coproduct, counit, antipode, star, closed=True)


def group_algebra(table, labels) -> HopfData:
    """Group algebra: group-like basis, kappa(g) = g^{-1} = g*."""
    m = len(table)
    inv = _group_inverse(table)
    product = [[unit_vec(m, table[a][b]) for b in range(m)] for a in range(m)]
    coproduct = []
    for g in range(m):
        rows = [[ZERO] * m for _ in range(m)]
        rows[g][g] = ONE
        coproduct.append(rows)
    counit = [ONE] * m
    antipode = Matrix.from_columns([unit_vec(m, inv[g]) for g in range(m)], m)
    star = Matrix.from_columns([unit_vec(m, inv[g]) for g in range(m)], m)
    return HopfData(m, labels, unit_vec(m, 0), product, coproduct, counit,
                    antipode, star, closed=True)


def laurent_span(k_max: int) -> HopfData:
    """Span of z^-k..z^k with products marked undefined past the window."""
    m = 2 * k_max + 1

    def idx(p):
        return p + k_max

    labels = [f"z^{p}" if p != 1 else "z" for p in range(-k_max, k_max + 1)]
    labels = ["1" if p == 0 else labels[idx(p)] for p in range(-k_max, k_max + 1)]
    product = [[unit_vec(m, idx(a + b)) if abs(a + b) <= k_max else None
                for b in range(-k_max, k_max + 1)] for a in range(-k_max, k_max + 1)]
    coproduct = []
    for p in range(-k_max, k_max + 1):
        rows = [[ZERO] * m for _ in range(m)]
        rows[idx(p)][idx(p)] = ONE
        coproduct.append(rows)
    counit = [ONE] * m
    antipode = Matrix.from_columns([unit_vec(m, idx(-p)) for p in range(-k_max, k_max + 1)], m)
    star = Matrix.from_columns([unit_vec(m, idx(-p)) for p in range(-k_max, k_max + 1)], m)
    return HopfData(m, labels, unit_vec(m, idx(0)), product, coproduct, counit,
                    antipode, star, closed=False)


# ---------------------------------------------------------------------------
# calculi
# ---------------------------------------------------------------------------

def _sigma_from_structure(n, coact, circ_mats, hopf):
    """sigma(t_i (x) t_j) = sum_k (t_j)_k (x) (t_i o c_k)."""
    n2 = n * n
    cols = []
    for i in range(n):
        for j in range(n):
            col = [ZERO] * n2
            for k in range(n):
                c_kj = coact[k][j]
                tw = zero_vec(n)
                for m, cm in enumerate(c_kj):
                    if cm:
                        tw = vec_add(tw, vec_scale(cm, circ_mats[m].column(i)))
                for b, cb in enumerate(tw):
                    if cb:
                        col[k * n + b] = col[k * n + b] + cb
            cols.append(col)
    return Matrix.from_columns(cols, n2)


def fun_calculus(table, labels, subset=None, name="") -> CalculusDescriptor:
    """Bicovariant calculus on Fun(G) attached to an ad-invariant subset.

    subset=None takes all of G minus the identity (the universal calculus,
    whose envelope relations vanish).
    """
    m = len(table)
    inv = _group_inverse(table)
    hopf = function_algebra(table, labels)
    if subset is None:
        subset = tuple(range(1, m))
    subset = tuple(subset)
    n = len(subset)
    pos = {g: t for t, g in enumerate(subset)}

    # pi(d_h) = theta_h for h in S, -sum theta for h = e, 0 otherwise
    pi_cols = []
    for g in range(m):
        if g == 0:
            pi_cols.append(tuple(-ONE for _ in range(n)))
        elif g in pos:
            pi_cols.append(unit_vec(n, pos[g]))
        else:
            pi_cols.append(zero_vec(n))
    pi = Matrix.from_columns(pi_cols, n)

    # circ: theta_g o d_h = [g = h] theta_g
    circ_mats = []
    for h in range(m):
        rows = [[ZERO] * n for _ in range(n)]
        if h in pos:
            t = pos[h]
            rows[t][t] = ONE
        circ_mats.append(Matrix(rows, n))

    # adjoint coaction: theta_g |-> sum_k theta_{k g k^-1} (x) d_k
    coact = [[zero_vec(m) for _ in range(n)] for _ in range(n)]
    for t, g in enumerate(subset):
        for k in range(m):
            conj = table[table[k][g]][inv[k]]
            coact[pos[conj]][t] = vec_add(coact[pos[conj]][t], unit_vec(m, k))

    sigma = _sigma_from_structure(n, coact, circ_mats, hopf)

    # star: theta_g* = -theta_{g^-1}
    star = Matrix.from_columns([vec_scale(-ONE, unit_vec(n, pos[inv[g]])) for g in subset], n)

    # differential lift d(theta_g) = -sum_{ab=g} pi(d_a) (x) pi(d_b)
    d1_cols = []
    for g in subset:
        col = [ZERO] * (n * n)
        for a in range(m):
            pa = pi.column(a)
            if all(not x for x in pa):
                continue
            for b in range(m):
                if table[a][b] != g:
                    continue
                pb = pi.column(b)
                for s, cs in enumerate(pa):
                    if not cs:
                        continue
                    for tt, ct in enumerate(pb):
                        if ct:
                            col[s * n + tt] = col[s * n + tt] - cs * ct
        d1_cols.append(col)
    d1 = Matrix.from_columns(d1_cols, n * n)

    # envelope relations: Q(d_h) = sum_{ab=h; a,b in S} theta_a (x) theta_b, h outside S u {e}
    rel_vectors = []
    for hgl in range(1, m):
        if hgl in pos:
            continue
        v = [ZERO] * (n * n)
        for a in subset:
            for b in subset:
                if table[a][b] == hgl:
                    v[pos[a] * n + pos[b]] = v[pos[a] * n + pos[b]] + ONE
        rel_vectors.append(v)
    relations2 = Subspace.from_vectors(n * n, rel_vectors)

    return CalculusDescriptor(hopf, n, sigma, coact, circ_mats, star, relations2,
                              d1, pi, name=name)


def classical_u1_calculus(k_max=3) -> tuple[HopfData, CalculusDescriptor]:
    """The classical line: trivial coaction, counit circ, exterior envelope."""
    hopf = laurent_span(k_max)
    m = hopf.dim
    n = 1
    coact = [[hopf.unit]]
    circ_mats = [Matrix([[hopf.counit[j]]]) for j in range(m)]
    sigma = Matrix([[ONE]])
    star = Matrix([[-ONE]])
    relations2 = Subspace.from_vectors(1, [(ONE,)])
    d1 = Matrix.zero(1, 1)
    # pi(z^p) = p theta
    pi = Matrix([[Scalar.from_int(p) for p in range(-k_max, k_max + 1)]], m)
    calc = CalculusDescriptor(hopf, n, sigma, coact, circ_mats, star, relations2,
                              d1, pi, name="classical-u1")
    return hopf, calc


def z2_universal() -> tuple[HopfData, CalculusDescriptor]:
    table, labels = cyclic_group(2)
    calc = fun_calculus(table, labels, name="z2-universal")
    return calc.hopf, calc


def z3_universal() -> tuple[HopfData, CalculusDescriptor]:
    table, labels = cyclic_group(3)
    calc = fun_calculus(table, labels, name="z3-universal")
    return calc.hopf, calc


def s3_transpositions() -> tuple[HopfData, CalculusDescriptor]:
    table, labels = symmetric_group_3()
    calc = fun_calculus(table, labels, subset=(1, 2, 3), name="s3-transpositions")
    return calc.hopf, calc
