"""Finite-dimensional Hopf *-algebra data given by structure constants.

The coefficient algebra of every calculus in this package is a span of
basis elements with an explicit product table.  For a genuinely finite
quantum group the table is total (``closed=True``).  For an infinite one
(the classical line span bundled as ``classical-u1`` is the prototype) the
user supplies the finite subspace spanned by all coefficients needed up to
the truncation degree; products that would leave the span are marked
undefined and any operation that actually needs one raises
ClosureExceeded instead of returning wrong data.

Conventions: the product table maps a basis pair (i, j) to the coordinate
vector of e_i e_j (or None when undefined); coproduct[i][j][k] is the
coefficient of e_j (x) e_k in the coproduct of e_i; antipode and star are
matrices whose column i holds the image of e_i.  Scalars are Q(q) with
trivial conjugation, so the star matrices are plain Q(q)-linear.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ClosureExceeded, DimensionMismatch
from .linalg import Matrix, unit_vec, vec_add, vec_scale, zero_vec
from .scalar import ZERO


@dataclass(frozen=True)
class CheckRow:
    """One validated axiom: name, verdict, counterexample detail on failure."""

    name: str
    ok: bool
    detail: str = ""


class HopfData:
    """Hopf *-algebra by structure constants over Q(q)."""

    __slots__ = ("dim", "labels", "unit", "product_table", "coproduct", "counit",
                 "antipode", "star", "closed")

    def __init__(self, dim, labels, unit, product_table, coproduct, counit,
                 antipode, star, closed=True):
        self.dim = dim
        self.labels = tuple(labels)
        self.unit = tuple(unit)
        self.product_table = tuple(
            tuple(None if v is None else tuple(v) for v in row) for row in product_table
        )
        self.coproduct = tuple(tuple(tuple(r) for r in m) for m in coproduct)
        self.counit = tuple(counit)
        self.antipode = antipode if isinstance(antipode, Matrix) else Matrix(antipode)
        self.star = star if isinstance(star, Matrix) else Matrix(star)
        self.closed = closed
        if len(self.labels) != dim or len(self.unit) != dim or len(self.counit) != dim:
            raise DimensionMismatch("Hopf data sizes disagree with dim")

    # -- basic maps -------------------------------------------------------

    def basis_product(self, i, j):
        entry = self.product_table[i][j]
        if entry is None:
            raise ClosureExceeded(
                f"product {self.labels[i]} * {self.labels[j]} leaves the supplied span"
            )
        return entry

    def product(self, a, b):
        """Product of two coordinate vectors."""
        out = zero_vec(self.dim)
        for i, ca in enumerate(a):
            if not ca:
                continue
            for j, cb in enumerate(b):
                if not cb:
                    continue
                out = vec_add(out, vec_scale(ca * cb, self.basis_product(i, j)))
        return out

    def coproduct_vec(self, a):
        """Coproduct as a dim x dim Matrix: entry (j, k) multiplies e_j (x) e_k."""
        rows = [[ZERO] * self.dim for _ in range(self.dim)]
        for i, c in enumerate(a):
            if not c:
                continue
            m = self.coproduct[i]
            for j in range(self.dim):
                mj = m[j]
                for k in range(self.dim):
                    if mj[k]:
                        rows[j][k] = rows[j][k] + c * mj[k]
        return Matrix(rows, self.dim)

    def iterated_coproduct(self, a, legs):
        """phi^(legs-1) of a vector, as a dict word -> Scalar over 'legs' legs."""
        if legs == 0:
            eps = self.counit_vec(a)
            return {(): eps} if eps else {}
        cur = {}
        for i, c in enumerate(a):
            if c:
                cur[(i,)] = cur.get((i,), ZERO) + c
        for _ in range(legs - 1):
            nxt = {}
            for word, c in cur.items():
                i = word[-1]
                m = self.coproduct[i]
                for j in range(self.dim):
                    mj = m[j]
                    for k in range(self.dim):
                        if mj[k]:
                            key = word[:-1] + (j, k)
                            v = nxt.get(key, ZERO) + c * mj[k]
                            if v:
                                nxt[key] = v
                            elif key in nxt:
                                del nxt[key]
            cur = nxt
        return cur

    def counit_vec(self, a):
        out = ZERO
        for c, e in zip(a, self.counit):
            if c and e:
                out = out + c * e
        return out

    def antipode_vec(self, a):
        return self.antipode.apply(a)

    def star_vec(self, a):
        return self.star.apply(a)

    def adjoint_action(self, a):
        """ad(a) = a^(2) (x) kappa(a^(1)) a^(3), as a dim x dim Matrix."""
        rows = [[ZERO] * self.dim for _ in range(self.dim)]
        for (i, j, k), c in self.iterated_coproduct(a, 3).items():
            left = self.basis_product_kappa(i, k)
            for m, cm in enumerate(left):
                if cm:
                    rows[j][m] = rows[j][m] + c * cm
        return Matrix(rows, self.dim)

    def basis_product_kappa(self, i, k):
        """kappa(e_i) e_k as a coordinate vector."""
        out = zero_vec(self.dim)
        for m, cm in enumerate(self.antipode.column(i)):
            if cm:
                out = vec_add(out, vec_scale(cm, self.basis_product(m, k)))
        return out

    def __repr__(self):
        return f"HopfData(dim {self.dim}, closed={self.closed})"


# ---------------------------------------------------------------------------
# axiom checking
# ---------------------------------------------------------------------------

def _fmt_vec(h, v):
    parts = [f"{h.labels[i]}" for i, c in enumerate(v) if c]
    return "+".join(parts) if parts else "0"


def hopf_axiom_rows(h: HopfData) -> list[CheckRow]:
    """Check the Hopf *-algebra axioms on the basis; failures become rows.

    Pairs whose product is undefined (open span) are skipped: axioms are
    verified on the data that exists.
    """
    rows = []

    # unit: 1 * e_i = e_i * 1 = e_i wherever defined
    ok, detail = True, ""
    for i in range(h.dim):
        try:
            left = h.product(h.unit, unit_vec(h.dim, i))
            right = h.product(unit_vec(h.dim, i), h.unit)
        except ClosureExceeded:
            continue
        if left != unit_vec(h.dim, i) or right != unit_vec(h.dim, i):
            ok, detail = False, f"unit fails on {h.labels[i]}"
            break
    rows.append(CheckRow("hopf: unit element", ok, detail))

    # counit: (eps (x) id) phi = id = (id (x) eps) phi
    ok, detail = True, ""
    for i in range(h.dim):
        cp = h.coproduct[i]
        left = zero_vec(h.dim)
        right = zero_vec(h.dim)
        for j in range(h.dim):
            for k in range(h.dim):
                c = cp[j][k]
                if c:
                    left = vec_add(left, vec_scale(c * h.counit[j], unit_vec(h.dim, k)))
                    right = vec_add(right, vec_scale(c * h.counit[k], unit_vec(h.dim, j)))
        if left != unit_vec(h.dim, i) or right != unit_vec(h.dim, i):
            ok, detail = False, f"counit fails on {h.labels[i]}"
            break
    rows.append(CheckRow("hopf: counit axiom", ok, detail))

    # coassociativity
    ok, detail = True, ""
    for i in range(h.dim):
        lhs = {}
        rhs = {}
        cp = h.coproduct[i]
        for j in range(h.dim):
            for k in range(h.dim):
                c = cp[j][k]
                if not c:
                    continue
                cj = h.coproduct[j]
                for a in range(h.dim):
                    for b in range(h.dim):
                        if cj[a][b]:
                            key = (a, b, k)
                            lhs[key] = lhs.get(key, ZERO) + c * cj[a][b]
                ck = h.coproduct[k]
                for a in range(h.dim):
                    for b in range(h.dim):
                        if ck[a][b]:
                            key = (j, a, b)
                            rhs[key] = rhs.get(key, ZERO) + c * ck[a][b]
        diff = {k: v for k, v in lhs.items() if v}
        for k, v in rhs.items():
            if not v:
                continue
            nv = diff.get(k, ZERO) - v
            if nv:
                diff[k] = nv
            elif k in diff:
                del diff[k]
        if diff:
            ok, detail = False, f"coassociativity fails on {h.labels[i]}"
            break
    rows.append(CheckRow("hopf: coassociativity", ok, detail))

    # antipode: m(kappa (x) id) phi = eta eps = m(id (x) kappa) phi
    ok, detail = True, ""
    for i in range(h.dim):
        try:
            left = zero_vec(h.dim)
            right = zero_vec(h.dim)
            cp = h.coproduct[i]
            for j in range(h.dim):
                for k in range(h.dim):
                    c = cp[j][k]
                    if not c:
                        continue
                    left = vec_add(left, vec_scale(c, h.basis_product_kappa(j, k)))
                    kk = h.antipode.column(k)
                    acc = zero_vec(h.dim)
                    for m, cm in enumerate(kk):
                        if cm:
                            acc = vec_add(acc, vec_scale(cm, h.basis_product(j, m)))
                    right = vec_add(right, vec_scale(c, acc))
            want = vec_scale(h.counit[i], h.unit)
            if left != want or right != want:
                ok, detail = False, f"antipode axiom fails on {h.labels[i]}"
                break
        except ClosureExceeded:
            continue
    rows.append(CheckRow("hopf: antipode axiom", ok, detail))

    # star involutive
    sq = h.star * h.star
    ok = sq == Matrix.identity(h.dim)
    rows.append(CheckRow("hopf: star involutive", ok, "" if ok else "star^2 != id"))

    # star anti-multiplicative: (ab)* = b* a* on defined basis pairs
    ok, detail = True, ""
    for i in range(h.dim):
        for j in range(h.dim):
            try:
                lhs = h.star_vec(h.basis_product(i, j))
                rhs = h.product(h.star.column(j), h.star.column(i))
            except ClosureExceeded:
                continue
            if lhs != rhs:
                ok, detail = False, f"(ab)* != b*a* on ({h.labels[i]}, {h.labels[j]})"
                break
        if not ok:
            break
    rows.append(CheckRow("hopf: star anti-multiplicative", ok, detail))

    # unit is group-like and *-fixed: phi(1) = 1 (x) 1 etc.
    cp_unit = h.coproduct_vec(h.unit)
    rows_want = [[h.unit[j] * h.unit[k] for k in range(h.dim)] for j in range(h.dim)]
    ok = cp_unit == Matrix(rows_want, h.dim) and h.counit_vec(h.unit).is_one() \
        and h.star_vec(h.unit) == h.unit and h.antipode_vec(h.unit) == h.unit
    rows.append(CheckRow("hopf: unit is group-like and *-fixed", ok,
                         "" if ok else "coproduct/counit/star/antipode disagree on 1"))
    return rows
