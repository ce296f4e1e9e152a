"""Degree-truncated graded algebras presented by generators and relations.

Everything here works with word bases over a graded alphabet (letters with
degrees, usually the calculus generators in degree 1; the universal
differential algebra adds their differentials in degree 2).  A quotient is
stored per degree as the relation subspace in RREF together with the
canonical complement basis: the cosets of the non-pivot words.  Degrees are
truncated at a window D; each retained degree slice is exact, truncation is
never an approximation within a slice.
"""

from __future__ import annotations

from .errors import (
    DifferentialNotWellDefined,
    DimensionMismatch,
    InconsistentRelations,
    NoEquivariantSection,
    NoSolution,
)
from .linalg import (
    Matrix,
    SpanBuilder,
    Subspace,
    solve,
    unit_vec,
    vec_add,
    vec_is_zero,
    vec_scale,
    zero_vec,
)
from .scalar import ONE, ZERO
from .words import graded_words, word_degree


class WordAlgebraBasis:
    """Word bases of the free graded algebra on a graded alphabet."""

    __slots__ = ("degrees", "names", "_index")

    def __init__(self, degrees, names=None):
        self.degrees = tuple(degrees)
        self.names = tuple(names) if names else tuple(f"x{i}" for i in range(len(degrees)))
        self._index = {}

    def words(self, k):
        return graded_words(self.degrees, k)

    def index(self, k):
        if k not in self._index:
            self._index[k] = {w: i for i, w in enumerate(self.words(k))}
        return self._index[k]

    def dim(self, k):
        return len(self.words(k))

    def concat_mul(self, k1, v1, k2, v2):
        """Product in the free algebra: distribute word concatenation."""
        out = [ZERO] * self.dim(k1 + k2)
        idx = self.index(k1 + k2)
        w1s, w2s = self.words(k1), self.words(k2)
        for i1, c1 in enumerate(v1):
            if not c1:
                continue
            for i2, c2 in enumerate(v2):
                if c2:
                    j = idx[w1s[i1] + w2s[i2]]
                    out[j] = out[j] + c1 * c2
        return tuple(out)

    def letter_substitution(self, images, k):
        """Algebra map on degree k determined by letter images.

        images[l] = (degree_of_image, dense vector over that degree's words);
        grade-preserving maps only (degree_of_image == degree of letter).
        """
        out_cols = []
        for w in self.words(k):
            terms = {(): ONE}
            for letter in w:
                deg_l, img = images[letter]
                nxt = {}
                for tw, tc in terms.items():
                    for wi, c in enumerate(img):
                        if c:
                            key = tw + self.words(deg_l)[wi]
                            v = nxt.get(key, ZERO) + tc * c
                            if v:
                                nxt[key] = v
                            elif key in nxt:
                                del nxt[key]
                terms = nxt
            col = [ZERO] * self.dim(k)
            idx = self.index(k)
            for tw, tc in terms.items():
                col[idx[tw]] = tc
            out_cols.append(col)
        return Matrix.from_columns(out_cols, self.dim(k))

    def star_matrix(self, star_letter: Matrix, k):
        """Graded anti-involution on degree k: reverse the word, star each
        letter, Koszul sign (-1)^(sum of degree products of swapped pairs)."""
        words = self.words(k)
        idx = self.index(k)
        cols = []
        for w in words:
            degs = [self.degrees[l] for l in w]
            inversions = 0
            for a in range(len(w)):
                for b in range(a + 1, len(w)):
                    inversions += degs[a] * degs[b]
            sign = ONE if inversions % 2 == 0 else -ONE
            terms = {(): sign}
            for letter in reversed(w):
                col = star_letter.column(letter)
                nxt = {}
                for tw, tc in terms.items():
                    for b, cb in enumerate(col):
                        if cb:
                            key = tw + (b,)
                            v = nxt.get(key, ZERO) + tc * cb
                            if v:
                                nxt[key] = v
                terms = nxt
            colv = [ZERO] * len(words)
            for tw, tc in terms.items():
                colv[idx[tw]] = tc
            cols.append(colv)
        return Matrix.from_columns(cols, len(words))

    def derivation_matrix(self, letter_d, k):
        """Degree +1 antiderivation on degree-k words from letter images.

        letter_d[l] is a dense vector over words of degree degrees[l]+1.
        """
        words_k = self.words(k)
        target = self.words(k + 1)
        idx = {w: i for i, w in enumerate(target)}
        cols = []
        for w in words_k:
            col = [ZERO] * len(target)
            sign_deg = 0
            for pos, letter in enumerate(w):
                img = letter_d[letter]
                sgn = ONE if sign_deg % 2 == 0 else -ONE
                img_words = self.words(self.degrees[letter] + 1)
                for wi, c in enumerate(img):
                    if c:
                        tw = w[:pos] + img_words[wi] + w[pos + 1:]
                        col[idx[tw]] = col[idx[tw]] + sgn * c
                sign_deg += self.degrees[letter]
            cols.append(col)
        return Matrix.from_columns(cols, len(target))


def ideal_closure(basis: WordAlgebraBasis, generators, max_degree) -> dict[int, Subspace]:
    """Two-sided homogeneous ideal span of homogeneous generators, per degree.

    generators: iterable of (degree, dense vector over that degree's words).
    The closure multiplies by single letters on both sides, degree by degree,
    which exhausts all word multiples; it is monotone and idempotent.
    """
    gens_by_degree = {}
    for deg, v in generators:
        gens_by_degree.setdefault(deg, []).append(tuple(v))
    out = {}
    for k in range(max_degree + 1):
        builder = SpanBuilder(basis.dim(k))
        for v in gens_by_degree.get(k, ()):
            if len(v) != basis.dim(k):
                raise DimensionMismatch("generator vector has wrong length")
            builder.insert(v)
        for letter, d_l in enumerate(basis.degrees):
            kk = k - d_l
            if kk < 0 or kk not in out:
                continue
            idx = basis.index(k)
            lower_words = basis.words(kk)
            for row in out[kk].rows:
                left = [ZERO] * basis.dim(k)
                right = [ZERO] * basis.dim(k)
                for wi, c in enumerate(row):
                    if c:
                        left[idx[(letter,) + lower_words[wi]]] = c
                        right[idx[lower_words[wi] + (letter,)]] = c
                builder.insert(left)
                builder.insert(right)
        out[k] = builder.subspace()
    return out


class GradedQuotientAlgebra:
    """Quotient of a free graded algebra by a homogeneous two-sided ideal.

    Quotient bases are the cosets of non-pivot words in lex order; products,
    the induced differential and the star all reduce through the relation
    RREF, so every representation choice is deterministic.
    """

    __slots__ = ("basis", "max_degree", "relations", "quotient_words", "reduce_mats",
                 "d_mats", "star_mats", "_mul_cache", "name")

    def __init__(self, basis, max_degree, relations, name=""):
        self.basis = basis
        self.max_degree = max_degree
        self.name = name
        self.relations = {}
        self.quotient_words = {}
        self.reduce_mats = {}
        self.d_mats = None
        self.star_mats = None
        self._mul_cache = {}
        for k in range(max_degree + 1):
            rel = relations.get(k, Subspace.zero(basis.dim(k)))
            if k == 0 and rel.dim > 0:
                raise InconsistentRelations("relations kill the unit")
            self.relations[k] = rel
            words = basis.words(k)
            keep = rel.quotient_complement()
            self.quotient_words[k] = tuple(words[j] for j in keep)
            # reduce: ambient coords -> quotient coords (free indices of residual)
            n_amb = basis.dim(k)
            rows = []
            red = rel.reduction_matrix()
            for j in keep:
                rows.append(red.rows[j])
            self.reduce_mats[k] = Matrix(rows, n_amb)

    def dim(self, k):
        return len(self.quotient_words[k])

    def dims(self):
        return tuple(self.dim(k) for k in range(self.max_degree + 1))

    def reduce(self, k, ambient_vec):
        return self.reduce_mats[k].apply(ambient_vec)

    def ambient(self, k, qvec):
        """Canonical coset representative (combination of non-pivot words)."""
        out = [ZERO] * self.basis.dim(k)
        idx = self.basis.index(k)
        for i, c in enumerate(qvec):
            if c:
                out[idx[self.quotient_words[k][i]]] = c
        return tuple(out)

    def unit(self):
        return (ONE,)

    def mul_basis(self, k1, i1, k2, i2):
        """Product of quotient basis elements, as a quotient vector at k1+k2."""
        key = (k1, i1, k2, i2)
        cached = self._mul_cache.get(key)
        if cached is None:
            w = self.quotient_words[k1][i1] + self.quotient_words[k2][i2]
            k = k1 + k2
            amb = [ZERO] * self.basis.dim(k)
            amb[self.basis.index(k)[w]] = ONE
            cached = self.reduce(k, amb)
            self._mul_cache[key] = cached
        return cached

    def mul(self, k1, v1, k2, v2):
        k = k1 + k2
        if k > self.max_degree:
            raise DimensionMismatch("product degree exceeds the window")
        out = [ZERO] * self.dim(k)
        for i1, c1 in enumerate(v1):
            if not c1:
                continue
            for i2, c2 in enumerate(v2):
                if c2:
                    prod = self.mul_basis(k1, i1, k2, i2)
                    c = c1 * c2
                    for j, pj in enumerate(prod):
                        if pj:
                            out[j] = out[j] + c * pj
        return tuple(out)

    def attach_differential(self, letter_d):
        """Install the antiderivation with the given letter images (ambient
        vectors of degree deg+1); verifies descent and d^2 = 0."""
        mats = {}
        for k in range(self.max_degree):
            amb = self.basis.derivation_matrix(letter_d, k)
            # descent: d of each relation vector must lie in the relation span
            for v in self.relations[k].rows:
                if not vec_is_zero(self.reduce(k + 1, amb.apply(v))):
                    raise DifferentialNotWellDefined(
                        f"differential does not preserve the degree-{k} relations")
            rows = self.reduce_mats[k + 1] * amb
            # restrict to quotient words
            cols = []
            idx = self.basis.index(k)
            for w in self.quotient_words[k]:
                col = [ZERO] * self.basis.dim(k)
                col[idx[w]] = ONE
                cols.append(rows.apply(col))
            mats[k] = Matrix.from_columns(cols, self.dim(k + 1))
        for k in range(self.max_degree - 1):
            if not (mats[k + 1] * mats[k]).is_zero():
                raise DifferentialNotWellDefined(f"d^2 != 0 at degree {k}")
        self.d_mats = mats

    def attach_star(self, star_letter):
        mats = {}
        for k in range(self.max_degree + 1):
            amb = self.basis.star_matrix(star_letter, k)
            for v in self.relations[k].rows:
                if not vec_is_zero(self.reduce(k, amb.apply(v))):
                    raise DifferentialNotWellDefined(
                        f"star does not preserve the degree-{k} relations")
            full = self.reduce_mats[k] * amb
            cols = []
            idx = self.basis.index(k)
            for w in self.quotient_words[k]:
                col = [ZERO] * self.basis.dim(k)
                col[idx[w]] = ONE
                cols.append(full.apply(col))
            mats[k] = Matrix.from_columns(cols, self.dim(k))
        for k in range(self.max_degree + 1):
            if mats[k] * mats[k] != Matrix.identity(self.dim(k)):
                raise DifferentialNotWellDefined(f"star^2 != id at degree {k}")
        self.star_mats = mats

    def d(self, k, qvec):
        return self.d_mats[k].apply(qvec)

    def star(self, k, qvec):
        return self.star_mats[k].apply(qvec)

    def __repr__(self):
        return f"GradedQuotientAlgebra({self.name or 'unnamed'}, dims {self.dims()})"


def quotient(basis: WordAlgebraBasis, relations, max_degree, name="") -> GradedQuotientAlgebra:
    return GradedQuotientAlgebra(basis, max_degree, relations, name=name)


# ---------------------------------------------------------------------------
# the envelope-type constructions over a calculus
# ---------------------------------------------------------------------------

def envelope_relations(calc, max_degree):
    """Ideal closure of the degree-2 relation space plus any higher relations."""
    basis = WordAlgebraBasis((1,) * calc.n, tuple(f"t{i+1}" for i in range(calc.n)))
    gens = [(2, v) for v in calc.relations2.rows]
    for deg, sub in sorted(calc.higher_relations.items()):
        for v in sub.rows:
            gens.append((deg, v))
    return basis, ideal_closure(basis, gens, max_degree)


def build_envelope(calc, max_degree, name=None) -> GradedQuotientAlgebra:
    """Left-invariant part of the universal higher-order calculus.

    The degree-2 relations (and optional higher ones) generate the ideal;
    the differential is induced from the supplied lift of d on generators
    and both its descent and d^2 = 0 are verified, not assumed.
    """
    basis, rels = envelope_relations(calc, max_degree)
    alg = GradedQuotientAlgebra(basis, max_degree, rels,
                                name=name or f"envelope({calc.name})")
    letter_d = [tuple(calc.d1.column(i)) for i in range(calc.n)]
    alg.attach_differential(letter_d)
    alg.attach_star(calc.star)
    return alg


def build_braided_exterior(calc, max_degree, name=None) -> GradedQuotientAlgebra:
    """Braided exterior algebra: degree-k relations are ker A_k."""
    from .calculus import antisymmetrizer
    from .linalg import kernel

    basis = WordAlgebraBasis((1,) * calc.n, tuple(f"t{i+1}" for i in range(calc.n)))
    rels = {k: kernel(antisymmetrizer(calc, k)) for k in range(max_degree + 1)}
    alg = GradedQuotientAlgebra(basis, max_degree, rels,
                                name=name or f"exterior({calc.name})")
    letter_d = [tuple(calc.d1.column(i)) for i in range(calc.n)]
    alg.attach_differential(letter_d)
    alg.attach_star(calc.star)
    return alg


# ---------------------------------------------------------------------------
# the equivariant hermitian section of the factorization map
# ---------------------------------------------------------------------------

def compute_section_iota(calc, env: GradedQuotientAlgebra, max_degree):
    """Grade-preserving hermitian section of the quotient map, intertwining
    the adjoint coactions; the deterministic pivot solution of the combined
    linear system.  Returns (sections, delta) where sections[k] maps the
    degree-k quotient back into words and delta is the embedded differential
    on generators (the degree-1 map composed with the degree-2 section)."""
    h = calc.hopf
    sections = {}
    for k in range(max_degree + 1):
        n_amb = env.basis.dim(k)
        n_quo = env.dim(k)
        if n_quo == 0:
            sections[k] = Matrix.zero(n_amb, 0)
            continue
        if env.relations[k].dim == 0:
            sections[k] = Matrix.identity(n_amb)
            continue
        unknowns = n_amb * n_quo

        def flat(w, j):
            return j * n_amb + w

        rows = []
        rhs = []
        # section property: reduce . iota = id
        red = env.reduce_mats[k]
        for qi in range(n_quo):
            for j in range(n_quo):
                row = [ZERO] * unknowns
                for w in range(n_amb):
                    c = red.rows[qi][w]
                    if c:
                        row[flat(w, j)] = c
                rows.append(row)
                rhs.append(ONE if qi == j else ZERO)
        # equivariance: Phi . iota = (iota (x) id) . Psi
        phi = calc.coaction_power(k)
        incl_cols = []
        idx = env.basis.index(k)
        for w in env.quotient_words[k]:
            col = [ZERO] * n_amb
            col[idx[w]] = ONE
            incl_cols.append(col)
        incl = Matrix.from_columns(incl_cols, n_amb)
        # quotient coaction Psi[(j', m)][j]
        psi_cols = []
        for j in range(n_quo):
            img = phi.apply(incl.column(j))
            col = [ZERO] * (n_quo * h.dim)
            for w in range(n_amb):
                comp = tuple(img[w * h.dim + m] for m in range(h.dim))
                if vec_is_zero(comp):
                    continue
                qred = red.apply(tuple(ONE if i == w else ZERO for i in range(n_amb)))
                for jp, cj in enumerate(qred):
                    if cj:
                        for m, cm in enumerate(comp):
                            if cm:
                                col[jp * h.dim + m] = col[jp * h.dim + m] + cj * cm
            psi_cols.append(col)
        psi = Matrix.from_columns(psi_cols, n_quo * h.dim)
        for wp in range(n_amb):
            for m in range(h.dim):
                for j in range(n_quo):
                    row = [ZERO] * unknowns
                    for w in range(n_amb):
                        c = phi.rows[wp * h.dim + m][w]
                        if c:
                            row[flat(w, j)] = row[flat(w, j)] + c
                    for jp in range(n_quo):
                        c = psi.rows[jp * h.dim + m][j]
                        if c:
                            row[flat(wp, jp)] = row[flat(wp, jp)] - c
                    if any(row):
                        rows.append(row)
                        rhs.append(ZERO)
        # hermiticity: iota . star_quotient = star_ambient . iota
        star_amb = env.basis.star_matrix(calc.star, k)
        star_quo = env.star_mats[k]
        for wp in range(n_amb):
            for j in range(n_quo):
                row = [ZERO] * unknowns
                for jp in range(n_quo):
                    c = star_quo.rows[jp][j]
                    if c:
                        row[flat(wp, jp)] = row[flat(wp, jp)] + c
                for w in range(n_amb):
                    c = star_amb.rows[wp][w]
                    if c:
                        row[flat(w, j)] = row[flat(w, j)] - c
                if any(row):
                    rows.append(row)
                    rhs.append(ZERO)
        try:
            sol = solve(Matrix(rows, unknowns), tuple(rhs))
        except NoSolution as exc:
            raise NoEquivariantSection(
                f"no equivariant hermitian section at degree {k}") from exc
        cols = [[sol[flat(w, j)] for w in range(n_amb)] for j in range(n_quo)]
        sections[k] = Matrix.from_columns(cols, n_amb)
    # embedded differential on generators
    if max_degree >= 2 and env.d_mats is not None:
        delta = sections[2] * env.d_mats[1]
    else:
        delta = Matrix.zero(calc.n * calc.n, calc.n)
    return sections, delta
