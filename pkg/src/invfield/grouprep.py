"""Finite matrix groups, their action on polynomials, characters, and
equivariant maps from irreducible models into graded pieces of k[V]."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .linalg import rref
from .multipoly import CyclotomicField, PolyRing, Polynomial, RationalFunction
from .scalars import CyclotomicElement

Matrix = tuple[tuple[CyclotomicElement, ...], ...]

ONE = CyclotomicElement.rational(1)
ZERO = CyclotomicElement.rational(0)


class GroupError(ValueError):
    pass


class ElementCapExceeded(GroupError):
    pass


class InvalidIrreducible(GroupError):
    pass


# -- small matrix helpers -----------------------------------------------------


def as_matrix(rows) -> Matrix:
    out = tuple(tuple(CyclotomicElement.rational(v) if not isinstance(v, CyclotomicElement) else v for v in r) for r in rows)
    n = len(out)
    if any(len(r) != n for r in out):
        raise GroupError(f"matrix is not square: {len(out)} rows of lengths {[len(r) for r in out]}")
    return out


def identity(n: int) -> Matrix:
    return tuple(tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n))


def matmul(a: Matrix, b: Matrix) -> Matrix:
    n, k = len(a), len(b)
    cols = len(b[0]) if b else 0
    out = []
    for i in range(n):
        row = []
        ai = a[i]
        for j in range(cols):
            s = ZERO
            for t in range(k):
                x = ai[t]
                if x:
                    y = b[t][j]
                    if y:
                        s = s + x * y
            row.append(s)
        out.append(tuple(row))
    return tuple(out)


def matinv(a: Matrix) -> Matrix:
    n = len(a)
    aug = [list(a[i]) + [ONE if i == j else ZERO for j in range(n)] for i in range(n)]
    m, piv = rref(aug)
    if piv[:n] != list(range(n)):
        raise GroupError("matrix is not invertible")
    return tuple(tuple(m[i][n:]) for i in range(n))


def trace(a: Matrix) -> CyclotomicElement:
    s = ZERO
    for i in range(len(a)):
        s = s + a[i][i]
    return s


# -- groups -------------------------------------------------------------------


class MatrixGroup:
    """A finite group given by generating matrices, enumerated breadth-first.

    Element 0 is the identity; element order follows the breadth-first
    traversal with generators tried in input order, and ``words[i]`` records
    the generator indices whose product (left to right) gives element i.
    """

    def __init__(self, generators: Sequence, names: Sequence[str] | None = None, *,
                 cyclotomic_order: int = 1, variables: Sequence[str] | None = None,
                 term_order="grevlex", element_cap: int = 1000):
        gens = [as_matrix(g) for g in generators]
        if not gens:
            raise GroupError("need at least one generator")
        n = len(gens[0])
        if any(len(g) != n for g in gens):
            raise GroupError("generators have different dimensions")
        for idx, g in enumerate(gens):
            try:
                matinv(g)
            except GroupError:
                raise GroupError(f"generator {idx} is not invertible") from None
        self.n = n
        self.generators = gens
        self.generator_names = list(names) if names is not None else [f"g{i + 1}" for i in range(len(gens))]
        self.cyclotomic_order = cyclotomic_order
        variables = list(variables) if variables is not None else _default_names(n)
        if len(variables) != n:
            raise GroupError(f"{len(variables)} variable names for dimension {n}")
        self.ring = PolyRing(tuple(variables), CyclotomicField(cyclotomic_order), term_order)
        self.element_cap = element_cap
        self._enumerate()
        self._table: list[list[int | None]] = [[None] * len(self.elements) for _ in self.elements]
        self._inverses = [self.index(matinv(g)) for g in self.elements]
        self._forms: list[list[Polynomial]] | None = None
        self._mono_cache: dict = {}

    def _enumerate(self):
        ident = identity(self.n)
        self.elements: list[Matrix] = [ident]
        self.words: list[tuple[int, ...]] = [()]
        self._index = {ident: 0}
        queue = deque([0])
        while queue:
            i = queue.popleft()
            for s, g in enumerate(self.generators):
                m = matmul(self.elements[i], g)
                if m in self._index:
                    continue
                if len(self.elements) >= self.element_cap:
                    raise ElementCapExceeded(
                        f"group has more than {self.element_cap} elements; too large for exact desk-scale computation"
                    )
                self._index[m] = len(self.elements)
                self.elements.append(m)
                self.words.append(self.words[i] + (s,))
                queue.append(len(self.elements) - 1)

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self):
        return len(self.elements)

    def index(self, m: Matrix) -> int:
        return self._index[as_matrix(m)]

    def mul(self, i: int, j: int) -> int:
        v = self._table[i][j]
        if v is None:
            v = self._index[matmul(self.elements[i], self.elements[j])]
            self._table[i][j] = v
        return v

    def multiplication_table(self) -> list[list[int]]:
        return [[self.mul(i, j) for j in range(self.order)] for i in range(self.order)]

    def inverse(self, i: int) -> int:
        return self._inverses[i]

    def power(self, i: int, k: int) -> int:
        if k < 0:
            i, k = self.inverse(i), -k
        r = 0
        for _ in range(k):
            r = self.mul(r, i)
        return r

    def generator_indices(self) -> list[int]:
        return [self._index[g] for g in self.generators]

    def is_abelian(self) -> bool:
        gi = self.generator_indices()
        return all(self.mul(a, b) == self.mul(b, a) for a in gi for b in gi)

    def with_term_order(self, order) -> "MatrixGroup":
        """Same group with the polynomial ring re-ordered; enumeration is reused."""
        other = object.__new__(MatrixGroup)
        other.__dict__.update(self.__dict__)
        other.ring = self.ring.with_order(order)
        other._forms = None
        other._mono_cache = {}
        return other

    # -- action on polynomials ---------------------------------------------------

    def _linear_forms(self):
        # element g sends x_i to sum_j (g^-1)_ij x_j
        if self._forms is None:
            xs = self.ring.gens()
            forms = []
            for gi in range(self.order):
                inv = self.elements[self.inverse(gi)]
                row_forms = []
                for i in range(self.n):
                    f = self.ring.zero()
                    for j in range(self.n):
                        c = inv[i][j]
                        if c:
                            f = f + xs[j].scale(c)
                    row_forms.append(f)
                forms.append(row_forms)
            self._forms = forms
        return self._forms

    def act_monomial(self, g: int, mono) -> Polynomial:
        key = (g, mono)
        p = self._mono_cache.get(key)
        if p is None:
            if not any(mono):
                p = self.ring.one()
            else:
                # peel off one variable and reuse the cached smaller monomial
                i = next(k for k, e in enumerate(mono) if e)
                rest = mono[:i] + (mono[i] - 1,) + mono[i + 1:]
                p = self.act_monomial(g, rest) * self._linear_forms()[g][i]
            self._mono_cache[key] = p
        return p

    def act(self, g: int, f):
        """The action (g f)(v) = f(g^-1 v) on polynomials and rational functions."""
        if isinstance(f, RationalFunction):
            return RationalFunction(self.act(g, f.num), self.act(g, f.den))
        if g == 0:
            return f
        out: dict = {}
        for m, c in f.terms.items():
            for mm, v in self.act_monomial(g, m).terms.items():
                w = out.get(mm)
                out[mm] = v * c if w is None else w + v * c
        return Polynomial._new(f.ring, {m: c for m, c in out.items() if c})

    def orbit_images(self, f) -> list:
        return [self.act(g, f) for g in range(self.order)]

    def reynolds(self, f):
        """Average of the orbit images; a projection onto invariants."""
        if isinstance(f, RationalFunction):
            total = None
            for g in range(self.order):
                t = self.act(g, f)
                total = t if total is None else total + t
            return total * Fraction(1, self.order)
        total: dict = {}
        for g in range(self.order):
            for m, c in self.act(g, f).terms.items():
                w = total.get(m)
                total[m] = c if w is None else w + c
        scale = Fraction(1, self.order)
        return Polynomial._new(f.ring, {m: c * scale for m, c in total.items() if c})

    def is_invariant(self, f) -> bool:
        return all(self.act(g, f) == f for g in self.generator_indices())

    # -- characters --------------------------------------------------------------

    def character(self, g: int) -> CyclotomicElement:
        return trace(self.elements[g])

    def graded_character(self, g: int, d: int) -> CyclotomicElement:
        """Trace of g on the degree-d polynomials.

        g acts on linear forms through (g^-1)^T, so the power sums of its
        eigenvalues are traces of g^-k; complete homogeneous sums follow by
        Newton's identities.
        """
        h = [ONE]
        p = [None] + [self.character(self.power(g, -k)) for k in range(1, d + 1)]
        for k in range(1, d + 1):
            s = ZERO
            for i in range(1, k + 1):
                s = s + p[i] * h[k - i]
            h.append(s * Fraction(1, k))
        return h[d]

    def __repr__(self):
        return f"MatrixGroup(order={self.order}, n={self.n})"


def _default_names(n: int) -> list[str]:
    # z is reserved for the root of unity in literals
    if n <= 3:
        return ["x", "y", "w"][:n]
    return [f"x{i + 1}" for i in range(n)]


def enumerate_group(generators, **kwargs) -> MatrixGroup:
    return MatrixGroup(generators, **kwargs)


# -- irreducible models -------------------------------------------------------


class IrreducibleModel:
    """A representation V_lambda of the group, given on generators and
    extended to all elements through the enumeration words."""

    def __init__(self, label: str, group: MatrixGroup, generator_matrices: Sequence):
        mats = [as_matrix(m) for m in generator_matrices]
        if len(mats) != len(group.generators):
            raise InvalidIrreducible(f"model {label!r}: need one matrix per group generator")
        d = len(mats[0])
        if any(len(m) != d for m in mats):
            raise InvalidIrreducible(f"model {label!r}: matrices of different sizes")
        self.label = label
        self.group = group
        self.degree = d
        self.generator_matrices = mats
        self.matrices: list[Matrix] = []
        for w in group.words:
            m = identity(d)
            for s in w:
                m = matmul(m, mats[s])
            self.matrices.append(m)
        self._chars = [trace(m) for m in self.matrices]

    def matrix(self, g: int) -> Matrix:
        return self.matrices[g]

    def character(self, g: int) -> CyclotomicElement:
        return self._chars[g]

    def check_homomorphism(self) -> str | None:
        G = self.group
        for i in range(G.order):
            for j in range(G.order):
                if matmul(self.matrices[i], self.matrices[j]) != self.matrices[G.mul(i, j)]:
                    return (f"model {self.label!r} is not a homomorphism: "
                            f"rho(g{i}) rho(g{j}) != rho(g{i}*g{j})")
        return None

    def __repr__(self):
        return f"IrreducibleModel({self.label!r}, degree={self.degree})"


def inner_product(group: MatrixGroup, chi, psi) -> CyclotomicElement:
    """|G|^-1 sum_g chi(g) psi(g^-1) for character functions chi, psi on indices."""
    s = ZERO
    for g in range(group.order):
        s = s + chi(g) * psi(group.inverse(g))
    return s * Fraction(1, group.order)


def _as_count(value: CyclotomicElement, what: str) -> int:
    if not value.is_rational():
        raise InvalidIrreducible(f"{what} is not rational: {value}")
    q = value.to_fraction()
    if q.denominator != 1 or q < 0:
        raise InvalidIrreducible(f"{what} is not a non-negative integer: {q}")
    return int(q)


def character(rep, g: int, degree: int | None = None) -> CyclotomicElement:
    """Trace of g on a model, on V itself, or on the degree-d polynomials."""
    if isinstance(rep, IrreducibleModel):
        return rep.character(g)
    if degree is None:
        return rep.character(g)
    return rep.graded_character(g, degree)


def multiplicity(model: IrreducibleModel, d: int) -> int:
    G = model.group
    value = inner_product(G, lambda g: G.graded_character(g, d), model.character)
    return _as_count(value, f"multiplicity of {model.label!r} in degree {d}")


def dual_model(model: IrreducibleModel, models: Sequence[IrreducibleModel]) -> IrreducibleModel:
    """The model whose character is g -> chi(g^-1)."""
    G = model.group
    target = [model.character(G.inverse(g)) for g in range(G.order)]
    for m in models:
        if all(m.character(g) == target[g] for g in range(G.order)):
            return m
    raise InvalidIrreducible(f"no dual of {model.label!r} among the supplied models")


@dataclass
class ValidationReport:
    ok: bool
    message: str = "ok"
    checks: list[str] = field(default_factory=list)


def validate_irreducibles(models: Sequence[IrreducibleModel], group: MatrixGroup) -> ValidationReport:
    done: list[str] = []
    for m in models:
        err = m.check_homomorphism()
        if err:
            return ValidationReport(False, err, done)
    done.append("homomorphism")
    for m in models:
        # the averaging projector on End(V) has trace <chi, chi>, which is its rank
        v = inner_product(group, m.character, m.character)
        if v != 1:
            return ValidationReport(False, f"model {m.label!r} is not absolutely irreducible (End has dimension {v})", done)
    done.append("absolute irreducibility")
    for a in range(len(models)):
        for b in range(a + 1, len(models)):
            v = inner_product(group, models[a].character, models[b].character)
            if v != 0:
                return ValidationReport(
                    False, f"models {models[a].label!r} and {models[b].label!r} are isomorphic", done
                )
    done.append("pairwise non-isomorphism")
    total = sum(m.degree ** 2 for m in models)
    if total != group.order:
        return ValidationReport(False, f"sum of squared degrees is {total}, group order is {group.order}", done)
    done.append("completeness")
    return ValidationReport(True, "ok", done)


# -- equivariant embeddings ---------------------------------------------------


@dataclass(eq=False)
class EquivariantEmbedding:
    """A G-map V_lambda -> k[V]_d, stored as the images of the model's basis."""

    label: str
    degree: int
    images: list[Polynomial]

    def is_equivariant(self, model: IrreducibleModel) -> bool:
        G = model.group
        for g in G.generator_indices():
            M = model.matrix(g)
            for j, img in enumerate(self.images):
                rhs = img.ring.zero()
                for i, other in enumerate(self.images):
                    c = M[i][j]
                    if c:
                        rhs = rhs + other.scale(c)
                if G.act(g, img) != rhs:
                    return False
        return True

    def is_injective(self) -> bool:
        rows = [_coords(img, sorted({m for p in self.images for m in p.terms})) for img in self.images]
        return len(rref(rows)[1]) == len(self.images)

    def scaled(self, p: Polynomial) -> "EquivariantEmbedding":
        """Compose with multiplication by an invariant p."""
        return EquivariantEmbedding(self.label, self.degree + int(p.degree()), [img * p for img in self.images])

    def __eq__(self, other):
        return (isinstance(other, EquivariantEmbedding) and self.label == other.label
                and self.degree == other.degree and self.images == other.images)

    def __hash__(self):
        return hash((self.label, self.degree, tuple(self.images)))

    def __repr__(self):
        return f"EquivariantEmbedding({self.label!r}, d={self.degree}, [{', '.join(map(str, self.images))}])"


def _coords(p: Polynomial, monos) -> list:
    return [p.coeff(m) for m in monos]


def hom_basis(model: IrreducibleModel, d: int) -> list[EquivariantEmbedding]:
    """A canonical basis of Hom_G(V_lambda, k[V]_d).

    The averaging projector applied to the elementary map v_1 -> x^a gives
    v_i -> |G|^-1 sum_g rho(g^-1)_{1i} (g x^a).  The concatenated image
    coordinates (monomials descending in the ring order) are row-reduced;
    each nonzero row becomes one embedding, in pivot order, with its first
    nonzero coordinate equal to one.
    """
    G = model.group
    ring = G.ring
    monos = ring.monomials_of_degree(d)
    pos = {m: k for k, m in enumerate(monos)}
    dl = model.degree
    N = len(monos)
    coef = [[model.matrix(G.inverse(g))[0][i] for g in range(G.order)] for i in range(dl)]
    rows = []
    for a in monos:
        vec = [ZERO] * (dl * N)
        for g in range(G.order):
            img = G.act_monomial(g, a)
            for i in range(dl):
                c = coef[i][g]
                if not c:
                    continue
                base = i * N
                for m, v in img.terms.items():
                    k = base + pos[m]
                    vec[k] = vec[k] + v * c
        if any(vec):
            rows.append(vec)
    if not rows:
        return []
    red, pivots = rref(rows)
    out = []
    for r in range(len(pivots)):
        vec = red[r]
        images = []
        for i in range(dl):
            terms = {monos[k]: vec[i * N + k] for k in range(N) if vec[i * N + k]}
            images.append(Polynomial._new(ring, terms))
        out.append(EquivariantEmbedding(model.label, d, images))
    return out


def isotypic_table(models: Sequence[IrreducibleModel], max_degree: int):
    """Per degree, the multiplicity of each model and a basis of embeddings."""
    table = []
    for d in range(max_degree + 1):
        row = []
        for m in models:
            mult = multiplicity(m, d)
            embs = hom_basis(m, d) if mult else []
            if len(embs) != mult:
                raise InvalidIrreducible(
                    f"hom space of {m.label!r} in degree {d} has dimension {len(embs)}, expected {mult}"
                )
            row.append((m, mult, embs))
        table.append(row)
    return table


class GradedDecomposition:
    """Caches multiplicities and hom bases per (model, degree)."""

    def __init__(self, group: MatrixGroup, models: Sequence[IrreducibleModel]):
        self.group = group
        self.models = list(models)
        self._mult: dict = {}
        self._homs: dict = {}

    def model(self, label: str) -> IrreducibleModel:
        for m in self.models:
            if m.label == label:
                return m
        raise KeyError(label)

    def multiplicity(self, model: IrreducibleModel, d: int) -> int:
        key = (model.label, d)
        if key not in self._mult:
            self._mult[key] = multiplicity(model, d)
        return self._mult[key]

    def embeddings(self, model: IrreducibleModel, d: int) -> list[EquivariantEmbedding]:
        key = (model.label, d)
        if key not in self._homs:
            embs = hom_basis(model, d) if self.multiplicity(model, d) else []
            if len(embs) != self.multiplicity(model, d):
                raise InvalidIrreducible(
                    f"hom space of {model.label!r} in degree {d} has dimension {len(embs)}, "
                    f"expected {self.multiplicity(model, d)}"
                )
            self._homs[key] = embs
        return self._homs[key]
