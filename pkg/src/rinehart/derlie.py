"""Derivations of a quasi-homogeneous surface R = Q[x1,x2,x3]/(f).

For such R the derivation module is generated by the Euler derivation

    E = omega_1 x_1 d_1 + omega_2 x_2 d_2 + omega_3 x_3 d_3

together with the three antisymmetric Koszul derivations

    D_1 = f_2 d_1 - f_1 d_2,   D_2 = f_3 d_1 - f_1 d_3,   D_3 = f_3 d_2 - f_2 d_3,

where f_i are the partials of f and omega_i = d_i/d.  A pair of 4x4
matrices (phi, psi) with phi psi = psi phi = f*I ties everything
together: the columns of phi are the relations among (E, D1, D2, D3),
and the rows of psi generate Hom_R(Der(R), R) inside R^4 under
evaluation on (E, D1, D2, D3).  The generator list order (E, D1, D2, D3)
is fixed everywhere; all signs downstream depend on it.

Graded pieces of Hom(Der, R) are handled through explicit spanning sets
{monomial * psi_row} reduced by exact linear algebra; no global module
presentation is ever computed.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .exactmath import ExactMatrix, matrix_from_columns
from .polyring import Polynomial, QuotientElement, WeightedRing, apply_derivation

#: indices into the fixed generator list (E, D1, D2, D3)
E_INDEX, D1_INDEX, D2_INDEX, D3_INDEX = 0, 1, 2, 3


class Derivation:
    """A k-linear derivation of R, stored by coefficients against d/dx_i.

    The coefficients must satisfy sum(c_i * f_i) = 0 in R so that the
    derivation of the polynomial ring descends to the quotient; this is
    checked at construction.  ``degree`` is the weighted degree when the
    derivation is homogeneous (coefficient i homogeneous of degree
    ``degree + d_i``), else None.
    """

    __slots__ = ("ring", "coeffs", "degree")

    def __init__(self, ring: WeightedRing, coeffs: Sequence[QuotientElement]):
        if len(coeffs) != ring.nvars:
            raise ValueError("one coefficient per variable required")
        self.ring = ring
        self.coeffs = tuple(coeffs)
        residue = ring.zero()
        for i, c in enumerate(self.coeffs):
            residue = residue + c * ring.element(ring.f.partial(i))
        if not residue.is_zero():
            raise ValueError("coefficients do not preserve the ideal (f)")
        self.degree = self._homogeneous_degree()

    def _homogeneous_degree(self) -> int | None:
        degrees = set()
        for i, c in enumerate(self.coeffs):
            if c.is_zero():
                continue
            if not c.is_homogeneous():
                return None
            degrees.add(c.weighted_degree() - self.ring.weights[i])
        if len(degrees) > 1:
            return None
        return degrees.pop() if degrees else 0

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)

    def __call__(self, r: QuotientElement) -> QuotientElement:
        return apply_derivation(self.coeffs, r)

    def apply_polynomial(self, p: Polynomial) -> Polynomial:
        """Value on an ambient polynomial, without reduction mod f."""
        out = Polynomial.zero(self.ring.nvars)
        for i, c in enumerate(self.coeffs):
            out = out + c.rep * p.partial(i)
        return out

    def __add__(self, other: "Derivation") -> "Derivation":
        return Derivation(self.ring, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other: "Derivation") -> "Derivation":
        return Derivation(self.ring, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def scale(self, r) -> "Derivation":
        if isinstance(r, QuotientElement):
            return Derivation(self.ring, [r * c for c in self.coeffs])
        return Derivation(self.ring, [c.scale(r) for c in self.coeffs])

    def __eq__(self, other):
        if not isinstance(other, Derivation):
            return NotImplemented
        return self.ring is other.ring and self.coeffs == other.coeffs

    def __repr__(self):
        parts = " , ".join(str(c) for c in self.coeffs)
        return f"Derivation({parts})"


def bracket(a: Derivation, b: Derivation) -> Derivation:
    """The commutator [a, b], coefficientwise a(b_j) - b(a_j)."""
    if a.ring is not b.ring:
        raise ValueError("derivations over different rings")
    return Derivation(a.ring, [a(bc) - b(ac) for ac, bc in zip(a.coeffs, b.coeffs)])


class FactorizationPair:
    """Matrices (phi, psi) with phi psi = psi phi = f * I4 over Q[x1,x2,x3].

    Entries are ambient polynomials; the identity holds before any
    reduction mod f.  Row i of psi has weighted degree d_i for i < 3 and
    d_1 + d_2 + d_3 - d for the last row.
    """

    __slots__ = ("ring", "phi", "psi")

    def __init__(self, ring: WeightedRing, phi, psi):
        self.ring = ring
        self.phi = phi
        self.psi = psi

    def psi_row_degrees(self) -> list[int]:
        ds = self.ring.weights
        return [ds[0], ds[1], ds[2], sum(ds) - self.ring.d]

    def product(self, left, right) -> list[list[Polynomial]]:
        n = self.ring.nvars
        out = []
        for i in range(4):
            row = []
            for j in range(4):
                acc = Polynomial.zero(n)
                for k in range(4):
                    acc = acc + left[i][k] * right[k][j]
                row.append(acc)
            out.append(row)
        return out


class OneCochain:
    """An element of Hom_R(Der(R), R), stored by its values on (E, D1, D2, D3).

    A cochain of degree w has value of weighted degree w + deg(g_j) on
    the j-th generator.  Membership in the actual Hom module (the R-span
    of the psi rows) is certified per degree by linear algebra, not by
    construction.
    """

    __slots__ = ("ring", "values")

    def __init__(self, ring: WeightedRing, values: Sequence[QuotientElement]):
        if len(values) != 4:
            raise ValueError("a one-cochain has four generator values")
        self.ring = ring
        self.values = tuple(values)

    def is_zero(self) -> bool:
        return all(v.is_zero() for v in self.values)

    def __add__(self, other: "OneCochain") -> "OneCochain":
        return OneCochain(self.ring, [a + b for a, b in zip(self.values, other.values)])

    def __sub__(self, other: "OneCochain") -> "OneCochain":
        return OneCochain(self.ring, [a - b for a, b in zip(self.values, other.values)])

    def scale(self, c) -> "OneCochain":
        if isinstance(c, QuotientElement):
            return OneCochain(self.ring, [c * v for v in self.values])
        return OneCochain(self.ring, [v.scale(c) for v in self.values])

    def __eq__(self, other):
        if not isinstance(other, OneCochain):
            return NotImplemented
        return self.ring is other.ring and self.values == other.values

    def component(self, w: int, generator_degrees: Sequence[int]) -> "OneCochain":
        """The degree-w part: value j restricted to degree w + deg(g_j)."""
        return OneCochain(self.ring, [v.component(w + gd)
                                      for v, gd in zip(self.values, generator_degrees)])

    def degrees(self, generator_degrees: Sequence[int]) -> set[int]:
        """Cochain degrees of the nonzero homogeneous components."""
        out: set[int] = set()
        for v, gd in zip(self.values, generator_degrees):
            out.update(w - gd for w in v.homogeneous_components())
        return out

    def __repr__(self):
        vals = ", ".join(f"{name}: {v}" for name, v in
                         zip(("E", "D1", "D2", "D3"), self.values))
        return f"OneCochain({vals})"


class TwoCochain:
    """An element of Hom_R(/\\^2 Der(R), R), stored by its value on Delta.

    Delta = f_3 d_1^d_2 - f_2 d_1^d_3 + f_1 d_2^d_3 has weighted degree
    d - d_1 - d_2 - d_3, and every generator wedge is a multiple of it,
    so one ring element determines the cochain.  A cochain of degree w
    has value on Delta of weighted degree w + deg(Delta); with this
    convention degree-0 two-cochains correspond to R_{d-d1-d2-d3}.
    """

    __slots__ = ("ring", "value_on_delta")

    def __init__(self, ring: WeightedRing, value_on_delta: QuotientElement):
        self.ring = ring
        self.value_on_delta = value_on_delta

    def is_zero(self) -> bool:
        return self.value_on_delta.is_zero()

    def __add__(self, other: "TwoCochain") -> "TwoCochain":
        return TwoCochain(self.ring, self.value_on_delta + other.value_on_delta)

    def __sub__(self, other: "TwoCochain") -> "TwoCochain":
        return TwoCochain(self.ring, self.value_on_delta - other.value_on_delta)

    def scale(self, c) -> "TwoCochain":
        if isinstance(c, QuotientElement):
            return TwoCochain(self.ring, c * self.value_on_delta)
        return TwoCochain(self.ring, self.value_on_delta.scale(c))

    def __eq__(self, other):
        if not isinstance(other, TwoCochain):
            return NotImplemented
        return self.ring is other.ring and self.value_on_delta == other.value_on_delta

    def degrees(self) -> set[int]:
        shift = delta_degree(self.ring)
        return {w - shift for w in self.value_on_delta.homogeneous_components()}

    def __repr__(self):
        return f"TwoCochain(Delta -> {self.value_on_delta})"


def delta_degree(ring: WeightedRing) -> int:
    return ring.d - sum(ring.weights)


def delta_components(ring: WeightedRing) -> tuple[Polynomial, Polynomial, Polynomial]:
    """Coordinates of Delta against (d1^d2, d1^d3, d2^d3)."""
    f = ring.f
    return (f.partial(2), -f.partial(1), f.partial(0))


class DerivationAlgebra:
    """Generators, relations, and graded cochain data for Der_k(R), n = 3."""

    def __init__(self, ring: WeightedRing):
        if ring.nvars != 3:
            raise ValueError("the surface pipeline needs exactly three variables")
        self.ring = ring
        f = ring.f
        self.partials = [f.partial(i) for i in range(3)]
        f1, f2, f3 = (ring.element(p) for p in self.partials)
        zero = ring.zero()
        euler_coeffs = [ring.variable(i).scale(ring.omega[i]) for i in range(3)]
        self.euler = Derivation(ring, euler_coeffs)
        self.koszul = (
            Derivation(ring, [f2, -f1, zero]),
            Derivation(ring, [f3, zero, -f1]),
            Derivation(ring, [zero, f3, -f2]),
        )
        self.generators = (self.euler,) + self.koszul
        d, (d1, d2, d3) = ring.d, ring.weights
        self.generator_degrees = (0, d - d1 - d2, d - d1 - d3, d - d2 - d3)
        self.factorization = self._build_factorization()
        self.psi_row_degrees = self.factorization.psi_row_degrees()
        self._bracket_cache: dict[tuple[int, int], tuple[QuotientElement, ...]] = {}
        self._spanning_cache: dict[int, list[tuple[int, tuple]]] = {}
        self._basis_cache: dict[int, list[int]] = {}

    # -- matrices ---------------------------------------------------------

    def _build_factorization(self) -> FactorizationPair:
        ring = self.ring
        f1, f2, f3 = self.partials
        x = [Polynomial.variable(3, i).scale(ring.omega[i]) for i in range(3)]
        zero = Polynomial.zero(3)
        phi = [
            [f1, f2, f3, zero],
            [x[1], -x[0], zero, f3],
            [x[2], zero, -x[0], -f2],
            [zero, x[2], -x[1], f1],
        ]
        psi = [
            [x[0], f2, f3, zero],
            [x[1], -f1, zero, f3],
            [x[2], zero, -f1, -f2],
            [zero, x[2], -x[1], x[0]],
        ]
        return FactorizationPair(ring, phi, psi)

    def psi_cochain(self, i: int) -> OneCochain:
        """Row i of psi as a one-cochain (values on E, D1, D2, D3)."""
        ring = self.ring
        return OneCochain(ring, [ring.element(p) for p in self.factorization.psi[i]])

    def phi_column_relation(self, j: int) -> tuple[QuotientElement, ...]:
        """Column j of phi as a relation: sum(c_i * g_i) = 0 in Der(R)."""
        ring = self.ring
        return tuple(ring.element(self.factorization.phi[i][j]) for i in range(4))

    def wedge_scalar(self, i: int, j: int) -> QuotientElement:
        """The ring element r with g_i ^ g_j = r * Delta, for i < j."""
        if not 0 <= i < j <= 3:
            raise ValueError("wedge indices must satisfy 0 <= i < j <= 3")
        ring = self.ring
        x = [ring.variable(k).scale(ring.omega[k]) for k in range(3)]
        f1, f2, f3 = (ring.element(p) for p in self.partials)
        table = {
            (0, 1): x[2], (0, 2): -x[1], (0, 3): x[0],
            (1, 2): f1, (1, 3): f2, (2, 3): f3,
        }
        return table[(i, j)]

    # -- expressing derivations in the generators -------------------------

    def express_in_generators(self, v):
        """Coefficients (r_1..r_4) with v = sum(r_i g_i), or None.

        ``v`` is a Derivation or a bare triple of coefficients; None
        signals a vector outside the span, i.e. not a derivation of R.
        The representation is not unique (the phi columns are relations);
        callers verify by re-expansion rather than comparing coefficients.
        Inhomogeneous inputs are decomposed degreewise.
        """
        ring = self.ring
        vcoeffs = v.coeffs if isinstance(v, Derivation) else tuple(v)
        component_degrees: set[int] = set()
        for k, c in enumerate(vcoeffs):
            component_degrees.update(w - ring.weights[k]
                                     for w in c.homogeneous_components())
        result = [ring.zero() for _ in range(4)]
        for m in sorted(component_degrees):
            part = [c.component(m + ring.weights[k]) for k, c in enumerate(vcoeffs)]
            found = self._express_homogeneous(part, m)
            if found is None:
                return None
            result = [a + b for a, b in zip(result, found)]
        return tuple(result)

    def _derivation_coords(self, coeffs, m: int) -> list[Fraction] | None:
        ring = self.ring
        coords: list[Fraction] = []
        for k in range(3):
            basis = ring.graded_basis(m + ring.weights[k])
            index = {mon: t for t, mon in enumerate(basis)}
            block = [Fraction(0)] * len(basis)
            for mon, c in coeffs[k].rep.terms.items():
                t = index.get(mon)
                if t is None:
                    return None
                block[t] = c
            coords.extend(block)
        return coords

    def _express_homogeneous(self, coeffs, m: int):
        ring = self.ring
        spanning: list[tuple[int, tuple]] = []
        columns: list[list[Fraction]] = []
        for i, g in enumerate(self.generators):
            for mon in ring.graded_basis(m - self.generator_degrees[i]):
                scale = ring.element(Polynomial.monomial(mon))
                coords = self._derivation_coords([scale * c for c in g.coeffs], m)
                spanning.append((i, mon))
                columns.append(coords)
        target = self._derivation_coords(coeffs, m)
        if target is None:
            return None
        if not columns:
            return None if any(target) else tuple(ring.zero() for _ in range(4))
        solution = matrix_from_columns(columns).solve(target)
        if solution is None:
            return None
        result = [ring.zero() for _ in range(4)]
        for (i, mon), c in zip(spanning, solution):
            if c:
                result[i] = result[i] + ring.element(Polynomial.monomial(mon, c))
        return tuple(result)

    def bracket_coefficients(self, i: int, j: int) -> tuple[QuotientElement, ...]:
        """[g_i, g_j] expressed in the generators (cached)."""
        key = (i, j)
        cached = self._bracket_cache.get(key)
        if cached is None:
            lie = bracket(self.generators[i], self.generators[j])
            cached = self.express_in_generators(lie)
            if cached is None:
                raise ValueError("generator bracket not representable; corrupted ring data")
            self._bracket_cache[key] = cached
        return cached

    def evaluate_cochain(self, xi: OneCochain, v: Derivation) -> QuotientElement:
        """xi(v) for an arbitrary derivation, through a generator expression."""
        coeffs = self.express_in_generators(v)
        if coeffs is None:
            raise ValueError("derivation not representable in the generators")
        out = self.ring.zero()
        for c, value in zip(coeffs, xi.values):
            out = out + c * value
        return out

    # -- graded pieces of C^1 ---------------------------------------------

    def c1_spanning(self, w: int) -> list[tuple[int, tuple]]:
        """Spanning labels (i, monomial) for C^1_w: monomial * psi_row_i."""
        cached = self._spanning_cache.get(w)
        if cached is None:
            cached = [(i, mon)
                      for i in range(4)
                      for mon in self.ring.graded_basis(w - self.psi_row_degrees[i])]
            self._spanning_cache[w] = cached
        return cached

    def spanning_cochain(self, i: int, mon: tuple) -> OneCochain:
        return self.psi_cochain(i).scale(self.ring.element(Polynomial.monomial(mon)))

    def spanning_label(self, i: int, mon: tuple) -> str:
        mon_s = self.ring.monomial_str(mon)
        return f"{mon_s}*psi{i + 1}" if mon_s else f"psi{i + 1}"

    def c1_ambient_blocks(self, w: int) -> list[list[tuple]]:
        ring = self.ring
        return [ring.graded_basis(w + gd) for gd in self.generator_degrees]

    def c1_coords(self, xi: OneCochain, w: int) -> list[Fraction]:
        """Ambient coordinates of a degree-w cochain component."""
        coords: list[Fraction] = []
        for j, block in enumerate(self.c1_ambient_blocks(w)):
            index = {mon: t for t, mon in enumerate(block)}
            segment = [Fraction(0)] * len(block)
            for mon, c in xi.values[j].rep.terms.items():
                t = index.get(mon)
                if t is None:
                    raise ValueError("cochain has a value outside the expected degree")
                segment[t] = c
            coords.extend(segment)
        return coords

    def c1_matrix(self, w: int) -> ExactMatrix:
        """Columns are the ambient coordinates of the spanning cochains."""
        spanning = self.c1_spanning(w)
        columns = [self.c1_coords(self.spanning_cochain(i, mon), w)
                   for i, mon in spanning]
        if not columns:
            ambient = sum(len(b) for b in self.c1_ambient_blocks(w))
            return ExactMatrix.zeros(ambient, 0)
        return matrix_from_columns(columns)

    def c1_basis_pivots(self, w: int) -> list[int]:
        """Indices into c1_spanning(w) of a chosen basis of C^1_w."""
        cached = self._basis_cache.get(w)
        if cached is None:
            cached = self.c1_matrix(w).rref()[1]
            self._basis_cache[w] = cached
        return cached

    def c1_dimension(self, w: int) -> int:
        return len(self.c1_basis_pivots(w))

    def c1_graded_basis(self, w: int) -> list[OneCochain]:
        """A basis of C^1_w, each element of the form monomial * psi_row."""
        spanning = self.c1_spanning(w)
        return [self.spanning_cochain(*spanning[t]) for t in self.c1_basis_pivots(w)]

    def c1_decompose(self, xi: OneCochain, w: int) -> list[Fraction] | None:
        """Coefficients over c1_spanning(w) reproducing xi, or None."""
        spanning = self.c1_spanning(w)
        if not spanning:
            return [] if all(v.is_zero() for v in xi.values) else None
        return self.c1_matrix(w).solve(self.c1_coords(xi, w))


def build_generators(ring: WeightedRing) -> tuple[Derivation, Derivation, Derivation, Derivation]:
    return derivation_algebra(ring).generators


def build_factorization(ring: WeightedRing) -> FactorizationPair:
    return derivation_algebra(ring).factorization


def derivation_algebra(ring: WeightedRing) -> DerivationAlgebra:
    """The cached DerivationAlgebra attached to a ring."""
    algebra = ring.scratch.get("derlie")
    if algebra is None:
        algebra = DerivationAlgebra(ring)
        ring.scratch["derlie"] = algebra
    return algebra
