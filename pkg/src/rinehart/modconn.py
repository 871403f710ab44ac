"""Connections on graded presented modules of rank one.

A module M is given by a graded presentation: generators e_1..e_s with
integer degrees and a presentation matrix d0 whose *columns* are the
relations, so M = R^s / d0 R^t.  Operators act on coordinate columns:

    nabla_{g_i}(v) = g_i(v) (entrywise) + A[i] v

for the fixed generator list (E, D1, D2, D3) of Der(R).  Such data is a
connection when two exact linear-algebra conditions hold:

  * descent:   g_i(d0) + A[i] d0 = d0 B_i for some B_i over R, so the
    operator is well defined on the cokernel;
  * linearity: for every column c of phi (a relation sum c_i g_i = 0 in
    Der(R)), sum c_i A[i] is zero as an endomorphism of M, i.e. all its
    columns lie in the column span of d0.

Both are checked per weighted degree with no tolerances.  End_R(M) = R is
assumed for these modules (rank one, torsion free, R normal); extracting
the scalar through K = r I + d0 X is attempted wherever the calculus
needs it and failure is surfaced as ScalarExtractionError rather than
ignored.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Mapping, Sequence

from .derlie import OneCochain, derivation_algebra
from .exactmath import ExactMatrix, matrix_from_columns
from .polyring import Polynomial, QuotientElement, WeightedRing
from .rincomplex import d0, d1_pair

GENERATOR_NAMES = ("E", "D1", "D2", "D3")
PAIRS = tuple(combinations(range(4), 2))


class ScalarExtractionError(RuntimeError):
    """An endomorphism did not reduce to a scalar modulo im d0."""


class PresentedModule:
    """coker(d0) with graded generators; columns of d0 are the relations."""

    def __init__(self, ring: WeightedRing, generator_degrees: Sequence[int],
                 presentation: Sequence[Sequence]):
        self.ring = ring
        self.generator_degrees = tuple(int(g) for g in generator_degrees)
        s = len(self.generator_degrees)
        if s == 0:
            raise ValueError("a module needs at least one generator")
        rows = [[ring.element(e) for e in row] for row in presentation]
        if len(rows) != s:
            raise ValueError("presentation must have one row per generator")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise ValueError("presentation rows have unequal lengths")
        self.presentation = tuple(tuple(r) for r in rows)
        self.num_generators = s
        self.num_relations = width
        self.column_degrees = self._column_degrees()
        self._image_cache: dict[int, ExactMatrix] = {}
        self._image_spanning_cache: dict[int, list] = {}

    @classmethod
    def free(cls, ring: WeightedRing, degree: int = 0) -> "PresentedModule":
        return cls(ring, [degree], [[]])

    def _column_degrees(self) -> tuple[int, ...]:
        degrees = []
        for j in range(self.num_relations):
            seen = set()
            for a in range(self.num_generators):
                entry = self.presentation[a][j]
                if entry.is_zero():
                    continue
                if not entry.is_homogeneous():
                    raise ValueError(f"presentation entry ({a},{j}) is not homogeneous")
                seen.add(entry.weighted_degree() + self.generator_degrees[a])
            if not seen:
                raise ValueError(f"presentation column {j} is zero")
            if len(seen) > 1:
                raise ValueError(f"presentation column {j} has inconsistent degrees {sorted(seen)}")
            degrees.append(seen.pop())
        return tuple(degrees)

    def column(self, j: int) -> list[QuotientElement]:
        return [self.presentation[a][j] for a in range(self.num_generators)]

    # -- graded coordinates of elements of R^s ---------------------------

    def element_blocks(self, w: int) -> list[list]:
        return [self.ring.graded_basis(w - g) for g in self.generator_degrees]

    def vector_component(self, vector: Sequence[QuotientElement], w: int) -> list[QuotientElement]:
        return [v.component(w - g) for v, g in zip(vector, self.generator_degrees)]

    def vector_degrees(self, vector: Sequence[QuotientElement]) -> set[int]:
        out: set[int] = set()
        for v, g in zip(vector, self.generator_degrees):
            out.update(u + g for u in v.homogeneous_components())
        return out

    def vector_coords(self, vector: Sequence[QuotientElement], w: int) -> list[Fraction]:
        coords: list[Fraction] = []
        for v, block in zip(vector, self.element_blocks(w)):
            index = {mon: t for t, mon in enumerate(block)}
            segment = [Fraction(0)] * len(block)
            for mon, c in v.rep.terms.items():
                segment[index[mon]] = c
            coords.extend(segment)
        return coords

    def image_spanning(self, w: int) -> list[tuple[int, tuple]]:
        cached = self._image_spanning_cache.get(w)
        if cached is None:
            cached = [(j, mon)
                      for j in range(self.num_relations)
                      for mon in self.ring.graded_basis(w - self.column_degrees[j])]
            self._image_spanning_cache[w] = cached
        return cached

    def image_matrix(self, w: int) -> ExactMatrix:
        """Columns: coordinates of monomial multiples of the d0 columns."""
        cached = self._image_cache.get(w)
        if cached is None:
            columns = []
            for j, mon in self.image_spanning(w):
                scale = self.ring.element(Polynomial.monomial(mon))
                columns.append(self.vector_coords(
                    [scale * e for e in self.column(j)], w))
            ambient = sum(len(b) for b in self.element_blocks(w))
            cached = (matrix_from_columns(columns) if columns
                      else ExactMatrix.zeros(ambient, 0))
            self._image_cache[w] = cached
        return cached

    def vector_in_image(self, vector: Sequence[QuotientElement]) -> bool:
        """Membership of a vector of R^s in the column span of d0."""
        for w in self.vector_degrees(vector):
            component = self.vector_component(vector, w)
            coords = self.vector_coords(component, w)
            if not any(coords):
                continue
            matrix = self.image_matrix(w)
            if matrix.cols == 0 or matrix.solve(coords) is None:
                return False
        return True

    def __repr__(self):
        return (f"PresentedModule({self.num_generators} generators "
                f"deg {list(self.generator_degrees)}, "
                f"{self.num_relations} relations)")


def _coerce_matrix(module: PresentedModule, rows) -> tuple[tuple[QuotientElement, ...], ...]:
    s = module.num_generators
    out = [[module.ring.element(e) for e in row] for row in rows]
    if len(out) != s or any(len(r) != s for r in out):
        raise ValueError(f"connection matrices must be {s}x{s}")
    return tuple(tuple(r) for r in out)


class Connection:
    """Candidate connection data: one s x s matrix per generator of Der(R)."""

    __slots__ = ("module", "matrices")

    def __init__(self, module: PresentedModule, matrices: Sequence[Sequence[Sequence]]):
        if len(matrices) != 4:
            raise ValueError("need one matrix for each of E, D1, D2, D3")
        self.module = module
        self.matrices = tuple(_coerce_matrix(module, m) for m in matrices)

    @classmethod
    def from_mapping(cls, module: PresentedModule, data: Mapping[str, Sequence]) -> "Connection":
        missing = [n for n in GENERATOR_NAMES if n not in data]
        if missing:
            raise ValueError(f"connection is missing matrices for {missing}")
        return cls(module, [data[n] for n in GENERATOR_NAMES])

    def matrix(self, i: int):
        return self.matrices[i]

    def shifted_by_scalars(self, values: Sequence[QuotientElement], sign: int = 1) -> "Connection":
        """The connection with A[i] replaced by A[i] + sign * values[i] * I."""
        out = []
        for i in range(4):
            base = [list(row) for row in self.matrices[i]]
            for a in range(self.module.num_generators):
                base[a][a] = base[a][a] + values[i].scale(sign)
            out.append(base)
        return Connection(self.module, out)

    def __eq__(self, other):
        if not isinstance(other, Connection):
            return NotImplemented
        return self.module is other.module and self.matrices == other.matrices

    def same_action(self, other: "Connection") -> bool:
        """Equality as operators on M: all difference matrices act as zero."""
        if self.module is not other.module:
            return False
        return all(endomorphism_is_zero(self.module,
                                        _mat_sub(self.matrices[i], other.matrices[i]))
                   for i in range(4))

    def __repr__(self):
        return f"Connection(on {self.module!r})"


# -- matrix helpers over R ----------------------------------------------


def _mat_apply(g, matrix):
    return [[g(e) for e in row] for row in matrix]


def _mat_mul(matrix_a, matrix_b):
    n = len(matrix_a)
    return [[sum((matrix_a[a][k] * matrix_b[k][b] for k in range(n)
                  if not matrix_a[a][k].is_zero()),
                 start=matrix_a[0][0].ring.zero())
             for b in range(n)] for a in range(n)]


def _mat_sub(matrix_a, matrix_b):
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(matrix_a, matrix_b)]


def _mat_add(matrix_a, matrix_b):
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(matrix_a, matrix_b)]


def _mat_scale(matrix, r: QuotientElement):
    return [[r * e for e in row] for row in matrix]


def _mat_column(matrix, b):
    return [row[b] for row in matrix]


def _endo_component(module: PresentedModule, matrix, mu: int):
    """Degree-mu part of an endomorphism matrix (entry degrees mu + g_b - g_a)."""
    gd = module.generator_degrees
    return [[matrix[a][b].component(mu + gd[b] - gd[a])
             for b in range(module.num_generators)]
            for a in range(module.num_generators)]


def _endo_degrees(module: PresentedModule, matrix) -> set[int]:
    gd = module.generator_degrees
    out: set[int] = set()
    for a, row in enumerate(matrix):
        for b, entry in enumerate(row):
            out.update(u - gd[b] + gd[a] for u in entry.homogeneous_components())
    return out


def endomorphism_is_zero(module: PresentedModule, matrix) -> bool:
    """Does the matrix act as zero on M, i.e. all columns lie in im d0."""
    for b in range(module.num_generators):
        if not module.vector_in_image(_mat_column(matrix, b)):
            return False
    return True


# -- small symbolic layer for joint linear solves -------------------------


class _LinExpr:
    """A finite R-combination of scalar unknowns plus an R constant."""

    __slots__ = ("const", "terms")

    def __init__(self, const: QuotientElement, terms: dict[int, QuotientElement] | None = None):
        self.const = const
        self.terms = terms or {}

    def plus(self, other: "_LinExpr") -> "_LinExpr":
        terms = dict(self.terms)
        for u, c in other.terms.items():
            terms[u] = terms[u] + c if u in terms else c
        return _LinExpr(self.const + other.const, terms)

    def times(self, r: QuotientElement) -> "_LinExpr":
        return _LinExpr(r * self.const, {u: r * c for u, c in self.terms.items()})


class _LinearSystem:
    def __init__(self):
        self.num_unknowns = 0
        self.rows: list[dict[int, Fraction]] = []
        self.rhs: list[Fraction] = []

    def new_unknown(self) -> int:
        self.num_unknowns += 1
        return self.num_unknowns - 1

    def add_equation(self, row: dict[int, Fraction], rhs: Fraction):
        self.rows.append(row)
        self.rhs.append(rhs)

    def solve(self) -> list[Fraction] | None:
        matrix = ExactMatrix(len(self.rows), self.num_unknowns,
                             [[row.get(u, Fraction(0)) for u in range(self.num_unknowns)]
                              for row in self.rows])
        return matrix.solve(self.rhs)


def _emit_membership(system: _LinearSystem, module: PresentedModule,
                     linvec: Sequence[_LinExpr], w: int):
    """Add equations forcing a symbolic degree-w vector into im d0."""
    blocks = module.element_blocks(w)
    offsets = []
    total = 0
    for block in blocks:
        offsets.append(total)
        total += len(block)
    rows: list[dict[int, Fraction]] = [{} for _ in range(total)]
    rhs = [Fraction(0)] * total
    for a, expr in enumerate(linvec):
        index = {mon: offsets[a] + t for t, mon in enumerate(blocks[a])}
        for mon, c in expr.const.rep.terms.items():
            rhs[index[mon]] -= c
        for u, qe in expr.terms.items():
            for mon, c in qe.rep.terms.items():
                t = index[mon]
                rows[t][u] = rows[t].get(u, Fraction(0)) + c
    image = module.image_matrix(w)
    yvars = [system.new_unknown() for _ in range(image.cols)]
    for t in range(total):
        row = rows[t]
        for s, y in enumerate(yvars):
            v = image.data[t][s]
            if v:
                row[y] = row.get(y, Fraction(0)) - v
        if row or rhs[t]:
            system.add_equation(row, rhs[t])


# -- the connection calculus ----------------------------------------------


@dataclass(frozen=True)
class CheckResult:
    passed: bool
    descent: tuple[bool, bool, bool, bool]
    linearity: tuple[bool, bool, bool, bool]
    failures: tuple[str, ...]


def check_connection(conn: Connection) -> CheckResult:
    """Verify descent and R-linearity; report the offending data on failure."""
    module = conn.module
    algebra = derivation_algebra(module.ring)
    failures: list[str] = []
    descent: list[bool] = []
    for i, g in enumerate(algebra.generators):
        ok = True
        for j in range(module.num_relations):
            col = module.column(j)
            vector = [g(col[a]) +
                      sum((conn.matrices[i][a][b] * col[b]
                           for b in range(module.num_generators)
                           if not conn.matrices[i][a][b].is_zero()),
                          start=module.ring.zero())
                      for a in range(module.num_generators)]
            if not module.vector_in_image(vector):
                ok = False
                failures.append(
                    f"descent fails for {GENERATOR_NAMES[i]} on relation column {j}")
        descent.append(ok)
    linearity: list[bool] = []
    for t in range(4):
        relation = algebra.phi_column_relation(t)
        combo = None
        for c, matrix in zip(relation, conn.matrices):
            scaled = _mat_scale(matrix, c)
            combo = scaled if combo is None else _mat_add(combo, scaled)
        ok = endomorphism_is_zero(module, combo)
        if not ok:
            failures.append(f"linearity fails on relation column {t} of phi "
                            f"(coefficients {[str(c) for c in relation]})")
        linearity.append(ok)
    return CheckResult(not failures, tuple(descent), tuple(linearity), tuple(failures))


@dataclass(frozen=True)
class CurvatureRecord:
    connection: Connection
    matrices: dict  # (i, j) -> s x s matrix over R
    zero: dict      # (i, j) -> bool, zero as an endomorphism of M
    scalars: dict   # (i, j) -> QuotientElement | None

    @property
    def integrable(self) -> bool:
        return all(self.zero.values())


def curvature(conn: Connection) -> CurvatureRecord:
    """K(g_i ^ g_j) = [nabla_i, nabla_j] - nabla_{[g_i, g_j]} on all pairs."""
    module = conn.module
    algebra = derivation_algebra(module.ring)
    matrices, zero, scalars = {}, {}, {}
    for i, j in PAIRS:
        gi, gj = algebra.generators[i], algebra.generators[j]
        a_i, a_j = conn.matrices[i], conn.matrices[j]
        k = _mat_sub(_mat_apply(gi, a_j), _mat_apply(gj, a_i))
        k = _mat_add(k, _mat_sub(_mat_mul(a_i, a_j), _mat_mul(a_j, a_i)))
        for c, a_k in zip(algebra.bracket_coefficients(i, j), conn.matrices):
            if not c.is_zero():
                k = _mat_sub(k, _mat_scale(a_k, c))
        matrices[(i, j)] = k
        zero[(i, j)] = endomorphism_is_zero(module, k)
        scalars[(i, j)] = endomorphism_scalar(module, k)
    return CurvatureRecord(conn, matrices, zero, scalars)


def endomorphism_scalar(module: PresentedModule, matrix) -> QuotientElement | None:
    """Solve matrix = r I + d0 X for r in R, one homogeneous degree at a time."""
    ring = module.ring
    gd = module.generator_degrees
    total = ring.zero()
    for mu in sorted(_endo_degrees(module, matrix)):
        component = _endo_component(module, matrix, mu)
        kappa_basis = ring.graded_basis(mu)
        system = _LinearSystem()
        kappa_vars = [system.new_unknown() for _ in kappa_basis]
        for b in range(module.num_generators):
            linvec = []
            for a in range(module.num_generators):
                terms = {}
                if a == b:
                    terms = {u: ring.element(Polynomial.monomial(mon, -1))
                             for u, mon in zip(kappa_vars, kappa_basis)}
                linvec.append(_LinExpr(component[a][b], terms))
            _emit_membership(system, module, linvec, mu + gd[b])
        solution = system.solve()
        if solution is None:
            return None
        for u, mon in zip(kappa_vars, kappa_basis):
            if solution[u]:
                total = total + ring.element(Polynomial.monomial(mon, solution[u]))
    return total


def truncate_degree_zero(conn: Connection) -> Connection:
    """Keep only the entries making each A[i] homogeneous of degree deg g_i."""
    module = conn.module
    algebra = derivation_algebra(module.ring)
    gd = module.generator_degrees
    out = []
    for i in range(4):
        target = algebra.generator_degrees[i]
        out.append([[conn.matrices[i][a][b].component(target + gd[b] - gd[a])
                     for b in range(module.num_generators)]
                    for a in range(module.num_generators)])
    return Connection(module, out)


@dataclass(frozen=True)
class IntegrabilityClass:
    vanishes: bool
    witness: OneCochain | None
    corrected: Connection | None
    corrected_integrable: bool | None
    scalar_curvature: dict  # (i, j) -> QuotientElement


def integrability_class(conn: Connection, record: CurvatureRecord | None = None) -> IntegrabilityClass:
    """Decide whether the curvature class vanishes in H^2, with witness.

    Solves d1(tau)(g_i ^ g_j) = kappa_ij over scalar potentials tau in
    C^1, degree by degree, with d1 evaluated intrinsically.  When a
    solution exists the corrected connection conn - tau*I is returned and
    re-verified to be integrable.
    """
    module = conn.module
    ring = module.ring
    algebra = derivation_algebra(ring)
    if record is None:
        record = curvature(conn)
    kappa = {}
    for pair in PAIRS:
        scalar = record.scalars[pair]
        if scalar is None:
            raise ScalarExtractionError(
                f"curvature on pair {pair} is not scalar modulo im d0; "
                "module is not behaving as rank one")
        kappa[pair] = scalar
    degrees: set[int] = set()
    for (i, j), value in kappa.items():
        shift = algebra.generator_degrees[i] + algebra.generator_degrees[j]
        degrees.update(u - shift for u in value.homogeneous_components())
    witness = OneCochain(ring, [ring.zero()] * 4)
    for w in sorted(degrees):
        spanning = algebra.c1_spanning(w)
        span_chains = [algebra.spanning_cochain(*label) for label in spanning]
        rows: list[list[Fraction]] = []
        rhs: list[Fraction] = []
        for i, j in PAIRS:
            shift = algebra.generator_degrees[i] + algebra.generator_degrees[j]
            basis = ring.graded_basis(w + shift)
            index = {mon: t for t, mon in enumerate(basis)}
            block_rows = [[Fraction(0)] * len(spanning) for _ in basis]
            for s, chain in enumerate(span_chains):
                for mon, c in d1_pair(algebra, chain, i, j).rep.terms.items():
                    block_rows[index[mon]][s] = c
            target = [Fraction(0)] * len(basis)
            for mon, c in kappa[(i, j)].component(w + shift).rep.terms.items():
                target[index[mon]] = c
            rows.extend(block_rows)
            rhs.extend(target)
        solution = (ExactMatrix(len(rows), len(spanning), rows).solve(rhs)
                    if spanning else (None if any(rhs) else []))
        if solution is None:
            return IntegrabilityClass(False, None, None, None, kappa)
        for c, chain in zip(solution, span_chains):
            if c:
                witness = witness + chain.scale(c)
    corrected = conn.shifted_by_scalars(witness.values, sign=-1)
    corrected_ok = curvature(corrected).integrable
    return IntegrabilityClass(True, witness, corrected, corrected_ok, kappa)


def find_connection(module: PresentedModule) -> Connection | None:
    """Search for a homogeneous connection by one joint exact solve.

    The Euler matrix is the forced diagonal P + lambda*I with
    P_jj = (deg e_j - deg e_1)/d; lambda and the entries of the Koszul
    matrices (in their forced degrees) are unknowns, constrained by the
    descent equations and by R-linearity over the phi relations.
    Returns None when the homogeneous ansatz admits no solution.
    """
    ring = module.ring
    algebra = derivation_algebra(ring)
    gd = module.generator_degrees
    s = module.num_generators
    system = _LinearSystem()
    lam = system.new_unknown()
    one = ring.one()
    epsilon = [Fraction(g - gd[0], ring.d) for g in gd]

    sym: list[list[list[_LinExpr]]] = []
    euler_matrix = [[_LinExpr(one.scale(epsilon[b]) if a == b else ring.zero(),
                              {lam: one} if a == b else {})
                     for b in range(s)] for a in range(s)]
    sym.append(euler_matrix)
    unknown_layout: list[list[list[list[tuple[int, tuple]]]]] = []
    for i in range(1, 4):
        target = algebra.generator_degrees[i]
        matrix = []
        layout = []
        for a in range(s):
            row = []
            row_layout = []
            for b in range(s):
                terms = {}
                cell = []
                for mon in ring.graded_basis(target + gd[b] - gd[a]):
                    u = system.new_unknown()
                    terms[u] = ring.element(Polynomial.monomial(mon))
                    cell.append((u, mon))
                row.append(_LinExpr(ring.zero(), terms))
                row_layout.append(cell)
            matrix.append(row)
            layout.append(row_layout)
        sym.append(matrix)
        unknown_layout.append(layout)

    for i, g in enumerate(algebra.generators):
        for j in range(module.num_relations):
            col = module.column(j)
            linvec = []
            for a in range(s):
                expr = _LinExpr(g(col[a]))
                for b in range(s):
                    if not col[b].is_zero():
                        expr = expr.plus(sym[i][a][b].times(col[b]))
                linvec.append(expr)
            _emit_membership(system, module, linvec,
                             algebra.generator_degrees[i] + module.column_degrees[j])

    for t in range(4):
        relation = algebra.phi_column_relation(t)
        rho = None
        for c, i in zip(relation, range(4)):
            if not c.is_zero():
                rho = c.weighted_degree() + algebra.generator_degrees[i]
                break
        combo = [[_LinExpr(ring.zero()) for _ in range(s)] for _ in range(s)]
        for c, matrix in zip(relation, sym):
            if c.is_zero():
                continue
            for a in range(s):
                for b in range(s):
                    combo[a][b] = combo[a][b].plus(matrix[a][b].times(c))
        for b in range(s):
            _emit_membership(system, module, [combo[a][b] for a in range(s)],
                             rho + gd[b])

    solution = system.solve()
    if solution is None:
        return None
    lam_value = solution[lam]
    matrices = [[[one.scale(epsilon[b] + lam_value) if a == b else ring.zero()
                  for b in range(s)] for a in range(s)]]
    for i in range(1, 4):
        matrix = []
        for a in range(s):
            row = []
            for b in range(s):
                entry = ring.zero()
                for u, mon in unknown_layout[i - 1][a][b]:
                    if solution[u]:
                        entry = entry + ring.element(Polynomial.monomial(mon, solution[u]))
                row.append(entry)
            matrix.append(row)
        matrices.append(matrix)
    return Connection(module, matrices)


def connection_difference_cochain(c1: Connection, c2: Connection) -> OneCochain:
    """The scalar potential tau with c2 = c1 + tau*I, via End(M) = R."""
    module = c1.module
    if c2.module is not module:
        raise ValueError("connections live on different modules")
    values = []
    for i in range(4):
        diff = _mat_sub(c2.matrices[i], c1.matrices[i])
        scalar = endomorphism_scalar(module, diff)
        if scalar is None:
            raise ScalarExtractionError(
                f"difference on {GENERATOR_NAMES[i]} is not scalar modulo im d0")
        values.append(scalar)
    return OneCochain(module.ring, values)


def equivalent(c1: Connection, c2: Connection) -> bool:
    """Graded equivalence of integrable connections.

    The difference potential tau must be a 1-cocycle; the connections are
    equivalent exactly when tau is a coboundary d0(r), solved per
    homogeneous component.
    """
    from .rincomplex import d1 as rin_d1
    tau = connection_difference_cochain(c1, c2)
    algebra = derivation_algebra(tau.ring)
    if not rin_d1(tau).is_zero():
        raise ValueError("difference potential is not a cocycle; "
                         "are both connections integrable?")
    ring = tau.ring
    for w in sorted(tau.degrees(algebra.generator_degrees)):
        component = tau.component(w, algebra.generator_degrees)
        target = algebra.c1_coords(component, w)
        columns = [algebra.c1_coords(d0(ring.element(Polynomial.monomial(mon))), w)
                   for mon in ring.graded_basis(w)]
        if not columns:
            if any(target):
                return False
            continue
        if matrix_from_columns(columns).solve(target) is None:
            return False
    return True
