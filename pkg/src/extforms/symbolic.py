"""Symbolic differential forms with exact coefficients.

Coefficients live in the ring of finite sums  c * x^a * exp(P(x))  where c
is rational, x^a is a Laurent monomial in the named coordinates, and P is a
polynomial with rational coefficients.  The ring is closed under sums,
products and partial derivatives, and terms with distinct (monomial, P)
keys are linearly independent, so zero testing is canonical-form comparison
with no heuristics.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import exp as _math_exp

from .algebra import (
    ExtForm,
    as_scalar,
    indices_of,
    mask_of,
    masks_of_size,
    shuffle_sign,
)

Mono = tuple[int, ...]             # Laurent exponents, one per coordinate
Poly = tuple[tuple[Mono, Fraction], ...]  # canonical: sorted desc, no zeros
Key = tuple[Mono, Poly]


class PoleError(ArithmeticError):
    """Negative Laurent exponent evaluated at a zero coordinate."""


def _poly_add(a: Poly, b: Poly) -> Poly:
    acc = dict(a)
    for m, c in b:
        s = acc.get(m, Fraction(0)) + c
        if s:
            acc[m] = s
        else:
            acc.pop(m, None)
    return tuple(sorted(acc.items(), reverse=True))


def _poly_scale(a: Poly, c: Fraction) -> Poly:
    if not c:
        return ()
    return tuple((m, c * v) for m, v in a)


def _poly_diff(a: Poly, i: int) -> Poly:
    out = {}
    for m, c in a:
        if m[i]:
            dm = m[:i] + (m[i] - 1,) + m[i + 1:]
            out[dm] = out.get(dm, Fraction(0)) + c * m[i]
    return tuple(sorted((kv for kv in out.items() if kv[1]), reverse=True))


def _poly_eval(a: Poly, point) -> Fraction:
    total = Fraction(0)
    for m, c in a:
        v = c
        for e, x in zip(m, point):
            if e:
                v *= x ** e
        total += v
    return total


class ScalarExpr:
    """Finite sum of rational * Laurent monomial * exp(polynomial)."""

    __slots__ = ("ncoords", "terms")

    def __init__(self, ncoords: int, terms: dict[Key, Fraction]):
        self.ncoords = ncoords
        self.terms = {k: v for k, v in terms.items() if v}

    # -- constructors --------------------------------------------------------

    @staticmethod
    def zero(ncoords: int) -> "ScalarExpr":
        return ScalarExpr(ncoords, {})

    @staticmethod
    def const(c, ncoords: int) -> "ScalarExpr":
        c = Fraction(c)
        key = ((0,) * ncoords, ())
        return ScalarExpr(ncoords, {key: c} if c else {})

    @staticmethod
    def var(i: int, ncoords: int, power: int = 1) -> "ScalarExpr":
        """Laurent power of the i-th coordinate (0-based)."""
        mono = tuple(power if j == i else 0 for j in range(ncoords))
        return ScalarExpr(ncoords, {(mono, ()): Fraction(1)})

    @staticmethod
    def exp(poly: "ScalarExpr") -> "ScalarExpr":
        """exp of a polynomial argument (no Laurent poles, no nested exp)."""
        p = poly.as_polynomial()
        mono = (0,) * poly.ncoords
        return ScalarExpr(poly.ncoords, {(mono, p): Fraction(1)})

    def as_polynomial(self) -> Poly:
        """This expression as a plain polynomial; raises if it is not one."""
        out = {}
        for (mono, p), c in self.terms.items():
            if p:
                raise ValueError("expression contains an exponential factor")
            if any(e < 0 for e in mono):
                raise ValueError("expression has negative exponents")
            out[mono] = out.get(mono, Fraction(0)) + c
        return tuple(sorted((kv for kv in out.items() if kv[1]), reverse=True))

    @staticmethod
    def from_polynomial(p: Poly, ncoords: int) -> "ScalarExpr":
        return ScalarExpr(ncoords, {(m, ()): c for m, c in p})

    # -- ring structure ------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        if not isinstance(other, ScalarExpr):
            return NotImplemented
        return self.ncoords == other.ncoords and self.terms == other.terms

    def __add__(self, other: "ScalarExpr") -> "ScalarExpr":
        self._check(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out.get(k, Fraction(0)) + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return ScalarExpr(self.ncoords, out)

    def __sub__(self, other: "ScalarExpr") -> "ScalarExpr":
        return self + (-other)

    def __neg__(self) -> "ScalarExpr":
        return ScalarExpr(self.ncoords, {k: -c for k, c in self.terms.items()})

    def __mul__(self, other: "ScalarExpr") -> "ScalarExpr":
        self._check(other)
        out: dict[Key, Fraction] = {}
        for (ma, pa), ca in self.terms.items():
            for (mb, pb), cb in other.terms.items():
                mono = tuple(x + y for x, y in zip(ma, mb))
                key = (mono, _poly_add(pa, pb))
                s = out.get(key, Fraction(0)) + ca * cb
                if s:
                    out[key] = s
                else:
                    out.pop(key, None)
        return ScalarExpr(self.ncoords, out)

    def scale(self, c) -> "ScalarExpr":
        c = Fraction(c)
        if not c:
            return ScalarExpr.zero(self.ncoords)
        return ScalarExpr(self.ncoords, {k: c * v for k, v in self.terms.items()})

    def diff(self, i: int) -> "ScalarExpr":
        """Partial derivative with respect to the i-th coordinate (0-based)."""
        out: dict[Key, Fraction] = {}

        def _acc(key: Key, c: Fraction):
            if not c:
                return
            s = out.get(key, Fraction(0)) + c
            if s:
                out[key] = s
            else:
                out.pop(key, None)

        for (mono, p), c in self.terms.items():
            if mono[i]:
                dm = mono[:i] + (mono[i] - 1,) + mono[i + 1:]
                _acc((dm, p), c * mono[i])
            for pm, pc in _poly_diff(p, i):
                nm = tuple(x + y for x, y in zip(mono, pm))
                _acc((nm, p), c * pc)
        return ScalarExpr(self.ncoords, out)

    # -- pointwise evaluation ------------------------------------------------

    def eval_groups(self, point) -> dict[Fraction, Fraction]:
        """Exact value grouped by exponent: {q: c} means sum of c * e^q.

        Raises PoleError when a negative Laurent power meets a zero
        coordinate.
        """
        point = tuple(Fraction(x) for x in point)
        if len(point) != self.ncoords:
            raise ValueError("point dimension mismatch")
        groups: dict[Fraction, Fraction] = {}
        for (mono, p), c in self.terms.items():
            v = c
            for e, x in zip(mono, point):
                if e == 0:
                    continue
                if x == 0 and e < 0:
                    raise PoleError("negative power of a vanishing coordinate")
                v *= x ** e
            if v == 0:
                continue
            q = _poly_eval(p, point)
            s = groups.get(q, Fraction(0)) + v
            if s:
                groups[q] = s
            else:
                groups.pop(q, None)
        return groups

    def is_zero_at(self, point) -> bool:
        """Exact zero test at a rational point (e^q terms never cancel across q)."""
        return not self.eval_groups(point)

    def eval_at(self, point):
        """Exact Fraction when no exponential survives, else a float."""
        groups = self.eval_groups(point)
        if not groups:
            return Fraction(0)
        if set(groups) == {Fraction(0)}:
            return groups[Fraction(0)]
        return sum(float(c) * _math_exp(float(q)) for q, c in groups.items())

    def is_constant(self) -> bool:
        zero_mono = (0,) * self.ncoords
        return all(k == (zero_mono, ()) for k in self.terms)

    def _check(self, other: "ScalarExpr"):
        if self.ncoords != other.ncoords:
            raise ValueError("coordinate count mismatch")

    def __repr__(self) -> str:
        return f"ScalarExpr({self.terms!r})"


def try_divide(a: ScalarExpr, b: ScalarExpr, max_steps: int = 256) -> ScalarExpr | None:
    """Exact quotient a / b in the ring, or None when it does not exist.

    Single-term divisors always divide (Laurent exponents may go negative);
    multi-term divisors are handled by leading-term reduction with a step
    bound, and the caller should verify the product.
    """
    a._check(b)
    n = a.ncoords
    if b.is_zero():
        return None
    if a.is_zero():
        return ScalarExpr.zero(n)
    if len(b.terms) == 1:
        ((mb, pb), cb), = b.terms.items()
        out = {}
        for (ma, pa), ca in a.terms.items():
            mono = tuple(x - y for x, y in zip(ma, mb))
            key = (mono, _poly_add(pa, _poly_scale(pb, Fraction(-1))))
            out[key] = ca / cb
        return ScalarExpr(n, out)
    lead_b = max(b.terms)
    cb = b.terms[lead_b]
    rem = a
    quot = ScalarExpr.zero(n)
    for _ in range(max_steps):
        if rem.is_zero():
            return quot
        lead_r = max(rem.terms)
        mono = tuple(x - y for x, y in zip(lead_r[0], lead_b[0]))
        key = (mono, _poly_add(lead_r[1], _poly_scale(lead_b[1], Fraction(-1))))
        t = ScalarExpr(n, {key: rem.terms[lead_r] / cb})
        quot = quot + t
        rem = rem - t * b
    return None


# ---------------------------------------------------------------------------
# differential forms

class DiffForm:
    """Homogeneous exterior form with ScalarExpr coefficients over named
    coordinates; sparse over bitmask multi-indices, immutable by convention."""

    __slots__ = ("coords", "degree", "coeffs")

    def __init__(self, coords, degree: int, coeffs: dict[int, ScalarExpr]):
        self.coords = tuple(coords)
        self.degree = degree
        self.coeffs = {m: c for m, c in coeffs.items() if not c.is_zero()}
        if self.coeffs and degree > len(self.coords):
            raise ValueError("nonzero form of degree exceeding coordinate count")

    # -- constructors --------------------------------------------------------

    @staticmethod
    def zero(coords, degree: int) -> "DiffForm":
        return DiffForm(coords, degree, {})

    @staticmethod
    def from_scalar(se: ScalarExpr, coords) -> "DiffForm":
        return DiffForm(coords, 0, {0: se})

    @staticmethod
    def differential(i: int, coords) -> "DiffForm":
        """dx_i for the i-th coordinate (0-based)."""
        n = len(coords)
        return DiffForm(coords, 1, {1 << i: ScalarExpr.const(1, n)})

    # -- structure -----------------------------------------------------------

    @property
    def ncoords(self) -> int:
        return len(self.coords)

    def is_zero(self) -> bool:
        return not self.coeffs

    def terms(self):
        for mask in sorted(self.coeffs, key=indices_of):
            yield indices_of(mask), self.coeffs[mask]

    def __eq__(self, other) -> bool:
        if not isinstance(other, DiffForm):
            return NotImplemented
        return (self.coords, self.degree, self.coeffs) == \
            (other.coords, other.degree, other.coeffs)

    def __add__(self, other: "DiffForm") -> "DiffForm":
        self._check(other)
        out = dict(self.coeffs)
        for m, c in other.coeffs.items():
            s = out.get(m, ScalarExpr.zero(self.ncoords)) + c
            if s.is_zero():
                out.pop(m, None)
            else:
                out[m] = s
        return DiffForm(self.coords, self.degree, out)

    def __sub__(self, other: "DiffForm") -> "DiffForm":
        return self + (-other)

    def __neg__(self) -> "DiffForm":
        return DiffForm(self.coords, self.degree, {m: -c for m, c in self.coeffs.items()})

    def scale(self, se: ScalarExpr) -> "DiffForm":
        return DiffForm(self.coords, self.degree,
                        {m: se * c for m, c in self.coeffs.items()})

    def _check(self, other: "DiffForm"):
        if self.coords != other.coords:
            raise ValueError("coordinate list mismatch")
        if self.degree != other.degree:
            raise ValueError("degree mismatch")

    def __repr__(self) -> str:
        from .dsl import print_form
        return f"DiffForm({self.coords!r}, {print_form(self)!r})"


def wedge_d(a: DiffForm, b: DiffForm) -> DiffForm:
    """Wedge product of symbolic forms."""
    if a.coords != b.coords:
        raise ValueError("coordinate list mismatch")
    n = a.ncoords
    degree = a.degree + b.degree
    if degree > n:
        return DiffForm.zero(a.coords, degree)
    out: dict[int, ScalarExpr] = {}
    for ma, ca in a.coeffs.items():
        for mb, cb in b.coeffs.items():
            sign = shuffle_sign(ma, mb)
            if sign == 0:
                continue
            m = ma | mb
            term = ca * cb
            if sign < 0:
                term = -term
            s = out.get(m, ScalarExpr.zero(n)) + term
            if s.is_zero():
                out.pop(m, None)
            else:
                out[m] = s
    return DiffForm(a.coords, degree, out)


def wedge_d_all(forms) -> DiffForm:
    forms = list(forms)
    acc = forms[0]
    for f in forms[1:]:
        acc = wedge_d(acc, f)
    return acc


def exterior_derivative(omega: DiffForm) -> DiffForm:
    """d omega: coefficient-wise partials wedged with coordinate differentials."""
    n = omega.ncoords
    out: dict[int, ScalarExpr] = {}
    for mask, c in omega.coeffs.items():
        for i in range(n):
            bit = 1 << i
            if mask & bit:
                continue
            dc = c.diff(i)
            if dc.is_zero():
                continue
            sign = shuffle_sign(bit, mask)
            term = dc if sign > 0 else -dc
            m = bit | mask
            s = out.get(m, ScalarExpr.zero(n)) + term
            if s.is_zero():
                out.pop(m, None)
            else:
                out[m] = s
    return DiffForm(omega.coords, omega.degree + 1, out)


def eval_at(omega: DiffForm, point) -> ExtForm:
    """Pointwise reading of a symbolic form as a numeric ExtForm.

    Exact rational when every exponential evaluates at 0; otherwise all
    coefficients are floats.
    """
    n = omega.ncoords
    vals = {m: c.eval_at(point) for m, c in omega.coeffs.items()}
    if any(isinstance(v, float) for v in vals.values()):
        vals = {m: float(v) for m, v in vals.items()}
    return ExtForm.from_masks(n, omega.degree, {m: as_scalar(v) for m, v in vals.items()})


def is_zero_at(omega: DiffForm, point) -> bool:
    """Exact pointwise zero test."""
    return all(c.is_zero_at(point) for c in omega.coeffs.values())


def wedge_powers(omega: DiffForm):
    """Nonzero symbolic wedge powers [omega, omega^2, ...] up to symbolic zero."""
    powers = []
    acc = omega
    while not acc.is_zero():
        powers.append(acc)
        if 2 * (len(powers) + 1) > omega.ncoords:
            break
        acc = wedge_d(acc, omega)
    return powers


def rank_at(omega: DiffForm, point, powers=None) -> int:
    """Rank of a 2-form at a point: largest m with omega^m nonzero there.

    Exact: uses symbolic powers plus the canonical pointwise zero test.
    """
    if omega.degree != 2:
        raise ValueError("rank is defined for 2-forms")
    if powers is None:
        powers = wedge_powers(omega)
    r = 0
    for m, power in enumerate(powers, start=1):
        if not is_zero_at(power, point):
            r = m
    return r


# ---------------------------------------------------------------------------
# recurrence equation d omega = beta ^ omega

@dataclass
class LeeVerification:
    """Symbolic certificate for d omega = beta ^ omega."""

    residual: DiffForm          # d omega - beta ^ omega
    d_beta: DiffForm
    dbeta_wedge_omega: DiffForm

    @property
    def holds(self) -> bool:
        return self.residual.is_zero()


def lee_verify(omega: DiffForm, beta: DiffForm) -> LeeVerification:
    if omega.degree != 2:
        raise ValueError("omega must be a 2-form")
    if beta.degree != 1:
        raise ValueError("beta must be a 1-form")
    if omega.coords != beta.coords:
        raise ValueError("coordinate list mismatch")
    residual = exterior_derivative(omega) - wedge_d(beta, omega)
    d_beta = exterior_derivative(beta)
    return LeeVerification(residual=residual, d_beta=d_beta,
                           dbeta_wedge_omega=wedge_d(d_beta, omega))


@dataclass
class LeePointSolution:
    point: tuple
    beta: ExtForm | None        # particular pointwise solution, None if unsolvable
    kernel_dim: int
    rank_omega: int


@dataclass
class LeeSolveResult:
    points: list[LeePointSolution]
    consistent: bool


def lee_solve(omega: DiffForm, points) -> LeeSolveResult:
    """Pointwise solve of (d omega)_p = beta_p ^ omega_p over sample points.

    Consistent iff solvable at every point with a unique solution wherever
    the rank of omega at the point is >= 2.
    """
    from .wedge_solver import solve_wedge

    if omega.degree != 2:
        raise ValueError("omega must be a 2-form")
    d_omega = exterior_derivative(omega)
    powers = wedge_powers(omega)
    out = []
    consistent = True
    for p in points:
        omega_p = eval_at(omega, p)
        kappa_p = eval_at(d_omega, p)
        r = rank_at(omega, p, powers)
        if omega_p.is_zero():
            solvable = kappa_p.is_zero()
            beta_p = ExtForm.zero(omega_p.dim, 1) if solvable else None
            kdim = omega.ncoords
        else:
            beta_p, kernel = solve_wedge(omega_p, kappa_p)
            solvable = beta_p is not None
            kdim = len(kernel)
        if not solvable or (r >= 2 and kdim != 0):
            consistent = False
        out.append(LeePointSolution(point=tuple(p), beta=beta_p,
                                    kernel_dim=kdim, rank_omega=r))
    return LeeSolveResult(points=out, consistent=consistent)


# ---------------------------------------------------------------------------
# pointwise classification

@dataclass
class PointClassification:
    point: tuple
    r_omega: int
    in_A: bool
    in_B: bool
    in_C: bool
    d_beta_rank: int
    omega_zero: bool


@dataclass
class ClassificationVerdict:
    a_points: int
    b_points: int
    c_points: int
    dbeta_zero_on_A: bool
    rank_bounds_on_B: bool
    a_b_disjoint: bool

    @property
    def passed(self) -> bool:
        return self.dbeta_zero_on_A and self.rank_bounds_on_B and self.a_b_disjoint


def classify_theorem_sets(omega: DiffForm, beta: DiffForm, grid):
    """Per-point membership in the three sets plus the verdict checks.

    Requires the recurrence d omega = beta ^ omega to hold symbolically.
    """
    ver = lee_verify(omega, beta)
    if not ver.holds:
        raise ValueError("hypothesis violated: d omega - beta ^ omega != 0")
    d_beta = ver.d_beta
    omega_powers = wedge_powers(omega)
    dbeta_powers = wedge_powers(d_beta)
    rows = []
    na = nb = nc = 0
    dbeta_zero_on_a = True
    rank_bounds_on_b = True
    disjoint = True
    for p in grid:
        r = rank_at(omega, p, omega_powers)
        omega_zero = is_zero_at(omega, p)
        dbeta_zero = is_zero_at(d_beta, p)
        dbr = rank_at(d_beta, p, dbeta_powers)
        in_a = r > 2
        in_b = (not dbeta_zero) and (not omega_zero)
        in_c = r <= 1
        if in_a:
            na += 1
            if not dbeta_zero:
                dbeta_zero_on_a = False
        if in_b:
            nb += 1
            if not (1 <= dbr <= 2 and r <= 2):
                rank_bounds_on_b = False
        if in_c:
            nc += 1
        if in_a and in_b:
            disjoint = False
        rows.append(PointClassification(point=tuple(p), r_omega=r, in_A=in_a,
                                        in_B=in_b, in_C=in_c, d_beta_rank=dbr,
                                        omega_zero=omega_zero))
    verdict = ClassificationVerdict(
        a_points=na, b_points=nb, c_points=nc,
        dbeta_zero_on_A=dbeta_zero_on_a,
        rank_bounds_on_B=rank_bounds_on_b,
        a_b_disjoint=disjoint)
    return rows, verdict


# ---------------------------------------------------------------------------
# almost alpha-cosymplectic check

@dataclass
class CosymplecticReport:
    d_eta_zero: bool
    structure_equation_holds: bool
    structure_residual: DiffForm
    dalpha_wedge_eta: DiffForm | None    # only checked when both hold, dim > 5
    dalpha_wedge_eta_zero: bool | None
    f_factor: ScalarExpr | None          # d alpha = f * eta, when representable

    @property
    def passed(self) -> bool:
        ok = self.d_eta_zero and self.structure_equation_holds
        if ok and self.dalpha_wedge_eta_zero is not None:
            ok = self.dalpha_wedge_eta_zero
        return ok


def cosymplectic_check(phi: DiffForm, eta: DiffForm, alpha: ScalarExpr) -> CosymplecticReport:
    """Check d eta = 0 and d Phi = 2 alpha eta ^ Phi; in dimension > 5 the
    closedness of alpha*eta (d alpha ^ eta = 0) is verified as a consequence
    and the factor f with d alpha = f eta is recovered when the coefficient
    division is exact."""
    if phi.degree != 2 or eta.degree != 1:
        raise ValueError("expects a 2-form Phi and a 1-form eta")
    if phi.coords != eta.coords:
        raise ValueError("coordinate list mismatch")
    d_eta = exterior_derivative(eta)
    residual = exterior_derivative(phi) - wedge_d(eta, phi).scale(alpha.scale(2))
    d_eta_zero = d_eta.is_zero()
    structure = residual.is_zero()
    dalpha_wedge_eta = None
    dw_zero = None
    f_factor = None
    if d_eta_zero and structure and phi.ncoords > 5:
        d_alpha = exterior_derivative(DiffForm.from_scalar(alpha, phi.coords))
        dalpha_wedge_eta = wedge_d(d_alpha, eta)
        dw_zero = dalpha_wedge_eta.is_zero()
        if dw_zero:
            f_factor = _recover_factor(d_alpha, eta)
    return CosymplecticReport(
        d_eta_zero=d_eta_zero, structure_equation_holds=structure,
        structure_residual=residual, dalpha_wedge_eta=dalpha_wedge_eta,
        dalpha_wedge_eta_zero=dw_zero, f_factor=f_factor)


def _recover_factor(d_alpha: DiffForm, eta: DiffForm) -> ScalarExpr | None:
    """f with d_alpha = f * eta, by exact coefficient division."""
    n = eta.ncoords
    if d_alpha.is_zero():
        return ScalarExpr.zero(n)
    for m, c in eta.coeffs.items():
        num = d_alpha.coeffs.get(m)
        if num is None:
            continue
        f = try_divide(num, c)
        if f is not None and (eta.scale(f) - d_alpha).is_zero():
            return f
    return None


def frobenius_residual(beta: DiffForm) -> DiffForm:
    """beta ^ d beta; zero certifies involutivity of the kernel distribution."""
    if beta.degree != 1:
        raise ValueError("expects a 1-form")
    return wedge_d(beta, exterior_derivative(beta))


# ---------------------------------------------------------------------------
# built-in worked examples

@dataclass
class CatalogIdentity:
    name: str
    holds: bool
    detail: str


@dataclass
class CatalogEntry:
    name: str
    coords: tuple[str, ...]
    forms: dict[str, DiffForm]
    identities: list[CatalogIdentity]

    @property
    def passed(self) -> bool:
        return all(i.holds for i in self.identities)


def _omega_zero_instance():
    coords = ("x1", "x2", "y1", "y2")
    n = len(coords)
    x1 = ScalarExpr.var(0, n)
    x2 = ScalarExpr.var(1, n)
    y1 = ScalarExpr.var(2, n)
    y2 = ScalarExpr.var(3, n)
    f0 = x1 * y1 + x2 * y2
    dx1, dx2, dy1, dy2 = (DiffForm.differential(i, coords) for i in range(4))
    omega0 = wedge_d(dx1, dx2).scale(ScalarExpr.exp(f0)) + wedge_d(dy1, dy2)
    beta0 = dy1.scale(x1) + dy2.scale(x2)
    return coords, omega0, beta0, (dx1, dx2, dy1, dy2)


def example_catalog() -> dict[str, CatalogEntry]:
    """The built-in worked instances with machine-checkable identities."""
    catalog = {}

    # conformally split 2-form on R^4
    coords, omega0, beta0, (dx1, dx2, dy1, dy2) = _omega_zero_instance()
    d_omega0 = exterior_derivative(omega0)
    d_beta0 = exterior_derivative(beta0)
    expected_dbeta0 = wedge_d(dx1, dy1) + wedge_d(dx2, dy2)
    identities = [
        CatalogIdentity("d(omega0) = beta0 ^ omega0",
                        (d_omega0 - wedge_d(beta0, omega0)).is_zero(),
                        "symbolic residual"),
        CatalogIdentity("d(beta0) = dx1^dy1 + dx2^dy2",
                        d_beta0 == expected_dbeta0, "canonical comparison"),
        CatalogIdentity("d(beta0) != 0", not d_beta0.is_zero(), "nonzero certificate"),
        CatalogIdentity("d(beta0) ^ omega0 = 0",
                        wedge_d(d_beta0, omega0).is_zero(), "symbolic residual"),
    ]
    catalog["omega_f"] = CatalogEntry(
        "omega_f", coords,
        {"omega0": omega0, "beta0": beta0, "dbeta0": d_beta0}, identities)

    # contact structure on the half-space t > 0 over R^4
    ccoords = ("t", "x1", "x2", "y1", "y2")
    n = len(ccoords)
    t = ScalarExpr.var(0, n)
    tinv = ScalarExpr.var(0, n, -1)
    x1 = ScalarExpr.var(1, n)
    x2 = ScalarExpr.var(2, n)
    dt, dx1c, dx2c, dy1c, dy2c = (DiffForm.differential(i, ccoords) for i in range(5))
    f0 = x1 * ScalarExpr.var(3, n) + x2 * ScalarExpr.var(4, n)
    omega0c = wedge_d(dx1c, dx2c).scale(ScalarExpr.exp(f0)) + wedge_d(dy1c, dy2c)
    eta = dt
    phi = omega0c.scale(t)
    gamma = dt.scale(tinv) + dy1c.scale(x1) + dy2c.scale(x2)
    d_gamma = exterior_derivative(gamma)
    identities = [
        CatalogIdentity("d(eta) = 0", exterior_derivative(eta).is_zero(),
                        "symbolic residual"),
        CatalogIdentity("d(Phi) = gamma ^ Phi",
                        (exterior_derivative(phi) - wedge_d(gamma, phi)).is_zero(),
                        "symbolic residual"),
        CatalogIdentity("eta ^ Phi ^ Phi != 0 (volume)",
                        not wedge_d(eta, wedge_d(phi, phi)).is_zero(),
                        "nonzero top form"),
        CatalogIdentity("gamma ^ d(gamma) ^ d(gamma) != 0 (contact)",
                        not wedge_d(gamma, wedge_d(d_gamma, d_gamma)).is_zero(),
                        "nonzero top form"),
    ]
    catalog["contact_R5"] = CatalogEntry(
        "contact_R5", ccoords,
        {"eta": eta, "Phi": phi, "gamma": gamma}, identities)
    return catalog
