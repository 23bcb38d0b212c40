"""Sparse exterior algebra on a fixed n-dimensional space, over exact scalars.

Multi-indices are stored as bitmasks of the ambient dimension; shuffle signs
come from bit counting.  Coefficients are rationals by default; floats are
accepted and simply propagate (rank decisions on float forms live in
`wedge_solver`, not here).

Evaluation convention: a decomposable k-form satisfies
``(eta_1 ^ ... ^ eta_k)(x_1, ..., x_k) = det|eta_i(x_j)| / k!``.
Interior multiplication carries the degree factor
``(i_v theta)(u_1, ..., u_{k-1}) = k * theta(v, u_1, ..., u_{k-1})``,
which makes it the usual antiderivation on coefficients.  The scalar pairing
of a k-tuple against a k-form is the iterated contraction
``i_{x_1} ... i_{x_k} theta = (-1)^(k(k-1)/2) * k! * theta(x_1, ..., x_k)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import factorial

Scalar = Fraction | float


def as_scalar(c) -> Scalar:
    if isinstance(c, float):
        return c
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    raise TypeError(f"unsupported scalar type: {type(c).__name__}")


def _is_zero_scalar(c: Scalar) -> bool:
    return c == 0


# ---------------------------------------------------------------------------
# bitmask multi-indices (1-based indices, bit i-1 <-> index i)

def mask_of(indices, dim: int) -> int:
    """Bitmask of a strictly increasing index tuple; validates the input."""
    mask = 0
    prev = 0
    for i in indices:
        i = int(i)
        if i <= prev:
            raise ValueError(f"multi-index {tuple(indices)} is not strictly increasing")
        if i > dim:
            raise ValueError(f"index {i} exceeds ambient dimension {dim}")
        mask |= 1 << (i - 1)
        prev = i
    return mask


def indices_of(mask: int) -> tuple[int, ...]:
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def shuffle_sign(a: int, b: int) -> int:
    """Sign of sorting the concatenation of disjoint masks a, b; 0 if not disjoint."""
    if a & b:
        return 0
    inv = 0
    m = b
    while m:
        low = m & -m
        m ^= low
        inv += (a >> low.bit_length()).bit_count()
    return -1 if inv & 1 else 1


def masks_of_size(dim: int, size: int):
    """All multi-index masks of the given size, in lexicographic index order."""
    for combo in combinations(range(1, dim + 1), size):
        yield mask_of(combo, dim)


# ---------------------------------------------------------------------------
# vectors and forms

@dataclass(frozen=True)
class Vector:
    """Element of V in the working basis; components are exact scalars."""

    dim: int
    components: tuple[Scalar, ...]

    def __post_init__(self):
        if len(self.components) != self.dim:
            raise ValueError("component count does not match dimension")
        object.__setattr__(self, "components", tuple(as_scalar(c) for c in self.components))

    def __getitem__(self, i: int) -> Scalar:
        """1-based coordinate access."""
        return self.components[i - 1]

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.components)


def basis_vector(i: int, dim: int) -> Vector:
    return Vector(dim, tuple(Fraction(int(j == i)) for j in range(1, dim + 1)))


class ExtForm:
    """Homogeneous exterior form, sparse over bitmask multi-indices.

    Treat instances as immutable; all operations return new forms.
    """

    __slots__ = ("dim", "degree", "coeffs")

    def __init__(self, dim: int, degree: int, coeffs: dict[int, Scalar]):
        self.dim = dim
        self.degree = degree
        self.coeffs = coeffs  # canonical: no zero values

    # -- construction -------------------------------------------------------

    @staticmethod
    def zero(dim: int, degree: int) -> "ExtForm":
        return ExtForm(dim, degree, {})

    @staticmethod
    def from_masks(dim: int, degree: int, terms: dict[int, Scalar]) -> "ExtForm":
        coeffs = {m: c for m, c in terms.items() if not _is_zero_scalar(c)}
        if coeffs and degree > dim:
            raise ValueError(f"nonzero form of degree {degree} in dimension {dim}")
        return ExtForm(dim, degree, coeffs)

    # -- basic queries -------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    def terms(self):
        """Iterate (index tuple, coefficient) in lexicographic index order."""
        for mask in sorted(self.coeffs, key=indices_of):
            yield indices_of(mask), self.coeffs[mask]

    def coefficient(self, indices) -> Scalar:
        return self.coeffs.get(mask_of(indices, self.dim), Fraction(0))

    def max_abs(self) -> float:
        return max((abs(c) for c in self.coeffs.values()), default=0.0)

    # -- ring structure ------------------------------------------------------

    def __add__(self, other: "ExtForm") -> "ExtForm":
        self._check_compatible(other)
        out = dict(self.coeffs)
        for m, c in other.coeffs.items():
            s = out.get(m, Fraction(0)) + c
            if _is_zero_scalar(s):
                out.pop(m, None)
            else:
                out[m] = s
        return ExtForm(self.dim, self.degree, out)

    def __sub__(self, other: "ExtForm") -> "ExtForm":
        return self + (-other)

    def __neg__(self) -> "ExtForm":
        return ExtForm(self.dim, self.degree, {m: -c for m, c in self.coeffs.items()})

    def scale(self, c) -> "ExtForm":
        c = as_scalar(c)
        if _is_zero_scalar(c):
            return ExtForm.zero(self.dim, self.degree)
        return ExtForm(self.dim, self.degree, {m: c * v for m, v in self.coeffs.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExtForm):
            return NotImplemented
        return (self.dim, self.degree, self.coeffs) == (other.dim, other.degree, other.coeffs)

    def __repr__(self) -> str:
        if self.is_zero():
            return f"ExtForm(dim={self.dim}, deg={self.degree}, 0)"
        body = " + ".join(f"{c}*a{''.join(map(str, idx))}" for idx, c in self.terms())
        return f"ExtForm(dim={self.dim}, deg={self.degree}, {body})"

    def _check_compatible(self, other: "ExtForm"):
        if self.dim != other.dim:
            raise ValueError("ambient dimension mismatch")
        if self.degree != other.degree:
            raise ValueError("degree mismatch")


def make_form(dim: int, degree: int, terms) -> ExtForm:
    """Canonical form from (multi-index, coefficient) pairs.

    Duplicate multi-indices are summed, zeros dropped.  A nonzero form of
    degree > dim is rejected since that space is trivial.
    """
    if degree < 0:
        raise ValueError("degree must be non-negative")
    coeffs: dict[int, Scalar] = {}
    for indices, c in terms:
        mask = mask_of(indices, dim)
        if mask.bit_count() != degree:
            raise ValueError(f"multi-index {tuple(indices)} does not match degree {degree}")
        s = coeffs.get(mask, Fraction(0)) + as_scalar(c)
        if _is_zero_scalar(s):
            coeffs.pop(mask, None)
        else:
            coeffs[mask] = s
    if coeffs and degree > dim:
        raise ValueError(f"nonzero form of degree {degree} in dimension {dim}")
    return ExtForm(dim, degree, coeffs)


def constant_form(dim: int, c) -> ExtForm:
    """Degree-0 form with the given value."""
    c = as_scalar(c)
    return ExtForm(dim, 0, {} if _is_zero_scalar(c) else {0: c})


def alpha(i: int, dim: int) -> ExtForm:
    """The i-th dual basis covector."""
    return make_form(dim, 1, [((i,), 1)])


def covector(components, dim: int | None = None) -> ExtForm:
    """Degree-1 form from a dense component list."""
    comps = list(components)
    n = dim if dim is not None else len(comps)
    return make_form(n, 1, [((i,), comps[i - 1]) for i in range(1, n + 1)])


def scalar_of(form: ExtForm) -> Scalar:
    """Value of a degree-0 form."""
    if form.degree != 0:
        raise ValueError("not a degree-0 form")
    return form.coeffs.get(0, Fraction(0))


# ---------------------------------------------------------------------------
# operations

def wedge(a: ExtForm, b: ExtForm) -> ExtForm:
    if a.dim != b.dim:
        raise ValueError("ambient dimension mismatch")
    degree = a.degree + b.degree
    if degree > a.dim:
        return ExtForm.zero(a.dim, degree)
    out: dict[int, Scalar] = {}
    for ma, ca in a.coeffs.items():
        for mb, cb in b.coeffs.items():
            sign = shuffle_sign(ma, mb)
            if sign == 0:
                continue
            m = ma | mb
            s = out.get(m, Fraction(0)) + sign * ca * cb
            if _is_zero_scalar(s):
                out.pop(m, None)
            else:
                out[m] = s
    return ExtForm(a.dim, degree, out)


def wedge_all(forms) -> ExtForm:
    forms = list(forms)
    acc = forms[0]
    for f in forms[1:]:
        acc = wedge(acc, f)
    return acc


def wedge_power(a: ExtForm, p: int) -> ExtForm:
    if p == 0:
        return constant_form(a.dim, 1)
    acc = a
    for _ in range(p - 1):
        acc = wedge(acc, a)
    return acc


def _det(rows) -> Scalar:
    """Determinant by elimination; exact for rational entries."""
    n = len(rows)
    m = [list(r) for r in rows]
    sign = 1
    acc: Scalar = Fraction(1)
    for c in range(n):
        pivot = None
        for r in range(c, n):
            if m[r][c] != 0:
                pivot = r
                break
        if pivot is None:
            return Fraction(0)
        if pivot != c:
            m[c], m[pivot] = m[pivot], m[c]
            sign = -sign
        pv = m[c][c]
        acc = acc * pv
        for r in range(c + 1, n):
            if m[r][c] != 0:
                f = m[r][c] / pv
                m[r] = [x - f * y for x, y in zip(m[r], m[c])]
    return acc if sign == 1 else -acc


def evaluate(theta: ExtForm, args) -> Scalar:
    """Value theta(x_1, ..., x_k) under the det/k! convention."""
    args = list(args)
    if len(args) != theta.degree:
        raise ValueError(f"expected {theta.degree} vector arguments, got {len(args)}")
    for v in args:
        if v.dim != theta.dim:
            raise ValueError("vector dimension mismatch")
    if theta.degree == 0:
        return scalar_of(theta)
    total: Scalar = Fraction(0)
    k = theta.degree
    for mask, c in theta.coeffs.items():
        idx = indices_of(mask)
        rows = [[v[i] for v in args] for i in idx]
        total = total + c * _det(rows)
    return total / factorial(k)


def interior(v: Vector, theta: ExtForm) -> ExtForm:
    """Contraction i_v theta (the degree-scaled antiderivation)."""
    if v.dim != theta.dim:
        raise ValueError("vector dimension mismatch")
    if theta.degree == 0:
        return ExtForm.zero(theta.dim, 0)
    out: dict[int, Scalar] = {}
    for mask, c in theta.coeffs.items():
        pos = 0
        m = mask
        while m:
            low = m & -m
            m ^= low
            comp = v[low.bit_length()]
            if comp != 0:
                sub = mask ^ low
                sign = -1 if pos & 1 else 1
                s = out.get(sub, Fraction(0)) + sign * comp * c
                if _is_zero_scalar(s):
                    out.pop(sub, None)
                else:
                    out[sub] = s
            pos += 1
    return ExtForm(theta.dim, theta.degree - 1, out)


def iterated_interior(vs, theta: ExtForm) -> ExtForm:
    """i_{x_1} i_{x_2} ... i_{x_j} theta; over-contraction yields the zero 0-form."""
    vs = list(vs)
    for v in vs:
        if v.dim != theta.dim:
            raise ValueError("vector dimension mismatch")
    if len(vs) > theta.degree:
        return ExtForm.zero(theta.dim, 0)
    acc = theta
    for v in reversed(vs):
        acc = interior(v, acc)
    return acc


def reverse_sign(k: int) -> int:
    """Sign of the order-reversing permutation on k letters."""
    return -1 if (k * (k - 1) // 2) & 1 else 1


def pairing(vs, theta: ExtForm) -> Scalar:
    """Scalar <[x_1 ... x_k], theta> = i_{x_1} ... i_{x_k} theta."""
    vs = list(vs)
    if len(vs) != theta.degree:
        raise ValueError(f"expected {theta.degree} vectors, got {len(vs)}")
    return scalar_of(iterated_interior(vs, theta))


def interior_division(x: Vector, mu: ExtForm) -> ExtForm:
    """A form nu with i_x nu = mu, valid whenever i_x mu = 0 and x != 0."""
    if x.dim != mu.dim:
        raise ValueError("vector dimension mismatch")
    if x.is_zero():
        raise ValueError("cannot divide by the zero vector")
    if not interior(x, mu).is_zero():
        raise ValueError("interior product of x with mu is nonzero; no antiderivative exists")
    for i in range(1, x.dim + 1):
        if x[i] != 0:
            a = alpha(i, x.dim).scale(Fraction(1) / x[i] if isinstance(x[i], Fraction) else 1.0 / x[i])
            return wedge(a, mu)
    raise AssertionError("unreachable")
