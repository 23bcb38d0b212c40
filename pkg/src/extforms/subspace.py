"""Forms relative to a subspace pair (V, C): annihilators, adapted frames,
the grouping of a form by its annihilator-block factor count, main parts,
and derivative extraction.

An adapted frame lists the C basis first among vectors and the annihilator
covectors (the "alpha block") first among covectors; the two lists are dual
to each other up to the block swap spelled out in `AdaptedFrame`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from . import linalg
from .algebra import (
    ExtForm,
    Vector,
    basis_vector,
    covector,
    iterated_interior,
    masks_of_size,
    reverse_sign,
    scalar_of,
    wedge_all,
    constant_form,
)


@dataclass(frozen=True)
class Subspace:
    """Proper subspace C of the ambient space, given by an independent basis."""

    dim_ambient: int
    basis: tuple[Vector, ...]

    def __post_init__(self):
        basis = tuple(self.basis)
        object.__setattr__(self, "basis", basis)
        for v in basis:
            if v.dim != self.dim_ambient:
                raise ValueError("basis vector dimension mismatch")
        if len(basis) >= self.dim_ambient:
            raise ValueError("subspace must be proper (dim C < n)")
        if basis:
            rows = [list(v.components) for v in basis]
            if linalg.rank(rows, self.dim_ambient) != len(basis):
                raise ValueError("subspace basis is linearly dependent")

    @property
    def dim(self) -> int:
        return len(self.basis)


def span(dim_ambient: int, vectors) -> Subspace:
    return Subspace(dim_ambient, tuple(vectors))


def annihilator(c: Subspace) -> list[ExtForm]:
    """Basis of C^0, the covectors vanishing on C; n - dim C of them."""
    n = c.dim_ambient
    if not c.basis:
        from .algebra import alpha
        return [alpha(i, n) for i in range(1, n + 1)]
    rows = [list(v.components) for v in c.basis]
    return [covector(vec, n) for vec in linalg.nullspace(rows, n)]


@dataclass(frozen=True)
class AdaptedFrame:
    """Dual pair of ordered bases for (V, C) and (V*, C^0).

    vectors  = (c_1, ..., c_p, w_1, ..., w_k)  with the c's spanning C;
    covectors = (a_1, ..., a_k, b_1, ..., b_p)  with the a's spanning C^0,
    a_i(w_j) = delta_ij, b_i(c_j) = delta_ij, and the cross blocks vanish.
    """

    dim: int
    p: int  # dim C
    vectors: tuple[Vector, ...]
    covectors: tuple[ExtForm, ...]

    @property
    def k(self) -> int:
        """dim C^0 = n - p."""
        return self.dim - self.p

    @property
    def alpha_block(self) -> tuple[ExtForm, ...]:
        return self.covectors[: self.k]

    @property
    def beta_block(self) -> tuple[ExtForm, ...]:
        return self.covectors[self.k:]

    def dual_vector(self, t: int) -> Vector:
        """Frame vector pairing to 1 with covector position t (0-based)."""
        if t < self.k:
            return self.vectors[self.p + t]
        return self.vectors[t - self.k]


def adapted_cobase(c: Subspace) -> AdaptedFrame:
    """Deterministic adapted frame: complete C with greedily chosen standard
    basis vectors, then invert for the dual covectors."""
    n = c.dim_ambient
    p = c.dim
    frame_vectors = list(c.basis)
    rows = [list(v.components) for v in frame_vectors]
    for i in range(1, n + 1):
        if len(frame_vectors) == n:
            break
        cand = basis_vector(i, n)
        trial = rows + [list(cand.components)]
        if linalg.rank(trial, n) == len(trial):
            frame_vectors.append(cand)
            rows = trial
    m = [list(v.components) for v in frame_vectors]
    minv = linalg.invert(m)
    # row r of (M^-1)^T is the covector dual to frame vector r
    duals = [covector([minv[i][r] for i in range(n)], n) for r in range(n)]
    covectors = tuple(duals[p:] + duals[:p])  # alpha block (duals of the completion) first
    return AdaptedFrame(n, p, tuple(frame_vectors), covectors)


@dataclass(frozen=True)
class Decomposition:
    """Grouping of a form by the number s of alpha-block factors per term."""

    parts: tuple[tuple[int, ExtForm], ...]  # (s, part), s strictly increasing

    @property
    def main_degree(self) -> int:
        return self.parts[0][0]

    @property
    def main_part(self) -> ExtForm:
        return self.parts[0][1]

    def reconstruct(self) -> ExtForm:
        acc = self.parts[0][1]
        for _, part in self.parts[1:]:
            acc = acc + part
        return acc


def frame_coefficients(omega: ExtForm, frame: AdaptedFrame) -> dict[int, Fraction]:
    """Coefficients of omega over the frame's dual base, keyed by a bitmask
    over covector positions (alpha block = low bits)."""
    k = omega.degree
    sign = reverse_sign(k)
    out: dict[int, Fraction] = {}
    for positions in combinations(range(frame.dim), k):
        vs = [frame.dual_vector(t) for t in positions]
        c = scalar_of(iterated_interior(vs, omega))
        if c != 0:
            mask = 0
            for t in positions:
                mask |= 1 << t
            out[mask] = sign * c
    return out


def decompose(omega: ExtForm, frame: AdaptedFrame) -> Decomposition:
    """Rewrite omega in the frame's dual base and group terms by alpha count."""
    if omega.dim != frame.dim:
        raise ValueError("ambient dimension mismatch")
    if omega.is_zero():
        raise ValueError("the zero form has no decomposition")
    coeffs = frame_coefficients(omega, frame)
    alpha_mask = (1 << frame.k) - 1
    grouped: dict[int, ExtForm] = {}
    for mask, c in coeffs.items():
        s = (mask & alpha_mask).bit_count()
        if mask:
            factors = [frame.covectors[t] for t in range(frame.dim) if mask & (1 << t)]
            term = wedge_all(factors).scale(c)
        else:
            term = constant_form(frame.dim, c)
        grouped[s] = grouped.get(s, ExtForm.zero(omega.dim, omega.degree)) + term
    parts = tuple((s, grouped[s]) for s in sorted(grouped) if not grouped[s].is_zero())
    return Decomposition(parts)


def main_part(omega: ExtForm, c: Subspace) -> tuple[ExtForm, int]:
    """Main part and its alpha count |omega*| in the canonical adapted frame.

    The integer is frame-independent; the form itself is not.
    """
    frame = adapted_cobase(c)
    dec = decompose(omega, frame)
    return dec.main_part, dec.main_degree


def in_annihilator_algebra(tau: ExtForm, c: Subspace) -> bool:
    """Whether tau lies in the subalgebra generated by C^0."""
    from .algebra import interior
    return all(interior(v, tau).is_zero() for v in c.basis)


def extract_derivative(omega: ExtForm, c: Subspace) -> tuple[list[Vector], ExtForm]:
    """Vectors v_1..v_j in C with i_{[v_1...v_j]} omega nonzero and lying in
    the annihilator subalgebra, j = deg omega - |omega*|.

    Searches j-subsets of the C basis in lexicographic order; existence is
    guaranteed for genuine adapted decompositions.
    """
    if omega.is_zero():
        raise ValueError("the zero form has no main part")
    _, s = main_part(omega, c)
    j = omega.degree - s
    if j == 0:
        if not in_annihilator_algebra(omega, c):
            raise AssertionError("main degree equals the form degree yet the form leaves the annihilator algebra")
        return [], omega
    if j > c.dim:
        raise ValueError(f"required derivative order {j} exceeds dim C = {c.dim}")
    for combo in combinations(c.basis, j):
        contracted = iterated_interior(list(combo), omega)
        if not contracted.is_zero():
            return list(combo), contracted
    raise AssertionError("no basis tuple yields a nonzero derivative; adapted structure violated")
