"""Linear algebra of the maps lambda^k: beta -> Omega ^ beta for a 2-form.

Rank and kernel of 2-forms, solving Omega ^ beta = kappa, kernel main-part
profiles, rank-2 pair kernels, and lambda rank tables.  Arithmetic is exact
rational throughout; float coefficients switch matrix work to an SVD-backed
path with tolerance 1e-10 relative to the largest singular value.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .algebra import (
    ExtForm,
    Vector,
    constant_form,
    indices_of,
    iterated_interior,
    masks_of_size,
    reverse_sign,
    scalar_of,
    wedge,
    wedge_power,
)
from .subspace import AdaptedFrame, Subspace, adapted_cobase

FLOAT_RANK_RTOL = 1e-10


def _is_float_form(f: ExtForm) -> bool:
    return any(isinstance(c, float) for c in f.coeffs.values())


def _form_is_zero(f: ExtForm, scale: float | None = None) -> bool:
    if not _is_float_form(f):
        return f.is_zero()
    if f.is_zero():
        return True
    bound = FLOAT_RANK_RTOL * max(1.0, scale if scale is not None else 1.0)
    return all(abs(c) <= bound for c in f.coeffs.values())


def rank2(omega: ExtForm) -> int:
    """Largest p with the p-fold wedge power nonzero; 0 iff omega = 0."""
    if omega.degree != 2:
        raise ValueError("rank2 expects a 2-form")
    if _is_float_form(omega):
        scale = max(1.0, float(omega.max_abs()))
        p = 0
        power = constant_form(omega.dim, 1)
        while True:
            power = wedge(power, omega)
            if _form_is_zero(power, scale ** (p + 1)):
                return p
            p += 1
    p = 0
    power = omega
    while not power.is_zero():
        p += 1
        power = wedge(power, omega)
    return p


def skew_matrix(omega: ExtForm) -> list[list[Fraction]]:
    """Coefficient matrix A with A[i][j] the coefficient on alpha_i ^ alpha_j."""
    if omega.degree != 2:
        raise ValueError("expects a 2-form")
    n = omega.dim
    m = [[Fraction(0)] * n for _ in range(n)]
    for mask, c in omega.coeffs.items():
        i, j = indices_of(mask)
        m[i - 1][j - 1] = c
        m[j - 1][i - 1] = -c
    return m


def kernel2(omega: ExtForm) -> Subspace:
    """Kernel {x | i_x omega = 0} as a subspace; omega must be nonzero."""
    if omega.degree != 2:
        raise ValueError("kernel2 expects a 2-form")
    if omega.is_zero():
        raise ValueError("kernel of the zero 2-form is the whole space")
    if _is_float_form(omega):
        import numpy as np

        a = np.array([[float(x) for x in row] for row in skew_matrix(omega)])
        _, s, vt = np.linalg.svd(a)
        tol = FLOAT_RANK_RTOL * (s[0] if len(s) else 1.0)
        null = [vt[i] for i in range(len(s)) if s[i] <= tol]
        basis = [Vector(omega.dim, tuple(float(x) for x in v)) for v in null]
        return Subspace(omega.dim, tuple(basis))
    rows = skew_matrix(omega)
    basis = [Vector(omega.dim, tuple(v)) for v in linalg.nullspace(rows, omega.dim)]
    return Subspace(omega.dim, tuple(basis))


@dataclass
class LambdaMatrix:
    """Matrix of beta -> Omega ^ beta from degree k to degree k+2.

    Rows and columns are indexed by multi-index masks in lexicographic
    order; `matrix[r][c]` is exact rational (or float in float mode).
    """

    omega: ExtForm
    k: int
    rows_index: list[int]
    cols_index: list[int]
    matrix: list[list]

    @property
    def n(self) -> int:
        return self.omega.dim

    def _float_mode(self) -> bool:
        return _is_float_form(self.omega)

    def rank(self) -> int:
        if not self.rows_index or not self.cols_index:
            return 0
        if self._float_mode():
            import numpy as np

            a = np.array([[float(x) for x in row] for row in self.matrix])
            s = np.linalg.svd(a, compute_uv=False)
            return int((s > FLOAT_RANK_RTOL * s[0]).sum()) if len(s) else 0
        return linalg.rank(self.matrix, len(self.cols_index))

    def kernel(self) -> list[ExtForm]:
        """Basis of {beta | Omega ^ beta = 0} as k-forms."""
        if not self.cols_index:
            return []
        if not self.rows_index:
            vecs = [[Fraction(int(i == j)) for j in range(len(self.cols_index))]
                    for i in range(len(self.cols_index))]
        elif self._float_mode():
            import numpy as np

            a = np.array([[float(x) for x in row] for row in self.matrix])
            _, s, vt = np.linalg.svd(a)
            tol = FLOAT_RANK_RTOL * (s[0] if len(s) else 1.0)
            r = int((s > tol).sum()) if len(s) else 0
            vecs = [list(map(float, vt[i])) for i in range(r, len(self.cols_index))]
        else:
            vecs = linalg.nullspace(self.matrix, len(self.cols_index))
        return [self._col_form(v) for v in vecs]

    def _col_form(self, coords) -> ExtForm:
        return ExtForm.from_masks(
            self.n, self.k,
            {m: c for m, c in zip(self.cols_index, coords) if c != 0})

    def solve(self, kappa: ExtForm) -> ExtForm | None:
        """A beta with Omega ^ beta = kappa, or None if kappa is not in the image.

        Deterministic: pivots in lexicographic column order, free variables
        zero (minimal-support particular solution).
        """
        if kappa.dim != self.n or kappa.degree != self.k + 2:
            raise ValueError("right-hand side degree/dimension mismatch")
        rhs = [kappa.coeffs.get(m, Fraction(0)) for m in self.rows_index]
        if not self.cols_index:
            return None if any(x != 0 for x in rhs) else ExtForm.zero(self.n, self.k)
        if self._float_mode() or _is_float_form(kappa):
            import numpy as np

            a = np.array([[float(x) for x in row] for row in self.matrix])
            b = np.array([float(x) for x in rhs])
            sol, *_ = np.linalg.lstsq(a, b, rcond=None)
            resid = a @ sol - b
            scale = max(1.0, float(np.abs(b).max()) if b.size else 1.0)
            if float(np.abs(resid).max()) > 1e-9 * scale:
                return None
            return self._col_form(list(map(float, sol)))
        sol = linalg.solve(self.matrix, rhs)
        if sol is None:
            return None
        return self._col_form(sol)


def lambda_matrix(omega: ExtForm, k: int) -> LambdaMatrix:
    if omega.degree != 2:
        raise ValueError("expects a 2-form")
    n = omega.dim
    if k < 0 or k > n:
        raise ValueError(f"source degree {k} out of range 0..{n}")
    cols = list(masks_of_size(n, k))
    rows = list(masks_of_size(n, k + 2)) if k + 2 <= n else []
    row_pos = {m: i for i, m in enumerate(rows)}
    matrix = [[Fraction(0)] * len(cols) for _ in rows]
    for ci, cm in enumerate(cols):
        image = wedge(omega, ExtForm.from_masks(n, k, {cm: Fraction(1)}))
        for m, c in image.coeffs.items():
            matrix[row_pos[m]][ci] = c
    return LambdaMatrix(omega, k, rows, cols, matrix)


def solve_wedge(omega: ExtForm, kappa: ExtForm) -> tuple[ExtForm | None, list[ExtForm]]:
    """Particular solution of Omega ^ beta = kappa plus the full kernel basis."""
    if omega.degree != 2:
        raise ValueError("expects a 2-form")
    if kappa.degree < 2:
        raise ValueError("right-hand side must have degree >= 2")
    lam = lambda_matrix(omega, kappa.degree - 2)
    return lam.solve(kappa), lam.kernel()


# ---------------------------------------------------------------------------
# kernel main-part profiles (the emptiness/existence dichotomy for K_{l,s})

def _frame_two_form(omega: ExtForm, frame: AdaptedFrame) -> ExtForm:
    """omega rewritten over the frame's dual base (coefficients only)."""
    from .subspace import frame_coefficients

    return ExtForm.from_masks(omega.dim, omega.degree,
                              frame_coefficients(omega, frame))


@dataclass
class KernelProfile:
    """Main-part degree statistics of ker(lambda^l) for a fixed 2-form."""

    l: int
    p: int
    entries: list[tuple[int, int]]  # (s, count) over sampled kernel elements
    min_s: int | None
    kernel_dim: int


def kernel_main_profile(omega: ExtForm, l: int, n_combos: int = 20,
                        seed: int = 0) -> KernelProfile:
    """Main-part degrees of ker(lambda^l) elements w.r.t. C = kernel2(omega).

    In an adapted frame of (V, ker omega) the 2-form has no components on
    the complementary (beta) covectors, so wedging with it acts block by
    block over the beta multi-indices: the kernel is the direct sum, over
    alpha degrees s and beta index sets of size l - s, of the kernel of the
    wedge map restricted to the s-th layer of the annihilator block.  The
    alpha count of every term can then be read off directly; basis elements
    plus random rational combinations are sampled.  Raises if any sampled
    element violates the rank lower bound min_s >= p.
    """
    if omega.is_zero():
        raise ValueError("profile undefined for the zero form")
    n = omega.dim
    if l < 1 or l > n - 2:
        raise ValueError(f"degree {l} out of range 1..{n - 2}")
    p = rank2(omega)
    frame = adapted_cobase(kernel2(omega))
    omega_f = _frame_two_form(omega, frame)
    na = frame.k          # alpha block size (= 2p), low bit positions
    nb = n - na           # beta block size (= dim ker omega)
    alpha_mask = (1 << na) - 1
    assert all(m & ~alpha_mask == 0 for m in omega_f.coeffs)
    omega_a = ExtForm.from_masks(na, 2, dict(omega_f.coeffs))
    # per-layer kernels of the restricted wedge map
    from math import comb

    layer_null: dict[int, list] = {}
    kernel_dim = 0
    for s in range(max(0, l - nb), min(l, na) + 1):
        lam = lambda_matrix(omega_a, s)
        if not lam.cols_index:
            continue
        if lam.rows_index:
            null = linalg.nullspace(lam.matrix, len(lam.cols_index))
        else:
            null = [[Fraction(int(i == j)) for j in range(len(lam.cols_index))]
                    for i in range(len(lam.cols_index))]
        if null:
            layer_null[s] = null
            kernel_dim += len(null) * comb(nb, l - s)
    # blocks: one per (s, beta index set); each holds an independent copy of
    # the layer kernel, so degrees and combinations can be sampled per block
    blocks = [(s, bm) for s, null in sorted(layer_null.items())
              for bm in masks_of_size(nb, l - s)]
    hist: dict[int, int] = {}
    min_s = None

    def _record(s: int):
        nonlocal min_s
        hist[s] = hist.get(s, 0) + 1
        if min_s is None or s < min_s:
            min_s = s

    for s, _bm in blocks:
        for _ in layer_null[s]:
            _record(s)
    if blocks:
        rng = random.Random(seed)
        for _ in range(n_combos):
            combo_min = None
            while combo_min is None:
                for s, _bm in blocks:
                    null = layer_null[s]
                    weights = [Fraction(rng.randint(-3, 3)) for _ in null]
                    acc = [Fraction(0)] * len(null[0])
                    for w, vec in zip(weights, null):
                        if w:
                            for i, x in enumerate(vec):
                                acc[i] += w * x
                    if any(x != 0 for x in acc):
                        if combo_min is None or s < combo_min:
                            combo_min = s
            _record(combo_min)
    if min_s is not None and min_s < p:
        raise AssertionError(
            f"kernel element with main-part degree {min_s} < rank {p}")
    return KernelProfile(l=l, p=p, entries=sorted(hist.items()),
                         min_s=min_s, kernel_dim=kernel_dim)


def construct_kernel_element(omega: ExtForm, l: int, s: int) -> ExtForm:
    """A nonzero beta with Omega ^ beta = 0 and main-part degree exactly s.

    Take beta' != 0 in the s-th wedge layer of the annihilator algebra with
    Omega ^ beta' = 0, then wedge on l - s complementary covectors.  Requires
    p <= s <= min(2p, l) and l - s <= dim ker(omega).
    """
    if omega.degree != 2:
        raise ValueError("expects a 2-form")
    if omega.is_zero():
        raise ValueError("undefined for the zero form")
    p = rank2(omega)
    n = omega.dim
    if not (p <= s <= min(2 * p, l)):
        raise ValueError(f"main degree {s} outside [{p}, {min(2 * p, l)}]")
    ker = kernel2(omega)
    if l - s > ker.dim:
        raise ValueError(
            f"l - s = {l - s} exceeds the {ker.dim} available complementary covectors")
    frame = adapted_cobase(ker)
    alphas = frame.alpha_block  # 2p covectors spanning C^0
    # columns: s-subsets of the alpha block, wedged with omega
    from itertools import combinations

    from .algebra import wedge_all

    cols = list(combinations(range(len(alphas)), s))
    images = []
    col_forms = []
    for combo in cols:
        bform = wedge_all([alphas[i] for i in combo])
        col_forms.append(bform)
        images.append(wedge(omega, bform))
    row_masks = sorted({m for img in images for m in img.coeffs}, key=indices_of)
    row_pos = {m: i for i, m in enumerate(row_masks)}
    matrix = [[Fraction(0)] * len(cols) for _ in row_masks]
    for ci, img in enumerate(images):
        for m, c in img.coeffs.items():
            matrix[row_pos[m]][ci] = c
    if row_masks:
        null = linalg.nullspace(matrix, len(cols))
    else:
        null = [[Fraction(int(i == j)) for j in range(len(cols))] for i in range(len(cols))]
    if not null:
        raise AssertionError(f"no annihilator-layer kernel element at s={s}; "
                             "existence argument violated")
    coords = null[0]
    beta_prime = ExtForm.zero(n, s)
    for c, f in zip(coords, col_forms):
        if c != 0:
            beta_prime = beta_prime + f.scale(c)
    if l == s:
        return beta_prime
    tau = wedge_all(list(frame.beta_block[: l - s]))
    return wedge(tau, beta_prime)


def rank2_pair_kernel(omega1: ExtForm) -> list[ExtForm]:
    """Basis of the 2-forms omega2 with omega1 ^ omega2 = 0."""
    if omega1.degree != 2:
        raise ValueError("expects a 2-form")
    if omega1.is_zero():
        raise ValueError("undefined for the zero form")
    return lambda_matrix(omega1, 2).kernel()


@dataclass
class LambdaRow:
    k: int
    dim_domain: int
    dim_codomain: int
    rank: int
    dim_kernel: int
    dim_cokernel: int
    injective: bool
    surjective: bool


def lambda_report(omega: ExtForm) -> list[LambdaRow]:
    """Rank table of all lambda^k, 0 <= k <= n-2; empirical epimorphy evidence."""
    if omega.degree != 2:
        raise ValueError("expects a 2-form")
    if omega.is_zero():
        raise ValueError("undefined for the zero form")
    n = omega.dim
    rows = []
    for k in range(0, n - 1):
        lam = lambda_matrix(omega, k)
        dom = len(lam.cols_index)
        cod = len(lam.rows_index)
        r = lam.rank()
        rows.append(LambdaRow(
            k=k, dim_domain=dom, dim_codomain=cod, rank=r,
            dim_kernel=dom - r, dim_cokernel=cod - r,
            injective=(r == dom), surjective=(r == cod)))
    return rows
