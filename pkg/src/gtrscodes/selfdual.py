"""Hermitian self-dual single-twist codes over GF(q^2).

Two constructive families of locator sets, both cosets of size q:

  class I  : a_l * w + GF(q)          (w the field's primitive element)
  class II : a_l + w^m * GF(q),  1 <= m <= q

For each, a canonical multiplier vector is produced by solving norm
equations, and the admissible twist coefficients eta are the roots of an
explicit equation over GF(q^2); every admissible eta yields a Hermitian
self-dual [n, n/2] code that is MDS, or NMDS exactly when a*eta + 2 = 0
(a the locator sum).
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .codes import LinearCode
from .field import FieldError, GaloisField
from .gtrs import (GTRSError, GTRSParams, alpha_sum, generator_matrix,
                   plus_gtrs, u_vector)
from .linalg import Matrix


class ConstructionError(ValueError):
    pass


# ---------------------------------------------------------------------------
# Self-duality criterion for single-twist codes
# ---------------------------------------------------------------------------

def check_self_dual_criterion(params: GTRSParams) -> bool:
    """Exact Hermitian self-duality test for a single-twist code, run along
    two independent routes that must agree:

    (i)  Gram route: G conj(G)^T = 0 with n = 2k;
    (ii) polynomial route: for every basis polynomial f, the point values
         v_i^{q+1} f(alpha_i)^q / u_i are interpolated by some g of the
         constrained dual shape
         g = sum_{i<k-1} g_i x^i + g_{k-1} (x^{k-1} - eta/(1+a*eta) x^k).
    """
    field = params.field
    q = field._require_square()
    if not params.twist.is_plus():
        raise GTRSError("criterion applies to the single-twist family")
    n, k = params.n, params.k
    if n != 2 * k:
        raise GTRSError("n odd" if n % 2 else "criterion requires n = 2k")
    eta = params.twist.eta[0]
    a = alpha_sum(field, params.alpha)
    denom = field.add(1, field.mul(a, eta))
    if denom == 0:
        raise GTRSError("excluded eta: 1 + a*eta = 0")

    gen = generator_matrix(params)
    gram_ok = gen.mul(gen.conj_transpose()).is_zero()

    # polynomial route
    c = field.div(eta, denom)
    u = u_vector(field, params.alpha)
    rows = []
    for ai in params.alpha:
        row = [field.pow(ai, j) if j else 1 for j in range(k - 1)]
        top = field.sub(field.pow(ai, k - 1), field.mul(c, field.pow(ai, k)))
        row.append(top)
        rows.append(row)
    poly_ok = True
    for basis in range(k):
        f = [0] * k
        f[basis] = 1
        target = []
        for i, (ai, vi) in enumerate(zip(params.alpha, params.v)):
            # f(alpha_i) for the twisted expansion of the basis vector
            val = field.pow(ai, basis) if basis else 1
            if basis == k - 1:
                val = field.add(val, field.mul(eta, field.pow(ai, k)))
            w = field.mul(field.pow(vi, q + 1), field.pow(val, q))
            target.append(field.div(w, u[i]))
        aug = Matrix(field, [r + [t] for r, t in zip(rows, target)], cols=k + 1)
        base = Matrix(field, rows, cols=k)
        if aug.rank() != base.rank():
            poly_ok = False
            break
    if gram_ok != poly_ok:
        raise RuntimeError(
            "internal invariant violated: Gram and polynomial self-duality "
            "checks disagree")
    return gram_ok


def zeta_roots(field: GaloisField) -> list[int]:
    """The q distinct nonzero roots of z^q + z^(q-1) + 1 over GF(q^2)."""
    q = field._require_square()
    coeffs = [0] * (q + 1)
    coeffs[0] = 1
    coeffs[q - 1] = 1
    coeffs[q] = 1
    roots = sorted(field.poly_roots(coeffs))
    if len(roots) != q or 0 in roots:
        raise RuntimeError(
            f"expected {q} distinct nonzero roots, found {len(roots)}")
    return roots


def classify_eta(field: GaloisField, a: int, eta: int) -> str:
    """NMDS exactly when a != 0 and a*eta + 2 = 0; MDS otherwise."""
    two = field.scalar(2)
    if a != 0 and field.add(field.mul(a, eta), two) == 0:
        return "NMDS"
    return "MDS"


# ---------------------------------------------------------------------------
# Construction results
# ---------------------------------------------------------------------------

@dataclass
class ConstructionResult:
    construction: str                 # "I" or "II"
    field: GaloisField
    a_l: int
    m: int | None
    x_subset: tuple[int, ...]
    alpha: tuple[int, ...]
    v: tuple[int, ...]
    a: int                            # locator sum
    eta_list: tuple[tuple[int, str], ...]   # (eta, "MDS"|"NMDS")
    filtered: int = 0                 # eta candidates dropped by 1 + a*eta = 0

    @property
    def n(self) -> int:
        return len(self.alpha)

    @property
    def k(self) -> int:
        return len(self.alpha) // 2

    def params(self, eta: int) -> GTRSParams:
        return plus_gtrs(self.field, self.alpha, self.v, eta, self.k)

    def codes(self):
        for eta, label in self.eta_list:
            yield eta, label, LinearCode(self.field, generator_matrix(self.params(eta)))

    def to_dict(self) -> dict:
        f = self.field
        return {
            "class": self.construction,
            "q": f.q,
            "n": self.n,
            "a_l": f.coeffs(self.a_l),
            "m": self.m,
            "x_subset": [f.coeffs(x) for x in self.x_subset],
            "alpha": [f.coeffs(x) for x in self.alpha],
            "v": [f.coeffs(x) for x in self.v],
            "a": f.coeffs(self.a),
            "eta_list": [{"eta": f.coeffs(e), "class": lbl}
                         for e, lbl in self.eta_list],
        }


def _validate_inputs(field: GaloisField, a_l: int, x_subset) -> tuple[int, int, int]:
    q = field._require_square()
    field.check(a_l)
    if not field.in_subfield(a_l):
        raise ConstructionError("coset label must lie in the subfield")
    x = [field.check(xi) for xi in x_subset]
    if len(set(x)) != len(x):
        raise ConstructionError("x subset entries must be distinct")
    if not all(field.in_subfield(xi) for xi in x):
        raise ConstructionError("x subset entries must lie in the subfield")
    n = len(x)
    if n < 2 or n % 2:
        raise ConstructionError("length must be even and >= 2")
    if n > q:
        raise ConstructionError(f"length {n} exceeds coset size q = {q}")
    return q, n, n // 2


def _finish(field: GaloisField, construction: str, a_l: int, m, x, alpha, v,
            a: int, candidates: list[int]) -> ConstructionResult:
    kept = []
    filtered = 0
    for eta in candidates:
        if field.add(1, field.mul(a, eta)) == 0:
            filtered += 1
            continue
        kept.append(eta)
    if not kept:
        raise ConstructionError("no admissible eta candidates for this input")
    eta_list = []
    for eta in kept:
        params = plus_gtrs(field, alpha, v, eta, len(alpha) // 2)
        if not check_self_dual_criterion(params):
            raise RuntimeError("constructed code failed the self-duality criterion")
        eta_list.append((eta, classify_eta(field, a, eta)))
    return ConstructionResult(construction, field, a_l, m, tuple(x),
                              tuple(alpha), tuple(v), a, tuple(eta_list),
                              filtered)


def construct_class1(field: GaloisField, a_l: int, x_subset) -> ConstructionResult:
    """Locators a_l * w + x_i with x_i distinct subfield elements, n = 2k <= q.
    Fails when the locator sum is zero in characteristic 2."""
    q, n, k = _validate_inputs(field, a_l, x_subset)
    x = list(x_subset)
    w = field.generator
    alpha = [field.add(field.mul(a_l, w), xi) for xi in x]
    a = alpha_sum(field, alpha)
    if a == 0 and field.p == 2:
        raise ConstructionError(
            "locator sum zero in characteristic 2 is excluded")
    u = u_vector(field, alpha)
    for ui in u:
        if not field.in_subfield(ui):
            raise RuntimeError("expected multiplier data in the subfield")
    v = [field.solve_norm(ui) for ui in u]

    if a == 0:
        candidates = field.power_roots(q - 1, field.neg(1))
    else:
        sum_x = alpha_sum(field, x)
        k_scalar = field.scalar(k)
        big_a = field.add(field.mul(field.mul(k_scalar, field.trace(w)), a_l), sum_x)
        if big_a != 0:
            inv_a = field.inv(big_a)
            candidates = [field.mul(z, inv_a) for z in zeta_roots(field)]
        elif field.p != 2:
            candidates = field.power_roots(q - 1, field.neg(1))
        else:
            candidates = []
    return _finish(field, "I", a_l, None, x, alpha, v, a, candidates)


def construct_class2(field: GaloisField, a_l: int, m: int, x_subset) -> ConstructionResult:
    """Locators a_l + w^m * x_i, 1 <= m <= q, with x_i distinct subfield
    elements, n = 2k <= q."""
    q, n, k = _validate_inputs(field, a_l, x_subset)
    if not (1 <= m <= q):
        raise ConstructionError(f"m must lie in [1, {q}]")
    x = list(x_subset)
    beta = field.pow(field.generator, m)
    alpha = [field.add(a_l, field.mul(beta, xi)) for xi in x]
    if len(set(alpha)) != len(alpha):
        raise ConstructionError("degenerate coset: repeated locators")
    a = alpha_sum(field, alpha)
    if a == 0 and field.p == 2:
        raise ConstructionError(
            "locator sum zero in characteristic 2 is excluded")
    u = u_vector(field, alpha)
    lam = field.pow(beta, n - 1)
    scaled = [field.mul(lam, ui) for ui in u]
    for si in scaled:
        if si == 0 or not field.in_subfield(si):
            raise RuntimeError("expected scaled multiplier data in the subfield")
    v = [field.solve_norm(si) for si in scaled]

    beta_q1 = field.pow(beta, q - 1)
    rhs = field.neg(field.inv(beta_q1))   # eta^(q-1) = -beta^-(q-1)
    if a == 0:
        candidates = field.power_roots(q - 1, rhs)
    else:
        k_scalar = field.scalar(k)
        num = field.add(field.mul(field.mul(k_scalar, field.sub(1, beta_q1)), a_l),
                        field.mul(a, beta_q1))
        big_b = field.div(num, beta_q1)
        if big_b != 0:
            inv_b = field.inv(big_b)
            candidates = [field.mul(z, inv_b) for z in zeta_roots(field)]
        else:
            candidates = field.power_roots(q - 1, rhs)
    return _finish(field, "II", a_l, m, x, alpha, v, a, candidates)


# ---------------------------------------------------------------------------
# Sweeps
# ---------------------------------------------------------------------------

def canonical_x_subsets(field: GaloisField, n: int) -> list[tuple[int, ...]]:
    """Deterministic x subsets per length: the first n subfield elements in
    canonical order, and the first n nonzero ones (the latter reaches the
    zero-locator-sum family)."""
    sub = field.subfield_elements()
    out = [tuple(sub[:n])]
    if n < len(sub):
        out.append(tuple(sub[1:n + 1]))
    return out


def sweep_constructions(field: GaloisField, n_values=None,
                        classes=("I", "II")) -> list[ConstructionResult]:
    """Enumerate both families over all coset labels (and direction exponents
    for class II) with canonical x subsets; deduplicate by the generator row
    spaces; deterministic output order."""
    q = field._require_square()
    if q > 16:
        raise ConstructionError("sweep capped at q <= 16")
    if n_values is None:
        n_values = [n for n in range(2, min(q, 8) + 1, 2)]
    sub = field.subfield_elements()
    results = []
    seen = set()
    for n in sorted(n_values):
        if n % 2 or n < 2 or n > q:
            raise ConstructionError(f"invalid sweep length {n}")
        for x in canonical_x_subsets(field, n):
            for cls_name in classes:
                if cls_name == "I":
                    configs = [(a_l, None) for a_l in sub]
                elif cls_name == "II":
                    configs = [(a_l, m) for a_l in sub for m in range(1, q + 1)]
                else:
                    raise ConstructionError(f"unknown class {cls_name!r}")
                for a_l, m in configs:
                    try:
                        if cls_name == "I":
                            res = construct_class1(field, a_l, x)
                        else:
                            res = construct_class2(field, a_l, m, x)
                    except ConstructionError:
                        continue
                    key = tuple(sorted(
                        generator_matrix(res.params(eta)).row_space_key()
                        for eta, _ in res.eta_list))
                    if key in seen:
                        continue
                    seen.add(key)
                    results.append(res)
    return results
