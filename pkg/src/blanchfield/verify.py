"""Executable property checks for presented pairings.

Each check runs seeded random trials and reports pass/fail with a
replayable counterexample (entry grammar plus vectors in the CLI's
comma-separated Laurent format).  The CLI ``verify`` command prints the
reports; the test suite asserts them.
"""

from __future__ import annotations

import cmath
import dataclasses
import itertools
import random
from typing import Callable, Sequence

from .catalog import CatalogEntry, _entry, render_entry
from .invariants import (IndeterminateSignatureError, levine_tristram_signature,
                         mk_signature)
from .laurent import LaurentPoly
from .matrix import LAURENT, ZZ, Matrix
from .mkform import MKForm, mk_matrix
from .pairing import (DualSurfaceData, DualSurfaceEvaluator, FibredData,
                      PresentedPairing, SeifertData, as_laurent_vector,
                      basis_vector, from_dual_surface, from_fibred,
                      from_seifert, kearton_value)
from .qmod import canonical_class
from .ratfunc import RationalFunction


@dataclasses.dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""
    counterexample: str | None = None

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        out = f"{self.name}: {status}"
        if self.detail:
            out += f" ({self.detail})"
        return out


def random_laurent(rng: random.Random, max_exp: int = 2,
                   coeff_bound: int = 3) -> LaurentPoly:
    val = rng.randint(-max_exp, max_exp - 1)
    width = rng.randint(1, 2)
    coeffs = [rng.randint(-coeff_bound, coeff_bound) for _ in range(width)]
    return LaurentPoly(val, coeffs)


def random_vector(rng: random.Random, n: int) -> tuple[LaurentPoly, ...]:
    return tuple(random_laurent(rng) for _ in range(n))


def format_vector(v: Sequence[LaurentPoly]) -> str:
    return ", ".join(str(e) for e in v)


def seifert_entry(data: SeifertData, name: str = "counterexample") -> CatalogEntry:
    return _entry(name, "seifert", A=[list(r) for r in data.matrix.entries] or [])


def _counterexample(entry: CatalogEntry, **vectors) -> str:
    lines = [render_entry(entry).rstrip()]
    for key, vec in vectors.items():
        lines.append(f"{key}: {format_vector(vec)}")
    return "\n".join(lines) + "\n"


def check_well_defined(pairing: PresentedPairing, entry: CatalogEntry,
                       rng: random.Random, trials: int) -> CheckResult:
    """Pairing values are unchanged by shifts along the presentation, both slots."""
    n = pairing.size
    for _ in range(trials):
        if n == 0:
            break
        v, w, x = (random_vector(rng, n) for _ in range(3))
        shift = pairing.presentation.mul_vec(x)
        base = pairing.value(v, w)
        v2 = tuple(a + b for a, b in zip(v, shift))
        w2 = tuple(a + b for a, b in zip(w, shift))
        if pairing.value(v2, w) != base or pairing.value(v, w2) != base:
            return CheckResult("well-definedness", False,
                               "value moved under a presentation shift",
                               _counterexample(entry, v=v, w=w, x=x))
    return CheckResult("well-definedness", True, f"{trials} trials")


def check_sesquilinear(pairing: PresentedPairing, entry: CatalogEntry,
                       rng: random.Random, trials: int) -> CheckResult:
    """value(p v, q w) = p * value(v, w) * conj(q) as classes."""
    n = pairing.size
    for _ in range(trials):
        if n == 0:
            break
        v, w = random_vector(rng, n), random_vector(rng, n)
        p, q = random_laurent(rng), random_laurent(rng)
        lhs = pairing.value(tuple(p * e for e in v), tuple(q * e for e in w))
        rhs = canonical_class(pairing.value(v, w).representative()
                              * RationalFunction(p * q.conjugate()))
        if lhs != rhs:
            return CheckResult("sesquilinearity", False,
                               f"fails for p={p}, q={q}",
                               _counterexample(entry, v=v, w=w, p=(p,), q=(q,)))
    return CheckResult("sesquilinearity", True, f"{trials} trials")


def check_hermitian(pairing: PresentedPairing, entry: CatalogEntry,
                    rng: random.Random, trials: int) -> CheckResult:
    """value(v, w) equals the conjugate class of value(w, v)."""
    n = pairing.size
    for _ in range(trials):
        if n == 0:
            break
        v, w = random_vector(rng, n), random_vector(rng, n)
        if pairing.value(v, w) != pairing.value(w, v).conjugate():
            return CheckResult("hermitian", False, "conjugate symmetry fails",
                               _counterexample(entry, v=v, w=w))
    return CheckResult("hermitian", True, f"{trials} trials")


def check_nonsingular(pairing: PresentedPairing, entry: CatalogEntry,
                      rng: random.Random, trials: int) -> CheckResult:
    """value(e_i, w) = 0 for all i exactly when w is zero in the module."""
    n = pairing.size
    basis = [basis_vector(n, i) for i in range(n)]
    for trial in range(trials):
        if n == 0:
            break
        if trial % 3 == 2:
            # exercise the zero side with an element of the image
            x = random_vector(rng, n)
            w = pairing.presentation.mul_vec(x)
        else:
            w = random_vector(rng, n)
        all_zero = all(pairing.value(e, w).is_zero() for e in basis)
        if all_zero != pairing.is_zero_element(w):
            return CheckResult("nonsingularity", False,
                               f"annihilated-by-basis {all_zero} but "
                               f"zero-in-module {not all_zero}",
                               _counterexample(entry, w=w))
    return CheckResult("nonsingularity", True, f"{trials} trials")


def check_consistency(data: SeifertData, entry: CatalogEntry,
                      rng: random.Random, trials: int) -> CheckResult:
    """Dual-surface formula with (A, A^T, A - A^T) matches the Seifert formula.

    The dual-surface evaluator applied to (v, w) must equal the class of
    (Av)^T (t-1)(A - tA^T)^{-1} conj(Aw).
    """
    n = data.size
    if n == 0:
        return CheckResult("consistency", True, "vacuous for genus 0")
    dual = from_dual_surface(DualSurfaceData(
        data.matrix, data.matrix.transpose(),
        data.matrix - data.matrix.transpose()))
    seifert = from_seifert(data)
    a = data.matrix.to_ring(LAURENT)
    for _ in range(trials):
        v, w = random_vector(rng, n), random_vector(rng, n)
        lhs = dual.value(v, w)
        rhs = seifert.value(a.mul_vec(v), a.mul_vec(w))
        if lhs != rhs:
            return CheckResult("consistency", False,
                               "dual-surface and Seifert formulas disagree",
                               _counterexample(entry, v=v, w=w))
    return CheckResult("consistency", True, f"{trials} trials")


def kearton_witness(data: SeifertData, bound: int = 2) -> tuple[
        tuple[int, ...], int] | None:
    """Search for integer x and basis index j making the classical formula
    v^T (t-1)(tA - A^T)^{-1} conj(w) change by a non-Laurent amount under
    v -> v + (tA - A^T) x with w = e_j.

    The change equals ((tA - A^T) x)^T (t-1)(tA - A^T)^{-1} conj(e_j), so
    the search does not depend on v.  Returns None when no witness exists
    in the box (e.g. for matrices with trivial Alexander module).
    """
    n = data.size
    if n == 0:
        return None
    a = data.matrix.to_ring(LAURENT)
    pres = LaurentPoly(1, (1,)) * a - data.matrix.transpose().to_ring(LAURENT)
    for x in itertools.product(range(-bound, bound + 1), repeat=n):
        if not any(x):
            continue
        shifted = pres.mul_vec(as_laurent_vector(x))
        for j in range(n):
            diff = kearton_value(data, shifted, basis_vector(n, j))
            if not diff.is_laurent():
                return x, j
    return None


def check_kearton(data: SeifertData, entry: CatalogEntry,
                  bound: int = 2) -> CheckResult:
    witness = kearton_witness(data, bound)
    if witness is not None:
        x, j = witness
        return CheckResult("kearton-ill-defined", True,
                           f"WITNESS FOUND x={list(x)}, w=e{j + 1}")
    return CheckResult("kearton-ill-defined", True,
                       f"no witness with |x| <= {bound} "
                       "(module may be trivial)")


def check_mk(data: SeifertData, entry: CatalogEntry, rng: random.Random,
             z_samples: int = 8) -> CheckResult:
    """M_K entries lie in the Laurent ring, M_K is hermitian, its
    determinant matches det(tA - A^T) up to a unit, and its signatures
    agree with the Levine-Tristram signatures at sampled points."""
    try:
        form = mk_matrix(data)
    except (ArithmeticError, ValueError) as exc:
        return CheckResult("mk-form", False, f"assembly failed: {exc}",
                           _counterexample(entry))
    pres_det = from_seifert(data).presentation.det()
    if not form.determinant().is_unit_multiple_of(pres_det):
        return CheckResult("mk-form", False,
                           "det(M_K) is not a unit multiple of det(tA - A^T)",
                           _counterexample(entry))
    if data.size:
        done = 0
        attempts = 0
        while done < z_samples and attempts < 40 * z_samples:
            attempts += 1
            theta = rng.uniform(0.05, cmath.pi - 0.05)
            z = cmath.exp(1j * theta)
            try:
                lt = levine_tristram_signature(data, z)
                mk = mk_signature(form, z)
            except IndeterminateSignatureError:
                continue
            if lt != mk:
                return CheckResult(
                    "mk-form", False,
                    f"sign(M_K(z)) = {mk} but Levine-Tristram = {lt} at theta={theta:.4f}",
                    _counterexample(entry))
            done += 1
        if done < z_samples:
            return CheckResult("mk-form", False,
                               "could not find enough determinate sample points",
                               _counterexample(entry))
    return CheckResult("mk-form", True,
                       f"entries in Lambda, hermitian, det matches, "
                       f"{z_samples} signature samples")


def check_dual_sesquilinear(dual: DualSurfaceEvaluator, entry: CatalogEntry,
                            rng: random.Random, trials: int) -> CheckResult:
    """The closed-form evaluator is sesquilinear as a map to Q/Lambda."""
    n = dual.size
    for _ in range(trials):
        if n == 0:
            break
        v, w = random_vector(rng, n), random_vector(rng, n)
        p, q = random_laurent(rng), random_laurent(rng)
        lhs = dual.value(tuple(p * e for e in v), tuple(q * e for e in w))
        rhs = canonical_class(dual.value(v, w).representative()
                              * RationalFunction(p * q.conjugate()))
        if lhs != rhs:
            return CheckResult("sesquilinearity", False, f"fails for p={p}, q={q}",
                               _counterexample(entry, v=v, w=w))
        zero = tuple(LaurentPoly.zero() for _ in range(n))
        if not dual.value(zero, w).is_zero():
            return CheckResult("sesquilinearity", False, "nonzero at v = 0",
                               _counterexample(entry, w=w))
    return CheckResult("sesquilinearity", True, f"{trials} trials")


def check_fibred_specialization(data: FibredData, entry: CatalogEntry) -> CheckResult:
    """Dual-surface evaluator with (P, id, J) matches the fibred pairing
    on all generator pairs."""
    n = data.size
    pairing = from_fibred(data)
    dual = from_dual_surface(DualSurfaceData(
        data.monodromy, Matrix.identity(ZZ, n), data.intersection))
    for i in range(n):
        for j in range(n):
            ei, ej = basis_vector(n, i), basis_vector(n, j)
            if dual.value(ei, ej) != pairing.value(ei, ej):
                return CheckResult("fibred-specialization", False,
                                   f"generator pair ({i + 1},{j + 1}) differs",
                                   _counterexample(entry))
    return CheckResult("fibred-specialization", True, f"{n * n} generator pairs")


def verify_entry(entry: CatalogEntry, trials: int = 25,
                 seed: int = 0) -> list[CheckResult]:
    """Run the full property suite appropriate to the entry's kind."""
    rng = random.Random(seed)
    data = entry.data()
    results: list[CheckResult] = []
    if isinstance(data, SeifertData):
        pairing = from_seifert(data)
        results.append(check_well_defined(pairing, entry, rng, trials))
        results.append(check_sesquilinear(pairing, entry, rng, trials))
        results.append(check_hermitian(pairing, entry, rng, trials))
        results.append(check_nonsingular(pairing, entry, rng, trials))
        results.append(check_consistency(data, entry, rng, trials))
        results.append(check_mk(data, entry, rng))
        results.append(check_kearton(data, entry))
    elif isinstance(data, FibredData):
        pairing = from_fibred(data)
        results.append(check_well_defined(pairing, entry, rng, trials))
        results.append(check_sesquilinear(pairing, entry, rng, trials))
        results.append(check_hermitian(pairing, entry, rng, trials))
        results.append(check_nonsingular(pairing, entry, rng, trials))
        results.append(check_fibred_specialization(data, entry))
    else:
        dual = from_dual_surface(data)
        results.append(check_dual_sesquilinear(dual, entry, rng, trials))
    return results


def verify_random(genus: int, count: int, trials: int = 5,
                  seed: int = 0, coeff_bound: int = 3) -> list[CheckResult]:
    """Run the Seifert suite over seeded random matrices.

    Stops at the first failing instance so the counterexample stays
    minimal; otherwise aggregates one result line per property.
    """
    from .catalog import random_seifert

    names = ["well-definedness", "sesquilinearity", "hermitian",
             "nonsingularity", "consistency", "mk-form", "kearton-ill-defined"]
    for i in range(count):
        entry_seed = seed + i
        data = random_seifert(genus, coeff_bound, entry_seed)
        entry = seifert_entry(data, name=f"random-{genus}-{entry_seed}")
        for res in verify_entry(entry, trials=trials, seed=entry_seed):
            if not res.passed:
                return [res]
    return [CheckResult(name, True, f"{count} random instances, genus {genus}")
            for name in names]
