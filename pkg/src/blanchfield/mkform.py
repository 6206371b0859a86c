"""The hermitian matrix M_K(t) presenting the Blanchfield pairing.

After an integer change of basis making A - A^T the standard symplectic
form (0 id; -id 0), the matrix

    M_K(t) = diag((1-t^-1)^-1 id, id) A diag(id, (1-t) id)
           + diag(id, (1-t^-1) id) A^T diag((1-t)^-1 id, id)

has all entries in Z[t,t^-1], is hermitian, and presents the Alexander
module with pairing (v, w) -> -v^T M_K(t^-1)^{-1} conj(w).  Its
signatures at unit-circle points equal the Levine-Tristram signatures.
"""

from __future__ import annotations

from typing import Sequence

from .laurent import LaurentPoly, T
from .matrix import LAURENT, QT, ZZ, Matrix
from .pairing import (InvariantViolation, PresentedPairing, SeifertData,
                      _pairing_from_inverse, as_laurent_vector)
from .qmod import QModLambda
from .ratfunc import RationalFunction


class MKAssemblyError(ArithmeticError):
    """The assembled matrix failed a structural requirement."""


def symplectic_normalize(skew: Matrix) -> Matrix:
    """Unimodular integer P with P * skew * P^T = (0 id; -id 0).

    Works by integer congruence moves: for each new basis pair, gcd
    sweeps on the current row concentrate a +-1 pairing next to the
    pivot, the complement is then cleared, and a final permutation
    groups the two halves of the symplectic basis.
    """
    if skew.ring is not ZZ:
        raise ValueError("symplectic normalization needs an integer matrix")
    n = skew.rows
    if not skew.is_square() or n % 2:
        raise ValueError("skew form must be square of even size")
    if skew.transpose() != -skew:
        raise ValueError("matrix is not skew-symmetric")
    m = [[skew[i, j] for j in range(n)] for i in range(n)]
    p = [[1 if i == j else 0 for j in range(n)] for i in range(n)]

    def add_congruence(dst: int, src: int, c: int) -> None:
        # basis move e_dst += c * e_src, i.e. M -> E M E^T with E = I + c E_{dst,src}
        for j in range(n):
            m[dst][j] += c * m[src][j]
        for i in range(n):
            m[i][dst] += c * m[i][src]
        for j in range(n):
            p[dst][j] += c * p[src][j]

    def swap_congruence(a: int, b: int) -> None:
        m[a], m[b] = m[b], m[a]
        for r in m:
            r[a], r[b] = r[b], r[a]
        p[a], p[b] = p[b], p[a]

    def negate_congruence(a: int) -> None:
        m[a] = [-x for x in m[a]]
        for r in m:
            r[a] = -r[a]
        p[a] = [-x for x in p[a]]

    for i in range(0, n, 2):
        while True:
            live = [j for j in range(i + 1, n) if m[i][j]]
            if not live:
                raise ValueError("skew form is singular")
            j0 = min(live, key=lambda j: abs(m[i][j]))
            if j0 != i + 1:
                swap_congruence(j0, i + 1)
            pivot = m[i][i + 1]
            clean = True
            for j in range(i + 2, n):
                q = m[i][j] // pivot
                if q:
                    add_congruence(j, i + 1, -q)
                if m[i][j]:
                    clean = False
            if clean:
                break
        if m[i][i + 1] < 0:
            negate_congruence(i + 1)
        if m[i][i + 1] != 1:
            raise ValueError("skew form is not unimodular")
        for j in range(i + 2, n):
            c = m[i + 1][j]
            if c:
                add_congruence(j, i, c)

    order = list(range(0, n, 2)) + list(range(1, n, 2))
    result = Matrix.from_int_rows(ZZ, [p[r] for r in order])
    std = standard_symplectic(n // 2)
    if result * skew * result.transpose() != std:
        raise AssertionError("symplectic normalization postcondition failed")
    return result


def standard_symplectic(k: int) -> Matrix:
    """The block matrix (0 id_k; -id_k 0)."""
    n = 2 * k
    rows = [[0] * n for _ in range(n)]
    for i in range(k):
        rows[i][k + i] = 1
        rows[k + i][i] = -1
    return Matrix.from_int_rows(ZZ, rows)


class MKForm:
    """M_K(t) together with the congruence used to standardize A - A^T."""

    def __init__(self, mk: Matrix, congruence: Matrix, source: SeifertData):
        self.mk = mk
        self.congruence = congruence
        self.source = source

    @property
    def size(self) -> int:
        return self.mk.rows

    @property
    def half_size(self) -> int:
        return self.mk.rows // 2

    def evaluate(self, z: complex) -> list[list[complex]]:
        """Numerical matrix M_K(z)."""
        return [[e.evaluate(z) for e in row] for row in self.mk.entries]

    def determinant(self) -> LaurentPoly:
        return self.mk.det()

    def to_presented_pairing(self) -> PresentedPairing:
        """Module Lambda^2k/M_K(t) with pairing -v^T M_K(t^-1)^{-1} conj(w)."""
        mc = self.mk.conjugate()
        numer, denom = _pairing_from_inverse(mc, None, None)
        return PresentedPairing(self.mk, -numer, denom, "mk")

    def pairing_value(self, v: Sequence, w: Sequence) -> QModLambda:
        return self.to_presented_pairing().value(v, w)

    def __repr__(self) -> str:
        return f"<MKForm 2k={self.size}>"


def mk_matrix(data: SeifertData) -> MKForm:
    """Assemble M_K(t) for a Seifert matrix, normalizing A - A^T first.

    The two-term sum is computed over Q(t) and each entry is checked to
    land in Z[t,t^-1]; hermitianness and a nonzero determinant are
    verified as well.  Failures indicate invalid input (or a bug) and
    raise MKAssemblyError with the offending entry.
    """
    n = data.size
    k = n // 2
    skew = data.matrix - data.matrix.transpose()
    congruence = symplectic_normalize(skew)
    a_std = congruence * data.matrix * congruence.transpose()

    a_qt = a_std.to_ring(QT)
    at_qt = a_std.transpose().to_ring(QT)
    one = RationalFunction.one()
    # (1 - t^-1)^-1 = t/(t-1) and (1 - t)^-1 = -1/(t-1)
    s_plus = RationalFunction(T, T - 1)
    s_minus = RationalFunction(LaurentPoly.const(-1), T - 1)
    one_minus_t = RationalFunction(1 - T)
    one_minus_tinv = RationalFunction(LaurentPoly.parse("1 - t^-1"))

    d1 = _block_diag_scalars(s_plus, one, k)
    d2 = _block_diag_scalars(one, one_minus_t, k)
    d3 = _block_diag_scalars(one, one_minus_tinv, k)
    d4 = _block_diag_scalars(s_minus, one, k)
    assembled = d1 * a_qt * d2 + d3 * at_qt * d4

    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            entry = assembled[i, j]
            if not entry.is_laurent():
                raise MKAssemblyError(
                    f"entry ({i},{j}) of M_K lies outside Z[t,t^-1]: {entry}")
            row.append(entry.to_laurent())
        rows.append(row)
    mk = Matrix(LAURENT, rows, cols=n)
    if mk.conjugate_transpose() != mk:
        raise MKAssemblyError("assembled M_K is not hermitian")
    if n and not mk.det():
        raise MKAssemblyError("assembled M_K is singular")
    return MKForm(mk, congruence, data)


def _block_diag_scalars(top: RationalFunction, bottom: RationalFunction,
                        k: int) -> Matrix:
    n = 2 * k
    rows = [[RationalFunction.zero()] * n for _ in range(n)]
    for i in range(k):
        rows[i][i] = top
        rows[k + i][k + i] = bottom
    return Matrix(QT, rows, cols=n)


def mk_pairing_value(form: MKForm, v: Sequence, w: Sequence) -> QModLambda:
    """Class of -v^T (M_K(t^-1))^{-1} conj(w) in Q/Lambda."""
    return form.pairing_value(as_laurent_vector(v), as_laurent_vector(w))
