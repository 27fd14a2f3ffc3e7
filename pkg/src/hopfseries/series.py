"""Truncated formal power series over pluggable coefficient algebras.

Two shapes of series appear: invertible ones, 1 + c_1 x + c_2 x^2 + ...,
which form a group under the coefficient-convolution product, and
diffeomorphisms, x + c_1 x^2 + c_2 x^3 + ..., composed by substitution.
Everything is truncated at a fixed order N, i.e. computed modulo x^{N+1};
intermediate products truncate eagerly.

A coefficient algebra only has to provide zero, one, an equality test and a
commutativity flag; the coefficient values themselves carry +, -, * and
scalar multiplication by rationals.  Provided instances: exact rationals,
dense square matrices over rationals, and free-algebra polynomials (formal
non-commuting coefficients).
"""

from __future__ import annotations

from fractions import Fraction

from . import diffeo
from .freealg import NCPoly


class Matrix:
    """Immutable dense square matrix over exact rationals."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        rows = tuple(tuple(Fraction(v) for v in row) for row in rows)
        d = len(rows)
        if any(len(row) != d for row in rows):
            raise ValueError("matrix must be square")
        self.rows = rows

    @property
    def dim(self) -> int:
        return len(self.rows)

    @classmethod
    def zero(cls, d: int) -> "Matrix":
        return cls([[0] * d for _ in range(d)])

    @classmethod
    def identity(cls, d: int) -> "Matrix":
        return cls([[1 if i == j else 0 for j in range(d)] for i in range(d)])

    @classmethod
    def elementary(cls, d: int, i: int, j: int) -> "Matrix":
        """Matrix unit E_{ij} (1-based indices)."""
        return cls([[1 if (r, c) == (i - 1, j - 1) else 0 for c in range(d)] for r in range(d)])

    def __add__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return Matrix([[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)])

    def __sub__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return Matrix([[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)])

    def __neg__(self):
        return Matrix([[-a for a in row] for row in self.rows])

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Matrix([[a * other for a in row] for row in self.rows])
        if not isinstance(other, Matrix):
            return NotImplemented
        d = self.dim
        return Matrix(
            [[sum(self.rows[i][k] * other.rows[k][j] for k in range(d)) for j in range(d)]
             for i in range(d)]
        )

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Matrix([[other * a for a in row] for row in self.rows])
        return NotImplemented

    def __eq__(self, other):
        return isinstance(other, Matrix) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"Matrix({[list(map(str, row)) for row in self.rows]})"


class Rationals:
    """Exact rational coefficients."""

    is_commutative = True
    name = "rational"

    @property
    def zero(self):
        return Fraction(0)

    @property
    def one(self):
        return Fraction(1)

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("rational")


class MatrixAlgebra:
    """Dense d x d matrices over rationals; the smallest non-commutative
    witness the associator tests need."""

    is_commutative = False
    name = "matrix"

    def __init__(self, dim: int = 2):
        if dim < 1:
            raise ValueError("matrix dimension must be >= 1")
        self.dim = dim

    @property
    def zero(self):
        return Matrix.zero(self.dim)

    @property
    def one(self):
        return Matrix.identity(self.dim)

    def __eq__(self, other):
        return isinstance(other, MatrixAlgebra) and self.dim == other.dim

    def __hash__(self):
        return hash(("matrix", self.dim))


class FormalCoefficients:
    """Free-algebra coefficients: the n-th coefficient is an indeterminate
    single-letter word, so computed formulas stay symbolic."""

    is_commutative = False
    name = "formal"

    @property
    def zero(self):
        return NCPoly.zero()

    @property
    def one(self):
        return NCPoly.one()

    @staticmethod
    def indeterminate(n: int) -> NCPoly:
        return NCPoly.generator(n)

    def __eq__(self, other):
        return isinstance(other, FormalCoefficients)

    def __hash__(self):
        return hash("formal")


RATIONALS = Rationals()


class TruncatedSeries:
    """A series modulo x^{N+1}.

    kind 'invertible': coefficient n multiplies x^n, coefficient 0 fixed to 1.
    kind 'diffeo':     coefficient n multiplies x^{n+1}, coefficient 0 fixed to 1.
    ``coeffs`` stores c_1..c_N.
    """

    __slots__ = ("kind", "order", "algebra", "coeffs")

    def __init__(self, kind: str, order: int, algebra, coeffs):
        if kind not in ("invertible", "diffeo"):
            raise ValueError(f"unknown series kind {kind!r}")
        if order < 0:
            raise ValueError("order must be >= 0")
        coeffs = tuple(coeffs)
        if len(coeffs) != order:
            raise ValueError(f"expected {order} coefficients, got {len(coeffs)}")
        self.kind = kind
        self.order = order
        self.algebra = algebra
        self.coeffs = coeffs

    @classmethod
    def unit(cls, kind: str, algebra, order: int) -> "TruncatedSeries":
        return cls(kind, order, algebra, [algebra.zero] * order)

    def coefficient(self, n: int):
        if n == 0:
            return self.algebra.one
        if not 1 <= n <= self.order:
            raise ValueError(f"coefficient index {n} outside 1..{self.order}")
        return self.coeffs[n - 1]

    def truncated(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise ValueError(f"cannot extend order {self.order} to {order}")
        return TruncatedSeries(self.kind, order, self.algebra, self.coeffs[:order])

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, TruncatedSeries)
            and self.kind == other.kind
            and self.order == other.order
            and self.algebra == other.algebra
            and all(a == b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __repr__(self) -> str:
        return f"TruncatedSeries({self.kind}, order={self.order}, coeffs={self.coeffs!r})"


def _common_order(f: TruncatedSeries, g: TruncatedSeries, order: int | None) -> int:
    if f.algebra != g.algebra:
        raise ValueError("coefficient algebra mismatch")
    n = min(f.order, g.order)
    if order is not None:
        if order > n:
            raise ValueError(f"order {order} exceeds available order {n}")
        n = order
    return n


def series_mul(f: TruncatedSeries, g: TruncatedSeries, order: int | None = None) -> TruncatedSeries:
    """(fg)_n = sum f_k g_{n-k}, the f-coefficient on the left."""
    if f.kind != "invertible" or g.kind != "invertible":
        raise ValueError("series_mul multiplies invertible series")
    n = _common_order(f, g, order)
    coeffs = []
    for i in range(1, n + 1):
        acc = f.algebra.zero
        for k in range(i + 1):
            acc = acc + f.coefficient(k) * g.coefficient(i - k)
        coeffs.append(acc)
    return TruncatedSeries("invertible", n, f.algebra, coeffs)


def series_inv(f: TruncatedSeries, order: int | None = None) -> TruncatedSeries:
    """Multiplicative inverse by the triangular recursion
    (f^{-1})_n = -sum_{k>=1} f_k (f^{-1})_{n-k}.

    The recursion makes f * inv = 1 by construction; the other side is
    verified before returning, guarding broken algebra instances.
    """
    if f.kind != "invertible":
        raise ValueError("series_inv inverts invertible series")
    n = f.order if order is None else order
    if n > f.order:
        raise ValueError(f"order {n} exceeds available order {f.order}")
    inv = [f.algebra.one]
    for i in range(1, n + 1):
        acc = f.algebra.zero
        for k in range(1, i + 1):
            acc = acc + f.coefficient(k) * inv[i - k]
        inv.append(-acc)
    result = TruncatedSeries("invertible", n, f.algebra, inv[1:])
    check = series_mul(result, f.truncated(n))
    if any(c != f.algebra.zero for c in check.coeffs):
        raise ArithmeticError("one-sided inverse failed the two-sided check")
    return result


def _power_array(phi: TruncatedSeries, top: int) -> list:
    """Coefficients of x^0..x^top of the diffeomorphism as a plain list."""
    zero = phi.algebra.zero
    arr = [zero] * (top + 1)
    if top >= 1:
        arr[1] = phi.algebra.one
    for i in range(1, phi.order + 1):
        if i + 1 <= top:
            arr[i + 1] = phi.coeffs[i - 1]
    return arr


def _array_mul(a: list, b: list, top: int, zero) -> list:
    out = [zero] * (top + 1)
    for i, x in enumerate(a):
        if x == zero:
            continue
        for j, y in enumerate(b):
            if i + j > top:
                break
            out[i + j] = out[i + j] + x * y
    return out


def series_compose(phi: TruncatedSeries, psi: TruncatedSeries, order: int | None = None) -> TruncatedSeries:
    """Composition phi(psi(x)) = psi(x) + sum phi_n psi(x)^{n+1} mod x^{N+1}."""
    if phi.kind != "diffeo" or psi.kind != "diffeo":
        raise ValueError("series_compose composes diffeomorphisms")
    n = _common_order(phi, psi, order)
    top = n + 1
    zero = phi.algebra.zero
    p = _power_array(psi, top)
    power = p
    out = list(p)
    for i in range(1, n + 1):
        power = _array_mul(power, p, top, zero)
        ci = phi.coefficient(i)
        out = [acc + ci * v for acc, v in zip(out, power)]
    return TruncatedSeries("diffeo", n, phi.algebra, out[2: top + 1])


def residue_compose(phi: TruncatedSeries, psi: TruncatedSeries, order: int | None = None) -> TruncatedSeries:
    """Composition through the formal-residue formula.

    Expand phi(z) / (z - psi(x)) with 1/(z - psi(x)) read as the geometric
    series sum psi(x)^n z^{-n-1}, collect by powers of z, and return the
    z^{-1} coefficient.  Index bookkeeping only, no division anywhere."""
    if phi.kind != "diffeo" or psi.kind != "diffeo":
        raise ValueError("residue_compose composes diffeomorphisms")
    n = _common_order(phi, psi, order)
    top = n + 1
    zero = phi.algebra.zero
    p = _power_array(psi, top)
    powers = [[zero] * (top + 1)]
    powers[0][0] = phi.algebra.one
    for _ in range(top):
        powers.append(_array_mul(powers[-1], p, top, zero))
    laurent: dict[int, list] = {}
    for m in range(n + 1):
        cm = phi.coefficient(m)
        for k in range(top + 1):
            zpow = m - k
            arr = laurent.setdefault(zpow, [zero] * (top + 1))
            for j, v in enumerate(powers[k]):
                arr[j] = arr[j] + cm * v
    res = laurent.get(-1, [zero] * (top + 1))
    if res[0] != zero or res[1] != phi.algebra.one:
        raise ArithmeticError("residue extraction lost the leading term")
    return TruncatedSeries("diffeo", n, phi.algebra, res[2: top + 1])


def associator(
    phi: TruncatedSeries, psi: TruncatedSeries, eta: TruncatedSeries, order: int | None = None
) -> tuple:
    """Coefficients of phi o (psi o eta) - (phi o psi) o eta.

    Entry i multiplies x^{i+2}; over a commutative algebra every entry is
    zero, otherwise the x^4 entry (index 2) is
    phi_1 eta_1 psi_1 - phi_1 psi_1 eta_1.
    """
    n = _common_order(phi, psi, order)
    n = min(n, eta.order) if order is None else n
    if eta.order < n:
        raise ValueError(f"order {n} exceeds available order {eta.order}")
    left = series_compose(phi, series_compose(psi, eta, n), n)
    right = series_compose(series_compose(phi, psi, n), eta, n)
    return tuple(a - b for a, b in zip(left.coeffs, right.coeffs))


def character_eval(p: NCPoly, f: TruncatedSeries):
    """Evaluate the character attached to a series on a free-algebra element:
    the n-th generator goes to the n-th coefficient, extended multiplicatively."""
    out = f.algebra.zero
    for w, c in p.items():
        acc = f.algebra.one
        for i, _tag in w:
            if i > f.order:
                raise ValueError(f"generator index {i} exceeds series order {f.order}")
            acc = acc * f.coefficient(i)
        out = out + c * acc
    return out


def lagrange_oracle(phi: TruncatedSeries, order: int | None = None) -> TruncatedSeries:
    """Compositional inverse by brute-force triangular solve of
    phi(psi(x)) = x; independent of any Hopf-algebra machinery."""
    if phi.kind != "diffeo":
        raise ValueError("lagrange_oracle inverts diffeomorphisms")
    if not phi.algebra.is_commutative:
        raise ValueError("compositional inversion needs commutative coefficients")
    n = phi.order if order is None else order
    if n > phi.order:
        raise ValueError(f"order {n} exceeds available order {phi.order}")
    zero = phi.algebra.zero
    coeffs: list = []
    for i in range(1, n + 1):
        candidate = TruncatedSeries("diffeo", i, phi.algebra, coeffs + [zero])
        composed = series_compose(phi.truncated(i), candidate, i)
        coeffs.append(zero - composed.coeffs[i - 1])
    return TruncatedSeries("diffeo", n, phi.algebra, coeffs)


def compositional_inverse_via_antipode(phi: TruncatedSeries, order: int | None = None) -> TruncatedSeries:
    """Compositional inverse read off the antipode: coefficient n of the
    inverse is the closed-form antipode of the n-th generator evaluated at
    the series.  Only defined over commutative coefficients, where
    composition is associative."""
    if phi.kind != "diffeo":
        raise ValueError("compositional inversion applies to diffeomorphisms")
    if not phi.algebra.is_commutative:
        raise ValueError("compositional inversion needs commutative coefficients")
    n = phi.order if order is None else order
    if n > phi.order:
        raise ValueError(f"order {n} exceeds available order {phi.order}")
    coeffs = [character_eval(diffeo.antipode_closed(i), phi) for i in range(1, n + 1)]
    return TruncatedSeries("diffeo", n, phi.algebra, coeffs)
