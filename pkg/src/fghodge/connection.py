"""The rigid irregular connection matrix and its two-variable extension.

fg_matrix returns the dt/t-coefficient A(t) = N/t + E of the connection
d + (N + E t) dt/t on the trivial bundle over the punctured line; for the
standard A_n representation this is exactly the classical Bessel matrix
(sub-diagonal ones, t in the upper-right corner) divided by t.

rmodule_pair returns the coefficient pair of the two-variable connection

    d + (N + tE) dt/(tz) - h (N + tE) dz/z^2 + RHO dz/z,

namely A = (N + tE)/(tz) and B = -h (N + tE)/z^2 + RHO/z, with h the
Coxeter number.  Flatness is the algebraic identity dA/dz - dB/dt = [A, B],
certified by integrability_residual returning the zero matrix; derivatives
are formal on Laurent exponents and every product is canonicalized, so
"is zero" is a structural test on exact rationals.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .chevalley import PrincipalTriple
from .errors import UsageError
from .linalg import SparseMatrix

Q = Fraction
Monomial = tuple[int, int]  # (t-exponent, z-exponent)


@dataclass(frozen=True)
class LaurentPoly:
    """Bivariate Laurent polynomial in t and z with exact rational coefficients."""

    coeffs: dict[Monomial, Q] = field(default_factory=dict)

    @classmethod
    def make(cls, coeffs) -> "LaurentPoly":
        clean = {}
        for mono, c in dict(coeffs).items():
            c = Q(c)
            if c != 0:
                clean[(int(mono[0]), int(mono[1]))] = c
        return cls(clean)

    @classmethod
    def term(cls, c, dt: int = 0, dz: int = 0) -> "LaurentPoly":
        return cls.make({(dt, dz): c})

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        out = dict(self.coeffs)
        for mono, c in other.coeffs.items():
            s = out.get(mono, 0) + c
            if s == 0:
                out.pop(mono, None)
            else:
                out[mono] = s
        return LaurentPoly(out)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({m: -c for m, c in self.coeffs.items()})

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        out: dict[Monomial, Q] = {}
        for (t1, z1), c1 in self.coeffs.items():
            for (t2, z2), c2 in other.coeffs.items():
                mono = (t1 + t2, z1 + z2)
                s = out.get(mono, 0) + c1 * c2
                if s == 0:
                    out.pop(mono, None)
                else:
                    out[mono] = s
        return LaurentPoly(out)

    def scale(self, c) -> "LaurentPoly":
        c = Q(c)
        if c == 0:
            return LaurentPoly({})
        return LaurentPoly({m: v * c for m, v in self.coeffs.items()})

    def d_t(self) -> "LaurentPoly":
        return LaurentPoly({(a - 1, b): c * a for (a, b), c in self.coeffs.items() if a != 0})

    def d_z(self) -> "LaurentPoly":
        return LaurentPoly({(a, b - 1): c * b for (a, b), c in self.coeffs.items() if b != 0})

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for (a, b) in sorted(self.coeffs):
            c = self.coeffs[(a, b)]
            factors = [str(c)]
            if a:
                factors.append(f"t^{a}" if a != 1 else "t")
            if b:
                factors.append(f"z^{b}" if b != 1 else "z")
            parts.append("*".join(factors))
        return " + ".join(parts)


_ZERO = LaurentPoly({})


@dataclass(frozen=True)
class LaurentMatrix:
    """Square matrix of Laurent polynomials; zero entries are never stored."""

    dim: int
    entries: dict[tuple[int, int], LaurentPoly] = field(repr=False)

    @classmethod
    def zero(cls, dim: int) -> "LaurentMatrix":
        return cls(dim, {})

    @classmethod
    def build(cls, dim: int, entries) -> "LaurentMatrix":
        clean = {}
        for (r, c), p in dict(entries).items():
            if not isinstance(p, LaurentPoly):
                p = LaurentPoly.make(p)
            if not p.is_zero():
                clean[(r, c)] = p
        return cls(dim, clean)

    @classmethod
    def from_scalar_matrix(cls, m: SparseMatrix, dt: int = 0, dz: int = 0,
                           factor=1) -> "LaurentMatrix":
        """Lift an exact scalar matrix to factor * t^dt z^dz * m."""
        return cls.build(
            m.dim,
            {(r, c): LaurentPoly.term(Q(factor) * Q(v), dt, dz) for (r, c), v in m.entries.items()},
        )

    def get(self, r: int, c: int) -> LaurentPoly:
        return self.entries.get((r, c), _ZERO)

    def is_zero(self) -> bool:
        return not self.entries

    def __add__(self, other: "LaurentMatrix") -> "LaurentMatrix":
        self._match(other)
        out = dict(self.entries)
        for k, p in other.entries.items():
            s = out.get(k, _ZERO) + p
            if s.is_zero():
                out.pop(k, None)
            else:
                out[k] = s
        return LaurentMatrix(self.dim, out)

    def __sub__(self, other: "LaurentMatrix") -> "LaurentMatrix":
        return self + other.scale(-1)

    def scale(self, c) -> "LaurentMatrix":
        if c == 0:
            return LaurentMatrix.zero(self.dim)
        return LaurentMatrix(self.dim, {k: p.scale(c) for k, p in self.entries.items()})

    def __matmul__(self, other: "LaurentMatrix") -> "LaurentMatrix":
        self._match(other)
        rows_b: dict[int, list[tuple[int, LaurentPoly]]] = {}
        for (r, c), p in other.entries.items():
            rows_b.setdefault(r, []).append((c, p))
        out: dict[tuple[int, int], LaurentPoly] = {}
        for (r, k), pa in self.entries.items():
            row = rows_b.get(k)
            if row is None:
                continue
            for c, pb in row:
                key = (r, c)
                s = out.get(key, _ZERO) + pa * pb
                if s.is_zero():
                    out.pop(key, None)
                else:
                    out[key] = s
        return LaurentMatrix(self.dim, out)

    def commutator(self, other: "LaurentMatrix") -> "LaurentMatrix":
        return (self @ other) - (other @ self)

    def d_t(self) -> "LaurentMatrix":
        return LaurentMatrix.build(self.dim, {k: p.d_t() for k, p in self.entries.items()})

    def d_z(self) -> "LaurentMatrix":
        return LaurentMatrix.build(self.dim, {k: p.d_z() for k, p in self.entries.items()})

    def first_nonzero(self):
        """(row, col, poly) of the first nonzero entry in row-major order."""
        if self.is_zero():
            return None
        r, c = min(self.entries)
        return r, c, self.entries[(r, c)]

    def _match(self, other: "LaurentMatrix") -> None:
        if self.dim != other.dim:
            raise UsageError("matrix dimensions differ")

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaurentMatrix):
            return NotImplemented
        return self.dim == other.dim and self.entries == other.entries


def fg_matrix(triple: PrincipalTriple) -> LaurentMatrix:
    """dt-coefficient A(t) = N/t + E of the connection d + (N + Et) dt/t."""
    return (LaurentMatrix.from_scalar_matrix(triple.N, dt=-1)
            + LaurentMatrix.from_scalar_matrix(triple.E))


def rmodule_pair(triple: PrincipalTriple, h: int) -> tuple[LaurentMatrix, LaurentMatrix]:
    """Coefficients A = (N + tE)/(tz), B = -h (N + tE)/z^2 + RHO/z.

    h must be the Coxeter number of the triple's type; passing anything else
    is rejected (build a faulty B by hand to study the broken case).
    """
    if triple.dim < 1:
        raise UsageError("representation must have positive dimension")
    if h != triple.coxeter:
        raise UsageError(
            f"h = {h} does not match the Coxeter number {triple.coxeter} of {triple.datum.stype}"
        )
    a = (LaurentMatrix.from_scalar_matrix(triple.N, dt=-1, dz=-1)
         + LaurentMatrix.from_scalar_matrix(triple.E, dz=-1))
    b = (LaurentMatrix.from_scalar_matrix(triple.N, dz=-2, factor=-h)
         + LaurentMatrix.from_scalar_matrix(triple.E, dt=1, dz=-2, factor=-h)
         + LaurentMatrix.from_scalar_matrix(triple.RHO, dz=-1))
    return a, b


def integrability_residual(a: LaurentMatrix, b: LaurentMatrix) -> LaurentMatrix:
    """dA/dz - dB/dt - (AB - BA), canonical; zero certifies flatness."""
    a._match(b)
    return a.d_z() - b.d_t() - a.commutator(b)
