"""Chevalley bases, explicit representation matrices, principal triples.

Structure constants N_{a,b} ([x_a, x_b] = N_{a,b} x_{a+b}) are fixed by
Carter's extraspecial-pair scheme: order the positive roots by (height,
reverse-lex); for each non-simple positive gamma the special pairs are the
ordered decompositions gamma = a + b with a < b, and the extraspecial pair
is the one with minimal a.  Extraspecial pairs get N = +(p+1) with
p = max{k : b - k a is a root}; every other constant follows from the
antisymmetry, the norm relation for zero-sum triples

    N_{x,y}/(z,z) = N_{y,z}/(x,x) = N_{z,x}/(y,y)      (x + y + z = 0),

and one Jacobi identity against the extraspecial pair.  |N_{a,b}| = p+1 is
asserted for every special pair, and the full Jacobi identity is verified
exhaustively on the adjoint action at build time.

Matrix conventions for the principal triple (N, RHO, E):

    N = sum_i f_i,  E = x_theta,  RHO = diag(-<basis weight, rho^vee>).

With these, [N, RHO] = -N and [E, RHO] = (h-1) E hold as honest matrix
commutators (the minus sign in RHO is forced: with +<mu, rho^vee> the two
brackets and the flatness of the two-variable connection all flip sign).
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import (
    IntegrityError,
    ResourceLimitError,
    UnsupportedRepresentationError,
    UsageError,
)
from .grading import JordanPartition
from .linalg import SparseMatrix, rank
from .rootdatum import Coords, RootDatum, pair

DEFAULT_MAX_RANK = 8

_sc_memo: dict = {}
_adjoint_memo: dict = {}
_std_memo: dict = {}


def _vadd(a: Coords, b: Coords) -> Coords:
    return tuple(x + y for x, y in zip(a, b))


def _vsub(a: Coords, b: Coords) -> Coords:
    return tuple(x - y for x, y in zip(a, b))


def _vneg(a: Coords) -> Coords:
    return tuple(-x for x in a)


@dataclass(frozen=True)
class StructureConstants:
    datum: RootDatum
    n_pos: dict[tuple[Coords, Coords], int] = field(repr=False)
    root_set: frozenset[Coords] = field(repr=False)
    norm2: dict[Coords, int] = field(repr=False)

    def constant(self, x: Coords, y: Coords) -> int:
        """N_{x,y} for any roots x, y with x + y a root."""
        s = _vadd(x, y)
        if s not in self.root_set:
            raise UsageError(f"{x} + {y} is not a root")
        xpos = sum(x) > 0
        ypos = sum(y) > 0
        if xpos and ypos:
            return self.n_pos[(x, y)]
        if not xpos and not ypos:
            return -self.constant(_vneg(x), _vneg(y))
        if not xpos:
            return -self.constant(y, x)
        # x positive, y negative; gamma = x + y.
        mu = _vneg(y)
        gamma = s
        if sum(gamma) > 0:
            # triple (x, -mu, -gamma): N_{x,-mu} = (g,g)/(x,x) * N_{-mu,-g} = -(g,g)/(x,x) N_{mu,g}
            val = Fraction(self.norm2[gamma] * -self.constant(mu, gamma), self.norm2[x])
        else:
            # reduce to the previous case through N_{x,-mu} = N_{mu,-x}
            gp = _vneg(gamma)
            val = Fraction(self.norm2[gp] * -self.constant(x, gp), self.norm2[mu])
        assert val.denominator == 1 and val != 0
        return int(val)


def _special_pairs(datum: RootDatum, pos_index: dict[Coords, int], gamma: Coords):
    out = []
    for a in datum.positive_roots:
        if pos_index[a] >= pos_index[gamma]:
            break
        b = _vsub(gamma, a)
        ib = pos_index.get(b)
        if ib is not None and pos_index[a] < ib:
            out.append((a, b))
    return out


def _string_length(root_set, a: Coords, b: Coords) -> int:
    """p = max{k >= 0 : b - k a is a root}.  The zero vector is not a root."""
    p = 0
    cur = b
    while True:
        cur = _vsub(cur, a)
        if cur not in root_set:
            return p
        p += 1


def structure_constants(datum: RootDatum, max_rank: int = DEFAULT_MAX_RANK,
                        verify: bool = True) -> StructureConstants:
    """Consistent Chevalley structure constants for one simple type."""
    if datum.rank > max_rank:
        raise ResourceLimitError(
            f"rank {datum.rank} exceeds the structure-constant guard {max_rank}"
        )
    key = (datum.stype, verify)
    cached = _sc_memo.get(key)
    if cached is not None:
        return cached

    positive = datum.positive_roots
    pos_index = {r: i for i, r in enumerate(positive)}
    root_set = frozenset(positive) | frozenset(_vneg(r) for r in positive)
    norm2 = {r: datum.norm2_root(r) for r in positive}
    norm2.update({_vneg(r): norm2[r] for r in positive})

    n_pos: dict[tuple[Coords, Coords], int] = {}

    def put(a, b, val):
        n_pos[(a, b)] = val
        n_pos[(b, a)] = -val

    sc = StructureConstants(datum=datum, n_pos=n_pos, root_set=root_set, norm2=norm2)

    for gamma in positive:
        if sum(gamma) == 1:
            continue
        pairs = _special_pairs(datum, pos_index, gamma)
        if not pairs:
            raise IntegrityError(f"no decomposition found for positive root {gamma}")
        ex_a, ex_b = min(pairs, key=lambda ab: pos_index[ab[0]])
        p = _string_length(root_set, ex_a, ex_b)
        put(ex_a, ex_b, p + 1)
        for a, b in pairs:
            if (a, b) == (ex_a, ex_b):
                continue
            # Jacobi on (x_{-ex_a}, x_a, x_b), all terms proportional to x_{ex_b}:
            #   N_{a,b} N_{-ex_a,gamma} + N_{b,-ex_a} N_{a,b-ex_a} + N_{-ex_a,a} N_{b,a-ex_a} = 0
            n_minus_gamma = Fraction(norm2[ex_b] * (p + 1), norm2[gamma])
            acc = Fraction(0)
            delta = _vsub(b, ex_a)
            if delta in root_set:
                t1 = Fraction(-norm2[delta] * n_pos[(ex_a, delta)], norm2[b])
                acc += t1 * n_pos[(a, delta)]
            eps = _vsub(a, ex_a)
            if eps in root_set:
                t2 = Fraction(norm2[eps] * n_pos[(ex_a, eps)], norm2[a])
                acc += t2 * n_pos[(b, eps)]
            val = -acc / n_minus_gamma
            expect = _string_length(root_set, a, b) + 1
            if val.denominator != 1 or abs(int(val)) != expect:
                raise IntegrityError(
                    f"derived constant N_{a},{b} = {val}, |N| should be {expect}"
                )
            put(a, b, int(val))

    # Chevalley integrality for every special pair (redundant for derived
    # ones, a genuine check for extraspecial bookkeeping).
    for (a, b), v in n_pos.items():
        if _vadd(a, b) in root_set:
            assert abs(v) == _string_length(root_set, a, b) + 1

    if verify:
        verify_jacobi(sc)
    _sc_memo[key] = sc
    return sc


# -- adjoint action ----------------------------------------------------------

def _adjoint_basis(datum: RootDatum):
    """Roots sorted by descending height then Cartan elements in the middle."""
    positive = list(datum.positive_roots)
    ordered = sorted(positive, key=lambda r: (-sum(r), r))
    basis = [("root", r) for r in ordered]
    basis += [("cartan", i) for i in range(datum.rank)]
    basis += [("root", _vneg(r)) for r in ordered]
    return basis


def _ad_columns(sc: StructureConstants, x):
    """Columns of ad(x) on the adjoint basis, as {col: [(row, val), ...]}.

    x is either ("root", xi) or ("cartan", i).
    """
    datum = sc.datum
    basis = _adjoint_basis(datum)
    index = {b: i for i, b in enumerate(basis)}
    cols: dict[int, list[tuple[int, int]]] = {}
    kind, payload = x
    for col, b in enumerate(basis):
        bkind, bpayload = b
        out = []
        if kind == "cartan":
            i = payload
            if bkind == "root":
                k = sum(bpayload[j] * datum.cartan[j][i] for j in range(datum.rank))
                if k:
                    out.append((col, k))
        else:
            xi = payload
            if bkind == "cartan":
                # [x_xi, h_j] = -<xi, alpha_j^vee> x_xi
                j = bpayload
                k = sum(xi[t] * datum.cartan[t][j] for t in range(datum.rank))
                if k:
                    out.append((index[("root", xi)], -k))
            else:
                eta = bpayload
                s = _vadd(xi, eta)
                if all(c == 0 for c in s):
                    # [x_xi, x_{-xi}] = xi^vee in the Cartan basis
                    co = datum.coroot_of[xi if sum(xi) > 0 else _vneg(xi)]
                    sign = 1 if sum(xi) > 0 else -1
                    for j, c in enumerate(co):
                        if c:
                            out.append((index[("cartan", j)], sign * c))
                elif s in sc.root_set:
                    out.append((index[("root", s)], sc.constant(xi, eta)))
        if out:
            cols[col] = out
    return cols


def verify_jacobi(sc: StructureConstants) -> None:
    """Exhaustive Jacobi check: ad is a Lie-algebra homomorphism.

    Checks [ad x, ad y] = ad([x, y]) for every ordered pair of basis
    elements.  Entries of all matrices involved are small integers, so the
    int64 sparse arithmetic is exact.
    """
    import numpy as np
    from scipy import sparse as sp

    datum = sc.datum
    basis = _adjoint_basis(datum)
    index = {b: i for i, b in enumerate(basis)}
    dim = len(basis)

    mats = []
    for b in basis:
        cols = _ad_columns(sc, b)
        rows_idx, cols_idx, vals = [], [], []
        for col, pairs in cols.items():
            for row, v in pairs:
                rows_idx.append(row)
                cols_idx.append(col)
                vals.append(v)
        mats.append(sp.csr_matrix(
            (np.asarray(vals, dtype=np.int64),
             (np.asarray(rows_idx, dtype=np.int64), np.asarray(cols_idx, dtype=np.int64))),
            shape=(dim, dim),
        ))

    def ad_of_bracket(x, y):
        """ad([x, y]) as a sparse matrix, from the structure constants."""
        xk, xv = x
        yk, yv = y
        out = sp.csr_matrix((dim, dim), dtype=np.int64)
        if xk == "cartan" and yk == "cartan":
            return out
        if xk == "cartan" and yk == "root":
            k = sum(yv[t] * datum.cartan[t][xv] for t in range(datum.rank))
            return k * mats[index[("root", yv)]] if k else out
        if xk == "root" and yk == "cartan":
            k = sum(xv[t] * datum.cartan[t][yv] for t in range(datum.rank))
            return -k * mats[index[("root", xv)]] if k else out
        s = _vadd(xv, yv)
        if all(c == 0 for c in s):
            co = datum.coroot_of[xv if sum(xv) > 0 else _vneg(xv)]
            sign = 1 if sum(xv) > 0 else -1
            for j, c in enumerate(co):
                if c:
                    out = out + sign * c * mats[index[("cartan", j)]]
            return out
        if s in sc.root_set:
            return sc.constant(xv, yv) * mats[index[("root", s)]]
        return out

    for i in range(dim):
        ai = mats[i]
        for j in range(i + 1, dim):
            lhs = ai @ mats[j] - mats[j] @ ai
            diff = lhs - ad_of_bracket(basis[i], basis[j])
            if diff.nnz and np.any(diff.data):
                raise IntegrityError(
                    f"Jacobi identity fails for basis pair {basis[i]}, {basis[j]}"
                )


# -- representation matrices --------------------------------------------------

@dataclass(frozen=True)
class RepMatrices:
    datum: RootDatum
    dim: int
    basis_weights: tuple[Coords, ...]
    e: tuple[SparseMatrix, ...]
    f: tuple[SparseMatrix, ...]
    h: tuple[SparseMatrix, ...]
    e_theta: SparseMatrix
    name: str = "rep"


def _check_rep(rep: RepMatrices) -> None:
    """Enforce the Chevalley-Serre relations and weight compatibility.

    The relation set ([h,e], [h,f], [e_i,f_j] = delta h_i, Serre) presents
    the Lie algebra, so passing it certifies the matrices really define a
    representation; the remaining checks pin the weight bookkeeping and the
    highest-root vector.
    """
    datum = rep.datum
    n = datum.rank
    cartan = datum.cartan
    for i in range(n):
        for j in range(n):
            if rep.h[i].commutator(rep.e[j]) != rep.e[j].scale(cartan[j][i]):
                raise IntegrityError(f"{rep.name}: [h_{i+1}, e_{j+1}] relation fails")
            if rep.h[i].commutator(rep.f[j]) != rep.f[j].scale(-cartan[j][i]):
                raise IntegrityError(f"{rep.name}: [h_{i+1}, f_{j+1}] relation fails")
            expect = rep.h[i] if i == j else SparseMatrix.zero(rep.dim)
            if rep.e[i].commutator(rep.f[j]) != expect:
                raise IntegrityError(f"{rep.name}: [e_{i+1}, f_{j+1}] relation fails")
    # Serre relations (ad e_i)^{1-cartan[j][i]} e_j = 0, same with f.
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            power = 1 - cartan[j][i]
            for gens in (rep.e, rep.f):
                acc = gens[j]
                for _ in range(power):
                    acc = gens[i].commutator(acc)
                if not acc.is_zero():
                    raise IntegrityError(f"{rep.name}: Serre relation ({i+1},{j+1}) fails")
    # h_i diagonal with the declared weights; e_i moves mu to mu + alpha_i.
    for i in range(n):
        if rep.h[i] != SparseMatrix.diagonal([w[i] for w in rep.basis_weights]):
            raise IntegrityError(f"{rep.name}: h_{i+1} disagrees with basis weights")
        alpha_w = datum.weight_of_root(datum.simple_roots[i])
        for (r, c) in rep.e[i].entries:
            if rep.basis_weights[r] != _vadd(rep.basis_weights[c], alpha_w):
                raise IntegrityError(f"{rep.name}: e_{i+1} breaks the weight grading")
    for i in range(n):
        if not rep.e_theta.commutator(rep.e[i]).is_zero():
            raise IntegrityError(f"{rep.name}: [e_theta, e_{i+1}] != 0")


def _theta_matrix(sc: StructureConstants, e: tuple[SparseMatrix, ...], dim: int) -> SparseMatrix:
    """x_theta on a representation, via x_gamma = [e_i, x_{gamma-alpha_i}] / N."""
    datum = sc.datum
    simple = datum.simple_roots
    mats: dict[Coords, SparseMatrix] = {simple[i]: e[i] for i in range(datum.rank)}

    def build(gamma: Coords) -> SparseMatrix:
        got = mats.get(gamma)
        if got is not None:
            return got
        for i, alpha in enumerate(simple):
            delta = _vsub(gamma, alpha)
            if delta in sc.root_set and sum(delta) > 0:
                m = e[i].commutator(build(delta)).scale(Fraction(1, sc.constant(alpha, delta)))
                mats[gamma] = m
                return m
        raise IntegrityError(f"no simple-root decomposition for {gamma}")

    return build(datum.theta)


def adjoint_rep(datum: RootDatum, max_rank: int = DEFAULT_MAX_RANK) -> RepMatrices:
    """Adjoint representation on the basis (roots by descending height, Cartan)."""
    cached = _adjoint_memo.get(datum.stype)
    if cached is not None:
        return cached
    sc = structure_constants(datum, max_rank=max_rank)
    basis = _adjoint_basis(datum)
    dim = len(basis)
    zero = (0,) * datum.rank
    weights = tuple(
        datum.weight_of_root(payload) if kind == "root" else zero
        for kind, payload in basis
    )

    def matrix_of(x) -> SparseMatrix:
        cols = _ad_columns(sc, x)
        return SparseMatrix.from_entries(
            dim, {(row, col): v for col, pairs in cols.items() for row, v in pairs}
        )

    e = tuple(matrix_of(("root", datum.simple_roots[i])) for i in range(datum.rank))
    f = tuple(matrix_of(("root", _vneg(datum.simple_roots[i]))) for i in range(datum.rank))
    h = tuple(matrix_of(("cartan", i)) for i in range(datum.rank))
    e_theta = matrix_of(("root", datum.theta))
    rep = RepMatrices(datum=datum, dim=dim, basis_weights=weights,
                      e=e, f=f, h=h, e_theta=e_theta, name=f"adjoint({datum.stype})")
    _check_rep(rep)
    _adjoint_memo[datum.stype] = rep
    return rep


def _classical_weights(datum: RootDatum) -> tuple[Coords, ...]:
    """Basis weights of the standard representation, highest first."""
    fam, n = datum.stype.family, datum.rank

    def eps(k: int) -> Coords:  # epsilon_k in fundamental coordinates, 1-indexed
        out = [0] * n
        if fam == "A":
            if k <= n:
                out[k - 1] += 1
            if k >= 2:
                out[k - 2] -= 1
        elif fam == "B":
            for j in range(1, n):
                out[j - 1] += (1 if k == j else 0) - (1 if k == j + 1 else 0)
            out[n - 1] += 2 if k == n else 0
        elif fam == "C":
            for j in range(1, n):
                out[j - 1] += (1 if k == j else 0) - (1 if k == j + 1 else 0)
            out[n - 1] += 1 if k == n else 0
        elif fam == "D":
            for j in range(1, n):
                out[j - 1] += (1 if k == j else 0) - (1 if k == j + 1 else 0)
            out[n - 1] += 1 if k in (n - 1, n) else 0
        return tuple(out)

    if fam == "A":
        return tuple(eps(k) for k in range(1, n + 2))
    plus = [eps(k) for k in range(1, n + 1)]
    minus = [_vneg(w) for w in reversed(plus)]
    if fam == "B":
        return tuple(plus + [(0,) * n] + minus)
    return tuple(plus + minus)


def classical_std_rep(datum: RootDatum, max_rank: int = DEFAULT_MAX_RANK) -> RepMatrices:
    """Standard (defining) representation of a classical type.

    A_n: dimension n+1; B_n: 2n+1 orthogonal; C_n: 2n symplectic;
    D_n: 2n orthogonal.  Exceptional types have no standard representation
    here by design.
    """
    fam, n = datum.stype.family, datum.rank
    if fam not in "ABCD":
        raise UnsupportedRepresentationError(
            f"no standard matrix model for {datum.stype}; only A/B/C/D are built"
        )
    cached = _std_memo.get(datum.stype)
    if cached is not None:
        return cached
    sc = structure_constants(datum, max_rank=max_rank)
    weights = _classical_weights(datum)
    dim = len(weights)

    e_entries: list[dict] = [dict() for _ in range(n)]
    if fam == "A":
        for j in range(1, n + 1):
            e_entries[j - 1][(j - 1, j)] = 1
    elif fam == "B":
        for j in range(1, n):
            e_entries[j - 1][(j - 1, j)] = 1
            e_entries[j - 1][(2 * n - j, 2 * n + 1 - j)] = -1
        e_entries[n - 1][(n - 1, n)] = 1
        e_entries[n - 1][(n, n + 1)] = 2
    else:  # C and D share the index pattern away from the last node
        for j in range(1, n):
            e_entries[j - 1][(j - 1, j)] = 1
            e_entries[j - 1][(2 * n - 1 - j, 2 * n - j)] = -1
        if fam == "C":
            e_entries[n - 1][(n - 1, n)] = 1
        else:
            e_entries[n - 1][(n - 2, n)] = 1
            e_entries[n - 1][(n - 1, n + 1)] = -1

    e = tuple(SparseMatrix.from_entries(dim, ent) for ent in e_entries)
    # f_i is the entrywise transpose; the 3-step string at the short node of
    # B needs the divided-power coefficients (1,2)/(2,1) to satisfy [e,f] = h.
    f_entries = [{(c, r): v for (r, c), v in ent.items()} for ent in e_entries]
    if fam == "B":
        f_entries[n - 1] = {(n, n - 1): 2, (n + 1, n): 1}
    f = tuple(SparseMatrix.from_entries(dim, ent) for ent in f_entries)
    h = tuple(
        SparseMatrix.diagonal([w[i] for w in weights]) for i in range(n)
    )
    e_theta = _theta_matrix(sc, e, dim)
    rep = RepMatrices(datum=datum, dim=dim, basis_weights=weights,
                      e=e, f=f, h=h, e_theta=e_theta, name=f"std({datum.stype})")
    _check_rep(rep)
    _std_memo[datum.stype] = rep
    return rep


def get_rep(datum: RootDatum, which: str, max_rank: int = DEFAULT_MAX_RANK) -> RepMatrices:
    if which == "adjoint":
        return adjoint_rep(datum, max_rank=max_rank)
    if which == "std":
        return classical_std_rep(datum, max_rank=max_rank)
    raise UsageError(f"unknown representation {which!r}; expected 'adjoint' or 'std'")


# -- principal triple ---------------------------------------------------------

@dataclass(frozen=True)
class PrincipalTriple:
    datum: RootDatum
    dim: int
    N: SparseMatrix
    RHO: SparseMatrix
    E: SparseMatrix
    H: SparseMatrix
    basis_weights: tuple[Coords, ...]

    @property
    def coxeter(self) -> int:
        return self.datum.coxeter


def principal_triple(rep: RepMatrices) -> PrincipalTriple:
    """N = sum f_i, E = x_theta, RHO = diag(-<basis weight, rho^vee>).

    [N, RHO] = -N and [E, RHO] = (h-1) E are verified entrywise before
    returning; they force N to shift the RHO-grading by +1 and hence to be
    nilpotent, and H = 2 RHO carries the rho-grading spectrum.
    """
    datum = rep.datum
    N = functools.reduce(lambda a, b: a + b, rep.f, SparseMatrix.zero(rep.dim))
    rho_cov = datum.rho_covector
    diag = [-pair(w, rho_cov) for w in rep.basis_weights]
    RHO = SparseMatrix.diagonal(diag)
    H = RHO.scale(2)
    E = rep.e_theta
    if N.commutator(RHO) != N.scale(-1):
        raise IntegrityError("[N, RHO] != -N")
    if E.commutator(RHO) != E.scale(datum.coxeter - 1):
        raise IntegrityError("[E, RHO] != (h-1) E")
    return PrincipalTriple(datum=datum, dim=rep.dim, N=N, RHO=RHO, E=E, H=H,
                           basis_weights=rep.basis_weights)


def jordan_type(matrix: SparseMatrix) -> JordanPartition:
    """Jordan partition of a nilpotent matrix from its exact rank sequence.

    blocks of size s number r_{s-1} - 2 r_s + r_{s+1} with r_k = rank(M^k).
    Raises on non-nilpotent input (the rank sequence of a nilpotent matrix
    strictly decreases to zero).
    """
    dim = matrix.dim
    ranks = [dim]
    power = matrix
    while True:
        r = rank(power)
        ranks.append(r)
        if r == 0:
            break
        if r >= ranks[-2] or len(ranks) > dim + 1:
            raise UsageError("matrix is not nilpotent")
        power = power @ matrix
    ranks.append(0)
    blocks = []
    for s in range(1, len(ranks) - 1):
        count = ranks[s - 1] - 2 * ranks[s] + ranks[s + 1]
        if count < 0:
            raise IntegrityError("rank sequence is not convex")
        blocks.extend([s] * count)
    part = JordanPartition(tuple(blocks))
    if part.total != dim:
        raise IntegrityError("Jordan blocks do not sum to the dimension")
    return part
