"""Exact integer matrix routines behind the coloring solvers.

Everything runs on plain Python ints, so there is no overflow and no float
round-off; matrices are small (one row per crossing), so clarity wins over
asymptotics.  The central tool is a unimodular diagonalization U*A*V = D
obtained by gcd pivoting, which solves A*x = b over Z/N for any modulus N,
composite or prime, with an exact solution count.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd


class SolutionCapExceeded(Exception):
    """Raised when a solution set is larger than the caller's cap."""

    def __init__(self, count: int, cap: int):
        super().__init__(f"solution set has {count} elements, cap is {cap}")
        self.count = count
        self.cap = cap


def identity(n: int) -> list[list[int]]:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def _mat_copy(a):
    return [list(row) for row in a]


def diagonalize(matrix: list[list[int]]):
    """Diagonalize an integer matrix by unimodular row/column operations.

    Returns (diag, U, V) with U*matrix*V diagonal; diag is the list of its
    nonzero diagonal entries (the rank is len(diag)).  The divisibility
    chain of Smith normal form is not enforced; any diagonalization gives
    the same solution counts and the same invariant-factor product.
    """
    a = _mat_copy(matrix)
    m = len(a)
    n = len(a[0]) if m else 0
    u = identity(m)
    v = identity(n)

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):  # row[dst] -= q * row[src]
        a[dst] = [x - q * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x - q * y for x, y in zip(u[dst], u[src])]

    def add_col(dst, src, q):
        for row in a:
            row[dst] -= q * row[src]
        for row in v:
            row[dst] -= q * row[src]

    k = 0
    while k < m and k < n:
        # smallest nonzero entry of the trailing submatrix as pivot
        pivot = None
        for i in range(k, m):
            for j in range(k, n):
                if a[i][j] != 0 and (pivot is None or abs(a[i][j]) < abs(a[pivot[0]][pivot[1]])):
                    pivot = (i, j)
        if pivot is None:
            break
        swap_rows(k, pivot[0])
        swap_cols(k, pivot[1])
        while True:
            done = True
            for i in range(k + 1, m):
                if a[i][k] != 0:
                    q = a[i][k] // a[k][k]
                    add_row(i, k, q)
                    if a[i][k] != 0:  # remainder smaller than pivot: promote it
                        swap_rows(i, k)
                        done = False
            for j in range(k + 1, n):
                if a[k][j] != 0:
                    q = a[k][j] // a[k][k]
                    add_col(j, k, q)
                    if a[k][j] != 0:
                        swap_cols(j, k)
                        done = False
            if done:
                break
        k += 1

    diag = [a[i][i] for i in range(k)]
    return diag, u, v


def invariant_product(matrix: list[list[int]]) -> tuple[int, int]:
    """Return (rank, |product of nonzero diagonal invariants|)."""
    diag, _, _ = diagonalize(matrix)
    prod = 1
    for d in diag:
        prod *= abs(d)
    return len(diag), prod


def bareiss_determinant(matrix: list[list[int]]) -> int:
    """Exact determinant of a square integer matrix (fraction-free elimination)."""
    a = _mat_copy(matrix)
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def _modinv(x: int, n: int) -> int:
    return pow(x, -1, n)


@dataclass
class ModularAffineSpace:
    """The solution set of A*x = b (mod N), exactly counted and enumerable.

    Coordinates are expressed through the substitution x = V*y; every y
    coordinate ranges over an arithmetic progression mod N, so enumeration
    is a plain product walk in deterministic (lexicographic in y) order.
    """

    modulus: int
    n_vars: int
    count: int
    _v: list[list[int]] | None = None
    _bases: list[int] | None = None
    _steps: list[int] | None = None
    _choices: list[int] | None = None

    @property
    def is_empty(self) -> bool:
        return self.count == 0

    def enumerate(self, cap: int = 10 ** 6):
        """Yield all solutions as tuples; raises SolutionCapExceeded first if count > cap."""
        if self.count > cap:
            raise SolutionCapExceeded(self.count, cap)
        yield from self._walk()

    def first(self):
        for x in self._walk():
            return x
        return None

    def _walk(self):
        if self.count == 0:
            return
        n = self.modulus
        idx = [0] * len(self._choices)
        while True:
            y = [(b + i * s) % n for b, s, i in zip(self._bases, self._steps, idx)]
            x = tuple(
                sum(self._v[r][c] * y[c] for c in range(len(y))) % n
                for r in range(self.n_vars)
            )
            yield x
            for pos in reversed(range(len(idx))):
                idx[pos] += 1
                if idx[pos] < self._choices[pos]:
                    break
                idx[pos] = 0
            else:
                return


def solve_mod(matrix: list[list[int]], rhs: list[int], n_vars: int, modulus: int) -> ModularAffineSpace:
    """Solve matrix * x = rhs (mod modulus) for x in (Z/modulus)^n_vars."""
    if modulus < 2:
        raise ValueError("modulus must be at least 2")
    if not matrix:
        count = modulus ** n_vars
        return ModularAffineSpace(
            modulus, n_vars, count,
            _v=identity(n_vars), _bases=[0] * n_vars,
            _steps=[1] * n_vars, _choices=[modulus] * n_vars,
        )
    diag, u, v = diagonalize(matrix)
    m = len(matrix)
    r = len(diag)
    c = [sum(u[i][j] * rhs[j] for j in range(m)) % modulus for i in range(m)]
    for i in range(r, m):
        if c[i] % modulus != 0:
            return ModularAffineSpace(modulus, n_vars, 0)
    bases, steps, choices = [], [], []
    count = 1
    for i in range(n_vars):
        if i < r:
            d = diag[i]
            g = gcd(d, modulus)
            if c[i] % g != 0:
                return ModularAffineSpace(modulus, n_vars, 0)
            base = (c[i] // g) * _modinv((d // g) % (modulus // g), modulus // g) % (modulus // g)
            bases.append(base)
            steps.append(modulus // g)
            choices.append(g)
            count *= g
        else:
            bases.append(0)
            steps.append(1)
            choices.append(modulus)
            count *= modulus
    return ModularAffineSpace(
        modulus, n_vars, count, _v=v, _bases=bases, _steps=steps, _choices=choices
    )
