"""Matrix representations of U_q(sl_N) on tensor powers of the vector
representation, with exact rational q = s^2."""
import itertools
from functools import reduce
from sympy import Rational, eye, zeros, Matrix, kronecker_product


class Rep:
    def __init__(self, N, s):
        self.N = N
        self.s = Rational(s)        # q^(1/2)
        self.q = self.s ** 2
        self.lam = self.q - 1 / self.q

    # generators on V for simple root i (1-based)
    def k(self, i, p=1):
        m = zeros(self.N, self.N)
        for a in range(self.N):
            w = (1 if a == i - 1 else 0) - (1 if a == i else 0)
            m[a, a] = self.s ** (w * p)
        return m

    def e(self, i):
        m = zeros(self.N, self.N)
        m[i - 1, i] = 1
        return m

    def f(self, i):
        m = zeros(self.N, self.N)
        m[i, i - 1] = 1
        return m

    # Delta e = k (x) e + e (x) k^-1,  Delta f = f (x) k^-1 + k (x) f
    def power(self, gen, i, n, p=1):
        """Matrix of k_i^p, e_i or f_i on V^(x)n."""
        if gen == "k":
            return reduce(kronecker_product, [self.k(i, p)] * n) if n else eye(1)
        total = zeros(self.N ** n, self.N ** n)
        for slot in range(n):
            mid = self.e(i) if gen == "e" else self.f(i)
            parts = [self.k(i)] * slot + [mid] + [self.k(i, -1)] * (n - slot - 1)
            total += reduce(kronecker_product, parts)
        return total


def word_entry(M, n, N, word):
    """Value of the functional with matrix M (on V^(x)n) on a word of matrix
    entries u^{i}_{j} given as [(i, j), ...] (0-based)."""
    I = sum(i * N ** (n - 1 - t) for t, (i, _) in enumerate(word))
    J = sum(j * N ** (n - 1 - t) for t, (_, j) in enumerate(word))
    return M[I, J]


def words(N, n):
    letters = [(i, j) for i in range(N) for j in range(N)]
    return list(itertools.product(letters, repeat=n))
