"""Independent computation of S(R_r) for the four SL_q(2) calculi.

R_r in degree <= D is the common kernel of eps, X_0, X_1, X_2 on words of
matrix entries; S(x) = sum (X_i X_j)(x) w_i (x) w_j. Prints dim S(R_r) and
whether w_0 (x) w_2 lies in it."""
import sys
from sympy import Matrix, eye, zeros
from uq_reps import Rep, word_entry, words


def functionals(rep, r, n):
    s, q, lam = rep.s, rep.q, rep.lam
    e, f = rep.power("e", 1, n), rep.power("f", 1, n)
    k = lambda p: rep.power("k", 1, n, p)
    X0 = (s ** -1) * e * k(-1) if r <= 2 else (s ** -5) * e * k(-5)
    X2 = s * f * k(-1) if r in (1, 3) else (s ** 5) * f * k(-5)
    X1 = q / lam * (eye(2 ** n) - k(-4))
    return [X0, X1, X2]


def image(r, D, s=2):
    """Columns spanning S(R_r), 9 x k sympy matrix."""
    rep = Rep(2, s)
    eps_rows, S_rows = [], []
    for n in range(0, D + 1):
        X = functionals(rep, r, n) if n else None
        for w in (words(2, n) if n else [()]):
            if n == 0:
                eps_rows.append([1, 0, 0, 0]); S_rows.append([0] * 9); continue
            eps = 1 if all(i == j for i, j in w) else 0
            eps_rows.append([eps] + [word_entry(Xi, n, 2, w) for Xi in X])
            S_rows.append([word_entry(X[i] * X[j], n, 2, w) for i in range(3) for j in range(3)])
    A = Matrix(eps_rows).T          # 4 x words
    ker = A.nullspace()
    S = Matrix(S_rows).T            # 9 x words
    return Matrix.hstack(*[S * v for v in ker]) if ker else zeros(9, 1)


def run(r, D, s=2):
    img = image(r, D, s)
    rank = img.rank()
    target = zeros(9, 1); target[0 * 3 + 2] = 1
    inside = Matrix.hstack(img, target).rank() == rank
    return rank, inside


if __name__ == "__main__":
    D = int(sys.argv[1]) if len(sys.argv) > 1 else 3
    for r in range(1, 5):
        dim, inside = run(r, D)
        print(f"r={r} D={D} dim={dim} w0w2_in={inside}")
