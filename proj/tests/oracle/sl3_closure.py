"""Independent computation of S(R) for the SL_q(3) calculi with
X_13 = X_12 X_23 - alpha X_23 X_12 and X_31 = X_32 X_21 - beta X_21 X_32.

Usage: sl3_closure.py GAMMA [D]   (GAMMA 1: alpha=q^-1, beta=q; 2: alpha=q, beta=q^-1)
Reads candidate elements from stdin, one per line as 'c:i,j c:i,j ...' with
labels from LABELS, and prints whether each lies in S(R)."""
import sys
from sympy import Rational, eye
from sympy.polys.matrices import DomainMatrix
from sympy import QQ
from uq_reps import Rep, word_entry, words

LABELS = ["1", "2", "21", "31", "32", "12", "13", "23"]


def functionals(rep, alpha, beta, n):
    s, q, lam = rep.s, rep.q, rep.lam
    e = lambda i: rep.power("e", i, n)
    f = lambda i: rep.power("f", i, n)
    k = lambda i, p: rep.power("k", i, n, p)
    X = {}
    for i in (1, 2):
        X[str(i)] = q / lam * (eye(3 ** n) - k(i, -4))
        X[f"{i}{i+1}"] = s ** -1 * e(i) * k(i, -1)
        X[f"{i+1}{i}"] = s * f(i) * k(i, -1)
    X["13"] = X["12"] * X["23"] - alpha * X["23"] * X["12"]
    X["31"] = X["32"] * X["21"] - beta * X["21"] * X["32"]
    return [X[l] for l in LABELS]


def symmetric_space(gamma, D, s=2):
    rep = Rep(3, s)
    q = rep.q
    alpha, beta = (1 / q, q) if gamma == 1 else (q, 1 / q)
    m = len(LABELS)
    eps_rows, S_rows = [[1] + [0] * m], [[0] * (m * m)]
    for n in range(1, D + 1):
        X = functionals(rep, alpha, beta, n)
        XX = [[X[i] * X[j] for j in range(m)] for i in range(m)]
        for w in words(3, n):
            eps_rows.append([1 if all(i == j for i, j in w) else 0] + [word_entry(Xi, n, 3, w) for Xi in X])
            S_rows.append([word_entry(XX[i][j], n, 3, w) for i in range(m) for j in range(m)])
    A = DomainMatrix.from_list_sympy(len(eps_rows), m + 1, eps_rows).convert_to(QQ).transpose()
    ker = A.nullspace().transpose()                      # words x k
    S = DomainMatrix.from_list_sympy(len(S_rows), m * m, S_rows).convert_to(QQ).transpose()
    img = S * ker
    return rep, img


def parse(line, rep):
    v = [Rational(0)] * (len(LABELS) ** 2)
    for tok in line.split():
        c, pair = tok.split(":")
        i, j = pair.split(",")
        v[LABELS.index(i) * len(LABELS) + LABELS.index(j)] += Rational(eval(c, {"q": rep.q, "lam": rep.lam}))
    return v


if __name__ == "__main__":
    gamma = int(sys.argv[1])
    D = int(sys.argv[2]) if len(sys.argv) > 2 else 2
    rep, img = symmetric_space(gamma, D)
    r = img.rank()
    print(f"gamma={gamma} D={D} dim={r}")
    for line in sys.stdin:
        line = line.strip()
        if not line:
            continue
        v = DomainMatrix.from_list_sympy(len(LABELS) ** 2, 1, [[x] for x in parse(line, rep)]).convert_to(QQ)
        print(("in   " if img.hstack(v).rank() == r else "OUT  ") + line)
