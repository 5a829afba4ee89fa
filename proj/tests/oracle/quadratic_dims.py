"""dim of T(V)/(S) in low degrees by rank of J_n = sum V^a S V^b, mod a prime.
Usage: quadratic_dims.py sl3 GAMMA NMAX | sl2 R NMAX"""
import sys
import sl2_closure
from sl3_closure import symmetric_space, LABELS

P = 2 ** 31 - 1


def modp(x):
    return x.numerator % P * pow(x.denominator % P, P - 2, P) % P


def rank_mod(rows):
    piv = {}
    r = 0
    for row in rows:
        row = dict(row)
        while row:
            c = min(row)
            if c in piv:
                f = row[c]
                for k, v in piv[c].items():
                    row[k] = (row.get(k, 0) - f * v) % P
                    if row[k] == 0:
                        del row[k]
            else:
                inv = pow(row[c], P - 2, P)
                piv[c] = {k: v * inv % P for k, v in row.items()}
                r += 1
                break
    return r


def main():
    family, which, nmax = sys.argv[1], int(sys.argv[2]), int(sys.argv[3])
    if family == "sl3":
        m = len(LABELS)
        cols = symmetric_space(which, 2)[1].to_Matrix().columnspace()
    else:
        m = 3
        cols = sl2_closure.image(which, 3).columnspace()
    S = [{k: modp(c[k]) for k in range(m * m) if c[k] != 0} for c in cols]
    print("dim S", len(S))
    dims = [1, m]
    for n in range(2, nmax + 1):
        rows = []
        for a in range(n - 1):
            b = n - 2 - a
            for left in range(m ** a):
                for right in range(m ** b):
                    rows.append([{(left * m * m + k) * m ** b + right: v for k, v in s.items()} for s in S])
        flat = [r for group in rows for r in group]
        dims.append(m ** n - rank_mod(flat))
        print(n, dims[-1], flush=True)


main()
