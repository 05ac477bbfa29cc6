#!/usr/bin/env python3
"""Independent oracle for root-theoretic golden data.

Builds root systems by closing the simple roots under simple reflections
(the C++ library instead grows positive roots by root strings), then
evaluates the (L, Y) eigenspace bigradings used by the catalog.  The
output of this script is what the golden files under tests/golden were
frozen from.
"""
from fractions import Fraction
from itertools import product
import json
import sys

CARTAN = {
    # A[i][j] = <alpha_i, alpha_j^vee>
    "G2": [[2, -1], [-3, 2]],  # alpha_1 short
    "F4": [[2, -1, 0, 0], [-1, 2, -2, 0], [0, -1, 2, -1], [0, 0, -1, 2]],  # alpha_1, alpha_2 long
}


def reflect(beta, j, A):
    pair = sum(beta[i] * A[i][j] for i in range(len(beta)))
    out = list(beta)
    out[j] -= pair
    return tuple(out)


def roots(A):
    r = len(A)
    simple = [tuple(1 if i == j else 0 for i in range(r)) for j in range(r)]
    seen = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for b in frontier:
            for j in range(r):
                c = reflect(b, j, A)
                if c not in seen:
                    seen.add(c)
                    nxt.append(c)
        frontier = nxt
    return sorted(seen)


def pair(beta, alpha, A, lengths):
    # <beta, alpha^vee> via the symmetrised form
    r = len(A)
    G = [[Fraction(A[i][j] * lengths[j], 2) for j in range(r)] for i in range(r)]
    ip = lambda x, y: sum(x[i] * G[i][j] * y[j] for i in range(r) for j in range(r))
    return Fraction(2) * ip(beta, alpha) / ip(alpha, alpha)


def lengths_of(name):
    return {"G2": [2, 6], "F4": [4, 4, 2, 2]}[name]


def adjoint_bigrading(name, Lvals, alpha):
    A = CARTAN[name]
    R = roots(A)
    ln = lengths_of(name)
    out = {}
    for b in R:
        l = sum(b[i] * Lvals[i] for i in range(len(b)))
        if alpha is None:
            y = 0
        elif alpha == "HT":
            y = 2 * l
        else:
            y = pair(b, alpha, A, ln)
        key = (int(y - l), int(l))
        out[key] = out.get(key, 0) + 1
    out[(0, 0)] = out.get((0, 0), 0) + len(A)
    return out


def rep_bigrading(name, weights, Lvals, alpha, n):
    A = CARTAN[name]
    ln = lengths_of(name)
    out = {}
    for w in weights:
        l = sum(w[i] * Lvals[i] for i in range(len(w)))
        if alpha is None:
            y = 0
        elif alpha == "HT":
            y = 2 * l
        else:
            y = pair(w, alpha, A, ln) if any(w) else 0
        key = (int(y - l + Fraction(n, 2)), int(l + Fraction(n, 2)))
        out[key] = out.get(key, 0) + 1
    return out


def n_order(name, weights, Lvals, alpha):
    """Nilpotency index on V of the nilpositive element of an sl2 with neutral Y."""
    A = CARTAN[name]
    ln = lengths_of(name)
    top = 0
    for w in weights:
        if alpha is None:
            y = 0
        elif alpha == "HT":
            y = 2 * sum(w[i] * Lvals[i] for i in range(len(w)))
        else:
            y = pair(w, alpha, A, ln) if any(w) else 0
        top = max(top, y)
    return int(top) + 1


def short_roots(name):
    A = CARTAN[name]
    ln = lengths_of(name)
    r = len(A)
    G = [[Fraction(A[i][j] * ln[j], 2) for j in range(r)] for i in range(r)]
    ip = lambda x: sum(x[i] * G[i][j] * x[j] for i in range(r) for j in range(r))
    rs = roots(A)
    m = min(ip(b) for b in rs)
    return [b for b in rs if ip(b) == m]


def triples(d):
    return sorted([p, q, k] for (p, q), k in d.items())


def main():
    out = {}
    # G2, weight 6, Borel grading L = L1 + L2
    g2w = short_roots("G2") + [(0, 0)]
    L = [1, 1]
    rows = {"open": None, "codim1-short": (1, 0), "codim1-long": (0, 1), "closed": "HT"}
    for k, a in rows.items():
        out["G2-" + k] = {
            "V": triples(rep_bigrading("G2", g2w, L, a, 6)),
            "g": triples(adjoint_bigrading("G2", L, a)),
            "n_order": n_order("G2", g2w, L, a),
        }
    # F4, weight 16, Borel grading
    f4w = short_roots("F4") + [(0, 0, 0, 0), (0, 0, 0, 0)]
    L = [1, 1, 1, 1]
    for i in range(4):
        a = tuple(1 if j == i else 0 for j in range(4))
        out["F4-alpha%d" % (i + 1)] = {
            "V": triples(rep_bigrading("F4", f4w, L, a, 16)),
            "g": triples(adjoint_bigrading("F4", L, a)),
            "n_order": n_order("F4", f4w, L, a),
        }
    out["F4-counts"] = [len(roots(CARTAN["F4"])), len(short_roots("F4"))]
    json.dump(out, sys.stdout, indent=1)


if __name__ == "__main__":
    main()
