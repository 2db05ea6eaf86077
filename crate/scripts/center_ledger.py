#!/usr/bin/env python3
"""Brute-force ledger of n where the union-of-annihilators center formula
disagrees with the true graph center of the zero-divisor graph of Z_n.

Adjacency is built by direct multiplication, distances by repeated boolean
matrix products. Nothing here shares code with the Rust crates.

usage: center_ledger.py N_MAX > ledger.txt
"""
import sys
from math import gcd

import numpy as np


def prime_divisors(n):
    out, m, p = [], n, 2
    while p * p <= m:
        if m % p == 0:
            out.append(p)
            while m % p == 0:
                m //= p
        p += 1
    if m > 1:
        out.append(m)
    return out


def center(n):
    verts = [a for a in range(1, n) if gcd(a, n) > 1]
    if not verts:
        return set()
    v = np.array(verts, dtype=np.int64)
    adj = (np.outer(v, v) % n == 0)
    np.fill_diagonal(adj, False)
    size = len(verts)
    reach = np.eye(size, dtype=bool)
    frontier = reach.copy()
    ecc = np.zeros(size, dtype=np.int64)
    step = 0
    a = adj.astype(np.float32)
    while True:
        step += 1
        nxt = (frontier.astype(np.float32) @ a) > 0
        new = nxt & ~reach
        if not new.any():
            break
        ecc[new.any(axis=1)] = step
        reach |= new
        frontier = new
    assert reach.all(), f"disconnected at n={n}"
    lo = ecc.min()
    return {verts[i] for i in range(size) if ecc[i] == lo}


def formula(n):
    ps = prime_divisors(n)
    if ps == [n]:
        return set()
    return {k * (n // p) for p in ps for k in range(1, p)}


def main():
    n_max = int(sys.argv[1])
    for n in range(2, n_max + 1):
        if center(n) != formula(n):
            print(n)


if __name__ == "__main__":
    main()
