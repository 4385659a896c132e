#!/usr/bin/env python3
"""Generate the bundled nonabelian character tables under core/data/.

Dev-time only. Each group is built explicitly (permutations or unit
quaternions), characters are found numerically with Dixon-Schneider class
matrices, then made exact through eigenvalue multiplicities on cyclic
subgroups. The C++ loader re-checks every table exactly.

    python3 scripts/gen_character_tables.py core/data
"""
import itertools
import json
import math
import sys
from pathlib import Path

import networkx as nx
import numpy as np

TOL = 1e-6


# ---------------------------------------------------------------- groups

def perm_group(gens, n):
    ident = tuple(range(n))
    elems = [ident]
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                c = tuple(a[g[i]] for i in range(n))
                if c not in seen:
                    seen.add(c)
                    elems.append(c)
                    nxt.append(c)
        frontier = nxt
    return elems, lambda a, b: tuple(a[b[i]] for i in range(n))


def qmul(p, q):
    a1, b1, c1, d1 = p
    a2, b2, c2, d2 = q
    return (a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2)


def qkey(q):
    return tuple(round(x, 6) + 0.0 for x in q)


def quat_group(gens):
    one = (1.0, 0.0, 0.0, 0.0)
    elems = {qkey(one): one}
    frontier = [one]
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                c = qmul(a, g)
                k = qkey(c)
                if k not in elems:
                    elems[k] = c
                    nxt.append(c)
        frontier = nxt
    return list(elems.values())


class FiniteGroup:
    def __init__(self, elems, mul, key=lambda x: x):
        self.elems = elems
        n = len(elems)
        index = {key(e): i for i, e in enumerate(elems)}
        self.table = np.empty((n, n), dtype=np.int64)
        for i, a in enumerate(elems):
            for j, b in enumerate(elems):
                self.table[i, j] = index[key(mul(a, b))]
        self.identity = next(i for i in range(n) if all(self.table[i, j] == j for j in range(n)))
        self.inv = np.empty(n, dtype=np.int64)
        for i in range(n):
            self.inv[i] = int(np.where(self.table[i] == self.identity)[0][0])

    @property
    def order(self):
        return len(self.elems)

    def elem_order(self, g):
        k, x = 1, g
        while x != self.identity:
            x = self.table[x, g]
            k += 1
        return k

    def power(self, g, k):
        x = self.identity
        for _ in range(k):
            x = self.table[x, g]
        return x

    def conj_classes(self):
        n = self.order
        cls = [-1] * n
        classes = []
        for g in range(n):
            if cls[g] >= 0:
                continue
            members = sorted({int(self.table[self.table[h, g], self.inv[h]]) for h in range(n)})
            for m in members:
                cls[m] = len(classes)
            classes.append(members)
        return classes, cls


# ------------------------------------------------------------ characters

def character_table(G, classes, cls):
    r = len(classes)
    sizes = [len(c) for c in classes]
    reps = [c[0] for c in classes]
    # a[i][j][k] = #{x in C_i : x^{-1} g_k in C_j}
    mats = np.zeros((r, r, r))
    for k in range(r):
        gk = reps[k]
        for i in range(r):
            for x in classes[i]:
                y = G.table[G.inv[x], gk]
                mats[i, cls[y], k] += 1
    rng = np.random.default_rng(12345)
    combo = sum(rng.normal() * mats[i] for i in range(r))
    vals, vecs = np.linalg.eig(combo)
    if min(abs(a - b) for a, b in itertools.combinations(vals, 2)) < 1e-6 if r > 1 else False:
        raise RuntimeError("degenerate eigenvalues")
    chars = []
    for t in range(r):
        w = vecs[:, t] / vecs[0, t]
        s = sum((w[j] * np.conj(w[j])).real / sizes[j] for j in range(r))
        deg = math.sqrt(G.order / s)
        chars.append([deg * w[j] / sizes[j] for j in range(r)])
    return chars


def exact_values(G, classes, cls, chars, exponent):
    orders = [G.elem_order(c[0]) for c in classes]
    out = []
    for chi in chars:
        row = []
        for c, members in enumerate(classes):
            g = members[0]
            o = orders[c]
            powers = [cls[G.power(g, k)] for k in range(o)]
            num = [0] * exponent
            for j in range(o):
                m = sum(chi[powers[k]] * np.exp(-2j * math.pi * j * k / o) for k in range(o)) / o
                if abs(m.imag) > TOL or abs(m.real - round(m.real)) > TOL or round(m.real) < 0:
                    raise RuntimeError(f"bad multiplicity {m}")
                num[j * (exponent // o)] += int(round(m.real))
            approx = sum(num[k] * np.exp(2j * math.pi * k / exponent) for k in range(exponent))
            if abs(approx - chi[c]) > 1e-5:
                raise RuntimeError("exact value mismatch")
            row.append(num)
        out.append(row)
    return out


def build(name, G, class_key, natural_picker, order_chars):
    classes, cls = G.conj_classes()
    classes.sort(key=lambda c: class_key(G, c))
    cls = [0] * G.order
    for i, c in enumerate(classes):
        for m in c:
            cls[m] = i
    assert classes[0] == [G.identity]
    orders = [G.elem_order(c[0]) for c in classes]
    exponent = math.lcm(*orders)
    chars = character_table(G, classes, cls)
    chars.sort(key=lambda ch: (not all(abs(v - 1) < TOL for v in ch), round(ch[0].real), [round(v.real, 4) for v in ch], [round(v.imag, 4) for v in ch]))
    chars = [chars[i] for i in order_chars(G, classes, chars)]
    assert all(abs(v - 1) < TOL for v in chars[0])
    exact = exact_values(G, classes, cls, chars, exponent)
    labels, seen = [], {}
    for o in orders:
        seen[o] = seen.get(o, 0) + 1
        labels.append(f"{o}{chr(ord('a') + seen[o] - 1)}")
    power_map = [[cls[G.power(c[0], k)] for k in range(1, exponent + 1)] for c in classes]
    gamma = natural_picker(G, classes, chars)
    return {
        "name": name,
        "order": G.order,
        "exponent": exponent,
        "classes": [{"label": labels[i], "size": len(c), "order": orders[i]} for i, c in enumerate(classes)],
        "power_map": power_map,
        "characters": [[{"num": v, "den": 1} for v in row] for row in exact],
        "natural_gamma": gamma,
    }


# ----------------------------------------------------------- orderings

def mckay_graph(chars, classes, gamma_row, order):
    r = len(chars)
    sizes = [len(c) for c in classes]
    M = np.zeros((r, r), dtype=int)
    for i in range(r):
        for j in range(r):
            s = sum(sizes[c] * gamma_row[c] * chars[i][c] * np.conj(chars[j][c]) for c in range(r)) / order
            M[i, j] = int(round(s.real))
    return M


def affine_dynkin(kind, rank):
    g = nx.MultiGraph()
    g.add_nodes_from(range(rank + 1))
    if kind == "A":
        if rank == 1:
            g.add_edge(0, 1)
            g.add_edge(0, 1)
        else:
            for i in range(rank + 1):
                g.add_edge(i, (i + 1) % (rank + 1))
    elif kind == "D":
        for i in range(1, rank - 1):
            g.add_edge(i, i + 1)
        g.add_edge(rank - 2, rank)
        g.add_edge(0, 2)
    elif kind == "E":
        chain = {6: [1, 3, 4, 5, 6], 7: [1, 3, 4, 5, 6, 7], 8: [1, 3, 4, 5, 6, 7, 8]}[rank]
        for a, b in zip(chain, chain[1:]):
            g.add_edge(a, b)
        g.add_edge(2, 4)
        g.add_edge(0, {6: 2, 7: 1, 8: 8}[rank])
    return g


def sl2_order(kind, rank):
    def order_chars(G, classes, chars):
        gamma = [2 * G.elems[c[0]][0] for c in classes]
        M = mckay_graph(chars, classes, gamma, G.order)
        h = nx.MultiGraph()
        h.add_nodes_from(range(len(chars)))
        for i in range(len(chars)):
            for j in range(i, len(chars)):
                for _ in range(M[i, j] if i != j else 0):
                    h.add_edge(i, j)
        target = affine_dynkin(kind, rank)
        triv = next(i for i, ch in enumerate(chars) if all(abs(v - 1) < TOL for v in ch))
        matcher = nx.algorithms.isomorphism.MultiGraphMatcher(target, h)
        best = None
        for iso in matcher.isomorphisms_iter():
            if iso[0] != triv:
                continue
            perm = [iso[i] for i in range(rank + 1)]
            if best is None or perm < best:
                best = perm
        if best is None:
            raise RuntimeError("McKay graph does not match the affine diagram")
        return best
    return order_chars


def quat_class_key(G, c):
    q = G.elems[c[0]]
    # identity first, then by order, then by trace descending
    return (G.elem_order(c[0]), -round(q[0], 6), len(c))


def natural_sl2(G, classes, chars):
    vals = [2 * G.elems[c[0]][0] for c in classes]
    for i, ch in enumerate(chars):
        if all(abs(ch[c] - vals[c]) < TOL for c in range(len(classes))):
            return [1 if j == i else 0 for j in range(len(chars))]
    raise RuntimeError("natural character not irreducible")


def by_degree(G, classes, chars):
    return list(range(len(chars)))


# -------------------------------------------------------------- catalog

def binary_dihedral(m):
    t = (math.cos(math.pi / m), math.sin(math.pi / m), 0.0, 0.0)
    j = (0.0, 0.0, 1.0, 0.0)
    elems = quat_group([t, j])
    assert len(elems) == 4 * m
    G = FiniteGroup(elems, qmul, qkey)
    return build(f"binary-dihedral-{m}", G, quat_class_key, natural_sl2, sl2_order("D", m + 2))


def binary_polyhedral(name, gens, size, rank):
    elems = quat_group(gens)
    assert len(elems) == size, (name, len(elems))
    G = FiniteGroup(elems, qmul, qkey)
    return build(name, G, quat_class_key, natural_sl2, sl2_order("E", rank))


def cycle_type(p):
    n, seen, lens = len(p), set(), []
    for i in range(n):
        if i in seen:
            continue
        k, j = 0, i
        while j not in seen:
            seen.add(j)
            j = p[j]
            k += 1
        lens.append(k)
    return tuple(sorted(lens, reverse=True))


def perm_class_key(G, c):
    p = G.elems[c[0]]
    return (G.elem_order(c[0]), [-x for x in cycle_type(p)], min(c))


def a4():
    elems, mul = perm_group([(1, 2, 0, 3), (1, 0, 3, 2)], 4)
    G = FiniteGroup(elems, mul)
    c123 = elems.index((1, 2, 0, 3))

    def key(G, c):
        o = G.elem_order(c[0])
        if o == 3:
            return (1, 0 if c123 in c else 1)
        return ({1: 0, 2: 2}[o], 0)

    def order_chars(G, classes, chars):
        w = complex(-0.5, math.sqrt(3) / 2)
        lin = [i for i, ch in enumerate(chars) if abs(ch[0] - 1) < TOL]
        triv = next(i for i in lin if abs(chars[i][1] - 1) < TOL)
        c1 = next(i for i in lin if abs(chars[i][1] - w) < TOL)
        c2 = next(i for i in lin if abs(chars[i][1] - w * w) < TOL)
        c3 = next(i for i, ch in enumerate(chars) if abs(ch[0] - 3) < TOL)
        return [triv, c1, c2, c3]

    def natural(G, classes, chars):
        return [0, 0, 0, 1]

    return build("A4", G, key, natural, order_chars)


def rotation_character(target):
    def pick(G, classes, chars):
        for i, ch in enumerate(chars):
            if abs(ch[0] - 3) < TOL and target(G, classes, ch):
                return [1 if j == i else 0 for j in range(len(chars))]
        raise RuntimeError("rotation character not found")
    return pick


def s4():
    elems, mul = perm_group([(1, 2, 3, 0), (1, 0, 2, 3)], 4)
    G = FiniteGroup(elems, mul)

    def is_rotation(G, classes, ch):
        for c, members in enumerate(classes):
            if cycle_type(G.elems[members[0]]) == (4,):
                return abs(ch[c] - 1) < TOL
        return False

    return build("S4", G, perm_class_key, rotation_character(is_rotation), by_degree)


def a5():
    elems, mul = perm_group([(1, 2, 3, 4, 0), (1, 2, 0, 3, 4)], 5)
    G = FiniteGroup(elems, mul)
    return build("A5", G, perm_class_key, rotation_character(lambda G, cl, ch: True), by_degree)


def main():
    out = Path(sys.argv[1] if len(sys.argv) > 1 else "core/data")
    out.mkdir(parents=True, exist_ok=True)
    h = 0.5
    phi = (1 + math.sqrt(5)) / 2
    tables = [a4(), s4(), a5()]
    tables += [binary_dihedral(m) for m in range(2, 9)]
    tables.append(binary_polyhedral("binary-tetrahedral", [(0, 1, 0, 0), (0, 0, 1, 0), (h, h, h, h)], 24, 6))
    s = math.sqrt(0.5)
    tables.append(binary_polyhedral("binary-octahedral", [(h, h, h, h), (s, s, 0, 0)], 48, 7))
    tables.append(binary_polyhedral("binary-icosahedral", [(h, h, h, h), (phi / 2, 1 / (2 * phi), h, 0)], 120, 8))
    for t in tables:
        path = out / f"{t['name']}.json"
        path.write_text(json.dumps(t, separators=(",", ":")) + "\n")
        print(f"{path}: order {t['order']}, {len(t['classes'])} classes, exponent {t['exponent']}")


if __name__ == "__main__":
    main()
