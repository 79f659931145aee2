"""Brute-force regularity for small binary matroids.

A binary matroid has an F7 minor iff contracting some independent set C of
size r - 3 leaves all seven nonzero classes of GF(2)^r / span(C) occupied.
F7* minors are F7 minors of the dual.
"""
import itertools
import sys


def rank(vectors):
    basis = {}
    for v in vectors:
        while v:
            top = v.bit_length() - 1
            if top not in basis:
                basis[top] = v
                break
            v ^= basis[top]
    return len(basis)


def reduce(v, basis):
    for top in sorted(basis, reverse=True):
        if v >> top & 1:
            v ^= basis[top]
    return v


def echelon(vectors):
    basis = {}
    for v in vectors:
        v = reduce(v, basis)
        if v:
            basis[v.bit_length() - 1] = v
            # keep fully reduced
            for k in list(basis):
                if k != v.bit_length() - 1 and basis[k] >> (v.bit_length() - 1) & 1:
                    basis[k] ^= v
    return basis


def has_f7(cols):
    r = rank(cols)
    if r < 3:
        return False
    n = len(cols)
    for c in itertools.combinations(range(n), r - 3):
        vs = [cols[i] for i in c]
        if rank(vs) != r - 3:
            continue
        basis = echelon(vs)
        classes = {reduce(cols[i], basis) for i in range(n) if i not in c}
        classes.discard(0)
        if len(classes) == 7:
            return True
    return False


def dual(cols):
    """Columns of a representation of the dual."""
    n = len(cols)
    r = rank(cols)
    # null space of the r x n matrix whose columns are cols
    rows = []
    height = max(c.bit_length() for c in cols) if cols else 0
    for b in range(height):
        row = 0
        for j, c in enumerate(cols):
            if c >> b & 1:
                row |= 1 << j
        rows.append(row)
    basis = echelon(rows)
    pivots = set(basis)
    free = [j for j in range(n) if j not in pivots]
    null = []
    for f in free:
        v = 1 << f
        for p, row in basis.items():
            if row >> f & 1:
                v |= 1 << p
        null.append(v)
    out = []
    for j in range(n):
        c = 0
        for i, v in enumerate(null):
            if v >> j & 1:
                c |= 1 << i
        out.append(c)
    assert len(null) == n - r
    return out


def is_regular(cols):
    return not has_f7(cols) and not has_f7(dual(cols))


def delete(cols, e):
    return cols[:e] + cols[e + 1:]


def contract(cols, e):
    v = cols[e]
    if v == 0:
        return delete(cols, e)
    top = v.bit_length() - 1
    return [c ^ v if c >> top & 1 else c for c in delete(cols, e)]


def regular_elements(cols):
    return [e for e in range(len(cols))
            if is_regular(delete(cols, e)) and is_regular(contract(cols, e))]


def from_identity_plus(rows):
    r = len(rows)
    cols = [1 << i for i in range(r)]
    for j in range(len(rows[0])):
        cols.append(sum(int(rows[i][j]) << i for i in range(r)))
    return cols


if __name__ == "__main__":
    t12 = from_identity_plus(["110001", "100011", "000111", "001110", "011100", "111000"])
    for e in range(12):
        d, c = delete(t12, e), contract(t12, e)
        print(e + 1, "del", is_regular(d), regular_elements(d),
              "con", is_regular(c), regular_elements(c))
        if len(sys.argv) < 2:
            break
