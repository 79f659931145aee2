"""Independent count of 3-connected binary matroids on n elements.

Rank r <= n - r: every spanning n-set of points of PG(r-1, 2) is equivalent
under GL(r, 2) to one containing the standard basis, so only those are
scanned. Two sets are equivalent iff their canonical forms agree, where the
canonical form is the least sorted image over all ordered bases contained in
the set, each mapped to the standard basis. Ranks r > n - r are counted
through duality. 3-connectivity is tested straight from the connectivity
function over all subsets.

Usage: enumeration_oracle.py N   (prints one line per rank, then totals)
"""
import itertools
import sys

from regularity_oracle import is_regular, rank, regular_elements


def three_connected(cols):
    n = len(cols)
    r = rank(cols)
    full = (1 << n) - 1
    ranks = [0] * (1 << n)
    for mask in range(1, 1 << n):
        ranks[mask] = rank([cols[i] for i in range(n) if mask >> i & 1])
    for mask in range(1, full):
        k = bin(mask).count("1")
        lam = ranks[mask] + ranks[full ^ mask] - r
        if lam == 0:
            return False
        if lam <= 1 and 2 <= k <= n - 2:
            return False
    return True


def coordinates(v, basis):
    """Coordinates of v in the ordered basis (solve by elimination)."""
    r = len(basis)
    # augmented rows: basis vector with a tag bit per basis index
    rows = [(b, 1 << i) for i, b in enumerate(basis)]
    pivots = []
    for b, tag in rows:
        for p, (pb, pt) in pivots:
            if b >> p & 1:
                b ^= pb
                tag ^= pt
        top = b.bit_length() - 1
        for k, (p, (pb, pt)) in enumerate(pivots):
            if pb >> top & 1:
                pivots[k] = (p, (pb ^ b, pt ^ tag))
        pivots.append((top, (b, tag)))
    out = 0
    for p, (pb, pt) in pivots:
        if v >> p & 1:
            v ^= pb
            out ^= pt
    assert v == 0
    return out


def canonical(points, r):
    best = None
    for basis in itertools.permutations(points, r):
        if rank(list(basis)) != r:
            continue
        image = tuple(sorted(coordinates(p, basis) for p in points))
        if best is None or image < best:
            best = image
    return best


def classes_of_rank(n, r):
    basis = [1 << i for i in range(r)]
    rest = [v for v in range(1, 1 << r) if v not in basis]
    seen = {}
    for extra in itertools.combinations(rest, n - r):
        pts = basis + list(extra)
        if not three_connected(pts):
            continue
        key = canonical(pts, r)
        seen.setdefault(key, pts)
    return list(seen.values())


def main():
    n = int(sys.argv[1])
    total = 0
    nonregular = 0
    histogram = {}
    for r in range(1, n):
        if r <= n - r:
            found = classes_of_rank(n, r)
        else:
            found = classes_of_rank(n, n - r)
        print(f"rank {r}: {len(found)}")
        total += len(found)
        for cols in found:
            if r > n - r:
                continue  # R is duality invariant; count each pair once below
            if not is_regular(cols):
                k = len(regular_elements(cols))
                weight = 1 if 2 * r == n else 2
                nonregular += weight
                histogram[k] = histogram.get(k, 0) + weight
    print(f"classes: {total}")
    print(f"non-regular: {nonregular}")
    print("histogram: " + " ".join(f"{k}:{v}" for k, v in sorted(histogram.items())))


if __name__ == "__main__":
    main()
