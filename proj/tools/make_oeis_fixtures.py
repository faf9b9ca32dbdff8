#!/usr/bin/env python3
"""Regenerates the bundled OEIS b-file fixtures under data/oeis/.

Every sequence is computed from a characterization that is independent of the
C++ library's recurrences, so the fixture comparison is a genuine cross-check
of two implementations:

  A008292  Eulerian numbers        alternating-sum closed form
                                   T(n,k) = sum_j (-1)^j C(n+1,j) (k+1-j)^n
  A008517  2nd-order Eulerian      descents counted over all Stirling
                                   permutations of {1,1,...,n,n}
  A219512  3rd-order Eulerian      descents over 3-Stirling permutations
                                   (three copies of each letter)
  A059364  |M(n,k)|                coefficients of prod_{m=1}^{n-1} (m x + m - 1)

All triangles are emitted row by row, n >= 1, k = 0..n-1, as standard b-file
"index value" lines with indices starting at 1.
"""

import math
from pathlib import Path

OUT_DIR = Path(__file__).resolve().parent.parent / "data" / "oeis"


def eulerian_rows(n_max):
    rows = []
    for n in range(1, n_max + 1):
        row = []
        for k in range(n):
            row.append(sum((-1) ** j * math.comb(n + 1, j) * (k + 1 - j) ** n
                           for j in range(k + 1)))
        rows.append(row)
    return rows


def stirling_permutation_descent_rows(copies, n_max):
    """Row n counts descents over all permutations of {1^copies,...,n^copies}
    in which everything between two copies of m exceeds m.  Those are exactly
    the words built by inserting the block m^copies into any gap, order by
    order."""
    rows = []
    for n in range(1, n_max + 1):
        counts = [0] * n

        def insert(perm, m):
            if m > n:
                d = sum(1 for i in range(len(perm) - 1) if perm[i] > perm[i + 1])
                counts[d] += 1
                return
            block = (m,) * copies
            for gap in range(len(perm) + 1):
                insert(perm[:gap] + block + perm[gap:], m + 1)

        insert((1,) * copies, 2)
        rows.append(counts)
    return rows


def abs_m_rows(n_max):
    rows = []
    for n in range(1, n_max + 1):
        coeffs = [1]
        for m in range(1, n):
            # multiply by (m x + m - 1)
            nxt = [0] * (len(coeffs) + 1)
            for i, c in enumerate(coeffs):
                nxt[i] += c * (m - 1)
                nxt[i + 1] += c * m
            coeffs = nxt
        rows.append([abs(c) for c in coeffs[:n]] + [0] * (n - len(coeffs)))
    return rows


def write_bfile(name, comment, rows):
    OUT_DIR.mkdir(parents=True, exist_ok=True)
    path = OUT_DIR / name
    with path.open("w") as f:
        f.write(f"# {comment}\n")
        index = 1
        for row in rows:
            for value in row:
                f.write(f"{index} {value}\n")
                index += 1
    print(f"wrote {path} ({index - 1} entries)")


def main():
    eul = eulerian_rows(20)
    assert eul[3] == [1, 11, 11, 1]
    assert eul[6] == [1, 120, 1191, 2416, 1191, 120, 1]
    write_bfile("b008292.txt",
                "A008292 Eulerian numbers, rows n>=1 (generated offline, "
                "see tools/make_oeis_fixtures.py)", eul)

    second = stirling_permutation_descent_rows(2, 8)
    assert second[2] == [1, 8, 6]
    assert second[6] == [1, 240, 5610, 32120, 58140, 33984, 5040]
    assert all(sum(row) == math.prod(range(1, 2 * len(row), 2)) for row in second)
    write_bfile("b008517.txt",
                "A008517 second-order Eulerian numbers, rows n>=1 (generated "
                "offline, see tools/make_oeis_fixtures.py)", second)

    third = stirling_permutation_descent_rows(3, 7)
    assert third[1] == [1, 3]
    assert all(sum(row) == math.prod(range(1, 3 * len(row), 3)) for row in third)
    write_bfile("b219512.txt",
                "A219512 third-order Eulerian numbers, rows n>=1 (generated "
                "offline, see tools/make_oeis_fixtures.py)", third)

    m_abs = abs_m_rows(18)
    assert m_abs[4] == [0, 6, 29, 46, 24]
    assert m_abs[6] == [0, 120, 874, 2521, 3604, 2556, 720]
    write_bfile("b059364.txt",
                "A059364 unsigned row-sum polynomial coefficients, rows n>=1 "
                "(generated offline, see tools/make_oeis_fixtures.py)", m_abs)


if __name__ == "__main__":
    main()
