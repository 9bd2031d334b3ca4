"""Known sequence values used as regression targets."""

# Bi-avoiders of (1-2,0 1) in C_k wr S_n for n = 1, 2, ...
KNOWN_12_01 = {
    2: [2, 7, 34, 209, 1546, 13327],
    3: [3, 15, 101, 842, 8302],
    4: [4, 26, 224, 2361],
    5: [5, 40, 420, 5355],
}

# OEIS A002720, partial permutations of an n-set, offset 0.
A002720 = [
    1, 2, 7, 34, 209, 1546, 13327, 130922, 1441729, 17572114, 234662231,
    3405357682, 53334454417,
]

CATALAN = [1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796]
