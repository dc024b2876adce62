#!/usr/bin/env python3
"""Regenerate the checked-in matrix/ring assets under data/.

Every matrix is written in the text exchange format `rows cols p` followed
by one whitespace-separated row per line.  Polynomial matrices carry a
`rows cols` header and one grammar-format entry per line, row major.
"""

import hashlib
import os

ROOT = os.path.join(os.path.dirname(os.path.abspath(__file__)), "..", "data")


def write(path, text):
    full = os.path.join(ROOT, path)
    os.makedirs(os.path.dirname(full), exist_ok=True)
    with open(full, "w") as fh:
        fh.write(text)


def mat(rows, cols, ones):
    """0/1 matrix text from a set of (row, col) positions (0-based)."""
    grid = [[0] * cols for _ in range(rows)]
    for r, c in ones:
        assert grid[r][c] == 0, f"duplicate entry ({r},{c})"
        grid[r][c] = 1
    lines = [f"{rows} {cols} 2"]
    lines += [" ".join(str(v) for v in row) for row in grid]
    return "\n".join(lines) + "\n"


def ident_block(block_row, block_col, size=4):
    """(row, col) pairs of a size x size identity placed on a block grid."""
    return [(block_row * size + i, block_col * size + i) for i in range(size)]


# --- action blocks ---------------------------------------------------------
# a_i: 4 x 12, one 4x4 identity per matrix.
for i, bc in enumerate([0, 1, 2], start=1):
    write(f"psi/a{i}.mat", mat(4, 12, ident_block(0, bc)))

# b_i: 12 x 24, three 4x4 identities per matrix.
b_cols = {1: (0, 1, 2), 2: (1, 3, 4), 3: (2, 4, 5)}
for i, cols in b_cols.items():
    ones = []
    for br, bc in enumerate(cols):
        ones += ident_block(br, bc)
    write(f"psi/b{i}.mat", mat(12, 24, ones))

# c6: 4 x 24, identity in the last 4-column block.
write("psi/c6.mat", mat(4, 24, ident_block(0, 5)))

# d_i: 15 x 24, single-unit rows given as row -> [cols] (1-based as printed).
d_rows = {
    3: {1: [9], 2: [10], 3: [11], 4: [12],
        5: [17], 6: [18], 7: [19], 8: [20], 9: [21], 10: [22], 11: [23], 12: [24],
        13: [13], 14: [14], 15: [15]},
    4: {1: [1, 21], 2: [2, 22], 3: [3, 23], 4: [4, 24],
        5: [5], 6: [6], 7: [7], 8: [8],
        14: [13], 15: [16]},
    5: {5: [17], 6: [18], 7: [19], 8: [20], 9: [21], 10: [22], 11: [23], 12: [24],
        13: [16]},
    6: {r: [r] for r in range(1, 16)},
}
for i, rows in d_rows.items():
    ones = [(r - 1, c - 1) for r, cs in rows.items() for c in cs]
    write(f"psi/d{i}.mat", mat(15, 24, ones))

# --- resolution differentials ---------------------------------------------
def pmat(rows, cols, entries):
    assert len(entries) == rows * cols
    return "\n".join([f"{rows} {cols}"] + list(entries)) + "\n"


write("phi/phi1.pmat", pmat(1, 3, ["u", "v", "w"]))
write(
    "phi/phi2.pmat",
    pmat(3, 4, ["x", "0", "-w", "v",
                "y", "w", "0", "-u",
                "z", "-v", "u", "0"]),
)
write(
    "phi/phi3.pmat",
    pmat(4, 4, ["0", "u", "v", "w",
                "u", "0", "z", "-y",
                "v", "-z", "0", "x",
                "w", "y", "-x", "0"]),
)
write(
    "phi/phi4.pmat",
    pmat(4, 4, ["0", "x", "y", "z",
                "x", "0", "-w", "v",
                "y", "w", "0", "-u",
                "z", "-v", "u", "0"]),
)

# --- ring presentations ----------------------------------------------------
write(
    "rings/A.ring",
    "\n".join([
        "p 2",
        "vars u:1 v:1 w:1 x:1 y:1 z:1",
        "rel u*x+v*y+w*z",
    ]) + "\n",
)

r_rels = [
    # linear in the module generators
    "u*x+v*y+w*z",
    "x*a+y*b+z*c",
    "w*b+v*c+x*d",
    "w*a+u*c+y*d",
    "v*a+u*b+z*d",
    # multiplication table of the extension generators
    "a^2-u*y*z",
    "a*b-z*e-v*y*z",
    "a*c-y*e-w*y*z",
    "a*d-u*e",
    "a*e-d*y*z",
    "b^2-v*x*z",
    "b*c-x*e",
    "b*d-v*e-v*w*z",
    "b*e-v*z*c",
    "c^2-w*x*y",
    "c*d-w*e-v*w*y",
    "c*e-w*y*b",
    "d^2-u*v*w",
    "d*e-v*w*a",
    "e^2-v*w*y*z",
]
write(
    "rings/R.ring",
    "\n".join([
        "p 2",
        "vars u:2 v:2 w:2 x:2 y:2 z:2 a:3 b:3 c:3 d:3 e:4",
    ] + [f"rel {r}" for r in r_rels]) + "\n",
)

# --- checksums --------------------------------------------------------------
entries = []
for dirpath, _, files in os.walk(ROOT):
    for f in sorted(files):
        if f == "CHECKSUMS":
            continue
        full = os.path.join(dirpath, f)
        rel = os.path.relpath(full, ROOT).replace(os.sep, "/")
        digest = hashlib.sha256(open(full, "rb").read()).hexdigest()
        entries.append((rel, digest))
entries.sort()
write("CHECKSUMS", "".join(f"{d}  {r}\n" for r, d in entries))
print(f"wrote {len(entries)} assets + CHECKSUMS")
