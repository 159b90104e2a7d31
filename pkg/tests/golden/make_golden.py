"""
Hand transcription of the rational smoothness and smoothness classifications.

Standalone on purpose: nothing from ``schubert_smooth`` is imported.  Each
group case is written down with the Bourbaki type of its fixed-point dual
group (in the labels the library reports), its isogeny, and the list of
non-minuscule weights the classification allows.  Minuscule weights come
from the Bourbaki plates.

    python3 tests/golden/make_golden.py            # rewrite the JSON files
    python3 tests/golden/make_golden.py --check    # exit 1 if they differ
"""

from __future__ import annotations

import itertools
import json
import sys
from pathlib import Path

HERE = Path(__file__).resolve().parent
MAX_RANK, COORD_BOUND, A_FAMILY_BOUND = 6, 4, 6
AS, S = "absolutely_special", "special_not_absolutely_special"


def fundamental(n: int, i: int) -> tuple[int, ...]:
    return tuple(int(k == i - 1) for k in range(n))


def minuscule(t: str, n: int) -> set[tuple[int, ...]]:
    """Bourbaki plates: minuscule fundamental weights."""
    idx = {"A": range(1, n + 1), "B": [n], "C": [1], "D": [1, n - 1, n],
           "E": {6: [1, 6], 7: [7], 8: []}.get(n, []), "F": [], "G": []}[t]
    return {fundamental(n, i) for i in idx}


def quasi_minuscule(t: str, n: int) -> tuple[int, ...]:
    """Bourbaki plates: highest short root in fundamental coordinates."""
    if t == "A":
        return tuple(2 for _ in range(n)) if n == 1 else tuple(int(k in (0, n - 1)) for k in range(n))
    i = {"B": 1, "C": 2, "D": 2, "F": 4, "G": 1}.get(t)
    if t == "E":
        i = {6: 2, 7: 1, 8: 8}[n]
    return fundamental(n, i)


def in_root_lattice(t: str, n: int, w: tuple[int, ...]) -> bool:
    """Only needed for B_n and A_1 (the adjoint fixed groups)."""
    if t == "A" and n == 1:
        return w[0] % 2 == 0
    if t == "B":
        return w[-1] % 2 == 0
    raise ValueError(t)


def grid(t: str, n: int) -> list[tuple[int, ...]]:
    pts = {c for c in itertools.product(range(COORD_BOUND + 1), repeat=n) if any(c)}
    if t == "A":
        for l in range(1, A_FAMILY_BOUND + 1):
            for i in {1, n}:
                pts.add(tuple(l * x for x in fundamental(n, i)))
    return sorted(pts)


def cases():
    """(key, fixed type, rank, adjoint?, vertex types, extra rule) per group.

    ``extra(w)`` is True for the non-minuscule weights in the list.
    """
    out = []
    for n in range(1, MAX_RANK + 1):
        if n == 1:
            out.append((f"A_{n}", "A", n, False, [AS], lambda w: True))                         # PGL_2: any
        else:
            out.append((f"A_{n}", "A", n, False, [AS],
                        lambda w, n=n: sum(1 for x in w if x) == 1 and (w[0] or w[-1])))          # PGL_n: l*omega_{1,n-1}
    for n in range(2, MAX_RANK + 1):                                                         # SO_{2n+1}
        if n == 2:   # SO_5 = PSp_4: quasi-minuscule, labelled as B2
            out.append(("B_2", "B", 2, False, [AS], lambda w: w == quasi_minuscule("B", 2)))
        else:        # SO_7: omega_3 of C3
            out.append((f"B_{n}", "C", n, False, [AS], lambda w, n=n: n == 3 and w == (0, 0, 1)))
    for n in range(3, MAX_RANK + 1):                                                         # PSp_{2n}: quasi-minuscule
        out.append((f"C_{n}", "B", n, False, [AS], lambda w, n=n: w == quasi_minuscule("B", n)))
    for n in range(4, MAX_RANK + 1):
        out.append((f"D_{n}", "D", n, False, [AS], lambda w: False))
    out.append(("E_6", "E", 6, False, [AS], lambda w: False))
    out.append(("F_4", "F", 4, False, [AS], lambda w: False))
    out.append(("G_2", "G", 2, False, [AS], lambda w: w == quasi_minuscule("G", 2)))
    for n in range(3, MAX_RANK + 1):                                                         # PU_{2n}: PU_6 omega_3
        out.append((f"B-C_{n}", "C", n, False, [AS], lambda w, n=n: n == 3 and w == (0, 0, 1)))
    out.append(("C-BC_1", "A", 1, True, [AS, S], lambda w: True))                            # PU_3: any
    for n in range(2, MAX_RANK + 1):                                                         # PU_{2n+1}: quasi-minuscule
        out.append((f"C-BC_{n}", "B", n, True, [AS, S], lambda w, n=n: w == quasi_minuscule("B", n)))
    for n in range(2, MAX_RANK + 1):                                                         # PSO_{2n+2}: quasi-minuscule
        out.append((f"C-B_{n}", "B", n, False, [AS], lambda w, n=n: w == quasi_minuscule("B", n)))
    out.append(("F_4^I", "F", 4, False, [AS], lambda w: False))
    out.append(("G_2^I", "G", 2, False, [AS], lambda w: w == quasi_minuscule("G", 2)))     # ramified triality
    out.append(("B-C_2/PU_4", "B", 2, False, [AS], lambda w: w == quasi_minuscule("B", 2)))  # PU_4 = PSO_6
    return out


def build_tables() -> dict:
    rational, smooth = [], []
    for key, t, n, adjoint, vertices, extra in cases():
        mins = minuscule(t, n)
        qm = quasi_minuscule(t, n)
        for w in grid(t, n):
            if adjoint and not in_root_lattice(t, n, w):
                continue
            is_min = w in mins
            if is_min or extra(w):
                rational.append([key, list(w)])
            for v in vertices:
                exotic = key.startswith("C-BC_") and w == qm and v == S
                if is_min or exotic:
                    smooth.append([key, list(w), v])
    return {
        "schema": "schubert-smooth-golden/1",
        "bounds": {"max_rank": MAX_RANK, "coord_bound": COORD_BOUND, "a_family_bound": A_FAMILY_BOUND},
        "rationally_smooth": sorted(rational),
        "smooth": sorted(smooth),
    }


def main(argv: list[str]) -> int:
    text = json.dumps(build_tables(), indent=1, sort_keys=True) + "\n"
    path = HERE / "classification.json"
    if "--check" in argv:
        return 0 if path.read_text() == text else 1
    path.write_text(text)
    return 0


if __name__ == "__main__":
    sys.exit(main(sys.argv[1:]))
