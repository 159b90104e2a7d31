"""Hand transcription of the weight-multiplicity-free list, shared by tests.

Independent of ``schubert_smooth``: minuscule and quasi-minuscule weights come
from the Bourbaki plates in ``golden/make_golden.py``.
"""

from golden.make_golden import minuscule, quasi_minuscule


def wmf_expected(t: str, n: int, w: tuple[int, ...]) -> bool:
    if w in minuscule(t, n):
        return True
    if t == "A":
        support = [i for i, x in enumerate(w) if x]
        return n == 1 or (len(support) == 1 and support[0] in (0, n - 1))
    if t in ("B", "G") or (t == "C" and n == 2):
        return w == quasi_minuscule(t, n)
    if t == "C" and n == 3:
        return w == (0, 0, 1)
    return False


def golden_tables() -> dict:
    import json
    from pathlib import Path

    return json.loads((Path(__file__).parent / "golden" / "classification.json").read_text())


def positive_rows(rational, smooth) -> tuple[list, list]:
    """Library rows in the golden JSON shape (positive verdicts only)."""
    r = sorted([row.case.key, list(row.weight.coords)] for row in rational if row.rationally_smooth)
    s = sorted([row.case.key, list(row.weight.coords), row.vertex_type] for row in smooth if row.smooth)
    return r, s
