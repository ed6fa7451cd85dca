"""Shared fixtures and independent oracles for the test suite.

The oracles here deliberately avoid the library's own linear algebra:
sympy does the row reduction and nullspaces, and the closure oracles
work on raw coefficient tuples.  Agreement between the two stacks is
what the cross-validation tests assert.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import sympy

import splitsuper as ss


# ---------------------------------------------------------------------------
# sympy-backed linear algebra oracles


def sympy_rref(rows: Sequence[Sequence[Fraction]]) -> tuple[tuple[Fraction, ...], ...]:
    """Reduced row echelon form with zero rows dropped, via sympy."""
    if not rows:
        return ()
    m = sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) for x in row] for row in rows])
    reduced, _ = m.rref()
    out = []
    for i in range(reduced.rows):
        row = tuple(Fraction(int(v.p), int(v.q)) for v in reduced.row(i))
        if any(row):
            out.append(row)
    return tuple(out)


def sympy_nullspace(rows: Sequence[Sequence[Fraction]]) -> list[tuple[Fraction, ...]]:
    m = sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) for x in row] for row in rows])
    out = []
    for vec in m.nullspace():
        out.append(tuple(Fraction(int(v.p), int(v.q)) for v in vec))
    return out


def sympy_charpoly(rows: Sequence[Sequence[Fraction]]) -> list[Fraction]:
    """Monic characteristic polynomial coefficients, highest degree first."""
    m = sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) for x in row] for row in rows])
    lam = sympy.Symbol("lam")
    poly = m.charpoly(lam)
    return [Fraction(int(c.p), int(c.q)) for c in poly.all_coeffs()]


def sympy_rational_eigenvalues(rows: Sequence[Sequence[Fraction]]) -> set[Fraction]:
    m = sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) for x in row] for row in rows])
    out = set()
    for val in m.eigenvals():
        if val.is_rational:
            out.add(Fraction(int(val.p), int(val.q)))
    return out


# ---------------------------------------------------------------------------
# closure oracles on raw vectors


def _sympy_span_contains(basis: list[tuple], vec: tuple) -> bool:
    if not any(vec):
        return True
    if not basis:
        return False
    m = sympy.Matrix([list(b) for b in basis])
    ranked = m.rank()
    ext = m.col_join(sympy.Matrix([list(vec)]))
    return ext.rank() == ranked


def naive_ideal_closure(alg: ss.Superalgebra, seeds: Iterable[tuple]) -> list[tuple]:
    """Two-sided ideal closure by repeated multiplication, sympy spans only."""
    f = alg.field
    basis: list[tuple] = []

    def absorb(vec: tuple) -> bool:
        fr = tuple(Fraction(str(x)) if not isinstance(x, Fraction) else x for x in vec)
        if _sympy_span_contains(basis, fr):
            return False
        basis.append(fr)
        return True

    queue = [tuple(v) for v in seeds]
    for v in queue:
        absorb(v)
    while queue:
        v = queue.pop()
        for j in range(alg.dim):
            unit = tuple(f.one() if i == j else f.zero() for i in range(alg.dim))
            for left, right in ((v, unit), (unit, v)):
                prod = alg.product(list(left), list(right))
                if any(not f.is_zero(x) for x in prod):
                    if absorb(tuple(prod)):
                        queue.append(tuple(prod))
    return basis


def naive_reachable(roots: list, start, letters: list) -> set:
    """Reachability closure for the plain connection relation.

    States are nonzero roots; one step adds or subtracts a letter and the
    result must again be a nonzero root.  Works on raw value tuples.
    """
    universe = {r.values for r in roots if any(v != 0 for v in r.values)}
    letter_vals = [l.values for l in letters]
    seen = {start.values}
    frontier = [start.values]
    while frontier:
        cur = frontier.pop()
        for lv in letter_vals:
            for sign in (1, -1):
                cand = tuple(c + sign * v for c, v in zip(cur, lv))
                if cand in universe and cand not in seen:
                    seen.add(cand)
                    frontier.append(cand)
    return seen


# ---------------------------------------------------------------------------
# fixture documents

FIVE_DIM_DOC = ss.gen_example1()


def heisenberg_module_doc(n: int) -> dict:
    return ss.gen_example2(n)


def sl2_doc() -> dict:
    """Split 3-dim simple Lie algebra, cartan spanned by the first vector."""
    return {
        "field": "Q",
        "dim": 3,
        "parity": [0, 0, 0],
        "products": [
            [1, 0, [[1, "2"]]],
            [0, 1, [[1, "-2"]]],
            [2, 0, [[2, "-2"]]],
            [0, 2, [[2, "2"]]],
            [1, 2, [[0, "1"]]],
            [2, 1, [[0, "-1"]]],
        ],
        "cartan": [["1", "0", "0"]],
        "meta": {"name": "sl2"},
    }


def osp12_doc() -> dict:
    """Five-dim simple Lie superalgebra: sl2 plus a two-dim odd part.

    Odd roots are +-1, even roots +-2, the kernel is zero.  Signs were
    fixed by requiring the super identity to hold, then frozen.
    """
    return {
        "field": "Q",
        "dim": 5,
        "parity": [0, 0, 0, 1, 1],
        "products": [
            [1, 0, [[1, "2"]]],
            [0, 1, [[1, "-2"]]],
            [2, 0, [[2, "-2"]]],
            [0, 2, [[2, "2"]]],
            [1, 2, [[0, "1"]]],
            [2, 1, [[0, "-1"]]],
            [3, 0, [[3, "1"]]],
            [0, 3, [[3, "-1"]]],
            [4, 0, [[4, "-1"]]],
            [0, 4, [[4, "1"]]],
            [3, 2, [[4, "1"]]],
            [2, 3, [[4, "-1"]]],
            [4, 1, [[3, "-1"]]],
            [1, 4, [[3, "1"]]],
            [3, 4, [[0, "1"]]],
            [4, 3, [[0, "1"]]],
            [3, 3, [[1, "2"]]],
            [4, 4, [[2, "2"]]],
        ],
        "cartan": [["1", "0", "0", "0", "0"]],
        "meta": {"name": "osp12"},
    }


def case2i_doc() -> dict:
    """Non-simple 7-dim instance whose kernel splits as two weight pairs.

    Even part as in sl2_doc.  The kernel carries two copies of the natural
    weight module, one even (indices 3, 4) and one odd (indices 5, 6), each
    acted on from the right only.
    """
    prods = [
        [1, 0, [[1, "2"]]],
        [0, 1, [[1, "-2"]]],
        [2, 0, [[2, "-2"]]],
        [0, 2, [[2, "2"]]],
        [1, 2, [[0, "1"]]],
        [2, 1, [[0, "-1"]]],
    ]
    for plus, minus in ((3, 4), (5, 6)):
        prods.append([plus, 0, [[plus, "1"]]])
        prods.append([minus, 0, [[minus, "-1"]]])
        prods.append([plus, 2, [[minus, "1"]]])
        prods.append([minus, 1, [[plus, "-1"]]])
    return {
        "field": "Q",
        "dim": 7,
        "parity": [0, 0, 0, 0, 0, 1, 1],
        "products": prods,
        "cartan": [["1", "0", "0", "0", "0", "0", "0"]],
        "meta": {"name": "case2i"},
    }


def weight_pair_doc() -> dict:
    """Abelian-by-weights algebra violating root multiplicativity.

    Two even weight vectors at weights 2 and 4 with all non-cartan
    products zero: weight 2 + 2 = 4 is a root but the product vanishes.
    """
    return {
        "field": "Q",
        "dim": 3,
        "parity": [0, 0, 0],
        "products": [
            [1, 0, [[1, "2"]]],
            [0, 1, [[1, "-2"]]],
            [2, 0, [[2, "4"]]],
            [0, 2, [[2, "-4"]]],
        ],
        "cartan": [["1", "0", "0"]],
        "meta": {"name": "weight_pair"},
    }


def two_block_doc() -> dict:
    """Scale-separated direct sum of two copies of the 5-dim example."""
    first = ss.gen_example1()
    second = ss.scale_cartan_doc(ss.gen_example1(), Fraction(3))
    return ss.direct_sum([first, second])


# ---------------------------------------------------------------------------
# pipeline convenience


@dataclass
class Analysis:
    alg: ss.Superalgebra
    cartan: list
    dec: ss.SplitDecomposition
    kernel: ss.GradedSubspace
    part: ss.RootPartition
    hyp: ss.HypothesisReport
    conn: dict


def analyze_doc(doc: dict) -> Analysis:
    alg, cartan, _ = ss.parse_document(doc)
    violations = alg.validate()
    assert violations == [], violations
    dec = ss.split(alg, cartan)
    kernel = ss.leibniz_kernel(alg)
    part = ss.partition_roots(dec, kernel)
    hyp = ss.hypothesis_report(dec, part)
    conn = ss.connectivity_summary(dec, part)
    return Analysis(alg, cartan, dec, kernel, part, hyp, conn)


_CORPUS_CACHE: dict[tuple[int, int], list[dict]] = {}


def corpus(seed: int = 1, count: int = 100) -> list[dict]:
    key = (seed, count)
    if key not in _CORPUS_CACHE:
        _CORPUS_CACHE[key] = ss.fuzz_corpus(seed=seed, count=count)
    return _CORPUS_CACHE[key]
