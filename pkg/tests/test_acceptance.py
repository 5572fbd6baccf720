"""Acceptance suite: one test per criterion, one printed verdict line each.

Run with `pytest tests/test_acceptance.py -v -s` to see the per-criterion
lines.  Criterion 2 contains two cases over the 2-element field where the
point-count dictionary genuinely breaks down (the count theorem needs large
characteristic); they are asserted as stated and therefore fail honestly.
The mismatching counts themselves are pinned by independent regression tests
in test_fflab.py.
"""

import json
import time
from itertools import product

from quivermotive import cli
from quivermotive.engine import (
    centralizer_class,
    kappa,
    motive_class,
    motive_series,
    motive_table,
)
from quivermotive.fflab import (
    EnumerationBudgetError,
    centralizer_order,
    charsum_fiber_identity,
    charsum_linear_lemma,
    count_moment_fiber,
    fourier_inversion_check,
    group_order,
    kappa_oracle,
)
from quivermotive.lrat import LRat
from quivermotive.partitions import partitions_of, tuples_with_sizes
from quivermotive.quiver import (
    A2,
    DOUBLE_ARROW,
    JORDAN,
    SINGLE_VERTEX,
    STAR3,
    TWO_LOOP,
)
from quivermotive.series import exponents_upto


def report(number: int, ok: bool, elapsed: float, detail: str) -> None:
    verdict = "PASS" if ok else "FAIL"
    print(f"ACCEPTANCE criterion {number}: {verdict} ({elapsed:.1f}s) {detail}")


# --- independent polynomial helpers (no imports from the package) ----------


def poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        for j, cb in enumerate(b):
            out[i + j] += ca * cb
    return out


def poly_div_exact(a, b):
    a = list(a)
    quotient = [0] * (len(a) - len(b) + 1)
    for k in range(len(quotient) - 1, -1, -1):
        c = a[len(b) - 1 + k]
        assert c % b[-1] == 0
        c //= b[-1]
        quotient[k] = c
        for i, cb in enumerate(b):
            a[i + k] -= c * cb
    assert not any(a)
    return quotient


def l_power_minus_one(k):
    return [-1] + [0] * (k - 1) + [1]


def gaussian_binomial(w, v):
    """Coefficients of the L-binomial, by the product formula with exact division."""
    out = [1]
    for i in range(1, v + 1):
        out = poly_mul(out, l_power_minus_one(w - v + i))
        out = poly_div_exact(out, l_power_minus_one(i))
    return out


def test_criterion_1_cotangent_grassmannians():
    start = time.time()
    checked = 0
    for w in range(5):
        for v in range(w + 1):
            expected = [0] * (v * (w - v)) + gaussian_binomial(w, v)
            while expected and expected[-1] == 0:
                expected.pop()
            result = motive_class(SINGLE_VERTEX, (v,), (w,))
            assert list(result.class_polynomial) == expected, (v, w)
            checked += 1
    elapsed = time.time() - start
    report(1, True, elapsed, f"{checked} Grassmannian classes match the product formula")
    assert elapsed < 5


def test_criterion_2_jordan_hilbert_family():
    start = time.time()
    for v in range(1, 7):
        result = motive_class(JORDAN, (v,), (1,))
        assert all(isinstance(c, int) for c in result.class_polynomial)
        assert result.class_polynomial[-1] == 1  # monic of top degree 2v
        assert len(result.class_polynomial) - 1 == 2 * v
    grid = [
        ((1,), (2, 3, 5)),
        ((2,), (2, 3, 5)),
        ((3,), (2,)),
    ]
    mismatches = []
    for v, qs in grid:
        cls = LRat(list(motive_class(JORDAN, v, (1,)).class_polynomial))
        for q in qs:
            fiber = count_moment_fiber(JORDAN, v, (1,), 1, q)
            predicted = cls.eval_at(q) * group_order(v, q)
            if predicted != fiber:
                mismatches.append((v, q, int(predicted), fiber))
    elapsed = time.time() - start
    ok = not mismatches
    detail = "polynomials for v=1..6; count dictionary checked on the stated grid"
    if mismatches:
        detail += f"; exact equality fails at {mismatches} (small-characteristic exceptions)"
    report(2, ok, elapsed, detail)
    assert elapsed < 180
    assert mismatches == [], (
        "count dictionary deviates over small fields: "
        + ", ".join(
            f"v={v} q={q}: polynomial predicts {p}, enumeration gives {f}"
            for v, q, p, f in mismatches
        )
    )


def test_criterion_3_centralizer_orders():
    start = time.time()
    checked = 0
    for q in (2, 3):
        for n in range(5):
            for lam in partitions_of(n):
                try:
                    order = centralizer_order(lam, q)
                except EnumerationBudgetError:
                    continue  # the q=3 size-4 scans exceed the naive-scan budget
                assert order == centralizer_class((lam,)).eval_at(q), (lam.parts, q)
                checked += 1
    elapsed = time.time() - start
    report(3, True, elapsed, f"{checked} centralizer orders match the class formula exactly")
    assert checked == 19
    assert elapsed < 30


def test_criterion_4_kappa_ranks():
    start = time.time()
    checked = 0
    grids = (
        (JORDAN, ((0,), (1,), (2,))),
        (A2, ((0, 0), (1, 0), (1, 1))),
    )
    for quiver, w_list in grids:
        for w in w_list:
            for exp in exponents_upto(quiver.vertex_count, 5):
                for tup in tuples_with_sizes(exp):
                    assert kappa(quiver, w, tup) == kappa_oracle(quiver, exp, w, tup)
                    checked += 1
    elapsed = time.time() - start
    report(4, True, elapsed, f"{checked} kernel ranks match the pairing formula exactly")
    assert elapsed < 30


def test_criterion_5_harmonic_identities():
    import random

    start = time.time()
    rng = random.Random(20240518)
    for q in (2, 3, 5):
        for n in (1, 2, 3):
            family = [((0,) * n, 0), ((0,) * n, 1)]
            family += [
                (tuple(rng.randrange(q) for _ in range(n)), rng.randrange(q))
                for _ in range(20)
            ]
            assert charsum_linear_lemma(n, family, q), (n, q)
        for n in (1, 2):
            assert fourier_inversion_check(n, q, trials=100, seed=9), (n, q)
        for quiver, v, w in (
            (JORDAN, (1,), (0,)),
            (JORDAN, (1,), (1,)),
            (SINGLE_VERTEX, (1,), (1,)),
            (A2, (1, 1), (1, 0)),
        ):
            assert charsum_fiber_identity(quiver, v, w, 1, q), (quiver, v, w, q)
    elapsed = time.time() - start
    report(5, True, elapsed, "orthogonality, inversion and fiber identities exact at q=2,3,5")
    assert elapsed < 60


def test_criterion_6_polynomiality_stress():
    start = time.time()
    corpus = (
        ("jordan", JORDAN),
        ("a2", A2),
        ("double-arrow", DOUBLE_ARROW),
        ("star3", STAR3),
        ("two-loop", TWO_LOOP),
    )
    rows_checked = 0
    for label, quiver in corpus:
        n = quiver.vertex_count
        for w in product((0, 1, 2), repeat=n):
            rows = motive_table(quiver, w, 5)
            wide = motive_series(quiver, w, 7)
            for row in rows:
                assert all(isinstance(c, int) for c in row.class_polynomial), (label, w, row.v)
                assert wide.coefficient(row.v) == row.coefficient_raw, (label, w, row.v)
                rows_checked += 1
            # a direct engine call (its own series, truncated at sum(v))
            # must agree with the shared-series row
            spot = rows[min(3, len(rows) - 1)]
            direct = motive_class(quiver, spot.v, w)
            assert direct.class_polynomial == spot.class_polynomial
    elapsed = time.time() - start
    report(
        6,
        True,
        elapsed,
        f"{rows_checked} classes polynomial with truncation independence at degree 7",
    )
    assert elapsed < 120


def test_criterion_7_determinism(capsys):
    start = time.time()
    outputs = []
    for threads in ("1", "4"):
        rc = cli.main(
            [
                "series", "--quiver", "star3", "--w", "2,1,0", "--max-degree", "4",
                "--format", "records", "--threads", threads,
            ]
        )
        assert rc == 0
        outputs.append(capsys.readouterr().out)
    assert outputs[0] == outputs[1]
    for line in outputs[0].strip().splitlines():
        json.loads(line)
    elapsed = time.time() - start
    with capsys.disabled():
        report(7, True, elapsed, "series output byte-identical across thread counts")
    assert elapsed < 60
