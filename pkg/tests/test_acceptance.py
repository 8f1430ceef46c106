"""Acceptance suite: one PASS/FAIL line per criterion.

Run with pytest (each criterion is a test and prints its line), or directly
with ``python tests/test_acceptance.py [--seed N]`` for just the table.
"""

import io
import json
import random
import sys
import time
from contextlib import redirect_stdout

import pytest

from randgen import F3T, F4T, Q2, Q3Z8, field, rand_eis, rand_elem, rand_two_index, rand_uniformizer_expr
from threeterm import (EisensteinPoly, HypothesisFailed, InsufficientPrecision, StandardForm,
                       ClassificationRequest, enumerate_standard_forms, fixture, fixture_path,
                       indices, l_equiv, minpoly_uniformizer, perturb_predict, reduce_to_standard,
                       teich_lift)
from threeterm.cli import main as cli_main

DEFAULT_SEED = 20240917


def _cli_lines(*argv):
    buf = io.StringIO()
    with redirect_stdout(buf):
        code = cli_main(list(argv))
    assert code == 0, f"exit code {code}"
    return [json.loads(line) for line in buf.getvalue().splitlines()]


def _literal_forms(K):
    """X^9 + 3X^8 - 3(1 + 3 gamma) for every gamma, and X^9 - 3 w X^8 - 3 for w != -1."""
    F = K.residue
    three = K.from_int(3)
    out = [EisensteinPoly(K, 9, {1: K.from_int(-3), 9: three * (K.one() + three * teich_lift(g, K))})
           for g in F.elements()]
    out += [EisensteinPoly(K, 9, {1: three * teich_lift(w, K), 9: three})
            for w in F.nonzero() if w != F(-1)]
    return out


# --- the criteria ------------------------------------------------------------------
# each returns (ok, detail)

def criterion_1(rng):
    t0 = time.perf_counter()
    docs = _cli_lines("classify", "--field", fixture_path("Q3z8"), "--k", "2", "--i0", "8")
    K = fixture("Q3z8")
    rendered = [StandardForm.from_json(K, d).render() for d in docs]
    elapsed = time.perf_counter() - t0
    literal = _literal_forms(K)
    matches = [sum(f.equal_coefficients(g) for g in literal) for f in rendered]
    covered = all(any(f.equal_coefficients(g) for f in rendered) for g in literal)
    ok = len(docs) == 16 and matches == [1] * 16 and covered and elapsed < 5
    return ok, f"{len(docs)} forms, literal match {sum(matches)}/16, {elapsed:.2f}s"


def criterion_2(rng):
    docs = _cli_lines("galois", "--field", fixture_path("Q3z8"), "--k", "2", "--i0", "8")
    minus_one = [d["omega"] == "2" for d in docs]          # -1 in F_9
    galois = [d["galois"] for d in docs]
    groups = {d["group"] for d in docs if d["galois"]}
    ok = galois == minus_one and sum(galois) == 9 and groups == {"(Z/3Z)^2"}
    return ok, f"{sum(galois)} Galois, {len(docs) - sum(galois)} not, groups {sorted(groups)}"


def criterion_3(rng):
    got = {name: indices(fixture(name)).idx for name in ("three_index_deg9", "deg6_char3", "three_index_q3")}
    p, b1, A1, e_K = 3, 6, 1, 1
    want = {"three_index_deg9": (7, 3, 0), "deg6_char3": (4, 0), "three_index_q3": (p ** 2 * (A1 + e_K) - b1, 3, 0)}
    return got == want, ", ".join(f"{k}={v}" for k, v in got.items())


def criterion_4(rng):
    fields = [field(s) for s in (Q3Z8, F3T, Q2, F4T)]
    t0 = time.perf_counter()
    done = bad = 0
    us = {}
    while done < 100:
        K = rng.choice(fields)
        p = K.p
        n = rng.choice([p * p, p * p, p, p * (p + 1), (2 if p != 2 else 3) * p * p])
        f = rand_eis(rng, K, n)
        try:
            pr = indices(f)
            ell, j = rng.randrange(1, 6), rng.randrange(pr.k + 1)
            r = rand_elem(rng, K)
            P = perturb_predict(f, ell, r, j, pr)
        except (InsufficientPrecision, HypothesisFailed):
            continue
        if P.t + 1 > K.N:
            continue
        ft = minpoly_uniformizer(f, {1: K.one(), ell + 1: r})
        bad += ft.coeff(P.h).truncate(P.t + 1) != P.value
        us[f.u > 1] = us.get(f.u > 1, 0) + 1
        done += 1
    elapsed = time.perf_counter() - t0
    ok = bad == 0 and us.get(True) and us.get(False) and elapsed < 60
    return ok, (f"{done - bad}/{done} agree ({us.get(False, 0)} with n = p^k, "
                f"{us.get(True, 0)} with u > 1), {elapsed:.1f}s")


def criterion_5(rng):
    fields = [field(s) for s in (Q3Z8, F3T, Q2, F4T)]
    done = bad = 0
    while done < 100:
        K = rng.choice(fields)
        f = rand_eis(rng, K, rng.choice([K.p ** 2, K.p * (K.p + 1), K.p]))
        ell = rng.randrange(1, 6)
        try:
            pr = indices(f)
            ft = minpoly_uniformizer(f, {1: K.one(), ell + 1: rand_elem(rng, K)})
            bad += not l_equiv(f, ft, ell, pr)
        except InsufficientPrecision:
            continue
        done += 1
    return bad == 0, f"{done - bad}/{done} perturbations ell-equivalent"


def _scramble(rng, f):
    return minpoly_uniformizer(f, rand_uniformizer_expr(rng, f.field, terms=4))


def criterion_6(rng):
    K = fixture("Q3z8")
    E = fixture("F3t")
    forms = list(enumerate_standard_forms(ClassificationRequest(K, 2, 8)))
    eq_forms = list(enumerate_standard_forms(ClassificationRequest(E, 2, 16)))
    forms += rng.sample(eq_forms, 10)
    t0 = time.perf_counter()
    total = good = 0
    for sf in forms:
        for _ in range(5):
            out, _ = reduce_to_standard(_scramble(rng, sf.render()))
            good += out.dumps() == sf.dumps()
            total += 1
    elapsed = time.perf_counter() - t0
    return good == total == 130, f"{good}/{total} scrambles recovered ({len(forms)} forms), {elapsed:.1f}s"


def criterion_7(rng):
    fields = [field(s) for s in (Q3Z8, F3T, Q2, F4T)]
    reduce_fields = [field(s) for s in (Q3Z8, F4T)] + [fixture("F3t")]
    checked = failures = two = 0
    while checked < 500:
        if checked % 2:
            K = rng.choice(reduce_fields)
            f = rand_two_index(rng, K)
        else:
            K = rng.choice(fields)
            f = rand_eis(rng, K, rng.choice([K.p ** 2, K.p ** 3 if K.p == 2 else K.p ** 2, K.p * (K.p + 1)]))
        try:
            pr = indices(f)
            g = _scramble(rng, f)
            pr_g = indices(g)
        except InsufficientPrecision:
            continue
        if pr.idx[0] == float("inf"):
            continue                          # inseparable polynomial in K[X^p]
        checked += 1
        ok = pr.idx[-1] == 0 and pr.idx[0] < float("inf")
        ok &= all(pr.idx[j] >= pr.idx[j + 1] for j in range(pr.k))
        ok &= pr.k == 0 or pr.idx[pr.k - 1] > 0
        ok &= pr_g.idx == pr.idx
        if pr.two_index and pr.k >= 2:
            two += 1
            ok &= tuple(pr.tilde) == pr.idx
            ok &= pr.e_K == float("inf") or pr.idx[0] < pr.pk * pr.e_K
        failures += not ok
    return failures == 0, f"{checked - failures}/{checked} polynomials ({two} two-index)"


def criterion_8(rng):
    counts = {}
    worst = {}
    for name, need in (("three_index_deg9", 5), ("deg6_char3", 4)):
        f = fixture(name)
        lows = []
        K = f.field
        for i in range(200):
            if i % 2:
                g = _scramble(rng, f)
            else:
                # the sparsest uniformizers: r0 pi_L + r1 r0^2 pi_L^2 with Teichmueller r0, r1
                r0 = teich_lift(K.residue.from_code(rng.randrange(1, K.q)), K)
                r1 = teich_lift(K.residue.from_code(rng.randrange(K.q)), K)
                g = minpoly_uniformizer(f, {1: r0, 2: r1 * r0 ** 2})
            lows.append(g.nonzero_terms())
        worst[name] = min(lows)
        counts[name] = need
    ok = all(worst[n] >= counts[n] for n in counts)
    return ok, ", ".join(f"{n}: min {worst[n]} terms (need >= {counts[n]})" for n in counts)


CRITERIA = [
    (1, "classification of degree-9 extensions with i0 = 8", criterion_1),
    (2, "Galois split of those 16 forms", criterion_2),
    (3, "indices of the three worked examples", criterion_3),
    (4, "perturbation prediction vs minimum polynomials", criterion_4),
    (5, "stability of small perturbations", criterion_5),
    (6, "uniqueness round trip", criterion_6),
    (7, "index invariants on random polynomials", criterion_7),
    (8, "term counts of scrambled examples", criterion_8),
]


def run_criterion(number, seed):
    _, title, fn = CRITERIA[number - 1]
    rng = random.Random(seed * 100 + number)
    try:
        ok, detail = fn(rng)
    except Exception as exc:          # report, don't crash the table
        ok, detail = False, f"{type(exc).__name__}: {exc}"
    return bool(ok), f"{'PASS' if ok else 'FAIL'} criterion {number}: {title} -- {detail}"


@pytest.mark.parametrize("number", [c[0] for c in CRITERIA])
def test_criterion(number, seed, capsys):
    ok, line = run_criterion(number, seed)
    with capsys.disabled():
        print("\n" + line)
    assert ok, line


if __name__ == "__main__":
    import argparse
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--seed", type=int, default=DEFAULT_SEED)
    args = ap.parse_args()
    results = [run_criterion(n, args.seed) for n, _, _ in CRITERIA]
    for _, line in results:
        print(line)
    sys.exit(0 if all(ok for ok, _ in results) else 1)
