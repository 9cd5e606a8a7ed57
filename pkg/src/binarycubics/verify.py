"""Verification suites: every checkable identity, replayed from scratch.

Each suite returns a report dict {"suite": name, "checks": [...]} where a
check is {"name", "status", "witness"?} and status is "pass", "fail" or
(for the randomized tame suite only) "inconclusive".  The CLI prints
these; the acceptance tests assert on them.  All numbers are produced by
the library layers.
"""

from __future__ import annotations

from . import catalog, characters as ch, cubics, quiver as qv

SUITES = ("characters", "quiver", "loccoh", "tame")


def _check(name: str, ok: bool, witness: str | None = None) -> dict:
    out = {"name": name, "status": "pass" if ok else "fail"}
    if not ok and witness is not None:
        out["witness"] = witness
    return out


def suite_characters(lo: int = -30, hi: int = 30) -> dict:
    checks: list[dict] = []

    golden = [
        ("nu(0)", ch.nu(0), 1), ("nu(1)", ch.nu(1), 0), ("nu(6)", ch.nu(6), 2),
        ("<[Sdelta], e^(3,-3)>", catalog.character_of("Sdelta").mult((3, -3)), 1),
        ("<[Sdelta], e^(-1,-5)>", catalog.character_of("Sdelta").mult((-1, -5)), 0),
        ("<[S], e^(3,0)>", catalog.character_of("S").mult((3, 0)), 1),
        ("<[E], e^(3,0)>", catalog.character_of("E").mult((3, 0)), 0),
        ("<[E], e^(-6,-9)>", catalog.character_of("E").mult((-6, -9)), 1),
        ("<[D0], e^(-1,-5)>", ch.mult_d(0, (-1, -5)), 1),
        ("<[D0], e^(3,0)>", ch.mult_d(0, (3, 0)), 0),
        ("<[D0], e^(-6,-9)>", ch.mult_d(0, (-6, -9)), 1),
        ("<[D0], e^(-2,-4)>", ch.mult_d(0, (-2, -4)), 0),
        ("<[D2], e^(-5,-9)>", ch.mult_d(2, (-5, -9)), 1),
        ("<[D1], e^(3,-1)>", ch.mult_d(1, (3, -1)), 0),
        ("<[D1], e^(-5,-5)>", catalog.character_of("D1").mult((-5, -5)), 1),
        ("<F([D0]), e^(3,0)>", ch.fourier(catalog.character_of("D0")).mult((3, 0)), 1),
        ("<[Q0delta], e^(-2,-4)>", catalog.character_of("Q0delta").mult((-2, -4)), 1),
        ("<[Q0delta], e^(-6,-9)>", catalog.character_of("Q0delta").mult((-6, -9)), 1),
        ("<[Q1], e^(0,-2)>", catalog.character_of("Q1").mult((0, -2)), 1),
        ("<[P], e^(3,-3)>", catalog.character_of("P").mult((3, -3)), 1),
        ("<[P], e^(-6,-9)>", catalog.character_of("P").mult((-6, -9)), 0),
        ("m_diag(6)", ch.m_diag(6), -1),
        ("m_diag(5)", ch.m_diag(5), 1),
        ("m_diag(4)", ch.m_diag(4), 0),
    ]
    for name, got, want in golden:
        checks.append(_check(f"golden: {name} = {want}", got == want, f"got {got}"))

    ok = all(ch.m_diag(a) == ch.nu(a - 5) - ch.nu(a - 6) for a in range(-10, 61))
    checks.append(_check("m_diag agrees with the nu difference on [-10, 60]", ok))

    ok = True
    witness = None
    for i in range(0, 61):
        expect = sum(1 for a in range(i // 2 + 1) if (i - 2 * a) % 3 == 0)
        if ch.nu(i) != expect:
            ok, witness = False, str(i)
            break
    checks.append(_check("nu matches direct expansion on [0, 60]", ok, witness))

    checks.extend(catalog.verify_identities(lo, hi))
    checks.extend(catalog.fourier_coherence(lo, hi))
    return {"suite": "characters", "checks": checks}


def suite_quiver(seed: int = 0, samples: int = 50) -> dict:
    checks: list[dict] = []
    pf = cubics.build("paper_full")
    bc = cubics.build("big_component")

    # injective envelopes vs the catalog's composition-factor multisets
    for vertex, simple in sorted(pf.vertex_labels.items()):
        inj = pf.injective(vertex)
        got = sorted(
            factor
            for v, d in inj.dims.items()
            for factor in [pf.vertex_labels[v]] * d
        )
        want = sorted(catalog.INJECTIVE_FACTORS[simple])
        checks.append(_check(
            f"injective envelope of {simple} has factors {','.join(want)}",
            got == want, f"got {got}"))

    facts = [("d1", "g1", 1), ("e", "s", 0), ("d0", "s", 0), ("q0", "e", 0)]
    for x, y, count in facts:
        checks.append(_check(
            f"arrow count {x} -> {y} is {count}",
            pf.arrow_count(x, y) == count, f"got {pf.arrow_count(x, y)}"))

    label_to_vertex = {s: v for v, s in pf.vertex_labels.items()}
    ok, witness = True, None
    for x in pf.quiver.vertices:
        for y in pf.quiver.vertices:
            dx = label_to_vertex[catalog.dual_partner(pf.vertex_labels[x])]
            dy = label_to_vertex[catalog.dual_partner(pf.vertex_labels[y])]
            if pf.arrow_count(x, y) != pf.arrow_count(dy, dx):
                ok, witness = False, f"({x}, {y})"
                break
        if not ok:
            break
    checks.append(_check("arrow counts are symmetric under holonomic duality", ok, witness))

    for i, j in ((1, 2), (2, 1), (3, 4), (4, 3)):
        got = qv.is_isomorphic(bc.projective(str(i)), bc.injective(str(j)))
        checks.append(_check(f"projective({i}) is isomorphic to injective({j})", got))

    try:
        cubics.injective_envelope_of_P()
        checks.append(_check("cokernel of P -> H + F(H) is the injective envelope of P", True))
    except AssertionError as exc:
        checks.append(_check("cokernel of P -> H + F(H) is the injective envelope of P",
                             False, str(exc)))

    for n in (1, 2, 3, 4):
        for lam in (0, 1, -1, 5):
            R = cubics.rn_family(n, lam)
            verdicts = [
                ("", qv.is_indecomposable(R, seed=seed)),
                (" alpha image", qv.is_indecomposable(cubics.embed_alpha(R), seed=seed)),
                (" beta image", qv.is_indecomposable(cubics.embed_beta(R), seed=seed)),
            ]
            bad = [tag for tag, v in verdicts if v != "yes"]
            checks.append(_check(
                f"R_{n}({lam}) indecomposable (and under both embeddings)",
                not bad, f"failed at{','.join(bad)}"))

    pairs = [(0, 1), (0, -1), (1, 5), (-1, 5), (2, 7)]
    for a, b in pairs:
        got = qv.is_isomorphic(cubics.rn_family(1, a), cubics.rn_family(1, b))
        checks.append(_check(f"R_1({a}) and R_1({b}) are non-isomorphic", got is False))

    two = cubics.check_two_vertex_component(samples=samples, seed=seed)
    checks.append(_check(
        f"two-vertex component: {two['summands']} summands from {samples} samples "
        "all among the four indecomposables",
        not two["violations"], str(two["violations"][:3])))
    return {"suite": "quiver", "checks": checks}


def suite_loccoh(lo: int = -30, hi: int = 30) -> dict:
    checks: list[dict] = []
    expected = {
        ("S", "O3bar", 1): ("E", "P"),
        ("S", "O2bar", 2): ("D0",),
        ("S", "O0", 4): ("E",),
        ("SdeltaModS", "O2bar", 1): ("D0",),
        ("SdeltaModS", "O0", 3): ("E",),
        ("D0", "O0", 2): ("E",),
        ("P", "O2bar", 1): ("D0", "E"),
        ("P", "O0", 1): ("E",),
        ("P", "O0", 3): ("E",),
        ("Q0", "O3bar", 1): ("D0", "P"),
        ("Q0", "O2bar", 2): ("E",),
        ("Q0", "O0", 2): ("E",),
        ("G1", "O3bar", 1): ("D1",),
        ("G1", "O2bar", 1): ("D1",),
        ("G-1", "O3bar", 1): ("D2",),
        ("G-1", "O2bar", 1): ("D2",),
    }
    for (name, support, k), want in sorted(expected.items()):
        got = tuple(sorted(catalog.local_cohomology(name, support, k)))
        checks.append(_check(
            f"H^{k}_{support}({name}) = {'+'.join(want)}", got == want, f"got {got}"))

    ok, witness = True, None
    for name in catalog.SIMPLES:
        own = {"O0": 0, "O2": 2, "O3": 3, "O4": 4}[catalog.SUPPORT[name]]
        for support, dim in (("O3bar", 3), ("O2bar", 2), ("O0", 0)):
            if dim >= own:
                continue
            for k in range(0, 7):
                got = catalog.local_cohomology(name, support, k)
                want = expected.get((name, support, k), ())
                if tuple(sorted(got)) != tuple(sorted(want)):
                    ok, witness = False, f"H^{k}_{support}({name})"
                    break
    checks.append(_check("all off-table local cohomology queries vanish", ok, witness))

    def iterate(name: str, steps: list[tuple[str, int]]) -> tuple[str, ...] | None:
        objs = [name]
        for support, k in steps:
            if len(objs) != 1:
                return None
            cur = objs[0]
            got = catalog.local_cohomology(cur, support, k)
            if catalog.local_cohomology_is_extension(cur, support, k) and set(got) == {"P", "E"}:
                objs = ["SdeltaModS"]
            else:
                objs = list(got)
        return tuple(sorted(objs))

    iterated_groups = [
        ("H^1_O2bar(H^1_O3bar(S))", [("O3bar", 1), ("O2bar", 1)], ("D0",)),
        ("H^3_O0(H^1_O3bar(S))", [("O3bar", 1), ("O0", 3)], ("E",)),
        ("H^2_O0(H^2_O2bar(S))", [("O2bar", 2), ("O0", 2)], ("E",)),
        ("H^2_O0(H^1_O2bar(H^1_O3bar(S)))", [("O3bar", 1), ("O2bar", 1), ("O0", 2)], ("E",)),
    ]
    for label, steps, want in iterated_groups:
        got = iterate("S", steps)
        checks.append(_check(f"iterated {label} = {'+'.join(want)}", got == want, f"got {got}"))

    g1 = catalog.character_of("G1")
    d1 = catalog.character_of("D1")
    witness = ch.first_disagreement(ch.localize(g1) - g1, d1, lo, hi)
    checks.append(_check("[H^1_O3bar(G1)] = [D1] on the box", witness is None, str(witness)))
    return {"suite": "loccoh", "checks": checks}


def suite_tame(samples: int = 100, seed: int = 0, max_inconclusive_rate: float = 0.05) -> dict:
    report = cubics.check_tame_classification(samples=samples, seed=seed)
    checks = [
        _check(
            f"all {report['summands']} conclusive summands fall into the three classified cases",
            not report["violations"], str(report["violations"][:3])),
    ]
    rate = report["inconclusive_rate"]
    rate_check = {
        "name": f"inconclusive rate {rate:.3f} below {max_inconclusive_rate}",
        "status": "pass" if rate < max_inconclusive_rate else "inconclusive",
    }
    if rate_check["status"] != "pass":
        rate_check["witness"] = f"{report['inconclusive']} of {report['summands']}"
    checks.append(rate_check)
    return {"suite": "tame", "checks": checks, "detail": {
        k: v for k, v in report.items() if k != "violations"}}


def run_suites(names: list[str], seed: int = 0) -> list[dict]:
    reports = []
    for name in names:
        if name == "characters":
            reports.append(suite_characters())
        elif name == "quiver":
            reports.append(suite_quiver(seed=seed))
        elif name == "loccoh":
            reports.append(suite_loccoh())
        elif name == "tame":
            reports.append(suite_tame(seed=seed))
        else:
            raise KeyError(f"unknown suite {name!r}")
    return reports
