"""Acceptance gate: ten criteria, one test (and one printed line) each."""

import itertools
import json
import pathlib
import random
from fractions import Fraction

import pytest

from fanscheme.cli import entry
from fanscheme.cones import cone_from_rays, dual_cone, faces
from fanscheme.fans import (
    Fan,
    FanError,
    complete_under_faces,
    fullify,
    is_complete,
    is_regular,
    validate_fan,
)
from fanscheme.monoid_algebra import (
    AlgebraElement,
    CoeffRing,
    augmentation,
    base_change,
    coefficient_morphism,
    exp_map,
)
from fanscheme.monoids import (
    AffineMonoid,
    dual_monoid,
    localization_certificate,
    monoid_contains,
)
from fanscheme.scheme import (
    BaseDescriptor,
    DimRange,
    MonoidSystem,
    build_atlas,
    check_separation_condition,
    dimension_bounds,
    is_openly_immersive,
    property_report,
)

from helpers import (
    affine_wedge_fan,
    fm_cone_contains,
    hirzebruch_fan,
    projective_line_fan,
    projective_plane_fan,
    random_orthant_subfan,
    random_staircase_fan,
)

GOLDENS_DIR = pathlib.Path(__file__).parent / "goldens"

FIELD_BASE = {
    "affine": "yes",
    "integral": "yes",
    "regular": "yes",
    "noetherian": "yes",
    "jacobsonian": "yes",
    "universally_catenary": "yes",
    "equidimensional": "yes",
    "empty": "no",
    "dim": ["0", "0"],
}

GOLDEN_FAN_DOCS = {
    "report_p2_field.json": {
        "lattice_rank": "2",
        "cones": [
            {"rays": [["1", "0"], ["0", "1"]]},
            {"rays": [["0", "1"], ["-1", "-1"]]},
            {"rays": [["-1", "-1"], ["1", "0"]]},
        ],
    },
    "report_a2_field.json": {
        "lattice_rank": "2",
        "cones": [{"rays": [["1", "0"], ["1", "2"]]}],
    },
    "report_empty_nonempty_base.json": {
        "lattice_rank": "2",
        "cones": [],
    },
}


def golden_fans():
    return (
        projective_line_fan(),
        projective_plane_fan(),
        hirzebruch_fan(),
        affine_wedge_fan(),
    )


def test_criterion_01_duality_is_an_involution():
    rng = random.Random(101)
    for _ in range(200):
        n = rng.randint(1, 4)
        gens = [
            tuple(rng.randint(-5, 5) for _ in range(n))
            for _ in range(rng.randint(0, 5))
        ]
        gens = [g for g in gens if any(g)]
        c = cone_from_rays(n, gens)
        assert dual_cone(dual_cone(c)) == c
    print("criterion 01 (duality is an involution, 200 random cones): PASS")


def box_hilbert_oracle(rays, n):
    """Brute force: irreducible nonzero lattice points of the generator box.

    Every irreducible element has a representation with all generator
    coefficients below one, so it lies in the box spanned by the negative
    and positive parts of the generators; so does some irreducible summand
    of every reducible candidate, which keeps the filter complete.
    """
    lo = [sum(min(0, r[a]) for r in rays) for a in range(n)]
    hi = [sum(max(0, r[a]) for r in rays) for a in range(n)]
    cache = {}

    def inside(p):
        if p not in cache:
            cache[p] = fm_cone_contains(rays, p, n)
        return cache[p]

    pts = [
        p
        for p in itertools.product(*[range(lo[a], hi[a] + 1) for a in range(n)])
        if any(p) and inside(p)
    ]
    basis = []
    for h in pts:
        for g in pts:
            if g != h and inside(tuple(x - y for x, y in zip(h, g))):
                break
        else:
            basis.append(h)
    return sorted(basis)


def test_criterion_02_hilbert_bases_match_brute_force():
    rng = random.Random(202)
    done = 0
    while done < 50:
        n = rng.randint(2, 3)
        gens = []
        for _ in range(rng.randint(1, 4)):
            v = tuple(rng.randint(-4, 4) for _ in range(n))
            if any(v):
                gens.append(v)
        if not gens:
            continue
        width = max(
            sum(max(0, r[a]) for r in gens) - sum(min(0, r[a]) for r in gens)
            for a in range(n)
        )
        if width > 8:
            continue
        c = cone_from_rays(n, gens)
        if not c.is_pointed or c.dim == 0:
            continue
        points = dual_monoid(dual_cone(c))
        assert points.hilbert_lineality == ()
        assert list(points.hilbert_pointed) == box_hilbert_oracle(gens, n)
        done += 1
    print("criterion 02 (Hilbert bases match brute force, 50 cones): PASS")


def test_criterion_03_fan_validation_spots_missing_faces():
    for fan in golden_fans():
        validate_fan(fan)
        lattices = {c: faces(c) for c in fan.cones}
        victims = [
            v
            for v in fan.cones
            if any(v != c and v in lattices[c] for c in fan.cones)
        ]
        assert victims
        for v in victims:
            broken = Fan(fan.rank, [c for c in fan.cones if c != v])
            with pytest.raises(FanError):
                validate_fan(broken)
    print("criterion 03 (golden fans validate; face deletions rejected): PASS")


def test_criterion_04_separation_identity():
    rng = random.Random(404)
    fans = list(golden_fans())
    fans += [random_staircase_fan(rng)[0] for _ in range(12)]
    fans += [random_orthant_subfan(rng) for _ in range(8)]
    for fan in fans:
        report = check_separation_condition(MonoidSystem.from_fan(fan))
        assert report.separated
        assert report.failures == ()
    print("criterion 04 (separation identity on goldens + 20 random fans): PASS")


def test_criterion_05_localization_certificates():
    for fan in golden_fans():
        system = MonoidSystem.from_fan(fan)
        pairs = system.strict_pairs()
        assert pairs
        for i, j in pairs:
            big, small = system.monoids[j], system.monoids[i]
            cert = localization_certificate(
                big, small, fan.cones[j], fan.cones[i]
            )
            u = cert.element
            assert monoid_contains(big, u)
            assert monoid_contains(small, tuple(-x for x in u))
            assert len(cert.shifts) == len(small.generators)
            for h, k in cert.shifts:
                shifted = tuple(a + k * b for a, b in zip(h, u))
                assert monoid_contains(big, shifted)
    atlas = build_atlas(projective_line_fan())
    assert [m.generators for m in atlas.charts] == [
        ((1,), (-1,)), ((-1,),), ((1,),)
    ]
    assert sorted(cert.element for _, _, cert in atlas.transitions) == [
        (-1,), (1,)
    ]
    print("criterion 05 (certified localizations on all face pairs): PASS")


def test_criterion_06_open_immersion_checks():
    for fan in golden_fans():
        assert is_openly_immersive(MonoidSystem.from_fan(fan)).verdict == "yes"
    ray = AffineMonoid.from_generators(1, [(1,)])
    doubled = AffineMonoid.from_generators(1, [(2,)])
    report = is_openly_immersive(MonoidSystem([ray, doubled], leq=[(0, 1)]))
    assert report.verdict == "no"
    assert "differences" in report.reason
    print("criterion 06 (fan systems immersive; index-two pair refused): PASS")


def test_criterion_07_reports_match_goldens(tmp_path, capsys):
    base_path = tmp_path / "base.json"
    base_path.write_text(json.dumps(FIELD_BASE))
    outputs = {}
    for name, fan_doc in GOLDEN_FAN_DOCS.items():
        fan_path = tmp_path / "fan.json"
        fan_path.write_text(json.dumps(fan_doc))
        code = entry([
            "report", "--fan", str(fan_path), "--base", str(base_path),
        ])
        out = capsys.readouterr().out
        assert code == 0
        assert out == (GOLDENS_DIR / name).read_text()
        outputs[name] = {r["property"]: r for r in json.loads(out)}
    p2 = outputs["report_p2_field.json"]
    assert p2["morphism.proper"]["verdict"] == "yes"
    assert p2["morphism.regular"]["verdict"] == "yes"
    assert p2["scheme.regular"]["verdict"] == "yes"
    assert p2["scheme.dim"]["interval"] == ["2", "2"]
    a2 = outputs["report_a2_field.json"]
    assert a2["scheme.regular"]["verdict"] == "no"
    assert a2["scheme.normal"]["verdict"] == "yes"
    assert a2["scheme.cohen_macaulay"]["verdict"] == "yes"
    empty = outputs["report_empty_nonempty_base.json"]
    assert empty["morphism.faithfully_flat"]["verdict"] == "no"
    print("criterion 07 (reports byte-identical to goldens): PASS")


def test_criterion_08_algebra_laws_and_naturality():
    rng = random.Random(808)
    quadrant = AffineMonoid.from_generators(2, [(1, 0), (0, 1)])
    exponents = [(0, 0), (1, 0), (0, 1), (1, 1), (2, 0), (0, 2), (2, 1)]

    def sample(ring):
        terms = []
        for e in exponents:
            if rng.random() < 0.5:
                c = rng.randint(-4, 4)
                if ring.kind == "rationals" and rng.random() < 0.5:
                    c = Fraction(c, rng.randint(1, 5))
                terms.append((e, c))
        return AlgebraElement.from_terms(ring, quadrant, terms)

    rings = (CoeffRing.integers(), CoeffRing.rationals(), CoeffRing.integers_mod(6))
    for ring in rings:
        one = exp_map(ring, quadrant, (0, 0))
        for _ in range(100):
            a, b = sample(ring), sample(ring)
            c = sample(ring)
            assert a + b == b + a
            assert a * b == b * a
            assert (a + b) * c == a * c + b * c
            assert (a * b) * c == a * (b * c)
            assert a * one == a
            assert (a - a).is_zero
    for target in (CoeffRing.integers_mod(6), CoeffRing.rationals()):
        source = CoeffRing.integers()
        phi = coefficient_morphism(source, target)
        for _ in range(25):
            a, b = sample(source), sample(source)
            assert base_change(a * b, target) == \
                base_change(a, target) * base_change(b, target)
            assert base_change(a + b, target) == \
                base_change(a, target) + base_change(b, target)
            assert phi(augmentation(a)) == augmentation(base_change(a, target))
    print("criterion 08 (ring laws, 100 samples per ring; naturality): PASS")


def test_criterion_09_dimension_formula_grid():
    for d in range(3):
        base = BaseDescriptor(
            noetherian="yes", empty="no", dim=DimRange.exact(d)
        )
        for n in range(4):
            orthant = cone_from_rays(
                n, [tuple(int(a == b) for a in range(n)) for b in range(n)]
            )
            fan = complete_under_faces(Fan(n, [orthant]))
            assert dimension_bounds(fan, base) == DimRange.exact(d + n)
            records = {r.property: r for r in property_report(fan, base)}
            assert records["scheme.dim"].interval == DimRange.exact(d + n)
    print("criterion 09 (dimension formula on a 3 x 4 grid): PASS")


def test_criterion_10_fullification():
    fan = complete_under_faces(Fan(2, [cone_from_rays(2, [(2, 4)])]))
    result = fullify(fan)
    assert result.torus_rank == 1
    assert result.reduced.rank == 1
    assert result.basis == ((1, 2),)

    def embed(fan, rows, big):
        cones = []
        for c in fan.cones:
            images = [
                tuple(
                    sum(r[i] * rows[i][a] for i in range(len(rows)))
                    for a in range(big)
                )
                for r in c.rays
            ]
            cones.append(cone_from_rays(big, images))
        return Fan(big, cones)

    cases = [
        (projective_line_fan(), ((1, 1),), 2),
        (projective_plane_fan(), ((1, 0, 1), (0, 1, 1)), 3),
        (hirzebruch_fan(), ((1, 0, 1), (0, 1, 1)), 3),
        (affine_wedge_fan(), ((1, 0, 1), (0, 1, 1)), 3),
    ]
    for original, rows, big in cases:
        embedded = embed(original, rows, big)
        validate_fan(embedded)
        reduced = fullify(embedded).reduced
        assert fullify(embedded).torus_rank == big - original.rank
        assert is_complete(reduced) == is_complete(original)
        assert is_regular(reduced).regular == is_regular(original).regular
    print("criterion 10 (torus factors split off; verdicts preserved): PASS")
