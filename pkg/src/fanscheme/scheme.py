"""Gluing data and property reports for fan schemes over a described base.

The base is a descriptor: a bundle of three-valued flags plus a dimension
interval, closed under the standard implications.  Reports never guess: a
verdict is yes or no only when the recorded rule decides it, and every
record carries the rule id and the hypotheses it consumed.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cones import intersect_cones, faces
from .fans import Fan, is_complete, is_regular, validate_fan
from .monoid_algebra import augmentation
from .monoids import (
    AffineMonoid,
    check_openly_immersive_pair,
    dual_monoid,
    ImmersionCheck,
    localization_certificate,
    monoid_contains,
    monoid_sum,
)

YES = "yes"
NO = "no"
UNKNOWN = "unknown"


def t_and(*values):
    if any(v == NO for v in values):
        return NO
    if all(v == YES for v in values):
        return YES
    return UNKNOWN


def t_or(*values):
    if any(v == YES for v in values):
        return YES
    if all(v == NO for v in values):
        return NO
    return UNKNOWN


def t_not(value):
    if value == YES:
        return NO
    if value == NO:
        return YES
    return UNKNOWN


@dataclass(frozen=True)
class DimRange:
    kind: str  # "range" | "empty" | "unknown"
    lo: int | None = None
    hi: int | None = None  # None inside a range means unbounded above

    def __post_init__(self):
        if self.kind not in ("range", "empty", "unknown"):
            raise ValueError("bad dimension kind")
        if self.kind == "range":
            if (
                isinstance(self.lo, bool)
                or not isinstance(self.lo, int)
                or self.lo < 0
            ):
                raise ValueError("lower bound must be a nonnegative integer")
            if self.hi is not None and (
                isinstance(self.hi, bool)
                or not isinstance(self.hi, int)
                or self.hi < self.lo
            ):
                raise ValueError("upper bound must be an integer >= the lower")
        elif self.lo is not None or self.hi is not None:
            raise ValueError("bounds only make sense for ranges")

    @classmethod
    def between(cls, lo, hi):
        return cls("range", lo, hi)

    @classmethod
    def exact(cls, d):
        return cls("range", d, d)

    @classmethod
    def at_least(cls, lo):
        return cls("range", lo, None)

    @classmethod
    def empty(cls):
        return cls("empty")

    @classmethod
    def unknown(cls):
        return cls("unknown")

    @property
    def is_exact_zero(self):
        return self.kind == "range" and self.lo == 0 and self.hi == 0

    def to_json(self):
        if self.kind == "range":
            return [str(self.lo), "inf" if self.hi is None else str(self.hi)]
        return self.kind


_BASE_FLAGS = (
    "empty",
    "affine",
    "quasicompact",
    "quasiseparated",
    "separated",
    "connected",
    "irreducible",
    "reduced",
    "integral",
    "normal",
    "regular",
    "cohen_macaulay",
    "locally_noetherian",
    "noetherian",
    "pointwise_noetherian",
    "topologically_noetherian",
    "jacobsonian",
    "universally_catenary",
    "equidimensional",
)

_IMPLICATIONS = (
    ("integral", "reduced"),
    ("integral", "irreducible"),
    ("irreducible", "connected"),
    ("normal", "reduced"),
    ("regular", "normal"),
    ("regular", "cohen_macaulay"),
    ("cohen_macaulay", "locally_noetherian"),
    ("noetherian", "locally_noetherian"),
    ("noetherian", "quasicompact"),
    ("noetherian", "quasiseparated"),
    ("noetherian", "topologically_noetherian"),
    ("locally_noetherian", "pointwise_noetherian"),
    ("affine", "quasicompact"),
    ("affine", "separated"),
    ("separated", "quasiseparated"),
    ("topologically_noetherian", "quasicompact"),
)

# the empty scheme carries every listed property by convention, except that
# it is neither irreducible nor integral
_EMPTY_FORCES_NO = ("irreducible", "integral")
_EMPTY_FORCES_YES = tuple(
    f for f in _BASE_FLAGS if f != "empty" and f not in _EMPTY_FORCES_NO
)


def _force(vals, flag, want, why):
    have = vals[flag]
    if have == want:
        return False
    if have != UNKNOWN:
        raise ValueError(
            "inconsistent base description: %s, but %s=%s was given"
            % (why, flag, have)
        )
    vals[flag] = want
    return True


@dataclass(frozen=True)
class BaseDescriptor:
    empty: str = UNKNOWN
    affine: str = UNKNOWN
    quasicompact: str = UNKNOWN
    quasiseparated: str = UNKNOWN
    separated: str = UNKNOWN
    connected: str = UNKNOWN
    irreducible: str = UNKNOWN
    reduced: str = UNKNOWN
    integral: str = UNKNOWN
    normal: str = UNKNOWN
    regular: str = UNKNOWN
    cohen_macaulay: str = UNKNOWN
    locally_noetherian: str = UNKNOWN
    noetherian: str = UNKNOWN
    pointwise_noetherian: str = UNKNOWN
    topologically_noetherian: str = UNKNOWN
    jacobsonian: str = UNKNOWN
    universally_catenary: str = UNKNOWN
    equidimensional: str = UNKNOWN
    dim: DimRange = DimRange.unknown()

    def __post_init__(self):
        vals = {}
        for f in _BASE_FLAGS:
            v = getattr(self, f)
            if v not in (YES, NO, UNKNOWN):
                raise ValueError("flag %r must be yes, no or unknown" % f)
            vals[f] = v
        if not isinstance(self.dim, DimRange):
            raise ValueError("dim must be a DimRange")
        dim = self.dim
        if dim.kind == "empty":
            _force(vals, "empty", YES, "the dimension interval is empty")
        changed = True
        while changed:
            changed = False
            for p, q in _IMPLICATIONS:
                if vals[p] == YES:
                    changed |= _force(vals, q, YES, "%s=yes forces %s=yes" % (p, q))
                if vals[q] == NO:
                    changed |= _force(vals, p, NO, "%s=no forces %s=no" % (p, q))
            if vals["empty"] == YES:
                for f in _EMPTY_FORCES_YES:
                    changed |= _force(
                        vals, f, YES, "an empty scheme has %s by convention" % f
                    )
                for f in _EMPTY_FORCES_NO:
                    changed |= _force(
                        vals, f, NO, "an empty scheme is never %s" % f
                    )
            else:
                if any(vals[f] == NO for f in _EMPTY_FORCES_YES):
                    changed |= _force(
                        vals, "empty", NO, "a flag failing rules out emptiness"
                    )
                if any(vals[f] == YES for f in _EMPTY_FORCES_NO):
                    changed |= _force(
                        vals, "empty", NO, "irreducibility needs points"
                    )
        if vals["empty"] == YES:
            if dim.kind == "range":
                raise ValueError(
                    "inconsistent base description: empty=yes with a "
                    "dimension range"
                )
            dim = DimRange.empty()
        for f in _BASE_FLAGS:
            object.__setattr__(self, f, vals[f])
        object.__setattr__(self, "dim", dim)

    @classmethod
    def field(cls):
        flags = {f: YES for f in _BASE_FLAGS}
        flags["empty"] = NO
        return cls(dim=DimRange.exact(0), **flags)

    @classmethod
    def from_json_dict(cls, data):
        if not isinstance(data, dict):
            raise ValueError("base document must be a JSON object")
        kwargs = {}
        for key, value in data.items():
            if key == "dim":
                kwargs["dim"] = _dim_from_json(value)
            elif key in _BASE_FLAGS:
                if value not in (YES, NO, UNKNOWN):
                    raise ValueError(
                        "base property %r must be yes, no or unknown" % key
                    )
                kwargs[key] = value
            else:
                raise ValueError("unknown base property %r" % key)
        return cls(**kwargs)


def _int_from_json(value, what):
    if isinstance(value, bool):
        raise ValueError("%s must be an integer" % what)
    if isinstance(value, int):
        return value
    if isinstance(value, str):
        try:
            return int(value, 10)
        except ValueError:
            raise ValueError("%s is not a decimal integer: %r" % (what, value))
    raise ValueError("%s must be an integer or decimal string" % what)


def _dim_from_json(value):
    if value == "empty":
        return DimRange.empty()
    if value == "unknown":
        return DimRange.unknown()
    if isinstance(value, list) and len(value) == 2:
        lo = _int_from_json(value[0], "dimension bound")
        hi = value[1]
        if hi == "inf":
            return DimRange.at_least(lo)
        return DimRange.between(lo, _int_from_json(hi, "dimension bound"))
    raise ValueError("dim must be [lo, hi], [lo, \"inf\"], or a sentinel")


def _base_artinian(base):
    # derived flag: artinian = noetherian of dimension zero (or empty)
    if base.empty == YES:
        return YES
    if base.noetherian == YES and base.dim.is_exact_zero:
        return YES
    if base.noetherian == NO:
        return NO
    if base.dim.kind == "range" and base.dim.lo >= 1:
        return NO
    return UNKNOWN


# --------------------------------------------------------------- chart systems


class MonoidSystem:
    """Finite meet-semilattice of affine monoids, indexed by 0..n-1.

    (i, j) in the order means label i sits below label j; for fan systems
    that is the face order on cones, and the monoid of i then contains the
    monoid of j.  Explicit systems must satisfy the same inclusion rule.
    """

    def __init__(self, monoids, leq=(), inf=None, fan=None, source="explicit"):
        monoids = tuple(monoids)
        for m in monoids:
            if not isinstance(m, AffineMonoid):
                raise TypeError("system entries must be affine monoids")
        ranks = {m.ambient_rank for m in monoids}
        if len(ranks) > 1:
            raise ValueError("system monoids live in different lattices")
        self.monoids = monoids
        self.labels = tuple(range(len(monoids)))
        self.source = source
        self.fan = fan
        self.r = max((len(m.diff_basis) for m in monoids), default=0)
        n = len(monoids)

        def label(x):
            if isinstance(x, bool) or not isinstance(x, int) or not 0 <= x < n:
                raise ValueError("label %r is not an index into the system" % (x,))
            return x

        rel = [[i == j for j in range(n)] for i in range(n)]
        for i, j in leq:
            rel[label(i)][label(j)] = True
        for k in range(n):
            for i in range(n):
                if rel[i][k]:
                    for j in range(n):
                        if rel[k][j]:
                            rel[i][j] = True
        for i in range(n):
            for j in range(n):
                if i != j and rel[i][j] and rel[j][i]:
                    raise ValueError("the order has a two-way pair")
        self._rel = rel
        for i in range(n):
            for j in range(n):
                if i != j and rel[i][j]:
                    for g in monoids[j].generators:
                        if not monoid_contains(monoids[i], g):
                            raise ValueError(
                                "label %d is below %d but its monoid does "
                                "not contain the other" % (i, j)
                            )
        table = {}
        if inf:
            for (i, j), k in inf.items():
                table[(label(i), label(j))] = label(k)
                table[(label(j), label(i))] = label(k)
        self._inf = {}
        for i in range(n):
            for j in range(n):
                if rel[i][j]:
                    k = i
                elif rel[j][i]:
                    k = j
                elif (i, j) in table:
                    k = table[(i, j)]
                else:
                    raise ValueError(
                        "no meet recorded for the incomparable pair "
                        "(%d, %d)" % (i, j)
                    )
                if not (rel[k][i] and rel[k][j]):
                    raise ValueError(
                        "the recorded meet of (%d, %d) is not below both"
                        % (i, j)
                    )
                for l in range(n):
                    if rel[l][i] and rel[l][j] and not rel[l][k]:
                        raise ValueError(
                            "the recorded meet of (%d, %d) is not the "
                            "greatest lower bound" % (i, j)
                        )
                self._inf[(i, j)] = k

    @classmethod
    def from_fan(cls, fan):
        validate_fan(fan)
        cones = fan.cones
        lattices = {c: faces(c) for c in cones}
        leq = []
        for i, a in enumerate(cones):
            for j, b in enumerate(cones):
                if i != j and a in lattices[b]:
                    leq.append((i, j))
        inf = {}
        for i in range(len(cones)):
            for j in range(i + 1, len(cones)):
                cap = intersect_cones(cones[i], cones[j])
                inf[(i, j)] = fan.index(cap)
        return cls(
            [dual_monoid(c) for c in cones],
            leq=leq,
            inf=inf,
            fan=fan,
            source="fan",
        )

    def leq(self, i, j):
        return self._rel[i][j]

    def inf(self, i, j):
        return self._inf[(i, j)]

    def strict_pairs(self):
        return tuple(
            (i, j)
            for i in self.labels
            for j in self.labels
            if i != j and self._rel[i][j]
        )


@dataclass(frozen=True)
class SystemImmersionReport:
    verdict: str
    entries: tuple  # (lower label, upper label, ImmersionCheck)
    reason: str


def is_openly_immersive(system, search_bound=6):
    """Is every comparable pair of charts a single-element localization?

    Fan systems come with certified localizing elements, so the answer is
    yes with witnesses.  Explicit systems run the bounded search and may
    come back unknown.
    """
    entries = []
    for i, j in system.strict_pairs():
        if system.source == "fan":
            cert = localization_certificate(
                system.monoids[j],
                system.monoids[i],
                system.fan.cones[j],
                system.fan.cones[i],
            )
            check = ImmersionCheck(
                verdict=YES,
                witness=cert.element,
                reason="certified localization along a face",
            )
        else:
            check = check_openly_immersive_pair(
                system.monoids[i], system.monoids[j], search_bound=search_bound
            )
        entries.append((i, j, check))
    for i, j, check in entries:
        if check.verdict == "no":
            return SystemImmersionReport(
                verdict=NO,
                entries=tuple(entries),
                reason="pair (%d, %d): %s" % (i, j, check.reason),
            )
    for i, j, check in entries:
        if check.verdict == "unknown":
            return SystemImmersionReport(
                verdict=UNKNOWN,
                entries=tuple(entries),
                reason="pair (%d, %d): %s" % (i, j, check.reason),
            )
    return SystemImmersionReport(
        verdict=YES,
        entries=tuple(entries),
        reason="every comparable pair is a witnessed localization",
    )


@dataclass(frozen=True)
class AugmentationSection:
    label: int
    monoid: AffineMonoid

    def apply(self, element):
        if element.monoid != self.monoid:
            raise ValueError("element belongs to a different chart")
        return augmentation(element)


@dataclass(frozen=True)
class GluingAtlas:
    fan: Fan
    charts: tuple
    transitions: tuple  # (lower label, upper label, LocalizationCertificate)
    sections: tuple


def build_atlas(fan):
    """Charts, certified transitions, and one collapse-to-coefficients
    section per chart."""
    system = MonoidSystem.from_fan(fan)
    transitions = []
    for i, j in system.strict_pairs():
        cert = localization_certificate(
            system.monoids[j],
            system.monoids[i],
            fan.cones[j],
            fan.cones[i],
        )
        transitions.append((i, j, cert))
    sections = tuple(
        AugmentationSection(label=k, monoid=system.monoids[k])
        for k in system.labels
    )
    return GluingAtlas(
        fan=fan,
        charts=system.monoids,
        transitions=tuple(transitions),
        sections=sections,
    )


@dataclass(frozen=True)
class SeparationReport:
    separated: bool
    entries: tuple  # (i, j, bool)

    @property
    def failures(self):
        return tuple((i, j) for i, j, ok in self.entries if not ok)


def check_separation_condition(system):
    """For every pair, the meet chart must equal the sum of the two charts."""
    entries = []
    n = len(system.monoids)
    for i in range(n):
        for j in range(i + 1, n):
            meet = system.monoids[system.inf(i, j)]
            joined = monoid_sum(system.monoids[i], system.monoids[j])
            ok = all(
                monoid_contains(joined, g) for g in meet.generators
            ) and all(monoid_contains(meet, g) for g in joined.generators)
            entries.append((i, j, ok))
    return SeparationReport(
        separated=all(ok for _, _, ok in entries), entries=tuple(entries)
    )


# ------------------------------------------------------------------- reports


def dimension_bounds(fan, base):
    """Dimension interval of the total space over the described base."""
    if len(fan.cones) == 0 or base.empty == YES:
        return DimRange.empty()
    if base.dim.kind == "empty":
        return DimRange.empty()
    if base.dim.kind == "unknown":
        return DimRange.unknown()
    r = fan.rank
    lo = base.dim.lo + r
    if base.dim.hi is None:
        return DimRange.at_least(lo)
    if base.locally_noetherian == YES:
        return DimRange.between(lo, base.dim.hi + r)
    return DimRange.between(lo, (r + 1) * base.dim.hi + r)


@dataclass(frozen=True)
class PropertyRecord:
    property: str
    verdict: str
    citation: str
    justification: str
    hypotheses: tuple
    interval: DimRange | None = None

    def to_json_dict(self):
        out = {
            "property": self.property,
            "verdict": self.verdict,
            "citation": self.citation,
            "justification": self.justification,
        }
        if self.interval is not None:
            out["interval"] = self.interval.to_json()
        return out


def evaluate_atom(atom, fan, base):
    """Truth of one hypothesis atom; used to audit reports."""
    if atom == "always":
        return True
    if atom == "fan_empty":
        return len(fan.cones) == 0
    if atom == "fan_nonempty":
        return len(fan.cones) > 0
    if atom == "fan_complete":
        return is_complete(fan)
    if atom == "fan_not_complete":
        return not is_complete(fan)
    if atom == "fan_regular":
        return is_regular(fan).regular
    if atom == "fan_not_regular":
        return not is_regular(fan).regular
    if atom == "rank_zero":
        return fan.rank == 0
    if atom == "rank_positive":
        return fan.rank > 0
    if atom == "base.dim_known":
        return base.dim.kind != "unknown"
    if atom == "base.dim_unknown":
        return base.dim.kind == "unknown"
    if atom == "base.dim_zero":
        return base.dim.is_exact_zero
    if atom.startswith("base.") and "=" in atom:
        name, want = atom[len("base."):].split("=", 1)
        if name == "artinian":
            return _base_artinian(base) == want
        return getattr(base, name) == want
    raise ValueError("unknown hypothesis atom %r" % atom)


def _rec(prop, verdict, citation, justification, atoms, interval=None):
    return PropertyRecord(
        property=prop,
        verdict=verdict,
        citation=citation,
        justification=justification,
        hypotheses=tuple(atoms),
        interval=interval,
    )


_REFLECTED = (
    ("quasiseparated", "base-reflection-quasiseparated"),
    ("separated", "base-reflection-separated"),
    ("quasicompact", "base-reflection-quasicompact"),
    ("locally_noetherian", "base-reflection-locally-noetherian"),
    ("noetherian", "base-reflection-noetherian"),
    ("pointwise_noetherian", "base-reflection-pointwise-noetherian"),
    ("topologically_noetherian", "base-reflection-topologically-noetherian"),
    ("jacobsonian", "base-reflection-jacobsonian"),
    ("connected", "base-reflection-connected"),
    ("reduced", "base-reflection-reduced"),
    ("normal", "base-reflection-normal"),
    ("cohen_macaulay", "base-reflection-cohen-macaulay"),
)


def property_report(fan, base):
    """All recorded verdicts for the fan scheme over the described base."""
    validate_fan(fan)
    fan_empty = len(fan.cones) == 0
    fan_complete = is_complete(fan)
    fan_regular = is_regular(fan).regular
    rank_zero = fan.rank == 0
    records = []

    def crisp_or_empty(prop, crisp_ok, atom, not_atom, citation, yes_j, no_j, unk_j):
        # yes iff the crisp fan condition holds, or either side is empty
        if fan_empty:
            records.append(_rec(
                prop, YES, citation,
                "the total space is empty, so the condition is vacuous",
                ("fan_empty",),
            ))
        elif crisp_ok:
            records.append(_rec(prop, YES, citation, yes_j, (atom,)))
        elif base.empty == YES:
            records.append(_rec(
                prop, YES, citation,
                "over an empty base there is nothing to check",
                ("base.empty=yes",),
            ))
        elif base.empty == NO:
            records.append(_rec(
                prop, NO, citation, no_j,
                (not_atom, "fan_nonempty", "base.empty=no"),
            ))
        else:
            records.append(_rec(
                prop, UNKNOWN, citation, unk_j, (not_atom, "fan_nonempty")
            ))

    records.append(_rec(
        "morphism.flat", YES, "flatness-criterion",
        "each chart algebra is a free module over the base coefficients",
        ("always",),
    ))
    if not fan_empty:
        records.append(_rec(
            "morphism.faithfully_flat", YES, "faithful-flatness-criterion",
            "flat, and the charts cover every base point because the fan "
            "is nonempty",
            ("fan_nonempty",),
        ))
    elif base.empty == YES:
        records.append(_rec(
            "morphism.faithfully_flat", YES, "faithful-flatness-criterion",
            "flat, and surjectivity is vacuous over an empty base",
            ("fan_empty", "base.empty=yes"),
        ))
    elif base.empty == NO:
        records.append(_rec(
            "morphism.faithfully_flat", NO, "faithful-flatness-criterion",
            "the total space is empty while the base is not, so the "
            "morphism cannot be surjective",
            ("fan_empty", "base.empty=no"),
        ))
    else:
        records.append(_rec(
            "morphism.faithfully_flat", UNKNOWN, "faithful-flatness-criterion",
            "flat, but surjectivity depends on whether the base is empty",
            ("fan_empty",),
        ))
    records.append(_rec(
        "morphism.separated", YES, "morphism-separation-criterion",
        "the meet chart of any two cones is generated by their two chart "
        "monoids together",
        ("always",),
    ))
    records.append(_rec(
        "morphism.quasiseparated", YES, "morphism-quasiseparation-criterion",
        "chart overlaps are single localizations, hence quasicompact",
        ("always",),
    ))
    records.append(_rec(
        "morphism.quasicompact", YES, "morphism-quasicompactness-criterion",
        "finitely many affine charts cover the total space",
        ("always",),
    ))
    records.append(_rec(
        "morphism.finite_presentation", YES, "finite-presentation-criterion",
        "every chart algebra is cut out by finitely many monomial relations "
        "on finitely many generators",
        ("always",),
    ))
    crisp_or_empty(
        "morphism.proper", fan_complete, "fan_complete", "fan_not_complete",
        "properness-completeness-criterion",
        "the fan is complete, and completeness of the fan is equivalent to "
        "properness over any base",
        "the fan misses a direction, so properness fails over the nonempty "
        "base",
        "an incomplete fan is proper only over an empty base, which is "
        "undetermined here",
    )
    if rank_zero and not fan_empty:
        records.append(_rec(
            "morphism.finite", YES, "finiteness-criterion",
            "the fan lives in the zero lattice, so every chart equals the "
            "base",
            ("rank_zero", "fan_nonempty"),
        ))
    elif fan_empty:
        records.append(_rec(
            "morphism.finite", YES, "finiteness-criterion",
            "an empty scheme is finite over any base",
            ("fan_empty",),
        ))
    elif base.empty == YES:
        records.append(_rec(
            "morphism.finite", YES, "finiteness-criterion",
            "everything over an empty base is finite",
            ("base.empty=yes",),
        ))
    elif base.empty == NO:
        records.append(_rec(
            "morphism.finite", NO, "finiteness-criterion",
            "a torus of positive dimension sits inside the total space, so "
            "fibers are infinite",
            ("rank_positive", "fan_nonempty", "base.empty=no"),
        ))
    else:
        records.append(_rec(
            "morphism.finite", UNKNOWN, "finiteness-criterion",
            "fibers are infinite unless the base is empty, which is "
            "undetermined here",
            ("rank_positive", "fan_nonempty"),
        ))
    records.append(_rec(
        "morphism.connected", YES, "fiber-connectedness-criterion",
        "every fiber contains a dense torus, hence is connected",
        ("always",),
    ))
    if fan_empty:
        records.append(_rec(
            "morphism.irreducible", UNKNOWN, "fiber-irreducibility-criterion",
            "an empty morphism has no fibers to test",
            ("fan_empty",),
        ))
    else:
        records.append(_rec(
            "morphism.irreducible", YES, "fiber-irreducibility-criterion",
            "every fiber contains a dense torus, hence is irreducible",
            ("fan_nonempty",),
        ))
    records.append(_rec(
        "morphism.normal", YES, "fiber-normality-criterion",
        "chart monoids are integrally closed, so the fibers are normal",
        ("always",),
    ))
    records.append(_rec(
        "morphism.cohen_macaulay", YES, "fiber-cohen-macaulay-criterion",
        "lattice-point monoid algebras over a field are Cohen-Macaulay",
        ("always",),
    ))
    crisp_or_empty(
        "morphism.regular", fan_regular, "fan_regular", "fan_not_regular",
        "fan-regularity-criterion",
        "every cone is spanned by part of a lattice basis, so all fibers "
        "are smooth",
        "a non-regular cone produces a singular point in a fiber over the "
        "nonempty base",
        "a non-regular fan has smooth fibers only over an empty base, "
        "which is undetermined here",
    )
    records.append(_rec(
        "morphism.serre_s_all", YES, "serre-s-criterion",
        "Cohen-Macaulay fibers satisfy every depth condition",
        ("always",),
    ))
    crisp_or_empty(
        "morphism.serre_r_high", fan_regular, "fan_regular", "fan_not_regular",
        "serre-r-high-criterion",
        "fiber regularity in every codimension is exactly fan regularity",
        "a non-regular cone breaks fiber regularity in some codimension "
        "over the nonempty base",
        "fiber regularity in high codimension needs a regular fan or an "
        "empty base, which is undetermined here",
    )
    if fan_empty or fan_regular:
        records.append(_rec(
            "morphism.serre_r_low", YES, "serre-r-low-sufficiency",
            "a regular or empty fan certifies regularity in low "
            "codimensions as well",
            ("fan_empty",) if fan_empty else ("fan_regular",),
        ))
    elif base.empty == YES:
        records.append(_rec(
            "morphism.serre_r_low", YES, "serre-r-low-sufficiency",
            "over an empty base there is nothing to check",
            ("base.empty=yes",),
        ))
    else:
        records.append(_rec(
            "morphism.serre_r_low", UNKNOWN, "serre-r-low-sufficiency",
            "low codimension regularity can hold for singular fans; only "
            "the regular case is certified here",
            ("fan_not_regular", "fan_nonempty"),
        ))

    for name, citation in _REFLECTED:
        prop = "scheme." + name
        if fan_empty:
            records.append(_rec(
                prop, YES, citation,
                "the total space is empty, and the empty scheme counts as "
                + name.replace("_", " "),
                ("fan_empty",),
            ))
            continue
        value = getattr(base, name)
        if value == UNKNOWN:
            records.append(_rec(
                prop, UNKNOWN, citation,
                "the property passes between base and total space along "
                "the chart covering, but the base descriptor leaves it "
                "undetermined",
                ("fan_nonempty",),
            ))
        else:
            records.append(_rec(
                prop, value, citation,
                "the property passes between base and total space along "
                "the chart covering, and the base reads %s" % value,
                ("fan_nonempty", "base.%s=%s" % (name, value)),
            ))

    for name, citation, via in (
        ("irreducible", "irreducibility-transfer", "dense torus"),
        ("integral", "integrality-transfer", "dense torus"),
    ):
        prop = "scheme." + name
        if fan_empty:
            records.append(_rec(
                prop, NO, citation,
                "the empty scheme is not %s" % name,
                ("fan_empty",),
            ))
            continue
        value = getattr(base, name)
        if value == UNKNOWN:
            records.append(_rec(
                prop, UNKNOWN, citation,
                "the base descriptor leaves this undetermined",
                ("fan_nonempty",),
            ))
        else:
            records.append(_rec(
                prop, value, citation,
                "with a nonempty fan the total space is %s exactly when "
                "the base is, through the %s" % (name, via),
                ("fan_nonempty", "base.%s=%s" % (name, value)),
            ))

    if fan_empty:
        records.append(_rec(
            "scheme.regular", YES, "scheme-regularity-criterion",
            "the empty scheme is regular by convention",
            ("fan_empty",),
        ))
    elif base.empty == YES:
        records.append(_rec(
            "scheme.regular", YES, "scheme-regularity-criterion",
            "the total space over an empty base is empty, hence regular by "
            "convention",
            ("base.empty=yes",),
        ))
    elif fan_regular and base.regular == YES:
        records.append(_rec(
            "scheme.regular", YES, "scheme-regularity-criterion",
            "a regular base together with a regular fan gives regular "
            "charts",
            ("fan_regular", "base.regular=yes"),
        ))
    elif not fan_regular and base.empty == NO:
        records.append(_rec(
            "scheme.regular", NO, "scheme-regularity-criterion",
            "a singular cone forces a singular point on the total space "
            "over the nonempty base",
            ("fan_not_regular", "fan_nonempty", "base.empty=no"),
        ))
    elif base.regular == NO:
        records.append(_rec(
            "scheme.regular", NO, "scheme-regularity-criterion",
            "the base is singular and its singularities persist in the "
            "total space",
            ("fan_nonempty", "base.regular=no"),
        ))
    else:
        records.append(_rec(
            "scheme.regular", UNKNOWN, "scheme-regularity-criterion",
            "regularity of the total space is undetermined by the "
            "descriptor",
            ("fan_nonempty",),
        ))

    art = _base_artinian(base)
    if fan_empty:
        records.append(_rec(
            "scheme.artinian", YES, "artinianness-criterion",
            "the empty scheme is artinian by convention",
            ("fan_empty",),
        ))
    elif base.empty == YES:
        records.append(_rec(
            "scheme.artinian", YES, "artinianness-criterion",
            "the total space over an empty base is empty, hence artinian",
            ("base.empty=yes",),
        ))
    elif rank_zero and art == YES:
        records.append(_rec(
            "scheme.artinian", YES, "artinianness-criterion",
            "a zero-rank fan over a noetherian base of dimension zero "
            "stays artinian",
            ("rank_zero", "base.artinian=yes"),
        ))
    elif not rank_zero and base.empty == NO:
        records.append(_rec(
            "scheme.artinian", NO, "artinianness-criterion",
            "a torus of positive dimension is not artinian",
            ("rank_positive", "fan_nonempty", "base.empty=no"),
        ))
    elif art == NO and base.empty == NO:
        records.append(_rec(
            "scheme.artinian", NO, "artinianness-criterion",
            "the base itself is not artinian, and the charts cover it",
            ("base.artinian=no", "base.empty=no"),
        ))
    else:
        records.append(_rec(
            "scheme.artinian", UNKNOWN, "artinianness-criterion",
            "artinianness is undetermined by the descriptor",
            ("fan_nonempty",),
        ))

    if fan_empty:
        records.append(_rec(
            "scheme.equidimensional", YES, "equidimensionality-transfer",
            "the empty scheme is equidimensional by convention",
            ("fan_empty",),
        ))
    elif base.locally_noetherian == YES and base.equidimensional != UNKNOWN:
        records.append(_rec(
            "scheme.equidimensional", base.equidimensional,
            "equidimensionality-transfer",
            "over a locally noetherian base every chart shifts dimensions "
            "by the lattice rank, so equidimensionality matches the base",
            (
                "fan_nonempty",
                "base.locally_noetherian=yes",
                "base.equidimensional=%s" % base.equidimensional,
            ),
        ))
    else:
        records.append(_rec(
            "scheme.equidimensional", UNKNOWN, "equidimensionality-transfer",
            "without local noetherianity of the base, fiber dimensions "
            "can jump, so no verdict is recorded",
            ("fan_nonempty",),
        ))

    if fan_empty:
        records.append(_rec(
            "scheme.universally_catenary", YES, "universal-catenarity-transfer",
            "the empty scheme is universally catenary by convention",
            ("fan_empty",),
        ))
    elif base.universally_catenary == UNKNOWN:
        records.append(_rec(
            "scheme.universally_catenary", UNKNOWN,
            "universal-catenarity-transfer",
            "the base descriptor leaves this undetermined",
            ("fan_nonempty",),
        ))
    else:
        records.append(_rec(
            "scheme.universally_catenary", base.universally_catenary,
            "universal-catenarity-transfer",
            "the total space is of finite type over the base, so universal "
            "catenarity matches the base",
            (
                "fan_nonempty",
                "base.universally_catenary=%s" % base.universally_catenary,
            ),
        ))

    interval = dimension_bounds(fan, base)
    if fan_empty:
        dim_atoms = ("fan_empty",)
        dim_j = "the total space is empty"
        dim_verdict = YES
    elif base.empty == YES:
        dim_atoms = ("base.empty=yes",)
        dim_j = "the total space over an empty base is empty"
        dim_verdict = YES
    elif interval.kind == "unknown":
        dim_atoms = ("fan_nonempty", "base.dim_unknown")
        dim_j = "no dimension interval was given for the base"
        dim_verdict = UNKNOWN
    elif base.locally_noetherian == YES:
        dim_atoms = (
            "fan_nonempty", "base.dim_known", "base.locally_noetherian=yes"
        )
        dim_j = "charts add the lattice rank to the base dimension"
        dim_verdict = YES
    else:
        dim_atoms = ("fan_nonempty", "base.dim_known")
        dim_j = (
            "without local noetherianity only the polynomial growth bound "
            "on the chart dimension applies"
        )
        dim_verdict = YES
    records.append(_rec(
        "scheme.dim", dim_verdict, "dimension-formula", dim_j, dim_atoms,
        interval=interval,
    ))
    return tuple(records)


def component_transport(fan, base, count):
    """Carry a connected component count across the structure morphism.

    Fibers are connected and the morphism has a section on every chart, so
    a nonempty fan preserves the component count of the base.
    """
    if len(fan.cones) == 0:
        raise ValueError("an empty fan gives an empty total space; no "
                         "components to transport")
    if isinstance(count, bool) or not isinstance(count, int) or count < 0:
        raise ValueError("component count must be a nonnegative integer")
    if base.empty == YES:
        return 0
    return count


@dataclass(frozen=True)
class ReductionReport:
    commutes: bool
    citation: str
    justification: str


def reduction_report(fan):
    """Passing to the reduced base commutes with the fan construction."""
    return ReductionReport(
        commutes=True,
        citation="reduction-commutation",
        justification="chart algebras are free modules, so nilpotents of "
        "the total space are exactly base nilpotents times monomials",
    )
