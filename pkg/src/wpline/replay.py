"""Verification pipelines for the three genus-one tilting constructions.

Each pipeline builds the starting tilting object, walks the documented
mutation sequence on the cluster quiver while checking every class identity
attached to the exchanged summands, and confirms that the final quiver is
isomorphic to the transcribed tubular target.  All identities are exact
integer-vector equalities in the Grothendieck group; nothing is approximate.
Reports are plain dictionaries, deterministic and reproducible bit for bit,
and re-running a pipeline re-evaluates every recorded check.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .bundles import (
    ExtBundle,
    StableObject,
    auslander,
    canonical_form,
    eq_ext,
    slope,
    suspend,
)
from .fixtures import DOCUMENTED_SEQUENCES, fixture
from .k0 import K0Class, k0_of
from .lgroup import LElement, WeightTriple
from .quiver import apply_sequence, is_isomorphic
from .stablehom import Verdict, corner_exchange_verdict


@dataclass
class Check:
    name: str
    statement: str
    passed: bool
    details: str = ""

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "statement": self.statement,
            "passed": self.passed,
            "details": self.details,
        }


@dataclass
class SequenceRecord:
    """A non-split exact sequence recorded at class level: middle = sub + quotient."""

    sub: str
    middle: str
    quotient: str
    additive: bool

    def to_dict(self) -> dict:
        return {
            "sub": self.sub,
            "middle": self.middle,
            "quotient": self.quotient,
            "additive": self.additive,
        }


@dataclass
class ExchangeStep:
    vertex: int
    outgoing: str
    incoming: str
    sequences: list[SequenceRecord] = field(default_factory=list)
    checks: list[Check] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "vertex": self.vertex,
            "outgoing": self.outgoing,
            "incoming": self.incoming,
            "sequences": [s.to_dict() for s in self.sequences],
            "checks": [c.to_dict() for c in self.checks],
        }


@dataclass
class ReplayReport:
    weight_type: str
    start_fixture: str
    target_fixture: str
    sequence: list[int]
    initial_objects: dict[int, str]
    final_objects: dict[int, str]
    steps: list[ExchangeStep]
    checks: list[Check]
    quiver_isomorphic: bool
    iso_witness: dict[int, int] | None
    slopes: dict[str, str]
    notes: list[str]

    @property
    def passed(self) -> bool:
        step_ok = all(c.passed for s in self.steps for c in s.checks)
        seq_ok = all(r.additive for s in self.steps for r in s.sequences)
        return step_ok and seq_ok and all(c.passed for c in self.checks) and self.quiver_isomorphic

    def to_dict(self) -> dict:
        return {
            "schema": "1",
            "weight_type": self.weight_type,
            "pass": self.passed,
            "start_fixture": self.start_fixture,
            "target_fixture": self.target_fixture,
            "sequence": list(self.sequence),
            "initial_objects": {str(k): v for k, v in sorted(self.initial_objects.items())},
            "final_objects": {str(k): v for k, v in sorted(self.final_objects.items())},
            "steps": [s.to_dict() for s in self.steps],
            "checks": [c.to_dict() for c in self.checks],
            "quiver_isomorphic": self.quiver_isomorphic,
            "iso_witness": (
                {str(k): v for k, v in sorted(self.iso_witness.items())}
                if self.iso_witness is not None
                else None
            ),
            "slopes": dict(sorted(self.slopes.items())),
            "notes": list(self.notes),
        }

    def render_text(self) -> str:
        lines = [f"replay {self.weight_type}: {'PASS' if self.passed else 'FAIL'}"]
        lines.append(f"  sequence: {','.join(map(str, self.sequence))} on {self.start_fixture}")
        for s in self.steps:
            lines.append(f"  step u@{s.vertex}: {s.outgoing} -> {s.incoming}")
            for r in s.sequences:
                mark = "ok" if r.additive else "FAIL"
                lines.append(f"    [{mark}] class({r.middle}) = class({r.sub}) + class({r.quotient})")
            for c in s.checks:
                lines.append(f"    [{'ok' if c.passed else 'FAIL'}] {c.name}: {c.statement}")
        for c in self.checks:
            lines.append(f"  [{'ok' if c.passed else 'FAIL'}] {c.name}: {c.statement}")
        lines.append(
            f"  final quiver isomorphic to {self.target_fixture}: {self.quiver_isomorphic}"
        )
        for label, mu in sorted(self.slopes.items()):
            lines.append(f"  slope {label} = {mu}")
        for n in self.notes:
            lines.append(f"  note: {n}")
        return "\n".join(lines)


BRIDGE_NOTE = (
    "standing justifications, invoked rather than recomputed: within one slope"
    " window, vanishing of first self-extensions already gives extension-"
    "freeness, and a tilting object here is the same thing as a cluster tilting"
    " object in the orbit category"
)


def _chk(sink: list[Check], name: str, statement: str, passed: bool, details: str = "") -> bool:
    sink.append(Check(name, statement, bool(passed), details))
    return bool(passed)


def _record(
    sink: list[SequenceRecord], sub: K0Class, sub_l: str, mid: K0Class, mid_l: str, quo: K0Class, quo_l: str
) -> None:
    sink.append(SequenceRecord(sub_l, mid_l, quo_l, additive=(mid == sub + quo)))


# -- rank-three companions from the pullback/pushout triangles -----------------


def corestriction_companion(x: LElement, j: int, k: int) -> StableObject:
    """Companion of the co-restriction triangle at an interior vector x.

    Requires 0 <= x - x_j - x_k <= x <= 2*omega + c.  The object is pinned by
    the non-split sequence with sub the suspension of E<x - x_j - x_k> and
    quotient O(x), so its class is class(suspend(E<x - x_j - x_k>)) + [O(x)].
    """
    w = x.w
    if j == k or j not in (1, 2, 3) or k not in (1, 2, 3):
        raise ValueError("j, k must be two distinct branch indices")
    base = x - w.x(j) - w.x(k)
    if not (w.zero <= base and base <= x and x <= w.top and x.l == 0 and base.l == 0):
        raise ValueError("need 0 <= x - x_j - x_k <= x <= 2*omega + c")
    sub = suspend(ExtBundle(w, base.interior, w.zero))
    cls = sub.k0_class + k0_of(w).reduce_line(x)
    return StableObject.formal(
        w,
        cls,
        label=f"G({x};{j},{k})",
        provenance=(f"0 -> {sub}=E<{base.interior}>[1] -> G -> O({x}) -> 0",),
    )


def coextension_companion(x: LElement, j: int, k: int) -> StableObject:
    """Companion of the co-extension triangle: class(E<x + x_j>) + [O(x + x_k)]."""
    w = x.w
    if j == k or j not in (1, 2, 3) or k not in (1, 2, 3):
        raise ValueError("j, k must be two distinct branch indices")
    up = x + w.x(j) + w.x(k)
    if not (w.zero <= x and x <= up and up <= w.top and x.l == 0 and up.l == 0):
        raise ValueError("need 0 <= x <= x + x_j + x_k <= 2*omega + c")
    sub = ExtBundle(w, (x + w.x(j)).interior, w.zero)
    quo = x + w.x(k)
    cls = sub.k0_class + k0_of(w).reduce_line(quo)
    return StableObject.formal(
        w,
        cls,
        label=f"H({x};{j},{k})",
        provenance=(f"0 -> {sub} -> H -> O({quo}) -> 0",),
    )


# -- rank-three companions of the Auslander-twist triangles --------------------


def twist_triangle_check(w: WeightTriple, i: int) -> dict:
    """Verify the triangle E -> E(xbar_i) -> F_i -> E[1] at class level.

    The finite-length quotient S of any nonzero map E -> E(xbar_i) has
    det S = 2*xbar_i = (p_j - 2)x_j + (p_k - 2)x_k, and F_i depends on the
    weights of the two other branches: zero when both are 2, an explicit
    rank-two bundle when exactly one is 2, a rank-three object otherwise.
    """
    if i not in (1, 2, 3):
        raise ValueError("branch index must be 1, 2 or 3")
    others = [t for t in (1, 2, 3) if t != i]
    ps = w.weights
    k0 = k0_of(w)
    checks: list[Check] = []

    two_xbar = 2 * w.xbar(i)
    rhs = sum(((ps[t - 1] - 2) * w.x(t) for t in others), start=w.zero)
    _chk(
        checks,
        "quotient determinant",
        f"2*xbar_{i} = sum over other branches of (p_t - 2) x_t",
        two_xbar == rhs,
        f"{two_xbar} vs {rhs}",
    )

    big = [t for t in others if ps[t - 1] > 2]
    if len(big) == 0:
        case = 1
        f_label = "0"
        _chk(checks, "case 1 vanishing", "det of the quotient is 0, forcing F_i = 0", two_xbar == w.zero)
    elif len(big) == 1:
        case = 2
        k = big[0]
        pk = ps[k - 1]
        fk = ExtBundle(w, ((pk - 3) * w.x(k)).interior, w.x(k))
        lhs = k0.reduce_line(w.zero) + k0.reduce_line(w.xbar(k)) + k0.torsion_class(k, pk - 2, pk - 2)
        _chk(
            checks,
            "case 2 class identity",
            f"[O] + [O(xbar_{k})] + [torsion tube {k}, top p-2, length p-2] = [{fk}]",
            lhs == fk.k0_class,
        )
        f_label = str(fk)
    else:
        case = 3
        classes = []
        for t in others:
            pt = ps[t - 1]
            et = ExtBundle(w, ((pt - 3) * w.x(t)).interior, w.x(t))
            classes.append(et.k0_class + k0.reduce_line(w.xbar(i) + w.xbar(t)))
        _chk(
            checks,
            "case 3 t-independence",
            "class(E<(p_t-3)x_t>(x_t)) + [O(xbar_i + xbar_t)] agrees for both t != i",
            classes[0] == classes[1],
        )
        f_cls = classes[0]
        _chk(checks, "case 3 rank", "rank F_i = 3", k0.rank_of(f_cls) == 3)

        cover = [w.xbar(i) - w.x(t) for t in others] + [w.xbar(t) for t in others]
        cover += [w.omega + w.xbar(i), w.zero]
        hull = [(ps[t - 1] - 1) * w.x(t) for t in (1, 2, 3)] + [w.xbar(i) + w.xbar(t) for t in (1, 2, 3)]
        p_sum = sum((k0.reduce_line(e) for e in cover), start=k0.zero)
        i_sum = sum((k0.reduce_line(e) for e in hull), start=k0.zero)
        _chk(
            checks,
            "cover rank",
            "the six cover line bundles have total rank 2*rank(F_i) and drop to rank 3",
            k0.rank_of(p_sum) == 6 and k0.rank_of(p_sum - f_cls) == 3,
        )
        _chk(
            checks,
            "hull rank",
            "the six hull line bundles have total rank 2*rank(F_i) and drop to rank 3",
            k0.rank_of(i_sum) == 6 and k0.rank_of(i_sum - f_cls) == 3,
        )
        for j, k in ((others[0], others[1]), (others[1], others[0])):
            e_mid = ExtBundle(w, w.x(j).interior, w.xbar(i))
            lhs = k0.reduce_line((ps[k - 1] - 2) * w.x(k)) + k0.reduce_line(w.xbar(i) + w.xbar(k))
            _chk(
                checks,
                f"middle-term identity (k={k})",
                f"[O((p_{k}-2)x_{k})] + [O(xbar_{i} + xbar_{k})] = [{e_mid}]",
                lhs == e_mid.k0_class,
            )
        f_label = f"F_{i} (rank 3)"

    return {
        "weights": list(w.weights),
        "branch": i,
        "case": case,
        "F": f_label,
        "checks": [c.to_dict() for c in checks],
        "pass": all(c.passed for c in checks),
    }


# -- the three pipelines -------------------------------------------------------


def _slope_str(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}" if q.denominator != 1 else str(q.numerator)


def replay_244() -> ReplayReport:
    w = WeightTriple(2, 4, 4)
    k0 = k0_of(w)
    x1, x2, x3 = w.x(1), w.x(2), w.x(3)
    checks: list[Check] = []
    steps: list[ExchangeStep] = []
    notes: list[str] = []

    verdict, why = corner_exchange_verdict(w)
    _chk(
        checks,
        "shifted-corner start",
        "replacing the minimal-slope summand keeps a tilting object",
        verdict is Verdict.TILTING,
        why,
    )

    e_x3 = ExtBundle(w, (0, 0, 1), w.zero)
    e_x2 = ExtBundle(w, (0, 1, 0), w.zero)
    e_x2x3 = ExtBundle(w, (0, 1, 1), w.zero)

    # u1: twist identity for the reflected corner bundle
    u1_in = ExtBundle(w, (0, 2, 0), x3)
    u1_rule = auslander(w, x1 - x2 + x3)
    s1 = ExchangeStep(1, "E<0,2,0>", str(canonical_form(u1_in)))
    _chk(
        s1.checks,
        "u1 twist identity",
        "E<0,2,0>(x3) = E(x1 - x2 + x3)",
        eq_ext(u1_in, u1_rule),
    )
    steps.append(s1)

    # u2: mirror twist identity
    u2_in = ExtBundle(w, (0, 0, 2), x2)
    u2_rule = auslander(w, x1 + x2 - x3)
    s2 = ExchangeStep(2, "E<0,0,2>", str(canonical_form(u2_in)))
    _chk(
        s2.checks,
        "u2 twist identity",
        "E<0,0,2>(x2) = E(x1 + x2 - x3)",
        eq_ext(u2_in, u2_rule),
    )
    steps.append(s2)

    # u3: rank-three companion of the corner, two defining sequences
    e_star = e_x3.k0_class + k0.reduce_line(x2)
    s3 = ExchangeStep(3, "E<0,0,0>", "E*")
    _record(s3.sequences, e_x3.k0_class, str(e_x3), e_star, "E*", k0.reduce_line(x2), f"O({x2})")
    cross = k0.reduce_line(w.zero) + e_x2x3.k0_class
    _chk(
        s3.checks,
        "u3 cross identity",
        "[E*] = [O] + [E<0,1,1>] (the two defining sequences agree)",
        e_star == cross,
    )
    _chk(s3.checks, "u3 rank", "rank E* = 3", k0.rank_of(e_star) == 3)
    steps.append(s3)

    # u4: companion of the opposite corner
    q4 = 2 * x2 + 2 * x3 - x1
    c4 = e_x2x3.k0_class + k0.reduce_line(q4)
    s4 = ExchangeStep(4, "E<0,2,2>", "E<0,2,2>*")
    _record(s4.sequences, e_x2x3.k0_class, str(e_x2x3), c4, "E<0,2,2>*", k0.reduce_line(q4), f"O({q4})")
    _chk(s4.checks, "u4 rank", "rank E<0,2,2>* = 3", k0.rank_of(c4) == 3)
    steps.append(s4)

    # u5: the exchange partner of the centre is the Auslander twist E(-w)
    u5_in = auslander(w, -w.omega)
    s5 = ExchangeStep(5, "E<0,1,1>", str(canonical_form(u5_in)))
    _chk(
        s5.checks,
        "u5 kernel line",
        "[E*] - [E<0,1,1>] = [O], so the epimorphism onto the centre has kernel O",
        e_star - e_x2x3.k0_class == k0.reduce_line(w.zero),
    )
    _chk(
        s5.checks,
        "u5 determinant balance",
        "det E* = det E<0,1,1>, forcing the kernel twist to be 0",
        k0.det_of(e_star) == e_x2x3.det,
    )
    steps.append(s5)

    seq = DOCUMENTED_SEQUENCES["244"]
    final_q = apply_sequence(fixture("cuboid_cluster_244"), seq)
    witness = is_isomorphic(final_q, fixture("target_tubular_244"))

    mu_star = Fraction(k0.deg_of(e_star), 3)
    _chk(checks, "slope of E*", "mu(E*) = 2/3", mu_star == Fraction(2, 3))

    slopes = {
        "E*": _slope_str(mu_star),
        "E<0,1,0>": _slope_str(slope(e_x2)),
        "E<0,0,1>": _slope_str(slope(e_x3)),
        "E(-w)": _slope_str(slope(u5_in)),
        "E(x1-x2+x3)": _slope_str(slope(u1_rule)),
        "E(x1+x2-x3)": _slope_str(slope(u2_rule)),
        "E<0,2,1>": _slope_str(slope(ExtBundle(w, (0, 2, 1), w.zero))),
        "E<0,1,2>": _slope_str(slope(ExtBundle(w, (0, 1, 2), w.zero))),
        "E<0,2,2>*": _slope_str(Fraction(k0.deg_of(c4), 3)),
    }
    shifted = [mu_star, slope(e_x2), slope(e_x3), slope(u5_in)]
    unshifted = [
        slope(u1_rule),
        slope(u2_rule),
        slope(ExtBundle(w, (0, 2, 1), w.zero)),
        slope(ExtBundle(w, (0, 1, 2), w.zero)),
        Fraction(k0.deg_of(c4), 3),
    ]
    _chk(
        checks,
        "slope window",
        "summands shifted up start at slope <= 2/3; the others lie strictly above 2/3",
        max(shifted) == Fraction(2, 3) and min(unshifted) > Fraction(2, 3),
    )
    notes.append(
        "the four summands listed first in the final object are carried by the"
        " inverse translation composed with the suspension; their reported"
        " slopes are the pre-shift values"
    )
    notes.append(BRIDGE_NOTE)

    initial = {v: fixture("cuboid_cluster_244").label(v) for v in fixture("cuboid_cluster_244").ids}
    final = {v: fixture("target_tubular_244").label(v) for v in fixture("target_tubular_244").ids}
    return ReplayReport(
        weight_type="244",
        start_fixture="cuboid_cluster_244",
        target_fixture="target_tubular_244",
        sequence=list(seq),
        initial_objects=initial,
        final_objects=final,
        steps=steps,
        checks=checks,
        quiver_isomorphic=witness is not None,
        iso_witness=witness,
        slopes=slopes,
        notes=notes,
    )


def replay_236() -> ReplayReport:
    w = WeightTriple(2, 3, 6)
    k0 = k0_of(w)
    x1, x2, x3 = w.x(1), w.x(2), w.x(3)
    checks: list[Check] = []
    steps: list[ExchangeStep] = []
    notes: list[str] = []

    verdict, why = corner_exchange_verdict(w)
    _chk(
        checks,
        "shifted-corner start",
        "replacing the minimal-slope summand keeps a tilting object",
        verdict is Verdict.TILTING,
        why,
    )

    # The four defining sequences of the statement, recorded at class level.
    e_x3 = ExtBundle(w, (0, 0, 1), w.zero)
    star = e_x3.k0_class + k0.reduce_line(x2 + 2 * x3 - x1)
    s_star = ExchangeStep(4, "E<0,1,2>", "E<0,1,2>*")
    _record(
        s_star.sequences,
        e_x3.k0_class,
        str(e_x3),
        star,
        "E<0,1,2>*",
        k0.reduce_line(x2 + 2 * x3 - x1),
        f"O({x2 + 2 * x3 - x1})",
    )
    _chk(s_star.checks, "rank", "rank E<0,1,2>* = 3", k0.rank_of(star) == 3)
    steps.append(s_star)

    e23w = ExtBundle(w, (0, 0, 2), w.omega)
    dstar = e23w.k0_class + k0.reduce_line(w.omega + x2)
    s_dstar = ExchangeStep(1, "E<0,0,4>", "E<0,0,4>**")
    _record(
        s_dstar.sequences,
        e23w.k0_class,
        str(e23w),
        dstar,
        "E<0,0,4>**",
        k0.reduce_line(w.omega + x2),
        f"O({w.omega + x2})",
    )
    _chk(s_dstar.checks, "rank", "rank E<0,0,4>** = 3", k0.rank_of(dstar) == 3)
    steps.append(s_dstar)

    e23x1 = ExtBundle(w, (0, 0, 2), x1)
    g_cls = e23x1.k0_class + k0.reduce_line(x1 + x2)
    s_g = ExchangeStep(0, "-", "G")
    _record(
        s_g.sequences,
        e23x1.k0_class,
        str(e23x1),
        g_cls,
        "G",
        k0.reduce_line(x1 + x2),
        f"O({x1 + x2})",
    )
    _chk(s_g.checks, "rank", "rank G = 3", k0.rank_of(g_cls) == 3)
    steps.append(s_g)

    e4x2 = ExtBundle(w, (0, 0, 4), x2)
    h_cls = e4x2.k0_class + g_cls - k0.reduce_line(x1 + x2 + x3)
    s_h = ExchangeStep(6, "E<0,1,3>", "tau(H)[-1]")
    _record(
        s_h.sequences,
        e4x2.k0_class,
        str(e4x2),
        h_cls + k0.reduce_line(x1 + x2 + x3),
        f"H + O({x1 + x2 + x3})",
        g_cls,
        "G",
    )
    _chk(s_h.checks, "rank", "rank H = 4", k0.rank_of(h_cls) == 4)
    steps.append(s_h)

    seq = DOCUMENTED_SEQUENCES["236"]
    final_q = apply_sequence(fixture("cuboid_cluster_236"), seq)
    witness = is_isomorphic(final_q, fixture("target_tubular_236"))

    mu = {
        "E<0,0,3>": slope(ExtBundle(w, (0, 0, 3), w.zero)),
        "E(3x3)": slope(auslander(w, 3 * x3)),
        "E(2x2-2x3)": slope(auslander(w, 2 * x2 - 2 * x3)),
        "E<0,0,4>**": Fraction(k0.deg_of(dstar), 3),
        "E<0,1,1>": slope(ExtBundle(w, (0, 1, 1), w.zero)),
        "E<0,1,0>(x3)": slope(ExtBundle(w, (0, 1, 0), x3)),
        "E[1]": slope(suspend(auslander(w))),
        "E<0,0,1>[1]": slope(suspend(e_x3)),
        "E<0,1,2>*": Fraction(k0.deg_of(star), 3),
        "H": Fraction(k0.deg_of(h_cls), 4),
        "G": Fraction(k0.deg_of(g_cls), 3),
    }
    slopes = {label: _slope_str(q) for label, q in mu.items()}
    _chk(
        checks,
        "suspended corner slope",
        "mu(E[1]) = delta(c)/2",
        mu["E[1]"] == Fraction(w.c.delta(), 2),
    )
    summand_mus = [
        mu["E<0,0,3>"], mu["E(3x3)"], mu["E(2x2-2x3)"], mu["E<0,0,4>**"],
        mu["E<0,1,1>"], mu["E<0,1,0>(x3)"], mu["E[1]"], mu["E<0,0,1>[1]"],
    ]
    _chk(
        checks,
        "slope window",
        "computable summand slopes lie in (2/3, 11/3]: strictly above mu(E<0,1,2>*)"
        " and at most the window top",
        min(summand_mus) > Fraction(2, 3) and max(summand_mus) <= Fraction(11, 3),
        f"mu(E<0,1,2>*) = {_slope_str(mu['E<0,1,2>*'])}",
    )
    notes.append(
        "the per-step object correspondence is taken from the statement; the"
        " mutation-by-mutation object bookkeeping is not documented for this"
        " weight type, so only the four defining sequences and the quiver"
        " computation are verified"
    )
    notes.append(
        "slopes of the translated summands built from H and E<0,1,2>* are not"
        " computable from the recorded classes (no hull data for rank >= 3"
        " objects); they are reported by their pre-shift values"
    )
    notes.append(BRIDGE_NOTE)

    initial = {v: fixture("cuboid_cluster_236").label(v) for v in fixture("cuboid_cluster_236").ids}
    final = {v: fixture("target_tubular_236").label(v) for v in fixture("target_tubular_236").ids}
    return ReplayReport(
        weight_type="236",
        start_fixture="cuboid_cluster_236",
        target_fixture="target_tubular_236",
        sequence=list(seq),
        initial_objects=initial,
        final_objects=final,
        steps=steps,
        checks=checks,
        quiver_isomorphic=witness is not None,
        iso_witness=witness,
        slopes=slopes,
        notes=notes,
    )


def replay_333() -> ReplayReport:
    w = WeightTriple(3, 3, 3)
    k0 = k0_of(w)
    checks: list[Check] = []
    steps: list[ExchangeStep] = []
    notes: list[str] = []
    sigma = w.x(1) + w.x(2) + w.x(3)

    verdict, why = corner_exchange_verdict(w)
    _chk(
        checks,
        "corner obstruction",
        "the shifted-corner modification fails to be tilting, witnessed at D(E, E)",
        verdict is Verdict.NOT_TILTING and "D(E, E)" in why,
        why,
    )

    susp = suspend(ExtBundle(w, (1, 0, 1), w.zero))
    _chk(
        checks,
        "suspension identity",
        "E<1,0,1>[1] = E<1,1,1>(x2)",
        eq_ext(susp, ExtBundle(w, (1, 1, 1), w.x(2))),
    )
    _chk(
        checks,
        "corner suspension",
        "E[1] = E<1,1,1>(-w)",
        eq_ext(suspend(auslander(w)), ExtBundle(w, (1, 1, 1), -w.omega)),
    )

    # F_i and the G-shift class, for each branch
    f_cls: dict[int, K0Class] = {}
    g_shift: dict[int, K0Class] = {}
    for i in (1, 2, 3):
        j, k = [t for t in (1, 2, 3) if t != i]
        fi = corestriction_companion(sigma, j, k)
        f_cls[i] = fi.k0_class
        expected = suspend(ExtBundle(w, w.x(i).interior, w.zero)).k0_class + k0.reduce_line(sigma)
        pair = _pair_interior(i)
        step = ExchangeStep(i, f"E<{pair[0]},{pair[1]},{pair[2]}>", f"F{i}[-1]")
        _record(
            step.sequences,
            suspend(ExtBundle(w, w.x(i).interior, w.zero)).k0_class,
            f"E<{w.x(i).interior[0]},{w.x(i).interior[1]},{w.x(i).interior[2]}>[1]",
            f_cls[i],
            f"F{i}",
            k0.reduce_line(sigma),
            f"O({sigma})",
        )
        _chk(
            step.checks,
            f"F{i} class",
            f"[F{i}] = [E<x{i}>[1]] + [O(x1+x2+x3)]",
            f_cls[i] == expected,
        )
        _chk(step.checks, f"F{i} rank", f"rank F{i} = 3", k0.rank_of(f_cls[i]) == 3)
        g_shift[i] = f_cls[i] + ExtBundle(w, (1, 1, 1), w.x(i)).k0_class
        steps.append(step)

    _chk(
        checks,
        "branch independence",
        "[F_i] + [E<1,1,1>(x_i)] is the same class for i = 1, 2, 3 (it is [G[1]])",
        g_shift[1] == g_shift[2] and g_shift[2] == g_shift[3],
    )

    # the explicit cokernel computation behind the G identification
    coker_psi = f_cls[2] - k0.reduce_line(2 * w.omega + w.x(2))
    det_coker = k0.det_of(coker_psi)
    _chk(
        checks,
        "cokernel determinant",
        "det of [F2] - [O(2w + x2)] is 2x1 + 2x2 + 2x3",
        det_coker == 2 * sigma,
        str(det_coker),
    )
    _chk(
        checks,
        "cokernel splitting",
        "[F2] - [O(2w + x2)] = [O(2x1 + x2)] + [O(x2 + 2x3)]",
        coker_psi
        == k0.reduce_line(2 * w.x(1) + w.x(2)) + k0.reduce_line(w.x(2) + 2 * w.x(3)),
    )

    seq = DOCUMENTED_SEQUENCES["333"]
    final_q = apply_sequence(fixture("tbar_cluster_333"), seq)
    witness = is_isomorphic(final_q, fixture("target_tubular_333"))

    slopes = {
        "E<0,0,0>": _slope_str(slope(auslander(w))),
        "E<1,0,0>": _slope_str(slope(ExtBundle(w, (1, 0, 0), w.zero))),
        "E<0,1,0>": _slope_str(slope(ExtBundle(w, (0, 1, 0), w.zero))),
        "E<0,0,1>": _slope_str(slope(ExtBundle(w, (0, 0, 1), w.zero))),
        "F1": _slope_str(Fraction(k0.deg_of(f_cls[1]), 3)),
        "F2": _slope_str(Fraction(k0.deg_of(f_cls[2]), 3)),
        "F3": _slope_str(Fraction(k0.deg_of(f_cls[3]), 3)),
        "G[1]": _slope_str(Fraction(k0.deg_of(g_shift[1]), k0.rank_of(g_shift[1]))),
    }
    notes.append(
        "G itself is carried as the desuspension of the recorded class [G[1]];"
        " no hull data exists for it, so its slope is reported through [G[1]]"
    )
    notes.append(BRIDGE_NOTE)

    initial = {v: fixture("tbar_cluster_333").label(v) for v in fixture("tbar_cluster_333").ids}
    final = {v: fixture("target_tubular_333").label(v) for v in fixture("target_tubular_333").ids}
    return ReplayReport(
        weight_type="333",
        start_fixture="tbar_cluster_333",
        target_fixture="target_tubular_333",
        sequence=list(seq),
        initial_objects=initial,
        final_objects=final,
        steps=steps,
        checks=checks,
        quiver_isomorphic=witness is not None,
        iso_witness=witness,
        slopes=slopes,
        notes=notes,
    )


def _pair_interior(i: int) -> tuple[int, int, int]:
    """Interior vector of the two-generator bundle exchanged at branch i."""
    v = [1, 1, 1]
    v[i - 1] = 0
    return (v[0], v[1], v[2])


REPLAYS = {"244": replay_244, "236": replay_236, "333": replay_333}


def run_replay(weight_type: str) -> ReplayReport:
    if weight_type not in REPLAYS:
        raise KeyError(f"unknown replay {weight_type!r}; choose from {sorted(REPLAYS)}")
    return REPLAYS[weight_type]()
