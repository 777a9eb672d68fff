"""Socle-driven predictions of resolution tails and their verification.

Everything here is report-building: inputs are an ideal ``I`` of ``P`` (a
grade-three Gorenstein ideal for the predictions to apply) and a form
``f``; ``J`` is the image of ``I`` in ``R = P/(f)``.
"""
from __future__ import annotations

import json
from collections import Counter
from dataclasses import asdict, dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from .artinian import GorensteinData, SocleProfile, a_invariant, back_twist, socle_profile
from .errors import FDegreeNotThree, SocleNotPure
from .groebner import FreeModuleElement, PrincipalReducer, _kernel, colon, minimal_generators
from .matrix import GradedMatrix
from .poly import Polynomial
from .resolution import (BettiTable, ResolutionPrefix, minimize_complex, resolve_over_R,
                         syzygies_over_R)


def _sorted(xs) -> List[int]:
    return sorted(int(x) for x in xs)


# ---------------------------------------------------------------------------
# Hypotheses
# ---------------------------------------------------------------------------


@dataclass
class HypothesisVerdict:
    a_holds: bool
    b_holds: bool
    c_holds: bool
    mu_I: int
    mu_J: int
    rank_F2: int
    socle_dim: int
    b: int
    a: int
    mu_Jq: Optional[int] = None
    offending_pair: Optional[Tuple[int, int]] = None

    @property
    def all_hold(self) -> bool:
        return self.a_holds and self.b_holds and self.c_holds

    def to_dict(self) -> dict:
        d = asdict(self)
        d["offending_pair"] = list(self.offending_pair) if self.offending_pair else None
        return d

    @classmethod
    def from_dict(cls, d) -> "HypothesisVerdict":
        d = dict(d)
        if d.get("offending_pair") is not None:
            d["offending_pair"] = tuple(d["offending_pair"])
        return cls(**d)


def mu_over_R(f: Polynomial, gens: Sequence[Polynomial]) -> int:
    """Minimal number of generators of the image of ``gens`` in ``P/(f)``."""
    gens = [g for g in gens if g]
    if not gens:
        return 0
    return len(minimal_generators(gens, modulus=f))


def sum_avoiding_pair(socle: SocleProfile, target: int) -> Optional[Tuple[int, int]]:
    """First pair of socle degrees (an index may repeat) summing to ``target``."""
    degs = list(socle.degrees)
    for i, s in enumerate(degs):
        for t in degs[i:]:
            if s + t == target:
                return (s, t)
    return None


def check_hypotheses(f: Polynomial, I: Sequence[Polynomial], also_q: Optional[int] = None, *,
                     gorenstein: Optional[GorensteinData] = None,
                     resolution: Optional[ResolutionPrefix] = None,
                     socle: Optional[SocleProfile] = None) -> HypothesisVerdict:
    """Evaluate the three tail hypotheses for ``I`` and ``f``.

    Precomputed pieces may be passed in to avoid recomputation; ``resolution``
    must reach position 2.
    """
    gd = gorenstein or back_twist(I)
    a = a_invariant(f)
    res = resolution or resolve_over_R(f, I, max_position=2)
    soc = socle or socle_profile(f, I)
    mu_J = len(res.twists(1))
    mu_Jq = None
    a_ok = gd.mu == mu_J
    if also_q is not None:
        mu_Jq = mu_over_R(f, [g.frobenius(also_q) for g in I])
        a_ok = a_ok and mu_Jq == mu_J
    rank2 = len(res.twists(2))
    pair = sum_avoiding_pair(soc, gd.b + 2 * a)
    return HypothesisVerdict(a_ok, rank2 == soc.s, pair is None, gd.mu, mu_J, rank2, soc.s,
                             gd.b, a, mu_Jq, pair)


# ---------------------------------------------------------------------------
# Tail prediction
# ---------------------------------------------------------------------------


@dataclass
class TailPrediction:
    F2_twists: List[int]
    F3_twists: List[int]
    period_shift: int

    def twists(self, k: int) -> List[int]:
        """Predicted twists at homological position ``k >= 2``."""
        if k < 2:
            raise ValueError("predictions start at position 2")
        base = self.F2_twists if k % 2 == 0 else self.F3_twists
        return [t + self.period_shift * ((k - 2) // 2) for t in base]

    def is_empty(self) -> bool:
        return not self.F2_twists

    def to_dict(self):
        return asdict(self)


def predict_tail(socle: SocleProfile, b: int, a: int, f_degree: int) -> TailPrediction:
    sig = socle.as_list()
    return TailPrediction(_sorted(b + a - s for s in sig), _sorted(s + 3 for s in sig), f_degree)


# ---------------------------------------------------------------------------
# Full report
# ---------------------------------------------------------------------------


@dataclass
class TheoremReport:
    verdict: HypothesisVerdict
    prediction: TailPrediction
    computed: BettiTable
    socle: SocleProfile
    positions: List[int]
    match: bool
    mismatches: Dict[int, dict] = field(default_factory=dict)
    shift_check: Optional[dict] = None
    classifier: Optional[dict] = None

    @property
    def asserted(self) -> bool:
        return self.verdict.all_hold

    @property
    def passed(self) -> bool:
        """True unless the hypotheses hold and the prediction disagrees."""
        return self.match or not self.asserted

    def to_dict(self) -> dict:
        return {
            "verdict": self.verdict.to_dict(),
            "prediction": self.prediction.to_dict(),
            "computed": self.computed.to_dict(),
            "socle": self.socle.to_dict(),
            "positions": list(self.positions),
            "match": self.match,
            "asserted": self.asserted,
            "mismatches": {str(k): v for k, v in self.mismatches.items()},
            "shift_check": self.shift_check,
            "classifier": self.classifier,
        }

    @classmethod
    def from_dict(cls, d) -> "TheoremReport":
        return cls(HypothesisVerdict.from_dict(d["verdict"]), TailPrediction(**d["prediction"]),
                   BettiTable.from_dict(d["computed"]), SocleProfile.from_dict(d["socle"]),
                   list(d["positions"]), d["match"],
                   {int(k): v for k, v in d.get("mismatches", {}).items()},
                   d.get("shift_check"), d.get("classifier"))

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "TheoremReport":
        return cls.from_dict(json.loads(text))

    def format_text(self) -> str:
        v = self.verdict
        lines = [
            f"b={v.b} a={v.a} socle: {self.socle.format() or '-'}",
            f"  (a) mu(I)={v.mu_I} mu(J)={v.mu_J}"
            + (f" mu(J^[q])={v.mu_Jq}" if v.mu_Jq is not None else "")
            + f" -> {'holds' if v.a_holds else 'fails'}",
            f"  (b) rank F2={v.rank_F2} dim soc={v.socle_dim} -> {'holds' if v.b_holds else 'fails'}",
            f"  (c) target {v.b + 2 * v.a}"
            + (f", offending pair {v.offending_pair}" if v.offending_pair else "")
            + f" -> {'holds' if v.c_holds else 'fails'}",
        ]
        for k in self.positions:
            pred = " ".join(f"{t}:{m}" for t, m in sorted(Counter(self.prediction.twists(k)).items()))
            lines.append(f"  pos {k}: predicted {pred or '-'} computed {self.computed.format_position(k) or '-'}")
        status = "match" if self.match else "mismatch"
        lines.append(f"  tail {status}" + ("" if self.asserted else " (not asserted)"))
        return "\n".join(lines)


def compare_tail(prediction: TailPrediction, computed: BettiTable, positions: Sequence[int]):
    mismatches = {}
    for k in positions:
        want = _sorted(prediction.twists(k))
        got = computed.twists(k)
        if want != got:
            mismatches[k] = {"predicted": want, "computed": got}
    return not mismatches, mismatches


def verify_theorem(f: Polynomial, I: Sequence[Polynomial], max_position: int = 4, *,
                   resolution: Optional[ResolutionPrefix] = None,
                   socle: Optional[SocleProfile] = None) -> TheoremReport:
    gd = back_twist(I)
    res = resolution or resolve_over_R(f, I, max_position=max_position)
    soc = socle or socle_profile(f, I)
    verdict = check_hypotheses(f, I, gorenstein=gd, resolution=res, socle=soc)
    pred = predict_tail(soc, gd.b, verdict.a, f.degree)
    positions = list(range(2, max_position + 1))
    match, mismatches = compare_tail(pred, res.betti, positions)
    return TheoremReport(verdict, pred, res.betti, soc, positions, match, mismatches)


# ---------------------------------------------------------------------------
# Frobenius shift
# ---------------------------------------------------------------------------

UNSATISFIABLE = "UNSATISFIABLE"


@dataclass
class ShiftReport:
    q: int
    b: int
    status: str  # PASS | FAIL | UNSATISFIABLE | NOT_APPLICABLE
    n: Optional[int] = None
    b_q: Optional[int] = None
    b_q_ok: Optional[bool] = None
    socle_shift_ok: Optional[bool] = None
    tail_shift_ok: Optional[bool] = None
    hypotheses_hold: Optional[bool] = None
    positions: List[int] = field(default_factory=list)
    base_socle: Optional[list] = None
    power_socle: Optional[list] = None
    base_tail: Dict[str, list] = field(default_factory=dict)
    power_tail: Dict[str, list] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.status in ("PASS", "NOT_APPLICABLE")

    def to_dict(self):
        return asdict(self)


def common_shift(A: BettiTable, B: BettiTable, positions: Sequence[int]) -> Optional[int]:
    """The single ``n`` with ``B_k = A_k + n`` at every listed position, if any."""
    n = None
    for k in positions:
        a, b = A.twists(k), B.twists(k)
        if len(a) != len(b) or not a:
            return None
        d = b[0] - a[0]
        if [t + d for t in a] != b or (n is not None and d != n):
            return None
        n = d
    return n


def frobenius_shift_check(f: Polynomial, I: Sequence[Polynomial], q: int, max_position: int = 4, *,
                      base: Optional[dict] = None, power: Optional[dict] = None) -> ShiftReport:
    """Compare ``R/J`` with ``R/J^[q]``: socle shift, tail shift and back twist scaling.

    ``base`` and ``power`` may carry precomputed ``gorenstein``, ``resolution``
    and ``socle`` entries for ``I`` and for its bracket power.
    """
    from .frobenius import bracket_power

    base = base or {}
    power = power or {}
    gd = base.get("gorenstein") or back_twist(I)
    if (gd.b * (q - 1)) % 2:
        return ShiftReport(q, gd.b, UNSATISFIABLE)
    n = gd.b * (q - 1) // 2
    Iq = bracket_power(I, q)
    gq = power.get("gorenstein") or back_twist(Iq)
    res = base.get("resolution") or resolve_over_R(f, I, max_position=max_position)
    soc = base.get("socle") or socle_profile(f, I)
    soc_q = power.get("socle") or socle_profile(f, Iq)
    report = ShiftReport(q, gd.b, "FAIL", n=n, b_q=gq.b, b_q_ok=gq.b == q * gd.b,
                         base_socle=soc.to_dict(), power_socle=soc_q.to_dict())
    report.socle_shift_ok = soc_q == soc.shifted(n)
    verdict = check_hypotheses(f, I, also_q=q, gorenstein=gd, resolution=res, socle=soc)
    report.hypotheses_hold = verdict.all_hold
    if not (report.socle_shift_ok and verdict.all_hold):
        report.status = "NOT_APPLICABLE" if report.b_q_ok else "FAIL"
        return report
    res_q = power.get("resolution")
    if res_q is None or res_q.length < min(max_position, res.length):
        res_q = resolve_over_R(f, Iq, max_position=max_position)
    top = min(max_position, res.length, res_q.length)
    positions = list(range(2, top + 1))
    report.positions = positions
    report.base_tail = {str(k): res.twists(k) for k in positions}
    report.power_tail = {str(k): res_q.twists(k) for k in positions}
    report.tail_shift_ok = all(res_q.twists(k) == [t + n for t in res.twists(k)] for k in positions)
    report.status = "PASS" if report.tail_shift_ok and report.b_q_ok else "FAIL"
    return report


# ---------------------------------------------------------------------------
# Pure socle, |f| = 3
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PureSocleShape:
    s: int
    deg_d3: int
    deg_d4: int
    sigma: int

    def as_tuple(self):
        return (self.s, self.deg_d3, self.deg_d4, self.sigma)


def pure_socle_shape(b: int, mu: int) -> PureSocleShape:
    """Socle size, entry degrees of d3/d4 and socle degree for a cubic hypersurface."""
    if b % 2:
        return PureSocleShape(3 * (mu - 1) // 2, 2, 1, (b - 1) // 2)
    return PureSocleShape(3 * (mu - 1), 1, 2, b // 2 - 1)


def check_pure_socle(f: Polynomial, I: Sequence[Polynomial], socle: Optional[SocleProfile] = None,
                   resolution: Optional[ResolutionPrefix] = None) -> dict:
    """Classify and compare with the computed socle and d3/d4 entry degrees."""
    if f.degree != 3:
        raise FDegreeNotThree(f"|f| = {f.degree}")
    soc = socle or socle_profile(f, I)
    if not soc.is_pure():
        raise SocleNotPure(f"socle degrees {soc.format()}")
    gd = back_twist(I)
    shape = pure_socle_shape(gd.b, gd.mu)
    out = {"b": gd.b, "mu": gd.mu, "predicted": list(shape.as_tuple()),
           "socle_dim": soc.s, "sigma": soc.top}
    res = resolution or resolve_over_R(f, I, max_position=4)
    degs = {}
    for k in (3, 4):
        if res.length >= k:
            degs[k] = sorted(res.d(k).entry_degrees())
    out["entry_degrees"] = {str(k): v for k, v in degs.items()}
    out["matches"] = (soc.s == shape.s and soc.top == shape.sigma
                      and degs.get(3) == [shape.deg_d3] and degs.get(4) == [shape.deg_d4])
    return out


# ---------------------------------------------------------------------------
# The colon module (I : f)/I
# ---------------------------------------------------------------------------


@dataclass
class CanonicalGenerators:
    degrees: List[int]
    generators: List[Polynomial]
    degenerate: bool


def canonical_generators(f: Polynomial, I: Sequence[Polynomial]) -> CanonicalGenerators:
    """Minimal generators of ``(I : f)/I``; degenerate when ``f`` lies in ``I``."""
    col = colon(I, f)
    I = [g for g in I if g]
    idx = minimal_generators(col, context=I) if col else []
    chosen = sorted((col[i] for i in idx), key=lambda g: g.degree)
    degenerate = any(g.is_constant() for g in col)
    return CanonicalGenerators([g.degree for g in chosen], chosen, degenerate)


def canonical_generator_degrees(f: Polynomial, I: Sequence[Polynomial]) -> List[int]:
    return canonical_generators(f, I).degrees


def resolve_colon_module(f: Polynomial, I: Sequence[Polynomial], max_position: int) -> ResolutionPrefix:
    """Minimal ``R``-resolution prefix of ``(I : f)/I``, position 0 = generators."""
    cg = canonical_generators(f, I)
    ring = f.ring
    u = cg.generators
    m = len(u)
    if not m:
        return ResolutionPrefix("R", [], f, zero_module=True)
    I = [g for g in I if g]
    reducer = PrincipalReducer(f)
    # relations v with sum v_k u_k in I, read in P^m and then over R
    cols = [[g] for g in u] + [[h] for h in I]
    found = _kernel(ring, cols, [0], [g.degree for g in u] + [h.degree for h in I])
    rel = [comps[:m] for _, comps in found]
    rel = [c for c in rel if any(c)]
    tw = [g.degree for g in u]
    vecs = [FreeModuleElement(c, tw) for c in rel]
    idx = minimal_generators(vecs, modulus=f) if vecs else []
    chosen = [[reducer(x) if x else x for x in rel[i]] for i in idx]
    degs = [vecs[i].degree for i in idx]
    first = GradedMatrix.from_columns(ring, chosen, tw, degs)
    mats = [first]
    while len(mats) < max_position and mats[-1].ncols:
        S = syzygies_over_R(mats[-1], f, reducer)
        if S.ncols == 0:
            break
        mats.append(S)
    return _ModulePrefix("R", minimize_complex(mats, reducer), f, generator_twists=tw)


@dataclass
class _ModulePrefix(ResolutionPrefix):
    generator_twists: List[int] = field(default_factory=list)

    def twists(self, k: int) -> List[int]:
        if k == 0:
            return sorted(self.generator_twists)
        return super().twists(k)


@dataclass
class CanonicalTailReport:
    b: int
    expected_shift: int
    positions: List[int]
    module_tail: Dict[str, list]
    quotient_tail: Dict[str, list]
    computed_shift: Optional[int]
    matches: bool
    generator_degrees: List[int]
    expected_generator_degrees: List[int]

    def to_dict(self):
        return asdict(self)


def colon_tail_compare(f: Polynomial, I: Sequence[Polynomial], depth: int = 1) -> CanonicalTailReport:
    """Compare the tails (positions >= 3) of ``(I : f)/I`` and ``R/J``.

    ``matches`` tests the twists of ``(I : f)/I`` against those of ``R/J``
    raised by ``b - 3``; ``computed_shift`` is the shift actually observed.
    """
    gd = back_twist(I)
    top = 3 + depth
    L = resolve_colon_module(f, I, top)
    F = resolve_over_R(f, I, top)
    soc = socle_profile(f, I)
    positions = list(range(3, top + 1))
    shift = gd.b - 3
    matches = all(L.twists(k) == [t + shift for t in F.twists(k)] for k in positions)
    return CanonicalTailReport(
        gd.b, shift, positions,
        {str(k): L.twists(k) for k in positions},
        {str(k): F.twists(k) for k in positions},
        common_shift(F.betti, L.betti, positions),
        matches,
        L.twists(0),
        _sorted(gd.b - 3 - s for s in soc.as_list()),
    )
