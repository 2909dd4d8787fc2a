"""End-to-end analysis of a symmetric triple and matching against the case lists.

``analyze_triple`` computes everything that does not depend on a case list:
parameters, λ, the quotient identities, 2-arc-transitivity of the quotient
under the induced action and stabilizer fingerprints. ``classify`` then
matches (v, b, r, λ) against the rows for a chosen mode and attaches
case-specific evidence. Group types are only ever reported as "consistent
with" an order/degree/transitivity fingerprint.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import factorial, gcd

from .config import DEFAULT_LIMITS, Limits
from .constructions import gamma2_graph, three_arc_graph, three_arc_orbits, two_paths_of, arcs_of
from .designs import design_from_triple, is_t_design
from .errors import PreconditionViolation, PMismatch, RefinementError
from .graphs import Graph, classify_bipartite, is_s_arc_transitive
from .permgroup import (GeneratedGroup, block_action, enumerate_group, equivariant_bijection,
                        induced_action, restricted_action, stabilizer, transitivity_degree)
from .quotient import (LambdaReport, Parameters, RefinementReport, SymmetricTriple, blocks_refinement,
                       lambda_pairwise, non_incident_blocks, parameters, quotient_graph, validate_partition)
from .tables import feasible_f_rows, is_prime, row_c_matches

MODES = ("theorem1", "p3", "p5")
CASE_TAGS = ("a", "b", "c", "d", "e", "f")

PASS, FAIL, UNDETERMINED = "pass", "fail", "undetermined"


@dataclass
class Evidence:
    name: str
    status: str
    mandatory: bool
    detail: str = ""

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def as_dict(self):
        return {"detail": self.detail, "mandatory": self.mandatory, "name": self.name, "status": self.status}


def _ev(name, ok, mandatory, detail=""):
    status = UNDETERMINED if ok is None else (PASS if ok else FAIL)
    return Evidence(name, status, mandatory, detail)


# Small fingerprint table: (degree, order) -> names, beyond S_n / A_n.
_KNOWN = {
    (6, 60): "PSL(2,5)",
    (6, 120): "PGL(2,5)",
    (7, 168): "PSL(3,2)",
    (8, 168): "PSL(2,7)",
    (8, 56): "AGL(1,8)",
    (8, 1344): "AGL(3,2)",
    (11, 660): "PSL(2,11)",
    (21, 20160): "PSL(3,4)",
    (21, 120960): "PΓL(3,4)",
}


@dataclass
class GroupFingerprint:
    degree: int
    order: int
    transitivity: int
    all_even: bool
    consistent_with: list

    def as_dict(self):
        return {"all_even": self.all_even, "consistent_with": list(self.consistent_with),
                "degree": self.degree, "order": self.order, "transitivity": self.transitivity}


def fingerprint(H: GeneratedGroup) -> GroupFingerprint:
    """Order, transitivity level and parity of an enumerated permutation group."""
    elems, order = enumerate_group(H)
    n = H.degree
    trans = transitivity_degree(H, range(n))
    even = all(g.is_even() for g in elems)
    names = []
    if order == factorial(n):
        names.append(f"S{n}")
    elif even and 2 * order == factorial(n) and n >= 3:
        names.append(f"A{n}")
    if trans >= 2 and (n, order) in _KNOWN:
        names.append(_KNOWN[(n, order)])
    return GroupFingerprint(n, order, trans, even, names)


@dataclass
class Fingerprints:
    group_order: int
    block_stabilizer_order: int
    on_block: GroupFingerprint
    on_neighbours: GroupFingerprint | None
    kernel_order: int
    quotient_group_order: int
    equivariant_bijection: bool | None

    def as_dict(self):
        return {
            "block_stabilizer_order": self.block_stabilizer_order,
            "equivariant_bijection": self.equivariant_bijection,
            "group_order": self.group_order,
            "kernel_order": self.kernel_order,
            "on_block": self.on_block.as_dict(),
            "on_neighbours": self.on_neighbours.as_dict() if self.on_neighbours else None,
            "quotient_group_order": self.quotient_group_order,
        }


@dataclass
class ClassificationReport:
    p: int
    parameters: Parameters
    lambda_report: LambdaReport | None
    quotient: Graph
    quotient_2at: bool
    fingerprints: Fingerprints
    preconditions: list
    refinement: RefinementReport | None = None
    refinement_error: str | None = None
    mode: str | None = None
    matched_case: str = "none"
    matches: list = field(default_factory=list)
    evidence: list = field(default_factory=list)
    findings: list = field(default_factory=list)
    triple: SymmetricTriple | None = field(default=None, repr=False, compare=False)

    @property
    def preconditions_hold(self) -> bool:
        return all(e.passed for e in self.preconditions)

    @property
    def lam(self) -> int | None:
        lr = self.lambda_report
        return lr.value if lr is not None and lr.constant else None

    def identities(self) -> dict:
        P = self.parameters
        out = {"vr_eq_bk": {"holds": P.v * P.r == P.b * P.k, "lhs": P.v * P.r, "rhs": P.b * P.k},
               "m_divides_gcd_rb": gcd(P.r, P.b) % P.m == 0}
        lr = self.lambda_report
        if lr is not None:
            out["eq2"] = lr.eq2.as_dict() if lr.eq2 else None
            out["eq3"] = lr.eq3.as_dict() if lr.eq3 else None
            out["fisher_b_le_v"] = lr.fisher
        return out

    def exit_code(self) -> int:
        if not self.preconditions_hold:
            return 4
        if self.mode is not None and self.matched_case == "none":
            return 3
        return 0

    def as_dict(self) -> dict:
        q = self.quotient
        return {
            "case": self.matched_case,
            "evidence": [e.as_dict() for e in self.evidence],
            "findings": list(self.findings),
            "fingerprints": self.fingerprints.as_dict(),
            "identities": self.identities(),
            "lambda": self.lambda_report.as_dict() if self.lambda_report else None,
            "matches": list(self.matches),
            "mode": self.mode,
            "p": self.p,
            "parameters": self.parameters.as_dict(),
            "preconditions": [e.as_dict() for e in self.preconditions],
            "quotient": {"connected": q.is_connected(), "edges": len(q.edges), "vertices": q.vertex_count,
                         "two_arc_transitive": self.quotient_2at},
            "refinement": self.refinement.as_dict() if self.refinement else None,
            "refinement_error": self.refinement_error,
        }

    def summary(self) -> str:
        P = self.parameters
        lam = self.lam
        lines = [f"(v,k,r,b,m) = ({P.v},{P.k},{P.r},{P.b},{P.m}), p = {self.p}, "
                 f"λ = {lam if lam is not None else 'non-constant'}",
                 f"quotient: {self.quotient.vertex_count} vertices, 2-arc-transitive = {self.quotient_2at}",
                 f"mode {self.mode or '-'}: case {self.matched_case}"]
        for e in self.preconditions + self.evidence:
            flag = "M" if e.mandatory else " "
            lines.append(f"  [{e.status:^12}] {flag} {e.name}: {e.detail}")
        lines.extend(f"  finding: {f}" for f in self.findings)
        return "\n".join(lines)


def _fingerprints(t: SymmetricTriple, limits: Limits) -> Fingerprints:
    G = t.group
    _, order = enumerate_group(G, limits.enumeration_bound)
    B = 0
    GB = stabilizer(G, t.partition[B], "setwise", limits.enumeration_bound)
    on_block_act = restricted_action(GB, t.partition[B])
    on_block = fingerprint(on_block_act.image_group(limits.enumeration_bound))
    nbrs = t.block_neighbours[B]
    on_nbrs, bij = None, None
    if nbrs:
        nb_act = block_action(GB, t.partition, nbrs)
        on_nbrs = fingerprint(nb_act.image_group(limits.enumeration_bound))
        if len(nbrs) == len(t.partition[B]):
            bij = equivariant_bijection(GB, on_block_act, nb_act) is not None
    table, kernel = induced_action(G, t.partition, limits.enumeration_bound)
    return Fingerprints(order, GB.order, on_block, on_nbrs, kernel.order,
                        order // kernel.order, bij)


def analyze_triple(t: SymmetricTriple, p: int | None = None, limits: Limits = DEFAULT_LIMITS) -> ClassificationReport:
    """Case-agnostic analysis; ``p`` defaults to v - k and must equal it if given."""
    rep = validate_partition(t)
    if not rep.valid:
        f = rep.failures[0]
        raise PreconditionViolation(f"invalid triple ({f['check']}): {f['detail']}")
    P = parameters(t)
    if p is None:
        p = P.p
    elif p != P.p:
        raise PMismatch(f"p={p} but v-k={P.p}")
    q, table = quotient_graph(t, check=False)
    pre = [
        _ev("k_at_least_1", P.k >= 1, True, f"k = {P.k}"),
        _ev("p_odd_prime", p >= 3 and is_prime(p), True, f"p = v - k = {p}"),
        _ev("quotient_connected", q.is_connected(), True, f"{len(q.components())} component(s)"),
        _ev("valency_at_least_2", P.b >= 2, True, f"b = {P.b}"),
    ]
    enumerate_group(t.group, limits.enumeration_bound)
    induced = table.image_group(limits.enumeration_bound)
    q2at = P.b >= 2 and is_s_arc_transitive(q, induced, 2)
    lam = lambda_pairwise(t, p, P) if P.b >= 2 else None
    refinement, ref_error = None, None
    if lam is not None and lam.constant and lam.lambda_bar == 0 and P.k < P.v:
        try:
            refinement = blocks_refinement(t, P)
        except RefinementError as exc:
            ref_error = f"{type(exc).__name__}: {exc}"
    return ClassificationReport(p, P, lam, q, q2at, _fingerprints(t, limits), pre,
                                refinement, ref_error, triple=t)


# ---------------------------------------------------------------- case rows

def _rows(mode: str, p: int) -> list[tuple[str, tuple, str]]:
    """Explicit (tag, (v,b,r,λ), label) rows plus predicate rows for (e)."""
    if mode == "p3":
        return [("a", (4, 4, 1, 0), ""), ("b", (6, 2, 1, 0), ""), ("c", (7, 7, 4, 2), ""),
                ("e", (6, 4, 2, 1), "")]
    if mode == "p5":
        return [("a", (6, 6, 1, 0), ""), ("b", (10, 2, 1, 0), ""), ("c", (21, 21, 16, 12), ""),
                ("d", (11, 11, 6, 3), ""), ("f", (10, 6, 3, 2), "f1"), ("f", (15, 6, 4, 6), "f2"),
                ("f", (20, 16, 12, 11), "f3")]
    rows = [("a", (p + 1, p + 1, 1, 0), ""), ("b", (2 * p, 2, 1, 0), "")]
    rows += [("c", params, f"q={q}, n={n}") for q, n, params in row_c_matches(p)]
    if p == 5:
        rows.append(("d", (11, 11, 6, 3), ""))
    rows += [("f", row.vbrl, f"a={row.a}, s={row.s}") for row in feasible_f_rows(p)]
    return rows


def _pa_family(p: int, vbrl) -> int | None:
    """a >= 3 with (v,b,r,λ) = (pa, a, a-1, p(a-2)), else None."""
    v, b, r, lam = vbrl
    a = b
    if a >= 3 and (v, r, lam) == (p * a, a - 1, p * (a - 2)):
        return a
    return None


def parameter_matches(mode: str, p: int, vbrl) -> list[tuple[str, str]]:
    """All (tag, label) whose parameter row equals ``vbrl``."""
    out = [(tag, label) for tag, row, label in _rows(mode, p) if row == tuple(vbrl)]
    a = _pa_family(p, vbrl)
    if a is not None:
        out.append(("d" if mode == "p3" else "e", f"a={a}"))
    return sorted(out)


# ------------------------------------------------------------ case evidence

def _order_in(fp, degree, orders, min_trans=2):
    return fp is not None and fp.degree == degree and fp.order in orders and fp.transitivity >= min_trans


def _fp_detail(fp):
    if fp is None:
        return "no neighbouring blocks"
    names = ", consistent with " + "/".join(fp.consistent_with) if fp.consistent_with else ""
    return f"degree {fp.degree}, order {fp.order}, {fp.transitivity}-transitive{names}"


def _one_regular(t):
    return _ev("gamma_one_regular", t.graph.is_regular() and t.graph.degree(0) == 1, False,
               f"valency {t.graph.degree(0)}")


def _bijection(report):
    # absence with ψ = identity is not a disproof, so it stays undetermined
    found = report.fingerprints.equivariant_bijection
    return _ev("equivariant_bijection_block_to_neighbours", True if found else None, False,
               "G_B-equivariant bijection B -> Γ_𝓑(B) with identity group map"
               + ("" if found else ": none found, other group isomorphisms not searched"))


def _cycle_case(report, p, mandatory_dihedral):
    t = report.triple
    q = report.quotient
    n = t.graph.vertex_count // (2 * p)
    ev = [_ev("quotient_is_cycle", q.is_connected() and q.is_regular() and q.degree(0) == 2
              and q.vertex_count == n, True, f"C_{q.vertex_count}, n = |V|/{2 * p} = {n}")]
    ev.append(_ev("induced_group_order_2n", report.fingerprints.quotient_group_order == 2 * n,
                  mandatory_dihedral, f"|G/G_(𝓑)| = {report.fingerprints.quotient_group_order}, 2n = {2 * n}"))
    patterns, covered = set(), []
    for B, nbrs in enumerate(t.block_neighbours):
        for C in nbrs:
            if B < C:
                left, right = t.trace(B, C), t.trace(C, B)
                patterns.add(str(classify_bipartite(t.graph, left, right)))
                covered += list(left) + list(right)
    disjoint = len(covered) == len(set(covered)) == t.graph.vertex_count
    pattern = patterns.pop() if len(patterns) == 1 else None
    ev.append(_ev("gamma_is_n_copies_of_bipartite_piece", disjoint and pattern is not None, False,
                  f"{n}·({pattern})" if pattern else f"patterns {sorted(patterns)}"))
    return ev, pattern


def _gamma2_match(report) -> tuple[bool | None, str]:
    """Γ ≅ Γ₂(Γ_𝓑, Δ) through α -> (C, B, D) where Γ_𝓑(α) = {C, D}."""
    t, q = report.triple, report.quotient
    paths = two_paths_of(q)
    index = {pth: i for i, pth in enumerate(paths)}
    image = []
    for x in range(t.graph.vertex_count):
        blocks = t.vertex_blocks(x)
        if len(blocks) != 2:
            return False, "r != 2"
        image.append(index.get((blocks[0], t.block_of[x], blocks[1])))
    if None in image or sorted(image) != list(range(len(paths))):
        return False, "α -> 2-path map is not a bijection"
    mapped = {(min(image[u], image[v]), max(image[u], image[v])) for u, v in t.graph.edges}
    induced = induced_action(t.group, t.partition)[0].image_group()
    for i, orb in enumerate(three_arc_orbits(q, induced)):
        if not orb.self_paired:
            continue
        g2, _, _ = gamma2_graph(q, orb)
        if g2.edge_set == mapped:
            return True, f"matches self-paired 3-arc orbit {i} of size {len(orb)}"
    return False, "no self-paired 3-arc orbit reproduces Γ"


def _xi_match(report) -> tuple[bool | None, str]:
    """Γ_𝒫 ≅ Ξ(Γ_𝓑, Δ) through B ∖ Γ(C) -> arc (B, C)."""
    t, q, ref = report.triple, report.quotient, report.refinement
    arcs = arcs_of(q)
    aindex = {arc: i for i, arc in enumerate(arcs)}
    pindex = {pc: i for i, pc in enumerate(ref.refined_partition)}
    image = [None] * len(ref.refined_partition)
    for B, nbrs in enumerate(t.block_neighbours):
        block = set(t.partition[B])
        for C in nbrs:
            pc = tuple(sorted(block - set(t.trace(B, C))))
            if image[pindex[pc]] is not None:
                return None, "several neighbouring blocks share a complementary trace"
            image[pindex[pc]] = aindex[(B, C)]
    if None in image:
        return None, "refined blocks do not correspond to arcs"
    g = ref.refined_graph
    mapped = {(min(image[u], image[v]), max(image[u], image[v])) for u, v in g.edges}
    induced = induced_action(t.group, t.partition)[0].image_group()
    for i, orb in enumerate(three_arc_orbits(q, induced)):
        if orb.self_paired:
            xi, _, _ = three_arc_graph(q, orb)
            if xi.edge_set == mapped:
                return True, f"matches self-paired 3-arc orbit {i} of size {len(orb)}"
    return False, "no self-paired 3-arc orbit reproduces Γ_𝒫"


def _refinement_evidence(report, a, mandatory=False):
    ev = []
    ref = report.refinement
    if ref is None:
        ev.append(_ev("refinement", False, mandatory, report.refinement_error or "λ̄ != 0, no refinement"))
        return ev
    hp = ref.hat_parameters
    ok = (len(ref.refined_partition[0]) == report.p and ref.a == a and hp.v == hp.b == a
          and hp.k == hp.r == a - 1 and ref.quotient_correspondence)
    ev.append(_ev("refinement_parameters", ok, mandatory,
                  f"block size {len(ref.refined_partition[0])}, a = {ref.a}, "
                  f"(v̂,b̂,k̂,r̂) = ({hp.v},{hp.b},{hp.k},{hp.r}), correspondence {ref.quotient_correspondence}"))
    ok, detail = _xi_match(report)
    ev.append(_ev("refined_quotient_is_three_arc_graph", ok, False, detail))
    return ev


def _non_incident(report):
    t = report.triple
    counts = {non_incident_blocks(t, x) for x in range(t.graph.vertex_count)}
    return _ev("one_non_incident_block_per_vertex", counts == {1}, False, f"counts {sorted(counts)}")


def _dual_design(report, kind, name, mandatory=False):
    P, lam = report.parameters, report.lam
    d = design_from_triple(report.triple, 0, kind)
    got = is_t_design(d, 2) if d.point_count >= 2 else None
    if kind == "dual":
        want = (P.b, P.r, lam)
    else:
        want = (P.b, P.b - P.r, P.v - 2 * P.k + lam)
    ok = got is not None and (got.v, got.k, got.lam) == want and got.block_count == P.v
    detail = (f"2-({got.v},{got.k},{got.lam}) with {got.block_count} blocks" if got else "not a 2-design")
    return _ev(name, ok, mandatory, detail + f"; expected 2-{want} with {P.v} blocks")


def _case_evidence(report, mode, tag, label) -> list[Evidence]:
    fp = report.fingerprints
    t, p, P = report.triple, report.p, report.parameters
    ev = []
    if tag == "a":
        if mode == "p3":
            ev.append(_ev("block_action_A4_or_S4", _order_in(fp.on_block, 4, {12, 24}), True, _fp_detail(fp.on_block)))
        elif mode == "p5":
            ok = (_order_in(fp.on_block, 6, {360, 720}) and _order_in(fp.on_neighbours, 6, {360, 720})
                  and fp.on_block.order == fp.on_neighbours.order)
            ev.append(_ev("block_and_neighbour_actions_A6_or_S6", ok, True,
                          f"{_fp_detail(fp.on_block)}; {_fp_detail(fp.on_neighbours)}"))
        ev.append(_ev("neighbour_action_two_transitive", fp.on_neighbours.transitivity >= 2, False,
                      _fp_detail(fp.on_neighbours)))
        ev.append(_one_regular(t))
        ev.append(_bijection(report))
    elif tag == "b":
        cyc, pattern = _cycle_case(report, p, mandatory_dihedral=(mode == "p5"))
        ev += cyc
        allowed = {"p3": {f"{p}·K2", f"C{2 * p}", f"K{p},{p}"},
                   "p5": {f"{p}·K2", f"C{2 * p}", f"K{p},{p}-C{2 * p}", f"K{p},{p}-{p}·K2", f"K{p},{p}"}}
        if mode in allowed:
            ev.append(_ev("bipartite_pattern_allowed", pattern in allowed[mode], False, str(pattern)))
    elif tag == "c":
        if mode == "p3":
            ev.append(_ev("block_action_PSL32", _order_in(fp.on_block, 7, {168}), True, _fp_detail(fp.on_block)))
            d = design_from_triple(t, 0, "complement")
            got = is_t_design(d, 2)
            ev.append(_ev("complement_design_is_fano", got is not None and (got.v, got.k, got.lam) == (7, 3, 1),
                          False, f"{got.as_dict() if got else 'not a 2-design'}"))
        elif mode == "p5":
            ev.append(_dual_design(report, "complement-dual", "complement_dual_is_2_21_5_1", True))
            ok = (_order_in(fp.on_block, 21, range(1, 120961)) and _order_in(fp.on_neighbours, 21, range(1, 120961))
                  and 120960 % fp.on_block.order == 0 and fp.on_block.order == fp.on_neighbours.order)
            ev.append(_ev("actions_inside_PGammaL34", ok, True,
                          f"{_fp_detail(fp.on_block)}; {_fp_detail(fp.on_neighbours)}"))
        else:
            ev.append(_dual_design(report, "dual", "dual_design_parameters"))
        ev.append(_ev("faithful_on_blocks", fp.kernel_order == 1, mode == "p5", f"|G_(𝓑)| = {fp.kernel_order}"))
    elif tag == "d" and mode == "p3":
        a = int(label.split("=")[1])
        ev += _refinement_evidence(report, a)
        ev.append(_non_incident(report))
    elif tag == "d":
        ev.append(_dual_design(report, "complement-dual", "complement_dual_is_2_11_5_2", mode == "p5"))
        ok = _order_in(fp.on_block, 11, {660}) and _order_in(fp.on_neighbours, 11, {660})
        ev.append(_ev("actions_PSL211", ok, mode == "p5", f"{_fp_detail(fp.on_block)}; {_fp_detail(fp.on_neighbours)}"))
    elif tag == "e" and mode == "p3":
        ev.append(_ev("neighbour_action_A4_or_S4", _order_in(fp.on_neighbours, 4, {12, 24}), True,
                      _fp_detail(fp.on_neighbours)))
        ok, detail = _gamma2_match(report)
        ev.append(_ev("gamma_is_two_path_graph", ok, False, detail))
        ev.append(_dual_design(report, "dual", "dual_design_parameters"))
    elif tag == "e":
        a = int(label.split("=")[1])
        ev += _refinement_evidence(report, a)
        ev.append(_non_incident(report))
    elif tag == "f":
        if mode == "p5":
            if label == "f1":
                ev.append(_dual_design(report, "dual", "dual_design_is_2_6_3_2", True))
                ev.append(_ev("neighbour_action_Sp42_or_PSL25", _order_in(fp.on_neighbours, 6, {720, 60}), True,
                              _fp_detail(fp.on_neighbours)))
            elif label == "f2":
                ev.append(_dual_design(report, "dual", "dual_design_is_complement_of_K6", True))
                ev.append(_ev("neighbour_action_A6", _order_in(fp.on_neighbours, 6, {360}), True,
                              _fp_detail(fp.on_neighbours)))
            else:
                ev.append(_dual_design(report, "complement-dual", "complement_dual_is_2_16_4_1", True))
                ok = _order_in(fp.on_neighbours, 16, range(1, 5761)) and 5760 % fp.on_neighbours.order == 0
                ev.append(_ev("neighbour_action_inside_AGammaL24", ok, True, _fp_detail(fp.on_neighbours)))
        else:
            ev.append(_dual_design(report, "dual", "dual_design_parameters"))
            ev.append(_ev("neighbour_action_two_transitive",
                          fp.on_neighbours is not None and fp.on_neighbours.transitivity >= 2, False,
                          _fp_detail(fp.on_neighbours)))
    return ev


def classify(report: ClassificationReport, mode: str | None = None) -> ClassificationReport:
    """Match against the rows of ``mode`` (default: p3/p5 by p, else theorem1)."""
    if mode is None:
        mode = {3: "p3", 5: "p5"}.get(report.p, "theorem1")
    if mode not in MODES:
        raise PreconditionViolation(f"unknown mode {mode!r}; expected one of {MODES}")
    report.mode = mode
    report.evidence, report.findings, report.matches = [], [], []
    report.matched_case = "none"
    need = {"p3": 3, "p5": 5}.get(mode)
    if need is not None and need != report.p:
        report.preconditions.append(_ev("mode_prime", False, True, f"mode {mode} needs p = {need}, got {report.p}"))
    if not report.preconditions_hold:
        return report
    P, lam = report.parameters, report.lam
    if lam is None:
        report.evidence.append(_ev("lambda_constant", False, True,
                                   f"λ differs across pairs: witness {report.lambda_report.witness}"))
        if report.quotient_2at:
            report.findings.append("quotient is 2-arc-transitive but λ is not constant")
    else:
        vbrl = (P.v, P.b, P.r, lam)
        candidates = parameter_matches(mode, report.p, vbrl)
        report.evidence.append(_ev("parameter_row", bool(candidates), True,
                                   f"(v,b,r,λ) = {vbrl}; rows {[f'({c}) {lab}'.strip() for c, lab in candidates]}"))
        for tag, label in candidates:
            ev = _case_evidence(report, mode, tag, label)
            prefix = f"{tag}[{label}]" if label else tag
            for e in ev:
                e.name = f"{prefix}:{e.name}"
            report.evidence += ev
            if all(e.passed for e in ev if e.mandatory):
                report.matches.append(tag)
    report.matches = sorted(set(report.matches))
    if report.matches:
        report.matched_case = report.matches[0]
    matched = report.matched_case != "none"
    if mode in ("p3", "p5"):
        iff = matched == report.quotient_2at
        report.evidence.append(_ev("iff_matched_vs_quotient_2at", iff, False,
                                   f"matched={matched}, quotient_2at={report.quotient_2at}"))
        if not iff:
            report.findings.append(f"iff violated: matched={matched} but quotient_2at={report.quotient_2at}")
    elif report.quotient_2at and not matched:
        report.findings.append("quotient is 2-arc-transitive but no row matched (necessary condition violated)")
    for e in report.evidence:
        if not e.mandatory and e.status == FAIL and e.name.split(":", 1)[0].split("[")[0] in report.matches:
            report.findings.append(f"consequence failed: {e.name} ({e.detail})")
    return report
