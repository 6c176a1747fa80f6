"""Scenario files, check orchestration and reporting.

A scenario is a line-oriented sectioned text file: ``[group G]``,
``[subgroup H]``, ``[cocycle a]``, ``[algebra A]`` and ``[check id]`` blocks
with ``key = value`` lines.  Checks run the verification pipelines and produce
one record each; reports are emitted as versioned JSON or a plain text table.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Optional, Sequence

from . import cocycles, embed, galg, groups, structure

REPORT_SCHEMA = "gradedpi-report/1"


class ParseError(ValueError):
    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        where = f"line {line}: " if line is not None else ""
        super().__init__(f"{where}{message}")


@dataclass
class Section:
    kind: str                  # group | subgroup | cocycle | algebra | check
    name: str
    fields: list[tuple[str, str]]
    line: int

    def get(self, key: str) -> Optional[str]:
        for k, v in self.fields:
            if k == key:
                return v
        return None

    def get_all(self, key: str) -> list[str]:
        return [v for k, v in self.fields if k == key]


@dataclass
class CheckSpec:
    ident: str
    kind: str
    args: list[str]
    params: dict
    line: int


@dataclass
class Scenario:
    sections: list[Section] = field(default_factory=list)
    groups: dict = field(default_factory=dict)
    subgroups: dict = field(default_factory=dict)
    cocycles: dict = field(default_factory=dict)
    algebras: dict = field(default_factory=dict)
    gsimple_data: dict = field(default_factory=dict)
    checks: list[CheckSpec] = field(default_factory=list)


@dataclass
class Record:
    check: str
    kind: str
    inputs: dict
    verdict: str                      # holds | fails | skipped:budget | error
    lhs: Optional[int] = None
    rhs: Optional[int] = None
    witness: Optional[object] = None
    detail: dict = field(default_factory=dict)
    wall_time_s: float = 0.0

    def to_json(self) -> dict:
        out = {
            "check": self.check,
            "kind": self.kind,
            "inputs": self.inputs,
            "verdict": self.verdict,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "witness": self.witness,
            "detail": self.detail,
            "wall_time_s": round(self.wall_time_s, 6),
        }
        return out


# ---------------------------------------------------------------------------
# parsing


def _split_sections(text: str) -> list[Section]:
    sections: list[Section] = []
    current: Optional[Section] = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("["):
            if not line.endswith("]"):
                raise ParseError("unterminated section header", lineno)
            head = line[1:-1].split()
            if len(head) != 2:
                raise ParseError("section header needs a kind and a name", lineno)
            kind, name = head
            if kind not in ("group", "subgroup", "cocycle", "algebra", "check"):
                raise ParseError(f"unknown section kind {kind!r}", lineno)
            current = Section(kind, name, [], lineno)
            sections.append(current)
            continue
        if "=" not in line:
            raise ParseError("expected 'key = value'", lineno)
        if current is None:
            raise ParseError("field outside any section", lineno)
        key, value = line.split("=", 1)
        current.fields.append((key.strip(), value.strip()))
    return sections


def _resolve_group(sc: Scenario, name: str, line: int) -> groups.FiniteGroup:
    if name not in sc.groups:
        raise ParseError(f"undefined group {name!r}", line)
    return sc.groups[name]


def _resolve_subgroup(sc: Scenario, name: str, line: int) -> groups.Subgroup:
    if name not in sc.subgroups:
        raise ParseError(f"undefined subgroup {name!r}", line)
    return sc.subgroups[name]


def _resolve_cocycle(sc: Scenario, name: str, line: int) -> cocycles.TwoCocycle:
    if name not in sc.cocycles:
        raise ParseError(f"undefined cocycle {name!r}", line)
    return sc.cocycles[name]


def _resolve_algebra(sc: Scenario, name: str, line: int) -> galg.GradedAlgebra:
    if name not in sc.algebras:
        raise ParseError(f"undefined algebra {name!r}", line)
    return sc.algebras[name]


def _parse_group(sc: Scenario, sec: Section) -> None:
    kind_line = sec.get("kind")
    if kind_line is None:
        raise ParseError(f"group {sec.name!r} needs a kind", sec.line)
    parts = kind_line.split()
    kind = parts[0]
    try:
        if kind == "direct_product":
            factors = [_resolve_group(sc, n, sec.line) for n in parts[1:]]
            G = groups.direct_product(*factors)
        elif kind == "from_table":
            rows = [[int(x) for x in r.split()] for r in sec.get_all("row")]
            labels_line = sec.get("labels")
            labels = labels_line.split() if labels_line else None
            G = groups.from_table(rows, labels, name=sec.name)
        elif kind in ("cyclic", "symmetric", "alternating", "dihedral"):
            G = groups.make_group(kind, int(parts[1]))
        elif kind in ("quaternion8", "sl23"):
            G = groups.make_group(kind)
        else:
            raise ParseError(f"unknown group kind {kind!r}", sec.line)
    except (ValueError, IndexError) as exc:
        if isinstance(exc, ParseError):
            raise
        raise ParseError(f"group {sec.name!r}: {exc}", sec.line)
    sc.groups[sec.name] = G


def _parse_subgroup(sc: Scenario, sec: Section) -> None:
    gname = sec.get("group")
    if gname is None:
        raise ParseError(f"subgroup {sec.name!r} needs a group", sec.line)
    G = _resolve_group(sc, gname, sec.line)
    try:
        if sec.get("center") == "true":
            H = groups.Subgroup(G, G.center_members(), validate=False)
        elif sec.get("members") is not None:
            H = groups.Subgroup(G, [int(x) for x in sec.get("members").split()])
        elif sec.get("generators") is not None:
            H = groups.Subgroup.generated(
                G, [int(x) for x in sec.get("generators").split()])
        else:
            raise ParseError(
                f"subgroup {sec.name!r} needs members, generators or center",
                sec.line)
    except ValueError as exc:
        if isinstance(exc, ParseError):
            raise
        raise ParseError(f"subgroup {sec.name!r}: {exc}", sec.line)
    sc.subgroups[sec.name] = H


def _resolve_group_or_subgroup(sc: Scenario, name: str, line: int):
    """Groups and subgroups share the namespace for cocycle carriers; a
    subgroup name resolves to its standalone group."""
    if name in sc.groups:
        return sc.groups[name]
    if name in sc.subgroups:
        return sc.subgroups[name].as_group()
    raise ParseError(f"undefined group or subgroup {name!r}", line)


def _parse_cocycle(sc: Scenario, sec: Section) -> None:
    kind_line = sec.get("kind")
    if kind_line is None:
        raise ParseError(f"cocycle {sec.name!r} needs a kind", sec.line)
    parts = kind_line.split()
    kind = parts[0]
    gname = sec.get("group")
    try:
        if kind == "heisenberg":
            p, n = int(parts[1]), int(parts[2])
            c = cocycles.heisenberg_cocycle(p, n)
            if gname is None:
                raise ParseError(
                    "heisenberg cocycle must register its group name", sec.line)
            if gname in sc.groups:
                raise ParseError(f"group {gname!r} already defined", sec.line)
            sc.groups[gname] = c.group
        elif kind == "trivial":
            m = int(parts[1])
            G = _resolve_group_or_subgroup(sc, gname, sec.line)
            c = cocycles.trivial_cocycle(G, m)
        elif kind == "from_extension":
            E = _resolve_group(sc, parts[1], sec.line)
            Z = _resolve_subgroup(sc, parts[2], sec.line)
            c = cocycles.cocycle_from_extension(E, Z)
            if gname is None:
                raise ParseError(
                    "from_extension must register the quotient group name",
                    sec.line)
            if gname in sc.groups:
                raise ParseError(f"group {gname!r} already defined", sec.line)
            sc.groups[gname] = c.group
        elif kind == "table":
            m = int(parts[1])
            G = _resolve_group_or_subgroup(sc, gname, sec.line)
            rows = [[int(x) for x in r.split()] for r in sec.get_all("row")]
            c = cocycles.TwoCocycle(G, m, rows)
            chk = cocycles.validate(c)
            if not chk.ok:
                raise ParseError(
                    f"cocycle {sec.name!r}: {chk.reason} at {chk.witness}",
                    sec.line)
        else:
            raise ParseError(f"unknown cocycle kind {kind!r}", sec.line)
    except (ValueError, IndexError) as exc:
        if isinstance(exc, ParseError):
            raise
        raise ParseError(f"cocycle {sec.name!r}: {exc}", sec.line)
    sc.cocycles[sec.name] = c


def _parse_algebra(sc: Scenario, sec: Section) -> None:
    kind_line = sec.get("kind")
    if kind_line is None:
        raise ParseError(f"algebra {sec.name!r} needs a kind", sec.line)
    parts = kind_line.split()
    kind = parts[0]
    modulus = sec.get("modulus")
    modulus = int(modulus) if modulus is not None else None
    try:
        if kind == "group_algebra":
            G = _resolve_group(sc, parts[1], sec.line)
            A = galg.group_algebra(G, modulus=modulus)
        elif kind == "twisted":
            G = _resolve_group(sc, parts[1], sec.line)
            c = _resolve_cocycle(sc, parts[2], sec.line)
            A = galg.twisted_group_algebra(G, c, modulus=modulus)
        elif kind == "gsimple":
            G = _resolve_group(sc, parts[1], sec.line)
            H = _resolve_subgroup(sc, parts[2], sec.line)
            c = _resolve_cocycle(sc, parts[3], sec.line)
            tup_line = sec.get("tuple")
            if tup_line is None:
                raise ParseError("gsimple needs a tuple line", sec.line)
            tup = tuple(int(x) for x in tup_line.split())
            data = galg.GSimpleData(G, H, c, tup)
            A = galg.build_gsimple(data, modulus=modulus)
            sc.gsimple_data[sec.name] = data
        elif kind in ("ut_scalar_diag", "ut_full"):
            G = _resolve_group(sc, parts[1], sec.line)
            tup_line = sec.get("tuple")
            if tup_line is None:
                raise ParseError(f"{kind} needs a tuple line", sec.line)
            tup = tuple(int(x) for x in tup_line.split())
            fn = (galg.upper_triangular_scalar_diag if kind == "ut_scalar_diag"
                  else galg.upper_triangular_full)
            A = fn(len(tup), G, tup, modulus=modulus)
        elif kind == "matrix":
            d = int(parts[1])
            A = galg.matrix_algebra(d, modulus=modulus or 1)
        elif kind == "tensor_trivial":
            A1 = _resolve_algebra(sc, parts[1], sec.line)
            A2 = _resolve_algebra(sc, parts[2], sec.line)
            A = galg.tensor_with_trivially_graded(A1, A2)
        elif kind == "quotient_grading":
            A1 = _resolve_algebra(sc, parts[1], sec.line)
            N = _resolve_subgroup(sc, parts[2], sec.line)
            A = galg.induced_quotient_grading(A1, N)
        else:
            raise ParseError(f"unknown algebra kind {kind!r}", sec.line)
    except (ValueError, IndexError) as exc:
        if isinstance(exc, ParseError):
            raise
        raise ParseError(f"algebra {sec.name!r}: {exc}", sec.line)
    sc.algebras[sec.name] = A


_CHECK_KINDS = ("grading", "invariants", "embedding", "corollary2",
                "corollary_pid", "main_bound", "permutability")


def _parse_check(sc: Scenario, sec: Section) -> None:
    kind_line = sec.get("kind")
    if kind_line is None:
        raise ParseError(f"check {sec.name!r} needs a kind", sec.line)
    parts = kind_line.split()
    kind = parts[0]
    if kind not in _CHECK_KINDS:
        raise ParseError(f"unknown check kind {kind!r}", sec.line)
    params = {}
    for key in ("k", "n", "codimensions"):
        v = sec.get(key)
        if v is not None:
            try:
                params[key] = int(v)
            except ValueError:
                raise ParseError(f"check {sec.name!r}: {key} must be an integer",
                                 sec.line)
    rho = sec.get("rho")
    if rho is not None:
        params["rho"] = rho
    # eagerly validate references
    args = parts[1:]
    try:
        if kind == "grading":
            _resolve_algebra(sc, args[0], sec.line)
        elif kind == "invariants":
            _resolve_algebra(sc, args[0], sec.line)
        elif kind == "embedding":
            sub = args[0]
            if sub == "regular":
                _resolve_group(sc, args[1], sec.line)
                _resolve_subgroup(sc, args[2], sec.line)
            elif sub == "untwist":
                _resolve_group(sc, args[1], sec.line)
                _resolve_cocycle(sc, args[2], sec.line)
            elif sub == "chain":
                _resolve_group(sc, args[1], sec.line)
                _resolve_subgroup(sc, args[2], sec.line)
                _resolve_cocycle(sc, args[3], sec.line)
            else:
                raise ParseError(f"unknown embedding construction {sub!r}",
                                 sec.line)
        elif kind in ("corollary2", "corollary_pid", "main_bound"):
            G = _resolve_group(sc, args[0], sec.line)
            A = _resolve_algebra(sc, args[1], sec.line)
            if A.group is not G:
                raise ParseError(
                    f"check {sec.name!r}: algebra {args[1]!r} is not graded "
                    f"by group {args[0]!r}", sec.line)
        elif kind == "permutability":
            _resolve_group(sc, args[0], sec.line)
            if "n" not in params:
                raise ParseError("permutability needs an n field", sec.line)
    except IndexError:
        raise ParseError(f"check {sec.name!r}: missing arguments", sec.line)
    sc.checks.append(CheckSpec(sec.name, kind, args, params, sec.line))


def parse_scenario(text: str) -> Scenario:
    sc = Scenario()
    sc.sections = _split_sections(text)
    handlers = {
        "group": _parse_group,
        "subgroup": _parse_subgroup,
        "cocycle": _parse_cocycle,
        "algebra": _parse_algebra,
        "check": _parse_check,
    }
    seen: set[tuple[str, str]] = set()
    for sec in sc.sections:
        key = (sec.kind, sec.name)
        if key in seen:
            raise ParseError(f"duplicate {sec.kind} {sec.name!r}", sec.line)
        seen.add(key)
        handlers[sec.kind](sc, sec)
    return sc


def print_scenario(sc: Scenario) -> str:
    """Canonical text form; parse(print_scenario(parse(text))) round-trips."""
    out = []
    for sec in sc.sections:
        out.append(f"[{sec.kind} {sec.name}]")
        for k, v in sec.fields:
            out.append(f"{k} = {v}")
        out.append("")
    return "\n".join(out)


# ---------------------------------------------------------------------------
# check execution


def _run_grading(sc: Scenario, spec: CheckSpec, budget: int,
                 rng: random.Random) -> Record:
    name = spec.args[0]
    A = sc.algebras[name]
    connected = galg.is_connected(A)
    strong = galg.is_strong(A)
    detail = {"connected": connected, "strong": strong}
    ok = connected or not strong  # strong gradings of unital algebras connect
    data = sc.gsimple_data.get(name)
    if data is not None:
        coset = galg.coset_condition(data)
        detail["coset_condition"] = coset
        ok = ok and (coset == strong)
        if not coset:
            witness = galg.degenerate_witness(data)
            detail["witness_word"] = [A.group.label(w) for w in witness]
            ok = ok and galg.monomial_is_identity(A, witness)
            return Record(spec.ident, spec.kind, {"algebra": name},
                          "holds" if ok else "fails",
                          witness=list(witness), detail=detail)
    return Record(spec.ident, spec.kind, {"algebra": name},
                  "holds" if ok else "fails", detail=detail)


def _run_invariants(sc: Scenario, spec: CheckSpec, budget: int,
                    rng: random.Random) -> Record:
    name = spec.args[0]
    A = sc.algebras[name]
    detail: dict = {}
    radical = galg.graded_radical(A)
    detail["radical_dim"] = len(radical)
    A0 = structure.ungraded_view(A)
    quotient = galg.semisimple_quotient(A0)
    report = structure.wedderburn_degrees(quotient, rng=rng)
    detail["wedderburn_degrees"] = list(report.degrees)
    exp = structure.gz_exponent(A, rng=rng)
    detail["exponent"] = exp.value
    detail["exponent_witness"] = list(exp.witness)
    ok = (sum(d * d for d in report.degrees) == quotient.dim
          and report.num_blocks == len(galg.center_basis(quotient))
          and exp.value <= A.dim)
    upto = spec.params.get("codimensions")
    if upto:
        cods = []
        for n in range(1, upto + 1):
            try:
                cods.append(structure.codimension(A, n, budget))
            except structure.BudgetExceeded as exc:
                detail["codimensions"] = cods
                detail["budget_note"] = str(exc)
                return Record(spec.ident, spec.kind, {"algebra": name},
                              "skipped:budget", detail=detail)
        detail["codimensions"] = cods
    return Record(spec.ident, spec.kind, {"algebra": name},
                  "holds" if ok else "fails", detail=detail)


def _parse_rho(param: Optional[str], alpha, modulus: int):
    if param is None or param == "regular":
        return None
    parts = param.split()
    if parts[0] == "clock_shift":
        return embed.clock_shift_rep(int(parts[1]), modulus=modulus)
    raise ValueError(f"unknown rho kind {param!r}")


def _run_embedding(sc: Scenario, spec: CheckSpec, budget: int,
                   rng: random.Random) -> Record:
    sub = spec.args[0]
    if sub == "regular":
        G = sc.groups[spec.args[1]]
        H = sc.subgroups[spec.args[2]]
        gmap = embed.regular_coset_embedding(G, H)
        inputs = {"construction": sub, "group": spec.args[1],
                  "subgroup": spec.args[2]}
    elif sub == "untwist":
        G = sc.groups[spec.args[1]]
        alpha = sc.cocycles[spec.args[2]]
        from math import gcd
        m = G.exponent() * alpha.modulus // gcd(G.exponent(), alpha.modulus)
        rho = _parse_rho(spec.params.get("rho"), alpha, m)
        gmap = embed.untwist_embedding(G, alpha, rho=rho)
        inputs = {"construction": sub, "group": spec.args[1],
                  "cocycle": spec.args[2]}
    else:
        G = sc.groups[spec.args[1]]
        H = sc.subgroups[spec.args[2]]
        alpha = sc.cocycles[spec.args[3]]
        gmap = embed.chain_embedding(G, H, alpha)
        inputs = {"construction": sub, "group": spec.args[1],
                  "subgroup": spec.args[2], "cocycle": spec.args[3]}
    report = embed.verify_graded_map(gmap)
    detail = {
        "multiplicative": report.multiplicative,
        "unital": report.unital,
        "injective": report.injective,
        "degree_preserving": report.degree_preserving,
        "target_dim": gmap.target.dim,
    }
    return Record(spec.ident, spec.kind, inputs,
                  "holds" if report.all_true() else "fails", detail=detail)


def _run_corollary2(sc: Scenario, spec: CheckSpec, budget: int,
                    rng: random.Random) -> Record:
    G = sc.groups[spec.args[0]]
    A = sc.algebras[spec.args[1]]
    lhs = structure.exp_group_algebra(G)
    expA = structure.gz_exponent(A, rng=rng).value
    rhs = expA * expA
    return Record(spec.ident, spec.kind,
                  {"group": spec.args[0], "algebra": spec.args[1],
                   "exp_algebra": expA},
                  "holds" if lhs <= rhs else "fails", lhs=lhs, rhs=rhs)


def _run_corollary_pid(sc: Scenario, spec: CheckSpec, budget: int,
                       rng: random.Random) -> Record:
    G = sc.groups[spec.args[0]]
    A = sc.algebras[spec.args[1]]
    dfg = 2 * structure.b_of_group(G)
    dA = structure.pi_degree_semisimple(structure.ungraded_view(A))
    rhs = 2 * (dA - 1) * (dA - 1)
    return Record(spec.ident, spec.kind,
                  {"group": spec.args[0], "algebra": spec.args[1],
                   "pi_degree_algebra": dA},
                  "holds" if dfg <= rhs else "fails", lhs=dfg, rhs=rhs)


def _run_main_bound(sc: Scenario, spec: CheckSpec, budget: int,
                    rng: random.Random) -> Record:
    G = sc.groups[spec.args[0]]
    A = sc.algebras[spec.args[1]]
    k = spec.params.get("k", 2)
    gamma = groups.min_abelian_index(G)
    expA = structure.gz_exponent(A, rng=rng).value
    rhs = expA ** k
    return Record(spec.ident, spec.kind,
                  {"group": spec.args[0], "algebra": spec.args[1],
                   "k": k, "exp_algebra": expA},
                  "holds" if gamma <= rhs else "fails", lhs=gamma, rhs=rhs)


def _run_permutability(sc: Scenario, spec: CheckSpec, budget: int,
                       rng: random.Random) -> Record:
    G = sc.groups[spec.args[0]]
    n = spec.params["n"]
    detail = {}
    for t in range(2, n + 1):
        p = groups.is_n_permutable(G, t)
        q = groups.is_n_rewritable(G, t)
        entry = {"P": p.holds, "Q": q.holds}
        if p.witness is not None:
            entry["P_witness"] = [G.label(x) for x in p.witness]
        detail[str(t)] = entry
    return Record(spec.ident, spec.kind,
                  {"group": spec.args[0], "n": n}, "holds", detail=detail)


_RUNNERS = {
    "grading": _run_grading,
    "invariants": _run_invariants,
    "embedding": _run_embedding,
    "corollary2": _run_corollary2,
    "corollary_pid": _run_corollary_pid,
    "main_bound": _run_main_bound,
    "permutability": _run_permutability,
}


def run_check(sc: Scenario, spec: CheckSpec, budget: int,
              seed: int) -> Record:
    rng = random.Random(seed)
    start = time.perf_counter()
    try:
        record = _RUNNERS[spec.kind](sc, spec, budget, rng)
    except structure.BudgetExceeded as exc:
        record = Record(spec.ident, spec.kind, {"args": spec.args},
                        "skipped:budget", detail={"note": str(exc)})
    except Exception as exc:  # noqa: BLE001 - verdict taxonomy demands it
        record = Record(spec.ident, spec.kind, {"args": spec.args},
                        "error", detail={"error": f"{type(exc).__name__}: {exc}"})
    record.wall_time_s = time.perf_counter() - start
    return record


def run_scenario(sc: Scenario, budget: int = structure.DEFAULT_BUDGET,
                 threads: int = 1, seed: int = 0) -> list[Record]:
    specs = list(sc.checks)
    if threads <= 1:
        return [run_check(sc, spec, budget, seed + i)
                for i, spec in enumerate(specs)]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        futures = [pool.submit(run_check, sc, spec, budget, seed + i)
                   for i, spec in enumerate(specs)]
        return [f.result() for f in futures]


# ---------------------------------------------------------------------------
# reporting


def emit_report(records: Sequence[Record], fmt: str = "json",
                scenario_name: str = "") -> str:
    if fmt == "json":
        payload = {
            "schema": REPORT_SCHEMA,
            "scenario": scenario_name,
            "records": [r.to_json() for r in records],
        }
        return json.dumps(payload, indent=2, sort_keys=False)
    if fmt == "text":
        lines = [f"scenario: {scenario_name or '-'}"]
        width = max([len(r.check) for r in records], default=5)
        for r in records:
            bound = ""
            if r.lhs is not None:
                bound = f"  lhs={r.lhs} rhs={r.rhs}"
            lines.append(f"{r.check:<{width}}  {r.kind:<13} {r.verdict:<14}"
                         f"{bound}  ({r.wall_time_s:.2f}s)")
        bad = sum(r.verdict in ("fails", "error") for r in records)
        lines.append(f"{len(records)} checks, {bad} failing/errored")
        return "\n".join(lines)
    raise ValueError(f"unknown format {fmt!r}")


# ---------------------------------------------------------------------------
# built-in catalog


def builtin_catalog() -> dict[str, groups.FiniteGroup]:
    """Named groups the verification suites range over: all abelian groups of
    order at most 12, the small nonabelian ones, and the Heisenberg
    extensions for p in {2, 3}."""
    cat: dict[str, groups.FiniteGroup] = {}
    for n in range(1, 13):
        cat[f"C{n}"] = groups.cyclic(n)
    cat["C2xC2"] = groups.direct_product(groups.cyclic(2), groups.cyclic(2))
    cat["C2xC4"] = groups.direct_product(groups.cyclic(2), groups.cyclic(4))
    cat["C2xC2xC2"] = groups.direct_product(
        groups.cyclic(2), groups.cyclic(2), groups.cyclic(2))
    cat["C3xC3"] = groups.direct_product(groups.cyclic(3), groups.cyclic(3))
    cat["C2xC6"] = groups.direct_product(groups.cyclic(2), groups.cyclic(6))
    cat["S3"] = groups.symmetric(3)
    cat["D4"] = groups.dihedral(4)
    cat["Q8"] = groups.quaternion8()
    cat["A4"] = groups.alternating(4)
    for p in (2, 3):
        c = cocycles.heisenberg_cocycle(p, 1)
        cat[f"Heis{p ** 3}"] = groups.central_extension(c.group, p, c)
    return cat


def builtin_scenarios() -> list[str]:
    from importlib import resources
    names = []
    for entry in resources.files("gradedpi.scenarios").iterdir():
        if entry.name.endswith(".scenario"):
            names.append(entry.name)
    return sorted(names)


def load_builtin_scenario(name: str) -> str:
    from importlib import resources
    return resources.files("gradedpi.scenarios").joinpath(name).read_text()


# ---------------------------------------------------------------------------
# entry point


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = argparse.ArgumentParser(
        prog="gradedpi",
        description="exact verification of graded-algebra invariants")
    parser.add_argument("--format", choices=("json", "text"), default="text")
    parser.add_argument("--budget", type=int, default=structure.DEFAULT_BUDGET,
                        help="codimension evaluation budget")
    parser.add_argument("--threads", type=int, default=1)
    parser.add_argument("--seed", type=int, default=0)
    sub = parser.add_subparsers(dest="command", required=True)
    run_p = sub.add_parser("run", help="run all checks in a scenario file")
    run_p.add_argument("file")
    val_p = sub.add_parser("validate", help="parse and resolve a scenario file")
    val_p.add_argument("file")
    sub.add_parser("catalog", help="print the built-in group catalog")
    args = parser.parse_args(argv)

    if args.command == "catalog":
        cat = builtin_catalog()
        for name, G in cat.items():
            print(f"{name:<10} order {G.order:>3}  "
                  f"{'abelian' if G.is_abelian() else 'nonabelian'}")
        for scen in builtin_scenarios():
            print(f"scenario   {scen}")
        return 0

    try:
        with open(args.file, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        print(f"cannot read {args.file}: {exc}", file=sys.stderr)
        return 2
    try:
        sc = parse_scenario(text)
    except ParseError as exc:
        print(f"{args.file}: {exc}", file=sys.stderr)
        return 2

    if args.command == "validate":
        print(f"{args.file}: OK ({len(sc.checks)} checks, "
              f"{len(sc.algebras)} algebras)")
        return 0

    records = run_scenario(sc, budget=args.budget, threads=args.threads,
                           seed=args.seed)
    print(emit_report(records, args.format, scenario_name=args.file))
    failing = any(r.verdict in ("fails", "error") for r in records)
    return 1 if failing else 0


if __name__ == "__main__":
    raise SystemExit(main())
