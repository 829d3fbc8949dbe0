"""JSON encodings of every value the command line reads or writes.

Weights are arrays of rational strings (``"3/2"``), subsets are sorted
arrays of 1-based indices and Weyl elements are reduced words.  Each
``*_to_json`` has a matching ``*_from_json``; decoding Weyl elements needs
the root system they live in.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from .errors import ParseError, RadonFlagError
from .oracle import SuiteResult
from .parabolic import FactorizationStep
from .parameters import GvmLabel, TdoLabel
from .root_system import RootSystem, Weight, build_root_system, subset
from .theorems import ChainStep, Irreducibility, IntertwinerSpec, TheoremReport, Verdict
from .weyl import WeylElem, element_from_word

COMMANDS = ("roots", "weyl", "star-pairs", "factorize", "transport", "check-equivalence",
            "check-theorem2", "verify")


def rational_from_json(x) -> Fraction:
    if isinstance(x, bool) or not isinstance(x, (int, str)):
        raise ParseError(f"expected an integer or rational string, got {x!r}")
    try:
        return Fraction(x)
    except ValueError:
        raise ParseError(f"cannot parse {x!r} as a rational") from None


def weight_to_json(lam: Weight) -> list[str]:
    return [str(c) for c in lam]


def weight_from_json(data, rs: RootSystem | None = None) -> Weight:
    if not isinstance(data, list):
        raise ParseError(f"a weight must be an array, got {data!r}")
    lam = Weight(rational_from_json(x) for x in data)
    if rs is not None and lam.rank != rs.rank:
        raise ParseError(f"weight has {lam.rank} coordinates, root system has rank {rs.rank}")
    return lam


def subset_to_json(K) -> list[int]:
    return sorted(int(i) for i in K)


def subset_from_json(data, rs: RootSystem) -> frozenset[int]:
    if not isinstance(data, list) or not all(isinstance(i, int) and not isinstance(i, bool)
                                             for i in data):
        raise ParseError(f"a subset must be an array of integers, got {data!r}")
    return subset(rs, data)


def weyl_to_json(w: WeylElem) -> list[int]:
    return list(w.word)


def weyl_from_json(data, rs: RootSystem) -> WeylElem:
    if not isinstance(data, list) or not all(isinstance(i, int) and not isinstance(i, bool)
                                             for i in data):
        raise ParseError(f"a Weyl element must be a word (array of integers), got {data!r}")
    return element_from_word(rs, data)


def root_system_to_json(rs: RootSystem) -> dict:
    return {"cartan": [list(row) for row in rs.cartan]}


def root_system_from_json(data) -> RootSystem:
    if not isinstance(data, dict):
        raise ParseError(f"root_system must be an object, got {data!r}")
    return build_root_system(data)


def step_to_json(st: FactorizationStep) -> dict:
    return {"alpha": st.alpha, "inner": subset_to_json(st.inner), "factor": weyl_to_json(st.factor)}


def step_from_json(data, rs) -> FactorizationStep:
    try:
        return FactorizationStep(int(data["alpha"]), subset_from_json(data["inner"], rs),
                                 weyl_from_json(data["factor"], rs))
    except (KeyError, TypeError) as exc:
        raise ParseError(f"bad factorization step {data!r}") from exc


def tdo_to_json(label: TdoLabel) -> dict:
    return {"variety": subset_to_json(label.variety), "param": weight_to_json(label.param)}


def tdo_from_json(data, rs) -> TdoLabel:
    try:
        return TdoLabel(subset_from_json(data["variety"], rs), weight_from_json(data["param"], rs))
    except (KeyError, TypeError) as exc:
        raise ParseError(f"bad TDO label {data!r}") from exc


def gvm_to_json(label: GvmLabel) -> dict:
    return {"levi": subset_to_json(label.levi), "parabolic": subset_to_json(label.parabolic),
            "highest_weight": weight_to_json(label.highest_weight)}


def gvm_from_json(data, rs) -> GvmLabel:
    try:
        return GvmLabel(subset_from_json(data["levi"], rs), subset_from_json(data["parabolic"], rs),
                        weight_from_json(data["highest_weight"], rs))
    except (KeyError, TypeError) as exc:
        raise ParseError(f"bad module label {data!r}") from exc


def spec_to_json(spec: IntertwinerSpec) -> dict:
    return {
        "w": weyl_to_json(spec.w),
        "mu": weight_to_json(spec.mu),
        "source": tdo_to_json(spec.source),
        "target": tdo_to_json(spec.target),
        "inverse_w": weyl_to_json(spec.inverse_w),
        "inverse_mu": weight_to_json(spec.inverse_mu),
    }


def spec_from_json(data, rs) -> IntertwinerSpec:
    try:
        return IntertwinerSpec(
            weyl_from_json(data["w"], rs), weight_from_json(data["mu"], rs),
            tdo_from_json(data["source"], rs), tdo_from_json(data["target"], rs),
            weyl_from_json(data["inverse_w"], rs), weight_from_json(data["inverse_mu"], rs))
    except (KeyError, TypeError) as exc:
        raise ParseError(f"bad intertwiner spec {data!r}") from exc


def report_to_json(rep: TheoremReport) -> dict:
    return {
        "regular": rep.regular,
        "chain": [{
            "alpha": c.step.alpha,
            "inner": subset_to_json(c.step.inner),
            "factor_word": weyl_to_json(c.step.factor),
            "lambda_i": weight_to_json(c.lambda_i),
            "eta_i": weight_to_json(c.eta_i),
            "irreducibility": c.irreducibility.value,
        } for c in rep.chain],
        "verdict": rep.verdict.value,
        "conclusion": rep.conclusion,
    }


def report_from_json(data, rs) -> TheoremReport:
    try:
        chain = tuple(
            ChainStep(FactorizationStep(int(c["alpha"]), subset_from_json(c["inner"], rs),
                                        weyl_from_json(c["factor_word"], rs)),
                      weight_from_json(c["lambda_i"], rs), weight_from_json(c["eta_i"], rs),
                      Irreducibility(c["irreducibility"]))
            for c in data["chain"])
        return TheoremReport(bool(data["regular"]), chain, Verdict(data["verdict"]),
                             data.get("conclusion"))
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, RadonFlagError):
            raise
        raise ParseError(f"bad theorem report {data!r}") from exc


def suite_to_json(res: SuiteResult) -> dict:
    return {"suite": res.suite, "instances_checked": res.instances_checked,
            "failures": list(res.failures), "passed": res.passed}


def suite_from_json(data) -> SuiteResult:
    try:
        return SuiteResult(data["suite"], int(data["instances_checked"]), list(data["failures"]))
    except (KeyError, TypeError) as exc:
        raise ParseError(f"bad suite result {data!r}") from exc


@dataclass(frozen=True)
class Request:
    command: str
    root_system: dict
    arguments: dict = field(default_factory=dict)

    def build(self) -> RootSystem:
        return root_system_from_json(self.root_system)


def request_to_json(req: Request) -> dict:
    return {"command": req.command, "root_system": req.root_system, "arguments": req.arguments}


def request_from_json(data: Any) -> Request:
    if not isinstance(data, dict):
        raise ParseError("request must be a JSON object")
    command = data.get("command")
    if command not in COMMANDS:
        raise ParseError(f"unknown command {command!r}; expected one of {', '.join(COMMANDS)}")
    if "root_system" not in data or not isinstance(data["root_system"], dict):
        raise ParseError("request needs a root_system object")
    arguments = data.get("arguments", {})
    if not isinstance(arguments, dict):
        raise ParseError("arguments must be a JSON object")
    return Request(command, data["root_system"], arguments)
