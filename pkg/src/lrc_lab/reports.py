"""JSON payloads for every report type, plus schema validation.

Numbers stay exact end to end: rationals are rendered as "p/q" strings,
never floats.  Search outcomes are serialized with sorted keys and fixed
separators so that runs with different worker counts stay byte-identical.
"""

from __future__ import annotations

import json
from fractions import Fraction
from importlib.resources import files

from .bounds import BoundReport
from .code import LinearCode
from .lrc import AnalyzeReport, NormalForm
from .search import SearchOutcome
from .transform import DerivationReport, PipelineReport, PropagationReport, ReductionReport


def frac_str(x: Fraction) -> str:
    return str(x)


def dump(payload: dict) -> str:
    return json.dumps(payload, sort_keys=True, separators=(",", ":")) + "\n"


def dump_pretty(payload: dict) -> str:
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def code_payload(c: LinearCode) -> dict:
    return {
        "q": c.field.q,
        "n": c.n,
        "k": c.k,
        "d": c.d_cache,
        "generator": [[int(v) for v in row] for row in c.generator.entries],
    }


def analyze_payload(rep: AnalyzeReport) -> dict:
    return {
        "n": rep.n,
        "k": rep.k,
        "d": rep.d,
        "r": rep.r,
        "slack": rep.slack,
        "optimal": rep.optimal,
        "ell": rep.ell,
        "h": rep.h,
        "a": rep.a,
        "b": rep.b,
        "disjoint_partition": rep.disjoint_partition,
        "assumptions": rep.assumptions,
    }


def bound_payload(reports: list[BoundReport]) -> dict:
    return {
        "bounds": [
            {
                "name": r.name,
                "kind": r.kind,
                "value": r.value,
                "coefficient": None if r.coefficient is None else frac_str(r.coefficient),
                "exponent": None if r.exponent is None else frac_str(r.exponent),
                "order": r.order,
                "conditions": r.conditions,
                "statement": r.statement,
                "display": r.render_value(),
            }
            for r in reports
        ]
    }


def normal_form_payload(nf: NormalForm) -> dict:
    return {
        "r": nf.r,
        "ell": nf.ell,
        "h": nf.h,
        "a": len(nf.a_set),
        "b": len(nf.b_set),
        "a_set": list(nf.a_set.coords),
        "b_set": list(nf.b_set.coords),
        "u_supports": [[int(j) + 1 for j in u.nonzero()[0]] for u in nf.u_vectors],
    }


def derivation_payload(rep: DerivationReport) -> dict:
    return {
        "rows_removed": list(rep.rows_removed),
        "columns_removed": list(rep.columns_removed.coords),
        "guarantees": rep.guarantees,
        "actual": rep.actual,
        "ok": rep.ok,
        "result": code_payload(rep.result),
    }


def pipeline_payload(rep: PipelineReport) -> dict:
    return {
        "a": rep.a,
        "b": rep.b,
        "ell1": rep.ell1,
        "h": rep.h,
        "leaders": list(rep.leaders),
        "k_columns": rep.k_matrix.entries.shape[1],
        "ck": None if rep.ck is None else code_payload(rep.ck),
        "ck_dim_min": rep.ck_dim_min,
        "ck_distance_claim": rep.ck_distance_claim,
        "ck_distance_actual": rep.ck_distance_actual,
        "ck_claim_holds": rep.ck_claim_holds,
        "f": frac_str(rep.f_n),
        "g": frac_str(rep.g_n),
        "c": frac_str(rep.c_n),
        "epsilon": frac_str(rep.epsilon),
        "t": rep.t,
        "identities": rep.identities,
    }


def propagation_payload(rep: PropagationReport) -> dict:
    return {
        "a_removed": rep.a_removed,
        "before": list(rep.before),
        "after": list(rep.after),
        "sacrificed": list(rep.sacrificed.coords),
        "optimal_preserved": rep.optimal_preserved,
        "result": code_payload(rep.result),
    }


def reduction_payload(rep: ReductionReport) -> dict:
    return {
        "b": rep.b,
        "steps": [propagation_payload(s) for s in rep.steps],
        "step_regime_held": rep.step_regime_held,
        "regime_violated": rep.regime_violated,
        "stopped_early": rep.stopped_early,
        "final": list(rep.final),
    }


def search_payload(out: SearchOutcome) -> dict:
    """Execution knobs (workers, caps) are intentionally absent: the outcome
    of a task must be byte-identical whatever resources ran it."""
    t = out.task
    return {
        "status": out.status,
        "task": {
            "q": t.q,
            "n": t.n,
            "k": t.k,
            "d": t.d_target,
            "r": t.r_target,
            "mode": t.mode,
            "random_count": t.random_count,
            "seed": t.seed,
            "require_disjoint": t.require_disjoint,
            "require_divisible": t.require_divisible,
        },
        "witnesses": [
            {
                "n": w.code.n,
                "k": w.code.k,
                "d": w.d,
                "r": w.r,
                "slack": w.slack,
                "partition": w.partition,
                "generator": [[int(v) for v in row] for row in w.code.generator.entries],
            }
            for w in out.witnesses
        ],
        "subspaces_visited": out.subspaces_visited,
        "certificate": out.certificate,
    }


# ---------------------------------------------------------------------------
# schema validation (a deliberately small JSON-Schema subset)

def load_schema(name: str) -> dict:
    text = files("lrc_lab").joinpath(f"schemas/{name}.json").read_text()
    return json.loads(text)


def validate(payload, schema, path: str = "$") -> list[str]:
    """Return a list of violations; empty means the payload conforms."""
    errors: list[str] = []
    types = schema.get("type")
    if types is not None:
        allowed = types if isinstance(types, list) else [types]
        if not any(_type_ok(payload, t) for t in allowed):
            errors.append(f"{path}: expected {allowed}, got {type(payload).__name__}")
            return errors
    if isinstance(payload, dict):
        for key in schema.get("required", []):
            if key not in payload:
                errors.append(f"{path}: missing required key {key!r}")
        for key, sub in schema.get("properties", {}).items():
            if key in payload:
                errors.extend(validate(payload[key], sub, f"{path}.{key}"))
    if isinstance(payload, list) and "items" in schema:
        for i, item in enumerate(payload):
            errors.extend(validate(item, schema["items"], f"{path}[{i}]"))
    return errors


def _type_ok(value, t: str) -> bool:
    if t == "object":
        return isinstance(value, dict)
    if t == "array":
        return isinstance(value, list)
    if t == "string":
        return isinstance(value, str)
    if t == "integer":
        return isinstance(value, int) and not isinstance(value, bool)
    if t == "number":
        return isinstance(value, (int, float)) and not isinstance(value, bool)
    if t == "boolean":
        return isinstance(value, bool)
    if t == "null":
        return value is None
    return False
