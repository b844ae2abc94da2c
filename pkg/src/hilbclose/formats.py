"""File formats: JSON records for rings, ideals and corpora, and report emission.

Input records use plain JSON integers.  Emitted reports encode every integer
as a decimal string so downstream consumers never face 64-bit overflow;
report bytes are deterministic (sorted keys, no timestamps).
"""

from __future__ import annotations

import json

from .errors import HilbcloseError
from .hilbert import FiltrationKind
from .ideals import ParameterIdeal
from .lattice import AffineSemigroup


class FormatError(HilbcloseError):
    code = "FORMAT"


def ring_to_record(ring):
    return {"dim": ring.dim, "generators": [list(g) for g in ring.generators]}


def ring_from_record(record):
    if not isinstance(record, dict):
        raise FormatError("ring record must be an object")
    try:
        dim = int(record["dim"])
        gens = [tuple(int(c) for c in g) for g in record["generators"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError("ring record needs integer 'dim' and 'generators': %s" % exc)
    return AffineSemigroup(dim, gens)


def ideal_to_record(ideal):
    if isinstance(ideal, ParameterIdeal):
        return {"generators": [list(g) for g in ideal.ordered_generators],
                "ordered": True}
    return {"generators": [list(g) for g in ideal.min_generators], "ordered": False}


def ideal_from_record(record, ring):
    if not isinstance(record, dict):
        raise FormatError("ideal record must be an object")
    try:
        gens = [tuple(int(c) for c in g) for g in record["generators"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError("ideal record needs a 'generators' array: %s" % exc)
    ordered = bool(record.get("ordered", False))
    if not ordered:
        gens = sorted(gens)
    return gens, ordered


def corpus_to_record(instances):
    return {"instances": [
        {"id": inst.instance_id,
         "ring": ring_to_record(inst.ring),
         "ideal": ideal_to_record(inst.parameter)}
        for inst in instances]}


def corpus_from_record(record):
    """Parse a corpus file: {'instances': [...]} or a bare list."""
    from .theorems import Instance

    if isinstance(record, dict):
        rows = record.get("instances")
        if rows is None:
            raise FormatError("corpus object needs an 'instances' array")
    elif isinstance(record, list):
        rows = record
    else:
        raise FormatError("corpus must be an object or an array")
    out = []
    for i, row in enumerate(rows):
        if "ring" not in row or "ideal" not in row:
            raise FormatError("corpus entry %d needs 'ring' and 'ideal'" % i)
        ring = ring_from_record(row["ring"])
        gens, _ = ideal_from_record(row["ideal"], ring)
        out.append(Instance(
            instance_id=str(row.get("id", "corpus-%03d" % i)),
            ring=ring,
            parameter=ParameterIdeal(ring, gens)))
    return out


def stringify(value):
    """Replace every int (except bool) by its decimal-string form, recursively."""
    if isinstance(value, bool) or value is None or isinstance(value, str):
        return value
    if isinstance(value, int):
        return str(value)
    if isinstance(value, (list, tuple)):
        return [stringify(v) for v in value]
    if isinstance(value, dict):
        return {k: stringify(v) for k, v in value.items()}
    raise FormatError("cannot serialize %r" % (value,))


def dumps_report(obj):
    return json.dumps(stringify(obj), sort_keys=True, indent=2) + "\n"


_KIND_LABEL = {
    FiltrationKind.ORDINARY: "ordinary",
    FiltrationKind.INTEGRAL: "integral",
    FiltrationKind.LIM_INTERSECT: "lim_intersect",
    FiltrationKind.TIGHT_CANDIDATE: "tight_candidate",
}


def bundle_to_report(bundle, ring, ideal_record):
    filtrations = {}
    for kind, rep in bundle.reports.items():
        filtrations[_KIND_LABEL[kind]] = {
            "lengths": list(rep.lengths),
            "coefficients": None if rep.coefficients is None else list(rep.coefficients),
            "stabilization_index": rep.stabilization_index,
            "status": rep.status,
            "n_max": rep.n_max,
        }
    report = {
        "command": "analyze",
        "ring": ring_to_record(ring),
        "ideal": ideal_record,
        "n_max": bundle.n_max,
        "characteristic": bundle.characteristic,
        "e_max": bundle.e_max,
        "filtrations": filtrations,
        "e0": bundle.e0,
        "e1_ordinary": bundle.e1_ordinary,
        "e1_integral": bundle.e1_integral,
        "e1_lim": bundle.e1_lim,
        "e1_tight": bundle.e1_tight,
        "bcm_bracket": None if bundle.bcm_bracket is None else list(bundle.bcm_bracket),
        "tight_bracket": None if bundle.tight_bracket is None else list(bundle.tight_bracket),
        "e0_agreement": bundle.e0_agreement,
        "claim_bounds": [
            {"n": row.n, "length": row.length, "bound": row.bound, "ok": row.ok}
            for row in bundle.claim_rows],
    }
    return report


def bundle_to_csv(bundle):
    """Length table only; one column per filtration."""
    kinds = [k for k in (FiltrationKind.ORDINARY, FiltrationKind.INTEGRAL,
                         FiltrationKind.LIM_INTERSECT, FiltrationKind.TIGHT_CANDIDATE)
             if k in bundle.reports]
    header = ["n"] + [_KIND_LABEL[k] for k in kinds]
    depth = max(len(bundle.reports[k].lengths) for k in kinds)
    lines = [",".join(header)]
    for n in range(depth):
        row = [str(n)]
        for k in kinds:
            lengths = bundle.reports[k].lengths
            row.append(str(lengths[n]) if n < len(lengths) else "")
        lines.append(",".join(row))
    return "\n".join(lines) + "\n"


def bundle_to_table(bundle):
    """Human-readable summary; coefficient signs follow the alternating basis,
    so e1 is printed with its defining sign (not negated)."""
    lines = []
    lines.append("filtration        status           coefficients (e0, e1, ...)")
    for kind in (FiltrationKind.ORDINARY, FiltrationKind.INTEGRAL,
                 FiltrationKind.LIM_INTERSECT, FiltrationKind.TIGHT_CANDIDATE):
        rep = bundle.reports.get(kind)
        if rep is None:
            continue
        coeffs = "-" if rep.coefficients is None else str(tuple(rep.coefficients))
        lines.append("%-17s %-16s %s" % (_KIND_LABEL[kind], rep.status, coeffs))
    lines.append("")
    lines.append("lengths (n: ordinary / integral / lim_intersect%s)"
                 % (" / tight" if FiltrationKind.TIGHT_CANDIDATE in bundle.reports else ""))
    kinds = [k for k in (FiltrationKind.ORDINARY, FiltrationKind.INTEGRAL,
                         FiltrationKind.LIM_INTERSECT, FiltrationKind.TIGHT_CANDIDATE)
             if k in bundle.reports]
    depth = max(len(bundle.reports[k].lengths) for k in kinds)
    for n in range(depth):
        vals = []
        for k in kinds:
            lengths = bundle.reports[k].lengths
            vals.append(str(lengths[n]) if n < len(lengths) else "-")
        lines.append("  %2d: %s" % (n, " / ".join(vals)))
    if bundle.bcm_bracket is not None:
        lines.append("")
        lines.append("first-coefficient bracket (big-CM): [%d, %d]" % bundle.bcm_bracket)
    if bundle.tight_bracket is not None:
        lines.append("first-coefficient bracket (tight): [%d, %d]" % bundle.tight_bracket)
    return "\n".join(lines) + "\n"


def summary_to_report(summary, command, params):
    verdicts = []
    for res in summary.results:
        inst = res["instance"]
        chain = res["chain"]
        vanish = res["vanishing"]
        e1cm = res["e1_zero_cm"]
        verdicts.append({
            "instance_id": inst.instance_id,
            "ring": ring_to_record(inst.ring),
            "ideal": ideal_to_record(inst.parameter),
            "passed": chain.passed and not vanish.failed and
                      (not e1cm.applicable or e1cm.ok),
            "inclusions_ok": chain.inclusions_ok,
            "claim_bound_ok": all(chain.claim_bound_ok),
            "coefficient_chain_ok": chain.coefficient_chain_ok,
            "e1_ordinary": chain.details.get("e1_ordinary"),
            "e1_integral": chain.details.get("e1_integral"),
            "e1_lim": chain.details.get("e1_lim"),
            "vanishing": vanish.classification,
            "e1_zero_cm_ok": (not e1cm.applicable) or e1cm.ok,
            "lim_chain_nested": chain.details.get("lim_chain_nested"),
        })
    report = {
        "command": command,
        "summary": {
            "instances": summary.instances,
            "chain_passes": summary.chain_passes,
            "violations": len(summary.violations),
            "hypothesis_violating_witnesses": len(summary.witnesses),
            "conjecture_relevant_specimens": len(summary.specimens),
        },
        "verdicts": verdicts,
    }
    report.update(params)
    return report


def reproducer_record(result):
    inst = result["instance"]
    chain = result["chain"]
    return {
        "ring": ring_to_record(inst.ring),
        "ideal": ideal_to_record(inst.parameter),
        "violation": {
            "instance_id": inst.instance_id,
            "inclusions_ok": chain.inclusions_ok,
            "claim_bound_ok": all(chain.claim_bound_ok),
            "coefficient_chain_ok": chain.coefficient_chain_ok,
            "vanishing": result["vanishing"].classification,
            "failures": chain.details.get("failures", []),
        },
    }
