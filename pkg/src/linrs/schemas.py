"""JSON Schemas for the CLI outputs.  Big integers are always decimal strings."""

BIGINT = {"type": "string", "pattern": "^-?[0-9]+$"}

PARAMS = {
    "type": "object",
    "properties": {k: {"type": "integer"} for k in ("p", "m", "d", "k", "e")},
    "required": ["p", "m", "d", "k", "e"],
}

WEIGHT_TABLE = {
    "type": "object",
    "properties": {
        "params": PARAMS,
        "method": {"enum": ["formula", "brute_force", "moebius"]},
        "rows": {"type": "array", "items": {
            "type": "object",
            "properties": {"r": {"type": "integer"}, "weight": {"type": "integer"},
                           "count": BIGINT},
            "required": ["r", "weight", "count"]}},
        "zero_codeword": {"type": "object"},
        "nonzero_total": BIGINT,
        "total": BIGINT,
    },
    "required": ["params", "method", "rows", "total"],
}

WEIGHT_COMPARISON = {
    "type": "object",
    "properties": {
        "params": PARAMS,
        "methods": {"type": "object", "additionalProperties": WEIGHT_TABLE},
        "skipped": {"type": "object"},
        "verdict": {"enum": ["agree", "disagree"]},
    },
    "required": ["params", "methods", "verdict"],
}

EIGEN_ENTRY = {
    "type": "object",
    "properties": {
        "sign": {"enum": [-1, 0, 1]},
        "lambda_sq_exponent": {"type": ["integer", "null"]},
        "multiplicity": BIGINT,
    },
    "required": ["sign", "lambda_sq_exponent", "multiplicity"],
}

SPECTRUM_REPORT = {
    "type": "object",
    "properties": {
        "params": PARAMS,
        "methods": {
            "type": "object",
            "properties": {
                "formula": {"type": "array", "items": EIGEN_ENTRY},
                "counting": {"type": "array", "items": EIGEN_ENTRY},
                "dense_residual": {"type": ["object", "string", "null"]},
            },
            "required": ["formula"],
        },
        "verdicts": {"type": "object", "additionalProperties": {"type": "boolean"}},
        "mass_checks": {
            "type": "object",
            "properties": {"vertices": {"type": "boolean"}, "trace_sq": {"type": "boolean"}},
            "required": ["vertices", "trace_sq"],
        },
        "paper_zero_expr": BIGINT,
        "corrected_zero": BIGINT,
        "oracle_zero": {"anyOf": [BIGINT, {"type": "null"}]},
        "erratum_flagged": {"type": "boolean"},
        "consistent": {"type": "boolean"},
    },
    "required": ["params", "methods", "mass_checks", "paper_zero_expr", "corrected_zero",
                 "erratum_flagged"],
}

CONJECTURE_SWEEP = {
    "type": "object",
    "properties": {
        "q": {"type": "array", "items": {"type": "integer"}},
        "u_max": {"type": "integer"},
        "n_cases": {"type": "integer"},
        "all_hold": {"type": "boolean"},
        "first_counterexample": {"type": ["object", "null"]},
        "cases": {"type": "array", "items": {
            "type": "object",
            "properties": {"q": {"type": "integer"}, "u": {"type": "integer"},
                           "i": {"type": "integer"}, "holds": {"type": "boolean"},
                           "lhs": BIGINT, "rhs": BIGINT},
            "required": ["q", "u", "i", "holds", "lhs", "rhs"]}},
    },
    "required": ["q", "u_max", "all_hold", "cases"],
}
