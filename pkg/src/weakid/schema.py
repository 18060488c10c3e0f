"""JSON Schemas for the reports printed by ``weakid --json``."""

STATS = {
    "type": "object",
    "required": ["nodes_expanded", "assignments_tested", "prunes_by_centralizer", "wall_time"],
    "properties": {
        "nodes_expanded": {"type": "integer", "minimum": 0},
        "assignments_tested": {"type": "integer", "minimum": 0},
        "prunes_by_centralizer": {"type": "integer", "minimum": 0},
        "prunes_by_lookahead": {"type": "integer", "minimum": 0},
        "prunes_by_symmetry": {"type": "integer", "minimum": 0},
        "wall_time": {"type": "number", "minimum": 0},
    },
}

VERDICT = {
    "type": "object",
    "required": ["status", "height", "witness", "stats"],
    "properties": {
        "status": {"enum": ["HOLDS", "FAILS", "UNKNOWN"]},
        "height": {"type": "integer", "minimum": 1},
        "witness": {
            "oneOf": [
                {"type": "null"},
                {
                    "type": "array",
                    "items": {
                        "type": "object",
                        "required": ["copy", "assignment"],
                        "properties": {
                            "copy": {"type": "integer", "minimum": 1},
                            "word": {"type": "string"},
                            "assignment": {
                                "type": "object",
                                "patternProperties": {"^g[1-9][0-9]*$": {"type": "string"}},
                                "additionalProperties": False,
                            },
                        },
                    },
                },
            ]
        },
        "stats": STATS,
        "modulo": {
            "type": "object",
            "required": ["verbal_order", "quotient_order"],
            "properties": {
                "verbal_order": {"type": "integer", "minimum": 1},
                "quotient_order": {"type": "integer", "minimum": 1},
            },
        },
    },
}

HEIGHT = {
    "type": "object",
    "required": ["height", "unknown", "verdicts"],
    "properties": {
        "height": {"type": ["integer", "null"]},
        "unknown": {"type": "boolean"},
        "verdicts": {"type": "array", "items": VERDICT},
    },
}

CHAIN = {
    "type": "object",
    "required": ["status", "steps", "chain"],
    "properties": {
        "status": {"enum": ["HOLDS", "FAILS", "UNKNOWN"]},
        "failed_step": {"type": ["integer", "null"]},
        "chain": {"type": "array", "items": {"type": "string"}},
        "steps": {"type": "array", "items": VERDICT},
    },
}

DISC = {
    "type": "object",
    "required": ["status", "certificate", "witness"],
    "properties": {
        "status": {"enum": ["DISCRIMINATING", "NOT_DISCRIMINATING", "UNKNOWN"]},
        "certificate": {"type": "array", "items": {"type": "string"}},
        "witness": {"type": ["object", "null"]},
        "homs_checked": {"type": "integer", "minimum": 0},
    },
}

CENTRALIZER_CHAIN = {
    "type": "object",
    "required": ["length", "complete", "chain"],
    "properties": {
        "length": {"type": "integer", "minimum": 1},
        "complete": {"type": "boolean"},
        "chain": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["added_element", "centralizer_order"],
                "properties": {
                    "added_element": {"type": ["string", "null"]},
                    "centralizer_order": {"type": "integer", "minimum": 1},
                },
            },
        },
    },
}

SCHEMAS = {
    "check": VERDICT,
    "check-mod": VERDICT,
    "height": HEIGHT,
    "chain": CHAIN,
    "disc": DISC,
    "centralizer-chain": CENTRALIZER_CHAIN,
}
