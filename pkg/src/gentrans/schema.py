"""JSON schema for command output records."""

SCHEMA_VERSION = 1

PROVENANCE = ["ComputedTypeA", "ConjugacyRelation", "ReferenceData"]

OUTPUT_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "gentrans output record",
    "type": "object",
    "required": ["command", "inputs", "result", "provenance", "version", "schema_version"],
    "additionalProperties": False,
    "properties": {
        "command": {"enum": ["tables", "query", "quiver", "tensor", "verify"]},
        "inputs": {"type": "object"},
        "result": {},
        "provenance": {"type": "array", "items": {"enum": PROVENANCE}, "uniqueItems": True},
        "version": {"type": "string"},
        "schema_version": {"const": SCHEMA_VERSION},
    },
}
