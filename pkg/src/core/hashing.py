from __future__ import annotations
import hashlib

import orjson


def sha256_of_document(doc: object) -> str:
    """Digest of a JSON-able document with sorted keys, stable across runs."""
    return hashlib.sha256(orjson.dumps(doc, option=orjson.OPT_SORT_KEYS)).hexdigest()
