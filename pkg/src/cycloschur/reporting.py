"""Uniform check records for the verification suites."""

from __future__ import annotations


def check(name, params, ok, detail=None):
    item = {"check": name, "params": _jsonable(params), "ok": bool(ok)}
    if detail is not None:
        item["detail"] = detail
    return item


def _jsonable(value):
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return value


def all_ok(checks):
    return all(c["ok"] for c in checks)


def failures(checks):
    return [c for c in checks if not c["ok"]]
