"""Machine-checkable certificates and the content-addressed cache."""

from __future__ import annotations

import hashlib
import json
import os
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

ENGINE_VERSION = "0.1.0"
ENUMERATION_SCHEME = 1
SCHEMA = 1

PASS = "PASS"
FAIL = "FAIL"
BUDGET_EXHAUSTED = "BUDGET-EXHAUSTED"


@dataclass
class Certificate:
    kind: str          # avoider | exhaustion | k6_rainbow_free | k6_universal | k2s4 | reduction
    verdict: str       # PASS | FAIL | BUDGET-EXHAUSTED
    params: dict
    payload: dict = field(default_factory=dict)
    nodes_visited: int = 0
    exhaustive: bool = True
    assumptions: tuple[str, ...] = ()
    seed: Optional[int] = None

    def to_json(self) -> dict:
        return {
            "schema": SCHEMA,
            "engine_version": ENGINE_VERSION,
            "enumeration_scheme": ENUMERATION_SCHEME,
            "kind": self.kind,
            "verdict": self.verdict,
            "params": self.params,
            "payload": self.payload,
            "nodes_visited": self.nodes_visited,
            "exhaustive": self.exhaustive,
            "assumptions": list(self.assumptions),
            "seed": self.seed,
        }

    @classmethod
    def from_json(cls, obj: dict) -> "Certificate":
        if obj.get("schema") != SCHEMA:
            raise ValueError(f"unsupported certificate schema {obj.get('schema')!r}")
        return cls(
            kind=obj["kind"],
            verdict=obj["verdict"],
            params=obj.get("params", {}),
            payload=obj.get("payload", {}),
            nodes_visited=obj.get("nodes_visited", 0),
            exhaustive=obj.get("exhaustive", True),
            assumptions=tuple(obj.get("assumptions", [])),
            seed=obj.get("seed"),
        )


def default_cache_dir() -> Path:
    return Path(os.environ.get("RT_CACHE_DIR", ".rturan-cache"))


def cache_key(operation: str, params: dict) -> str:
    payload = json.dumps({"operation": operation, "params": params,
                          "engine": ENGINE_VERSION},
                         sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(payload.encode()).hexdigest()


def save_certificate(cert: Certificate, cache_dir: Optional[Path] = None) -> Path:
    cache_dir = Path(cache_dir) if cache_dir else default_cache_dir()
    cache_dir.mkdir(parents=True, exist_ok=True)
    path = cache_dir / f"{cache_key(cert.kind, cert.params)}.json"
    path.write_text(json.dumps(cert.to_json(), sort_keys=True, indent=2) + "\n")
    return path


def load_certificate(path: Path | str) -> Certificate:
    return Certificate.from_json(json.loads(Path(path).read_text()))
