"""Fixture corpus: example algebras, complexes, manifests and generated families."""
from __future__ import annotations

import functools
import hashlib
import json
import re
import dataclasses
from dataclasses import dataclass
from pathlib import Path

from ..core.dsl import parse_algebra

FIXTURE_DIR = Path(__file__).parent
MANIFEST_DIR = FIXTURE_DIR / "manifests"


def fixture_path(name: str) -> Path:
    return FIXTURE_DIR / name


def file_hash(name: str) -> str:
    return hashlib.sha256(fixture_path(name).read_bytes()).hexdigest()


def with_field(text: str, field_spec: str | None) -> str:
    if not field_spec:
        return text
    line = f"field {field_spec}"
    if re.search(r"^\s*field\b.*$", text, flags=re.M):
        return re.sub(r"^\s*field\b.*$", line, text, count=1, flags=re.M)
    return line + "\n" + text


@functools.lru_cache(maxsize=None)
def algebra(name: str, field_spec: str | None = None):
    """Parsed algebra file, shared between callers so module caches are reused."""
    text = fixture_path(name).read_text(encoding="utf-8")
    return parse_algebra(with_field(text, field_spec), name=Path(name).stem)


@functools.lru_cache(maxsize=None)
def complex_fixture(name: str, field_spec: str | None = None):
    from ..complexes import ProjComplex
    data = json.loads(fixture_path(name).read_text(encoding="utf-8"))
    return ProjComplex.from_json(algebra(data["algebra"], field_spec), data)


# -- manifests --------------------------------------------------------------------------------
@dataclass
class Claim:
    id: str
    quote: str
    op: str
    args: dict
    expected: object


@dataclass
class FixtureManifest:
    id: str
    algebras: dict
    complexes: dict
    claims: list
    budget: dict = dataclasses.field(default_factory=dict)
    field: str = "Q"
    seed: int = 0
    hashes: dict = dataclasses.field(default_factory=dict)

    def check_hashes(self) -> list:
        """Names of inputs whose content hash differs from the manifest."""
        return [n for n, h in self.hashes.items() if file_hash(n) != h]


def manifest_ids() -> list:
    return sorted(p.stem for p in MANIFEST_DIR.glob("*.json"))


def load_manifest(fid: str) -> FixtureManifest:
    p = MANIFEST_DIR / f"{fid}.json"
    if not p.exists():
        raise FileNotFoundError(f"no fixture manifest {fid!r}; known: {', '.join(manifest_ids())}")
    data = json.loads(p.read_text(encoding="utf-8"))
    claims = [Claim(c["id"], c["quote"], c["op"], c.get("args", {}), c.get("expected")) for c in data["claims"]]
    return FixtureManifest(data["id"], data.get("algebras", {}), data.get("complexes", {}), claims,
                           data.get("budget", {}), data.get("field", "Q"), data.get("seed", 0),
                           data.get("hashes", {}))


# -- generated families ---------------------------------------------------------------------------
def beilinson_text(n: int, field_spec: str = "Q") -> str:
    """Vertices ``0..n``, arrows ``x_i: k -> k+1`` for ``i = 0..n``, commutativity relations."""
    lines = [f"field {field_spec}", "vertex " + " ".join(str(k) for k in range(n + 1))]
    for k in range(n):
        for i in range(n + 1):
            lines.append(f"arrow x{i}_{k} : {k} -> {k + 1}")
    for k in range(n - 1):
        for i in range(n + 1):
            for j in range(i + 1, n + 1):
                lines.append(f"rel x{i}_{k}.x{j}_{k + 1} - x{j}_{k}.x{i}_{k + 1}")
    return "\n".join(lines) + "\n"


@functools.lru_cache(maxsize=None)
def beilinson(n: int, field_spec: str = "Q"):
    if n < 1:
        raise ValueError("n must be >= 1")
    return parse_algebra(beilinson_text(n, field_spec), name=f"beilinson{n}")


# Small algebras over F_2: at most 3 vertices, 3 arrows, dimension 8.
MICRO_CORPUS = {
    "k": "vertex 1",
    "k_x_x2": "vertex 1\narrow x : 1 -> 1\nrel x.x",
    "k_x_x3": "vertex 1\narrow x : 1 -> 1\nrel x.x.x",
    "k_x_x4": "vertex 1\narrow x : 1 -> 1\nrel x.x.x.x",
    "k_times_k": "vertex 1 2",
    "A2": "vertex 1 2\narrow a : 1 -> 2",
    "A2_plus_k": "vertex 1 2 3\narrow a : 1 -> 2",
    "A3_linear": "vertex 1 2 3\narrow a : 1 -> 2\narrow b : 2 -> 3",
    "A3_linear_rad2": "vertex 1 2 3\narrow a : 1 -> 2\narrow b : 2 -> 3\nrel a.b",
    "A3_sink": "vertex 1 2 3\narrow a : 1 -> 2\narrow b : 3 -> 2",
    "A3_source": "vertex 1 2 3\narrow a : 2 -> 1\narrow b : 2 -> 3",
    "cycle2_rad2": "vertex 1 2\narrow a : 1 -> 2\narrow b : 2 -> 1\nrel a.b\nrel b.a",
    "cycle2_one_rel": "vertex 1 2\narrow a : 1 -> 2\narrow b : 2 -> 1\nrel a.b",
    "loop_tail": "vertex 1 2\narrow x : 1 -> 1\narrow a : 1 -> 2\nrel x.x\nrel x.a",
    "loop_tail_free": "vertex 1 2\narrow x : 1 -> 1\narrow a : 1 -> 2\nrel x.x",
    "two_loops_bridge": "vertex 1 2\narrow x : 1 -> 1\narrow a : 1 -> 2\narrow y : 2 -> 2\n"
                        "rel x.x\nrel y.y\nrel x.a\nrel a.y",
    "cycle3_rad2": "vertex 1 2 3\narrow a : 1 -> 2\narrow b : 2 -> 3\narrow c : 3 -> 1\n"
                   "rel a.b\nrel b.c\nrel c.a",
}


def micro_text(name: str) -> str:
    return "field F 2\n" + MICRO_CORPUS[name] + "\n"


@functools.lru_cache(maxsize=None)
def micro_algebra(name: str):
    return parse_algebra(micro_text(name), name=name)


def micro_corpus() -> list:
    return [(n, micro_algebra(n)) for n in MICRO_CORPUS]
